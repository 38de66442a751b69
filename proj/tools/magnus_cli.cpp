#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>

#include "magnus/cochain.hpp"
#include "magnus/ia_abel.hpp"
#include "magnus/json_io.hpp"
#include "magnus/lcs.hpp"
#include "magnus/random_gen.hpp"
#include "magnus/surface.hpp"
#include "magnus/verify.hpp"

namespace {

using magnus::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  Json j;
  in >> j;
  return j;
}

magnus::MagnusExpansion load_expansion(const std::string& source, int rank, int truncation) {
  if (source == "std") return magnus::MagnusExpansion::standard(rank, truncation);
  return magnus::expansion_from_json(load_json(source));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct OutputMode {
  bool text = false;
};

void add_output_flags(CLI::App* cmd, OutputMode& mode) {
  auto* text = cmd->add_flag("--text", mode.text, "Plain-text output");
  cmd->add_flag("--json", "JSON output (default)")->excludes(text);
}

std::string hom_to_text(const magnus::HomTensor& u) {
  std::string out;
  for (int i = 1; i <= u.rank(); ++i) {
    out += "X" + std::to_string(i) + " -> " + u.image_of(i).to_string() + "\n";
  }
  return out;
}

int infer_rank(const std::string& word_text, int flag_rank) {
  if (flag_rank > 0) return flag_rank;
  // Default: the largest generator index mentioned, at least 2.
  int best = 2;
  for (std::size_t i = 0; i + 1 < word_text.size(); ++i) {
    if (word_text[i] == 'x' || word_text[i] == 'X') {
      int value = 0;
      std::size_t k = i + 1;
      while (k < word_text.size() && std::isdigit(static_cast<unsigned char>(word_text[k]))) {
        value = value * 10 + (word_text[k] - '0');
        ++k;
      }
      best = std::max(best, value);
    }
  }
  return best;
}

struct VerifyArgs {
  std::string selector = "all";
  std::string identity;
  magnus::SuiteOptions options;
};

int run_verify(const VerifyArgs& args) {
  std::string selector = args.selector;
  if (!args.identity.empty()) selector = args.identity;
  std::vector<std::string> names = magnus::expand_suite_selector(selector);
  bool all_passed = true;
  for (const std::string& name : names) {
    magnus::SuiteResult result = magnus::run_suite(name, args.options);
    if (result.passed) {
      std::cout << "PASS " << result.name << " (" << result.checks << " checks)\n";
    } else {
      all_passed = false;
      std::cout << "FAIL " << result.name << " (" << result.checks << " checks)\n";
      Json detail{{"suite", result.name},
                  {"identity", result.counterexample->identity},
                  {"inputs", result.counterexample->inputs},
                  {"lhs", result.counterexample->lhs},
                  {"rhs", result.counterexample->rhs}};
      std::cout << detail.dump(2) << "\n";
    }
  }
  return all_passed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for tensor-series expansions of free groups and the "
               "coordinate maps they induce on automorphism groups"};
  app.require_subcommand(1);

  // --- expand ---
  auto* expand = app.add_subcommand("expand", "Evaluate an expansion on a word");
  std::string expand_theta = "std";
  std::string expand_word;
  int expand_rank = 0;
  int expand_trunc = 5;
  expand->add_option("--theta", expand_theta, "Expansion file or \"std\"");
  expand->add_option("--word", expand_word, "Word such as \"x1*x2^-1\"")->required();
  expand->add_option("--rank,-n", expand_rank, "Rank (default: inferred from the word)");
  expand->add_option("--N", expand_trunc, "Truncation degree (ignored when --theta is a file)");
  OutputMode expand_mode;
  add_output_flags(expand, expand_mode);

  // --- johnson ---
  auto* johnson = app.add_subcommand("johnson", "Johnson coordinate of an automorphism");
  std::string johnson_theta = "std";
  std::string johnson_aut;
  int johnson_p_degree = 1;
  int johnson_trunc = 5;
  johnson->add_option("--theta", johnson_theta, "Expansion file or \"std\"");
  johnson->add_option("--aut", johnson_aut, "Automorphism JSON file")->required();
  johnson->add_option("--p", johnson_p_degree, "Coordinate degree");
  johnson->add_option("--N", johnson_trunc, "Truncation degree (ignored when --theta is a file)");
  OutputMode johnson_mode;
  add_output_flags(johnson, johnson_mode);

  // --- johnson-hom ---
  auto* jhom = app.add_subcommand("johnson-hom", "Word-level Johnson value on a filtration step");
  std::string jhom_aut;
  std::string jhom_theta = "std";
  int jhom_m = 1;
  int jhom_trunc = 5;
  jhom->add_option("--aut", jhom_aut, "Automorphism JSON file")->required();
  jhom->add_option("--m", jhom_m, "Filtration step");
  jhom->add_option("--theta", jhom_theta, "Expansion file or \"std\"");
  jhom->add_option("--N", jhom_trunc, "Truncation degree (ignored when --theta is a file)");
  OutputMode jhom_mode;
  add_output_flags(jhom, jhom_mode);

  // --- lcs ---
  auto* lcs = app.add_subcommand("lcs", "Lower-central depth of a word");
  std::string lcs_word;
  int lcs_rank = 0;
  int lcs_trunc = 5;
  lcs->add_option("--word", lcs_word, "Word")->required();
  lcs->add_option("--rank,-n", lcs_rank, "Rank (default: inferred)");
  lcs->add_option("--N", lcs_trunc, "Truncation degree");
  OutputMode lcs_mode;
  add_output_flags(lcs, lcs_mode);

  // --- ia-abel ---
  auto* ia = app.add_subcommand("ia-abel", "Abelianized coordinates of words in the K-generators");
  int ia_n = 3;
  std::string ia_word;
  bool ia_matrix = false;
  ia->add_option("--n", ia_n, "Rank");
  ia->add_option("--word", ia_word, "Word such as \"K[1,2]*K[1,2,3]^-1\"");
  ia->add_flag("--matrix", ia_matrix, "Emit the generator matrix and its determinant");
  OutputMode ia_mode;
  add_output_flags(ia, ia_mode);

  // --- surface ---
  auto* surface = app.add_subcommand("surface", "Genus-g symplectic checks");
  int surface_g = 2;
  std::string surface_check = "all";
  int surface_trunc = 4;
  int surface_trials = 20;
  std::uint64_t surface_seed = 1;
  surface->add_option("--g", surface_g, "Genus");
  surface->add_option("--check", surface_check, "all|theta2|nu0|tau2");
  surface->add_option("--N", surface_trunc, "Truncation degree");
  surface->add_option("--trials", surface_trials, "Random expansions per check");
  surface->add_option("--seed", surface_seed, "Random seed");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Run named identity suites");
  VerifyArgs verify_args;
  verify->add_option("suite", verify_args.selector,
                     "Suite name (thm13|eq24|eq26|lemma22|lemma23|eq31|thm31|thm61|eq49|"
                     "stasheff|surface|dsquare|johnson|cochain|all)");
  verify->add_option("--identity", verify_args.identity, "eq49|tau2|dsquare (cochain suites)");
  verify->add_option("--rank,-n", verify_args.options.rank, "Rank");
  verify->add_option("--g", verify_args.options.genus, "Genus (surface suite)");
  verify->add_option("--N", verify_args.options.truncation, "Truncation degree");
  verify->add_option("--trials", verify_args.options.trials, "Trial count");
  verify->add_option("--seed", verify_args.options.seed, "Random seed");

  // --- stasheff ---
  auto* stasheff = app.add_subcommand("stasheff", "Parenthesization combinatorics");
  int stasheff_p = 3;
  bool stasheff_count = false;
  bool stasheff_signs = false;
  stasheff->add_option("--p", stasheff_p, "Number of internal nodes");
  stasheff->add_flag("--count", stasheff_count, "Print only the count");
  stasheff->add_flag("--signs", stasheff_signs, "Include signs in the listing");
  OutputMode stasheff_mode;
  add_output_flags(stasheff, stasheff_mode);

  // --- aut ---
  auto* aut = app.add_subcommand("aut", "List a built-in generator library");
  std::string aut_list = "magnus-K";
  int aut_n = 3;
  aut->add_option("--list", aut_list, "magnus-K|nielsen|inner");
  aut->add_option("--n", aut_n, "Rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) {
      int rank = infer_rank(expand_word, expand_rank);
      magnus::MagnusExpansion theta = load_expansion(expand_theta, rank, expand_trunc);
      magnus::Word gamma = magnus::parse_word(expand_word, theta.rank());
      magnus::TruncatedSeries value = theta.evaluate(gamma);
      if (expand_mode.text) {
        std::cout << value.to_string() << "\n";
      } else {
        emit(magnus::series_to_json(value));
      }
      return kExitOk;
    }
    if (*johnson) {
      magnus::FreeGroupEndo phi = magnus::endo_from_json(load_json(johnson_aut));
      magnus::MagnusExpansion theta =
          load_expansion(johnson_theta, phi.rank(), johnson_trunc);
      magnus::HomTensor value = magnus::johnson_p(theta, phi, johnson_p_degree);
      if (johnson_mode.text) {
        std::cout << hom_to_text(value);
      } else {
        emit(magnus::hom_to_json(value));
      }
      return kExitOk;
    }
    if (*jhom) {
      magnus::FreeGroupEndo phi = magnus::endo_from_json(load_json(jhom_aut));
      magnus::MagnusExpansion theta = load_expansion(jhom_theta, phi.rank(), jhom_trunc);
      magnus::HomTensor value = magnus::johnson_hom(theta, phi, jhom_m);
      if (jhom_mode.text) {
        std::cout << hom_to_text(value);
      } else {
        emit(magnus::hom_to_json(value));
      }
      return kExitOk;
    }
    if (*lcs) {
      int rank = infer_rank(lcs_word, lcs_rank);
      magnus::MagnusExpansion theta = magnus::MagnusExpansion::standard(rank, lcs_trunc);
      magnus::Word gamma = magnus::parse_word(lcs_word, rank);
      magnus::LcsDepth depth = magnus::lcs_degree(theta, gamma);
      Json out{{"word", gamma.is_identity() ? "" : gamma.render()},
               {"rank", rank},
               {"N", lcs_trunc},
               {"depth", depth.to_string(lcs_trunc)}};
      if (depth.kind == magnus::LcsDepth::Kind::Exact) {
        out["graded_image"] =
            magnus::tensor_to_json(magnus::graded_image(theta, gamma, depth.value).tensor());
      }
      if (lcs_mode.text) {
        std::cout << "depth = " << depth.to_string(lcs_trunc) << "\n";
        if (depth.kind == magnus::LcsDepth::Kind::Exact) {
          std::cout << "graded image = "
                    << magnus::graded_image(theta, gamma, depth.value).tensor().to_string()
                    << "\n";
        }
      } else {
        emit(out);
      }
      return kExitOk;
    }
    if (*ia) {
      if (ia_matrix) {
        magnus::GLMatrix m = magnus::tau1_matrix(ia_n);
        magnus::Lambda2Basis basis(ia_n);
        std::vector<magnus::FreeGroupEndo> gens =
            magnus::generator_library(magnus::GeneratorKind::MagnusK, ia_n);
        Json rows = Json::array();
        for (int r = 0; r < m.size(); ++r) {
          Json row = Json::array();
          for (int c = 0; c < m.size(); ++c) row.push_back(magnus::to_string(m.at(r, c)));
          rows.push_back(row);
        }
        Json labels = Json::array();
        for (const auto& g : gens) labels.push_back(g.label());
        Json columns = Json::array();
        for (int c = 0; c < basis.dim(); ++c) columns.push_back(basis.describe(c));
        if (ia_mode.text) {
          for (int r = 0; r < m.size(); ++r) {
            std::cout << gens[static_cast<std::size_t>(r)].label() << ":";
            for (int c2 = 0; c2 < m.size(); ++c2) {
              std::cout << " " << magnus::to_string(m.at(r, c2));
            }
            std::cout << "\n";
          }
          std::cout << "determinant = " << magnus::to_string(m.det()) << "\n";
        } else {
          emit(Json{{"n", ia_n},
                    {"rows", labels},
                    {"columns", columns},
                    {"matrix", rows},
                    {"determinant", magnus::to_string(m.det())},
                    {"signed_permutation", m.is_signed_permutation()}});
        }
        return kExitOk;
      }
      if (ia_word.empty()) {
        throw std::invalid_argument("ia-abel needs --word or --matrix");
      }
      magnus::AbelCoordinates coords = magnus::abelianize_ia_word(ia_word, ia_n);
      magnus::Lambda2Basis basis(ia_n);
      Json values = Json::array();
      for (const auto& c : coords) values.push_back(c.get_str());
      Json slots = Json::array();
      for (int c = 0; c < basis.dim(); ++c) slots.push_back(basis.describe(c));
      if (ia_mode.text) {
        for (int c = 0; c < basis.dim(); ++c) {
          std::cout << basis.describe(c) << " = " << coords[static_cast<std::size_t>(c)].get_str()
                    << "\n";
        }
      } else {
        emit(Json{{"n", ia_n}, {"word", ia_word}, {"basis", slots}, {"coordinates", values}});
      }
      return kExitOk;
    }
    if (*surface) {
      magnus::SurfaceContext ctx(surface_g);
      magnus::Rng rng(surface_seed);
      Json report{{"g", surface_g}, {"N", surface_trunc}};
      bool ok = true;
      magnus::CheckReport why;
      if (surface_check == "all" || surface_check == "theta2") {
        bool pass = magnus::theta2_w0_check(
            magnus::MagnusExpansion::standard(ctx.rank(), surface_trunc), &why);
        for (int t = 0; pass && t < surface_trials; ++t) {
          pass = magnus::theta2_w0_check(
              magnus::random_expansion(rng, ctx.rank(), surface_trunc), &why);
        }
        report["theta2_w0"] = pass;
        ok = ok && pass;
      }
      if (surface_check == "all" || surface_check == "nu0") {
        magnus::Integer base = magnus::nu0(ctx, ctx.boundary_word());
        bool pass = base == -1;
        for (int t = 0; pass && t < surface_trials; ++t) {
          magnus::Word conj = magnus::random_word(rng, ctx.rank(), 4);
          pass = magnus::nu0(ctx, conj * ctx.boundary_word() * conj.inverse()) == base;
        }
        report["nu0_boundary"] = base.get_str();
        report["nu0"] = pass;
        ok = ok && pass;
      }
      if (surface_check == "all" || surface_check == "tau2") {
        bool pass = magnus::tau2_boundary_check(
            magnus::MagnusExpansion::standard(ctx.rank(), std::max(3, surface_trunc)),
            surface_g, &why);
        report["tau2_boundary"] = pass;
        ok = ok && pass;
      }
      report["passed"] = ok;
      if (!ok) {
        report["counterexample"] = Json{{"identity", why.identity},
                                        {"inputs", why.inputs},
                                        {"lhs", why.lhs},
                                        {"rhs", why.rhs}};
      }
      emit(report);
      return ok ? kExitOk : kExitViolation;
    }
    if (*verify) {
      return run_verify(verify_args);
    }
    if (*stasheff) {
      std::vector<magnus::ParenWord> vertices = magnus::stasheff_vertices(stasheff_p);
      if (stasheff_count) {
        std::cout << vertices.size() << "\n";
        return kExitOk;
      }
      if (stasheff_mode.text) {
        for (const magnus::ParenWord& w : vertices) {
          std::cout << w.to_string();
          if (stasheff_signs) std::cout << " " << (magnus::paren_sign(w) > 0 ? "+1" : "-1");
          std::cout << "\n";
        }
        return kExitOk;
      }
      Json out = Json::array();
      for (const magnus::ParenWord& w : vertices) {
        if (stasheff_signs) {
          out.push_back(Json{{"word", w.to_string()}, {"sign", magnus::paren_sign(w)}});
        } else {
          out.push_back(w.to_string());
        }
      }
      emit(Json{{"p", stasheff_p}, {"count", vertices.size()}, {"vertices", out}});
      return kExitOk;
    }
    if (*aut) {
      magnus::GeneratorKind kind = magnus::generator_kind_from_string(aut_list);
      Json out = Json::array();
      for (const magnus::FreeGroupEndo& phi : magnus::generator_library(kind, aut_n)) {
        out.push_back(magnus::endo_to_json(phi));
      }
      emit(Json{{"kind", aut_list}, {"n", aut_n}, {"generators", out}});
      return kExitOk;
    }
  } catch (const magnus::WordParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
