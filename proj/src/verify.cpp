#include "magnus/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "magnus/cochain.hpp"
#include "magnus/ia_abel.hpp"
#include "magnus/lcs.hpp"
#include "magnus/random_gen.hpp"
#include "magnus/surface.hpp"

namespace magnus {

namespace {

struct SuiteRun {
  SuiteResult result;

  explicit SuiteRun(std::string name) { result.name = std::move(name); }

  bool failed() const { return !result.passed; }

  void check(bool ok, const CheckReport& report) {
    ++result.checks;
    if (!ok && result.passed) {
      result.passed = false;
      result.counterexample = report;
    }
  }

  /// For checks whose report is produced by the callee.
  void check_reported(bool ok, const CheckReport& report) { check(ok, report); }

  void expect(bool ok, const std::string& identity, const std::string& inputs,
              const std::string& lhs, const std::string& rhs) {
    check(ok, CheckReport{identity, inputs, lhs, rhs});
  }
};

std::vector<FreeGroupEndo> mixed_library(int rank) {
  std::vector<FreeGroupEndo> lib = generator_library(GeneratorKind::Nielsen, rank);
  std::vector<FreeGroupEndo> ks = generator_library(GeneratorKind::MagnusK, rank);
  lib.insert(lib.end(), ks.begin(), ks.end());
  return lib;
}

MagnusExpansion pick_expansion(Rng& rng, int rank, int truncation, int trial) {
  if (trial % 2 == 0) return MagnusExpansion::standard(rank, truncation);
  return random_expansion(rng, rank, truncation);
}

Word curated_commutator(int rank, int depth, int variant) {
  // Left-normed brackets on x1, x2 whose graded images are nonzero:
  // [x1,x2], then repeated bracketing with x1 or x2 only (ad-powers and
  // the mixed [[x1,x2],x1] stay nonzero in the free Lie algebra).
  Word c = commutator(Word::generator(rank, 1), Word::generator(rank, 2));
  for (int d = 3; d <= depth; ++d) {
    int letter = (variant >> (d - 3)) % 2 == 0 ? 2 : 1;
    c = commutator(c, Word::generator(rank, letter));
  }
  return c;
}

SuiteResult run_thm13(const SuiteOptions& opt) {
  SuiteRun run("thm13");
  Rng rng(opt.seed);
  const int words_per_pair = 50;
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    int rank = 2 + trial % 3;
    MagnusExpansion from = random_expansion(rng, rank, opt.truncation);
    MagnusExpansion to = random_expansion(rng, rank, opt.truncation);
    AlgebraMap u = transition(from, to);
    run.expect(u.is_ia(), "transition lies in the IA subgroup",
               "trial=" + std::to_string(trial), "linear part", "identity");
    for (int w = 0; w < words_per_pair && !run.failed(); ++w) {
      Word gamma = random_word(rng, rank, 8);
      TruncatedSeries lhs = u.apply(from.evaluate(gamma));
      TruncatedSeries rhs = to.evaluate(gamma);
      run.expect(lhs == rhs, "transition carries one expansion to the other",
                 "trial=" + std::to_string(trial) + " gamma=" +
                     (gamma.is_identity() ? "1" : gamma.render()),
                 lhs.to_string(), rhs.to_string());
    }
    // Round trip: the two transitions compose to the identity map.
    AlgebraMap round = compose(transition(to, from), u);
    run.expect(round == AlgebraMap::identity(rank, opt.truncation),
               "transition round trip is the identity", "trial=" + std::to_string(trial),
               "composite", "identity");
  }
  return run.result;
}

SuiteResult run_eq24(const SuiteOptions& opt) {
  SuiteRun run("eq24");
  Rng rng(opt.seed);
  std::vector<FreeGroupEndo> lib = mixed_library(opt.rank);
  JohnsonCalculator std_calc(MagnusExpansion::standard(opt.rank, opt.truncation));
  std::optional<JohnsonCalculator> random_calc;
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    const JohnsonCalculator* calc = &std_calc;
    if (trial % 2 == 1) {
      if (!random_calc || trial % 20 == 1) {
        random_calc.emplace(random_expansion(rng, opt.rank, opt.truncation));
      }
      calc = &*random_calc;
    }
    FreeGroupEndo phi = random_library_product(rng, lib, rng.uniform(1, 3));
    FreeGroupEndo psi = random_library_product(rng, lib, rng.uniform(1, 3));
    CheckReport report;
    run.check_reported(check_cocycle_total(*calc, phi, psi, &report), report);
    if (run.failed()) break;
    run.check_reported(check_cocycle_tau1(*calc, phi, psi, &report), report);
    if (run.failed()) break;
    run.check_reported(check_tau2_relation(*calc, phi, psi, &report), report);
    if (run.failed()) break;
    Word gamma = random_word(rng, opt.rank, 6);
    run.check_reported(check_defining_property(*calc, phi, gamma, &report), report);
  }
  return run.result;
}

SuiteResult run_eq26(const SuiteOptions& opt) {
  SuiteRun run("eq26");
  Rng rng(opt.seed);
  std::vector<FreeGroupEndo> lib = mixed_library(opt.rank);
  auto calc = std::make_shared<const JohnsonCalculator>(
      MagnusExpansion::standard(opt.rank, opt.truncation));
  auto random_calc = std::make_shared<const JohnsonCalculator>(
      random_expansion(rng, opt.rank, opt.truncation));
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    auto use = trial % 2 == 0 ? calc : random_calc;
    Cochain tau1 = tau1_cochain(use);
    Cochain tau2 = tau2_cochain(use);
    const int rank = opt.rank;
    CoeffModule slot_module{rank, 2, 3};
    Cochain slots(1, slot_module, [use, rank](const std::vector<GroupElement>& args) {
      HomTensor t = use->component(args[0].endo(), 1);
      HomTensor one = HomTensor::identity(rank, 1);
      return hom_tensor_product(t, one) + hom_tensor_product(one, t);
    });
    Cochain lhs = coboundary(tau2);
    Cochain rhs = cup_compose(slots, tau1);
    GroupElement phi = GroupElement::aut(random_library_product(rng, lib, rng.uniform(1, 3)));
    GroupElement psi = GroupElement::aut(random_library_product(rng, lib, rng.uniform(1, 3)));
    std::vector<GroupElement> args{phi, psi};
    HomTensor left = -lhs(args);
    HomTensor right = rhs(args);
    run.expect(left == right, "second coordinate coboundary matches the cup combination",
               phi.describe() + ", " + psi.describe(), left.to_string(), right.to_string());
    if (run.failed()) break;
    // First coordinate is a cocycle.
    HomTensor dtau1 = coboundary(tau1)(args);
    run.expect(dtau1.is_zero(), "first coordinate is a cocycle",
               phi.describe() + ", " + psi.describe(), dtau1.to_string(), "0");
  }
  return run.result;
}

SuiteResult run_lemma22(const SuiteOptions& opt) {
  SuiteRun run("lemma22");
  Rng rng(opt.seed);
  std::vector<FreeGroupEndo> lib = mixed_library(opt.rank);
  JohnsonCalculator std_calc(MagnusExpansion::standard(opt.rank, opt.truncation));
  std::optional<JohnsonCalculator> random_calc;
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    const JohnsonCalculator* calc = &std_calc;
    if (trial % 2 == 1) {
      if (!random_calc) random_calc.emplace(random_expansion(rng, opt.rank, opt.truncation));
      calc = &*random_calc;
    }
    FreeGroupEndo phi = random_library_product(rng, lib, rng.uniform(1, 3));
    Word gamma = random_word(rng, opt.rank, 6);
    CheckReport report;
    run.check_reported(check_lemma22(*calc, phi, gamma, &report), report);
  }
  return run.result;
}

SuiteResult run_lemma23(const SuiteOptions& opt) {
  SuiteRun run("lemma23");
  Rng rng(opt.seed);
  const int max_p = std::min(4, opt.truncation - 1);
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    int rank = 2 + trial % 2;
    MagnusExpansion theta = pick_expansion(rng, rank, opt.truncation, trial);
    JohnsonCalculator calc(theta);
    Word gamma = random_word(rng, rank, 6);
    FreeGroupEndo conj = inner_automorphism(gamma);
    for (int p = 1; p <= max_p && !run.failed(); ++p) {
      HomTensor closed = inner_johnson(theta, gamma, p);
      HomTensor via_total = calc.component(conj, p);
      run.expect(closed == via_total, "closed form matches the conjugation Johnson value",
                 "gamma=" + (gamma.is_identity() ? std::string("1") : gamma.render()) +
                     " p=" + std::to_string(p),
                 closed.to_string(), via_total.to_string());
    }
  }
  return run.result;
}

SuiteResult run_eq31(const SuiteOptions& opt) {
  SuiteRun run("eq31");
  Rng rng(opt.seed);
  const int rank = std::max(2, opt.rank);
  MagnusExpansion std_theta = MagnusExpansion::standard(rank, opt.truncation);

  // Depth of curated nested commutators equals the nesting depth.
  for (int depth = 1; depth <= std::min(4, opt.truncation); ++depth) {
    for (int variant = 0; variant < (depth <= 2 ? 1 : 2); ++variant) {
      Word c = depth == 1 ? Word::generator(rank, 1) : curated_commutator(rank, depth, variant);
      LcsDepth got = lcs_degree(std_theta, c);
      run.expect(got == LcsDepth{LcsDepth::Kind::Exact, depth},
                 "commutator depth equals nesting depth",
                 "word=" + c.render(), got.to_string(opt.truncation), std::to_string(depth));
      if (run.failed()) return run.result;
      LieTensor lie = graded_image(std_theta, c, depth);
      run.expect(!lie.tensor().is_zero() || depth == 0, "graded image is nonzero and Lie",
                 "word=" + c.render(), lie.tensor().to_string(), "nonzero");
    }
  }

  // The bracket identity for the graded images, on random samples.
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    int m = rng.uniform(2, std::min(4, opt.truncation));
    MagnusExpansion theta = pick_expansion(rng, rank, opt.truncation, trial);
    Word base = m == 2 ? random_nonidentity_word(rng, rank, 4)
                       : curated_commutator(rank, m - 1, rng.uniform(0, 3));
    Word conj = random_word(rng, rank, 3);
    Word gamma = conj * base * conj.inverse();
    Word delta = random_nonidentity_word(rng, rank, 4);
    Tensor lhs = theta.component(commutator(gamma, delta), m);
    Tensor prev = theta.component(gamma, m - 1);
    Tensor abel(rank, 1);
    std::vector<long long> sums = delta.exponent_sums();
    for (int jj = 1; jj <= rank; ++jj) {
      abel.add_term(IndexWord(1, static_cast<unsigned char>(jj)),
                    Rational(static_cast<long>(sums[static_cast<std::size_t>(jj) - 1])));
    }
    Tensor rhs = tensor_product(prev, abel) - tensor_product(abel, prev);
    run.expect(lhs == rhs, "bracket identity for graded components",
               "gamma=" + gamma.render() + " delta=" + delta.render() + " m=" +
                   std::to_string(m),
               lhs.to_string(), rhs.to_string());
    if (run.failed()) break;
    if (!lhs.is_zero()) {
      run.expect(is_lie_element(lhs), "graded component passes the Lie test",
                 "m=" + std::to_string(m), lhs.to_string(), "Lie element");
    }
  }

  // Vanishing first coordinate pushes one filtration step deeper.
  std::vector<FreeGroupEndo> ks = generator_library(GeneratorKind::MagnusK, rank);
  for (int trial = 0; trial < std::min(opt.trials, 20) && !run.failed(); ++trial) {
    const FreeGroupEndo& a = ks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ks.size()) - 1))];
    const FreeGroupEndo& b = ks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ks.size()) - 1))];
    FreeGroupEndo phi = compose(compose(a, b), compose(a.inverse(), b.inverse()));
    HomTensor tau1 = johnson_hom(std_theta, phi, 1);
    if (tau1.is_zero()) {
      run.expect(in_filtration_A(std_theta, phi, 2),
                 "vanishing first value implies the next filtration step",
                 "phi=[" + a.label() + "," + b.label() + "]", "tau1=0", "phi in A(2)");
    } else {
      ++run.result.checks;  // commutator with a nonzero value; nothing to assert
    }
  }
  return run.result;
}

SuiteResult run_thm31(const SuiteOptions& opt) {
  SuiteRun run("thm31");
  Rng rng(opt.seed);
  const int rank = std::max(2, opt.rank);
  if (opt.truncation < 3) throw std::invalid_argument("suite needs truncation at least 3");
  std::vector<FreeGroupEndo> ks = generator_library(GeneratorKind::MagnusK, rank);
  const int expansions = 5;
  std::vector<JohnsonCalculator> calcs;
  calcs.emplace_back(MagnusExpansion::standard(rank, opt.truncation));
  for (int e = 0; e < expansions; ++e) {
    calcs.emplace_back(random_expansion(rng, rank, opt.truncation));
  }
  for (int trial = 0; trial < opt.trials && !run.failed(); ++trial) {
    const FreeGroupEndo& a = ks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ks.size()) - 1))];
    const FreeGroupEndo& b = ks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ks.size()) - 1))];
    FreeGroupEndo phi = compose(compose(a, b), compose(a.inverse(), b.inverse()));
    const std::string inputs = "phi=[" + a.label() + "," + b.label() + "]";
    if (!in_filtration_A(calcs[0].expansion(), phi, 2)) {
      ++run.result.checks;
      continue;
    }
    HomTensor reference = johnson_hom(calcs[0].expansion(), phi, 2);
    for (std::size_t e = 0; e < calcs.size() && !run.failed(); ++e) {
      HomTensor word_route = johnson_hom(calcs[e].expansion(), phi, 2);
      run.expect(word_route == reference, "word route is independent of the expansion",
                 inputs + " expansion=" + std::to_string(e), word_route.to_string(),
                 reference.to_string());
      if (run.failed()) break;
      HomTensor map_route = calcs[e].component(phi, 2);
      run.expect(map_route == reference, "map route matches the word route",
                 inputs + " expansion=" + std::to_string(e), map_route.to_string(),
                 reference.to_string());
    }
  }
  return run.result;
}

SuiteResult run_thm61(const SuiteOptions& opt) {
  SuiteRun run("thm61");
  Rng rng(opt.seed);
  for (int n = 3; n <= 5; ++n) {
    GLMatrix m = tau1_matrix(n);
    run.expect(m.size() == n * n * (n - 1) / 2, "matrix dimension",
               "n=" + std::to_string(n), std::to_string(m.size()),
               std::to_string(n * n * (n - 1) / 2));
    run.expect(m.is_signed_permutation(), "matrix is a signed permutation",
               "n=" + std::to_string(n), "matrix", "signed permutation");
    Rational d = m.det();
    run.expect(d == 1 || d == -1, "determinant is a unit", "n=" + std::to_string(n),
               to_string(d), "+1 or -1");
    if (run.failed()) return run.result;

    // Symbolic closed form per generator.
    Lambda2Basis basis(n);
    std::vector<FreeGroupEndo> gens = generator_library(GeneratorKind::MagnusK, n);
    JohnsonCalculator calc(MagnusExpansion::standard(n, 2));
    for (std::size_t g = 0; g < gens.size() && !run.failed(); ++g) {
      HomTensor value = calc.component(gens[g], 1);
      // Read indices back from the label K[i,l] / K[i,l,s].
      std::vector<int> idx;
      const std::string& label = gens[g].label();
      for (std::size_t pos = 0; pos < label.size(); ++pos) {
        if (std::isdigit(static_cast<unsigned char>(label[pos]))) {
          int v = 0;
          while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
            v = v * 10 + (label[pos] - '0');
            ++pos;
          }
          idx.push_back(v);
        }
      }
      HomTensor expected(n, 1, 2);
      IndexWord in(1, static_cast<unsigned char>(idx[0]));
      int first = idx[1];
      int second = idx.size() == 2 ? idx[0] : idx[2];
      IndexWord fw;
      fw.push_back(static_cast<unsigned char>(first));
      fw.push_back(static_cast<unsigned char>(second));
      IndexWord bw;
      bw.push_back(static_cast<unsigned char>(second));
      bw.push_back(static_cast<unsigned char>(first));
      expected.add_term(in, fw, Rational(1));
      expected.add_term(in, bw, Rational(-1));
      run.expect(value == expected, "generator value matches the closed form",
                 gens[g].label(), value.to_string(), expected.to_string());
    }
    if (run.failed()) return run.result;
  }

  // Conjugation values, their contraction, and the coordinate matrix rank.
  for (int n = 2; n <= 5 && !run.failed(); ++n) {
    JohnsonCalculator calc(MagnusExpansion::standard(n, 2));
    for (int i = 1; i <= n && !run.failed(); ++i) {
      Word xi = Word::generator(n, i);
      HomTensor tau = calc.component(inner_automorphism(xi), 1);
      HomTensor expected = iota_star(Tensor::basis(n, i));
      run.expect(tau == expected, "conjugation value matches the bracket map",
                 "n=" + std::to_string(n) + " i=" + std::to_string(i), tau.to_string(),
                 expected.to_string());
      if (run.failed()) break;
      Tensor traced = contraction_r(1, tau);
      Tensor want = Rational(1 - n) * Tensor::basis(n, i);
      run.expect(traced == want, "contraction of the conjugation value",
                 "n=" + std::to_string(n) + " i=" + std::to_string(i), traced.to_string(),
                 want.to_string());
    }
    run.expect(matrix_rank(iota_star_matrix(n)) == n, "bracket map has full rank",
               "n=" + std::to_string(n), "rank", std::to_string(n));
  }

  // Word abelianization agrees with the Johnson route (cross-checked
  // internally by abelianize_ia_word) on random short words.
  if (!run.failed()) {
    const int n = std::max(3, opt.rank);
    std::vector<FreeGroupEndo> gens = generator_library(GeneratorKind::MagnusK, n);
    for (int trial = 0; trial < std::min(opt.trials, 25) && !run.failed(); ++trial) {
      std::string text;
      int len = rng.uniform(1, 6);
      for (int k = 0; k < len; ++k) {
        if (k) text += "*";
        text += gens[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(gens.size()) - 1))].label();
        if (rng.coin()) text += "^-1";
      }
      try {
        abelianize_ia_word(text, n);
        ++run.result.checks;
      } catch (const std::logic_error& e) {
        run.expect(false, "word abelianization cross-check", text, e.what(), "agreement");
      }
    }
  }
  return run.result;
}

SuiteResult run_eq49(const SuiteOptions& opt) {
  SuiteRun run("eq49");
  Rng rng(opt.seed);
  std::vector<FreeGroupEndo> lib = mixed_library(opt.rank);
  MagnusExpansion std_theta = MagnusExpansion::standard(opt.rank, opt.truncation);
  MagnusExpansion rand_theta = random_expansion(rng, opt.rank, opt.truncation);
  std::vector<std::pair<GroupElement, GroupElement>> std_samples;
  std::vector<std::pair<GroupElement, GroupElement>> rand_samples;
  for (int trial = 0; trial < opt.trials; ++trial) {
    GroupElement g1 = trial % 5 == 0
                          ? GroupElement::semidirect(
                                random_word(rng, opt.rank, 4),
                                inner_automorphism(random_word(rng, opt.rank, 3)))
                          : random_semidirect(rng, lib, opt.rank, 4, 2);
    GroupElement g2 = random_semidirect(rng, lib, opt.rank, 4, 2);
    (trial % 2 == 0 ? std_samples : rand_samples).emplace_back(g1, g2);
  }
  CheckReport report;
  bool ok = check_eq49(std_theta, std_samples, &report);
  run.result.checks += static_cast<long>(std_samples.size());
  if (!ok) run.check(false, report);
  if (!run.failed()) {
    ok = check_eq49(rand_theta, rand_samples, &report);
    run.result.checks += static_cast<long>(rand_samples.size());
    if (!ok) run.check(false, report);
  }
  return run.result;
}

SuiteResult run_stasheff(const SuiteOptions& opt) {
  SuiteRun run("stasheff");
  (void)opt;
  // Independent count: central binomial formula.
  auto catalan = [](int p) {
    long long num = 1;
    long long den = 1;
    for (int k = 0; k < p; ++k) {
      num *= 2LL * p - k;
      den *= k + 1;
    }
    return num / den / (p + 1);
  };
  for (int p = 0; p <= 8; ++p) {
    auto vertices = stasheff_vertices(p);
    run.expect(static_cast<long long>(vertices.size()) == catalan(p),
               "vertex count equals the Catalan number", "p=" + std::to_string(p),
               std::to_string(vertices.size()), std::to_string(catalan(p)));
    if (run.failed()) return run.result;
  }
  for (int p = 1; p <= 6; ++p) {
    ParenWord comb = ParenWord::leaf();
    for (int k = 0; k < p; ++k) comb = ParenWord::pair(comb, ParenWord::leaf());
    run.expect(paren_sign(comb) == 1, "left comb has positive sign", "p=" + std::to_string(p),
               std::to_string(paren_sign(comb)), "1");
  }
  ParenWord right2 = ParenWord::pair(ParenWord::leaf(), ParenWord::pair(ParenWord::leaf(),
                                                                        ParenWord::leaf()));
  run.expect(paren_sign(right2) == -1, "right comb of size two has negative sign", "p=2",
             std::to_string(paren_sign(right2)), "-1");
  return run.result;
}

SuiteResult run_surface(const SuiteOptions& opt) {
  SuiteRun run("surface");
  Rng rng(opt.seed);
  const int truncation = std::max(3, std::min(opt.truncation, 4));
  const int expansions = std::min(opt.trials, 20);
  const int max_genus = std::max(3, opt.genus);
  for (int g = 1; g <= max_genus && !run.failed(); ++g) {
    SurfaceContext ctx(g);
    CheckReport report;
    run.check_reported(theta2_w0_check(MagnusExpansion::standard(ctx.rank(), truncation),
                                       &report),
                       report);
    for (int e = 0; e < expansions && !run.failed(); ++e) {
      run.check_reported(
          theta2_w0_check(random_expansion(rng, ctx.rank(), truncation), &report), report);
    }
  }
  if (run.failed()) return run.result;

  {
    SurfaceContext torus(1);
    Word check = parse_word("x2*x1*x2^-1*x1^-1", 2);
    Integer value = nu0(torus, check);
    run.expect(value == 1, "torus value of the boundary invariant", check.render(),
               value.get_str(), "1");
    Integer base = nu0(torus, torus.boundary_word());
    run.expect(base == -1, "boundary word value", torus.boundary_word().render(),
               base.get_str(), "-1");
  }
  for (int g = 1; g <= 2 && !run.failed(); ++g) {
    SurfaceContext ctx(g);
    Word w0 = ctx.boundary_word();
    Integer base = nu0(ctx, w0);
    for (int trial = 0; trial < std::min(opt.trials, 10) && !run.failed(); ++trial) {
      Word conj = random_word(rng, ctx.rank(), 4);
      Integer moved = nu0(ctx, conj * w0 * conj.inverse());
      run.expect(moved == base, "invariance under conjugation",
                 "g=" + std::to_string(g) + " gamma=" + conj.render(), moved.get_str(),
                 base.get_str());
      if (run.failed()) break;
      // Additivity on a product of conjugates.
      Word other = random_word(rng, ctx.rank(), 4);
      Word product = (conj * w0 * conj.inverse()) * (other * w0.inverse() * other.inverse());
      Integer sum = nu0(ctx, product);
      run.expect(sum == 0, "additivity on conjugate products",
                 "g=" + std::to_string(g), sum.get_str(), "0");
    }
  }
  if (run.failed()) return run.result;

  for (int g = 1; g <= 2 && !run.failed(); ++g) {
    CheckReport report;
    run.check_reported(
        tau2_boundary_check(MagnusExpansion::standard(2 * g, truncation), g, &report), report);
    if (run.failed()) break;
    run.check_reported(
        tau2_boundary_check(random_expansion(rng, 2 * g, truncation), g, &report), report);
  }
  return run.result;
}

SuiteResult run_dsquare(const SuiteOptions& opt) {
  SuiteRun run("dsquare");
  Rng rng(opt.seed);
  std::vector<FreeGroupEndo> lib = mixed_library(opt.rank);
  auto calc = std::make_shared<const JohnsonCalculator>(
      MagnusExpansion::standard(opt.rank, opt.truncation));

  auto random_elements = [&](int count) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(random_semidirect(rng, lib, opt.rank, 3, 2));
    return out;
  };

  // A cochain with no structure at all: pseudo-random values seeded from
  // the rendered arguments. The square of the coboundary still vanishes.
  CoeffModule module{opt.rank, 0, 1};
  Cochain noise(1, module, [rank = opt.rank](const std::vector<GroupElement>& args) {
    std::size_t h = std::hash<std::string>{}(args[0].describe());
    Tensor t(rank, 1);
    for (int j = 1; j <= rank; ++j) {
      long value = static_cast<long>((h >> (7 * j)) % 7) - 3;
      t.add_term(IndexWord(1, static_cast<unsigned char>(j)), Rational(value));
    }
    return HomTensor::from_tensor(t);
  });

  const int rounds = std::max(1, std::min(opt.trials, 40));
  for (int trial = 0; trial < rounds && !run.failed(); ++trial) {
    {
      std::vector<GroupElement> args = random_elements(3);
      HomTensor dd = coboundary(coboundary(noise))(args);
      run.expect(dd.is_zero(), "square of the coboundary vanishes (pseudo-random cochain)",
                 args[0].describe() + ", " + args[1].describe() + ", " + args[2].describe(),
                 dd.to_string(), "0");
      if (run.failed()) break;
      HomTensor dd_k0 = coboundary(coboundary(k0_cochain(opt.rank)))(args);
      run.expect(dd_k0.is_zero(), "square of the coboundary vanishes (crossed homomorphism)",
                 "triple", dd_k0.to_string(), "0");
      if (run.failed()) break;
      HomTensor dd_theta = coboundary(coboundary(theta2_tilde_cochain(calc)))(args);
      run.expect(dd_theta.is_zero(), "square of the coboundary vanishes (second component)",
                 "triple", dd_theta.to_string(), "0");
      if (run.failed()) break;
      HomTensor dk0 = coboundary(k0_cochain(opt.rank))(
          std::vector<GroupElement>{args[0], args[1]});
      run.expect(dk0.is_zero(), "crossed homomorphism is a cocycle",
                 args[0].describe() + ", " + args[1].describe(), dk0.to_string(), "0");
    }
    if (run.failed()) break;
    {
      // Leibniz rule for the cup product.
      Cochain f = k0_cochain(opt.rank);
      Cochain g = theta2_tilde_cochain(calc);
      std::vector<GroupElement> args = random_elements(3);
      HomTensor lhs = coboundary(cup(f, g))(args);
      HomTensor rhs = cup(coboundary(f), g)(args) - cup(f, coboundary(g))(args);
      run.expect(lhs == rhs, "Leibniz rule for the cup product",
                 args[0].describe() + ", " + args[1].describe() + ", " + args[2].describe(),
                 lhs.to_string(), rhs.to_string());
    }
  }
  return run.result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm13", "eq24", "eq26", "lemma22", "lemma23", "eq31",
      "thm31", "thm61", "eq49",  "stasheff", "surface", "dsquare",
  };
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "thm13") return run_thm13(options);
  if (name == "eq24") return run_eq24(options);
  if (name == "eq26") return run_eq26(options);
  if (name == "lemma22") return run_lemma22(options);
  if (name == "lemma23") return run_lemma23(options);
  if (name == "eq31") return run_eq31(options);
  if (name == "thm31") return run_thm31(options);
  if (name == "thm61") return run_thm61(options);
  if (name == "eq49") return run_eq49(options);
  if (name == "stasheff") return run_stasheff(options);
  if (name == "surface") return run_surface(options);
  if (name == "dsquare") return run_dsquare(options);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<std::string> expand_suite_selector(const std::string& selector) {
  if (selector == "all") return suite_names();
  if (selector == "johnson") return {"eq24", "lemma22", "lemma23"};
  if (selector == "cochain") return {"eq26", "eq49", "dsquare"};
  if (selector == "tau2") return {"eq26"};
  for (const std::string& name : suite_names()) {
    if (name == selector) return {name};
  }
  throw std::invalid_argument("unknown suite \"" + selector + "\"");
}

}  // namespace magnus
