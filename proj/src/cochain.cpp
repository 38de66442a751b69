#include "magnus/cochain.hpp"

#include <stdexcept>

namespace magnus {

GroupElement GroupElement::aut(FreeGroupEndo phi) {
  Word identity(phi.rank());
  return GroupElement(Kind::Aut, std::move(identity), std::move(phi));
}

GroupElement GroupElement::semidirect(Word gamma, FreeGroupEndo phi) {
  if (gamma.rank() != phi.rank()) throw std::invalid_argument("rank mismatch");
  return GroupElement(Kind::Semidirect, std::move(gamma), std::move(phi));
}

const Word& GroupElement::word() const {
  if (kind_ != Kind::Semidirect) throw std::logic_error("element has no word part");
  return word_;
}

bool GroupElement::is_identity() const {
  if (kind_ == Kind::Semidirect && !word_.is_identity()) return false;
  return endo_.is_identity();
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("group element kind mismatch");
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  if (a.kind() == GroupElement::Kind::Aut) {
    return GroupElement::aut(compose(a.endo(), b.endo()));
  }
  // (γ1, φ1)(γ2, φ2) = (γ1 φ1(γ2), φ1 φ2)
  return GroupElement::semidirect(a.word_ * a.endo().apply(b.word_),
                                  compose(a.endo(), b.endo()));
}

std::string GroupElement::describe() const {
  std::string endo_text = endo_.label();
  if (endo_text.empty()) {
    endo_text = "[";
    for (int i = 1; i <= endo_.rank(); ++i) {
      if (i > 1) endo_text += ", ";
      std::string img = endo_.image(i).render();
      endo_text += "x" + std::to_string(i) + "->" + (img.empty() ? "1" : img);
    }
    endo_text += "]";
  }
  if (kind_ == Kind::Aut) return endo_text;
  std::string w = word_.is_identity() ? "1" : word_.render();
  return "(" + w + ", " + endo_text + ")";
}

HomTensor CoeffModule::act(const GroupElement& g, const HomTensor& value) const {
  if (value.rank() != rank || value.in_degree() != in_degree ||
      value.out_degree() != out_degree) {
    throw std::invalid_argument("value does not belong to the module");
  }
  GLMatrix a = g.action_matrix();
  if (a.is_identity()) return value;
  return value.gl_twist(a, a.inverse());
}

Cochain::Cochain(int arity, CoeffModule module, Evaluator evaluator, bool normalized)
    : arity_(arity), module_(std::move(module)), eval_(std::move(evaluator)),
      normalized_(normalized) {
  if (arity < 0) throw std::invalid_argument("negative arity");
}

HomTensor Cochain::operator()(const std::vector<GroupElement>& args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw std::invalid_argument("argument count does not match arity");
  }
  HomTensor value = eval_(args);
  if (value.rank() != module_.rank || value.in_degree() != module_.in_degree ||
      value.out_degree() != module_.out_degree) {
    throw std::logic_error("evaluator produced a value outside the module");
  }
  return value;
}

Cochain coboundary(const Cochain& f) {
  const int p = f.arity();
  CoeffModule module = f.module();
  return Cochain(
      p + 1, module,
      [f, p, module](const std::vector<GroupElement>& args) {
        std::vector<GroupElement> rest(args.begin() + 1, args.end());
        HomTensor value = module.act(args.front(), f(rest));
        for (int i = 1; i <= p; ++i) {
          std::vector<GroupElement> merged;
          merged.reserve(args.size() - 1);
          for (int k = 0; k < static_cast<int>(args.size()); ++k) {
            if (k == i - 1) {
              merged.push_back(args[k] * args[k + 1]);
              ++k;
            } else {
              merged.push_back(args[k]);
            }
          }
          HomTensor term = f(merged);
          if (i % 2 != 0) {
            value -= term;
          } else {
            value += term;
          }
        }
        std::vector<GroupElement> head(args.begin(), args.end() - 1);
        HomTensor last = f(head);
        if ((p + 1) % 2 != 0) {
          value -= last;
        } else {
          value += last;
        }
        return value;
      },
      f.normalized());
}

Cochain cup(const Cochain& f, const Cochain& g) {
  if (f.module().rank != g.module().rank) throw std::invalid_argument("module rank mismatch");
  CoeffModule module{f.module().rank, f.module().in_degree + g.module().in_degree,
                     f.module().out_degree + g.module().out_degree};
  const int p = f.arity();
  const int q = g.arity();
  CoeffModule gmod = g.module();
  return Cochain(p + q, module, [f, g, p, q, gmod](const std::vector<GroupElement>& args) {
    std::vector<GroupElement> front(args.begin(), args.begin() + p);
    std::vector<GroupElement> back(args.begin() + p, args.end());
    HomTensor right = g(back);
    for (int k = p - 1; k >= 0; --k) {
      right = gmod.act(args[static_cast<std::size_t>(k)], right);
    }
    return hom_tensor_product(f(front), right);
  });
}

Cochain cup_compose(const Cochain& f, const Cochain& g) {
  if (f.module().rank != g.module().rank) throw std::invalid_argument("module rank mismatch");
  if (f.module().in_degree != g.module().out_degree) {
    throw std::invalid_argument("composition degree mismatch");
  }
  CoeffModule module{f.module().rank, g.module().in_degree, f.module().out_degree};
  const int p = f.arity();
  CoeffModule gmod = g.module();
  return Cochain(p + g.arity(), module, [f, g, p, gmod](const std::vector<GroupElement>& args) {
    std::vector<GroupElement> front(args.begin(), args.begin() + p);
    std::vector<GroupElement> back(args.begin() + p, args.end());
    HomTensor right = g(back);
    for (int k = p - 1; k >= 0; --k) {
      right = gmod.act(args[static_cast<std::size_t>(k)], right);
    }
    return compose(f(front), right);
  });
}

Tensor k0(const GroupElement& e) {
  if (e.kind() != GroupElement::Kind::Semidirect) {
    throw std::invalid_argument("k0 needs a semidirect element");
  }
  const int n = e.rank();
  Tensor out(n, 1);
  std::vector<long long> sums = e.word().exponent_sums();
  for (int j = 1; j <= n; ++j) {
    out.add_term(IndexWord(1, static_cast<unsigned char>(j)),
                 Rational(static_cast<long>(sums[static_cast<std::size_t>(j) - 1])));
  }
  return out;
}

Cochain k0_cochain(int rank) {
  CoeffModule module{rank, 0, 1};
  return Cochain(1, module, [](const std::vector<GroupElement>& args) {
    return HomTensor::from_tensor(k0(args[0]));
  });
}

Cochain tau1_cochain(std::shared_ptr<const JohnsonCalculator> calc) {
  CoeffModule module{calc->expansion().rank(), 1, 2};
  return Cochain(1, module, [calc](const std::vector<GroupElement>& args) {
    return calc->component(args[0].endo(), 1);
  });
}

Cochain tau2_cochain(std::shared_ptr<const JohnsonCalculator> calc) {
  CoeffModule module{calc->expansion().rank(), 1, 3};
  return Cochain(1, module, [calc](const std::vector<GroupElement>& args) {
    return calc->component(args[0].endo(), 2);
  });
}

Cochain theta2_tilde_cochain(std::shared_ptr<const JohnsonCalculator> calc) {
  CoeffModule module{calc->expansion().rank(), 0, 2};
  return Cochain(1, module, [calc](const std::vector<GroupElement>& args) {
    return HomTensor::from_tensor(calc->expansion().component(args[0].word(), 2));
  });
}

Tensor contraction_r(int p, const HomTensor& u) {
  if (u.in_degree() != 1 || u.out_degree() != p + 1) {
    throw std::invalid_argument("value shape does not match the requested contraction");
  }
  return contract_first(u);
}

HomTensor compose_sigma(const std::vector<HomTensor>& factors) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  const int rank = factors[0].rank();
  for (const HomTensor& u : factors) {
    if (u.rank() != rank || u.in_degree() != 1 || u.out_degree() != 2) {
      throw std::invalid_argument("factors must map H to H tensor H");
    }
  }
  const int p = static_cast<int>(factors.size());
  HomTensor acc = factors.back();
  for (int k = p - 2; k >= 0; --k) {
    // factors[k] ⊗ 1^{⊗(p-1-k)} applied after the accumulated map.
    HomTensor widened =
        hom_tensor_product(factors[static_cast<std::size_t>(k)],
                           HomTensor::identity(rank, p - 1 - k));
    acc = compose(widened, acc);
  }
  return acc;
}

bool check_eq49(const MagnusExpansion& theta,
                const std::vector<std::pair<GroupElement, GroupElement>>& samples,
                CheckReport* report) {
  auto calc = std::make_shared<const JohnsonCalculator>(theta);
  Cochain lhs = coboundary(theta2_tilde_cochain(calc));
  Cochain tau_k0 = cup_compose(tau1_cochain(calc), k0_cochain(theta.rank()));
  Cochain k0k0 = cup(k0_cochain(theta.rank()), k0_cochain(theta.rank()));
  for (const auto& [g1, g2] : samples) {
    std::vector<GroupElement> args{g1, g2};
    HomTensor left = lhs(args);
    HomTensor right = -(tau_k0(args) + k0k0(args));
    if (left != right) {
      if (report) {
        report->identity = "coboundary of the second-component cochain";
        report->inputs = g1.describe() + ", " + g2.describe();
        report->lhs = left.to_string();
        report->rhs = right.to_string();
      }
      return false;
    }
  }
  return true;
}

ParenWord ParenWord::leaf() { return ParenWord(); }

ParenWord ParenWord::pair(ParenWord left, ParenWord right) {
  ParenWord w;
  w.size_ = left.size_ + right.size_ + 1;
  w.left_ = std::make_shared<const ParenWord>(std::move(left));
  w.right_ = std::make_shared<const ParenWord>(std::move(right));
  return w;
}

const ParenWord& ParenWord::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return *left_;
}

const ParenWord& ParenWord::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return *right_;
}

namespace {

std::string render_paren(const ParenWord& w, int& next_leaf) {
  if (w.is_leaf()) return std::to_string(next_leaf++);
  std::string out = "(";
  out += render_paren(w.left(), next_leaf);
  out += render_paren(w.right(), next_leaf);
  out += ")";
  return out;
}

}  // namespace

std::string ParenWord::to_string() const {
  int next_leaf = 1;
  return render_paren(*this, next_leaf);
}

bool ParenWord::operator==(const ParenWord& other) const {
  if (size_ != other.size_) return false;
  if (is_leaf()) return other.is_leaf();
  if (other.is_leaf()) return false;
  return left() == other.left() && right() == other.right();
}

std::vector<ParenWord> stasheff_vertices(int p) {
  if (p < 0) throw std::invalid_argument("negative parenthesization size");
  std::vector<std::vector<ParenWord>> table;
  table.push_back({ParenWord::leaf()});
  for (int m = 1; m <= p; ++m) {
    std::vector<ParenWord> row;
    for (int q = 0; q <= m - 1; ++q) {
      for (const ParenWord& w1 : table[static_cast<std::size_t>(q)]) {
        for (const ParenWord& w2 : table[static_cast<std::size_t>(m - q - 1)]) {
          row.push_back(ParenWord::pair(w1, w2));
        }
      }
    }
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(p)];
}

int paren_sign(const ParenWord& w) {
  if (w.is_leaf() || w.size() == 1) return 1;
  int sign = paren_sign(w.left()) * paren_sign(w.right());
  if (w.right().size() % 2 != 0) sign = -sign;
  return sign;
}

Cochain h_word_cochain(std::shared_ptr<const JohnsonCalculator> calc, const ParenWord& w) {
  const int rank = calc->expansion().rank();
  if (w.size() + 1 > calc->expansion().truncation()) {
    throw std::out_of_range("parenthesization too deep for the truncation");
  }
  if (w.is_leaf()) {
    CoeffModule module{rank, 1, 1};
    return Cochain(0, module, [rank](const std::vector<GroupElement>&) {
      return HomTensor::identity(rank, 1);
    });
  }
  Cochain left = h_word_cochain(calc, w.left());
  Cochain right = h_word_cochain(calc, w.right());
  return cup_compose(cup(left, right), tau1_cochain(calc));
}

}  // namespace magnus
