#include "magnus/surface.hpp"

#include <stdexcept>

#include "magnus/endo.hpp"

namespace magnus {

SurfaceContext::SurfaceContext(int genus) : g_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (2 * genus > kMaxRank) throw std::invalid_argument("genus too large");
}

Tensor SurfaceContext::intersection_form() const {
  const int n = rank();
  Tensor form(n, 2);
  for (int i = 1; i <= g_; ++i) {
    IndexWord ab;
    ab.push_back(static_cast<unsigned char>(i));
    ab.push_back(static_cast<unsigned char>(g_ + i));
    IndexWord ba;
    ba.push_back(static_cast<unsigned char>(g_ + i));
    ba.push_back(static_cast<unsigned char>(i));
    form.add_term(ab, Rational(1));
    form.add_term(ba, Rational(-1));
  }
  return form;
}

Word SurfaceContext::boundary_word() const {
  const int n = rank();
  Word w(n);
  for (int i = 1; i <= g_; ++i) {
    w = w * commutator(Word::generator(n, i), Word::generator(n, g_ + i));
  }
  return w;
}

Rational SurfaceContext::mu(const Tensor& a, const Tensor& b) const {
  if (a.rank() != rank() || b.rank() != rank() || a.degree() != 1 || b.degree() != 1) {
    throw std::invalid_argument("intersection pairing needs degree-1 tensors of the surface rank");
  }
  Rational out(0);
  for (const auto& [ia, ca] : a.terms()) {
    int i = static_cast<int>(ia[0]);
    for (const auto& [ib, cb] : b.terms()) {
      int j = static_cast<int>(ib[0]);
      if (j == i + g_) out += ca * cb;           // X_i · X_{g+i} = 1
      if (i == j + g_) out -= ca * cb;           // X_{g+i} · X_i = -1
    }
  }
  return out;
}

Tensor SurfaceContext::poincare_dual(const HomTensor& ell) const {
  if (ell.rank() != rank() || ell.in_degree() != 1 || ell.out_degree() != 0) {
    throw std::invalid_argument("argument must be a covector of the surface rank");
  }
  // (1_H ⊗ ℓ)(I): contract ℓ with the second slot of the form.
  Tensor out(rank(), 1);
  Tensor form = intersection_form();
  for (const auto& [idx, c] : form.terms()) {
    Rational value = c * ell.coeff(IndexWord(1, idx[1]), IndexWord{});
    if (value != 0) out.add_term(IndexWord(1, idx[0]), value);
  }
  return out;
}

HomTensor SurfaceContext::poincare_dual_inv(const Tensor& y) const {
  if (y.rank() != rank() || y.degree() != 1) {
    throw std::invalid_argument("argument must have degree 1 and the surface rank");
  }
  HomTensor out(rank(), 1, 0);
  for (int j = 1; j <= rank(); ++j) {
    Rational value = mu(y, Tensor::basis(rank(), j));
    if (value != 0) out.add_term(IndexWord(1, static_cast<unsigned char>(j)), IndexWord{}, value);
  }
  return out;
}

bool theta2_w0_check(const MagnusExpansion& theta, CheckReport* report) {
  if (theta.rank() % 2 != 0) throw std::invalid_argument("surface ranks are even");
  SurfaceContext ctx(theta.rank() / 2);
  Tensor lhs = theta.component(ctx.boundary_word(), 2);
  Tensor rhs = ctx.intersection_form();
  if (lhs == rhs) return true;
  if (report) {
    report->identity = "second component of the boundary word";
    report->inputs = "g=" + std::to_string(ctx.genus());
    report->lhs = lhs.to_string();
    report->rhs = rhs.to_string();
  }
  return false;
}

Integer nu0(const SurfaceContext& ctx, const Word& delta, const MagnusExpansion& theta) {
  if (delta.rank() != ctx.rank() || theta.rank() != ctx.rank()) {
    throw std::invalid_argument("rank mismatch");
  }
  for (long long s : delta.exponent_sums()) {
    if (s != 0) throw Nu0ScopeError("word has nonzero exponent sums");
  }
  Tensor value = theta.component(delta, 2);
  Tensor form = ctx.intersection_form();
  // Determine c with value = c * form; the form is nonzero.
  const auto& anchor = *form.terms().begin();
  Rational c = value.coeff(anchor.first) / anchor.second;
  if (value != c * form) {
    throw Nu0ScopeError("second component is not an integer multiple of the intersection form");
  }
  if (!is_integer(c)) {
    throw Nu0ScopeError("multiple of the intersection form is not integral");
  }
  return to_integer(-c);
}

Integer nu0(const SurfaceContext& ctx, const Word& delta) {
  return nu0(ctx, delta, MagnusExpansion::standard(ctx.rank(), 2));
}

bool tau2_boundary_check(const MagnusExpansion& theta, int genus, CheckReport* report) {
  SurfaceContext ctx(genus);
  if (theta.rank() != ctx.rank()) throw std::invalid_argument("rank mismatch");
  if (theta.truncation() < 3) throw std::invalid_argument("need truncation degree at least 3");
  Word w0 = ctx.boundary_word();
  JohnsonCalculator calc(theta);
  FreeGroupEndo conj = inner_automorphism(w0);

  HomTensor tau1 = calc.component(conj, 1);
  if (!tau1.is_zero()) {
    if (report) {
      report->identity = "first Johnson value of the boundary conjugation";
      report->inputs = "g=" + std::to_string(genus);
      report->lhs = tau1.to_string();
      report->rhs = "0";
    }
    return false;
  }

  HomTensor tau2 = calc.component(conj, 2);
  Tensor form = ctx.intersection_form();
  for (int i = 1; i <= ctx.rank(); ++i) {
    Tensor a = Tensor::basis(ctx.rank(), i);
    Tensor expected = tensor_product(form, a) - tensor_product(a, form);
    Tensor got = tau2.apply(a);
    if (got != expected) {
      if (report) {
        report->identity = "second Johnson value of the boundary conjugation";
        report->inputs = "g=" + std::to_string(genus) + " a=X" + std::to_string(i);
        report->lhs = got.to_string();
        report->rhs = expected.to_string();
      }
      return false;
    }
  }
  return true;
}

}  // namespace magnus
