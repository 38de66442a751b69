#include <doctest.h>

#include "helpers.hpp"
#include "magnus/surface.hpp"

using namespace magnus;
using testutil::w;

TEST_CASE("boundary word") {
  SurfaceContext torus(1);
  CHECK(torus.boundary_word() == w("x1*x2*x1^-1*x2^-1", 2));
  SurfaceContext genus2(2);
  CHECK(genus2.boundary_word() == w("x1*x3*x1^-1*x3^-1*x2*x4*x2^-1*x4^-1", 4));
  CHECK(genus2.boundary_word().length() == 8);  // 4g letters
  for (long long s : genus2.boundary_word().exponent_sums()) CHECK(s == 0);
}

TEST_CASE("intersection pairing") {
  SurfaceContext ctx(2);
  const int n = ctx.rank();
  CHECK(ctx.mu(Tensor::basis(n, 1), Tensor::basis(n, 3)) == 1);   // X1 · X_{g+1}
  CHECK(ctx.mu(Tensor::basis(n, 3), Tensor::basis(n, 1)) == -1);  // antisymmetry
  CHECK(ctx.mu(Tensor::basis(n, 1), Tensor::basis(n, 1)) == 0);
  CHECK(ctx.mu(Tensor::basis(n, 1), Tensor::basis(n, 2)) == 0);
  CHECK(ctx.mu(Tensor::basis(n, 3), Tensor::basis(n, 4)) == 0);
  CHECK(ctx.mu(Tensor::basis(n, 2), Tensor::basis(n, 4)) == 1);
}

TEST_CASE("duality") {
  SurfaceContext ctx(2);
  const int n = ctx.rank();
  const int g = ctx.genus();
  for (int i = 1; i <= g; ++i) {
    CHECK(ctx.poincare_dual(HomTensor::covector(n, g + i)) == Tensor::basis(n, i));
    CHECK(ctx.poincare_dual(HomTensor::covector(n, i)) ==
          Rational(-1) * Tensor::basis(n, g + i));
  }
  // Mutually inverse.
  for (int i = 1; i <= n; ++i) {
    Tensor y = Tensor::basis(n, i);
    CHECK(ctx.poincare_dual(ctx.poincare_dual_inv(y)) == y);
    HomTensor ell = HomTensor::covector(n, i);
    CHECK(ctx.poincare_dual_inv(ctx.poincare_dual(ell)) == ell);
  }
  // The pairing factors through the duality: dual_inv(a)(b) = mu(a, b).
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Tensor a = Tensor::basis(n, i);
      Tensor b = Tensor::basis(n, j);
      CHECK(ctx.poincare_dual_inv(a).apply(b) ==
            Tensor::scalar(n, ctx.mu(a, b)));
    }
  }
  // Equivariance under a symplectic rotation at genus 1.
  SurfaceContext torus(1);
  GLMatrix rot(2);
  rot.set(0, 1, Rational(-1));
  rot.set(1, 0, Rational(1));
  CHECK(torus.intersection_form().apply_linear(rot) == torus.intersection_form());
  for (int i = 1; i <= 2; ++i) {
    HomTensor ell = HomTensor::covector(2, i);
    HomTensor moved = ell.gl_twist(rot, rot.inverse());
    CHECK(torus.poincare_dual(moved) == torus.poincare_dual(ell).apply_linear(rot));
  }
}

TEST_CASE("second component of the boundary word") {
  testutil::Rng rng(3);
  for (int g = 1; g <= 3; ++g) {
    CHECK(theta2_w0_check(MagnusExpansion::standard(2 * g, 3)));
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(theta2_w0_check(random_expansion(rng, 2 * g, 3)));
    }
  }
}

TEST_CASE("boundary invariant") {
  SurfaceContext torus(1);
  CHECK(nu0(torus, torus.boundary_word()) == -1);
  CHECK(nu0(torus, w("x2*x1*x2^-1*x1^-1", 2)) == 1);
  CHECK(nu0(torus, Word(2)) == 0);

  testutil::Rng rng(5);
  for (int g = 1; g <= 2; ++g) {
    SurfaceContext ctx(g);
    Word w0 = ctx.boundary_word();
    for (int trial = 0; trial < 10; ++trial) {
      Word conj = random_word(rng, ctx.rank(), 5);
      CHECK(nu0(ctx, conj * w0 * conj.inverse()) == -1);
    }
    // Additive on products of conjugates.
    Word a = random_word(rng, ctx.rank(), 4);
    Word b = random_word(rng, ctx.rank(), 4);
    Word product = (a * w0 * a.inverse()) * (b * w0 * b.inverse());
    CHECK(nu0(ctx, product) == -2);
    CHECK(nu0(ctx, (a * w0 * a.inverse()) * (b * w0.inverse() * b.inverse())) == 0);
  }

  // Scope errors.
  CHECK_THROWS_AS(nu0(torus, w("x1", 2)), Nu0ScopeError);
  SurfaceContext genus2(2);
  CHECK_THROWS_AS(nu0(genus2, w("x1*x3*x1^-1*x3^-1", 4)), Nu0ScopeError);
}

TEST_CASE("boundary conjugation values") {
  testutil::Rng rng(7);
  // Hand expansion at genus 1 for a = X1:
  // I·X1 − X1·I = 2X1X2X1 − X2X1X1 − X1X1X2.
  SurfaceContext torus(1);
  JohnsonCalculator calc(MagnusExpansion::standard(2, 3));
  HomTensor tau2 = calc.component(inner_automorphism(torus.boundary_word()), 2);
  Tensor expected(2, 3);
  auto key = [](std::initializer_list<int> v) {
    IndexWord idx;
    for (int i : v) idx.push_back(static_cast<unsigned char>(i));
    return idx;
  };
  expected.add_term(key({1, 2, 1}), Rational(2));
  expected.add_term(key({2, 1, 1}), Rational(-1));
  expected.add_term(key({1, 1, 2}), Rational(-1));
  CHECK(tau2.apply(Tensor::basis(2, 1)) == expected);

  for (int g = 1; g <= 2; ++g) {
    CHECK(tau2_boundary_check(MagnusExpansion::standard(2 * g, 3), g));
    CHECK(tau2_boundary_check(random_expansion(rng, 2 * g, 3), g));
  }
}
