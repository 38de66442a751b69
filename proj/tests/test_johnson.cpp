#include <doctest.h>

#include "helpers.hpp"
#include "magnus/johnson.hpp"

using namespace magnus;
using testutil::w;

namespace {

HomTensor elementary(int n, int i, int a, int b) {
  // l_i ⊗ (X_a X_b − X_b X_a)
  HomTensor u(n, 1, 2);
  IndexWord in(1, static_cast<unsigned char>(i));
  IndexWord ab;
  ab.push_back(static_cast<unsigned char>(a));
  ab.push_back(static_cast<unsigned char>(b));
  IndexWord ba;
  ba.push_back(static_cast<unsigned char>(b));
  ba.push_back(static_cast<unsigned char>(a));
  u.add_term(in, ab, Rational(1));
  u.add_term(in, ba, Rational(-1));
  return u;
}

const FreeGroupEndo& find(const std::vector<FreeGroupEndo>& lib, const std::string& label) {
  for (const auto& g : lib) {
    if (g.label() == label) return g;
  }
  throw std::runtime_error("missing " + label);
}

}  // namespace

TEST_CASE("identity automorphism maps to the identity") {
  JohnsonCalculator calc(MagnusExpansion::standard(2, 4));
  AlgebraMap total = calc.total(FreeGroupEndo::identity(2));
  CHECK(total == AlgebraMap::identity(2, 4));
  for (int p = 1; p <= 3; ++p) CHECK(calc.component(FreeGroupEndo::identity(2), p).is_zero());
}

TEST_CASE("Nielsen move has an elementary first coordinate") {
  // x1 ↦ x1x2, x2 ↦ x2 at rank 2: the first coordinate sends X1 to X1X2.
  FreeGroupEndo phi(2, std::vector<Word>{w("x1*x2", 2), w("x2", 2)},
                    std::vector<Word>{w("x1*x2^-1", 2), w("x2", 2)});
  JohnsonCalculator calc(MagnusExpansion::standard(2, 4));
  HomTensor tau1 = calc.component(phi, 1);
  HomTensor expected(2, 1, 2);
  IndexWord in(1, 1);
  IndexWord x1x2;
  x1x2.push_back(1);
  x1x2.push_back(2);
  expected.add_term(in, x1x2, Rational(1));
  CHECK(tau1 == expected);
  CHECK(calc.component(phi, 1).image_of(2).is_zero());
}

TEST_CASE("K-generator values") {
  auto lib3 = generator_library(GeneratorKind::MagnusK, 3);
  JohnsonCalculator calc(MagnusExpansion::standard(3, 3));
  CHECK(calc.component(find(lib3, "K[1,2]"), 1) == elementary(3, 1, 2, 1));
  CHECK(calc.component(find(lib3, "K[1,2,3]"), 1) == elementary(3, 1, 2, 3));
  CHECK(calc.component(find(lib3, "K[3,1,2]"), 1) == elementary(3, 3, 1, 2));
}

TEST_CASE("conjugation values in low degree") {
  const int n = 3, N = 4;
  JohnsonCalculator calc(MagnusExpansion::standard(n, N));
  // First coordinate: a ↦ [γ]a − a[γ].
  for (int i = 1; i <= n; ++i) {
    HomTensor tau1 = calc.component(inner_automorphism(Word::generator(n, i)), 1);
    for (int a = 1; a <= n; ++a) {
      Tensor xa = Tensor::basis(n, a);
      Tensor xi = Tensor::basis(n, i);
      CHECK(tau1.apply(xa) == tensor_product(xi, xa) - tensor_product(xa, xi));
    }
  }

  // Second coordinate via the closed form for a general word and any
  // expansion: a ↦ θ2(γ)a − aθ2(γ) + a[γ][γ] − [γ]a[γ].
  testutil::Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    MagnusExpansion theta =
        trial % 2 == 0 ? MagnusExpansion::standard(n, N) : random_expansion(rng, n, N);
    JohnsonCalculator jc(theta);
    Word gamma = random_word(rng, n, 5);
    Tensor theta2 = theta.component(gamma, 2);
    Tensor abel = theta.component(gamma, 1);
    HomTensor tau2 = jc.component(inner_automorphism(gamma), 2);
    for (int a = 1; a <= n; ++a) {
      Tensor xa = Tensor::basis(n, a);
      Tensor expected = tensor_product(theta2, xa) - tensor_product(xa, theta2) +
                        tensor_product(tensor_product(xa, abel), abel) -
                        tensor_product(tensor_product(abel, xa), abel);
      CHECK(tau2.apply(xa) == expected);
    }
  }
}

TEST_CASE("closed form equals the map route for conjugations") {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    int rank = 2 + trial % 2;
    int N = 5;
    MagnusExpansion theta =
        trial % 2 == 0 ? MagnusExpansion::standard(rank, N) : random_expansion(rng, rank, N);
    JohnsonCalculator calc(theta);
    Word gamma = random_word(rng, rank, 6);
    FreeGroupEndo conj = inner_automorphism(gamma);
    for (int p = 1; p <= 4; ++p) {
      CHECK(inner_johnson(theta, gamma, p) == calc.component(conj, p));
    }
  }
  // The identity word gives zero in every degree.
  MagnusExpansion std_theta = MagnusExpansion::standard(2, 4);
  for (int p = 1; p <= 3; ++p) CHECK(inner_johnson(std_theta, Word(2), p).is_zero());
}

TEST_CASE("defining property on sampled words") {
  testutil::Rng rng(17);
  auto lib = generator_library(GeneratorKind::Nielsen, 3);
  JohnsonCalculator calc(MagnusExpansion::standard(3, 4));
  for (int trial = 0; trial < 12; ++trial) {
    FreeGroupEndo phi = random_library_product(rng, lib, 3);
    Word gamma = random_word(rng, 3, 6);
    CHECK(check_defining_property(calc, phi, gamma));
  }
}

TEST_CASE("cocycle laws") {
  testutil::Rng rng(19);
  std::vector<FreeGroupEndo> lib = generator_library(GeneratorKind::Nielsen, 3);
  auto ks = generator_library(GeneratorKind::MagnusK, 3);
  lib.insert(lib.end(), ks.begin(), ks.end());
  JohnsonCalculator calc(MagnusExpansion::standard(3, 4));

  CHECK(check_cocycle_tau1(calc, FreeGroupEndo::identity(3), FreeGroupEndo::identity(3)));
  CHECK(check_tau2_relation(calc, FreeGroupEndo::identity(3), FreeGroupEndo::identity(3)));

  for (int trial = 0; trial < 10; ++trial) {
    FreeGroupEndo phi = random_library_product(rng, lib, 2);
    FreeGroupEndo psi = random_library_product(rng, lib, 2);
    CHECK(check_cocycle_tau1(calc, phi, psi));
    CHECK(check_tau2_relation(calc, phi, psi));
    CHECK(check_cocycle_total(calc, phi, psi));

    // ψ = φ^{-1} forces the twisted-inverse relation on first coordinates.
    HomTensor lhs = calc.component(phi.inverse(), 1);
    HomTensor rhs = -twist(phi.abelianized().inverse(), calc.component(phi, 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("second components against the first coordinate") {
  testutil::Rng rng(23);
  auto lib = generator_library(GeneratorKind::Nielsen, 3);
  for (int trial = 0; trial < 10; ++trial) {
    int rank = 2 + trial % 3;
    auto local = generator_library(GeneratorKind::Nielsen, rank);
    JohnsonCalculator calc(trial % 2 == 0
                               ? MagnusExpansion::standard(rank, 4)
                               : random_expansion(rng, rank, 4));
    FreeGroupEndo phi = random_library_product(rng, local, 3);
    Word gamma = random_word(rng, rank, 6);
    CHECK(check_lemma22(calc, phi, gamma));
    CHECK(check_lemma22(calc, phi, Word(rank)));
    CHECK(check_lemma22(calc, FreeGroupEndo::identity(rank), gamma));
  }
}

TEST_CASE("reports carry both sides") {
  JohnsonCalculator calc(MagnusExpansion::standard(2, 3));
  FreeGroupEndo phi(2, {w("x1*x1", 2), w("x2", 2)});  // not unimodular: |det| = 2
  CHECK_THROWS_AS(calc.total(phi), std::domain_error);
}
