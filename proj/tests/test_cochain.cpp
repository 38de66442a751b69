#include <doctest.h>

#include "helpers.hpp"
#include "magnus/cochain.hpp"

using namespace magnus;
using testutil::w;

namespace {

std::shared_ptr<const JohnsonCalculator> calc(int rank, int N) {
  return std::make_shared<const JohnsonCalculator>(MagnusExpansion::standard(rank, N));
}

std::vector<GroupElement> sample_semidirect(testutil::Rng& rng, int rank, int count) {
  auto lib = generator_library(GeneratorKind::Nielsen, rank);
  std::vector<GroupElement> out;
  for (int k = 0; k < count; ++k) out.push_back(random_semidirect(rng, lib, rank, 4, 2));
  return out;
}

}  // namespace

TEST_CASE("semidirect group law") {
  const int n = 2;
  auto lib = generator_library(GeneratorKind::Nielsen, n);
  GroupElement a = GroupElement::semidirect(w("x1", n), lib[0]);
  GroupElement b = GroupElement::semidirect(w("x2", n), lib[1]);
  GroupElement ab = a * b;
  CHECK(ab.word() == w("x1", n) * lib[0].apply(w("x2", n)));
  CHECK(ab.endo() == compose(lib[0], lib[1]));
  CHECK(GroupElement::semidirect(Word(n), FreeGroupEndo::identity(n)).is_identity());
  CHECK(!a.is_identity());
}

TEST_CASE("module action is multiplicative and fixes the identity") {
  const int n = 3;
  auto jc = calc(n, 4);
  CoeffModule module{n, 1, 2};
  testutil::Rng rng(111);
  auto lib = generator_library(GeneratorKind::Nielsen, n);
  for (int trial = 0; trial < 10; ++trial) {
    GroupElement g = GroupElement::aut(random_library_product(rng, lib, 2));
    GroupElement h = GroupElement::aut(random_library_product(rng, lib, 2));
    HomTensor value = jc->component(random_library_product(rng, lib, 2), 1);
    CHECK(module.act(g, module.act(h, value)) == module.act(g * h, value));
    CHECK(module.act(GroupElement::aut(FreeGroupEndo::identity(n)), value) == value);
  }
}

TEST_CASE("named cochains are normalized") {
  const int n = 2;
  auto jc = calc(n, 4);
  GroupElement id_semi = GroupElement::semidirect(Word(n), FreeGroupEndo::identity(n));
  GroupElement id_aut = GroupElement::aut(FreeGroupEndo::identity(n));
  CHECK(k0_cochain(n).normalized());
  CHECK(k0_cochain(n)({id_semi}).is_zero());
  CHECK(tau1_cochain(jc)({id_aut}).is_zero());
  CHECK(tau2_cochain(jc)({id_aut}).is_zero());
  CHECK(theta2_tilde_cochain(jc)({id_semi}).is_zero());
  // The coboundary of a normalized cochain stays normalized.
  testutil::Rng rng(113);
  auto lib = generator_library(GeneratorKind::Nielsen, n);
  Cochain d = coboundary(k0_cochain(n));
  CHECK(d.normalized());
  for (int trial = 0; trial < 5; ++trial) {
    GroupElement g = random_semidirect(rng, lib, n, 3, 2);
    CHECK(d({id_semi, g}).is_zero());
    CHECK(d({g, id_semi}).is_zero());
  }
}

TEST_CASE("crossed homomorphism on the semidirect product") {
  const int n = 3;
  GroupElement e1 = GroupElement::semidirect(w("x1", n), FreeGroupEndo::identity(n));
  CHECK(k0(e1) == Tensor::basis(n, 1));
  GroupElement e2 =
      GroupElement::semidirect(Word(n), generator_library(GeneratorKind::Nielsen, n)[0]);
  CHECK(k0(e2).is_zero());
  GroupElement e3 = GroupElement::semidirect(w("x1*x2*x1^-1", n), FreeGroupEndo::identity(n));
  CHECK(k0(e3) == Tensor::basis(n, 2));

  // Cocycle condition pointwise on random pairs.
  testutil::Rng rng(3);
  Cochain cocycle = k0_cochain(n);
  Cochain d = coboundary(cocycle);
  for (int trial = 0; trial < 20; ++trial) {
    auto args = sample_semidirect(rng, n, 2);
    CHECK(d(args).is_zero());
  }
}

TEST_CASE("coboundary of a zero-cochain") {
  const int n = 2;
  CoeffModule module{n, 0, 1};
  Tensor value = Tensor::basis(n, 1);
  Cochain constant(0, module, [value](const std::vector<GroupElement>&) {
    return HomTensor::from_tensor(value);
  });
  Cochain d = coboundary(constant);
  auto lib = generator_library(GeneratorKind::Nielsen, n);
  // (dc)(g) = g·c − c.
  GroupElement g = GroupElement::aut(lib[0]);
  HomTensor expected =
      HomTensor::from_tensor(value.apply_linear(lib[0].abelianized())) -
      HomTensor::from_tensor(value);
  CHECK(d({g}) == expected);
}

TEST_CASE("first Johnson cochain is a cocycle") {
  auto jc = calc(3, 4);
  Cochain tau1 = tau1_cochain(jc);
  Cochain d = coboundary(tau1);
  testutil::Rng rng(5);
  auto lib = generator_library(GeneratorKind::MagnusK, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GroupElement> args{
        GroupElement::aut(random_library_product(rng, lib, 2)),
        GroupElement::aut(random_library_product(rng, lib, 2))};
    CHECK(d(args).is_zero());
  }
}

TEST_CASE("square of the coboundary vanishes pointwise") {
  const int n = 2;
  auto jc = calc(n, 4);
  testutil::Rng rng(7);
  Cochain theta2 = theta2_tilde_cochain(jc);
  Cochain dd = coboundary(coboundary(theta2));
  for (int trial = 0; trial < 10; ++trial) {
    auto args = sample_semidirect(rng, n, 3);
    CHECK(dd(args).is_zero());
  }
}

TEST_CASE("cup products") {
  const int n = 2;
  auto jc = calc(n, 4);
  testutil::Rng rng(9);

  // Cup with the constant scalar 1 changes nothing.
  CoeffModule scalar_module{n, 0, 0};
  Cochain unit(0, scalar_module, [n](const std::vector<GroupElement>&) {
    return HomTensor::from_tensor(Tensor::scalar(n, Rational(1)));
  });
  Cochain k = k0_cochain(n);
  for (int trial = 0; trial < 10; ++trial) {
    auto args = sample_semidirect(rng, n, 1);
    CHECK(cup(unit, k)(args) == k(args));
    CHECK(cup(k, unit)(args) == k(args));
  }

  // Leibniz rule.
  Cochain theta2 = theta2_tilde_cochain(jc);
  Cochain lhs = coboundary(cup(k, theta2));
  Cochain rhs1 = cup(coboundary(k), theta2);
  Cochain rhs2 = cup(k, coboundary(theta2));
  for (int trial = 0; trial < 10; ++trial) {
    auto args = sample_semidirect(rng, n, 3);
    CHECK(lhs(args) == rhs1(args) - rhs2(args));
  }

  // k0 cup k0 evaluates to [γ1] ⊗ |φ1|[γ2].
  for (int trial = 0; trial < 10; ++trial) {
    auto args = sample_semidirect(rng, n, 2);
    Tensor expected = tensor_product(
        k0(args[0]), k0(args[1]).apply_linear(args[0].endo().abelianized()));
    CHECK(cup(k, k)(args) == HomTensor::from_tensor(expected));
  }
}

TEST_CASE("coboundary identity for the second component cochain") {
  for (int rank = 2; rank <= 4; ++rank) {
    testutil::Rng rng(100 + rank);
    MagnusExpansion theta = rank == 3 ? random_expansion(rng, rank, 4)
                                      : MagnusExpansion::standard(rank, 4);
    auto lib = generator_library(GeneratorKind::Nielsen, rank);
    std::vector<std::pair<GroupElement, GroupElement>> samples;
    for (int trial = 0; trial < 15; ++trial) {
      GroupElement g1 = trial % 3 == 0
                            ? GroupElement::semidirect(random_word(rng, rank, 3),
                                                       inner_automorphism(random_word(rng, rank, 3)))
                            : random_semidirect(rng, lib, rank, 3, 2);
      samples.emplace_back(g1, random_semidirect(rng, lib, rank, 3, 2));
    }
    samples.emplace_back(
        GroupElement::semidirect(Word(rank), FreeGroupEndo::identity(rank)),
        GroupElement::semidirect(Word(rank), FreeGroupEndo::identity(rank)));
    CHECK(check_eq49(theta, samples));
  }
}

TEST_CASE("dual-slot contraction") {
  const int n = 2;
  // l1 ⊗ X1 ⊗ X2 contracts to X2; l1 ⊗ X2 ⊗ X1 dies.
  HomTensor u(n, 1, 2);
  IndexWord in(1, 1);
  IndexWord x1x2;
  x1x2.push_back(1);
  x1x2.push_back(2);
  u.add_term(in, x1x2, Rational(1));
  CHECK(contraction_r(1, u) == Tensor::basis(n, 2));

  HomTensor v(n, 1, 2);
  IndexWord x2x1;
  x2x1.push_back(2);
  x2x1.push_back(1);
  v.add_term(in, x2x1, Rational(1));
  CHECK(contraction_r(1, v).is_zero());

  CHECK_THROWS_AS(contraction_r(2, v), std::invalid_argument);

  // Conjugation values contract to (1−n) times the generator.
  for (int rank = 2; rank <= 5; ++rank) {
    JohnsonCalculator jc(MagnusExpansion::standard(rank, 3));
    for (int i = 1; i <= rank; ++i) {
      HomTensor tau = jc.component(inner_automorphism(Word::generator(rank, i)), 1);
      CHECK(contraction_r(1, tau) == Rational(1 - rank) * Tensor::basis(rank, i));
    }
  }
}

TEST_CASE("slot composition") {
  const int n = 2;
  HomTensor u(n, 1, 2);
  IndexWord in(1, 1);
  IndexWord x1x2;
  x1x2.push_back(1);
  x1x2.push_back(2);
  u.add_term(in, x1x2, Rational(1));

  // Single factor: identity.
  CHECK(compose_sigma({u}) == u);

  // Two copies of l1⊗X1X2: X1 ↦ (u⊗1)(X1X2) = X1X2X2, X2 ↦ 0.
  HomTensor two = compose_sigma({u, u});
  IndexWord x1x2x2 = x1x2;
  x1x2x2.push_back(2);
  CHECK(two.image_of(1) == Tensor::monomial(n, x1x2x2, Rational(1)));
  CHECK(two.image_of(2).is_zero());

  CHECK(compose_sigma({HomTensor(n, 1, 2), u}).is_zero());
  CHECK_THROWS_AS(compose_sigma({}), std::invalid_argument);
}

TEST_CASE("parenthesization enumeration and signs") {
  CHECK(stasheff_vertices(0).size() == 1);
  CHECK(stasheff_vertices(1).size() == 1);
  CHECK(stasheff_vertices(2).size() == 2);
  CHECK(stasheff_vertices(3).size() == 5);
  CHECK(stasheff_vertices(4).size() == 14);
  CHECK(stasheff_vertices(8).size() == 1430);

  ParenWord leaf = ParenWord::leaf();
  CHECK(paren_sign(leaf) == 1);
  ParenWord single = ParenWord::pair(leaf, leaf);
  CHECK(single.to_string() == "(12)");
  CHECK(paren_sign(single) == 1);

  ParenWord left_comb = ParenWord::pair(single, leaf);
  CHECK(left_comb.to_string() == "((12)3)");
  CHECK(paren_sign(left_comb) == 1);

  ParenWord right_comb = ParenWord::pair(leaf, single);
  CHECK(right_comb.to_string() == "(1(23))");
  CHECK(paren_sign(right_comb) == -1);

  // Deep left combs stay positive.
  ParenWord comb = single;
  for (int p = 2; p <= 6; ++p) {
    comb = ParenWord::pair(comb, leaf);
    CHECK(paren_sign(comb) == 1);
  }
}

TEST_CASE("tree-shaped cochains") {
  const int n = 2;
  auto jc = calc(n, 4);
  testutil::Rng rng(13);
  auto lib = generator_library(GeneratorKind::MagnusK, n);

  // The single pair is the first Johnson cochain itself.
  ParenWord single = ParenWord::pair(ParenWord::leaf(), ParenWord::leaf());
  Cochain h1 = h_word_cochain(jc, single);
  CHECK(h1.arity() == 1);
  Cochain tau1 = tau1_cochain(jc);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<GroupElement> args{GroupElement::aut(random_library_product(rng, lib, 2))};
    CHECK(h1(args) == tau1(args));
  }

  // Left comb of size two: values ς2 applied to the cupped coordinates.
  ParenWord left_comb = ParenWord::pair(single, ParenWord::leaf());
  Cochain h2 = h_word_cochain(jc, left_comb);
  CHECK(h2.arity() == 2);
  for (int trial = 0; trial < 6; ++trial) {
    GroupElement a = GroupElement::aut(random_library_product(rng, lib, 2));
    GroupElement b = GroupElement::aut(random_library_product(rng, lib, 2));
    HomTensor direct = compose_sigma(
        {jc->component(a.endo(), 1),
         twist(a.endo().abelianized(), jc->component(b.endo(), 1))});
    CHECK(h2({a, b}) == direct);
  }

  // Arity always equals the number of internal nodes.
  for (const ParenWord& word : stasheff_vertices(3)) {
    CHECK(h_word_cochain(jc, word).arity() == 3);
  }
}
