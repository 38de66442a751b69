#include <doctest.h>

#include "helpers.hpp"
#include "magnus/algebra_map.hpp"

using namespace magnus;
using testutil::gen;
using testutil::one;

namespace {

// U: X1 ↦ X1 + X1², other generators fixed.
AlgebraMap bump_map(int rank, int N) {
  std::vector<TruncatedSeries> images;
  for (int i = 1; i <= rank; ++i) images.push_back(gen(rank, N, i));
  images[0] += gen(rank, N, 1) * gen(rank, N, 1);
  return AlgebraMap::from_images(std::move(images));
}

Tensor mono(int rank, std::initializer_list<int> indices, int coeff) {
  IndexWord idx;
  for (int i : indices) idx.push_back(static_cast<unsigned char>(i));
  return Tensor::monomial(rank, idx, Rational(coeff));
}

}  // namespace

TEST_CASE("apply substitutes generator images") {
  const int n = 2, N = 3;
  AlgebraMap id = AlgebraMap::identity(n, N);
  testutil::Rng rng(3);
  TruncatedSeries z = testutil::random_series(rng, n, N);
  CHECK(id.apply(z) == z);

  AlgebraMap u = bump_map(n, N);
  TruncatedSeries x1x2 = gen(n, N, 1) * gen(n, N, 2);
  TruncatedSeries expected = x1x2 + gen(n, N, 1) * gen(n, N, 1) * gen(n, N, 2);
  CHECK(u.apply(x1x2) == expected);

  for (int trial = 0; trial < 15; ++trial) {
    TruncatedSeries a = testutil::random_series(rng, n, N);
    TruncatedSeries b = testutil::random_series(rng, n, N);
    CHECK(u.apply(a * b) == u.apply(a) * u.apply(b));
    CHECK(u.apply(a + b) == u.apply(a) + u.apply(b));
  }
}

TEST_CASE("composition pushes images through") {
  const int n = 2, N = 4;
  AlgebraMap u = bump_map(n, N);
  CHECK(compose(u, AlgebraMap::identity(n, N)) == u);
  CHECK(compose(AlgebraMap::identity(n, N), u) == u);

  // Hand-expanded: U(U(X1)) = (X1+X1²) + (X1+X1²)²
  //              = X1 + 2X1² + 2X1³ + X1⁴.
  AlgebraMap uu = compose(u, u);
  TruncatedSeries expected = gen(n, N, 1);
  expected += TruncatedSeries::from_tensor(N, mono(n, {1, 1}, 2));
  expected += TruncatedSeries::from_tensor(N, mono(n, {1, 1, 1}, 2));
  expected += TruncatedSeries::from_tensor(N, mono(n, {1, 1, 1, 1}, 1));
  CHECK(uu.image(1) == expected);
  CHECK(uu.image(2) == gen(n, N, 2));

  testutil::Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraMap a = random_ia_map(rng, 2, 4);
    AlgebraMap b = random_ia_map(rng, 2, 4);
    CHECK(compose(a, b).linear_part() == a.linear_part() * b.linear_part());
  }
}

TEST_CASE("linear part") {
  const int n = 2, N = 3;
  CHECK(AlgebraMap::identity(n, N).linear_part() == GLMatrix::identity(n));

  std::vector<TruncatedSeries> swap{gen(n, N, 2), gen(n, N, 1)};
  GLMatrix perm(2);
  perm.set(0, 1, Rational(1));
  perm.set(1, 0, Rational(1));
  CHECK(AlgebraMap::from_images(swap).linear_part() == perm);

  CHECK(bump_map(n, N).linear_part() == GLMatrix::identity(n));
}

TEST_CASE("filtered automorphism detection") {
  const int n = 2, N = 3;
  CHECK(AlgebraMap::identity(n, N).is_filtered_automorphism());

  std::vector<TruncatedSeries> unipotent{gen(n, N, 1) + gen(n, N, 2), gen(n, N, 2)};
  CHECK(AlgebraMap::from_images(unipotent).is_filtered_automorphism());

  std::vector<TruncatedSeries> singular{gen(n, N, 1) + gen(n, N, 2),
                                        gen(n, N, 1) + gen(n, N, 2)};
  AlgebraMap bad = AlgebraMap::from_images(singular);
  CHECK(!bad.is_filtered_automorphism());
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);

  // Images must sit inside the positive-degree ideal.
  CHECK_THROWS_AS(AlgebraMap::from_images({one(n, N) + gen(n, N, 1), gen(n, N, 2)}),
                  std::invalid_argument);
}

TEST_CASE("degree-by-degree inversion") {
  const int n = 2, N = 3;
  AlgebraMap u = bump_map(n, N);
  AlgebraMap v = u.inverse();
  // V(X1) = X1 - X1² + 2X1³ (solved by hand degree by degree).
  TruncatedSeries expected = gen(n, N, 1);
  expected += TruncatedSeries::from_tensor(N, mono(n, {1, 1}, -1));
  expected += TruncatedSeries::from_tensor(N, mono(n, {1, 1, 1}, 2));
  CHECK(v.image(1) == expected);
  CHECK(compose(u, v) == AlgebraMap::identity(n, N));
  CHECK(compose(v, u) == AlgebraMap::identity(n, N));

  CHECK(AlgebraMap::identity(n, N).inverse() == AlgebraMap::identity(n, N));

  // Pure linear maps invert through the matrix.
  GLMatrix a(2);
  a.set(0, 0, Rational(2));
  a.set(0, 1, Rational(1));
  a.set(1, 0, Rational(1));
  a.set(1, 1, Rational(1));
  AlgebraMap lin = AlgebraMap::linear(a, N);
  CHECK(lin.inverse() == AlgebraMap::linear(a.inverse(), N));
}

TEST_CASE("inversion on random maps, unipotent and general linear part") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int rank = 2 + trial % 2;
    int N = 4 + trial % 2;
    AlgebraMap u = random_ia_map(rng, rank, N);
    if (trial % 3 == 0) {
      // Mix in a nontrivial invertible linear part.
      GLMatrix a = GLMatrix::identity(rank);
      a.set(0, rank - 1, Rational(rng.uniform(1, 2)));
      a.set(rank - 1, rank - 1, Rational(-1));
      u = compose(u, AlgebraMap::linear(a, N));
    }
    AlgebraMap v = u.inverse();
    CHECK(compose(u, v) == AlgebraMap::identity(rank, N));
    CHECK(compose(v, u) == AlgebraMap::identity(rank, N));
  }
}

TEST_CASE("solutions inherit vanishing low components") {
  // If the target map moves generators only in degrees >= p, so does the
  // inverse's correction.
  const int n = 2, N = 5, p = 3;
  std::vector<TruncatedSeries> images;
  for (int i = 1; i <= n; ++i) {
    TruncatedSeries s = gen(n, N, i);
    Tensor deep(n, p + 1);
    IndexWord idx;
    for (int k = 0; k < p + 1; ++k) idx.push_back(static_cast<unsigned char>(1 + (k + i) % n));
    deep.add_term(idx, Rational(2));
    s.set_component(deep);
    images.push_back(std::move(s));
  }
  AlgebraMap u = AlgebraMap::from_images(images);
  AlgebraMap v = u.inverse();
  for (int i = 1; i <= n; ++i) {
    for (int m = 2; m <= p; ++m) {
      CHECK(v.image(i).component(m).is_zero());
    }
  }
}

TEST_CASE("IA coordinate round trip") {
  const int n = 2, N = 4;
  IACoordinates zero = to_ia_coordinates(AlgebraMap::identity(n, N));
  for (const HomTensor& up : zero.u) CHECK(up.is_zero());
  CHECK(from_ia_coordinates(zero) == AlgebraMap::identity(n, N));

  // X1 ↦ X1 + X2X2 reads off as a single degree-1 coordinate.
  std::vector<TruncatedSeries> images{gen(n, N, 1) + gen(n, N, 2) * gen(n, N, 2),
                                      gen(n, N, 2)};
  AlgebraMap u = AlgebraMap::from_images(images);
  IACoordinates c = to_ia_coordinates(u);
  CHECK(c.component(1).image_of(1) == mono(n, {2, 2}, 1));
  CHECK(c.component(1).image_of(2).is_zero());
  CHECK(c.component(2).is_zero());
  CHECK(from_ia_coordinates(c) == u);

  testutil::Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraMap m = random_ia_map(rng, 2 + trial % 2, 4);
    CHECK(from_ia_coordinates(to_ia_coordinates(m)) == m);
  }

  GLMatrix perm(2);
  perm.set(0, 1, Rational(1));
  perm.set(1, 0, Rational(1));
  CHECK_THROWS_AS(to_ia_coordinates(AlgebraMap::linear(perm, N)), std::domain_error);
}

TEST_CASE("low-degree composition closed form") {
  const int n = 2, N = 4;
  // u = v = 0 gives w = 0 and C = AB.
  IACoordinates zero = to_ia_coordinates(AlgebraMap::identity(n, N));
  GLMatrix a = GLMatrix::identity(n);
  a.set(0, 1, Rational(1));
  GLMatrix b = GLMatrix::identity(n);
  b.set(1, 0, Rational(-1));
  auto [w1, w2, c] = compose_ia_low(zero, a, zero, b);
  CHECK(w1.is_zero());
  CHECK(w2.is_zero());
  CHECK(c == a * b);

  // A = B = id, u1 = l1⊗X1X2, v1 = l2⊗X2X1:
  // w1 = u1 + v1, w2(X2) = X2X1X2, w2(X1) = 0 (hand expansion).
  IACoordinates u = zero;
  IACoordinates v = zero;
  {
    HomTensor u1(n, 1, 2);
    IndexWord in1(1, 1);
    IndexWord x1x2;
    x1x2.push_back(1);
    x1x2.push_back(2);
    u1.add_term(in1, x1x2, Rational(1));
    u.u[0] = u1;
    HomTensor v1(n, 1, 2);
    IndexWord in2(1, 2);
    IndexWord x2x1;
    x2x1.push_back(2);
    x2x1.push_back(1);
    v1.add_term(in2, x2x1, Rational(1));
    v.u[0] = v1;
  }
  auto [w1b, w2b, cb] = compose_ia_low(u, GLMatrix::identity(n), v, GLMatrix::identity(n));
  CHECK(w1b == u.u[0] + v.u[0]);
  CHECK(w2b.image_of(1).is_zero());
  CHECK(w2b.image_of(2) == mono(n, {2, 1, 2}, 1));
  CHECK(cb == GLMatrix::identity(n));
}

TEST_CASE("closed form agrees with generic composition") {
  testutil::Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    int rank = 2 + trial % 2;
    int N = 4;
    AlgebraMap mu = random_ia_map(rng, rank, N);
    AlgebraMap mv = random_ia_map(rng, rank, N);
    GLMatrix a = GLMatrix::identity(rank);
    GLMatrix b = GLMatrix::identity(rank);
    if (trial % 2 == 0) {
      a.set(0, rank - 1, Rational(rng.uniform(-2, 2)));
      a.set(rank - 1, 0, Rational(trial % 4 == 0 ? 1 : 0));
      if (a.det() == 0) a = GLMatrix::identity(rank);
      b.set(rank - 1, rank - 1, Rational(-1));
    }
    AlgebraMap full = compose(compose(mu, AlgebraMap::linear(a, N)),
                              compose(mv, AlgebraMap::linear(b, N)));
    // Split the composite into its IA part and linear part.
    GLMatrix c_expected = a * b;
    AlgebraMap ia_part = compose(full, AlgebraMap::linear(c_expected.inverse(), N));
    IACoordinates w_full = to_ia_coordinates(ia_part);

    auto [w1, w2, c] = compose_ia_low(to_ia_coordinates(mu), a, to_ia_coordinates(mv), b);
    CHECK(c == c_expected);
    CHECK(w1 == w_full.component(1));
    CHECK(w2 == w_full.component(2));
  }
}
