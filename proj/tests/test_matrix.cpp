#include <doctest.h>

#include "magnus/matrix.hpp"
#include "magnus/random_gen.hpp"

using namespace magnus;

namespace {

GLMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  GLMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      m.set(i, j, Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(GLMatrix::identity(4).det() == 1);
  GLMatrix m = from_rows({{2, 1}, {1, 1}});
  CHECK(m.det() == 1);
  CHECK(from_rows({{1, 2}, {2, 4}}).det() == 0);
  CHECK(from_rows({{0, 1}, {1, 0}}).det() == -1);
  // 3x3 with a zero pivot forcing a swap.
  CHECK(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}).det() == -1);
  GLMatrix q(2);
  q.set(0, 0, Rational(1, 2));
  q.set(1, 1, Rational(2, 3));
  CHECK(q.det() == Rational(1, 3));
}

TEST_CASE("inverse round trips") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    GLMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.set(i, j, Rational(rng.uniform(-3, 3)));
    }
    if (m.det() == 0) continue;
    CHECK(m * m.inverse() == GLMatrix::identity(n));
    CHECK(m.inverse() * m == GLMatrix::identity(n));
  }
  // Unimodular path keeps integer entries.
  GLMatrix u = from_rows({{2, 1}, {1, 1}});
  CHECK(u.is_unimodular());
  CHECK(u.inverse().is_integral());
  CHECK(u.inverse() == from_rows({{1, -1}, {-1, 2}}));
  CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), std::domain_error);
}

TEST_CASE("predicates") {
  CHECK(from_rows({{0, -1}, {1, 0}}).is_signed_permutation());
  CHECK(!from_rows({{1, 1}, {0, 1}}).is_signed_permutation());
  CHECK(!from_rows({{0, 2}, {1, 0}}).is_signed_permutation());
  GLMatrix q(2);
  q.set(0, 0, Rational(1, 2));
  CHECK(!q.is_integral());
  CHECK(!q.is_unimodular());
  CHECK(from_rows({{1, 5}, {0, -1}}).is_unimodular());
}

TEST_CASE("rank of rectangular systems") {
  CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
  CHECK(matrix_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(matrix_rank({{Rational(0), Rational(0)}}) == 0);
  CHECK(matrix_rank({{Rational(1), Rational(2), Rational(3)},
                     {Rational(0), Rational(1), Rational(1)}}) == 2);
}
