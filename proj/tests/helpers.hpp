#pragma once

#include "magnus/random_gen.hpp"
#include "magnus/series.hpp"
#include "magnus/word.hpp"

namespace testutil {

using namespace magnus;

inline TruncatedSeries one(int rank, int trunc) { return TruncatedSeries::one(rank, trunc); }

inline TruncatedSeries gen(int rank, int trunc, int i) {
  return TruncatedSeries::generator(rank, trunc, i);
}

/// Sparse random series with a nonzero constant term.
inline TruncatedSeries random_unit_series(Rng& rng, int rank, int trunc) {
  TruncatedSeries s = TruncatedSeries::scalar(rank, trunc, Rational(rng.coin() ? 1 : -2));
  for (int m = 1; m <= trunc; ++m) {
    Tensor t(rank, m);
    int terms = rng.uniform(0, 2);
    for (int k = 0; k < terms; ++k) {
      IndexWord idx;
      for (int s2 = 0; s2 < m; ++s2) idx.push_back(static_cast<unsigned char>(rng.uniform(1, rank)));
      t.add_term(idx, Rational(rng.uniform(-3, 3)));
    }
    s.set_component(t);
  }
  return s;
}

inline TruncatedSeries random_series(Rng& rng, int rank, int trunc) {
  TruncatedSeries s = random_unit_series(rng, rank, trunc);
  if (rng.coin()) {
    s -= TruncatedSeries::scalar(rank, trunc, s.constant_term());
  }
  return s;
}

inline Word w(const std::string& text, int rank) { return parse_word(text, rank); }

}  // namespace testutil
