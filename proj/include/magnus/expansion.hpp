#pragma once

#include <vector>

#include "magnus/algebra_map.hpp"
#include "magnus/series.hpp"
#include "magnus/word.hpp"

namespace magnus {

/// Group homomorphism of the free group into the units 1 + (positive ideal)
/// of the truncated tensor-series algebra, with θ(x_i) = 1 + X_i + ξ_i for
/// offsets ξ_i supported in degrees ≥ 2. ξ = 0 is the standard expansion.
class MagnusExpansion {
 public:
  static MagnusExpansion standard(int rank, int truncation);
  /// Builds θ from the offsets ξ_i; each must vanish in degrees 0 and 1.
  static MagnusExpansion from_offsets(std::vector<TruncatedSeries> xi);

  int rank() const { return rank_; }
  int truncation() const { return trunc_; }

  const TruncatedSeries& generator_series(int i) const;      // θ(x_i)
  const TruncatedSeries& generator_series_inv(int i) const;  // θ(x_i)^{-1}

  /// ξ_i = θ(x_i) - 1 - X_i.
  TruncatedSeries offset(int i) const;
  bool is_standard() const;

  /// Product over the letters, inverse letters through the cached
  /// generator inverses.
  TruncatedSeries evaluate(const Word& gamma) const;

  /// Degree-m part of evaluate().
  Tensor component(const Word& gamma, int m) const;

  /// Checks the generator-level invariants: constant term 1 and degree-1
  /// part exactly X_i.
  bool validate() const;

  /// The algebra map X_i ↦ θ(x_i) - 1. Always has trivial linear part; for
  /// the standard expansion it is the identity map.
  AlgebraMap theta_kappa() const;

  bool operator==(const MagnusExpansion& other) const;
  bool operator!=(const MagnusExpansion& other) const { return !(*this == other); }

 private:
  MagnusExpansion(int rank, int truncation) : rank_(rank), trunc_(truncation) {}

  int rank_;
  int trunc_;
  std::vector<TruncatedSeries> theta_;
  std::vector<TruncatedSeries> theta_inv_;
};

/// The unique IA algebra map carrying `from` to `to`: apply_map(U, from(γ))
/// equals to(γ) for every word γ.
AlgebraMap transition(const MagnusExpansion& from, const MagnusExpansion& to);

}  // namespace magnus
