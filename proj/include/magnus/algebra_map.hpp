#pragma once

#include <tuple>
#include <vector>

#include "magnus/hom_tensor.hpp"
#include "magnus/series.hpp"

namespace magnus {

/// Filtered algebra endomorphism of the truncated tensor-series algebra,
/// given by the images of the generators. Every image lies in the
/// positive-degree ideal, so substitution preserves the filtration.
class AlgebraMap {
 public:
  static AlgebraMap identity(int rank, int truncation);
  static AlgebraMap from_images(std::vector<TruncatedSeries> images);
  /// Pure linear map X_i ↦ Σ_j a_{ji} X_j.
  static AlgebraMap linear(const GLMatrix& a, int truncation);

  int rank() const { return rank_; }
  int truncation() const { return trunc_; }
  const TruncatedSeries& image(int i) const;  // image of X_i, 1-based

  /// Ring-homomorphic substitution X_i ↦ image(i), truncated.
  TruncatedSeries apply(const TruncatedSeries& z) const;

  /// Generator images of v pushed through u: (u∘v)(z) = u(v(z)).
  friend AlgebraMap compose(const AlgebraMap& u, const AlgebraMap& v);

  /// Matrix of the degree-1 coefficients of the images.
  GLMatrix linear_part() const;

  /// Images lie in the positive ideal by construction, so this reduces to
  /// rational invertibility of the linear part. Integral unimodularity is
  /// reported separately by linear_part().is_unimodular().
  bool is_filtered_automorphism() const;

  /// Linear part is the identity.
  bool is_ia() const;

  /// Degree-by-degree inverse: v with compose(u,v) = compose(v,u) = id up
  /// to the truncation. Throws std::domain_error on a singular linear part.
  AlgebraMap inverse() const;

  bool operator==(const AlgebraMap& other) const;
  bool operator!=(const AlgebraMap& other) const { return !(*this == other); }

 private:
  AlgebraMap(int rank, int truncation) : rank_(rank), trunc_(truncation) {}

  int rank_;
  int trunc_;
  std::vector<TruncatedSeries> images_;
};

/// Coordinates of an IA algebra map: for p = 1..N-1 the component
/// u_p: H → H^{⊗(p+1)} read off the generator images.
struct IACoordinates {
  int rank = 0;
  int truncation = 0;
  std::vector<HomTensor> u;  // u[p-1] has out_degree p+1

  const HomTensor& component(int p) const;  // 1-based
  bool operator==(const IACoordinates& other) const;
};

/// Requires a trivial linear part; round-trips exactly with
/// from_ia_coordinates.
IACoordinates to_ia_coordinates(const AlgebraMap& u);
AlgebraMap from_ia_coordinates(const IACoordinates& c);

/// Twisted action A·v_p = A^{⊗(p+1)} ∘ v_p ∘ A^{-1} used throughout.
HomTensor twist(const GLMatrix& a, const HomTensor& v);

/// Closed-form low-degree composition law for ((u,A))((v,B)):
/// w1 = u1 + A·v1, w2 = u2 + (u1⊗1 + 1⊗u1)∘(A·v1) + A·v2, C = AB.
/// Requires coordinates present up to p = 2.
std::tuple<HomTensor, HomTensor, GLMatrix> compose_ia_low(const IACoordinates& u,
                                                          const GLMatrix& a,
                                                          const IACoordinates& v,
                                                          const GLMatrix& b);

}  // namespace magnus
