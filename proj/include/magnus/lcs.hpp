#pragma once

#include <string>

#include "magnus/expansion.hpp"
#include "magnus/hom_tensor.hpp"
#include "magnus/johnson.hpp"

namespace magnus {

/// Verdict of the filtration-depth probe. Depth is only certified up to
/// the truncation degree: deeper words report BeyondTruncation rather
/// than an unverifiable exact value.
struct LcsDepth {
  enum class Kind { Identity, Exact, BeyondTruncation };
  Kind kind = Kind::Identity;
  int value = 0;  // meaningful for Exact

  bool at_least(int m) const;
  std::string to_string(int truncation) const;  // "identity", "3", ">=N+1"
  friend bool operator==(const LcsDepth&, const LcsDepth&) = default;
};

/// Largest m ≤ N with θ(γ) ∈ 1 + (ideal of degree ≥ m); equals the
/// lower-central depth of γ whenever it is ≤ N.
LcsDepth lcs_degree(const MagnusExpansion& theta, const Word& gamma);

/// Left-bracketing map on a homogeneous tensor:
/// X_{i1}…X_{im} ↦ [...[[X_{i1},X_{i2}],X_{i3}]…,X_{im}].
Tensor dynkin_left_bracketing(const Tensor& t);

/// Dynkin criterion: a homogeneous degree-m tensor, m ≥ 1, is a Lie
/// element iff the left-bracketing map sends it to m times itself.
bool is_lie_element(const Tensor& t);

/// Degree-m tensor certified to satisfy the Dynkin criterion.
class LieTensor {
 public:
  /// Throws std::logic_error when the Dynkin check fails (which would
  /// indicate an implementation bug for tensors arising from group words).
  static LieTensor certify(Tensor t);
  const Tensor& tensor() const { return t_; }

 private:
  explicit LieTensor(Tensor t) : t_(std::move(t)) {}
  Tensor t_;
};

/// Degree-m part of θ(γ) for γ of depth ≥ m, certified Lie.
/// Precondition violation throws std::domain_error.
LieTensor graded_image(const MagnusExpansion& theta, const Word& gamma, int m);

/// φ acts trivially on the quotient by the (m+1)-st lower central
/// subgroup: every x_i^{-1} φ(x_i) has depth ≥ m+1. Requires m+1 ≤ N.
bool in_filtration_A(const MagnusExpansion& theta, const FreeGroupEndo& phi, int m);

/// Word-level Johnson homomorphism on the m-th filtration step:
/// x_i ↦ θ_{m+1}(x_i^{-1} φ(x_i)), images certified Lie.
/// Throws std::domain_error when φ is not in the m-th filtration step.
HomTensor johnson_hom(const MagnusExpansion& theta, const FreeGroupEndo& phi, int m);

}  // namespace magnus
