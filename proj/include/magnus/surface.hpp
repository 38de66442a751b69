#pragma once

#include "magnus/expansion.hpp"
#include "magnus/hom_tensor.hpp"
#include "magnus/johnson.hpp"

namespace magnus {

/// Genus-g specialization: rank 2g with the symplectic basis
/// X_1..X_g, X_{g+1}..X_{2g}, intersection pairing X_i·X_{g+j} = δ_{ij},
/// and the boundary word w_0 = Π x_i x_{g+i} x_i^{-1} x_{g+i}^{-1}.
class SurfaceContext {
 public:
  explicit SurfaceContext(int genus);

  int genus() const { return g_; }
  int rank() const { return 2 * g_; }

  /// I = Σ_i (X_i⊗X_{g+i} − X_{g+i}⊗X_i).
  Tensor intersection_form() const;

  Word boundary_word() const;

  /// Bilinear intersection pairing of two degree-1 tensors.
  Rational mu(const Tensor& a, const Tensor& b) const;

  /// ℓ ↦ (1_H⊗ℓ)(I); sends ξ_{g+i} to X_i and ξ_i to −X_{g+i}.
  Tensor poincare_dual(const HomTensor& ell) const;

  /// Y ↦ Y·(−), the inverse duality.
  HomTensor poincare_dual_inv(const Tensor& y) const;

 private:
  int g_;
};

/// θ2(w0) equals the intersection form (any expansion of rank 2g).
bool theta2_w0_check(const MagnusExpansion& theta, CheckReport* report = nullptr);

/// The integer c with θ2(δ) = −c·I. Scope certificate: [δ] = 0 and θ2(δ)
/// an integer multiple of I; outside it throws Nu0ScopeError. The
/// certificate is necessary at finite truncation, not claimed sufficient
/// for membership in the boundary-normal subgroup.
class Nu0ScopeError : public std::domain_error {
 public:
  explicit Nu0ScopeError(const std::string& message)
      : std::domain_error("not in scope of nu0: " + message) {}
};
Integer nu0(const SurfaceContext& ctx, const Word& delta, const MagnusExpansion& theta);
Integer nu0(const SurfaceContext& ctx, const Word& delta);  // standard expansion, N = 2

/// Degree-1 Johnson value of the boundary conjugation vanishes, and the
/// degree-2 value sends every basis vector a to I·a − a·I.
bool tau2_boundary_check(const MagnusExpansion& theta, int genus, CheckReport* report = nullptr);

}  // namespace magnus
