#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "magnus/endo.hpp"
#include "magnus/expansion.hpp"

namespace magnus {

/// Failure report for an identity check: which identity, on which inputs,
/// and both evaluated sides, rendered as text.
struct CheckReport {
  std::string identity;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

/// Computes Johnson maps for one fixed expansion; the inverse of the
/// expansion's kappa-composite is materialized once and reused.
class JohnsonCalculator {
 public:
  explicit JohnsonCalculator(MagnusExpansion theta);

  const MagnusExpansion& expansion() const { return theta_; }

  /// The unique IA algebra map U with θ(φ(γ)) = (U ∘ |φ|)(θ(γ)). Requires
  /// an invertible abelianized matrix; throws std::domain_error otherwise.
  AlgebraMap total(const FreeGroupEndo& phi) const;

  /// Degree-p coordinate of total(φ): a map H → H^{⊗(p+1)}.
  HomTensor component(const FreeGroupEndo& phi, int p) const;

 private:
  MagnusExpansion theta_;
  AlgebraMap theta_kappa_inv_;

  // Memo of computed maps keyed by the generator images. Bounded; purely
  // an evaluation cache, so sharing across threads stays safe.
  struct Cache {
    std::mutex mutex;
    std::map<std::string, AlgebraMap> entries;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

AlgebraMap total_johnson(const MagnusExpansion& theta, const FreeGroupEndo& phi);
HomTensor johnson_p(const MagnusExpansion& theta, const FreeGroupEndo& phi, int p);

/// Degree-(p+1) part of a ↦ θ(γ) a θ(γ)^{-1}, the closed form for the
/// Johnson map of the conjugation by γ.
HomTensor inner_johnson(const MagnusExpansion& theta, const Word& gamma, int p);

/// τ1(φψ) = τ1(φ) + |φ|·τ1(ψ), with |φ|·u = |φ|^{⊗2} ∘ u ∘ |φ|^{-1}.
bool check_cocycle_tau1(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                        const FreeGroupEndo& psi, CheckReport* report = nullptr);

/// τ2(φψ) = τ2(φ) + (τ1(φ)⊗1 + 1⊗τ1(φ))∘|φ|·τ1(ψ) + |φ|·τ2(ψ).
bool check_tau2_relation(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                         const FreeGroupEndo& psi, CheckReport* report = nullptr);

/// Full composition law at the truncation:
/// total(φψ) = total(φ) ∘ |φ| ∘ total(ψ) ∘ |φ|^{-1} as algebra maps.
bool check_cocycle_total(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                         const FreeGroupEndo& psi, CheckReport* report = nullptr);

/// Defining property on one word: θ(φ(γ)) = (total(φ) ∘ |φ|)(θ(γ)).
bool check_defining_property(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                             const Word& gamma, CheckReport* report = nullptr);

/// τ1(φ)|φ|[γ] = θ2(φ(γ)) − |φ|^{⊗2}θ2(γ), and the companion identity
/// τ1(φ)[γ] = θ2(γ) − |φ|^{⊗2}θ2(φ^{-1}(γ)). The companion needs φ's
/// certified inverse; throws std::domain_error when missing.
bool check_lemma22(const JohnsonCalculator& calc, const FreeGroupEndo& phi, const Word& gamma,
                   CheckReport* report = nullptr);

}  // namespace magnus
