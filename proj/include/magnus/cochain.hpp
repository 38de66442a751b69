#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "magnus/johnson.hpp"

namespace magnus {

/// Element of either the automorphism group or the semidirect product
/// (free group) ⋊ (automorphism group), with the product
/// (γ1,φ1)(γ2,φ2) = (γ1 φ1(γ2), φ1 φ2). The action on tensor coefficient
/// modules factors through the abelianized automorphism.
class GroupElement {
 public:
  enum class Kind { Aut, Semidirect };

  static GroupElement aut(FreeGroupEndo phi);
  static GroupElement semidirect(Word gamma, FreeGroupEndo phi);

  Kind kind() const { return kind_; }
  int rank() const { return endo_.rank(); }
  const Word& word() const;  // throws for plain Aut elements
  const FreeGroupEndo& endo() const { return endo_; }

  bool is_identity() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  /// The abelianized automorphism part.
  GLMatrix action_matrix() const { return endo_.abelianized(); }

  std::string describe() const;

 private:
  GroupElement(Kind kind, Word gamma, FreeGroupEndo phi)
      : kind_(kind), word_(std::move(gamma)), endo_(std::move(phi)) {}

  Kind kind_;
  Word word_;
  FreeGroupEndo endo_;
};

/// Coefficient module descriptor: (H*)^{⊗in} ⊗ H^{⊗out} with the twisted
/// GL action on values.
struct CoeffModule {
  int rank = 0;
  int in_degree = 0;
  int out_degree = 0;

  HomTensor zero() const { return HomTensor(rank, in_degree, out_degree); }
  HomTensor act(const GroupElement& g, const HomTensor& value) const;
  friend bool operator==(const CoeffModule&, const CoeffModule&) = default;
};

/// Normalized group cochain: an arity-p evaluator over tuples of group
/// elements with values in a tensor coefficient module. Cochains are
/// evaluators, not tables; the groups are infinite.
class Cochain {
 public:
  using Evaluator = std::function<HomTensor(const std::vector<GroupElement>&)>;

  Cochain(int arity, CoeffModule module, Evaluator evaluator, bool normalized = true);

  int arity() const { return arity_; }
  const CoeffModule& module() const { return module_; }
  bool normalized() const { return normalized_; }

  HomTensor operator()(const std::vector<GroupElement>& args) const;

 private:
  int arity_;
  CoeffModule module_;
  Evaluator eval_;
  bool normalized_;
};

/// (df)(g1,…,g_{p+1}) = g1·f(g2,…) + Σ_i (-1)^i f(…, g_i g_{i+1}, …)
///                      + (-1)^{p+1} f(g1,…,g_p).
Cochain coboundary(const Cochain& f);

/// Alexander–Whitney product: (f∪g)(g1..g_{p+q}) =
/// f(g1..g_p) ⊗ (g1…g_p)·g(g_{p+1}..g_{p+q}).
Cochain cup(const Cochain& f, const Cochain& g);

/// Cup followed by composing the values: f(..) ∘ (g1…g_p)·g(..).
/// Requires f's in-degree to equal g's out-degree.
Cochain cup_compose(const Cochain& f, const Cochain& g);

/// The crossed homomorphism (γ,φ) ↦ [γ] on the semidirect product.
Tensor k0(const GroupElement& e);
Cochain k0_cochain(int rank);

/// First Johnson map as a 1-cochain; reads only the automorphism part, so
/// it evaluates on both groups (pullback along the projection).
Cochain tau1_cochain(std::shared_ptr<const JohnsonCalculator> calc);
Cochain tau2_cochain(std::shared_ptr<const JohnsonCalculator> calc);

/// 1-cochain (γ,φ) ↦ θ2(γ) on the semidirect product.
Cochain theta2_tilde_cochain(std::shared_ptr<const JohnsonCalculator> calc);

/// Trace over the dual slot: f ⊗ v0 ⊗ … ⊗ vp ↦ f(v0) v1 ⊗ … ⊗ vp.
/// p is redundant but validated against the value's shape.
Tensor contraction_r(int p, const HomTensor& u);

/// ς_p(u1 ⊗ … ⊗ u_p) = (u1⊗1^{p-1}) ∘ … ∘ (u_{p-1}⊗1) ∘ u_p for maps
/// H → H^{⊗2}; ς_1 is the identity.
HomTensor compose_sigma(const std::vector<HomTensor>& factors);

/// dθ̃2 = -(τ1∘k0 + k0⊗k0) on sampled pairs of semidirect elements.
bool check_eq49(const MagnusExpansion& theta,
                const std::vector<std::pair<GroupElement, GroupElement>>& samples,
                CheckReport* report = nullptr);

/// Full binary tree on p+1 leaves: one maximal parenthesization of the
/// word 1 2 … (p+1). Immutable; subtrees are shared.
class ParenWord {
 public:
  static ParenWord leaf();
  static ParenWord pair(ParenWord left, ParenWord right);

  bool is_leaf() const { return !left_; }
  int size() const { return size_; }  // internal nodes
  const ParenWord& left() const;
  const ParenWord& right() const;

  std::string to_string() const;  // "((12)3)"
  bool operator==(const ParenWord& other) const;

 private:
  ParenWord() : size_(0) {}
  std::shared_ptr<const ParenWord> left_;
  std::shared_ptr<const ParenWord> right_;
  int size_;
};

/// All parenthesizations with p internal nodes, enumerated through the
/// splitting recursion; the count is the p-th Catalan number.
std::vector<ParenWord> stasheff_vertices(int p);

/// sgn(leaf) = sgn(single pair) = +1,
/// sgn((w1,w2)) = (-1)^{|w2|} sgn(w1) sgn(w2).
int paren_sign(const ParenWord& w);

/// Arity-|w| cochain built by cup-and-compose along the tree shape, with
/// the first Johnson map at the internal nodes. For the left comb this is
/// ς_p of p cupped copies.
Cochain h_word_cochain(std::shared_ptr<const JohnsonCalculator> calc, const ParenWord& w);

}  // namespace magnus
