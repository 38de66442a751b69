#pragma once

#include <map>
#include <utility>
#include <vector>

#include "magnus/tensor.hpp"

namespace magnus {

/// Element of Hom(H^{⊗in}, H^{⊗out}) = (H*)^{⊗in} ⊗ H^{⊗out}, stored as a
/// sparse map (input monomial, output monomial) → coefficient. Covers the
/// coordinate maps H → H^{⊗p+1}, covectors ℓ_i, slot maps like u⊗1, and the
/// coefficient modules of group cochains. Dual slots carry the inverse
/// action, so the GL twist is A^{⊗out} ∘ u ∘ (A^{-1})^{⊗in}.
class HomTensor {
 public:
  HomTensor(int rank, int in_degree, int out_degree);

  static HomTensor identity(int rank, int slots);         // 1 on H^{⊗slots}
  static HomTensor covector(int rank, int i);             // ℓ_i
  static HomTensor from_tensor(const Tensor& t);          // in_degree 0
  static HomTensor from_images(const std::vector<Tensor>& images);  // in_degree 1

  int rank() const { return rank_; }
  int in_degree() const { return in_; }
  int out_degree() const { return out_; }
  bool is_zero() const { return terms_.empty(); }

  using Key = std::pair<IndexWord, IndexWord>;
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add_term(const IndexWord& in, const IndexWord& out, const Rational& coeff);
  Rational coeff(const IndexWord& in, const IndexWord& out) const;

  /// Image of X_i (requires in_degree 1).
  Tensor image_of(int i) const;
  /// The underlying tensor (requires in_degree 0).
  Tensor to_tensor() const;

  Tensor apply(const Tensor& t) const;

  HomTensor& operator+=(const HomTensor& other);
  HomTensor& operator-=(const HomTensor& other);
  HomTensor& operator*=(const Rational& scalar);
  HomTensor operator-() const;
  friend HomTensor operator+(HomTensor a, const HomTensor& b) { return a += b; }
  friend HomTensor operator-(HomTensor a, const HomTensor& b) { return a -= b; }
  friend HomTensor operator*(const Rational& s, HomTensor a) { return a *= s; }

  bool operator==(const HomTensor& other) const;
  bool operator!=(const HomTensor& other) const { return !(*this == other); }

  /// f ∘ g (apply g first); g's out_degree must equal f's in_degree.
  friend HomTensor compose(const HomTensor& f, const HomTensor& g);

  /// f ⊗ g acting slot-wise on H^{⊗(kf+kg)}.
  friend HomTensor hom_tensor_product(const HomTensor& f, const HomTensor& g);

  /// Twisted action A·u = A^{⊗out} ∘ u ∘ (A^{-1})^{⊗in}.
  HomTensor gl_twist(const GLMatrix& a, const GLMatrix& a_inv) const;

  std::string to_string() const;

 private:
  int rank_;
  int in_;
  int out_;
  std::map<Key, Rational> terms_;
};

/// Contracts the dual slot into the first output slot:
/// f ⊗ v0 ⊗ v1 ⊗ … ⊗ vp ↦ f(v0) v1 ⊗ … ⊗ vp. Requires in_degree 1 and
/// out_degree p+1 ≥ 1; the result lives in H^{⊗p}.
Tensor contract_first(const HomTensor& u);

}  // namespace magnus
