#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magnus/matrix.hpp"
#include "magnus/word.hpp"

namespace magnus {

/// Endomorphism of the free group given by generator images, optionally
/// carrying a certified inverse (automorphism status is certified by the
/// attached inverse, never decided algorithmically).
class FreeGroupEndo {
 public:
  static FreeGroupEndo identity(int rank);
  FreeGroupEndo(int rank, std::vector<Word> images,
                std::optional<std::vector<Word>> inverse_images = std::nullopt,
                std::string label = {});

  int rank() const { return rank_; }
  const Word& image(int i) const;  // 1-based
  const std::string& label() const { return label_; }

  bool has_inverse() const { return inverse_images_.has_value(); }
  /// Swaps images and certified inverse; throws when no inverse is attached.
  FreeGroupEndo inverse() const;

  /// Substitutes the images and reduces.
  Word apply(const Word& gamma) const;

  /// (φψ)(γ) = φ(ψ(γ)); inverses composed in reverse when both are present.
  friend FreeGroupEndo compose(const FreeGroupEndo& phi, const FreeGroupEndo& psi);

  /// Column i = exponent sums of the image of x_i.
  GLMatrix abelianized() const;

  bool is_identity() const;

  /// True when an inverse is attached and both composites fix every
  /// generator.
  bool verify_inverse() const;

  bool operator==(const FreeGroupEndo& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
  }
  bool operator!=(const FreeGroupEndo& other) const { return !(*this == other); }

 private:
  int rank_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
  std::string label_;
};

/// δ ↦ γ δ γ^{-1}, with its inverse attached.
FreeGroupEndo inner_automorphism(const Word& gamma);

enum class GeneratorKind { MagnusK, Nielsen, Inner };
GeneratorKind generator_kind_from_string(const std::string& name);  // throws on unknown kind

/// Built-in generator families, each element shipped with its certified
/// inverse and a label:
///  - MagnusK: K[i,l] (x_i ↦ x_l x_i x_l^{-1}) and K[i,l,s]
///    (x_i ↦ x_i x_l x_s x_l^{-1} x_s^{-1}) for i ≠ l < s ≠ i;
///    count n(n-1) + n(n-1)(n-2)/2.
///  - Nielsen: transpositions P[i,j], inversions I[i], right/left
///    multiplications R[i,j]: x_i ↦ x_i x_j and L[i,j]: x_i ↦ x_j x_i.
///  - Inner: C[i] = conjugation by x_i.
std::vector<FreeGroupEndo> generator_library(GeneratorKind kind, int n);

}  // namespace magnus
