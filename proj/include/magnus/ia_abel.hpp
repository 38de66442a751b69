#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magnus/endo.hpp"
#include "magnus/hom_tensor.hpp"

namespace magnus {

/// Basis of H*⊗Λ²H inside H*⊗H^{⊗2}: slots ℓ_i⊗(X_jX_k − X_kX_j) with
/// j < k, ordered lexicographically in (i, (j,k)).
class Lambda2Basis {
 public:
  explicit Lambda2Basis(int n);

  int rank() const { return n_; }
  int dim() const;  // n²(n−1)/2

  struct Slot {
    int i, j, k;  // j < k
  };
  Slot slot(int index) const;
  int index(int i, int j, int k) const;
  std::string describe(int index) const;  // "l1(X1X2-X2X1)"

  /// Coordinates of a map H → H^{⊗2} whose images lie in the embedded
  /// Λ²H (antisymmetric with zero diagonal); nullopt otherwise.
  std::optional<std::vector<Rational>> coordinates(const HomTensor& u) const;

  /// The element with the given coordinates.
  HomTensor element(const std::vector<Rational>& coordinates) const;

 private:
  int n_;
};

/// Integer coordinates in the Λ² basis.
using AbelCoordinates = std::vector<Integer>;

/// Rows = Magnus generators (library order), columns = Λ² basis slots;
/// entries computed through the first Johnson map of the standard
/// expansion. A signed permutation matrix for every n.
GLMatrix tau1_matrix(int n);

/// One letter of a word in the Magnus generators.
struct IAWordLetter {
  std::size_t generator_index;  // into generator_library(MagnusK, n)
  bool inverted;
};

/// Grammar: K[i,l] and K[i,l,s], optional ^-1, separated by "*".
std::vector<IAWordLetter> parse_ia_word(const std::string& text, int n);

/// Signed sum of generator rows for the parsed word, cross-checked
/// against the Johnson map of the composed automorphism; throws
/// std::logic_error if the two routes disagree.
AbelCoordinates abelianize_ia_word(const std::string& text, int n);

/// ι_*(Y): Z ↦ YZ − ZY, landing in H*⊗Λ²H ⊂ H*⊗H^{⊗2}.
HomTensor iota_star(const Tensor& y);

/// Coordinate matrix of ι_* on the basis (dim × n); full rank n.
std::vector<std::vector<Rational>> iota_star_matrix(int n);

}  // namespace magnus
