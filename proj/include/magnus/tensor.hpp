#pragma once

#include <map>
#include <string>
#include <vector>

#include "magnus/matrix.hpp"
#include "magnus/rational.hpp"

namespace magnus {

/// Index sequence of a tensor monomial: 1-based generator indices, one per
/// slot. Lexicographic ordering of these keys is the canonical term order.
using IndexWord = std::basic_string<unsigned char>;

/// "1,2,1" form used by the JSON schema; empty string for degree 0.
std::string index_word_key(const IndexWord& w);
IndexWord parse_index_key(const std::string& key, int rank);

inline constexpr int kMaxRank = 64;

/// Homogeneous degree-m component of the tensor algebra on n generators,
/// stored sparsely. Zero coefficients are never kept.
class Tensor {
 public:
  Tensor(int rank, int degree);

  static Tensor scalar(int rank, const Rational& value);  // degree 0
  static Tensor basis(int rank, int i);                   // X_i
  static Tensor monomial(int rank, const IndexWord& idx, const Rational& coeff);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<IndexWord, Rational>& terms() const { return terms_; }

  /// Coefficient of a monomial (zero when absent).
  Rational coeff(const IndexWord& idx) const;

  /// Accumulates into a term, dropping it when the sum vanishes.
  void add_term(const IndexWord& idx, const Rational& coeff);

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Rational& scalar);
  Tensor operator-() const;

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }

  bool operator==(const Tensor& other) const;
  bool operator!=(const Tensor& other) const { return !(*this == other); }

  /// Concatenation product; degrees add.
  friend Tensor tensor_product(const Tensor& a, const Tensor& b);

  /// Applies A slot-wise: X_{i1}…X_{im} ↦ (A X_{i1})…(A X_{im}).
  Tensor apply_linear(const GLMatrix& a) const;

  /// Plain-text rendering such as "2*X1X2 - X2X1" (for diagnostics).
  std::string to_string() const;

 private:
  int rank_;
  int degree_;
  std::map<IndexWord, Rational> terms_;

  void check_key(const IndexWord& idx) const;
};

}  // namespace magnus
