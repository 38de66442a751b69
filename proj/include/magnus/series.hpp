#pragma once

#include <optional>
#include <vector>

#include "magnus/tensor.hpp"

namespace magnus {

/// Element of the tensor-series algebra on n generators truncated at
/// degree N: one homogeneous component per degree 0..N. Arithmetic never
/// references degrees beyond N.
class TruncatedSeries {
 public:
  TruncatedSeries(int rank, int truncation);  // zero series

  static TruncatedSeries scalar(int rank, int truncation, const Rational& c);
  static TruncatedSeries one(int rank, int truncation);
  static TruncatedSeries generator(int rank, int truncation, int i);  // X_i
  static TruncatedSeries from_tensor(int truncation, const Tensor& t);

  int rank() const { return rank_; }
  int truncation() const { return trunc_; }

  const Tensor& component(int degree) const;
  void set_component(const Tensor& t);

  bool is_zero() const;
  /// Smallest degree with a nonzero component; nullopt for the zero series.
  std::optional<int> lowest_degree() const;

  /// Degree-0 coefficient.
  Rational constant_term() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  /// Concatenation product, degrees above the truncation discarded.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Two-sided inverse up to the truncation degree. Requires a nonzero
  /// scalar constant term; throws std::domain_error otherwise.
  TruncatedSeries invert() const;

  TruncatedSeries apply_linear(const GLMatrix& a) const;

  bool operator==(const TruncatedSeries& other) const;
  bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  int rank_;
  int trunc_;
  std::vector<Tensor> comp_;

  void check_compatible(const TruncatedSeries& other) const;
};

}  // namespace magnus
