#pragma once

#include <vector>

#include "magnus/rational.hpp"

namespace magnus {

/// Dense n×n matrix with exact rational entries. Used for the induced maps
/// on the degree-one part of the tensor algebra and for abelianized
/// free-group endomorphisms (which are integral; integrality and
/// unimodularity are checked where callers need them).
class GLMatrix {
 public:
  explicit GLMatrix(int n);
  static GLMatrix identity(int n);

  int size() const { return n_; }
  const Rational& at(int row, int col) const;
  void set(int row, int col, const Rational& value);

  bool operator==(const GLMatrix& other) const;
  bool operator!=(const GLMatrix& other) const { return !(*this == other); }

  GLMatrix operator*(const GLMatrix& other) const;

  /// Column of the image of the j-th basis vector.
  std::vector<Rational> column(int col) const;

  bool is_identity() const;
  bool is_integral() const;
  bool is_invertible() const { return det() != 0; }
  /// Integral with determinant ±1.
  bool is_unimodular() const;
  /// Exactly one entry per row and column, each ±1.
  bool is_signed_permutation() const;

  /// Exact determinant. Integral matrices go through fraction-free
  /// (Bareiss) elimination; general ones through rational elimination.
  Rational det() const;

  /// Exact inverse; throws std::domain_error when singular. Unimodular
  /// integral matrices take an adjugate path and stay integral.
  GLMatrix inverse() const;

 private:
  int n_;
  std::vector<Rational> a_;  // row-major

  Rational& cell(int row, int col) { return a_[static_cast<std::size_t>(row) * n_ + col]; }
  const Rational& cell(int row, int col) const {
    return a_[static_cast<std::size_t>(row) * n_ + col];
  }
};

/// Rank of a rectangular rational matrix given as a list of rows.
int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace magnus
