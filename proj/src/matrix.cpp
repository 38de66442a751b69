#include "magnus/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace magnus {

GLMatrix::GLMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  a_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

GLMatrix GLMatrix::identity(int n) {
  GLMatrix m(n);
  for (int i = 0; i < n; ++i) m.cell(i, i) = 1;
  return m;
}

const Rational& GLMatrix::at(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw std::out_of_range("matrix index out of range");
  }
  return cell(row, col);
}

void GLMatrix::set(int row, int col, const Rational& value) {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw std::out_of_range("matrix index out of range");
  }
  cell(row, col) = value;
}

bool GLMatrix::operator==(const GLMatrix& other) const {
  return n_ == other.n_ && a_ == other.a_;
}

GLMatrix GLMatrix::operator*(const GLMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  GLMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Rational& lhs = cell(i, k);
      if (lhs == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (other.cell(k, j) == 0) continue;
        out.cell(i, j) += lhs * other.cell(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> GLMatrix::column(int col) const {
  std::vector<Rational> v;
  v.reserve(n_);
  for (int i = 0; i < n_; ++i) v.push_back(cell(i, col));
  return v;
}

bool GLMatrix::is_identity() const { return *this == identity(n_); }

bool GLMatrix::is_integral() const {
  for (const Rational& q : a_) {
    if (!is_integer(q)) return false;
  }
  return true;
}

bool GLMatrix::is_unimodular() const {
  if (!is_integral()) return false;
  Rational d = det();
  return d == 1 || d == -1;
}

bool GLMatrix::is_signed_permutation() const {
  std::vector<bool> col_used(n_, false);
  for (int i = 0; i < n_; ++i) {
    int nonzero = -1;
    for (int j = 0; j < n_; ++j) {
      const Rational& q = cell(i, j);
      if (q == 0) continue;
      if (nonzero >= 0 || (q != 1 && q != -1)) return false;
      nonzero = j;
    }
    if (nonzero < 0 || col_used[nonzero]) return false;
    col_used[nonzero] = true;
  }
  return true;
}

namespace {

// Fraction-free (Bareiss) determinant of an integral matrix.
Rational bareiss_det(const GLMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = to_integer(m.at(i, j));
  }
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1]);
}

Rational gauss_det(GLMatrix m) {
  const int n = m.size();
  Rational d(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (m.at(i, k) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        Rational t = m.at(k, j);
        m.set(k, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
      d = -d;
    }
    Rational p = m.at(k, k);
    d *= p;
    for (int i = k + 1; i < n; ++i) {
      Rational factor = m.at(i, k) / p;
      if (factor == 0) continue;
      for (int j = k; j < n; ++j) {
        m.set(i, j, m.at(i, j) - factor * m.at(k, j));
      }
    }
  }
  return d;
}

}  // namespace

Rational GLMatrix::det() const {
  if (n_ == 1) return cell(0, 0);
  return is_integral() ? bareiss_det(*this) : gauss_det(*this);
}

GLMatrix GLMatrix::inverse() const {
  if (is_unimodular()) {
    // Integral adjugate path: entries of the inverse stay integers.
    Rational d = det();
    GLMatrix inv(n_);
    if (n_ == 1) {
      inv.cell(0, 0) = d;  // d = ±1
      return inv;
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        GLMatrix minor(n_ - 1);
        for (int r = 0, rr = 0; r < n_; ++r) {
          if (r == j) continue;
          for (int c = 0, cc = 0; c < n_; ++c) {
            if (c == i) continue;
            minor.cell(rr, cc) = cell(r, c);
            ++cc;
          }
          ++rr;
        }
        Rational cof = minor.det();
        if ((i + j) % 2 != 0) cof = -cof;
        inv.cell(i, j) = cof / d;
      }
    }
    return inv;
  }

  // Rational Gauss–Jordan.
  GLMatrix work(*this);
  GLMatrix inv = identity(n_);
  for (int k = 0; k < n_; ++k) {
    int pivot = -1;
    for (int i = k; i < n_; ++i) {
      if (work.cell(i, k) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != k) {
      for (int j = 0; j < n_; ++j) {
        std::swap(work.cell(k, j), work.cell(pivot, j));
        std::swap(inv.cell(k, j), inv.cell(pivot, j));
      }
    }
    Rational p = work.cell(k, k);
    for (int j = 0; j < n_; ++j) {
      work.cell(k, j) /= p;
      inv.cell(k, j) /= p;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == k) continue;
      Rational factor = work.cell(i, k);
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        work.cell(i, j) -= factor * work.cell(k, j);
        inv.cell(i, j) -= factor * inv.cell(k, j);
      }
    }
  }
  return inv;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational p = rows[r][lead];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      Rational factor = rows[i][lead] / p;
      for (std::size_t j = lead; j < cols; ++j) {
        rows[i][j] -= factor * rows[r][j];
      }
    }
    ++rank;
    ++r;
  }
  return rank;
}

}  // namespace magnus
