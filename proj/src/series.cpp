#include "magnus/series.hpp"

#include <sstream>
#include <stdexcept>

namespace magnus {

TruncatedSeries::TruncatedSeries(int rank, int truncation) : rank_(rank), trunc_(truncation) {
  if (truncation < 2) throw std::invalid_argument("truncation degree must be at least 2");
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("series rank out of range");
  comp_.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) comp_.emplace_back(rank, m);
}

TruncatedSeries TruncatedSeries::scalar(int rank, int truncation, const Rational& c) {
  TruncatedSeries s(rank, truncation);
  s.comp_[0] = Tensor::scalar(rank, c);
  return s;
}

TruncatedSeries TruncatedSeries::one(int rank, int truncation) {
  return scalar(rank, truncation, Rational(1));
}

TruncatedSeries TruncatedSeries::generator(int rank, int truncation, int i) {
  TruncatedSeries s(rank, truncation);
  s.comp_[1] = Tensor::basis(rank, i);
  return s;
}

TruncatedSeries TruncatedSeries::from_tensor(int truncation, const Tensor& t) {
  TruncatedSeries s(t.rank(), truncation);
  s.set_component(t);
  return s;
}

const Tensor& TruncatedSeries::component(int degree) const {
  if (degree < 0 || degree > trunc_) throw std::out_of_range("degree exceeds truncation");
  return comp_[static_cast<std::size_t>(degree)];
}

void TruncatedSeries::set_component(const Tensor& t) {
  if (t.rank() != rank_) throw std::invalid_argument("tensor rank mismatch");
  if (t.degree() < 0 || t.degree() > trunc_) throw std::out_of_range("degree exceeds truncation");
  comp_[static_cast<std::size_t>(t.degree())] = t;
}

bool TruncatedSeries::is_zero() const {
  for (const Tensor& t : comp_) {
    if (!t.is_zero()) return false;
  }
  return true;
}

std::optional<int> TruncatedSeries::lowest_degree() const {
  for (int m = 0; m <= trunc_; ++m) {
    if (!comp_[m].is_zero()) return m;
  }
  return std::nullopt;
}

Rational TruncatedSeries::constant_term() const { return comp_[0].coeff(IndexWord{}); }

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("series rank mismatch");
  if (trunc_ != other.trunc_) throw std::invalid_argument("series truncation mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  for (int m = 0; m <= trunc_; ++m) comp_[m] += other.comp_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  for (int m = 0; m <= trunc_; ++m) comp_[m] -= other.comp_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (Tensor& t : comp_) t *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(rank_, trunc_);
  for (int m = 0; m <= trunc_; ++m) out.comp_[m] = -comp_[m];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.rank_, a.trunc_);
  for (int i = 0; i <= a.trunc_; ++i) {
    if (a.comp_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.trunc_; ++j) {
      if (b.comp_[j].is_zero()) continue;
      out.comp_[i + j] += tensor_product(a.comp_[i], b.comp_[j]);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::invert() const {
  Rational c = constant_term();
  if (c == 0) throw std::domain_error("series with zero constant term has no inverse");
  // a = c(1 + v) with v of positive lowest degree, so
  // a^{-1} = (1 - v + v^2 - ...) / c; the sum stops once v^j vanishes.
  TruncatedSeries v = *this * (Rational(1) / c);
  v.comp_[0] = Tensor(rank_, 0);
  TruncatedSeries acc = one(rank_, trunc_);
  TruncatedSeries power = one(rank_, trunc_);
  for (int j = 1; j <= trunc_; ++j) {
    power = power * v;
    if (power.is_zero()) break;
    if (j % 2 != 0) {
      acc -= power;
    } else {
      acc += power;
    }
  }
  return acc * (Rational(1) / c);
}

TruncatedSeries TruncatedSeries::apply_linear(const GLMatrix& a) const {
  TruncatedSeries out(rank_, trunc_);
  for (int m = 0; m <= trunc_; ++m) out.comp_[m] = comp_[m].apply_linear(a);
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return rank_ == other.rank_ && trunc_ == other.trunc_ && comp_ == other.comp_;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= trunc_; ++m) {
    for (const auto& [idx, c] : comp_[m].terms()) {
      Rational abs = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (idx.empty()) {
        os << magnus::to_string(abs);
      } else {
        if (abs != 1) os << magnus::to_string(abs) << "*";
        for (unsigned char i : idx) os << "X" << static_cast<int>(i);
      }
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace magnus
