#include "magnus/expansion.hpp"

#include <stdexcept>

namespace magnus {

MagnusExpansion MagnusExpansion::standard(int rank, int truncation) {
  std::vector<TruncatedSeries> xi;
  xi.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) xi.emplace_back(rank, truncation);
  return from_offsets(std::move(xi));
}

MagnusExpansion MagnusExpansion::from_offsets(std::vector<TruncatedSeries> xi) {
  if (xi.empty()) throw std::invalid_argument("empty offset list");
  const int rank = xi[0].rank();
  const int truncation = xi[0].truncation();
  if (static_cast<int>(xi.size()) != rank) {
    throw std::invalid_argument("need one offset per generator");
  }
  MagnusExpansion theta(rank, truncation);
  theta.theta_.reserve(xi.size());
  theta.theta_inv_.reserve(xi.size());
  for (int i = 1; i <= rank; ++i) {
    TruncatedSeries& off = xi[static_cast<std::size_t>(i) - 1];
    if (off.rank() != rank || off.truncation() != truncation) {
      throw std::invalid_argument("offset rank/truncation mismatch");
    }
    if (!off.component(0).is_zero() || !off.component(1).is_zero()) {
      throw std::invalid_argument("offset must vanish in degrees 0 and 1");
    }
    TruncatedSeries s = TruncatedSeries::one(rank, truncation);
    s += TruncatedSeries::generator(rank, truncation, i);
    s += off;
    theta.theta_inv_.push_back(s.invert());
    theta.theta_.push_back(std::move(s));
  }
  return theta;
}

const TruncatedSeries& MagnusExpansion::generator_series(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return theta_[static_cast<std::size_t>(i) - 1];
}

const TruncatedSeries& MagnusExpansion::generator_series_inv(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return theta_inv_[static_cast<std::size_t>(i) - 1];
}

TruncatedSeries MagnusExpansion::offset(int i) const {
  TruncatedSeries off = generator_series(i);
  off -= TruncatedSeries::one(rank_, trunc_);
  off -= TruncatedSeries::generator(rank_, trunc_, i);
  return off;
}

bool MagnusExpansion::is_standard() const {
  for (int i = 1; i <= rank_; ++i) {
    if (!offset(i).is_zero()) return false;
  }
  return true;
}

TruncatedSeries MagnusExpansion::evaluate(const Word& gamma) const {
  if (gamma.rank() != rank_) throw std::invalid_argument("word rank mismatch");
  TruncatedSeries out = TruncatedSeries::one(rank_, trunc_);
  for (int letter : gamma.letters()) {
    const TruncatedSeries& factor =
        letter > 0 ? theta_[static_cast<std::size_t>(letter) - 1]
                   : theta_inv_[static_cast<std::size_t>(-letter) - 1];
    out = out * factor;
  }
  return out;
}

Tensor MagnusExpansion::component(const Word& gamma, int m) const {
  if (m > trunc_) throw std::out_of_range("degree exceeds truncation");
  return evaluate(gamma).component(m);
}

bool MagnusExpansion::validate() const {
  for (int i = 1; i <= rank_; ++i) {
    const TruncatedSeries& s = generator_series(i);
    if (s.constant_term() != 1) return false;
    if (s.component(1) != Tensor::basis(rank_, i)) return false;
  }
  return true;
}

AlgebraMap MagnusExpansion::theta_kappa() const {
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) {
    TruncatedSeries s = generator_series(i);
    s -= TruncatedSeries::one(rank_, trunc_);
    images.push_back(std::move(s));
  }
  return AlgebraMap::from_images(std::move(images));
}

bool MagnusExpansion::operator==(const MagnusExpansion& other) const {
  return rank_ == other.rank_ && trunc_ == other.trunc_ && theta_ == other.theta_;
}

AlgebraMap transition(const MagnusExpansion& from, const MagnusExpansion& to) {
  if (from.rank() != to.rank() || from.truncation() != to.truncation()) {
    throw std::invalid_argument("expansion rank/truncation mismatch");
  }
  return compose(to.theta_kappa(), from.theta_kappa().inverse());
}

}  // namespace magnus
