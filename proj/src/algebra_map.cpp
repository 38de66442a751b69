#include "magnus/algebra_map.hpp"

#include <stdexcept>

namespace magnus {

AlgebraMap AlgebraMap::identity(int rank, int truncation) {
  AlgebraMap u(rank, truncation);
  u.images_.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    u.images_.push_back(TruncatedSeries::generator(rank, truncation, i));
  }
  return u;
}

AlgebraMap AlgebraMap::from_images(std::vector<TruncatedSeries> images) {
  if (images.empty()) throw std::invalid_argument("empty image list");
  const int rank = images[0].rank();
  const int truncation = images[0].truncation();
  if (static_cast<int>(images.size()) != rank) {
    throw std::invalid_argument("need one image per generator");
  }
  for (const TruncatedSeries& s : images) {
    if (s.rank() != rank || s.truncation() != truncation) {
      throw std::invalid_argument("image rank/truncation mismatch");
    }
    if (!s.component(0).is_zero()) {
      throw std::invalid_argument("generator image must lie in the positive-degree ideal");
    }
  }
  AlgebraMap u(rank, truncation);
  u.images_ = std::move(images);
  return u;
}

AlgebraMap AlgebraMap::linear(const GLMatrix& a, int truncation) {
  const int rank = a.size();
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    Tensor col(rank, 1);
    for (int j = 1; j <= rank; ++j) {
      col.add_term(IndexWord(1, static_cast<unsigned char>(j)), a.at(j - 1, i - 1));
    }
    images.push_back(TruncatedSeries::from_tensor(truncation, col));
  }
  return from_images(std::move(images));
}

const TruncatedSeries& AlgebraMap::image(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return images_[static_cast<std::size_t>(i) - 1];
}

TruncatedSeries AlgebraMap::apply(const TruncatedSeries& z) const {
  if (z.rank() != rank_) throw std::invalid_argument("series rank mismatch");
  if (z.truncation() != trunc_) throw std::invalid_argument("series truncation mismatch");
  TruncatedSeries out = TruncatedSeries::scalar(rank_, trunc_, z.constant_term());
  // Monomials are visited in lexicographic order, so consecutive keys share
  // prefixes; keep a stack of prefix products to reuse them.
  std::vector<TruncatedSeries> prefix;  // prefix[k] = image(j_1)...image(j_{k+1})
  IndexWord current;
  for (int m = 1; m <= trunc_; ++m) {
    const Tensor& comp = z.component(m);
    if (comp.is_zero()) continue;
    for (const auto& [idx, c] : comp.terms()) {
      std::size_t shared = 0;
      while (shared < current.size() && shared < idx.size() && current[shared] == idx[shared]) {
        ++shared;
      }
      prefix.erase(prefix.begin() + static_cast<long>(shared), prefix.end());
      current = idx;
      for (std::size_t k = shared; k < idx.size(); ++k) {
        const TruncatedSeries& factor = images_[static_cast<std::size_t>(idx[k]) - 1];
        if (k == 0) {
          prefix.push_back(factor);
        } else {
          prefix.push_back(prefix[k - 1] * factor);
        }
      }
      out += prefix.back() * c;
    }
  }
  return out;
}

AlgebraMap compose(const AlgebraMap& u, const AlgebraMap& v) {
  if (u.rank() != v.rank() || u.truncation() != v.truncation()) {
    throw std::invalid_argument("algebra map rank/truncation mismatch");
  }
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) {
    images.push_back(u.apply(v.image(i)));
  }
  return AlgebraMap::from_images(std::move(images));
}

GLMatrix AlgebraMap::linear_part() const {
  GLMatrix a(rank_);
  for (int i = 1; i <= rank_; ++i) {
    const Tensor& t = images_[static_cast<std::size_t>(i) - 1].component(1);
    for (const auto& [idx, c] : t.terms()) {
      a.set(static_cast<int>(idx[0]) - 1, i - 1, c);
    }
  }
  return a;
}

bool AlgebraMap::is_filtered_automorphism() const { return linear_part().is_invertible(); }

bool AlgebraMap::is_ia() const { return linear_part().is_identity(); }

AlgebraMap AlgebraMap::inverse() const {
  GLMatrix a = linear_part();
  if (!a.is_invertible()) throw std::domain_error("algebra map has singular linear part");
  GLMatrix a_inv = a.inverse();
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) {
    // Solve apply(z) = X_i degree by degree: the degree-m component of
    // apply(z_m) is the linear part applied slot-wise, everything lower
    // feeds forward through `partial`.
    TruncatedSeries target = TruncatedSeries::generator(rank_, trunc_, i);
    TruncatedSeries z(rank_, trunc_);
    TruncatedSeries partial(rank_, trunc_);
    for (int m = 1; m <= trunc_; ++m) {
      Tensor residue = target.component(m) - partial.component(m);
      if (residue.is_zero()) continue;
      Tensor zm = residue.apply_linear(a_inv);
      z.set_component(zm);
      partial += apply(TruncatedSeries::from_tensor(trunc_, zm));
    }
    images.push_back(std::move(z));
  }
  return from_images(std::move(images));
}

bool AlgebraMap::operator==(const AlgebraMap& other) const {
  return rank_ == other.rank_ && trunc_ == other.trunc_ && images_ == other.images_;
}

const HomTensor& IACoordinates::component(int p) const {
  if (p < 1 || p > static_cast<int>(u.size())) throw std::out_of_range("coordinate out of range");
  return u[static_cast<std::size_t>(p) - 1];
}

bool IACoordinates::operator==(const IACoordinates& other) const {
  return rank == other.rank && truncation == other.truncation && u == other.u;
}

IACoordinates to_ia_coordinates(const AlgebraMap& u) {
  if (!u.is_ia()) throw std::domain_error("algebra map has a nontrivial linear part");
  IACoordinates c;
  c.rank = u.rank();
  c.truncation = u.truncation();
  for (int p = 1; p + 1 <= u.truncation(); ++p) {
    std::vector<Tensor> images;
    images.reserve(static_cast<std::size_t>(u.rank()));
    for (int i = 1; i <= u.rank(); ++i) {
      images.push_back(u.image(i).component(p + 1));
    }
    c.u.push_back(HomTensor::from_images(images));
  }
  return c;
}

AlgebraMap from_ia_coordinates(const IACoordinates& c) {
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(c.rank));
  for (int i = 1; i <= c.rank; ++i) {
    TruncatedSeries s = TruncatedSeries::generator(c.rank, c.truncation, i);
    for (const HomTensor& up : c.u) {
      s.set_component(up.image_of(i));
    }
    images.push_back(std::move(s));
  }
  return AlgebraMap::from_images(std::move(images));
}

HomTensor twist(const GLMatrix& a, const HomTensor& v) { return v.gl_twist(a, a.inverse()); }

std::tuple<HomTensor, HomTensor, GLMatrix> compose_ia_low(const IACoordinates& u,
                                                          const GLMatrix& a,
                                                          const IACoordinates& v,
                                                          const GLMatrix& b) {
  if (u.u.size() < 2 || v.u.size() < 2) {
    throw std::invalid_argument("coordinates must be present up to p = 2");
  }
  const HomTensor& u1 = u.component(1);
  const HomTensor& u2 = u.component(2);
  HomTensor av1 = twist(a, v.component(1));
  HomTensor av2 = twist(a, v.component(2));
  HomTensor one = HomTensor::identity(u1.rank(), 1);
  HomTensor w1 = u1 + av1;
  HomTensor w2 =
      u2 + compose(hom_tensor_product(u1, one) + hom_tensor_product(one, u1), av1) + av2;
  return {std::move(w1), std::move(w2), a * b};
}

}  // namespace magnus
