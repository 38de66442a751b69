#include "magnus/endo.hpp"

#include <stdexcept>

namespace magnus {

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeGroupEndo(rank, images, images, "id");
}

FreeGroupEndo::FreeGroupEndo(int rank, std::vector<Word> images,
                             std::optional<std::vector<Word>> inverse_images, std::string label)
    : rank_(rank),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)),
      label_(std::move(label)) {
  if (static_cast<int>(images_.size()) != rank_) {
    throw std::invalid_argument("need one image per generator");
  }
  for (const Word& w : images_) {
    if (w.rank() != rank_) throw std::invalid_argument("image rank mismatch");
  }
  if (inverse_images_) {
    if (static_cast<int>(inverse_images_->size()) != rank_) {
      throw std::invalid_argument("need one inverse image per generator");
    }
    for (const Word& w : *inverse_images_) {
      if (w.rank() != rank_) throw std::invalid_argument("inverse image rank mismatch");
    }
  }
}

const Word& FreeGroupEndo::image(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return images_[static_cast<std::size_t>(i) - 1];
}

FreeGroupEndo FreeGroupEndo::inverse() const {
  if (!inverse_images_) throw std::domain_error("no certified inverse attached");
  std::string label = label_.empty() ? std::string{} : label_ + "^-1";
  return FreeGroupEndo(rank_, *inverse_images_, images_, std::move(label));
}

Word FreeGroupEndo::apply(const Word& gamma) const {
  if (gamma.rank() != rank_) throw std::invalid_argument("word rank mismatch");
  Word out(rank_);
  for (int letter : gamma.letters()) {
    if (letter > 0) {
      out = out * images_[static_cast<std::size_t>(letter) - 1];
    } else {
      out = out * images_[static_cast<std::size_t>(-letter) - 1].inverse();
    }
  }
  return out;
}

FreeGroupEndo compose(const FreeGroupEndo& phi, const FreeGroupEndo& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("endomorphism rank mismatch");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (int i = 1; i <= phi.rank(); ++i) {
    images.push_back(phi.apply(psi.image(i)));
  }
  std::optional<std::vector<Word>> inverse_images;
  if (phi.has_inverse() && psi.has_inverse()) {
    FreeGroupEndo psi_inv = psi.inverse();
    FreeGroupEndo phi_inv = phi.inverse();
    std::vector<Word> inv;
    inv.reserve(static_cast<std::size_t>(phi.rank()));
    for (int i = 1; i <= phi.rank(); ++i) {
      inv.push_back(psi_inv.apply(phi_inv.image(i)));
    }
    inverse_images = std::move(inv);
  }
  return FreeGroupEndo(phi.rank(), std::move(images), std::move(inverse_images));
}

GLMatrix FreeGroupEndo::abelianized() const {
  GLMatrix a(rank_);
  for (int i = 1; i <= rank_; ++i) {
    std::vector<long long> sums = images_[static_cast<std::size_t>(i) - 1].exponent_sums();
    for (int j = 1; j <= rank_; ++j) {
      a.set(j - 1, i - 1, Rational(static_cast<long>(sums[static_cast<std::size_t>(j) - 1])));
    }
  }
  return a;
}

bool FreeGroupEndo::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    if (image(i) != Word::generator(rank_, i)) return false;
  }
  return true;
}

bool FreeGroupEndo::verify_inverse() const {
  if (!inverse_images_) return false;
  FreeGroupEndo inv = inverse();
  for (int i = 1; i <= rank_; ++i) {
    Word x = Word::generator(rank_, i);
    if (apply(inv.apply(x)) != x) return false;
    if (inv.apply(apply(x)) != x) return false;
  }
  return true;
}

FreeGroupEndo inner_automorphism(const Word& gamma) {
  const int n = gamma.rank();
  Word gamma_inv = gamma.inverse();
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  images.reserve(static_cast<std::size_t>(n));
  inverse_images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Word x = Word::generator(n, i);
    images.push_back(gamma * x * gamma_inv);
    inverse_images.push_back(gamma_inv * x * gamma);
  }
  return FreeGroupEndo(n, std::move(images), std::move(inverse_images));
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  if (name == "magnus-K") return GeneratorKind::MagnusK;
  if (name == "nielsen") return GeneratorKind::Nielsen;
  if (name == "inner") return GeneratorKind::Inner;
  throw std::invalid_argument("unknown generator kind: \"" + name + "\"");
}

namespace {

std::vector<Word> identity_images(int n) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(Word::generator(n, j));
  return images;
}

FreeGroupEndo magnus_pair(int n, int i, int l) {
  Word xi = Word::generator(n, i);
  Word xl = Word::generator(n, l);
  std::vector<Word> images = identity_images(n);
  std::vector<Word> inverse = identity_images(n);
  images[static_cast<std::size_t>(i) - 1] = xl * xi * xl.inverse();
  inverse[static_cast<std::size_t>(i) - 1] = xl.inverse() * xi * xl;
  std::string label = "K[" + std::to_string(i) + "," + std::to_string(l) + "]";
  return FreeGroupEndo(n, std::move(images), std::move(inverse), std::move(label));
}

FreeGroupEndo magnus_triple(int n, int i, int l, int s) {
  Word xi = Word::generator(n, i);
  Word c = commutator(Word::generator(n, l), Word::generator(n, s));
  std::vector<Word> images = identity_images(n);
  std::vector<Word> inverse = identity_images(n);
  images[static_cast<std::size_t>(i) - 1] = xi * c;
  inverse[static_cast<std::size_t>(i) - 1] = xi * c.inverse();
  std::string label =
      "K[" + std::to_string(i) + "," + std::to_string(l) + "," + std::to_string(s) + "]";
  return FreeGroupEndo(n, std::move(images), std::move(inverse), std::move(label));
}

}  // namespace

std::vector<FreeGroupEndo> generator_library(GeneratorKind kind, int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<FreeGroupEndo> out;
  switch (kind) {
    case GeneratorKind::MagnusK: {
      for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= n; ++l) {
          if (l == i) continue;
          out.push_back(magnus_pair(n, i, l));
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= n; ++l) {
          for (int s = l + 1; s <= n; ++s) {
            if (l == i || s == i) continue;
            out.push_back(magnus_triple(n, i, l, s));
          }
        }
      }
      break;
    }
    case GeneratorKind::Nielsen: {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::vector<Word> images = identity_images(n);
          images[static_cast<std::size_t>(i) - 1] = Word::generator(n, j);
          images[static_cast<std::size_t>(j) - 1] = Word::generator(n, i);
          std::string label = "P[" + std::to_string(i) + "," + std::to_string(j) + "]";
          out.emplace_back(n, images, images, std::move(label));
        }
      }
      for (int i = 1; i <= n; ++i) {
        std::vector<Word> images = identity_images(n);
        images[static_cast<std::size_t>(i) - 1] = Word::generator(n, i).inverse();
        std::string label = "I[" + std::to_string(i) + "]";
        out.emplace_back(n, images, images, std::move(label));
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          Word xi = Word::generator(n, i);
          Word xj = Word::generator(n, j);
          {
            std::vector<Word> images = identity_images(n);
            std::vector<Word> inverse = identity_images(n);
            images[static_cast<std::size_t>(i) - 1] = xi * xj;
            inverse[static_cast<std::size_t>(i) - 1] = xi * xj.inverse();
            std::string label = "R[" + std::to_string(i) + "," + std::to_string(j) + "]";
            out.emplace_back(n, std::move(images), std::move(inverse), std::move(label));
          }
          {
            std::vector<Word> images = identity_images(n);
            std::vector<Word> inverse = identity_images(n);
            images[static_cast<std::size_t>(i) - 1] = xj * xi;
            inverse[static_cast<std::size_t>(i) - 1] = xj.inverse() * xi;
            std::string label = "L[" + std::to_string(i) + "," + std::to_string(j) + "]";
            out.emplace_back(n, std::move(images), std::move(inverse), std::move(label));
          }
        }
      }
      break;
    }
    case GeneratorKind::Inner: {
      for (int i = 1; i <= n; ++i) {
        FreeGroupEndo conj = inner_automorphism(Word::generator(n, i));
        FreeGroupEndo conj_inv = conj.inverse();
        std::vector<Word> images;
        std::vector<Word> inverse;
        for (int j = 1; j <= n; ++j) {
          images.push_back(conj.image(j));
          inverse.push_back(conj_inv.image(j));
        }
        out.emplace_back(n, std::move(images), std::move(inverse),
                         "C[" + std::to_string(i) + "]");
      }
      break;
    }
  }
  return out;
}

}  // namespace magnus
