#include "magnus/lcs.hpp"

#include <stdexcept>

namespace magnus {

bool LcsDepth::at_least(int m) const {
  switch (kind) {
    case Kind::Identity:
      return true;
    case Kind::BeyondTruncation:
      return true;  // certified to exceed the truncation
    case Kind::Exact:
      return value >= m;
  }
  return false;
}

std::string LcsDepth::to_string(int truncation) const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::BeyondTruncation:
      return ">=" + std::to_string(truncation + 1);
    case Kind::Exact:
      return std::to_string(value);
  }
  return {};
}

LcsDepth lcs_degree(const MagnusExpansion& theta, const Word& gamma) {
  if (gamma.is_identity()) return {LcsDepth::Kind::Identity, 0};
  TruncatedSeries s = theta.evaluate(gamma);
  s -= TruncatedSeries::one(theta.rank(), theta.truncation());
  std::optional<int> lowest = s.lowest_degree();
  if (!lowest) return {LcsDepth::Kind::BeyondTruncation, 0};
  return {LcsDepth::Kind::Exact, *lowest};
}

Tensor dynkin_left_bracketing(const Tensor& t) {
  if (t.degree() < 1) throw std::invalid_argument("left bracketing needs degree >= 1");
  Tensor out(t.rank(), t.degree());
  for (const auto& [idx, c] : t.terms()) {
    Tensor bracket = Tensor::basis(t.rank(), static_cast<int>(idx[0]));
    for (std::size_t k = 1; k < idx.size(); ++k) {
      Tensor x = Tensor::basis(t.rank(), static_cast<int>(idx[k]));
      bracket = tensor_product(bracket, x) - tensor_product(x, bracket);
    }
    out += c * bracket;
  }
  return out;
}

bool is_lie_element(const Tensor& t) {
  if (t.degree() < 1) throw std::invalid_argument("Lie membership needs homogeneous degree >= 1");
  if (t.degree() == 1) return true;
  return dynkin_left_bracketing(t) == Rational(t.degree()) * t;
}

LieTensor LieTensor::certify(Tensor t) {
  if (!is_lie_element(t)) {
    throw std::logic_error("Dynkin check failed: tensor is not a Lie element");
  }
  return LieTensor(std::move(t));
}

LieTensor graded_image(const MagnusExpansion& theta, const Word& gamma, int m) {
  if (m < 1 || m > theta.truncation()) throw std::out_of_range("degree out of range");
  if (!lcs_degree(theta, gamma).at_least(m)) {
    throw std::domain_error("word is not deep enough in the lower central series");
  }
  return LieTensor::certify(theta.component(gamma, m));
}

bool in_filtration_A(const MagnusExpansion& theta, const FreeGroupEndo& phi, int m) {
  if (m < 0 || m + 1 > theta.truncation()) throw std::out_of_range("filtration step out of range");
  if (phi.rank() != theta.rank()) throw std::invalid_argument("rank mismatch");
  for (int i = 1; i <= theta.rank(); ++i) {
    Word x = Word::generator(theta.rank(), i);
    Word moved = x.inverse() * phi.apply(x);
    LcsDepth depth = lcs_degree(theta, moved);
    if (depth.kind == LcsDepth::Kind::Exact && depth.value < m + 1) return false;
  }
  return true;
}

HomTensor johnson_hom(const MagnusExpansion& theta, const FreeGroupEndo& phi, int m) {
  if (m < 1 || m + 1 > theta.truncation()) throw std::out_of_range("filtration step out of range");
  if (!in_filtration_A(theta, phi, m)) {
    throw std::domain_error("endomorphism is not in the requested filtration step");
  }
  std::vector<Tensor> images;
  images.reserve(static_cast<std::size_t>(theta.rank()));
  for (int i = 1; i <= theta.rank(); ++i) {
    Word x = Word::generator(theta.rank(), i);
    Tensor value = theta.component(x.inverse() * phi.apply(x), m + 1);
    if (!value.is_zero()) {
      value = LieTensor::certify(std::move(value)).tensor();
    }
    images.push_back(std::move(value));
  }
  return HomTensor::from_images(images);
}

}  // namespace magnus
