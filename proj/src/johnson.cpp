#include "magnus/johnson.hpp"

#include <stdexcept>

namespace magnus {

namespace {

std::string describe(const FreeGroupEndo& phi) {
  if (!phi.label().empty()) return phi.label();
  std::string out = "[";
  for (int i = 1; i <= phi.rank(); ++i) {
    if (i > 1) out += ", ";
    std::string img = phi.image(i).render();
    out += "x" + std::to_string(i) + " -> " + (img.empty() ? "1" : img);
  }
  return out + "]";
}

void fill(CheckReport* report, const std::string& identity, const std::string& inputs,
          const std::string& lhs, const std::string& rhs) {
  if (!report) return;
  report->identity = identity;
  report->inputs = inputs;
  report->lhs = lhs;
  report->rhs = rhs;
}

}  // namespace

JohnsonCalculator::JohnsonCalculator(MagnusExpansion theta)
    : theta_(std::move(theta)), theta_kappa_inv_(theta_.theta_kappa().inverse()) {}

AlgebraMap JohnsonCalculator::total(const FreeGroupEndo& phi) const {
  if (phi.rank() != theta_.rank()) throw std::invalid_argument("endomorphism rank mismatch");
  std::string key;
  for (int i = 1; i <= phi.rank(); ++i) {
    key += phi.image(i).render();
    key += '|';
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  GLMatrix a = phi.abelianized();
  if (!a.is_unimodular()) {
    throw std::domain_error("abelianized endomorphism is not unimodular");
  }
  // X_i ↦ θ(φ(x_i)) − 1, then the inverse of X_i ↦ θ(x_i) − 1, then the
  // inverse linear map; the result acts as the identity on degree 1.
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(theta_.rank()));
  TruncatedSeries one = TruncatedSeries::one(theta_.rank(), theta_.truncation());
  for (int i = 1; i <= theta_.rank(); ++i) {
    images.push_back(theta_.evaluate(phi.apply(Word::generator(theta_.rank(), i))) - one);
  }
  AlgebraMap theta_phi_kappa = AlgebraMap::from_images(std::move(images));
  AlgebraMap linear_inv = AlgebraMap::linear(a.inverse(), theta_.truncation());
  AlgebraMap result = compose(compose(theta_phi_kappa, theta_kappa_inv_), linear_inv);
  if (!result.is_ia()) {
    throw std::logic_error("computed map has a nontrivial linear part");
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->entries.size() >= 512) cache_->entries.clear();
  cache_->entries.emplace(key, result);
  return result;
}

HomTensor JohnsonCalculator::component(const FreeGroupEndo& phi, int p) const {
  if (p < 1 || p + 1 > theta_.truncation()) {
    throw std::out_of_range("component degree out of range");
  }
  AlgebraMap u = total(phi);
  std::vector<Tensor> images;
  images.reserve(static_cast<std::size_t>(theta_.rank()));
  for (int i = 1; i <= theta_.rank(); ++i) {
    images.push_back(u.image(i).component(p + 1));
  }
  return HomTensor::from_images(images);
}

AlgebraMap total_johnson(const MagnusExpansion& theta, const FreeGroupEndo& phi) {
  return JohnsonCalculator(theta).total(phi);
}

HomTensor johnson_p(const MagnusExpansion& theta, const FreeGroupEndo& phi, int p) {
  return JohnsonCalculator(theta).component(phi, p);
}

HomTensor inner_johnson(const MagnusExpansion& theta, const Word& gamma, int p) {
  if (p < 1 || p + 1 > theta.truncation()) {
    throw std::out_of_range("component degree out of range");
  }
  TruncatedSeries s = theta.evaluate(gamma);
  TruncatedSeries s_inv = s.invert();
  std::vector<Tensor> images;
  images.reserve(static_cast<std::size_t>(theta.rank()));
  for (int i = 1; i <= theta.rank(); ++i) {
    TruncatedSeries conj =
        s * TruncatedSeries::generator(theta.rank(), theta.truncation(), i) * s_inv;
    images.push_back(conj.component(p + 1));
  }
  return HomTensor::from_images(images);
}

bool check_cocycle_tau1(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                        const FreeGroupEndo& psi, CheckReport* report) {
  HomTensor lhs = calc.component(compose(phi, psi), 1);
  HomTensor rhs = calc.component(phi, 1) + twist(phi.abelianized(), calc.component(psi, 1));
  if (lhs == rhs) return true;
  fill(report, "tau1 additivity", "phi=" + describe(phi) + " psi=" + describe(psi),
       lhs.to_string(), rhs.to_string());
  return false;
}

bool check_tau2_relation(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                         const FreeGroupEndo& psi, CheckReport* report) {
  HomTensor lhs = calc.component(compose(phi, psi), 2);
  GLMatrix a = phi.abelianized();
  HomTensor tau1_phi = calc.component(phi, 1);
  HomTensor a_tau1_psi = twist(a, calc.component(psi, 1));
  HomTensor one = HomTensor::identity(tau1_phi.rank(), 1);
  HomTensor rhs = calc.component(phi, 2) +
                  compose(hom_tensor_product(tau1_phi, one) + hom_tensor_product(one, tau1_phi),
                          a_tau1_psi) +
                  twist(a, calc.component(psi, 2));
  if (lhs == rhs) return true;
  fill(report, "tau2 composition law", "phi=" + describe(phi) + " psi=" + describe(psi),
       lhs.to_string(), rhs.to_string());
  return false;
}

bool check_cocycle_total(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                         const FreeGroupEndo& psi, CheckReport* report) {
  const int trunc = calc.expansion().truncation();
  AlgebraMap lhs = calc.total(compose(phi, psi));
  GLMatrix a = phi.abelianized();
  AlgebraMap rhs = compose(
      compose(calc.total(phi), AlgebraMap::linear(a, trunc)),
      compose(calc.total(psi), AlgebraMap::linear(a.inverse(), trunc)));
  if (lhs == rhs) return true;
  std::string lhs_text;
  std::string rhs_text;
  for (int i = 1; i <= calc.expansion().rank(); ++i) {
    lhs_text += "X" + std::to_string(i) + " -> " + lhs.image(i).to_string() + "; ";
    rhs_text += "X" + std::to_string(i) + " -> " + rhs.image(i).to_string() + "; ";
  }
  fill(report, "total cocycle law", "phi=" + describe(phi) + " psi=" + describe(psi), lhs_text,
       rhs_text);
  return false;
}

bool check_defining_property(const JohnsonCalculator& calc, const FreeGroupEndo& phi,
                             const Word& gamma, CheckReport* report) {
  const MagnusExpansion& theta = calc.expansion();
  TruncatedSeries lhs = theta.evaluate(phi.apply(gamma));
  AlgebraMap u = calc.total(phi);
  TruncatedSeries rhs = u.apply(theta.evaluate(gamma).apply_linear(phi.abelianized()));
  if (lhs == rhs) return true;
  fill(report, "defining property",
       "phi=" + describe(phi) + " gamma=" + (gamma.is_identity() ? "1" : gamma.render()),
       lhs.to_string(), rhs.to_string());
  return false;
}

bool check_lemma22(const JohnsonCalculator& calc, const FreeGroupEndo& phi, const Word& gamma,
                   CheckReport* report) {
  const MagnusExpansion& theta = calc.expansion();
  GLMatrix a = phi.abelianized();
  if (!a.is_unimodular()) throw std::domain_error("abelianized endomorphism is not unimodular");
  HomTensor tau1 = calc.component(phi, 1);
  std::string inputs =
      "phi=" + describe(phi) + " gamma=" + (gamma.is_identity() ? "1" : gamma.render());

  Tensor abel(theta.rank(), 1);
  std::vector<long long> sums = gamma.exponent_sums();
  for (int j = 1; j <= theta.rank(); ++j) {
    abel.add_term(IndexWord(1, static_cast<unsigned char>(j)),
                  Rational(static_cast<long>(sums[static_cast<std::size_t>(j) - 1])));
  }

  Tensor lhs1 = tau1.apply(abel.apply_linear(a));
  Tensor rhs1 =
      theta.component(phi.apply(gamma), 2) - theta.component(gamma, 2).apply_linear(a);
  if (lhs1 != rhs1) {
    fill(report, "tau1 against second components", inputs, lhs1.to_string(), rhs1.to_string());
    return false;
  }

  if (!phi.has_inverse()) {
    throw std::domain_error("companion identity needs a certified inverse");
  }
  Tensor lhs2 = tau1.apply(abel);
  Tensor rhs2 = theta.component(gamma, 2) -
                theta.component(phi.inverse().apply(gamma), 2).apply_linear(a);
  if (lhs2 != rhs2) {
    fill(report, "tau1 against second components (inverse form)", inputs, lhs2.to_string(),
         rhs2.to_string());
    return false;
  }
  return true;
}

}  // namespace magnus
