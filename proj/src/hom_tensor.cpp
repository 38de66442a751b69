#include "magnus/hom_tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace magnus {

HomTensor::HomTensor(int rank, int in_degree, int out_degree)
    : rank_(rank), in_(in_degree), out_(out_degree) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (in_degree < 0 || out_degree < 0) throw std::invalid_argument("negative degree");
}

HomTensor HomTensor::identity(int rank, int slots) {
  HomTensor u(rank, slots, slots);
  if (slots == 0) {
    u.add_term(IndexWord{}, IndexWord{}, Rational(1));
    return u;
  }
  // Sum over all monomials of the given length with equal in/out keys.
  IndexWord key(static_cast<std::size_t>(slots), static_cast<unsigned char>(1));
  while (true) {
    u.add_term(key, key, Rational(1));
    int pos = slots - 1;
    while (pos >= 0 && key[pos] == static_cast<unsigned char>(rank)) {
      key[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++key[pos];
  }
  return u;
}

HomTensor HomTensor::covector(int rank, int i) {
  HomTensor u(rank, 1, 0);
  if (i < 1 || i > rank) throw std::out_of_range("covector index out of range");
  u.add_term(IndexWord(1, static_cast<unsigned char>(i)), IndexWord{}, Rational(1));
  return u;
}

HomTensor HomTensor::from_tensor(const Tensor& t) {
  HomTensor u(t.rank(), 0, t.degree());
  for (const auto& [idx, c] : t.terms()) u.add_term(IndexWord{}, idx, c);
  return u;
}

HomTensor HomTensor::from_images(const std::vector<Tensor>& images) {
  if (images.empty()) throw std::invalid_argument("empty image list");
  const int rank = images[0].rank();
  const int out = images[0].degree();
  if (static_cast<int>(images.size()) != rank) {
    throw std::invalid_argument("need one image per generator");
  }
  HomTensor u(rank, 1, out);
  for (int i = 1; i <= rank; ++i) {
    const Tensor& t = images[static_cast<std::size_t>(i) - 1];
    if (t.rank() != rank || t.degree() != out) throw std::invalid_argument("image shape mismatch");
    for (const auto& [idx, c] : t.terms()) {
      u.add_term(IndexWord(1, static_cast<unsigned char>(i)), idx, c);
    }
  }
  return u;
}

void HomTensor::add_term(const IndexWord& in, const IndexWord& out, const Rational& coeff) {
  if (static_cast<int>(in.size()) != in_ || static_cast<int>(out.size()) != out_) {
    throw std::invalid_argument("key length does not match degrees");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(Key{in, out}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomTensor::coeff(const IndexWord& in, const IndexWord& out) const {
  auto it = terms_.find(Key{in, out});
  return it == terms_.end() ? Rational(0) : it->second;
}

Tensor HomTensor::image_of(int i) const {
  if (in_ != 1) throw std::logic_error("image_of requires a single dual slot");
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  Tensor out(rank_, out_);
  IndexWord key(1, static_cast<unsigned char>(i));
  for (const auto& [k, c] : terms_) {
    if (k.first == key) out.add_term(k.second, c);
  }
  return out;
}

Tensor HomTensor::to_tensor() const {
  if (in_ != 0) throw std::logic_error("to_tensor requires no dual slots");
  Tensor out(rank_, out_);
  for (const auto& [k, c] : terms_) out.add_term(k.second, c);
  return out;
}

Tensor HomTensor::apply(const Tensor& t) const {
  if (t.rank() != rank_ || t.degree() != in_) {
    throw std::invalid_argument("argument shape mismatch");
  }
  Tensor out(rank_, out_);
  for (const auto& [k, c] : terms_) {
    Rational tc = t.coeff(k.first);
    if (tc != 0) out.add_term(k.second, c * tc);
  }
  return out;
}

HomTensor& HomTensor::operator+=(const HomTensor& other) {
  if (rank_ != other.rank_ || in_ != other.in_ || out_ != other.out_) {
    throw std::invalid_argument("shape mismatch");
  }
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

HomTensor& HomTensor::operator-=(const HomTensor& other) {
  if (rank_ != other.rank_ || in_ != other.in_ || out_ != other.out_) {
    throw std::invalid_argument("shape mismatch");
  }
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

HomTensor& HomTensor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

HomTensor HomTensor::operator-() const {
  HomTensor out(rank_, in_, out_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

bool HomTensor::operator==(const HomTensor& other) const {
  return rank_ == other.rank_ && in_ == other.in_ && out_ == other.out_ && terms_ == other.terms_;
}

HomTensor compose(const HomTensor& f, const HomTensor& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  if (f.in_degree() != g.out_degree()) {
    throw std::invalid_argument("composition degree mismatch");
  }
  HomTensor out(f.rank(), g.in_degree(), f.out_degree());
  // Group f's terms by input key for the join.
  std::map<IndexWord, std::vector<std::pair<IndexWord, Rational>>> by_in;
  for (const auto& [k, c] : f.terms()) by_in[k.first].emplace_back(k.second, c);
  for (const auto& [kg, cg] : g.terms()) {
    auto it = by_in.find(kg.second);
    if (it == by_in.end()) continue;
    for (const auto& [out_key, cf] : it->second) {
      out.add_term(kg.first, out_key, cf * cg);
    }
  }
  return out;
}

HomTensor hom_tensor_product(const HomTensor& f, const HomTensor& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  HomTensor out(f.rank(), f.in_degree() + g.in_degree(), f.out_degree() + g.out_degree());
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      out.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
    }
  }
  return out;
}

HomTensor HomTensor::gl_twist(const GLMatrix& a, const GLMatrix& a_inv) const {
  if (a.size() != rank_ || a_inv.size() != rank_) {
    throw std::invalid_argument("matrix size does not match rank");
  }
  HomTensor out(rank_, in_, out_);
  for (const auto& [k, c] : terms_) {
    // Output slots transform by a; dual slots pick up rows of a_inv.
    Tensor out_part = Tensor::monomial(rank_, k.second, c).apply_linear(a);
    std::map<IndexWord, Rational> dual_acc;
    dual_acc.emplace(IndexWord{}, Rational(1));
    for (unsigned char j : k.first) {
      std::map<IndexWord, Rational> next;
      for (int m = 1; m <= rank_; ++m) {
        const Rational& entry = a_inv.at(static_cast<int>(j) - 1, m - 1);
        if (entry == 0) continue;
        for (const auto& [prefix, pc] : dual_acc) {
          IndexWord key = prefix;
          key.push_back(static_cast<unsigned char>(m));
          auto [it, inserted] = next.emplace(std::move(key), pc * entry);
          if (!inserted) it->second += pc * entry;
        }
      }
      dual_acc = std::move(next);
      if (dual_acc.empty()) break;
    }
    for (const auto& [in_key, in_c] : dual_acc) {
      for (const auto& [out_key, out_c] : out_part.terms()) {
        out.add_term(in_key, out_key, in_c * out_c);
      }
    }
  }
  return out;
}

std::string HomTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1 || (k.first.empty() && k.second.empty())) os << magnus::to_string(abs);
    if (abs != 1 && !(k.first.empty() && k.second.empty())) os << "*";
    for (unsigned char j : k.first) os << "l" << static_cast<int>(j);
    if (!k.first.empty() && !k.second.empty()) os << "(x)";
    for (unsigned char i : k.second) os << "X" << static_cast<int>(i);
  }
  return os.str();
}

Tensor contract_first(const HomTensor& u) {
  if (u.in_degree() != 1 || u.out_degree() < 1) {
    throw std::invalid_argument("contraction needs Hom(H, H^(p+1)) with p >= 0");
  }
  Tensor out(u.rank(), u.out_degree() - 1);
  for (const auto& [k, c] : u.terms()) {
    if (k.first[0] == k.second[0]) {
      out.add_term(k.second.substr(1), c);
    }
  }
  return out;
}

}  // namespace magnus
