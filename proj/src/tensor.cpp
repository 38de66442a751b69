#include "magnus/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace magnus {

std::string index_word_key(const IndexWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

IndexWord parse_index_key(const std::string& key, int rank) {
  IndexWord out;
  if (key.empty()) return out;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    std::string piece = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty()) throw std::invalid_argument("empty index in key \"" + key + "\"");
    int value = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad index in key \"" + key + "\"");
      value = value * 10 + (c - '0');
      if (value > kMaxRank) break;
    }
    if (value < 1 || value > rank) {
      throw std::invalid_argument("index out of range 1.." + std::to_string(rank) + " in key \"" + key + "\"");
    }
    out.push_back(static_cast<unsigned char>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Tensor::Tensor(int rank, int degree) : rank_(rank), degree_(degree) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("tensor rank out of range");
  if (degree < 0) throw std::invalid_argument("tensor degree must be nonnegative");
}

Tensor Tensor::scalar(int rank, const Rational& value) {
  Tensor t(rank, 0);
  t.add_term(IndexWord{}, value);
  return t;
}

Tensor Tensor::basis(int rank, int i) {
  Tensor t(rank, 1);
  if (i < 1 || i > rank) throw std::out_of_range("generator index out of range");
  t.add_term(IndexWord(1, static_cast<unsigned char>(i)), Rational(1));
  return t;
}

Tensor Tensor::monomial(int rank, const IndexWord& idx, const Rational& coeff) {
  Tensor t(rank, static_cast<int>(idx.size()));
  t.add_term(idx, coeff);
  return t;
}

void Tensor::check_key(const IndexWord& idx) const {
  if (static_cast<int>(idx.size()) != degree_) {
    throw std::invalid_argument("index length does not match tensor degree");
  }
  for (unsigned char c : idx) {
    if (c < 1 || static_cast<int>(c) > rank_) {
      throw std::out_of_range("generator index out of range");
    }
  }
}

Rational Tensor::coeff(const IndexWord& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(const IndexWord& idx, const Rational& coeff) {
  check_key(idx);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (rank_ != other.rank_ || degree_ != other.degree_) {
    throw std::invalid_argument("tensor shape mismatch");
  }
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (rank_ != other.rank_ || degree_ != other.degree_) {
    throw std::invalid_argument("tensor shape mismatch");
  }
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scalar;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor out(rank_, degree_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

bool Tensor::operator==(const Tensor& other) const {
  return rank_ == other.rank_ && degree_ == other.degree_ && terms_ == other.terms_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor rank mismatch");
  Tensor out(a.rank(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      out.add_term(ia + ib, ca * cb);
    }
  }
  return out;
}

Tensor Tensor::apply_linear(const GLMatrix& a) const {
  if (a.size() != rank_) throw std::invalid_argument("matrix size does not match tensor rank");
  Tensor out(rank_, degree_);
  for (const auto& [idx, c] : terms_) {
    // Expand slot by slot: each X_j becomes the j-th column of a.
    std::map<IndexWord, Rational> acc;
    acc.emplace(IndexWord{}, c);
    for (unsigned char j : idx) {
      std::map<IndexWord, Rational> next;
      for (int i = 1; i <= rank_; ++i) {
        const Rational& entry = a.at(i - 1, j - 1);
        if (entry == 0) continue;
        for (const auto& [prefix, pc] : acc) {
          IndexWord key = prefix;
          key.push_back(static_cast<unsigned char>(i));
          auto [it, inserted] = next.emplace(std::move(key), pc * entry);
          if (!inserted) it->second += pc * entry;
        }
      }
      acc = std::move(next);
      if (acc.empty()) break;
    }
    for (const auto& [key, val] : acc) out.add_term(key, val);
  }
  return out;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
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
  return os.str();
}

}  // namespace magnus
