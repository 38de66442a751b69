#include "magnus/word.hpp"

#include <cctype>
#include <cstdlib>

namespace magnus {

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be positive");
}

Word Word::generator(int rank, int i) {
  Word w(rank);
  if (i < 1 || i > rank) throw std::out_of_range("generator index out of range");
  w.letters_.push_back(i);
  return w;
}

Word Word::from_letters(int rank, const std::vector<int>& letters) {
  Word w(rank);
  for (int letter : letters) {
    int abs = letter < 0 ? -letter : letter;
    if (letter == 0 || abs > rank) throw std::out_of_range("letter out of range");
    w.push_reduced(letter);
  }
  return w;
}

void Word::push_reduced(int letter) {
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);  // already reduced when the input is
  }
  return out;
}

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  int count = exponent < 0 ? -exponent : exponent;
  Word out(rank_);
  for (int k = 0; k < count; ++k) out = out * base;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("word rank mismatch");
  Word out(a.rank());
  out.letters_ = a.letters_;
  for (int letter : b.letters_) out.push_reduced(letter);
  return out;
}

std::vector<long long> Word::exponent_sums() const {
  std::vector<long long> sums(static_cast<std::size_t>(rank_), 0);
  for (int letter : letters_) {
    if (letter > 0) {
      ++sums[static_cast<std::size_t>(letter) - 1];
    } else {
      --sums[static_cast<std::size_t>(-letter) - 1];
    }
  }
  return sums;
}

std::string Word::render() const {
  if (letters_.empty()) return "";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long run = static_cast<long long>(j - i);
    int letter = letters_[i];
    long long exponent = letter > 0 ? run : -run;
    int index = letter > 0 ? letter : -letter;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(index);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_separators() {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) ++pos;
  }
  long long read_int(bool allow_sign) {
    std::size_t start = pos;
    bool negative = false;
    if (allow_sign && !done() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw WordParseError(pos, "expected an integer");
    }
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw WordParseError(start, "integer too large");
      ++pos;
    }
    return negative ? -value : value;
  }
};

}  // namespace

Word parse_word(const std::string& text, int rank) {
  Word out(rank);
  Cursor in{text};
  in.skip_separators();
  while (!in.done()) {
    if (in.peek() != 'x' && in.peek() != 'X') {
      throw WordParseError(in.pos, "expected generator 'x<i>'");
    }
    std::size_t term_start = in.pos;
    ++in.pos;
    long long index = in.read_int(false);
    if (index < 1 || index > rank) {
      throw WordParseError(term_start, "generator index out of range 1.." + std::to_string(rank));
    }
    long long exponent = 1;
    if (!in.done() && in.peek() == '^') {
      ++in.pos;
      exponent = in.read_int(true);
    }
    int letter = exponent < 0 ? -static_cast<int>(index) : static_cast<int>(index);
    long long count = exponent < 0 ? -exponent : exponent;
    for (long long k = 0; k < count; ++k) out.push_reduced(letter);
    in.skip_separators();
  }
  return out;
}

}  // namespace magnus
