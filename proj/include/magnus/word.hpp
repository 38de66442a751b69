#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace magnus {

class WordParseError : public std::runtime_error {
 public:
  WordParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Freely reduced word in the free group on n generators. Letters are
/// stored as signed indices: +i for x_i, -i for x_i^{-1}.
class Word {
 public:
  explicit Word(int rank);  // identity
  static Word generator(int rank, int i);
  static Word from_letters(int rank, const std::vector<int>& letters);  // reduces

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int exponent) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word& other) const {
    return rank_ == other.rank_ && letters_ == other.letters_;
  }
  bool operator!=(const Word& other) const { return !(*this == other); }

  /// Exponent sum per generator (the image in the abelianization).
  std::vector<long long> exponent_sums() const;

  /// Text form accepted back by parse_word; runs are compressed ("x1^3").
  std::string render() const;

 private:
  int rank_;
  std::vector<int> letters_;

  void push_reduced(int letter);
  friend Word parse_word(const std::string& text, int rank);
};

/// a b a^{-1} b^{-1}.
Word commutator(const Word& a, const Word& b);

/// Grammar: term := "x"<int> ["^" <signed int>]; terms separated by
/// whitespace or "*"; empty input is the identity. Throws WordParseError
/// with the offending position; generator indices must lie in 1..rank.
Word parse_word(const std::string& text, int rank);

}  // namespace magnus
