#include <doctest.h>

#include "helpers.hpp"

using namespace magnus;
using testutil::w;

namespace {

// Reduction oracle: cancel one random adjacent inverse pair at a time, in
// a random order, until none remain.
std::vector<int> reduce_randomly(std::vector<int> letters, testutil::Rng& rng) {
  while (true) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == -letters[i + 1]) sites.push_back(i);
    }
    if (sites.empty()) return letters;
    std::size_t pick = sites[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(sites.size()) - 1))];
    letters.erase(letters.begin() + static_cast<long>(pick),
                  letters.begin() + static_cast<long>(pick) + 2);
  }
}

}  // namespace

TEST_CASE("multiplication cancels at the seam") {
  CHECK(w("x1*x2", 3) * w("x2^-1*x3", 3) == w("x1*x3", 3));
  Word a = w("x1*x2^-1*x3", 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK(w("x1", 2) * w("x1", 2) == w("x1^2", 2));
  CHECK_THROWS_AS(w("x1", 2) * w("x1", 3), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(w("x1*x2", 2).inverse() == w("x2^-1*x1^-1", 2));
  CHECK(Word(2).inverse().is_identity());
  CHECK(w("x1^-1", 2).inverse() == w("x1", 2));
}

TEST_CASE("commutator convention") {
  CHECK(commutator(w("x1", 2), w("x2", 2)) == w("x1*x2*x1^-1*x2^-1", 2));
  Word a = w("x1*x2", 2);
  CHECK(commutator(a, a).is_identity());
  CHECK(commutator(w("x1", 2), Word(2)).is_identity());
}

TEST_CASE("parser grammar") {
  Word expected = Word::from_letters(2, {1, -2});
  CHECK(w("x1*x2^-1", 2) == expected);
  CHECK(w("x1 x2^-1", 2) == expected);
  CHECK(w("x1^3", 2) == Word::from_letters(2, {1, 1, 1}));
  CHECK(w("", 2).is_identity());
  CHECK(w("  ", 2).is_identity());
  CHECK(w("x1^0", 2).is_identity());
  CHECK(w("x2^-2", 2) == Word::from_letters(2, {-2, -2}));
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(w("x5", 4), WordParseError);
  try {
    w("x1*y2", 4);
    CHECK(false);
  } catch (const WordParseError& e) {
    CHECK(e.position() == 3);
  }
  try {
    w("x1*x9", 4);
    CHECK(false);
  } catch (const WordParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(w("x", 4), WordParseError);
  CHECK_THROWS_AS(w("x1^", 4), WordParseError);
}

TEST_CASE("render round trip on reduced words") {
  testutil::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 2 + trial % 3;
    Word word = random_word(rng, rank, 12);
    CHECK(parse_word(word.render(), rank) == word);
  }
  CHECK(w("x1*x1*x1*x2^-1", 2).render() == "x1^3*x2^-1");
}

TEST_CASE("reduction is confluent") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int rank = 2 + trial % 2;
    std::vector<int> raw;
    int len = rng.uniform(0, 14);
    for (int k = 0; k < len; ++k) {
      int idx = rng.uniform(1, rank);
      raw.push_back(rng.coin() ? idx : -idx);
    }
    Word reduced = Word::from_letters(rank, raw);
    std::vector<int> oracle = reduce_randomly(raw, rng);
    CHECK(reduced.letters() == oracle);
  }
}

TEST_CASE("multiplication is associative and inversion is an involution") {
  testutil::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = 2 + trial % 3;
    Word a = random_word(rng, rank, 8);
    Word b = random_word(rng, rank, 8);
    Word c = random_word(rng, rank, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.inverse().inverse() == a);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("exponent sums") {
  Word word = w("x1*x2*x1*x3^-2", 3);
  std::vector<long long> sums = word.exponent_sums();
  CHECK(sums == std::vector<long long>{2, 1, -2});
  CHECK(w("x1*x2*x1^-1*x2^-1", 2).exponent_sums() == std::vector<long long>{0, 0});
}
