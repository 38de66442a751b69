#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "magnus/cochain.hpp"
#include "magnus/endo.hpp"
#include "magnus/expansion.hpp"

namespace magnus {

/// Seeded generator with platform-stable draws (no std distributions, so
/// identical seeds give identical streams everywhere).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Reduced word of length ≤ max_length (possibly the identity).
Word random_word(Rng& rng, int rank, int max_length);
Word random_nonidentity_word(Rng& rng, int rank, int max_length);

/// Offset for one generator: at most max_terms_per_degree monomials per
/// degree ≥ 2, coefficients in {-3..3} \ {0}.
TruncatedSeries random_offset(Rng& rng, int rank, int truncation, int max_terms_per_degree);

MagnusExpansion random_expansion(Rng& rng, int rank, int truncation,
                                 int max_terms_per_degree = 3);

/// Product of `length` draws from the given libraries (or their inverses);
/// carries a certified inverse.
FreeGroupEndo random_library_product(Rng& rng, const std::vector<FreeGroupEndo>& library,
                                     int length);

/// IA algebra map with sparse random coordinates.
AlgebraMap random_ia_map(Rng& rng, int rank, int truncation, int max_terms_per_degree = 2);

GroupElement random_semidirect(Rng& rng, const std::vector<FreeGroupEndo>& library, int rank,
                               int word_length, int endo_length);

}  // namespace magnus
