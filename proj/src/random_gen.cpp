#include "magnus/random_gen.hpp"

#include <stdexcept>

namespace magnus {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Word random_word(Rng& rng, int rank, int max_length) {
  int length = rng.uniform(0, max_length);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    int index = rng.uniform(1, rank);
    letters.push_back(rng.coin() ? index : -index);
  }
  return Word::from_letters(rank, letters);
}

Word random_nonidentity_word(Rng& rng, int rank, int max_length) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Word w = random_word(rng, rank, max_length);
    if (!w.is_identity()) return w;
  }
  return Word::generator(rank, 1);
}

TruncatedSeries random_offset(Rng& rng, int rank, int truncation, int max_terms_per_degree) {
  TruncatedSeries out(rank, truncation);
  for (int degree = 2; degree <= truncation; ++degree) {
    Tensor component(rank, degree);
    int terms = rng.uniform(0, max_terms_per_degree);
    for (int t = 0; t < terms; ++t) {
      IndexWord idx;
      for (int s = 0; s < degree; ++s) {
        idx.push_back(static_cast<unsigned char>(rng.uniform(1, rank)));
      }
      int coeff = rng.uniform(1, 3);
      component.add_term(idx, Rational(rng.coin() ? coeff : -coeff));
    }
    out.set_component(component);
  }
  return out;
}

MagnusExpansion random_expansion(Rng& rng, int rank, int truncation, int max_terms_per_degree) {
  std::vector<TruncatedSeries> xi;
  xi.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    xi.push_back(random_offset(rng, rank, truncation, max_terms_per_degree));
  }
  return MagnusExpansion::from_offsets(std::move(xi));
}

FreeGroupEndo random_library_product(Rng& rng, const std::vector<FreeGroupEndo>& library,
                                     int length) {
  if (library.empty()) throw std::invalid_argument("empty library");
  FreeGroupEndo out = FreeGroupEndo::identity(library.front().rank());
  for (int k = 0; k < length; ++k) {
    const FreeGroupEndo& pick =
        library[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(library.size()) - 1))];
    out = compose(out, rng.coin() ? pick : pick.inverse());
  }
  return out;
}

AlgebraMap random_ia_map(Rng& rng, int rank, int truncation, int max_terms_per_degree) {
  std::vector<TruncatedSeries> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    TruncatedSeries s = TruncatedSeries::generator(rank, truncation, i);
    s += random_offset(rng, rank, truncation, max_terms_per_degree);
    images.push_back(std::move(s));
  }
  return AlgebraMap::from_images(std::move(images));
}

GroupElement random_semidirect(Rng& rng, const std::vector<FreeGroupEndo>& library, int rank,
                               int word_length, int endo_length) {
  return GroupElement::semidirect(random_word(rng, rank, word_length),
                                  random_library_product(rng, library, endo_length));
}

}  // namespace magnus
