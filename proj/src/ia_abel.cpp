#include "magnus/ia_abel.hpp"

#include <cctype>
#include <stdexcept>

#include "magnus/johnson.hpp"

namespace magnus {

Lambda2Basis::Lambda2Basis(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

int Lambda2Basis::dim() const { return n_ * n_ * (n_ - 1) / 2; }

Lambda2Basis::Slot Lambda2Basis::slot(int index) const {
  if (index < 0 || index >= dim()) throw std::out_of_range("basis slot out of range");
  const int pairs = n_ * (n_ - 1) / 2;
  int i = index / pairs + 1;
  int rest = index % pairs;
  for (int j = 1; j < n_; ++j) {
    int count = n_ - j;
    if (rest < count) return {i, j, j + 1 + rest};
    rest -= count;
  }
  throw std::logic_error("slot arithmetic error");
}

int Lambda2Basis::index(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || k <= j || k > n_) throw std::out_of_range("bad slot");
  const int pairs = n_ * (n_ - 1) / 2;
  int pair_index = 0;
  for (int a = 1; a < j; ++a) pair_index += n_ - a;
  pair_index += k - j - 1;
  return (i - 1) * pairs + pair_index;
}

std::string Lambda2Basis::describe(int index) const {
  Slot s = slot(index);
  return "l" + std::to_string(s.i) + "(X" + std::to_string(s.j) + "X" + std::to_string(s.k) +
         "-X" + std::to_string(s.k) + "X" + std::to_string(s.j) + ")";
}

std::optional<std::vector<Rational>> Lambda2Basis::coordinates(const HomTensor& u) const {
  if (u.rank() != n_ || u.in_degree() != 1 || u.out_degree() != 2) {
    throw std::invalid_argument("value is not a map H -> H tensor H");
  }
  std::vector<Rational> coords(static_cast<std::size_t>(dim()), Rational(0));
  for (int i = 1; i <= n_; ++i) {
    Tensor image = u.image_of(i);
    // Antisymmetry: coefficient at (j,k) must negate the one at (k,j).
    for (const auto& [idx, c] : image.terms()) {
      int j = static_cast<int>(idx[0]);
      int k = static_cast<int>(idx[1]);
      if (j == k) return std::nullopt;
      IndexWord swapped;
      swapped.push_back(idx[1]);
      swapped.push_back(idx[0]);
      if (image.coeff(swapped) != -c) return std::nullopt;
      if (j < k) coords[static_cast<std::size_t>(index(i, j, k))] = c;
    }
  }
  return coords;
}

HomTensor Lambda2Basis::element(const std::vector<Rational>& coordinates) const {
  if (static_cast<int>(coordinates.size()) != dim()) {
    throw std::invalid_argument("coordinate count mismatch");
  }
  HomTensor u(n_, 1, 2);
  for (int idx = 0; idx < dim(); ++idx) {
    const Rational& c = coordinates[static_cast<std::size_t>(idx)];
    if (c == 0) continue;
    Slot s = slot(idx);
    IndexWord in(1, static_cast<unsigned char>(s.i));
    IndexWord jk;
    jk.push_back(static_cast<unsigned char>(s.j));
    jk.push_back(static_cast<unsigned char>(s.k));
    IndexWord kj;
    kj.push_back(static_cast<unsigned char>(s.k));
    kj.push_back(static_cast<unsigned char>(s.j));
    u.add_term(in, jk, c);
    u.add_term(in, kj, -c);
  }
  return u;
}

GLMatrix tau1_matrix(int n) {
  Lambda2Basis basis(n);
  std::vector<FreeGroupEndo> generators = generator_library(GeneratorKind::MagnusK, n);
  if (static_cast<int>(generators.size()) != basis.dim()) {
    throw std::logic_error("generator count does not match the basis dimension");
  }
  // The first coordinate only needs two degrees of truncation.
  JohnsonCalculator calc(MagnusExpansion::standard(n, 2));
  GLMatrix m(basis.dim());
  for (std::size_t row = 0; row < generators.size(); ++row) {
    auto coords = basis.coordinates(calc.component(generators[row], 1));
    if (!coords) throw std::logic_error("generator value is not antisymmetric");
    for (int col = 0; col < basis.dim(); ++col) {
      m.set(static_cast<int>(row), col, (*coords)[static_cast<std::size_t>(col)]);
    }
  }
  return m;
}

std::vector<IAWordLetter> parse_ia_word(const std::string& text, int n) {
  std::vector<FreeGroupEndo> generators = generator_library(GeneratorKind::MagnusK, n);
  auto find_generator = [&](const std::string& label, std::size_t pos) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].label() == label) return g;
    }
    throw WordParseError(pos, "unknown generator \"" + label + "\"");
  };
  std::vector<IAWordLetter> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) {
      ++pos;
    }
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 'K') throw WordParseError(pos, "expected 'K[...]'");
    std::size_t start = pos;
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw WordParseError(pos, "missing ']'");
    std::string label = text.substr(start, close - start + 1);
    std::size_t g = find_generator(label, start);
    pos = close + 1;
    bool inverted = false;
    if (pos + 3 <= text.size() && text.compare(pos, 3, "^-1") == 0) {
      inverted = true;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '^') {
      throw WordParseError(pos, "only ^-1 is allowed");
    }
    out.push_back({g, inverted});
    skip();
  }
  return out;
}

AbelCoordinates abelianize_ia_word(const std::string& text, int n) {
  Lambda2Basis basis(n);
  std::vector<FreeGroupEndo> generators = generator_library(GeneratorKind::MagnusK, n);
  std::vector<IAWordLetter> letters = parse_ia_word(text, n);

  GLMatrix rows = tau1_matrix(n);
  std::vector<Rational> sum(static_cast<std::size_t>(basis.dim()), Rational(0));
  FreeGroupEndo composed = FreeGroupEndo::identity(n);
  for (const IAWordLetter& letter : letters) {
    const FreeGroupEndo& gen = generators[letter.generator_index];
    FreeGroupEndo factor = letter.inverted ? gen.inverse() : gen;
    composed = compose(composed, factor);
    for (int col = 0; col < basis.dim(); ++col) {
      const Rational& entry = rows.at(static_cast<int>(letter.generator_index), col);
      if (letter.inverted) {
        sum[static_cast<std::size_t>(col)] -= entry;
      } else {
        sum[static_cast<std::size_t>(col)] += entry;
      }
    }
  }

  // Independent route: the first Johnson coordinate of the composite.
  JohnsonCalculator calc(MagnusExpansion::standard(n, 2));
  auto direct = Lambda2Basis(n).coordinates(calc.component(composed, 1));
  if (!direct || *direct != sum) {
    throw std::logic_error("generator-row sum disagrees with the Johnson route");
  }

  AbelCoordinates out;
  out.reserve(sum.size());
  for (const Rational& c : sum) out.push_back(to_integer(c));
  return out;
}

HomTensor iota_star(const Tensor& y) {
  if (y.degree() != 1) throw std::invalid_argument("argument must have degree 1");
  const int n = y.rank();
  std::vector<Tensor> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    Tensor xj = Tensor::basis(n, j);
    images.push_back(tensor_product(y, xj) - tensor_product(xj, y));
  }
  return HomTensor::from_images(images);
}

std::vector<std::vector<Rational>> iota_star_matrix(int n) {
  Lambda2Basis basis(n);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(basis.dim()),
                                       std::vector<Rational>(static_cast<std::size_t>(n),
                                                             Rational(0)));
  for (int i = 1; i <= n; ++i) {
    auto coords = basis.coordinates(iota_star(Tensor::basis(n, i)));
    if (!coords) throw std::logic_error("image is not antisymmetric");
    for (int row = 0; row < basis.dim(); ++row) {
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(i) - 1] =
          (*coords)[static_cast<std::size_t>(row)];
    }
  }
  return m;
}

}  // namespace magnus
