#include "magnus/json_io.hpp"

#include <stdexcept>

namespace magnus {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing or non-integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

}  // namespace

Json tensor_to_json(const Tensor& t) {
  Json terms = Json::object();
  for (const auto& [idx, c] : t.terms()) {
    terms[index_word_key(idx)] = to_string(c);
  }
  return Json{{"rank", t.rank()}, {"degree", t.degree()}, {"terms", terms}};
}

Tensor tensor_from_json(const Json& j) {
  int rank = require_int(j, "rank");
  int degree = require_int(j, "degree");
  Tensor t(rank, degree);
  if (j.contains("terms")) {
    if (!j.at("terms").is_object()) throw std::invalid_argument("\"terms\" must be an object");
    for (const auto& [key, value] : j.at("terms").items()) {
      IndexWord idx = parse_index_key(key, rank);
      if (static_cast<int>(idx.size()) != degree) {
        throw std::invalid_argument("term key length does not match degree");
      }
      if (!value.is_string()) throw std::invalid_argument("coefficients must be strings");
      t.add_term(idx, parse_rational(value.get<std::string>()));
    }
  }
  return t;
}

Json series_to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  out.push_back(Json{{"N", s.truncation()}, {"rank", s.rank()}});
  for (int m = 0; m <= s.truncation(); ++m) {
    if (!s.component(m).is_zero()) out.push_back(tensor_to_json(s.component(m)));
  }
  return out;
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be a JSON array");
  int truncation = -1;
  int rank = -1;
  std::vector<Json> tensors;
  for (const Json& element : j) {
    if (element.is_object() && element.contains("N")) {
      truncation = require_int(element, "N");
      if (element.contains("rank")) rank = require_int(element, "rank");
    } else {
      tensors.push_back(element);
    }
  }
  if (truncation < 0) throw std::invalid_argument("series is missing its {\"N\": ...} element");
  if (rank < 0) {
    if (tensors.empty()) throw std::invalid_argument("cannot infer the rank of an empty series");
    rank = require_int(tensors.front(), "rank");
  }
  TruncatedSeries s(rank, truncation);
  for (const Json& element : tensors) {
    Tensor t = tensor_from_json(element);
    if (t.rank() != rank) throw std::invalid_argument("component rank mismatch");
    s.set_component(t);
  }
  return s;
}

Json word_to_json(const Word& w) {
  Json letters = Json::array();
  for (int letter : w.letters()) {
    int index = letter > 0 ? letter : -letter;
    int sign = letter > 0 ? 1 : -1;
    letters.push_back(Json::array({index, sign}));
  }
  return Json{{"rank", w.rank()}, {"letters", letters}};
}

Word word_from_json(const Json& j) {
  int rank = require_int(j, "rank");
  std::vector<int> letters;
  if (j.contains("letters")) {
    for (const Json& pair : j.at("letters")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("letters must be [index, sign] pairs");
      }
      int index = pair.at(0).get<int>();
      int sign = pair.at(1).get<int>();
      if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be 1 or -1");
      letters.push_back(sign * index);
    }
  }
  return Word::from_letters(rank, letters);
}

Json algebra_map_to_json(const AlgebraMap& u) {
  Json images = Json::array();
  for (int i = 1; i <= u.rank(); ++i) images.push_back(series_to_json(u.image(i)));
  return Json{{"rank", u.rank()}, {"N", u.truncation()}, {"images", images}};
}

AlgebraMap algebra_map_from_json(const Json& j) {
  int rank = require_int(j, "rank");
  int truncation = require_int(j, "N");
  std::vector<TruncatedSeries> images;
  for (const Json& s : j.at("images")) images.push_back(series_from_json(s));
  if (static_cast<int>(images.size()) != rank) {
    throw std::invalid_argument("image count does not match rank");
  }
  for (const TruncatedSeries& s : images) {
    if (s.truncation() != truncation) throw std::invalid_argument("image truncation mismatch");
  }
  return AlgebraMap::from_images(std::move(images));
}

Json ia_coordinates_to_json(const IACoordinates& c) {
  Json u = Json::object();
  for (std::size_t p = 1; p <= c.u.size(); ++p) {
    Json images = Json::array();
    const HomTensor& up = c.u[p - 1];
    for (int i = 1; i <= c.rank; ++i) images.push_back(tensor_to_json(up.image_of(i)));
    u[std::to_string(p)] = images;
  }
  return Json{{"u", u}};
}

IACoordinates ia_coordinates_from_json(const Json& j) {
  if (!j.contains("u") || !j.at("u").is_object()) {
    throw std::invalid_argument("missing \"u\" object");
  }
  IACoordinates c;
  int max_p = 0;
  for (const auto& [key, value] : j.at("u").items()) {
    int p = std::stoi(key);
    if (p < 1) throw std::invalid_argument("coordinate keys must be positive");
    max_p = std::max(max_p, p);
    (void)value;
  }
  if (max_p == 0) throw std::invalid_argument("empty coordinates");
  c.u.reserve(static_cast<std::size_t>(max_p));
  for (int p = 1; p <= max_p; ++p) {
    const Json& images = j.at("u").at(std::to_string(p));
    std::vector<Tensor> tensors;
    for (const Json& t : images) tensors.push_back(tensor_from_json(t));
    c.u.push_back(HomTensor::from_images(tensors));
  }
  c.rank = c.u.front().rank();
  c.truncation = max_p + 1;
  return c;
}

Json endo_to_json(const FreeGroupEndo& phi) {
  Json images = Json::array();
  for (int i = 1; i <= phi.rank(); ++i) images.push_back(phi.image(i).render());
  Json out{{"rank", phi.rank()}, {"images", images}};
  if (phi.has_inverse()) {
    FreeGroupEndo inv = phi.inverse();
    Json inverse = Json::array();
    for (int i = 1; i <= phi.rank(); ++i) inverse.push_back(inv.image(i).render());
    out["inverse"] = inverse;
  }
  if (!phi.label().empty()) out["label"] = phi.label();
  return out;
}

FreeGroupEndo endo_from_json(const Json& j) {
  int rank = require_int(j, "rank");
  std::vector<Word> images;
  for (const Json& text : j.at("images")) {
    images.push_back(parse_word(text.get<std::string>(), rank));
  }
  std::optional<std::vector<Word>> inverse;
  if (j.contains("inverse")) {
    std::vector<Word> inv;
    for (const Json& text : j.at("inverse")) {
      inv.push_back(parse_word(text.get<std::string>(), rank));
    }
    inverse = std::move(inv);
  }
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string{};
  return FreeGroupEndo(rank, std::move(images), std::move(inverse), std::move(label));
}

Json expansion_to_json(const MagnusExpansion& theta) {
  Json xi = Json::array();
  if (!theta.is_standard()) {
    for (int i = 1; i <= theta.rank(); ++i) xi.push_back(series_to_json(theta.offset(i)));
  }
  return Json{{"rank", theta.rank()}, {"N", theta.truncation()}, {"xi", xi}};
}

MagnusExpansion expansion_from_json(const Json& j) {
  int rank = require_int(j, "rank");
  int truncation = require_int(j, "N");
  if (!j.contains("xi") || j.at("xi").empty()) {
    return MagnusExpansion::standard(rank, truncation);
  }
  std::vector<TruncatedSeries> xi;
  for (const Json& s : j.at("xi")) xi.push_back(series_from_json(s));
  if (static_cast<int>(xi.size()) != rank) {
    throw std::invalid_argument("offset count does not match rank");
  }
  for (const TruncatedSeries& s : xi) {
    if (s.truncation() != truncation) throw std::invalid_argument("offset truncation mismatch");
  }
  return MagnusExpansion::from_offsets(std::move(xi));
}

Json hom_to_json(const HomTensor& u) {
  if (u.in_degree() != 1) throw std::invalid_argument("expected a map defined on H");
  Json images = Json::array();
  for (int i = 1; i <= u.rank(); ++i) images.push_back(tensor_to_json(u.image_of(i)));
  return Json{{"p", u.out_degree() - 1}, {"images", images}};
}

}  // namespace magnus
