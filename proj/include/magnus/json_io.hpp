#pragma once

#include <json.hpp>

#include "magnus/algebra_map.hpp"
#include "magnus/endo.hpp"
#include "magnus/expansion.hpp"
#include "magnus/hom_tensor.hpp"
#include "magnus/series.hpp"
#include "magnus/word.hpp"

namespace magnus {

using Json = nlohmann::json;

// Tensor: {"rank": n, "degree": m, "terms": {"1,2,1": "3", "2,2": "-1/2"}},
// keys comma-separated 1-based indices, values integers or "p/q".
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

// TruncatedSeries: array of tensor objects plus a {"N": N, "rank": n}
// header element (written first; accepted anywhere).
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// Word: {"rank": n, "letters": [[1,1],[2,-1]]}.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// AlgebraMap: {"rank": n, "N": N, "images": [series, ...]}.
Json algebra_map_to_json(const AlgebraMap& u);
AlgebraMap algebra_map_from_json(const Json& j);

// IACoordinates: {"u": {"1": [tensor, ...], "2": [...]}}.
Json ia_coordinates_to_json(const IACoordinates& c);
IACoordinates ia_coordinates_from_json(const Json& j);

// FreeGroupEndo: {"rank": n, "images": ["x2*x1*x2^-1", ...],
//                 "inverse": [...]} (inverse optional).
Json endo_to_json(const FreeGroupEndo& phi);
FreeGroupEndo endo_from_json(const Json& j);

// MagnusExpansion: {"rank": n, "N": N, "xi": [series, ...]}; empty xi is
// the standard expansion.
Json expansion_to_json(const MagnusExpansion& theta);
MagnusExpansion expansion_from_json(const Json& j);

// Hom values (Johnson coordinates): {"p": p, "images": [tensor, ...]}.
Json hom_to_json(const HomTensor& u);

}  // namespace magnus
