#ifndef CELLRES_IO_HPP
#define CELLRES_IO_HPP

#include <string>

#include <json.hpp>

#include "cellres/betti_table.hpp"
#include "cellres/cell_complex.hpp"
#include "cellres/linear_quotients.hpp"
#include "cellres/monomial.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

using Json = nlohmann::ordered_json;

// {"n": int, "gens": [[e1,...,en], ...]}
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

// {"order": [gen indices], "q": [[var indices], ...]} -- generator indices
// are 0-based positions in the canonical generator list, variables 1-based.
Json order_to_json(const AdmissibleOrder& order);

// {"ranks": [...], "maps": [{"i": k, "entries": [{"row": r, "col": c,
//  "sign": s, "mono": [e...]}]}]}
Json complex_to_json(const FreeComplex& fc);

// {"cells": [{"id": k, "dim": d, "u": gen, "sigma": [vars], "label": [e...],
//  "faces": [{"id": j, "sign": s}]}]}
Json cell_complex_to_json(const CellComplex& X);

// {"vertices": [[e...], ...], "facets": [[v, ...], ...]}
Json simplicial_to_json(const SimplicialComplex& K);

// {"entries": [{"i": k, "deg": [e...], "beta": v}]}
Json betti_to_json(const BettiTable& table);

std::string face_poset_text(const CellComplex& X);

}  // namespace cellres

#endif
