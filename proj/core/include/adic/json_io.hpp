#pragma once

// JSON encodings of the library types. Readers take the JSON pointer of the
// value they parse and throw ParseError carrying that pointer on bad input.
// Writers emit the same schema the readers accept.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adic/gammagraph.hpp"
#include "adic/ordgroup.hpp"
#include "adic/p1tree.hpp"
#include "adic/plfun.hpp"
#include "adic/quasitop.hpp"
#include "adic/ranger.hpp"
#include "adic/spa.hpp"

namespace adic::json {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; plain integers are accepted on input.
Rational rational_from(const Json& j, const std::string& ptr);
Json to_json(const Rational& q);

GroupElem elem_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const GroupElem& g);

// {"rank": h, "lattice": [elem, ...]?}
Group group_from(const Json& j, const std::string& ptr);
Json to_json(const Group& g);

// {"type": "principal", "coords": elem}
// {"type": "cut", "prefix": [...], "tail": "+inf" | "-inf" | {"a", "b", "d"}}
// {"type": "infinitesimal", "coords": elem, "sign": "+" | "-"}
// {"type": "unbounded", "sign": "+" | "-"}
Ranger ranger_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const Ranger& r);

Json to_json(const ExtValue& v);

// {"domain": [lo, hi], "breakpoints": [...], "slopes": [...], "anchor": elem, "pinch": ["left", "right"]}
PLFn plfn_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const PLFn& f);

LinElem linelem_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const LinElem& f);
A1Point a1point_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const A1Point& p);

// {"vertices": [{"id", "kind"}], "edges": [{"id", "u", "v", "length": elem | null}],
//  "skeleton": {"vertices": [id], "edges": [id], "pieces": [{"edge", "from": "u" | "v", "extent": ranger}]}}
GammaGraph graph_from(const Json& j, int rank, const std::string& ptr);
Json to_json(const GammaGraph& g);
// {"vertex": id} or {"edge": id, "offset": ranger}
GraphPoint graph_point_from(const Json& j, const GammaGraph& g, const std::string& ptr);
Json to_json(const GammaGraph& g, const GraphPoint& x);

// Labels plus [[a, b, elem], ...]; unlisted pairs are an error.
CenterConfig config_from(const Json& centers, const Json& logdist, int rank, const std::string& ptr);
Json logdist_json(const CenterConfig& c);

// "inf" | label | {"center": label, "radius": ranger}
P1Point p1point_from(const Json& j, const CenterConfig& c, const std::string& ptr);
Json to_json(const CenterConfig& c, const P1Point& x);

// {"unit": elem, "factors": [[label, m], ...]}
FactoredFn factored_from(const Json& j, const CenterConfig& c, const std::string& ptr);
Json to_json(const CenterConfig& c, const FactoredFn& f);

// {"source": {"centers", "logdist"}, "target": {...}, "image": {label: label},
//  "fibers": [{"base": label, "factored": fn}]}
MapData map_from(const Json& j, int rank, const std::string& ptr);

// {"points": [label], "specializations": [[x, y], ...]} with x in the closure of y.
FiniteSpace space_from(const Json& j, const std::string& ptr);
Json to_json(const FiniteSpace& sp);
// {"order": [label], "closed": [label]}
MarkedOrder marked_from(const Json& j, const std::string& ptr);
Json to_json(const QuasiTreeReport& r, const FiniteSpace& sp);

}  // namespace adic::json
