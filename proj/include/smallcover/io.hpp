#pragma once

#include <string>

#include "json.hpp"
#include "smallcover/charfunc.hpp"
#include "smallcover/classify.hpp"
#include "smallcover/coxeter.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/zhomology.hpp"

namespace smallcover::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// { "v": 1, "dim": n, "num_facets": r, "vertices": [[facet indices], ...] }
Json to_json(const SimplePolytope& p);
SimplePolytope polytope_from_json(const Json& j);

// { "v": 1, "t": t, "columns": [[bit of e_1, ..., bit of e_t], ...] }
Json to_json(const CharFunc& lambda);
CharFunc charfunc_from_json(const Json& j);

// { "v": 1, "n": n, "entries": [[0/1, ...], ...] }
BottMatrix bott_from_json(const Json& j);

// [facet indices] or { "v": 1, "word": [...] }
Word word_from_json(const Json& j);

Json to_json(const BettiVector& b);
Json to_json(const ClassificationReport& rep);
Json to_json(const RealBottAudit& audit);
Json to_json(const QuotientComplex& c);
Json to_json(const Enumeration& e, bool modulo_gl);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace smallcover::io
