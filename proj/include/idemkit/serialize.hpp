#pragma once

#include <string>

#include <json.hpp>

#include "idemkit/axioms.hpp"
#include "idemkit/dequantize.hpp"
#include "idemkit/digraph.hpp"
#include "idemkit/grid.hpp"
#include "idemkit/matrix.hpp"

namespace idemkit {

using Json = nlohmann::ordered_json;

/// Reads a whole file and parses it; ParseError carries the 1-based line.
Json parse_file(const std::string& path);
Json parse_text(const std::string& text, const std::string& origin = "<input>");

/// Value literals: numbers, "inf"/"-inf", true/false, "O"/"I"/"a" for logic3,
/// vertex arrays for polygons, two-element arrays for product pairs.
/// ValidationError when the literal is not in the carrier.
Value value_from_json(const Semiring& s, const Json& j);
Json value_to_json(const Semiring& s, const Value& v);

/// {"semiring": id, "rows": n, "cols": m, "entries": [[...], ...]}
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// {"semiring": id, "nodes": n, "arcs": [{"from": i, "to": j, "w": lit}, ...]}
/// with 1-based node indices in the file.
Digraph digraph_from_json(const Json& j);
Json digraph_to_json(const Digraph& g);

/// {"semiring": id, "grid": {"kind":"real","points":[...]} |
///  {"kind":"cyclic","n":k}, "values": [...]}
GridFunction gridfunction_from_json(const Json& j);
Json gridfunction_to_json(const GridFunction& f);

/// {"semiring": id, "xgrid": ..., "ygrid": ..., "values": [[...], ...]}
/// row-major over x then y.
Kernel kernel_from_json(const Json& j);
Json kernel_to_json(const Kernel& k);

/// {"S0": gridfunction, "H": {"kind":"quadratic"} |
///  {"kind":"sampled","f": gridfunction}, "t": tau}
CauchyProblem cauchy_problem_from_json(const Json& j);

/// {"x":[...], "t":[...], "w":[[...], ...]} with w[i][j] = w(x_i, t_j).
SpaceTimeField field_from_json(const Json& j);

Json eigenpair_to_json(const Semiring& s, const EigenPair& p);
Json report_to_json(const AxiomsReport& r);
Json witnesses_to_json(const std::vector<WitnessPath>& ws);

/// Tab-separated rows with inf/-inf tokens; UnsupportedFormat off numeric
/// carriers.
std::string matrix_to_tsv(const Matrix& m);

} // namespace idemkit
