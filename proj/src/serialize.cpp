#include "idemkit/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "idemkit/numfmt.hpp"

namespace idemkit {

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

[[noreturn]] void fail_validation(const std::string& what) { throw ValidationError(what); }

const Json& expect_field(const Json& j, const char* key, const char* in) {
    auto it = j.find(key);
    if (it == j.end()) fail_validation(std::string(in) + " is missing the '" + key + "' field");
    return *it;
}

SemiringPtr semiring_of(const Json& j, const char* in) {
    const Json& id = expect_field(j, "semiring", in);
    if (!id.is_string()) fail_validation(std::string(in) + ": 'semiring' must be an id string");
    return make_semiring(id.get<std::string>());
}

Json number_or_token(const ExtReal& e) {
    if (e.neg()) return Json("-inf");
    if (e.pos()) return Json("inf");
    if (std::floor(e.x) == e.x && std::abs(e.x) < 9.0e15)
        return Json(static_cast<std::int64_t>(e.x));
    return Json(e.x);
}

bool nonneg_integer(const Json& j) {
    return (j.is_number_unsigned()) ||
           (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

} // namespace

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what(), line_of_offset(text, e.byte));
    }
}

Json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

Value value_from_json(const Semiring& s, const Json& j) {
    Value v;
    switch (s.carrier()) {
    case Carrier::ExtendedReal:
        if (j.is_number()) {
            v = Value::real(j.get<double>());
        } else if (j.is_string() && j.get<std::string>() == "inf") {
            v = Value::pos_inf();
        } else if (j.is_string() && j.get<std::string>() == "-inf") {
            v = Value::neg_inf();
        } else {
            fail_validation("expected a number or inf/-inf literal for " + s.id() + ", got " +
                            j.dump());
        }
        break;
    case Carrier::Bit:
        if (!j.is_boolean()) fail_validation("expected true/false for boolean, got " + j.dump());
        v = Value::bit(j.get<bool>());
        break;
    case Carrier::Logic3: {
        const std::string t = j.is_string() ? j.get<std::string>() : std::string();
        if (t == "O") v = Value::logic(Logic3::Zero);
        else if (t == "I") v = Value::logic(Logic3::One);
        else if (t == "a") v = Value::logic(Logic3::Ind);
        else fail_validation("expected \"O\", \"I\" or \"a\" for logic3, got " + j.dump());
        break;
    }
    case Carrier::Polygon: {
        if (!j.is_array()) fail_validation("expected a vertex array for polygon, got " + j.dump());
        std::vector<IntPolygon::Point> pts;
        for (const Json& p : j) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                fail_validation("polygon vertices must be [x, y] integer pairs");
            pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
        }
        v = Value::polygon(IntPolygon::hull_of(std::move(pts)));
        break;
    }
    case Carrier::Pair: {
        if (!j.is_array() || j.size() != 2)
            fail_validation("expected a two-element array for a product value, got " + j.dump());
        auto [left, right] = product_factors(s);
        v = Value::pair(value_from_json(*left, j[0]), value_from_json(*right, j[1]));
        break;
    }
    }
    if (!s.contains(v))
        fail_validation("value " + j.dump() + " lies outside the carrier of " + s.id());
    return v;
}

Json value_to_json(const Semiring& s, const Value& v) {
    switch (s.carrier()) {
    case Carrier::ExtendedReal: return number_or_token(v.ext());
    case Carrier::Bit: return Json(v.bit_value());
    case Carrier::Logic3: return Json(to_string(v.logic_value()));
    case Carrier::Polygon: {
        Json arr = Json::array();
        for (const auto& p : v.polygon_value().vertices()) arr.push_back(Json::array({p[0], p[1]}));
        return arr;
    }
    case Carrier::Pair: {
        auto [left, right] = product_factors(s);
        return Json::array({value_to_json(*left, v.first()), value_to_json(*right, v.second())});
    }
    }
    fail_validation("unreachable carrier");
}

Matrix matrix_from_json(const Json& j) {
    SemiringPtr s = semiring_of(j, "matrix");
    const Json& rows_j = expect_field(j, "rows", "matrix");
    const Json& cols_j = expect_field(j, "cols", "matrix");
    const Json& entries = expect_field(j, "entries", "matrix");
    if (!nonneg_integer(rows_j) || !nonneg_integer(cols_j))
        fail_validation("matrix rows/cols must be nonnegative integers");
    const std::size_t rows = rows_j.get<std::size_t>(), cols = cols_j.get<std::size_t>();
    if (!entries.is_array() || entries.size() != rows)
        fail_validation("matrix 'entries' must hold one array per row");
    std::vector<Value> vals;
    vals.reserve(rows * cols);
    for (const Json& row : entries) {
        if (!row.is_array() || row.size() != cols)
            fail_validation("each matrix row must hold 'cols' literals");
        for (const Json& lit : row) vals.push_back(value_from_json(*s, lit));
    }
    return Matrix(std::move(s), rows, cols, std::move(vals));
}

Json matrix_to_json(const Matrix& m) {
    Json out;
    out["semiring"] = m.semiring()->id();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(value_to_json(*m.semiring(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Digraph digraph_from_json(const Json& j) {
    SemiringPtr s = semiring_of(j, "graph");
    const Json& nodes_j = expect_field(j, "nodes", "graph");
    if (!nonneg_integer(nodes_j)) fail_validation("graph 'nodes' must be a nonnegative integer");
    const int n = nodes_j.get<int>();
    std::vector<Arc> arcs;
    if (auto it = j.find("arcs"); it != j.end()) {
        if (!it->is_array()) fail_validation("graph 'arcs' must be an array");
        for (const Json& a : *it) {
            const Json& from = expect_field(a, "from", "arc");
            const Json& to = expect_field(a, "to", "arc");
            const Json& w = expect_field(a, "w", "arc");
            if (!from.is_number_integer() || !to.is_number_integer())
                fail_validation("arc endpoints must be integers");
            Value weight = value_from_json(*s, w);
            if (s->equal(weight, s->zero()))
                fail_validation("arc weights must differ from the semiring zero");
            // files are 1-based, memory is 0-based
            arcs.push_back(Arc{from.get<int>() - 1, to.get<int>() - 1, std::move(weight)});
        }
    }
    return Digraph(std::move(s), n, std::move(arcs));
}

Json digraph_to_json(const Digraph& g) {
    Json out;
    out["semiring"] = g.semiring()->id();
    out["nodes"] = g.nodes();
    Json arcs = Json::array();
    for (const Arc& a : g.arcs()) {
        Json arc;
        arc["from"] = a.from + 1;
        arc["to"] = a.to + 1;
        arc["w"] = value_to_json(*g.semiring(), a.w);
        arcs.push_back(std::move(arc));
    }
    out["arcs"] = std::move(arcs);
    return out;
}

namespace {

Grid grid_from_json(const Json& j) {
    const Json& kind = expect_field(j, "kind", "grid");
    if (kind == "real") {
        const Json& pts = expect_field(j, "points", "real grid");
        if (!pts.is_array()) fail_validation("real grid 'points' must be an array");
        RealGrid g;
        for (const Json& p : pts) {
            if (!p.is_number()) fail_validation("real grid points must be numbers");
            g.points.push_back(p.get<double>());
        }
        validate_grid(Grid{g});
        return Grid{std::move(g)};
    }
    if (kind == "cyclic") {
        const Json& n = expect_field(j, "n", "cyclic grid");
        if (!nonneg_integer(n)) fail_validation("cyclic grid 'n' must be a nonnegative integer");
        return Grid{CyclicGroup{n.get<std::size_t>()}};
    }
    fail_validation("grid 'kind' must be \"real\" or \"cyclic\"");
}

Json grid_to_json(const Grid& g) {
    Json out;
    if (const auto* r = std::get_if<RealGrid>(&g)) {
        out["kind"] = "real";
        Json pts = Json::array();
        for (double p : r->points) pts.push_back(number_or_token(ExtReal::of(p)));
        out["points"] = std::move(pts);
    } else {
        out["kind"] = "cyclic";
        out["n"] = std::get<CyclicGroup>(g).n;
    }
    return out;
}

} // namespace

GridFunction gridfunction_from_json(const Json& j) {
    SemiringPtr s = semiring_of(j, "grid function");
    Grid grid = grid_from_json(expect_field(j, "grid", "grid function"));
    const Json& values = expect_field(j, "values", "grid function");
    if (!values.is_array()) fail_validation("grid function 'values' must be an array");
    std::vector<Value> vals;
    vals.reserve(values.size());
    for (const Json& lit : values) vals.push_back(value_from_json(*s, lit));
    return GridFunction(std::move(s), std::move(grid), std::move(vals));
}

Json gridfunction_to_json(const GridFunction& f) {
    Json out;
    out["semiring"] = f.semiring()->id();
    out["grid"] = grid_to_json(f.grid());
    Json vals = Json::array();
    for (const Value& v : f.values()) vals.push_back(value_to_json(*f.semiring(), v));
    out["values"] = std::move(vals);
    return out;
}

Kernel kernel_from_json(const Json& j) {
    SemiringPtr s = semiring_of(j, "kernel");
    Grid xg = grid_from_json(expect_field(j, "xgrid", "kernel"));
    Grid yg = grid_from_json(expect_field(j, "ygrid", "kernel"));
    const Json& values = expect_field(j, "values", "kernel");
    if (!values.is_array() || values.size() != grid_size(xg))
        fail_validation("kernel 'values' must hold one row per x point");
    std::vector<Value> vals;
    for (const Json& row : values) {
        if (!row.is_array() || row.size() != grid_size(yg))
            fail_validation("each kernel row must hold one literal per y point");
        for (const Json& lit : row) vals.push_back(value_from_json(*s, lit));
    }
    return Kernel(std::move(s), std::move(xg), std::move(yg), std::move(vals));
}

Json kernel_to_json(const Kernel& k) {
    Json out;
    out["semiring"] = k.semiring()->id();
    out["xgrid"] = grid_to_json(k.xgrid());
    out["ygrid"] = grid_to_json(k.ygrid());
    Json rows = Json::array();
    for (std::size_t i = 0; i < k.xsize(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < k.ysize(); ++j)
            row.push_back(value_to_json(*k.semiring(), k.at(i, j)));
        rows.push_back(std::move(row));
    }
    out["values"] = std::move(rows);
    return out;
}

CauchyProblem cauchy_problem_from_json(const Json& j) {
    GridFunction s0 = gridfunction_from_json(expect_field(j, "S0", "Cauchy problem"));
    const Json& hj = expect_field(j, "H", "Cauchy problem");
    const Json& kind = expect_field(hj, "kind", "Hamiltonian");
    Hamiltonian h;
    if (kind == "quadratic") {
        h = QuadraticHamiltonian{};
    } else if (kind == "sampled") {
        GridFunction f = gridfunction_from_json(expect_field(hj, "f", "sampled Hamiltonian"));
        const auto* grid = std::get_if<RealGrid>(&f.grid());
        if (!grid) fail_validation("a sampled Hamiltonian needs a real grid");
        SampledHamiltonian sh;
        sh.pgrid = *grid;
        for (const Value& v : f.values()) {
            if (!v.is_ext() || !v.ext().finite())
                fail_validation("sampled Hamiltonian values must be finite numbers");
            sh.values.push_back(v.ext().x);
        }
        h = std::move(sh);
    } else {
        fail_validation("Hamiltonian 'kind' must be \"quadratic\" or \"sampled\"");
    }
    const Json& t = expect_field(j, "t", "Cauchy problem");
    if (!t.is_number() || t.get<double>() < 0.0)
        fail_validation("Cauchy problem 't' must be a nonnegative number");
    return CauchyProblem{std::move(s0), std::move(h), t.get<double>()};
}

SpaceTimeField field_from_json(const Json& j) {
    SpaceTimeField f;
    for (const Json& p : expect_field(j, "x", "space-time field")) f.x.push_back(p.get<double>());
    for (const Json& p : expect_field(j, "t", "space-time field")) f.t.push_back(p.get<double>());
    const Json& w = expect_field(j, "w", "space-time field");
    if (!w.is_array() || w.size() != f.x.size())
        fail_validation("'w' must hold one row per x sample");
    for (const Json& row : w) {
        if (!row.is_array() || row.size() != f.t.size())
            fail_validation("each 'w' row must hold one sample per t value");
        std::vector<double> r;
        for (const Json& v : row) r.push_back(v.get<double>());
        f.w.push_back(std::move(r));
    }
    return f;
}

Json eigenpair_to_json(const Semiring& s, const EigenPair& p) {
    Json out;
    out["semiring"] = s.id();
    out["lambda"] = value_to_json(s, p.lambda);
    Json vec = Json::array();
    for (const Value& v : p.vec) vec.push_back(value_to_json(s, v));
    out["vector"] = std::move(vec);
    return out;
}

Json report_to_json(const AxiomsReport& r) {
    Json out;
    out["semiring"] = r.semiring;
    out["samples"] = r.sample_count;
    out["exhaustive"] = r.exhaustive;
    Json checks = Json::array();
    for (const AxiomCheck& c : r.checks) {
        Json jc;
        jc["axiom"] = c.axiom;
        jc["statement"] = c.description;
        jc["expected"] = c.expected;
        jc["holds"] = c.holds;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["consistent"] = r.consistent();
    return out;
}

Json witnesses_to_json(const std::vector<WitnessPath>& ws) {
    Json arr = Json::array();
    for (const WitnessPath& w : ws) {
        Json jw;
        jw["from"] = w.from + 1;
        jw["to"] = w.to + 1;
        Json nodes = Json::array();
        for (int n : w.nodes) nodes.push_back(n + 1);
        jw["nodes"] = std::move(nodes);
        arr.push_back(std::move(jw));
    }
    return arr;
}

std::string matrix_to_tsv(const Matrix& m) {
    if (m.semiring()->carrier() != Carrier::ExtendedReal)
        throw UnsupportedFormat("TSV output is only defined for numeric matrices");
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << '\t';
            const ExtReal& e = m.at(i, j).ext();
            if (e.neg()) os << "-inf";
            else if (e.pos()) os << "inf";
            else os << format_double(e.x);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace idemkit
