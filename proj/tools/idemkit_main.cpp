// idemkit: batch front end for semiring-generic solvers.
//
// Subcommands: closure, bellman, path, eigen, integrate, convolve, legendre,
// hopflax, residual, axioms. Inputs are JSON files in the formats documented
// in the README; results go to stdout or --output, deterministically.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idemkit/analysis.hpp"
#include "idemkit/axioms.hpp"
#include "idemkit/dequantize.hpp"
#include "idemkit/digraph.hpp"
#include "idemkit/matrix.hpp"
#include "idemkit/numfmt.hpp"
#include "idemkit/serialize.hpp"

namespace {

using idemkit::Json;

struct Options {
    std::vector<std::string> inputs;
    std::string semiring;
    std::string output;
    std::string format = "json";
    std::string method;
    std::string problem = "apsp";
    std::string prize_file;
    std::string dual_file;
    std::string xgrid_file;
    std::string steps = "unbounded";
    std::size_t max_steps = 0;
    double tolerance = 0.0;
    std::size_t samples = 16;
    std::uint64_t seed = 0;
    double h = 1.0;
    bool witness = false;
};

void write_output(const Options& opt, const std::string& bytes) {
    if (opt.output.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw idemkit::ValidationError("cannot open output file '" + opt.output + "'");
    out << bytes;
}

void emit_json(const Options& opt, const Json& j) {
    if (opt.format != "json")
        throw idemkit::UnsupportedFormat("this result is only available as JSON, not '" +
                                         opt.format + "'");
    write_output(opt, j.dump(2) + "\n");
}

void emit_matrix(const Options& opt, const idemkit::Matrix& m, Json extra = Json()) {
    if (opt.format == "tsv") {
        if (!extra.is_null())
            throw idemkit::UnsupportedFormat("witness output needs the JSON format");
        write_output(opt, idemkit::matrix_to_tsv(m));
        return;
    }
    if (opt.format != "json")
        throw idemkit::UnsupportedFormat("unknown output format '" + opt.format + "'");
    Json out = idemkit::matrix_to_json(m);
    if (!extra.is_null())
        for (auto& [key, val] : extra.items()) out[key] = val;
    emit_json(opt, out);
}

const std::string& input_at(const Options& opt, std::size_t i, const char* what) {
    if (i >= opt.inputs.size())
        throw idemkit::ValidationError(std::string("missing input file: ") + what);
    return opt.inputs[i];
}

void check_declared_semiring(const Options& opt, const idemkit::SemiringPtr& s) {
    if (!opt.semiring.empty() && opt.semiring != s->id())
        throw idemkit::ValidationError("input is over '" + s->id() +
                                       "' but --semiring says '" + opt.semiring + "'");
}

idemkit::ClosureMethod closure_method(const Options& opt) {
    if (opt.method.empty() || opt.method == "gauss-jordan")
        return idemkit::ClosureMethod::GaussJordan;
    if (opt.method == "iterative") return idemkit::ClosureMethod::Iterative;
    throw idemkit::ValidationError("unknown closure method '" + opt.method + "'");
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

void run_closure(const Options& opt) {
    const idemkit::Matrix h = idemkit::matrix_from_json(
        idemkit::parse_file(input_at(opt, 0, "matrix JSON")));
    check_declared_semiring(opt, h.semiring());
    const idemkit::Matrix d =
        closure_method(opt) == idemkit::ClosureMethod::Iterative
            ? idemkit::closure_iterative(h, opt.max_steps, opt.tolerance)
            : idemkit::closure_gauss_jordan(h);
    emit_matrix(opt, d);
}

void run_bellman(const Options& opt) {
    const idemkit::Matrix h =
        idemkit::matrix_from_json(idemkit::parse_file(input_at(opt, 0, "H matrix")));
    const idemkit::Matrix f =
        idemkit::matrix_from_json(idemkit::parse_file(input_at(opt, 1, "F matrix")));
    check_declared_semiring(opt, h.semiring());
    idemkit::Matrix s = [&] {
        if (opt.method.empty() || opt.method == "jacobi")
            return idemkit::bellman_solve_jacobi(h, f, opt.max_steps, opt.tolerance);
        if (opt.method == "gauss-seidel")
            return idemkit::bellman_solve_gauss_seidel(h, f, opt.max_steps, opt.tolerance);
        throw idemkit::ValidationError("unknown bellman method '" + opt.method + "'");
    }();
    emit_matrix(opt, s);
}

void run_path(const Options& opt) {
    if (opt.problem == "inverse") {
        const idemkit::Matrix h =
            idemkit::matrix_from_json(idemkit::parse_file(input_at(opt, 0, "real matrix")));
        check_declared_semiring(opt, h.semiring());
        emit_matrix(opt, idemkit::real_inverse(h));
        return;
    }

    const idemkit::Digraph g =
        idemkit::digraph_from_json(idemkit::parse_file(input_at(opt, 0, "graph JSON")));
    check_declared_semiring(opt, g.semiring());

    if (opt.problem == "profit") {
        const idemkit::Matrix prize = idemkit::matrix_from_json(idemkit::parse_file(
            opt.prize_file.empty() ? input_at(opt, 1, "terminal prize matrix") : opt.prize_file));
        if (prize.cols() != 1)
            throw idemkit::ValidationError("the terminal prize must be an n x 1 matrix");
        std::optional<std::size_t> steps;
        if (opt.steps != "unbounded") steps = static_cast<std::size_t>(std::stoul(opt.steps));
        const std::vector<idemkit::Value> v =
            idemkit::dp_optimal_profit(g, prize.entries(), steps);
        emit_matrix(opt, idemkit::Matrix(g.semiring(), v.size(), 1, v));
        return;
    }

    idemkit::Matrix d = [&] {
        if (opt.problem == "shortest") return idemkit::shortest_paths(g, closure_method(opt));
        if (opt.problem == "widest") return idemkit::widest_paths(g, closure_method(opt));
        if (opt.problem == "apsp" || opt.problem == "relation")
            return idemkit::algebraic_path_solve(g, closure_method(opt), opt.max_steps,
                                                 opt.tolerance);
        throw idemkit::ValidationError("unknown path problem '" + opt.problem + "'");
    }();
    Json extra;
    if (opt.witness) extra["witnesses"] = idemkit::witnesses_to_json(idemkit::apsp_witnesses(g, d));
    emit_matrix(opt, d, extra);
}

void run_eigen(const Options& opt) {
    const idemkit::Matrix h =
        idemkit::matrix_from_json(idemkit::parse_file(input_at(opt, 0, "matrix JSON")));
    check_declared_semiring(opt, h.semiring());
    emit_json(opt, idemkit::eigenpair_to_json(*h.semiring(), idemkit::eigen_irreducible(h)));
}

void run_integrate(const Options& opt) {
    const idemkit::GridFunction f =
        idemkit::gridfunction_from_json(idemkit::parse_file(input_at(opt, 0, "grid function")));
    check_declared_semiring(opt, f.semiring());
    Json out;
    out["semiring"] = f.semiring()->id();
    out["integral"] = idemkit::value_to_json(*f.semiring(), idemkit::idempotent_integral(f));
    emit_json(opt, out);
}

void run_convolve(const Options& opt) {
    const idemkit::GridFunction f =
        idemkit::gridfunction_from_json(idemkit::parse_file(input_at(opt, 0, "grid function")));
    const idemkit::GridFunction g =
        idemkit::gridfunction_from_json(idemkit::parse_file(input_at(opt, 1, "grid function")));
    check_declared_semiring(opt, f.semiring());
    emit_json(opt, idemkit::gridfunction_to_json(idemkit::idempotent_convolution(f, g)));
}

void run_legendre(const Options& opt) {
    const idemkit::GridFunction f =
        idemkit::gridfunction_from_json(idemkit::parse_file(input_at(opt, 0, "grid function")));
    check_declared_semiring(opt, f.semiring());
    idemkit::DualGrid xi;
    if (!opt.dual_file.empty()) {
        const Json pts = idemkit::parse_file(opt.dual_file);
        if (!pts.is_array()) throw idemkit::ValidationError("dual grid file must be a JSON array");
        for (const Json& p : pts) xi.points.push_back(p.get<double>());
    } else if (const auto* rg = std::get_if<idemkit::RealGrid>(&f.grid())) {
        xi.points = rg->points; // default: the primal grid itself
    } else {
        throw idemkit::UnsupportedDomain("legendre needs a real grid");
    }
    emit_json(opt, idemkit::gridfunction_to_json(idemkit::legendre_transform(f, xi)));
}

void run_hopflax(const Options& opt) {
    const idemkit::CauchyProblem p =
        idemkit::cauchy_problem_from_json(idemkit::parse_file(input_at(opt, 0, "Cauchy problem")));
    idemkit::RealGrid xgrid;
    if (!opt.xgrid_file.empty()) {
        const Json pts = idemkit::parse_file(opt.xgrid_file);
        if (!pts.is_array()) throw idemkit::ValidationError("xgrid file must be a JSON array");
        for (const Json& q : pts) xgrid.points.push_back(q.get<double>());
    } else {
        xgrid = std::get<idemkit::RealGrid>(p.s0.grid());
    }
    emit_json(opt, idemkit::gridfunction_to_json(idemkit::hopf_lax_evolve(p, xgrid)));
}

void run_residual(const Options& opt) {
    const idemkit::SpaceTimeField f =
        idemkit::field_from_json(idemkit::parse_file(input_at(opt, 0, "space-time field")));
    Json out;
    out["h"] = opt.h;
    out["residual"] = idemkit::burgers_residual(f, opt.h);
    emit_json(opt, out);
}

void run_axioms(const Options& opt) {
    if (opt.semiring.empty())
        throw idemkit::ValidationError("axioms needs --semiring");
    const idemkit::SemiringPtr s = idemkit::make_semiring(opt.semiring);
    const std::vector<idemkit::Value> samples =
        idemkit::sample_values(*s, opt.samples, opt.seed);
    emit_json(opt, idemkit::report_to_json(idemkit::axioms_report(*s, samples)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring-generic linear algebra, path problems and idempotent analysis"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", opt.inputs, "input file(s), JSON");
        cmd->add_option("-s,--semiring", opt.semiring, "semiring id (checked against inputs)");
        cmd->add_option("-o,--output", opt.output, "output path (default: stdout)");
        cmd->add_option("--format", opt.format, "output format: json|tsv");
    };

    CLI::App* closure = app.add_subcommand("closure", "matrix closure H*");
    add_common(closure);
    closure->add_option("--method", opt.method, "iterative|gauss-jordan");
    closure->add_option("--max-steps", opt.max_steps, "iteration bound (0 = default)");
    closure->add_option("--tolerance", opt.tolerance, "stabilization tolerance (numeric)");

    CLI::App* bellman = app.add_subcommand("bellman", "solve S = HS + F");
    add_common(bellman);
    bellman->add_option("--method", opt.method, "jacobi|gauss-seidel");
    bellman->add_option("--max-steps", opt.max_steps, "iteration bound (0 = default)");
    bellman->add_option("--tolerance", opt.tolerance, "stabilization tolerance (numeric)");

    CLI::App* path = app.add_subcommand("path", "algebraic path problems on digraphs");
    add_common(path);
    path->add_option("--problem", opt.problem, "apsp|shortest|widest|relation|inverse|profit");
    path->add_option("--method", opt.method, "iterative|gauss-jordan");
    path->add_option("--max-steps", opt.max_steps, "iteration bound (0 = default)");
    path->add_option("--tolerance", opt.tolerance, "stabilization tolerance (numeric)");
    path->add_option("--prize", opt.prize_file, "terminal prize matrix (profit)");
    path->add_option("--steps", opt.steps, "step count or 'unbounded' (profit)");
    path->add_flag("--witness", opt.witness, "emit per-pair witness paths");

    CLI::App* eigen = app.add_subcommand("eigen", "irreducible eigenpair over rmax/rmin");
    add_common(eigen);

    CLI::App* integrate = app.add_subcommand("integrate", "idempotent integral of a grid function");
    add_common(integrate);

    CLI::App* convolve = app.add_subcommand("convolve", "idempotent convolution of two functions");
    add_common(convolve);

    CLI::App* legendre = app.add_subcommand("legendre", "Legendre transform of a grid function");
    add_common(legendre);
    legendre->add_option("--dual", opt.dual_file, "dual grid points (JSON array file)");

    CLI::App* hopflax = app.add_subcommand("hopflax", "Hopf-Lax evolution of a Cauchy problem");
    add_common(hopflax);
    hopflax->add_option("--xgrid", opt.xgrid_file, "evaluation grid (JSON array file)");

    CLI::App* residual = app.add_subcommand("residual", "Burgers residual of a sampled field");
    add_common(residual);
    residual->add_option("--deformation-h", opt.h, "deformation parameter")->required();

    CLI::App* axioms = app.add_subcommand("axioms", "check the semiring laws on samples");
    add_common(axioms);
    axioms->add_option("--samples", opt.samples, "sample count (default 16)");
    axioms->add_option("--seed", opt.seed, "sample seed")->envname("IDEMKIT_SEED");

    CLI11_PARSE(app, argc, argv);

    try {
        if (closure->parsed()) run_closure(opt);
        else if (bellman->parsed()) run_bellman(opt);
        else if (path->parsed()) run_path(opt);
        else if (eigen->parsed()) run_eigen(opt);
        else if (integrate->parsed()) run_integrate(opt);
        else if (convolve->parsed()) run_convolve(opt);
        else if (legendre->parsed()) run_legendre(opt);
        else if (hopflax->parsed()) run_hopflax(opt);
        else if (residual->parsed()) run_residual(opt);
        else if (axioms->parsed()) run_axioms(opt);
        return 0;
    } catch (const idemkit::ClosureUndefined& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const idemkit::NotStabilized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const idemkit::NegativeCycle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const idemkit::ParseError& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
        return 3;
    } catch (const idemkit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
