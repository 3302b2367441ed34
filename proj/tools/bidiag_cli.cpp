// Command-line front end: every library module behind one binary. JSON on
// standard output (17-digit round-trip doubles via the shortest-decimal
// serializer), nonzero exit code on any failure.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/condnum.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/experiments.hpp"
#include "bidiag/funcs.hpp"
#include "bidiag/gallery.hpp"
#include "bidiag/io.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/oracle.hpp"
#include "bidiag/rational.hpp"
#include "bidiag/solve.hpp"
#include "bidiag/svals.hpp"

namespace {

using nlohmann::json;
using namespace bidiag;

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty())
        std::fwrite(text.data(), 1, text.size(), stdout);
    else
        write_text_file(output, text);
}

void emit(const json& j, const std::string& output) {
    emit_text(j.dump(2) + "\n", output);
}

json exact_vector_to_json(const std::vector<ExactScalar>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_fraction_string(x));
    return a;
}

// --factors FILE or --gallery NAME N [PARAMS]; every consumer needs at most
// one of the two.
struct Source {
    std::string factors_file;
    std::vector<std::string> gallery_args;

    bool from_file() const { return !factors_file.empty(); }
    bool from_gallery() const { return !gallery_args.empty(); }
};

void add_source_options(CLI::App* cmd, Source& src, bool required) {
    auto* f = cmd->add_option("--factors", src.factors_file, "factor-file JSON path");
    auto* g = cmd->add_option("--gallery", src.gallery_args,
                              "gallery matrix: NAME N [PARAMS...]")
                  ->expected(2, 3);
    f->excludes(g);
    g->excludes(f);
    if (required) {
        cmd->callback([&src, cmd]() {
            if (!src.from_file() && !src.from_gallery())
                throw CLI::RequiredError(cmd->get_name() + ": --factors or --gallery");
        });
    }
}

GalleryMatrix gallery_from_args(const std::vector<std::string>& args) {
    const std::string& name = args[0];
    std::size_t n = 0;
    try {
        n = static_cast<std::size_t>(std::stoull(args[1]));
    } catch (const std::exception&) {
        throw std::invalid_argument("gallery: N must be a nonnegative integer, got '" + args[1] +
                                    "'");
    }
    auto want_params = [&](std::size_t k) {
        if (args.size() != 2 + k)
            throw std::invalid_argument("gallery " + name + ": takes " + std::to_string(k) +
                                        " parameter(s) after N");
    };
    if (name == "pascal") {
        want_params(0);
        return pascal(n);
    }
    if (name == "hilbert") {
        want_params(0);
        return hilbert(n);
    }
    if (name == "frank") {
        want_params(0);
        return frank(n);
    }
    if (name == "minij") {
        want_params(0);
        return minij(n);
    }
    if (name == "kms") {
        want_params(1);
        return kms(n, std::stod(args[2]));
    }
    if (name == "creation") {
        want_params(0);
        return creation(n);
    }
    throw std::invalid_argument("gallery: unknown name '" + name +
                                "' (pascal, hilbert, frank, minij, kms, creation)");
}

FactorChain<double> chain_from_source(const Source& src) {
    if (src.from_file()) return chain_from_json(load_json_file(src.factors_file));
    GalleryMatrix g = gallery_from_args(src.gallery_args);
    if (!g.chain)
        throw capability_error("this gallery matrix carries no factor chain");
    return std::move(*g.chain);
}

ExactMatrix exact_matrix_from_source(const Source& src) {
    if (src.from_file()) return dense(exact_chain_from_json(load_json_file(src.factors_file)));
    GalleryMatrix g = gallery_from_args(src.gallery_args);
    return std::move(*g.exact);
}

const char* budget_kind_name(BudgetKind k) {
    switch (k) {
    case BudgetKind::ResidualBound: return "residual";
    case BudgetKind::ForwardBoundCoefficient: return "forward";
    case BudgetKind::InverseChainForward: return "inverse_forward";
    case BudgetKind::InverseChainResidual: return "inverse_residual";
    }
    return "unknown";
}

json budget_to_json(const ErrorBudget& b) {
    return json{{"kind", budget_kind_name(b.kind)},
                {"coefficient", b.coefficient},
                {"envelope", vector_to_json(b.envelope)},
                {"tight", b.tight}};
}

json computed(double v) { return json{{"value", v}, {"source", "computed"}}; }
json reference(double v) { return json{{"value", v}, {"source", "reference"}}; }

// Measured wall-clock time is the one nondeterministic report field; it is
// emitted only on request so that default outputs are byte-reproducible.
void attach_runtime(json& report, double seconds, bool timing) {
    if (timing) report["runtime_seconds"] = seconds;
}

json report_to_json(const PascalSolveReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{
            {"n", row.n},
            {"chain_error", computed(row.chain_error)},
            {"lu_error", computed(row.lu_error)},
            {"bound", computed(row.bound)},
            {"reference_bound", reference(row.reference_bound)},
            {"flags",
             json{{"chain_at_precision", row.chain_at_precision},
                  {"chain_below_bound", row.chain_below_bound},
                  {"bound_matches_reference", row.bound_matches_reference},
                  {"lu_degraded", row.lu_degraded}}}});
    }
    return json{{"experiment", "pascal_solve"},
                {"tolerances",
                 json{{"chain_error_max", 5e-16},
                      {"reference_bound_digits", 2},
                      {"lu_ratio_min", 10.0},
                      {"runtime_seconds_max", 2.0}}},
                {"rows", std::move(rows)},
                {"pass", r.pass}};
}

json report_to_json(const HilbertCondReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr{{"n", row.n},
                {"kinf", computed(row.kinf)},
                {"reference", reference(row.reference)},
                {"reference_digits", row.reference_digits},
                {"flags",
                 json{{"matches_reference", row.matches_reference},
                      {"within_oracle_tol", row.within_oracle_tol}}}};
        jr["oracle_rel_error"] = row.oracle_checked ? json(row.oracle_rel_error) : json();
        rows.push_back(std::move(jr));
    }
    return json{{"experiment", "hilbert_cond"},
                {"tolerances", json{{"oracle_rel_error_max", 5e-15}, {"runtime_seconds_max", 5.0}}},
                {"rows", std::move(rows)},
                {"pass", r.pass}};
}

json report_to_json(const PascalCondReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{
            {"n", row.n},
            {"kinf_factored", computed(row.kinf_factored)},
            {"kinf_dense", computed(row.kinf_dense)},
            {"reference", reference(row.reference)},
            {"factored_rel_error", row.factored_rel_error},
            {"dense_rel_error", row.dense_rel_error},
            {"flags",
             json{{"factored_ok", row.factored_ok},
                  {"reference_ok", row.reference_ok},
                  {"dense_degraded", row.dense_degraded}}}});
    }
    return json{{"experiment", "pascal_cond"},
                {"tolerances",
                 json{{"factored_rel_error_max", 5e-15},
                      {"reference_digits", 3},
                      {"dense_rel_error_min_for_n_ge_15", 1e-8}}},
                {"rows", std::move(rows)},
                {"pass", r.pass}};
}

ScalarFunction<double> function_by_name(const std::string& s) {
    if (s == "exp") return exp_function();
    if (s == "inv") return reciprocal_function<double>();
    if (s.rfind("monomial:", 0) == 0) return monomial_function<double>(std::stoi(s.substr(9)));
    throw std::invalid_argument("func: unknown function '" + s + "' (exp, inv, monomial:p)");
}

ScalarFunction<ExactScalar> exact_function_by_name(const std::string& s,
                                                   const Bidiagonal<ExactScalar>& b) {
    if (s == "exp") {
        for (const auto& d : b.diag)
            if (d != 0)
                throw capability_error(
                    "func: exact exp needs a zero diagonal (rational Taylor data exists only "
                    "at 0); drop --exact for general matrices");
        return {"exp", -1, [](const ExactScalar& x, int) {
                    if (x != 0) throw std::domain_error("exact exp: only x = 0 supported");
                    return ExactScalar(1);
                }};
    }
    if (s == "inv") return reciprocal_function<ExactScalar>();
    if (s.rfind("monomial:", 0) == 0)
        return monomial_function<ExactScalar>(std::stoi(s.substr(9)));
    throw std::invalid_argument("func: unknown function '" + s + "' (exp, inv, monomial:p)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bidiagonal factor-chain toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    long long seed = 0;
    app.add_option("--output", output, "write the result to a file instead of standard output");
    app.add_option("--seed", seed, "seed for randomized operations (none of the current "
                                   "subcommands draw randomness; accepted for scripting)");

    // experiment
    auto* cmd_experiment = app.add_subcommand("experiment", "reproduce a reference table");
    std::string table;
    bool timing = false;
    cmd_experiment
        ->add_option("table", table, "one of pascal_solve, hilbert_cond, pascal_cond")
        ->required()
        ->check(CLI::IsMember({"pascal_solve", "hilbert_cond", "pascal_cond"}));
    cmd_experiment->add_flag("--timing", timing,
                             "include measured wall-clock runtime (breaks byte reproducibility)");

    // gallery
    auto* cmd_gallery = app.add_subcommand("gallery", "construct a named special matrix");
    std::vector<std::string> gallery_args;
    bool gallery_chain = false, gallery_exact = false;
    std::string gallery_format = "json";
    cmd_gallery->add_option("name", gallery_args, "NAME N [PARAMS...]")->expected(2, 3);
    cmd_gallery->add_flag("--chain", gallery_chain, "emit the factor chain as a factor file");
    cmd_gallery->add_flag("--exact", gallery_exact, "emit exact rational entries");
    cmd_gallery->add_option("--format", gallery_format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // cond
    auto* cmd_cond = app.add_subcommand("cond", "infinity-norm condition number of a chain");
    Source cond_src;
    bool cond_exact = false;
    add_source_options(cmd_cond, cond_src, true);
    cmd_cond->add_flag("--exact", cond_exact, "route through the exact rational oracle");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "solve through a factor chain with budgets");
    Source solve_src;
    std::string rhs_file;
    bool solve_exact = false, as_inverse = false;
    add_source_options(cmd_solve, solve_src, true);
    cmd_solve->add_option("--rhs", rhs_file, "right-hand side (JSON array or one value per line)")
        ->required();
    cmd_solve->add_flag("--exact", solve_exact, "route through the exact rational oracle");
    cmd_solve->add_flag("--as-inverse", as_inverse,
                        "treat the chain as representing the inverse of the matrix");

    // svd
    auto* cmd_svd = app.add_subcommand("svd", "singular values of each chain factor");
    Source svd_src;
    double svd_tol = sval_default_tol;
    add_source_options(cmd_svd, svd_src, true);
    cmd_svd->add_option("--tol", svd_tol, "bisection tolerance relative to sigma_1");

    // func
    auto* cmd_func = app.add_subcommand("func", "matrix function of one bidiagonal factor");
    Source func_src;
    std::string func_name, func_format = "json";
    bool func_exact = false;
    cmd_func->add_option("function", func_name, "exp, inv, or monomial:p")->required();
    add_source_options(cmd_func, func_src, true);
    cmd_func->add_flag("--exact", func_exact, "exact rational evaluation");
    cmd_func->add_option("--format", func_format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "ad-hoc exact checks on dense matrices");
    Source oracle_src;
    std::string oracle_check, oracle_matrix_file;
    cmd_oracle->add_option("check", oracle_check, "inverse, kinf, or tn")
        ->required()
        ->check(CLI::IsMember({"inverse", "kinf", "tn"}));
    cmd_oracle->add_option("matrix", oracle_matrix_file,
                           "JSON matrix file (rows of numbers or \"p/q\" strings)");
    add_source_options(cmd_oracle, oracle_src, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*cmd_experiment) {
            json rep;
            double seconds = 0;
            if (table == "pascal_solve") {
                auto r = pascal_solve_experiment();
                rep = report_to_json(r);
                seconds = r.runtime_seconds;
            } else if (table == "hilbert_cond") {
                auto r = hilbert_cond_experiment();
                rep = report_to_json(r);
                seconds = r.runtime_seconds;
            } else {
                auto r = pascal_cond_experiment();
                rep = report_to_json(r);
                seconds = r.runtime_seconds;
            }
            attach_runtime(rep, seconds, timing);
            emit(rep, output);
        } else if (*cmd_gallery) {
            GalleryMatrix g = gallery_from_args(gallery_args);
            if (gallery_chain) {
                if (!g.chain) throw capability_error("this gallery matrix carries no factor chain");
                emit(chain_to_json(*g.chain), output);
            } else if (gallery_format == "csv") {
                if (!g.dense)
                    throw capability_error("no double dense form at this size; use --exact json");
                emit_text(matrix_to_csv(*g.dense), output);
            } else {
                json out{{"name", gallery_args[0]}, {"n", g.n}, {"representable", g.representable}};
                if (!g.parameters.empty()) out["parameters"] = vector_to_json(g.parameters);
                if (gallery_exact || !g.dense)
                    out["exact"] = matrix_to_json(*g.exact);
                else
                    out["dense"] = matrix_to_json(*g.dense);
                emit(out, output);
            }
        } else if (*cmd_cond) {
            if (cond_exact) {
                ExactMatrix a = exact_matrix_from_source(cond_src);
                ExactScalar k = exact_condition_inf(a);
                emit(json{{"n", a.rows()},
                          {"kinf", to_fraction_string(k)},
                          {"kinf_double", to_double(k)}},
                     output);
            } else if (cond_src.from_gallery()) {
                GalleryMatrix g = gallery_from_args(cond_src.gallery_args);
                if (!g.chain) throw capability_error("this gallery matrix carries no factor chain");
                double alpha = g.dense ? inf_norm(*g.dense) : chain_inf_norm(*g.chain);
                emit(json{{"n", g.n}, {"kinf", alpha * chain_inv_inf_norm(*g.chain)}}, output);
            } else {
                FactorChain<double> c = chain_from_json(load_json_file(cond_src.factors_file));
                emit(json{{"n", c.n}, {"kinf", chain_inf_norm(c) * chain_inv_inf_norm(c)}}, output);
            }
        } else if (*cmd_solve) {
            std::vector<double> b = load_rhs_file(rhs_file);
            if (solve_exact) {
                json out{{"mode", as_inverse ? "inverse_chain" : "product_chain"}};
                if (solve_src.from_file()) {
                    auto c = exact_chain_from_json(load_json_file(solve_src.factors_file));
                    out["x"] = exact_vector_to_json(as_inverse ? multiply(c, to_exact(b))
                                                               : solve(c, to_exact(b)));
                } else {
                    GalleryMatrix g = gallery_from_args(solve_src.gallery_args);
                    out["x"] = exact_vector_to_json(
                        as_inverse ? multiply(*g.exact, to_exact(b))
                                   : exact_solve(*g.exact, to_exact(b)));
                }
                emit(out, output);
            } else {
                FactorChain<double> c = chain_from_source(solve_src);
                json out;
                if (as_inverse) {
                    InverseSolveResult r = solve_inverse_chain(c, b);
                    out = json{{"mode", "inverse_chain"},
                               {"x", vector_to_json(r.x)},
                               {"forward_budget", budget_to_json(r.forward)},
                               {"residual_budget", budget_to_json(r.residual)}};
                } else {
                    ProductSolveResult r = solve_product_chain(c, b);
                    out = json{{"mode", "product_chain"},
                               {"x", vector_to_json(r.x)},
                               {"forward_budget", budget_to_json(r.forward)},
                               {"residual_budget", budget_to_json(r.residual)}};
                }
                emit(out, output);
            }
        } else if (*cmd_svd) {
            FactorChain<double> c = chain_from_source(svd_src);
            json factors = json::array();
            for (std::size_t i = 0; i < c.factors.size(); ++i) {
                std::vector<double> sv = singular_values(c.factors[i].matrix, svd_tol);
                if (c.factors[i].inverted) {
                    // effective factor is the inverse: reciprocals, re-sorted descending
                    if (sv.back() <= 0.0)
                        throw singular_error("svd: inverted factor is numerically singular");
                    for (double& s : sv) s = 1.0 / s;
                    std::reverse(sv.begin(), sv.end());
                }
                factors.push_back(json{{"index", i},
                                       {"inverted", c.factors[i].inverted},
                                       {"singular_values", vector_to_json(sv)}});
            }
            json out{{"n", c.n}, {"factors", std::move(factors)}};
            if (c.scale) {
                std::vector<double> d = c.scale->diag;
                for (double& x : d) x = std::abs(x);
                std::sort(d.begin(), d.end(), std::greater<>());
                out["scale_singular_values"] = vector_to_json(d);
            }
            emit(out, output);
        } else if (*cmd_func) {
            FactorChain<double> c = chain_from_source(func_src);
            if (c.factors.size() != 1 || c.factors[0].inverted || c.scale)
                throw std::domain_error(
                    "func: the source must be a single direct bidiagonal factor");
            const Bidiagonal<double>& bd = c.factors[0].matrix;
            if (func_exact) {
                Bidiagonal<ExactScalar> be(bd.orientation, to_exact(bd.diag), to_exact(bd.off));
                auto f = exact_function_by_name(func_name, be);
                if (func_format == "csv")
                    throw std::invalid_argument("func: csv output is double precision only");
                emit(matrix_to_json(func_of_bidiagonal(f, be)), output);
            } else {
                Matrix<double> m = func_of_bidiagonal(function_by_name(func_name), bd);
                if (func_format == "csv")
                    emit_text(matrix_to_csv(m), output);
                else
                    emit(matrix_to_json(m), output);
            }
        } else if (*cmd_oracle) {
            ExactMatrix a = [&]() {
                if (!oracle_matrix_file.empty())
                    return exact_matrix_from_json(load_json_file(oracle_matrix_file));
                if (oracle_src.from_gallery())
                    return std::move(*gallery_from_args(oracle_src.gallery_args).exact);
                if (oracle_src.from_file())
                    return dense(exact_chain_from_json(load_json_file(oracle_src.factors_file)));
                throw std::invalid_argument("oracle: need a matrix file, --factors, or --gallery");
            }();
            if (oracle_check == "inverse") {
                emit(matrix_to_json(exact_inverse(a)), output);
            } else if (oracle_check == "kinf") {
                ExactScalar k = exact_condition_inf(a);
                emit(json{{"n", a.rows()},
                          {"kinf", to_fraction_string(k)},
                          {"kinf_double", to_double(k)}},
                     output);
            } else {
                TnCheckResult r = is_totally_nonnegative(a);
                json out{{"totally_nonnegative", r.tn}};
                if (!r.tn) {
                    out["witness"] = json{{"rows", r.rows}, {"cols", r.cols}};
                }
                emit(out, output);
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
