#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qseq/chebyshev.hpp"
#include "qseq/contraction.hpp"
#include "qseq/errors.hpp"
#include "qseq/io.hpp"
#include "qseq/means.hpp"
#include "qseq/sequences.hpp"
#include "qseq/sweeps.hpp"

namespace qseq::cli {
namespace {

using io::json;

constexpr double kDefaultWitnessEpsilon = 1e-3;

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    bool csv = false;
    double tol = kDefaultTolerance;
};

void emit(const Context& ctx, const json& doc) {
    if (ctx.csv) {
        ctx.out << io::to_csv(doc);
    } else {
        ctx.out << doc.dump(2) << '\n';
    }
}

double tolerance_from_env() {
    const char* raw = std::getenv("QSEQ_TOL");
    if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
    const auto v = io::parse_number_list(raw);
    if (v.size() != 1 || !std::isfinite(v[0]) || v[0] <= 0.0) {
        throw DomainError("QSEQ_TOL must be a single positive number");
    }
    return v[0];
}

json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(path);
        if (!file) throw DomainError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError("invalid JSON in '" + path + "': " + e.what());
    }
}

struct SequenceArgs {
    std::string inline_values;
    Index start = 0;
    std::string input;

    void attach(CLI::App* cmd) {
        auto* seq = cmd->add_option("--seq", inline_values, "comma-separated values p_n,...,p_m");
        cmd->add_option("--start", start, "window start n for --seq");
        cmd->add_option("--input", input, "sequence JSON file, or - for stdin")->excludes(seq);
    }

    [[nodiscard]] bool given() const { return !inline_values.empty() || !input.empty(); }

    [[nodiscard]] WindowSequence load(std::istream& in) const {
        if (!input.empty()) return io::sequence_from_json(read_json(input, in));
        if (inline_values.empty()) throw DomainError("a sequence is required (--seq or --input)");
        return {start, io::parse_number_list(inline_values)};
    }
};

ChebKind parse_kind(const std::string& s) {
    if (s == "T" || s == "t") return ChebKind::FirstKind;
    return ChebKind::SecondKind;
}

json member_json(const EnvelopeMember& m) {
    return {{"anchor", m.anchor}, {"rep", io::to_json(m.rep)}, {"sequence", io::to_json(m.values)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"q-convex sequences, Chebyshev identities and min-of-averages fixed points"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // cheb
    auto* cheb_cmd = app.add_subcommand("cheb", "evaluate T_k(x) or U_k(x)");
    std::string kind;
    Index order = 0;
    double x = 0.0;
    cheb_cmd->add_option("--kind", kind, "T or U")->required()->check(CLI::IsMember({"T", "U", "t", "u"}));
    cheb_cmd->add_option("--order", order, "integer order k")->required();
    cheb_cmd->add_option("--x", x, "argument")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "q-convexity verdict and chord ratios");
    SequenceArgs classify_seq;
    double classify_q = 1.0;
    classify_seq.attach(classify_cmd);
    classify_cmd->add_option("--q", classify_q)->required();

    // affine
    auto* affine_cmd = app.add_subcommand(
        "affine", "materialize a U + b T on a window, or recover (a, b) from a q-affine sequence");
    SequenceArgs affine_seq;
    std::optional<double> affine_a;
    std::optional<double> affine_b;
    std::optional<double> affine_q;
    std::optional<Index> affine_end;
    std::string affine_rep_file;
    affine_seq.attach(affine_cmd);
    affine_cmd->add_option("--a", affine_a);
    affine_cmd->add_option("--b", affine_b);
    affine_cmd->add_option("--q", affine_q);
    affine_cmd->add_option("--end", affine_end, "window end m when materializing");
    affine_cmd->add_option("--rep", affine_rep_file, "representation JSON file, or - for stdin");

    // support
    auto* support_cmd = app.add_subcommand("support", "q-affine chord through (j, p_j), (k, p_k)");
    SequenceArgs support_seq;
    double support_q = 1.0;
    Index support_j = 0;
    Index support_k = 0;
    support_seq.attach(support_cmd);
    support_cmd->add_option("--q", support_q)->required();
    support_cmd->add_option("--j", support_j)->required();
    support_cmd->add_option("--k", support_k)->required();

    // envelope
    auto* envelope_cmd = app.add_subcommand("envelope", "q-affine sequences whose minimum is p");
    SequenceArgs envelope_seq;
    double envelope_q = 1.0;
    envelope_seq.attach(envelope_cmd);
    envelope_cmd->add_option("--q", envelope_q)->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "lower bound for a power mean of chord ratios");
    std::string bounds_r;
    Index bounds_n = 0;
    Index bounds_m = 0;
    std::string witness_eps;
    bounds_cmd->add_option("--r", bounds_r, "mean exponent: number, inf or -inf")->required();
    bounds_cmd->add_option("--n", bounds_n)->required();
    bounds_cmd->add_option("--m", bounds_m)->required();
    auto* witness_opt = bounds_cmd->add_option("--witness", witness_eps,
                                               "also build a witness sequence (optional epsilon)")
                            ->expected(0, 1);

    // fixpoint
    auto* fix_cmd = app.add_subcommand("fixpoint", "fixed point of the min-of-averages map");
    std::optional<Index> fix_n;
    std::string fix_gamma;
    std::string fix_weights = "default";
    std::optional<double> fix_tol;
    Index fix_max_iter = SolveOptions{}.max_iter;
    std::string fix_problem;
    std::string fix_start;
    std::string fix_resume;
    fix_cmd->add_option("--n", fix_n, "dimension");
    fix_cmd->add_option("--gamma", fix_gamma, "comma-separated gamma_1..gamma_floor((n+1)/2)");
    fix_cmd->add_option("--weights", fix_weights, "'default' or comma-separated weights")
        ->capture_default_str();
    fix_cmd->add_option("--tol", fix_tol, "target distance to the fixed point");
    fix_cmd->add_option("--max-iter", fix_max_iter)->capture_default_str();
    auto* problem_opt = fix_cmd->add_option("--problem", fix_problem, "problem JSON file, or -");
    auto* start_opt = fix_cmd->add_option("--start", fix_start, "comma-separated starting point");
    fix_cmd->add_option("--resume", fix_resume, "start from the point of a result JSON file")
        ->excludes(start_opt);
    problem_opt->excludes("--n")->excludes("--gamma");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the randomized property sweeps");
    SweepOptions sweep_options;
    verify_cmd->add_flag("--parallel", sweep_options.parallel, "one thread per sweep");
    verify_cmd->add_option("--seed", sweep_options.seed)->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    Context ctx{out, err, in, format == "csv"};
    try {
        ctx.tol = tolerance_from_env();

        if (cheb_cmd->parsed()) {
            emit(ctx, {{"value", cheb(parse_kind(kind), order, x)}});
        } else if (classify_cmd->parsed()) {
            const auto p = classify_seq.load(in);
            const auto c = classify(p, classify_q, ctx.tol);
            emit(ctx, io::to_json(c, p.interior_positive() ? chord_ratios(p) : std::vector<double>{}));
        } else if (affine_cmd->parsed()) {
            if (affine_seq.given()) {
                if (!affine_q) throw DomainError("affine: --q is required to recover coefficients");
                const auto p = affine_seq.load(in);
                json doc = io::to_json(affine_coeffs(p, *affine_q, ctx.tol));
                doc["end"] = p.end();
                emit(ctx, doc);
            } else {
                AffineRep rep;
                std::optional<Index> end = affine_end;
                if (!affine_rep_file.empty()) {
                    const json j = read_json(affine_rep_file, in);
                    rep = io::affine_rep_from_json(j);
                    if (!end && j.contains("end") && j["end"].is_number_integer()) {
                        end = j["end"].get<Index>();
                    }
                } else {
                    if (!affine_a || !affine_b || !affine_q) {
                        throw DomainError("affine: give --a, --b and --q, or --rep, or a sequence");
                    }
                    rep = AffineRep{*affine_a, *affine_b, *affine_q, affine_seq.start};
                }
                if (!end) throw DomainError("affine: --end is required");
                json doc = io::to_json(rep);
                doc.update(io::to_json(make_affine(rep, *end)));
                doc["end"] = *end;
                emit(ctx, doc);
            }
        } else if (support_cmd->parsed()) {
            const auto p = support_seq.load(in);
            emit(ctx, io::to_json(support_chord(p, support_q, support_j, support_k, ctx.tol)));
        } else if (envelope_cmd->parsed()) {
            const auto p = envelope_seq.load(in);
            const auto members = affine_envelope(p, envelope_q, ctx.tol);
            json list = json::array();
            for (const auto& m : members) list.push_back(member_json(m));
            emit(ctx, {{"members", std::move(list)},
                       {"reconstruction_error", max_abs_difference(envelope_minimum(members), p)}});
        } else if (bounds_cmd->parsed()) {
            const MeanSpec spec = io::parse_mean_spec(bounds_r);
            json doc = io::to_json(c_constant(spec, bounds_n, bounds_m));
            if (witness_opt->count() > 0) {
                const double eps = witness_eps.empty() ? kDefaultWitnessEpsilon
                                                       : io::parse_number_list(witness_eps).at(0);
                const Witness w = sharpness_witness(spec, bounds_n, bounds_m, eps);
                doc["epsilon"] = eps;
                doc["witness"] = io::to_json(w.sequence);
                doc["achieved_mean"] = mean_of_chord_ratios(spec, w.sequence);
                doc["sharp"] = w.sharp;
            }
            emit(ctx, doc);
        } else if (fix_cmd->parsed()) {
            std::optional<ContractionProblem> prob;
            if (!fix_problem.empty()) {
                prob = io::problem_from_json(read_json(fix_problem, in));
            } else {
                if (!fix_n || fix_gamma.empty()) {
                    throw DomainError("fixpoint: give --n and --gamma, or --problem");
                }
                auto gamma = io::parse_number_list(fix_gamma);
                if (fix_weights == "default") {
                    prob = ContractionProblem::with_default_weights(*fix_n, std::move(gamma));
                } else {
                    auto weights = io::parse_number_list(fix_weights);
                    if (static_cast<Index>(weights.size()) != *fix_n) {
                        throw DomainError("fixpoint: --weights must have n entries");
                    }
                    prob = ContractionProblem(std::move(gamma), std::move(weights));
                }
            }
            SolveOptions options;
            options.tol = fix_tol.value_or(ctx.tol);
            options.max_iter = fix_max_iter;
            if (!fix_start.empty()) options.start = io::parse_number_list(fix_start);
            if (!fix_resume.empty()) options.start = io::result_from_json(read_json(fix_resume, in)).point;
            try {
                emit(ctx, io::to_json(solve_fixed_point(*prob, options)));
            } catch (const NonConvergenceError& e) {
                err << "error: " << e.what() << '\n';
                emit(ctx, io::to_json(e.best()));
                return kExitNonConvergence;
            }
        } else if (verify_cmd->parsed()) {
            sweep_options.tol = ctx.tol;
            const auto results = run_sweeps(sweep_options);
            bool all = true;
            json list = json::array();
            err << std::left << std::setw(30) << "sweep" << std::setw(6) << "ok" << std::setw(10)
                << "samples" << std::setw(14) << "worst" << "threshold\n";
            for (const auto& r : results) {
                all = all && r.passed;
                list.push_back({{"name", r.name},
                                {"passed", r.passed},
                                {"samples", r.samples},
                                {"worst", r.worst},
                                {"threshold", r.threshold}});
                err << std::setw(30) << r.name << std::setw(6) << (r.passed ? "PASS" : "FAIL")
                    << std::setw(10) << r.samples << std::setw(14) << std::setprecision(4) << r.worst
                    << r.threshold << '\n';
            }
            emit(ctx, {{"passed", all}, {"sweeps", std::move(list)}});
            return all ? kExitOk : kExitSweepFailed;
        }
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::logic_error& e) {
        // DomainError, PreconditionError and UnsupportedError all land here.
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace qseq::cli
