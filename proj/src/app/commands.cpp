#include "hyproj/app.hpp"

#include "hyproj/bilinear.hpp"
#include "hyproj/hyperbola.hpp"
#include "hyproj/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace hyproj::app {

namespace {

// Runs f(0..n-1) on `workers` threads; results keep input order. The first
// exception (by index) is rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t n, int workers, F f) -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto count = std::clamp<std::size_t>(static_cast<std::size_t>(workers), 1, std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < count; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

struct Projected {
    ProjectionResult result;
    std::string case_name;
};

Projected project_one(const JobRequest& req, const PairPoint& z)
{
    const Gamma gamma(req.gamma);
    const Tolerances& tol = req.options.tol;
    if (req.set == SetKind::Bilinear) {
        return {project_bilinear(z.first(), z.second(), gamma, tol),
                std::string(to_string(classify(z.first(), z.second(), gamma, tol).kind))};
    }
    return {project_hgamma(z.first(), z.second(), HyperbolaSpec{gamma}, tol),
            std::string(to_string(classify_hyperbola(z.first(), z.second(), gamma, tol)))};
}

double signed_residual(SetKind set, const PairPoint& p, double gamma)
{
    return set == SetKind::Bilinear ? inner(p.first(), p.second()) - gamma : hyperbola_residual(p, gamma);
}

Json result_json(const ProjectionResult& r)
{
    if (r.is_singleton()) {
        return {{"kind", "singleton"}, {"point", pair_to_json(r.point())}};
    }
    const SphereFamily& f = r.family();
    return {{"kind", "sphere-family"},
            {"family",
             {{"base_x", f.base_first.to_vector()},
              {"base_y", f.base_second.to_vector()},
              {"coeff_x", f.coeff_first},
              {"coeff_y", f.coeff_second},
              {"radius", f.radius}}}};
}

Json head_record(std::size_t index, const Projected& p)
{
    Json rec = {{"index", index}, {"case", p.case_name}};
    rec["lambda"] = p.result.root ? Json(p.result.root->lambda) : Json(nullptr);
    const Json body = result_json(p.result);
    for (const auto& [k, v] : body.items()) {
        rec[k] = v;
    }
    rec["ill_conditioned"] = p.result.ill_conditioned;
    return rec;
}

Vec gaussian(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> nd;
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v[i] = nd(rng);
    }
    return v;
}

// Feasible points of the job's set scattered around the query at scales
// from 1e-3 to 1 times (1 + ||query||).
double best_sample_objective(const JobRequest& req, const PairPoint& query, std::mt19937_64& rng)
{
    const Gamma gamma(req.gamma);
    const bool hyper = req.set == SetKind::Hyperbola;
    const PairPoint q = hyper ? rotate_quarter(query, +1) : query;
    const Eigen::Index n = q.dim();
    const double base = (1.0 + std::sqrt(q.squared_norm())) / std::sqrt(static_cast<double>(n));
    std::uniform_real_distribution<double> log_scale(std::log(1e-3), 0.0);
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < req.options.samples; ++j) {
        const double s = base * std::exp(log_scale(rng));
        Vec xs = q.first().coords() + s * gaussian(rng, n);
        if (xs.norm() == 0.0) {
            xs = Vec::Unit(n, 0);
        }
        const Vec w = q.second().coords() + s * gaussian(rng, n);
        PairPoint cand = sample_feasible(gamma, Point(xs), Point(w));
        if (hyper) {
            cand = rotate_quarter(cand, -1);
        }
        best = std::min(best, objective(query, cand));
    }
    return best;
}

}  // namespace

int run_project(const JobRequest& req, std::ostream& out)
{
    validate_request(req);
    std::vector<Json> records = parallel_map(req.pairs.size(), req.options.workers, [&](std::size_t i) {
        const PairPoint& z = req.pairs[i];
        try {
            const Projected p = project_one(req, z);
            const PairPoint rep = representative(p.result, req.options.hint);
            Json rec = head_record(i, p);
            rec["representative"] = pair_to_json(rep);
            rec["residual"] = signed_residual(req.set, rep, req.gamma);
            rec["objective"] = objective(z, rep);
            return rec;
        } catch (const ConvergenceError& e) {
            return Json{{"index", i}, {"error", e.what()}};
        }
    });
    int code = kExitOk;
    for (const Json& rec : records) {
        if (rec.contains("error")) {
            code = kExitAnalytic;
        }
        out << dump_json(rec) << '\n';
    }
    return code;
}

int run_verify(const JobRequest& req, std::ostream& out)
{
    validate_request(req);
    std::vector<Json> records = parallel_map(req.pairs.size(), req.options.workers, [&](std::size_t i) {
        const PairPoint& z = req.pairs[i];
        try {
            std::mt19937_64 rng(req.options.seed + i);
            const Projected p = project_one(req, z);
            const PairPoint rep = representative(p.result, req.options.hint);
            const double obj = objective(z, rep);

            double worst = std::abs(signed_residual(req.set, rep, req.gamma));
            if (!p.result.is_singleton()) {
                for (int k = 0; k < kFamilyProbes; ++k) {
                    Vec d = gaussian(rng, z.dim());
                    if (d.norm() == 0.0) {
                        d = Vec::Unit(z.dim(), 0);
                    }
                    const PairPoint m = p.result.family().member_along(d);
                    worst = std::max(worst, std::abs(signed_residual(req.set, m, req.gamma)));
                }
            }
            const double scale =
                req.set == SetKind::Bilinear
                    ? std::max({1.0, std::abs(req.gamma), 1.0 + z.first().norm() * z.second().norm()})
                    : 1.0 + z.squared_norm();
            const bool feasible = worst <= req.options.tol.feas * scale;

            Json rec = head_record(i, p);
            rec["objective"] = obj;
            rec["residual"] = worst;
            rec["feasible"] = feasible;
            bool pass = feasible;

            const Reduced2D red =
                req.set == SetKind::Bilinear ? reduce_bilinear(z, req.gamma) : reduce_hyperbola(z, req.gamma);
            if (z.dim() <= 3 && red.a > 0.0 && red.b > 0.0) {
                const Oracle2DResult o = oracle_min_2d(red);
                const double gap = obj - o.value;
                rec["oracle"] = o.value;
                rec["oracle_gap"] = gap;
                pass = pass && gap <= kOracleGapRel * (1.0 + o.value);
            } else {
                rec["oracle"] = nullptr;
                rec["oracle_gap"] = nullptr;
            }

            const double best = best_sample_objective(req, z, rng);
            rec["sample_best"] = best;
            rec["sample_gap"] = obj - best;
            pass = pass && obj <= best + kSampleSlackRel * (1.0 + best);
            rec["pass"] = pass;
            return rec;
        } catch (const ConvergenceError& e) {
            return Json{{"index", i}, {"error", e.what()}, {"pass", false}};
        }
    });
    int code = kExitOk;
    for (const Json& rec : records) {
        if (!rec.at("pass").get<bool>()) {
            code = kExitAnalytic;
        }
        out << dump_json(rec) << '\n';
    }
    return code;
}

int run_solve(const JobRequest& req, std::ostream& out, std::ostream* trace_csv)
{
    validate_request(req);
    const Gamma gamma(req.gamma);
    const SolverOptions opt{req.options.max_iter, req.options.eps, req.options.tol};
    std::vector<SolverTrace> traces = parallel_map(req.pairs.size(), req.options.workers, [&](std::size_t i) {
        return req.options.method == Method::Map ? map_solve(req.pairs[i], gamma, *req.aux, opt)
                                                 : dr_solve(req.pairs[i], gamma, *req.aux, opt);
    });

    if (trace_csv != nullptr) {
        const Eigen::Index n = req.pairs.front().dim();
        *trace_csv << "pair,iteration,constraint_residual,aux_distance";
        for (Eigen::Index k = 0; k < n; ++k) {
            *trace_csv << ",x" << k;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            *trace_csv << ",y" << k;
        }
        *trace_csv << '\n';
        trace_csv->precision(17);
        for (std::size_t i = 0; i < traces.size(); ++i) {
            const SolverTrace& t = traces[i];
            for (std::size_t k = 0; k < t.residuals.size(); ++k) {
                *trace_csv << i << ',' << (k + 1) << ',' << t.residuals[k].constraint << ',' << t.residuals[k].aux;
                const Vec v = t.iterates[k].stacked();
                for (Eigen::Index c = 0; c < v.size(); ++c) {
                    *trace_csv << ',' << v[c];
                }
                *trace_csv << '\n';
            }
        }
    }

    int code = kExitOk;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const SolverTrace& t = traces[i];
        Json rec = {{"index", i},
                    {"method", req.options.method == Method::Map ? "map" : "dr"},
                    {"converged", t.converged},
                    {"diverged", t.diverged},
                    {"iterations", t.iterations}};
        if (t.solution) {
            rec["solution"] = pair_to_json(*t.solution);
            rec["constraint_residual"] = bilinear_residual(*t.solution, req.gamma);
            rec["aux_distance"] = distance_to_aux(*t.solution, *req.aux);
        }
        if (!t.converged) {
            code = kExitAnalytic;
        }
        out << dump_json(rec) << '\n';
    }
    return code;
}

namespace {

std::vector<double> parse_vector(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw InputError("bad number '" + item + "'");
            }
        } catch (const std::logic_error&) {
            throw InputError("bad number '" + item + "' in vector '" + s + "'");
        }
    }
    return v;
}

struct Flags {
    std::optional<double> gamma;
    std::optional<std::string> set;
    std::string input = "-";
    std::string output = "-";
    std::optional<double> tol_root;
    std::optional<double> tol_feas;
    std::optional<double> tol_deg;
    std::optional<std::string> hint;
    std::optional<int> samples;
    std::optional<int> max_iter;
    std::optional<double> eps;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> method;
    std::optional<std::string> trace;
};

void add_flags(CLI::App* sub, Flags& f)
{
    sub->add_option("--gamma", f.gamma, "Level gamma (nonzero); overrides the request");
    sub->add_option("--set", f.set, "Target set")->check(CLI::IsMember({"bilinear", "hyperbola"}));
    sub->add_option("--input", f.input, "Request file, or - for stdin");
    sub->add_option("--output", f.output, "Results file (JSON lines), or - for stdout");
    sub->add_option("--tol-root", f.tol_root, "Relative root tolerance")->envname("HYPROJ_TOL_ROOT");
    sub->add_option("--tol-feas", f.tol_feas, "Relative feasibility tolerance")->envname("HYPROJ_TOL_FEAS");
    sub->add_option("--tol-deg", f.tol_deg, "Relative degeneracy cutoff")->envname("HYPROJ_TOL_DEG");
    sub->add_option("--hint", f.hint, "Direction for set-valued representatives, e.g. 0,1");
    sub->add_option("--samples", f.samples, "Feasible samples per pair (verify)")->envname("HYPROJ_SAMPLES");
    sub->add_option("--max-iter", f.max_iter, "Solver iteration cap")->envname("HYPROJ_MAX_ITER");
    sub->add_option("--eps", f.eps, "Solver residual target")->envname("HYPROJ_EPS");
    sub->add_option("--seed", f.seed, "Sampler seed (verify)")->envname("HYPROJ_SEED");
    sub->add_option("--workers", f.workers, "Worker threads")->envname("HYPROJ_WORKERS");
    sub->add_option("--method", f.method, "Solver method")->check(CLI::IsMember({"map", "dr"}));
    sub->add_option("--trace", f.trace, "Per-iteration CSV trace path (solve)");
}

JobRequest build_request(Command cmd, const Flags& f, std::istream& in)
{
    Json j;
    try {
        if (f.input == "-") {
            j = Json::parse(in);
        } else {
            std::ifstream file(f.input);
            if (!file) {
                throw InputError("cannot open input '" + f.input + "'");
            }
            j = Json::parse(file);
        }
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed input: ") + e.what());
    }
    JobRequest req = parse_request(j, cmd);
    if (f.gamma) {
        req.gamma = *f.gamma;
    }
    if (f.set) {
        req.set = *f.set == "bilinear" ? SetKind::Bilinear : SetKind::Hyperbola;
    }
    JobOptions& o = req.options;
    if (f.tol_root) o.tol.root = *f.tol_root;
    if (f.tol_feas) o.tol.feas = *f.tol_feas;
    if (f.tol_deg) o.tol.deg = *f.tol_deg;
    if (f.samples) o.samples = *f.samples;
    if (f.max_iter) o.max_iter = *f.max_iter;
    if (f.eps) o.eps = *f.eps;
    if (f.seed) o.seed = *f.seed;
    if (f.workers) o.workers = *f.workers;
    if (f.method) o.method = *f.method == "map" ? Method::Map : Method::DouglasRachford;
    if (f.trace) o.trace_csv = *f.trace;
    if (f.hint) {
        try {
            o.hint = Point(parse_vector(*f.hint));
        } catch (const DomainError& e) {
            throw InputError(std::string("invalid hint: ") + e.what());
        }
    }
    return req;
}

int dispatch(const JobRequest& req, std::ostream& out)
{
    switch (req.command) {
    case Command::Project:
        return run_project(req, out);
    case Command::Verify:
        return run_verify(req, out);
    case Command::Solve: {
        if (req.options.trace_csv) {
            validate_request(req);
            std::ofstream csv(*req.options.trace_csv);
            if (!csv) {
                throw InputError("cannot open trace file '" + *req.options.trace_csv + "'");
            }
            return run_solve(req, out, &csv);
        }
        return run_solve(req, out, nullptr);
    }
    }
    return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Projections onto bilinear constraint sets and hyperbolas"};
    app.require_subcommand(1);
    Flags flags;
    CLI::App* project = app.add_subcommand("project", "Project each pair and emit one record per pair");
    CLI::App* verify = app.add_subcommand("verify", "Check projections against brute-force references");
    CLI::App* solve = app.add_subcommand("solve", "Run a projection-based feasibility solver");
    for (CLI::App* sub : {project, verify, solve}) {
        add_flags(sub, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const Command cmd = project->parsed() ? Command::Project : verify->parsed() ? Command::Verify : Command::Solve;
    try {
        const JobRequest req = build_request(cmd, flags, in);
        if (flags.output == "-") {
            return dispatch(req, out);
        }
        std::ofstream file(flags.output);
        if (!file) {
            throw InputError("cannot open output '" + flags.output + "'");
        }
        return dispatch(req, file);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hyproj::app
