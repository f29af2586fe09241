#include "hyproj/app.hpp"

#include <cmath>

namespace hyproj::app {

namespace {

template <class T>
void read_if(const Json& obj, const char* key, T& target)
{
    if (obj.contains(key) && !obj.at(key).is_null()) {
        try {
            target = obj.at(key).get<T>();
        } catch (const Json::exception& e) {
            throw InputError(std::string("field '") + key + "': " + e.what());
        }
    }
}

SetKind parse_set(const std::string& s)
{
    if (s == "bilinear") {
        return SetKind::Bilinear;
    }
    if (s == "hyperbola") {
        return SetKind::Hyperbola;
    }
    throw InputError("set must be 'bilinear' or 'hyperbola', got '" + s + "'");
}

Method parse_method(const std::string& s)
{
    if (s == "map") {
        return Method::Map;
    }
    if (s == "dr") {
        return Method::DouglasRachford;
    }
    throw InputError("method must be 'map' or 'dr', got '" + s + "'");
}

AuxSet parse_aux(const Json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "fixed") {
            return AuxSet::fixed(j.at("mask").get<std::vector<bool>>(), j.at("values").get<std::vector<double>>());
        }
        if (kind == "fixed_x") {
            return AuxSet::fixed_first(Point(j.at("x").get<std::vector<double>>()));
        }
        if (kind == "ball") {
            return AuxSet::ball(pair_from_json(j.at("center")), j.at("radius").get<double>());
        }
        throw InputError("aux.kind must be 'fixed', 'fixed_x' or 'ball', got '" + kind + "'");
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed aux set: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("invalid aux set: ") + e.what());
    }
}

}  // namespace

JobRequest parse_request(const Json& j, Command command)
{
    if (!j.is_object()) {
        throw InputError("request must be a JSON object");
    }
    JobRequest req;
    req.command = command;
    read_if(j, "gamma", req.gamma);
    if (j.contains("set")) {
        std::string s;
        read_if(j, "set", s);
        req.set = parse_set(s);
    }
    if (j.contains("pairs")) {
        if (!j.at("pairs").is_array()) {
            throw InputError("'pairs' must be an array");
        }
        for (const auto& p : j.at("pairs")) {
            req.pairs.push_back(pair_from_json(p));
        }
    }
    if (j.contains("aux")) {
        req.aux = parse_aux(j.at("aux"));
    }

    const Json opts = j.value("options", Json::object());
    if (!opts.is_object()) {
        throw InputError("'options' must be an object");
    }
    JobOptions& o = req.options;
    read_if(opts, "tol_root", o.tol.root);
    read_if(opts, "tol_feas", o.tol.feas);
    read_if(opts, "tol_deg", o.tol.deg);
    read_if(opts, "samples", o.samples);
    read_if(opts, "max_iter", o.max_iter);
    read_if(opts, "eps", o.eps);
    read_if(opts, "seed", o.seed);
    read_if(opts, "workers", o.workers);
    if (opts.contains("hint")) {
        std::vector<double> h;
        read_if(opts, "hint", h);
        try {
            o.hint = Point(h);
        } catch (const DomainError& e) {
            throw InputError(std::string("invalid hint: ") + e.what());
        }
    }
    if (opts.contains("method")) {
        std::string m;
        read_if(opts, "method", m);
        o.method = parse_method(m);
    }
    if (opts.contains("trace_csv")) {
        std::string t;
        read_if(opts, "trace_csv", t);
        o.trace_csv = t;
    }
    return req;
}

void validate_request(const JobRequest& req)
{
    if (!std::isfinite(req.gamma)) {
        throw InputError("gamma must be finite");
    }
    if (req.gamma == 0.0) {
        throw InputError("gamma = 0 is not supported: the cross {<x,y> = 0} is excluded");
    }
    if (req.pairs.empty()) {
        throw InputError("request has no pairs");
    }
    const Eigen::Index n = req.pairs.front().dim();
    for (const PairPoint& z : req.pairs) {
        if (z.dim() != n) {
            throw InputError("dimension mismatch: all pairs in a job must share one dimension");
        }
    }
    const JobOptions& o = req.options;
    if (o.hint && o.hint->dim() != n) {
        throw InputError("hint dimension does not match the pairs");
    }
    for (double t : {o.tol.root, o.tol.feas, o.tol.deg}) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw InputError("tolerances must be positive and finite");
        }
    }
    if (o.workers < 1) {
        throw InputError("workers must be >= 1");
    }
    if (req.command == Command::Verify && o.samples < 1) {
        throw InputError("samples must be >= 1");
    }
    if (req.command == Command::Solve) {
        if (o.max_iter < 1) {
            throw InputError("max_iter must be >= 1");
        }
        if (!(o.eps > 0.0)) {
            throw InputError("eps must be positive");
        }
        if (req.set != SetKind::Bilinear) {
            throw InputError("solve supports only the bilinear set");
        }
        if (!req.aux) {
            throw InputError("solve needs an 'aux' set in the request");
        }
        if (req.aux->dim() != n) {
            throw InputError("aux set dimension does not match the pairs");
        }
    }
}

}  // namespace hyproj::app
