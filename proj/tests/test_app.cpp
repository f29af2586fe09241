#include "hyproj/app.hpp"

#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <vector>

using namespace hyproj;
using namespace hyproj::app;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<const char*> args, const std::string& input)
{
    args.insert(args.begin(), "hyproj");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(args.size()), args.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& s)
{
    std::vector<Json> v;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty()) {
            v.push_back(Json::parse(line));
        }
    }
    return v;
}

const char* kTwoPairs = R"({"gamma": 1, "pairs": [{"x": [1, 0], "y": [0, 1]}, [[3, 0], [3, 0]]]})";

}  // namespace

TEST_SUITE("app") {

TEST_CASE("doubles survive a JSON round trip bit for bit")
{
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> ex(-300, 300);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 2000; ++k) {
        const double v = std::ldexp(nd(rng), ex(rng) / 3);
        const Json j = {{"v", v}};
        const double back = Json::parse(dump_json(j)).at("v").get<double>();
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);
    }
    CHECK(dump_json(Json{{"a", 0.1}}) == R"({"a":0.10000000000000001})");
    CHECK(dump_json(Json{{"n", std::nan("")}}) == R"({"n":null})");
}

TEST_CASE("pairs in both spellings")
{
    const PairPoint a = pair_from_json(Json::parse(R"({"x": [1, 2], "y": [3, 4]})"));
    const PairPoint b = pair_from_json(Json::parse("[[1, 2], [3, 4]]"));
    CHECK(a == b);
    CHECK(pair_from_json(pair_to_json(a)) == a);
    CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"x": [1]})")), InputError);
    CHECK_THROWS_AS(pair_from_json(Json::parse("[[1], [2, 3]]")), InputError);
    CHECK_THROWS_AS(pair_from_json(Json::parse("[[], []]")), InputError);
    CHECK_THROWS_AS(pair_from_json(Json::parse("[1, 2, 3]")), InputError);
}

TEST_CASE("request validation")
{
    auto check_bad = [](const char* text, Command c, const char* needle) {
        CAPTURE(text);
        JobRequest req;
        try {
            req = parse_request(Json::parse(text), c);
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            return;
        }
        CHECK_THROWS_WITH_AS(validate_request(req), doctest::Contains(needle), InputError);
    };
    check_bad(R"({"gamma": 0, "pairs": [[[1], [1]]]})", Command::Project, "cross");
    check_bad(R"({"gamma": 1, "pairs": []})", Command::Project, "no pairs");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]], [[1, 2], [1, 2]]]})", Command::Project, "dimension");
    check_bad(R"({"gamma": 1, "set": "circle", "pairs": [[[1], [1]]]})", Command::Project, "set");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "options": {"tol_feas": -1}})", Command::Verify, "tolerances");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "options": {"samples": 0}})", Command::Verify, "samples");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]]})", Command::Solve, "aux");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "aux": {"kind": "fixed_x", "x": [1]},
                  "options": {"max_iter": 0}})",
              Command::Solve, "max_iter");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "aux": {"kind": "fixed_x", "x": [1, 2]}})", Command::Solve,
              "aux set dimension");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "aux": {"kind": "cube"}})", Command::Solve, "aux.kind");
    check_bad(R"({"gamma": 1, "set": "hyperbola", "pairs": [[[1], [1]]], "aux": {"kind": "fixed_x", "x": [1]}})",
              Command::Solve, "bilinear");
    check_bad(R"({"gamma": 1, "pairs": [[[1], [1]]], "options": {"hint": [1, 2]}})", Command::Project, "hint");
}

TEST_CASE("project emits one record per pair in order")
{
    const CliRun r = cli({"project"}, kTwoPairs);
    REQUIRE(r.code == 0);
    const auto recs = lines(r.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].at("index") == 0);
    CHECK(recs[0].at("case") == "Generic");
    CHECK(recs[0].at("kind") == "singleton");
    CHECK(recs[0].at("lambda").get<double>() == doctest::Approx(-0.371506974000075).epsilon(1e-12));
    CHECK(recs[1].at("case") == "DiagonalLarge");
    CHECK(recs[1].at("kind") == "sphere-family");
    CHECK(recs[1].at("lambda").is_null());
    CHECK(recs[1].at("family").at("radius").get<double>() == doctest::Approx(std::sqrt(2.5)));
}

TEST_CASE("parallel workers keep the order and the numbers")
{
    std::string many = R"({"gamma": -0.7, "pairs": [)";
    for (int k = 0; k < 60; ++k) {
        many += (k ? "," : "") + std::string("[[") + std::to_string(k * 0.1) + ",1],[2," +
                std::to_string(1.0 - k * 0.05) + "]]";
    }
    many += "]}";
    const CliRun one = cli({"project"}, many);
    const CliRun four = cli({"project", "--workers", "4"}, many);
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("flags override the request")
{
    const CliRun r = cli({"project", "--gamma", "-2", "--set", "hyperbola"}, kTwoPairs);
    REQUIRE(r.code == 0);
    const auto recs = lines(r.out);
    const auto& p = recs[0].at("point");
    const double u = p.at("x")[0].get<double>();
    const double v = p.at("y")[1].get<double>();
    CHECK(u * u - v * v == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("verify passes on good inputs")
{
    const CliRun r = cli({"verify", "--samples", "200"}, kTwoPairs);
    CHECK(r.code == 0);
    for (const Json& rec : lines(r.out)) {
        CHECK(rec.at("pass") == true);
        CHECK(rec.at("feasible") == true);
    }
}

TEST_CASE("exit codes")
{
    CHECK(cli({"project"}, R"({"gamma": 0, "pairs": [[[1], [1]]]})").code == 2);
    CHECK(cli({"project"}, "{not json").code == 2);
    CHECK(cli({"project"}, R"({"gamma": 1, "pairs": []})").code == 2);
    CHECK(cli({"frobnicate"}, "{}").code == 2);
    CHECK(cli({}, "{}").code == 2);
    CHECK(cli({"project", "--method", "newton"}, kTwoPairs).code == 2);
    CHECK(cli({"--help"}, "").code == 0);
    CHECK(cli({"project", "--input", "/nonexistent/request.json"}, "").code == 2);

    const char* solve_ok = R"({"gamma": 1, "pairs": [[[0.5, 0.5], [2, -1]]], "aux": {"kind": "fixed_x", "x": [1, 2]}})";
    CHECK(cli({"solve"}, solve_ok).code == 0);
    CHECK(cli({"solve", "--method", "dr"}, solve_ok).code == 0);
    CHECK(cli({"solve", "--max-iter", "0"}, solve_ok).code == 2);

    const char* solve_empty =
        R"({"gamma": 5, "pairs": [[[0.5, 0.5], [2, -1]]],
            "aux": {"kind": "ball", "center": [[0, 0], [0, 0]], "radius": 0.5}})";
    const CliRun r = cli({"solve", "--max-iter", "30"}, solve_empty);
    CHECK(r.code == 1);
    CHECK(lines(r.out).at(0).at("converged") == false);
}

TEST_CASE("environment supplies defaults under the flags")
{
    ::setenv("HYPROJ_MAX_ITER", "0", 1);
    const char* solve_ok = R"({"gamma": 1, "pairs": [[[0.5, 0.5], [2, -1]]], "aux": {"kind": "fixed_x", "x": [1, 2]}})";
    CHECK(cli({"solve"}, solve_ok).code == 2);
    CHECK(cli({"solve", "--max-iter", "100"}, solve_ok).code == 0);
    ::unsetenv("HYPROJ_MAX_ITER");
}

}
