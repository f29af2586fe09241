#pragma once

// Batch front end: JSON requests in, JSON-lines records out.

#include "hyproj/projection.hpp"
#include "hyproj/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyproj::app {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent request; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Project, Verify, Solve };
enum class SetKind { Bilinear, Hyperbola };
enum class Method { Map, DouglasRachford };

constexpr int kExitOk = 0;
constexpr int kExitAnalytic = 1;
constexpr int kExitUsage = 2;

/// Gap allowed between a projection's objective and the 2-D oracle minimum,
/// relative to 1 + minimum.
constexpr double kOracleGapRel = 1e-6;
/// Rounding allowance when comparing against sampled feasible points.
constexpr double kSampleSlackRel = 1e-9;
/// Sphere-family members checked for feasibility per record.
constexpr int kFamilyProbes = 16;

struct JobOptions {
    Tolerances tol;
    std::optional<Point> hint;
    int samples = 1000;
    int max_iter = 200;
    double eps = 1e-6;
    std::uint64_t seed = 0;
    int workers = 1;
    Method method = Method::Map;
    std::optional<std::string> trace_csv;
};

struct JobRequest {
    Command command = Command::Project;
    double gamma = 0.0;
    SetKind set = SetKind::Bilinear;
    std::vector<PairPoint> pairs;
    JobOptions options;
    std::optional<AuxSet> aux;
};

/// Reads a request object. Missing fields keep their defaults; `gamma` may
/// be absent when supplied on the command line. Throws InputError.
JobRequest parse_request(const Json& j, Command command);

/// Checks the request invariants (gamma != 0, pairs nonempty, one
/// dimension per job, solver parameters). Throws InputError.
void validate_request(const JobRequest& req);

Json pair_to_json(const PairPoint& z);
PairPoint pair_from_json(const Json& j);

/// Compact JSON with every floating-point number printed to 17 significant
/// digits, so doubles survive a write/read cycle bit for bit.
std::string dump_json(const Json& j);

// Each writes one JSON line per input pair, in input order, and returns an
// exit code (0 ok, 1 analytic failure).
int run_project(const JobRequest& req, std::ostream& out);
int run_verify(const JobRequest& req, std::ostream& out);
int run_solve(const JobRequest& req, std::ostream& out, std::ostream* trace_csv);

/// Full command line: `project | verify | solve` with flags. Returns the
/// process exit code.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyproj::app
