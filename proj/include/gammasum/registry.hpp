#ifndef GAMMASUM_REGISTRY_HPP
#define GAMMASUM_REGISTRY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gammasum/const_expr.hpp"

namespace gammasum {

enum class IdentityFlag { none, paper_suspect, conjecture };
enum class VerifyStatus { pass, fail, flagged_discrepancy, conjecture_checked };

std::string to_string(VerifyStatus s);

/// One verifiable statement: left-side evaluators (independent routes) tied
/// to a right-side constant, a tolerance, and a flag.
struct Identity {
    std::string id;
    std::string source_eq; // catalog tag, e.g. "Eq. (7a)"
    std::string description;
    std::vector<std::pair<std::string, std::function<EvalResult()>>> routes;
    std::function<EvalResult()> rhs;
    std::string rhs_text; // rendering when the right side is an expression
    double tol = 1e-9;
    IdentityFlag flag = IdentityFlag::none;
};

struct RouteValue {
    std::string name;
    double value = 0.0;
    double abs_err = 0.0;
};

struct VerificationRecord {
    std::string id;
    std::vector<RouteValue> route_values;
    double rhs_value = 0.0;
    double rhs_err = 0.0;
    double max_diff = 0.0;
    double tol = 0.0;
    VerifyStatus status = VerifyStatus::fail;
    double seconds = 0.0;
    std::string note; // diagnostics for evaluation errors
};

struct ReportConfig {
    std::string filter;
    std::optional<double> tol_override;
    int parallelism = 1;
    bool timings = false;
};

struct Report {
    std::vector<VerificationRecord> records; // ordered by id
    int n_pass = 0;
    int n_fail = 0;
    int n_flagged = 0;
    int n_conjecture = 0;
    ReportConfig config;
};

/// The full immutable identity registry (built once).
const std::vector<Identity>& registry();

/// nullptr when the id does not exist
const Identity* lookup(const std::string& id);

VerificationRecord verify(const std::string& id,
                          std::optional<double> tol_override = std::nullopt);

/// Runs every identity whose id contains `filter` (all when empty); the
/// report is ordered by id and identical for any parallelism level.
Report verify_all(const std::string& filter = {},
                  std::optional<double> tol_override = std::nullopt, int parallelism = 1);

} // namespace gammasum

#endif
