#include "doctest.h"

#include <cmath>
#include <set>

#include "json.hpp"

#include "gammasum/registry.hpp"
#include "gammasum/report.hpp"
#include "reference_values.hpp"

using namespace gammasum;
namespace rv = refval;

TEST_CASE("registry shape and lookup") {
    const auto& reg = registry();
    CHECK(reg.size() > 150);
    std::set<std::string> ids;
    for (const auto& ident : reg) {
        CHECK(!ident.routes.empty());
        CHECK(ident.tol > 0.0);
        CHECK(ids.insert(ident.id).second); // ids unique
    }
    const Identity* e7a = lookup("E7a");
    REQUIRE(e7a != nullptr);
    CHECK(e7a->tol == 1e-9);
    CHECK(e7a->rhs_text == "7/2*zeta(3) - 2*ln2*zeta(2)");
    CHECK(lookup("definitely-not-there") == nullptr);
    // E63b at N = 1 carries the -zeta(2)/2 and psi(3/2)-psi(2) pieces
    const Identity* e63b = lookup("E63b-N1");
    REQUIRE(e63b != nullptr);
    const double expected = -0.5 * rv::zeta2 - (1.0 - 2.0 * rv::ln2);
    CHECK(std::fabs(e63b->rhs().value - expected) < 1e-14);
    const Identity* conj = lookup("CONJ-S142");
    REQUIRE(conj != nullptr);
    CHECK(conj->flag == IdentityFlag::conjecture);
    CHECK(std::fabs(conj->rhs().value -
                    (859.0 / 24.0 * rv::zeta6 + 3.0 * rv::zeta3 * rv::zeta3)) < 1e-13);
}

TEST_CASE("single-identity verification") {
    const auto r1 = verify("E3a-q1");
    CHECK(r1.status == VerifyStatus::pass);
    CHECK(std::fabs(r1.rhs_value - rv::zeta3) < 1e-13);
    const auto r2 = verify("E29");
    CHECK(r2.status == VerifyStatus::pass);
    CHECK(r2.max_diff < 1e-10);
    CHECK(r2.route_values.size() == 2);
    const auto r3 = verify("E44a");
    CHECK(r3.status == VerifyStatus::flagged_discrepancy);
    CHECK(r3.max_diff > 1e-3);
    CHECK(std::isfinite(r3.route_values.at(0).value));
    CHECK_THROWS_AS(verify("nope"), std::invalid_argument);
    // tolerance override propagates into the record
    const auto r4 = verify("E7a", 1e-3);
    CHECK(r4.tol == 1e-3);
    CHECK(r4.status == VerifyStatus::pass);
}

TEST_CASE("verify_all filtering and flag discipline") {
    const Report rep = verify_all("E55");
    CHECK(rep.records.size() == 8);
    CHECK(rep.n_pass == 8);
    CHECK(report_exit_code(rep) == 0);

    const Report flagged = verify_all("E44");
    CHECK(flagged.records.size() == 3);
    CHECK(flagged.n_flagged == 3);
    CHECK(flagged.n_fail == 0);
    CHECK(report_exit_code(flagged) == 0); // flagged items never flip the exit code

    const Report none = verify_all("ZZZ-nothing");
    CHECK(none.records.empty());
    const std::string csv = render_report(none, ReportFormat::csv);
    CHECK(csv == "id,status,lhs_best,rhs,diff,tol,seconds\n");
}

TEST_CASE("full suite: no failures, route independence, honest error bounds") {
    const Report rep = verify_all("", std::nullopt, 4);
    CHECK(rep.n_fail == 0);
    CHECK(rep.n_pass > 150);
    CHECK(report_exit_code(rep) == 0);
    // records ordered by id
    for (std::size_t i = 1; i < rep.records.size(); ++i)
        CHECK(rep.records[i - 1].id < rep.records[i].id);
    // route independence: routes of passing identities agree within bounds
    int honest = 0, total = 0;
    for (const auto& rec : rep.records) {
        if (rec.status != VerifyStatus::pass) continue;
        for (std::size_t i = 1; i < rec.route_values.size(); ++i) {
            const auto& a = rec.route_values[0];
            const auto& b = rec.route_values[i];
            CHECK(std::fabs(a.value - b.value) <= a.abs_err + b.abs_err + rec.tol);
        }
        // error-bound honesty against the closed form
        for (const auto& rvv : rec.route_values) {
            ++total;
            if (std::fabs(rvv.value - rec.rhs_value) <= rvv.abs_err + rec.rhs_err + 1e-15)
                ++honest;
        }
    }
    CHECK(total > 0);
    CHECK(honest >= static_cast<int>(0.95 * total));
}

TEST_CASE("determinism across parallelism levels") {
    const Report a = verify_all("E16", std::nullopt, 1);
    const Report b = verify_all("E16", std::nullopt, 8);
    for (auto fmt : {ReportFormat::text, ReportFormat::csv, ReportFormat::json})
        CHECK(render_report(a, fmt) == render_report(b, fmt));
}

TEST_CASE("csv and json formats") {
    const Report rep = verify_all("E7");
    const std::string csv = render_report(rep, ReportFormat::csv);
    CHECK(csv.substr(0, 42) == "id,status,lhs_best,rhs,diff,tol,seconds\nE7");
    CHECK(csv.back() == '\n');
    CHECK(csv.find("E7a,pass,") != std::string::npos);
    CHECK(csv.find(",1e-09,0\n") != std::string::npos);
    // 17 significant digits in the numeric columns
    const bool scientific = csv.find("e+00") != std::string::npos ||
                            csv.find("e-0") != std::string::npos;
    CHECK(scientific);

    const std::string js = render_report(rep, ReportFormat::json);
    const auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == rep.records.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK((parsed[i]["id"] == rep.records[i].id));
        CHECK((parsed[i]["status"] == to_string(rep.records[i].status)));
        const double lhs = std::stod(parsed[i]["lhs_best"].get<std::string>());
        const double rhs = std::stod(parsed[i]["rhs"].get<std::string>());
        CHECK(std::fabs(lhs - rhs) <= rep.records[i].tol + 1e-15);
    }
    // emission is a pure function of the report
    CHECK(render_report(rep, ReportFormat::json) == js);
}
