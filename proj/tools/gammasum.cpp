// Command-line front end: identity verification, report emission, and
// direct evaluation of the scalar functions, summation families, and
// integral representations.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "gammasum/quadrature.hpp"
#include "gammasum/registry.hpp"
#include "gammasum/report.hpp"
#include "gammasum/series.hpp"
#include "gammasum/specfun.hpp"
#include "gammasum/sum_families.hpp"

namespace {

using namespace gammasum;

// accepts plain decimals and p/q fractions
double parse_real(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(s.substr(0, slash));
        const double den = std::stod(s.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("zero denominator in " + s);
        return num / den;
    }
    return std::stod(s);
}

RationalArg parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

void print_value(double v) { std::printf("%.17g\n", v); }

void print_series(const SeriesResult& r) {
    const char* method = "direct_tail";
    switch (r.method) {
        case SumMethod::direct_tail: method = "direct_tail"; break;
        case SumMethod::alternating_accel: method = "alternating_accel"; break;
        case SumMethod::recursion: method = "recursion"; break;
        case SumMethod::closed_form: method = "closed_form"; break;
    }
    std::printf("value    %.17g\nabs_err  %.3e\nn_terms  %lld\nmethod   %s\n", r.value, r.abs_err,
                r.n_terms, method);
}

void print_quad(const QuadResult& r) {
    std::printf("value    %.17g\nabs_err  %.3e\nn_evals  %lld\n", r.value, r.abs_err, r.n_evals);
}

int run_eval_fn(const std::vector<std::string>& args) {
    if (args.empty()) throw CLI::ValidationError("eval fn", "missing function name");
    const std::string& name = args[0];
    auto arg = [&](std::size_t i) {
        if (i >= args.size())
            throw CLI::ValidationError("eval fn", "missing argument for " + name);
        return parse_real(args[i]);
    };
    if (name == "digamma") print_value(digamma(arg(1)));
    else if (name == "polygamma") print_value(polygamma(static_cast<int>(arg(1)), arg(2)));
    else if (name == "zeta") print_value(riemann_zeta(arg(1)));
    else if (name == "hzeta") print_value(hurwitz_zeta(arg(1), arg(2)));
    else if (name == "polylog") print_value(polylog(static_cast<int>(arg(1)), arg(2)));
    else if (name == "cl1") print_value(clausen_cl1(arg(1)));
    else if (name == "cl2") print_value(clausen_cl2(arg(1)));
    else if (name == "cl2rat")
        print_value(clausen_cl2_rational(static_cast<long long>(arg(1)),
                                         static_cast<long long>(arg(2))));
    else if (name == "2f1chain") print_value(gauss_2f1_11(static_cast<int>(arg(1)), arg(2)));
    else if (name == "catalan") print_value(catalan());
    else throw CLI::ValidationError("eval fn", "unknown function: " + name);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digamma/polygamma summation identities: evaluation and verification"};
    app.require_subcommand(1);

    // ---- list ----
    auto* list_cmd = app.add_subcommand("list", "list registry identities");
    std::string list_filter;
    list_cmd->add_option("--filter", list_filter, "substring filter on ids");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run identity verification");
    std::string v_filter, v_format = "text", v_out;
    double v_tol = 0.0;
    int v_jobs = 0;
    bool v_timings = false;
    verify_cmd->add_option("--filter", v_filter, "substring filter on ids");
    verify_cmd->add_option("--tol", v_tol, "tolerance override for all identities");
    verify_cmd->add_option("--format", v_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    verify_cmd->add_option("--out", v_out, "write the report to this path");
    verify_cmd->add_option("--jobs", v_jobs, "number of worker threads");
    verify_cmd->add_flag("--timings", v_timings, "emit measured per-identity seconds");

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function, sum, or integral");
    eval_cmd->require_subcommand(1);

    auto* fn_cmd = eval_cmd->add_subcommand("fn", "scalar special function");
    std::vector<std::string> fn_args;
    fn_cmd->add_option("args", fn_args, "NAME ARGS... (fractions like 1/4 allowed)");

    auto* sum_cmd = eval_cmd->add_subcommand("sum", "summation family (series route)");
    std::string s_family, s_sign = "+", s_a = "1", s_z = "1";
    int s_p = 2, s_k = 1, s_j = 1, s_q = 1, s_alpha = 1, s_beta = 1, s_m = 1;
    double s_tol = 1e-10;
    sum_cmd->add_option("--family", s_family,
                        "digamma|polygamma|block|proddenom|chain-digamma|chain-polygamma")
        ->required();
    sum_cmd->add_option("--sign", s_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    sum_cmd->add_option("--p", s_p, "inverse power of n");
    sum_cmd->add_option("--k", s_k, "argument scale k");
    sum_cmd->add_option("--j", s_j, "polygamma order / chain length");
    sum_cmd->add_option("--q", s_q, "block modulus");
    sum_cmd->add_option("--a", s_a, "rational shift NUM/DEN");
    sum_cmd->add_option("--z", s_z, "geometric weight z");
    sum_cmd->add_option("--alpha", s_alpha, "power of n in the denominator");
    sum_cmd->add_option("--beta", s_beta, "power of n+1 in the denominator");
    sum_cmd->add_option("--m", s_m, "polygamma order for chains");
    sum_cmd->add_option("--tol", s_tol, "target absolute tolerance");

    auto* int_cmd = eval_cmd->add_subcommand("integral", "integral representation");
    std::string i_rep, i_sign = "+", i_a = "1";
    int i_p = 2, i_k = 1, i_j = 1, i_m = 1;
    double i_z = 1.0, i_tol = 1e-10;
    int_cmd->add_option("--rep", i_rep,
                        "digamma|digamma-k1|polygamma|general|chain|chain-polygamma|"
                        "e32|e39|e41|e43|e44a|e44b|e44c")
        ->required();
    int_cmd->add_option("--sign", i_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    int_cmd->add_option("--p", i_p, "inverse power of n");
    int_cmd->add_option("--k", i_k, "argument scale k");
    int_cmd->add_option("--j", i_j, "polygamma order / chain length");
    int_cmd->add_option("--m", i_m, "log power");
    int_cmd->add_option("--a", i_a, "rational shift NUM/DEN");
    int_cmd->add_option("--z", i_z, "geometric weight z");
    int_cmd->add_option("--tol", i_tol, "target absolute tolerance");

    auto* const_cmd = app.add_subcommand("constants", "print the constant table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*list_cmd) {
            for (const auto& ident : registry()) {
                if (!list_filter.empty() && ident.id.find(list_filter) == std::string::npos)
                    continue;
                const char* flag = ident.flag == IdentityFlag::paper_suspect ? " [suspect]"
                                   : ident.flag == IdentityFlag::conjecture  ? " [conjecture]"
                                                                             : "";
                std::printf("%-22s %-14s tol=%-7g %s%s\n", ident.id.c_str(),
                            ident.source_eq.c_str(), ident.tol, ident.description.c_str(), flag);
            }
            return 0;
        }
        if (*verify_cmd) {
            int jobs = v_jobs;
            if (jobs <= 0) {
                if (const char* env = std::getenv("GAMMASUM_JOBS")) jobs = std::atoi(env);
                if (jobs <= 0) jobs = 1;
            }
            Report rep = verify_all(v_filter,
                                    v_tol > 0.0 ? std::optional<double>(v_tol) : std::nullopt,
                                    jobs);
            rep.config.timings = v_timings;
            const ReportFormat fmt = v_format == "csv"    ? ReportFormat::csv
                                     : v_format == "json" ? ReportFormat::json
                                                          : ReportFormat::text;
            if (v_out.empty())
                emit_report(rep, fmt, std::cout);
            else
                emit_report(rep, fmt, v_out);
            return report_exit_code(rep);
        }
        if (*fn_cmd) return run_eval_fn(fn_args);
        if (*sum_cmd) {
            const int sign = s_sign == "-" ? -1 : +1;
            SumSpec spec;
            if (s_family == "digamma")
                spec = DigammaPower{sign, s_p, s_k, parse_rational(s_a)};
            else if (s_family == "polygamma")
                spec = PolygammaPower{sign, s_p, s_j, s_k, parse_rational(s_a), parse_real(s_z)};
            else if (s_family == "block")
                spec = DigammaRationalBlock{sign, s_p, s_q};
            else if (s_family == "proddenom")
                spec = ProductDenomDigamma{parse_rational(s_a), s_alpha, s_beta};
            else if (s_family == "chain-digamma")
                spec = BinomChain{s_j, s_k, 0};
            else if (s_family == "chain-polygamma")
                spec = BinomChain{s_j, s_k, s_m};
            else
                throw CLI::ValidationError("eval sum", "unknown family: " + s_family);
            print_series(eval_sum(spec, s_tol));
            return 0;
        }
        if (*int_cmd) {
            const int sign = i_sign == "-" ? -1 : +1;
            const QuadOptions opt{i_tol, 6'000'000};
            if (i_rep == "digamma") print_quad(digamma_sum_rep(sign, i_p, i_k, opt));
            else if (i_rep == "digamma-k1") print_quad(digamma_sum_rep_k1(sign, i_p, opt));
            else if (i_rep == "polygamma") print_quad(polygamma_sum_rep(sign, i_p, i_j, i_k, opt));
            else if (i_rep == "general")
                print_quad(general_polygamma_sum_rep(sign, i_p, i_j, i_k, parse_rational(i_a),
                                                     i_z, opt));
            else if (i_rep == "chain") print_quad(binom_chain_digamma_rep(i_j, i_k, opt));
            else if (i_rep == "chain-polygamma")
                print_quad(binom_chain_polygamma_rep(i_m, i_k, i_j, opt));
            else if (i_rep == "e32") print_quad(named_integral(NamedIntegral::E32, opt));
            else if (i_rep == "e39") print_quad(named_integral(NamedIntegral::E39, opt));
            else if (i_rep == "e41") print_quad(named_integral(NamedIntegral::E41, opt));
            else if (i_rep == "e43") print_quad(log_power_integral_e43(i_j, sign, opt));
            else if (i_rep == "e44a") print_quad(named_integral(NamedIntegral::E44a, opt));
            else if (i_rep == "e44b") print_quad(named_integral(NamedIntegral::E44b, opt));
            else if (i_rep == "e44c") print_quad(named_integral(NamedIntegral::E44c, opt));
            else throw CLI::ValidationError("eval integral", "unknown rep: " + i_rep);
            return 0;
        }
        if (*const_cmd) {
            std::printf("pi        %.17g\n", std::numbers::pi);
            std::printf("gamma     %.17g\n", std::numbers::egamma);
            std::printf("ln2       %.17g\n", std::numbers::ln2);
            std::printf("G         %.17g\n", catalan());
            for (int n = 2; n <= 13; ++n)
                std::printf("zeta(%-2d)  %.17g\n", n, riemann_zeta(n));
            std::printf("Li4(1/2)  %.17g\n", polylog(4, 0.5));
            std::printf("Cl2(pi/3) %.17g\n", clausen_cl2(std::numbers::pi / 3.0));
            std::printf("Cl2(pi/4) %.17g\n", clausen_cl2(std::numbers::pi / 4.0));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
