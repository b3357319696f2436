#include "genusq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"
#include "genusq/norm_eq.hpp"
#include "genusq/serialize.hpp"
#include "genusq/sweep.hpp"

namespace genusq {

namespace {

std::vector<std::string> field_input_violations(u64 p, u64 a) {
    std::vector<std::string> v;
    if (!is_prime(p)) v.push_back("p must be prime");
    if (p != 2 && p % 4 != 1)
        v.push_back("p must be 2 or congruent to 1 mod 4");
    if (a == 0) {
        v.push_back("a must be positive");
        return v;
    }
    try {
        factor_squarefree(a);
    } catch (const NotSquarefree&) {
        v.push_back("a must be squarefree");
    }
    if (p > 0 && a % p == 0) v.push_back("a must be coprime to p");
    return v;
}

int cmd_compute(u64 p, u64 a, const std::string& format,
                std::ostringstream& out) {
    std::vector<std::string> bad = field_input_violations(p, a);
    if (!bad.empty()) {
        for (const std::string& b : bad) out << b << "\n";
        return 2;
    }
    ComputeResult r = compute_all(p, a);
    out << (format == "json" ? render_json(r) : render_text(r));
    return 0;
}

int cmd_pell(u64 p, u64 q, const std::string& format,
             std::ostringstream& out) {
    std::vector<std::string> bad;
    if (!is_prime(p)) bad.push_back("p must be prime");
    if (p != 2 && p % 4 != 1)
        bad.push_back("p must be 2 or congruent to 1 mod 4");
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        bad.push_back("q must be an odd prime");
    else if (q == p)
        bad.push_back("q must differ from p");
    else if (bad.empty() && !classify_form(p, q))
        bad.push_back("no solution family applies to (p, q)");
    if (!bad.empty()) {
        for (const std::string& b : bad) out << b << "\n";
        return 2;
    }
    PellSolution s = solve_norm_equation(p, q);
    if (format == "json") {
        out << "{\n  \"p\": \"" << p << "\",\n  \"q\": \"" << q
            << "\",\n  \"x\": \"" << s.x.str() << "\",\n  \"y\": \""
            << s.y.str() << "\",\n  \"lambda\": " << s.lambda
            << ",\n  \"h\": \"" << s.h << "\",\n  \"form\": \""
            << form_name(s.form) << "\"\n}\n";
    } else {
        out << "x^2 - " << p << " y^2 = " << q << "^" << (s.lambda * (int)s.h)
            << ": x = " << s.x.str() << ", y = " << s.y.str() << " ["
            << form_name(s.form) << "]\n";
    }
    return 0;
}

int cmd_sweep(u64 p_max, u64 a_max, const std::string& checks_spec,
              std::ostringstream& out) {
    std::set<CheckFamily> checks;
    try {
        checks = parse_checks(checks_spec);
    } catch (const InvalidInput& e) {
        out << e.what() << "\n";
        return 2;
    }
    out << "checks:";
    for (CheckFamily f : checks) out << " " << check_family_name(f);
    out << "\n";
    SweepReport rep = run_sweep(p_max, a_max, checks);
    for (const SweepFailure& f : rep.failures) {
        const char* key =
            (f.family == CheckFamily::Pell || f.family == CheckFamily::Prop31 ||
             f.family == CheckFamily::Prop32)
                ? "q"
                : "a";
        out << "FAIL [" << check_family_name(f.family) << "] p = " << f.p
            << ", " << key << " = " << f.second << ": " << f.detail << "\n";
    }
    out << rep.cases << " cases, " << rep.failures.size() << " failures\n";
    return rep.failures.empty() ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{
        "Genus and Hilbert genus fields of Q(sqrt(a*eps*sqrt(p))) with "
        "built-in verification"};
    app.name("genusq");
    app.require_subcommand(1);

    u64 p = 0, a = 0, q = 0, p_max = 0, a_max = 0;
    std::string format = "text", checks_spec = "all";

    CLI::App* compute =
        app.add_subcommand("compute", "Genus and Hilbert genus field of one "
                                      "field, with verification verdicts");
    compute->add_option("--p", p, "Prime p (2 or 1 mod 4)")->required();
    compute->add_option("--a", a, "Positive squarefree a coprime to p")
        ->required();
    compute->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run check families over all valid inputs within bounds");
    sweep->add_option("--p-max", p_max, "Upper bound for p (and q)")
        ->required();
    sweep->add_option("--a-max", a_max, "Upper bound for a")->required();
    sweep->add_option(
        "--checks", checks_spec,
        "Comma-separated families: "
        "pell,prop31,prop32,unramified,independence,rank or all");

    CLI::App* pell = app.add_subcommand(
        "pell", "Minimal parity-matching solution of x^2 - p y^2 = "
                "q^(lambda*h)");
    pell->add_option("--p", p, "Prime p (2 or 1 mod 4)")->required();
    pell->add_option("--q", q, "Odd prime with a solution family")->required();
    pell->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::ostringstream out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return {0, app.help()};
        }
        out << "error: " << e.what() << "\n";
        return {2, out.str()};
    }

    try {
        int code = 0;
        if (compute->parsed())
            code = cmd_compute(p, a, format, out);
        else if (sweep->parsed())
            code = cmd_sweep(p_max, a_max, checks_spec, out);
        else
            code = cmd_pell(p, q, format, out);
        return {code, out.str()};
    } catch (const Error& e) {
        out << "internal error: " << e.what() << "\n";
        return {3, out.str()};
    }
}

}  // namespace genusq
