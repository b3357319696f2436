#include "genusq/sweep.hpp"

#include <sstream>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"
#include "genusq/hilbert.hpp"
#include "genusq/norm_eq.hpp"
#include "genusq/verify.hpp"

namespace genusq {

namespace {

std::vector<u64> valid_ps(u64 p_max) {
    std::vector<u64> out;
    if (p_max >= 2) out.push_back(2);
    for (u64 p = 5; p <= p_max; p += 4)
        if (is_prime(p)) out.push_back(p);
    return out;
}

bool parity_matches(const PellSolution& s, std::string& why) {
    bool x_odd = mod_floor(s.x, 2) == 1;
    bool y_odd = mod_floor(s.y, 2) == 1;
    switch (s.form) {
        case SolutionForm::F1:
            if (x_odd && !y_odd) return true;
            why = "expected x odd, y even";
            return false;
        case SolutionForm::F2:
            if (x_odd && s.y % 4 == 0) return true;
            why = "expected x odd, 4 | y";
            return false;
        case SolutionForm::F3:
            if (!x_odd && y_odd) return true;
            why = "expected x even, y odd";
            return false;
        case SolutionForm::F2_ODD:
            if (x_odd && y_odd) return true;
            why = "expected x odd, y odd";
            return false;
    }
    why = "unknown form";
    return false;
}

void sweep_solver(u64 p_max, const std::set<CheckFamily>& checks,
                  SweepReport& rep) {
    bool want_pell = checks.count(CheckFamily::Pell) > 0;
    bool want_31 = checks.count(CheckFamily::Prop31) > 0;
    bool want_32 = checks.count(CheckFamily::Prop32) > 0;
    if (!want_pell && !want_31 && !want_32) return;

    for (u64 p : valid_ps(p_max)) {
        u64 h = class_number(p);
        int lambda = lambda_for(p);
        for (u64 q = 3; q <= p_max; q += 2) {
            if (q == p || !is_prime(q)) continue;
            if (!classify_form(p, q)) continue;
            PellSolution sol;
            try {
                sol = solve_norm_equation(p, q);
            } catch (const Error& e) {
                for (CheckFamily f :
                     {CheckFamily::Pell, CheckFamily::Prop31,
                      CheckFamily::Prop32})
                    if (checks.count(f)) {
                        ++rep.cases;
                        rep.failures.push_back(
                            {f, p, q, std::string("solver: ") + e.what()});
                    }
                continue;
            }

            if (want_pell) {
                ++rep.cases;
                cpp_int target = pow_int(cpp_int(q), lambda * static_cast<int>(h));
                cpp_int val = sol.x * sol.x - cpp_int(p) * sol.y * sol.y;
                std::string why;
                if (val != target) {
                    std::ostringstream os;
                    os << "x^2 - p y^2 = " << val.str() << ", expected "
                       << target.str();
                    rep.failures.push_back({CheckFamily::Pell, p, q, os.str()});
                } else if (sol.x <= 0 || sol.y < 0) {
                    rep.failures.push_back(
                        {CheckFamily::Pell, p, q, "nonpositive coordinates"});
                } else if (!parity_matches(sol, why)) {
                    std::ostringstream os;
                    os << form_name(sol.form) << ": x = " << sol.x.str()
                       << ", y = " << sol.y.str() << "; " << why;
                    rep.failures.push_back({CheckFamily::Pell, p, q, os.str()});
                }
            }
            if (want_31 &&
                (sol.form == SolutionForm::F1 || sol.form == SolutionForm::F3)) {
                ++rep.cases;
                if (!check_prop_3_1(sol))
                    rep.failures.push_back({CheckFamily::Prop31, p, q,
                                            "2-adic valuation statement false"});
            }
            if (want_32 && sol.form != SolutionForm::F2_ODD) {
                ++rep.cases;
                if (!check_prop_3_2(sol))
                    rep.failures.push_back({CheckFamily::Prop32, p, q,
                                            "symbol equalities false"});
            }
        }
    }
}

void sweep_fields(u64 p_max, u64 a_max, const std::set<CheckFamily>& checks,
                  SweepReport& rep) {
    std::vector<CheckFamily> wanted;
    for (CheckFamily f : {CheckFamily::Unramified, CheckFamily::Independence,
                          CheckFamily::Rank})
        if (checks.count(f)) wanted.push_back(f);
    if (wanted.empty()) return;

    for (u64 p : valid_ps(p_max)) {
        for (u64 a = 1; a <= a_max; ++a) {
            if (a % p == 0) continue;
            try {
                factor_squarefree(a);
            } catch (const NotSquarefree&) {
                continue;
            }
            FieldContext ctx;
            GeneratorSet gens;
            try {
                ctx = build_field(p, a);
                gens = hilbert_genus_field(ctx);
            } catch (const Error& e) {
                ++rep.cases;
                rep.failures.push_back({wanted.front(), p, a,
                                        std::string("construction: ") + e.what()});
                continue;
            }

            for (CheckFamily f : wanted) {
                ++rep.cases;
                try {
                    if (f == CheckFamily::Unramified) {
                        for (const Radicand& r : gens.radicands) {
                            QuadElem elem = radicand_element(r, ctx.eps);
                            if (mod_floor(norm(elem), 2) == 0) continue;
                            UnramifiedReport ur = is_unramified_generator(ctx, r);
                            if (!ur.ok()) {
                                std::ostringstream os;
                                os << "sqrt(" << r.str() << "): clause1 = "
                                   << ur.clause1 << ", clause2 = " << ur.clause2;
                                rep.failures.push_back({f, p, a, os.str()});
                            }
                        }
                    } else if (f == CheckFamily::Independence) {
                        if (!independence_mod_squares(ctx, gens.radicands))
                            rep.failures.push_back(
                                {f, p, a, "dependent generator set"});
                    } else {
                        RankCheck rc = ambiguous_rank_check(ctx, gens);
                        if (!rc.consistent) {
                            std::ostringstream os;
                            os << "t = " << rc.t << ", e in [" << rc.e.lo << ", "
                               << rc.e.hi << "], expected [" << rc.expected_lo
                               << ", " << rc.expected_hi << "], actual "
                               << rc.actual;
                            rep.failures.push_back({f, p, a, os.str()});
                        }
                    }
                } catch (const Error& e) {
                    rep.failures.push_back({f, p, a, e.what()});
                }
            }
        }
    }
}

}  // namespace

const char* check_family_name(CheckFamily f) {
    switch (f) {
        case CheckFamily::Pell: return "pell";
        case CheckFamily::Prop31: return "prop31";
        case CheckFamily::Prop32: return "prop32";
        case CheckFamily::Unramified: return "unramified";
        case CheckFamily::Independence: return "independence";
        case CheckFamily::Rank: return "rank";
    }
    return "?";
}

std::set<CheckFamily> parse_checks(const std::string& spec) {
    static const std::vector<CheckFamily> all = {
        CheckFamily::Pell,       CheckFamily::Prop31,
        CheckFamily::Prop32,     CheckFamily::Unramified,
        CheckFamily::Independence, CheckFamily::Rank};
    std::set<CheckFamily> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") {
            out.insert(all.begin(), all.end());
            continue;
        }
        bool found = false;
        for (CheckFamily f : all)
            if (item == check_family_name(f)) {
                out.insert(f);
                found = true;
                break;
            }
        if (!found)
            throw InvalidInput("unknown check family: " + item);
    }
    if (out.empty()) throw InvalidInput("no check families selected");
    return out;
}

SweepReport run_sweep(u64 p_max, u64 a_max,
                      const std::set<CheckFamily>& checks) {
    SweepReport rep;
    sweep_solver(p_max, checks, rep);
    sweep_fields(p_max, a_max, checks, rep);
    return rep;
}

}  // namespace genusq
