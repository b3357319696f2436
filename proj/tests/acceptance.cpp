// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Each criterion is self-contained and keeps running after
// a failure so the full report always prints.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"
#include "genusq/field_model.hpp"
#include "genusq/hilbert.hpp"
#include "genusq/norm_eq.hpp"
#include "genusq/quadfield.hpp"
#include "genusq/verify.hpp"

using namespace genusq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool parity_matches(const PellSolution& s) {
    bool x_odd = mod_floor(s.x, 2) == 1, y_odd = mod_floor(s.y, 2) == 1;
    switch (s.form) {
        case SolutionForm::F1: return x_odd && !y_odd;
        case SolutionForm::F2: return x_odd && s.y % 4 == 0;
        case SolutionForm::F3: return !x_odd && y_odd;
        case SolutionForm::F2_ODD: return x_odd && y_odd;
    }
    return false;
}

std::vector<u64> admissible_ps(u64 p_max) {
    std::vector<u64> ps{2};
    for (u64 p = 5; p <= p_max; p += 4)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

struct FieldSweep {
    std::vector<FieldContext> fields;
    std::vector<GeneratorSet> hilberts;
    std::string error;  // first construction failure, empty when clean
};

FieldSweep sweep_fields_60_150() {
    FieldSweep out;
    for (u64 p : admissible_ps(60)) {
        for (u64 a = 1; a <= 150; ++a) {
            if (a % p == 0) continue;
            try {
                factor_squarefree(a);
            } catch (const NotSquarefree&) {
                continue;
            }
            try {
                FieldContext c = build_field(p, a);
                out.hilberts.push_back(hilbert_genus_field(c));
                out.fields.push_back(std::move(c));
            } catch (const Error& e) {
                if (out.error.empty())
                    out.error = "(" + std::to_string(p) + ", " +
                                std::to_string(a) + "): " + e.what();
            }
        }
    }
    return out;
}

std::string gen_strs(const GeneratorSet& g) {
    std::string s = "{";
    for (size_t i = 0; i < g.radicands.size(); ++i) {
        if (i) s += ", ";
        s += g.radicands[i].str();
    }
    return s + "}";
}

}  // namespace

int main() {
    // Criteria 1-3: the norm-equation sweep over all admissible (p, q) with
    // p, q <= 200 and a solution family.
    auto t0 = Clock::now();
    std::vector<PellSolution> sweep;
    std::string solve_err, parity_err;
    for (u64 p : admissible_ps(200)) {
        for (u64 q = 3; q <= 200; q += 2) {
            if (q == p || !is_prime(q) || !classify_form(p, q)) continue;
            try {
                PellSolution s = solve_norm_equation(p, q);
                cpp_int n = pow_int(cpp_int(q), s.lambda * static_cast<int>(s.h));
                if (s.x * s.x - cpp_int(p) * s.y * s.y != n)
                    throw Error("solution does not solve the equation");
                if (!parity_matches(s) && parity_err.empty())
                    parity_err = "(" + std::to_string(p) + ", " +
                                 std::to_string(q) + ")";
                sweep.push_back(std::move(s));
            } catch (const Error& e) {
                if (solve_err.empty())
                    solve_err = "(" + std::to_string(p) + ", " +
                                std::to_string(q) + "): " + e.what();
            }
        }
    }
    double dt = seconds_since(t0);
    {
        bool ok = solve_err.empty() && parity_err.empty() && dt < 60.0 &&
                  !sweep.empty();
        std::string msg = "norm-equation sweep p, q <= 200: " +
                          std::to_string(sweep.size()) + " pairs solved in " +
                          std::to_string(dt) + " s";
        if (!solve_err.empty()) msg += "; first failure " + solve_err;
        if (!parity_err.empty()) msg += "; parity mismatch at " + parity_err;
        report(1, ok, msg);
    }

    {
        int bad = 0, run = 0;
        std::string first;
        for (const PellSolution& s : sweep) {
            if (s.form != SolutionForm::F1 && s.form != SolutionForm::F3)
                continue;  // the valuation statement covers the odd-p forms
            ++run;
            if (!check_prop_3_1(s)) {
                ++bad;
                if (first.empty())
                    first = "(" + std::to_string(s.p) + ", " +
                            std::to_string(s.q) + ")";
            }
        }
        std::string msg = "2-adic valuation criterion on " +
                          std::to_string(run) + " solutions";
        if (bad) msg += ": " + std::to_string(bad) + " failures, first " + first;
        report(2, bad == 0 && run > 0, msg);
    }

    {
        int bad = 0, run = 0;
        std::string first;
        for (const PellSolution& s : sweep) {
            if (s.form == SolutionForm::F2_ODD) continue;
            ++run;
            if (!check_prop_3_2(s)) {
                ++bad;
                if (first.empty())
                    first = "(" + std::to_string(s.p) + ", " +
                            std::to_string(s.q) + ")";
            }
        }
        // Dual classification of split primes (quartic symbols vs the class
        // of alpha mod 4) is cross-checked inside the dispatch; any
        // disagreement throws.
        std::string dual_err;
        try {
            for (u64 a = 1; a <= 200; ++a) {
                if (a % 2 == 0) continue;
                try {
                    factor_squarefree(a);
                } catch (const NotSquarefree&) {
                    continue;
                }
                hilbert_genus_field(build_field(2, a));
            }
        } catch (const DualEvaluationMismatch& e) {
            dual_err = e.what();
        }
        bool ok = bad == 0 && run > 0 && dual_err.empty();
        std::string msg = "quartic-symbol criterion on " + std::to_string(run) +
                          " solutions, dual classification consistent";
        if (bad) msg += "; " + std::to_string(bad) + " failures, first " + first;
        if (!dual_err.empty()) msg += "; dual mismatch: " + dual_err;
        report(3, ok, msg);
    }

    {
        struct Expect {
            u64 p, a;
            std::vector<std::string> gens;
            int rk;
            u64 q;
            cpp_int x, y;
        };
        std::vector<Expect> table = {
            {17, 13, {"13"}, 1, 13, 9, 2},
            {5, 11, {}, 0, 11, 44, 11},
            {2, 7, {}, 0, 7, 3, 1},
        };
        bool ok = true;
        std::string detail;
        for (const Expect& e : table) {
            GeneratorSet h = hilbert_genus_field(build_field(e.p, e.a));
            std::vector<std::string> got;
            for (const auto& r : h.radicands) got.push_back(r.str());
            bool match = got == e.gens && rank(h) == e.rk;
            // The backing solution must be the minimal oracle element.
            auto oracle = brute_pell_oracle(e.p, e.q, e.y);
            bool oracle_ok = !oracle.empty() && oracle.back().first == e.x &&
                             oracle.back().second == e.y;
            bool traced = false;
            for (const auto& [q, xy] : h.trace.chosen_pell)
                if (q == e.q && xy.first == e.x && xy.second == e.y)
                    traced = true;
            if (!(match && oracle_ok && traced)) {
                ok = false;
                detail += " (" + std::to_string(e.p) + ", " +
                          std::to_string(e.a) + ") got " + gen_strs(h);
            }
        }
        report(4, ok, "derived traces (17,13) -> {sqrt(13)} rank 1, "
                      "(5,11) -> K rank 0, (2,7) -> K rank 0" + detail);
    }

    // Criteria 5-8 share the p <= 60, a <= 150 field sweep.
    t0 = Clock::now();
    FieldSweep fs = sweep_fields_60_150();
    {
        int bad = 0, run = 0;
        std::string first = fs.error;
        for (size_t i = 0; i < fs.fields.size(); ++i) {
            for (const auto& r : fs.hilberts[i].radicands) {
                QuadElem val = radicand_element(r, fs.fields[i].eps);
                if (norm(val) % 2 == 0) continue;  // dyadic: criterion not applicable
                ++run;
                if (!is_unramified_generator(fs.fields[i], r).ok()) {
                    ++bad;
                    if (first.empty())
                        first = "(" + std::to_string(fs.fields[i].p) + ", " +
                                std::to_string(fs.fields[i].a) + ") sqrt(" +
                                r.str() + ")";
                }
            }
        }
        double dt5 = seconds_since(t0);
        bool ok = bad == 0 && first.empty() && run > 0 && dt5 < 300.0;
        std::string msg = "unramifiedness of " + std::to_string(run) +
                          " odd generators over " +
                          std::to_string(fs.fields.size()) + " fields in " +
                          std::to_string(dt5) + " s";
        if (!first.empty()) msg += "; first failure " + first;
        report(5, ok, msg);
    }

    {
        int bad = 0;
        std::string first;
        for (size_t i = 0; i < fs.fields.size(); ++i) {
            if (!independence_mod_squares(fs.fields[i], fs.hilberts[i].radicands)) {
                ++bad;
                if (first.empty())
                    first = "(" + std::to_string(fs.fields[i].p) + ", " +
                            std::to_string(fs.fields[i].a) + ")";
            }
        }
        std::string msg = "independence mod squares over " +
                          std::to_string(fs.fields.size()) + " generator sets";
        if (bad) msg += "; first failure " + first;
        report(6, bad == 0 && !fs.fields.empty(), msg);
    }

    {
        int bad = 0;
        std::string first;
        for (size_t i = 0; i < fs.fields.size(); ++i) {
            RankCheck rc = ambiguous_rank_check(fs.fields[i], fs.hilberts[i]);
            if (!rc.consistent) {
                ++bad;
                if (first.empty())
                    first = "(" + std::to_string(fs.fields[i].p) + ", " +
                            std::to_string(fs.fields[i].a) + ") expected [" +
                            std::to_string(rc.expected_lo) + ", " +
                            std::to_string(rc.expected_hi) + "] got " +
                            std::to_string(rc.actual);
            }
        }
        std::string msg = "rank consistency (t - e - 1, intervals at "
                          "dyadic-ramified cases) over " +
                          std::to_string(fs.fields.size()) + " fields";
        if (bad) msg += "; first failure " + first;
        report(7, bad == 0 && !fs.fields.empty(), msg);
    }

    {
        int bad = 0;
        std::string first;
        for (size_t i = 0; i < fs.fields.size(); ++i) {
            GeneratorSet g = genus_field(fs.fields[i]);
            GeneratorSet n = narrow_genus_product(fs.fields[i]);
            bool c1 = genus_contained_in_hilbert(fs.fields[i], g, fs.hilberts[i]);
            bool c2 = genus_rationals_in_narrow_span(fs.fields[i], g, n);
            if (!(c1 && c2)) {
                ++bad;
                if (first.empty())
                    first = "(" + std::to_string(fs.fields[i].p) + ", " +
                            std::to_string(fs.fields[i].a) + ")" +
                            (c1 ? "" : " [span]") + (c2 ? "" : " [narrow]");
            }
        }
        std::string msg = "genus containment and narrow-span agreement over " +
                          std::to_string(fs.fields.size()) + " fields";
        if (bad) msg += "; first failure " + first;
        report(8, bad == 0 && !fs.fields.empty(), msg);
    }

    {
        bool a1 = quartic_symbol_mod_2(cpp_int(17)) == 1;
        bool a2 = quartic_symbol_mod_2(cpp_int(9)) == -1;
        int bad = 0;
        std::string first;
        for (u64 p = 17; p < 500; p += 8) {
            if (!is_prime(p)) continue;
            int mod16 = quartic_symbol_mod_2(cpp_int(p));
            int exponent = (p - 1) / 8 % 2 == 0 ? 1 : -1;
            (void)quartic_symbol_mod_p(2, p);  // defined: 2 is a square mod p
            if (mod16 != exponent) {
                ++bad;
                if (first.empty()) first = std::to_string(p);
            }
        }
        bool ok = a1 && a2 && bad == 0;
        std::string msg =
            "dyadic quartic symbol anchors (17 -> +1, 9 -> -1) and the "
            "(-1)^((p-1)/8) branch for p = 1 mod 8 below 500";
        if (!ok) msg += "; first failure " + (first.empty() ? "anchor" : first);
        report(9, ok, msg);
    }

    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
