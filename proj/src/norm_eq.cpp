#include "genusq/norm_eq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"

namespace genusq {

namespace {

cpp_int inv_mod(const cpp_int& a, const cpp_int& m) {
    // m > 1, gcd(a, m) = 1; iterative extended Euclid on (a mod m, m).
    cpp_int r0 = mod_floor(a, m), r1 = m;
    cpp_int s0 = 1, s1 = 0;
    while (r1 != 0) {
        cpp_int qt = r0 / r1;
        cpp_int r2 = r0 - qt * r1;
        cpp_int s2 = s0 - qt * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw InvalidInput("inverse does not exist");
    return mod_floor(s0, m);
}

// Square roots of n modulo r^k (r odd prime, r coprime to n), all of them.
std::vector<cpp_int> sqrt_mod_prime_power(u64 n_mod_r_input, u64 n, u64 r,
                                          int k) {
    if (legendre(cpp_int(n_mod_r_input), r) != 1) return {};
    cpp_int root = sqrt_mod_prime(n_mod_r_input, r);
    cpp_int mod = r;
    cpp_int target = n;
    // Hensel: z -> z - (z^2 - n) * (2z)^{-1}, modulus squares each round.
    while (mod < pow_int(cpp_int(r), k)) {
        cpp_int next_mod = mod * mod;
        cpp_int cap = pow_int(cpp_int(r), k);
        if (next_mod > cap) next_mod = cap;
        cpp_int inv2z = inv_mod(2 * root, next_mod);
        root = mod_floor(root - (root * root - target) * inv2z, next_mod);
        mod = next_mod;
    }
    cpp_int full = pow_int(cpp_int(r), k);
    root = mod_floor(root, full);
    if (root == 0) return {cpp_int(0)};
    return {root, full - root};
}

struct UnitPair {
    // Smallest integral totally positive-coordinate units of Z[sqrt(p)]:
    // flip has norm -1, step = flip^2 has norm +1.
    cpp_int flip_u, flip_v;
    cpp_int step_u, step_v;
};

UnitPair integral_units(u64 p) {
    QuadElem eps = fundamental_unit(p);
    QuadElem flip = eps;
    if (flip.den == 2) flip = quad_mul(quad_mul(eps, eps), eps);
    if (flip.den != 1 || norm(flip) != -1)
        throw Error("integral norm -1 unit not found for p=" + std::to_string(p));
    QuadElem step = quad_mul(flip, flip);
    return {flip.u, flip.v, step.u, step.v};
}

struct Pair {
    cpp_int x, y;
    bool operator<(const Pair& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

Pair mul_unit(const Pair& a, const cpp_int& su, const cpp_int& sv, u64 p) {
    return {su * a.x + cpp_int(p) * sv * a.y, su * a.y + sv * a.x};
}

// Bring (x, y), x^2 - p y^2 = N > 0, to the orbit element with minimal y >= 0.
Pair window_normalize(Pair a, const UnitPair& un, u64 p) {
    if (a.x < 0) {
        a.x = -a.x;
        a.y = -a.y;
    }
    // step^{-1} = conjugate of step (norm +1).
    while (a.y < 0) a = mul_unit(a, un.step_u, un.step_v, p);
    for (;;) {
        Pair down = mul_unit(a, un.step_u, -un.step_v, p);
        if (down.x < 0 || down.y < 0) break;
        a = down;
    }
    return a;
}

// Trial factorization for the right-hand sides we solve (prime powers and
// small composites). Throws if a cofactor above the trial bound remains.
std::vector<std::pair<u64, int>> factor_small(cpp_int n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; cpp_int(d) * d <= n && d <= 2000000; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (n > 1) {
        if (n > 2000000LL * 2000000LL)
            throw InvalidInput("norm-equation right-hand side too composite");
        out.push_back({static_cast<u64>(n), 1});
    }
    return out;
}

void enumerate_square_divisors(const std::vector<std::pair<u64, int>>& fac,
                               size_t idx, cpp_int cur,
                               std::vector<cpp_int>& out) {
    if (idx == fac.size()) {
        out.push_back(cur);
        return;
    }
    cpp_int pk = 1;
    for (int c = 0; 2 * c <= fac[idx].second; ++c) {
        enumerate_square_divisors(fac, idx + 1, cur * pk, out);
        pk *= fac[idx].first;
    }
}

// All residues z mod prod(fac) with z^2 = D, via CRT over the prime powers.
std::vector<cpp_int> sqrt_mod_composite(u64 D,
                                        const std::vector<std::pair<u64, int>>& fac) {
    std::vector<cpp_int> roots{cpp_int(0)};
    cpp_int mod_so_far = 1;
    for (const auto& [r, k] : fac) {
        if (r == 2) return {};  // right-hand sides here are odd
        cpp_int rk = pow_int(cpp_int(r), k);
        u64 d_mod_r = static_cast<u64>(D % r);
        if (d_mod_r == 0) return {};  // q | p never holds for our inputs
        std::vector<cpp_int> part = sqrt_mod_prime_power(d_mod_r, D, r, k);
        if (part.empty()) return {};
        std::vector<cpp_int> next;
        for (const cpp_int& a : roots)
            for (const cpp_int& b : part) {
                // z = a mod mod_so_far, z = b mod rk
                cpp_int inv = inv_mod(mod_so_far % rk, rk);
                cpp_int z = a + mod_so_far * mod_floor((b - a) * inv, rk);
                next.push_back(mod_floor(z, mod_so_far * rk));
            }
        roots = std::move(next);
        mod_so_far *= rk;
    }
    return roots;
}

// PQa continued-fraction walk on (z + sqrt(D)) / M; returns the first
// G_i + B_i sqrt(D) with |Q_{i+1}| = 1, i.e. norm +-M, if the walk meets one
// inside its period.
std::optional<Pair> pqa_solution(const cpp_int& z, const cpp_int& M, u64 D) {
    cpp_int s = isqrt(cpp_int(D));
    cpp_int P = z, Q = M;
    cpp_int g2 = -z, g1 = M;  // G_{-2}, G_{-1}
    cpp_int b2 = 1, b1 = 0;   // B_{-2}, B_{-1}
    std::set<std::pair<cpp_int, cpp_int>> seen;
    for (int i = 0; i < 200000; ++i) {
        cpp_int a = (Q > 0) ? div_floor(P + s, Q) : div_floor(P + s + 1, Q);
        cpp_int G = a * g1 + g2;
        cpp_int B = a * b1 + b2;
        cpp_int Pn = a * Q - P;
        cpp_int Qn = (cpp_int(D) - Pn * Pn) / Q;
        if (abs(Qn) == 1) return Pair{G, B};
        if (!seen.insert({Pn, Qn}).second) return std::nullopt;
        g2 = g1;
        g1 = G;
        b2 = b1;
        b1 = B;
        P = Pn;
        Q = Qn;
    }
    throw Error("continued-fraction walk failed to terminate");
}

}  // namespace

const char* form_name(SolutionForm f) {
    switch (f) {
        case SolutionForm::F1: return "F1";
        case SolutionForm::F2: return "F2";
        case SolutionForm::F3: return "F3";
        case SolutionForm::F2_ODD: return "F2_ODD";
    }
    return "?";
}

std::optional<SolutionForm> classify_form(u64 p, u64 q) {
    if (!is_prime(p) || !is_prime(q) || p == q) return std::nullopt;
    if (p == 2) {
        if (q % 8 == 1) return SolutionForm::F2;
        if (q % 8 == 7) return SolutionForm::F2_ODD;
        return std::nullopt;
    }
    if (p % 4 != 1 || q == 2) return std::nullopt;
    if (legendre(cpp_int(p), q) != 1) return std::nullopt;
    if (q % 4 == 1) return SolutionForm::F1;
    return SolutionForm::F3;
}

int lambda_for(u64 p) {
    if (p == 2 || p % 8 == 1) return 1;
    if (p % 8 == 5) return 3;
    throw InvalidPrime("lambda is defined for p = 2 or p = 1 mod 4, got p=" +
                       std::to_string(p));
}

std::vector<std::pair<cpp_int, cpp_int>> pell_representatives(u64 p,
                                                              const cpp_int& N) {
    if (N <= 0) throw InvalidInput("right-hand side must be positive");
    UnitPair un = integral_units(p);
    auto fac = factor_small(N);
    std::vector<cpp_int> fs;
    enumerate_square_divisors(fac, 0, 1, fs);

    std::set<Pair> reps;
    auto push = [&](Pair a) {
        Pair n1 = window_normalize(a, un, p);
        Pair n2 = window_normalize(Pair{a.x, -a.y}, un, p);
        reps.insert(n1);
        reps.insert(n2);
    };

    for (const cpp_int& f : fs) {
        cpp_int M = N / (f * f);
        if (M == 1) {
            push(Pair{f, 0});
            continue;
        }
        // Factorization of M: subtract 2*val(f) from each exponent.
        std::vector<std::pair<u64, int>> mfac;
        for (auto [r, k] : fac) {
            cpp_int ff = f;
            int vf = 0;
            while (ff % r == 0) {
                ff /= r;
                ++vf;
            }
            int rem = k - 2 * vf;
            if (rem > 0) mfac.push_back({r, rem});
        }
        for (const cpp_int& z0 : sqrt_mod_composite(p, mfac)) {
            // Symmetric representative in (-M/2, M/2].
            cpp_int z = z0;
            if (2 * z > M) z -= M;
            auto sol = pqa_solution(z, M, p);
            if (!sol) continue;
            cpp_int nrm = sol->x * sol->x - cpp_int(p) * sol->y * sol->y;
            if (abs(nrm) != M)
                throw Error("continued-fraction invariant violated");
            Pair base = *sol;
            if (nrm == -M) base = mul_unit(base, un.flip_u, un.flip_v, p);
            push(Pair{f * base.x, f * base.y});
        }
    }

    std::vector<std::pair<cpp_int, cpp_int>> out;
    for (const Pair& r : reps) out.push_back({r.x, r.y});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

PellSolution solve_norm_equation(u64 p, u64 q) {
    auto form = classify_form(p, q);
    if (!form)
        throw FormMismatch("no solution family for p=" + std::to_string(p) +
                           ", q=" + std::to_string(q));
    int lambda = lambda_for(p);
    u64 h = class_number(p);
    cpp_int N = pow_int(cpp_int(q), lambda * static_cast<int>(h));

    auto parity_ok = [&](const Pair& a) {
        bool x_odd = ((a.x & 1) != 0);
        bool y_odd = ((a.y & 1) != 0);
        switch (*form) {
            case SolutionForm::F1: return x_odd && !y_odd && a.y > 0;
            case SolutionForm::F2: return x_odd && a.y > 0 && (a.y % 4 == 0);
            case SolutionForm::F3: return !x_odd && y_odd;
            case SolutionForm::F2_ODD: return x_odd && y_odd;
        }
        return false;
    };

    UnitPair un = integral_units(p);
    std::optional<Pair> best;
    for (const auto& [rx, ry] : pell_representatives(p, N)) {
        Pair cur{rx, ry};
        // The coordinate pattern mod 4 is purely periodic along the orbit
        // (the step matrix is invertible mod 4), so 64 steps decide it.
        for (int k = 0; k < 64; ++k) {
            if (parity_ok(cur)) {
                if (!best || cur.y < best->y) best = cur;
                break;
            }
            cur = mul_unit(cur, un.step_u, un.step_v, p);
        }
    }
    if (!best)
        throw NoSolutionInBound("no parity-matching solution of x^2-" +
                                std::to_string(p) + "y^2=" + to_string(N));

    PellSolution sol;
    sol.x = best->x;
    sol.y = best->y;
    sol.q = q;
    sol.p = p;
    sol.lambda = lambda;
    sol.h = h;
    sol.form = *form;
    switch (*form) {
        case SolutionForm::F1:
        case SolutionForm::F2: sol.e = val2(sol.y); break;
        case SolutionForm::F3: sol.e = val2(sol.x); break;
        case SolutionForm::F2_ODD: sol.e = 0; break;
    }
    if (sol.x * sol.x - cpp_int(p) * sol.y * sol.y != N)
        throw Error("norm-equation solution check failed");
    return sol;
}

bool check_prop_3_1(const PellSolution& sol) {
    if (sol.form == SolutionForm::F1) {
        int l2 = legendre(cpp_int(2), sol.q);
        int e = sol.e;
        bool c1 = (e == 1) == (sol.q % 8 == 5);
        bool c2 = (e % 2 == 1) || l2 == 1;  // (2/q)^e = (2/q)
        int rhs = (((sol.y >> 1) & 1) != 0) ? -1 : 1;
        bool c3 = (l2 == rhs);
        return c1 && c2 && c3;
    }
    if (sol.form == SolutionForm::F3) {
        cpp_int pq = cpp_int(sol.p) * sol.q;
        int j2 = jacobi(2, pq);
        int e = sol.e;
        bool c1 = (e == 1) == (pq % 8 == 3);
        bool c2 = (e % 2 == 1) || j2 == 1;
        int rhs = (((sol.x >> 1) & 1) != 0) ? -1 : 1;
        bool c3 = (j2 == rhs);
        return c1 && c2 && c3;
    }
    throw FormMismatch("valuation statement applies to odd p families only");
}

bool check_prop_3_2(const PellSolution& sol) {
    if (sol.form == SolutionForm::F2_ODD)
        throw FormMismatch("symbol statement does not cover p=2, q=7 mod 8");

    if (sol.form == SolutionForm::F1) {
        bool lhs = (mod_floor(sol.x + sol.y, 4) == 1);
        bool rhs = quartic_symbol_mod_p(sol.p, sol.q) ==
                   quartic_symbol_mod_p(sol.q, sol.p);
        return lhs == rhs;
    }
    if (sol.form == SolutionForm::F2) {
        bool lhs = (mod_floor(sol.x + sol.y, 4) == 1);
        bool rhs = quartic_symbol_mod_p(2, sol.q) == quartic_symbol_mod_2(sol.q);
        return lhs == rhs;
    }
    // F3: the statement concerns the primitive part of (x, y).
    cpp_int x1 = sol.x, y1 = sol.y;
    int k = std::min(valp(x1, sol.q), valp(y1, sol.q));
    for (int i = 0; i < k; ++i) {
        x1 /= sol.q;
        y1 /= sol.q;
    }
    int lx = legendre(x1, sol.q);
    int ly = legendre(y1, sol.q);
    if (lx == 0 || ly == 0) throw Error("primitive part still divisible by q");
    bool lhs = (mod_floor(x1 + y1, 4) == 1);
    int qp4 = quartic_symbol_mod_p(sol.q, sol.p);
    if (lx == ly) return lhs == (qp4 == 1);
    return lhs == (qp4 == -1);
}

}  // namespace genusq
