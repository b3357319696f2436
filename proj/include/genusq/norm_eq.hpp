#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "genusq/int_types.hpp"
#include "genusq/quadfield.hpp"

namespace genusq {

// Solution-shape families for x^2 - p*y^2 = q^(lambda*h).
//   F1: p ≡ q ≡ 1 (mod 4), (p/q) = 1      -> x odd, y even
//   F2: p = 2, q ≡ 1 (mod 8)              -> x odd, 4 | y
//   F3: p ≡ 1 (mod 4), q ≡ 3 (mod 4), (p/q) = 1 -> x even, y odd
//   F2_ODD: p = 2, q ≡ 7 (mod 8)          -> x odd, y odd
// F2_ODD is not one of the three classical families; it carries the
// q_j = x_j^2 - 2y_j^2 data the p = 2 construction needs for q ≡ 7 (mod 8).
enum class SolutionForm { F1, F2, F3, F2_ODD };

const char* form_name(SolutionForm f);

std::optional<SolutionForm> classify_form(u64 p, u64 q);

// 1 if p = 2 or p ≡ 1 (mod 8); 3 if p ≡ 5 (mod 8).
int lambda_for(u64 p);

struct PellSolution {
    cpp_int x;
    cpp_int y;
    u64 q = 0;
    u64 p = 0;
    int lambda = 1;
    u64 h = 1;
    SolutionForm form = SolutionForm::F1;
    int e = 0;  // 2-adic valuation of the even coordinate (0 for F2_ODD)

    QuadElem as_elem() const { return QuadElem(x, y, 1, p); }
};

// Minimal-y nonnegative solution of x^2 - p*y^2 = q^(lambda*h) whose
// parities match the classified form. PQa/LMM class enumeration plus
// norm-one-orbit normalization; exact arithmetic throughout.
PellSolution solve_norm_equation(u64 p, u64 q);

// All window-normalized class representatives (x, y), y >= 0, of
// x^2 - p*y^2 = N, N > 0. Exposed for tests.
std::vector<std::pair<cpp_int, cpp_int>> pell_representatives(u64 p,
                                                              const cpp_int& N);

// 2-adic valuation statements (forms F1/F3, p odd).
bool check_prop_3_1(const PellSolution& sol);

// Symbol equalities keyed on x + y mod 4 (forms F1/F2/F3).
bool check_prop_3_2(const PellSolution& sol);

}  // namespace genusq
