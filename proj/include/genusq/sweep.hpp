#pragma once

#include <set>
#include <string>
#include <vector>

#include "genusq/int_types.hpp"

namespace genusq {

// Check families the sweep can run. The first three iterate over prime
// pairs (p, q); the last three iterate over fields (p, a).
enum class CheckFamily { Pell, Prop31, Prop32, Unramified, Independence, Rank };

const char* check_family_name(CheckFamily f);

// Parses "all" or a comma-separated subset of
// pell,prop31,prop32,unramified,independence,rank. Throws InvalidInput.
std::set<CheckFamily> parse_checks(const std::string& spec);

struct SweepFailure {
    CheckFamily family;
    u64 p = 0;
    u64 second = 0;  // q for solver families, a for field families
    std::string detail;
};

struct SweepReport {
    u64 cases = 0;
    std::vector<SweepFailure> failures;
};

// Runs the selected families over p <= p_max (p = 2 or prime 1 mod 4),
// q <= p_max (solver families) and squarefree a <= a_max coprime to p
// (field families). Deterministic order: ascending (p, q) then (p, a).
SweepReport run_sweep(u64 p_max, u64 a_max,
                      const std::set<CheckFamily>& checks);

}  // namespace genusq
