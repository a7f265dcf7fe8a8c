// SPDX-License-Identifier: MIT
// Restricted 2-CNF formulas: every clause has exactly two literals over
// distinct variables; every variable occurs exactly once positively and at
// most twice negatively (so every variable in [1, n] occurs somewhere).
//
// Text format: one clause per line, two whitespace-separated literals
// written `x3` (positive) / `-x3` (negative); `#` starts a full-line
// comment.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace temporeach {

// variable is 1-based; negated == true for a negative literal.
struct Literal {
    int variable = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

struct Clause {
    Literal first;
    Literal second;

    bool operator==(const Clause&) const = default;
};

struct Formula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    bool operator==(const Formula&) const = default;
};

// Truth assignments are bitmasks: bit (v-1) set means variable v is true.
using Assignment = std::uint32_t;

// Throws ParseError on malformed literals or clauses of the wrong arity.
// The variable count is the maximum index mentioned; the occurrence
// restrictions are checked (every variable 1..n must occur).
Formula parse_formula(std::string_view text);

std::string serialize_formula(const Formula& formula);

// Throws std::invalid_argument naming the first violated occurrence
// restriction.
void validate_formula(const Formula& formula);

// Deterministic seeded generator for the restricted family. Requires n >= 2,
// m >= 1 and n <= 2m <= 3n (positive slots exactly n, negative slots 2m-n
// with at most 2 per variable); throws std::invalid_argument otherwise.
// Identical (seed, n, m) yields an identical formula on every platform.
Formula gen_max2sat3(std::uint64_t seed, int n, int m);

bool literal_satisfied(const Literal& lit, Assignment assignment);
int count_satisfied(const Formula& formula, Assignment assignment);

struct MaxSatResult {
    int best_count = 0;        // maximum satisfiable clause count
    Assignment assignment = 0; // least assignment attaining it
};

// Exhaustive 2^n sweep; guarded to n <= 24 (BudgetError beyond).
MaxSatResult max_sat_oracle(const Formula& formula);

}  // namespace temporeach
