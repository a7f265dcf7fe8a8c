// SPDX-License-Identifier: MIT
#include "temporeach/formula.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

Literal parse_literal(const std::string& tok, int line) {
    std::string_view s = tok;
    Literal lit;
    if (!s.empty() && s.front() == '-') {
        lit.negated = true;
        s.remove_prefix(1);
    }
    if (s.size() < 2 || s.front() != 'x')
        throw ParseError("malformed literal '" + tok + "'", line);
    s.remove_prefix(1);
    int var = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), var);
    if (ec != std::errc{} || ptr != s.data() + s.size() || var < 1)
        throw ParseError("malformed literal '" + tok + "'", line);
    lit.variable = var;
    return lit;
}

// Deterministic uniform pick in [0, n): implementation-defined distribution
// helpers are avoided so a seed reproduces bit-identically everywhere.
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Formula formula;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::istringstream iss{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (iss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError("clause must have exactly two literals", line_number);
        Clause clause{parse_literal(tokens[0], line_number),
                      parse_literal(tokens[1], line_number)};
        formula.clauses.push_back(clause);
        formula.variable_count = std::max(
            {formula.variable_count, clause.first.variable, clause.second.variable});
    }
    validate_formula(formula);
    return formula;
}

std::string serialize_formula(const Formula& formula) {
    std::ostringstream out;
    for (const auto& c : formula.clauses) {
        out << (c.first.negated ? "-x" : "x") << c.first.variable << " "
            << (c.second.negated ? "-x" : "x") << c.second.variable << "\n";
    }
    return out.str();
}

void validate_formula(const Formula& formula) {
    const int n = formula.variable_count;
    std::vector<int> positive(n + 1, 0), negative(n + 1, 0);
    for (std::size_t k = 0; k < formula.clauses.size(); ++k) {
        const Clause& c = formula.clauses[k];
        if (c.first.variable == c.second.variable)
            throw std::invalid_argument("clause " + std::to_string(k + 1) +
                                        " uses variable x" +
                                        std::to_string(c.first.variable) + " twice");
        for (const Literal& lit : {c.first, c.second}) {
            if (lit.variable < 1 || lit.variable > n)
                throw std::invalid_argument("variable x" + std::to_string(lit.variable) +
                                            " out of range");
            (lit.negated ? negative : positive)[lit.variable]++;
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (positive[v] != 1)
            throw std::invalid_argument("variable x" + std::to_string(v) + " occurs " +
                                        std::to_string(positive[v]) +
                                        " times positively (must be exactly 1)");
        if (negative[v] > 2)
            throw std::invalid_argument("variable x" + std::to_string(v) + " occurs " +
                                        std::to_string(negative[v]) +
                                        " times negatively (must be at most 2)");
    }
}

Formula gen_max2sat3(std::uint64_t seed, int n, int m) {
    if (n < 2 || m < 1 || 2 * m < n || 2 * m > 3 * n)
        throw std::invalid_argument(
            "no formula with n = " + std::to_string(n) + ", m = " + std::to_string(m) +
            " exists (need n >= 2, m >= 1 and n <= 2m <= 3n)");

    std::mt19937_64 rng(seed);

    // Occurrence slots: one positive per variable plus 2m - n negatives,
    // at most two per variable.
    std::vector<Literal> slots;
    for (int v = 1; v <= n; ++v) slots.push_back({v, false});
    {
        // A variable with one positive and k negative slots appears in
        // 1 + k clauses, so k is capped by m - 1 as well as by 2; otherwise
        // no repeat-free pairing into m clauses exists.
        const int negative_cap = std::min(2, m - 1);
        std::vector<int> negatives_left(n + 1, negative_cap);
        std::vector<int> open;
        if (negative_cap > 0)
            for (int v = 1; v <= n; ++v) open.push_back(v);
        for (int i = 0; i < 2 * m - n; ++i) {
            const std::size_t j = pick(rng, open.size());
            const int v = open[j];
            slots.push_back({v, true});
            if (--negatives_left[v] == 0) open.erase(open.begin() + j);
        }
    }

    // Shuffle and pair consecutive slots into clauses; repair pairs that
    // collide on a variable by swapping with a later slot.
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Literal> deck = slots;
        for (std::size_t i = deck.size(); i > 1; --i)
            std::swap(deck[i - 1], deck[pick(rng, i)]);  // Fisher-Yates

        bool ok = true;
        for (std::size_t k = 0; ok && k + 1 < deck.size(); k += 2) {
            if (deck[k].variable != deck[k + 1].variable) continue;
            bool fixed = false;
            for (std::size_t j = k + 2; j < deck.size(); ++j) {
                if (deck[j].variable != deck[k].variable) {
                    std::swap(deck[k + 1], deck[j]);
                    fixed = true;
                    break;
                }
            }
            ok = fixed;
        }
        if (!ok) continue;

        Formula formula;
        formula.variable_count = n;
        for (std::size_t k = 0; k + 1 < deck.size(); k += 2)
            formula.clauses.push_back({deck[k], deck[k + 1]});
        validate_formula(formula);
        return formula;
    }
    throw std::logic_error("could not assemble a clause pairing");  // not reachable in practice
}

bool literal_satisfied(const Literal& lit, Assignment assignment) {
    const bool value = (assignment >> (lit.variable - 1)) & 1u;
    return lit.negated ? !value : value;
}

int count_satisfied(const Formula& formula, Assignment assignment) {
    int count = 0;
    for (const auto& c : formula.clauses) {
        if (literal_satisfied(c.first, assignment) || literal_satisfied(c.second, assignment))
            ++count;
    }
    return count;
}

MaxSatResult max_sat_oracle(const Formula& formula) {
    if (formula.variable_count > 24)
        throw BudgetError("assignment sweep is guarded to 24 variables, formula has " +
                          std::to_string(formula.variable_count));
    MaxSatResult result;
    result.best_count = -1;
    const Assignment limit = Assignment{1} << formula.variable_count;
    for (Assignment a = 0; a < limit; ++a) {
        const int count = count_satisfied(formula, a);
        if (count > result.best_count) {
            result.best_count = count;
            result.assignment = a;
        }
    }
    return result;
}

}  // namespace temporeach
