#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stackpat/automaton.hpp"
#include "stackpat/bigint.hpp"

namespace stackpat {

// Raised when a configuration-level dynamic program outgrows its budget.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::string what, long long level, long long live)
        : std::runtime_error(std::move(what)), level(level), live(live) {}
    long long level;
    long long live;
};

inline constexpr long long kDefaultConfigBudget = 10'000'000;

// Exact number of balanced start-to-accept paths with exactly n vertices,
// by level-by-level dynamic programming over (vertex, stack X, stack Y)
// configurations.
BigInt count_balanced(const Automaton& automaton, int n,
                      long long budget = kDefaultConfigBudget);

// All balanced start-to-accept paths with exactly n vertices, as 0-based
// vertex index sequences, in lexicographic order.
std::vector<std::vector<int>> enumerate_balanced(const Automaton& automaton, int n,
                                                 long long budget = kDefaultConfigBudget);

// Closed-form oracle for the balanced-path indicator word of the built-in
// "gamma1" automaton: returns 1 iff some k >= 1 writes its binary expansion
// over position n. Independent of any graph traversal.
int gamma1_alpha_oracle(long long n);

// Position at which the binary expansion of k starts inside the gamma1 word.
long long gamma1_word_position(long long k);

}  // namespace stackpat
