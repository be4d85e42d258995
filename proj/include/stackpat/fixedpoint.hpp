#pragma once

#include <stdexcept>
#include <vector>

#include "stackpat/blockmatrix.hpp"
#include "stackpat/count.hpp"
#include "stackpat/families.hpp"

namespace stackpat {

class NoUnblockedBlock : public std::runtime_error {
  public:
    NoUnblockedBlock() : std::runtime_error("no unblocked B/B' block: matrix is a fixed point") {}
};

// Verdict over the four fixed-point conditions: avoids F, avoids B', contains
// B, and every consecutive B occurrence is the marked block of a primed
// template occurrence.
struct FixedPointReport {
    bool form_ok = false;   // block-aligned and fully recognized (structured mode)
    bool avoids_f = false;
    bool avoids_bprime = false;
    bool contains_b = false;
    bool all_marked = false;
    std::vector<std::string> notes;

    bool pass() const { return form_ok && conditions_pass(); }
    bool conditions_pass() const {
        return avoids_f && avoids_bprime && contains_b && all_marked;
    }
};

enum class CheckMode { Structured, Generic, Both };

// Block-level evaluation; exact on block-aligned matrices over a simple
// alphabet (misaligned consecutive B windows are reported unmarked).
FixedPointReport check_fixed_point_structured(const BlockMatrix& M, const Automaton& automaton,
                                              const AlphabetAssignment& assignment);

// Cell-level evaluation through the pattern matcher; throws BudgetExceeded
// when a containment query outgrows `budget` nodes.
FixedPointReport check_fixed_point_generic(const BlockMatrix& M, const Automaton& automaton,
                                           const AlphabetAssignment& assignment,
                                           const ForbiddenBundle& bundle, long long budget);

FixedPointReport is_fixed_point(const BlockMatrix& M, const Automaton& automaton,
                                const AlphabetAssignment& assignment,
                                const ForbiddenBundle& bundle,
                                CheckMode mode = CheckMode::Structured,
                                long long budget = 50'000'000);

// Whether flipping the B/B' block at 1-based block coordinates would leave
// D_n; only a flip that creates a W-template instance blocks.
bool flip_blocked(const BlockMatrix& M, const Automaton& automaton,
                  const AlphabetAssignment& assignment, int brow, int bcol);

struct PhiResult {
    BlockMatrix matrix;
    int brow = 0, bcol = 0;  // flipped block
    bool flipped_to_bprime = false;
};

// Flips the leftmost unblocked B/B' (least block column, then least block
// row). Throws NoUnblockedBlock at fixed points.
PhiResult phi(const BlockMatrix& M, const Automaton& automaton,
              const AlphabetAssignment& assignment);

// All fixed points at length n: encodings M(path, pi_path) of balanced paths.
// Every returned matrix is re-verified through the structured checker.
std::vector<BlockMatrix> enumerate_fixed(const Automaton& automaton,
                                         const AlphabetAssignment& assignment, int n,
                                         long long budget = kDefaultConfigBudget);

}  // namespace stackpat
