#pragma once

#include <optional>

#include "stackpat/bigint.hpp"
#include "stackpat/pattern.hpp"

namespace stackpat {

inline constexpr int kDefaultAvoiderLimit = 11;

// Exact number of n x n permutation matrices avoiding every member of `set`,
// by backtracking over one-line words with prefix containment pruning.
BigInt count_avoiders(const PatternSet& set, int n);

struct WilfMod2Result {
    // First n with differing parity, if any.
    std::optional<int> diverges_at;
    BigInt count1, count2;  // counts at the divergence point

    bool agree() const { return !diverges_at.has_value(); }
};

// Compares C_n(set1) and C_n(set2) modulo 2 for n = 1..upto.
WilfMod2Result wilf_mod2(const PatternSet& set1, const PatternSet& set2, int upto);

// All permutation matrices of size <= pattern.rows()+pattern.cols() that
// contain `pattern`, as a deduplicated set; avoiding the result is equivalent
// to avoiding the partial pattern itself.
PatternSet expand_partial(const PartialPattern& pattern);

}  // namespace stackpat
