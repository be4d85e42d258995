#include "stackpat/avoiders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stackpat {

namespace {

// Does the t x n prefix (rows 0..t-1 of the word under construction) contain
// any member? Prefix rows are complete rows of the final matrix, so a hit
// here survives every completion.
bool prefix_blocked(const PatternSet& set, const std::vector<int>& word, int t, int n) {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(t);
    for (int r = 0; r < t; ++r) ones.emplace_back(r, word[r]);
    PartialPattern prefix(t, n, std::move(ones));
    for (const auto& m : set.members) {
        if (m.pattern.rows() > t || m.pattern.cols() > n) continue;
        if (contains(prefix, m.pattern).found()) return true;
    }
    return false;
}

}  // namespace

BigInt count_avoiders(const PatternSet& set, int n) {
    if (n < 0) throw std::invalid_argument("count_avoiders: n must be >= 0");
    if (n == 0) {
        // The empty matrix avoids everything except patterns with no cells.
        for (const auto& m : set.members)
            if (m.pattern.rows() == 0 && m.pattern.cols() == 0) return 0;
        return 1;
    }
    std::vector<int> word(n, -1);
    std::vector<char> used(n, 0);
    BigInt total = 0;
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            ++total;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            word[t] = c;
            used[c] = 1;
            if (!prefix_blocked(set, word, t + 1, n)) self(self, t + 1);
            used[c] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

WilfMod2Result wilf_mod2(const PatternSet& set1, const PatternSet& set2, int upto) {
    WilfMod2Result res;
    for (int n = 1; n <= upto; ++n) {
        BigInt c1 = count_avoiders(set1, n);
        BigInt c2 = count_avoiders(set2, n);
        if ((c1 - c2) % 2 != 0) {
            res.diverges_at = n;
            res.count1 = c1;
            res.count2 = c2;
            return res;
        }
    }
    return res;
}

PatternSet expand_partial(const PartialPattern& pattern) {
    PatternSet out;
    int k = pattern.rows() + pattern.cols();
    for (int len = 1; len <= k; ++len) {
        std::vector<int> word(len);
        std::iota(word.begin(), word.end(), 0);
        do {
            PermutationMatrix pm(word);
            if (contains(pm.to_pattern(), pattern).found()) out.add(pm.to_pattern());
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

}  // namespace stackpat
