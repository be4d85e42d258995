#pragma once

// Independent brute-force reference implementations used as test oracles.
// These deliberately avoid the library's search code paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stackpat/automaton.hpp"
#include "stackpat/bigint.hpp"
#include "stackpat/pattern.hpp"
#include "stackpat/run.hpp"

namespace oracles {

using stackpat::Automaton;
using stackpat::BigInt;
using stackpat::PartialPattern;
using stackpat::PermutationMatrix;

// Containment by exhaustive enumeration of row and column subsets.
inline bool contains_by_subsets(const PartialPattern& host, const PartialPattern& pat) {
    int hr = host.rows(), hc = host.cols(), p = pat.rows(), q = pat.cols();
    if (p > hr || q > hc) return false;
    std::vector<int> rows(p), cols(q);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    auto next_subset = [](std::vector<int>& s, int limit) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> cs(q);
        std::iota(cs.begin(), cs.end(), 0);
        do {
            bool ok = true;
            for (int a = 0; a < p && ok; ++a)
                for (int b = 0; b < q && ok; ++b)
                    if ((host.one_in_row(rows[a]) == cs[b]) != pat.cell(a, b)) ok = false;
            if (ok) return true;
        } while (next_subset(cs, hc));
    } while (next_subset(rows, hr));
    return false;
}

// Containment with a pinned rectangle, by filtered subset enumeration.
inline bool contains_by_subsets_anchored(const PartialPattern& host, const PartialPattern& pat,
                                         const stackpat::MatchAnchor& a) {
    int hr = host.rows(), hc = host.cols(), p = pat.rows(), q = pat.cols();
    if (p > hr || q > hc) return false;
    std::vector<int> rows(p), cols(q);
    std::iota(rows.begin(), rows.end(), 0);
    auto next_subset = [](std::vector<int>& s, int limit) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    auto anchored_ok = [&](const std::vector<int>& sel, int pat0, int count, int host0) {
        for (int i = 0; i < count; ++i)
            if (sel[pat0 + i] != host0 + i) return false;
        return true;
    };
    do {
        if (!anchored_ok(rows, a.pat_row0, a.row_count, a.host_row0)) continue;
        std::vector<int> cs(q);
        std::iota(cs.begin(), cs.end(), 0);
        do {
            if (!anchored_ok(cs, a.pat_col0, a.col_count, a.host_col0)) continue;
            bool ok = true;
            for (int x = 0; x < p && ok; ++x)
                for (int y = 0; y < q && ok; ++y)
                    if ((host.one_in_row(rows[x]) == cs[y]) != pat.cell(x, y)) ok = false;
            if (ok) return true;
        } while (next_subset(cs, hc));
    } while (next_subset(rows, hr));
    return false;
}

// Number of n x n permutation matrices avoiding every pattern, by filtering
// the whole symmetric group through the subset-containment oracle.
inline BigInt count_avoiders_by_filter(const std::vector<PartialPattern>& patterns, int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 0);
    BigInt count = 0;
    do {
        PartialPattern host = PermutationMatrix(word).to_pattern();
        bool avoids = true;
        for (const auto& p : patterns) {
            if (p.rows() > n || p.cols() > n) continue;
            if (contains_by_subsets(host, p)) {
                avoids = false;
                break;
            }
        }
        if (avoids) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

// Permutation-pattern containment by exhaustive row-subset enumeration
// (columns are forced by the host word).
inline bool perm_contains_by_subsets(const std::vector<int>& host, const std::vector<int>& pat) {
    int n = static_cast<int>(host.size()), k = static_cast<int>(pat.size());
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                if ((pat[a] < pat[b]) != (host[rows[a]] < host[rows[b]])) ok = false;
        if (ok) return true;
        int i = k - 1;
        while (i >= 0 && rows[i] == n - k + i) --i;
        if (i < 0) return false;
        ++rows[i];
        for (int j = i + 1; j < k; ++j) rows[j] = rows[j - 1] + 1;
    }
}

// Catalan numbers through the closed binomial form.
inline BigInt catalan(int n) {
    BigInt num = 1;
    for (int i = 0; i < n; ++i) num *= 2 * n - i;
    BigInt den = 1;
    for (int i = 1; i <= n; ++i) den *= i;
    return num / den / (n + 1);
}

// Balanced-path count by exhaustive walk enumeration filtered through the
// run semantics (no configuration-level dynamic programming involved).
inline BigInt count_balanced_by_walks(const Automaton& a, int n) {
    BigInt count = 0;
    std::vector<int> path{a.start()};
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == n) {
            if (path.back() == a.accept() && stackpat::run_path(a, path).balanced()) ++count;
            return;
        }
        for (int w : a.successors(path.back())) {
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    if (n >= 1) rec(rec);
    return count;
}

// Simplicity by the definition: every proper consecutive row window of size
// >= 2 must not occupy a consecutive column set.
inline bool is_simple_by_sets(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j - i + 1 == n) continue;
            std::set<int> cols(word.begin() + i, word.begin() + j + 1);
            if (*cols.rbegin() - *cols.begin() + 1 == static_cast<int>(cols.size())) return false;
        }
    }
    return true;
}

// The distinct factors of each length, for cross-checking missing_subword.
inline std::set<std::string> factors(const std::string& word, int len) {
    std::set<std::string> out;
    for (size_t i = 0; i + len <= word.size(); ++i) out.insert(word.substr(i, len));
    return out;
}

// Deterministic random partial pattern with at most one 1 per line.
inline PartialPattern random_partial(std::mt19937& rng, int max_rows, int max_cols) {
    std::uniform_int_distribution<int> dr(1, max_rows), dc(1, max_cols);
    int rows = dr(rng), cols = dc(rng);
    std::vector<int> rs(rows), cs(cols);
    std::iota(rs.begin(), rs.end(), 0);
    std::iota(cs.begin(), cs.end(), 0);
    std::shuffle(rs.begin(), rs.end(), rng);
    std::shuffle(cs.begin(), cs.end(), rng);
    std::uniform_int_distribution<int> dk(0, std::min(rows, cols));
    int k = dk(rng);
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < k; ++i) ones.emplace_back(rs[i], cs[i]);
    return PartialPattern(rows, cols, std::move(ones));
}

inline PermutationMatrix random_permutation(std::mt19937& rng, int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 0);
    std::shuffle(word.begin(), word.end(), rng);
    return PermutationMatrix(word);
}

// Small random two-stack automata (valid by construction filtering).
inline Automaton random_automaton(std::mt19937& rng, int extra_vertices) {
    using stackpat::StackLabel;
    std::vector<Automaton::Vertex> vs;
    vs.push_back({"v1", {StackLabel::Kind::Epsilon, 0}});
    vs.push_back({"v2", {StackLabel::Kind::Epsilon, 0}});
    std::uniform_int_distribution<int> dkind(0, 4), didx(0, 1);
    for (int i = 0; i < extra_vertices; ++i) {
        StackLabel l;
        switch (dkind(rng)) {
            case 0: l = {StackLabel::Kind::PushX, didx(rng)}; break;
            case 1: l = {StackLabel::Kind::PopX, didx(rng)}; break;
            case 2: l = {StackLabel::Kind::PushY, didx(rng)}; break;
            case 3: l = {StackLabel::Kind::PopY, didx(rng)}; break;
            default: l = {StackLabel::Kind::Epsilon, 0}; break;
        }
        vs.push_back({"u" + std::to_string(i), l});
    }
    int n = static_cast<int>(vs.size());
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> coin(0, 2);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            if (same_class(vs[u].label, vs[w].label)) continue;
            if (coin(rng) == 0) edges.emplace_back(u, w);
        }
    return Automaton(std::move(vs), std::move(edges), 0, 1);
}

}  // namespace oracles
