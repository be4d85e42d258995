#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stackpat/avoiders.hpp"
#include "stackpat/pattern.hpp"
#include "stackpat/simple.hpp"

using namespace stackpat;

namespace {

PermutationMatrix perm(std::initializer_list<int> one_based) {
    std::vector<int> w;
    for (int v : one_based) w.push_back(v - 1);
    return PermutationMatrix(w);
}

PatternSet set_of(std::initializer_list<PermutationMatrix> ms) {
    PatternSet s;
    for (const auto& m : ms) s.add(m.to_pattern());
    return s;
}

// Deletes one row and one column from a pattern (deletion-order semantics).
PartialPattern delete_lines(const PartialPattern& p, int row, int col) {
    std::vector<std::pair<int, int>> ones;
    for (auto [r, c] : p.ones()) {
        if (r == row || c == col) continue;
        ones.emplace_back(r > row ? r - 1 : r, c > col ? c - 1 : c);
    }
    return PartialPattern(p.rows() - 1, p.cols() - 1, std::move(ones));
}

}  // namespace

TEST_CASE("containment basics") {
    PartialPattern one(1, 1, {{0, 0}});
    CHECK(contains(perm({3, 1, 2}).to_pattern(), one).found());
    CHECK(contains(perm({3, 2, 1}).to_pattern(), perm({1, 2}).to_pattern()).found() == false);
    CHECK(contains(perm({1, 3, 2}).to_pattern(), perm({1, 2}).to_pattern()).found());
}

TEST_CASE("containment agrees with the subset oracle on random inputs") {
    std::mt19937 rng(7101);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PartialPattern host = oracles::random_permutation(rng, 8).to_pattern();
        PartialPattern pat = oracles::random_partial(rng, 4, 4);
        bool fast = contains(host, pat).found();
        bool slow = oracles::contains_by_subsets(host, pat);
        CAPTURE(trial);
        CAPTURE(pat.to_text());
        CHECK(fast == slow);
        found += fast;
    }
    CHECK(found > 0);  // the sample exercises both outcomes

    // Partial-pattern hosts too (zero rows and columns on both sides).
    for (int trial = 0; trial < 200; ++trial) {
        PartialPattern host = oracles::random_partial(rng, 7, 7);
        PartialPattern pat = oracles::random_partial(rng, 3, 4);
        CAPTURE(trial);
        CHECK(contains(host, pat).found() == oracles::contains_by_subsets(host, pat));
    }
}

TEST_CASE("containment is monotone under line deletion") {
    std::mt19937 rng(7102);
    for (int trial = 0; trial < 200; ++trial) {
        PartialPattern big = oracles::random_partial(rng, 4, 4);
        if (big.rows() < 2 || big.cols() < 2) continue;
        std::uniform_int_distribution<int> dr(0, big.rows() - 1), dc(0, big.cols() - 1);
        PartialPattern small = delete_lines(big, dr(rng), dc(rng));
        PartialPattern host = oracles::random_permutation(rng, 7).to_pattern();
        if (contains(host, big).found()) {
            CAPTURE(trial);
            CHECK(contains(host, small).found());
        }
    }
}

TEST_CASE("containment budget reports nodes") {
    std::mt19937 rng(7103);
    PartialPattern host = oracles::random_permutation(rng, 10).to_pattern();
    PartialPattern pat(3, 3, {{0, 2}, {1, 0}, {2, 1}});
    MatchOptions opts;
    opts.budget = 2;
    MatchResult res = contains(host, pat, opts);
    if (res.outcome == MatchResult::Outcome::BudgetExceeded) CHECK(res.nodes > 2);
}

TEST_CASE("anchored containment pins a block") {
    // Host 4x4 identity; anchor the 2x2 identity pattern onto rows/cols 2..3.
    PartialPattern host = perm({1, 2, 3, 4}).to_pattern();
    PartialPattern pat = perm({1, 2}).to_pattern();
    MatchOptions opts;
    MatchAnchor a;
    a.pat_row0 = 0;
    a.row_count = 2;
    a.host_row0 = 2;
    a.pat_col0 = 0;
    a.col_count = 2;
    a.host_col0 = 2;
    opts.anchor = a;
    CHECK(contains(host, pat, opts).found());
    a.host_col0 = 1;  // misaligned: host rows 2,3 have 1s in cols 2,3
    opts.anchor = a;
    CHECK(!contains(host, pat, opts).found());
}

TEST_CASE("anchored containment agrees with the anchored subset oracle") {
    std::mt19937 rng(7107);
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        PartialPattern host = oracles::random_permutation(rng, 7).to_pattern();
        PartialPattern pat = oracles::random_partial(rng, 4, 4);
        if (pat.rows() < 1 || pat.cols() < 1) continue;
        std::uniform_int_distribution<int> pr(0, pat.rows() - 1), pc(0, pat.cols() - 1);
        MatchAnchor a;
        a.pat_row0 = pr(rng);
        a.row_count = 1;
        a.pat_col0 = pc(rng);
        a.col_count = 1;
        a.host_row0 = std::uniform_int_distribution<int>(0, host.rows() - 1)(rng);
        a.host_col0 = std::uniform_int_distribution<int>(0, host.cols() - 1)(rng);
        MatchOptions opts;
        opts.anchor = a;
        bool fast = contains(host, pat, opts).found();
        bool slow = oracles::contains_by_subsets_anchored(host, pat, a);
        CAPTURE(trial);
        CHECK(fast == slow);
        found += fast;
    }
    CHECK(found > 0);
}

TEST_CASE("count_avoiders basics") {
    CHECK(count_avoiders(PatternSet{}, 4) == 24);
    for (int n = 1; n <= 6; ++n) CHECK(count_avoiders(set_of({perm({1, 2})}), n) == 1);
    CHECK(count_avoiders(set_of({perm({1, 2, 3})}), 5) == 42);
    CHECK(count_avoiders(set_of({perm({1, 2, 3})}), 5) == oracles::catalan(5));

    PatternSet two = set_of({perm({1, 2, 3}), perm({2, 1, 3})});
    CHECK(count_avoiders(two, 6) ==
          oracles::count_avoiders_by_filter(
              {perm({1, 2, 3}).to_pattern(), perm({2, 1, 3}).to_pattern()}, 6));
}

TEST_CASE("count_avoiders matches the filter oracle on random sets") {
    std::mt19937 rng(7104);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<PartialPattern> pats;
        PatternSet set;
        int count = 1 + trial % 3;
        for (int i = 0; i < count; ++i) {
            PartialPattern p = oracles::random_partial(rng, 3, 3);
            pats.push_back(p);
            set.add(p);
        }
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(trial);
            CAPTURE(n);
            CHECK(count_avoiders(set, n) == oracles::count_avoiders_by_filter(pats, n));
        }
    }
    // A couple of n = 8 spot checks with permutation patterns.
    for (int trial = 0; trial < 2; ++trial) {
        PermutationMatrix w = oracles::random_permutation(rng, 3);
        CHECK(count_avoiders(set_of({w}), 8) ==
              oracles::count_avoiders_by_filter({w.to_pattern()}, 8));
    }
}

TEST_CASE("count_avoiders is reverse-complement invariant") {
    std::mt19937 rng(7105);
    for (int trial = 0; trial < 6; ++trial) {
        PermutationMatrix w = oracles::random_permutation(rng, 4);
        int k = w.size();
        std::vector<int> rc(k);
        for (int i = 0; i < k; ++i) rc[i] = k - 1 - w[k - 1 - i];
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(trial);
            CHECK(count_avoiders(set_of({w}), n) ==
                  count_avoiders(set_of({PermutationMatrix(rc)}), n));
        }
    }
}

TEST_CASE("wilf_mod2") {
    CHECK(wilf_mod2(PatternSet{}, PatternSet{}, 8).agree());
    CHECK(wilf_mod2(set_of({perm({1, 2, 3})}), set_of({perm({2, 1, 3})}), 8).agree());

    auto res = wilf_mod2(set_of({perm({1, 2, 3})}), set_of({perm({1, 2})}), 8);
    REQUIRE(!res.agree());
    // Counts diverge at n = 2: 2 avoiders of 123 against 1 of 12.
    CHECK(*res.diverges_at == 2);
    CHECK(res.count1 == 2);
    CHECK(res.count2 == 1);
}

TEST_CASE("expand_partial: smallest cases") {
    PartialPattern one(1, 1, {{0, 0}});
    PatternSet e = expand_partial(one);
    CHECK(e.size() == 3);  // [1], 12, 21
    CHECK(e.contains_exact(perm({1}).to_pattern()));
    CHECK(e.contains_exact(perm({1, 2}).to_pattern()));
    CHECK(e.contains_exact(perm({2, 1}).to_pattern()));
}

TEST_CASE("expand_partial preserves avoider counts") {
    // [1 0]: direct counts vs expansion counts, both engines.
    PartialPattern row(1, 2, {{0, 0}});
    PatternSet direct;
    direct.add(row);
    PatternSet expanded = expand_partial(row);
    for (int n = 1; n <= 6; ++n) {
        BigInt lhs = count_avoiders(direct, n);
        CHECK(lhs == count_avoiders(expanded, n));
        CHECK(lhs == oracles::count_avoiders_by_filter({row}, n));
    }

    std::mt19937 rng(7106);
    for (int trial = 0; trial < 4; ++trial) {
        PartialPattern p = oracles::random_partial(rng, 2, 3);
        PatternSet d;
        d.add(p);
        PatternSet e = expand_partial(p);
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(trial);
            CAPTURE(n);
            CHECK(count_avoiders(d, n) == count_avoiders(e, n));
        }
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(perm({1})));
    CHECK(is_simple(perm({2, 4, 1, 3})));
    CHECK(!is_simple(perm({1, 2, 3, 4})));
    CHECK(!is_simple(anchor_matrix_7()));  // rows 1-3 occupy columns 5-7
    CHECK(is_simple(seed_matrix_9()));

    for (int n = 4; n <= 8; ++n) {
        long long lib = 0, ref = 0;
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 0);
        do {
            lib += is_simple_word(w);
            ref += oracles::is_simple_by_sets(w);
        } while (std::next_permutation(w.begin(), w.end()));
        CAPTURE(n);
        CHECK(lib == ref);
    }
}
