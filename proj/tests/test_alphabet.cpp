#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stackpat/assignment.hpp"
#include "stackpat/simple.hpp"

using namespace stackpat;

TEST_CASE("alphabet is empty through g = 7") {
    AlphabetCache cache;
    for (int g = 1; g <= 7; ++g) {
        CAPTURE(g);
        CHECK(alphabet(g, cache).empty());
    }
}

TEST_CASE("the 9x9 seed is a member at g = 9") {
    AlphabetCache cache;
    const auto& a9 = alphabet(9, cache);
    CHECK(std::binary_search(a9.begin(), a9.end(), seed_matrix_9()));
}

TEST_CASE("all 60 single-1 insertions of the seed are alphabet members") {
    auto ins = seed_insertions();
    CHECK(ins.size() == 60);
    AlphabetCache cache;
    const auto& a10 = alphabet(10, cache);
    for (const auto& m : ins) {
        CHECK(is_simple(m));
        CHECK(perm_contains(m.word(), anchor_matrix_7().word()));
        CHECK(std::binary_search(a10.begin(), a10.end(), m));
    }
}

TEST_CASE("alphabet members are distinct, simple, and contain the anchor") {
    AlphabetCache cache;
    const auto& a10 = alphabet(10, cache);
    CHECK(std::is_sorted(a10.begin(), a10.end()));
    CHECK(std::adjacent_find(a10.begin(), a10.end()) == a10.end());
    for (const auto& m : a10) {
        REQUIRE(is_simple(m));
        REQUIRE(perm_contains(m.word(), anchor_matrix_7().word()));
    }
    // Deterministic slice re-verified against the subset oracle.
    PartialPattern anchor = anchor_matrix_7().to_pattern();
    for (size_t i = 0; i < a10.size(); i += 37) {
        CHECK(oracles::is_simple_by_sets(a10[i].word()));
        CHECK(oracles::contains_by_subsets(a10[i].to_pattern(), anchor));
    }
    // Size regression, cross-validated against the subset oracle slice above;
    // the simple count alone at g = 10 is 298526 = 8.2% of 10!, and anchor
    // containment thins it to 990, far below the asymptotic e^-2 regime.
    CHECK(a10.size() == 990);
}

TEST_CASE("alphabet enumeration guard") {
    AlphabetCache cache;
    CHECK_THROWS_AS(alphabet(11, cache), std::invalid_argument);
}

TEST_CASE("alphabet cache returns the stored list") {
    AlphabetCache cache;
    const auto* first = &alphabet(6, cache);
    const auto* second = &alphabet(6, cache);
    CHECK(first == second);
}

TEST_CASE("assignment takes the canonical prefix") {
    AlphabetCache cache;
    Automaton g3 = Automaton::builtin("gamma3");
    AlphabetAssignment a = assign_alphabet(g3, 10, cache);
    CHECK(a.g == 10);
    CHECK(a.T.size() == 6);
    CHECK(a.Z.size() == 2);
    // Canonical symbol order: X symbols before Y symbols.
    REQUIRE(a.z_labels.size() == 2);
    CHECK(a.z_labels[0].on_x);
    CHECK(a.z_labels[0].index == 1);
    CHECK(!a.z_labels[1].on_x);
    CHECK(a.z_index(parse_label("x+1")) == 0);
    CHECK(a.z_index(parse_label("x-1")) == 0);
    CHECK(a.z_index(parse_label("y-1")) == 1);
    CHECK(a.z_index(parse_label("eps")) == -1);

    const auto& a10 = alphabet(10, cache);
    CHECK(a.P == a10[0]);
    CHECK(a.Q == a10[1]);
    CHECK(a.B == a10[2]);
    CHECK(a.Bp == a10[3]);
    CHECK(a.E == a10[4]);
    CHECK(a.T[0] == a10[5]);
    CHECK(a.Z[1] == a10[5 + 6 + 1]);

    // All 5+m+r assigned matrices are pairwise distinct.
    std::vector<PermutationMatrix> all{a.P, a.Q, a.B, a.Bp, a.E};
    all.insert(all.end(), a.T.begin(), a.T.end());
    all.insert(all.end(), a.Z.begin(), a.Z.end());
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("assignment sizes for the built-ins") {
    AlphabetCache cache;
    Automaton g1 = Automaton::builtin("gamma1");
    // 5 + 31 + 6 = 42 matrices needed; the g = 10 alphabet suffices.
    AlphabetAssignment a = assign_alphabet(g1, 10, cache);
    CHECK(a.T.size() == 31);
    CHECK(a.Z.size() == 6);

    // g = 7 has an empty alphabet.
    try {
        assign_alphabet(g1, 7, cache);
        FAIL("expected AlphabetTooSmall");
    } catch (const AlphabetTooSmall& e) {
        CHECK(e.required == 42);
        CHECK(e.available == 0);
    }
}

TEST_CASE("relaxed alphabet at g = 6 backs the toy pipeline") {
    AlphabetCache cache;
    AlphabetOptions rel;
    rel.relaxed = true;
    const auto& s6 = alphabet(6, cache, rel);
    CHECK(s6.size() == 46);  // simple 6x6 permutation matrices
    for (const auto& m : s6) CHECK(is_simple(m));
}
