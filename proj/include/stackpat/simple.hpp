#pragma once

#include <map>
#include <memory>
#include <vector>

#include "stackpat/pattern.hpp"

namespace stackpat {

// A permutation matrix is simple when no proper window of >= 2 consecutive
// rows occupies a consecutive set of columns (no nontrivial interval block).
bool is_simple(const PermutationMatrix& m);
bool is_simple_word(const std::vector<int>& word);

// The fixed 7x7 anchor pattern every alphabet member must contain, and the
// 9x9 seed whose single-1 insertions witness members of the g=10 alphabet.
PermutationMatrix anchor_matrix_7();
PermutationMatrix seed_matrix_9();

// All 10x10 single-1 insertions of the 9x9 seed that stay simple (the
// insertion point is neither a corner nor adjacent-diagonal to an existing 1).
std::vector<PermutationMatrix> seed_insertions();

struct AlphabetOptions {
    int max_g = 10;      // enumeration guard; override deliberately
    bool relaxed = false;  // drop the contains-anchor requirement (toy mode)
};

// Explicit cache context for alphabet enumerations; pass by reference, no
// ambient global state.
class AlphabetCache {
  public:
    using List = std::vector<PermutationMatrix>;
    const List* find(int g, bool relaxed) const;
    const List& store(int g, bool relaxed, List list);

  private:
    std::map<std::pair<int, bool>, std::unique_ptr<List>> entries_;
};

// The alphabet A_g: all g x g simple permutation matrices containing the 7x7
// anchor (or merely simple, when relaxed), in lexicographic one-line order.
const std::vector<PermutationMatrix>& alphabet(int g, AlphabetCache& cache,
                                               const AlphabetOptions& options = {});

}  // namespace stackpat
