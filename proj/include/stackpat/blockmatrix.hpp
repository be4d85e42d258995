#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stackpat/assignment.hpp"
#include "stackpat/automaton.hpp"
#include "stackpat/pattern.hpp"

namespace stackpat {

class EncodeCollision : public std::runtime_error {
  public:
    EncodeCollision(int brow, int bcol)
        : std::runtime_error("block collision at block (" + std::to_string(brow) + ", " +
                             std::to_string(bcol) + ")"),
          brow(brow),
          bcol(bcol) {}
    int brow, bcol;
};

// An m x m permutation matrix, m = (3n+2)g, carried as sparse 1 cells with
// its block parameters.
class BlockMatrix {
  public:
    BlockMatrix() = default;
    BlockMatrix(int n, int g, std::vector<std::pair<int, int>> ones);

    int n() const { return n_; }
    int g() const { return g_; }
    int bands() const { return 3 * n_ + 2; }
    int size() const { return bands() * g_; }
    const std::vector<std::pair<int, int>>& ones() const { return ones_; }
    int one_in_row(int r) const { return row_one_[r]; }

    PartialPattern to_pattern() const;
    bool is_permutation() const;

    std::string to_json() const;
    static BlockMatrix from_json(const std::string& text);

    // Builds from a 1-based block-coordinate map.
    static BlockMatrix from_blocks(int n, int g,
                                   const std::map<std::pair<int, int>, PermutationMatrix>& blocks);

    bool operator==(const BlockMatrix&) const = default;

  private:
    int n_ = 0, g_ = 0;
    std::vector<std::pair<int, int>> ones_;
    std::vector<int> row_one_;
};

// Symbolic view of one g x g block.
struct BlockSymbol {
    enum class Kind { P, Q, B, Bp, E, T, Z, Other };
    Kind kind = Kind::Other;
    int index = 0;  // vertex index for T, symbol index for Z (0-based)

    std::string name() const;
    bool operator==(const BlockSymbol&) const = default;
};

// Block-level reading of a BlockMatrix against an assignment: which symbol
// occupies which block. `form_ok` is true when every band row and band column
// carries exactly one recognized, block-aligned matrix.
struct BlockGrid {
    int n = 0, g = 0;
    struct Entry {
        int brow, bcol;  // 1-based
        BlockSymbol sym;
    };
    std::vector<Entry> entries;             // sorted by brow
    std::vector<int> row_entry, col_entry;  // band (1-based) -> index into entries, or -1
    std::vector<std::string> anomalies;
    bool form_ok = false;

    const Entry* at_row(int brow) const {
        int i = row_entry[brow];
        return i < 0 ? nullptr : &entries[i];
    }
    const Entry* at_col(int bcol) const {
        int i = col_entry[bcol];
        return i < 0 ? nullptr : &entries[i];
    }
};

BlockGrid block_view(const BlockMatrix& M, const AlphabetAssignment& assignment);

// Encodes a path and a permutation as a block matrix: P at (2,2), Q at
// (3n+1,3n+1), the B diagonal, the T diagonal naming the path, and E/Z blocks
// at (3i, 3pi(i)). `path` holds 0-based vertex indices; `pi` is 1-based.
BlockMatrix encode(const Automaton& automaton, const AlphabetAssignment& assignment,
                   const std::vector<int>& path, const std::vector<int>& pi);

// Block-symbol grid rendering, one row per band; "." marks a zero block.
std::string pretty_block_grid(const BlockGrid& grid);

}  // namespace stackpat
