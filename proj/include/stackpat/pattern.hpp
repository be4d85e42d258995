#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackpat/bigint.hpp"

namespace stackpat {

// A 0-1 matrix with at most one 1 per row and per column. Zero cells are
// constraints under containment: an occurrence must reproduce them exactly.
class PartialPattern {
  public:
    PartialPattern() = default;
    PartialPattern(int rows, int cols, std::vector<std::pair<int, int>> ones);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // Sorted by row; 0-based cells.
    const std::vector<std::pair<int, int>>& ones() const { return ones_; }
    // Column of the 1 in row r, or -1; row of the 1 in column c, or -1.
    int one_in_row(int r) const { return row_one_[r]; }
    int one_in_col(int c) const { return col_one_[c]; }
    bool cell(int r, int c) const { return row_one_[r] == c; }

    bool operator==(const PartialPattern& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && ones_ == other.ones_;
    }
    bool operator<(const PartialPattern& other) const {
        return std::tie(rows_, cols_, ones_) < std::tie(other.rows_, other.cols_, other.ones_);
    }

    std::string to_text() const;  // rows of space-separated 0/1

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::pair<int, int>> ones_;
    std::vector<int> row_one_, col_one_;
};

// Square matrix with exactly one 1 per row and column, stored in one-line
// notation (word[r] = column of the 1 in row r, 0-based).
class PermutationMatrix {
  public:
    PermutationMatrix() = default;
    explicit PermutationMatrix(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator[](int r) const { return word_[r]; }

    PartialPattern to_pattern() const;
    std::string to_one_line() const;  // 1-based one-line notation

    auto operator<=>(const PermutationMatrix&) const = default;

  private:
    std::vector<int> word_;
};

struct PatternProvenance {
    std::string family;                                   // "F1".."F5" or ""
    std::string detail;                                   // e.g. "W1"
    std::vector<std::pair<std::string, int>> parameters;  // named parameters
};

struct PatternSet {
    struct Member {
        PartialPattern pattern;
        std::optional<PatternProvenance> provenance;
    };
    std::vector<Member> members;

    void add(PartialPattern p, std::optional<PatternProvenance> prov = std::nullopt);
    bool contains_exact(const PartialPattern& p) const;
    size_t size() const { return members.size(); }
};

// Forces a rectangle of pattern rows/cols to map onto consecutive host
// rows/cols (used to pin a template occurrence onto a fixed submatrix).
struct MatchAnchor {
    int pat_row0 = 0, row_count = 0, host_row0 = 0;
    int pat_col0 = 0, col_count = 0, host_col0 = 0;
};

struct MatchOptions {
    long long budget = 50'000'000;  // search nodes
    std::optional<MatchAnchor> anchor;
};

struct MatchResult {
    enum class Outcome { Found, NotFound, BudgetExceeded };
    Outcome outcome = Outcome::NotFound;
    long long nodes = 0;

    bool found() const { return outcome == Outcome::Found; }
};

// Does `host` contain `pattern` (pattern obtainable from host by deleting
// rows and columns)? Deterministic backtracking: pattern rows ascending,
// candidate host rows/columns ascending.
MatchResult contains(const PartialPattern& host, const PartialPattern& pattern,
                     const MatchOptions& options = {});

// Classical permutation-pattern containment (no zero-cell bookkeeping needed;
// equivalent to `contains` for full permutation patterns, but lighter).
bool perm_contains(const std::vector<int>& host_word, const std::vector<int>& pattern_word);

// Pattern file format: blocks of space-separated 0/1 rows separated by blank
// lines; one-line permutation notation on a single line. Auto mode treats a
// single line holding an entry >= 2 as one-line notation.
enum class PatternFileFormat { Auto, Matrix, OneLine };
PatternSet parse_pattern_file(const std::string& text,
                              PatternFileFormat format = PatternFileFormat::Auto);
std::string format_pattern_file(const PatternSet& set);

}  // namespace stackpat
