#include "stackpat/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stackpat {

PartialPattern::PartialPattern(int rows, int cols, std::vector<std::pair<int, int>> ones)
    : rows_(rows), cols_(cols), ones_(std::move(ones)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative pattern shape");
    std::sort(ones_.begin(), ones_.end());
    row_one_.assign(rows_, -1);
    col_one_.assign(cols_, -1);
    for (auto [r, c] : ones_) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::invalid_argument("pattern cell out of bounds");
        if (row_one_[r] != -1) throw std::invalid_argument("two 1s in one pattern row");
        if (col_one_[c] != -1) throw std::invalid_argument("two 1s in one pattern column");
        row_one_[r] = c;
        col_one_[c] = r;
    }
}

std::string PartialPattern::to_text() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (cell(r, c) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

PermutationMatrix::PermutationMatrix(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size(), 0);
    for (int v : word_) {
        if (v < 0 || v >= static_cast<int>(word_.size()) || seen[v])
            throw std::invalid_argument("not a permutation word");
        seen[v] = 1;
    }
}

PartialPattern PermutationMatrix::to_pattern() const {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(word_.size());
    for (int r = 0; r < size(); ++r) ones.emplace_back(r, word_[r]);
    return PartialPattern(size(), size(), std::move(ones));
}

std::string PermutationMatrix::to_one_line() const {
    std::ostringstream os;
    for (int r = 0; r < size(); ++r) {
        if (r) os << ' ';
        os << word_[r] + 1;
    }
    return os.str();
}

void PatternSet::add(PartialPattern p, std::optional<PatternProvenance> prov) {
    if (contains_exact(p)) return;
    members.push_back({std::move(p), std::move(prov)});
}

bool PatternSet::contains_exact(const PartialPattern& p) const {
    for (const auto& m : members)
        if (m.pattern == p) return true;
    return false;
}

namespace {

// Backtracking embedder. Pattern rows carrying a 1 (and anchored rows) are
// assigned to host rows in ascending order; rows and columns without a 1 are
// placed by interval feasibility at the end. For a partial-pattern host, a
// chosen host row's 1 must land exactly on the pattern 1's column, which is
// what prunes the search.
class Matcher {
  public:
    Matcher(const PartialPattern& host, const PartialPattern& pattern, const MatchOptions& opt)
        : host_(host), pat_(pattern), opt_(opt) {
        R_.assign(pat_.rows(), -1);
        C_.assign(pat_.cols(), -1);
        row_forced_.assign(pat_.rows(), -1);
        col_forced_.assign(pat_.cols(), -1);
        if (opt_.anchor) {
            const MatchAnchor& a = *opt_.anchor;
            for (int i = 0; i < a.row_count; ++i) row_forced_[a.pat_row0 + i] = a.host_row0 + i;
            for (int j = 0; j < a.col_count; ++j) col_forced_[a.pat_col0 + j] = a.host_col0 + j;
        }
        free_cols_ = 0;
        for (int j = 0; j < pat_.cols(); ++j)
            if (pat_.one_in_col(j) == -1 && col_forced_[j] == -1) ++free_cols_;
    }

    MatchResult run() {
        MatchResult res;
        if (pat_.rows() > host_.rows() || pat_.cols() > host_.cols()) return res;
        if (opt_.anchor) {
            const MatchAnchor& a = *opt_.anchor;
            if (a.host_row0 < 0 || a.host_row0 + a.row_count > host_.rows() || a.host_col0 < 0 ||
                a.host_col0 + a.col_count > host_.cols())
                return res;
            for (int j = 0; j < a.col_count; ++j) C_[a.pat_col0 + j] = a.host_col0 + j;
        }
        bool found = false;
        try {
            found = assign_row(0, -1, -1);
        } catch (const BudgetStop&) {
            res.outcome = MatchResult::Outcome::BudgetExceeded;
            res.nodes = nodes_;
            return res;
        }
        res.outcome = found ? MatchResult::Outcome::Found : MatchResult::Outcome::NotFound;
        res.nodes = nodes_;
        return res;
    }

  private:
    struct BudgetStop {};

    void tick() {
        if (++nodes_ > opt_.budget) throw BudgetStop{};
    }

    // Strict order plus room for the pattern lines in between.
    static bool fits_after(int pat_prev, int host_prev, int pat_cur, int host_cur) {
        return host_cur > host_prev && host_cur - host_prev >= pat_cur - pat_prev;
    }

    bool col_assign(int pc, int hcol, std::vector<int>& undo) {
        if (C_[pc] != -1) return C_[pc] == hcol;
        if (col_forced_[pc] != -1 && col_forced_[pc] != hcol) return false;
        if (hcol < pc || host_.cols() - 1 - hcol < pat_.cols() - 1 - pc) return false;
        for (int j = 0; j < pat_.cols(); ++j) {
            if (C_[j] == -1 || j == pc) continue;
            if (j < pc && !fits_after(j, C_[j], pc, hcol)) return false;
            if (j > pc && !fits_after(pc, hcol, j, C_[j])) return false;
        }
        C_[pc] = hcol;
        undo.push_back(pc);
        return true;
    }

    bool assign_row(int pr, int pat_prev, int host_prev) {
        if (pr == pat_.rows()) return complete(pat_prev, host_prev);
        bool forced = row_forced_[pr] != -1;
        bool has_one = pat_.one_in_row(pr) != -1;
        if (!forced && !has_one) return assign_row(pr + 1, pat_prev, host_prev);

        int lo = forced ? row_forced_[pr] : std::max(host_prev + 1, pr);
        int hi = forced ? row_forced_[pr] : host_.rows() - 1 - (pat_.rows() - 1 - pr);
        for (int h = lo; h <= hi; ++h) {
            tick();
            if (!fits_after(pat_prev, host_prev, pr, h)) continue;
            std::vector<int> undo;
            bool placed = true;
            if (has_one) {
                int hcol = host_.one_in_row(h);
                placed = hcol != -1 && col_assign(pat_.one_in_row(pr), hcol, undo);
            }
            if (placed) {
                R_[pr] = h;
                if (assign_row(pr + 1, pr, h)) return true;
                R_[pr] = -1;
            }
            for (int j : undo) C_[j] = -1;
        }
        return false;
    }

    // All assigned-row x assigned-column cells must reproduce the pattern.
    bool cells_consistent() const {
        for (int i = 0; i < pat_.rows(); ++i) {
            if (R_[i] == -1) continue;
            for (int j = 0; j < pat_.cols(); ++j) {
                if (C_[j] == -1) continue;
                bool hv = host_.one_in_row(R_[i]) == C_[j];
                if (hv != pat_.cell(i, j)) return false;
            }
        }
        return true;
    }

    struct Run {
        int need;
        int host_lo, host_hi;  // fill from the open interval (host_lo, host_hi)
    };

    bool complete(int pat_prev, int host_prev) {
        tick();
        if (host_.rows() - 1 - host_prev < pat_.rows() - 1 - pat_prev) return false;
        if (!cells_consistent()) return false;

        std::vector<Run> runs;
        {
            int prev_pat = -1, prev_host = -1;
            for (int i = 0; i <= pat_.rows(); ++i) {
                bool at_end = i == pat_.rows();
                if (!at_end && R_[i] == -1) continue;
                int cur_host = at_end ? host_.rows() : R_[i];
                int gap = (at_end ? pat_.rows() : i) - prev_pat - 1;
                if (gap > 0) runs.push_back({gap, prev_host, cur_host});
                if (!at_end) {
                    prev_pat = i;
                    prev_host = cur_host;
                }
            }
        }

        col_taken_.assign(host_.cols(), 0);
        for (int j = 0; j < pat_.cols(); ++j)
            if (C_[j] != -1) col_taken_[C_[j]] = 1;
        row_selected_.assign(host_.rows(), 0);
        for (int i = 0; i < pat_.rows(); ++i)
            if (R_[i] != -1) row_selected_[R_[i]] = 1;

        if (free_cols_ == 0) {
            for (const Run& run : runs) {
                int avail = 0;
                for (int r = run.host_lo + 1; r < run.host_hi && avail < run.need; ++r)
                    if (row_usable(r)) ++avail;
                if (avail < run.need) return false;
            }
            return true;
        }
        // Free columns exist: a filler row whose host 1 sits in a free column
        // shrinks that column's candidate pool, so row choices are searched.
        return choose_rows(runs, 0);
    }

    bool row_usable(int r) const {
        int oc = host_.one_in_row(r);
        return oc == -1 || !col_taken_[oc];
    }

    bool choose_rows(const std::vector<Run>& runs, size_t k) {
        if (k == runs.size()) return complete_cols();
        const Run& run = runs[k];
        std::vector<int> cands;
        for (int r = run.host_lo + 1; r < run.host_hi; ++r)
            if (row_usable(r)) cands.push_back(r);
        if (static_cast<int>(cands.size()) < run.need) return false;
        return choose_from(cands, 0, run.need, runs, k);
    }

    bool choose_from(const std::vector<int>& cands, size_t from, int remaining,
                     const std::vector<Run>& runs, size_t k) {
        if (remaining == 0) return choose_rows(runs, k + 1);
        for (size_t t = from; t + remaining <= cands.size(); ++t) {
            tick();
            row_selected_[cands[t]] = 1;
            if (choose_from(cands, t + 1, remaining - 1, runs, k)) return true;
            row_selected_[cands[t]] = 0;
        }
        return false;
    }

    bool complete_cols() {
        int prev_pat = -1, prev_host = -1;
        for (int j = 0; j <= pat_.cols(); ++j) {
            bool at_end = j == pat_.cols();
            if (!at_end && C_[j] == -1) continue;
            int cur_host = at_end ? host_.cols() : C_[j];
            int gap = (at_end ? pat_.cols() : j) - prev_pat - 1;
            if (gap > 0) {
                int avail = 0;
                for (int c = prev_host + 1; c < cur_host && avail < gap; ++c) {
                    int orow = host_.one_in_col(c);
                    if (orow == -1 || !row_selected_[orow]) ++avail;
                }
                if (avail < gap) return false;
            }
            if (!at_end) {
                prev_pat = j;
                prev_host = cur_host;
            }
        }
        return true;
    }

    const PartialPattern& host_;
    const PartialPattern& pat_;
    MatchOptions opt_;
    long long nodes_ = 0;
    int free_cols_ = 0;
    std::vector<int> R_, C_;
    std::vector<int> row_forced_, col_forced_;
    std::vector<char> col_taken_, row_selected_;
};

}  // namespace

MatchResult contains(const PartialPattern& host, const PartialPattern& pattern,
                     const MatchOptions& options) {
    return Matcher(host, pattern, options).run();
}

bool perm_contains(const std::vector<int>& host_word, const std::vector<int>& pattern_word) {
    int n = static_cast<int>(host_word.size());
    int k = static_cast<int>(pattern_word.size());
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> chosen(k, -1);
    auto rec = [&](auto&& self, int idx, int from) -> bool {
        if (idx == k) return true;
        for (int h = from; h <= n - (k - idx); ++h) {
            bool ok = true;
            for (int prev = 0; prev < idx && ok; ++prev) {
                bool pat_less = pattern_word[prev] < pattern_word[idx];
                bool host_less = host_word[chosen[prev]] < host_word[h];
                if (pat_less != host_less) ok = false;
            }
            if (ok) {
                chosen[idx] = h;
                if (self(self, idx + 1, h + 1)) return true;
                chosen[idx] = -1;
            }
        }
        return false;
    };
    return rec(rec, 0, 0);
}

PatternSet parse_pattern_file(const std::string& text, PatternFileFormat format) {
    PatternSet set;
    std::vector<std::vector<int>> block;
    auto flush = [&]() {
        if (block.empty()) return;
        if (format != PatternFileFormat::Matrix && block.size() == 1) {
            bool perm_style = format == PatternFileFormat::OneLine;
            for (int v : block[0])
                if (v >= 2) perm_style = true;
            if (perm_style) {
                std::vector<int> word;
                for (int v : block[0]) word.push_back(v - 1);
                set.add(PermutationMatrix(std::move(word)).to_pattern());
                block.clear();
                return;
            }
        }
        int cols = static_cast<int>(block[0].size());
        std::vector<std::pair<int, int>> ones;
        for (size_t r = 0; r < block.size(); ++r) {
            if (static_cast<int>(block[r].size()) != cols)
                throw std::invalid_argument("ragged pattern block");
            for (int c = 0; c < cols; ++c) {
                if (block[r][c] != 0 && block[r][c] != 1)
                    throw std::invalid_argument("pattern entries must be 0/1");
                if (block[r][c] == 1) ones.emplace_back(static_cast<int>(r), c);
            }
        }
        set.add(PartialPattern(static_cast<int>(block.size()), cols, std::move(ones)));
        block.clear();
    };

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (row.empty())
            flush();
        else
            block.push_back(std::move(row));
    }
    flush();
    return set;
}

std::string format_pattern_file(const PatternSet& set) {
    std::ostringstream os;
    bool first = true;
    for (const auto& m : set.members) {
        if (!first) os << '\n';
        first = false;
        os << m.pattern.to_text();
    }
    return os.str();
}

}  // namespace stackpat
