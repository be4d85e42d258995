#include "stackpat/simple.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stackpat {

bool is_simple_word(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    // Windows of consecutive rows [i, j]; occupied columns form an interval
    // iff max-min == j-i. Proper windows only.
    for (int i = 0; i < n; ++i) {
        int mn = word[i], mx = word[i];
        for (int j = i + 1; j < n; ++j) {
            mn = std::min(mn, word[j]);
            mx = std::max(mx, word[j]);
            int w = j - i;  // window size - 1
            if (w == n - 1) break;
            if (mx - mn == w) return false;
        }
    }
    return true;
}

bool is_simple(const PermutationMatrix& m) { return is_simple_word(m.word()); }

PermutationMatrix anchor_matrix_7() {
    // Row -> column of the 1 (0-based): the fixed 7x7 anchor.
    return PermutationMatrix({4, 5, 6, 3, 0, 1, 2});
}

PermutationMatrix seed_matrix_9() {
    return PermutationMatrix({5, 1, 6, 8, 4, 0, 2, 7, 3});
}

std::vector<PermutationMatrix> seed_insertions() {
    const std::vector<int> seed = seed_matrix_9().word();
    int n = static_cast<int>(seed.size());
    std::vector<PermutationMatrix> out;
    for (int ri = 0; ri <= n; ++ri) {      // new row position
        for (int ci = 0; ci <= n; ++ci) {  // new column position
            // Corners of the enlarged matrix are excluded, as are insertions
            // that sit diagonally against an existing 1 (they would create a
            // 2x2 interval block).
            bool corner = (ri == 0 || ri == n) && (ci == 0 || ci == n);
            if (corner) continue;
            std::vector<int> word;
            word.reserve(n + 1);
            for (int r = 0; r < n; ++r) {
                int c = seed[r] >= ci ? seed[r] + 1 : seed[r];
                word.push_back(c);
            }
            word.insert(word.begin() + ri, ci);
            bool blocky = false;
            // Adjacent-diagonal 1 next to the inserted (ri, ci)?
            for (int dr : {-1, 1}) {
                int r = ri + dr;
                if (r < 0 || r > n) continue;
                if (word[r] == ci - 1 || word[r] == ci + 1) blocky = true;
            }
            if (blocky) continue;
            out.emplace_back(std::move(word));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const AlphabetCache::List* AlphabetCache::find(int g, bool relaxed) const {
    auto it = entries_.find({g, relaxed});
    return it == entries_.end() ? nullptr : it->second.get();
}

const AlphabetCache::List& AlphabetCache::store(int g, bool relaxed, List list) {
    auto& slot = entries_[{g, relaxed}];
    slot = std::make_unique<List>(std::move(list));
    return *slot;
}

const std::vector<PermutationMatrix>& alphabet(int g, AlphabetCache& cache,
                                               const AlphabetOptions& options) {
    if (g < 1) throw std::invalid_argument("alphabet: g must be >= 1");
    if (g > options.max_g)
        throw std::invalid_argument("alphabet: g=" + std::to_string(g) +
                                    " exceeds enumeration guard max_g=" +
                                    std::to_string(options.max_g));
    if (const auto* hit = cache.find(g, options.relaxed)) return *hit;

    const std::vector<int> anchor = anchor_matrix_7().word();
    std::vector<PermutationMatrix> found;
    std::vector<int> word(g);
    std::iota(word.begin(), word.end(), 0);
    do {
        if (!is_simple_word(word)) continue;
        if (!options.relaxed && !perm_contains(word, anchor)) continue;
        found.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return cache.store(g, options.relaxed, std::move(found));
}

}  // namespace stackpat
