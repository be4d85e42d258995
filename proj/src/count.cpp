#include "stackpat/count.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stackpat/run.hpp"

namespace stackpat {

namespace {

// A configuration is (vertex, X stack, Y stack); stacks are symbol-index
// sequences, bottom first.
struct Config {
    int vertex;
    std::vector<int> sx, sy;
    auto operator<=>(const Config&) const = default;
};

// Applies the label of vertex `w` to the stacks of `c`; returns false when
// the pop does not match the top.
bool apply(const Automaton& a, const Config& c, int w, Config& out) {
    out = c;
    out.vertex = w;
    const StackLabel& l = a.label(w);
    switch (l.kind) {
        case StackLabel::Kind::Epsilon: return true;
        case StackLabel::Kind::PushX: out.sx.push_back(l.index); return true;
        case StackLabel::Kind::PushY: out.sy.push_back(l.index); return true;
        case StackLabel::Kind::PopX:
            if (out.sx.empty() || out.sx.back() != l.index) return false;
            out.sx.pop_back();
            return true;
        case StackLabel::Kind::PopY:
            if (out.sy.empty() || out.sy.back() != l.index) return false;
            out.sy.pop_back();
            return true;
    }
    return false;
}

}  // namespace

BigInt count_balanced(const Automaton& automaton, int n, long long budget) {
    if (n < 1) throw std::invalid_argument("count_balanced: n must be >= 1");
    std::map<Config, BigInt> level;
    level[{automaton.start(), {}, {}}] = 1;
    for (int step = 2; step <= n; ++step) {
        std::map<Config, BigInt> next;
        Config tmp;
        for (const auto& [c, cnt] : level) {
            for (int w : automaton.successors(c.vertex))
                if (apply(automaton, c, w, tmp)) next[tmp] += cnt;
        }
        level = std::move(next);
        if (static_cast<long long>(level.size()) > budget)
            throw BudgetExceeded("count_balanced: live configurations exceed budget", step,
                                 static_cast<long long>(level.size()));
        if (level.empty()) return 0;
    }
    Config accept{automaton.accept(), {}, {}};
    auto it = level.find(accept);
    if (n == 1)  // a single vertex: must both start and accept there
        return automaton.start() == automaton.accept() ? 1 : 0;
    return it == level.end() ? BigInt(0) : it->second;
}

std::vector<std::vector<int>> enumerate_balanced(const Automaton& automaton, int n,
                                                 long long budget) {
    if (n < 1) throw std::invalid_argument("enumerate_balanced: n must be >= 1");
    std::vector<std::vector<int>> found;
    std::vector<int> path{automaton.start()};
    Config cur{automaton.start(), {}, {}};
    long long nodes = 0;

    // Depth-first over stack-valid prefixes; the configuration space is what
    // bounds the work, so the node budget mirrors the DP budget.
    auto dfs = [&](auto&& self, const Config& c) -> void {
        if (++nodes > budget)
            throw BudgetExceeded("enumerate_balanced: search nodes exceed budget",
                                 static_cast<long long>(path.size()), nodes);
        if (static_cast<int>(path.size()) == n) {
            if (c.vertex == automaton.accept() && c.sx.empty() && c.sy.empty())
                found.push_back(path);
            return;
        }
        Config tmp;
        for (int w : automaton.successors(c.vertex)) {
            if (!apply(automaton, c, w, tmp)) continue;
            // Prune: remaining steps must be able to empty both stacks.
            if (static_cast<long long>(tmp.sx.size()) + static_cast<long long>(tmp.sy.size()) >
                n - static_cast<long long>(path.size()) - 1)
                continue;
            path.push_back(w);
            self(self, tmp);
            path.pop_back();
        }
    };
    dfs(dfs, cur);
    return found;
}

long long gamma1_word_position(long long k) {
    long long s = 0;
    for (long long i = 2; i <= k; ++i) {
        long long lg = 0;
        while ((1LL << (lg + 1)) <= i) ++lg;
        s += lg;
    }
    return 2 + 14 * k + 6 * s;
}

int gamma1_alpha_oracle(long long n) {
    if (n < 1) return 0;
    long long s = 0;  // running sum of floor(log2 i)
    for (long long k = 1;; ++k) {
        if (k >= 2) {
            long long lg = 0;
            while ((1LL << (lg + 1)) <= k) ++lg;
            s += lg;
        }
        long long base = 2 + 14 * k + 6 * s;
        if (base > n) return 0;
        long long bits = 1;
        while ((1LL << bits) <= k) ++bits;
        long long j = n - base + 1;  // 1-based digit position, most significant first
        if (j >= 1 && j <= bits && ((k >> (bits - j)) & 1)) return 1;
    }
}

}  // namespace stackpat
