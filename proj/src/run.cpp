#include "stackpat/run.hpp"

#include <stdexcept>

namespace stackpat {

RunResult run_labels(const std::vector<StackLabel>& labels, bool want_trace) {
    RunResult res;
    int n = static_cast<int>(labels.size());
    res.involution.resize(n);
    for (int i = 0; i < n; ++i) res.involution[i] = i + 1;

    // Stacks hold (symbol index, 1-based write time).
    std::vector<std::pair<int, int>> sx, sy;
    auto snapshot = [&]() {
        if (!want_trace) return;
        std::vector<int> a, b;
        for (auto [s, t] : sx) a.push_back(s);
        for (auto [s, t] : sy) b.push_back(s);
        res.trace.emplace_back(std::move(a), std::move(b));
    };

    for (int i = 0; i < n; ++i) {
        const StackLabel& l = labels[i];
        switch (l.kind) {
            case StackLabel::Kind::Epsilon: break;
            case StackLabel::Kind::PushX: sx.emplace_back(l.index, i + 1); break;
            case StackLabel::Kind::PushY: sy.emplace_back(l.index, i + 1); break;
            case StackLabel::Kind::PopX:
            case StackLabel::Kind::PopY: {
                auto& st = l.kind == StackLabel::Kind::PopX ? sx : sy;
                if (st.empty() || st.back().first != l.index) {
                    res.status = RunResult::Status::Unbalanced;
                    res.failure_step = i + 1;
                    res.involution.clear();
                    return res;
                }
                int writer = st.back().second;
                st.pop_back();
                res.involution[writer - 1] = i + 1;
                res.involution[i] = writer;
                break;
            }
        }
        snapshot();
    }
    if (!sx.empty() || !sy.empty()) {
        res.status = RunResult::Status::Unbalanced;
        res.failure_step = n + 1;
        res.involution.clear();
        return res;
    }
    res.status = RunResult::Status::Balanced;
    return res;
}

RunResult run_path(const Automaton& automaton, const std::vector<int>& path, bool want_trace) {
    for (size_t i = 0; i < path.size(); ++i)
        if (path[i] < 0 || path[i] >= automaton.size())
            throw std::invalid_argument("path vertex index out of range");
    for (size_t i = 1; i < path.size(); ++i) {
        if (!automaton.has_edge(path[i - 1], path[i])) {
            RunResult res;
            res.status = RunResult::Status::EdgeInconsistent;
            res.failure_step = static_cast<int>(i + 1);
            return res;
        }
    }
    std::vector<StackLabel> labels;
    labels.reserve(path.size());
    for (int v : path) labels.push_back(automaton.label(v));
    return run_labels(labels, want_trace);
}

std::vector<int> path_from_ids(const Automaton& automaton, const std::vector<std::string>& ids) {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        int v = automaton.index_of(id);
        if (v < 0) throw std::invalid_argument("unknown vertex id '" + id + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace stackpat
