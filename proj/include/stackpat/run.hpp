#pragma once

#include <optional>
#include <vector>

#include "stackpat/automaton.hpp"
#include "stackpat/label.hpp"

namespace stackpat {

// Outcome of traversing a label sequence with two stacks.
struct RunResult {
    enum class Status { Balanced, Unbalanced, EdgeInconsistent };

    Status status = Status::Unbalanced;
    // The pairing involution (1-based, involution[i-1] = pi(i)) when balanced.
    std::vector<int> involution;
    // 1-based step at which the run failed: first bad pop, or (when not
    // balanced at the end) n+1; for EdgeInconsistent, the first step whose
    // edge is missing.
    std::optional<int> failure_step;
    // Per-step stack snapshots (after the step), when requested.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> trace;

    bool balanced() const { return status == Status::Balanced; }
};

// Run a raw label sequence under strict stack semantics (a pop must match the
// top of its stack; both stacks must end empty).
RunResult run_labels(const std::vector<StackLabel>& labels, bool want_trace = false);

// Run a path given as 0-based vertex indices; rejects edge-inconsistent paths
// with the first offending step.
RunResult run_path(const Automaton& automaton, const std::vector<int>& path,
                   bool want_trace = false);

// Helper: vertex-id path to indices. Throws std::invalid_argument on unknown ids.
std::vector<int> path_from_ids(const Automaton& automaton, const std::vector<std::string>& ids);

}  // namespace stackpat
