#include "stackpat/assignment.hpp"

namespace stackpat {

int AlphabetAssignment::z_index(const StackLabel& l) const {
    auto b = base_of(l);
    if (!b) return -1;
    for (size_t p = 0; p < z_labels.size(); ++p)
        if (z_labels[p] == *b) return static_cast<int>(p);
    return -1;
}

AlphabetAssignment assign_alphabet(const Automaton& automaton, int g, AlphabetCache& cache,
                                   const AlphabetOptions& options) {
    const auto& ag = alphabet(g, cache, options);
    int m = automaton.size();
    auto labels = automaton.distinct_base_labels();
    int r = static_cast<int>(labels.size());
    int need = 5 + m + r;
    if (static_cast<int>(ag.size()) <= need) throw AlphabetTooSmall(need, static_cast<int>(ag.size()));

    AlphabetAssignment a;
    a.g = g;
    a.relaxed = options.relaxed;
    a.P = ag[0];
    a.Q = ag[1];
    a.B = ag[2];
    a.Bp = ag[3];
    a.E = ag[4];
    a.T.assign(ag.begin() + 5, ag.begin() + 5 + m);
    a.Z.assign(ag.begin() + 5 + m, ag.begin() + 5 + m + r);
    a.z_labels = std::move(labels);
    return a;
}

}  // namespace stackpat
