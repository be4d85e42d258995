#pragma once

#include <stdexcept>
#include <vector>

#include "stackpat/automaton.hpp"
#include "stackpat/simple.hpp"

namespace stackpat {

class AlphabetTooSmall : public std::runtime_error {
  public:
    AlphabetTooSmall(int required, int available)
        : std::runtime_error("alphabet too small: need more than " + std::to_string(required) +
                             " matrices, have " + std::to_string(available)),
          required(required),
          available(available) {}
    int required;
    int available;
};

// The five special matrices, one T per automaton vertex and one Z per distinct
// X u Y symbol, all distinct members of the alphabet. The assignment is the
// deterministic prefix of the alphabet in canonical order.
struct AlphabetAssignment {
    int g = 0;
    bool relaxed = false;
    PermutationMatrix P, Q, B, Bp, E;
    std::vector<PermutationMatrix> T;  // T[i] corresponds to vertex index i
    std::vector<PermutationMatrix> Z;  // Z[p] corresponds to z_labels[p]
    std::vector<BaseLabel> z_labels;   // canonical order: X symbols, then Y

    int vertex_count() const { return static_cast<int>(T.size()); }
    int label_count() const { return static_cast<int>(Z.size()); }
    // Index into Z of the symbol underlying `l`, or -1 for epsilon.
    int z_index(const StackLabel& l) const;
};

AlphabetAssignment assign_alphabet(const Automaton& automaton, int g, AlphabetCache& cache,
                                   const AlphabetOptions& options = {});

}  // namespace stackpat
