#pragma once

#include <array>
#include <vector>

#include "stackpat/assignment.hpp"
#include "stackpat/automaton.hpp"
#include "stackpat/pattern.hpp"

namespace stackpat {

// Slot roles inside the W templates.
enum class SlotKind {
    Ti,       // T of the first walk vertex
    Tj,       // T of the middle walk vertex
    Tk,       // T of the last walk vertex
    Tstart,   // T of the start vertex
    Taccept,  // T of the accept vertex
    P,
    Q,
    E,
    Zp,    // Z of the middle vertex's symbol
    Zp2,   // second copy of the same Z
    Left,  // B or B' choice
    Right, // B or B' choice
    FixedB // the template's distinguished B'/marked-B position
};

struct TemplateSlot {
    int row, col;  // 1-based block coordinates
    SlotKind kind;
};

// Block geometry of the five W templates; the marked position of the primed
// variant coincides with the FixedB slot.
struct WShape {
    int id;    // 1..5
    int size;  // blocks per side
    std::vector<TemplateSlot> slots;
};

const std::array<WShape, 5>& w_shapes();

// One forbidden pattern together with where it came from.
struct FamilyMember {
    PartialPattern pattern;
    PatternProvenance provenance;
};

// The construction output: F (families F1..F5) and the two extra matrices
// B, B' whose union with F forms F'. Progression constants c = 3g, d = 2g.
struct ForbiddenBundle {
    int g = 0;
    int c = 0, d = 0;
    std::vector<FamilyMember> f;
    PartialPattern b_pattern, bp_pattern;
    std::array<long long, 5> family_counts{};  // |F1|..|F5|

    // Primed templates (all B, no B'), used by the marked-submatrix check;
    // marked_* give the top-left cell of the marked B block.
    struct PrimedMember {
        PartialPattern pattern;
        int template_id;
        int marked_row0, marked_col0;
        PatternProvenance provenance;
    };
    std::vector<PrimedMember> f4_primed;

    long long total() const {
        long long t = 0;
        for (long long c0 : family_counts) t += c0;
        return t;
    }
};

ForbiddenBundle build_families(const Automaton& automaton, const AlphabetAssignment& assignment);

}  // namespace stackpat
