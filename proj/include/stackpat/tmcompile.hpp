#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stackpat/automaton.hpp"

namespace stackpat {

// Deterministic Turing machine started on a blank two-way-infinite tape.
struct TuringMachine {
    struct Rule {
        std::string next;
        std::string write;
        bool move_right = true;

        bool operator==(const Rule&) const = default;
    };

    std::vector<std::string> states;
    std::string start, halt;
    std::string blank = "_";
    std::map<std::pair<std::string, std::string>, Rule> delta;

    std::vector<std::string> validate() const;

    static TuringMachine from_json(const std::string& text);
    std::string to_json() const;
};

struct TmTrace {
    bool halted = false;
    long long steps = 0;
    // Written cells at the end (leftmost..rightmost visited), head offset.
    std::vector<std::string> tape;
};

// Direct simulation, as an independent reference for the compiled automaton.
TmTrace simulate(const TuringMachine& tm, long long max_steps);

// Compiles the machine into a two-stack automaton: stack X carries the tape
// left of the head, stack Y the tape right of it, both above bottom-of-tape
// sentinels; the current cell rides in the control state. Reaching the halt
// state drains X fully, then Y, in that fixed order, so a halting run yields
// exactly one balanced path.
//
// Path length of the halting run: 4 vertices to set up, 3 per machine step
// (5 when the step walks onto unvisited tape), 1 extra for the final write,
// plus 2 per drained symbol and 1 for the accept vertex. A safe scan bound
// for a machine halting within t steps is N0(t) = 7t + 16.
Automaton compile(const TuringMachine& tm);

}  // namespace stackpat
