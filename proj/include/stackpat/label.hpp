#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace stackpat {

// Vertex label of a two-stack automaton: a push or pop on one of the two
// stacks (with a small symbol index), or epsilon.
struct StackLabel {
    enum class Kind { PushX, PopX, PushY, PopY, Epsilon };

    Kind kind = Kind::Epsilon;
    int index = 0;  // symbol subscript; meaningful iff kind != Epsilon

    bool is_epsilon() const { return kind == Kind::Epsilon; }
    bool is_push() const { return kind == Kind::PushX || kind == Kind::PushY; }
    bool is_pop() const { return kind == Kind::PopX || kind == Kind::PopY; }
    bool is_x() const { return kind == Kind::PushX || kind == Kind::PopX; }
    bool is_y() const { return kind == Kind::PushY || kind == Kind::PopY; }

    // w1 ~ w2 iff both act on the X stack or both act on the Y stack.
    friend bool same_class(const StackLabel& a, const StackLabel& b) {
        if (a.is_epsilon() || b.is_epsilon()) return false;
        return (a.is_x() && b.is_x()) || (a.is_y() && b.is_y());
    }

    StackLabel inverse() const;

    bool operator==(const StackLabel&) const = default;
};

// Base symbol of a non-epsilon label: the stack it acts on plus the index,
// with push/pop collapsed. These are the "distinct X u Y labels" of an
// automaton; there are r of them.
struct BaseLabel {
    bool on_x = true;
    int index = 0;

    friend bool same_class(const BaseLabel& a, const BaseLabel& b) { return a.on_x == b.on_x; }
    auto operator<=>(const BaseLabel&) const = default;
};

inline std::optional<BaseLabel> base_of(const StackLabel& l) {
    if (l.is_epsilon()) return std::nullopt;
    return BaseLabel{l.is_x(), l.index};
}

// Text syntax: "eps", "x+I", "x-I", "y+I", "y-I".
StackLabel parse_label(const std::string& text);
std::string format_label(const StackLabel& label);

}  // namespace stackpat
