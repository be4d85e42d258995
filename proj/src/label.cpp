#include "stackpat/label.hpp"

namespace stackpat {

StackLabel StackLabel::inverse() const {
    switch (kind) {
        case Kind::PushX: return {Kind::PopX, index};
        case Kind::PopX: return {Kind::PushX, index};
        case Kind::PushY: return {Kind::PopY, index};
        case Kind::PopY: return {Kind::PushY, index};
        case Kind::Epsilon: return *this;
    }
    return *this;
}

StackLabel parse_label(const std::string& text) {
    if (text == "eps") return StackLabel{StackLabel::Kind::Epsilon, 0};
    if (text.size() < 3 || (text[0] != 'x' && text[0] != 'y') ||
        (text[1] != '+' && text[1] != '-'))
        throw std::invalid_argument("bad label '" + text + "' (want eps, x+I, x-I, y+I, y-I)");
    int idx = 0;
    for (size_t i = 2; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad label index in '" + text + "'");
        idx = idx * 10 + (text[i] - '0');
    }
    bool push = text[1] == '+';
    if (text[0] == 'x')
        return StackLabel{push ? StackLabel::Kind::PushX : StackLabel::Kind::PopX, idx};
    return StackLabel{push ? StackLabel::Kind::PushY : StackLabel::Kind::PopY, idx};
}

std::string format_label(const StackLabel& label) {
    switch (label.kind) {
        case StackLabel::Kind::Epsilon: return "eps";
        case StackLabel::Kind::PushX: return "x+" + std::to_string(label.index);
        case StackLabel::Kind::PopX: return "x-" + std::to_string(label.index);
        case StackLabel::Kind::PushY: return "y+" + std::to_string(label.index);
        case StackLabel::Kind::PopY: return "y-" + std::to_string(label.index);
    }
    return "eps";
}

}  // namespace stackpat
