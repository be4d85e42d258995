#include "stackpat/tmcompile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace stackpat {

std::vector<std::string> TuringMachine::validate() const {
    std::vector<std::string> bad;
    std::set<std::string> st(states.begin(), states.end());
    if (st.size() != states.size()) bad.push_back("duplicate state names");
    if (!st.count(start)) bad.push_back("start state not declared");
    if (!st.count(halt)) bad.push_back("halt state not declared");
    for (const auto& [key, rule] : delta) {
        if (!st.count(key.first)) bad.push_back("rule from undeclared state " + key.first);
        if (!st.count(rule.next)) bad.push_back("rule into undeclared state " + rule.next);
        if (key.first == halt) bad.push_back("halt state has an outgoing rule");
    }
    return bad;
}

TuringMachine TuringMachine::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TuringMachine tm;
    for (const auto& s : j.at("states")) tm.states.push_back(s.get<std::string>());
    tm.start = j.at("start").get<std::string>();
    tm.halt = j.at("halt").get<std::string>();
    tm.blank = j.at("blank").get<std::string>();
    for (const auto& row : j.at("delta")) {
        if (!row.is_array() || row.size() != 5)
            throw std::invalid_argument("delta rows must be [state, read, state', write, L|R]");
        std::string dir = row[4].get<std::string>();
        if (dir != "L" && dir != "R") throw std::invalid_argument("move must be L or R");
        auto key = std::make_pair(row[0].get<std::string>(), row[1].get<std::string>());
        if (tm.delta.count(key))
            throw std::invalid_argument("nondeterministic rule for (" + key.first + ", " +
                                        key.second + ")");
        tm.delta[key] = {row[2].get<std::string>(), row[3].get<std::string>(), dir == "R"};
    }
    auto bad = tm.validate();
    if (!bad.empty()) throw std::invalid_argument("invalid machine: " + bad.front());
    return tm;
}

std::string TuringMachine::to_json() const {
    nlohmann::json j;
    j["states"] = states;
    j["start"] = start;
    j["halt"] = halt;
    j["blank"] = blank;
    j["delta"] = nlohmann::json::array();
    for (const auto& [key, rule] : delta)
        j["delta"].push_back({key.first, key.second, rule.next, rule.write,
                              rule.move_right ? "R" : "L"});
    return j.dump(2);
}

TmTrace simulate(const TuringMachine& tm, long long max_steps) {
    TmTrace tr;
    std::map<long long, std::string> tape;
    long long head = 0;
    std::string state = tm.start;
    auto read = [&]() {
        auto it = tape.find(head);
        return it == tape.end() ? tm.blank : it->second;
    };
    while (tr.steps < max_steps) {
        if (state == tm.halt) {
            tr.halted = true;
            break;
        }
        auto it = tm.delta.find({state, read()});
        if (it == tm.delta.end()) break;  // jammed: treated as non-halting
        tape[head] = it->second.write;
        head += it->second.move_right ? 1 : -1;
        state = it->second.next;
        ++tr.steps;
    }
    if (!tape.empty())
        for (auto it = tape.begin(); it != tape.end(); ++it) tr.tape.push_back(it->second);
    return tr;
}

namespace {

struct Builder {
    std::vector<Automaton::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> index;

    int vertex(const std::string& id, StackLabel label) {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        int v = static_cast<int>(vertices.size());
        vertices.push_back({id, label});
        index[id] = v;
        return v;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }
};

}  // namespace

Automaton compile(const TuringMachine& tm) {
    auto bad = tm.validate();
    if (!bad.empty()) throw std::invalid_argument("compile: invalid machine: " + bad.front());

    // Symbol indexing: blank = 0, the rest in first-seen order, sentinel last.
    std::vector<std::string> symbols{tm.blank};
    auto sym_index = [&](const std::string& s) {
        for (size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == s) return static_cast<int>(i);
        symbols.push_back(s);
        return static_cast<int>(symbols.size() - 1);
    };
    for (const auto& [key, rule] : tm.delta) {
        sym_index(key.second);
        sym_index(rule.write);
    }
    const int nsym = static_cast<int>(symbols.size());
    const int sentinel = nsym;

    using K = StackLabel::Kind;
    Builder b;
    int v_in = b.vertex("in", {K::Epsilon, 0});
    int v_sx = b.vertex("boot-x", {K::PushX, sentinel});
    int v_sy = b.vertex("boot-y", {K::PushY, sentinel});
    b.edge(v_in, v_sx);
    b.edge(v_sx, v_sy);

    // Control hubs: state q with symbol s under the head.
    auto hub = [&](const std::string& q, int s) {
        return b.vertex("h." + q + "." + std::to_string(s), {K::Epsilon, 0});
    };
    for (const auto& q : tm.states)
        if (q != tm.halt)
            for (int s = 0; s < nsym; ++s) hub(q, s);
    b.edge(v_sy, hub(tm.start, 0));

    // Drain: pop X down to its sentinel, then Y, then accept.
    int v_dl = b.vertex("drain-x", {K::Epsilon, 0});
    int v_dr = b.vertex("drain-y", {K::Epsilon, 0});
    int v_out = b.vertex("out", {K::Epsilon, 0});
    for (int s = 0; s < nsym; ++s) {
        int px = b.vertex("dx." + std::to_string(s), {K::PopX, s});
        b.edge(v_dl, px);
        b.edge(px, v_dl);
        int py = b.vertex("dy." + std::to_string(s), {K::PopY, s});
        b.edge(v_dr, py);
        b.edge(py, v_dr);
    }
    int pxs = b.vertex("dx.end", {K::PopX, sentinel});
    b.edge(v_dl, pxs);
    b.edge(pxs, v_dr);
    int pys = b.vertex("dy.end", {K::PopY, sentinel});
    b.edge(v_dr, pys);
    b.edge(pys, v_out);

    // Reader gadgets: after moving right the next cell comes off stack Y
    // (stack X after moving left); popping the sentinel means fresh tape, so
    // it is put back and the cell reads as blank.
    auto readers = [&](const std::string& q, bool right) {
        std::vector<int> entry;
        std::string tag = (right ? "rR." : "rL.") + q;
        K pop = right ? K::PopY : K::PopX;
        K push = right ? K::PushY : K::PushX;
        for (int s = 0; s < nsym; ++s) {
            int rd = b.vertex(tag + "." + std::to_string(s), {pop, s});
            b.edge(rd, hub(q, s));
            entry.push_back(rd);
        }
        int sp = b.vertex(tag + ".edge", {pop, sentinel});
        int se = b.vertex(tag + ".pause", {K::Epsilon, 0});
        int sq = b.vertex(tag + ".renew", {push, sentinel});
        b.edge(sp, se);
        b.edge(se, sq);
        b.edge(sq, hub(q, 0));
        entry.push_back(sp);
        return entry;
    };
    std::map<std::pair<std::string, bool>, std::vector<int>> reader_cache;

    for (const auto& [key, rule] : tm.delta) {
        const auto& [q, s] = key;
        int si = sym_index(s);
        int wi = sym_index(rule.write);
        // Write the new cell content onto the stack the head leaves behind.
        int w = b.vertex("w." + q + "." + std::to_string(si),
                         {rule.move_right ? K::PushX : K::PushY, wi});
        b.edge(hub(q, si), w);
        if (rule.next == tm.halt) {
            b.edge(w, v_dl);
            continue;
        }
        auto ck = std::make_pair(rule.next, rule.move_right);
        auto it = reader_cache.find(ck);
        if (it == reader_cache.end())
            it = reader_cache.emplace(ck, readers(rule.next, rule.move_right)).first;
        for (int rd : it->second) b.edge(w, rd);
    }

    return Automaton(std::move(b.vertices), std::move(b.edges), v_in, v_out);
}

}  // namespace stackpat
