#include "stackpat/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace stackpat {

Automaton::Automaton(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                     int start, int accept)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), start_(start), accept_(accept) {
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::invalid_argument("edge endpoint out of range");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Automaton::has_edge(int u, int v) const {
    const auto& s = out_[u];
    return std::binary_search(s.begin(), s.end(), v);
}

int Automaton::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    return -1;
}

std::vector<BaseLabel> Automaton::distinct_base_labels() const {
    std::set<BaseLabel> seen;
    for (const auto& v : vertices_)
        if (auto b = base_of(v.label)) seen.insert(*b);
    std::vector<BaseLabel> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const BaseLabel& a, const BaseLabel& b) {
        if (a.on_x != b.on_x) return a.on_x;  // X symbols first
        return a.index < b.index;
    });
    return out;
}

long long Automaton::count_vertex_paths(int len) const {
    if (len <= 0) return 0;
    std::vector<long long> cur(size(), 1);  // paths of 1 vertex ending at v
    for (int step = 1; step < len; ++step) {
        std::vector<long long> nxt(size(), 0);
        for (int v = 0; v < size(); ++v)
            for (int w : out_[v]) nxt[w] += cur[v];
        cur = std::move(nxt);
    }
    long long total = 0;
    for (long long c : cur) total += c;
    return total;
}

std::vector<std::string> Automaton::validate() const {
    std::vector<std::string> bad;
    if (size() < 2) bad.push_back("fewer than two vertices");
    if (start_ == accept_) bad.push_back("start equals accept");
    std::set<std::string> ids;
    for (const auto& v : vertices_)
        if (!ids.insert(v.id).second) bad.push_back("duplicate vertex id '" + v.id + "'");
    if (start_ >= 0 && start_ < size() && !label(start_).is_epsilon())
        bad.push_back("rho(v1) != eps");
    if (accept_ >= 0 && accept_ < size() && !label(accept_).is_epsilon())
        bad.push_back("rho(v2) != eps");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges_) {
        if (!seen.insert({u, v}).second)
            bad.push_back("duplicate edge " + vertices_[u].id + "->" + vertices_[v].id);
        if (same_class(label(u), label(v)))
            bad.push_back("edge " + vertices_[u].id + "->" + vertices_[v].id +
                          " joins ~-equivalent labels");
    }
    return bad;
}

std::string Automaton::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_)
        j["vertices"].push_back({{"id", v.id}, {"label", format_label(v.label)}});
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges_)
        j["edges"].push_back({vertices_[u].id, vertices_[v].id});
    j["start"] = vertices_[start_].id;
    j["accept"] = vertices_[accept_].id;
    return j.dump(2);
}

Automaton Automaton::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Vertex> vs;
    std::map<std::string, int> idx;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        if (idx.count(id)) throw std::invalid_argument("duplicate vertex id '" + id + "'");
        idx[id] = static_cast<int>(vs.size());
        vs.push_back({id, parse_label(v.at("label").get<std::string>())});
    }
    auto lookup = [&](const std::string& id) {
        auto it = idx.find(id);
        if (it == idx.end()) throw std::invalid_argument("unknown vertex id '" + id + "'");
        return it->second;
    };
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        es.emplace_back(lookup(e[0].get<std::string>()), lookup(e[1].get<std::string>()));
    }
    return Automaton(std::move(vs), std::move(es),
                     lookup(j.at("start").get<std::string>()),
                     lookup(j.at("accept").get<std::string>()));
}

namespace {

// Fixture transcribed from the source figure. Vertex order s1..s8, p0..p8,
// v1..v14 fixes the T_i numbering. The figure labels v11/v12 as y-1/y+0,
// which leaves no x+1 vertex at all and makes every balanced path impossible;
// the evidently intended labels (the 1-transfer gadget pop y1, push x1) are
// used instead.
const char* kGamma1 = R"({
  "vertices": [
    {"id":"s1","label":"eps"}, {"id":"s2","label":"eps"}, {"id":"s3","label":"eps"},
    {"id":"s4","label":"eps"}, {"id":"s5","label":"eps"}, {"id":"s6","label":"eps"},
    {"id":"s7","label":"eps"}, {"id":"s8","label":"eps"},
    {"id":"p0","label":"x-1"}, {"id":"p1","label":"x-0"}, {"id":"p2","label":"y+1"},
    {"id":"p3","label":"x-2"}, {"id":"p4","label":"x-0"}, {"id":"p5","label":"y+1"},
    {"id":"p6","label":"x-2"}, {"id":"p7","label":"y-2"}, {"id":"p8","label":"x-1"},
    {"id":"v1","label":"x+2"}, {"id":"v2","label":"y+2"}, {"id":"v3","label":"x-1"},
    {"id":"v4","label":"y+0"}, {"id":"v5","label":"x-1"}, {"id":"v6","label":"y+1"},
    {"id":"v7","label":"x-0"}, {"id":"v8","label":"y+0"}, {"id":"v9","label":"y-0"},
    {"id":"v10","label":"x+0"}, {"id":"v11","label":"x+1"}, {"id":"v12","label":"y-1"},
    {"id":"v13","label":"x-1"}, {"id":"v14","label":"x-0"}
  ],
  "edges": [
    ["s1","s2"], ["s2","p4"], ["p4","p5"], ["p5","s3"], ["s3","p6"], ["p6","s4"],
    ["s4","p7"], ["p7","s5"], ["s5","s2"], ["s2","p2"], ["p2","p3"], ["p3","s4"],
    ["s5","s6"], ["s6","p8"], ["p8","s8"], ["s8","p0"], ["p0","s7"], ["s8","p1"],
    ["p1","s7"], ["s7","s8"],
    ["s1","v1"], ["v1","v2"], ["v2","s1"],
    ["s2","v3"], ["v3","v4"], ["v4","s2"],
    ["s3","v5"], ["v5","v6"], ["v6","s3"],
    ["s3","v7"], ["v7","v8"], ["v8","s3"],
    ["s4","v9"], ["v9","v10"], ["v10","s4"],
    ["s4","v12"], ["v12","v11"], ["v11","s4"],
    ["s6","v13"], ["s6","v14"], ["v13","s6"], ["v14","s6"]
  ],
  "start": "s1",
  "accept": "s8"
})";

const char* kGamma3 = R"({
  "vertices": [
    {"id":"v1","label":"eps"}, {"id":"v2","label":"eps"}, {"id":"v3","label":"x+1"},
    {"id":"v4","label":"x-1"}, {"id":"v5","label":"y+1"}, {"id":"v6","label":"y-1"}
  ],
  "edges": [
    ["v1","v3"], ["v3","v6"], ["v6","v4"], ["v4","v2"], ["v2","v4"],
    ["v5","v3"], ["v3","v5"]
  ],
  "start": "v1",
  "accept": "v2"
})";

}  // namespace

Automaton Automaton::builtin(const std::string& name) {
    if (name == "gamma1") return from_json(kGamma1);
    if (name == "gamma3") return from_json(kGamma3);
    throw std::invalid_argument("unknown builtin automaton '" + name + "'");
}

}  // namespace stackpat
