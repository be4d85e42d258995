#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stackpat/label.hpp"

namespace stackpat {

// A two-stack automaton: a finite directed graph whose vertices carry stack
// labels, with epsilon-labelled start and accept vertices and no edge between
// two labels acting on the same stack.
//
// Vertices are kept in declaration order; 0-based indices into `vertices`
// identify them internally, 1-based positions give the T_i numbering used by
// the forbidden-family construction.
class Automaton {
  public:
    struct Vertex {
        std::string id;
        StackLabel label;
    };

    Automaton() = default;
    Automaton(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges, int start,
              int accept);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int start() const { return start_; }
    int accept() const { return accept_; }
    int size() const { return static_cast<int>(vertices_.size()); }

    const StackLabel& label(int v) const { return vertices_[v].label; }
    const std::vector<int>& successors(int v) const { return out_[v]; }
    const std::vector<int>& predecessors(int v) const { return in_[v]; }
    bool has_edge(int u, int v) const;

    // Index of a vertex id, or -1.
    int index_of(const std::string& id) const;

    // Distinct base labels (X u Y symbols) in a canonical order: X labels by
    // index, then Y labels by index.
    std::vector<BaseLabel> distinct_base_labels() const;

    // Number of directed paths with exactly `len` vertices (len-1 edges).
    long long count_vertex_paths(int len) const;

    // Violated well-formedness conditions; empty means valid.
    std::vector<std::string> validate() const;

    std::string to_json() const;
    static Automaton from_json(const std::string& text);

    // Built-in instances "gamma1" and "gamma3", transcribed from the source
    // figures. Throws std::invalid_argument for unknown names.
    static Automaton builtin(const std::string& name);

  private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    int start_ = 0;
    int accept_ = 0;
    std::vector<std::vector<int>> out_, in_;
};

}  // namespace stackpat
