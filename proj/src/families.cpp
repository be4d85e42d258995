#include "stackpat/families.hpp"

#include <stdexcept>

namespace stackpat {

const std::array<WShape, 5>& w_shapes() {
    static const std::array<WShape, 5> shapes = {{
        {1,
         8,
         {{1, 3, SlotKind::Ti},
          {2, 6, SlotKind::Tj},
          {3, 1, SlotKind::Left},
          {4, 8, SlotKind::Zp},
          {5, 7, SlotKind::Tk},
          {6, 2, SlotKind::FixedB},
          {7, 5, SlotKind::Right},
          {8, 4, SlotKind::Zp2}}},
        {2,
         8,
         {{1, 5, SlotKind::Zp},
          {2, 4, SlotKind::Ti},
          {3, 7, SlotKind::Tj},
          {4, 2, SlotKind::Left},
          {5, 1, SlotKind::Zp2},
          {6, 8, SlotKind::Tk},
          {7, 3, SlotKind::FixedB},
          {8, 6, SlotKind::Right}}},
        {3,
         7,
         {{1, 3, SlotKind::Ti},
          {2, 6, SlotKind::Tj},
          {3, 1, SlotKind::Left},
          {4, 4, SlotKind::E},
          {5, 7, SlotKind::Tk},
          {6, 2, SlotKind::FixedB},
          {7, 5, SlotKind::Right}}},
        {4,
         6,
         {{1, 5, SlotKind::Tstart},
          {2, 2, SlotKind::P},
          {3, 3, SlotKind::E},
          {4, 6, SlotKind::Tk},
          {5, 1, SlotKind::FixedB},
          {6, 4, SlotKind::Right}}},
        {5,
         6,
         {{1, 3, SlotKind::Ti},
          {2, 6, SlotKind::Taccept},
          {3, 1, SlotKind::Left},
          {4, 4, SlotKind::E},
          {5, 5, SlotKind::Q},
          {6, 2, SlotKind::FixedB}}},
    }};
    return shapes;
}

namespace {

// Places block matrices on a size*g cell grid; 1-based block coordinates.
class BlockCanvas {
  public:
    BlockCanvas(int block_rows, int block_cols, int g)
        : g_(g), rows_(block_rows * g), cols_(block_cols * g) {}

    void place(int brow, int bcol, const PermutationMatrix& m) {
        for (int r = 0; r < g_; ++r)
            ones_.emplace_back((brow - 1) * g_ + r, (bcol - 1) * g_ + m[r]);
    }
    void place_cell(int r, int c) { ones_.emplace_back(r, c); }

    PartialPattern pattern() const { return PartialPattern(rows_, cols_, ones_); }

  private:
    int g_, rows_, cols_;
    std::vector<std::pair<int, int>> ones_;
};

using Params = std::vector<std::pair<std::string, int>>;

}  // namespace

ForbiddenBundle build_families(const Automaton& automaton, const AlphabetAssignment& asg) {
    const int g = asg.g;
    const int m = automaton.size();
    ForbiddenBundle out;
    out.g = g;
    out.c = 3 * g;
    out.d = 2 * g;
    out.b_pattern = asg.B.to_pattern();
    out.bp_pattern = asg.Bp.to_pattern();

    std::vector<const PermutationMatrix*> used{&asg.P, &asg.Q, &asg.B, &asg.Bp, &asg.E};
    for (const auto& t : asg.T) used.push_back(&t);
    for (const auto& z : asg.Z) used.push_back(&z);

    auto add = [&](int family, PartialPattern p, std::string detail, Params params) {
        out.f.push_back({std::move(p),
                         {"F" + std::to_string(family), std::move(detail), std::move(params)}});
        ++out.family_counts[family - 1];
    };

    // F1: each used matrix with one all-zero row or column inserted strictly
    // inside it (g-1 interior positions each way).
    for (size_t a = 0; a < used.size(); ++a) {
        const auto& w = used[a]->word();
        for (int t = 1; t <= g - 1; ++t) {
            {
                std::vector<std::pair<int, int>> ones;
                for (int r = 0; r < g; ++r) ones.emplace_back(r < t ? r : r + 1, w[r]);
                add(1, PartialPattern(g + 1, g, std::move(ones)), "row",
                    {{"matrix", static_cast<int>(a)}, {"pos", t}});
            }
            {
                std::vector<std::pair<int, int>> ones;
                for (int r = 0; r < g; ++r)
                    ones.emplace_back(r, w[r] < t ? w[r] : w[r] + 1);
                add(1, PartialPattern(g, g + 1, std::move(ones)), "col",
                    {{"matrix", static_cast<int>(a)}, {"pos", t}});
            }
        }
    }

    // F2: bottom-left B/B', top-right T_j, one free line in between that may
    // carry at most one 1 (3g+1 legal cells, or none).
    for (int shape = 0; shape < 2; ++shape) {      // 0: (2g+1)x(5g+1), 1: (5g+1)x(2g+1)
        for (int corner = 0; corner < 2; ++corner) {  // 0: B, 1: B'
            const PermutationMatrix& cm = corner == 0 ? asg.B : asg.Bp;
            for (int j = 0; j < m; ++j) {
                for (int fill = -1; fill <= 3 * g; ++fill) {  // -1: empty middle line
                    if (shape == 0) {
                        std::vector<std::pair<int, int>> ones;
                        for (int r = 0; r < g; ++r)
                            ones.emplace_back(r, 4 * g + 1 + asg.T[j][r]);
                        for (int r = 0; r < g; ++r) ones.emplace_back(g + 1 + r, cm[r]);
                        if (fill >= 0) ones.emplace_back(g, g + fill);
                        add(2, PartialPattern(2 * g + 1, 5 * g + 1, std::move(ones)), "wide",
                            {{"corner", corner}, {"j", j}, {"fill", fill}});
                    } else {
                        std::vector<std::pair<int, int>> ones;
                        for (int r = 0; r < g; ++r)
                            ones.emplace_back(r, g + 1 + asg.T[j][r]);
                        for (int r = 0; r < g; ++r) ones.emplace_back(4 * g + 1 + r, cm[r]);
                        if (fill >= 0) ones.emplace_back(g + fill, g);
                        add(2, PartialPattern(5 * g + 1, 2 * g + 1, std::move(ones)), "tall",
                            {{"corner", corner}, {"j", j}, {"fill", fill}});
                    }
                }
            }
        }
    }

    // F3: Q with g+1 zero rows below / columns right; P with g+1 zero rows
    // above / columns left.
    {
        std::vector<std::pair<int, int>> ones;
        for (int r = 0; r < g; ++r) ones.emplace_back(r, asg.Q[r]);
        add(3, PartialPattern(2 * g + 1, g, std::move(ones)), "q-below", {});
    }
    {
        std::vector<std::pair<int, int>> ones;
        for (int r = 0; r < g; ++r) ones.emplace_back(g + 1 + r, asg.P[r]);
        add(3, PartialPattern(2 * g + 1, g, std::move(ones)), "p-above", {});
    }
    {
        std::vector<std::pair<int, int>> ones;
        for (int r = 0; r < g; ++r) ones.emplace_back(r, asg.Q[r]);
        add(3, PartialPattern(g, 2 * g + 1, std::move(ones)), "q-right", {});
    }
    {
        std::vector<std::pair<int, int>> ones;
        for (int r = 0; r < g; ++r) ones.emplace_back(r, g + 1 + asg.P[r]);
        add(3, PartialPattern(g, 2 * g + 1, std::move(ones)), "p-left", {});
    }

    // F4 and its primed counterpart, instantiated from the shape table.
    auto materialize = [&](const WShape& shape, int vi, int vj, int vk, int zp, int left,
                           int right, bool primed) {
        BlockCanvas cv(shape.size, shape.size, g);
        int marked_r0 = -1, marked_c0 = -1;
        for (const auto& slot : shape.slots) {
            const PermutationMatrix* mx = nullptr;
            switch (slot.kind) {
                case SlotKind::Ti: mx = &asg.T[vi]; break;
                case SlotKind::Tj: mx = &asg.T[vj]; break;
                case SlotKind::Tk: mx = &asg.T[vk]; break;
                case SlotKind::Tstart: mx = &asg.T[automaton.start()]; break;
                case SlotKind::Taccept: mx = &asg.T[automaton.accept()]; break;
                case SlotKind::P: mx = &asg.P; break;
                case SlotKind::Q: mx = &asg.Q; break;
                case SlotKind::E: mx = &asg.E; break;
                case SlotKind::Zp:
                case SlotKind::Zp2: mx = &asg.Z[zp]; break;
                case SlotKind::Left: mx = (primed || left == 0) ? &asg.B : &asg.Bp; break;
                case SlotKind::Right: mx = (primed || right == 0) ? &asg.B : &asg.Bp; break;
                case SlotKind::FixedB:
                    mx = primed ? &asg.B : &asg.Bp;
                    marked_r0 = (slot.row - 1) * g;
                    marked_c0 = (slot.col - 1) * g;
                    break;
            }
            cv.place(slot.row, slot.col, *mx);
        }
        Params params{{"i", vi}, {"j", vj}, {"k", vk}, {"p", zp}, {"left", left}, {"right", right}};
        std::string detail = "W" + std::to_string(shape.id);
        if (primed) {
            out.f4_primed.push_back(
                {cv.pattern(), shape.id, marked_r0, marked_c0, {"F4'", detail, params}});
        } else {
            add(4, cv.pattern(), detail, params);
        }
    };

    const auto& shapes = w_shapes();
    for (int vi = 0; vi < m; ++vi) {
        for (int vj : automaton.successors(vi)) {
            for (int vk : automaton.successors(vj)) {
                const StackLabel& l = automaton.label(vj);
                int shape_id;
                int zp = -1;
                if (l.is_epsilon()) {
                    shape_id = 3;
                } else {
                    shape_id = l.is_push() ? 1 : 2;
                    zp = asg.z_index(l);
                }
                const WShape& shape = shapes[shape_id - 1];
                for (int left = 0; left < 2; ++left)
                    for (int right = 0; right < 2; ++right)
                        materialize(shape, vi, vj, vk, zp, left, right, false);
                materialize(shape, vi, vj, vk, zp, 0, 0, true);
            }
        }
    }
    for (int vk : automaton.successors(automaton.start())) {
        for (int right = 0; right < 2; ++right)
            materialize(shapes[3], -1, -1, vk, -1, 0, right, false);
        materialize(shapes[3], -1, -1, vk, -1, 0, 0, true);
    }
    for (int vi : automaton.predecessors(automaton.accept())) {
        for (int left = 0; left < 2; ++left)
            materialize(shapes[4], vi, -1, -1, -1, left, 0, false);
        materialize(shapes[4], vi, -1, -1, -1, 0, 0, true);
    }

    // F5: three 3x3-block shapes over same-class symbol pairs.
    for (int p = 0; p < asg.label_count(); ++p) {
        for (int q = 0; q < asg.label_count(); ++q) {
            if (!same_class(asg.z_labels[p], asg.z_labels[q])) continue;
            {
                BlockCanvas cv(3, 3, g);
                cv.place(1, 2, asg.Z[p]);
                cv.place(2, 3, asg.Z[q]);
                cv.place(3, 1, asg.B);
                add(5, cv.pattern(), "cross-b", {{"p", p}, {"q", q}});
            }
            {
                BlockCanvas cv(3, 3, g);
                cv.place(1, 2, asg.Z[p]);
                cv.place(2, 3, asg.Z[q]);
                cv.place(3, 1, asg.Bp);
                add(5, cv.pattern(), "cross-bp", {{"p", p}, {"q", q}});
            }
            for (int j = 0; j < m; ++j) {
                BlockCanvas cv(3, 3, g);
                cv.place(1, 3, asg.T[j]);
                cv.place(2, 1, asg.Z[p]);
                cv.place(3, 2, asg.Z[q]);
                add(5, cv.pattern(), "cross-t", {{"p", p}, {"q", q}, {"j", j}});
            }
        }
    }

    return out;
}

}  // namespace stackpat
