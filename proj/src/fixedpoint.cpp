#include "stackpat/fixedpoint.hpp"

#include <algorithm>
#include <map>

#include "stackpat/run.hpp"

namespace stackpat {

namespace {

const PermutationMatrix& matrix_of(const BlockSymbol& sym, const AlphabetAssignment& asg) {
    switch (sym.kind) {
        case BlockSymbol::Kind::P: return asg.P;
        case BlockSymbol::Kind::Q: return asg.Q;
        case BlockSymbol::Kind::B: return asg.B;
        case BlockSymbol::Kind::Bp: return asg.Bp;
        case BlockSymbol::Kind::E: return asg.E;
        case BlockSymbol::Kind::T: return asg.T[sym.index];
        case BlockSymbol::Kind::Z: return asg.Z[sym.index];
        case BlockSymbol::Kind::Other: break;
    }
    throw std::logic_error("matrix_of: unrecognized block symbol");
}

// Searches for W-template instances at block level. Every template row and
// column carries exactly one named block, so an instance is a choice of grid
// entries whose band rows and columns replicate the template's relative
// order, with the side conditions bound to the automaton.
class TemplateFinder {
  public:
    TemplateFinder(const BlockGrid& grid, const Automaton& automaton,
                   const AlphabetAssignment& asg)
        : grid_(grid), a_(automaton), asg_(asg) {}

    // flip: entry index whose B/B' identity is inverted, or -1.
    void set_flip(int entry_index) { flip_ = entry_index; }

    // anchored: entry index the FixedB slot must use, or -1 for any.
    bool find(const WShape& shape, bool primed, int anchored) const {
        Binding bind;
        return search(shape, primed, anchored, 0, bind);
    }

    BlockSymbol sym(int idx) const {
        BlockSymbol s = grid_.entries[idx].sym;
        if (idx == flip_) {
            if (s.kind == BlockSymbol::Kind::B)
                s.kind = BlockSymbol::Kind::Bp;
            else if (s.kind == BlockSymbol::Kind::Bp)
                s.kind = BlockSymbol::Kind::B;
        }
        return s;
    }

  private:
    struct Binding {
        int vi = -1, vj = -1, vk = -1, p = -1;
        std::vector<int> chosen;  // entry indices, in slot order
    };

    bool slot_accepts(const TemplateSlot& slot, bool primed, int anchored, int idx,
                      Binding& bind) const {
        BlockSymbol s = sym(idx);
        switch (slot.kind) {
            case SlotKind::Ti:
                if (s.kind != BlockSymbol::Kind::T) return false;
                bind.vi = s.index;
                return true;
            case SlotKind::Tj:
                if (s.kind != BlockSymbol::Kind::T) return false;
                bind.vj = s.index;
                return true;
            case SlotKind::Tk:
                if (s.kind != BlockSymbol::Kind::T) return false;
                bind.vk = s.index;
                return true;
            case SlotKind::Tstart:
                return s.kind == BlockSymbol::Kind::T && s.index == a_.start();
            case SlotKind::Taccept:
                return s.kind == BlockSymbol::Kind::T && s.index == a_.accept();
            case SlotKind::P: return s.kind == BlockSymbol::Kind::P;
            case SlotKind::Q: return s.kind == BlockSymbol::Kind::Q;
            case SlotKind::E: return s.kind == BlockSymbol::Kind::E;
            case SlotKind::Zp:
                if (s.kind != BlockSymbol::Kind::Z) return false;
                if (bind.p != -1 && bind.p != s.index) return false;
                bind.p = s.index;
                return true;
            case SlotKind::Zp2:
                return s.kind == BlockSymbol::Kind::Z && bind.p == s.index;
            case SlotKind::Left:
            case SlotKind::Right:
                if (primed) return s.kind == BlockSymbol::Kind::B;
                return s.kind == BlockSymbol::Kind::B || s.kind == BlockSymbol::Kind::Bp;
            case SlotKind::FixedB:
                if (anchored != -1 && idx != anchored) return false;
                return s.kind == (primed ? BlockSymbol::Kind::B : BlockSymbol::Kind::Bp);
        }
        return false;
    }

    bool side_conditions(const WShape& shape, const Binding& b) const {
        auto edge = [&](int u, int v) { return u >= 0 && v >= 0 && a_.has_edge(u, v); };
        switch (shape.id) {
            case 1:
                return edge(b.vi, b.vj) && edge(b.vj, b.vk) && a_.label(b.vj).is_push() &&
                       asg_.z_index(a_.label(b.vj)) == b.p;
            case 2:
                return edge(b.vi, b.vj) && edge(b.vj, b.vk) && a_.label(b.vj).is_pop() &&
                       asg_.z_index(a_.label(b.vj)) == b.p;
            case 3:
                return edge(b.vi, b.vj) && edge(b.vj, b.vk) && a_.label(b.vj).is_epsilon();
            case 4: return edge(a_.start(), b.vk);
            case 5: return edge(b.vi, a_.accept());
        }
        return false;
    }

    bool search(const WShape& shape, bool primed, int anchored, size_t s, Binding& bind) const {
        if (s == shape.slots.size()) return side_conditions(shape, bind);
        const TemplateSlot& slot = shape.slots[s];
        int first = bind.chosen.empty() ? 0 : bind.chosen.back() + 1;
        for (int idx = first; idx < static_cast<int>(grid_.entries.size()); ++idx) {
            Binding saved = bind;
            if (!slot_accepts(slot, primed, anchored, idx, bind)) {
                bind = saved;
                continue;
            }
            // Column order must replicate the template's.
            bool ok = true;
            for (size_t t = 0; t < bind.chosen.size() && ok; ++t) {
                bool tmpl_less = shape.slots[t].col < slot.col;
                bool grid_less = grid_.entries[bind.chosen[t]].bcol < grid_.entries[idx].bcol;
                if (tmpl_less != grid_less) ok = false;
            }
            if (ok) {
                bind.chosen.push_back(idx);
                if (search(shape, primed, anchored, s + 1, bind)) return true;
                bind.chosen.pop_back();
            }
            bind = saved;
        }
        return false;
    }

    const BlockGrid& grid_;
    const Automaton& a_;
    const AlphabetAssignment& asg_;
    int flip_ = -1;
};

// Consecutive g x g windows of M equal to `target` (all offsets).
std::vector<std::pair<int, int>> find_windows(const BlockMatrix& M,
                                              const PermutationMatrix& target) {
    std::vector<std::pair<int, int>> hits;
    int size = M.size(), g = M.g();
    for (int r = 0; r + g <= size; ++r) {
        for (int c = 0; c + g <= size; ++c) {
            bool ok = true;
            for (int i = 0; i < g && ok; ++i)
                if (M.one_in_row(r + i) != c + target[i]) ok = false;
            if (ok) hits.emplace_back(r, c);
        }
    }
    return hits;
}

bool structured_f_violations(const BlockGrid& grid, const AlphabetAssignment& asg,
                             const TemplateFinder& finder,
                             std::vector<std::string>* notes) {
    bool violated = false;
    auto note = [&](const std::string& s) {
        violated = true;
        if (notes) notes->push_back(s);
    };
    int bands = 3 * grid.n + 2;

    // F1: the block-position permutation must avoid every used matrix; a hit
    // lifts to a cell-level occurrence of that matrix with a zero line.
    {
        std::vector<int> word(bands);
        for (const auto& e : grid.entries) word[e.brow - 1] = e.bcol - 1;
        std::vector<const PermutationMatrix*> used{&asg.P, &asg.Q, &asg.B, &asg.Bp, &asg.E};
        for (const auto& t : asg.T) used.push_back(&t);
        for (const auto& z : asg.Z) used.push_back(&z);
        for (size_t i = 0; i < used.size(); ++i) {
            if (perm_contains(word, used[i]->word())) {
                note("F1: block positions contain used matrix #" + std::to_string(i));
                break;
            }
        }
    }

    // F2: a B/B' with a T too far to the northeast.
    for (size_t x = 0; x < grid.entries.size(); ++x) {
        BlockSymbol sx = finder.sym(static_cast<int>(x));
        if (sx.kind != BlockSymbol::Kind::B && sx.kind != BlockSymbol::Kind::Bp) continue;
        int p = grid.entries[x].brow, q = grid.entries[x].bcol;
        for (size_t y = 0; y < grid.entries.size(); ++y) {
            BlockSymbol sy = finder.sym(static_cast<int>(y));
            if (sy.kind != BlockSymbol::Kind::T) continue;
            int u = grid.entries[y].brow, v = grid.entries[y].bcol;
            if ((u <= p - 2 && v >= q + 5) || (p >= u + 5 && v >= q + 2)) {
                note("F2: B at (" + std::to_string(p) + "," + std::to_string(q) + ") vs T at (" +
                     std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
    }

    // F3: P confined to block (<=2, <=2), Q to (>=3n+1, >=3n+1).
    for (const auto& e : grid.entries) {
        if (e.sym.kind == BlockSymbol::Kind::P && (e.brow >= 3 || e.bcol >= 3))
            note("F3: P at (" + std::to_string(e.brow) + "," + std::to_string(e.bcol) + ")");
        if (e.sym.kind == BlockSymbol::Kind::Q && (e.brow <= bands - 2 || e.bcol <= bands - 2))
            note("F3: Q at (" + std::to_string(e.brow) + "," + std::to_string(e.bcol) + ")");
    }

    // F4: any W instance.
    for (const WShape& shape : w_shapes()) {
        if (finder.find(shape, /*primed=*/false, /*anchored=*/-1)) {
            note("F4: W" + std::to_string(shape.id) + " instance present");
            break;
        }
    }

    // F5: same-class Z pairs in forbidden relative positions.
    for (size_t x = 0; x < grid.entries.size(); ++x) {
        if (grid.entries[x].sym.kind != BlockSymbol::Kind::Z) continue;
        for (size_t y = 0; y < grid.entries.size(); ++y) {
            if (grid.entries[y].sym.kind != BlockSymbol::Kind::Z) continue;
            const auto& zp = grid.entries[x];
            const auto& zq = grid.entries[y];
            if (!same_class(asg.z_labels[zp.sym.index], asg.z_labels[zq.sym.index])) continue;
            if (zp.brow < zq.brow && zp.bcol < zq.bcol) {
                // shapes with B/B' below-left of the ascending pair
                for (size_t w = 0; w < grid.entries.size(); ++w) {
                    BlockSymbol sw = finder.sym(static_cast<int>(w));
                    if (sw.kind != BlockSymbol::Kind::B && sw.kind != BlockSymbol::Kind::Bp)
                        continue;
                    if (grid.entries[w].brow > zq.brow && grid.entries[w].bcol < zp.bcol)
                        note("F5: crossing Z pair over B");
                }
            }
        }
    }
    // F5, third shape: T above-right of a same-class descending-column pair.
    for (size_t x = 0; x < grid.entries.size(); ++x) {
        if (grid.entries[x].sym.kind != BlockSymbol::Kind::T) continue;
        const auto& tj = grid.entries[x];
        for (size_t y = 0; y < grid.entries.size(); ++y) {
            if (grid.entries[y].sym.kind != BlockSymbol::Kind::Z) continue;
            for (size_t z = 0; z < grid.entries.size(); ++z) {
                if (grid.entries[z].sym.kind != BlockSymbol::Kind::Z) continue;
                const auto& zp = grid.entries[y];
                const auto& zq = grid.entries[z];
                if (!same_class(asg.z_labels[zp.sym.index], asg.z_labels[zq.sym.index])) continue;
                if (tj.brow < zp.brow && zp.brow < zq.brow && zp.bcol < zq.bcol &&
                    zq.bcol < tj.bcol)
                    note("F5: descending Z pair under T");
            }
        }
    }
    return violated;
}

}  // namespace

FixedPointReport check_fixed_point_structured(const BlockMatrix& M, const Automaton& automaton,
                                              const AlphabetAssignment& asg) {
    FixedPointReport rep;
    BlockGrid grid = block_view(M, asg);
    rep.form_ok = grid.form_ok;
    if (!rep.form_ok) {
        rep.notes = grid.anomalies;
        return rep;
    }
    TemplateFinder finder(grid, automaton, asg);
    rep.avoids_f = !structured_f_violations(grid, asg, finder, &rep.notes);
    rep.avoids_bprime = true;
    rep.contains_b = false;
    for (size_t i = 0; i < grid.entries.size(); ++i) {
        if (grid.entries[i].sym.kind == BlockSymbol::Kind::Bp) rep.avoids_bprime = false;
        if (grid.entries[i].sym.kind == BlockSymbol::Kind::B) rep.contains_b = true;
    }
    // Cross-block occurrences of B/B': one 1 per block, so the block-position
    // word must realize the matrix's pattern (simplicity rules out partial
    // sharing, and a lone block is consecutive, not cross-block).
    {
        std::vector<int> word(grid.entries.size());
        for (const auto& e : grid.entries) word[e.brow - 1] = e.bcol - 1;
        if (rep.avoids_bprime && perm_contains(word, asg.Bp.word())) {
            rep.avoids_bprime = false;
            rep.notes.push_back("B' occurs across blocks");
        }
        if (!rep.contains_b && perm_contains(word, asg.B.word())) rep.contains_b = true;
    }

    rep.all_marked = true;
    // Alignment scan: consecutive B windows off the block grid are unmarked.
    for (auto [r, c] : find_windows(M, asg.B)) {
        if (r % M.g() != 0 || c % M.g() != 0) {
            rep.all_marked = false;
            rep.notes.push_back("misaligned B window at (" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
        }
    }
    for (size_t i = 0; i < grid.entries.size() && rep.all_marked; ++i) {
        if (grid.entries[i].sym.kind != BlockSymbol::Kind::B) continue;
        bool marked = false;
        for (const WShape& shape : w_shapes()) {
            if (finder.find(shape, /*primed=*/true, static_cast<int>(i))) {
                marked = true;
                break;
            }
        }
        if (!marked) {
            rep.all_marked = false;
            rep.notes.push_back("unmarked B block at (" + std::to_string(grid.entries[i].brow) +
                                "," + std::to_string(grid.entries[i].bcol) + ")");
        }
    }
    return rep;
}

FixedPointReport check_fixed_point_generic(const BlockMatrix& M, const Automaton&,
                                           const AlphabetAssignment&,
                                           const ForbiddenBundle& bundle, long long budget) {
    FixedPointReport rep;
    rep.form_ok = true;  // generic mode has no alignment requirement
    PartialPattern host = M.to_pattern();
    MatchOptions opts;
    opts.budget = budget;

    rep.avoids_f = true;
    for (const auto& member : bundle.f) {
        MatchResult res = contains(host, member.pattern, opts);
        if (res.outcome == MatchResult::Outcome::BudgetExceeded)
            throw BudgetExceeded("generic check: budget exceeded on " + member.provenance.family,
                                 0, res.nodes);
        if (res.found()) {
            rep.avoids_f = false;
            rep.notes.push_back("contains " + member.provenance.family + " member (" +
                                member.provenance.detail + ")");
            break;
        }
    }

    auto probe = [&](const PartialPattern& p) {
        MatchResult res = contains(host, p, opts);
        if (res.outcome == MatchResult::Outcome::BudgetExceeded)
            throw BudgetExceeded("generic check: budget exceeded on B/B'", 0, res.nodes);
        return res.found();
    };
    rep.avoids_bprime = !probe(bundle.bp_pattern);
    rep.contains_b = probe(bundle.b_pattern);

    rep.all_marked = true;
    // B is recoverable from the bundle's singleton pattern.
    std::vector<int> b_word(bundle.b_pattern.rows());
    for (int r = 0; r < bundle.b_pattern.rows(); ++r) b_word[r] = bundle.b_pattern.one_in_row(r);
    const PermutationMatrix b(b_word);
    for (auto [r, c] : find_windows(M, b)) {
        bool marked = false;
        for (const auto& primed : bundle.f4_primed) {
            MatchOptions o;
            o.budget = budget;
            MatchAnchor anchor;
            anchor.pat_row0 = primed.marked_row0;
            anchor.row_count = M.g();
            anchor.host_row0 = r;
            anchor.pat_col0 = primed.marked_col0;
            anchor.col_count = M.g();
            anchor.host_col0 = c;
            o.anchor = anchor;
            MatchResult res = contains(host, primed.pattern, o);
            if (res.outcome == MatchResult::Outcome::BudgetExceeded)
                throw BudgetExceeded("generic check: budget exceeded on marked test", 0,
                                     res.nodes);
            if (res.found()) {
                marked = true;
                break;
            }
        }
        if (!marked) {
            rep.all_marked = false;
            rep.notes.push_back("unmarked B window at (" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
            break;
        }
    }
    return rep;
}

FixedPointReport is_fixed_point(const BlockMatrix& M, const Automaton& automaton,
                                const AlphabetAssignment& asg, const ForbiddenBundle& bundle,
                                CheckMode mode, long long budget) {
    switch (mode) {
        case CheckMode::Structured: return check_fixed_point_structured(M, automaton, asg);
        case CheckMode::Generic:
            return check_fixed_point_generic(M, automaton, asg, bundle, budget);
        case CheckMode::Both: {
            FixedPointReport s = check_fixed_point_structured(M, automaton, asg);
            FixedPointReport g = check_fixed_point_generic(M, automaton, asg, bundle, budget);
            if (s.avoids_f != g.avoids_f || s.avoids_bprime != g.avoids_bprime ||
                s.contains_b != g.contains_b || s.all_marked != g.all_marked)
                s.notes.push_back("structured and generic verdicts disagree");
            return s;
        }
    }
    return {};
}

bool flip_blocked(const BlockMatrix& M, const Automaton& automaton,
                  const AlphabetAssignment& asg, int brow, int bcol) {
    BlockGrid grid = block_view(M, asg);
    if (!grid.form_ok) throw std::invalid_argument("flip_blocked: matrix is not block-aligned");
    int idx = grid.row_entry[brow];
    if (idx < 0 || grid.entries[idx].bcol != bcol)
        throw std::invalid_argument("flip_blocked: no block at the given coordinates");
    BlockSymbol sym = grid.entries[idx].sym;
    if (sym.kind == BlockSymbol::Kind::Bp) return false;  // flips to B never create a W instance
    if (sym.kind != BlockSymbol::Kind::B)
        throw std::invalid_argument("flip_blocked: block is not B or B'");
    TemplateFinder finder(grid, automaton, asg);
    finder.set_flip(idx);
    for (const WShape& shape : w_shapes())
        if (finder.find(shape, /*primed=*/false, /*anchored=*/-1)) return true;
    return false;
}

PhiResult phi(const BlockMatrix& M, const Automaton& automaton, const AlphabetAssignment& asg) {
    BlockGrid grid = block_view(M, asg);
    if (!grid.form_ok) throw std::invalid_argument("phi: matrix is not block-aligned");
    std::vector<int> candidates;
    for (size_t i = 0; i < grid.entries.size(); ++i) {
        auto k = grid.entries[i].sym.kind;
        if (k == BlockSymbol::Kind::B || k == BlockSymbol::Kind::Bp)
            candidates.push_back(static_cast<int>(i));
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        const auto& ea = grid.entries[a];
        const auto& eb = grid.entries[b];
        return std::tie(ea.bcol, ea.brow) < std::tie(eb.bcol, eb.brow);
    });
    for (int idx : candidates) {
        const auto& e = grid.entries[idx];
        bool is_b = e.sym.kind == BlockSymbol::Kind::B;
        if (is_b && flip_blocked(M, automaton, asg, e.brow, e.bcol)) continue;
        std::map<std::pair<int, int>, PermutationMatrix> blocks;
        for (const auto& entry : grid.entries) {
            BlockSymbol sym = entry.sym;
            if (entry.brow == e.brow && entry.bcol == e.bcol)
                sym.kind = is_b ? BlockSymbol::Kind::Bp : BlockSymbol::Kind::B;
            blocks.insert({{entry.brow, entry.bcol}, matrix_of(sym, asg)});
        }
        PhiResult out{BlockMatrix::from_blocks(M.n(), M.g(), blocks), e.brow, e.bcol, is_b};
        return out;
    }
    throw NoUnblockedBlock();
}

std::vector<BlockMatrix> enumerate_fixed(const Automaton& automaton,
                                         const AlphabetAssignment& asg, int n,
                                         long long budget) {
    std::vector<BlockMatrix> out;
    for (const auto& path : enumerate_balanced(automaton, n, budget)) {
        RunResult rr = run_path(automaton, path);
        if (!rr.balanced()) throw std::logic_error("enumerate_fixed: enumerated path not balanced");
        BlockMatrix M = encode(automaton, asg, path, rr.involution);
        FixedPointReport rep = check_fixed_point_structured(M, automaton, asg);
        if (!rep.pass())
            throw std::logic_error("enumerate_fixed: encoded matrix failed fixed-point check");
        out.push_back(std::move(M));
    }
    return out;
}

}  // namespace stackpat
