#include "stackpat/blockmatrix.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace stackpat {

BlockMatrix::BlockMatrix(int n, int g, std::vector<std::pair<int, int>> ones)
    : n_(n), g_(g), ones_(std::move(ones)) {
    std::sort(ones_.begin(), ones_.end());
    row_one_.assign(size(), -1);
    for (auto [r, c] : ones_) {
        if (r < 0 || c < 0 || r >= size() || c >= size())
            throw std::invalid_argument("block matrix cell out of range");
        if (row_one_[r] != -1) throw std::invalid_argument("two 1s in one row");
        row_one_[r] = c;
    }
}

PartialPattern BlockMatrix::to_pattern() const { return PartialPattern(size(), size(), ones_); }

bool BlockMatrix::is_permutation() const {
    if (static_cast<int>(ones_.size()) != size()) return false;
    std::vector<char> col(size(), 0);
    for (auto [r, c] : ones_) {
        if (col[c]) return false;
        col[c] = 1;
    }
    return true;
}

std::string BlockMatrix::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["g"] = g_;
    j["ones"] = nlohmann::json::array();
    for (auto [r, c] : ones_) j["ones"].push_back({r + 1, c + 1});
    return j.dump();
}

BlockMatrix BlockMatrix::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> ones;
    for (const auto& cell : j.at("ones"))
        ones.emplace_back(cell[0].get<int>() - 1, cell[1].get<int>() - 1);
    return BlockMatrix(j.at("n").get<int>(), j.at("g").get<int>(), std::move(ones));
}

BlockMatrix BlockMatrix::from_blocks(
    int n, int g, const std::map<std::pair<int, int>, PermutationMatrix>& blocks) {
    std::vector<std::pair<int, int>> ones;
    for (const auto& [pos, m] : blocks) {
        auto [br, bc] = pos;
        for (int r = 0; r < g; ++r)
            ones.emplace_back((br - 1) * g + r, (bc - 1) * g + m[r]);
    }
    return BlockMatrix(n, g, std::move(ones));
}

std::string BlockSymbol::name() const {
    switch (kind) {
        case Kind::P: return "P";
        case Kind::Q: return "Q";
        case Kind::B: return "B";
        case Kind::Bp: return "B'";
        case Kind::E: return "E";
        case Kind::T: return "T" + std::to_string(index + 1);
        case Kind::Z: return "Z" + std::to_string(index + 1);
        case Kind::Other: return "?";
    }
    return "?";
}

BlockGrid block_view(const BlockMatrix& M, const AlphabetAssignment& asg) {
    BlockGrid grid;
    grid.n = M.n();
    grid.g = M.g();
    int bands = M.bands();
    int g = M.g();
    grid.row_entry.assign(bands + 1, -1);
    grid.col_entry.assign(bands + 1, -1);

    auto classify = [&](const std::vector<int>& word) -> BlockSymbol {
        PermutationMatrix pm(word);
        if (pm == asg.P) return {BlockSymbol::Kind::P, 0};
        if (pm == asg.Q) return {BlockSymbol::Kind::Q, 0};
        if (pm == asg.B) return {BlockSymbol::Kind::B, 0};
        if (pm == asg.Bp) return {BlockSymbol::Kind::Bp, 0};
        if (pm == asg.E) return {BlockSymbol::Kind::E, 0};
        for (size_t i = 0; i < asg.T.size(); ++i)
            if (pm == asg.T[i]) return {BlockSymbol::Kind::T, static_cast<int>(i)};
        for (size_t p = 0; p < asg.Z.size(); ++p)
            if (pm == asg.Z[p]) return {BlockSymbol::Kind::Z, static_cast<int>(p)};
        return {BlockSymbol::Kind::Other, 0};
    };

    for (int br = 1; br <= bands; ++br) {
        // Collect the band's cells; they must fill one aligned block.
        int bcol = -1;
        std::vector<int> word(g, -1);
        bool ok = true;
        for (int r = 0; r < g && ok; ++r) {
            int c = M.one_in_row((br - 1) * g + r);
            if (c == -1) {
                ok = false;
                grid.anomalies.push_back("band row " + std::to_string(br) + " has an empty row");
                break;
            }
            int bc = c / g + 1;
            if (bcol == -1) bcol = bc;
            if (bc != bcol) {
                ok = false;
                grid.anomalies.push_back("band row " + std::to_string(br) +
                                         " straddles two block columns");
                break;
            }
            word[r] = c - (bcol - 1) * g;
        }
        if (!ok) continue;
        BlockSymbol sym = classify(word);
        if (sym.kind == BlockSymbol::Kind::Other)
            grid.anomalies.push_back("band row " + std::to_string(br) +
                                     " holds an unrecognized block");
        if (grid.col_entry[bcol] != -1) {
            grid.anomalies.push_back("block column " + std::to_string(bcol) + " used twice");
            continue;
        }
        grid.row_entry[br] = static_cast<int>(grid.entries.size());
        grid.col_entry[bcol] = static_cast<int>(grid.entries.size());
        grid.entries.push_back({br, bcol, sym});
    }
    grid.form_ok = grid.anomalies.empty() && static_cast<int>(grid.entries.size()) == bands;
    return grid;
}

BlockMatrix encode(const Automaton& automaton, const AlphabetAssignment& asg,
                   const std::vector<int>& path, const std::vector<int>& pi) {
    int n = static_cast<int>(path.size());
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("encode: pi must have one value per path vertex");
    std::map<std::pair<int, int>, PermutationMatrix> blocks;
    std::map<int, int> col_used;  // block col -> block row
    auto put = [&](int br, int bc, const PermutationMatrix& m) {
        if (blocks.count({br, bc}) || col_used.count(bc) ||
            std::any_of(blocks.begin(), blocks.end(),
                        [&](const auto& kv) { return kv.first.first == br; }))
            throw EncodeCollision(br, bc);
        blocks.insert({{br, bc}, m});
        col_used[bc] = br;
    };
    put(2, 2, asg.P);
    put(3 * n + 1, 3 * n + 1, asg.Q);
    for (int i = 1; i <= n; ++i) {
        put(3 * i + 2, 3 * i - 2, asg.B);
        put(3 * i - 2, 3 * i + 2, asg.T[path[i - 1]]);
        const StackLabel& l = automaton.label(path[i - 1]);
        int j = pi[i - 1];
        if (j < 1 || j > n) throw std::invalid_argument("encode: pi value out of range");
        if (l.is_epsilon()) {
            put(3 * i, 3 * j, asg.E);
        } else {
            int z = asg.z_index(l);
            if (z < 0) throw std::invalid_argument("encode: vertex symbol missing from assignment");
            put(3 * i, 3 * j, asg.Z[z]);
        }
    }
    return BlockMatrix::from_blocks(n, asg.g, blocks);
}

std::string pretty_block_grid(const BlockGrid& grid) {
    int bands = 3 * grid.n + 2;
    size_t width = 1;
    for (const auto& e : grid.entries) width = std::max(width, e.sym.name().size());
    std::ostringstream os;
    for (int br = 1; br <= bands; ++br) {
        const BlockGrid::Entry* e = grid.at_row(br);
        for (int bc = 1; bc <= bands; ++bc) {
            std::string cell = (e && e->bcol == bc) ? e->sym.name() : ".";
            os << cell << std::string(width + 1 - cell.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace stackpat
