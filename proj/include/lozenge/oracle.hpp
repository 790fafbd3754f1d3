#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "numeric.hpp"

// Brute-force tiling enumeration on the triangular lattice.  This module is
// the ground truth the formula routes are checked against, so it shares no
// code with them: everything here is plain exhaustive search.
//
// Oblique coordinates: lattice point (x, y) sits at x*(1,0) + y*(cos60, sin60).
// The hexagon with side lengths N, M, N, N, M, N (vertical mirror axis at
// x = 0... x + y = const on the slanted edges) is the vertex set
//
//   -N <= x <= N,   0 <= y <= N+M,   0 <= x+y <= N+M.
//
// Upward triangle up(x,y) has corners (x,y), (x+1,y), (x,y+1); downward
// triangle down(x,y) has corners (x+1,y), (x,y+1), (x+1,y+1).  A lozenge is a
// pair of edge-adjacent triangles.  The axis slots are the horizontal
// lozenges straddling the mirror line: slot l joins down(-1,l) and up(0,l)
// across the edge from (0,l) to (0,l+1), for l = 0 .. N+M-1.

namespace lozenge::oracle {

struct Tri {
    long x, y;
    bool up;
    friend bool operator==(const Tri&, const Tri&) = default;
};

// a lozenge as a normalized pair of triangle ids
struct Lozenge {
    int a, b;
    Lozenge(int a_, int b_) : a(std::min(a_, b_)), b(std::max(a_, b_)) {}
    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

using TilingCallback = std::function<void(const std::vector<Lozenge>&)>;

constexpr long long kDefaultBudget = 10'000'000;

class Board {
public:
    static Board hexagon(long N, long M) {
        require_sides(N, M);
        Board b(N, M);
        b.collect([&](const Tri& t) { return b.tri_in_hexagon(t); });
        return b;
    }

    // right half of the hexagon (vertices with x >= 0) with the upward
    // triangles up(0, r), r in dents, removed
    static Board dented_semihex(long N, long M, const std::vector<long>& dents) {
        require_sides(N, M);
        std::set<long> ds;
        for (long r : dents) {
            if (r < 0 || r >= N + M) throw ParameterOutOfRange("dented_semihex: dent outside the axis range");
            if (!ds.insert(r).second) throw ParameterOutOfRange("dented_semihex: duplicate dent");
        }
        Board b(N, M);
        b.collect([&](const Tri& t) {
            if (!b.tri_in_hexagon(t)) return false;
            if (t.x < 0) return false;                      // left of the mirror line
            if (t.up && t.x == 0 && ds.count(t.y)) return false;
            return true;
        });
        return b;
    }

    long side_n() const { return N_; }
    long side_m() const { return M_; }
    long num_triangles() const { return static_cast<long>(tris_.size()); }
    const std::vector<Tri>& triangles() const { return tris_; }

    int id_of(long x, long y, bool up) const {
        auto it = idx_.find(std::tuple(x, y, up));
        return it == idx_.end() ? -1 : it->second;
    }

    const std::array<int, 3>& neighbors(int id) const {
        if (id < 0 || id >= num_triangles()) throw IndexOutOfRange("Board: triangle id");
        return adj_[static_cast<size_t>(id)];
    }

    long num_axis_slots() const { return N_ + M_; }

    // the horizontal lozenge crossing the mirror line at height l
    Lozenge axis_slot(long l) const {
        int d = id_of(-1, l, false);
        int u = id_of(0, l, true);
        if (d < 0 || u < 0) throw IndexOutOfRange("axis_slot: slot " + std::to_string(l) + " not on this board");
        return Lozenge(d, u);
    }

private:
    long N_, M_;
    std::vector<Tri> tris_;
    std::map<std::tuple<long, long, bool>, int> idx_;
    std::vector<std::array<int, 3>> adj_;

    Board(long N, long M) : N_(N), M_(M) {}

    static void require_sides(long N, long M) {
        if (N < 1 || M < 0) throw ParameterOutOfRange("Board: need N >= 1, M >= 0");
    }

    bool vertex_in(long x, long y) const {
        return -N_ <= x && x <= N_ && 0 <= y && y <= N_ + M_ && 0 <= x + y && x + y <= N_ + M_;
    }
    bool tri_in_hexagon(const Tri& t) const {
        if (t.up)
            return vertex_in(t.x, t.y) && vertex_in(t.x + 1, t.y) && vertex_in(t.x, t.y + 1);
        return vertex_in(t.x + 1, t.y) && vertex_in(t.x, t.y + 1) && vertex_in(t.x + 1, t.y + 1);
    }

    void collect(const std::function<bool(const Tri&)>& keep) {
        // raster order: row by row, left to right, ups before downs
        for (long y = -1; y <= N_ + M_; ++y)
            for (long x = -N_ - 1; x <= N_; ++x)
                for (bool up : {true, false}) {
                    Tri t{x, y, up};
                    if (!keep(t)) continue;
                    idx_[std::tuple(x, y, up)] = static_cast<int>(tris_.size());
                    tris_.push_back(t);
                }
        adj_.assign(tris_.size(), {-1, -1, -1});
        for (size_t i = 0; i < tris_.size(); ++i) {
            const Tri& t = tris_[i];
            std::array<std::pair<long, long>, 3> partners;
            if (t.up)
                partners = {{{t.x, t.y}, {t.x - 1, t.y}, {t.x, t.y - 1}}};
            else
                partners = {{{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}}};
            int k = 0;
            for (auto [px, py] : partners) {
                int j = id_of(px, py, !t.up);
                if (j >= 0) adj_[i][static_cast<size_t>(k++)] = j;
            }
        }
    }
};

namespace detail {

struct Search {
    const Board& board;
    std::vector<char> covered;
    std::set<Lozenge> forbidden;
    std::vector<Lozenge> placed;
    const TilingCallback* cb;
    long long budget;
    long long nodes = 0;
    Integer count = 0;

    Search(const Board& b, long long budget_, const TilingCallback* cb_)
        : board(b), covered(static_cast<size_t>(b.num_triangles()), 0), cb(cb_), budget(budget_) {}

    void run(int from) {
        if (++nodes > budget) throw BudgetExceeded("tiling enumeration exceeded " + std::to_string(budget) + " nodes");
        int n = board.num_triangles();
        int t = from;
        while (t < n && covered[static_cast<size_t>(t)]) ++t;
        if (t == n) {
            count += 1;
            if (cb && *cb) (*cb)(placed);
            return;
        }
        for (int p : board.neighbors(t)) {
            if (p < 0 || covered[static_cast<size_t>(p)]) continue;
            Lozenge lz(t, p);
            if (forbidden.count(lz)) continue;
            covered[static_cast<size_t>(t)] = covered[static_cast<size_t>(p)] = 1;
            placed.push_back(lz);
            run(t + 1);
            placed.pop_back();
            covered[static_cast<size_t>(t)] = covered[static_cast<size_t>(p)] = 0;
        }
    }
};

} // namespace detail

// Count (and optionally visit) all perfect lozenge tilings of the board.
// `forced` lozenges are placed before the search starts; `forbidden` pairs
// are never placed.  The callback, when given, sees each complete tiling as
// the list of placed lozenges; the view is only valid during the call.
inline Integer count_tilings(const Board& board,
                             const std::vector<Lozenge>& forced = {},
                             const std::vector<Lozenge>& forbidden = {},
                             long long budget = kDefaultBudget,
                             const TilingCallback& callback = nullptr) {
    detail::Search s(board, budget, &callback);
    for (const Lozenge& lz : forbidden) s.forbidden.insert(lz);
    for (const Lozenge& lz : forced) {
        bool adjacent = false;
        for (int p : board.neighbors(lz.a)) adjacent |= (p == lz.b);
        if (!adjacent) throw ParameterOutOfRange("count_tilings: forced pair is not a lozenge");
        if (s.covered[static_cast<size_t>(lz.a)] || s.covered[static_cast<size_t>(lz.b)])
            throw ParameterOutOfRange("count_tilings: forced lozenges overlap");
        s.covered[static_cast<size_t>(lz.a)] = s.covered[static_cast<size_t>(lz.b)] = 1;
        s.placed.push_back(lz);
    }
    s.run(0);
    return s.count;
}

// all tilings of the N, M, N, N, M, N hexagon
inline Integer count_all(long N, long M, long long budget = kDefaultBudget) {
    return count_tilings(Board::hexagon(N, M), {}, {}, budget);
}

// tilings that contain the axis rhombus at slot l
inline Integer count_with_axis_rhombus(long N, long M, long l, long long budget = kDefaultBudget) {
    Board b = Board::hexagon(N, M);
    return count_tilings(b, {b.axis_slot(l)}, {}, budget);
}

// tilings whose set of occupied axis slots is contained in `slots`; every
// tiling occupies exactly N axis slots, so fewer than N allowed slots is an
// impossible request
inline Integer count_axis_subset(long N, long M, const std::vector<long>& slots, long long budget = kDefaultBudget) {
    Board b = Board::hexagon(N, M);
    std::set<long> allow(slots.begin(), slots.end());
    if (allow.size() != slots.size()) throw ParameterOutOfRange("count_axis_subset: duplicate slot");
    if (static_cast<long>(allow.size()) < N) throw SubsetTooSmall("count_axis_subset: fewer than N slots allowed");
    std::vector<Lozenge> forbidden;
    for (long l = 0; l < b.num_axis_slots(); ++l)
        if (!allow.count(l)) forbidden.push_back(b.axis_slot(l));
    return count_tilings(b, {}, forbidden, budget);
}

// tilings of the dented right half
inline Integer count_dented(long N, long M, const std::vector<long>& dents, long long budget = kDefaultBudget) {
    return count_tilings(Board::dented_semihex(N, M, dents), {}, {}, budget);
}

} // namespace lozenge::oracle
