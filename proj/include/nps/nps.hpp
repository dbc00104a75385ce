#pragma once

// The sorting engine: maximal forward slides under a cell order, full sort
// traces, the encoding bijection into hook tableau / standard Young tableau
// pairs, and its inverse.

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nps/exact.hpp"
#include "nps/partition.hpp"
#include "nps/tableaux.hpp"

namespace nps {

// One maximal forward slide: the entry cycle (k_0,...,k_r) and the cells it
// visits. A trivial slide has r = 0.
struct ForwardSlide {
    Cell cell;               // start cell x
    std::vector<int> cycle;  // k_0, k_1 < ... < k_r with k_0 > k_r
    std::vector<Cell> path;  // r+1 cells, path[0] == cell

    int length() const { return static_cast<int>(cycle.size()) - 1; }
    Cell end() const { return path.back(); }
};

struct Exchange {
    int smaller = 0;
    int larger = 0;
    Cell from;  // cell the smaller entry leaves
    Cell to;    // cell it moves to
};

// Computes the maximal forward slide at x: the sliding entry repeatedly
// swaps with the minimum of its right/bottom neighbors while that minimum
// is smaller. Mutates the tabloid in place and returns the slide record.
inline ForwardSlide apply_maximal_forward_slide(Tabloid& t, Cell x) {
    const Partition& shape = t.shape();
    shape.require(x);
    ForwardSlide s{x, {t.at(x)}, {x}};
    const int moving = s.cycle[0];
    Cell cur = x;
    while (true) {
        std::optional<Cell> best;
        for (Cell y : shape.neighbors_plus(cur))
            if (t.at(y) < moving && (!best || t.at(y) < t.at(*best))) best = y;
        if (!best) break;
        s.cycle.push_back(t.at(*best));
        s.path.push_back(*best);
        t.swap_values(moving, t.at(*best));
        cur = *best;
    }
    return s;
}

inline ForwardSlide maximal_forward_slide(const Tabloid& t, Cell x) {
    Tabloid copy = t;
    return apply_maximal_forward_slide(copy, x);
}

// (k_0,...,k_r) -> [(k_1,k_0), (k_2,k_0), ..., (k_r,k_0)] in application order.
inline std::vector<std::pair<int, int>> decompose_slide(const ForwardSlide& s) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 1; i < s.cycle.size(); ++i)
        out.emplace_back(s.cycle[i], s.cycle[0]);
    return out;
}

// Full record of one sort: slides in processing order, the intermediate
// tabloid after each processed cell (indexed by order rank; the rank of the
// order-maximal cell holds the input), and the flattened exchange list.
struct SortTrace {
    Tabloid input;
    std::vector<ForwardSlide> slides;        // processing order (decreasing rank)
    std::vector<Tabloid> intermediates;      // by order rank: T_{cell at rank}
    std::vector<Exchange> exchanges;         // chronological
    Tabloid output;

    int total_exchanges() const { return static_cast<int>(exchanges.size()); }

    const Tabloid& intermediate_at(const CellOrder& order, Cell y) const {
        return intermediates.at(order.rank(y));
    }
};

// Sorts the tabloid by maximal forward slides at each cell in decreasing
// order, starting at the precursor of the order-maximal cell.
inline SortTrace nps_sort(const Tabloid& input, const CellOrder& order) {
    if (input.shape() != order.shape())
        throw std::invalid_argument("nps_sort: order shape mismatch");
    const int n = input.size();
    SortTrace trace;
    trace.input = input;
    trace.intermediates.resize(n);
    Tabloid cur = input;
    if (n > 0) trace.intermediates[n - 1] = cur;
    for (int rank = n - 2; rank >= 0; --rank) {
        Cell x = order.at(rank);
        ForwardSlide s = apply_maximal_forward_slide(cur, x);
        for (std::size_t i = 1; i < s.cycle.size(); ++i) {
            // the smaller entry k_i moves from path[i] to path[i-1]
            trace.exchanges.push_back({s.cycle[i], s.cycle[0], s.path[i], s.path[i - 1]});
            if (s.cycle[i] >= s.cycle[0] || (i > 1 && s.cycle[i] <= s.cycle[i - 1]))
                throw std::logic_error("nps_sort: slide cycle not strictly increasing");
        }
        for (int r2 = rank; r2 < n; ++r2)
            if (!cur.sorted_at(order.at(r2)))
                throw std::logic_error("nps_sort: intermediate not sorted above current cell");
        trace.slides.push_back(std::move(s));
        trace.intermediates[rank] = cur;
    }
    trace.output = cur;
    return trace;
}

// Total number of exchanges r(T) together with the per-cell slide lengths.
inline std::pair<int, std::map<Cell, int>> sort_cost(const Tabloid& t,
                                                     const CellOrder& order) {
    SortTrace trace = nps_sort(t, order);
    std::map<Cell, int> perCell;
    perCell[order.max_cell()] = 0;
    for (const ForwardSlide& s : trace.slides) perCell[s.cell] = s.length();
    return {trace.total_exchanges(), perCell};
}

// The cell where entry k is deposited by its own forward slide: the position
// of k in the intermediate T_z with z = T^{-1}(k). The entry of the
// order-maximal cell never slides and drops at its starting cell.
inline Cell drop_cell(const SortTrace& trace, const CellOrder& order, int k) {
    Cell z = trace.input.position_of(k);
    return trace.intermediates.at(order.rank(z)).position_of(k);
}

// Number of exchanges of k with larger entries during the sort.
inline int exchange_count(const SortTrace& trace, int k) {
    int c = 0;
    for (const Exchange& e : trace.exchanges)
        if (e.smaller == k) ++c;
    return c;
}

// --- The encoding bijection -------------------------------------------------
//
// Hook recording rule, per processed cell x = (a,b) whose slide ends at
// (a',b'): H(i,b) <- H(i+1,b) - 1 for a <= i < a', then H(a',b) <- b' - b.
// All updates stay in column b; already-recorded values below a' are kept.

struct EncodeResult {
    HookTableau hook;
    Tabloid output;  // standard Young tableau
    SortTrace trace;
};

inline EncodeResult nps_encode_with_trace(const Tabloid& input) {
    const Partition& shape = input.shape();
    const CellOrder order = CellOrder::column_major(shape);
    const int n = input.size();

    // raw column-b values, bounds enforced only at the end
    std::vector<int> raw(n, 0);
    SortTrace trace;
    trace.input = input;
    trace.intermediates.resize(n);
    Tabloid cur = input;
    if (n > 0) trace.intermediates[n - 1] = cur;
    for (int rank = n - 2; rank >= 0; --rank) {
        Cell x = order.at(rank);
        ForwardSlide s = apply_maximal_forward_slide(cur, x);
        Cell e = s.end();
        for (int i = x.row; i < e.row; ++i)
            raw[shape.cell_index({i, x.col})] = raw[shape.cell_index({i + 1, x.col})] - 1;
        raw[shape.cell_index({e.row, x.col})] = e.col - x.col;
        for (std::size_t i = 1; i < s.cycle.size(); ++i)
            trace.exchanges.push_back({s.cycle[i], s.cycle[0], s.path[i], s.path[i - 1]});
        trace.slides.push_back(std::move(s));
        trace.intermediates[rank] = cur;
    }
    trace.output = cur;
    return {HookTableau(shape, std::move(raw)), trace.output, std::move(trace)};
}

inline std::pair<HookTableau, Tabloid> nps_encode(const Tabloid& input) {
    EncodeResult r = nps_encode_with_trace(input);
    return {std::move(r.hook), std::move(r.output)};
}

namespace detail {

// Backward slide undoing a forward slide that started at x and ended at e:
// the entry at e walks back to x, swapping with the larger of its top/left
// neighbors restricted to the region { (i,j) : i >= x.row, j >= x.col }.
// Returns false (leaving t untouched on failure paths only partially; the
// caller copies) if no valid step exists.
inline bool apply_backward_slide(Tabloid& t, Cell x, Cell e) {
    const Partition& shape = t.shape();
    const int moving = t.at(e);
    Cell cur = e;
    while (cur != x) {
        std::optional<Cell> best;
        Cell top{cur.row - 1, cur.col};
        Cell left{cur.row, cur.col - 1};
        if (top.row >= x.row && shape.contains(top)) best = top;
        if (left.col >= x.col && shape.contains(left) &&
            (!best || t.at(left) > t.at(*best)))
            best = left;
        if (!best) return false;
        t.swap_values(moving, t.at(*best));
        cur = *best;
    }
    return true;
}

}  // namespace detail

// Inverse of the encoding. Cells are processed in increasing column-major
// order; at each cell x = (a,b) the candidate end cells (i, b + H(i,b)) are
// read from column b, rows scanned top to bottom, H(i,b) >= 0 only. A
// candidate survives iff the un-shifted column values stay within the
// hook-tableau bounds and undoing the backward slide then re-running the
// forward slide at x reproduces the current tabloid. A locally surviving
// candidate can still dead-end a few cells later, so the selection
// backtracks; every completed branch re-encodes to exactly the input pair,
// and injectivity of the encoding makes the first one found the unique
// preimage.
inline Tabloid nps_decode(const HookTableau& hook, const Tabloid& syt) {
    const Partition& shape = hook.shape();
    if (shape != syt.shape())
        throw std::invalid_argument("nps_decode: shapes differ");
    if (!syt.is_standard())
        throw std::invalid_argument("nps_decode: second component not a standard Young tableau");
    const CellOrder order = CellOrder::column_major(shape);
    const int n = shape.size();
    const Partition conj = shape.conjugate();

    std::optional<Tabloid> result;
    auto rec = [&](auto&& self, int rank, const Tabloid& cur, const HookTableau& h) -> void {
        if (result) return;
        if (rank > n - 2) {
            for (int v : h.values())
                if (v != 0) return;  // all slides undone means no residue
            result = cur;
            return;
        }
        Cell x = order.at(rank);
        const int a = x.row, b = x.col;
        const int colBottom = conj.part(b);
        for (int i = a; i <= colBottom && !result; ++i) {
            int hv = h.at({i, b});
            if (hv < 0) continue;
            Cell e{i, b + hv};
            if (!shape.contains(e)) continue;
            // un-shift: old H(r,b) = new H(r-1,b) + 1 for a < r <= i;
            // the restored values must themselves be legal hook entries
            bool boundsOk = true;
            for (int r = i; r > a && boundsOk; --r) {
                int restored = h.at({r - 1, b}) + 1;
                boundsOk = restored >= -shape.leg({r, b}) && restored <= shape.arm({r, b});
            }
            if (!boundsOk) continue;
            Tabloid candidate = cur;
            if (!detail::apply_backward_slide(candidate, x, e)) continue;
            Tabloid redo = candidate;
            ForwardSlide s = apply_maximal_forward_slide(redo, x);
            if (s.end() != e || !(redo == cur)) continue;
            HookTableau restored = h;
            for (int r = i; r > a; --r) restored.set({r, b}, h.at({r - 1, b}) + 1);
            restored.set({a, b}, 0);
            self(self, rank + 1, candidate, restored);
        }
    };
    rec(rec, 0, syt, hook);
    if (!result)
        throw std::logic_error("nps_decode: no preimage found");
    return *result;
}

// --- Invariance (entries below k keep their trajectories) -------------------

// pi is given as the image list pi[v-1] = pi(v). Verifies pi fixes 1..k-1,
// then checks that at every processed cell the intermediates of T and
// pi o T agree on the positions of all entries < k.
inline bool check_invariance(const Tabloid& t, const std::vector<int>& pi, int k,
                             const CellOrder& order) {
    const int n = t.size();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("check_invariance: permutation size mismatch");
    for (int v = 1; v < k; ++v)
        if (pi[v - 1] != v)
            throw std::invalid_argument("check_invariance: permutation does not fix 1..k-1");
    std::vector<int> permuted(n);
    for (Cell x : t.shape().cells())
        permuted[t.shape().cell_index(x)] = pi[t.at(x) - 1];
    Tabloid tp(t.shape(), std::move(permuted));

    SortTrace a = nps_sort(t, order);
    SortTrace b = nps_sort(tp, order);
    for (int rank = 0; rank < n; ++rank)
        for (int v = 1; v < k; ++v)
            if (a.intermediates[rank].position_of(v) != b.intermediates[rank].position_of(v))
                return false;
    return true;
}

// Histogram of sort outputs over all n! tabloids of the shape.
inline std::map<Tabloid, ExactInt> output_multiset(const Partition& shape,
                                                   const CellOrder& order) {
    std::map<Tabloid, ExactInt> hist;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        ++hist[nps_sort(t, order).output];
    });
    return hist;
}

}  // namespace nps
