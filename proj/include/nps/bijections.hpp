#pragma once

// Constructive bijections built on the encoding: Psi between drop witnesses
// with a label and hook/SYT pairs, the induced conjugation involution on
// drop witnesses, the exchange bijection psi between A \ Ex and B, and the
// ping-pong bijection Ex(lambda,k) x {k..n} -> Ex(lambda',k) x {k..n}.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nps/nps.hpp"
#include "nps/partition.hpp"
#include "nps/statistics.hpp"
#include "nps/tableaux.hpp"

namespace nps {

// A tabloid whose sort drops k at a fixed cell, together with a label
// l in { k, ..., n }.
struct DropWitness {
    Tabloid tabloid;
    int label = 0;
};

inline bool drops_at(const Tabloid& t, int k, Cell x) {
    const CellOrder order = CellOrder::column_major(t.shape());
    return drop_cell(nps_sort(t, order), order, k) == x;
}

// All tabloids in T(lambda, k -> x), in enumeration order.
inline std::vector<Tabloid> drop_set(const Partition& shape, int k, Cell x) {
    std::vector<Tabloid> out;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        if (drops_at(t, k, x)) out.push_back(t);
    });
    return out;
}

inline Tabloid swap_entries(const Tabloid& t, int a, int b) {
    Tabloid copy = t;
    copy.swap_values(a, b);
    return copy;
}

// Psi(T, l) = Phi((k l) o T); lands in H(lambda) x SYT(lambda, x >= k).
inline std::pair<HookTableau, Tabloid> psi_forward(const Partition& shape, int k,
                                                   Cell x, const DropWitness& w) {
    const int n = shape.size();
    if (w.label < k || w.label > n)
        throw std::invalid_argument("psi_forward: label out of range");
    if (!drops_at(w.tabloid, k, x))
        throw std::invalid_argument("psi_forward: tabloid does not drop k at x");
    auto result = nps_encode(swap_entries(w.tabloid, k, w.label));
    if (result.second.at(x) < k)
        throw std::logic_error("psi_forward: output violates U(x) >= k");
    return result;
}

namespace detail {

// I(x): cells of the shape weakly to the right and below x.
inline std::vector<Cell> inner_region(const Partition& shape, Cell x) {
    std::vector<Cell> out;
    for (Cell z : shape.cells())
        if (z.row >= x.row && z.col >= x.col) out.push_back(z);
    return out;
}

inline bool region_at_least(const Tabloid& t, const std::vector<Cell>& region, int k) {
    for (Cell z : region)
        if (t.at(z) < k) return false;
    return true;
}

}  // namespace detail

// Inverse of Psi, following the constructed inverse: T := Phi^{-1}(H,U).
// If T already drops k at x the label is k. Otherwise l := T(x) when the
// intermediate T_x is >= k on all of I(x), else l := T(y) for the maximal
// cell y whose intermediate is >= k on I(x); the witness is (k l) o T.
inline DropWitness psi_inverse(const Partition& shape, int k, Cell x,
                               const HookTableau& hook, const Tabloid& syt) {
    if (syt.at(x) < k)
        throw std::invalid_argument("psi_inverse: U(x) < k");
    Tabloid t = nps_decode(hook, syt);
    const CellOrder order = CellOrder::column_major(shape);
    SortTrace trace = nps_sort(t, order);
    if (drop_cell(trace, order, k) == x) return {t, k};

    const std::vector<Cell> region = detail::inner_region(shape, x);
    int l;
    if (detail::region_at_least(trace.intermediate_at(order, x), region, k)) {
        l = t.at(x);
    } else {
        std::optional<Cell> y;
        for (int rank = shape.size() - 1; rank >= 0; --rank)
            if (detail::region_at_least(trace.intermediates[rank], region, k)) {
                y = order.at(rank);
                break;
            }
        if (!y) throw std::logic_error("psi_inverse: no admissible cell y found");
        l = t.at(*y);
    }
    return {swap_entries(t, k, l), l};
}

// The involution T(lambda,k->x) x {k..n} -> T(lambda',k->x') x {k..n}
// obtained by conjugating Psi's image and inverting on the conjugate shape.
inline DropWitness drop_involution(const Partition& shape, int k, Cell x,
                                   const DropWitness& w) {
    auto [hook, syt] = psi_forward(shape, k, x, w);
    return psi_inverse(shape.conjugate(), k, x.conjugated(),
                       hook.conjugated(), syt.conjugated());
}

// An element of B(lambda,k): a hook tableau, an SYT with U(y) = k, and a
// slot in 1..h'(y).
struct BElement {
    HookTableau hook;
    Tabloid syt;
    int slot = 0;
};

// psi: A(lambda,k) \ Ex(lambda,k) -> B(lambda,k), (T,i) -> (Phi(T), i - e(T,k)).
inline BElement psi_exchange_forward(const Partition& shape, int k,
                                     const Tabloid& t, int index) {
    const CellOrder order = CellOrder::column_major(shape);
    SortTrace trace = nps_sort(t, order);
    Cell x = drop_cell(trace, order, k);
    int e = exchange_count(trace, k);
    if (index < 1 || index > shape.cohook(x))
        throw std::invalid_argument("psi_exchange_forward: index outside 1..h'(drop cell)");
    if (index <= e)
        throw std::invalid_argument("psi_exchange_forward: element lies in Ex(lambda,k)");
    auto [hook, syt] = nps_encode(t);
    return {std::move(hook), std::move(syt), index - e};
}

// Inverse: (H,U,j) -> (Phi^{-1}(H,U), j + e(T,k)).
inline std::pair<Tabloid, int> psi_exchange_inverse(const Partition& shape, int k,
                                                    const BElement& b) {
    if (b.slot < 1 || b.slot > shape.cohook(b.syt.position_of(k)))
        throw std::invalid_argument("psi_exchange_inverse: slot outside 1..h'(cell of k)");
    Tabloid t = nps_decode(b.hook, b.syt);
    const CellOrder order = CellOrder::column_major(shape);
    SortTrace trace = nps_sort(t, order);
    return {std::move(t), b.slot + exchange_count(trace, k)};
}

// --- Ping-pong ---------------------------------------------------------------

// Intermediate state of the ping-pong walk: either an exchange witness of
// Ex(shape,k) or a B(shape,k) element, always carrying the label.
struct PingPongState {
    Partition shape;
    std::optional<ExchangeWitness> ex;  // set iff the state lies in Ex
    std::optional<BElement> b;
    int label = 0;
};

namespace detail {

// ExchangeWitness for (V, i) when i <= e(V, k): the i-th chronological
// exchange of k with a larger entry.
inline ExchangeWitness ith_exchange(const Tabloid& v, int k, int i) {
    const CellOrder order = CellOrder::column_major(v.shape());
    SortTrace trace = nps_sort(v, order);
    int idx = 0;
    for (const Exchange& e : trace.exchanges)
        if (e.smaller == k && ++idx == i) return {v, e.larger, i};
    throw std::logic_error("ith_exchange: index exceeds e(T,k)");
}

// One application of f: from an Ex- or B-state on `shape` to an Ex- or
// B-state on the conjugate shape, via iota^{-1}/psi^{-1}, the drop
// involution, and iota/psi on the other side.
inline PingPongState pingpong_f(const Partition& shape, int k, const PingPongState& s) {
    const CellOrder order = CellOrder::column_major(shape);
    Tabloid t;
    int index;
    if (s.ex) {
        t = s.ex->tabloid;
        index = s.ex->index;
    } else {
        auto [tab, i] = psi_exchange_inverse(shape, k, *s.b);
        t = std::move(tab);
        index = i;
    }
    SortTrace trace = nps_sort(t, order);
    Cell x = drop_cell(trace, order, k);

    DropWitness w = drop_involution(shape, k, x, {t, s.label});
    const Partition conj = shape.conjugate();
    const CellOrder orderConj = CellOrder::column_major(conj);
    SortTrace traceV = nps_sort(w.tabloid, orderConj);
    int eV = exchange_count(traceV, k);

    PingPongState out;
    out.shape = conj;
    out.label = w.label;
    if (index <= eV)
        out.ex = ith_exchange(w.tabloid, k, index);
    else
        out.b = psi_exchange_forward(conj, k, w.tabloid, index);
    return out;
}

}  // namespace detail

// The full walk. Starting from an exchange witness on `shape` with a label,
// alternately applies f and the conjugation g on B-elements until the
// trajectory exits into Ex(conjugate shape, k). Returns the endpoint; the
// visited states (including endpoint) are appended to *trajectory if given.
inline std::pair<ExchangeWitness, int> pingpong(const Partition& shape, int k,
                                                const ExchangeWitness& start, int label,
                                                std::vector<PingPongState>* trajectory = nullptr) {
    const int n = shape.size();
    if (label < k || label > n)
        throw std::invalid_argument("pingpong: label out of range");
    PingPongState cur{shape, start, std::nullopt, label};
    if (trajectory) trajectory->push_back(cur);
    Partition side = shape;
    while (true) {
        PingPongState next = detail::pingpong_f(side, k, cur);
        if (trajectory) trajectory->push_back(next);
        if (next.ex) return {*next.ex, next.label};
        // g: conjugate the B-element back to the starting side
        PingPongState back;
        back.shape = side;
        back.label = next.label;
        back.b = BElement{next.b->hook.conjugated(), next.b->syt.conjugated(), next.b->slot};
        cur = std::move(back);
        if (trajectory) trajectory->push_back(cur);
    }
}

}  // namespace nps
