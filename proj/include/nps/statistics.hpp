#pragma once

// Definitional (brute-force) computation of every statistic of the sorting
// algorithm: sort cost r(T), complexity C(lambda), the drop function
// d(k,x), local and plain exchange numbers, signed exit numbers, the
// exchange-witness set Ex(lambda,k) and per-tabloid counts e(T,k).
// Everything here sweeps all n! tabloids; these are the oracles the
// closed formulas are checked against.

#include <stdexcept>
#include <vector>

#include "nps/exact.hpp"
#include "nps/nps.hpp"
#include "nps/partition.hpp"
#include "nps/tableaux.hpp"

namespace nps {

// Dense table indexed by entry k and flat cell index.
using KCellTable = std::vector<std::vector<ExactInt>>;

// Local exchange counts indexed [k-1][l-1][from cell][to cell].
using LocalTable = std::vector<std::vector<std::vector<std::vector<ExactInt>>>>;

struct StatTables {
    Partition shape;
    KCellTable drop;                      // d(k, x)
    LocalTable local_exchange;            // eps(k, l, x, y)
    std::vector<std::vector<ExactInt>> exchange;  // eps(k, l), [k-1][l-1], k < l
    KCellTable signed_exit;               // Delta(k, x), defined for k < n
    ExactRational complexity;             // C(lambda)

    ExactInt exchange_of(int k) const {   // eps(k) := eps(k, n)
        return exchange.at(k - 1).back();
    }
};

inline KCellTable make_kcell_table(const Partition& shape) {
    return KCellTable(shape.size(), std::vector<ExactInt>(shape.size(), ExactInt(0)));
}

// One exhaustive sweep filling every table at once.
inline StatTables compute_stat_tables(const Partition& shape) {
    const int n = shape.size();
    const CellOrder order = CellOrder::column_major(shape);
    StatTables st;
    st.shape = shape;
    st.drop = make_kcell_table(shape);
    st.signed_exit = make_kcell_table(shape);
    st.local_exchange.assign(
        n, std::vector<std::vector<std::vector<ExactInt>>>(
               n, std::vector<std::vector<ExactInt>>(
                      n, std::vector<ExactInt>(n, ExactInt(0)))));
    st.exchange.assign(n, std::vector<ExactInt>(n, ExactInt(0)));
    ExactInt totalCost = 0;

    for_each_tabloid(shape, [&](const Tabloid& t) {
        SortTrace trace = nps_sort(t, order);
        totalCost += trace.total_exchanges();
        for (int k = 1; k <= n; ++k)
            ++st.drop[k - 1][shape.cell_index(drop_cell(trace, order, k))];
        for (const Exchange& e : trace.exchanges) {
            st.local_exchange[e.smaller - 1][e.larger - 1][shape.cell_index(e.from)]
                             [shape.cell_index(e.to)] += 1;
            st.exchange[e.smaller - 1][e.larger - 1] += 1;
        }
    });

    // Delta(k,x) = sum_{y in N^-(x)} eps(k,x,y) - sum_{y in N^+(x)} eps(k,y,x),
    // with eps(k,x,y) := eps(k,n,x,y).
    for (int k = 1; k < n; ++k)
        for (Cell x : shape.cells()) {
            ExactInt d = 0;
            for (Cell y : shape.neighbors_minus(x))
                d += st.local_exchange[k - 1][n - 1][shape.cell_index(x)][shape.cell_index(y)];
            for (Cell y : shape.neighbors_plus(x))
                d -= st.local_exchange[k - 1][n - 1][shape.cell_index(y)][shape.cell_index(x)];
            st.signed_exit[k - 1][shape.cell_index(x)] = d;
        }

    st.complexity = n == 0 ? ExactRational(0)
                           : make_rational(totalCost, factorial(n));
    return st;
}

inline ExactRational complexity_bruteforce(const Partition& shape) {
    if (shape.size() == 0) return 0;
    const CellOrder order = CellOrder::column_major(shape);
    ExactInt total = 0;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        total += nps_sort(t, order).total_exchanges();
    });
    return make_rational(total, factorial(shape.size()));
}

inline KCellTable drop_bruteforce(const Partition& shape) {
    return compute_stat_tables(shape).drop;
}

inline LocalTable local_exchange_bruteforce(const Partition& shape) {
    return compute_stat_tables(shape).local_exchange;
}

inline KCellTable signed_exit_bruteforce(const Partition& shape) {
    return compute_stat_tables(shape).signed_exit;
}

// One exchange of entry k with the larger entry `partner`, in the tabloid
// `tabloid`; `index` is its chronological position among k's exchanges with
// larger entries during that sort (1-based).
struct ExchangeWitness {
    Tabloid tabloid;
    int partner = 0;
    int index = 0;
};

// Ex(lambda, k) in tabloid-enumeration order, exchanges per tabloid in
// chronological order. #Ex(lambda,k) = (n-k) * eps(k).
inline std::vector<ExchangeWitness> exchange_set(const Partition& shape, int k) {
    if (k < 1 || k > shape.size())
        throw std::invalid_argument("exchange_set: k out of range");
    const CellOrder order = CellOrder::column_major(shape);
    std::vector<ExchangeWitness> out;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        SortTrace trace = nps_sort(t, order);
        int idx = 0;
        for (const Exchange& e : trace.exchanges)
            if (e.smaller == k) out.push_back({t, e.larger, ++idx});
    });
    return out;
}

// e(T,k): number of exchanges of k with larger entries during the sort;
// equals h'(drop cell of k) - h'(final cell of k).
inline int e_count(const Tabloid& t, int k) {
    const CellOrder order = CellOrder::column_major(t.shape());
    SortTrace trace = nps_sort(t, order);
    int byTrace = exchange_count(trace, k);
    int byCohook = t.shape().cohook(drop_cell(trace, order, k)) -
                   t.shape().cohook(trace.output.position_of(k));
    if (byTrace != byCohook)
        throw std::logic_error("e_count: trace count disagrees with cohook difference");
    return byTrace;
}

}  // namespace nps
