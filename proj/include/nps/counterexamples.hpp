#pragma once

// Searches for the two "this fails in general" witnesses: a pair of adjacent
// cells whose local exchange number is not conjugation-invariant, and a
// tableau-induced cell order whose output multiset is not uniform. Both scans
// run in increasing n, partitions in canonical (lexicographic descending)
// order, remaining arguments lexicographic, so "smallest witness" is well
// defined.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nps/exact.hpp"
#include "nps/nps.hpp"
#include "nps/partition.hpp"
#include "nps/statistics.hpp"
#include "nps/tableaux.hpp"

namespace nps {

struct LocalConjugationWitness {
    Partition shape;
    int k = 0;
    Cell x, y;
    ExactInt count;            // eps_shape(k, x, y)
    ExactInt conjugate_count;  // eps_shape'(k, x', y')
};

inline std::optional<LocalConjugationWitness>
find_local_conjugation_witness(int max_n) {
    for (int n = 2; n <= max_n; ++n)
        for (const Partition& shape : partitions_of(n)) {
            const Partition conj = shape.conjugate();
            const StatTables st = compute_stat_tables(shape);
            const StatTables stc = compute_stat_tables(conj);
            for (int k = 1; k < n; ++k)
                for (Cell x : shape.cells())
                    for (Cell y : shape.cells()) {
                        ExactInt a = st.local_exchange[k - 1][n - 1]
                                                      [shape.cell_index(x)]
                                                      [shape.cell_index(y)];
                        ExactInt b = stc.local_exchange[k - 1][n - 1]
                                                       [conj.cell_index(x.conjugated())]
                                                       [conj.cell_index(y.conjugated())];
                        if (a != b) return LocalConjugationWitness{shape, k, x, y, a, b};
                    }
        }
    return std::nullopt;
}

struct NonuniformOrderWitness {
    Partition shape;
    Tabloid order_tableau;  // the standard tableau inducing the order
    std::map<Tabloid, ExactInt> histogram;
};

inline std::optional<NonuniformOrderWitness>
find_nonuniform_order_witness(int max_n) {
    for (int n = 2; n <= max_n; ++n)
        for (const Partition& shape : partitions_of(n)) {
            std::optional<NonuniformOrderWitness> hit;
            for_each_syt(shape, [&](const Tabloid& u) {
                if (hit) return;
                auto hist = output_multiset(shape, cell_order_from_tableau(u));
                std::set<ExactInt> counts;
                for (const auto& [syt, c] : hist) counts.insert(c);
                if (counts.size() > 1) hit = NonuniformOrderWitness{shape, u, hist};
            });
            if (hit) return hit;
        }
    return std::nullopt;
}

}  // namespace nps
