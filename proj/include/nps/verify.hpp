#pragma once

// Per-shape verification sweeps: each function exhaustively checks one family
// of claims for a single partition and reports a boolean verdict. Shared by
// the `verify` CLI command and the acceptance runner, which differ only in
// how far up the n-scale they push each sweep.

#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "nps/bijections.hpp"
#include "nps/formulas.hpp"
#include "nps/nps.hpp"
#include "nps/partition.hpp"
#include "nps/statistics.hpp"
#include "nps/tableaux.hpp"

namespace nps::verify {

namespace detail {

// Skew standard fillings counted by direct backtracking; the independent
// oracle for the determinant-based skew_syt_count.
inline long skew_count_direct(const Partition& lambda, const Partition& mu) {
    const int m = lambda.size() - mu.size();
    std::vector<int> filled(lambda.rows());
    for (int i = 1; i <= lambda.rows(); ++i) filled[i - 1] = mu.part(i);
    auto rec = [&](auto&& self, int value) -> long {
        if (value > m) return 1;
        long total = 0;
        for (int i = 1; i <= lambda.rows(); ++i) {
            if (filled[i - 1] >= lambda.part(i)) continue;
            if (i > 1 && filled[i - 2] < filled[i - 1] + 1) continue;
            ++filled[i - 1];
            total += self(self, value + 1);
            --filled[i - 1];
        }
        return total;
    };
    return rec(rec, 1);
}

}  // namespace detail

// SYT enumeration agrees with the hook-length formula.
inline bool hook_length_count(const Partition& shape) {
    ExactInt count = 0;
    for_each_syt(shape, [&](const Tabloid&) { ++count; });
    return count == hook_length_formula(shape);
}

// decode(encode(T)) = T over all tabloids, and the encoding is injective.
inline bool phi_decode_encode(const Partition& shape) {
    bool ok = true;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        if (!ok) return;
        auto [hook, syt] = nps_encode(t);
        if (!seen.insert({hook.values(), syt.entries()}).second) ok = false;
        else if (nps_decode(hook, syt) != t) ok = false;
    });
    return ok;
}

// encode(decode(H,U)) = (H,U) over all pairs.
inline bool phi_encode_decode(const Partition& shape) {
    bool ok = true;
    for_each_hook_tableau(shape, [&](const HookTableau& hook) {
        if (!ok) return;
        for_each_syt(shape, [&](const Tabloid& syt) {
            if (!ok) return;
            auto pair = nps_encode(nps_decode(hook, syt));
            if (pair.first != hook || pair.second != syt) ok = false;
        });
    });
    return ok;
}

// Under the column-major order every SYT appears exactly prod-hooks times.
inline bool uniform_multiset(const Partition& shape) {
    auto hist = output_multiset(shape, CellOrder::column_major(shape));
    ExactInt syt = 0;
    for_each_syt(shape, [&](const Tabloid&) { ++syt; });
    if (ExactInt(hist.size()) != syt) return false;
    for (const auto& [u, count] : hist)
        if (!u.is_standard() || count != hook_product(shape)) return false;
    return true;
}

// Entries below k are blind to permutations of the entries >= k: exhaustive
// over all tabloids and transpositions, plus `samples` random permutations
// per k (seeded, deterministic).
inline bool invariance(const Partition& shape, int samples = 100) {
    const int n = shape.size();
    const CellOrder order = CellOrder::column_major(shape);
    std::mt19937 rng(20260826);
    for (int k = 1; k <= n; ++k) {
        bool ok = true;
        for_each_tabloid(shape, [&](const Tabloid& t) {
            if (!ok) return;
            for (int a = k; a <= n && ok; ++a)
                for (int b = a + 1; b <= n && ok; ++b) {
                    std::vector<int> pi(n);
                    for (int v = 1; v <= n; ++v) pi[v - 1] = v;
                    std::swap(pi[a - 1], pi[b - 1]);
                    if (!check_invariance(t, pi, k, order)) ok = false;
                }
        });
        if (!ok) return false;
        for (int s = 0; s < samples; ++s) {
            std::vector<int> flat(n);
            for (int v = 1; v <= n; ++v) flat[v - 1] = v;
            std::shuffle(flat.begin(), flat.end(), rng);
            Tabloid t(shape, flat);
            std::vector<int> pi(n);
            for (int v = 1; v <= n; ++v) pi[v - 1] = v;
            std::shuffle(pi.begin() + (k - 1), pi.end(), rng);
            if (!check_invariance(t, pi, k, order)) return false;
        }
    }
    return true;
}

// Signed exit numbers: closed formula and recursion against the oracle.
inline bool exit_numbers(const Partition& shape) {
    const int n = shape.size();
    const Census census = f_census(shape);
    const StatTables st = compute_stat_tables(shape);
    for (int k = 1; k < n; ++k)
        for (Cell x : shape.cells()) {
            if (delta_formula(shape, census, k, x) !=
                ExactRational(st.signed_exit[k - 1][shape.cell_index(x)]))
                return false;
            if (!delta_recursion_check(shape, census, k, x)) return false;
        }
    return true;
}

// Drop function: both closed forms against the oracle, degenerate k = 1 case
// and the row sums.
inline bool drop_function(const Partition& shape) {
    const int n = shape.size();
    const Census census = f_census(shape);
    const StatTables st = compute_stat_tables(shape);
    for (int k = 1; k <= n; ++k) {
        ExactInt rowSum = 0;
        for (Cell x : shape.cells()) {
            ExactInt oracle = st.drop[k - 1][shape.cell_index(x)];
            rowSum += oracle;
            if (drop_formula(shape, census, k, x, DropVariant::harmonic_free) != oracle)
                return false;
            if (drop_formula(shape, census, k, x, DropVariant::hook_product) != oracle)
                return false;
            if (k == 1 && oracle != factorial(n - 1)) return false;
        }
        if (rowSum != factorial(n)) return false;
    }
    return true;
}

// Exchange numbers: l-independence, closed formula, recursion and the
// weighted-exit identity.
inline bool exchange_numbers(const Partition& shape) {
    const int n = shape.size();
    const Census census = f_census(shape);
    const StatTables st = compute_stat_tables(shape);
    for (int k = 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l)
            if (st.local_exchange[k - 1][l - 1] != st.local_exchange[k - 1][n - 1])
                return false;
        if (exchange_formula(shape, census, k) != st.exchange_of(k)) return false;
        if (exchange_delta_identity(shape, census, k) != st.exchange_of(k)) return false;
        if (!exchange_recursion_check(shape, census, k)) return false;
    }
    return true;
}

// Complexity: both closed forms (full second-form limit) against the oracle.
inline bool complexity(const Partition& shape) {
    const Census census = f_census(shape);
    const ExactRational oracle = complexity_bruteforce(shape);
    return complexity_formula(shape, census, ComplexityVariant::comp1) == oracle &&
           complexity_formula(shape, census, ComplexityVariant::comp2_full) == oracle;
}

// The three summation identities on oracle tables.
inline bool summation_identities(const Partition& shape) {
    const int n = shape.size();
    const StatTables st = compute_stat_tables(shape);
    std::vector<ExactInt> eps;
    for (int k = 1; k <= n - 1; ++k) eps.push_back(st.exchange_of(k));
    return complexity_from_exchanges(shape, eps) == st.complexity &&
           complexity_from_drop1(shape, st.drop) == st.complexity &&
           complexity_from_drop2(shape, st.drop, f_census(shape)) == st.complexity;
}

// Conjugation symmetry of C, d, eps, Delta via the closed formulas only
// (no tabloid enumeration; usable one size above the oracle sweeps).
inline bool symmetry_formulas(const Partition& shape) {
    const Partition conj = shape.conjugate();
    const int n = shape.size();
    const Census census = f_census(shape);
    const Census censusConj = f_census(conj);
    if (n > 0 && complexity_formula(shape, census, ComplexityVariant::comp1) !=
                     complexity_formula(conj, censusConj, ComplexityVariant::comp1))
        return false;
    for (int k = 1; k <= n; ++k)
        for (Cell x : shape.cells()) {
            Cell xc = x.conjugated();
            if (drop_formula(shape, census, k, x, DropVariant::harmonic_free) !=
                drop_formula(conj, censusConj, k, xc, DropVariant::harmonic_free))
                return false;
            if (k < n && delta_formula(shape, census, k, x) !=
                             delta_formula(conj, censusConj, k, xc))
                return false;
        }
    for (int k = 1; k < n; ++k)
        if (exchange_formula(shape, census, k) != exchange_formula(conj, censusConj, k))
            return false;
    return true;
}

// Symmetry via formulas and oracles both.
inline bool symmetry_full(const Partition& shape) {
    return symmetry_check(shape).equal;
}

// Psi and its inverse are mutually inverse on their full domains.
inline bool psi_domains(const Partition& shape) {
    const int n = shape.size();
    for (int k = 1; k <= n; ++k)
        for (Cell x : shape.cells()) {
            for (const Tabloid& t : drop_set(shape, k, x))
                for (int l = k; l <= n; ++l) {
                    auto [hook, syt] = psi_forward(shape, k, x, {t, l});
                    if (syt.at(x) < k) return false;
                    DropWitness back = psi_inverse(shape, k, x, hook, syt);
                    if (back.tabloid != t || back.label != l) return false;
                }
            bool ok = true;
            for_each_hook_tableau(shape, [&](const HookTableau& hook) {
                if (!ok) return;
                for_each_syt(shape, [&](const Tabloid& syt) {
                    if (!ok || syt.at(x) < k) return;
                    DropWitness w = psi_inverse(shape, k, x, hook, syt);
                    auto pair = psi_forward(shape, k, x, w);
                    if (pair.first != hook || pair.second != syt) ok = false;
                });
            });
            if (!ok) return false;
        }
    return true;
}

// |T(lambda,k->x)| (n-k+1) = prod-hooks * #SYT(lambda, x >= k).
inline bool psi_cardinality(const Partition& shape) {
    const int n = shape.size();
    const StatTables st = compute_stat_tables(shape);
    for (int k = 1; k <= n; ++k)
        for (Cell x : shape.cells()) {
            ExactInt count = 0;
            for_each_syt(shape, [&](const Tabloid& u) {
                if (u.at(x) >= k) ++count;
            });
            if (st.drop[k - 1][shape.cell_index(x)] * (n - k + 1) !=
                hook_product(shape) * count)
                return false;
        }
    return true;
}

// psi maps A \ Ex bijectively onto B, with membership checked on both sides.
inline bool exchange_bijection(const Partition& shape) {
    const int n = shape.size();
    const CellOrder order = CellOrder::column_major(shape);
    for (int k = 1; k <= n; ++k) {
        std::set<std::tuple<std::vector<int>, std::vector<int>, int>> images;
        int domain = 0;
        bool ok = true;
        for_each_tabloid(shape, [&](const Tabloid& t) {
            if (!ok) return;
            SortTrace trace = nps_sort(t, order);
            Cell x = drop_cell(trace, order, k);
            int e = exchange_count(trace, k);
            for (int i = e + 1; i <= shape.cohook(x); ++i) {
                ++domain;
                BElement b = psi_exchange_forward(shape, k, t, i);
                if (b.slot < 1 || b.slot > shape.cohook(b.syt.position_of(k))) ok = false;
                images.insert({b.hook.values(), b.syt.entries(), b.slot});
                auto [back, j] = psi_exchange_inverse(shape, k, b);
                if (back != t || j != i) ok = false;
            }
        });
        if (!ok || static_cast<std::size_t>(domain) != images.size()) return false;
        int codomain = 0;
        for_each_hook_tableau(shape, [&](const HookTableau& hook) {
            if (!ok) return;
            for_each_syt(shape, [&](const Tabloid& syt) {
                if (!ok) return;
                for (int j = 1; j <= shape.cohook(syt.position_of(k)); ++j) {
                    ++codomain;
                    auto [t, i] = psi_exchange_inverse(shape, k, {hook, syt, j});
                    BElement b = psi_exchange_forward(shape, k, t, i);
                    if (b.hook != hook || b.syt != syt || b.slot != j) ok = false;
                }
            });
        });
        if (!ok || domain != codomain) return false;
    }
    return true;
}

// Ping-pong is a bijection Ex(shape,k) x labels -> Ex(conj,k) x labels,
// inverted by the conjugate-side run and terminating within |A|+|B| f-steps.
inline bool pingpong_bijection(const Partition& shape) {
    const int n = shape.size();
    const Partition conj = shape.conjugate();
    const CellOrder order = CellOrder::column_major(shape);
    for (int k = 1; k < n; ++k) {
        int sizeA = 0;
        for_each_tabloid(shape, [&](const Tabloid& t) {
            SortTrace trace = nps_sort(t, order);
            sizeA += shape.cohook(drop_cell(trace, order, k));
        });
        int sizeB = 0;
        for_each_hook_tableau(shape, [&](const HookTableau&) {
            for_each_syt(shape, [&](const Tabloid& u) {
                sizeB += shape.cohook(u.position_of(k));
            });
        });
        std::set<std::tuple<std::vector<int>, int, int, int>> image;
        int walks = 0;
        for (const ExchangeWitness& e : exchange_set(shape, k))
            for (int label = k; label <= n; ++label) {
                ++walks;
                std::vector<PingPongState> traj;
                auto [w, outLabel] = pingpong(shape, k, e, label, &traj);
                int fSteps = 0;
                for (const PingPongState& s : traj)
                    if (s.shape == conj) ++fSteps;
                if (fSteps > sizeA + sizeB) return false;
                if (outLabel < k || outLabel > n) return false;
                image.insert({w.tabloid.entries(), w.partner, w.index, outLabel});
                auto [back, backLabel] = pingpong(conj, k, w, outLabel);
                if (back.tabloid != e.tabloid || back.partner != e.partner ||
                    back.index != e.index || backLabel != label)
                    return false;
            }
        if (static_cast<std::size_t>(walks) != image.size()) return false;
        if (static_cast<std::size_t>(walks) !=
            exchange_set(conj, k).size() * (n - k + 1))
            return false;
    }
    return true;
}

// The two f-census backends agree cell by cell.
inline bool census_backends(const Partition& shape) {
    const Census a = f_census(shape, CensusBackend::enumeration);
    const Census b = f_census(shape, CensusBackend::determinant);
    const int n = shape.size();
    for (int k = 1; k <= n; ++k)
        for (Cell x : shape.cells())
            if (a.at(k, x) != b.at(k, x)) return false;
    return true;
}

// Determinant-based skew counts match direct enumeration for every
// subpartition of the shape.
inline bool skew_counts(const Partition& shape) {
    for (const Partition& mu : subpartitions(shape))
        if (skew_syt_count(shape, mu) != ExactInt(detail::skew_count_direct(shape, mu)))
            return false;
    return true;
}

}  // namespace nps::verify
