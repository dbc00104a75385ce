#pragma once

// Exact evaluation of the closed formulas and recursions for the signed
// exit numbers, the drop function, the exchange numbers and the complexity,
// all in terms of the census f_lambda(k,x). Formula evaluation never
// re-enumerates tabloids; equality against the brute-force oracles is the
// job of the verification suites.

#include <stdexcept>
#include <string>
#include <vector>

#include "nps/exact.hpp"
#include "nps/partition.hpp"
#include "nps/statistics.hpp"
#include "nps/tableaux.hpp"

namespace nps {

struct FormulaReport {
    Partition shape;
    std::string formula;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

// Delta(k,x) = n!/((n-k)(n-k+1)) * (1 - (f(k,x)/f)(n-k+1) - sum_{l<k} f(l,x)/f).
// Integer-valued; k = n is outside the recursion's domain.
inline ExactRational delta_formula(const Partition& shape, const Census& census,
                                   int k, Cell x) {
    const int n = shape.size();
    if (k < 1 || k >= n)
        throw std::invalid_argument("delta_formula: requires 1 <= k < n");
    ExactInt f = hook_length_formula(shape);
    ExactRational inner = 1;
    inner -= make_rational(census.at(k, x) * (n - k + 1), f);
    for (int l = 1; l < k; ++l) inner -= make_rational(census.at(l, x), f);
    ExactRational value =
        make_rational(factorial(n), ExactInt(n - k) * (n - k + 1)) * inner;
    if (!is_integral(value))
        throw std::logic_error("delta_formula: non-integral value");
    return value;
}

// (n-k) Delta(k,x) = (n-1)! - n! f(k,x)/f + sum_{l<k} Delta(l,x), evaluated
// with formula values on both sides.
inline bool delta_recursion_check(const Partition& shape, const Census& census,
                                  int k, Cell x) {
    const int n = shape.size();
    if (k < 1 || k >= n)
        throw std::invalid_argument("delta_recursion_check: requires 1 <= k < n");
    ExactRational lhs = ExactRational(n - k) * delta_formula(shape, census, k, x);
    ExactRational rhs = factorial(n - 1);
    rhs -= make_rational(factorial(n) * census.at(k, x), hook_length_formula(shape));
    for (int l = 1; l < k; ++l) rhs += delta_formula(shape, census, l, x);
    return lhs == rhs;
}

enum class DropVariant { harmonic_free, hook_product };

// d(k,x) as n!/(n-k+1) (1 - sum_{l<k} f(l,x)/f), or equivalently as
// (prod hooks)/(n-k+1) * sum_{l>=k} f(l,x).
inline ExactInt drop_formula(const Partition& shape, const Census& census,
                             int k, Cell x, DropVariant variant) {
    const int n = shape.size();
    if (k < 1 || k > n) throw std::invalid_argument("drop_formula: k out of range");
    ExactRational value;
    if (variant == DropVariant::harmonic_free) {
        ExactInt f = hook_length_formula(shape);
        ExactRational inner = 1;
        for (int l = 1; l < k; ++l) inner -= make_rational(census.at(l, x), f);
        value = make_rational(factorial(n), n - k + 1) * inner;
    } else {
        ExactInt sum = 0;
        for (int l = k; l <= n; ++l) sum += census.at(l, x);
        value = make_rational(hook_product(shape) * sum, n - k + 1);
    }
    return to_integer(value);
}

// eps(k) by the closed formula: the exit-number summand weighted by h'(x).
inline ExactInt exchange_formula(const Partition& shape, const Census& census, int k) {
    const int n = shape.size();
    if (k < 1 || k >= n)
        throw std::invalid_argument("exchange_formula: requires 1 <= k < n");
    ExactInt f = hook_length_formula(shape);
    ExactRational sum = 0;
    for (Cell x : shape.cells()) {
        ExactRational inner = 1;
        inner -= make_rational(census.at(k, x) * (n - k + 1), f);
        for (int l = 1; l < k; ++l) inner -= make_rational(census.at(l, x), f);
        sum += ExactRational(shape.cohook(x)) * inner;
    }
    return to_integer(make_rational(factorial(n), ExactInt(n - k) * (n - k + 1)) * sum);
}

// eps(k) = sum_x h'(x) Delta(k,x), with formula Deltas.
inline ExactInt exchange_delta_identity(const Partition& shape, const Census& census,
                                        int k) {
    ExactRational sum = 0;
    for (Cell x : shape.cells())
        sum += ExactRational(shape.cohook(x)) * delta_formula(shape, census, k, x);
    return to_integer(sum);
}

// (n-k) eps(k) = (n-1)! sum_x h'(x) + sum_{l<k} eps(l) - n!/f sum_x h'(x) f(k,x).
inline bool exchange_recursion_check(const Partition& shape, const Census& census,
                                     int k) {
    const int n = shape.size();
    ExactRational lhs = ExactRational(n - k) * ExactRational(exchange_formula(shape, census, k));
    ExactInt cohookSum = 0;
    ExactInt weighted = 0;
    for (Cell x : shape.cells()) {
        cohookSum += shape.cohook(x);
        weighted += ExactInt(shape.cohook(x)) * census.at(k, x);
    }
    ExactRational rhs = ExactRational(factorial(n - 1) * cohookSum);
    for (int l = 1; l < k; ++l) rhs += ExactRational(exchange_formula(shape, census, l));
    rhs -= make_rational(factorial(n) * weighted, hook_length_formula(shape));
    return lhs == rhs;
}

enum class ComplexityVariant {
    comp1,
    comp2_full,       // inner sum up to k = n
    comp2_truncated,  // inner sum stopping at k = n-1; provably off, kept for reference
};

inline ExactRational complexity_formula(const Partition& shape, const Census& census,
                                        ComplexityVariant variant) {
    const int n = shape.size();
    if (n == 0) return 0;
    ExactInt f = hook_length_formula(shape);
    if (variant == ComplexityVariant::comp1) {
        ExactInt binomSum = 0;
        const Partition conj = shape.conjugate();
        for (int p : shape.parts()) binomSum += binomial(p, 2);
        for (int p : conj.parts()) binomSum += binomial(p, 2);
        ExactRational value = ExactRational(binomSum) * (harmonic(n) - 1);
        for (Cell x : shape.cells())
            for (int k = 1; k <= n - 1; ++k)
                value -= make_rational(ExactInt(shape.cohook(x)) * census.at(k, x), f) *
                         harmonic(n - k);
        return value;
    }
    const int kMax = variant == ComplexityVariant::comp2_full ? n : n - 1;
    ExactRational value = 0;
    for (Cell x : shape.cells())
        for (int k = 1; k <= kMax; ++k)
            value += make_rational(ExactInt(shape.cohook(x)) * census.at(k, x), f) *
                     (harmonic(n) - harmonic(n - k) - 1);
    return value;
}

// --- The three summation identities tying statistics to the complexity ------

// C = (1/n!) sum_k (n-k) eps(k), from an exchange vector eps(k), k = 1..n-1.
inline ExactRational complexity_from_exchanges(const Partition& shape,
                                               const std::vector<ExactInt>& eps) {
    const int n = shape.size();
    ExactRational sum = 0;
    for (int k = 1; k <= n - 1; ++k) sum += ExactRational(ExactInt(n - k) * eps.at(k - 1));
    return n == 0 ? ExactRational(0) : sum / ExactRational(factorial(n));
}

// C = (1/n!) sum_x sum_k h'(x) (d(k,x) - (n-1)!).
inline ExactRational complexity_from_drop1(const Partition& shape, const KCellTable& drop) {
    const int n = shape.size();
    if (n == 0) return 0;
    ExactRational sum = 0;
    for (Cell x : shape.cells())
        for (int k = 1; k <= n; ++k)
            sum += ExactRational(ExactInt(shape.cohook(x)) *
                                 (drop[k - 1][shape.cell_index(x)] - factorial(n - 1)));
    return sum / ExactRational(factorial(n));
}

// C = (1/n!) sum_x sum_k h'(x) (d(k,x) - n! f(k,x)/f).
inline ExactRational complexity_from_drop2(const Partition& shape, const KCellTable& drop,
                                           const Census& census) {
    const int n = shape.size();
    if (n == 0) return 0;
    ExactInt f = hook_length_formula(shape);
    ExactRational sum = 0;
    for (Cell x : shape.cells())
        for (int k = 1; k <= n; ++k) {
            ExactRational term = ExactRational(drop[k - 1][shape.cell_index(x)]);
            term -= make_rational(factorial(n) * census.at(k, x), f);
            sum += ExactRational(shape.cohook(x)) * term;
        }
    return sum / ExactRational(factorial(n));
}

// Aggregate symmetry report: compares C, d, eps and Delta between lambda and
// its conjugate, via formulas and via oracles, and reports the verdict.
inline FormulaReport symmetry_check(const Partition& shape) {
    const Partition conj = shape.conjugate();
    const int n = shape.size();
    const Census census = f_census(shape);
    const Census censusConj = f_census(conj);
    const StatTables st = compute_stat_tables(shape);
    const StatTables stConj = compute_stat_tables(conj);

    bool ok = st.complexity == stConj.complexity;
    if (n > 0)
        ok = ok && complexity_formula(shape, census, ComplexityVariant::comp1) ==
                       complexity_formula(conj, censusConj, ComplexityVariant::comp1);
    for (int k = 1; k <= n && ok; ++k)
        for (Cell x : shape.cells()) {
            Cell xc = x.conjugated();
            if (st.drop[k - 1][shape.cell_index(x)] !=
                    stConj.drop[k - 1][conj.cell_index(xc)] ||
                drop_formula(shape, census, k, x, DropVariant::harmonic_free) !=
                    drop_formula(conj, censusConj, k, xc, DropVariant::harmonic_free)) {
                ok = false;
                break;
            }
            if (k < n &&
                (st.signed_exit[k - 1][shape.cell_index(x)] !=
                     stConj.signed_exit[k - 1][conj.cell_index(xc)] ||
                 delta_formula(shape, census, k, x) !=
                     delta_formula(conj, censusConj, k, xc))) {
                ok = false;
                break;
            }
        }
    for (int k = 1; k < n && ok; ++k)
        ok = st.exchange_of(k) == stConj.exchange_of(k) &&
             exchange_formula(shape, census, k) == exchange_formula(conj, censusConj, k);

    FormulaReport r;
    r.shape = shape;
    r.formula = "symmetry";
    r.lhs = to_string(st.complexity);
    r.rhs = to_string(stConj.complexity);
    r.equal = ok;
    return r;
}

}  // namespace nps
