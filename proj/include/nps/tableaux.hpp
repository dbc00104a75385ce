#pragma once

// Fillings of shapes: tabloids, standard Young tableaux and hook tableaux,
// their enumeration and conjugation, the hook-length formula, Aitken's
// determinant formula for skew counts, and the census f_lambda(k,x) of
// standard Young tableaux by the position of each entry.

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nps/exact.hpp"
#include "nps/partition.hpp"

namespace nps {

// Bijective filling of a shape with 1..n. Entries are stored flat in
// row-major order together with the inverse (value -> flat index) map.
class Tabloid {
public:
    Tabloid() = default;

    Tabloid(Partition shape, std::vector<int> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        const int n = shape_.size();
        if (static_cast<int>(entries_.size()) != n)
            throw std::invalid_argument("Tabloid: entry count does not match shape");
        pos_.assign(n, -1);
        for (int idx = 0; idx < n; ++idx) {
            int v = entries_[idx];
            if (v < 1 || v > n || pos_[v - 1] != -1)
                throw std::invalid_argument("Tabloid: entries not a bijection onto 1..n");
            pos_[v - 1] = idx;
        }
    }

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<int>& entries() const { return entries_; }

    int at(Cell x) const { return entries_[shape_.cell_index(x)]; }

    Cell position_of(int value) const {
        if (value < 1 || value > size())
            throw std::out_of_range("Tabloid: value out of range");
        int idx = pos_[value - 1];
        for (int i = 1, acc = 0; i <= shape_.rows(); ++i) {
            if (idx < acc + shape_.part(i)) return {i, idx - acc + 1};
            acc += shape_.part(i);
        }
        throw std::logic_error("Tabloid: corrupt position map");
    }

    void swap_values(int a, int b) {
        if (a == b) return;
        std::swap(entries_[pos_[a - 1]], entries_[pos_[b - 1]]);
        std::swap(pos_[a - 1], pos_[b - 1]);
    }

    bool sorted_at(Cell x) const {
        for (Cell y : shape_.neighbors_plus(x))
            if (at(x) > at(y)) return false;
        return true;
    }

    bool is_standard() const {
        for (Cell x : shape_.cells())
            if (!sorted_at(x)) return false;
        return true;
    }

    // T'(x') := T(x)
    Tabloid conjugated() const {
        Partition cs = shape_.conjugate();
        std::vector<int> ce(size());
        Tabloid out;
        for (Cell x : shape_.cells())
            ce[cs.cell_index(x.conjugated())] = at(x);
        return Tabloid(std::move(cs), std::move(ce));
    }

    friend bool operator==(const Tabloid& a, const Tabloid& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }
    friend auto operator<=>(const Tabloid& a, const Tabloid& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    Partition shape_;
    std::vector<int> entries_;
    std::vector<int> pos_;
};

// Cell-indexed integers H with -leg(x) <= H(x) <= arm(x).
class HookTableau {
public:
    HookTableau() = default;

    explicit HookTableau(Partition shape)
        : shape_(std::move(shape)), values_(shape_.size(), 0) {}

    HookTableau(Partition shape, std::vector<int> values)
        : shape_(std::move(shape)), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != shape_.size())
            throw std::invalid_argument("HookTableau: value count does not match shape");
        for (Cell x : shape_.cells()) check_bounds(x, at(x));
    }

    const Partition& shape() const { return shape_; }
    const std::vector<int>& values() const { return values_; }

    int at(Cell x) const { return values_[shape_.cell_index(x)]; }
    void set(Cell x, int v) {
        check_bounds(x, v);
        values_[shape_.cell_index(x)] = v;
    }

    // H'(x') := -H(x); bounds hold because arm and leg swap.
    HookTableau conjugated() const {
        Partition cs = shape_.conjugate();
        HookTableau out(cs);
        for (Cell x : shape_.cells()) out.set(x.conjugated(), -at(x));
        return out;
    }

    friend bool operator==(const HookTableau& a, const HookTableau& b) {
        return a.shape_ == b.shape_ && a.values_ == b.values_;
    }

private:
    void check_bounds(Cell x, int v) const {
        if (v < -shape_.leg(x) || v > shape_.arm(x))
            throw std::invalid_argument("HookTableau: value out of [-leg, arm] at cell (" +
                                        std::to_string(x.row) + "," + std::to_string(x.col) + ")");
    }

    Partition shape_;
    std::vector<int> values_;
};

// The order <_U induced by a standard Young tableau U: x before y iff
// U(x) < U(y). For the column-major standard filling this coincides with
// the reverse lexicographic order.
inline CellOrder cell_order_from_tableau(const Tabloid& u) {
    if (!u.is_standard())
        throw std::invalid_argument("cell_order_from_tableau: not a standard Young tableau");
    std::vector<Cell> sorted;
    sorted.reserve(u.size());
    for (int v = 1; v <= u.size(); ++v) sorted.push_back(u.position_of(v));
    return CellOrder(u.shape(), std::move(sorted));
}

// Visits each of the n! tabloids of the shape exactly once.
template <class F>
void for_each_tabloid(const Partition& shape, F&& visit) {
    std::vector<int> entries(shape.size());
    for (int i = 0; i < shape.size(); ++i) entries[i] = i + 1;
    do {
        visit(Tabloid(shape, entries));
    } while (std::next_permutation(entries.begin(), entries.end()));
}

// Visits every standard Young tableau of the shape exactly once, by
// placing 1..n in increasing order at addable corners.
template <class F>
void for_each_syt(const Partition& shape, F&& visit) {
    const int n = shape.size();
    std::vector<int> entries(n, 0);
    std::vector<int> filled(shape.rows(), 0);  // cells filled per row
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            visit(Tabloid(shape, entries));
            return;
        }
        for (int i = 1; i <= shape.rows(); ++i) {
            bool addable = filled[i - 1] < shape.part(i) &&
                           (i == 1 || filled[i - 2] > filled[i - 1]);
            if (!addable) continue;
            Cell x{i, filled[i - 1] + 1};
            entries[shape.cell_index(x)] = value;
            ++filled[i - 1];
            self(self, value + 1);
            --filled[i - 1];
        }
    };
    rec(rec, 1);
}

// Visits every hook tableau of the shape exactly once (odometer over the
// per-cell ranges [-leg, arm]).
template <class F>
void for_each_hook_tableau(const Partition& shape, F&& visit) {
    const auto cells = shape.cells();
    std::vector<int> lo, hi;
    for (Cell x : cells) {
        lo.push_back(-shape.leg(x));
        hi.push_back(shape.arm(x));
    }
    std::vector<int> vals = lo;
    while (true) {
        visit(HookTableau(shape, vals));
        std::size_t i = 0;
        while (i < vals.size() && vals[i] == hi[i]) vals[i] = lo[i], ++i;
        if (i == vals.size()) break;
        ++vals[i];
    }
}

inline ExactInt hook_product(const Partition& shape) {
    ExactInt p = 1;
    for (Cell x : shape.cells()) p *= shape.hook(x);
    return p;
}

// f_lambda = n! / prod of hooks; the division is exact.
inline ExactInt hook_length_formula(const Partition& shape) {
    if (shape.size() == 0) return 1;
    ExactInt num = factorial(shape.size());
    ExactInt den = hook_product(shape);
    ExactInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("hook_length_formula: division not exact");
    return q;
}

// Number of standard fillings of the skew shape lambda/mu via Aitken's
// determinant: m! * det( 1 / ((lambda_i - i) - (mu_j - j))! ) with the
// convention 1/t! = 0 for t < 0.
inline ExactInt skew_syt_count(const Partition& lambda, const Partition& mu) {
    if (!is_subpartition(mu, lambda))
        throw std::invalid_argument("skew_syt_count: mu is not contained in lambda");
    const int r = lambda.rows();
    const int m = lambda.size() - mu.size();
    std::vector<std::vector<ExactRational>> mat(r, std::vector<ExactRational>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int t = (lambda.part(i) - i) - (mu.part(j) - j);
            mat[i - 1][j - 1] = t < 0 ? ExactRational(0) : make_rational(1, factorial(t));
        }
    return to_integer(ExactRational(factorial(m)) * det_rational(mat));
}

// Table of f_lambda(k, x) = #{ SYT T : T(x) = k }, indexed [k-1][cell].
struct Census {
    Partition shape;
    std::vector<std::vector<ExactInt>> table;

    const ExactInt& at(int k, Cell x) const {
        return table.at(k - 1).at(shape.cell_index(x));
    }
};

enum class CensusBackend { enumeration, determinant };

inline Census f_census(const Partition& shape,
                       CensusBackend backend = CensusBackend::determinant) {
    const int n = shape.size();
    Census c{shape, std::vector<std::vector<ExactInt>>(
                        n, std::vector<ExactInt>(n, ExactInt(0)))};
    if (backend == CensusBackend::enumeration) {
        for_each_syt(shape, [&](const Tabloid& t) {
            for (int k = 1; k <= n; ++k)
                ++c.table[k - 1][shape.cell_index(t.position_of(k))];
        });
        return c;
    }
    // Entries below k form an SYT of shape mu (|mu| = k-1, mu + x inside
    // lambda), entries above k a skew SYT of lambda/(mu + x).
    for (const Partition& mu : subpartitions(shape)) {
        const int k = mu.size() + 1;
        if (k > n) continue;
        ExactInt f_mu = hook_length_formula(mu);
        for (int i = 1; i <= mu.rows() + 1; ++i) {
            Cell x{i, mu.part(i) + 1};
            if (!shape.contains(x)) continue;
            if (i > 1 && mu.part(i - 1) < x.col) continue;  // not an addable corner
            std::vector<int> extended(mu.parts());
            if (i <= mu.rows())
                extended[i - 1] += 1;
            else
                extended.push_back(1);
            c.table[k - 1][shape.cell_index(x)] +=
                f_mu * skew_syt_count(shape, Partition(extended));
        }
    }
    return c;
}

}  // namespace nps
