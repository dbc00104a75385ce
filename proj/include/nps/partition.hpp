#pragma once

// Integer partitions (Young diagrams in matrix orientation), cells and
// their arm/leg/hook/cohook statistics, neighbor sets, and total orders
// on cells. All indices on the public surface are 1-based.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nps {

struct Cell {
    int row = 0;  // i, 1-based
    int col = 0;  // j, 1-based

    friend auto operator<=>(const Cell&, const Cell&) = default;

    Cell conjugated() const { return {col, row}; }
};

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        offsets_.resize(parts_.size() + 1, 0);
        std::partial_sum(parts_.begin(), parts_.end(), offsets_.begin() + 1);
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return offsets_.empty() ? 0 : offsets_.back(); }  // n

    // lambda_i, zero outside the diagram
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    bool contains(Cell x) const {
        return x.row >= 1 && x.col >= 1 && x.col <= part(x.row);
    }

    void require(Cell x) const {
        if (!contains(x)) throw std::out_of_range("cell not in shape");
    }

    // Flat row-major index of a cell, 0-based.
    int cell_index(Cell x) const {
        require(x);
        return offsets_[x.row - 1] + x.col - 1;
    }

    // Cells in row-major reading order.
    std::vector<Cell> cells() const {
        std::vector<Cell> cs;
        cs.reserve(size());
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= part(i); ++j) cs.push_back({i, j});
        return cs;
    }

    Partition conjugate() const {
        std::vector<int> cp;
        if (!parts_.empty()) {
            cp.resize(parts_[0], 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++cp[j];
        }
        return Partition(std::move(cp));
    }

    int arm(Cell x) const { require(x); return part(x.row) - x.col; }
    int leg(Cell x) const {
        require(x);
        int count = 0;
        for (int i = x.row + 1; part(i) >= x.col; ++i) ++count;
        return count;
    }
    int hook(Cell x) const { return arm(x) + leg(x) + 1; }
    int cohook(Cell x) const { require(x); return x.row + x.col - 2; }

    // Top and left neighbors inside the shape.
    std::vector<Cell> neighbors_minus(Cell x) const {
        require(x);
        std::vector<Cell> r;
        if (contains({x.row - 1, x.col})) r.push_back({x.row - 1, x.col});
        if (contains({x.row, x.col - 1})) r.push_back({x.row, x.col - 1});
        return r;
    }

    // Right and bottom neighbors inside the shape.
    std::vector<Cell> neighbors_plus(Cell x) const {
        require(x);
        std::vector<Cell> r;
        if (contains({x.row, x.col + 1})) r.push_back({x.row, x.col + 1});
        if (contains({x.row + 1, x.col})) r.push_back({x.row + 1, x.col});
        return r;
    }

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;
};

// mu is contained in lambda cell-wise.
inline bool is_subpartition(const Partition& mu, const Partition& lambda) {
    if (mu.rows() > lambda.rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

// A total order on the cells of a fixed shape, represented by its sorted
// cell list. Default construction via column_major gives the reverse
// lexicographic order: (i,j) before (k,l) iff j < l, or j = l and i < k.
class CellOrder {
public:
    CellOrder(Partition shape, std::vector<Cell> sorted)
        : shape_(std::move(shape)), sorted_(std::move(sorted)) {
        if (static_cast<int>(sorted_.size()) != shape_.size())
            throw std::invalid_argument("CellOrder: cell list does not cover the shape");
        rank_.assign(sorted_.size(), -1);
        for (std::size_t r = 0; r < sorted_.size(); ++r) {
            int idx = shape_.cell_index(sorted_[r]);
            if (rank_[idx] != -1)
                throw std::invalid_argument("CellOrder: duplicate cell");
            rank_[idx] = static_cast<int>(r);
        }
    }

    static CellOrder column_major(const Partition& shape) {
        std::vector<Cell> cs;
        cs.reserve(shape.size());
        const Partition conj = shape.conjugate();
        for (int j = 1; j <= conj.rows(); ++j)
            for (int i = 1; i <= conj.part(j); ++i) cs.push_back({i, j});
        return CellOrder(shape, std::move(cs));
    }

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(sorted_.size()); }
    const std::vector<Cell>& sorted_cells() const { return sorted_; }

    int rank(Cell x) const { return rank_[shape_.cell_index(x)]; }
    Cell at(int rank) const { return sorted_.at(rank); }
    bool less(Cell a, Cell b) const { return rank(a) < rank(b); }

    Cell max_cell() const {
        if (sorted_.empty()) throw std::out_of_range("CellOrder: empty shape");
        return sorted_.back();
    }
    // Cell immediately before x in the order.
    Cell precursor(Cell x) const { return sorted_.at(rank(x) - 1); }

private:
    Partition shape_;
    std::vector<Cell> sorted_;
    std::vector<int> rank_;
};

// All partitions of n, lexicographically descending: (n), ..., (1,...,1).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All mu with mu_i <= lambda_i, including () and lambda itself.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int bound) -> void {
        out.emplace_back(cur);
        if (row > lambda.rows()) return;
        int limit = std::min(bound, lambda.part(row));
        for (int p = limit; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    // enumerate by first row choice; the empty prefix is emitted once
    out.emplace_back(std::vector<int>{});
    for (int p = lambda.part(1); p >= 1; --p) {
        cur.push_back(p);
        rec(rec, 2, p);
        cur.pop_back();
    }
    return out;
}

}  // namespace nps
