#pragma once

#include "ddq/poly.hpp"

#include <map>
#include <vector>

namespace ddq {

struct RankKernel {
    int rank = 0;
    // Right-kernel basis, one vector per free column, in column order.
    std::vector<std::vector<Rational>> kernel;
};

// Dense matrix with exact entries. Polynomial entries are allowed for
// bookkeeping, but elimination requires constant entries.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Poly& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    ExactMatrix transpose() const;

    // Fraction-free (Bareiss) elimination for the rank; the kernel basis is
    // recovered from a reduced echelon form of the same integer rows.
    RankKernel rank_and_kernel() const;

private:
    int rows_, cols_;
    std::vector<Poly> data_;
};

// Sparse rational row reduction; returns the rank. `rows` is consumed.
// Meant for the large, very sparse systems coming from derivation kernels.
int sparse_rank(std::vector<std::map<int, Rational>> rows);

// Reduced row echelon form of sparse rational rows; returns rank and fills
// `pivot_cols` / `rref` (one row per pivot, unit pivots, cleared columns).
int sparse_rref(std::vector<std::map<int, Rational>> rows,
                std::vector<int>& pivot_cols,
                std::vector<std::map<int, Rational>>& rref);

} // namespace ddq
