#include "ddq/matrix.hpp"

#include <algorithm>

namespace ddq {

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

// Clears denominators row by row, giving integer rows for Bareiss.
std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < m.cols(); ++c) {
            const Poly& p = m.at(r, c);
            if (!p.is_constant())
                throw std::domain_error("elimination requires constant matrix entries");
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.constant_value().get_den_mpz_t());
        }
        for (int c = 0; c < m.cols(); ++c) {
            Rational v = m.at(r, c).constant_value() * Rational(lcm);
            v.canonicalize();
            rows[r][c] = v.get_num();
        }
    }
    return rows;
}

// Classic Bareiss one-step fraction-free elimination with row/column
// pivoting; all divisions are exact.
int bareiss_rank(std::vector<std::vector<mpz_class>> a, int cols) {
    int rows = int(a.size());
    mpz_class prev = 1;
    int rank = 0;
    for (int step = 0; rank < rows && step < cols; ++step) {
        // Any nonzero entry works; take the first in column order to keep
        // the routine deterministic.
        int pr = -1, pc = -1;
        for (int c = 0; c < cols && pr < 0; ++c)
            for (int r = rank; r < rows; ++r)
                if (a[r][c] != 0) { pr = r; pc = c; break; }
        if (pr < 0) break;
        std::swap(a[rank], a[pr]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            for (int c = 0; c < cols; ++c) {
                if (c == pc) continue;
                mpz_class t = a[rank][pc] * a[r][c] - a[r][pc] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][pc] = 0;
        }
        prev = a[rank][pc];
        ++rank;
    }
    return rank;
}

} // namespace

int sparse_rref(std::vector<std::map<int, Rational>> rows,
                std::vector<int>& pivot_cols,
                std::vector<std::map<int, Rational>>& rref) {
    pivot_cols.clear();
    rref.clear();
    // Drop empty rows up front.
    std::erase_if(rows, [](const auto& r) { return r.empty(); });
    while (!rows.empty()) {
        // Shortest row first keeps fill-in low on the incidence-like systems
        // produced by the derivation constraints.
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size() ||
                (rows[i].size() == rows[best].size() &&
                 rows[i].begin()->first < rows[best].begin()->first))
                best = i;
        std::map<int, Rational> piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        int pc = piv.begin()->first;
        Rational inv = 1 / piv.begin()->second;
        for (auto& [c, v] : piv) v *= inv;
        // Clear pc from earlier pivot rows and from the remaining rows.
        auto eliminate = [&](std::map<int, Rational>& row) {
            auto it = row.find(pc);
            if (it == row.end()) return;
            Rational f = it->second;
            row.erase(it);
            for (const auto& [c, v] : piv) {
                if (c == pc) continue;
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        };
        for (auto& r : rref) eliminate(r);
        for (auto& r : rows) eliminate(r);
        std::erase_if(rows, [](const auto& r) { return r.empty(); });
        pivot_cols.push_back(pc);
        rref.push_back(std::move(piv));
    }
    // Normalize ordering of the pivot rows by pivot column.
    std::vector<size_t> order(pivot_cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return pivot_cols[x] < pivot_cols[y]; });
    std::vector<int> pcs;
    std::vector<std::map<int, Rational>> rr;
    for (size_t i : order) {
        pcs.push_back(pivot_cols[i]);
        rr.push_back(std::move(rref[i]));
    }
    pivot_cols = std::move(pcs);
    rref = std::move(rr);
    return int(pivot_cols.size());
}

int sparse_rank(std::vector<std::map<int, Rational>> rows) {
    std::vector<int> pcs;
    std::vector<std::map<int, Rational>> rr;
    return sparse_rref(std::move(rows), pcs, rr);
}

RankKernel ExactMatrix::rank_and_kernel() const {
    auto zrows = integer_rows(*this);
    RankKernel out;
    out.rank = bareiss_rank(zrows, cols_);

    std::vector<std::map<int, Rational>> rows(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (zrows[r][c] != 0) rows[r][c] = Rational(zrows[r][c]);
    std::vector<int> pivot_cols;
    std::vector<std::map<int, Rational>> rref;
    int rank2 = sparse_rref(std::move(rows), pivot_cols, rref);
    if (rank2 != out.rank)
        throw std::logic_error("rank mismatch between eliminations");

    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < rref.size(); ++i) {
            auto it = rref[i].find(free);
            if (it != rref[i].end()) v[pivot_cols[i]] = -it->second;
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace ddq
