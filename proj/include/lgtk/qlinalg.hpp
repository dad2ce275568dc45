#pragma once

#include <optional>
#include <vector>

#include "lgtk/gaussian_rational.hpp"

namespace lgtk {

// Dense exact matrix over Q(i) with Gauss-Jordan elimination. Pivot choice is
// "first nonzero", which is deterministic and fine for exact arithmetic.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
        return m;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && at(p, col).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            GaussianRational inv = GaussianRational(1) / at(row, col);
            for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                GaussianRational f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        QMatrix copy = *this;
        return copy.rref().size();
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        QMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> data_;
};

// Basis of the null space of A, one vector per free column, in ascending
// free-column order with the free coordinate set to 1.
inline std::vector<std::vector<GaussianRational>> kernel_basis(const QMatrix& a) {
    QMatrix r = a;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<GaussianRational> v(a.cols());
        v[f] = GaussianRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SolveResult {
    std::vector<GaussianRational> solution;  // free variables set to 0
    bool unique;
};

// Solves A x = b exactly; empty optional when inconsistent.
inline std::optional<SolveResult> solve(const QMatrix& a, const std::vector<GaussianRational>& b) {
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    SolveResult res;
    res.solution.assign(a.cols(), GaussianRational());
    for (std::size_t k = 0; k < pivots.size(); ++k) res.solution[pivots[k]] = aug.at(k, a.cols());
    res.unique = pivots.size() == a.cols();
    return res;
}

}  // namespace lgtk
