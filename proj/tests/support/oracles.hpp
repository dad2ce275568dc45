#pragma once

// Brute-force reference computations used to cross-check the library. These
// deliberately avoid the Groebner and truncation machinery under test: every
// dimension here comes from plain rank computations on explicit
// degree-bounded coefficient matrices.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lgtk/matrix_factorization.hpp"
#include "lgtk/qlinalg.hpp"

namespace oracles {

using lgtk::Exponents;
using lgtk::GaussianRational;
using lgtk::MatrixFactorization;
using lgtk::Polynomial;
using lgtk::QMatrix;

inline void list_monomials(int nvars, int var, int remaining, Exponents& cur,
                           std::vector<Exponents>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[static_cast<std::size_t>(var)] = e;
        list_monomials(nvars, var + 1, remaining - e, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

// All monomials of total degree <= bound, in a fixed recursive order.
inline std::vector<Exponents> monomials_up_to(int nvars, int bound) {
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(nvars), 0);
    list_monomials(nvars, 0, bound, cur, out);
    return out;
}

// Number of monomials of total degree <= window that stay linearly
// independent in C[x]/(gens) when ideal membership is certified by multiples
// m*g of total degree <= span_bound. Products above the window are kept: an
// ideal element of low degree may only arise by cancellation between
// higher-degree products, so the span bound has to grow past the window.
inline std::size_t window_dimension(const std::vector<Polynomial>& gens, int nvars, int window,
                                    int span_bound) {
    std::vector<Exponents> monos = monomials_up_to(nvars, span_bound);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
    std::vector<std::vector<GaussianRational>> rows;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (dg > span_bound) continue;
        for (const Exponents& m : monomials_up_to(nvars, span_bound - dg)) {
            Polynomial prod = Polynomial::monomial(nvars, m, GaussianRational(1)) * g;
            std::vector<GaussianRational> row(monos.size());
            for (const auto& [e, c] : prod.terms()) row[index.at(e)] = c;
            rows.push_back(std::move(row));
        }
    }
    std::vector<Exponents> win = monomials_up_to(nvars, window);
    QMatrix ideal_rows(rows.size(), monos.size());
    QMatrix stacked(rows.size() + win.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) {
            ideal_rows.at(r, c) = rows[r][c];
            stacked.at(r, c) = rows[r][c];
        }
    for (std::size_t r = 0; r < win.size(); ++r)
        stacked.at(rows.size() + r, index.at(win[r])) = GaussianRational(1);
    return stacked.rank() - ideal_rows.rank();
}

// Stabilized quotient dimension, or nothing when the dimension keeps growing
// up to the cap (infinite-dimensional quotient). For each window the span
// bound is grown until the count settles, then the window itself is grown.
inline std::optional<std::size_t> stabilized_quotient_dimension(const std::vector<Polynomial>& gens,
                                                               int nvars, int cap = 12) {
    std::size_t prev = 0;
    int same = 0;
    for (int window = 1; window <= cap; ++window) {
        std::optional<std::size_t> settled;
        std::size_t span_prev = 0;
        int span_same = 0;
        for (int span = window; span <= window + 8; ++span) {
            std::size_t dim = window_dimension(gens, nvars, window, span);
            if (span > window && dim == span_prev) {
                if (++span_same >= 2) {
                    settled = dim;
                    break;
                }
            } else {
                span_same = 0;
            }
            span_prev = dim;
        }
        if (!settled) return std::nullopt;
        if (window > 1 && *settled == prev) {
            if (++same >= 3) return prev;
        } else {
            same = 0;
        }
        prev = *settled;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> milnor_number_brute_force(const Polynomial& w, int cap = 18) {
    std::vector<Polynomial> partials;
    for (int k = 0; k < w.num_vars(); ++k) partials.push_back(w.derivative(k));
    return stabilized_quotient_dimension(partials, w.num_vars(), cap);
}

// dim C[x]/(W, dW); equals the Milnor number exactly for quasi-homogeneous
// isolated singularities.
inline std::optional<std::size_t> tyurina_number_brute_force(const Polynomial& w, int cap = 18) {
    std::vector<Polynomial> gens{w};
    for (int k = 0; k < w.num_vars(); ++k) gens.push_back(w.derivative(k));
    return stabilized_quotient_dimension(gens, w.num_vars(), cap);
}

namespace detail {

// Writes the coefficients of p (univariate, degree <= maxdeg) into row
// positions offset..offset+maxdeg of the column col.
inline void scatter_coeffs(const Polynomial& p, int maxdeg, std::size_t offset, std::size_t col,
                           QMatrix& m) {
    for (const auto& [e, c] : p.terms()) m.at(offset + static_cast<std::size_t>(e[0]), col) = c;
}

struct Pairs {
    // columns spanning a set of (first, second) univariate polynomial pairs,
    // both components embedded with degree bound maxdeg
    QMatrix cols;
};

inline std::size_t rank_of_union(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m.rank();
}

}  // namespace detail

// Cohomology dimensions (even, odd) of the morphism complex between two
// rank 1|1 one-variable factorizations, by degree-truncated linear algebra:
// kernel of the closure constraints at entry degree <= N, minus the span of
// boundaries meeting that degree window, stabilized over N.
inline std::optional<std::pair<std::size_t, std::size_t>> univariate_hom_dims_brute_force(
    const MatrixFactorization& a, const MatrixFactorization& b, int cap = 14) {
    const Polynomial &ua = a.u().at(0, 0), &va = a.v().at(0, 0);
    const Polynomial &ub = b.u().at(0, 0), &vb = b.v().at(0, 0);
    int dmax = std::max(std::max(ua.degree(), va.degree()), std::max(ub.degree(), vb.degree()));
    auto mono = [](int k) {
        return Polynomial::monomial(1, Exponents{k}, GaussianRational(1));
    };

    auto dims_at = [&](int n) {
        int slack = n + 2 * dmax + 2;   // source window for boundaries
        int m = slack + dmax;           // common embedding degree
        std::size_t h = static_cast<std::size_t>(m) + 1;

        // closed pairs of entry degree <= n, for both parities
        auto closed_basis = [&](bool even) {
            std::size_t vars = 2 * static_cast<std::size_t>(n + 1);
            QMatrix constraints(2 * (static_cast<std::size_t>(n + dmax) + 1), vars);
            for (int k = 0; k <= n; ++k) {
                Polynomial zk = mono(k);
                // even pair (p,q): vb q - p va and ub p - q ua must vanish;
                // odd pair (r,s): vb s + r ua and ub r + s va must vanish
                Polynomial c1_first = even ? -(zk * va) : zk * ua;
                Polynomial c1_second = zk * vb;
                Polynomial c2_first = zk * ub;
                Polynomial c2_second = even ? -(zk * ua) : zk * va;
                std::size_t col_p = static_cast<std::size_t>(k);
                std::size_t col_q = static_cast<std::size_t>(n + 1 + k);
                std::size_t half = static_cast<std::size_t>(n + dmax) + 1;
                for (const auto& [e, c] : c1_first.terms())
                    constraints.at(static_cast<std::size_t>(e[0]), col_p) += c;
                for (const auto& [e, c] : c1_second.terms())
                    constraints.at(static_cast<std::size_t>(e[0]), col_q) += c;
                for (const auto& [e, c] : c2_first.terms())
                    constraints.at(half + static_cast<std::size_t>(e[0]), col_p) += c;
                for (const auto& [e, c] : c2_second.terms())
                    constraints.at(half + static_cast<std::size_t>(e[0]), col_q) += c;
            }
            auto kernel = lgtk::kernel_basis(constraints);
            QMatrix cols(2 * h, kernel.size());
            for (std::size_t j = 0; j < kernel.size(); ++j)
                for (int k = 0; k <= n; ++k) {
                    cols.at(static_cast<std::size_t>(k), j) = kernel[j][static_cast<std::size_t>(k)];
                    cols.at(h + static_cast<std::size_t>(k), j) =
                        kernel[j][static_cast<std::size_t>(n + 1 + k)];
                }
            return cols;
        };

        // boundaries of sources with entry degree <= slack, embedded at degree m
        auto boundary_cols = [&](bool even_target) {
            std::size_t count = 2 * static_cast<std::size_t>(slack + 1);
            QMatrix cols(2 * h, count);
            for (int k = 0; k <= slack; ++k) {
                Polynomial zk = mono(k);
                std::size_t c1 = static_cast<std::size_t>(k);
                std::size_t c2 = static_cast<std::size_t>(slack + 1 + k);
                if (even_target) {
                    // source odd (r,s): image (vb s + r ua, ub r + s va)
                    detail::scatter_coeffs(zk * ua, m, 0, c1, cols);        // r -> first
                    detail::scatter_coeffs(zk * ub, m, h, c1, cols);        // r -> second
                    detail::scatter_coeffs(zk * vb, m, 0, c2, cols);        // s -> first
                    detail::scatter_coeffs(zk * va, m, h, c2, cols);        // s -> second
                } else {
                    // source even (p,q): image (vb q - p va, ub p - q ua)
                    detail::scatter_coeffs(-(zk * va), m, 0, c1, cols);
                    detail::scatter_coeffs(zk * ub, m, h, c1, cols);
                    detail::scatter_coeffs(zk * vb, m, 0, c2, cols);
                    detail::scatter_coeffs(-(zk * ua), m, h, c2, cols);
                }
            }
            return cols;
        };

        auto dim_one = [&](bool even) {
            QMatrix closed = closed_basis(even);
            QMatrix bound = boundary_cols(even);
            // window basis: coordinate vectors of entry degree <= n
            QMatrix window(2 * h, 2 * static_cast<std::size_t>(n + 1));
            for (int k = 0; k <= n; ++k) {
                window.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
                    GaussianRational(1);
                window.at(h + static_cast<std::size_t>(k), static_cast<std::size_t>(n + 1 + k)) =
                    GaussianRational(1);
            }
            std::size_t rb = bound.rank();
            std::size_t rw = window.rank();
            std::size_t rbw = detail::rank_of_union(bound, window);
            std::size_t meet = rb + rw - rbw;  // dim of boundaries inside the window
            return closed.rank() - meet;
        };
        return std::make_pair(dim_one(true), dim_one(false));
    };

    std::pair<std::size_t, std::size_t> prev{0, 0};
    std::size_t same = 0;
    for (int n = 0; n <= cap; ++n) {
        auto d = dims_at(n);
        if (n > 0 && d == prev)
            ++same;
        else
            same = 0;
        prev = d;
        if (same >= 3) return d;
    }
    return std::nullopt;
}

// Residue of g against W = z^m: the z^{m-2} coefficient divided by m.
inline GaussianRational pure_power_residue(const Polynomial& g, int m) {
    GaussianRational out;
    for (const auto& [e, c] : g.terms())
        if (e[0] == m - 2) out += c;
    return out / GaussianRational(lgtk::Rational(m));
}

}  // namespace oracles
