#pragma once

#include <optional>
#include <vector>

#include "lgtk/groebner.hpp"
#include "lgtk/qlinalg.hpp"

namespace lgtk {

// Partial derivatives of the potential. A constant potential has no critical
// geometry at all and is rejected.
inline std::vector<Polynomial> jacobian_ideal(const Polynomial& w) {
    std::vector<Polynomial> partials;
    bool all_zero = true;
    for (int k = 0; k < w.num_vars(); ++k) {
        partials.push_back(w.derivative(k));
        if (!partials.back().is_zero()) all_zero = false;
    }
    if (w.num_vars() == 0 || all_zero)
        throw Error(errc::constant_potential, "potential has vanishing gradient everywhere");
    return partials;
}

// Finite-dimensional quotient R/J(W) presented by a Groebner basis of the
// Jacobian ideal together with the standard monomial basis under the chosen
// order. Construction fails with NonIsolatedCritical when the staircase is
// infinite, which happens exactly when some variable has no pure power among
// the leading monomials.
class MilnorAlgebra {
public:
    Polynomial potential;
    GroebnerBasis jacobian_gb;
    std::vector<Exponents> basis;  // standard monomials, ascending under the order

    std::size_t dimension() const { return basis.size(); }

    Polynomial normal_form(const Polynomial& p) const {
        return lgtk::normal_form(p, jacobian_gb).remainder;
    }

    // Coordinates of p's class in the standard monomial basis.
    std::vector<GaussianRational> coordinates(const Polynomial& p) const {
        Polynomial nf = normal_form(p);
        std::vector<GaussianRational> c;
        c.reserve(basis.size());
        for (const auto& m : basis) c.push_back(nf.coefficient(m));
        Polynomial check(potential.num_vars());
        for (std::size_t k = 0; k < basis.size(); ++k) check.add_term(basis[k], c[k]);
        if (check != nf)
            throw Error(errc::internal, "normal form not supported on the standard basis");
        return c;
    }

    Polynomial from_coordinates(const std::vector<GaussianRational>& c) const {
        if (c.size() != basis.size())
            throw Error(errc::shape_mismatch, "coordinate vector length does not match basis");
        Polynomial p(potential.num_vars());
        for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], c[k]);
        return p;
    }

    Polynomial multiply(const Polynomial& a, const Polynomial& b) const {
        return normal_form(a * b);
    }
};

inline MilnorAlgebra milnor_algebra(const Polynomial& w, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
    MilnorAlgebra alg;
    alg.potential = w;
    alg.jacobian_gb = groebner_basis(jacobian_ideal(w), order, opts);

    std::vector<Exponents> lms = alg.jacobian_gb.leading_monomials();
    int nv = w.num_vars();
    for (const auto& lm : lms)
        if (total_degree(lm) == 0) return alg;  // unit ideal: no critical points, dimension 0

    // Pure power bound per variable; absence means infinitely many standard
    // monomials in that direction.
    std::vector<int> box(static_cast<std::size_t>(nv), -1);
    for (const auto& lm : lms) {
        int support = -1;
        bool pure = true;
        for (int k = 0; k < nv; ++k) {
            if (lm[static_cast<std::size_t>(k)] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = k;
        }
        if (pure && support >= 0) {
            int e = lm[static_cast<std::size_t>(support)];
            if (box[static_cast<std::size_t>(support)] < 0 || e < box[static_cast<std::size_t>(support)])
                box[static_cast<std::size_t>(support)] = e;
        }
    }
    for (int k = 0; k < nv; ++k)
        if (box[static_cast<std::size_t>(k)] < 0)
            throw Error(errc::non_isolated_critical,
                        "critical locus is not isolated (no pure power of variable " +
                            std::to_string(k + 1) + " in the leading ideal)");

    // Enumerate the staircase box and keep monomials outside the leading ideal.
    Exponents e(static_cast<std::size_t>(nv), 0);
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (divides(lm, e)) {
                standard = false;
                break;
            }
        if (standard) alg.basis.push_back(e);
        int k = 0;
        while (k < nv) {
            if (++e[static_cast<std::size_t>(k)] < box[static_cast<std::size_t>(k)]) break;
            e[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(alg.basis.begin(), alg.basis.end(),
              [&order](const Exponents& a, const Exponents& b) { return order.less(a, b); });
    return alg;
}

// Recenter the potential at a critical point and drop the constant, giving
// the local model W(z+p) - W(p) around that point.
inline Polynomial localize_at_point(const Polynomial& w, const std::vector<GaussianRational>& point) {
    Polynomial shifted = w.shift(point);
    shifted -= Polynomial::constant(w.num_vars(), shifted.constant_term());
    return shifted;
}

// Milnor number of one critical point: dimension of the local algebra at that
// point, extracted from the recentered global quotient as the joint
// generalized kernel of the coordinate multiplication operators.
inline std::size_t local_milnor_number(const Polynomial& w,
                                       const std::vector<GaussianRational>& point,
                                       const MonomialOrder& order, const GroebnerOptions& opts = {}) {
    MilnorAlgebra alg = milnor_algebra(localize_at_point(w, point), order, opts);
    std::size_t n = alg.dimension();
    if (n == 0) return 0;
    int d = w.num_vars();
    QMatrix stacked(static_cast<std::size_t>(d) * n, n);
    for (int i = 0; i < d; ++i) {
        QMatrix mult(n, n);
        Polynomial zi = Polynomial::variable(d, i);
        for (std::size_t c = 0; c < n; ++c) {
            Polynomial b = Polynomial::monomial(d, alg.basis[c], GaussianRational(1));
            auto coords = alg.coordinates(zi * b);
            for (std::size_t r = 0; r < n; ++r) mult.at(r, c) = coords[r];
        }
        // nilpotent exactly on the local summand at the origin
        QMatrix power = QMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k) power = power * mult;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                stacked.at(static_cast<std::size_t>(i) * n + r, c) = power.at(r, c);
    }
    return n - stacked.rank();
}

// Positive integer weights (w_1..w_d; D) with every monomial of W of weighted
// degree exactly D.
struct WeightCertificate {
    std::vector<long> weights;
    long degree = 0;
};

namespace detail {

// All monomials of weighted degree <= bound under positive weights.
inline void enumerate_monomials_upto(const std::vector<long>& weights, long bound, Exponents& cur,
                                     std::size_t var, long used, std::vector<Exponents>& out) {
    if (var == weights.size()) {
        out.push_back(cur);
        return;
    }
    for (int e = 0;; ++e) {
        long w = used + weights[var] * e;
        if (w > bound) break;
        cur[var] = e;
        enumerate_monomials_upto(weights, bound, cur, var + 1, w, out);
    }
    cur[var] = 0;
}

inline std::vector<Exponents> monomials_up_to_weight(const std::vector<long>& weights, long bound) {
    std::vector<Exponents> out;
    if (bound < 0) return out;
    Exponents cur(weights.size(), 0);
    enumerate_monomials_upto(weights, bound, cur, 0, 0, out);
    return out;
}

// One strict constraint c[0] + sum_j c[j]*t_j > 0.
using StrictConstraint = std::vector<Rational>;

// Fourier-Motzkin elimination of the last variable.
inline std::vector<StrictConstraint> fm_eliminate_last(const std::vector<StrictConstraint>& cons) {
    std::size_t n = cons.empty() ? 0 : cons[0].size() - 1;
    std::vector<StrictConstraint> lower, upper, passthrough;
    for (const auto& c : cons) {
        Rational a = c[n];
        if (a > 0)
            lower.push_back(c);
        else if (a < 0)
            upper.push_back(c);
        else {
            StrictConstraint t(c.begin(), c.end() - 1);
            passthrough.push_back(t);
        }
    }
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            // a_lo > 0, a_up < 0; the combination a_lo*up - a_up*lo drops t_n
            // and stays strict.
            StrictConstraint t(n);
            for (std::size_t k = 0; k < n; ++k) t[k] = lo[n] * up[k] - up[n] * lo[k];
            passthrough.push_back(std::move(t));
        }
    return passthrough;
}

}  // namespace detail

// Looks for positive rational weights making every term of W weighted-degree
// one, then clears denominators. Underdetermined systems are resolved by
// Fourier-Motzkin elimination to find a strictly positive point.
inline std::optional<WeightCertificate> weight_certificate(const Polynomial& w) {
    if (w.is_zero() || w.is_constant() || w.num_vars() == 0) return std::nullopt;
    std::size_t d = static_cast<std::size_t>(w.num_vars());
    std::vector<Exponents> rows;
    for (const auto& [e, c] : w.terms()) rows.push_back(e);

    QMatrix a(rows.size(), d);
    std::vector<GaussianRational> b(rows.size(), GaussianRational(1));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < d; ++k) a.at(r, k) = GaussianRational(Rational(rows[r][k]));
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    auto kernel = kernel_basis(a);

    // Strict positivity constraints on w = particular + sum t_j * kernel_j,
    // stored as [c0, c_t1, ..., c_tm].
    std::vector<detail::StrictConstraint> cons;
    for (std::size_t k = 0; k < d; ++k) {
        detail::StrictConstraint c(kernel.size() + 1);
        c[0] = sol->solution[k].re();
        for (std::size_t j = 0; j < kernel.size(); ++j) c[j + 1] = kernel[j][k].re();
        cons.push_back(std::move(c));
    }

    std::vector<std::vector<detail::StrictConstraint>> stages;  // stages[k]: vars t_1..t_k
    stages.resize(kernel.size() + 1);
    stages[kernel.size()] = cons;
    for (std::size_t k = kernel.size(); k > 0; --k)
        stages[k - 1] = detail::fm_eliminate_last(stages[k]);
    for (const auto& c : stages[0])
        if (!(c[0] > 0)) return std::nullopt;

    std::vector<Rational> t(kernel.size(), Rational(0));
    for (std::size_t k = 1; k <= kernel.size(); ++k) {
        bool has_lo = false, has_up = false;
        Rational lo(0), up(0);
        for (const auto& c : stages[k]) {
            Rational coef = c[k];
            if (coef == 0) continue;
            Rational rest = c[0];
            for (std::size_t j = 1; j < k; ++j) rest += c[j] * t[j - 1];
            Rational bound = -rest / coef;
            if (coef > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_up || bound < up) up = bound;
                has_up = true;
            }
        }
        if (has_lo && has_up)
            t[k - 1] = (lo + up) / 2;
        else if (has_lo)
            t[k - 1] = lo + 1;
        else if (has_up)
            t[k - 1] = up - 1;
    }

    std::vector<Rational> weights(d);
    for (std::size_t k = 0; k < d; ++k) {
        weights[k] = sol->solution[k].re();
        for (std::size_t j = 0; j < kernel.size(); ++j) weights[k] += t[j] * kernel[j][k].re();
        if (!(weights[k] > 0)) return std::nullopt;  // defensive; FM guarantees feasibility
    }

    Integer scale(1);
    for (const auto& wk : weights) scale = boost::multiprecision::lcm(scale, denominator(wk));
    std::vector<Integer> iw(d);
    Integer g = scale;
    for (std::size_t k = 0; k < d; ++k) {
        iw[k] = numerator(Rational(weights[k] * scale));
        g = boost::multiprecision::gcd(g, iw[k]);
    }
    WeightCertificate cert;
    for (std::size_t k = 0; k < d; ++k) cert.weights.push_back((iw[k] / g).convert_to<long>());
    cert.degree = (scale / g).convert_to<long>();
    return cert;
}

struct QuasiHomogeneity {
    bool is_quasi_homogeneous = false;             // Jacobian ideal membership of W
    std::optional<WeightCertificate> certificate;  // explicit weights when they exist
};

// Membership W in J(W) decides quasi-homogeneity (up to coordinate change);
// an explicit weight vector is attached when one exists in the given
// coordinates.
inline QuasiHomogeneity is_quasi_homogeneous(const Polynomial& w, const MonomialOrder& order,
                                             const GroebnerOptions& opts = {}) {
    QuasiHomogeneity res;
    GroebnerBasis gb = groebner_basis(jacobian_ideal(w), order, opts);
    res.is_quasi_homogeneous = normal_form(w, gb).remainder.is_zero();
    res.certificate = weight_certificate(w);
    return res;
}

}  // namespace lgtk
