#pragma once

#include <algorithm>
#include <vector>

#include "lgtk/groebner.hpp"
#include "lgtk/milnor.hpp"

namespace lgtk {

namespace detail {

struct GaussianInteger {
    Integer re{0}, im{0};

    Integer norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator<(const GaussianInteger& a, const GaussianInteger& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Exact division in Z[i] via the conjugate; empty when b does not divide a.
inline std::optional<GaussianInteger> exact_divide(const GaussianInteger& a,
                                                   const GaussianInteger& b) {
    Integer n = b.norm();
    if (n == 0) return std::nullopt;
    Integer re = a.re * b.re + a.im * b.im;
    Integer im = a.im * b.re - a.re * b.im;
    if (re % n != 0 || im % n != 0) return std::nullopt;
    return GaussianInteger{re / n, im / n};
}

// Gaussian primes dividing g, through the rational prime factorization of the
// norm: 2 ramifies as (1+i)^2, p = 1 mod 4 splits as pi * conj(pi) found by a
// two-squares search, p = 3 mod 4 stays inert.
inline std::vector<GaussianInteger> gaussian_prime_support(const GaussianInteger& g) {
    std::vector<GaussianInteger> primes;
    Integer m = g.norm();
    std::vector<Integer> rational;
    for (Integer d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        rational.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) rational.push_back(m);
    for (const Integer& p : rational) {
        if (p == 2) {
            primes.push_back({1, 1});
        } else if (p % 4 == 3) {
            primes.push_back({p, 0});
        } else {
            for (Integer a = 1; a * a * 2 <= p; ++a) {
                Integer b2 = p - a * a;
                Integer b = sqrt(b2);
                if (b * b == b2) {
                    primes.push_back({a, b});
                    primes.push_back({a, -b});
                    break;
                }
            }
        }
    }
    return primes;
}

// All divisors of a nonzero g, up to unit multiples.
inline std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& g) {
    std::vector<GaussianInteger> divisors{{1, 0}};
    for (const GaussianInteger& p : gaussian_prime_support(g)) {
        int e = 0;
        GaussianInteger cur = g;
        while (true) {
            auto q = exact_divide(cur, p);
            if (!q) break;
            cur = *q;
            ++e;
        }
        if (e == 0) continue;
        std::vector<GaussianInteger> next;
        for (const auto& d : divisors) {
            GaussianInteger acc = d;
            next.push_back(acc);
            for (int k = 0; k < e; ++k) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    return divisors;
}

}  // namespace detail

// Roots in Q(i) of a polynomial univariate in `var`: denominators are
// cleared to land in Z[i], candidates run over divisors of the trailing and
// leading coefficients times units, and every candidate is kept only after
// exact evaluation to zero. Roots outside Q(i) are (correctly) not reported.
inline std::vector<GaussianRational> univariate_gaussian_roots(const Polynomial& p, int var) {
    if (!p.is_univariate_in(var))
        throw Error(errc::shape_mismatch, "root finding needs a univariate polynomial");
    if (p.is_zero()) throw Error(errc::internal, "root finding on the zero polynomial");
    if (p.is_constant()) return {};
    int deg = p.degree_in(var);
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(deg) + 1);
    for (const auto& [e, c] : p.terms())
        coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = c;

    std::vector<GaussianRational> roots;
    int low = 0;
    while (coeffs[static_cast<std::size_t>(low)].is_zero()) ++low;
    if (low > 0) roots.push_back(GaussianRational());
    if (low == deg) return roots;  // pure power

    Integer scale(1);
    for (int k = low; k <= deg; ++k) {
        const GaussianRational& c = coeffs[static_cast<std::size_t>(k)];
        scale = boost::multiprecision::lcm(scale, denominator(c.re()));
        scale = boost::multiprecision::lcm(scale, denominator(c.im()));
    }
    auto as_int = [&](const GaussianRational& c) {
        return detail::GaussianInteger{numerator(Rational(c.re() * scale)),
                                       numerator(Rational(c.im() * scale))};
    };
    detail::GaussianInteger a0 = as_int(coeffs[static_cast<std::size_t>(low)]);
    detail::GaussianInteger an = as_int(coeffs[static_cast<std::size_t>(deg)]);

    const GaussianRational units[4] = {GaussianRational(1), GaussianRational(-1),
                                       GaussianRational::i(), -GaussianRational::i()};
    std::vector<GaussianRational> seen = roots;
    for (const auto& num : detail::gaussian_divisors(a0))
        for (const auto& den : detail::gaussian_divisors(an)) {
            GaussianRational base = GaussianRational(Rational(num.re), Rational(num.im)) /
                                    GaussianRational(Rational(den.re), Rational(den.im));
            for (const auto& u : units) {
                GaussianRational cand = u * base;
                bool dup = false;
                for (const auto& s : seen)
                    if (s == cand) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                seen.push_back(cand);
                GaussianRational val;
                GaussianRational powk(1);
                for (int k = 0; k <= deg; ++k) {
                    if (!coeffs[static_cast<std::size_t>(k)].is_zero())
                        val += coeffs[static_cast<std::size_t>(k)] * powk;
                    powk *= cand;
                }
                if (val.is_zero()) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace detail {

// Back-substitution solver for a zero-dimensional system: eliminate down to
// the last variable, read rational roots, substitute, recurse.
inline std::vector<std::vector<GaussianRational>> solve_system(
    const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    int nv = gens.empty() ? 0 : gens[0].num_vars();
    if (nv == 0) {
        for (const auto& g : gens)
            if (!g.is_zero()) return {};
        return {{}};
    }
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (all_zero)
        throw Error(errc::non_isolated_critical, "solution set is not zero-dimensional");

    GroebnerBasis gb = groebner_basis(gens, elimination_order_keeping_last(nv, nv - 1), opts);
    std::optional<Polynomial> elim;
    for (const auto& g : gb.generators) {
        if (!g.is_univariate_in(nv - 1)) continue;
        if (!elim || g.degree_in(nv - 1) < elim->degree_in(nv - 1)) elim = g;
    }
    if (!elim)
        throw Error(errc::non_isolated_critical, "solution set is not zero-dimensional");

    std::vector<std::vector<GaussianRational>> out;
    for (const GaussianRational& r : univariate_gaussian_roots(*elim, nv - 1)) {
        std::vector<Polynomial> reduced;
        reduced.reserve(gens.size());
        for (const auto& g : gens) reduced.push_back(g.substitute_and_eliminate(nv - 1, r));
        for (auto& sol : solve_system(reduced, opts)) {
            sol.push_back(r);
            out.push_back(std::move(sol));
        }
    }
    return out;
}

}  // namespace detail

// All critical points of W with coordinates in Q(i). Points with irrational
// coordinates exist whenever the local Milnor numbers of the returned points
// do not sum to the global one; callers report that deficit rather than the
// missing points.
inline std::vector<std::vector<GaussianRational>> rational_critical_points(
    const Polynomial& w, const GroebnerOptions& opts = {}) {
    std::vector<Polynomial> partials = jacobian_ideal(w);
    auto points = detail::solve_system(partials, opts);
    for (const auto& p : points)
        for (const auto& g : partials)
            if (!g.eval(p).is_zero())
                throw Error(errc::internal, "spurious critical point from elimination");
    std::sort(points.begin(), points.end());
    return points;
}

}  // namespace lgtk
