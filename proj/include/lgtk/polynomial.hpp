#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lgtk/gaussian_rational.hpp"
#include "lgtk/monomial.hpp"

namespace lgtk {

// Sparse multivariate polynomial over Q(i). Terms live in a std::map keyed by
// exponent vector, so iteration order (and therefore every downstream
// computation and printout) is deterministic. Zero coefficients are never
// stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, GaussianRational>;

    Polynomial() : num_vars_(0) {}
    explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(int num_vars, const GaussianRational& c) {
        Polynomial p(num_vars);
        p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
        return p;
    }

    static Polynomial variable(int num_vars, int index) {
        if (index < 0 || index >= num_vars)
            throw Error(errc::shape_mismatch, "variable index out of range");
        Exponents e(static_cast<std::size_t>(num_vars), 0);
        e[static_cast<std::size_t>(index)] = 1;
        Polynomial p(num_vars);
        p.add_term(e, GaussianRational(1));
        return p;
    }

    static Polynomial monomial(int num_vars, const Exponents& e, const GaussianRational& c) {
        if (static_cast<int>(e.size()) != num_vars)
            throw Error(errc::shape_mismatch, "exponent vector length does not match variable count");
        Polynomial p(num_vars);
        p.add_term(e, c);
        return p;
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }

    // The constant coefficient (term of degree zero).
    GaussianRational constant_term() const {
        return coefficient(Exponents(static_cast<std::size_t>(num_vars_), 0));
    }

    GaussianRational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Exponents& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(num_vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial r(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(mono_mul(ea, eb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
        Polynomial r(p.num_vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(num_vars_, GaussianRational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= num_vars_)
            throw Error(errc::shape_mismatch, "derivative variable index out of range");
        Polynomial r(num_vars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exponents d = e;
            d[static_cast<std::size_t>(var)] = k - 1;
            r.add_term(d, GaussianRational(Rational(k)) * c);
        }
        return r;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return terms_.empty() ? -1 : d;
    }

    long max_weighted_degree(const std::vector<long>& weights) const {
        long d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            long w = weighted_degree(e, weights);
            if (first || w > d) d = w;
            first = false;
        }
        return terms_.empty() ? -1 : d;
    }

    // Largest term under the given order; pre: nonzero.
    std::pair<Exponents, GaussianRational> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw Error(errc::internal, "leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    GaussianRational eval(const std::vector<GaussianRational>& point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw Error(errc::shape_mismatch, "evaluation point length does not match variable count");
        GaussianRational acc;
        for (const auto& [e, c] : terms_) {
            GaussianRational t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) t *= point[k].pow(static_cast<unsigned long>(e[k]));
            acc += t;
        }
        return acc;
    }

    // Substitute z_k -> z_k + p_k for all variables (Taylor shift).
    Polynomial shift(const std::vector<GaussianRational>& point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw Error(errc::shape_mismatch, "shift point length does not match variable count");
        Polynomial r(num_vars_);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(num_vars_, c);
            for (int k = 0; k < num_vars_; ++k) {
                int exp = e[static_cast<std::size_t>(k)];
                if (exp == 0) continue;
                Polynomial lin = variable(num_vars_, k) + constant(num_vars_, point[static_cast<std::size_t>(k)]);
                term = term * lin.pow(static_cast<unsigned>(exp));
            }
            r += term;
        }
        return r;
    }

    // Substitute a constant for variable `var` and drop that variable,
    // producing a polynomial in num_vars-1 variables.
    Polynomial substitute_and_eliminate(int var, const GaussianRational& value) const {
        if (var < 0 || var >= num_vars_)
            throw Error(errc::shape_mismatch, "substitution variable index out of range");
        Polynomial r(num_vars_ - 1);
        for (const auto& [e, c] : terms_) {
            GaussianRational coeff = c;
            int k = e[static_cast<std::size_t>(var)];
            if (k > 0) coeff *= value.pow(static_cast<unsigned long>(k));
            if (coeff.is_zero()) continue;
            Exponents d;
            d.reserve(e.size() - 1);
            for (std::size_t j = 0; j < e.size(); ++j)
                if (static_cast<int>(j) != var) d.push_back(e[j]);
            r.add_term(d, coeff);
        }
        return r;
    }

    // True when only variable `var` occurs.
    bool is_univariate_in(int var) const {
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < e.size(); ++k)
                if (static_cast<int>(k) != var && e[k] != 0) return false;
        return true;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }

private:
    void check_same_ring(const Polynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw Error(errc::shape_mismatch, "polynomials live in different rings");
    }

    int num_vars_;
    TermMap terms_;
};

}  // namespace lgtk
