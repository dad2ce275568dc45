#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lgtk/errors.hpp"

namespace lgtk {

// Exponent vector of a monomial; index k is the power of variable k.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline long weighted_degree(const Exponents& e, const std::vector<long>& weights) {
    if (e.size() != weights.size())
        throw Error(errc::shape_mismatch, "weight vector length does not match variable count");
    long d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += weights[k] * static_cast<long>(e[k]);
    return d;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

// Componentwise difference; caller guarantees divisibility.
inline Exponents mono_div(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

enum class OrderKind { lex, grevlex };

// Monomial order with an optional variable permutation. perm[k] is the index
// of the k-th highest-priority variable; identity means x1 > x2 > ... > xd.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::grevlex) {}
    explicit MonomialOrder(OrderKind kind, std::vector<int> perm = {})
        : kind_(kind), perm_(std::move(perm)) {}

    OrderKind kind() const { return kind_; }
    const std::vector<int>& permutation() const { return perm_; }

    std::string name() const {
        std::string s = kind_ == OrderKind::lex ? "lex" : "grevlex";
        if (!perm_.empty()) {
            s += "[";
            for (std::size_t k = 0; k < perm_.size(); ++k) {
                if (k) s += ",";
                s += std::to_string(perm_[k]);
            }
            s += "]";
        }
        return s;
    }

    // Strict a < b.
    bool less(const Exponents& a, const Exponents& b) const {
        Exponents pa = apply_perm(a);
        Exponents pb = apply_perm(b);
        if (kind_ == OrderKind::lex) {
            for (std::size_t k = 0; k < pa.size(); ++k) {
                if (pa[k] != pb[k]) return pa[k] < pb[k];
            }
            return false;
        }
        int da = total_degree(pa);
        int db = total_degree(pb);
        if (da != db) return da < db;
        // Graded reverse lex: with equal degree, the larger monomial is the
        // one whose last nonzero entry of a-b is negative.
        for (std::size_t k = pa.size(); k-- > 0;) {
            int diff = pa[k] - pb[k];
            if (diff != 0) return diff > 0;
        }
        return false;
    }

    bool greater(const Exponents& a, const Exponents& b) const { return less(b, a); }
    bool equal(const Exponents& a, const Exponents& b) const { return a == b; }

private:
    Exponents apply_perm(const Exponents& e) const {
        if (perm_.empty()) return e;
        if (perm_.size() != e.size())
            throw Error(errc::shape_mismatch, "order permutation length does not match variable count");
        Exponents r(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) r[k] = e[static_cast<std::size_t>(perm_[k])];
        return r;
    }

    OrderKind kind_;
    std::vector<int> perm_;
};

// Lex order that ranks the given variable last; its elimination ideal is
// generated by the basis elements involving only that variable.
inline MonomialOrder elimination_order_keeping_last(int num_vars, int kept) {
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(num_vars));
    for (int k = 0; k < num_vars; ++k)
        if (k != kept) perm.push_back(k);
    perm.push_back(kept);
    return MonomialOrder(OrderKind::lex, perm);
}

}  // namespace lgtk
