#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgtk/polynomial.hpp"

namespace lgtk {

struct GroebnerOptions {
    // Shared counter across pair processing and single-term reductions; the
    // computation aborts with BudgetExceeded when it runs out.
    std::uint64_t step_budget = 1'000'000;
};

struct NormalFormResult {
    Polynomial remainder;
    // remainder = p - sum_k cofactors[k] * generators[k]
    std::vector<Polynomial> cofactors;
};

// Reduced Groebner basis carrying cofactor certificates: every generator is
// stored together with its expression in the original input generators, so
// ideal membership proofs can always be re-expanded and checked.
class GroebnerBasis {
public:
    std::vector<Polynomial> generators;                // monic, interreduced
    std::vector<std::vector<Polynomial>> cofactors;    // generators[k] = sum_j cofactors[k][j]*original[j]
    std::vector<Polynomial> original;
    MonomialOrder order;
    int num_vars = 0;

    std::vector<Exponents> leading_monomials() const {
        std::vector<Exponents> lms;
        lms.reserve(generators.size());
        for (const auto& g : generators) lms.push_back(g.leading_term(order).first);
        return lms;
    }

    // Re-expands every cofactor row; the certificate invariant.
    bool cofactors_verify() const {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            Polynomial acc(num_vars);
            for (std::size_t j = 0; j < original.size(); ++j)
                acc += cofactors[k][j] * original[j];
            if (acc != generators[k]) return false;
        }
        return true;
    }
};

namespace detail {

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

// Multivariate division with quotient tracking. Divisors must be monic.
// Budget counting is optional (normal forms after basis construction are
// cheap and always terminate).
inline DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const std::vector<Exponents>& divisor_lms, const MonomialOrder& order,
                             std::uint64_t* steps_left) {
    DivisionResult res;
    res.remainder = Polynomial(p.num_vars());
    res.quotients.assign(divisors.size(), Polynomial(p.num_vars()));
    Polynomial work = p;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!divides(divisor_lms[k], lm)) continue;
            if (steps_left) {
                if (*steps_left == 0)
                    throw Error(errc::budget_exceeded, "reduction step budget exhausted");
                --*steps_left;
            }
            Exponents t = mono_div(lm, divisor_lms[k]);
            Polynomial mono = Polynomial::monomial(p.num_vars(), t, lc);
            work -= mono * divisors[k];
            res.quotients[k] += mono;
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return res;
}

}  // namespace detail

// Buchberger with the normal selection strategy (smallest S-pair lcm under the
// active order) and the coprime-lead criterion, followed by full
// interreduction. Cofactors over the original generators are threaded through
// every reduction.
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
    if (gens.empty()) throw Error(errc::internal, "empty generator list");
    int nv = gens[0].num_vars();
    for (const auto& g : gens)
        if (g.num_vars() != nv) throw Error(errc::shape_mismatch, "generators in different rings");

    struct Item {
        Polynomial poly;           // monic
        Exponents lm;
        std::vector<Polynomial> cofs;  // over original generators
    };
    std::vector<Item> basis;
    std::uint64_t steps = opts.step_budget;

    auto push_item = [&](Polynomial p, std::vector<Polynomial> cofs) {
        auto [lm, lc] = p.leading_term(order);
        GaussianRational inv = GaussianRational(1) / lc;
        p = inv * p;
        for (auto& c : cofs) c = inv * c;
        basis.push_back({std::move(p), lm, std::move(cofs)});
    };

    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        std::vector<Polynomial> cofs(gens.size(), Polynomial(nv));
        cofs[j] = Polynomial::constant(nv, GaussianRational(1));
        push_item(gens[j], std::move(cofs));
    }

    GroebnerBasis out;
    out.order = order;
    out.num_vars = nv;
    out.original = gens;
    if (basis.empty()) return out;  // zero ideal

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    auto current_lms = [&]() {
        std::vector<Exponents> lms;
        lms.reserve(basis.size());
        for (const auto& it : basis) lms.push_back(it.lm);
        return lms;
    };
    auto current_polys = [&]() {
        std::vector<Polynomial> ps;
        ps.reserve(basis.size());
        for (const auto& it : basis) ps.push_back(it.poly);
        return ps;
    };

    while (!pairs.empty()) {
        // Normal selection: minimal lcm, ties by index pair.
        std::size_t best = 0;
        Exponents best_lcm = mono_lcm(basis[pairs[0].first].lm, basis[pairs[0].second].lm);
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            Exponents l = mono_lcm(basis[pairs[k].first].lm, basis[pairs[k].second].lm);
            if (order.less(l, best_lcm)) {
                best = k;
                best_lcm = l;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        if (steps == 0) throw Error(errc::budget_exceeded, "pair budget exhausted");
        --steps;
        if (coprime(basis[i].lm, basis[j].lm)) continue;

        Exponents l = mono_lcm(basis[i].lm, basis[j].lm);
        Polynomial ti = Polynomial::monomial(nv, mono_div(l, basis[i].lm), GaussianRational(1));
        Polynomial tj = Polynomial::monomial(nv, mono_div(l, basis[j].lm), GaussianRational(1));
        Polynomial s = ti * basis[i].poly - tj * basis[j].poly;
        if (s.is_zero()) continue;
        std::vector<Polynomial> scofs(gens.size(), Polynomial(nv));
        for (std::size_t g = 0; g < gens.size(); ++g)
            scofs[g] = ti * basis[i].cofs[g] - tj * basis[j].cofs[g];

        auto div = detail::divide(s, current_polys(), current_lms(), order, &steps);
        if (div.remainder.is_zero()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t g = 0; g < gens.size(); ++g)
                scofs[g] -= div.quotients[k] * basis[k].cofs[g];
        push_item(div.remainder, std::move(scofs));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop generators whose lead is divisible by another's.
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t k = 0; k < by_lm.size(); ++k) by_lm[k] = k;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        if (basis[a].lm != basis[b].lm) return order.less(basis[a].lm, basis[b].lm);
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : by_lm) {
        bool redundant = false;
        for (std::size_t s : kept)
            if (divides(basis[s].lm, basis[idx].lm)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(idx);
    }

    // Tail-reduce every survivor against the others.
    std::vector<Item> reduced;
    for (std::size_t t = 0; t < kept.size(); ++t) {
        std::vector<Polynomial> others;
        std::vector<Exponents> other_lms;
        std::vector<std::size_t> other_idx;
        for (std::size_t s = 0; s < kept.size(); ++s) {
            if (s == t) continue;
            others.push_back(basis[kept[s]].poly);
            other_lms.push_back(basis[kept[s]].lm);
            other_idx.push_back(kept[s]);
        }
        auto div = detail::divide(basis[kept[t]].poly, others, other_lms, order, &steps);
        std::vector<Polynomial> cofs = basis[kept[t]].cofs;
        for (std::size_t k = 0; k < others.size(); ++k)
            for (std::size_t g = 0; g < gens.size(); ++g)
                cofs[g] -= div.quotients[k] * basis[other_idx[k]].cofs[g];
        reduced.push_back({div.remainder, basis[kept[t]].lm, std::move(cofs)});
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Item& a, const Item& b) { return order.greater(a.lm, b.lm); });

    for (auto& it : reduced) {
        out.generators.push_back(std::move(it.poly));
        out.cofactors.push_back(std::move(it.cofs));
    }
    return out;
}

inline NormalFormResult normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.num_vars() != gb.num_vars)
        throw Error(errc::shape_mismatch, "polynomial ring does not match basis ring");
    auto div = detail::divide(p, gb.generators, gb.leading_monomials(), gb.order, nullptr);
    return {div.remainder, div.quotients};
}

// Expresses p over the ORIGINAL generators when p lies in the ideal:
// p = sum_j result[j] * original[j]. Empty optional otherwise.
inline std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& p,
                                                                     const GroebnerBasis& gb) {
    NormalFormResult nf = normal_form(p, gb);
    if (!nf.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> a(gb.original.size(), Polynomial(gb.num_vars));
    for (std::size_t k = 0; k < gb.generators.size(); ++k)
        for (std::size_t j = 0; j < gb.original.size(); ++j)
            a[j] += nf.cofactors[k] * gb.cofactors[k][j];
    return a;
}

}  // namespace lgtk
