#pragma once

#include <map>
#include <vector>

#include "lgtk/milnor.hpp"
#include "lgtk/qlinalg.hpp"

namespace lgtk {

// Contraction complex on polyvector fields: Lambda^k in cohomological degree
// -k, differential the interior product with -i * dW. Requires an isolated
// critical locus (checked first) and explicit positive weights (checked
// second); the generator e_r carries weighted degree D - w_r, making the
// differential degree-preserving so cohomology splits into finite slices.
struct KoszulComplex {
    Polynomial potential;
    WeightCertificate weights;
    std::map<int, std::size_t> cohomology_dims;  // degree -k -> total dimension
    long slice_bound = 0;                        // slices 0..slice_bound were computed
};

namespace detail {

// Exact-weighted-degree monomial enumeration.
inline std::vector<Exponents> monomials_of_weight(const std::vector<long>& weights, long target) {
    std::vector<Exponents> all = monomials_up_to_weight(weights, target);
    std::vector<Exponents> out;
    for (auto& m : all)
        if (weighted_degree(m, weights) == target) out.push_back(m);
    return out;
}

inline std::vector<int> bits_of(unsigned mask, int d) {
    std::vector<int> out;
    for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) out.push_back(k);
    return out;
}

}  // namespace detail

inline KoszulComplex koszul_complex(const Polynomial& w, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
    MilnorAlgebra milnor = milnor_algebra(w, order, opts);  // isolation gate
    std::optional<WeightCertificate> cert = weight_certificate(w);
    if (!cert)
        throw Error(errc::not_quasi_homogeneous,
                    "no positive weight system makes the potential homogeneous");

    KoszulComplex cx;
    cx.potential = w;
    cx.weights = *cert;
    int d = w.num_vars();
    long bigL = cert->degree;

    long socle_top = 0;
    for (const auto& m : milnor.basis)
        socle_top = std::max(socle_top, weighted_degree(m, cert->weights));
    cx.slice_bound = socle_top + bigL;

    std::vector<Polynomial> partials = jacobian_ideal(w);
    GaussianRational minus_i = -GaussianRational::i();

    // Generator degree of e_S.
    auto gen_degree = [&](unsigned mask) {
        long deg = 0;
        for (int k : detail::bits_of(mask, d)) deg += bigL - cert->weights[static_cast<std::size_t>(k)];
        return deg;
    };

    // Basis of the slice of Lambda^k in total weighted degree n.
    struct SliceEntry {
        unsigned mask;
        Exponents mono;
    };
    auto slice_basis = [&](int k, long n) {
        std::vector<SliceEntry> basis;
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (static_cast<int>(detail::bits_of(mask, d).size()) != k) continue;
            long gd = gen_degree(mask);
            if (gd > n) continue;
            for (const auto& m : detail::monomials_of_weight(cert->weights, n - gd))
                basis.push_back({mask, m});
        }
        return basis;
    };

    // Matrix of the contraction from Lambda^k slice n to Lambda^{k-1} slice n.
    auto slice_matrix = [&](const std::vector<SliceEntry>& src,
                            const std::vector<SliceEntry>& dst) {
        std::map<std::pair<unsigned, Exponents>, std::size_t> dst_index;
        for (std::size_t r = 0; r < dst.size(); ++r)
            dst_index.emplace(std::make_pair(dst[r].mask, dst[r].mono), r);
        QMatrix m(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::vector<int> bits = detail::bits_of(src[c].mask, d);
            for (std::size_t j = 0; j < bits.size(); ++j) {
                GaussianRational sign = (j % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
                unsigned sub = src[c].mask & ~(1u << bits[j]);
                const Polynomial& dw = partials[static_cast<std::size_t>(bits[j])];
                for (const auto& [e, coeff] : dw.terms()) {
                    Exponents mono = mono_mul(src[c].mono, e);
                    auto it = dst_index.find(std::make_pair(sub, mono));
                    if (it == dst_index.end())
                        throw Error(errc::internal, "contraction left its degree slice");
                    m.at(it->second, c) += sign * minus_i * coeff;
                }
            }
        }
        return m;
    };

    for (int k = 0; k <= d; ++k) cx.cohomology_dims[-k] = 0;
    for (long n = 0; n <= cx.slice_bound; ++n) {
        for (int k = 0; k <= d; ++k) {
            auto cur = slice_basis(k, n);
            if (cur.empty()) continue;
            std::size_t z;
            if (k == 0) {
                z = cur.size();
            } else {
                auto below = slice_basis(k - 1, n);
                QMatrix dk = slice_matrix(cur, below);
                z = cur.size() - dk.rank();
            }
            std::size_t b = 0;
            if (k < d) {
                auto above = slice_basis(k + 1, n);
                if (!above.empty()) {
                    QMatrix dk1 = slice_matrix(above, cur);
                    b = dk1.rank();
                }
            }
            std::size_t dim = z - b;
            if (dim > 0 && n > socle_top)
                throw Error(errc::internal,
                            "koszul cohomology did not stabilize below the slice bound");
            cx.cohomology_dims[-k] += dim;
        }
    }
    return cx;
}

}  // namespace lgtk
