#pragma once

#include <string>
#include <vector>

#include "lgtk/supermatrix.hpp"

namespace lgtk {

// Finite-rank matrix factorization of a potential W: an odd operator
// D = [[0, v], [u, 0]] on a graded free module with D^2 = W * Id, i.e.
// v*u = W on the even part and u*v = W on the odd part.
class MatrixFactorization {
public:
    Polynomial potential;
    SuperRank rank;
    SuperMatrix d;

    const PolyMatrix& u() const { return d.oe(); }
    const PolyMatrix& v() const { return d.eo(); }

    friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
        return a.potential == b.potential && a.rank == b.rank && a.d == b.d;
    }
    friend bool operator!=(const MatrixFactorization& a, const MatrixFactorization& b) {
        return !(a == b);
    }
};

// Validates the factorization identity exactly; the error message names the
// first offending block.
inline MatrixFactorization make_factorization(const Polynomial& w, const SuperMatrix& d) {
    if (d.source() != d.target())
        throw Error(errc::shape_mismatch, "differential must be an endomorphism");
    if (!d.has_parity(Parity::odd))
        throw Error(errc::not_a_factorization, "differential has even or mixed blocks");
    SuperMatrix sq = d * d;
    SuperMatrix expect = w * SuperMatrix::identity(d.source(), w.num_vars());
    if (sq.ee() != expect.ee())
        throw Error(errc::not_a_factorization, "v*u does not equal W*Id on the even summand");
    if (sq.oo() != expect.oo())
        throw Error(errc::not_a_factorization, "u*v does not equal W*Id on the odd summand");
    MatrixFactorization mf;
    mf.potential = w;
    mf.rank = d.source();
    mf.d = d;
    return mf;
}

inline MatrixFactorization make_factorization(const Polynomial& w, const PolyMatrix& u,
                                              const PolyMatrix& v) {
    SuperRank rank{v.rows(), u.rows()};
    return make_factorization(w, SuperMatrix::odd_map(rank, rank, v, u));
}

// Iterated rank-one tensor product: factors (u_k, v_k) assemble a
// factorization of sum_k u_k*v_k of rank 2^(n-1) | 2^(n-1).
inline MatrixFactorization koszul_factorization(const std::vector<Polynomial>& us,
                                                const std::vector<Polynomial>& vs) {
    if (us.empty() || us.size() != vs.size())
        throw Error(errc::shape_mismatch, "koszul factors must pair up");
    int nv = us[0].num_vars();
    Polynomial w(nv);
    for (std::size_t k = 0; k < us.size(); ++k) w += us[k] * vs[k];

    PolyMatrix u_cur(1, 1, nv), v_cur(1, 1, nv);
    u_cur.at(0, 0) = us[0];
    v_cur.at(0, 0) = vs[0];
    for (std::size_t k = 1; k < us.size(); ++k) {
        const Polynomial& u = us[k];
        const Polynomial& v = vs[k];
        std::size_t r0 = v_cur.rows();  // even rank so far
        std::size_t r1 = u_cur.rows();  // odd rank so far
        // New module: even = E0F0 + E1F1, odd = E1F0 + E0F1.
        PolyMatrix u_new(r1 + r0, r0 + r1, nv);
        PolyMatrix v_new(r0 + r1, r1 + r0, nv);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r0; ++j) u_new.at(i, j) = u_cur.at(i, j);
        for (std::size_t i = 0; i < r1; ++i) u_new.at(i, r0 + i) = -v;
        for (std::size_t i = 0; i < r0; ++i) u_new.at(r1 + i, i) = u;
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < r1; ++j) u_new.at(r1 + i, r0 + j) = v_cur.at(i, j);
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < r1; ++j) v_new.at(i, j) = v_cur.at(i, j);
        for (std::size_t i = 0; i < r0; ++i) v_new.at(i, r1 + i) = v;
        for (std::size_t i = 0; i < r1; ++i) v_new.at(r0 + i, i) = -u;
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r0; ++j) v_new.at(r0 + i, r1 + j) = u_cur.at(i, j);
        u_cur = std::move(u_new);
        v_cur = std::move(v_new);
    }
    return make_factorization(w, u_cur, v_cur);
}

// Parity shift [1]: swaps the summands and negates the differential blocks;
// applying it twice gives back the original factorization.
inline MatrixFactorization shift(const MatrixFactorization& a) {
    return make_factorization(a.potential, -a.v(), -a.u());
}

// Morphism of factorizations over the same potential, as a block matrix
// between the underlying modules. Closedness under the defect differential is
// a property checked where needed, not an invariant of the type.
struct Morphism {
    MatrixFactorization source;
    MatrixFactorization target;
    SuperMatrix mat;

    Parity parity() const { return mat.parity(); }
};

inline Morphism make_morphism(const MatrixFactorization& source, const MatrixFactorization& target,
                              const SuperMatrix& mat) {
    if (source.potential != target.potential)
        throw Error(errc::shape_mismatch, "morphism endpoints carry different potentials");
    if (mat.source() != source.rank || mat.target() != target.rank)
        throw Error(errc::shape_mismatch, "morphism blocks do not match endpoint ranks");
    return {source, target, mat};
}

inline Morphism identity_morphism(const MatrixFactorization& a) {
    return {a, a, SuperMatrix::identity(a.rank, a.potential.num_vars())};
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.source != f.target)
        throw Error(errc::shape_mismatch, "composition endpoints do not match");
    return {f.source, g.target, g.mat * f.mat};
}

// d(f) = D_target * f - (-1)^{|f|} f * D_source; odd morphisms get the plus
// sign. Squares to zero and flips parity.
inline Morphism defect_differential(const Morphism& f) {
    Parity p = f.mat.parity();
    if (p == Parity::mixed)
        throw Error(errc::mixed_parity, "defect differential needs a pure-parity morphism");
    SuperMatrix df = f.target.d * f.mat;
    SuperMatrix fd = f.mat * f.source.d;
    return {f.source, f.target, p == Parity::odd ? df + fd : df - fd};
}

inline bool is_closed(const Morphism& f) { return defect_differential(f).mat.is_zero(); }

}  // namespace lgtk
