#pragma once

#include <optional>
#include <vector>

#include "lgtk/matrix_factorization.hpp"
#include "lgtk/milnor.hpp"

namespace lgtk {

// Holomorphic volume density phi against the standard coordinate frame;
// the default is 1.
struct VolumeForm {
    Polynomial phi;

    static VolumeForm unit(int num_vars) {
        return {Polynomial::constant(num_vars, GaussianRational(1))};
    }
};

// Overall bulk normalization A and optional overrides for the disk one-point
// constants; absent overrides mean the dimension-dependent defaults below.
struct Normalization {
    GaussianRational bulk_constant = GaussianRational(1);
    std::optional<GaussianRational> c_e;
    std::optional<GaussianRational> c_f;
};

// Defaults: c_f = i^d / d!  and  c_e = i^d (-1)^{d(d-1)/2}.
inline GaussianRational default_c_f(int d) {
    return i_power(d) * GaussianRational(Rational(1) / factorial_rational(d));
}
inline GaussianRational default_c_e(int d) {
    GaussianRational sign((d * (d - 1) / 2) % 2 == 0 ? 1 : -1);
    return i_power(d) * sign;
}
inline GaussianRational effective_c_f(const Normalization& n, int d) {
    return n.c_f ? *n.c_f : default_c_f(d);
}
inline GaussianRational effective_c_e(const Normalization& n, int d) {
    return n.c_e ? *n.c_e : default_c_e(d);
}
// Prefactor of the boundary trace, (-1)^{d(d-1)/2} / d!.
inline GaussianRational boundary_trace_prefactor(int d) {
    GaussianRational sign((d * (d - 1) / 2) % 2 == 0 ? 1 : -1);
    return sign * GaussianRational(Rational(1) / factorial_rational(d));
}

namespace detail {

inline Polynomial poly_matrix_determinant(const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    int nv = n == 0 ? 0 : m[0][0].num_vars();
    if (n == 0) return Polynomial::constant(nv, GaussianRational(1));
    if (n == 1) return m[0][0];
    Polynomial det(nv);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][k] * poly_matrix_determinant(minor);
        det += k % 2 == 0 ? term : -term;
    }
    return det;
}

// Reduce h modulo q, where q is monic and univariate in `var`; plain
// univariate division with polynomial coefficients in the other variables.
inline Polynomial reduce_mod_univariate(Polynomial h, const Polynomial& q, int var) {
    int dq = q.degree_in(var);
    while (true) {
        int top = -1;
        Exponents te;
        GaussianRational tc;
        for (const auto& [e, c] : h.terms()) {
            if (e[static_cast<std::size_t>(var)] >= dq && e[static_cast<std::size_t>(var)] > top) {
                top = e[static_cast<std::size_t>(var)];
                te = e;
                tc = c;
            }
        }
        if (top < 0) return h;
        Exponents cof = te;
        cof[static_cast<std::size_t>(var)] = top - dq;
        h -= Polynomial::monomial(h.num_vars(), cof, tc) * q;
    }
}

// Coefficient of z_var^(k) viewed as a polynomial in the other variables
// (the variable slot is zeroed, the ring is unchanged).
inline Polynomial coefficient_in_variable(const Polynomial& h, int var, int k) {
    Polynomial out(h.num_vars());
    for (const auto& [e, c] : h.terms()) {
        if (e[static_cast<std::size_t>(var)] != k) continue;
        Exponents r = e;
        r[static_cast<std::size_t>(var)] = 0;
        out.add_term(r, c);
    }
    return out;
}

}  // namespace detail

// Global Grothendieck residue machinery for an isolated critical locus.
//
// For each variable a monic univariate denominator q_i(z_i) in the Jacobian
// ideal is found, together with an exact certificate q_i = sum_j a_ij dW/dz_j.
// The pure-power route q_i = z_i^{N_i} (incrementing search) is tried first;
// when the critical points do not all sit at the origin no pure power is a
// member, and the minimal univariate eliminant from a lex elimination basis
// is used instead. The residue transformation law turns Res[g dz / dW] into
// the residue of g*det(a) against the separated denominators q_1...q_d, which
// evaluates by iterated univariate reduction; for pure powers this is exactly
// the corner-coefficient extraction.
class ResidueEngine {
public:
    Polynomial potential;
    GroebnerBasis jacobian_gb;
    std::size_t quotient_dim = 0;
    std::vector<Polynomial> denominators;            // q_i, monic, univariate in z_i
    std::vector<std::vector<Polynomial>> certificate;  // q_i = sum_j certificate[i][j]*dW_j
    Polynomial certificate_determinant;
    bool pure_powers = true;
    std::vector<int> exponents;  // deg_{z_i} q_i

    GaussianRational residue(const Polynomial& g) const {
        if (g.num_vars() != potential.num_vars())
            throw Error(errc::shape_mismatch, "residue argument lives in the wrong ring");
        Polynomial h = g * certificate_determinant;
        for (int var = 0; var < potential.num_vars(); ++var) {
            h = detail::reduce_mod_univariate(h, denominators[static_cast<std::size_t>(var)], var);
            h = detail::coefficient_in_variable(h, var,
                                                exponents[static_cast<std::size_t>(var)] - 1);
        }
        return h.constant_term();
    }
};

inline ResidueEngine residue_engine(const MilnorAlgebra& milnor, const GroebnerOptions& opts = {}) {
    ResidueEngine eng;
    eng.potential = milnor.potential;
    eng.jacobian_gb = milnor.jacobian_gb;
    eng.quotient_dim = milnor.dimension();
    int nv = eng.potential.num_vars();
    const std::vector<Polynomial>& partials = eng.jacobian_gb.original;

    for (int var = 0; var < nv; ++var) {
        std::optional<Polynomial> q;
        std::optional<std::vector<Polynomial>> cert;
        // Incrementing pure-power search; the nilpotency index in a
        // mu-dimensional quotient is at most mu, so the search is bounded.
        long bound = static_cast<long>(eng.quotient_dim) + 1;
        for (long n = 1; n <= bound; ++n) {
            Exponents e(static_cast<std::size_t>(nv), 0);
            e[static_cast<std::size_t>(var)] = static_cast<int>(n);
            Polynomial zn = Polynomial::monomial(nv, e, GaussianRational(1));
            auto c = membership_certificate(zn, eng.jacobian_gb);
            if (c) {
                q = zn;
                cert = c;
                break;
            }
        }
        if (!q) {
            // Critical points away from the origin: fall back to the monic
            // univariate eliminant of the ideal in this variable.
            eng.pure_powers = false;
            GroebnerBasis elim =
                groebner_basis(partials, elimination_order_keeping_last(nv, var), opts);
            for (const auto& g : elim.generators) {
                if (!g.is_univariate_in(var)) continue;
                if (!q || g.degree_in(var) < q->degree_in(var)) q = g;
            }
            if (!q)
                throw Error(errc::internal,
                            "no univariate eliminant found despite finite quotient");
            cert = membership_certificate(*q, eng.jacobian_gb);
            if (!cert)
                throw Error(errc::internal, "eliminant escaped its own ideal");
        }
        eng.denominators.push_back(*q);
        eng.certificate.push_back(*cert);
        eng.exponents.push_back(q->degree_in(var));
    }

    // Exact re-expansion of every certificate row.
    for (int var = 0; var < nv; ++var) {
        Polynomial acc(nv);
        for (int j = 0; j < nv; ++j)
            acc += eng.certificate[static_cast<std::size_t>(var)][static_cast<std::size_t>(j)] *
                   partials[static_cast<std::size_t>(j)];
        if (acc != eng.denominators[static_cast<std::size_t>(var)])
            throw Error(errc::internal, "membership certificate failed re-expansion");
    }
    eng.certificate_determinant = detail::poly_matrix_determinant(eng.certificate);
    return eng;
}

inline GaussianRational global_residue(const ResidueEngine& eng, const Polynomial& g) {
    return eng.residue(g);
}

// Tr(f) = A * Res[f * phi].
inline GaussianRational bulk_trace(const ResidueEngine& eng, const Polynomial& f,
                                   const VolumeForm& vol, const Normalization& norm = {}) {
    return norm.bulk_constant * eng.residue(f * vol.phi);
}

// Antisymmetrized product sum_sigma sign(sigma) dD/dz_{sigma(1)} ... dD/dz_{sigma(d)}.
inline SuperMatrix epsilon_derivative_sum(const MatrixFactorization& a) {
    int nv = a.potential.num_vars();
    std::vector<SuperMatrix> partials;
    partials.reserve(static_cast<std::size_t>(nv));
    for (int k = 0; k < nv; ++k) partials.push_back(a.d.derivative(k));
    std::vector<int> perm(static_cast<std::size_t>(nv));
    for (int k = 0; k < nv; ++k) perm[static_cast<std::size_t>(k)] = k;
    SuperMatrix acc = SuperMatrix::zero(a.rank, a.rank, nv);
    do {
        int inv = 0;
        for (std::size_t x = 0; x < perm.size(); ++x)
            for (std::size_t y = x + 1; y < perm.size(); ++y)
                if (perm[x] > perm[y]) ++inv;
        SuperMatrix prod = partials[static_cast<std::size_t>(perm[0])];
        for (std::size_t k = 1; k < perm.size(); ++k)
            prod = prod * partials[static_cast<std::size_t>(perm[k])];
        acc += inv % 2 == 0 ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// det_Omega(dD) = (1/phi) * epsilon sum; the density must be a nonzero
// constant for the germ-level disk kernel.
inline SuperMatrix det_omega_dD(const MatrixFactorization& a, const VolumeForm& vol) {
    if (!vol.phi.is_constant() || vol.phi.is_zero())
        throw Error(errc::non_constant_phi,
                    "disk kernel needs a constant nonzero volume density");
    GaussianRational inv = GaussianRational(1) / vol.phi.constant_term();
    return inv * epsilon_derivative_sum(a);
}

namespace detail {

inline void require_boundary_insertion(const MatrixFactorization& a, const Morphism& s,
                                       const MilnorAlgebra& milnor) {
    if (s.source != a || s.target != a)
        throw Error(errc::shape_mismatch, "boundary insertion must be an endomorphism of the brane");
    SuperMatrix d = defect_differential(s).mat;
    if (d.is_zero()) return;
    if (d.map_entries([&](const Polynomial& p) { return milnor.normal_form(p); }).is_zero()) return;
    throw Error(errc::not_closed, "boundary insertion is not closed");
}

}  // namespace detail

// Disk one-point map f_a(s) = c_f * str(det_Omega(dD) s), reduced to its
// Milnor algebra normal form.
inline Polynomial boundary_bulk(const MatrixFactorization& a, const Morphism& s,
                                const MilnorAlgebra& milnor, const VolumeForm& vol,
                                const Normalization& norm = {}) {
    detail::require_boundary_insertion(a, s, milnor);
    int d = a.potential.num_vars();
    Polynomial str = (det_omega_dD(a, vol) * s.mat).supertrace();
    Polynomial out = milnor.normal_form(str);
    return effective_c_f(norm, d) * out;
}

// Central insertion e_a(f) = c_e * NF(f) * id_a.
inline Morphism bulk_boundary(const MatrixFactorization& a, const Polynomial& f,
                              const MilnorAlgebra& milnor, const Normalization& norm = {}) {
    int d = a.potential.num_vars();
    Polynomial nf = milnor.normal_form(f);
    SuperMatrix mat = (effective_c_e(norm, d) * nf) * SuperMatrix::identity(a.rank, d);
    return make_morphism(a, a, mat);
}

// Boundary trace tr_a(s): the disk correlator with the volume density
// cancelling against det_Omega, so the value does not depend on phi.
inline GaussianRational boundary_trace(const ResidueEngine& eng, const MatrixFactorization& a,
                                       const Morphism& s, const MilnorAlgebra& milnor,
                                       const Normalization& norm = {}) {
    detail::require_boundary_insertion(a, s, milnor);
    int d = a.potential.num_vars();
    Polynomial str = (epsilon_derivative_sum(a) * s.mat).supertrace();
    return boundary_trace_prefactor(d) * norm.bulk_constant * eng.residue(str);
}

}  // namespace lgtk
