#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lgtk/hom_cohomology.hpp"
#include "lgtk/poly_io.hpp"
#include "lgtk/residues.hpp"

namespace lgtk {

struct TftOptions {
    MonomialOrder order;
    GroebnerOptions groebner;
    std::uint64_t seed = 0;
    bool timings = false;
};

// Everything the axiom checks consume: the closed-sector algebra, the residue
// machinery, the named branes and the full table of boundary cohomologies.
struct TftInstance {
    Polynomial potential;
    std::vector<std::string> variables;
    VolumeForm vol;
    Normalization norm;
    TftOptions opts;
    MilnorAlgebra milnor;
    ResidueEngine engine;
    std::vector<std::pair<std::string, MatrixFactorization>> objects;
    std::map<std::pair<std::size_t, std::size_t>, HomCohomology> homs;

    const HomCohomology& hom(std::size_t i, std::size_t j) const {
        return homs.at(std::make_pair(i, j));
    }
    int dim() const { return potential.num_vars(); }
};

enum class CheckStatus { pass, fail, pass_up_to_scalar, conjecture_verified, conjecture_refuted };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::pass_up_to_scalar: return "pass-up-to-scalar";
        case CheckStatus::conjecture_verified: return "conjecture-verified";
        case CheckStatus::conjecture_refuted: return "conjecture-refuted";
    }
    return "unknown";
}

struct AxiomCheck {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    bool required = true;
    std::optional<GaussianRational> constant;
    std::vector<std::string> witnesses;
    std::string note;
    double millis = 0.0;

    bool ok() const {
        return status == CheckStatus::pass || status == CheckStatus::pass_up_to_scalar ||
               status == CheckStatus::conjecture_verified;
    }
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    std::string instance_digest;

    bool all_required_pass() const {
        for (const auto& c : checks)
            if (c.required && !c.ok()) return false;
        return true;
    }
};

namespace detail {

// Fits a single scalar c with rhs = c * lhs across all recorded pairs.
struct ScalarFit {
    std::optional<GaussianRational> constant;
    std::vector<std::string> mismatches;

    void add(const GaussianRational& lhs, const GaussianRational& rhs, const std::string& witness) {
        if (lhs.is_zero() && rhs.is_zero()) return;
        if (lhs.is_zero() || rhs.is_zero()) {
            mismatches.push_back(witness + ": zero pattern differs (lhs=" + lhs.str() +
                                 ", rhs=" + rhs.str() + ")");
            return;
        }
        GaussianRational c = rhs / lhs;
        if (!constant)
            constant = c;
        else if (*constant != c)
            mismatches.push_back(witness + ": scalar drifts (" + c.str() + " vs " +
                                 constant->str() + ")");
    }

    void finish(AxiomCheck& check, bool conjecture) const {
        if (!mismatches.empty()) {
            check.status = conjecture ? CheckStatus::conjecture_refuted : CheckStatus::fail;
            check.witnesses = mismatches;
            return;
        }
        check.constant = constant;
        if (!constant || constant->is_one())
            check.status = conjecture ? CheckStatus::conjecture_verified : CheckStatus::pass;
        else
            check.status = conjecture ? CheckStatus::conjecture_verified
                                      : CheckStatus::pass_up_to_scalar;
    }
};

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string poly_matrix_string(const PolyMatrix& m, const std::vector<std::string>& vars,
                                      const MonomialOrder& order) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += ";";
        s += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ",";
            s += to_string(m.at(r, c), vars, order);
        }
        s += "]";
    }
    return s + "]";
}

inline std::string instance_canonical_string(const TftInstance& inst) {
    std::string s = "potential=" + to_string(inst.potential, inst.variables, inst.opts.order);
    s += ";vars=";
    for (std::size_t k = 0; k < inst.variables.size(); ++k) {
        if (k) s += ",";
        s += inst.variables[k];
    }
    s += ";order=" + inst.opts.order.name();
    s += ";phi=" + to_string(inst.vol.phi, inst.variables, inst.opts.order);
    s += ";A=" + inst.norm.bulk_constant.str();
    s += ";c_e=" + (inst.norm.c_e ? inst.norm.c_e->str() : std::string("default"));
    s += ";c_f=" + (inst.norm.c_f ? inst.norm.c_f->str() : std::string("default"));
    for (const auto& [name, mf] : inst.objects) {
        s += ";object " + name + ":rank=" + std::to_string(mf.rank.even) + "|" +
             std::to_string(mf.rank.odd);
        s += ":u=" + poly_matrix_string(mf.u(), inst.variables, inst.opts.order);
        s += ":v=" + poly_matrix_string(mf.v(), inst.variables, inst.opts.order);
    }
    return s;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15; k >= 0; --k) {
        s[static_cast<std::size_t>(k)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace detail

inline TftInstance build_instance(const Polynomial& potential,
                                  const std::vector<std::string>& variables,
                                  std::vector<std::pair<std::string, MatrixFactorization>> objects,
                                  const VolumeForm& vol, const Normalization& norm,
                                  const TftOptions& opts) {
    TftInstance inst;
    inst.potential = potential;
    inst.variables = variables;
    inst.vol = vol;
    inst.norm = norm;
    inst.opts = opts;
    inst.milnor = milnor_algebra(potential, opts.order, opts.groebner);
    inst.engine = residue_engine(inst.milnor, opts.groebner);
    inst.objects = std::move(objects);
    for (const auto& [name, mf] : inst.objects)
        if (mf.potential != potential)
            throw Error(errc::shape_mismatch, "object '" + name + "' factors a different potential");
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = 0; j < inst.objects.size(); ++j)
            inst.homs.emplace(std::make_pair(i, j),
                              hom_cohomology(inst.objects[i].second, inst.objects[j].second,
                                             inst.milnor));
    return inst;
}

namespace detail {

inline std::vector<const Morphism*> all_basis(const HomCohomology& h) {
    std::vector<const Morphism*> out;
    for (const auto& m : h.even_basis) out.push_back(&m);
    for (const auto& m : h.odd_basis) out.push_back(&m);
    return out;
}

inline Parity basis_parity(const HomCohomology& h, std::size_t k) {
    return k < h.even_dim() ? Parity::even : Parity::odd;
}

inline std::string coords_string(const std::vector<GaussianRational>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += v[k].str();
    }
    return s + ")";
}

}  // namespace detail

// e_a(1) versus the identity, exactly under the unit override and up to the
// recorded scalar under the instance normalization.
inline std::vector<AxiomCheck> check_unitality(const TftInstance& inst) {
    AxiomCheck unit{"unitality (c_e = 1 override)"};
    AxiomCheck inst_norm{"unitality (instance normalization)"};
    Normalization forced = inst.norm;
    forced.c_e = GaussianRational(1);
    detail::ScalarFit fit;
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& [name, a] = inst.objects[i];
        Polynomial one = Polynomial::constant(inst.dim(), GaussianRational(1));
        Morphism e1 = bulk_boundary(a, one, inst.milnor, forced);
        SuperMatrix id = SuperMatrix::identity(a.rank, inst.dim());
        if (e1.mat != id) {
            unit.status = CheckStatus::fail;
            unit.witnesses.push_back("object " + name + ": e(1) with c_e=1 is not the identity");
        }
        Morphism e = bulk_boundary(a, one, inst.milnor, inst.norm);
        // e(1) must be a scalar multiple of the identity entrywise.
        bool scalar_shape = true;
        GaussianRational diag;
        bool have = false;
        for (std::size_t r = 0; r < a.rank.even && scalar_shape; ++r)
            for (std::size_t c = 0; c < a.rank.even && scalar_shape; ++c) {
                const Polynomial& p = e.mat.ee().at(r, c);
                if (r != c) {
                    if (!p.is_zero()) scalar_shape = false;
                } else {
                    if (!p.is_constant()) scalar_shape = false;
                    else if (!have) {
                        diag = p.constant_term();
                        have = true;
                    } else if (diag != p.constant_term())
                        scalar_shape = false;
                }
            }
        for (std::size_t r = 0; r < a.rank.odd && scalar_shape; ++r)
            for (std::size_t c = 0; c < a.rank.odd && scalar_shape; ++c) {
                const Polynomial& p = e.mat.oo().at(r, c);
                if (r != c) {
                    if (!p.is_zero()) scalar_shape = false;
                } else if (!p.is_constant() || (have && diag != p.constant_term()))
                    scalar_shape = false;
            }
        if (!scalar_shape || e.mat.parity() == Parity::mixed || !e.mat.eo().is_zero() ||
            !e.mat.oe().is_zero()) {
            inst_norm.status = CheckStatus::fail;
            inst_norm.witnesses.push_back("object " + name + ": e(1) is not a scalar multiple of id");
            continue;
        }
        fit.add(GaussianRational(1), diag, "object " + name);
    }
    if (inst_norm.status != CheckStatus::fail) fit.finish(inst_norm, false);
    return {unit, inst_norm};
}

// e_a(h1 h2) versus e_a(h1) e_a(h2), compared in cohomology coordinates.
inline std::vector<AxiomCheck> check_multiplicativity(const TftInstance& inst) {
    AxiomCheck unit{"multiplicativity (c_e = 1 override)"};
    AxiomCheck inst_norm{"multiplicativity (instance normalization)"};
    Normalization forced = inst.norm;
    forced.c_e = GaussianRational(1);
    detail::ScalarFit fit;
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& [name, a] = inst.objects[i];
        const HomCohomology& h = inst.hom(i, i);
        for (std::size_t p = 0; p < inst.milnor.basis.size(); ++p)
            for (std::size_t q = p; q < inst.milnor.basis.size(); ++q) {
                Polynomial hp = Polynomial::monomial(inst.dim(), inst.milnor.basis[p],
                                                     GaussianRational(1));
                Polynomial hq = Polynomial::monomial(inst.dim(), inst.milnor.basis[q],
                                                     GaussianRational(1));
                std::string witness = "object " + name + ", basis " + std::to_string(p) + "*" +
                                      std::to_string(q);
                // unit override route, exact
                {
                    Morphism lhs = bulk_boundary(a, hp * hq, inst.milnor, forced);
                    Morphism rhs = compose(bulk_boundary(a, hp, inst.milnor, forced),
                                           bulk_boundary(a, hq, inst.milnor, forced));
                    auto cl = h.coordinates(lhs);
                    auto cr = h.coordinates(rhs);
                    if (cl != cr) {
                        unit.status = CheckStatus::fail;
                        unit.witnesses.push_back(witness + ": " + detail::coords_string(cl) +
                                                 " vs " + detail::coords_string(cr));
                    }
                }
                // instance normalization route, up to one scalar
                {
                    Morphism lhs = bulk_boundary(a, hp * hq, inst.milnor, inst.norm);
                    Morphism rhs = compose(bulk_boundary(a, hp, inst.milnor, inst.norm),
                                           bulk_boundary(a, hq, inst.milnor, inst.norm));
                    auto cl = h.coordinates(lhs);
                    auto cr = h.coordinates(rhs);
                    for (std::size_t k = 0; k < cl.size(); ++k)
                        fit.add(cl[k], cr[k], witness + " coord " + std::to_string(k));
                }
            }
    }
    fit.finish(inst_norm, false);
    if (inst_norm.status == CheckStatus::pass_up_to_scalar)
        inst_norm.note = "recorded constant is the unit normalization e(1) scalar";
    return {unit, inst_norm};
}

// e_b(h) t = t e_a(h) in cohomology for every boundary class t.
inline AxiomCheck check_centrality(const TftInstance& inst) {
    AxiomCheck check{"centrality"};
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = 0; j < inst.objects.size(); ++j) {
            const HomCohomology& h = inst.hom(i, j);
            auto basis = detail::all_basis(h);
            for (std::size_t t = 0; t < basis.size(); ++t)
                for (std::size_t p = 0; p < inst.milnor.basis.size(); ++p) {
                    Polynomial hp = Polynomial::monomial(inst.dim(), inst.milnor.basis[p],
                                                         GaussianRational(1));
                    Morphism left = compose(bulk_boundary(inst.objects[j].second, hp, inst.milnor,
                                                          inst.norm),
                                            *basis[t]);
                    Morphism right = compose(*basis[t],
                                             bulk_boundary(inst.objects[i].second, hp, inst.milnor,
                                                           inst.norm));
                    Morphism diff = make_morphism(left.source, left.target, left.mat - right.mat);
                    auto c = h.coordinates(diff);
                    for (const auto& x : c)
                        if (!x.is_zero()) {
                            check.status = CheckStatus::fail;
                            check.witnesses.push_back(
                                "objects (" + inst.objects[i].first + "," + inst.objects[j].first +
                                "), class " + std::to_string(t) + ", bulk basis " +
                                std::to_string(p) + ": " + detail::coords_string(c));
                            break;
                        }
                }
        }
    return check;
}

// NF(fg) = NF(gf) on the closed sector.
inline AxiomCheck check_supercommutativity(const TftInstance& inst) {
    AxiomCheck check{"bulk supercommutativity"};
    for (std::size_t p = 0; p < inst.milnor.basis.size(); ++p)
        for (std::size_t q = p + 1; q < inst.milnor.basis.size(); ++q) {
            Polynomial f = Polynomial::monomial(inst.dim(), inst.milnor.basis[p], GaussianRational(1));
            Polynomial g = Polynomial::monomial(inst.dim(), inst.milnor.basis[q], GaussianRational(1));
            if (inst.milnor.normal_form(f * g) != inst.milnor.normal_form(g * f)) {
                check.status = CheckStatus::fail;
                check.witnesses.push_back("basis " + std::to_string(p) + "," + std::to_string(q));
            }
        }
    return check;
}

// tr_b(t1 t2) = (-1)^{|t1||t2|} tr_a(t2 t1), exactly.
inline AxiomCheck check_cyclicity(const TftInstance& inst) {
    AxiomCheck check{"boundary trace cyclicity"};
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = 0; j < inst.objects.size(); ++j) {
            const HomCohomology& hij = inst.hom(i, j);
            const HomCohomology& hji = inst.hom(j, i);
            auto bij = detail::all_basis(hij);
            auto bji = detail::all_basis(hji);
            for (std::size_t s = 0; s < bij.size(); ++s)
                for (std::size_t t = 0; t < bji.size(); ++t) {
                    Morphism fwd = compose(*bij[s], *bji[t]);   // End(b_j)
                    Morphism bwd = compose(*bji[t], *bij[s]);   // End(b_i)
                    GaussianRational lhs = boundary_trace(inst.engine, inst.objects[j].second, fwd,
                                                          inst.milnor, inst.norm);
                    GaussianRational rhs = boundary_trace(inst.engine, inst.objects[i].second, bwd,
                                                          inst.milnor, inst.norm);
                    bool both_odd = detail::basis_parity(hij, s) == Parity::odd &&
                                    detail::basis_parity(hji, t) == Parity::odd;
                    if (both_odd) rhs = -rhs;
                    if (lhs != rhs) {
                        check.status = CheckStatus::fail;
                        check.witnesses.push_back(
                            "objects (" + inst.objects[i].first + "," + inst.objects[j].first +
                            "), classes " + std::to_string(s) + "," + std::to_string(t) + ": " +
                            lhs.str() + " vs " + rhs.str());
                    }
                }
        }
    return check;
}

// Boundary traces and disk one-point functions vanish off the dimension
// parity.
inline AxiomCheck check_degree_selection(const TftInstance& inst) {
    AxiomCheck check{"degree selection"};
    Parity sel = parity_of_degree(inst.dim());
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const HomCohomology& h = inst.hom(i, i);
        auto basis = detail::all_basis(h);
        for (std::size_t s = 0; s < basis.size(); ++s) {
            if (detail::basis_parity(h, s) == sel) continue;
            GaussianRational tr = boundary_trace(inst.engine, inst.objects[i].second, *basis[s],
                                                 inst.milnor, inst.norm);
            Polynomial f = boundary_bulk(inst.objects[i].second, *basis[s], inst.milnor, inst.vol,
                                         inst.norm);
            if (!tr.is_zero() || !f.is_zero()) {
                check.status = CheckStatus::fail;
                check.witnesses.push_back("object " + inst.objects[i].first + ", class " +
                                          std::to_string(s));
            }
        }
    }
    return check;
}

// Tr(h f_a(t)) = tr_a(e_a(h) t), both sides through their own route.
inline AxiomCheck check_adjointness(const TftInstance& inst) {
    AxiomCheck check{"bulk-boundary adjointness"};
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& [name, a] = inst.objects[i];
        const HomCohomology& h = inst.hom(i, i);
        auto basis = detail::all_basis(h);
        for (std::size_t p = 0; p < inst.milnor.basis.size(); ++p)
            for (std::size_t s = 0; s < basis.size(); ++s) {
                Polynomial hp = Polynomial::monomial(inst.dim(), inst.milnor.basis[p],
                                                     GaussianRational(1));
                Polynomial f = boundary_bulk(a, *basis[s], inst.milnor, inst.vol, inst.norm);
                GaussianRational lhs = bulk_trace(inst.engine, hp * f, inst.vol, inst.norm);
                Morphism et = compose(bulk_boundary(a, hp, inst.milnor, inst.norm), *basis[s]);
                GaussianRational rhs = boundary_trace(inst.engine, a, et, inst.milnor, inst.norm);
                if (lhs != rhs) {
                    check.status = CheckStatus::fail;
                    check.witnesses.push_back("object " + name + ", bulk " + std::to_string(p) +
                                              ", class " + std::to_string(s) + ": " + lhs.str() +
                                              " vs " + rhs.str());
                }
            }
    }
    return check;
}

// Rank of the bulk pairing Tr(b_p b_q).
inline AxiomCheck check_nondegeneracy_bulk(const TftInstance& inst) {
    AxiomCheck check{"bulk pairing non-degeneracy"};
    check.required = false;
    std::size_t mu = inst.milnor.dimension();
    QMatrix gram(mu, mu);
    for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = 0; q < mu; ++q) {
            Polynomial bp = Polynomial::monomial(inst.dim(), inst.milnor.basis[p], GaussianRational(1));
            Polynomial bq = Polynomial::monomial(inst.dim(), inst.milnor.basis[q], GaussianRational(1));
            gram.at(p, q) = bulk_trace(inst.engine, bp * bq, inst.vol, inst.norm);
        }
    std::size_t rank = gram.rank();
    if (rank == mu) {
        check.status = CheckStatus::conjecture_verified;
    } else {
        check.status = CheckStatus::conjecture_refuted;
        check.witnesses.push_back("rank " + std::to_string(rank) + " of " + std::to_string(mu));
    }
    return check;
}

// The boundary pairing tr_b(s t) between Hom(a,b) and Hom(b,a): the
// parity-compatible square blocks must be invertible.
inline AxiomCheck check_nondegeneracy_boundary(const TftInstance& inst) {
    AxiomCheck check{"boundary pairing non-degeneracy"};
    check.required = false;
    check.status = CheckStatus::conjecture_verified;
    Parity sel = parity_of_degree(inst.dim());
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = 0; j < inst.objects.size(); ++j) {
            const HomCohomology& hij = inst.hom(i, j);
            const HomCohomology& hji = inst.hom(j, i);
            auto bij = detail::all_basis(hij);
            auto bji = detail::all_basis(hji);
            std::string pair_name = "(" + inst.objects[i].first + "," + inst.objects[j].first + ")";
            for (Parity prow : {Parity::even, Parity::odd}) {
                // the column parity the trace couples to
                Parity pcol = (prow == Parity::even) == (sel == Parity::even) ? Parity::even
                                                                              : Parity::odd;
                std::vector<std::size_t> rows, cols;
                for (std::size_t s = 0; s < bij.size(); ++s)
                    if (detail::basis_parity(hij, s) == prow) rows.push_back(s);
                for (std::size_t t = 0; t < bji.size(); ++t)
                    if (detail::basis_parity(hji, t) == pcol) cols.push_back(t);
                if (rows.size() != cols.size()) {
                    check.status = CheckStatus::conjecture_refuted;
                    check.witnesses.push_back("pair " + pair_name + ": block " +
                                              parity_name(prow) + " is " +
                                              std::to_string(rows.size()) + "x" +
                                              std::to_string(cols.size()));
                    continue;
                }
                if (rows.empty()) continue;
                QMatrix block(rows.size(), cols.size());
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        Morphism prod = compose(*bij[rows[r]], *bji[cols[c]]);
                        block.at(r, c) = boundary_trace(inst.engine, inst.objects[j].second, prod,
                                                        inst.milnor, inst.norm);
                    }
                if (block.rank() != rows.size()) {
                    check.status = CheckStatus::conjecture_refuted;
                    check.witnesses.push_back("pair " + pair_name + ": " + parity_name(prow) +
                                              " block is singular");
                }
            }
        }
    return check;
}

// Tr(f_a(t1) f_b(t2)) against the supertrace of the boundary-boundary
// operator t |-> (-1)^{|t1||t|} t2 t t1 on Hom(a,b), up to one overall
// constant fitted across the whole grid.
inline AxiomCheck check_cardy(const TftInstance& inst) {
    AxiomCheck check{"cardy condition"};
    check.required = false;
    check.note = "boundary-boundary operator uses the graded right-multiplication sign "
                 "(-1)^{|t1||t|}";
    detail::ScalarFit fit;
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = 0; j < inst.objects.size(); ++j) {
            const HomCohomology& haa = inst.hom(i, i);
            const HomCohomology& hbb = inst.hom(j, j);
            const HomCohomology& hab = inst.hom(i, j);
            auto b1 = detail::all_basis(haa);
            auto b2 = detail::all_basis(hbb);
            auto bab = detail::all_basis(hab);
            for (std::size_t s = 0; s < b1.size(); ++s)
                for (std::size_t t = 0; t < b2.size(); ++t) {
                    Polynomial f1 = boundary_bulk(inst.objects[i].second, *b1[s], inst.milnor,
                                                  inst.vol, inst.norm);
                    Polynomial f2 = boundary_bulk(inst.objects[j].second, *b2[t], inst.milnor,
                                                  inst.vol, inst.norm);
                    GaussianRational lhs = bulk_trace(inst.engine, f1 * f2, inst.vol, inst.norm);
                    bool t1_odd = detail::basis_parity(haa, s) == Parity::odd;
                    GaussianRational rhs;
                    for (std::size_t k = 0; k < bab.size(); ++k) {
                        Morphism img = compose(*b2[t], compose(*bab[k], *b1[s]));
                        if (t1_odd && detail::basis_parity(hab, k) == Parity::odd)
                            img.mat = -img.mat;
                        auto coords = hab.coordinates(img);
                        GaussianRational diag = coords[k];
                        rhs += detail::basis_parity(hab, k) == Parity::even ? diag : -diag;
                    }
                    fit.add(rhs, lhs,
                            "objects (" + inst.objects[i].first + "," + inst.objects[j].first +
                                "), classes " + std::to_string(s) + "," + std::to_string(t));
                }
        }
    fit.finish(check, true);
    return check;
}

// Seeded spot check: traces and disk one-point functions do not move under
// exact shifts s -> s + d(x).
inline AxiomCheck check_trace_invariance(const TftInstance& inst) {
    AxiomCheck check{"trace invariance under exact shifts (randomized)"};
    std::mt19937_64 rng(inst.opts.seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    Parity sel = parity_of_degree(inst.dim());
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& [name, a] = inst.objects[i];
        const HomCohomology& h = inst.hom(i, i);
        const auto& sel_basis = sel == Parity::even ? h.even_basis : h.odd_basis;
        if (sel_basis.empty()) continue;
        for (int trial = 0; trial < 2; ++trial) {
            SuperMatrix base = SuperMatrix::zero(a.rank, a.rank, inst.dim());
            for (const auto& b : sel_basis)
                base += GaussianRational(Rational(coeff(rng))) * b.mat;
            // random morphism of the opposite parity, low-degree entries
            std::vector<long> ones(static_cast<std::size_t>(inst.dim()), 1);
            std::vector<Exponents> monos = detail::monomials_up_to_weight(ones, 2);
            Parity other = sel == Parity::even ? Parity::odd : Parity::even;
            std::size_t r0, c0, r1, c1;
            detail::block_shape(a.rank, a.rank, other, 0, r0, c0);
            detail::block_shape(a.rank, a.rank, other, 1, r1, c1);
            PolyMatrix x0(r0, c0, inst.dim()), x1(r1, c1, inst.dim());
            for (auto* blk : {&x0, &x1})
                for (std::size_t r = 0; r < blk->rows(); ++r)
                    for (std::size_t c = 0; c < blk->cols(); ++c)
                        for (const auto& m : monos)
                            blk->at(r, c).add_term(m, GaussianRational(Rational(coeff(rng))));
            SuperMatrix xm = other == Parity::even
                                 ? SuperMatrix::even_map(a.rank, a.rank, x0, x1)
                                 : SuperMatrix::odd_map(a.rank, a.rank, x0, x1);
            Morphism s0 = make_morphism(a, a, base);
            Morphism x = make_morphism(a, a, xm);
            Morphism s1 = make_morphism(a, a, base + defect_differential(x).mat);
            GaussianRational t0 = boundary_trace(inst.engine, a, s0, inst.milnor, inst.norm);
            GaussianRational t1 = boundary_trace(inst.engine, a, s1, inst.milnor, inst.norm);
            Polynomial f0 = boundary_bulk(a, s0, inst.milnor, inst.vol, inst.norm);
            Polynomial f1 = boundary_bulk(a, s1, inst.milnor, inst.vol, inst.norm);
            if (t0 != t1 || f0 != f1) {
                check.status = CheckStatus::fail;
                check.witnesses.push_back("object " + name + ", trial " + std::to_string(trial));
            }
        }
    }
    return check;
}

inline AxiomReport full_report(const TftInstance& inst) {
    AxiomReport report;
    report.instance_digest = detail::hex64(detail::fnv1a64(detail::instance_canonical_string(inst)));
    auto timed = [&](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto result = fn();
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if constexpr (std::is_same_v<std::decay_t<decltype(result)>, AxiomCheck>) {
            AxiomCheck c = result;
            c.millis = ms;
            report.checks.push_back(std::move(c));
        } else {
            for (AxiomCheck& c : result) {
                c.millis = ms / static_cast<double>(result.size());
                report.checks.push_back(std::move(c));
            }
        }
    };
    timed([&] { return check_unitality(inst); });
    timed([&] { return check_multiplicativity(inst); });
    timed([&] { return check_centrality(inst); });
    timed([&] { return check_supercommutativity(inst); });
    timed([&] { return check_cyclicity(inst); });
    timed([&] { return check_degree_selection(inst); });
    timed([&] { return check_adjointness(inst); });
    timed([&] { return check_trace_invariance(inst); });
    timed([&] { return check_nondegeneracy_bulk(inst); });
    timed([&] { return check_nondegeneracy_boundary(inst); });
    timed([&] { return check_cardy(inst); });
    return report;
}

}  // namespace lgtk
