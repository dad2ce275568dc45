#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "lgtk/matrix_factorization.hpp"
#include "lgtk/milnor.hpp"
#include "lgtk/qlinalg.hpp"

namespace lgtk {

namespace detail {

// Coordinate frame for morphisms of fixed parity: one slot per
// (block, row, col, monomial). Block 0 is ee for even maps and eo for odd
// maps, block 1 is oo / oe. Entries are sorted by weighted degree first so
// the slots of degree <= N always form a prefix, shared between frames of
// different bounds.
struct HomFrame {
    struct Entry {
        int block;
        std::size_t row, col;
        Exponents mono;
        long wdeg;
    };
    std::vector<Entry> entries;
    std::map<std::tuple<int, std::size_t, std::size_t, Exponents>, std::size_t> index;

    std::size_t size() const { return entries.size(); }

    void build_index() {
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const auto& e = entries[k];
            index.emplace(std::make_tuple(e.block, e.row, e.col, e.mono), k);
        }
    }
};

inline void block_shape(const SuperRank& target, const SuperRank& source, Parity parity, int block,
                        std::size_t& rows, std::size_t& cols) {
    if (parity == Parity::even) {
        rows = block == 0 ? target.even : target.odd;
        cols = block == 0 ? source.even : source.odd;
    } else {
        rows = block == 0 ? target.even : target.odd;
        cols = block == 0 ? source.odd : source.even;
    }
}

inline HomFrame build_frame(const SuperRank& target, const SuperRank& source, Parity parity,
                            const std::vector<long>& weights, long bound) {
    HomFrame f;
    std::vector<Exponents> monos = monomials_up_to_weight(weights, bound);
    for (int block = 0; block < 2; ++block) {
        std::size_t rows = 0, cols = 0;
        block_shape(target, source, parity, block, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (const auto& m : monos)
                    f.entries.push_back({block, r, c, m, weighted_degree(m, weights)});
    }
    std::sort(f.entries.begin(), f.entries.end(), [](const auto& a, const auto& b) {
        return std::tie(a.wdeg, a.block, a.row, a.col, a.mono) <
               std::tie(b.wdeg, b.block, b.row, b.col, b.mono);
    });
    f.build_index();
    return f;
}

// Frame over the Milnor standard monomials instead of a degree truncation.
inline HomFrame standard_frame(const SuperRank& target, const SuperRank& source, Parity parity,
                               const std::vector<Exponents>& std_basis) {
    HomFrame f;
    for (int block = 0; block < 2; ++block) {
        std::size_t rows = 0, cols = 0;
        block_shape(target, source, parity, block, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (const auto& m : std_basis)
                    f.entries.push_back({block, r, c, m, static_cast<long>(total_degree(m))});
    }
    f.build_index();
    return f;
}

inline SuperMatrix unvectorize(const std::vector<GaussianRational>& v, const HomFrame& frame,
                               const SuperRank& target, const SuperRank& source, Parity parity,
                               int num_vars) {
    std::size_t r0, c0, r1, c1;
    block_shape(target, source, parity, 0, r0, c0);
    block_shape(target, source, parity, 1, r1, c1);
    PolyMatrix b0(r0, c0, num_vars);
    PolyMatrix b1(r1, c1, num_vars);
    for (std::size_t k = 0; k < frame.entries.size(); ++k) {
        if (v[k].is_zero()) continue;
        const auto& e = frame.entries[k];
        PolyMatrix& blk = e.block == 0 ? b0 : b1;
        blk.at(e.row, e.col).add_term(e.mono, v[k]);
    }
    if (parity == Parity::even)
        return SuperMatrix::even_map(target, source, std::move(b0), std::move(b1));
    return SuperMatrix::odd_map(target, source, std::move(b0), std::move(b1));
}

// Writes the parity blocks of m into frame coordinates; false when a term
// falls outside the frame.
inline bool vectorize(const SuperMatrix& m, Parity parity, const HomFrame& frame,
                      std::vector<GaussianRational>& out) {
    out.assign(frame.size(), GaussianRational());
    for (int block = 0; block < 2; ++block) {
        const PolyMatrix* blk;
        if (parity == Parity::even)
            blk = block == 0 ? &m.ee() : &m.oo();
        else
            blk = block == 0 ? &m.eo() : &m.oe();
        for (std::size_t r = 0; r < blk->rows(); ++r)
            for (std::size_t c = 0; c < blk->cols(); ++c)
                for (const auto& [mono, coeff] : blk->at(r, c).terms()) {
                    auto it = frame.index.find(std::make_tuple(block, r, c, mono));
                    if (it == frame.index.end()) return false;
                    out[it->second] = coeff;
                }
    }
    return true;
}

// Row space of `rows` (coordinates in `frame`) intersected with the span of
// the degree <= bound prefix: full rref with high-degree columns leading,
// rows whose pivot sits in the low block span exactly the intersection.
inline std::vector<std::vector<GaussianRational>> intersect_with_prefix(
    const std::vector<std::vector<GaussianRational>>& rows, const HomFrame& frame, long bound,
    std::size_t prefix_size) {
    if (rows.empty()) return {};
    std::size_t n = frame.size();
    std::vector<std::size_t> high, low;
    for (std::size_t k = 0; k < n; ++k)
        (frame.entries[k].wdeg > bound ? high : low).push_back(k);
    std::vector<std::size_t> perm = high;
    perm.insert(perm.end(), low.begin(), low.end());
    QMatrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][perm[c]];
    std::vector<std::size_t> pivots = m.rref();
    std::vector<std::vector<GaussianRational>> out;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] < high.size()) continue;
        std::vector<GaussianRational> v(prefix_size, GaussianRational());
        for (std::size_t c = high.size(); c < n; ++c) {
            std::size_t orig = perm[c];
            if (orig < prefix_size) v[orig] = m.at(k, c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// Cohomology of the defect differential on morphisms a -> b, with canonical
// polynomial representatives and a projection onto the chosen basis.
//
// Two computation strategies:
//  - weighted truncation (used whenever the potential admits positive
//    weights): exact cohomology of the genuine differential on
//    weight-truncated spaces, with a stabilization assertion between the
//    bound B and B+1;
//  - quotient model (fallback): the differential induced on matrices over the
//    Milnor algebra. This is NOT the same invariant in general; results are
//    labeled via quotient_model = true and never cross-asserted against the
//    truncated strategy.
class HomCohomology {
public:
    MatrixFactorization source, target;
    MilnorAlgebra milnor;
    std::vector<Morphism> even_basis, odd_basis;
    bool quotient_model = false;

    std::size_t even_dim() const { return even_basis.size(); }
    std::size_t odd_dim() const { return odd_basis.size(); }

    // Coordinates of the class of m in the concatenated (even then odd)
    // basis. m must be closed: exactly for the truncated strategy, after
    // entrywise normal form for the quotient model. Mixed-parity input is
    // split and handled per parity.
    std::vector<GaussianRational> coordinates(const Morphism& m) const;

    // populated by hom_cohomology()
    std::vector<long> weights_;
    long bound_ = 0;
    long dmax_ = 0;

private:
    std::vector<GaussianRational> truncated_coordinates(const SuperMatrix& part, Parity parity,
                                                        const std::vector<Morphism>& reps) const;
    std::vector<GaussianRational> quotient_coordinates(const SuperMatrix& part, Parity parity,
                                                       const std::vector<Morphism>& reps) const;
};

namespace detail {

struct TruncatedLevel {
    HomFrame frame;                                     // parity kappa, degree <= level
    std::vector<std::vector<GaussianRational>> kernel;  // closed vectors in V_level
    std::vector<std::vector<GaussianRational>> image;   // basis of im(d) cap V_level
};

inline std::vector<GaussianRational> defect_of_unit(const MatrixFactorization& a,
                                                    const MatrixFactorization& b,
                                                    const HomFrame& src_frame, Parity src_parity,
                                                    std::size_t k, const HomFrame& dst_frame) {
    int nv = a.potential.num_vars();
    std::vector<GaussianRational> unit(src_frame.size(), GaussianRational());
    unit[k] = GaussianRational(1);
    SuperMatrix u = unvectorize(unit, src_frame, b.rank, a.rank, src_parity, nv);
    SuperMatrix du = defect_differential(make_morphism(a, b, u)).mat;
    std::vector<GaussianRational> vec;
    if (!vectorize(du, src_parity == Parity::even ? Parity::odd : Parity::even, dst_frame, vec))
        throw Error(errc::internal, "defect image escaped the enlarged frame");
    return vec;
}

// Closed vectors and boundary space of parity kappa at the given truncation
// level. The boundary space im(d) cap V_level is saturated by growing the
// source truncation until its dimension repeats; failure to stabilize within
// a few rounds is a hard error, never a silent acceptance.
inline TruncatedLevel truncated_level(const MatrixFactorization& a, const MatrixFactorization& b,
                                      Parity kappa, const std::vector<long>& weights, long level,
                                      long dmax) {
    TruncatedLevel out;
    Parity other = kappa == Parity::even ? Parity::odd : Parity::even;
    out.frame = build_frame(b.rank, a.rank, kappa, weights, level);

    HomFrame target_frame = build_frame(b.rank, a.rank, other, weights, level + dmax);
    QMatrix dmat(target_frame.size(), out.frame.size());
    for (std::size_t k = 0; k < out.frame.size(); ++k) {
        auto vec = defect_of_unit(a, b, out.frame, kappa, k, target_frame);
        for (std::size_t r = 0; r < vec.size(); ++r) dmat.at(r, k) = vec[r];
    }
    out.kernel = kernel_basis(dmat);

    std::size_t prev_dim = 0;
    bool have_prev = false;
    bool done = false;
    for (int round = 0; round < 4 && !done; ++round) {
        long src_level = level + dmax + round * (dmax + 1);
        HomFrame src = build_frame(b.rank, a.rank, other, weights, src_level);
        HomFrame big = build_frame(b.rank, a.rank, kappa, weights, src_level + dmax);
        std::vector<std::vector<GaussianRational>> images;
        images.reserve(src.size());
        for (std::size_t k = 0; k < src.size(); ++k)
            images.push_back(defect_of_unit(a, b, src, other, k, big));
        auto inter = intersect_with_prefix(images, big, level, out.frame.size());
        if (have_prev && inter.size() == prev_dim) {
            out.image = std::move(inter);
            done = true;
        } else {
            prev_dim = inter.size();
            have_prev = true;
        }
    }
    if (!done) throw Error(errc::internal, "boundary space failed to stabilize");
    return out;
}

// Greedy choice of kernel vectors independent of the boundary space, in
// kernel output order; deterministic because every upstream enumeration is.
inline std::vector<std::size_t> representative_indices(
    const std::vector<std::vector<GaussianRational>>& kernel,
    const std::vector<std::vector<GaussianRational>>& image, std::size_t width,
    std::size_t expected_dim) {
    std::vector<const std::vector<GaussianRational>*> pool;
    for (const auto& v : image) pool.push_back(&v);
    std::vector<std::size_t> reps;
    auto rank_of_pool = [&]() {
        if (pool.empty()) return std::size_t(0);
        QMatrix m(pool.size(), width);
        for (std::size_t r = 0; r < pool.size(); ++r)
            for (std::size_t c = 0; c < width; ++c) m.at(r, c) = (*pool[r])[c];
        return m.rank();
    };
    std::size_t rank = rank_of_pool();
    for (std::size_t k = 0; k < kernel.size() && reps.size() < expected_dim; ++k) {
        pool.push_back(&kernel[k]);
        std::size_t r = rank_of_pool();
        if (r > rank) {
            reps.push_back(k);
            rank = r;
        } else {
            pool.pop_back();
        }
    }
    return reps;
}

}  // namespace detail

inline HomCohomology hom_cohomology(const MatrixFactorization& a, const MatrixFactorization& b,
                                    const MilnorAlgebra& milnor) {
    if (a.potential != b.potential || a.potential != milnor.potential)
        throw Error(errc::shape_mismatch, "factorizations and algebra must share one potential");
    HomCohomology h;
    h.source = a;
    h.target = b;
    h.milnor = milnor;
    int nv = a.potential.num_vars();

    std::optional<WeightCertificate> cert = weight_certificate(a.potential);
    if (cert) {
        h.weights_ = cert->weights;
        long top = 0;
        for (const auto& m : milnor.basis)
            top = std::max(top, weighted_degree(m, h.weights_));
        long dmax = 0;
        auto scan = [&](const PolyMatrix& blk) {
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    if (!blk.at(r, c).is_zero())
                        dmax = std::max(dmax, blk.at(r, c).max_weighted_degree(h.weights_));
        };
        scan(a.u());
        scan(a.v());
        scan(b.u());
        scan(b.v());
        h.dmax_ = dmax;
        h.bound_ = 2 * top + dmax;

        for (Parity kappa : {Parity::even, Parity::odd}) {
            auto lvl = detail::truncated_level(a, b, kappa, h.weights_, h.bound_, dmax);
            auto lvl1 = detail::truncated_level(a, b, kappa, h.weights_, h.bound_ + 1, dmax);
            std::size_t dim = lvl.kernel.size() - lvl.image.size();
            std::size_t dim1 = lvl1.kernel.size() - lvl1.image.size();
            if (dim != dim1)
                throw Error(errc::internal,
                            "cohomology dimension did not stabilize across the truncation bound");
            auto reps = detail::representative_indices(lvl.kernel, lvl.image, lvl.frame.size(), dim);
            if (reps.size() != dim)
                throw Error(errc::internal, "kernel failed to span the cohomology");
            auto& basis = kappa == Parity::even ? h.even_basis : h.odd_basis;
            for (std::size_t k : reps) {
                SuperMatrix m =
                    detail::unvectorize(lvl.kernel[k], lvl.frame, b.rank, a.rank, kappa, nv);
                basis.push_back(make_morphism(a, b, m));
            }
        }
        return h;
    }

    h.quotient_model = true;
    for (Parity kappa : {Parity::even, Parity::odd}) {
        Parity other = kappa == Parity::even ? Parity::odd : Parity::even;
        detail::HomFrame frame = detail::standard_frame(b.rank, a.rank, kappa, milnor.basis);
        detail::HomFrame frame_other = detail::standard_frame(b.rank, a.rank, other, milnor.basis);
        auto nf = [&](const Polynomial& p) { return milnor.normal_form(p); };

        auto d_reduced = [&](const detail::HomFrame& src, Parity sp, std::size_t k,
                             const detail::HomFrame& dst) {
            std::vector<GaussianRational> unit(src.size(), GaussianRational());
            unit[k] = GaussianRational(1);
            SuperMatrix u = detail::unvectorize(unit, src, b.rank, a.rank, sp, nv);
            SuperMatrix du = defect_differential(make_morphism(a, b, u)).mat.map_entries(nf);
            std::vector<GaussianRational> vec;
            if (!detail::vectorize(du, sp == Parity::even ? Parity::odd : Parity::even, dst, vec))
                throw Error(errc::internal, "reduced defect image left the standard basis");
            return vec;
        };

        QMatrix dmat(frame_other.size(), frame.size());
        for (std::size_t k = 0; k < frame.size(); ++k) {
            auto vec = d_reduced(frame, kappa, k, frame_other);
            for (std::size_t r = 0; r < vec.size(); ++r) dmat.at(r, k) = vec[r];
        }
        auto kernel = kernel_basis(dmat);
        std::vector<std::vector<GaussianRational>> image;
        image.reserve(frame_other.size());
        for (std::size_t k = 0; k < frame_other.size(); ++k)
            image.push_back(d_reduced(frame_other, other, k, frame));
        QMatrix im(image.empty() ? 0 : image.size(), frame.size());
        for (std::size_t r = 0; r < image.size(); ++r)
            for (std::size_t c = 0; c < frame.size(); ++c) im.at(r, c) = image[r][c];
        std::size_t dim = kernel.size() - im.rank();
        auto reps = detail::representative_indices(kernel, image, frame.size(), dim);
        if (reps.size() != dim)
            throw Error(errc::internal, "kernel failed to span the quotient-model cohomology");
        auto& basis = kappa == Parity::even ? h.even_basis : h.odd_basis;
        for (std::size_t k : reps) {
            SuperMatrix m = detail::unvectorize(kernel[k], frame, b.rank, a.rank, kappa, nv);
            basis.push_back(make_morphism(a, b, m));
        }
    }
    return h;
}

inline std::vector<GaussianRational> HomCohomology::truncated_coordinates(
    const SuperMatrix& part, Parity parity, const std::vector<Morphism>& reps) const {
    long level = bound_;
    auto scan = [&](const PolyMatrix& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (!blk.at(i, j).is_zero())
                    level = std::max(level, blk.at(i, j).max_weighted_degree(weights_));
    };
    scan(part.ee());
    scan(part.eo());
    scan(part.oe());
    scan(part.oo());

    auto lvl = detail::truncated_level(source, target, parity, weights_, level, dmax_);
    if (lvl.kernel.size() - lvl.image.size() != reps.size())
        throw Error(errc::internal, "cohomology dimension drifted at the projection level");

    std::vector<GaussianRational> vec;
    if (!detail::vectorize(part, parity, lvl.frame, vec))
        throw Error(errc::internal, "morphism escaped its own truncation level");

    std::size_t n = lvl.frame.size();
    QMatrix sys(n, reps.size() + lvl.image.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
        std::vector<GaussianRational> rv;
        if (!detail::vectorize(reps[c].mat, parity, lvl.frame, rv))
            throw Error(errc::internal, "representative escaped the projection frame");
        for (std::size_t r = 0; r < n; ++r) sys.at(r, c) = rv[r];
    }
    for (std::size_t c = 0; c < lvl.image.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) sys.at(r, reps.size() + c) = lvl.image[c][r];
    auto sol = solve(sys, vec);
    if (!sol)
        throw Error(errc::internal, "closed morphism not expressible in basis plus boundaries");
    return {sol->solution.begin(), sol->solution.begin() + static_cast<std::ptrdiff_t>(reps.size())};
}

inline std::vector<GaussianRational> HomCohomology::quotient_coordinates(
    const SuperMatrix& part, Parity parity, const std::vector<Morphism>& reps) const {
    int nv = source.potential.num_vars();
    Parity other = parity == Parity::even ? Parity::odd : Parity::even;
    detail::HomFrame frame = detail::standard_frame(target.rank, source.rank, parity, milnor.basis);
    detail::HomFrame frame_other =
        detail::standard_frame(target.rank, source.rank, other, milnor.basis);
    auto nf = [&](const Polynomial& p) { return milnor.normal_form(p); };

    std::vector<std::vector<GaussianRational>> image;
    image.reserve(frame_other.size());
    for (std::size_t k = 0; k < frame_other.size(); ++k) {
        std::vector<GaussianRational> unit(frame_other.size(), GaussianRational());
        unit[k] = GaussianRational(1);
        SuperMatrix u = detail::unvectorize(unit, frame_other, target.rank, source.rank, other, nv);
        SuperMatrix du = defect_differential(make_morphism(source, target, u)).mat.map_entries(nf);
        std::vector<GaussianRational> vec;
        if (!detail::vectorize(du, parity, frame, vec))
            throw Error(errc::internal, "reduced defect image left the standard basis");
        image.push_back(std::move(vec));
    }

    std::vector<GaussianRational> vec;
    if (!detail::vectorize(part.map_entries(nf), parity, frame, vec))
        throw Error(errc::internal, "reduced morphism left the standard basis");
    QMatrix sys(frame.size(), reps.size() + image.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
        std::vector<GaussianRational> rv;
        if (!detail::vectorize(reps[c].mat.map_entries(nf), parity, frame, rv))
            throw Error(errc::internal, "representative left the standard basis");
        for (std::size_t r = 0; r < frame.size(); ++r) sys.at(r, c) = rv[r];
    }
    for (std::size_t c = 0; c < image.size(); ++c)
        for (std::size_t r = 0; r < frame.size(); ++r) sys.at(r, reps.size() + c) = image[c][r];
    auto sol = solve(sys, vec);
    if (!sol)
        throw Error(errc::internal, "reduced morphism not expressible in basis plus boundaries");
    return {sol->solution.begin(), sol->solution.begin() + static_cast<std::ptrdiff_t>(reps.size())};
}

inline std::vector<GaussianRational> HomCohomology::coordinates(const Morphism& m) const {
    if (m.source != source || m.target != target)
        throw Error(errc::shape_mismatch, "morphism endpoints do not match this Hom space");
    SuperMatrix even_part = SuperMatrix::even_map(target.rank, source.rank, m.mat.ee(), m.mat.oo());
    SuperMatrix odd_part = SuperMatrix::odd_map(target.rank, source.rank, m.mat.eo(), m.mat.oe());

    auto check_closed = [&](const SuperMatrix& p) {
        SuperMatrix d = defect_differential(make_morphism(source, target, p)).mat;
        if (d.is_zero()) return;
        auto nf = [&](const Polynomial& q) { return milnor.normal_form(q); };
        bool quotient_closed = d.map_entries(nf).is_zero();
        if (quotient_model && quotient_closed) return;
        if (quotient_closed)
            throw Error(errc::not_closed,
                        "morphism is closed only modulo the Jacobian ideal; the truncated "
                        "strategy needs an exactly closed representative");
        throw Error(errc::not_closed, "morphism is not closed under the defect differential");
    };
    check_closed(even_part);
    check_closed(odd_part);

    std::vector<GaussianRational> out;
    const auto ce = quotient_model ? quotient_coordinates(even_part, Parity::even, even_basis)
                                   : truncated_coordinates(even_part, Parity::even, even_basis);
    const auto co = quotient_model ? quotient_coordinates(odd_part, Parity::odd, odd_basis)
                                   : truncated_coordinates(odd_part, Parity::odd, odd_basis);
    out.insert(out.end(), ce.begin(), ce.end());
    out.insert(out.end(), co.begin(), co.end());
    return out;
}

}  // namespace lgtk
