#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lgtk/polynomial.hpp"

namespace lgtk {

// Plain matrix with polynomial entries, row-major.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0), num_vars_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols, int num_vars)
        : rows_(rows), cols_(cols), num_vars_(num_vars),
          entries_(rows * cols, Polynomial(num_vars)) {}

    static PolyMatrix identity(std::size_t n, int num_vars) {
        PolyMatrix m(n, n, num_vars);
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, k) = Polynomial::constant(num_vars, GaussianRational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    PolyMatrix operator-() const {
        PolyMatrix m = *this;
        for (auto& e : m.entries_) e = -e;
        return m;
    }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_ || a.num_vars_ != b.num_vars_)
            throw Error(errc::shape_mismatch, "matrix product shape mismatch");
        PolyMatrix r(a.rows_, b.cols_, a.num_vars_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend PolyMatrix operator*(const Polynomial& p, const PolyMatrix& m) {
        PolyMatrix r = m;
        for (auto& e : r.entries_) e = p * e;
        return r;
    }
    friend PolyMatrix operator*(const GaussianRational& c, const PolyMatrix& m) {
        PolyMatrix r = m;
        for (auto& e : r.entries_) e = c * e;
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.num_vars_ == b.num_vars_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    PolyMatrix derivative(int var) const {
        PolyMatrix r = *this;
        for (auto& e : r.entries_) e = e.derivative(var);
        return r;
    }

    PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& fn) const {
        PolyMatrix r = *this;
        for (auto& e : r.entries_) e = fn(e);
        return r;
    }

    Polynomial trace() const {
        if (rows_ != cols_) throw Error(errc::shape_mismatch, "trace of non-square matrix");
        Polynomial t(num_vars_);
        for (std::size_t k = 0; k < rows_; ++k) t += at(k, k);
        return t;
    }

private:
    void check_shape(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || num_vars_ != o.num_vars_)
            throw Error(errc::shape_mismatch, "matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    int num_vars_;
    std::vector<Polynomial> entries_;
};

// Ranks of the even and odd summands of a Z/2-graded free module.
struct SuperRank {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t total() const { return even + odd; }
    friend bool operator==(const SuperRank& a, const SuperRank& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const SuperRank& a, const SuperRank& b) { return !(a == b); }
};

enum class Parity { even, odd, mixed };

inline const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "mixed";
    }
}

inline Parity parity_of_degree(int deg) { return deg % 2 == 0 ? Parity::even : Parity::odd; }

// Morphism of graded free modules in block form
//   [ ee  eo ]
//   [ oe  oo ]
// with ee : source-even -> target-even, eo : source-odd -> target-even,
// oe : source-even -> target-odd, oo : source-odd -> target-odd. Even maps
// live in (ee, oo), odd maps in (eo, oe).
class SuperMatrix {
public:
    SuperMatrix() = default;

    SuperMatrix(SuperRank target, SuperRank source, PolyMatrix ee, PolyMatrix eo, PolyMatrix oe,
                PolyMatrix oo)
        : target_(target), source_(source), ee_(std::move(ee)), eo_(std::move(eo)),
          oe_(std::move(oe)), oo_(std::move(oo)) {
        if (ee_.rows() != target.even || ee_.cols() != source.even ||
            eo_.rows() != target.even || eo_.cols() != source.odd ||
            oe_.rows() != target.odd || oe_.cols() != source.even ||
            oo_.rows() != target.odd || oo_.cols() != source.odd)
            throw Error(errc::shape_mismatch, "block shapes do not match declared ranks");
        int nv = ee_.num_vars();
        if (eo_.num_vars() != nv || oe_.num_vars() != nv || oo_.num_vars() != nv)
            throw Error(errc::shape_mismatch, "blocks live in different rings");
    }

    static SuperMatrix zero(SuperRank target, SuperRank source, int num_vars) {
        return SuperMatrix(target, source, PolyMatrix(target.even, source.even, num_vars),
                           PolyMatrix(target.even, source.odd, num_vars),
                           PolyMatrix(target.odd, source.even, num_vars),
                           PolyMatrix(target.odd, source.odd, num_vars));
    }

    static SuperMatrix identity(SuperRank rank, int num_vars) {
        SuperMatrix m = zero(rank, rank, num_vars);
        m.ee_ = PolyMatrix::identity(rank.even, num_vars);
        m.oo_ = PolyMatrix::identity(rank.odd, num_vars);
        return m;
    }

    static SuperMatrix even_map(SuperRank target, SuperRank source, PolyMatrix ee, PolyMatrix oo) {
        int nv = ee.num_vars();
        return SuperMatrix(target, source, std::move(ee), PolyMatrix(target.even, source.odd, nv),
                           PolyMatrix(target.odd, source.even, nv), std::move(oo));
    }

    static SuperMatrix odd_map(SuperRank target, SuperRank source, PolyMatrix eo, PolyMatrix oe) {
        int nv = eo.num_vars();
        return SuperMatrix(target, source, PolyMatrix(target.even, source.even, nv), std::move(eo),
                           std::move(oe), PolyMatrix(target.odd, source.odd, nv));
    }

    const SuperRank& target() const { return target_; }
    const SuperRank& source() const { return source_; }
    const PolyMatrix& ee() const { return ee_; }
    const PolyMatrix& eo() const { return eo_; }
    const PolyMatrix& oe() const { return oe_; }
    const PolyMatrix& oo() const { return oo_; }
    int num_vars() const { return ee_.num_vars(); }

    bool is_zero() const { return ee_.is_zero() && eo_.is_zero() && oe_.is_zero() && oo_.is_zero(); }

    // Parity read off the blocks; the zero map counts as even and as odd.
    Parity parity() const {
        bool diag = !ee_.is_zero() || !oo_.is_zero();
        bool off = !eo_.is_zero() || !oe_.is_zero();
        if (diag && off) return Parity::mixed;
        if (off) return Parity::odd;
        return Parity::even;
    }

    bool has_parity(Parity p) const {
        if (is_zero()) return true;
        return parity() == p;
    }

    SuperMatrix operator-() const {
        SuperMatrix m = *this;
        m.ee_ = -m.ee_;
        m.eo_ = -m.eo_;
        m.oe_ = -m.oe_;
        m.oo_ = -m.oo_;
        return m;
    }

    SuperMatrix& operator+=(const SuperMatrix& o) {
        check_same_type(o);
        ee_ += o.ee_;
        eo_ += o.eo_;
        oe_ += o.oe_;
        oo_ += o.oo_;
        return *this;
    }
    SuperMatrix& operator-=(const SuperMatrix& o) {
        check_same_type(o);
        ee_ -= o.ee_;
        eo_ -= o.eo_;
        oe_ -= o.oe_;
        oo_ -= o.oo_;
        return *this;
    }
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }

    // Composition a*b = a after b.
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
        if (a.source_ != b.target_)
            throw Error(errc::shape_mismatch, "composition source/target mismatch");
        return SuperMatrix(a.target_, b.source_, a.ee_ * b.ee_ + a.eo_ * b.oe_,
                           a.ee_ * b.eo_ + a.eo_ * b.oo_, a.oe_ * b.ee_ + a.oo_ * b.oe_,
                           a.oe_ * b.eo_ + a.oo_ * b.oo_);
    }

    friend SuperMatrix operator*(const Polynomial& p, const SuperMatrix& m) {
        SuperMatrix r = m;
        r.ee_ = p * r.ee_;
        r.eo_ = p * r.eo_;
        r.oe_ = p * r.oe_;
        r.oo_ = p * r.oo_;
        return r;
    }
    friend SuperMatrix operator*(const GaussianRational& c, const SuperMatrix& m) {
        SuperMatrix r = m;
        r.ee_ = c * r.ee_;
        r.eo_ = c * r.eo_;
        r.oe_ = c * r.oe_;
        r.oo_ = c * r.oo_;
        return r;
    }

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.target_ == b.target_ && a.source_ == b.source_ && a.ee_ == b.ee_ &&
               a.eo_ == b.eo_ && a.oe_ == b.oe_ && a.oo_ == b.oo_;
    }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

    SuperMatrix derivative(int var) const {
        SuperMatrix r = *this;
        r.ee_ = r.ee_.derivative(var);
        r.eo_ = r.eo_.derivative(var);
        r.oe_ = r.oe_.derivative(var);
        r.oo_ = r.oo_.derivative(var);
        return r;
    }

    SuperMatrix map_entries(const std::function<Polynomial(const Polynomial&)>& fn) const {
        SuperMatrix r = *this;
        r.ee_ = r.ee_.map(fn);
        r.eo_ = r.eo_.map(fn);
        r.oe_ = r.oe_.map(fn);
        r.oo_ = r.oo_.map(fn);
        return r;
    }

    // str = tr(ee) - tr(oo).
    Polynomial supertrace() const {
        if (source_ != target_) throw Error(errc::shape_mismatch, "supertrace of non-endomorphism");
        return ee_.trace() - oo_.trace();
    }

private:
    void check_same_type(const SuperMatrix& o) const {
        if (source_ != o.source_ || target_ != o.target_)
            throw Error(errc::shape_mismatch, "supermatrix type mismatch");
    }

    SuperRank target_, source_;
    PolyMatrix ee_, eo_, oe_, oo_;
};

// [a, b] = a*b - (-1)^{|a||b|} b*a, defined for pure-parity arguments.
inline SuperMatrix graded_commutator(const SuperMatrix& a, const SuperMatrix& b) {
    Parity pa = a.parity();
    Parity pb = b.parity();
    if (pa == Parity::mixed || pb == Parity::mixed)
        throw Error(errc::mixed_parity, "graded commutator needs pure-parity arguments");
    SuperMatrix ab = a * b;
    SuperMatrix ba = b * a;
    bool both_odd = pa == Parity::odd && pb == Parity::odd;
    return both_odd ? ab + ba : ab - ba;
}

}  // namespace lgtk
