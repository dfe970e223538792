#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscsym/algebra/tensor.hpp"
#include "oscsym/ext_scalar.hpp"
#include "oscsym/matrix.hpp"

namespace oscsym {

using XMat = Mat<ExtScalar>;

enum class RepTarget { su, u, sl, gl, zero, zeta2 };

inline std::string rep_target_name(RepTarget t) {
    switch (t) {
        case RepTarget::su: return "su";
        case RepTarget::u: return "u";
        case RepTarget::sl: return "sl";
        case RepTarget::gl: return "gl";
        case RepTarget::zero: return "zero";
        default: return "zeta2";
    }
}

/// Exact matrix representation: an ordered domain basis (f basis or LF basis)
/// together with one image matrix over Q(i, sqrt2) per basis element.
struct MatrixRep {
    int n = 0;
    RepTarget target = RepTarget::su;
    Rational omega{1};
    int dim = 0;                  // image matrices are dim x dim
    int target_dim = 0;           // dimension of the intended target algebra
    BasisKind domain_basis = BasisKind::FBasis;
    std::vector<GeneratorIndex> domain;
    std::vector<XMat> images;

    const XMat& image_of(const GeneratorIndex& g) const {
        for (size_t k = 0; k < domain.size(); ++k)
            if (domain[k] == g) return images[k];
        throw std::out_of_range("generator not in representation domain: " + g.str());
    }

    XMat image_of(const AlgebraElement& e) const {
        XMat acc(dim, dim);
        for (const auto& [g, c] : e.coeffs()) acc += c * image_of(g);
        return acc;
    }
};

namespace detail {

inline XMat unit_xmat(int dim, int r, int c, const ExtScalar& v) {
    XMat m(dim, dim);
    m(r - 1, c - 1) = v;
    return m;
}

/// Generator images of the compact-case isomorphism, over elementary matrices:
///   f_{i,i} -> 2iw (e_{N,N} - e_{i,i})
///   f_{1,2} -> -sqrt2 w (e_{2,1} - e_{1,2}),   f_{2,1} -> i sqrt2 w (e_{2,1} + e_{1,2})
///   f_{j,2} ->  sqrt2 w (e_{j,2} - e_{2,j}),   f_{2,j} -> i sqrt2 w (e_{j,2} + e_{2,j}), j >= 3
///   f_{i,j} -> -w(1+i) e_{i,j} + w(1-i) e_{j,i},  i != j and i,j != 2.
inline XMat su_image(int n, const Rational& w, int i, int j) {
    using E = ExtScalar;
    if (i == j)
        return unit_xmat(n, n, n, E::imag(2 * w)) + unit_xmat(n, i, i, E::imag(-2 * w));
    if (i == 1 && j == 2)
        return unit_xmat(n, 2, 1, E::sqrt2(-w)) + unit_xmat(n, 1, 2, E::sqrt2(w));
    if (i == 2 && j == 1)
        return unit_xmat(n, 2, 1, E::imag_sqrt2(w)) + unit_xmat(n, 1, 2, E::imag_sqrt2(w));
    if (j == 2)
        return unit_xmat(n, i, 2, E::sqrt2(w)) + unit_xmat(n, 2, i, E::sqrt2(-w));
    if (i == 2)
        return unit_xmat(n, j, 2, E::imag_sqrt2(w)) + unit_xmat(n, 2, j, E::imag_sqrt2(w));
    E top(-w, Rational(0), -w, Rational(0));   // -w(1+i)
    E bot(w, Rational(0), -w, Rational(0));    //  w(1-i)
    return unit_xmat(n, i, j, top) + unit_xmat(n, j, i, bot);
}

/// f_{i,i} -> -2w (e_{i,i} - e_{N,N});  f_{i,j} -> -2w e_{i,j}.
inline XMat sl_image(int n, const Rational& w, int i, int j) {
    using E = ExtScalar;
    if (i == j)
        return unit_xmat(n, i, i, E(-2 * w)) + unit_xmat(n, n, n, E(2 * w));
    return unit_xmat(n, i, j, E(-2 * w));
}

}  // namespace detail

inline MatrixRep rep_su(int n, const Rational& omega) {
    MatrixRep rep{n, RepTarget::su, omega, n, n * n - 1, BasisKind::FBasis, f_basis(n), {}};
    for (const auto& g : rep.domain) rep.images.push_back(detail::su_image(n, omega, g.i, g.j));
    return rep;
}

inline MatrixRep rep_sl(int n, const Rational& omega) {
    MatrixRep rep{n, RepTarget::sl, omega, n, n * n - 1, BasisKind::FBasis, f_basis(n), {}};
    for (const auto& g : rep.domain) rep.images.push_back(detail::sl_image(n, omega, g.i, g.j));
    return rep;
}

namespace detail {

/// Extends a semisimple-factor rep to the full algebra over the LF basis,
/// with the stated central image for r_N.
inline MatrixRep extend_to_lf(const MatrixRep& base, RepTarget target, const AlgebraMode& mode,
                              const XMat& r_image) {
    MatrixRep rep{base.n, target, base.omega, base.dim, base.target_dim + 1,
                  BasisKind::LF,  lf_basis(base.n), {}};
    for (const auto& g : rep.domain) {
        AlgebraElement f = to_f_basis(single_generator(base.n, mode, BasisKind::LF, g));
        XMat acc(base.dim, base.dim);
        for (const auto& [fg, c] : f.coeffs()) {
            if (fg.kind == GeneratorIndex::Kind::R)
                acc += c * r_image;
            else
                acc += c * base.image_of(fg);
        }
        rep.images.push_back(acc);
    }
    return rep;
}

}  // namespace detail

/// u_N rep on the LF basis: the su rep plus Mat(r_N) = -2iw Id. The central
/// image is not written out in the source construction; this choice matches
/// the displayed arbitrary-element matrix (any nonzero multiple works).
inline MatrixRep rep_u(int n, const Rational& omega) {
    AlgebraMode mode = AlgebraMode::plus(omega);
    XMat r = ExtScalar::imag(-2 * omega) * XMat::identity(n);
    return detail::extend_to_lf(rep_su(n, omega), RepTarget::u, mode, r);
}

/// gl_N rep on the LF basis: the sl rep plus Mat(r_N) = -2w Id.
inline MatrixRep rep_gl(int n, const Rational& omega) {
    AlgebraMode mode = AlgebraMode::minus(omega);
    XMat r = ExtScalar(-2 * omega) * XMat::identity(n);
    return detail::extend_to_lf(rep_sl(n, omega), RepTarget::gl, mode, r);
}

/// Position of F(k,l) in the radical ordering (F_{1,1},...,F_{N,N},
/// F_{1,2},...,F_{N-1,N}); 1-based.
inline int zero_rep_radical_index(int n, int k, int l) {
    if (k > l) std::swap(k, l);
    if (k == l) return k;
    int idx = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ++idx;
            if (i == k && j == l) return idx;
        }
    throw std::out_of_range("bad radical index");
}

/// (Ncal+1)-dimensional zero-mode rep: Mat(F_{k,l}) = e_{idx(k,l), Ncal+1};
/// Mat(L_{i,j}) carries the symmetrized action constants in the top-left block.
inline MatrixRep rep_zero(int n) {
    const int ncal = n * (n + 1) / 2;
    MatrixRep rep{n, RepTarget::zero, Rational(1), ncal + 1, n * n, BasisKind::LF, lf_basis(n), {}};
    // Radical ordering as pairs, for the tau block columns/rows.
    std::vector<std::pair<int, int>> radical;
    for (int i = 1; i <= n; ++i) radical.emplace_back(i, i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) radical.emplace_back(i, j);
    for (const auto& g : rep.domain) {
        XMat m(ncal + 1, ncal + 1);
        if (g.kind == GeneratorIndex::Kind::F) {
            m(zero_rep_radical_index(n, g.i, g.j) - 1, ncal) = ExtScalar(1);
        } else {
            for (int row = 0; row < ncal; ++row)
                for (int col = 0; col < ncal; ++col) {
                    auto [al, be] = radical[row];
                    auto [k, l] = radical[col];
                    Rational s = zero_mode_s_tilde(al, be, g.i, g.j, k, l);
                    if (s != 0) m(row, col) = ExtScalar(s);
                }
        }
        rep.images.push_back(m);
    }
    return rep;
}

struct HomReport {
    bool brackets_match = false;
    bool injective = false;
    bool dimension_matches_target = false;
    std::optional<std::pair<GeneratorIndex, GeneratorIndex>> first_violation;
    bool pass() const { return brackets_match && injective && dimension_matches_target; }
};

namespace detail {

inline int rational_rank_of_images(const std::vector<XMat>& images, int dim) {
    QMat flat((int)images.size(), 4 * dim * dim);
    for (size_t r = 0; r < images.size(); ++r) {
        int c = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (const auto& comp : images[r](i, j).components()) flat((int)r, c++) = comp;
    }
    return rank(flat);
}

}  // namespace detail

/// [Mat(x), Mat(y)] = Mat([x,y]_T) for every basis pair, exact over Q(i,sqrt2),
/// plus injectivity (rational rank of the images) and a target dimension count.
inline HomReport verify_homomorphism(const MatrixRep& rep, const StructureTensor& t) {
    HomReport rep_out;
    if (rep.domain_basis != t.basis() || rep.n != t.n())
        throw DimensionMismatch("representation and tensor bases differ");
    rep_out.brackets_match = true;
    for (size_t a = 0; a < rep.domain.size() && rep_out.brackets_match; ++a)
        for (size_t b = 0; b < rep.domain.size(); ++b) {
            int ta = t.index_of(rep.domain[a]);
            int tb = t.index_of(rep.domain[b]);
            XMat lhs = commutator(rep.images[a], rep.images[b]);
            XMat rhs(rep.dim, rep.dim);
            for (const auto& [tgt, c] : t.entry(ta, tb))
                rhs += c * rep.image_of(t.elements()[tgt]);
            if (!(lhs - rhs).is_zero()) {
                rep_out.brackets_match = false;
                rep_out.first_violation = {rep.domain[a], rep.domain[b]};
                break;
            }
        }
    rep_out.injective =
        detail::rational_rank_of_images(rep.images, rep.dim) == (int)rep.domain.size();
    rep_out.dimension_matches_target = ((int)rep.domain.size() == rep.target_dim);
    return rep_out;
}

inline bool is_antihermitian(const XMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == -(m(j, i).conj()))) return false;
    return true;
}

inline bool is_real_matrix(const XMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real()) return false;
    return true;
}

inline bool is_traceless(const XMat& m) { return trace(m).is_zero(); }

/// N=2 zero-mode map into e_2 (+) R, with basis (K1, K2, M, H):
///   [K1, M] = -K2, [K2, M] = K1, [K1, K2] = 0, H central.
/// Images as exact coordinate vectors in that abstract basis.
struct Zeta2Rep {
    // domain order: LF basis of A_2(0) = (L12, F11, F22, F12)
    std::vector<GeneratorIndex> domain;
    std::vector<std::vector<Rational>> images;  // coordinates over (K1,K2,M,H)

    static std::vector<Rational> target_bracket(const std::vector<Rational>& x,
                                                const std::vector<Rational>& y) {
        // only [K1,M] = -K2 and [K2,M] = K1 are nonzero
        std::vector<Rational> out(4, Rational(0));
        out[1] += -(x[0] * y[2] - x[2] * y[0]);  // K2 component
        out[0] += x[1] * y[2] - x[2] * y[1];     // K1 component
        return out;
    }
};

inline Zeta2Rep rep_zeta2() {
    Zeta2Rep rep;
    rep.domain = lf_basis(2);
    for (const auto& g : rep.domain) {
        std::vector<Rational> v(4, Rational(0));
        if (g.kind == GeneratorIndex::Kind::L) {
            v[2] = Rational(-2);  // L12 -> -2M
        } else if (g.i == 1 && g.j == 1) {
            v = {Rational(1), Rational(-1), Rational(0), Rational(1)};  // K1 - K2 + H
        } else if (g.i == 2 && g.j == 2) {
            v = {Rational(-1), Rational(1), Rational(0), Rational(1)};  // -K1 + K2 + H
        } else {
            v = {Rational(-1), Rational(-1), Rational(0), Rational(0)};  // -(K1 + K2)
        }
        rep.images.push_back(v);
    }
    return rep;
}

inline HomReport verify_zeta2(const Zeta2Rep& rep) {
    AlgebraMode mode = AlgebraMode::zero();
    StructureTensor t = structure_tensor(2, mode, BasisKind::LF);
    HomReport out;
    out.brackets_match = true;
    for (size_t a = 0; a < rep.domain.size() && out.brackets_match; ++a)
        for (size_t b = 0; b < rep.domain.size(); ++b) {
            auto lhs = Zeta2Rep::target_bracket(rep.images[a], rep.images[b]);
            std::vector<Rational> rhs(4, Rational(0));
            for (const auto& [tgt, c] : t.entry(t.index_of(rep.domain[a]),
                                                t.index_of(rep.domain[b]))) {
                for (int k = 0; k < 4; ++k) rhs[k] += c * rep.images[tgt][k];
            }
            if (lhs != rhs) {
                out.brackets_match = false;
                out.first_violation = {rep.domain[a], rep.domain[b]};
                break;
            }
        }
    QMat flat(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) flat(r, c) = rep.images[r][c];
    out.injective = (rank(flat) == 4);
    out.dimension_matches_target = true;  // 4-dimensional target, 4 images
    return out;
}

}  // namespace oscsym
