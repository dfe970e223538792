#pragma once

#include "oscsym/algebra/generator.hpp"

namespace oscsym {

namespace detail {

inline int kron(int a, int b) { return a == b ? 1 : 0; }

/// Bracket of two canonical LF generators; alpha is the family parameter.
/// The three defining relations, with post-hoc canonicalization through the ideal.
inline AlgebraElement bracket_gen_lf(int n, const AlgebraMode& mode, const Rational& alpha,
                                     const GeneratorIndex& x, const GeneratorIndex& y) {
    using K = GeneratorIndex::Kind;
    AlgebraElement out(n, mode, BasisKind::LF);
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    if (x.kind == K::L && y.kind == K::L) {
        out.add_L(j, l, rat(kron(i, k)));
        out.add_L(k, j, rat(kron(l, i)));
        out.add_L(l, i, rat(kron(j, k)));
        out.add_L(i, k, rat(kron(l, j)));
    } else if (x.kind == K::L && y.kind == K::F) {
        out.add_F(j, l, rat(kron(i, k)));
        out.add_F(k, j, rat(kron(i, l)));
        out.add_F(i, l, rat(-kron(j, k)));
        out.add_F(i, k, rat(-kron(j, l)));
    } else if (x.kind == K::F && y.kind == K::L) {
        AlgebraElement t = bracket_gen_lf(n, mode, alpha, y, x);
        out += Rational(-1) * t;
    } else if (x.kind == K::F && y.kind == K::F) {
        out.add_L(j, l, alpha * kron(i, k));
        out.add_L(j, k, alpha * kron(i, l));
        out.add_L(i, l, alpha * kron(j, k));
        out.add_L(i, k, alpha * kron(j, l));
    } else {
        throw std::invalid_argument("bracket_gen_lf expects L/F generators");
    }
    return out;
}

}  // namespace detail

/// Lie bracket in the LF basis, bilinear over the sparse coefficients.
inline AlgebraElement bracket_LF(const AlgebraElement& x, const AlgebraElement& y) {
    x.require_compatible(y);
    if (x.basis() != BasisKind::LF) throw std::invalid_argument("bracket_LF needs LF basis");
    AlgebraElement out(x.n(), x.mode(), BasisKind::LF);
    const Rational alpha = x.mode().alpha();
    for (const auto& [gx, cx] : x.coeffs())
        for (const auto& [gy, cy] : y.coeffs())
            out += (cx * cy) * detail::bracket_gen_lf(x.n(), x.mode(), alpha, gx, gy);
    return out;
}

/// LF -> f-basis coordinates. Inverse of the linear change
///   f_{i,j} = F_{i,j} + omega L_{i,j} - delta_{i,j} F_{N,N},  r_N = sum_k F_{k,k}.
inline AlgebraElement to_f_basis(const AlgebraElement& x) {
    if (!x.mode().has_f_basis()) throw ZeroModeUnsupported("f basis needs omega != 0");
    if (x.basis() != BasisKind::LF) throw std::invalid_argument("to_f_basis expects LF input");
    const int n = x.n();
    const Rational w = x.mode().omega();
    AlgebraElement out(n, x.mode(), BasisKind::FBasis);
    using K = GeneratorIndex::Kind;
    for (const auto& [g, c] : x.coeffs()) {
        if (g.kind == K::L) {
            // L_{i,j} = (f_{i,j} - f_{j,i}) / (2 omega)
            out.add_f(g.i, g.j, c / (2 * w));
            out.add_f(g.j, g.i, -c / (2 * w));
        } else if (g.i != g.j) {
            // F_{i,j} = (f_{i,j} + f_{j,i}) / 2
            out.add_f(g.i, g.j, c / 2);
            out.add_f(g.j, g.i, c / 2);
        } else {
            // F_{i,i} = r_N / N + f_{i,i} - (1/N) sum_k f_{k,k}
            out.add(GeneratorIndex::R(), c / n);
            out.add_f(g.i, g.i, c);
            for (int k = 1; k <= n - 1; ++k) out.add_f(k, k, -c / n);
        }
    }
    return out;
}

inline AlgebraElement from_f_basis(const AlgebraElement& x) {
    if (!x.mode().has_f_basis()) throw ZeroModeUnsupported("f basis needs omega != 0");
    if (x.basis() != BasisKind::FBasis)
        throw std::invalid_argument("from_f_basis expects f-basis input");
    const int n = x.n();
    const Rational w = x.mode().omega();
    AlgebraElement out(n, x.mode(), BasisKind::LF);
    using K = GeneratorIndex::Kind;
    for (const auto& [g, c] : x.coeffs()) {
        if (g.kind == K::R) {
            for (int k = 1; k <= n; ++k) out.add_F(k, k, c);
        } else if (g.i == g.j) {
            out.add_F(g.i, g.i, c);
            out.add_F(n, n, -c);
        } else {
            out.add_F(g.i, g.j, c);
            out.add_L(g.i, g.j, w * c);
        }
    }
    return out;
}

inline AlgebraElement single_generator(int n, const AlgebraMode& mode, BasisKind basis,
                                       const GeneratorIndex& g) {
    AlgebraElement e(n, mode, basis);
    e.add(g, Rational(1));
    return e;
}

}  // namespace oscsym
