#pragma once

#include <utility>
#include <vector>

#include "oscsym/errors.hpp"
#include "oscsym/matrix.hpp"

namespace oscsym {

/// First column (x, v_1..v_{N-1}), diagonal (x, a, ..., a).
struct MatFamA {
    int n;
    Rational x, a;
    std::vector<Rational> v;  // length n-1

    QMat realize() const {
        QMat m(n, n);
        m(0, 0) = x;
        for (int k = 1; k < n; ++k) {
            m(k, k) = a;
            m(k, 0) = v[k - 1];
        }
        return m;
    }
};

/// Zero first row and column; (2,2) = x, diagonal a below, column 2 carries v.
struct MatFamB {
    int n;
    Rational x, a;
    std::vector<Rational> v;  // length n-2

    QMat realize() const {
        QMat m(n, n);
        m(1, 1) = x;
        for (int k = 2; k < n; ++k) {
            m(k, k) = a;
            m(k, 1) = v[k - 2];
        }
        return m;
    }
};

/// B with one floating 1 at position (1, i).
struct MatFamBreveB {
    MatFamB base;
    int i;  // column of the floating unit entry, 1-based

    QMat realize() const {
        QMat m = base.realize();
        m(0, i - 1) += 1;
        return m;
    }
};

/// First two columns v, w; diagonal a from the third row/column on.
struct MatFamC {
    int n;
    Rational a;
    std::vector<Rational> v, w;  // length n

    QMat realize() const {
        QMat m(n, n);
        for (int k = 0; k < n; ++k) {
            m(k, 0) = v[k];
            m(k, 1) = w[k];
        }
        for (int k = 2; k < n; ++k) m(k, k) = a;
        return m;
    }
};

/// C with one floating 1 at position (1, i), i > 2.
struct MatFamBreveC {
    MatFamC base;
    int i;

    QMat realize() const {
        QMat m = base.realize();
        m(0, i - 1) += 1;
        return m;
    }
};

/// A(x,a,v) A(y,b,w) = A(xy, ab, a w + y v); same rule for the B family.
inline MatFamA matA_mul(const MatFamA& l, const MatFamA& r) {
    std::vector<Rational> v(l.n - 1);
    for (int k = 0; k < l.n - 1; ++k) v[k] = l.a * r.v[k] + r.x * l.v[k];
    return {l.n, l.x * r.x, l.a * r.a, std::move(v)};
}

inline MatFamB matB_mul(const MatFamB& l, const MatFamB& r) {
    std::vector<Rational> v(l.n - 2);
    for (int k = 0; k < l.n - 2; ++k) v[k] = l.a * r.v[k] + r.x * l.v[k];
    return {l.n, l.x * r.x, l.a * r.a, std::move(v)};
}

/// A^{-1}(x,a,v) = A(1/x, 1/a, -v/(a x)); needs x, a nonzero.
inline MatFamA matA_inv(const MatFamA& m) {
    if (m.x == 0 || m.a == 0) throw SingularFamilyMatrix("A inverse needs x, a nonzero");
    std::vector<Rational> v(m.n - 1);
    for (int k = 0; k < m.n - 1; ++k) v[k] = -m.v[k] / (m.a * m.x);
    return {m.n, 1 / m.x, 1 / m.a, std::move(v)};
}

/// A(x,a,v) B(y,b,w) = B(ay, ab, a w): the B family is a right ideal.
inline MatFamB matAB(const MatFamA& l, const MatFamB& r) {
    std::vector<Rational> v(l.n - 2);
    for (int k = 0; k < l.n - 2; ++k) v[k] = l.a * r.v[k];
    return {l.n, l.a * r.x, l.a * r.a, std::move(v)};
}

/// B(x,a,v) A(y,b,w) = C(ab, V, W) with
///   V = (0, x w_1, a w_2 + w_1 v_1, ..., a w_{N-1} + w_1 v_{N-2}),
///   W = (0, b x, b v_1, ..., b v_{N-2}).
inline MatFamC matBA(const MatFamB& l, const MatFamA& r) {
    const int n = l.n;
    std::vector<Rational> V(n, Rational(0)), W(n, Rational(0));
    V[1] = l.x * r.v[0];
    W[1] = r.a * l.x;
    for (int k = 2; k < n; ++k) {
        V[k] = l.a * r.v[k - 1] + r.v[0] * l.v[k - 2];
        W[k] = r.a * l.v[k - 2];
    }
    return {n, l.a * r.a, std::move(V), std::move(W)};
}

/// e_{1,j} A(x,a,v) = v_{j-1} e_{1,1} + a e_{1,j}, with v_0 := x - a so the
/// same formula covers j = 1.
struct E1iProduct {
    Rational c11;  // coefficient on e_{1,1}
    Rational c1j;  // coefficient on e_{1,j}
    int j;

    QMat realize(int n) const {
        QMat m(n, n);
        m(0, 0) += c11;
        m(0, j - 1) += c1j;
        return m;
    }
};

inline E1iProduct e1i_mul_A(int j, const MatFamA& m) {
    Rational vj = (j == 1) ? m.x - m.a : m.v[j - 2];
    return {vj, m.a, j};
}

/// BreveB_i(z,c,u) A(t,d,f) = d * BreveC_i(c, V, W) with
///   V = (1/d)(f_{i-1}, z f_1, c f_2 + f_1 u_1, ..., c f_{N-1} + f_1 u_{N-2}),
///   W = (0, z, u_1, ..., u_{N-2}).
/// The scale multiplies the whole matrix, floating unit included.
inline std::pair<Rational, MatFamBreveC> breveB_mul_A(const MatFamBreveB& l, const MatFamA& r) {
    const int n = l.base.n;
    if (r.a == 0) throw SingularFamilyMatrix("scaled BreveC form needs the A diagonal nonzero");
    std::vector<Rational> V(n), W(n, Rational(0));
    V[0] = r.v[l.i - 2] / r.a;
    V[1] = l.base.x * r.v[0] / r.a;
    W[1] = l.base.x;
    for (int k = 2; k < n; ++k) {
        V[k] = (l.base.a * r.v[k - 1] + r.v[0] * l.base.v[k - 2]) / r.a;
        W[k] = l.base.v[k - 2];
    }
    return {r.a, MatFamBreveC{MatFamC{n, l.base.a, std::move(V), std::move(W)}, l.i}};
}

/// B(y,c,u) - BreveC_i(a,v,w) = -BreveC_i(a - c, v, Y) with
///   Y = (w_1, w_2 - y, w_3 - u_1, ..., w_N - u_{N-2});
/// the floating unit entry enters the difference with a minus sign, so the
/// result is a scaled BreveC: returned as (scale, matrix) with scale = -1.
inline std::pair<Rational, MatFamBreveC> B_minus_breveC(const MatFamB& l,
                                                        const MatFamBreveC& r) {
    const int n = l.n;
    std::vector<Rational> V = r.base.v, Y(n);
    Y[0] = r.base.w[0];
    Y[1] = r.base.w[1] - l.x;
    for (int k = 2; k < n; ++k) Y[k] = r.base.w[k] - l.v[k - 2];
    return {Rational(-1), MatFamBreveC{MatFamC{n, r.base.a - l.a, std::move(V), std::move(Y)}, r.i}};
}

inline Rational det_A(const MatFamA& m) { return m.x * pow_rat(m.a, m.n - 1); }
inline Rational det_B(const MatFamB&) { return Rational(0); }
inline Rational det_C(const MatFamC& m) {
    return pow_rat(m.a, m.n - 2) * (m.v[0] * m.w[1] - m.w[0] * m.v[1]);
}
inline Rational det_breveC(const MatFamBreveC& m) {
    const auto& c = m.base;
    return det_C(c) + pow_rat(c.a, c.n - 3) * (c.w[m.i - 1] * c.v[1] - c.v[m.i - 1] * c.w[1]);
}

/// Closed form of det[B(t,d,r) - BreveB_i(z,c,u) A^{-1}(x,a,v) A(y,b,w)],
/// derived by composing the family product rules; requires x, a, b nonzero
/// and 3 <= i <= N.
inline Rational final_det(int n, int i, const Rational& x, const Rational& a,
                          const std::vector<Rational>& v, const Rational& y, const Rational& b,
                          const std::vector<Rational>& w, const Rational& z, const Rational& c,
                          const std::vector<Rational>& u, const Rational& t, const Rational& d,
                          const std::vector<Rational>& r) {
    if (x == 0 || a == 0 || b == 0)
        throw SingularFamilyMatrix("final determinant needs x, a, b nonzero");
    if (i < 3 || i > n) throw std::out_of_range("final determinant needs 3 <= i <= N");
    // explicit Rational return: gmpxx expression templates must not escape
    auto W = [&](int k) -> Rational { return w[k - 1] - (y / x) * v[k - 1]; };
    const Rational V1 = W(i - 1) / b;
    const Rational V2 = z * W(1) / b;
    const Rational Vi = (c * W(i - 1) + W(1) * u[i - 3]) / b;
    const Rational alpha = d - (b / a) * c;
    const Rational W2 = t - (b / a) * z;
    const Rational Wi = r[i - 3] - (b / a) * u[i - 3];
    return -(b / a) * pow_rat(alpha, n - 2) * V1 * W2 +
           (b / a) * (b / a) * pow_rat(alpha, n - 3) * (Wi * V2 - Vi * W2);
}

}  // namespace oscsym
