#pragma once

#include <vector>

#include "oscsym/matrix.hpp"

namespace oscsym {

/// Quadratic phase-space function f(x) = x^T S x with S symmetric, over the
/// pinned coordinate order (q_1..q_N, p_1..p_N). No 1/2 convention: every
/// source formula is translated to x^T S x once, here.
class QuadraticObservable {
  public:
    explicit QuadraticObservable(int dim_n) : n_(dim_n), s_(2 * dim_n, 2 * dim_n) {}
    QuadraticObservable(int dim_n, QMat s) : n_(dim_n), s_(std::move(s)) {
        if (s_.rows() != 2 * n_ || s_.cols() != 2 * n_)
            throw DimensionMismatch("quadratic observable matrix must be 2N x 2N");
        for (int r = 0; r < s_.rows(); ++r)
            for (int c = 0; c < r; ++c)
                if (s_(r, c) != s_(c, r))
                    throw std::invalid_argument("quadratic observable matrix must be symmetric");
    }

    int dim_n() const { return n_; }
    const QMat& matrix() const { return s_; }

    int q_index(int i) const { return i - 1; }       // 1-based dof -> coordinate slot
    int p_index(int i) const { return n_ + i - 1; }

    /// Adds c * x_a x_b (monomial, symmetrized into S).
    void add_monomial(int a, int b, const Rational& c) {
        if (a == b) {
            s_(a, a) += c;
        } else {
            s_(a, b) += c / 2;
            s_(b, a) += c / 2;
        }
    }

    Rational value(const std::vector<Rational>& x) const {
        Rational acc(0);
        for (int r = 0; r < s_.rows(); ++r) {
            if (x[r] == 0) continue;
            for (int c = 0; c < s_.cols(); ++c)
                if (s_(r, c) != 0) acc += x[r] * s_(r, c) * x[c];
        }
        return acc;
    }

    /// grad f = 2 S x.
    std::vector<Rational> gradient(const std::vector<Rational>& x) const {
        std::vector<Rational> g(s_.rows(), Rational(0));
        for (int r = 0; r < s_.rows(); ++r)
            for (int c = 0; c < s_.cols(); ++c)
                if (s_(r, c) != 0 && x[c] != 0) g[r] += 2 * s_(r, c) * x[c];
        return g;
    }

    friend bool operator==(const QuadraticObservable& a, const QuadraticObservable& b) {
        return a.n_ == b.n_ && a.s_ == b.s_;
    }

    QuadraticObservable& operator+=(const QuadraticObservable& o) {
        if (n_ != o.n_) throw DimensionMismatch("observable dims");
        s_ += o.s_;
        return *this;
    }
    friend QuadraticObservable operator+(QuadraticObservable a, const QuadraticObservable& b) {
        return a += b;
    }
    friend QuadraticObservable operator*(const Rational& k, const QuadraticObservable& o) {
        return QuadraticObservable(o.n_, k * o.s_);
    }
    QuadraticObservable operator-() const { return Rational(-1) * *this; }

  private:
    int n_;
    QMat s_;
};

/// J = [[0, I], [-I, 0]]: the matrix of the canonical Poisson bivector in the
/// (q, p) block order. J^T = -J and J^2 = -I.
inline QMat canonical_symplectic_matrix(int n) {
    QMat j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = Rational(1);
        j(n + i, i) = Rational(-1);
    }
    return j;
}

/// {f,g} for quadratics is quadratic with matrix 2 (S J T - T J S).
inline QuadraticObservable poisson_bracket(const QuadraticObservable& f,
                                           const QuadraticObservable& g) {
    if (f.dim_n() != g.dim_n()) throw DimensionMismatch("poisson bracket dims");
    QMat j = canonical_symplectic_matrix(f.dim_n());
    QMat sjt = f.matrix() * j * g.matrix();
    // (SJT)^T = -TJS, so SJT + (SJT)^T is the symmetric matrix of S J T - T J S.
    QMat m = sjt + sjt.transpose();
    return QuadraticObservable(f.dim_n(), Rational(2) * m);
}

}  // namespace oscsym
