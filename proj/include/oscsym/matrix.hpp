#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "oscsym/errors.hpp"
#include "oscsym/rational.hpp"

namespace oscsym {

/// Dense matrix over an exact ring (Rational or ExtScalar).
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[r * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    Mat operator-() const {
        Mat m = *this;
        for (auto& v : m.data_) v = -v;
        return m;
    }
    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape");
        Mat m(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (int j = 0; j < y.cols_; ++j) m(i, j) += xik * y(k, j);
            }
        return m;
    }

    friend Mat operator*(const T& k, const Mat& x) {
        Mat m = x;
        for (auto& v : m.data_) v = k * v;
        return m;
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Mat<T> commutator(const Mat<T>& x, const Mat<T>& y) {
    return x * y - y * x;
}

template <class T>
T trace(const Mat<T>& m) {
    T t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

using QMat = Mat<Rational>;

/// Gaussian elimination determinant; exact.
inline Rational det(QMat m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square matrix");
    const int n = m.rows();
    Rational result(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
            result = -result;
        }
        result *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Rational f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return result;
}

/// Row echelon rank; exact.
inline int rank(QMat m) {
    int rk = 0;
    for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
        int piv = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rk)
            for (int c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(rk, c));
        for (int r = rk + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            Rational f = m(r, col) / m(rk, col);
            for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(rk, c);
        }
        ++rk;
    }
    return rk;
}

inline QMat inverse(QMat m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const int n = m.rows();
    QMat inv = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw SingularFamilyMatrix("singular matrix");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(m(piv, c), m(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        Rational p = m(col, col);
        for (int c = 0; c < n; ++c) {
            m(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (int c = 0; c < n; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Sylvester signature of a symmetric matrix by exact congruence
/// diagonalization (simultaneous row/column operations).
inline Signature congruence_signature(QMat m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("signature of non-square matrix");
    const int n = m.rows();
    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            int swap_j = -1, add_j = -1;
            for (int j = k + 1; j < n; ++j) {
                if (swap_j < 0 && m(j, j) != 0) swap_j = j;
                if (add_j < 0 && m(k, j) != 0) add_j = j;
            }
            if (swap_j >= 0) {
                for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_j, c));
                for (int r = 0; r < n; ++r) std::swap(m(r, k), m(r, swap_j));
            } else if (add_j >= 0) {
                // all candidate diagonals zero: m(k,k) becomes 2 m(k,add_j)
                for (int c = 0; c < n; ++c) m(k, c) += m(add_j, c);
                for (int r = 0; r < n; ++r) m(r, k) += m(r, add_j);
            } else {
                ++sig.zero;
                continue;
            }
        }
        Rational piv = m(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (m(r, k) == 0) continue;
            Rational f = m(r, k) / piv;
            for (int c = 0; c < n; ++c) m(r, c) -= f * m(k, c);
            for (int c = 0; c < n; ++c) m(c, r) -= f * m(c, k);
        }
        if (piv > 0) ++sig.positive; else ++sig.negative;
    }
    return sig;
}

/// Solves A x = b exactly. Returns false when inconsistent.
inline bool solve_linear(QMat a, std::vector<Rational> b, std::vector<Rational>& x) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < n && rk < m; ++col) {
        int piv = -1;
        for (int r = rk; r < m; ++r)
            if (a(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rk) {
            for (int c = col; c < n; ++c) std::swap(a(piv, c), a(rk, c));
            std::swap(b[piv], b[rk]);
        }
        Rational p = a(rk, col);
        for (int c = col; c < n; ++c) a(rk, c) /= p;
        b[rk] /= p;
        for (int r = 0; r < m; ++r) {
            if (r == rk || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(rk, c);
            b[r] -= f * b[rk];
        }
        pivot_col.push_back(col);
        ++rk;
    }
    for (int r = rk; r < m; ++r)
        if (b[r] != 0) return false;
    x.assign(n, Rational(0));
    for (int r = 0; r < rk; ++r) x[pivot_col[r]] = b[r];
    return true;
}

}  // namespace oscsym
