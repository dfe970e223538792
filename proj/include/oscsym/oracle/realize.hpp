#pragma once

#include <vector>

#include "oscsym/algebra/tensor.hpp"
#include "oscsym/oracle/quadratic.hpp"

namespace oscsym {

/// L(i,j) = q_i p_j - q_j p_i as a quadratic observable.
inline QuadraticObservable realize_L(int n, int i, int j) {
    if (!(1 <= i && i <= n && 1 <= j && j <= n && i != j))
        throw std::out_of_range("L index out of range");
    QuadraticObservable o(n);
    o.add_monomial(o.q_index(i), o.p_index(j), Rational(1));
    o.add_monomial(o.q_index(j), o.p_index(i), Rational(-1));
    return o;
}

/// F(i,j) = p_i p_j + alpha q_i q_j.
inline QuadraticObservable realize_F(int n, int i, int j, const Rational& alpha) {
    if (!(1 <= i && i <= n && 1 <= j && j <= n)) throw std::out_of_range("F index out of range");
    QuadraticObservable o(n);
    o.add_monomial(o.p_index(i), o.p_index(j), Rational(1));
    if (alpha != 0) o.add_monomial(o.q_index(i), o.q_index(j), alpha);
    return o;
}

inline QuadraticObservable realize_generator(const GeneratorIndex& g, const AlgebraMode& mode,
                                             int n) {
    using K = GeneratorIndex::Kind;
    switch (g.kind) {
        case K::L: return realize_L(n, g.i, g.j);
        case K::F: return realize_F(n, g.i, g.j, mode.alpha());
        default: throw std::invalid_argument("only L/F generators have a Darboux realization");
    }
}

/// Exact coordinates over a fixed list of quadratic observables. The span's
/// echelon form is computed once so many expressions can be solved cheaply.
class SpanSolver {
  public:
    SpanSolver(int dim_n, std::vector<QuadraticObservable> basis)
        : n_(dim_n), basis_(std::move(basis)) {
        const int m = ambient_dim();
        const int k = (int)basis_.size();
        QMat a(m, k);
        for (int c = 0; c < k; ++c) {
            auto col = flatten(basis_[c]);
            for (int r = 0; r < m; ++r) a(r, c) = col[r];
        }
        echelon_ = std::move(a);
        transform_ = QMat::identity(m);
        rank_ = 0;
        for (int col = 0; col < k && rank_ < m; ++col) {
            int piv = -1;
            for (int r = rank_; r < m; ++r)
                if (echelon_(r, col) != 0) { piv = r; break; }
            if (piv < 0) continue;
            if (piv != rank_)
                for (int c = 0; c < std::max(k, m); ++c) {
                    if (c < k) std::swap(echelon_(piv, c), echelon_(rank_, c));
                    if (c < m) std::swap(transform_(piv, c), transform_(rank_, c));
                }
            Rational p = echelon_(rank_, col);
            for (int c = 0; c < k; ++c) echelon_(rank_, c) /= p;
            for (int c = 0; c < m; ++c) transform_(rank_, c) /= p;
            for (int r = 0; r < m; ++r) {
                if (r == rank_ || echelon_(r, col) == 0) continue;
                Rational f = echelon_(r, col);
                for (int c = 0; c < k; ++c) echelon_(r, c) -= f * echelon_(rank_, c);
                for (int c = 0; c < m; ++c) transform_(r, c) -= f * transform_(rank_, c);
            }
            pivots_.push_back(col);
            ++rank_;
        }
    }

    int rank() const { return rank_; }

    /// Coordinates of obs over the basis; throws NotInSpan if it has none.
    std::vector<Rational> express(const QuadraticObservable& obs) const {
        if (obs.dim_n() != n_) throw DimensionMismatch("span solver dimension");
        auto b = flatten(obs);
        const int m = ambient_dim();
        std::vector<Rational> tb(m, Rational(0));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if (transform_(r, c) != 0 && b[c] != 0) tb[r] += transform_(r, c) * b[c];
        for (int r = rank_; r < m; ++r)
            if (tb[r] != 0) throw NotInSpan("observable has no expansion over the generator span");
        std::vector<Rational> coords(basis_.size(), Rational(0));
        for (int r = 0; r < rank_; ++r) coords[pivots_[r]] = tb[r];
        // Non-pivot basis columns would indicate linear dependence among the
        // generators themselves; the canonical generator sets never have any.
        return coords;
    }

  private:
    int ambient_dim() const { return n_ * (2 * n_ + 1); }  // upper triangle of 2N x 2N

    std::vector<Rational> flatten(const QuadraticObservable& o) const {
        std::vector<Rational> v;
        v.reserve(ambient_dim());
        const QMat& s = o.matrix();
        for (int r = 0; r < s.rows(); ++r)
            for (int c = r; c < s.cols(); ++c) v.push_back(s(r, c));
        return v;
    }

    int n_;
    std::vector<QuadraticObservable> basis_;
    QMat echelon_, transform_;
    std::vector<int> pivots_;
    int rank_ = 0;
};

/// Solver over the realized LF generator basis of A_N(alpha).
inline SpanSolver generator_span(int n, const AlgebraMode& mode) {
    std::vector<QuadraticObservable> gens;
    for (const auto& g : lf_basis(n)) gens.push_back(realize_generator(g, mode, n));
    return SpanSolver(n, std::move(gens));
}

inline AlgebraElement express_in_basis(const QuadraticObservable& obs, int n,
                                       const AlgebraMode& mode) {
    SpanSolver solver = generator_span(n, mode);
    auto coords = solver.express(obs);
    AlgebraElement e(n, mode, BasisKind::LF);
    auto basis = lf_basis(n);
    for (size_t k = 0; k < basis.size(); ++k) e.add(basis[k], coords[k]);
    return e;
}

/// All pairwise Poisson brackets of the realized generators, expressed exactly
/// back over the generator basis. A bracket outside the span would be an
/// implementation bug, reported as ExpressionNotInSpan.
inline StructureTensor structure_constants_bruteforce(int n, const AlgebraMode& mode) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    auto basis = lf_basis(n);
    std::vector<QuadraticObservable> realized;
    realized.reserve(basis.size());
    for (const auto& g : basis) realized.push_back(realize_generator(g, mode, n));
    SpanSolver solver(n, realized);
    StructureTensor t(n, mode, BasisKind::LF, basis);
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b) {
            QuadraticObservable br = poisson_bracket(realized[a], realized[b]);
            StructureTensor::Row row;
            try {
                auto coords = solver.express(br);
                for (size_t k = 0; k < coords.size(); ++k)
                    if (coords[k] != 0) row[(int)k] = coords[k];
            } catch (const NotInSpan&) {
                throw ExpressionNotInSpan("bracket of " + basis[a].str() + ", " + basis[b].str() +
                                          " left the generator span");
            }
            t.set_entry((int)a, (int)b, std::move(row));
        }
    return t;
}

}  // namespace oscsym
