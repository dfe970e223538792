#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "oscsym/discrete/discretization.hpp"
#include "oscsym/oracle/realize.hpp"

namespace oscsym {

/// Phase-space function with an exact gradient: a coordinate, a quadratic, or
/// (for tests) a custom polynomial hook.
class PhaseFunction {
  public:
    using ValueFn = std::function<Rational(const std::vector<Rational>&)>;
    using GradFn = std::function<std::vector<Rational>(const std::vector<Rational>&)>;

    static PhaseFunction coordinate(int slot) {
        PhaseFunction f;
        f.kind_ = Kind::Coordinate;
        f.slot_ = slot;
        return f;
    }
    static PhaseFunction quadratic(QuadraticObservable q) {
        PhaseFunction f;
        f.kind_ = Kind::Quadratic;
        f.quad_ = std::move(q);
        return f;
    }
    static PhaseFunction custom(ValueFn v, GradFn g) {
        PhaseFunction f;
        f.kind_ = Kind::Custom;
        f.value_ = std::move(v);
        f.grad_ = std::move(g);
        return f;
    }

    Rational value(const std::vector<Rational>& x) const {
        switch (kind_) {
            case Kind::Coordinate: return x[slot_];
            case Kind::Quadratic: return quad_->value(x);
            default: return value_(x);
        }
    }

    std::vector<Rational> gradient(const std::vector<Rational>& x) const {
        switch (kind_) {
            case Kind::Coordinate: {
                std::vector<Rational> g(x.size(), Rational(0));
                g[slot_] = Rational(1);
                return g;
            }
            case Kind::Quadratic: return quad_->gradient(x);
            default: return grad_(x);
        }
    }

  private:
    enum class Kind { Coordinate, Quadratic, Custom };
    PhaseFunction() = default;
    Kind kind_ = Kind::Coordinate;
    int slot_ = 0;
    std::optional<QuadraticObservable> quad_;
    ValueFn value_;
    GradFn grad_;
};

/// mu * det of the stacked gradient matrix (row k = grad f_k at x); requires
/// as many functions as coordinates.
inline Rational nambu_bracket(const std::vector<PhaseFunction>& funcs,
                              const std::vector<Rational>& x, const Rational& mu) {
    const int m = (int)x.size();
    if ((int)funcs.size() != m)
        throw DimensionMismatch("nambu bracket needs dim-many functions");
    QMat j(m, m);
    for (int r = 0; r < m; ++r) {
        auto g = funcs[r].gradient(x);
        for (int c = 0; c < m; ++c) j(r, c) = g[c];
    }
    return mu * det(j);
}

/// The distinguished invariant list S = (F_{1,1},...,F_{1,N},F_{2,2},...,F_{2,N})
/// of the continuous oscillator with alpha = omega_t^2; 2N-1 functions.
inline std::vector<QuadraticObservable> hamiltonian_set(int n, const Rational& omega_t) {
    const Rational alpha = omega_t * omega_t;
    std::vector<QuadraticObservable> s;
    for (int j = 1; j <= n; ++j) s.push_back(realize_F(n, 1, j, alpha));
    for (int j = 2; j <= n; ++j) s.push_back(realize_F(n, 2, j, alpha));
    return s;
}

inline Rational angular_momentum_12(const PhaseState& s) {
    if (s.n() < 2) throw DimensionMismatch("L(1,2) needs at least two degrees of freedom");
    return s.q[0] * s.p[1] - s.q[1] * s.p[0];
}

/// Density of the oscillator's Nambu structure:
///   mu_{2N} = (-1)^{N+1} / (4 omega_t^{2(N-1)} L_{1,2}^{N-1}).
/// The sign is pinned by requiring the Nambu system to reproduce the Hamilton
/// field exactly; singular where L_{1,2} vanishes.
inline Rational mu_factor(int n, const Rational& omega_t, const PhaseState& s) {
    s.check(n);
    const Rational l = angular_momentum_12(s);
    if (l == 0) throw DegenerateAngularMomentum("L_{1,2} = 0: Nambu density undefined");
    Rational denom = 4 * pow_rat(omega_t, 2 * (n - 1)) * pow_rat(l, n - 1);
    Rational mu = 1 / denom;
    return (n % 2 == 0) ? -mu : mu;
}

/// det of the gradient matrix with rows (F_{1,1},...,F_{1,N}, x_slot, F_{2,2},
/// ...,F_{2,N}): the coordinate row sits after the first N invariant rows.
/// With this row arrangement the closed form below is exact for every N.
inline Rational detJ_dense(const PhaseState& s, int n, const Rational& omega_t, int slot) {
    s.check(n);
    auto S = hamiltonian_set(n, omega_t);
    auto x = s.flat();
    QMat j(2 * n, 2 * n);
    int row = 0;
    auto put = [&](const std::vector<Rational>& g) {
        for (int c = 0; c < 2 * n; ++c) j(row, c) = g[c];
        ++row;
    };
    for (int k = 0; k < n; ++k) put(S[k].gradient(x));
    std::vector<Rational> coord(2 * n, Rational(0));
    coord[slot] = Rational(1);
    put(coord);
    for (int k = n; k < 2 * n - 1; ++k) put(S[k].gradient(x));
    return det(j);
}

/// Closed form -4 omega_t^{2(N-1)} L_{1,2}^{N-1} p_i for the q_i row block
/// arrangement of detJ_dense.
inline Rational detJ_closed(const PhaseState& s, int n, const Rational& omega_t, int i) {
    s.check(n);
    const Rational l = angular_momentum_12(s);
    return -4 * pow_rat(omega_t, 2 * (n - 1)) * pow_rat(l, n - 1) * s.p[i - 1];
}

/// Nambu right-hand side: xdot_k = mu_{2N} {x_k, F_{1,1},...,F_{2,N}} with the
/// coordinate gradient as the first row. Equals (p, -omega_t^2 q) exactly at
/// every nonsingular point.
inline std::pair<std::vector<Rational>, std::vector<Rational>> nambu_rhs(const PhaseState& s,
                                                                         int n,
                                                                         const Rational& omega_t) {
    s.check(n);
    const Rational mu = mu_factor(n, omega_t, s);
    auto S = hamiltonian_set(n, omega_t);
    auto x = s.flat();
    std::vector<PhaseFunction> funcs;
    funcs.push_back(PhaseFunction::coordinate(0));  // placeholder, replaced per coordinate
    for (const auto& f : S) funcs.push_back(PhaseFunction::quadratic(f));
    std::vector<Rational> qdot(n), pdot(n);
    for (int k = 0; k < 2 * n; ++k) {
        funcs[0] = PhaseFunction::coordinate(k);
        Rational val = nambu_bracket(funcs, x, mu);
        if (k < n)
            qdot[k] = val;
        else
            pdot[k - n] = val;
    }
    return {std::move(qdot), std::move(pdot)};
}

/// Exact rank of the (2N-1) x 2N Jacobian of the invariant list S at s.
inline int jacobian_rank_S(const PhaseState& s, int n, const Rational& omega_t) {
    s.check(n);
    auto S = hamiltonian_set(n, omega_t);
    auto x = s.flat();
    QMat j(2 * n - 1, 2 * n);
    for (int r = 0; r < 2 * n - 1; ++r) {
        auto g = S[r].gradient(x);
        for (int c = 0; c < 2 * n; ++c) j(r, c) = g[c];
    }
    return rank(j);
}

}  // namespace oscsym
