#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "oscsym/errors.hpp"
#include "oscsym/matrix.hpp"
#include "oscsym/oracle/quadratic.hpp"

namespace oscsym {

struct PhaseState {
    std::vector<Rational> q, p;

    int n() const { return (int)q.size(); }

    /// Flattened (q_1..q_N, p_1..p_N), the pinned coordinate order.
    std::vector<Rational> flat() const {
        std::vector<Rational> x = q;
        x.insert(x.end(), p.begin(), p.end());
        return x;
    }
    static PhaseState from_flat(const std::vector<Rational>& x) {
        const int n = (int)x.size() / 2;
        PhaseState s;
        s.q.assign(x.begin(), x.begin() + n);
        s.p.assign(x.begin() + n, x.end());
        return s;
    }
    void check(int n) const {
        if ((int)q.size() != n || (int)p.size() != n)
            throw DimensionMismatch("phase state length");
    }
};

/// One-parameter-per-dof linear discretization: step h, frequency omega_t,
/// convex weights a_i (q update) and b_i (p update).
struct DiscretizationParams {
    int n = 1;
    Rational h{1};
    Rational omega_t{1};
    std::vector<Rational> a, b;

    Rational delta(int i) const {
        return 1 + h * h * omega_t * omega_t * (1 - a[i - 1]) * b[i - 1];
    }

    bool symplectic_weights() const { return a == b; }
    bool uniform_a() const {
        for (const auto& v : a)
            if (v != a[0]) return false;
        return true;
    }

    void validate() const {
        if (n < 1 || (int)a.size() != n || (int)b.size() != n)
            throw DimensionMismatch("discretization parameter lengths");
        if (h <= 0) throw std::invalid_argument("step h must be positive");
        if (omega_t < 0) throw std::invalid_argument("omega_t must be nonnegative");
    }

    static DiscretizationParams uniform(int n, Rational h, Rational omega_t, Rational a) {
        DiscretizationParams p;
        p.n = n;
        p.h = std::move(h);
        p.omega_t = std::move(omega_t);
        p.a.assign(n, a);
        p.b.assign(n, a);
        return p;
    }
};

/// Per-dof 2x2 update matrix [[A,B],[C,D]] acting on (q_i, p_i).
inline std::array<Rational, 4> step_block(const DiscretizationParams& P, int i) {
    const Rational d = P.delta(i);
    if (d == 0) throw SingularStep("Delta_" + std::to_string(i) + " = 0");
    const Rational h = P.h, w2 = P.omega_t * P.omega_t;
    const Rational ai = P.a[i - 1], bi = P.b[i - 1];
    return {(1 - h * h * w2 * (1 - ai) * (1 - bi)) / d, h / d,
            -h * w2 / d, (1 - h * h * w2 * ai * bi) / d};
}

inline PhaseState step(const PhaseState& s, const DiscretizationParams& P) {
    P.validate();
    s.check(P.n);
    PhaseState out;
    out.q.resize(P.n);
    out.p.resize(P.n);
    for (int i = 1; i <= P.n; ++i) {
        auto [A, B, C, D] = step_block(P, i);
        out.q[i - 1] = A * s.q[i - 1] + B * s.p[i - 1];
        out.p[i - 1] = C * s.q[i - 1] + D * s.p[i - 1];
    }
    return out;
}

/// Full 2N x 2N step matrix in the (q, p) block order.
inline QMat step_matrix(const DiscretizationParams& P) {
    P.validate();
    QMat m(2 * P.n, 2 * P.n);
    for (int i = 1; i <= P.n; ++i) {
        auto [A, B, C, D] = step_block(P, i);
        m(i - 1, i - 1) = A;
        m(i - 1, P.n + i - 1) = B;
        m(P.n + i - 1, i - 1) = C;
        m(P.n + i - 1, P.n + i - 1) = D;
    }
    return m;
}

/// Per dof, {q_i', p_i'} - 1; identically zero iff b_i = a_i.
inline std::vector<Rational> symplectic_defect(const DiscretizationParams& P) {
    P.validate();
    std::vector<Rational> out;
    out.reserve(P.n);
    for (int i = 1; i <= P.n; ++i) {
        auto [A, B, C, D] = step_block(P, i);
        out.push_back(A * D - B * C - 1);
    }
    return out;
}

namespace detail {

/// Solves (I - c h A) x' = (I + c h A) x per dof for the linear oscillator
/// field, where A = [[0,1],[-w^2,0]] and c is the collapsed one-leg weight.
inline PhaseState one_leg_solve(const PhaseState& s, const Rational& h, const Rational& w,
                                const Rational& c) {
    PhaseState out;
    const int n = s.n();
    out.q.resize(n);
    out.p.resize(n);
    const Rational w2 = w * w;
    const Rational den = 1 + c * c * h * h * w2;
    if (den == 0) throw SingularStep("implicit one-leg solve is singular");
    for (int i = 0; i < n; ++i) {
        // M = I - c h A = [[1, -ch],[ch w^2, 1]]; rhs = (I + c h A) x
        Rational rq = s.q[i] + c * h * s.p[i];
        Rational rp = s.p[i] - c * h * w2 * s.q[i];
        out.q[i] = (rq + c * h * rp) / den;
        out.p[i] = (rp - c * h * w2 * rq) / den;
    }
    return out;
}

}  // namespace detail

/// One-parameter Runge-Kutta family
///   (x'-x)/h = lambda f(x') + (1-2 lambda) f((x+x')/2) + lambda f(x);
/// for the linear field every lambda collapses to the midpoint weight 1/2.
inline PhaseState rk_step(const PhaseState& s, const Rational& h, const Rational& w,
                          const Rational& lambda) {
    Rational c = lambda + (1 - 2 * lambda) / 2;
    return detail::one_leg_solve(s, h, w, c);
}

/// (x'-x)/h = -f(x')/2 + 2 f((x+x')/2) - f(x)/2; same collapse for linear f.
inline PhaseState khk_step(const PhaseState& s, const Rational& h, const Rational& w) {
    Rational c = Rational(-1, 2) + 2 * Rational(1, 2);
    return detail::one_leg_solve(s, h, w, c);
}

/// Coefficient C of the second-difference form q(t+h) - C q(t) + q(t-h) = 0.
/// Requires uniform symplectic weights.
inline Rational second_difference_coeff(const DiscretizationParams& P) {
    P.validate();
    if (!P.symplectic_weights() || !P.uniform_a())
        throw std::invalid_argument("second difference needs b = a and uniform a");
    const Rational a = P.a[0], h2w2 = P.h * P.h * P.omega_t * P.omega_t;
    return (2 - h2w2 * (2 * a * a - 2 * a + 1)) / (1 + h2w2 * (1 - a) * a);
}

/// Iterates the map and returns max_i max_t |q_i(t+h) - C q_i(t) + q_i(t-h)|
/// over `steps` steps; exactly zero when the recurrence holds.
inline Rational orbit_residual(const DiscretizationParams& P, const PhaseState& s0, int steps) {
    const Rational C = second_difference_coeff(P);
    PhaseState prev = s0;
    PhaseState cur = step(s0, P);
    Rational worst(0);
    for (int t = 0; t < steps; ++t) {
        PhaseState next = step(cur, P);
        for (int i = 0; i < P.n; ++i) {
            Rational r = abs_of(next.q[i] - C * cur.q[i] + prev.q[i]);
            if (r > worst) worst = r;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return worst;
}

/// Effective orbit frequency omega_t sqrt(1 - h^2 omega_t^2 (a - 1/2)^2) as a
/// double, when the radicand is nonnegative. Diagnostic only.
inline std::optional<double> effective_frequency(const DiscretizationParams& P) {
    if (!P.uniform_a()) return std::nullopt;
    Rational rad = 1 - P.h * P.h * P.omega_t * P.omega_t * (P.a[0] - Rational(1, 2)) *
                           (P.a[0] - Rational(1, 2));
    if (rad < 0) return std::nullopt;
    return to_double(P.omega_t) * std::sqrt(to_double(rad));
}

}  // namespace oscsym
