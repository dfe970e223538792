#pragma once

#include <optional>
#include <string>

#include "oscsym/discrete/discretization.hpp"
#include "oscsym/oracle/realize.hpp"

namespace oscsym {

/// Formula-level discrete tensor component
///   F^{(h,a)}_{i,j} = p_i p_j + ((2a-1)/2) h w^2 (q_i p_j + q_j p_i) + w^2 q_i q_j.
/// Setting h = 0 here recovers the continuous component with alpha = w^2.
inline QuadraticObservable discrete_F(int n, const Rational& h, const Rational& omega_t,
                                      const Rational& a, int i, int j) {
    if (!(1 <= i && i <= n && 1 <= j && j <= n)) throw std::out_of_range("F index");
    const Rational w2 = omega_t * omega_t;
    const Rational cross = (2 * a - 1) / 2 * h * w2;
    QuadraticObservable o(n);
    o.add_monomial(o.p_index(i), o.p_index(j), Rational(1));
    o.add_monomial(o.q_index(i), o.q_index(j), w2);
    if (cross != 0) {
        if (i == j) {
            o.add_monomial(o.q_index(i), o.p_index(i), 2 * cross);
        } else {
            o.add_monomial(o.q_index(i), o.p_index(j), cross);
            o.add_monomial(o.q_index(j), o.p_index(i), cross);
        }
    }
    return o;
}

/// Discrete tensor component of a parameter set; the off-diagonal components
/// exist only when the two weights agree.
inline QuadraticObservable invariant_F(const DiscretizationParams& P, int i, int j) {
    P.validate();
    if (!(1 <= i && i <= P.n && 1 <= j && j <= P.n)) throw std::out_of_range("F index");
    if (P.a[i - 1] != P.a[j - 1])
        throw std::invalid_argument("discrete F(i,j) requires a_i = a_j");
    return discrete_F(P.n, P.h, P.omega_t, P.a[i - 1], i, j);
}

inline QuadraticObservable invariant_L(int n, int i, int j) { return realize_L(n, i, j); }

/// Pullback of a quadratic form through the linear step: S -> M^T S M.
inline QuadraticObservable pullback(const QuadraticObservable& obs,
                                    const DiscretizationParams& P) {
    if (obs.dim_n() != P.n) throw DimensionMismatch("pullback dims");
    QMat m = step_matrix(P);
    return QuadraticObservable(P.n, m.transpose() * obs.matrix() * m);
}

struct KappaRegime {
    Rational kappa;
    enum class Regime { PlusLike, MinusLike, ZeroLike } tag;

    std::string tag_name() const {
        switch (tag) {
            case Regime::PlusLike: return "plus";
            case Regime::MinusLike: return "minus";
            default: return "zero";
        }
    }
};

/// kappa(h, a) = w^2 [1 - h^2 w^2 (a - 1/2)^2]; regime = sign(kappa).
/// Defined for symplectic parameters with a single weight a.
inline KappaRegime kappa(const DiscretizationParams& P) {
    P.validate();
    if (!P.symplectic_weights() || !P.uniform_a())
        throw std::invalid_argument("kappa requires b = a and all a_i equal");
    const Rational w2 = P.omega_t * P.omega_t;
    const Rational d = P.a[0] - Rational(1, 2);
    Rational k = w2 * (1 - P.h * P.h * w2 * d * d);
    auto tag = k > 0   ? KappaRegime::Regime::PlusLike
               : k < 0 ? KappaRegime::Regime::MinusLike
                       : KappaRegime::Regime::ZeroLike;
    return {std::move(k), tag};
}

struct SymmetryAlgebraReport {
    bool pass = false;
    Rational kappa_value;
    int pairs_checked = 0;
    std::string first_mismatch;
};

/// Brute-forces every Poisson bracket of {L_{i,j}, F^{(h,a)}_{i,j}} and checks
/// exact equality with the abstract constants of A_N(kappa) in the LF basis,
/// under the correspondence F^{(h,a)} <-> F.
inline SymmetryAlgebraReport verify_symmetry_algebra(int n, const DiscretizationParams& P) {
    if (n != P.n) throw DimensionMismatch("dimension n");
    KappaRegime k = kappa(P);
    StructureTensor expected = lf_tensor_from_alpha(n, k.kappa);

    auto basis = expected.elements();
    std::vector<QuadraticObservable> realized;
    realized.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.kind == GeneratorIndex::Kind::L)
            realized.push_back(invariant_L(n, g.i, g.j));
        else
            realized.push_back(invariant_F(P, g.i, g.j));
    }
    SpanSolver solver(n, realized);

    SymmetryAlgebraReport rep;
    rep.kappa_value = k.kappa;
    rep.pass = true;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b) {
            QuadraticObservable br = poisson_bracket(realized[a], realized[b]);
            std::vector<Rational> coords;
            try {
                coords = solver.express(br);
            } catch (const NotInSpan&) {
                rep.pass = false;
                rep.first_mismatch = "{" + basis[a].str() + "," + basis[b].str() + "} not in span";
                return rep;
            }
            StructureTensor::Row got;
            for (size_t t = 0; t < coords.size(); ++t)
                if (coords[t] != 0) got[(int)t] = coords[t];
            ++rep.pairs_checked;
            if (got != expected.entry((int)a, (int)b)) {
                rep.pass = false;
                rep.first_mismatch = "{" + basis[a].str() + "," + basis[b].str() + "}";
                return rep;
            }
        }
    return rep;
}

}  // namespace oscsym
