#pragma once

#include <array>
#include <map>

#include "oscsym/algebra/tensor.hpp"

namespace oscsym {

namespace detail {

/// Sparse element of the degree-<=2 slice spanned by J_{a,b} (a<b) and the
/// symmetrized monomials P_a P_b (a<=b). Keys: (0,a,b) for J, (1,a,b) for PP.
using EnvElem = std::map<std::array<int, 3>, Rational>;

inline void env_add(EnvElem& e, std::array<int, 3> key, const Rational& c) {
    if (c == 0) return;
    if (key[0] == 0) {  // J indices antisymmetric
        if (key[1] == key[2]) return;
        if (key[1] > key[2]) {
            std::swap(key[1], key[2]);
            env_add(e, key, -c);
            return;
        }
    } else if (key[1] > key[2]) {
        std::swap(key[1], key[2]);  // P's commute
    }
    auto [it, fresh] = e.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

/// [J_{i,j}, P_k] = P_j d_{i,k} - P_i d_{j,k}, as momentum-index coefficients.
inline std::map<int, Rational> bracket_J_P(int i, int j, int k) {
    std::map<int, Rational> out;
    if (i == k) out[j] += Rational(1);
    if (j == k) out[i] += Rational(-1);
    return out;
}

/// [J_{i,j}, P_k P_l] by the derivation rule, P-monomials symmetrized.
inline EnvElem bracket_J_PP(int i, int j, int k, int l) {
    EnvElem out;
    for (const auto& [m, c] : bracket_J_P(i, j, k)) env_add(out, {1, m, l}, c);
    for (const auto& [m, c] : bracket_J_P(i, j, l)) env_add(out, {1, k, m}, c);
    return out;
}

inline EnvElem bracket_env(const GeneratorIndex& x, const GeneratorIndex& y) {
    EnvElem out;
    using K = GeneratorIndex::Kind;
    if (x.kind == K::L && y.kind == K::L) {
        env_add(out, {0, x.j, y.j}, Rational(kron(x.i, y.i)));
        env_add(out, {0, y.i, x.j}, Rational(kron(y.j, x.i)));
        env_add(out, {0, y.j, x.i}, Rational(kron(x.j, y.i)));
        env_add(out, {0, x.i, y.i}, Rational(kron(y.j, x.j)));
    } else if (x.kind == K::L && y.kind == K::F) {
        out = bracket_J_PP(x.i, x.j, y.i, y.j);
    } else if (x.kind == K::F && y.kind == K::L) {
        for (const auto& [k, c] : bracket_J_PP(y.i, y.j, x.i, x.j)) env_add(out, k, -c);
    }
    // [PP, PP] = 0
    return out;
}

}  // namespace detail

/// Verifies that the degree-2 momentum slice of the Euclidean enveloping
/// algebra reproduces the zero-mode constants: [J_{i,j}, P_k P_l] computed by
/// the derivation rule must equal structure_tensor(n, zero, LF) under the
/// identification J <-> L and P_k P_l <-> F_{k,l}.
inline bool enveloping_check(int n) {
    using detail::env_add;
    using detail::EnvElem;
    AlgebraMode mode = AlgebraMode::zero();
    StructureTensor t = structure_tensor(n, mode, BasisKind::LF);
    const auto& basis = t.elements();

    auto env_of_generator = [](const GeneratorIndex& g) {
        EnvElem e;
        if (g.kind == GeneratorIndex::Kind::L)
            env_add(e, {0, g.i, g.j}, Rational(1));
        else
            env_add(e, {1, g.i, g.j}, Rational(1));
        return e;
    };

    for (int a = 0; a < t.dim(); ++a)
        for (int b = 0; b < t.dim(); ++b) {
            EnvElem got = detail::bracket_env(basis[a], basis[b]);
            EnvElem want;
            for (const auto& [tgt, c] : t.entry(a, b))
                for (const auto& [k, v] : env_of_generator(basis[tgt])) env_add(want, k, c * v);
            if (got != want) return false;
        }
    return true;
}

}  // namespace oscsym
