#pragma once

#include <map>
#include <optional>
#include <vector>

#include "oscsym/algebra/bracket.hpp"

namespace oscsym {

/// Structure constants over a pinned ordered basis. entry(a,b) is the sparse
/// coordinate vector of [e_a, e_b].
class StructureTensor {
  public:
    using Row = std::map<int, Rational>;

    StructureTensor(int n, AlgebraMode mode, BasisKind basis, std::vector<GeneratorIndex> elements)
        : n_(n),
          mode_(std::move(mode)),
          basis_(basis),
          elements_(std::move(elements)),
          entries_(elements_.size() * elements_.size()) {
        for (size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], (int)k);
    }

    int n() const { return n_; }
    const AlgebraMode& mode() const { return mode_; }
    BasisKind basis() const { return basis_; }
    int dim() const { return (int)elements_.size(); }
    const std::vector<GeneratorIndex>& elements() const { return elements_; }

    int index_of(const GeneratorIndex& g) const {
        auto it = index_.find(g);
        if (it == index_.end()) throw std::out_of_range("generator not in basis: " + g.str());
        return it->second;
    }

    const Row& entry(int a, int b) const { return entries_[a * dim() + b]; }

    void set_entry(int a, int b, Row row) { entries_[a * dim() + b] = std::move(row); }

    Row from_element(const AlgebraElement& e) const {
        Row r;
        for (const auto& [g, c] : e.coeffs()) r[index_of(g)] = c;
        return r;
    }

    /// Coordinates of [x, y] for sparse coordinate vectors x, y.
    Row apply(const Row& x, const Row& y) const {
        Row out;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) {
                const Rational f = ca * cb;
                for (const auto& [t, c] : entry(a, b)) {
                    auto [it, fresh] = out.try_emplace(t, f * c);
                    if (!fresh) {
                        it->second += f * c;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
        return out;
    }

    bool antisymmetric() const {
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b <= a; ++b) {
                Row neg = entry(b, a);
                for (auto& [t, c] : neg) c = -c;
                if (entry(a, b) != neg) return false;
            }
        return true;
    }

  private:
    int n_;
    AlgebraMode mode_;
    BasisKind basis_;
    std::vector<GeneratorIndex> elements_;
    std::map<GeneratorIndex, int> index_;
    std::vector<Row> entries_;
};

namespace detail {

/// LF tensor from the defining relations; only alpha enters.
inline StructureTensor lf_tensor(int n, const AlgebraMode& mode, const Rational& alpha) {
    StructureTensor t(n, mode, BasisKind::LF, lf_basis(n));
    const auto& basis = t.elements();
    for (int a = 0; a < t.dim(); ++a)
        for (int b = 0; b < t.dim(); ++b) {
            AlgebraElement br = bracket_gen_lf(n, mode, alpha, basis[a], basis[b]);
            t.set_entry(a, b, t.from_element(br));
        }
    return t;
}

/// Closed-form f-basis constants for alpha = +omega^2.
inline Rational c_plus_f(int n, const Rational& w, int al, int be, int i, int j, int k, int l) {
    long v = kron(i, k) * (kron(al, j) * kron(be, l) - kron(al, l) * kron(be, j)) +
             kron(j, l) * (kron(al, i) * kron(be, k) - kron(al, k) * kron(be, i)) +
             kron(i, l) * (kron(al, j) * kron(be, k) + kron(al, k) * kron(be, j)) -
             kron(j, k) * (kron(al, i) * kron(be, l) + kron(al, l) * kron(be, i)) -
             2 * kron(k, l) * (kron(i, n) * kron(al, j) * kron(be, n) -
                               kron(j, n) * kron(al, n) * kron(be, i)) +
             2 * kron(i, j) * (kron(k, n) * kron(al, l) * kron(be, n) -
                               kron(l, n) * kron(al, n) * kron(be, k));
    return v * w;
}

/// Closed-form f-basis constants for alpha = -omega^2.
inline Rational c_minus_f(int n, const Rational& w, int al, int be, int i, int j, int k, int l) {
    long v = kron(i, l) * kron(al, k) * kron(be, j) - kron(j, k) * kron(al, i) * kron(be, l) +
             kron(i, j) * (kron(n, k) * kron(al, n) * kron(be, l) -
                           kron(l, n) * kron(al, k) * kron(be, n)) +
             kron(k, l) * (kron(j, n) * kron(al, i) * kron(be, n) -
                           kron(n, i) * kron(al, n) * kron(be, j));
    return 2 * v * w;
}

inline StructureTensor f_tensor(int n, const AlgebraMode& mode) {
    if (!mode.has_f_basis()) throw ZeroModeUnsupported("f-basis tensor needs omega");
    const Rational w = mode.omega();
    const bool plus = mode.kind() == AlgebraMode::Kind::Plus;
    StructureTensor t(n, mode, BasisKind::FBasis, f_basis(n, /*with_radical=*/true));
    const auto& basis = t.elements();
    for (int a = 0; a < t.dim(); ++a) {
        if (basis[a].kind == GeneratorIndex::Kind::R) continue;  // central: zero row
        for (int b = 0; b < t.dim(); ++b) {
            if (basis[b].kind == GeneratorIndex::Kind::R) continue;
            StructureTensor::Row row;
            const int i = basis[a].i, j = basis[a].j, k = basis[b].i, l = basis[b].j;
            for (int target = 0; target < t.dim(); ++target) {
                if (basis[target].kind == GeneratorIndex::Kind::R) continue;
                const int al = basis[target].i, be = basis[target].j;
                Rational c = plus ? c_plus_f(n, w, al, be, i, j, k, l)
                                  : c_minus_f(n, w, al, be, i, j, k, l);
                if (c != 0) row[target] = c;
            }
            t.set_entry(a, b, std::move(row));
        }
    }
    return t;
}

}  // namespace detail

/// LF tensor for an arbitrary family parameter alpha; used by the kappa
/// classifier where alpha = kappa(h, a) need not come from a rational omega.
inline StructureTensor lf_tensor_from_alpha(int n, const Rational& alpha) {
    AlgebraMode tag = alpha > 0    ? AlgebraMode::plus(Rational(1))
                      : alpha < 0 ? AlgebraMode::minus(Rational(1))
                                  : AlgebraMode::zero();
    return detail::lf_tensor(n, tag, alpha);
}

inline StructureTensor structure_tensor(int n, const AlgebraMode& mode, BasisKind basis) {
    if (n < 2) throw std::invalid_argument("structure tensor needs n >= 2");
    if (basis == BasisKind::LF) return detail::lf_tensor(n, mode, mode.alpha());
    return detail::f_tensor(n, mode);
}

/// Symmetrized zero-mode [L,F] constants; the sum runs over 1 <= al <= be <= N
/// only, with the diagonal-target double counting removed.
inline Rational zero_mode_s_tilde(int al, int be, int i, int j, int k, int l) {
    using detail::kron;
    auto s = [&](int A, int B) {
        return kron(i, l) * kron(A, k) * kron(B, j) + kron(i, k) * kron(A, j) * kron(B, l) -
               kron(j, k) * kron(A, i) * kron(B, l) - kron(j, l) * kron(A, k) * kron(B, i);
    };
    return Rational((1 - kron(al, be)) * s(al, be) + s(be, al));
}

/// Maximum absolute coordinate of the cyclic Jacobi sum over all basis triples.
inline Rational jacobiator(const StructureTensor& t) {
    Rational worst(0);
    const int d = t.dim();
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                StructureTensor::Row acc;
                auto add_term = [&](int x, int y, int z) {
                    StructureTensor::Row inner = t.entry(x, y);
                    StructureTensor::Row zrow;
                    zrow[z] = Rational(1);
                    for (const auto& [tgt, cv] : t.apply(inner, zrow)) {
                        auto [it, fresh] = acc.try_emplace(tgt, cv);
                        if (!fresh) it->second += cv;
                    }
                };
                // sum_cyc [[a,b],c]
                add_term(a, b, c);
                add_term(b, c, a);
                add_term(c, a, b);
                for (const auto& [tgt, cv] : acc) {
                    Rational m = abs_of(cv);
                    if (m > worst) worst = m;
                }
            }
    return worst;
}

/// True iff r_N = sum_k F(k,k) commutes with every LF basis element.
inline bool radical_commutes(int n, const AlgebraMode& mode) {
    AlgebraElement r(n, mode, BasisKind::LF);
    for (int k = 1; k <= n; ++k) r.add_F(k, k, Rational(1));
    for (const auto& g : lf_basis(n)) {
        AlgebraElement b = single_generator(n, mode, BasisKind::LF, g);
        if (!bracket_LF(r, b).is_zero()) return false;
    }
    return true;
}

/// Transition-consistency: conjugating the LF tensor by the f-basis change
/// must reproduce the closed-form f tensor entry-for-entry.
inline bool f_tensor_matches_lf(int n, const AlgebraMode& mode) {
    StructureTensor tf = structure_tensor(n, mode, BasisKind::FBasis);
    const auto& basis = tf.elements();
    for (int a = 0; a < tf.dim(); ++a)
        for (int b = 0; b < tf.dim(); ++b) {
            AlgebraElement xa = from_f_basis(single_generator(n, mode, BasisKind::FBasis, basis[a]));
            AlgebraElement xb = from_f_basis(single_generator(n, mode, BasisKind::FBasis, basis[b]));
            AlgebraElement br = to_f_basis(bracket_LF(xa, xb));
            if (tf.from_element(br) != tf.entry(a, b)) return false;
        }
    return true;
}

}  // namespace oscsym
