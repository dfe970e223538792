#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscsym/algebra/mode.hpp"
#include "oscsym/errors.hpp"
#include "oscsym/rational.hpp"

namespace oscsym {

enum class BasisKind { LF, FBasis };

/// Canonicalized basis label. Canonical forms:
///   L(i,j) with i < j   (L(j,i) enters as -L(i,j), L(i,i) as 0),
///   F(i,j) with i <= j,
///   f(i,j) any pair except (N,N) (f(N,N) is identically zero),
///   R       the radical generator r_N = F(1,1)+...+F(N,N).
struct GeneratorIndex {
    enum class Kind { L, F, f, R };
    Kind kind;
    int i = 0, j = 0;

    static GeneratorIndex F(int i, int j) {
        if (i > j) std::swap(i, j);
        return {Kind::F, i, j};
    }
    static GeneratorIndex f(int i, int j) { return {Kind::f, i, j}; }
    static GeneratorIndex R() { return {Kind::R, 0, 0}; }

    friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::L: return "L(" + std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::F: return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::f: return "f(" + std::to_string(i) + "," + std::to_string(j) + ")";
            default: return "r";
        }
    }
};

/// L(j,i) with j > i canonicalizes to -L(i,j); returned sign is +1/-1/0.
inline std::pair<GeneratorIndex, int> canonical_L(int i, int j) {
    if (i == j) return {GeneratorIndex{GeneratorIndex::Kind::L, 0, 0}, 0};
    if (i < j) return {GeneratorIndex{GeneratorIndex::Kind::L, i, j}, 1};
    return {GeneratorIndex{GeneratorIndex::Kind::L, j, i}, -1};
}

/// Sparse linear combination of canonical generators.
class AlgebraElement {
  public:
    AlgebraElement(int n, AlgebraMode mode, BasisKind basis)
        : n_(n), mode_(std::move(mode)), basis_(basis) {}

    int n() const { return n_; }
    const AlgebraMode& mode() const { return mode_; }
    BasisKind basis() const { return basis_; }
    const std::map<GeneratorIndex, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    void add(const GeneratorIndex& g, const Rational& c) {
        if (c == 0) return;
        validate(g);
        auto it = coeffs_.find(g);
        if (it == coeffs_.end()) {
            coeffs_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    /// Adds c*L(i,j) with index canonicalization through the ideal.
    void add_L(int i, int j, const Rational& c) {
        auto [g, s] = canonical_L(i, j);
        if (s != 0) add(g, s * c);
    }
    void add_F(int i, int j, const Rational& c) { add(GeneratorIndex::F(i, j), c); }
    /// Adds c*f(i,j); f(N,N) = 0 is dropped.
    void add_f(int i, int j, const Rational& c) {
        if (i == n_ && j == n_) return;
        add(GeneratorIndex::f(i, j), c);
    }

    Rational coeff(const GeneratorIndex& g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_compatible(o);
        for (const auto& [g, c] : o.coeffs_) add(g, c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }

    friend AlgebraElement operator*(const Rational& k, const AlgebraElement& x) {
        AlgebraElement r(x.n_, x.mode_, x.basis_);
        if (k == 0) return r;
        for (const auto& [g, c] : x.coeffs_) r.coeffs_.emplace(g, k * c);
        return r;
    }
    AlgebraElement operator-() const { return Rational(-1) * *this; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) {
        return x += Rational(-1) * y;
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.n_ == y.n_ && x.basis_ == y.basis_ && x.coeffs_ == y.coeffs_;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [g, c] : coeffs_) {
            std::string cs = to_fraction_string(c);
            if (!out.empty() && cs[0] != '-') out += "+";
            out += cs + "*" + g.str();
        }
        return out;
    }

    void require_compatible(const AlgebraElement& o) const {
        if (n_ != o.n_ || !(mode_ == o.mode_) || basis_ != o.basis_)
            throw DimensionMismatch("algebra elements from different algebras");
    }

  private:
    void validate(const GeneratorIndex& g) const {
        using K = GeneratorIndex::Kind;
        switch (g.kind) {
            case K::L:
                if (!(1 <= g.i && g.i < g.j && g.j <= n_))
                    throw std::out_of_range("non-canonical L index");
                if (basis_ != BasisKind::LF) throw std::invalid_argument("L in f basis");
                break;
            case K::F:
                if (!(1 <= g.i && g.i <= g.j && g.j <= n_))
                    throw std::out_of_range("non-canonical F index");
                if (basis_ != BasisKind::LF) throw std::invalid_argument("F in f basis");
                break;
            case K::f:
                if (!(1 <= g.i && g.i <= n_ && 1 <= g.j && g.j <= n_) || (g.i == n_ && g.j == n_))
                    throw std::out_of_range("bad f index");
                if (basis_ != BasisKind::FBasis) throw std::invalid_argument("f in LF basis");
                break;
            case K::R:
                if (basis_ != BasisKind::FBasis)
                    throw std::invalid_argument("r belongs to the f basis completion");
                break;
        }
    }

    int n_;
    AlgebraMode mode_;
    BasisKind basis_;
    std::map<GeneratorIndex, Rational> coeffs_;
};

/// Pinned LF ordering: L(i,j) i<j lex, then F(1,1)..F(N,N), then F(i,j) i<j lex.
inline std::vector<GeneratorIndex> lf_basis(int n) {
    std::vector<GeneratorIndex> b;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.push_back(canonical_L(i, j).first);
    for (int i = 1; i <= n; ++i) b.push_back(GeneratorIndex::F(i, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.push_back(GeneratorIndex::F(i, j));
    return b;
}

/// Pinned f ordering: f(1,1)..f(N-1,N-1), then f(i,j) i<j lex, then the
/// transposed lower list f(j,i) in the same order. The lower list mirrors the
/// upper one so the minus-mode Killing form pairs k-th upper with k-th lower.
inline std::vector<GeneratorIndex> f_basis(int n, bool with_radical = false) {
    std::vector<GeneratorIndex> b;
    for (int i = 1; i <= n - 1; ++i) b.push_back(GeneratorIndex::f(i, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.push_back(GeneratorIndex::f(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.push_back(GeneratorIndex::f(j, i));
    if (with_radical) b.push_back(GeneratorIndex::R());
    return b;
}

}  // namespace oscsym
