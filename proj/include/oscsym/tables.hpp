#pragma once

#include <map>
#include <string>
#include <vector>

#include "oscsym/algebra/tensor.hpp"
#include "oscsym/reps/matrix_rep.hpp"

namespace oscsym {

/// A commutation table: labeled basis plus sparse bracket expansions, pinned
/// by labels so tables with different row orders compare entry-for-entry.
struct CommTable {
    std::vector<std::string> labels;
    // entries[a][b] = map label -> coefficient for [e_a, e_b]
    std::vector<std::vector<std::map<std::string, Rational>>> entries;

    const std::map<std::string, Rational>& entry(const std::string& row,
                                                 const std::string& col) const {
        return entries[pos(row)][pos(col)];
    }

    int pos(const std::string& label) const {
        for (size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == label) return (int)k;
        throw std::out_of_range("no table row " + label);
    }

    bool same_content(const CommTable& other) const {
        if (labels.size() != other.labels.size()) return false;
        for (const auto& r : labels)
            for (const auto& c : labels) {
                try {
                    if (entry(r, c) != other.entry(r, c)) return false;
                } catch (const std::out_of_range&) {
                    return false;
                }
            }
        return true;
    }
};

inline CommTable table_from_tensor(const StructureTensor& t, bool drop_radical = true) {
    CommTable table;
    std::vector<int> keep;
    for (int k = 0; k < t.dim(); ++k) {
        if (drop_radical && t.elements()[k].kind == GeneratorIndex::Kind::R) continue;
        keep.push_back(k);
        table.labels.push_back(t.elements()[k].str());
    }
    table.entries.resize(keep.size());
    for (size_t a = 0; a < keep.size(); ++a) {
        table.entries[a].resize(keep.size());
        for (size_t b = 0; b < keep.size(); ++b) {
            std::map<std::string, Rational> row;
            for (const auto& [tgt, c] : t.entry(keep[a], keep[b]))
                row[t.elements()[tgt].str()] = c;
            table.entries[a][b] = std::move(row);
        }
    }
    return table;
}

namespace detail {

/// Bracket table of an explicit matrix basis, coefficients solved exactly
/// over Q by flattening the ExtScalar components.
inline CommTable table_from_matrix_basis(const std::vector<std::string>& labels,
                                         const std::vector<XMat>& basis) {
    const int k = (int)basis.size();
    const int dim = basis[0].rows();
    QMat a(4 * dim * dim, k);
    for (int c = 0; c < k; ++c) {
        int r = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (const auto& comp : basis[c](i, j).components()) a(r++, c) = comp;
    }
    CommTable table;
    table.labels = labels;
    table.entries.resize(k);
    for (int x = 0; x < k; ++x) {
        table.entries[x].resize(k);
        for (int y = 0; y < k; ++y) {
            XMat br = commutator(basis[x], basis[y]);
            std::vector<Rational> rhs;
            rhs.reserve(4 * dim * dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    for (const auto& comp : br(i, j).components()) rhs.push_back(comp);
            std::vector<Rational> coords;
            if (!solve_linear(a, rhs, coords))
                throw std::logic_error("matrix bracket left the basis span");
            std::map<std::string, Rational> row;
            for (int t = 0; t < k; ++t)
                if (coords[t] != 0) row[labels[t]] = coords[t];
            table.entries[x][y] = std::move(row);
        }
    }
    return table;
}

}  // namespace detail

/// The reference basis (H_1..H_{N-1}, M^2_*,...,M^N_*, mu^2_*,...,mu^N_*) of
/// the antihermitian traceless matrices, ordered Cartan first.
inline std::pair<std::vector<std::string>, std::vector<XMat>> su_reference_basis(int n) {
    using E = ExtScalar;
    std::vector<std::string> labels;
    std::vector<XMat> mats;
    for (int i = 1; i <= n - 1; ++i) {
        labels.push_back("H" + std::to_string(i));
        mats.push_back(detail::unit_xmat(n, n, n, E::imag(Rational(1))) +
                       detail::unit_xmat(n, i, i, E::imag(Rational(-1))));
    }
    for (int alpha = 2; alpha <= n; ++alpha)
        for (int k = 1; k <= n + 1 - alpha; ++k) {
            labels.push_back("M" + std::to_string(alpha) + "_" + std::to_string(k));
            mats.push_back(detail::unit_xmat(n, k + alpha - 1, k, E(Rational(1))) +
                           detail::unit_xmat(n, k, k + alpha - 1, E(Rational(-1))));
        }
    for (int beta = 2; beta <= n; ++beta)
        for (int k = 1; k <= n + 1 - beta; ++k) {
            labels.push_back("mu" + std::to_string(beta) + "_" + std::to_string(k));
            mats.push_back(detail::unit_xmat(n, k + beta - 1, k, E::imag(Rational(1))) +
                           detail::unit_xmat(n, k, k + beta - 1, E::imag(Rational(1))));
        }
    return {labels, mats};
}

/// Cartan (e_{NN} - e_{kk}) plus off-diagonal elementary matrices, upper lex
/// first then lower lex. The reference N = 2, 3 tables tabulate this Cartan
/// sign (opposite to the displayed basis matrices); the isomorphism rules use
/// the displayed one and are verified independently.
inline std::pair<std::vector<std::string>, std::vector<XMat>> sl_reference_basis(int n) {
    using E = ExtScalar;
    std::vector<std::string> labels;
    std::vector<XMat> mats;
    for (int i = 1; i <= n - 1; ++i) {
        labels.push_back("H" + std::to_string(i));
        mats.push_back(detail::unit_xmat(n, i, i, E(Rational(-1))) +
                       detail::unit_xmat(n, n, n, E(Rational(1))));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            labels.push_back("e" + std::to_string(i) + std::to_string(j));
            mats.push_back(detail::unit_xmat(n, i, j, E(Rational(1))));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            labels.push_back("e" + std::to_string(j) + std::to_string(i));
            mats.push_back(detail::unit_xmat(n, j, i, E(Rational(1))));
        }
    return {labels, mats};
}

inline CommTable su_reference_table(int n) {
    auto [labels, mats] = su_reference_basis(n);
    return detail::table_from_matrix_basis(labels, mats);
}

inline CommTable sl_reference_table(int n) {
    auto [labels, mats] = sl_reference_basis(n);
    return detail::table_from_matrix_basis(labels, mats);
}

}  // namespace oscsym
