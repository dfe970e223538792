// Acceptance suite: every verification below is exact (tolerance zero) and
// prints one pass/fail line. Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oscsym/algebra/enveloping.hpp"
#include "oscsym/cli.hpp"
#include "oscsym/discrete/invariants.hpp"
#include "oscsym/killing/killing.hpp"
#include "oscsym/nambu/discrete_gradient.hpp"
#include "oscsym/nambu/matfam.hpp"
#include "oscsym/sampler.hpp"
#include "reference_tables.hpp"

using namespace oscsym;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& extra = "") {
    std::cout << "criterion " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << "  (" << extra << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::vector<AlgebraMode> mode_grid() {
    return {AlgebraMode::plus(rat(1)), AlgebraMode::plus(rat(3, 2)), AlgebraMode::minus(rat(1)),
            AlgebraMode::minus(rat(2, 3)), AlgebraMode::zero()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Jacobi identity, exact, over the full grid, in every supported basis.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (int n = 2; n <= 5; ++n)
        for (const auto& mode : mode_grid()) {
            if (jacobiator(structure_tensor(n, mode, BasisKind::LF)) != 0) pass = false;
            if (mode.has_f_basis() &&
                jacobiator(structure_tensor(n, mode, BasisKind::FBasis)) != 0)
                pass = false;
        }
    double dt = seconds_since(t0);
    std::ostringstream extra;
    extra << "runtime " << dt << " s, budget 60 s";
    report(1, "jacobi identity", pass && dt < 60.0, extra.str());
}

// 2. Abstract structure tensors equal the brute-force symplectic realization.
void criterion_2() {
    bool pass = true;
    for (int n = 2; n <= 5; ++n)
        for (const auto& mode : mode_grid()) {
            StructureTensor brute = structure_constants_bruteforce(n, mode);
            StructureTensor abstract = structure_tensor(n, mode, BasisKind::LF);
            for (int a = 0; a < brute.dim() && pass; ++a)
                for (int b = 0; b < brute.dim(); ++b)
                    if (brute.entry(a, b) != abstract.entry(a, b)) {
                        pass = false;
                        break;
                    }
        }
    report(2, "oracle equality", pass);
}

// 3. Regenerated commutation tables match the frozen N = 2, 3 reference tables.
void criterion_3() {
    int matched = 0, total = 0;
    auto check = [&](const CommTable& ours, const CommTable& expected) {
        ++total;
        if (ours.same_content(expected)) ++matched;
    };
    check(table_from_tensor(structure_tensor(2, AlgebraMode::plus(rat(1)), BasisKind::FBasis)),
          reference_tables::plus_f_n2());
    check(table_from_tensor(structure_tensor(3, AlgebraMode::plus(rat(1)), BasisKind::FBasis)),
          reference_tables::plus_f_n3());
    check(table_from_tensor(structure_tensor(2, AlgebraMode::minus(rat(1)), BasisKind::FBasis)),
          reference_tables::minus_f_n2());
    check(table_from_tensor(structure_tensor(3, AlgebraMode::minus(rat(1)), BasisKind::FBasis)),
          reference_tables::minus_f_n3());
    check(table_from_tensor(structure_tensor(2, AlgebraMode::zero(), BasisKind::LF)),
          reference_tables::zero_n2());
    check(table_from_tensor(structure_tensor(3, AlgebraMode::zero(), BasisKind::LF)),
          reference_tables::zero_n3());
    check(su_reference_table(2), reference_tables::su_n2());
    check(su_reference_table(3), reference_tables::su_n3());
    check(sl_reference_table(2), reference_tables::sl_n2());
    check(sl_reference_table(3), reference_tables::sl_n3());
    std::ostringstream extra;
    extra << matched << "/" << total << " tables entry-for-entry";
    report(3, "commutation tables N=2,3", matched == total, extra.str());
}

// 4. Killing forms: closed == brute force, determinants, plus spectrum,
//    plus-mode negative definiteness.
void criterion_4() {
    bool pass = true;
    for (int n = 2; n <= 5; ++n)
        for (const auto& mode :
             {AlgebraMode::plus(rat(1)), AlgebraMode::plus(rat(3, 2)), AlgebraMode::minus(rat(1)),
              AlgebraMode::minus(rat(2, 3))}) {
            QMat closed = killing_closedform(n, mode);
            QMat brute = killing_bruteforce(structure_tensor(n, mode, BasisKind::FBasis));
            for (int r = 0; r < closed.rows(); ++r)
                for (int c = 0; c < closed.cols(); ++c)
                    if (closed(r, c) != brute(r, c)) pass = false;
            if (killing_determinant(closed) != expected_determinant(n, mode)) pass = false;
        }
    for (int n = 2; n <= 5; ++n) {
        SpectrumReport rep = spectrum_verify(n, AlgebraMode::plus(rat(1)));
        if (!rep.matches_expected || !rep.multiplicities_cover_dimension) pass = false;
        Signature s = killing_signature(killing_closedform(n, AlgebraMode::plus(rat(1))));
        if (s.positive != 0 || s.zero != 0 || s.negative != n * n - 1) pass = false;
    }
    report(4, "killing closed forms, determinants, plus spectrum", pass);
}

// 5. Minus-mode eigenvalue values and measured multiplicities / signature.
void criterion_5() {
    bool pass = true;
    std::string note;
    for (int n = 2; n <= 5; ++n) {
        SpectrumReport rep = spectrum_verify(n, AlgebraMode::minus(rat(1)));
        if (!rep.multiplicities_cover_dimension || !rep.matches_expected) pass = false;
        if (!rep.note.empty() && note.empty()) note = rep.note;
        Signature s = killing_signature(
            killing_bruteforce(structure_tensor(n, AlgebraMode::minus(rat(1)), BasisKind::FBasis)));
        // restricted to the semisimple factor: drop the radical zero direction
        if (s.positive != n * (n + 1) / 2 - 1 || s.negative != n * (n - 1) / 2 || s.zero != 1)
            pass = false;
        if (n == 2 && !(s.positive == 2 && s.negative == 1)) pass = false;
    }
    report(5, "minus-mode spectrum and signature", pass,
           note.empty() ? "" : "flagged: " + note);
}

// 6. Explicit isomorphisms, exact over Q(i, sqrt2).
void criterion_6() {
    bool pass = true;
    for (int n = 2; n <= 5; ++n) {
        const Rational w = rat(1);
        HomReport su = verify_homomorphism(
            rep_su(n, w), structure_tensor(n, AlgebraMode::plus(w), BasisKind::FBasis));
        HomReport u = verify_homomorphism(rep_u(n, w),
                                          structure_tensor(n, AlgebraMode::plus(w), BasisKind::LF));
        HomReport sl = verify_homomorphism(
            rep_sl(n, w), structure_tensor(n, AlgebraMode::minus(w), BasisKind::FBasis));
        HomReport gl = verify_homomorphism(
            rep_gl(n, w), structure_tensor(n, AlgebraMode::minus(w), BasisKind::LF));
        HomReport ze = verify_homomorphism(
            rep_zero(n), structure_tensor(n, AlgebraMode::zero(), BasisKind::LF));
        if (!(su.pass() && u.pass() && sl.pass() && gl.pass() && ze.pass())) pass = false;
        if (rep_zero(n).dim != n * (n + 1) / 2 + 1) pass = false;
        for (const auto& m : rep_su(n, w).images)
            if (!is_antihermitian(m) || !is_traceless(m)) pass = false;
        for (const auto& m : rep_sl(n, w).images)
            if (!is_real_matrix(m) || !is_traceless(m)) pass = false;
    }
    if (!verify_zeta2(rep_zeta2()).pass()) pass = false;
    report(6, "explicit isomorphisms su/u/sl/gl/zero/zeta2", pass);
}

// 7. Invariance of the discrete tensor and angular momentum; symplectic
//    defect vanishes exactly iff b = a; L(1,2) breaks when a1 != a2.
void criterion_7() {
    RationalSampler sampler(74207281);
    bool pass = true;
    int draws_done = 0;
    for (int n = 2; n <= 4; ++n) {
        int done = 0;
        while (done < 20) {
            Rational h = abs_of(sampler.next_nonzero());
            Rational w = abs_of(sampler.next_nonzero());
            Rational a = sampler.next();
            DiscretizationParams P = DiscretizationParams::uniform(n, h, w, a);
            bool singular = false;
            for (int i = 1; i <= n; ++i)
                if (P.delta(i) == 0) singular = true;
            if (singular) continue;
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    if (!(pullback(invariant_F(P, i, j), P) == invariant_F(P, i, j)))
                        pass = false;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (!(pullback(invariant_L(n, i, j), P) == invariant_L(n, i, j)))
                        pass = false;
            for (const auto& d : symplectic_defect(P))
                if (d != 0) pass = false;
            ++done;
            ++draws_done;
        }
    }
    // defect necessity: perturb one b entry
    for (int trial = 0; trial < 40; ++trial) {
        DiscretizationParams P;
        P.n = 2;
        P.h = abs_of(sampler.next_nonzero());
        P.omega_t = abs_of(sampler.next_nonzero());
        P.a = sampler.vec(2);
        P.b = P.a;
        P.b[trial % 2] += sampler.next_nonzero();
        bool all_zero = true;
        for (const auto& d : symplectic_defect(P))
            if (d != 0) all_zero = false;
        if (all_zero) pass = false;
    }
    // L(1,2) invariance fails whenever a1 != a2
    for (int trial = 0; trial < 40; ++trial) {
        DiscretizationParams P;
        P.n = 2;
        P.h = abs_of(sampler.next_nonzero());
        P.omega_t = abs_of(sampler.next_nonzero());
        P.a = sampler.vec(2);
        if (P.a[0] == P.a[1]) P.a[1] += rat(1);
        P.b = P.a;
        if (P.delta(1) == 0 || P.delta(2) == 0) continue;
        if (pullback(invariant_L(2, 1, 2), P) == invariant_L(2, 1, 2)) pass = false;
    }
    std::ostringstream extra;
    extra << draws_done << " symplectic parameter draws, seed 74207281";
    report(7, "discrete invariance and symplecticity", pass, extra.str());
}

// 8. The kappa classifier matches the family constants in all three regimes.
void criterion_8() {
    bool pass = true;
    RationalSampler sampler(8191);
    int seen_plus = 0, seen_zero = 0, seen_minus = 0;
    // pinned representatives of each regime
    std::vector<DiscretizationParams> grid = {
        DiscretizationParams::uniform(2, rat(1), rat(1), rat(1, 2)),
        DiscretizationParams::uniform(3, rat(1), rat(1), rat(3, 2)),
        DiscretizationParams::uniform(2, rat(1), rat(1), rat(2)),
        DiscretizationParams::uniform(3, rat(1, 2), rat(2), rat(1, 3)),
    };
    while (grid.size() < 10) {
        Rational h = abs_of(sampler.next_nonzero());
        Rational w = abs_of(sampler.next_nonzero());
        Rational a = sampler.next();
        DiscretizationParams P = DiscretizationParams::uniform(2, h, w, a);
        if (P.delta(1) != 0) grid.push_back(P);
    }
    for (const auto& P : grid) {
        KappaRegime k = kappa(P);
        if (k.kappa > 0) ++seen_plus;
        if (k.kappa == 0) ++seen_zero;
        if (k.kappa < 0) ++seen_minus;
        if (!verify_symmetry_algebra(P.n, P).pass) pass = false;
        bool sign_ok = (k.tag == KappaRegime::Regime::PlusLike) == (k.kappa > 0) &&
                       (k.tag == KappaRegime::Regime::ZeroLike) == (k.kappa == 0);
        if (!sign_ok) pass = false;
    }
    if (seen_plus == 0 || seen_zero == 0 || seen_minus == 0) pass = false;
    // a = 1/2: kappa = w^2 and the discrete tensor is the continuous one
    DiscretizationParams half = DiscretizationParams::uniform(3, rat(1, 3), rat(5, 2), rat(1, 2));
    if (kappa(half).kappa != rat(25, 4)) pass = false;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
            if (!(invariant_F(half, i, j) == realize_F(3, i, j, rat(25, 4)))) pass = false;
    std::ostringstream extra;
    extra << "regimes sampled: " << seen_plus << " plus, " << seen_zero << " zero, "
          << seen_minus << " minus, seed 8191";
    report(8, "kappa classifier", pass, extra.str());
}

// 9. KHK, the RK family, and the a = b = 1/2 map agree on random states.
void criterion_9() {
    RationalSampler sampler(424243);
    bool pass = true;
    const Rational h = rat(1, 2), w = rat(3);
    DiscretizationParams P = DiscretizationParams::uniform(2, h, w, rat(1, 2));
    for (int trial = 0; trial < 100; ++trial) {
        PhaseState s;
        s.q = sampler.vec(2);
        s.p = sampler.vec(2);
        PhaseState direct = step(s, P);
        PhaseState k = khk_step(s, h, w);
        if (!(k.q == direct.q && k.p == direct.p)) pass = false;
        for (const Rational& lambda : {rat(0), rat(1, 4), rat(1)}) {
            PhaseState r = rk_step(s, h, w, lambda);
            if (!(r.q == direct.q && r.p == direct.p)) pass = false;
        }
    }
    report(9, "scheme collapse khk/rk/one-leg", pass, "100 states, seed 424243");
}

// 10. Second-difference recurrence holds exactly along 10^3-step orbits.
void criterion_10() {
    bool pass = true;
    std::vector<DiscretizationParams> grid = {
        DiscretizationParams::uniform(1, rat(1), rat(1), rat(1, 2)),
        DiscretizationParams::uniform(1, rat(1), rat(1), rat(3, 2)),
        DiscretizationParams::uniform(2, rat(1, 2), rat(2), rat(1, 3)),
        DiscretizationParams::uniform(1, rat(1), rat(0), rat(1, 4)),
    };
    PhaseState s1{{rat(1)}, {rat(2)}};
    PhaseState s2{{rat(1), rat(-1)}, {rat(2), rat(1, 3)}};
    for (const auto& P : grid) {
        const PhaseState& s0 = P.n == 1 ? s1 : s2;
        if (orbit_residual(P, s0, 1000) != 0) pass = false;
    }
    report(10, "orbit recurrence over 1000 steps", pass);
}

// 11. Nambu dynamics: exact Hamilton field, closed determinant, rank.
void criterion_11() {
    RationalSampler sampler(161803);
    bool pass = true;
    int points = 0;
    for (int n : {2, 3, 4}) {
        const Rational w = rat(2, 3);
        int done = 0;
        while (done < 34) {
            PhaseState s;
            s.q = sampler.vec(n);
            s.p = sampler.vec(n);
            if (angular_momentum_12(s) == 0) continue;
            auto [qdot, pdot] = nambu_rhs(s, n, w);
            for (int i = 0; i < n; ++i) {
                if (qdot[i] != s.p[i]) pass = false;
                if (pdot[i] != -w * w * s.q[i]) pass = false;
            }
            for (int i = 1; i <= n; ++i)
                if (detJ_dense(s, n, w, i - 1) != detJ_closed(s, n, w, i)) pass = false;
            ++done;
            ++points;
        }
        PhaseState special;
        special.q.assign(n, rat(0));
        special.p.assign(n, rat(0));
        special.q[1] = rat(1);
        special.p[0] = rat(1);
        if (jacobian_rank_S(special, n, rat(1)) != 2 * n - 1) pass = false;
    }
    std::ostringstream extra;
    extra << points << " nonsingular points, seed 161803";
    report(11, "nambu-hamiltonian structure", pass, extra.str());
}

// 12. Appendix matrix-family lemmas against dense oracles, N <= 8.
void criterion_12() {
    auto t0 = std::chrono::steady_clock::now();
    RationalSampler s(15485863);
    bool pass = true;
    auto randA = [&](int n) { return MatFamA{n, s.next(), s.next(), s.vec(n - 1)}; };
    auto randB = [&](int n) { return MatFamB{n, s.next(), s.next(), s.vec(n - 2)}; };
    auto lemma = [&](auto&& check) {
        for (int trial = 0; trial < 100; ++trial) {
            int n = 3 + trial % 6;  // 3..8
            if (!check(n)) pass = false;
        }
    };
    lemma([&](int n) {
        auto l = randA(n), r = randA(n);
        return matA_mul(l, r).realize() == l.realize() * r.realize();
    });
    lemma([&](int n) {
        auto l = randB(n), r = randB(n);
        return matB_mul(l, r).realize() == l.realize() * r.realize();
    });
    lemma([&](int n) {
        MatFamA m{n, s.next_nonzero(), s.next_nonzero(), s.vec(n - 1)};
        return matA_inv(m).realize() * m.realize() == QMat::identity(n);
    });
    lemma([&](int n) {
        auto l = randA(n);
        auto r = randB(n);
        return matAB(l, r).realize() == l.realize() * r.realize();
    });
    lemma([&](int n) {
        auto l = randB(n);
        auto r = randA(n);
        return matBA(l, r).realize() == l.realize() * r.realize();
    });
    lemma([&](int n) {
        int j = (int)s.next_int(1, n);
        auto m = randA(n);
        QMat e(n, n);
        e(0, j - 1) = rat(1);
        return e1i_mul_A(j, m).realize(n) == e * m.realize();
    });
    lemma([&](int n) {
        int i = (int)s.next_int(3, n);
        MatFamBreveB l{randB(n), i};
        MatFamA r{n, s.next(), s.next_nonzero(), s.vec(n - 1)};
        auto [scale, res] = breveB_mul_A(l, r);
        return scale * res.realize() == l.realize() * r.realize();
    });
    lemma([&](int n) {
        int i = (int)s.next_int(3, n);
        auto l = randB(n);
        MatFamBreveC r{MatFamC{n, s.next(), s.vec(n), s.vec(n)}, i};
        auto [scale, diff] = B_minus_breveC(l, r);
        return scale * diff.realize() == l.realize() - r.realize();
    });
    lemma([&](int n) {
        auto a = randA(n);
        auto b = randB(n);
        MatFamC c{n, s.next(), s.vec(n), s.vec(n)};
        MatFamBreveC bc{c, (int)s.next_int(3, n)};
        return det_A(a) == det(a.realize()) && det_B(b) == det(b.realize()) &&
               det_C(c) == det(c.realize()) && det_breveC(bc) == det(bc.realize());
    });
    lemma([&](int n) {
        int i = (int)s.next_int(3, n);
        Rational x = s.next_nonzero(), a = s.next_nonzero(), b = s.next_nonzero(), y = s.next();
        auto v = s.vec(n - 1), w = s.vec(n - 1);
        Rational z = s.next(), c = s.next(), t = s.next(), d = s.next();
        auto u = s.vec(n - 2), r = s.vec(n - 2);
        QMat dense = MatFamB{n, t, d, r}.realize() -
                     MatFamBreveB{MatFamB{n, z, c, u}, i}.realize() *
                         inverse(MatFamA{n, x, a, v}.realize()) * MatFamA{n, y, b, w}.realize();
        return final_det(n, i, x, a, v, y, b, w, z, c, u, t, d, r) == det(dense);
    });
    double dt = seconds_since(t0);
    std::ostringstream extra;
    extra << "10 lemmas x 100 draws, seed 15485863, runtime " << dt << " s, budget 120 s";
    report(12, "matrix-family lemmas", pass && dt < 120.0, extra.str());
}

// 13. Discrete gradients: midpoint exactness and the discrete map as a
//     discrete-gradient system at a = 1/2.
void criterion_13() {
    RationalSampler sampler(28657);
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 3;
        QuadraticObservable o(n);
        for (int a = 0; a < 2 * n; ++a)
            for (int b = a; b < 2 * n; ++b) o.add_monomial(a, b, sampler.next());
        auto f = PhaseFunction::quadratic(o);
        if (dg_identity_residual(f, sampler.vec(2 * n), sampler.vec(2 * n),
                                 DGScheme::midpoint()) != 0)
            pass = false;
    }
    for (int n : {2, 3}) {
        DiscretizationParams P = DiscretizationParams::uniform(n, rat(1), rat(1), rat(1, 2));
        int done = 0;
        while (done < 20) {
            PhaseState s;
            s.q = sampler.vec(n);
            s.p = sampler.vec(n);
            try {
                for (const auto& r : discrete_nambu_residual(P, s))
                    if (r != 0) pass = false;
                ++done;
            } catch (const DegenerateAngularMomentum&) {
                continue;
            }
        }
    }
    report(13, "discrete gradients and discrete-nambu form", pass, "seed 28657");
}

// 14. The enveloping-algebra derivation matches the zero-mode constants.
void criterion_14() {
    bool pass = true;
    for (int n = 2; n <= 5; ++n)
        if (!enveloping_check(n)) pass = false;
    report(14, "enveloping-algebra consistency", pass);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
