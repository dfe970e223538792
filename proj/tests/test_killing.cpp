#include <catch2/catch_amalgamated.hpp>

#include "oscsym/killing/killing.hpp"

using namespace oscsym;

TEST_CASE("brute-force Killing entries at n=2 plus") {
    AlgebraMode mode = AlgebraMode::plus(rat(1));
    QMat k = killing_bruteforce(structure_tensor(2, mode, BasisKind::FBasis));
    StructureTensor t = structure_tensor(2, mode, BasisKind::FBasis);
    int i11 = t.index_of(GeneratorIndex::f(1, 1));
    int i12 = t.index_of(GeneratorIndex::f(1, 2));
    CHECK(k(i11, i11) == rat(-32));  // -8 N w^2 (delta + 1) at N=2, i=j
    CHECK(k(i12, i12) == rat(-16));  // -8 N w^2
    // central direction is in the Killing radical
    int ir = t.index_of(GeneratorIndex::R());
    for (int c = 0; c < k.cols(); ++c) CHECK(k(ir, c) == 0);
}

TEST_CASE("zero-mode Killing form annihilates the abelian ideal") {
    StructureTensor t = structure_tensor(3, AlgebraMode::zero(), BasisKind::LF);
    QMat k = killing_bruteforce(t);
    for (int a = 0; a < t.dim(); ++a) {
        if (t.elements()[a].kind != GeneratorIndex::Kind::F) continue;
        for (int b = 0; b < t.dim(); ++b) {
            CHECK(k(a, b) == 0);
            CHECK(k(b, a) == 0);
        }
    }
}

TEST_CASE("closed-form Killing matrix at n=2") {
    QMat kp = killing_closedform(2, AlgebraMode::plus(rat(1)));
    QMat want(3, 3);
    want(0, 0) = rat(-32);
    want(1, 1) = rat(-16);
    want(2, 2) = rat(-16);
    CHECK(kp == want);

    QMat km = killing_closedform(2, AlgebraMode::minus(rat(1)));
    QMat wantm(3, 3);
    wantm(0, 0) = rat(32);
    wantm(1, 2) = rat(16);
    wantm(2, 1) = rat(16);
    CHECK(km == wantm);

    CHECK_THROWS_AS(killing_closedform(2, AlgebraMode::zero()), ZeroModeUnsupported);
}

TEST_CASE("closed form equals brute force on the semisimple factor") {
    for (int n : {2, 3, 4, 5}) {
        for (const auto& mode : {AlgebraMode::plus(rat(1)), AlgebraMode::plus(rat(3, 2)),
                                 AlgebraMode::minus(rat(1)), AlgebraMode::minus(rat(2, 3))}) {
            QMat brute = killing_bruteforce(structure_tensor(n, mode, BasisKind::FBasis));
            QMat closed = killing_closedform(n, mode);
            const int d = closed.rows();  // radical row is last in the f ordering
            bool ok = true;
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    if (brute(r, c) != closed(r, c)) ok = false;
            if (!ok) FAIL("mismatch at n=" << n << " mode " << mode.str());
        }
    }
    SUCCEED();
}

TEST_CASE("killing determinants match the closed-form values") {
    CHECK(killing_determinant(killing_closedform(2, AlgebraMode::plus(rat(1)))) == rat(-8192));
    for (int n : {2, 3, 4, 5}) {
        for (const auto& mode : {AlgebraMode::plus(rat(1)), AlgebraMode::plus(rat(3, 2)),
                                 AlgebraMode::minus(rat(1)), AlgebraMode::minus(rat(5, 2))}) {
            CHECK(killing_determinant(killing_closedform(n, mode)) ==
                  expected_determinant(n, mode));
        }
    }
}

TEST_CASE("kappa_hat determinant equals N") {
    for (int n = 2; n <= 8; ++n) CHECK(det(kappa_hat(n)) == rat(n));
}

TEST_CASE("plus-mode spectrum by exact rank") {
    SpectrumReport rep = spectrum_verify(3, AlgebraMode::plus(rat(1)));
    REQUIRE(rep.found.size() == 2);
    CHECK(rep.found[0].lambda == rat(-72));
    CHECK(rep.found[0].multiplicity == 1);
    CHECK(rep.found[1].lambda == rat(-24));
    CHECK(rep.found[1].multiplicity == 7);
    CHECK(rep.matches_expected);
    CHECK(rep.multiplicities_cover_dimension);

    for (int n : {2, 4, 5}) {
        SpectrumReport r = spectrum_verify(n, AlgebraMode::plus(rat(3, 2)));
        CHECK(r.matches_expected);
        CHECK(r.multiplicities_cover_dimension);
    }
}

TEST_CASE("minus-mode spectrum values confirmed, multiplicities as measured") {
    SpectrumReport rep = spectrum_verify(2, AlgebraMode::minus(rat(1)));
    REQUIRE(rep.found.size() == 3);
    CHECK(rep.found[0].lambda == rat(32));
    CHECK(rep.found[0].multiplicity == 1);
    CHECK(rep.found[1].lambda == rat(16));
    CHECK(rep.found[1].multiplicity == 1);
    CHECK(rep.found[2].lambda == rat(-16));
    CHECK(rep.found[2].multiplicity == 1);
    CHECK(rep.multiplicities_cover_dimension);
    CHECK(rep.matches_expected);
    CHECK_FALSE(rep.note.empty());  // stated grouping disagrees at N=2

    for (int n : {3, 4, 5}) {
        SpectrumReport r = spectrum_verify(n, AlgebraMode::minus(rat(2)));
        CHECK(r.multiplicities_cover_dimension);
        CHECK(r.matches_expected);
    }
}

TEST_CASE("wrong eigenvalue probe has multiplicity zero") {
    QMat k = killing_closedform(3, AlgebraMode::plus(rat(1)));
    CHECK(eigen_multiplicity(k, rat(-23)) == 0);
    CHECK(eigen_multiplicity(k, rat(5)) == 0);
}

TEST_CASE("signatures") {
    // plus mode is negative definite
    for (int n : {2, 3, 4}) {
        Signature s = killing_signature(killing_closedform(n, AlgebraMode::plus(rat(1))));
        CHECK(s.positive == 0);
        CHECK(s.zero == 0);
        CHECK(s.negative == n * n - 1);
    }
    // minus mode at N=2 matches the split real form of rank one
    Signature sm = killing_signature(killing_closedform(2, AlgebraMode::minus(rat(1))));
    CHECK(sm.positive == 2);
    CHECK(sm.negative == 1);
    CHECK(sm.zero == 0);
    for (int n : {3, 4, 5}) {
        Signature s = killing_signature(killing_closedform(n, AlgebraMode::minus(rat(1))));
        CHECK(s.positive == n * (n + 1) / 2 - 1);
        CHECK(s.negative == n * (n - 1) / 2);
        CHECK(s.zero == 0);
    }
    // zero mode: the abelian radical fills the kernel
    Signature sz =
        killing_signature(killing_bruteforce(structure_tensor(3, AlgebraMode::zero(), BasisKind::LF)));
    CHECK(sz.zero == 6);
}

TEST_CASE("signature invariance under basis change") {
    for (int n : {2, 3}) {
        for (const auto& mode : {AlgebraMode::plus(rat(1)), AlgebraMode::minus(rat(3, 2))}) {
            Signature lf =
                killing_signature(killing_bruteforce(structure_tensor(n, mode, BasisKind::LF)));
            Signature fb = killing_signature(
                killing_bruteforce(structure_tensor(n, mode, BasisKind::FBasis)));
            CHECK(lf.positive == fb.positive);
            CHECK(lf.negative == fb.negative);
            CHECK(lf.zero == fb.zero);
        }
    }
}

TEST_CASE("levi decomposition verification") {
    for (int n : {2, 3, 4}) {
        for (const auto& mode : {AlgebraMode::plus(rat(1)), AlgebraMode::minus(rat(1))}) {
            LeviReport rep = levi_verify(n, mode);
            CHECK(rep.pass());
            CHECK(rep.semisimple_dim == n * n - 1);
            CHECK(rep.radical_dim == 1);
        }
    }
    LeviReport z3 = levi_verify(3, AlgebraMode::zero());
    CHECK(z3.pass());
    CHECK(z3.semisimple_dim == 3);
    CHECK(z3.radical_dim == 6);
}
