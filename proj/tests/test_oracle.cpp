#include <catch2/catch_amalgamated.hpp>

#include "oscsym/oracle/realize.hpp"
#include "oscsym/sampler.hpp"

using namespace oscsym;

namespace {

QuadraticObservable random_quadratic(int n, RationalSampler& sampler) {
    QuadraticObservable o(n);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = a; b < 2 * n; ++b) o.add_monomial(a, b, sampler.next());
    return o;
}

}  // namespace

TEST_CASE("canonical symplectic matrix identities") {
    for (int n : {1, 2, 4}) {
        QMat j = canonical_symplectic_matrix(n);
        CHECK(j.transpose() == -j);
        CHECK(j * j == -QMat::identity(2 * n));
    }
}

TEST_CASE("poisson bracket of q^2 and p^2 is 4qp") {
    QuadraticObservable f(1), g(1);
    f.add_monomial(0, 0, rat(1));  // q^2
    g.add_monomial(1, 1, rat(1));  // p^2
    QuadraticObservable br = poisson_bracket(f, g);
    QMat want(2, 2);
    want(0, 1) = rat(2);
    want(1, 0) = rat(2);
    CHECK(br.matrix() == want);
    CHECK(br.value({rat(3), rat(5)}) == rat(60));  // 4qp at q=3,p=5
}

TEST_CASE("bracket of F11 with L12 at alpha 0 gives -2 F12") {
    const int n = 3;
    AlgebraMode mode = AlgebraMode::zero();
    auto f11 = realize_F(n, 1, 1, mode.alpha());
    auto l12 = realize_L(n, 1, 2);
    auto f12 = realize_F(n, 1, 2, mode.alpha());
    CHECK(poisson_bracket(f11, l12) == rat(-2) * f12);
}

TEST_CASE("diagonal F components commute in any mode") {
    for (int n : {2, 4}) {
        for (Rational alpha : {rat(1), rat(-1), rat(0), rat(9, 4)}) {
            auto f11 = realize_F(n, 1, 1, alpha);
            auto f22 = realize_F(n, 2, 2, alpha);
            CHECK(poisson_bracket(f11, f22).matrix().is_zero());
        }
    }
}

TEST_CASE("realized generator matrices") {
    auto l12 = realize_L(2, 1, 2);
    // q1 p2 - q2 p1 over (q1,q2,p1,p2)
    CHECK(l12.matrix()(0, 3) == rat(1, 2));
    CHECK(l12.matrix()(3, 0) == rat(1, 2));
    CHECK(l12.matrix()(1, 2) == rat(-1, 2));
    CHECK(l12.matrix()(2, 1) == rat(-1, 2));

    auto f11 = realize_F(2, 1, 1, AlgebraMode::plus(rat(1)).alpha());
    CHECK(f11.value({rat(1), rat(0), rat(0), rat(0)}) == rat(1));  // q1^2 coefficient
    CHECK(f11.value({rat(0), rat(0), rat(1), rat(0)}) == rat(1));  // p1^2 coefficient

    auto f12 = realize_F(2, 1, 2, AlgebraMode::zero().alpha());
    CHECK(f12.value({rat(0), rat(0), rat(1), rat(1)}) == rat(1));  // p1 p2 only
    CHECK(f12.value({rat(1), rat(1), rat(0), rat(0)}) == rat(0));

    CHECK_THROWS_AS(realize_L(2, 1, 3), std::out_of_range);
}

TEST_CASE("antisymmetry of the bracket on random quadratics") {
    RationalSampler sampler(101);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 3;
        auto f = random_quadratic(n, sampler);
        auto g = random_quadratic(n, sampler);
        CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
    }
}

TEST_CASE("jacobi identity on random quadratic triples, seed 2025") {
    RationalSampler sampler(2025);
    INFO("seed 2025, 100 draws");
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 3;
        auto f = random_quadratic(n, sampler);
        auto g = random_quadratic(n, sampler);
        auto h = random_quadratic(n, sampler);
        QuadraticObservable sum = poisson_bracket(poisson_bracket(f, g), h) +
                                  poisson_bracket(poisson_bracket(g, h), f) +
                                  poisson_bracket(poisson_bracket(h, f), g);
        if (!sum.matrix().is_zero()) FAIL("jacobi violated at trial " << trial);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("express_in_basis round trips and detects out-of-span input") {
    const int n = 2;
    AlgebraMode mode = AlgebraMode::plus(rat(1));

    // p1^2 + q1^2 = F(1,1)
    auto obs = realize_F(n, 1, 1, mode.alpha());
    AlgebraElement e = express_in_basis(obs, n, mode);
    AlgebraElement want(n, mode, BasisKind::LF);
    want.add_F(1, 1, rat(1));
    CHECK(e == want);

    // q1^2 alone is not in the span when alpha != 0
    QuadraticObservable q1sq(n);
    q1sq.add_monomial(0, 0, rat(1));
    CHECK_THROWS_AS(express_in_basis(q1sq, n, mode), NotInSpan);

    // linearity: 3 L(1,2) - F(2,2)
    auto combo = rat(3) * realize_L(n, 1, 2) + rat(-1) * realize_F(n, 2, 2, mode.alpha());
    AlgebraElement got = express_in_basis(combo, n, mode);
    AlgebraElement expect(n, mode, BasisKind::LF);
    expect.add_L(1, 2, rat(3));
    expect.add_F(2, 2, rat(-1));
    CHECK(got == expect);
}

TEST_CASE("brute-force constants: f-pair relation at n=2") {
    AlgebraMode mode = AlgebraMode::plus(rat(1));
    StructureTensor t = structure_constants_bruteforce(2, mode);
    // [L(1,2), F(1,1)] = +2 F(1,2)
    int a = t.index_of(canonical_L(1, 2).first);
    int b = t.index_of(GeneratorIndex::F(1, 1));
    int target = t.index_of(GeneratorIndex::F(1, 2));
    StructureTensor::Row want{{target, rat(2)}};
    CHECK(t.entry(a, b) == want);
}

TEST_CASE("brute-force constants: minus mode FF relation") {
    AlgebraMode mode = AlgebraMode::minus(rat(1));
    StructureTensor t = structure_constants_bruteforce(2, mode);
    int a = t.index_of(GeneratorIndex::F(1, 1));
    int b = t.index_of(GeneratorIndex::F(1, 2));
    int target = t.index_of(canonical_L(1, 2).first);
    StructureTensor::Row want{{target, rat(-2)}};
    CHECK(t.entry(a, b) == want);
}

TEST_CASE("oracle equality with the abstract constants") {
    for (int n : {2, 3, 4, 5}) {
        for (const auto& mode : {AlgebraMode::plus(rat(1)), AlgebraMode::plus(rat(3, 2)),
                                 AlgebraMode::minus(rat(1)), AlgebraMode::zero()}) {
            StructureTensor brute = structure_constants_bruteforce(n, mode);
            StructureTensor abstract = structure_tensor(n, mode, BasisKind::LF);
            REQUIRE(brute.dim() == abstract.dim());
            for (int a = 0; a < brute.dim(); ++a)
                for (int b = 0; b < brute.dim(); ++b)
                    if (brute.entry(a, b) != abstract.entry(a, b))
                        FAIL("mismatch at n=" << n << " pair " << a << "," << b);
        }
    }
    SUCCEED("all grids match");
}
