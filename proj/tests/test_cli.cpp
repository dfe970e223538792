#include <catch2/catch_amalgamated.hpp>

#include "oscsym/cli.hpp"
#include "reference_tables.hpp"

using namespace oscsym;
using cli::RunConfig;

namespace {

std::string run(int (*cmd)(const RunConfig&, std::ostream&), const RunConfig& cfg,
                int expect_code = 0) {
    std::ostringstream os;
    int code = cmd(cfg, os);
    CHECK(code == expect_code);
    return os.str();
}

}  // namespace

TEST_CASE("algebra table reproduces the N=2 compact-case table") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.mode = "plus";
    cfg.omega = "1";
    cfg.basis = "f";
    std::string out = run(cli::cmd_algebra_table, cfg);
    CHECK(out.find("-4*f(2,1)") != std::string::npos);
    CHECK(out.find("-2*f(1,1)") != std::string::npos);
}

TEST_CASE("algebra jacobi reports zero violation") {
    RunConfig cfg;
    cfg.n = 4;
    cfg.mode = "minus";
    cfg.omega = "2/3";
    std::string out = run(cli::cmd_algebra_jacobi, cfg);
    CHECK(out == "max violation: 0\n");
}

TEST_CASE("algebra constants json emits the symmetrized zero-mode tensor") {
    RunConfig cfg;
    cfg.n = 3;
    cfg.mode = "zero";
    cfg.basis = "lf";
    cfg.format = "json";
    auto j = nlohmann::json::parse(run(cli::cmd_algebra_constants, cfg));
    CHECK(j["mode"] == "zero");
    bool found = false;
    for (const auto& e : j["constants"])
        if (e["a"] == "L(1,2)" && e["b"] == "F(1,1)") {
            CHECK(e["coeffs"]["F(1,2)"] == "2");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("killing commands emit pass lines and exit codes") {
    RunConfig cfg;
    cfg.n = 3;
    cfg.mode = "plus";
    cfg.omega = "1";
    std::ostringstream os;
    CHECK(cli::cmd_killing("spectrum", cfg, os) == 0);
    CHECK(os.str().find("-72") != std::string::npos);
    CHECK(os.str().find("x7") != std::string::npos);

    std::ostringstream os2;
    CHECK(cli::cmd_killing("det", cfg, os2) == 0);
    std::ostringstream os3;
    CHECK(cli::cmd_killing("signature", cfg, os3) == 0);
    std::ostringstream os4;
    CHECK(cli::cmd_killing("levi", cfg, os4) == 0);

    cfg.mode = "minus";
    cfg.format = "json";
    std::ostringstream os5;
    CHECK(cli::cmd_killing("signature", cfg, os5) == 0);
    auto j = nlohmann::json::parse(os5.str());
    CHECK(j["signature"]["positive"] == 5);
    CHECK(j["signature"]["negative"] == 3);
    CHECK(j.contains("note"));  // the multiplicity-grouping discrepancy is flagged
}

TEST_CASE("iso verify and matrix dumps") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.target = "zero";
    cfg.format = "json";
    std::ostringstream os;
    CHECK(cli::cmd_iso("matrix", cfg, os) == 0);
    auto j = nlohmann::json::parse(os.str());
    // the reference 4x4 matrix of L(1,2): rows of rational 4-tuples
    auto l12 = j["images"]["L(1,2)"];
    CHECK(l12[0][2][0] == "-1");
    CHECK(l12[2][0][0] == "2");
    CHECK(l12[2][1][0] == "-2");
    CHECK(l12[1][2][0] == "1");

    std::ostringstream os2;
    cfg.target = "su";
    cfg.n = 4;
    CHECK(cli::cmd_iso("verify", cfg, os2) == 0);

    std::ostringstream os3;
    cfg.target = "zeta2";
    CHECK(cli::cmd_iso("verify", cfg, os3) == 0);

    cfg.target = "nope";
    std::ostringstream os4;
    CHECK_THROWS_AS(cli::cmd_iso("verify", cfg, os4), std::invalid_argument);
}

TEST_CASE("sim run emits an exact CSV trajectory with conserved columns") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.h = "1";
    cfg.omega_t = "1";
    cfg.a = {"1/2"};
    cfg.steps = 3;
    cfg.state = {"1", "2", "3", "5"};
    cfg.format = "csv";
    std::string out = run(cli::cmd_sim_run, cfg);
    std::istringstream ss(out);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "t,q1,q2,p1,p2,F11,F22,F12,L12");
    std::string row0, row1;
    std::getline(ss, row0);
    std::getline(ss, row1);
    // invariant columns must repeat exactly
    auto cols = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream cs(s);
        std::string c;
        while (std::getline(cs, c, ',')) out.push_back(c);
        return out;
    };
    auto c0 = cols(row0), c1 = cols(row1);
    REQUIRE(c0.size() == 9);
    for (int k = 5; k < 9; ++k) CHECK(c0[k] == c1[k]);
    CHECK(c0[5] == "10");  // F11 = p1^2 + q1^2
}

TEST_CASE("decimal rendering is flag-controlled") {
    RunConfig cfg;
    cfg.n = 1;
    cfg.h = "1/3";
    cfg.omega_t = "1";
    cfg.a = {"1/2"};
    cfg.steps = 1;
    cfg.state = {"1", "0"};
    cfg.format = "csv";
    std::string exact = run(cli::cmd_sim_run, cfg);
    CHECK(exact.find("/") != std::string::npos);  // num/den strings by default
    cfg.decimal_digits = 6;
    std::string dec = run(cli::cmd_sim_run, cfg);
    CHECK(dec.find("/") == std::string::npos);
    CHECK(dec.find("0.333333") != std::string::npos);
}

TEST_CASE("sim invariants reports exact zero drift for b = a") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.h = "1";
    cfg.omega_t = "2";
    cfg.a = {"1/3"};
    cfg.steps = 50;
    cfg.state = {"1", "2", "3", "5"};
    std::string out = run(cli::cmd_sim_invariants, cfg);
    CHECK(out.find("all invariants exactly conserved") != std::string::npos);

    // mixed weights break conservation
    RunConfig bad = cfg;
    bad.a = {"1", "0"};
    std::ostringstream os;
    CHECK(cli::cmd_sim_invariants(bad, os) == 1);
    CHECK(os.str().find("nonzero drift present") != std::string::npos);
}

TEST_CASE("sim classify labels the regimes") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.h = "1";
    cfg.omega_t = "1";
    cfg.a = {"3/2"};
    std::string out = run(cli::cmd_sim_classify, cfg);
    CHECK(out.find("kappa = 0, regime = zero") != std::string::npos);
    CHECK(out.find("PASS") != std::string::npos);

    cfg.a = {"2"};
    std::string out2 = run(cli::cmd_sim_classify, cfg);
    CHECK(out2.find("kappa = -5/4, regime = minus") != std::string::npos);

    cfg.a = {"1/2"};
    cfg.format = "json";
    auto j = nlohmann::json::parse(run(cli::cmd_sim_classify, cfg));
    CHECK(j["kappa"] == "1");
    CHECK(j["regime"] == "plus");
    CHECK(j["symmetry_algebra_verified"] == true);
}

TEST_CASE("nambu check passes and is seed-deterministic") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.omega_t = "1";
    cfg.draws = 10;
    cfg.seed = 99;
    cfg.format = "json";
    std::string a = run(cli::cmd_nambu_check, cfg);
    std::string b = run(cli::cmd_nambu_check, cfg);
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == 99);
    CHECK(j["pass"] == true);
}

TEST_CASE("nambu check rejects a singular explicit state") {
    RunConfig cfg;
    cfg.n = 2;
    cfg.omega_t = "1";
    cfg.draws = 1;
    cfg.state = {"1", "0", "1", "0"};  // L12 = 0
    std::ostringstream os;
    CHECK_THROWS_AS(cli::cmd_nambu_check(cfg, os), DegenerateAngularMomentum);
}

TEST_CASE("nambu matfam batch passes per lemma") {
    RunConfig cfg;
    cfg.n = 6;
    cfg.draws = 25;
    cfg.format = "json";
    auto j = nlohmann::json::parse(run(cli::cmd_nambu_matfam, cfg));
    CHECK(j["pass"] == true);
    CHECK(j["results"].size() == 10);
    for (const auto& r : j["results"]) CHECK(r["passed"] == 25);
}

TEST_CASE("table printing round trips through labels") {
    StructureTensor t = structure_tensor(2, AlgebraMode::plus(rat(1)), BasisKind::FBasis);
    CommTable ours = table_from_tensor(t);
    CHECK(ours.same_content(reference_tables::plus_f_n2()));
}
