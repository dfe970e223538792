#include <CLI11.hpp>

#include <iostream>

#include "oscsym/cli.hpp"

namespace {

void add_common(CLI::App* cmd, oscsym::cli::RunConfig& cfg) {
    cmd->set_help_flag("--help", "print help");
    cmd->set_config("--config", "", "read options from a key=value file");
    cmd->add_option("--n", cfg.n, "degrees of freedom N")->check(CLI::Range(1, 16));
    cmd->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", cfg.seed, "sampler seed (echoed in output)");
    cmd->add_option("--decimal", cfg.decimal_digits,
                    "render rationals as decimals with this many digits");
}

void add_mode(CLI::App* cmd, oscsym::cli::RunConfig& cfg) {
    cmd->add_option("--mode", cfg.mode, "plus | minus | zero")
        ->check(CLI::IsMember({"plus", "minus", "zero"}));
    cmd->add_option("--omega", cfg.omega, "omega as a rational, e.g. 3/2");
}

void add_sim(CLI::App* cmd, oscsym::cli::RunConfig& cfg) {
    cmd->add_option("--h", cfg.h, "step size (rational)");
    cmd->add_option("--omega-t", cfg.omega_t, "oscillator frequency (rational)");
    cmd->add_option("--a", cfg.a, "weight a (one value or N values)");
    cmd->add_option("--b", cfg.b, "weight b (defaults to a)");
    cmd->add_option("--steps", cfg.steps, "number of steps");
    cmd->add_option("--state", cfg.state, "initial state q1..qN p1..pN (rationals)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact oscillator symmetry algebras: verification and simulation"};
    app.require_subcommand(1);
    oscsym::cli::RunConfig cfg;

    auto* algebra = app.add_subcommand("algebra", "commutation tables and Jacobi checks");
    algebra->require_subcommand(1);
    for (const char* sub : {"table", "jacobi", "constants"}) {
        auto* c = algebra->add_subcommand(sub);
        add_common(c, cfg);
        add_mode(c, cfg);
        c->add_option("--basis", cfg.basis, "f | lf")->check(CLI::IsMember({"f", "lf"}));
    }

    auto* killing = app.add_subcommand("killing", "Killing form reports");
    killing->require_subcommand(1);
    for (const char* sub : {"spectrum", "det", "signature", "levi"}) {
        auto* c = killing->add_subcommand(sub);
        add_common(c, cfg);
        add_mode(c, cfg);
    }

    auto* iso = app.add_subcommand("iso", "explicit isomorphism verification");
    iso->require_subcommand(1);
    for (const char* sub : {"verify", "matrix"}) {
        auto* c = iso->add_subcommand(sub);
        add_common(c, cfg);
        c->add_option("--omega", cfg.omega, "omega as a rational");
        c->add_option("--target", cfg.target, "su | u | sl | gl | zero | zeta2")
            ->check(CLI::IsMember({"su", "u", "sl", "gl", "zero", "zeta2"}));
    }

    auto* sim = app.add_subcommand("sim", "discretization trajectories and classification");
    sim->require_subcommand(1);
    for (const char* sub : {"run", "invariants", "classify"}) {
        auto* c = sim->add_subcommand(sub);
        add_common(c, cfg);
        add_sim(c, cfg);
    }

    auto* nambu = app.add_subcommand("nambu", "Nambu structure and matrix-family checks");
    nambu->require_subcommand(1);
    for (const char* sub : {"check", "matfam"}) {
        auto* c = nambu->add_subcommand(sub);
        add_common(c, cfg);
        c->add_option("--omega-t", cfg.omega_t, "oscillator frequency (rational)");
        c->add_option("--draws", cfg.draws, "verification batch size");
        c->add_option("--state", cfg.state, "explicit phase-space point");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace oscsym::cli;
        if (algebra->parsed()) {
            if (algebra->get_subcommand("table")->parsed())
                return cmd_algebra_table(cfg, std::cout);
            if (algebra->get_subcommand("jacobi")->parsed())
                return cmd_algebra_jacobi(cfg, std::cout);
            return cmd_algebra_constants(cfg, std::cout);
        }
        if (killing->parsed()) {
            for (const char* sub : {"spectrum", "det", "signature", "levi"})
                if (killing->get_subcommand(sub)->parsed())
                    return cmd_killing(sub, cfg, std::cout);
        }
        if (iso->parsed()) {
            const char* what = iso->get_subcommand("verify")->parsed() ? "verify" : "matrix";
            return cmd_iso(what, cfg, std::cout);
        }
        if (sim->parsed()) {
            if (sim->get_subcommand("run")->parsed()) return cmd_sim_run(cfg, std::cout);
            if (sim->get_subcommand("invariants")->parsed())
                return cmd_sim_invariants(cfg, std::cout);
            return cmd_sim_classify(cfg, std::cout);
        }
        if (nambu->parsed()) {
            if (nambu->get_subcommand("check")->parsed()) return cmd_nambu_check(cfg, std::cout);
            return cmd_nambu_matfam(cfg, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
