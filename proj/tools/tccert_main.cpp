#include "tccert/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"tccert — topological complexity certification engine"};
    app.require_subcommand(1);

    std::string space_path, out_path;
    std::uint64_t characteristic = 0;
    int depth = -1;
    int max_prism_k = 4;
    int inject_fault = -1;

    auto add_space_opts = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_path, "space document (JSON)")->required();
        cmd->add_option("--char", characteristic,
                        "field characteristic override (0 = rationals)");
    };

    auto* coh = app.add_subcommand("cohomology", "Betti profile of a space");
    add_space_opts(coh);

    auto* ring = app.add_subcommand("ring", "cohomology ring structure constants");
    add_space_opts(ring);

    auto* cert = app.add_subcommand("certify", "produce a TC bound certificate");
    add_space_opts(cert);
    cert->add_option("--out", out_path, "certificate output file (default: stdout)");
    cert->add_option("--depth", depth, "product search depth cap (default: 2*dim)");

    auto* core = app.add_subcommand("verify-core", "chain-level identity checks");
    core->add_option("--max-prism-k", max_prism_k, "largest prism dimension checked");
    core->add_option("--inject-sign-fault", inject_fault,
                     "test mode: flip the sign of one torus-cycle term (0-3)")
        ->check(CLI::Range(0, 3));

    CLI11_PARSE(app, argc, argv);

    bool char_given = coh->count("--char") || ring->count("--char") || cert->count("--char");
    std::optional<std::uint64_t> ch =
        char_given ? std::optional<std::uint64_t>(characteristic) : std::nullopt;

    if (coh->parsed()) return tccert::cmd_cohomology(space_path, ch, std::cout);
    if (ring->parsed()) return tccert::cmd_ring(space_path, ch, std::cout);
    if (cert->parsed())
        return tccert::cmd_certify(space_path, ch, out_path, depth, std::cout);
    return tccert::cmd_verify_core(max_prism_k, inject_fault, std::cout);
}
