#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "langdual/cli.hpp"

using namespace langdual;

namespace {

struct RawOptions {
    std::string coweight, lhs, rhs, weights, values, places;
    std::string sqrt_sign = "+";
    double s = 0;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, RunConfig& cfg,
                      bool datum_required = true)
{
    CLI::App* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("datum", cfg.datum, "builtin name (SL2, PGL2, GL2, GL3, SL3, PGL3, Sp4, SO5), "
                                                    "'trivial', or a JSON datum file");
    if (datum_required) opt->required();
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
}

void add_parameter_options(CLI::App* sub, RunConfig& cfg, RawOptions& raw)
{
    sub->add_option("--q", cfg.q, "residue field size, a rational > 1");
    sub->add_option("--values", raw.values, "parameter values on the basis of Y, comma separated rationals");
    sub->add_option("--delta-value", cfg.delta_value, "explicit value at delta; must equal q");
    sub->add_option("--weights", raw.weights, "weights on Y~ separated by ';', e.g. \"1,1;-1,0\"");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Root data, Langlands dual data, Satake images and R-factors"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    RawOptions raw;
    cfg.caps = caps_from_environment();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--weyl-cap", cfg.caps.weyl_order, "largest Weyl group to enumerate");
    app.add_option("--height-cap", cfg.caps.coweight_height, "largest coweight height accepted");
    app.add_option("--tree-depth-cap", cfg.caps.tree_depth, "deepest tree built by the oracle");

    add_command(app, "dual", "dual root datum", cfg);
    add_command(app, "roots", "positive roots and coroots", cfg);
    add_command(app, "weyl", "Weyl group order and longest element", cfg);
    add_command(app, "rho", "weights r with <r, coroot> = 1 for all simple coroots", cfg);
    add_command(app, "extend", "extended datum, with matching builtins", cfg);
    add_command(app, "epsilon", "order of the enhancement and the sum of positive roots", cfg);
    add_command(app, "dualdata", "r, t, j, i, p and the quotient decomposition", cfg);

    auto* satake = add_command(app, "satake", "Satake image of a dominant coweight", cfg);
    satake->add_option("--coweight", raw.coweight, "dominant coweight, e.g. 1,0")->required();

    auto* mult = add_command(app, "mult", "structure polynomials of e_lhs * e_rhs", cfg);
    mult->add_option("--lhs", raw.lhs, "dominant coweight")->required();
    mult->add_option("--rhs", raw.rhs, "dominant coweight")->required();

    auto* oracle = add_command(app, "oracle", "compare PGL2 structure polynomials with tree counts", cfg, false);
    oracle->add_option("--q", cfg.oracle_q, "tree valence minus one");
    oracle->add_option("--max-height", cfg.max_height, "largest m + n compared");

    auto* rfactor = add_command(app, "rfactor", "local R-factor of a parameter and representation", cfg);
    add_parameter_options(rfactor, cfg, raw);
    rfactor->add_option("--s", raw.s, "evaluate at this real s");

    auto* euler = add_command(app, "euler", "partial Euler product over unramified places", cfg, false);
    add_parameter_options(euler, cfg, raw);
    euler->add_flag("--trivial", cfg.trivial, "use the rank-zero datum");
    euler->add_option("--places", raw.places, "residue field sizes, comma separated");
    euler->add_option("--primes-below", cfg.primes_below, "add every prime below this bound as a place");
    euler->add_option("--s", raw.s, "real s")->required();

    auto* split = add_command(app, "split", "split a parameter by a square root of q", cfg);
    add_parameter_options(split, cfg, raw);
    split->add_option("--sqrt-sign", raw.sqrt_sign, "sign of the square root")->check(CLI::IsMember({"+", "-"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!raw.coweight.empty()) cfg.coweight = parse_int_vector(raw.coweight);
        if (!raw.lhs.empty()) cfg.lhs = parse_int_vector(raw.lhs);
        if (!raw.rhs.empty()) cfg.rhs = parse_int_vector(raw.rhs);
        if (!raw.weights.empty()) cfg.weights = parse_vector_list(raw.weights);
        if (!raw.places.empty()) cfg.places = parse_int_vector(raw.places);
        if (!raw.values.empty()) {
            for (const auto& v : CLI::detail::split(raw.values, ',')) cfg.values.push_back(CLI::detail::trim_copy(v));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (cfg.command == "rfactor" || cfg.command == "euler") {
        const auto* sub = app.get_subcommand(cfg.command);
        if (sub->count("--s") > 0) cfg.s = raw.s;
    }
    cfg.sqrt_sign = raw.sqrt_sign == "-" ? -1 : 1;

    const RunResult res = run(cfg);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
