//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cylsolid/analytic.hpp"
#include "cylsolid/errors.hpp"
#include "cylsolid/oracle.hpp"
#include "cylsolid/sweep.hpp"
#include "cylsolid/verify.hpp"

namespace cylsolid
{
namespace
{
constexpr char const* seed_env = "CYLSOLID_SEED";

std::uint64_t default_seed()
{
    if (char const* s = std::getenv(seed_env))
    {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 0);
        if (end != s && *end == '\0')
            return v;
    }
    return 42;
}

std::string num(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

//! Options shared by the point, disc and spread subcommands
struct EvalOptions
{
    std::string format{"plain"};
    bool steradians{false};
    int precision{12};
    std::string verify;
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{default_seed()};
    std::uint32_t chunks{64};
    double tol{1e-10};

    McConfig mc() const { return {samples, seed, chunks, 0}; }
    QuadConfig quad() const { return {tol, 60}; }
};

void add_eval_options(CLI::App& sub, EvalOptions& o)
{
    sub.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    sub.add_flag("--steradians", o.steradians,
                 "Report 2*pi times the hemisphere-normalized value");
    sub.add_option("--precision", o.precision, "Significant digits")
        ->check(CLI::Range(1, 17));
    sub.add_option("--verify", o.verify, "Cross-check against an oracle")
        ->check(CLI::IsMember({"mc", "quad", "direct2d"}));
    sub.add_option("--samples", o.samples, "Monte Carlo samples")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 40));
    sub.add_option("--seed", o.seed,
                   std::string("Monte Carlo seed (default $") + seed_env
                       + " or 42)");
    sub.add_option("--chunks", o.chunks, "Monte Carlo work blocks")
        ->check(CLI::PositiveNumber);
    sub.add_option("--tol", o.tol, "Quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
}

struct Evaluation
{
    double omega{};
    std::optional<std::string> regime;
    std::optional<SolidAngleResult> oracle;
    double threshold{};
};

/*!
 * Agreement test between the closed form and an oracle.
 *
 * Monte Carlo uses 4 sigma, with sigma the larger of the plug-in estimate and
 * the binomial sigma at the closed-form value (so a zero-hit tally of a tiny
 * solid angle is not flagged). Quadrature oracles use 100 * tol.
 */
double agreement_threshold(Evaluation const& e, EvalOptions const& o)
{
    if (e.oracle->method == Method::mc)
    {
        double const n = static_cast<double>(o.samples);
        double const sigma = std::max(e.oracle->std_error.value_or(0),
                                      std::sqrt(e.omega * (1 - e.omega) / n));
        return 4 * sigma;
    }
    return 100 * o.tol;
}

int report(Evaluation e, EvalOptions const& o, std::ostream& out)
{
    bool agree = true;
    double delta = 0;
    if (e.oracle)
    {
        e.threshold = agreement_threshold(e, o);
        delta = e.oracle->value - e.omega;
        agree = std::fabs(delta) <= e.threshold;
    }
    double const scale = o.steradians ? to_steradians(1.0) : 1.0;
    int const p = o.precision;

    if (o.format == "plain")
    {
        out << num(e.omega * scale, p) << '\n';
        if (e.regime)
            out << "regime=" << *e.regime << '\n';
        if (e.oracle)
        {
            out << "oracle=" << to_string(e.oracle->method)
                << " value=" << num(e.oracle->value * scale, p);
            if (e.oracle->std_error)
                out << " stderr=" << num(*e.oracle->std_error * scale, p);
            out << " delta=" << num(delta * scale, p)
                << " threshold=" << num(e.threshold * scale, p) << ' '
                << (agree ? "agree" : "DISAGREE") << '\n';
        }
    }
    else if (o.format == "csv")
    {
        out << "omega,regime,oracle,oracle_stderr,delta\n";
        out << num(e.omega * scale, p) << ',' << e.regime.value_or("") << ',';
        if (e.oracle)
        {
            out << num(e.oracle->value * scale, p) << ',';
            if (e.oracle->std_error)
                out << num(*e.oracle->std_error * scale, p);
            out << ',' << num(delta * scale, p);
        }
        else
        {
            out << ",,";
        }
        out << '\n';
    }
    else
    {
        auto rounded = [p](double v) {
            return std::strtod(num(v, p).c_str(), nullptr);
        };
        nlohmann::json j;
        j["omega"] = rounded(e.omega * scale);
        j["unit"] = o.steradians ? "sr" : "hemisphere";
        j["regime"] = e.regime ? nlohmann::json(*e.regime) : nlohmann::json();
        if (e.oracle)
        {
            j["oracle"] = rounded(e.oracle->value * scale);
            j["oracle_method"] = std::string(to_string(e.oracle->method));
            j["oracle_stderr"] = e.oracle->std_error
                                     ? nlohmann::json(rounded(*e.oracle->std_error * scale))
                                     : nlohmann::json();
            j["delta"] = rounded(delta * scale);
            j["agree"] = agree;
        }
        out << j.dump() << '\n';
    }
    return agree ? exit_ok : exit_disagree;
}

//---------------------------------------------------------------------------//
struct SweepOptions
{
    std::string vary;
    double from{};
    double to{};
    int steps{101};
    std::string quantity{"total"};
    std::string oracle;
    bool log{false};
    int precision{9};
    std::string format{"csv"};
    std::string output;
    bool canonical{false};
    std::string output_dir{"."};
    std::uint64_t samples{100'000};
    std::uint64_t seed{default_seed()};
    double tol{1e-10};
    std::map<std::string, std::optional<double>> params{
        {"r", {}}, {"d", {}}, {"l1", {}}, {"l2", {}},
        {"l", {}}, {"r_s", {}}, {"r_d", {}}, {"length", {}}};
};

SweepSpec to_spec(SweepOptions const& o)
{
    SweepSpec spec;
    spec.varying = o.vary;
    spec.from = o.from;
    spec.to = o.to;
    spec.steps = o.steps;
    spec.quantity = parse_quantity(o.quantity);
    if (!o.oracle.empty())
        spec.oracle = parse_oracle(o.oracle);
    spec.spacing = o.log ? Spacing::log : Spacing::linear;
    spec.mc.samples = o.samples;
    spec.mc.seed = o.seed;
    spec.quad.abs_tol = o.tol;
    for (auto const& [name, value] : o.params)
    {
        if (value)
            spec.fixed[name] = *value;
    }
    return spec;
}

int run_sweep_command(SweepOptions const& o, std::ostream& out)
{
    Format const format = parse_format(o.format);
    std::string const ext = format == Format::csv ? ".csv" : ".json";
    if (o.canonical)
    {
        std::filesystem::path const dir(o.output_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        for (auto const& named : canonical_sweeps())
        {
            auto const path = dir / (named.label + ext);
            write_atomic(path, emit(run_sweep(named.spec), format, o.precision));
            out << path.string() << '\n';
        }
        return exit_ok;
    }
    if (o.vary.empty())
    {
        throw InvalidSweep("--vary is required unless --canonical is given");
    }
    std::string const text = emit(run_sweep(to_spec(o)), format, o.precision);
    if (o.output.empty())
        out << text;
    else
        write_atomic(o.output, text);
    return exit_ok;
}

//---------------------------------------------------------------------------//
int run_verify_command(VerifyOptions const& v, std::ostream& out)
{
    VerifyReport const rep = run_verification(v);
    for (auto const& c : rep.campaigns)
    {
        out << c.name << ": " << c.passed << " passed, " << c.failed
            << " failed";
        if (c.allowed_failures)
            out << " (" << c.allowed_failures << " allowed)";
        out << ", worst " << num(c.worst, 3) << ", threshold "
            << num(c.threshold, 3) << (c.ok() ? "" : "  FAIL") << '\n';
        if (!c.ok())
            out << "  first failure: " << c.first_failure << '\n';
    }
    out << (rep.ok() ? "PASS" : "FAIL") << '\n';
    return rep.ok() ? exit_ok : exit_disagree;
}
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Parse and dispatch one invocation.
 *
 * Exit codes: 0 success, 1 output failure, 2 invalid input, 3 an oracle
 * disagreed with the closed form (or failed to converge).
 */
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Solid angles subtended by cylinders and discs at a point "
                 "cosine source whose axis is parallel to the detector axis"};
    app.name("cylsolid");
    app.require_subcommand(1);

    // point
    CylinderGeometry cyl;
    EvalOptions point_opts;
    auto* point = app.add_subcommand("point", "Whole cylindrical detector");
    point->add_option("--r", cyl.r, "Cylinder radius")->required();
    point->add_option("--d", cyl.d, "Source-to-axis distance")->required();
    point->add_option("--l1", cyl.l1, "Height of the upper end disc")->required();
    point->add_option("--l2", cyl.l2, "Height of the lower end disc")->required();
    add_eval_options(*point, point_opts);

    // disc
    DiscGeometry disc;
    EvalOptions disc_opts;
    auto* disc_cmd = app.add_subcommand("disc", "Single disc parallel to the source plane");
    disc_cmd->add_option("--r", disc.r, "Disc radius")->required();
    disc_cmd->add_option("--d", disc.d, "Source-to-axis distance")->required();
    disc_cmd->add_option("--l", disc.l, "Height of the disc plane")->required();
    add_eval_options(*disc_cmd, disc_opts);

    // spread
    SpreadGeometry spread;
    EvalOptions spread_opts;
    auto* spread_cmd = app.add_subcommand(
        "spread", "Uniform cosine disc source facing a coaxial detector disc");
    spread_cmd->add_option("--rs", spread.r_s, "Source disc radius")->required();
    spread_cmd->add_option("--rd", spread.r_d, "Detector disc radius")->required();
    spread_cmd->add_option("--l", spread.l, "Disc separation")->required();
    add_eval_options(*spread_cmd, spread_opts);

    // sweep
    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "One-parameter sweep as CSV or JSON");
    sweep->add_option("--vary", so.vary, "Parameter to vary")
        ->check(CLI::IsMember({"l1", "l2", "d", "r", "l", "r_s", "r_d"}));
    sweep->add_option("--from", so.from, "First value");
    sweep->add_option("--to", so.to, "Last value");
    sweep->add_option("--steps", so.steps, "Number of points (>= 2)");
    sweep->add_option("--quantity", so.quantity, "total, circ, cyl0 or spread")
        ->check(CLI::IsMember({"total", "circ", "cyl0", "spread"}));
    sweep->add_option("--oracle", so.oracle, "Co-compute an oracle value")
        ->check(CLI::IsMember({"mc", "quad", "quadrature", "direct2d"}));
    sweep->add_flag("--log", so.log, "Logarithmic spacing");
    sweep->add_option("--precision", so.precision, "Significant digits")
        ->check(CLI::Range(1, 17));
    sweep->add_option("--format", so.format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", so.output, "Write to a file instead of stdout");
    sweep->add_flag("--canonical", so.canonical,
                    "Write the bundled r=1, length 5/10 detector sweeps");
    sweep->add_option("--output-dir", so.output_dir,
                      "Directory for --canonical output");
    sweep->add_option("--samples", so.samples, "Monte Carlo samples per step");
    sweep->add_option("--seed", so.seed, "Monte Carlo seed");
    sweep->add_option("--tol", so.tol, "Quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--r", so.params["r"]);
    sweep->add_option("--d", so.params["d"]);
    sweep->add_option("--l1", so.params["l1"]);
    sweep->add_option("--l2", so.params["l2"]);
    sweep->add_option("--l", so.params["l"]);
    sweep->add_option("--rs", so.params["r_s"]);
    sweep->add_option("--rd", so.params["r_d"]);
    sweep->add_option("--length", so.params["length"],
                      "Tie the end discs: l2 = l1 - length");

    // verify
    VerifyOptions vo;
    vo.seed = default_seed();
    auto* verify = app.add_subcommand("verify", "Randomized oracle concordance campaign");
    verify->add_option("--cases", vo.cases, "Random geometries per campaign");
    verify->add_option("--tol", vo.tol, "Allowed quadrature discrepancy");
    verify->add_option("--seed", vo.seed, "Geometry and Monte Carlo seed");
    verify->add_option("--mc-cases", vo.mc_cases, "Monte Carlo comparisons");
    verify->add_option("--samples", vo.samples, "Monte Carlo samples per case");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try
    {
        if (point->parsed())
        {
            validate(cyl);
            Evaluation e;
            e.regime = std::string(to_string(classify(cyl)));
            e.omega = omega_total(cyl).value;
            if (point_opts.verify == "mc")
                e.oracle = mc_omega(cyl, point_opts.mc());
            else if (!point_opts.verify.empty())
                e.oracle = direct_2d_omega(cyl, point_opts.quad());
            return report(e, point_opts, out);
        }
        if (disc_cmd->parsed())
        {
            validate(disc);
            Evaluation e;
            e.omega = omega_circ(disc).value;
            if (disc_opts.verify == "mc")
            {
                e.oracle = mc_omega(disc, disc_opts.mc());
            }
            else if (disc_opts.verify == "quad" && disc.d != disc.r && disc.l > 0)
            {
                auto target = disc.d > disc.r ? AzimuthalTarget::circ_dgr
                                              : AzimuthalTarget::circ_rgd;
                e.oracle = quad_azimuthal(target, disc.l, disc.r, disc.d,
                                          disc_opts.quad());
            }
            else if (!disc_opts.verify.empty())
            {
                e.oracle = direct_2d_omega(disc, disc_opts.quad());
            }
            return report(e, disc_opts, out);
        }
        if (spread_cmd->parsed())
        {
            validate(spread);
            Evaluation e;
            e.omega = omega_spread(spread).value;
            if (spread_opts.verify == "mc")
                e.oracle = mc_omega_spread(spread, spread_opts.mc());
            else if (spread_opts.verify == "quad")
                e.oracle = quad_spread(spread, spread_opts.quad());
            else if (!spread_opts.verify.empty())
                throw InvalidSweep("direct2d oracle is not available for spread");
            return report(e, spread_opts, out);
        }
        if (sweep->parsed())
        {
            return run_sweep_command(so, out);
        }
        if (verify->parsed())
        {
            return run_verify_command(vo, out);
        }
    }
    catch (ConvergenceError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_disagree;
    }
    catch (IoError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (std::invalid_argument const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (std::domain_error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
