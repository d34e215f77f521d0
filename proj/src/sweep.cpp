//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sweep.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include <json.hpp>

#include "cylsolid/errors.hpp"

namespace cylsolid
{
namespace
{
std::set<std::string> const& parameter_names(Quantity q)
{
    static std::set<std::string> const total{"r", "d", "l1", "l2", "length"};
    static std::set<std::string> const single{"r", "d", "l"};
    static std::set<std::string> const spread{"r_s", "r_d", "l"};
    switch (q)
    {
        case Quantity::total:
            return total;
        case Quantity::circ:
        case Quantity::cyl0:
            return single;
        case Quantity::spread:
            return spread;
    }
    return single;
}

bool oracle_supported(Quantity q, OracleKind o)
{
    switch (q)
    {
        case Quantity::total:
            return o != OracleKind::quadrature;
        case Quantity::spread:
            return o != OracleKind::direct2d;
        default:
            return true;
    }
}

using Params = std::map<std::string, double>;

Params substitute(SweepSpec const& spec, double value)
{
    Params p = spec.fixed;
    p[spec.varying] = value;
    if (spec.quantity == Quantity::total && p.count("length"))
    {
        double const len = p.at("length");
        if (p.count("l1"))
            p["l2"] = p.at("l1") - len;
        else
            p["l1"] = p.at("l2") + len;
    }
    return p;
}

struct StepResult
{
    SolidAngleResult omega;
    std::string regime;
};

StepResult evaluate(Quantity q, Params const& p)
{
    switch (q)
    {
        case Quantity::total: {
            CylinderGeometry const g{p.at("r"), p.at("d"), p.at("l1"), p.at("l2")};
            Regime const regime = classify(g);
            return {omega_total(g), std::string(to_string(regime))};
        }
        case Quantity::circ:
            return {omega_circ({p.at("r"), p.at("d"), p.at("l")}),
                    std::string(to_string(Regime::disc_only))};
        case Quantity::cyl0:
            return {omega_cyl0(p.at("l"), p.at("r"), p.at("d")),
                    std::string(to_string(Regime::skew_half))};
        case Quantity::spread:
            return {omega_spread({p.at("r_s"), p.at("r_d"), p.at("l")}),
                    std::string(to_string(Regime::disc_only))};
    }
    throw InvalidSweep("unknown quantity");
}

SolidAngleResult
evaluate_oracle(SweepSpec const& spec, Params const& p, McConfig const& mc)
{
    OracleKind const kind = *spec.oracle;
    switch (spec.quantity)
    {
        case Quantity::total: {
            CylinderGeometry const g{p.at("r"), p.at("d"), p.at("l1"), p.at("l2")};
            return kind == OracleKind::mc ? mc_omega(g, mc)
                                          : direct_2d_omega(g, spec.quad);
        }
        case Quantity::circ: {
            DiscGeometry const g{p.at("r"), p.at("d"), p.at("l")};
            if (kind == OracleKind::mc)
                return mc_omega(g, mc);
            if (kind == OracleKind::direct2d)
                return direct_2d_omega(g, spec.quad);
            auto target = g.d > g.r ? AzimuthalTarget::circ_dgr
                                    : AzimuthalTarget::circ_rgd;
            return quad_azimuthal(target, g.l, g.r, g.d, spec.quad);
        }
        case Quantity::cyl0: {
            double const l = p.at("l");
            double const r = p.at("r");
            double const d = p.at("d");
            if (kind == OracleKind::quadrature)
                return quad_azimuthal(AzimuthalTarget::cyl0, l, r, d, spec.quad);
            CylinderGeometry const g{r, d, l, 0};
            return kind == OracleKind::mc ? mc_omega(g, mc)
                                          : direct_2d_omega(g, spec.quad);
        }
        case Quantity::spread: {
            SpreadGeometry const g{p.at("r_s"), p.at("r_d"), p.at("l")};
            return kind == OracleKind::mc ? mc_omega_spread(g, mc)
                                          : quad_spread(g, spec.quad);
        }
    }
    throw InvalidSweep("unknown quantity");
}

std::string format_number(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string format_optional(std::optional<double> v, int precision)
{
    return v ? format_number(*v, precision) : std::string{};
}

nlohmann::json json_number(std::optional<double> v, int precision)
{
    if (!v)
        return nullptr;
    return std::strtod(format_number(*v, precision).c_str(), nullptr);
}

constexpr char const* csv_header = "varying,omega,oracle,oracle_stderr,regime";

std::optional<double> parse_field(std::string const& field)
{
    if (field.empty())
        return std::nullopt;
    char* end = nullptr;
    double const v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size())
    {
        throw IoError("malformed CSV number: '" + field + "'");
    }
    return v;
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(Quantity q)
{
    switch (q)
    {
        case Quantity::total:
            return "total";
        case Quantity::circ:
            return "circ";
        case Quantity::cyl0:
            return "cyl0";
        case Quantity::spread:
            return "spread";
    }
    return "unknown";
}

std::string_view to_string(OracleKind o)
{
    switch (o)
    {
        case OracleKind::mc:
            return "mc";
        case OracleKind::quadrature:
            return "quadrature";
        case OracleKind::direct2d:
            return "direct2d";
    }
    return "unknown";
}

Quantity parse_quantity(std::string_view s)
{
    for (auto q : {Quantity::total, Quantity::circ, Quantity::cyl0, Quantity::spread})
    {
        if (s == to_string(q))
            return q;
    }
    throw InvalidSweep("unknown quantity '" + std::string(s) + "'");
}

OracleKind parse_oracle(std::string_view s)
{
    if (s == "quad")
        return OracleKind::quadrature;
    for (auto o : {OracleKind::mc, OracleKind::quadrature, OracleKind::direct2d})
    {
        if (s == to_string(o))
            return o;
    }
    throw InvalidSweep("unknown oracle '" + std::string(s) + "'");
}

Format parse_format(std::string_view s)
{
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    throw InvalidSweep("unknown format '" + std::string(s) + "'");
}

//---------------------------------------------------------------------------//
void validate(SweepSpec const& spec)
{
    auto const& names = parameter_names(spec.quantity);
    std::string const qname(to_string(spec.quantity));
    if (!names.count(spec.varying) || spec.varying == "length")
    {
        throw InvalidSweep("cannot vary '" + spec.varying + "' for quantity "
                           + qname);
    }
    for (auto const& [key, value] : spec.fixed)
    {
        if (!names.count(key))
        {
            throw InvalidSweep("parameter '" + key + "' does not apply to "
                               "quantity " + qname);
        }
        if (key == spec.varying)
        {
            throw InvalidSweep("parameter '" + key
                               + "' is both fixed and varying");
        }
        if (!std::isfinite(value))
        {
            throw InvalidSweep("fixed parameter '" + key + "' is not finite");
        }
    }
    auto given = [&](std::string const& k) {
        return k == spec.varying || spec.fixed.count(k) > 0;
    };
    int nz = 0;
    for (auto const& k : names)
    {
        if (spec.quantity == Quantity::total
            && (k == "l1" || k == "l2" || k == "length"))
        {
            nz += given(k) ? 1 : 0;
        }
        else if (!given(k))
        {
            throw InvalidSweep("missing parameter '" + k + "'");
        }
    }
    if (spec.quantity == Quantity::total && nz != 2)
    {
        throw InvalidSweep(nz < 2 ? "end discs underdetermined: give two of "
                                    "l1, l2, length"
                                  : "end discs overdetermined: give only two "
                                    "of l1, l2, length");
    }
    if (!std::isfinite(spec.from) || !std::isfinite(spec.to)
        || !(spec.from < spec.to))
    {
        throw InvalidSweep("sweep range needs finite from < to");
    }
    if (spec.steps < 2)
    {
        throw InvalidSweep("sweep needs at least 2 steps");
    }
    if (spec.spacing == Spacing::log && !(spec.from > 0))
    {
        throw InvalidSweep("logarithmic spacing needs from > 0");
    }
    if (spec.oracle && !oracle_supported(spec.quantity, *spec.oracle))
    {
        throw InvalidSweep("oracle " + std::string(to_string(*spec.oracle))
                           + " is not available for quantity " + qname);
    }
    if (spec.oracle)
    {
        try
        {
            if (*spec.oracle == OracleKind::mc)
                validate(spec.mc);
            else
                validate(spec.quad);
        }
        catch (std::invalid_argument const& e)
        {
            throw InvalidSweep(e.what());
        }
    }
}

std::vector<double> sweep_points(SweepSpec const& spec)
{
    std::vector<double> pts(spec.steps);
    double const last = spec.steps - 1;
    for (int i = 0; i < spec.steps; ++i)
    {
        double const frac = i / last;
        if (spec.spacing == Spacing::log)
        {
            pts[i] = spec.from * std::pow(spec.to / spec.from, frac);
        }
        else
        {
            pts[i] = spec.from + (spec.to - spec.from) * frac;
        }
    }
    pts.front() = spec.from;
    pts.back() = spec.to;
    return pts;
}

//---------------------------------------------------------------------------//
/*!
 * Evaluate all steps.
 *
 * Steps run on a small thread pool but land in their own slot, so output order
 * always equals step order. Monte Carlo oracles get a per-step seed derived
 * from the configured seed and the step index.
 */
std::vector<SweepRecord> run_sweep(SweepSpec const& spec)
{
    validate(spec);
    std::vector<double> const pts = sweep_points(spec);
    std::vector<SweepRecord> out(pts.size());

    auto run_step = [&](std::size_t i) {
        SweepRecord& rec = out[i];
        rec.varying = pts[i];
        try
        {
            Params const p = substitute(spec, pts[i]);
            StepResult const res = evaluate(spec.quantity, p);
            rec.omega = res.omega.value;
            rec.regime = res.regime;
            if (spec.oracle)
            {
                McConfig mc = spec.mc;
                mc.seed = spec.mc.seed + 0x9e3779b97f4a7c15ull * i;
                mc.threads = 1;
                SolidAngleResult const o = evaluate_oracle(spec, p, mc);
                rec.oracle = o.value;
                rec.oracle_stderr = o.std_error;
            }
        }
        catch (std::exception const& e)
        {
            rec.omega.reset();
            rec.oracle.reset();
            rec.oracle_stderr.reset();
            rec.regime = std::string(error_regime);
            rec.message = e.what();
        }
    };

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < pts.size(); i = next++)
            run_step(i);
    };
    unsigned const nthreads = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), pts.size());
    if (nthreads <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(work);
    }
    return out;
}

//---------------------------------------------------------------------------//
std::string emit(std::vector<SweepRecord> const& records,
                 Format format,
                 int precision)
{
    if (records.empty())
    {
        throw IoError("no records to emit");
    }
    if (precision < 1 || precision > 17)
    {
        throw IoError("precision must be between 1 and 17 digits");
    }
    if (format == Format::json)
    {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& rec : records)
        {
            arr.push_back({
                {"varying", json_number(rec.varying, precision)},
                {"omega", json_number(rec.omega, precision)},
                {"oracle", json_number(rec.oracle, precision)},
                {"oracle_stderr", json_number(rec.oracle_stderr, precision)},
                {"regime", rec.regime},
            });
        }
        return arr.dump(2) + "\n";
    }

    std::string out = csv_header;
    out += '\n';
    for (auto const& rec : records)
    {
        out += format_number(rec.varying, precision);
        out += ',';
        out += format_optional(rec.omega, precision);
        out += ',';
        out += format_optional(rec.oracle, precision);
        out += ',';
        out += format_optional(rec.oracle_stderr, precision);
        out += ',';
        out += rec.regime;
        out += '\n';
    }
    return out;
}

std::vector<SweepRecord> parse_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != csv_header)
    {
        throw IoError("missing or unexpected CSV header");
    }
    std::vector<SweepRecord> out;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (!line.empty() && line.back() == ',')
            fields.emplace_back();
        if (fields.size() != 5)
        {
            throw IoError("CSV row has " + std::to_string(fields.size())
                          + " fields, expected 5");
        }
        SweepRecord rec;
        auto varying = parse_field(fields[0]);
        if (!varying)
            throw IoError("CSV row without a varying value");
        rec.varying = *varying;
        rec.omega = parse_field(fields[1]);
        rec.oracle = parse_field(fields[2]);
        rec.oracle_stderr = parse_field(fields[3]);
        rec.regime = fields[4];
        out.push_back(std::move(rec));
    }
    return out;
}

void write_atomic(std::filesystem::path const& path, std::string_view bytes)
{
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
        {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        os.flush();
        if (!os)
        {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
    {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

//---------------------------------------------------------------------------//
std::vector<NamedSweep> canonical_sweeps()
{
    std::vector<NamedSweep> out;
    for (double length : {5.0, 10.0})
    {
        for (double d : {0.25, 0.5, 0.75, 1.5, 2.0, 3.0})
        {
            SweepSpec spec;
            spec.varying = "l1";
            spec.from = -2;
            spec.to = 20;
            spec.steps = 221;
            spec.quantity = Quantity::total;
            spec.fixed = {{"r", 1.0}, {"d", d}, {"length", length}};
            out.push_back(
                {"len" + format_number(length, 6) + "_d" + format_number(d, 6),
                 std::move(spec)});
        }
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
