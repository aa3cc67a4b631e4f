#include "run.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <thread>

#include "limits_check.hpp"
#include "optomech/composite.hpp"
#include "optomech/single_bs.hpp"
#include "optomech/version.hpp"

namespace optomech::cli {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

Polarizability config_polarizability(const RunConfig& c)
{
    if (c.atom)
        return Polarizability::two_level_atom(c.atom->gamma, c.atom->detuning,
                                              c.atom->cross_section_ratio);
    return Polarizability::constant(c.zeta);
}

SystemSpec config_system(const RunConfig& c)
{
    SystemSpec s;
    s.zeta = c.zeta;
    s.r_fixed = c.r_fixed;
    s.k0L = c.k0L;
    s.k0x = c.k0x;
    s.input_flux = c.input_flux;
    return s;
}

bool composite_diffusion_supported(const RunConfig& c)
{
    return std::abs(c.r_fixed - std::complex<double>(-1.0, 0.0)) <= 1e-12
           && std::abs(c.zeta.imag()) <= 1e-12;
}

Table table_single_bs(const RunConfig& c, unsigned threads)
{
    Table t;
    const Polarizability pol = config_polarizability(c);
    const std::complex<double> zeta = zeta_of(pol, c.k).zeta;
    t.columns = {"k0x", "force0", "beta", "diffusion"};
    std::vector<double> grid;
    if (c.grid)
        grid = make_grid(*c.grid);
    else
        grid = {c.k0x};
    t.rows.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const double k0x = grid[i];
        DriveFields drive{c.b0 * std::exp(std::complex<double>(0.0, k0x)),
                          c.c0 * std::exp(std::complex<double>(0.0, -k0x)), c.k};
        const Jet1 f = force_single(pol, drive);
        t.rows[i] = {k0x, std::real(f.val), -std::real(f.eps), diffusion_single(zeta, drive)};
    });
    return t;
}

Table table_composite_scan(const RunConfig& c, unsigned threads)
{
    Table t;
    const bool with_diffusion = composite_diffusion_supported(c);
    t.columns = {"k0x", "force0", "beta"};
    if (with_diffusion)
        t.columns.push_back("diffusion");
    const std::vector<double> grid = make_grid(*c.grid);
    t.rows.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        SystemSpec s = config_system(c);
        s.k0x = grid[i];
        const MechanicalResponse f = force_composite(s);
        std::vector<double> row{grid[i], f.force0, f.beta};
        if (with_diffusion)
            row.push_back(diffusion_composite(s));
        t.rows[i] = std::move(row);
    });
    return t;
}

Table table_max_friction(const RunConfig& c, unsigned threads, bool with_temperature)
{
    Table t;
    t.columns = with_temperature ? std::vector<std::string>{"zeta", "k0x_max", "beta", "diffusion", "kBT"}
                                 : std::vector<std::string>{"zeta", "k0x_max", "beta_max"};
    const std::vector<double> grid = make_grid(*c.grid);
    t.rows.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        SystemSpec s = config_system(c);
        s.zeta = grid[i];
        const FrictionMaximum m = temperature_at_max_friction(s);
        if (with_temperature)
            t.rows[i] = {grid[i], m.k0x_max, m.beta, m.diffusion, m.kBT};
        else
            t.rows[i] = {grid[i], m.k0x_max, m.beta};
    });
    return t;
}

Table table_figure(const RunConfig& c, unsigned threads)
{
    RunConfig f = c;
    if (c.figure == "3") {
        // normalized friction curves over the half-wave window
        Table t;
        t.columns = {"zeta", "k0x", "beta", "beta_normalized"};
        const int n = c.grid ? c.grid->count : 512;
        const double lo = c.grid ? c.grid->start : kPi / n;
        const double hi = c.grid ? c.grid->stop : kPi;
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i)
            xs[i] = lo + (hi - lo) * i / (n - 1.0);
        const std::vector<double> zetas{0.01, 0.1, 0.3, 1.0};
        t.rows.resize(zetas.size() * xs.size());
        parallel_for(zetas.size(), threads, [&](std::size_t zi) {
            SystemSpec s = config_system(c);
            s.zeta = zetas[zi];
            const auto scan = scan_friction(s, xs);
            double peak = 0.0;
            for (const auto& p : scan)
                peak = std::max(peak, std::abs(p.beta));
            for (std::size_t i = 0; i < scan.size(); ++i)
                t.rows[zi * xs.size() + i] = {zetas[zi], scan[i].k0x, scan[i].beta,
                                              peak > 0.0 ? scan[i].beta / peak : 0.0};
        });
        return t;
    }
    if (c.figure == "4a") {
        if (!f.grid)
            f.grid = GridSpec{1e-2, 1e2, 25, Spacing::Log};
        Table t = table_max_friction(f, threads, false);
        t.columns = {"zeta", "k0x_max"};
        for (auto& row : t.rows)
            row.resize(2);
        return t;
    }
    if (c.figure == "4b") {
        if (!f.grid)
            f.grid = GridSpec{1e-3, 1e2, 26, Spacing::Log};
        Table t = table_max_friction(f, threads, false);
        t.columns = {"zeta", "beta_max"};
        for (auto& row : t.rows)
            row = {row[0], row[2]};
        return t;
    }
    // figure 5
    if (!f.grid)
        f.grid = GridSpec{1e-2, 1e2, 25, Spacing::Log};
    Table t = table_max_friction(f, threads, true);
    t.columns = {"zeta", "kBT"};
    for (auto& row : t.rows)
        row = {row[0], row[4]};
    return t;
}

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v); // 17 significant digits
    return buf;
}

void write_metadata_lines(std::ostream& os, const RunConfig& c, const Table& t)
{
    os << "# tool: optomech " << kVersion << "\n";
    os << "# units: hbar = c = 1, k0 = 1; force in hbar k0 flux, friction in hbar k0 flux / c, "
          "diffusion in (hbar k0)^2 flux, temperature in hbar c k0\n";
    os << "# config: " << to_json(c).dump() << "\n";
    for (const auto& w : t.warnings)
        os << "# warning: " << w << "\n";
}

} // namespace

Table build_table(const RunConfig& config, unsigned threads)
{
    Table t;
    switch (config.mode) {
    case Mode::SingleBs:
        t = table_single_bs(config, threads);
        break;
    case Mode::CompositeScan:
        t = table_composite_scan(config, threads);
        break;
    case Mode::MaxFrictionVsZeta:
        t = table_max_friction(config, threads, false);
        break;
    case Mode::TemperatureVsZeta:
        t = table_max_friction(config, threads, true);
        break;
    case Mode::Figure:
        t = table_figure(config, threads);
        break;
    case Mode::LimitsCheck:
        throw ConfigError("mode: limits-check has no table; use `optomech check`");
    }
    // validity of the stress-tensor time averaging: Doppler splitting must
    // stay well inside the round-trip free spectral range
    if (config.eps * config.k0L > 0.1)
        t.warnings.push_back("v/c * k0L > 0.1: time-averaging condition for the force is marginal");
    return t;
}

void write_csv(std::ostream& os, const RunConfig& config, const Table& table)
{
    write_metadata_lines(os, config, table);
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_value(row[i]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const RunConfig& config, const Table& table)
{
    Json doc;
    doc["meta"] = Json{{"tool", "optomech"},
                       {"version", kVersion},
                       {"units", "hbar = c = 1, k0 = 1"},
                       {"config", to_json(config)}};
    if (!table.warnings.empty())
        doc["meta"]["warnings"] = table.warnings;
    doc["columns"] = table.columns;
    Json rows = Json::array();
    for (const auto& row : table.rows)
        rows.push_back(row);
    doc["data"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

int run(const RunConfig& config, unsigned threads, std::ostream& log)
{
    auto emit = [&](const std::function<void(std::ostream&)>& writer) {
        if (config.output.path.empty()) {
            writer(log);
            return;
        }
        std::ofstream out(config.output.path, std::ios::binary);
        if (!out)
            throw IoError("cannot open output file '" + config.output.path + "'");
        writer(out);
        if (!out)
            throw IoError("write failed for '" + config.output.path + "'");
    };

    if (config.mode == Mode::LimitsCheck) {
        const CheckOutcome outcome = run_limits_check();
        emit([&](std::ostream& os) { os << outcome.report.dump(2) << "\n"; });
        return outcome.all_pass ? 0 : 1;
    }

    Table table;
    try {
        table = build_table(config, threads);
    } catch (const UnsupportedRegime& e) {
        throw RegimeError(e.what());
    } catch (const NonConvergent& e) {
        throw RegimeError(e.what());
    } catch (const SingularDenominator& e) {
        throw RegimeError(e.what());
    } catch (const NoCoolingPoint& e) {
        throw RegimeError(e.what());
    }

    if (config.output.format == Format::Csv)
        emit([&](std::ostream& os) { write_csv(os, config, table); });
    else
        emit([&](std::ostream& os) { write_json(os, config, table); });
    return 0;
}

unsigned resolve_threads(int flag_value)
{
    if (flag_value > 0)
        return static_cast<unsigned>(flag_value);
    if (const char* env = std::getenv("OPTOMECH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace optomech::cli
