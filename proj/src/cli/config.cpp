#include "config.hpp"

#include <cmath>
#include <fstream>
#include <vector>

namespace optomech::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ConfigError(path + ": " + what);
}

double get_number(const Json& j, const std::string& path)
{
    if (!j.is_number())
        fail(path, "expected a number");
    return j.get<double>();
}

std::complex<double> get_complex(const Json& j, const std::string& path)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_object() || !j.contains("re"))
        fail(path, "expected a number or {re, im}");
    const double re = get_number(j.at("re"), path + ".re");
    const double im = j.contains("im") ? get_number(j.at("im"), path + ".im") : 0.0;
    return {re, im};
}

Json complex_json(const std::complex<double>& z)
{
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Mode parse_mode(const std::string& s)
{
    if (s == "single-bs")
        return Mode::SingleBs;
    if (s == "composite-scan")
        return Mode::CompositeScan;
    if (s == "max-friction-vs-zeta")
        return Mode::MaxFrictionVsZeta;
    if (s == "temperature-vs-zeta")
        return Mode::TemperatureVsZeta;
    if (s == "limits-check")
        return Mode::LimitsCheck;
    if (s == "figure")
        return Mode::Figure;
    fail("mode", "unknown mode '" + s + "'");
}

} // namespace

std::string mode_name(Mode mode)
{
    switch (mode) {
    case Mode::SingleBs: return "single-bs";
    case Mode::CompositeScan: return "composite-scan";
    case Mode::MaxFrictionVsZeta: return "max-friction-vs-zeta";
    case Mode::TemperatureVsZeta: return "temperature-vs-zeta";
    case Mode::LimitsCheck: return "limits-check";
    case Mode::Figure: return "figure";
    }
    return "?";
}

RunConfig parse_config(const Json& doc)
{
    if (!doc.is_object())
        fail("<root>", "config must be a JSON object");

    RunConfig c;
    if (!doc.contains("mode"))
        fail("mode", "required field missing");
    if (!doc.at("mode").is_string())
        fail("mode", "expected a string");
    c.mode = parse_mode(doc.at("mode").get<std::string>());

    if (doc.contains("figure")) {
        if (!doc.at("figure").is_string())
            fail("figure", "expected a string");
        c.figure = doc.at("figure").get<std::string>();
    }
    if (c.mode == Mode::Figure) {
        if (c.figure != "3" && c.figure != "4a" && c.figure != "4b" && c.figure != "5")
            fail("figure", "must be one of 3 | 4a | 4b | 5");
    }

    if (doc.contains("zeta"))
        c.zeta = get_complex(doc.at("zeta"), "zeta");
    if (doc.contains("atom")) {
        const Json& a = doc.at("atom");
        if (!a.is_object())
            fail("atom", "expected an object");
        AtomParams atom;
        atom.gamma = get_number(a.value("gamma", Json(0.0)), "atom.gamma");
        atom.detuning = get_number(a.value("detuning", Json(0.0)), "atom.detuning");
        atom.cross_section_ratio =
            get_number(a.value("cross_section_ratio", Json(0.0)), "atom.cross_section_ratio");
        if (!(atom.gamma > 0.0))
            fail("atom.gamma", "must be > 0");
        c.atom = atom;
    }
    if (doc.contains("r_fixed"))
        c.r_fixed = get_complex(doc.at("r_fixed"), "r_fixed");
    if (std::abs(c.r_fixed) > 1.0 + 1e-12)
        fail("r_fixed", "must satisfy |r| <= 1");
    if (doc.contains("k0L"))
        c.k0L = get_number(doc.at("k0L"), "k0L");
    if (doc.contains("k0x"))
        c.k0x = get_number(doc.at("k0x"), "k0x");
    if (doc.contains("input_flux"))
        c.input_flux = get_number(doc.at("input_flux"), "input_flux");
    if (c.input_flux < 0.0)
        fail("input_flux", "must be >= 0");
    if (doc.contains("k"))
        c.k = get_number(doc.at("k"), "k");
    if (!(c.k > 0.0))
        fail("k", "must be > 0");
    if (doc.contains("eps"))
        c.eps = get_number(doc.at("eps"), "eps");
    if (doc.contains("b0"))
        c.b0 = get_complex(doc.at("b0"), "b0");
    if (doc.contains("c0"))
        c.c0 = get_complex(doc.at("c0"), "c0");

    if (doc.contains("grid")) {
        const Json& g = doc.at("grid");
        if (!g.is_object())
            fail("grid", "expected an object");
        GridSpec grid;
        if (!g.contains("start") || !g.contains("stop") || !g.contains("count"))
            fail("grid", "requires start, stop, count");
        grid.start = get_number(g.at("start"), "grid.start");
        grid.stop = get_number(g.at("stop"), "grid.stop");
        if (!g.at("count").is_number_integer())
            fail("grid.count", "expected an integer");
        grid.count = g.at("count").get<int>();
        if (grid.count < 2)
            fail("grid.count", "must be >= 2");
        const std::string spacing = g.value("spacing", "linear");
        if (spacing == "linear")
            grid.spacing = Spacing::Linear;
        else if (spacing == "log")
            grid.spacing = Spacing::Log;
        else
            fail("grid.spacing", "must be 'linear' or 'log'");
        if (grid.spacing == Spacing::Log && (grid.start <= 0.0 || grid.stop <= 0.0))
            fail("grid", "log spacing requires start, stop > 0");
        c.grid = grid;
    }

    if (doc.contains("output")) {
        const Json& o = doc.at("output");
        if (!o.is_object())
            fail("output", "expected an object");
        c.output.path = o.value("path", "");
        const std::string fmt = o.value("format", "csv");
        if (fmt == "csv")
            c.output.format = Format::Csv;
        else if (fmt == "json")
            c.output.format = Format::Json;
        else
            fail("output.format", "must be 'csv' or 'json'");
    }

    const bool needs_grid = c.mode == Mode::CompositeScan || c.mode == Mode::MaxFrictionVsZeta
                            || c.mode == Mode::TemperatureVsZeta;
    if (needs_grid && !c.grid)
        fail("grid", "required for mode '" + mode_name(c.mode) + "'");

    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

Json to_json(const RunConfig& c)
{
    Json doc;
    doc["mode"] = mode_name(c.mode);
    if (c.mode == Mode::Figure)
        doc["figure"] = c.figure;
    doc["zeta"] = complex_json(c.zeta);
    if (c.atom) {
        doc["atom"] = Json{{"gamma", c.atom->gamma},
                           {"detuning", c.atom->detuning},
                           {"cross_section_ratio", c.atom->cross_section_ratio}};
    }
    doc["r_fixed"] = complex_json(c.r_fixed);
    doc["k0L"] = c.k0L;
    doc["k0x"] = c.k0x;
    doc["input_flux"] = c.input_flux;
    doc["k"] = c.k;
    doc["eps"] = c.eps;
    doc["b0"] = complex_json(c.b0);
    doc["c0"] = complex_json(c.c0);
    if (c.grid) {
        doc["grid"] = Json{{"start", c.grid->start},
                           {"stop", c.grid->stop},
                           {"count", c.grid->count},
                           {"spacing", c.grid->spacing == Spacing::Log ? "log" : "linear"}};
    }
    doc["output"] = Json{{"path", c.output.path},
                         {"format", c.output.format == Format::Json ? "json" : "csv"}};
    return doc;
}

std::vector<double> make_grid(const GridSpec& grid)
{
    std::vector<double> xs(grid.count);
    if (grid.spacing == Spacing::Linear) {
        const double step = (grid.stop - grid.start) / (grid.count - 1);
        for (int i = 0; i < grid.count; ++i)
            xs[i] = grid.start + step * i;
    } else {
        const double lstep = (std::log(grid.stop) - std::log(grid.start)) / (grid.count - 1);
        for (int i = 0; i < grid.count; ++i)
            xs[i] = std::exp(std::log(grid.start) + lstep * i);
    }
    xs.back() = grid.stop;
    return xs;
}

} // namespace optomech::cli
