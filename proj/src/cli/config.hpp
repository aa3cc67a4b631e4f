#ifndef OPTOMECH_CLI_CONFIG_HPP
#define OPTOMECH_CLI_CONFIG_HPP

// Run configuration: a single JSON document; CLI flags may override
// top-level scalar fields (flag name = field name).

#include <complex>
#include <optional>
#include <string>

#include <json.hpp>

#include "optomech/errors.hpp"

namespace optomech::cli {

using Json = nlohmann::ordered_json;

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Propagated UnsupportedRegime / NonConvergent / SingularDenominator.
class RegimeError : public Error {
public:
    using Error::Error;
};

enum class Mode { SingleBs, CompositeScan, MaxFrictionVsZeta, TemperatureVsZeta, LimitsCheck, Figure };
enum class Spacing { Linear, Log };
enum class Format { Csv, Json };

struct AtomParams {
    double gamma = 0.0;
    double detuning = 0.0;
    double cross_section_ratio = 0.0;
};

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    Spacing spacing = Spacing::Linear;
};

struct OutputSpec {
    std::string path; // empty = stdout
    Format format = Format::Csv;
};

struct RunConfig {
    Mode mode = Mode::CompositeScan;
    std::string figure; // "3" | "4a" | "4b" | "5" when mode == Figure

    std::complex<double> zeta{0.01, 0.0};
    std::optional<AtomParams> atom; // two-level-atom polarizability (single-bs)
    std::complex<double> r_fixed{-1.0, 0.0};
    double k0L = 100.0;
    double k0x = 1.0;
    double input_flux = 1.0;
    double k = 1.0;   // single-bs drive wavenumber
    double eps = 0.0; // v/c at which emitted forces are also evaluated
    std::complex<double> b0{1.0, 0.0};
    std::complex<double> c0{0.0, 0.0};

    std::optional<GridSpec> grid;
    OutputSpec output;

    bool operator==(const RunConfig&) const = default;
};

std::string mode_name(Mode mode);

// Parse + validate; throws ConfigError with the offending field path.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::string& path);

// Canonical serialization; parse_config(to_json(c)) == c.
Json to_json(const RunConfig& config);

// Grid instantiation (count values, linear or log spacing).
std::vector<double> make_grid(const GridSpec& grid);

} // namespace optomech::cli

#endif
