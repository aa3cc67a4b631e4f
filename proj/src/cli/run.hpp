#ifndef OPTOMECH_CLI_RUN_HPP
#define OPTOMECH_CLI_RUN_HPP

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace optomech::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> warnings;
};

// Evaluate the configured scan.  Grid points fan out over `threads`
// workers; rows come back ordered by grid index, so the output is
// byte-identical regardless of scheduling.
Table build_table(const RunConfig& config, unsigned threads);

void write_csv(std::ostream& os, const RunConfig& config, const Table& table);
void write_json(std::ostream& os, const RunConfig& config, const Table& table);

// Full dispatch: build, emit to config/override path, return exit status.
int run(const RunConfig& config, unsigned threads, std::ostream& log);

unsigned resolve_threads(int flag_value); // --threads, else OPTOMECH_THREADS, else hardware

} // namespace optomech::cli

#endif
