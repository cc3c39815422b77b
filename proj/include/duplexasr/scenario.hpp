#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duplexasr/channel.hpp"
#include "duplexasr/oracle.hpp"
#include "duplexasr/solvers.hpp"

namespace duplexasr {

/// Thrown for invalid scenario configs; `field` names the offending key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& field, const std::string& what_arg)
        : std::runtime_error(what_arg), field(field) {}
    std::string field;
};

enum class ChannelKind { Flat, ItuA, Asymmetric, File };

struct PowerRange {
    double start_dbm = 0.0;
    double stop_dbm = 40.0;
    double step_db = 2.0;

    std::vector<double> points() const;  // inclusive of both ends (within fp slack)
};

struct Scenario {
    // channel
    ChannelKind channel = ChannelKind::Flat;
    std::string channel_file;  // for ChannelKind::File
    double si_db = -60.0;
    double beta_db = -40.0;
    std::uint64_t seed = 1;
    bool raw_taps = false;

    // system (Table-style link budget; energies come from the power axis)
    SystemParams system_raw{};  // gamma_e/n1/n2/total_energy filled per run

    // run
    std::vector<Strategy> strategies{Strategy::HdUpa, Strategy::HdNupa, Strategy::FdUpa,
                                     Strategy::FdNupa};
    double power_dbm = 20.0;  // for single solves
    PowerRange sweep{};
    std::vector<double> si_list{-90.0, -80.0, -70.0, -60.0};  // for ratio runs
    std::string ratio_pair = "nupa";                          // "nupa" or "upa"
    std::string out_path;

    SolverConfig solver{};
    OracleConfig oracle{};
};

/// Parses the line-oriented key-value config with [section] headers.
/// Unknown keys and malformed values raise ConfigError naming the field.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

/// Applies one "section.key=value" override (command-line flags win).
void apply_override(Scenario& s, const std::string& key, const std::string& value);

/// Materializes the scenario channel at the scenario's K.
ChannelRealization build_channel(const Scenario& s);
/// System params with E set from a power level (E = 10^(dBm/10) * 1e-3 J
/// over the unit frame).
SystemParams build_system(const Scenario& s, double power_dbm);

// Scenario runners. Each writes a CSV with a header row; numeric fields are
// full-precision, locale-independent decimal text. Runs are deterministic for
// fixed config and seed.
void run_solve(const Scenario& s, std::ostream& csv, std::ostream& report);
void run_sweep(const Scenario& s, std::ostream& csv);
void run_ratio(const Scenario& s, std::ostream& csv, std::ostream& warnings);
void run_oracle_compare(const Scenario& s, std::ostream& csv);
void emit_channel(const Scenario& s, std::ostream& csv);

/// Full-precision, locale-independent decimal text for CSV cells.
std::string csv_double(double v);

/// Worker count for sweep dispatch: DUPLEX_ASR_THREADS when set, else
/// hardware concurrency; always >= 1.
unsigned worker_count();

}  // namespace duplexasr
