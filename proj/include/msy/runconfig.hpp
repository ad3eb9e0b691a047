#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "msy/spectrum.hpp"

namespace msy {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A full run description: potential and symmetry parameters plus the state
/// lists a command iterates over. Serializes to line-oriented "key = value"
/// text with '#' comments; parse(serialize()) is a fixed point.
struct RunConfig {
    PotentialParams params;
    SymmetrySpec spec;
    std::vector<int> n_list;
    std::vector<int> kappa_list;
    std::vector<double> H_list{0.0};
    RadialGrid grid;
    BranchPolicy branch = BranchPolicy::automatic;
    std::string output_path;

    static RunConfig parse(const std::string& text);
    static RunConfig load(const std::string& path);
    std::string serialize() const;

    bool operator==(const RunConfig&) const = default;
};

/// The shipped benchmark configuration for a table number (1..4); identical
/// content to the configs/ files.
RunConfig benchmark_config(int table);

std::string to_string(SymmetryLimit v);
std::string to_string(PotentialChoice v);
std::string to_string(TailForm v);
std::string to_string(Branch v);
std::string to_string(BranchPolicy v);

/// Fixed-width-free decimal formatting with 12 significant digits, used for
/// every number the tool serializes.
std::string format_number(double value);

}  // namespace msy
