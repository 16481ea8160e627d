#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "absep/classifier.hpp"
#include "absep/partition.hpp"

namespace absep {

struct SweepAxis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int steps = 2;
};

enum class SweepKind { ChannelGrid, PurityBounds };

// A parameter-region scan: a channel family template whose "$axis"
// placeholders are filled from a 1–3 axis grid, with a list of criteria
// evaluated per cell.  Cells are sampled at half-open cell centers,
// value_i = min + (i + ½)(max - min)/steps, so region boundaries are never
// double-counted.  The PurityBounds kind instead tabulates the state-level
// purity bounds (separability ball, purity threshold, hyperbola) against
// the total dimension.
struct SweepSpec {
    SweepKind kind = SweepKind::ChannelGrid;
    std::string name = "custom";
    nlohmann::json family_template;
    std::vector<SweepAxis> axes;
    Partition partition = Bipartition(2, 2);
    std::vector<std::string> criteria;
    int mn_min = 4, mn_max = 64;  // PurityBounds row range
    std::uint64_t seed = 0;
};

SweepSpec sweep_spec_from_json(const nlohmann::json& j);
// figure1, figure3, figure4, figure5, figure6, figure7
SweepSpec preset_sweep(const std::string& name);
std::vector<std::string> preset_names();

// One evaluated criterion column.
struct SweepValue {
    std::string status;  // AS | notAS | undet | CP | notCP | pos | notpos
    double margin = 0.0;
};

struct SweepCell {
    std::vector<double> point;       // axis values, row-major order
    std::vector<SweepValue> values;  // one per requested criterion
    std::string deciding;            // dispatcher's deciding criterion
    double deciding_margin = 0.0;
};

// Criterion registry used by the sweep and exposed for tests; throws on an
// id the family cannot support.
SweepValue evaluate_criterion(const std::string& id, const ChannelSpec& c, const Partition& part);

std::vector<SweepCell> run_sweep_cells(const SweepSpec& spec);

enum class SweepFormat { Csv, Json };

// Deterministic: identical (spec, seed) pairs produce byte-identical output.
void run_sweep(const SweepSpec& spec, std::ostream& out, SweepFormat format);

}  // namespace absep
