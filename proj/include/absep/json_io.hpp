#pragma once

#include <json.hpp>

#include "absep/channels.hpp"
#include "absep/classifier.hpp"
#include "absep/state_criteria.hpp"
#include "absep/witness.hpp"

namespace absep {

inline constexpr const char* kVersion = "0.1.0";

// Matrix dimension cap honoured by all external inputs; overridable through
// the ABSEP_MAX_DIM environment variable.
int max_dim_cap();

// Channel families serialize to {"family": ..., parameters...}.
nlohmann::json channel_to_json(const ChannelSpec& c);
ChannelSpec channel_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json map_verdict_to_json(const MapVerdict& v);
nlohmann::json witness_to_json(const Witness& w);

// Dense complex matrix file: a dimension line, then dim rows of dim
// whitespace-separated "re,im" pairs.
ComplexMatrix read_matrix_file(const std::string& path);

// Comma-separated decreasing-or-not list of weights, normalized check only.
Spectrum parse_spectrum_string(const std::string& text);

}  // namespace absep
