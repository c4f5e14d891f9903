#pragma once

#include <stdexcept>
#include <string>

#include "quivercount/quiver.hpp"

namespace qc {

class QuiverParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed job input: quiver with stability and (optional) dimension vector.
struct QuiverJob {
    Quiver quiver;
    Stability theta;
    DimVector dim;
    bool has_dim = false;
};

/// JSON format:
///   {"vertices": ["i","j"],
///    "arrows":   [["i","j"],["i","j"]],
///    "theta":    {"i":1,"j":0},        // optional, defaults to 0
///    "dim":      {"i":1,"j":1}}        // optional, can come from --dim
/// Arrows are listed with multiplicity; unknown keys are rejected.
QuiverJob parse_quiver_text(const std::string& text);
QuiverJob parse_quiver_file(const std::string& path);

/// Flag syntax "i=1,j=2"; every named vertex must exist, unnamed ones get 0.
DimVector parse_dim_override(const std::string& spec, const Quiver& quiver);

}  // namespace qc
