#pragma once

// DOT and JSON renderings. Output is byte-stable for a given input.

#include <string>

#include "gausswords/carter.hpp"
#include "gausswords/interlacement.hpp"

namespace gauss::io {

inline constexpr const char* kFacesSchema = "gausswords.faces/1";
inline constexpr const char* kEulerSchema = "gausswords.euler/1";
inline constexpr const char* kInterlaceSchema = "gausswords.interlace/1";

/// "p/D" node id of a traversal state.
std::string state_id(const carter::TraversalState& s);

/// One node per state (clustered by face), one edge per left-turn step.
std::string faces_to_dot(const carter::FaceDecomposition& faces);
/// {"schema", "word", "faces": [[{"position", "direction"}, ...], ...]}
std::string faces_to_json(const carter::FaceDecomposition& faces);

std::string euler_to_json(const GaussWord& w, const carter::EulerReport& r);

/// Vertices labelled by crossing index, edges annotated with beta.
std::string interlacement_to_dot(const interlace::InterlacementGraph& g);
/// {"schema", "vertices": [...], "edges": [{"u", "v", "beta", "beta_count"}, ...]}
std::string interlacement_to_json(const interlace::InterlacementGraph& g);

/// Witness of a verdict as text ("label 3", "pair (1, 4)", "cycle 1-2-3-1").
std::string describe_witness(const interlace::PlanarityVerdict& v);

}  // namespace gauss::io
