#ifndef FINSLER_MODEL_IO_HPP
#define FINSLER_MODEL_IO_HPP

#include <optional>
#include <string>

#include "finsler/lie_model.hpp"
#include "finsler/phi_spec.hpp"

namespace finsler {

/// Parsed model file: the Lie-algebra data plus an optional embedded phi.
struct ModelFile {
  LieModel model;
  std::optional<PhiSpec> phi;
};

/// Loads a model from JSON:
///   { "dim": 3, "h": [], "k": [0,1,2],
///     "brackets": [[0,1,2,"1"]],
///     "inner": [[1,0,0],[0,1,0],[0,0,1]],
///     "v": ["0","0","1/4"],
///     "phi": {"family": "square"} }
/// Indices are 0-based. Bracket coefficients and entries of inner/v may be
/// JSON numbers or exact "p/q" strings. For every stored bracket entry
/// (i,j,l,c) with no explicit (j,i,l) entry the antisymmetric completion
/// (j,i,l,-c) is implied; explicit entries are kept verbatim so validation
/// can report deliberately broken files. v may have either dim_k entries
/// (aligned with the "k" list) or dim entries supported on k.
/// Throws std::runtime_error on I/O, syntax or structural problems.
ModelFile load_model_file(const std::string& path);

/// Parses {"family": "square"} or {"family": "custom", "coeffs": ["1","0","1"]}.
PhiSpec parse_phi_json(const std::string& json_text);
PhiSpec load_phi_file(const std::string& path);

}  // namespace finsler

#endif
