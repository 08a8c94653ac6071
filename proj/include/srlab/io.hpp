#pragma once
// JSON for complexes, subdivision structures and reports, and input loading.
//
// Complex:   {"vertices":[…], "facets":[[…],…], "gamma_facets":[[…],…]?, "void":bool?}
// Structure: {"delta": <complex>, "sigma":[{"dim":k, "facets":[[…]], "boundary_facets":[[…]]},…]}

#include <optional>
#include <string>

#include "srlab/verdicts.hpp"

namespace srlab {

// Throws InputError naming the offending field.
RelativeComplex parse_complex_json(const std::string& text);
std::string complex_to_json(const RelativeComplex& psi);
SubdivisionStructure parse_subdivision_json(const std::string& text);

// Sorted keys, two-space indent, trailing newline.
std::string report_to_json(const TheoremReport& r);
TheoremReport report_from_json(const std::string& text);

// sd_simplex_k, sd_two_triangles, sd_boundary_simplex_k.
SubdivisionStructure builtin_structure(const std::string& name);
// (sd Δ^k, sd ∂Δ^k), the subdivided solid simplex with its boundary.
RelativeComplex subdivided_disk(int k);

struct LoadedInput {
  std::string name;
  std::optional<RelativeComplex> complex;
  std::optional<SubdivisionStructure> structure;
};

// "builtin:<name>" or a path to a JSON file holding either shape. Builtin
// names cover builtin_complex, builtin_structure and sd_disk_k.
LoadedInput load_input(const std::string& spec);

}  // namespace srlab
