#pragma once

// Fan-file ingestion (JSON) and artifact emission: versioned JSON documents
// and a deterministic SVG rendering of the planar skeleton with the moment
// polytope overlaid.

#include "tmc/cech.hpp"
#include "tmc/exact.hpp"
#include "tmc/lattice.hpp"
#include "tmc/tropical.hpp"

#include <optional>
#include <string>

namespace tmc {

struct FanFile {
  Fan fan;
  std::optional<SupportFunction> psi;
};

// {"dim": n, "rays": [[..]], "max_cones": [[..]], "psi": [..]?}; malformed
// JSON or wrong shapes throw std::runtime_error naming the origin and the
// offending location (parser errors carry position info)
FanFile parse_fan_json(const std::string& text, const std::string& origin);
FanFile read_fan_file(const std::string& path);

std::string fan_to_json(const Fan& fan, const std::optional<SupportFunction>& psi);

// exact "p/q" (plain "p" when integral)
std::string rat_str(const Rat& r);

// versioned ("schema": 1) documents; keys sorted, iteration orders fixed, so
// identical inputs give byte-identical output
std::string graded_hom_json(const GradedHom& gh, const Int& euler, bool certified = true);
std::string amoeba_json(const FanoReport& report, const Skeleton* sk);

// plan-view rendering: viewport = bounding box of skeleton and polytope
// vertices padded by one unit, rays clipped at the viewport, coordinates
// printed with four decimals; requires ambient dimension 2
std::string export_svg(const Skeleton& sk, const Polytope& q);

}  // namespace tmc
