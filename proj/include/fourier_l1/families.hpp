#pragma once

// Named coefficient families used as test instances: explicit finite lists,
// separable geometric decay (with a Poisson-kernel closed form), products of
// one-dimensional sequences and seeded random sparse grids.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/sample_grid.hpp"

namespace fourier_l1 {

struct FiniteEntry {
  int j = 0;
  int k = 0;
  cplx value;
};

/// c_jk from an explicit list; every unlisted index is zero.
struct FiniteFamily {
  std::vector<FiniteEntry> entries;
};

/// c_jk = rx^|j| ry^|k| with 0 <= rx, ry < 1 (0^0 = 1).
struct GeometricFamily {
  double rx = 0.0;
  double ry = 0.0;
};

/// One-dimensional factors of a product family.
struct GeometricSequence {
  double r = 0.0;  // c_k = r^|k|
};
struct FiniteSequence {
  std::vector<std::pair<int, cplx>> values;  // (k, c_k)
};
struct PowerSequence {
  double exponent = 0.0;  // c_k = (1 + |k|)^-exponent
};
using SequenceSpec = std::variant<GeometricSequence, FiniteSequence, PowerSequence>;

/// c_jk = a_j b_k.
struct ProductFamily {
  SequenceSpec x;
  SequenceSpec y;
};

/// Seeded random complex values on |j| <= bound_j, |k| <= bound_k, each
/// position kept with probability `density` and scaled by
/// (1 + |j|)^-decay (1 + |k|)^-decay.
struct RandomSparseFamily {
  std::uint64_t seed = 0;
  int bound_j = 1;
  int bound_k = 1;
  double density = 1.0;
  double decay_exponent = 0.0;
};

using FamilySpec = std::variant<FiniteFamily, GeometricFamily, ProductFamily, RandomSparseFamily>;

/// Throws invalid_argument on out-of-range parameters.
void validate(const FamilySpec& spec);

/// Grid over |j| <= bound_j, |k| <= bound_k; entries of the family outside
/// the requested box are dropped.
CoefficientGrid build(const FamilySpec& spec, int bound_j, int bound_k);

/// The limit function sampled on the torus grid, when known in closed form:
/// geometric families and products of geometric or finite factors use
/// P_r(t) = (1 - r^2) / (1 - 2 r cos t + r^2); finite families are summed
/// directly. Power factors and random families have none.
std::optional<SampleGrid> closed_form(const FamilySpec& spec, int nx, int ny);

/// Smallest box (J, K) whose discarded tail sum_{outside} |c_jk| is at most
/// epsilon, from explicit tail formulas. Finite families return their support.
/// Throws unavailable when no summable bound exists.
std::pair<int, int> reference_truncation(const FamilySpec& spec, double epsilon);

/// Largest |j| and |k| at which the family can be nonzero, if finite.
std::optional<std::pair<int, int>> support_bounds(const FamilySpec& spec);

std::string kind_name(const FamilySpec& spec);

void to_json(nlohmann::json& out, const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& in);

/// Inline shorthand: "geometric:RX,RY", "geometric:R", "zero", or
/// "randomSparse:SEED,BJ,BK,DENSITY,DECAY".
FamilySpec parse_family_shorthand(const std::string& text);

/// Shorthand when the text starts with a known kind, otherwise a JSON file.
FamilySpec parse_family_argument(const std::string& text);

}  // namespace fourier_l1
