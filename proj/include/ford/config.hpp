#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ford/jsonio.hpp"
#include "ford/moebius.hpp"

namespace ford {

// one-parameter generator family: gamma depends on eps (directly or through
// a target tunnel length with a safety factor)
struct FamilySpec {
  std::optional<double> eps;
  std::optional<double> target_R;
  double safety = 0.5;
  bool operator==(const FamilySpec&) const = default;
};

struct SweepSpec {
  std::string parameter = "t_alpha";  // "t_alpha" | "eps"
  std::vector<double> values;         // explicit list, or generated from:
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> steps;
  bool log = false;
  bool operator==(const SweepSpec&) const = default;
};

struct ScenarioConfig {
  std::optional<FamilySpec> family;               // exactly one of these two
  std::optional<std::array<complexd, 4>> matrix;  // explicit (a, b, c, d)
  complexd t_alpha{20.0, 0.0};
  complexd t_beta{0.0, 20.0};
  std::optional<complexd> base_corner;
  int max_word_len = 6;
  std::optional<double> window_pad;
  int oracle_grid = 0;  // 0 disables the sampling cross-check
  std::optional<double> tie_tol;
  std::optional<SweepSpec> sweep;
  bool operator==(const ScenarioConfig&) const = default;
};

// throws MalformedInput with a description of the first violated rule
void validate_config(const ScenarioConfig& cfg);

ScenarioConfig parse_config(const std::string& json_text);
void write_config(JsonWriter& w, const ScenarioConfig& cfg);
std::string serialize_config(const ScenarioConfig& cfg);

double family_eps(const FamilySpec& fam);
MoebiusMap family_generator(double eps);
MoebiusMap config_generator(const ScenarioConfig& cfg);
// tr(gamma) in closed form (i*sqrt(eps)) for family configs, nullopt for raw
// matrices.  Recomputing the family trace from the stored entries cancels
// two O(1/sqrt(eps)) terms and destroys the eps-scale information that the
// power recurrence needs at small eps.
std::optional<complexd> config_trace(const ScenarioConfig& cfg);

// explicit values, or the generated (log-)linear ramp from/to/steps
std::vector<double> sweep_values(const SweepSpec& sweep);

}  // namespace ford
