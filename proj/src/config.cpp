#include "ford/config.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "ford/errors.hpp"
#include "ford/tunnel.hpp"

namespace ford {

namespace {

using nlohmann::json;

complexd parse_complex(const json& j, const char* what) {
  if (j.is_number()) return complexd(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw MalformedInput(std::string(what) +
                         " must be a number or an [re, im] pair");
  return complexd(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.family.has_value() == cfg.matrix.has_value())
    throw MalformedInput(
        "config needs exactly one generator section: \"family\" or "
        "\"matrix\"");
  if (cfg.family) {
    if (cfg.family->eps.has_value() == cfg.family->target_R.has_value())
      throw MalformedInput(
          "family needs exactly one of \"eps\" or \"target_R\"");
    if (cfg.family->eps && !(*cfg.family->eps > 0.0))
      throw MalformedInput("family eps must be positive");
    if (cfg.family->target_R && !(*cfg.family->target_R > 0.0))
      throw MalformedInput("family target_R must be positive");
    if (!(cfg.family->safety > 0.0 && cfg.family->safety < 1.0))
      throw MalformedInput("family safety must lie in (0, 1)");
  }
  if (cfg.max_word_len < 1)
    throw MalformedInput("max_word_len must be at least 1");
  if (cfg.oracle_grid < 0)
    throw MalformedInput("oracle_grid must be nonnegative");
  if (cfg.window_pad && !(*cfg.window_pad >= 0.0))
    throw MalformedInput("window_pad must be nonnegative");
  if (cfg.tie_tol && !(*cfg.tie_tol > 0.0))
    throw MalformedInput("tie tolerance must be positive");
  CuspLattice(cfg.t_alpha, cfg.t_beta);  // throws if degenerate
  if (cfg.sweep) {
    const auto& s = *cfg.sweep;
    if (s.parameter != "t_alpha" && s.parameter != "eps")
      throw MalformedInput("sweep parameter must be \"t_alpha\" or \"eps\"");
    if (s.parameter == "eps" && !cfg.family)
      throw MalformedInput("eps sweep requires a family generator");
    if (s.values.empty()) {
      if (!s.from || !s.to || !s.steps)
        throw MalformedInput("sweep needs values or from/to/steps");
      if (*s.steps < 2) throw MalformedInput("sweep steps must be at least 2");
      if (s.log && !(*s.from > 0.0 && *s.to > 0.0))
        throw MalformedInput("log sweep endpoints must be positive");
    } else if (s.values.size() > 1) {
      const bool increasing = s.values.back() > s.values.front();
      for (std::size_t i = 1; i < s.values.size(); ++i) {
        const bool up = s.values[i] > s.values[i - 1];
        if (up != increasing || s.values[i] == s.values[i - 1])
          throw MalformedInput("sweep values must be strictly monotone");
      }
    }
    for (double v : sweep_values(s))
      if (!(v > 0.0))
        throw MalformedInput("sweep values must stay positive");
  }
}

ScenarioConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedInput("config must be a JSON object");

  ScenarioConfig cfg;
  try {
    if (j.contains("family")) {
      const auto& f = j.at("family");
      FamilySpec fam;
      if (f.contains("eps")) fam.eps = f.at("eps").get<double>();
      if (f.contains("target_R")) fam.target_R = f.at("target_R").get<double>();
      if (f.contains("safety")) fam.safety = f.at("safety").get<double>();
      cfg.family = fam;
    }
    if (j.contains("matrix")) {
      const auto& m = j.at("matrix");
      if (!m.is_array() || m.size() != 4)
        throw MalformedInput("matrix must be [a, b, c, d]");
      std::array<complexd, 4> entries;
      for (int i = 0; i < 4; ++i) entries[i] = parse_complex(m[i], "matrix entry");
      cfg.matrix = entries;
    }
    if (j.contains("lattice")) {
      const auto& l = j.at("lattice");
      if (l.contains("t_alpha"))
        cfg.t_alpha = parse_complex(l.at("t_alpha"), "t_alpha");
      if (l.contains("t_beta"))
        cfg.t_beta = parse_complex(l.at("t_beta"), "t_beta");
    }
    if (j.contains("base_corner"))
      cfg.base_corner = parse_complex(j.at("base_corner"), "base_corner");
    if (j.contains("max_word_len"))
      cfg.max_word_len = j.at("max_word_len").get<int>();
    if (j.contains("window_pad"))
      cfg.window_pad = j.at("window_pad").get<double>();
    if (j.contains("oracle_grid"))
      cfg.oracle_grid = j.at("oracle_grid").get<int>();
    if (j.contains("tol")) cfg.tie_tol = j.at("tol").get<double>();
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      SweepSpec sw;
      if (s.contains("parameter")) sw.parameter = s.at("parameter").get<std::string>();
      if (s.contains("values"))
        sw.values = s.at("values").get<std::vector<double>>();
      if (s.contains("from")) sw.from = s.at("from").get<double>();
      if (s.contains("to")) sw.to = s.at("to").get<double>();
      if (s.contains("steps")) sw.steps = s.at("steps").get<int>();
      if (s.contains("log")) sw.log = s.at("log").get<bool>();
      cfg.sweep = sw;
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("config field has the wrong type: ") +
                         e.what());
  }
  validate_config(cfg);
  return cfg;
}

void write_config(JsonWriter& w, const ScenarioConfig& cfg) {
  w.begin_object();
  if (cfg.family) {
    w.key("family").begin_object();
    if (cfg.family->eps) w.field("eps", *cfg.family->eps);
    if (cfg.family->target_R) w.field("target_R", *cfg.family->target_R);
    w.field("safety", cfg.family->safety);
    w.end_object();
  }
  if (cfg.matrix) {
    w.key("matrix").begin_array();
    for (const auto& e : *cfg.matrix) w.value(e);
    w.end_array();
  }
  w.key("lattice").begin_object();
  w.field("t_alpha", cfg.t_alpha);
  w.field("t_beta", cfg.t_beta);
  w.end_object();
  if (cfg.base_corner) w.field("base_corner", *cfg.base_corner);
  w.field("max_word_len", cfg.max_word_len);
  if (cfg.window_pad) w.field("window_pad", *cfg.window_pad);
  w.field("oracle_grid", cfg.oracle_grid);
  if (cfg.tie_tol) w.field("tol", *cfg.tie_tol);
  if (cfg.sweep) {
    const auto& s = *cfg.sweep;
    w.key("sweep").begin_object();
    w.field("parameter", s.parameter);
    if (!s.values.empty()) {
      w.key("values").begin_array();
      for (double v : s.values) w.value(v);
      w.end_array();
    }
    if (s.from) w.field("from", *s.from);
    if (s.to) w.field("to", *s.to);
    if (s.steps) w.field("steps", *s.steps);
    w.field("log", s.log);
    w.end_object();
  }
  w.end_object();
}

std::string serialize_config(const ScenarioConfig& cfg) {
  JsonWriter w;
  write_config(w, cfg);
  return w.take();
}

double family_eps(const FamilySpec& fam) {
  if (fam.eps) return *fam.eps;
  return epsilon_for_target(*fam.target_R, fam.safety);
}

MoebiusMap family_generator(double eps) {
  if (!(eps > 0.0)) throw MalformedInput("family eps must be positive");
  const double s = std::sqrt(eps);
  const complexd i(0.0, 1.0);
  // det is exactly 1 in closed form; make() would re-derive it from the
  // entries, where ad and bc both blow up like 1/eps and cancel
  return MoebiusMap::make_unit(i * (1.0 + eps) / s, i / s, -i / s, -i / s);
}

MoebiusMap config_generator(const ScenarioConfig& cfg) {
  if (cfg.family) return family_generator(family_eps(*cfg.family));
  const auto& m = *cfg.matrix;
  return MoebiusMap::make(m[0], m[1], m[2], m[3]);
}

std::optional<complexd> config_trace(const ScenarioConfig& cfg) {
  if (!cfg.family) return std::nullopt;
  return complexd(0.0, std::sqrt(family_eps(*cfg.family)));
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
  if (!sweep.values.empty()) return sweep.values;
  if (!sweep.from || !sweep.to || !sweep.steps)
    throw MalformedInput("sweep needs values or from/to/steps");
  const int n = *sweep.steps;
  std::vector<double> out;
  out.reserve(n);
  if (sweep.log) {
    const double la = std::log(*sweep.from), lb = std::log(*sweep.to);
    for (int i = 0; i < n; ++i)
      out.push_back(std::exp(la + (lb - la) * i / (n - 1)));
  } else {
    for (int i = 0; i < n; ++i)
      out.push_back(*sweep.from + (*sweep.to - *sweep.from) * i / (n - 1));
  }
  return out;
}

}  // namespace ford
