#include "ford/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "ford/errors.hpp"
#include "ford/homology.hpp"

namespace ford {

FordAnalysis run_analysis(const ScenarioConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  validate_config(cfg);

  FordAnalysis an;
  an.config = cfg;
  an.gamma = config_generator(cfg);
  an.lattice = CuspLattice(cfg.t_alpha, cfg.t_beta);
  an.domain = cfg.base_corner ? VerticalDomain(an.lattice, *cfg.base_corner)
                              : VerticalDomain(an.lattice);
  const std::optional<complexd> tr = config_trace(cfg);
  an.candidates = enumerate_candidates(an.gamma, an.domain, cfg.max_word_len,
                                       cfg.window_pad, tr);
  an.verdicts = classify_visibility(an.candidates, an.domain);
  an.edges = visible_edges(an.candidates, an.verdicts, an.lattice);
  an.certificate = certify(an.candidates, an.verdicts, an.edges, an.gamma,
                           an.lattice, an.domain, tr);
  if (an.certificate.status == CertificateStatus::CertifiedFordDomain) {
    try {
      an.tunnel = tunnel_length(an.certificate);
    } catch (const NotCertified&) {
      an.tunnel.reset();  // certified domain without a power-one face
    }
  }
  if (cfg.oracle_grid > 0) {
    an.oracle_powers =
        visibility_oracle(an.candidates, an.domain, cfg.oracle_grid,
                          cfg.tie_tol.value_or(tol::geom));
    an.oracle_agrees = (*an.oracle_powers == visible_powers(an.verdicts));
  }
  an.elapsed_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return an;
}

SweepResult run_sweep(const ScenarioConfig& cfg) {
  validate_config(cfg);
  if (!cfg.sweep) throw MalformedInput("config has no sweep section");
  SweepResult result;
  result.parameter = cfg.sweep->parameter;

  bool seen_indiscrete = false;
  for (double v : sweep_values(*cfg.sweep)) {
    ScenarioConfig row_cfg = cfg;
    row_cfg.sweep.reset();
    if (cfg.sweep->parameter == "t_alpha") {
      row_cfg.t_alpha = v * cfg.t_alpha / std::abs(cfg.t_alpha);
    } else {
      row_cfg.family = FamilySpec{v, std::nullopt, cfg.family->safety};
    }

    SweepRow row;
    row.parameter = v;
    try {
      const FordAnalysis an = run_analysis(row_cfg);
      row.status = an.certificate.status;
      if (an.tunnel) row.tunnel_len = an.tunnel->length;
      if (row.status == CertificateStatus::Inconclusive)
        row.note = an.certificate.detail;
    } catch (const Error& e) {
      row.status = CertificateStatus::Inconclusive;
      row.note = e.what();
    }

    if (row.status == CertificateStatus::CertifiedIndiscrete)
      seen_indiscrete = true;
    if (seen_indiscrete &&
        row.status == CertificateStatus::CertifiedFordDomain) {
      row.status = CertificateStatus::Inconclusive;
      row.note =
          "downgraded: certification recurred after indiscreteness along a "
          "monotone path";
      row.tunnel_len.reset();
    }
    result.rows.push_back(std::move(row));
  }

  for (std::size_t i = 1; i < result.rows.size(); ++i)
    result.rows[i].transition =
        result.rows[i].status != result.rows[i - 1].status;
  for (const auto& row : result.rows) {
    if (row.status == CertificateStatus::CertifiedIndiscrete) {
      if (!result.first_indiscrete) result.first_indiscrete = row.parameter;
    } else if (row.status == CertificateStatus::CertifiedFordDomain &&
               !result.first_indiscrete) {
      result.last_certified = row.parameter;
    }
  }
  return result;
}

namespace {

void write_word(JsonWriter& w, const GroupWord& word) {
  w.begin_object();
  w.field("word", word.str());
  w.field("power", word.power);
  w.key("shift").begin_array().value(word.shift[0]).value(word.shift[1]);
  w.end_array();
  w.end_object();
}

void write_map(JsonWriter& w, const MoebiusMap& m) {
  w.begin_array();
  w.value(m.a);
  w.value(m.b);
  w.value(m.c);
  w.value(m.d);
  w.end_array();
}

void write_certificate(JsonWriter& w, const FordCertificate& cert) {
  w.begin_object();
  w.field("verdict", to_string(cert.status));
  w.field("detail", cert.detail);
  w.field("tau", cert.tau);
  w.field("max_radius", cert.max_radius);
  w.field("minimally_parabolic", cert.minimally_parabolic);

  w.key("indiscreteness");
  if (cert.indiscreteness) {
    const auto& ind = *cert.indiscreteness;
    w.begin_object();
    w.key("word");
    write_word(w, ind.word);
    w.field("radius", ind.radius);
    w.field("tau", ind.tau);
    w.field("escalation", ind.escalation);
    w.end_object();
  } else {
    w.raw_number("null");
  }

  w.key("faces").begin_array();
  for (const auto& f : cert.faces) {
    w.begin_object();
    w.key("word");
    write_word(w, f.word);
    w.field("center", f.center);
    w.field("radius", f.radius);
    w.field("witness", f.witness);
    w.field("witness_margin", f.witness_margin);
    w.field("exposure_area", f.exposure_area);
    w.field("paired", f.paired);
    if (f.paired) {
      w.key("partner");
      write_word(w, f.partner);
      w.field("partner_center", f.partner_center);
      w.field("partner_radius", f.partner_radius);
      w.field("partner_witness", f.partner_witness);
      w.field("partner_witness_margin", f.partner_margin);
      w.field("partner_exposure_area", f.partner_exposure_area);
    }
    w.end_object();
  }
  w.end_array();

  w.key("cycles").begin_array();
  for (const auto& c : cert.cycles) {
    w.begin_object();
    w.key("orbits").begin_array();
    for (int o : c.orbit_sequence) w.value(o);
    w.end_array();
    w.key("leave_words").begin_array();
    for (const auto& word : c.leave_words) write_word(w, word);
    w.end_array();
    w.key("closing_shift")
        .begin_array()
        .value(c.closing_shift[0])
        .value(c.closing_shift[1]);
    w.end_array();
    w.key("monodromy");
    write_map(w, c.monodromy);
    w.field("monodromy_error", c.monodromy_error);
    w.field("angle_sum", c.angle_sum);
    w.field("closed", c.closed);
    w.field("monodromy_ok", c.monodromy_ok);
    w.field("angle_ok", c.angle_ok);
    w.field("note", c.note);
    w.end_object();
  }
  w.end_array();

  w.key("tangencies").begin_array();
  for (const auto& t : cert.tangencies) {
    w.begin_object();
    w.key("word_a");
    write_word(w, t.word_a);
    w.key("word_b");
    write_word(w, t.word_b);
    w.field("point", t.point);
    w.field("internal", t.internal);
    w.end_object();
  }
  w.end_array();

  w.end_object();
}

}  // namespace

std::string report_json(const FordAnalysis& an) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", "ford-analysis/1");
  w.key("config");
  write_config(w, an.config);
  w.field("tau", an.certificate.tau);
  w.field("max_radius", an.certificate.max_radius);
  w.field("enumerated", static_cast<long long>(an.candidates.size()));

  w.key("visibility").begin_array();
  for (std::size_t i = 0; i < an.candidates.size(); ++i) {
    const auto& c = an.candidates[i];
    const auto& v = an.verdicts[i];
    w.begin_object();
    w.field("word", c.word.str());
    w.field("power", c.word.power);
    w.key("shift").begin_array().value(c.word.shift[0]).value(c.word.shift[1]);
    w.end_array();
    w.field("center", c.sphere.center);
    w.field("radius", c.sphere.radius);
    w.field("status", v.visible ? "Visible" : "Invisible");
    w.field("exposure_area", v.exposure_area);
    w.key("witness");
    if (v.witness)
      w.value(*v.witness);
    else
      w.raw_number("null");
    w.field("witness_margin", v.witness_margin);
    w.end_object();
  }
  w.end_array();

  w.key("edges").begin_array();
  for (const auto& e : an.edges) {
    w.begin_object();
    w.key("word_a");
    write_word(w, e.word_a);
    w.key("word_b");
    write_word(w, e.word_b);
    w.key("plane").begin_object();
    w.field("normal", e.plane.normal);
    w.field("offset", e.plane.offset);
    w.end_object();
    w.key("endpoints").begin_array();
    w.value(e.endpoint1);
    w.value(e.endpoint2);
    w.end_array();
    w.field("arc_center", e.arc_center);
    w.field("arc_radius", e.arc_radius);
    w.field("witness_base", e.witness_base);
    w.field("witness_height", e.witness_height);
    w.field("dihedral", e.dihedral);
    w.field("translates", e.translates);
    w.end_object();
  }
  w.end_array();

  w.key("certificate");
  write_certificate(w, an.certificate);

  w.key("tunnel");
  if (an.tunnel) {
    w.begin_object();
    w.field("horoball_height", an.tunnel->horoball_height);
    w.field("sphere_top", an.tunnel->sphere_top);
    w.field("length", an.tunnel->length);
    w.field("lower_bound", an.tunnel->lower_bound_flag);
    w.end_object();
  } else {
    w.raw_number("null");
  }

  w.key("oracle");
  if (an.oracle_powers) {
    w.begin_object();
    w.field("grid", an.config.oracle_grid);
    w.key("powers").begin_array();
    for (int p : *an.oracle_powers) w.value(p);
    w.end_array();
    w.field("agrees", an.oracle_agrees);
    w.end_object();
  } else {
    w.raw_number("null");
  }

  w.end_object();
  return w.take();
}

std::string sweep_json(const SweepResult& sweep, const ScenarioConfig& cfg) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", "ford-sweep/1");
  w.key("config");
  write_config(w, cfg);
  w.field("parameter", sweep.parameter);
  w.key("rows").begin_array();
  for (const auto& row : sweep.rows) {
    w.begin_object();
    w.field("parameter", row.parameter);
    w.field("verdict", to_string(row.status));
    w.key("tunnel_length");
    if (row.tunnel_len)
      w.value(*row.tunnel_len);
    else
      w.raw_number("null");
    w.field("transition", row.transition);
    w.field("note", row.note);
    w.end_object();
  }
  w.end_array();
  w.key("bracket");
  if (sweep.first_indiscrete) {
    w.begin_object();
    w.key("last_certified");
    if (sweep.last_certified)
      w.value(*sweep.last_certified);
    else
      w.raw_number("null");
    w.field("first_indiscrete", *sweep.first_indiscrete);
    w.end_object();
  } else {
    w.raw_number("null");
  }
  w.end_object();
  return w.take();
}

std::string homology_json(const std::string& input_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input_json);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("homology input is not valid JSON: ") +
                         e.what());
  }
  if (!j.is_object() || !j.contains("classes"))
    throw EmptyInput("homology input needs a \"classes\" array");
  std::vector<HomologyClass> classes;
  try {
    for (const auto& row : j.at("classes")) {
      if (!row.is_array() || row.size() != 2)
        throw MalformedInput("each class must be an [a, b] pair");
      classes.push_back(
          {row[0].get<long long>(), row[1].get<long long>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad class entry: ") + e.what());
  }
  bigint k = 0;
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer() || j.at("k").get<long long>() < 0)
      throw MalformedInput("k must be a nonnegative integer");
    k = j.at("k").get<long long>();
  }

  bool needs_change = false;
  for (const auto& g : classes)
    if (g.a == 0 && g.b != 0) needs_change = true;
  BasisChange bc;
  if (needs_change) bc = change_basis(classes);
  const auto& effective = needs_change ? bc.transformed : classes;

  const HomologyPlan plan = build_plan(effective);
  const KernelBasis kb = kernel_basis(plan, k);

  JsonWriter w;
  w.begin_object();
  w.field("schema", "ford-homology/1");
  w.key("input_classes").begin_array();
  for (const auto& g : classes) {
    w.begin_array().value(static_cast<long long>(g.a));
    w.value(static_cast<long long>(g.b));
    w.end_array();
  }
  w.end_array();
  w.key("basis_change");
  if (needs_change) {
    w.begin_object();
    w.key("U").begin_array();
    for (const auto& row : bc.U) {
      w.begin_array().value(row[0]).value(row[1]);
      w.end_array();
    }
    w.end_array();
    w.field("note", "applied so every first coordinate is nonzero");
    w.end_object();
  } else {
    w.raw_number("null");
  }
  w.key("classes").begin_array();
  for (const auto& g : plan.classes) {
    w.begin_array().value(static_cast<long long>(g.a));
    w.value(static_cast<long long>(g.b));
    w.end_array();
  }
  w.end_array();
  w.field("discarded_zero", plan.discarded_zero);
  w.field("m", plan.m);
  w.key("n").raw_number(plan.n.str());
  w.key("c").begin_array();
  for (const auto& ci : plan.c) w.raw_number(ci.str());
  w.end_array();
  w.key("images").begin_array();
  for (const auto& im : plan.images) w.raw_number(im.str());
  w.end_array();
  w.key("gcds").begin_array();
  for (const auto& g : plan.gcds) w.raw_number(g.str());
  w.end_array();
  w.field("phi", "(a, b) -> (2*m*a - b) mod n");
  w.key("surjectivity_witness").begin_object();
  w.key("class").begin_array().value(1LL).value(2LL * plan.m - 1);
  w.end_array();
  w.field("image", 1);
  w.end_object();
  w.key("kernel_basis").begin_array();
  w.begin_array().raw_number(kb.v1[0].str()).raw_number(kb.v1[1].str());
  w.end_array();
  w.begin_array().raw_number(kb.v2[0].str()).raw_number(kb.v2[1].str());
  w.end_array();
  w.end_array();
  w.key("k").raw_number(k.str());
  w.key("determinant").raw_number(plan.n.str());
  w.end_object();
  return w.take();
}

}  // namespace ford
