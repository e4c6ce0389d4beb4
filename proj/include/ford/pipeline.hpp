#pragma once

#include <optional>
#include <string>

#include "ford/certify.hpp"
#include "ford/config.hpp"
#include "ford/tunnel.hpp"

namespace ford {

struct FordAnalysis {
  ScenarioConfig config;
  MoebiusMap gamma;
  CuspLattice lattice;
  VerticalDomain domain{CuspLattice{}};
  std::vector<WordElement> candidates;
  std::vector<VisibilityVerdict> verdicts;
  std::vector<EdgeOrbit> edges;
  FordCertificate certificate;
  std::optional<TunnelMeasurement> tunnel;
  std::optional<std::vector<int>> oracle_powers;
  bool oracle_agrees = true;
  double elapsed_ms = 0.0;  // stderr diagnostics only; never serialized
};

// enumerate -> classify -> edges -> certify -> measure (+ optional oracle)
FordAnalysis run_analysis(const ScenarioConfig& cfg);

struct SweepRow {
  double parameter = 0.0;
  CertificateStatus status = CertificateStatus::Inconclusive;
  std::optional<double> tunnel_len;
  bool transition = false;
  std::string note;
};

struct SweepResult {
  std::string parameter = "t_alpha";
  std::vector<SweepRow> rows;
  // bracket for the discreteness transition along the path
  std::optional<double> last_certified;
  std::optional<double> first_indiscrete;
};

// One analysis per sweep value.  Along a monotone path a certified row after
// the first certified-indiscrete row contradicts the expected single
// transition; such rows are downgraded to Inconclusive with a note.
SweepResult run_sweep(const ScenarioConfig& cfg);

std::string report_json(const FordAnalysis& analysis);
std::string sweep_json(const SweepResult& sweep, const ScenarioConfig& cfg);

// input: {"classes": [[a, b], ...], "k": optional nonneg integer}
// applies change_basis automatically when some first coordinate is zero
std::string homology_json(const std::string& input_json);

}  // namespace ford
