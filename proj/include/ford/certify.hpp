#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ford/visibility.hpp"

namespace ford {

enum class CertificateStatus {
  CertifiedFordDomain,
  CertifiedIndiscrete,
  Inconclusive,
};

std::string to_string(CertificateStatus s);

// Radius test: a sphere radius exceeding the shortest lattice translation
// rules out discreteness.  The escalation value R^2/tau is the radius of the
// conjugated sphere witnessing the blow-up.
struct IndiscretenessWitness {
  GroupWord word;
  double radius = 0.0;
  double tau = 0.0;
  double escalation = 0.0;  // radius^2 / tau
};

std::optional<IndiscretenessWitness> indiscreteness_test(
    const std::vector<WordElement>& candidates, const CuspLattice& lat);

// A coset pair {g, g^-1} of visible faces; geometry for the shift-(0,0)
// representatives.  Exposure areas are summed over windowed translates
// (per-translate areas share the same local unit since radii agree).
struct SpineFace {
  GroupWord word;  // positive power
  complexd center{0.0, 0.0};
  double radius = 1.0;
  complexd witness{0.0, 0.0};
  double witness_margin = 0.0;
  double exposure_area = 0.0;
  bool paired = false;
  GroupWord partner;
  complexd partner_center{0.0, 0.0};
  double partner_radius = 1.0;
  complexd partner_witness{0.0, 0.0};
  double partner_margin = 0.0;
  double partner_exposure_area = 0.0;
};

struct EdgeCycle {
  std::vector<int> orbit_sequence;      // edge orbits visited, in order
  std::vector<GroupWord> leave_words;   // pairing maps applied, in order
  std::array<int, 2> closing_shift{0, 0};
  MoebiusMap monodromy;        // lattice-corrected cycle composition
  double monodromy_error = 0;  // distance to +-identity
  double angle_sum = 0.0;
  bool closed = false;
  bool monodromy_ok = false;
  bool angle_ok = false;
  std::string note;
};

struct FordCertificate {
  CertificateStatus status = CertificateStatus::Inconclusive;
  std::string detail;
  std::optional<IndiscretenessWitness> indiscreteness;
  std::vector<SpineFace> faces;
  std::vector<EdgeOrbit> edges;
  std::vector<EdgeCycle> cycles;
  std::vector<TangencyPair> tangencies;
  // "certified" | "undetermined" | "not_applicable"
  std::string minimally_parabolic = "not_applicable";
  double tau = 0.0;
  double max_radius = 0.0;
};

// Full certification pass: indiscreteness radius test, face pairing, edge
// cycle closure (identity monodromy mod sign, dihedral sum 2*pi), tangency
// audit.  Throws MalformedInput when a visible power's inverse is missing
// from the candidate set (enumeration cutoff too small to even discuss
// pairing); geometric failures degrade to Inconclusive instead.
FordCertificate certify(const std::vector<WordElement>& candidates,
                        const std::vector<VisibilityVerdict>& verdicts,
                        const std::vector<EdgeOrbit>& edges,
                        const MoebiusMap& gamma, const CuspLattice& lat,
                        const VerticalDomain& domain,
                        std::optional<complexd> trace = std::nullopt);

}  // namespace ford
