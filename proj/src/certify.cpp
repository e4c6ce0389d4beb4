#include "ford/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ford/errors.hpp"

namespace ford {

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::CertifiedFordDomain:
      return "CertifiedFordDomain";
    case CertificateStatus::CertifiedIndiscrete:
      return "CertifiedIndiscrete";
    case CertificateStatus::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<IndiscretenessWitness> indiscreteness_test(
    const std::vector<WordElement>& candidates, const CuspLattice& lat) {
  const double tau = lat.min_translation();
  const WordElement* worst = nullptr;
  for (const auto& c : candidates)
    if (!worst || c.sphere.radius > worst->sphere.radius) worst = &c;
  if (!worst || worst->sphere.radius <= tau + tol::geom) return std::nullopt;
  IndiscretenessWitness w;
  w.word = worst->word;
  w.radius = worst->sphere.radius;
  w.tau = tau;
  w.escalation = w.radius * w.radius / tau;
  return w;
}

namespace {

constexpr double kMatchTol = 1e-10;  // face matching in the cycle trace
constexpr int kMaxCycleSteps = 64;

GroupWord face_word(const EdgeOrbit& e, int f) {
  return f == 0 ? e.word_a : e.word_b;
}
complexd face_center(const EdgeOrbit& e, int f) {
  return f == 0 ? e.center_a : e.center_b;
}
double face_radius(const EdgeOrbit& e, int f) {
  return f == 0 ? e.radius_a : e.radius_b;
}

struct ArrivalMatch {
  int orbit = -1;
  std::array<int, 2> shift{0, 0};
  int enter_face = 0;
  double err = 0.0;
};

// Locate the edge orbit (and lattice shift) whose face spheres coincide with
// the two arrival spheres.  A1 is the sphere entered through (image of the
// face we left), A2 the companion.
std::vector<ArrivalMatch> match_arrival(const std::vector<EdgeOrbit>& edges,
                                        const CuspLattice& lat,
                                        const IsometricSphere& A1,
                                        const IsometricSphere& A2) {
  std::vector<ArrivalMatch> hits;
  for (int o = 0; o < static_cast<int>(edges.size()); ++o) {
    for (int ef = 0; ef < 2; ++ef) {
      const auto [x, y] = lat.coords(A1.center - face_center(edges[o], ef));
      const int jj = static_cast<int>(std::lround(x));
      const int kk = static_cast<int>(std::lround(y));
      const complexd tv = lat.translation(jj, kk);
      const double err =
          std::abs(A1.center - (face_center(edges[o], ef) + tv)) +
          std::abs(A1.radius - face_radius(edges[o], ef)) +
          std::abs(A2.center - (face_center(edges[o], 1 - ef) + tv)) +
          std::abs(A2.radius - face_radius(edges[o], 1 - ef));
      if (err <= kMatchTol) hits.push_back({o, {jj, kk}, ef, err});
    }
  }
  return hits;
}

// Trace the cycle through (orbit, leaving face): repeatedly apply the leaving
// face's pairing map, identify the landing edge among the enumerated orbits,
// and continue through its other face until the starting flag recurs.
EdgeCycle trace_cycle(const std::vector<EdgeOrbit>& edges,
                      const MoebiusMap& gamma, const CuspLattice& lat,
                      int orbit0, int face0,
                      std::set<std::pair<int, int>>& consumed,
                      std::optional<complexd> trace) {
  EdgeCycle cyc;
  int o = orbit0, f = face0;
  std::array<int, 2> s{0, 0};

  for (int step = 0; step < kMaxCycleSteps; ++step) {
    consumed.insert({o, f});
    GroupWord leave = face_word(edges[o], f);
    leave.shift[0] += s[0];
    leave.shift[1] += s[1];
    cyc.orbit_sequence.push_back(o);
    cyc.leave_words.push_back(leave);
    cyc.angle_sum += edges[o].dihedral;

    // the arrival spheres are exact words: leaving g = g^p t(s_g) through
    // S_g lands on S_{g^-1}, whose bottom row (hence sphere) is that of
    // g^-p, and the companion face h = g^q t(s_h) lands on
    // S_{h g^-1} = S_{g^q t(s_h - s_g) g^-p}.  Evaluating these as words
    // keeps the trace usable at tiny eps, where stepwise composition noise
    // exceeds the face separations.
    GroupWord hw = face_word(edges[o], 1 - f);
    hw.shift[0] += s[0];
    hw.shift[1] += s[1];
    IsometricSphere A1, A2;
    try {
      A1 = isometric_sphere(power(gamma, -leave.power, trace));
      const GroupWord mid{hw.power,
                          {hw.shift[0] - leave.shift[0],
                           hw.shift[1] - leave.shift[1]}};
      A2 = isometric_sphere(
          evaluate_product({mid, {-leave.power, {0, 0}}}, gamma, lat, trace));
    } catch (const Error& e) {
      cyc.note = std::string("cycle step degenerated: ") + e.what();
      return cyc;
    }

    const auto hits = match_arrival(edges, lat, A1, A2);
    if (hits.size() != 1) {
      cyc.note = hits.empty()
                     ? "cycle left the enumerated edge set (cutoff too small "
                       "or not a Ford domain)"
                     : "ambiguous edge match in cycle trace";
      return cyc;
    }
    o = hits[0].orbit;
    s = hits[0].shift;
    consumed.insert({o, hits[0].enter_face});
    f = 1 - hits[0].enter_face;

    if (o == orbit0 && f == face0) {
      cyc.closed = true;
      cyc.closing_shift = s;
      // t(-s) g_n ... g_1, evaluated as one word so pure-power relators
      // collapse exactly
      std::vector<GroupWord> relator;
      relator.push_back({0, {-s[0], -s[1]}});
      relator.insert(relator.end(), cyc.leave_words.rbegin(),
                     cyc.leave_words.rend());
      cyc.monodromy = evaluate_product(relator, gamma, lat, trace);
      cyc.monodromy_error =
          distance_mod_sign(cyc.monodromy, MoebiusMap::identity());
      cyc.monodromy_ok = cyc.monodromy_error <= tol::geom;
      cyc.angle_ok = std::abs(cyc.angle_sum - 2.0 * M_PI) <= tol::angle;
      if (!cyc.monodromy_ok)
        cyc.note = "cycle monodromy is not the identity";
      else if (!cyc.angle_ok)
        cyc.note = "cycle dihedral angles do not sum to 2*pi";
      return cyc;
    }
  }
  cyc.note = "edge cycle failed to close";
  return cyc;
}

}  // namespace

FordCertificate certify(const std::vector<WordElement>& candidates,
                        const std::vector<VisibilityVerdict>& verdicts,
                        const std::vector<EdgeOrbit>& edges,
                        const MoebiusMap& gamma, const CuspLattice& lat,
                        const VerticalDomain& domain,
                        std::optional<complexd> trace) {
  (void)domain;
  FordCertificate cert;
  cert.tau = lat.min_translation();
  for (const auto& c : candidates)
    cert.max_radius = std::max(cert.max_radius, c.sphere.radius);

  cert.indiscreteness = indiscreteness_test(candidates, lat);
  if (cert.indiscreteness) {
    cert.status = CertificateStatus::CertifiedIndiscrete;
    cert.detail =
        "isometric sphere " + cert.indiscreteness->word.str() + " has radius " +
        std::to_string(cert.indiscreteness->radius) +
        " exceeding the shortest lattice translation " +
        std::to_string(cert.indiscreteness->tau);
    cert.minimally_parabolic = "not_applicable";
    return cert;
  }

  const auto vp = visible_powers(verdicts);
  if (vp.empty()) {
    cert.status = CertificateStatus::Inconclusive;
    cert.detail = "no visible candidate spheres at this cutoff";
    cert.minimally_parabolic = "not_applicable";
    return cert;
  }

  std::set<int> cand_powers;
  for (const auto& c : candidates) cand_powers.insert(c.word.power);
  for (int p : vp)
    if (!cand_powers.count(-p))
      throw MalformedInput("visible face " + GroupWord{p, {0, 0}}.str() +
                           " has no inverse among candidates; increase "
                           "max_word_len");

  // spine faces: coset pairs {p, -p}
  auto power_data = [&](int q, SpineFace& face, bool primary_side) {
    // geometry from the earliest candidate of this power, shifted to (0,0)
    const WordElement* rep = nullptr;
    for (const auto& c : candidates)
      if (c.word.power == q && !rep) rep = &c;
    const VisibilityVerdict* best = nullptr;
    for (const auto& v : verdicts)
      if (v.word.power == q && v.visible &&
          (!best || v.witness_margin > best->witness_margin))
        best = &v;
    double area = 0.0;
    for (const auto& v : verdicts)
      if (v.word.power == q && v.visible) area += v.exposure_area;
    // a right shift g*t(s) carries S_g to S_g - t(s), so the (0,0)-coset
    // sphere sits at the representative's center plus t(s)
    const complexd back =
        rep ? lat.translation(rep->word.shift[0], rep->word.shift[1])
            : complexd(0.0, 0.0);
    const complexd center = rep ? rep->sphere.center + back : complexd(0, 0);
    const double radius = rep ? rep->sphere.radius : 0.0;
    complexd witness(0.0, 0.0);
    double margin = 0.0;
    if (best && best->witness) {
      witness = *best->witness +
                lat.translation(best->word.shift[0], best->word.shift[1]);
      margin = best->witness_margin;
    }
    if (primary_side) {
      face.word = GroupWord{q, {0, 0}};
      face.center = center;
      face.radius = radius;
      face.witness = witness;
      face.witness_margin = margin;
      face.exposure_area = area;
    } else {
      face.partner = GroupWord{q, {0, 0}};
      face.partner_center = center;
      face.partner_radius = radius;
      face.partner_witness = witness;
      face.partner_margin = margin;
      face.partner_exposure_area = area;
    }
  };

  std::set<int> positive;
  for (int p : vp) positive.insert(std::abs(p));
  std::vector<std::string> unpaired;
  for (int p : positive) {
    const bool vis_pos = std::binary_search(vp.begin(), vp.end(), p);
    const bool vis_neg = std::binary_search(vp.begin(), vp.end(), -p);
    SpineFace face;
    face.paired = vis_pos && vis_neg;
    const int primary = vis_pos ? p : -p;
    power_data(primary, face, true);
    if (face.paired) power_data(-primary, face, false);
    if (!face.paired) unpaired.push_back(face.word.str());
    cert.faces.push_back(face);
  }

  // edge cycles: every flag (orbit, face) belongs to exactly one cycle; a
  // trace consumes both flags of each edge it visits
  std::set<std::pair<int, int>> consumed;
  bool cycles_ok = true;
  std::string cycle_note;
  for (int o = 0; o < static_cast<int>(edges.size()); ++o) {
    for (int f = 0; f < 2; ++f) {
      if (consumed.count({o, f})) continue;
      EdgeCycle cyc = trace_cycle(edges, gamma, lat, o, f, consumed, trace);
      if (!(cyc.closed && cyc.monodromy_ok && cyc.angle_ok)) {
        cycles_ok = false;
        if (cycle_note.empty())
          cycle_note = cyc.note.empty() ? "edge cycle check failed" : cyc.note;
      }
      cert.cycles.push_back(std::move(cyc));
    }
  }

  cert.edges = edges;
  cert.tangencies = tangency_report(candidates, verdicts, lat);

  if (!unpaired.empty()) {
    cert.status = CertificateStatus::Inconclusive;
    cert.detail = "unpaired visible face(s): ";
    for (std::size_t i = 0; i < unpaired.size(); ++i)
      cert.detail += (i ? ", " : "") + unpaired[i];
    cert.minimally_parabolic = "not_applicable";
    return cert;
  }
  if (!cycles_ok) {
    cert.status = CertificateStatus::Inconclusive;
    cert.detail = cycle_note;
    cert.minimally_parabolic = "not_applicable";
    return cert;
  }

  cert.status = CertificateStatus::CertifiedFordDomain;
  cert.detail = "face pairing and edge cycles verified";
  cert.minimally_parabolic =
      cert.tangencies.empty() ? "certified" : "undetermined";
  return cert;
}

}  // namespace ford
