#include "ford/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "ford/errors.hpp"

namespace ford {

namespace {

double dot(complexd u, complexd v) { return std::real(std::conj(u) * v); }

complexd unitize(complexd v) { return v / std::abs(v); }

// canonical sign for a plane normal: first nonzero of (Re, Im) positive
complexd canonical_normal(complexd n) {
  if (std::real(n) < -tol::entry_zero) return -n;
  if (std::abs(std::real(n)) <= tol::entry_zero && std::imag(n) < 0.0)
    return -n;
  return n;
}

// Burial of sphere i by sphere j, in i's local frame: the set of base points
// where j's hemisphere is at least as high as i's is the closed half-plane
//   Re(conj(nhat) y) <= b,  nhat = (c_j - c_i)/d,
//   b = (r_j^2 - r_i^2 - d^2) / (-2 r_i d)   [kept side is the complement]
// We clip to the *kept* side Re(conj(mhat) y) >= b' with mhat = (c_i - c_j)/d
// and b' = (r_j^2 - r_i^2 - d^2) / (2 r_i d).  b' <= -1 means no burial,
// b' >= 1 means the whole disk is buried.
struct HalfPlane {
  complexd normal;  // unit, kept side is >= offset
  double offset;
  bool whole_disk_buried;
  bool no_op;
};

HalfPlane burial_halfplane(complexd ci, double ri, complexd cj, double rj) {
  const double d = std::abs(cj - ci);
  HalfPlane hp{complexd(1.0, 0.0), -2.0, false, false};
  if (d <= tol::entry_zero) {
    // concentric: the larger sphere buries the smaller outright
    hp.whole_disk_buried = rj > ri;
    hp.no_op = !hp.whole_disk_buried;
    return hp;
  }
  hp.normal = (ci - cj) / d;
  hp.offset = (rj * rj - ri * ri - d * d) / (2.0 * ri * d);
  if (hp.offset >= 1.0) hp.whole_disk_buried = true;
  if (hp.offset <= -1.0) hp.no_op = true;
  return hp;
}

std::array<complexd, 4> ccw_corners(const VerticalDomain& domain) {
  auto cs = domain.corners();
  complexd u = cs[1] - cs[0], v = cs[3] - cs[0];
  if (std::imag(std::conj(u) * v) < 0.0) std::reverse(cs.begin(), cs.end());
  return cs;
}

}  // namespace

double sphere_height(const IsometricSphere& s, complexd x) {
  const double d = std::abs(x - s.center);
  if (d >= s.radius) return 0.0;
  return std::sqrt((s.radius - d) * (s.radius + d));
}

std::pair<double, std::vector<int>> envelope_height(
    const std::vector<IsometricSphere>& spheres, complexd x, double tie_tol) {
  double best = 0.0;
  for (const auto& s : spheres) best = std::max(best, sphere_height(s, x));
  std::vector<int> argmax;
  if (best > 0.0) {
    for (int i = 0; i < static_cast<int>(spheres.size()); ++i)
      if (sphere_height(spheres[i], x) >= best - tie_tol) argmax.push_back(i);
  }
  return {best, argmax};
}

std::vector<VisibilityVerdict> classify_visibility(
    const std::vector<WordElement>& candidates, const VerticalDomain& domain) {
  const auto corners = ccw_corners(domain);
  const int n = static_cast<int>(candidates.size());
  std::vector<VisibilityVerdict> out(n);

  for (int i = 0; i < n; ++i) {
    const auto& si = candidates[i].sphere;
    auto& verdict = out[i];
    verdict.index = i;
    verdict.word = candidates[i].word;

    DiskRegion region;
    // fundamental cell, transported to the local frame
    for (std::size_t e = 0; e < corners.size() && !region.empty(); ++e) {
      const complexd qa = corners[e];
      const complexd qb = corners[(e + 1) % corners.size()];
      const complexd nhat = unitize(complexd(0.0, 1.0) * (qb - qa));
      region.clip(nhat, dot(nhat, qa - si.center) / si.radius);
    }
    // burial half-planes from every other candidate
    for (int j = 0; j < n && !region.empty(); ++j) {
      if (j == i) continue;
      const auto& sj = candidates[j].sphere;
      const auto hp = burial_halfplane(si.center, si.radius, sj.center, sj.radius);
      if (hp.no_op) continue;
      if (hp.whole_disk_buried) {
        region.clip(complexd(1.0, 0.0), 2.0);
        break;
      }
      region.clip(hp.normal, hp.offset);
    }

    verdict.exposure_area = region.area();
    verdict.visible = verdict.exposure_area > tol::area;
    if (!verdict.visible) continue;

    // witness: scan the region centroid and blends toward its boundary for
    // the point with the largest height lead
    const auto ip = region.interior_point();
    if (!ip) continue;  // positive area implies a centroid; belt and braces
    std::vector<complexd> trials;
    trials.push_back(*ip);
    for (const complexd& bp : region.boundary_points())
      trials.push_back(0.5 * (*ip + bp));
    double best_margin = -1.0;
    complexd best_point = si.center;
    for (const complexd& y : trials) {
      const complexd x = si.center + si.radius * y;
      const double hi = sphere_height(si, x);
      double rival = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i)
          rival = std::max(rival, sphere_height(candidates[j].sphere, x));
      const double margin = hi - rival;
      if (margin > best_margin) {
        best_margin = margin;
        best_point = x;
      }
    }
    verdict.witness = best_point;
    verdict.witness_margin = best_margin;
  }
  return out;
}

namespace {

// covered s-intervals on [0,1] from a linear condition A s + B <= 0
void add_covered(std::vector<std::pair<double, double>>& iv, double A,
                 double B) {
  if (std::abs(A) < 1e-300) {
    if (B <= 0.0) iv.emplace_back(0.0, 1.0);
    return;
  }
  const double s0 = -B / A;
  if (A > 0.0) {
    if (s0 > 0.0) iv.emplace_back(0.0, std::min(1.0, s0));
  } else {
    if (s0 < 1.0) iv.emplace_back(std::max(0.0, s0), 1.0);
  }
}

// largest uncovered gap in [0,1]; returns (length, midpoint)
std::pair<double, double> largest_gap(
    std::vector<std::pair<double, double>> iv) {
  std::sort(iv.begin(), iv.end());
  double cursor = 0.0, best_len = 0.0, best_mid = 0.5;
  for (const auto& [a, b] : iv) {
    if (a > cursor) {
      const double len = a - cursor;
      if (len > best_len) {
        best_len = len;
        best_mid = 0.5 * (cursor + a);
      }
    }
    cursor = std::max(cursor, b);
  }
  if (1.0 > cursor) {
    const double len = 1.0 - cursor;
    if (len > best_len) {
      best_len = len;
      best_mid = 0.5 * (cursor + 1.0);
    }
  }
  return {best_len, best_mid};
}

struct OrbitKey {
  int pa, pb, dj, dk;
  bool operator<(const OrbitKey& o) const {
    return std::tie(pa, pb, dj, dk) < std::tie(o.pa, o.pb, o.dj, o.dk);
  }
};

}  // namespace

std::vector<EdgeOrbit> visible_edges(
    const std::vector<WordElement>& candidates,
    const std::vector<VisibilityVerdict>& verdicts, const CuspLattice& lat) {
  const int n = static_cast<int>(candidates.size());
  std::map<OrbitKey, EdgeOrbit> orbits;

  for (int i = 0; i < n; ++i) {
    if (!verdicts[i].visible) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!verdicts[j].visible) continue;
      const auto& si = candidates[i].sphere;
      const auto& sj = candidates[j].sphere;
      const double d = std::abs(sj.center - si.center);
      if (d <= std::abs(si.radius - sj.radius) + tol::geom) continue;
      if (d >= si.radius + sj.radius - tol::geom) continue;

      const complexd uhat = (sj.center - si.center) / d;
      const double a = (d * d + si.radius * si.radius - sj.radius * sj.radius) /
                       (2.0 * d);
      // r_i^2 - a^2 = (r_i - a)(r_i + a); the first factor is expanded to
      // (r_j - d + r_i)(r_j + d - r_i)/(2d) to dodge cancellation when the
      // chord hugs the smaller sphere
      const double arc_radius =
          std::sqrt(std::max(0.0, (sj.radius - d + si.radius) *
                                      (sj.radius + d - si.radius) *
                                      (si.radius + a) / (2.0 * d)));
      const complexd arc_center = si.center + a * uhat;
      const complexd e1 = arc_center - complexd(0.0, 1.0) * uhat * arc_radius;
      const complexd e2 = arc_center + complexd(0.0, 1.0) * uhat * arc_radius;

      // 1D burial coverage along the chord, in i's local frame
      const complexd y1 = (e1 - si.center) / si.radius;
      const complexd y2 = (e2 - si.center) / si.radius;
      std::vector<std::pair<double, double>> covered;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto& sk = candidates[k].sphere;
        const auto hp =
            burial_halfplane(si.center, si.radius, sk.center, sk.radius);
        if (hp.no_op) continue;
        if (hp.whole_disk_buried) {
          covered.emplace_back(0.0, 1.0);
          break;
        }
        // buried where Re(conj(nhat) y(s)) < offset, i.e. A s + B <= 0 with
        const double A = dot(hp.normal, y2 - y1);
        const double B = dot(hp.normal, y1) - hp.offset;
        add_covered(covered, A, B);
      }
      const auto [gap_len, gap_mid] = largest_gap(std::move(covered));
      if (gap_len * 2.0 * arc_radius <= tol::area) continue;  // fully buried

      const complexd wb = e1 + gap_mid * (e2 - e1);
      const double off = std::abs(wb - arc_center);
      const double wh = std::sqrt(std::max(
          0.0, (arc_radius - off) * (arc_radius + off)));

      // canonical orbit representative: translate word_a to shift (0,0) and
      // orient the pair so (word_a, word_b) is lexicographically least
      const GroupWord wi = candidates[i].word;
      const GroupWord wj = candidates[j].word;
      GroupWord a1{wi.power, {0, 0}};
      GroupWord b1{wj.power,
                   {wj.shift[0] - wi.shift[0], wj.shift[1] - wi.shift[1]}};
      GroupWord a2{wj.power, {0, 0}};
      GroupWord b2{wi.power,
                   {wi.shift[0] - wj.shift[0], wi.shift[1] - wj.shift[1]}};
      const bool keep_ij = std::make_pair(a1, b1) <= std::make_pair(a2, b2);
      const GroupWord wa = keep_ij ? a1 : a2;
      const GroupWord wbw = keep_ij ? b1 : b2;
      const complexd shift_back =
          keep_ij ? -lat.translation(wi.shift[0], wi.shift[1])
                  : -lat.translation(wj.shift[0], wj.shift[1]);

      const OrbitKey key{wa.power, wbw.power, wbw.shift[0], wbw.shift[1]};
      auto it = orbits.find(key);
      if (it != orbits.end()) {
        it->second.translates += 1;
        continue;
      }

      EdgeOrbit orbit;
      orbit.word_a = wa;
      orbit.word_b = wbw;
      orbit.center_a = (keep_ij ? si.center : sj.center) + shift_back;
      orbit.center_b = (keep_ij ? sj.center : si.center) + shift_back;
      orbit.radius_a = keep_ij ? si.radius : sj.radius;
      orbit.radius_b = keep_ij ? sj.radius : si.radius;
      orbit.arc_center = arc_center + shift_back;
      orbit.arc_radius = arc_radius;
      orbit.endpoint1 = e1 + shift_back;
      orbit.endpoint2 = e2 + shift_back;
      orbit.witness_base = wb + shift_back;
      orbit.witness_height = wh;
      complexd nrm = canonical_normal(uhat);
      orbit.plane = SupportingPlane{nrm, dot(nrm, orbit.arc_center)};
      const double ra = orbit.radius_a, rb = orbit.radius_b;
      double c = (ra * ra + rb * rb - d * d) / (2.0 * ra * rb);
      c = std::clamp(c, -1.0, 1.0);
      orbit.dihedral = M_PI - std::acos(c);
      orbits.emplace(key, orbit);
    }
  }

  std::vector<EdgeOrbit> out;
  out.reserve(orbits.size());
  for (auto& [key, orbit] : orbits) out.push_back(orbit);
  return out;
}

std::vector<TangencyPair> tangency_report(
    const std::vector<WordElement>& candidates,
    const std::vector<VisibilityVerdict>& verdicts, const CuspLattice& lat) {
  const int n = static_cast<int>(candidates.size());
  std::map<OrbitKey, TangencyPair> seen;
  for (int i = 0; i < n; ++i) {
    if (!verdicts[i].visible) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!verdicts[j].visible) continue;
      const auto& si = candidates[i].sphere;
      const auto& sj = candidates[j].sphere;
      const double d = std::abs(sj.center - si.center);
      const double rsum = si.radius + sj.radius;
      const double rdiff = std::abs(si.radius - sj.radius);
      bool internal = false;
      complexd point;
      if (std::abs(d - rsum) <= tol::geom) {
        point = (sj.radius * si.center + si.radius * sj.center) / rsum;
      } else if (d > tol::geom && std::abs(d - rdiff) <= tol::geom &&
                 rdiff > tol::geom) {
        internal = true;
        point = (si.radius * sj.center - sj.radius * si.center) /
                (si.radius - sj.radius);
      } else {
        continue;
      }
      // discard tangencies hidden inside a third disk
      bool hidden = false;
      for (int k = 0; k < n && !hidden; ++k) {
        if (k == i || k == j) continue;
        const auto& sk = candidates[k].sphere;
        if (std::abs(point - sk.center) < sk.radius - tol::geom) hidden = true;
      }
      if (hidden) continue;

      const GroupWord wi = candidates[i].word;
      const GroupWord wj = candidates[j].word;
      GroupWord a1{wi.power, {0, 0}};
      GroupWord b1{wj.power,
                   {wj.shift[0] - wi.shift[0], wj.shift[1] - wi.shift[1]}};
      GroupWord a2{wj.power, {0, 0}};
      GroupWord b2{wi.power,
                   {wi.shift[0] - wj.shift[0], wi.shift[1] - wj.shift[1]}};
      const bool keep_ij = std::make_pair(a1, b1) <= std::make_pair(a2, b2);
      TangencyPair tp;
      tp.word_a = keep_ij ? a1 : a2;
      tp.word_b = keep_ij ? b1 : b2;
      tp.internal = internal;
      // translate the representative so word_a sits at shift (0,0)
      const auto& base = keep_ij ? wi : wj;
      tp.point = point - lat.translation(base.shift[0], base.shift[1]);
      OrbitKey key{tp.word_a.power, tp.word_b.power, tp.word_b.shift[0],
                   tp.word_b.shift[1]};
      if (seen.count(key)) continue;
      seen.emplace(key, tp);
    }
  }
  std::vector<TangencyPair> out;
  out.reserve(seen.size());
  for (auto& [key, tp] : seen) out.push_back(tp);
  return out;
}

std::vector<int> visibility_oracle(const std::vector<WordElement>& candidates,
                                   const VerticalDomain& domain, int grid,
                                   double tie_tol) {
  if (grid < 1) throw MalformedInput("oracle grid must be positive");
  std::vector<IsometricSphere> spheres;
  spheres.reserve(candidates.size());
  for (const auto& c : candidates) spheres.push_back(c.sphere);

  std::set<int> powers;
  auto record = [&](complexd x) {
    const auto [h, argmax] = envelope_height(spheres, x, tie_tol);
    (void)h;
    for (int idx : argmax) powers.insert(candidates[idx].word.power);
  };

  const auto cs = domain.corners();
  const complexd u = cs[1] - cs[0], v = cs[3] - cs[0];
  for (int p = 0; p < grid; ++p)
    for (int q = 0; q < grid; ++q)
      record(cs[0] + ((p + 0.5) / grid) * u + ((q + 0.5) / grid) * v);

  // disks far smaller than the cell need their own sample set
  constexpr int kRings = 64, kSpokes = 64;
  for (const auto& c : candidates) {
    for (int p = 0; p < kRings; ++p) {
      const double rho = c.sphere.radius * (p + 0.5) / kRings;
      for (int q = 0; q < kSpokes; ++q) {
        const double th = 2.0 * M_PI * (q + 0.37) / kSpokes;
        record(c.sphere.center + rho * std::polar(1.0, th));
      }
    }
  }
  return {powers.begin(), powers.end()};
}

std::vector<int> visible_powers(
    const std::vector<VisibilityVerdict>& verdicts) {
  std::set<int> powers;
  for (const auto& v : verdicts)
    if (v.visible) powers.insert(v.word.power);
  return {powers.begin(), powers.end()};
}

}  // namespace ford
