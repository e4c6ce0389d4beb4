#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ford/enumerate.hpp"
#include "ford/region.hpp"

namespace ford {

// height of the hemisphere over x, zero outside the closed disk
double sphere_height(const IsometricSphere& s, complexd x);

// upper envelope over x: (max height, indices attaining it within tie_tol);
// empty argmax when every height is zero
std::pair<double, std::vector<int>> envelope_height(
    const std::vector<IsometricSphere>& spheres, complexd x,
    double tie_tol = tol::geom);

struct VisibilityVerdict {
  int index = -1;  // into the candidate vector
  GroupWord word;
  bool visible = false;
  // residual exposure area in the sphere's local frame (units of radius^2)
  double exposure_area = 0.0;
  std::optional<complexd> witness;  // envelope point (base coordinate)
  double witness_margin = 0.0;      // height lead over every other sphere
};

// Exact pairwise-arrangement classification.  For each candidate the burial
// region induced by every other candidate is a closed half-plane (radical
// line); the candidate is Visible iff its disk, clipped to the fundamental
// cell, is not exhausted by those half-planes.
std::vector<VisibilityVerdict> classify_visibility(
    const std::vector<WordElement>& candidates, const VerticalDomain& domain);

// vertical plane { x : Re(conj(normal) * x) = offset }, |normal| = 1,
// sign-canonical (first nonzero of (Re, Im) positive)
struct SupportingPlane {
  complexd normal{1.0, 0.0};
  double offset = 0.0;
};

// Gamma_inf-orbit of a visible intersection arc S_a cap S_b, reported for
// the representative with word_a shifted to (0,0).
struct EdgeOrbit {
  GroupWord word_a;
  GroupWord word_b;
  complexd center_a{0.0, 0.0}, center_b{0.0, 0.0};
  double radius_a = 1.0, radius_b = 1.0;
  SupportingPlane plane;
  complexd endpoint1{0.0, 0.0}, endpoint2{0.0, 0.0};
  complexd arc_center{0.0, 0.0};  // center of the vertical circle, on C
  double arc_radius = 1.0;
  complexd witness_base{0.0, 0.0};  // unburied arc point, base coordinate
  double witness_height = 1.0;
  double dihedral = 0.0;  // interior wedge angle of the domain at the edge
  int translates = 1;     // windowed copies merged into this orbit
};

std::vector<EdgeOrbit> visible_edges(
    const std::vector<WordElement>& candidates,
    const std::vector<VisibilityVerdict>& verdicts, const CuspLattice& lat);

struct TangencyPair {
  GroupWord word_a;
  GroupWord word_b;
  complexd point{0.0, 0.0};
  bool internal = false;
};

// visible tangencies: disks tangent within tol::geom whose tangency point is
// not interior to any other candidate disk
std::vector<TangencyPair> tangency_report(
    const std::vector<WordElement>& candidates,
    const std::vector<VisibilityVerdict>& verdicts, const CuspLattice& lat);

// Brute-force envelope sampling, independent of the arrangement code: grid^2
// lattice samples over the fundamental cell plus a 64x64 polar grid per
// candidate disk.  Returns the sorted powers whose spheres attain the
// envelope somewhere.
std::vector<int> visibility_oracle(const std::vector<WordElement>& candidates,
                                   const VerticalDomain& domain, int grid,
                                   double tie_tol = tol::geom);

// sorted powers with at least one Visible translate
std::vector<int> visible_powers(const std::vector<VisibilityVerdict>& verdicts);

}  // namespace ford
