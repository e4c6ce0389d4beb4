#pragma once

#include <optional>
#include <vector>

#include "ford/moebius.hpp"

namespace ford {

// Convex region (unit disk) minus closed half-planes, kept as the unit disk
// intersected with an explicit convex polygon.  Everything is meant to run
// in a sphere's local frame (center at the origin, unit radius), which keeps
// coordinates O(1) regardless of the scene scale.
class DiskRegion {
 public:
  DiskRegion();

  // keep { y : Re(conj(n) * y) >= b }; n need not be normalized
  void clip(complexd n, double b);

  bool empty() const { return poly_.size() < 3; }

  // area of polygon-intersect-unit-disk
  double area() const;

  // boundary vertices of the clipped region (polygon vertices inside the
  // disk, polygon-edge/circle crossings, and circle samples inside the
  // polygon); empty if the region is empty
  std::vector<complexd> boundary_points() const;

  // mean of boundary points -- interior for a convex region of positive area
  std::optional<complexd> interior_point() const;

  const std::vector<complexd>& polygon() const { return poly_; }

 private:
  std::vector<complexd> poly_;  // CCW convex polygon
};

}  // namespace ford
