#pragma once

#include <array>
#include <utility>

#include "ford/moebius.hpp"

namespace ford {

// Rank-two parabolic lattice fixing infinity, generated by the translations
// z -> z + t_alpha and z -> z + t_beta (R-linearly independent).
struct CuspLattice {
  complexd t_alpha{20.0, 0.0};
  complexd t_beta{0.0, 20.0};

  CuspLattice() = default;
  CuspLattice(complexd alpha, complexd beta);

  complexd translation(int j, int k) const {
    return double(j) * t_alpha + double(k) * t_beta;
  }
  MoebiusMap shift(int j, int k) const {
    return MoebiusMap::translation(translation(j, k));
  }

  // |Im(conj(t_alpha) * t_beta)|, the fundamental cell area
  double cell_area() const;

  // length of a shortest nonzero lattice vector (Lagrange/Gauss reduction)
  double min_translation() const;
  complexd shortest_vector() const;

  // real coordinates (x, y) with z = x*t_alpha + y*t_beta
  std::pair<double, double> coords(complexd z) const;
};

// Vertical fundamental prism for the lattice: the parallelogram spanned by
// t_alpha, t_beta based at base_corner, times (0, inf).  The default corner
// centers the cell on the origin.
struct VerticalDomain {
  CuspLattice lattice;
  complexd base_corner{0.0, 0.0};

  explicit VerticalDomain(const CuspLattice& lat)
      : lattice(lat), base_corner(-0.5 * (lat.t_alpha + lat.t_beta)) {}
  VerticalDomain(const CuspLattice& lat, complexd corner)
      : lattice(lat), base_corner(corner) {}

  std::array<complexd, 4> corners() const;
  bool contains(complexd z) const;  // half-open cell
};

// Writes z = z0 + j*t_alpha + k*t_beta with z0 in the half-open cell based
// at base_corner; returns (z0, (j, k)).
std::pair<complexd, std::array<int, 2>> reduce_center(complexd z,
                                                      const CuspLattice& lat,
                                                      complexd base_corner);
inline std::pair<complexd, std::array<int, 2>> reduce_center(
    complexd z, const VerticalDomain& dom) {
  return reduce_center(z, dom.lattice, dom.base_corner);
}

}  // namespace ford
