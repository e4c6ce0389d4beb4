#include "ford/lattice.hpp"

#include <cmath>

namespace ford {

namespace {

double wedge(complexd u, complexd v) {
  return std::imag(std::conj(u) * v);
}

}  // namespace

CuspLattice::CuspLattice(complexd alpha, complexd beta)
    : t_alpha(alpha), t_beta(beta) {
  const double area = std::abs(wedge(alpha, beta));
  if (!(area > tol::geom * std::abs(alpha) * std::abs(beta)) || area == 0.0) {
    throw MalformedInput("lattice: translations are R-linearly dependent");
  }
}

double CuspLattice::cell_area() const {
  return std::abs(wedge(t_alpha, t_beta));
}

complexd CuspLattice::shortest_vector() const {
  // Lagrange/Gauss reduction; afterwards u is a shortest nonzero vector
  complexd u = t_alpha, v = t_beta;
  if (std::norm(u) > std::norm(v)) std::swap(u, v);
  for (int iter = 0; iter < 64; ++iter) {
    const double mu =
        std::round(std::real(std::conj(u) * v) / std::norm(u));
    v -= mu * u;
    if (std::norm(v) >= std::norm(u)) break;
    std::swap(u, v);
  }
  return u;
}

double CuspLattice::min_translation() const {
  return std::abs(shortest_vector());
}

std::pair<double, double> CuspLattice::coords(complexd z) const {
  const double area = wedge(t_alpha, t_beta);
  return {wedge(z, t_beta) / area, wedge(t_alpha, z) / area};
}

std::array<complexd, 4> VerticalDomain::corners() const {
  return {base_corner, base_corner + lattice.t_alpha,
          base_corner + lattice.t_alpha + lattice.t_beta,
          base_corner + lattice.t_beta};
}

bool VerticalDomain::contains(complexd z) const {
  const auto [x, y] = lattice.coords(z - base_corner);
  return x >= 0.0 && x < 1.0 && y >= 0.0 && y < 1.0;
}

std::pair<complexd, std::array<int, 2>> reduce_center(complexd z,
                                                      const CuspLattice& lat,
                                                      complexd base_corner) {
  const auto [x, y] = lat.coords(z - base_corner);
  const int j = static_cast<int>(std::floor(x));
  const int k = static_cast<int>(std::floor(y));
  return {z - lat.translation(j, k), {j, k}};
}

}  // namespace ford
