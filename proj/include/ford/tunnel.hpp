#pragma once

#include "ford/certify.hpp"

namespace ford {

// vertical geodesic ray from the top of an isometric sphere to infinity
struct VerticalRay {
  complexd base{0.0, 0.0};
  double height = 1.0;
};

struct DualEdge {
  VerticalRay ray_g;
  VerticalRay ray_g_inv;
};

// The edge dual to a paired spine face: the two rays over the sphere tops of
// S_g and S_{g^-1}.  Throws UnpairedFace on an unpaired face.
DualEdge dual_edge(const SpineFace& face);

struct TunnelMeasurement {
  double horoball_height = 1.0;  // lower bound for the maximal cusp height
  double sphere_top = 1.0;       // radius of the generator's sphere
  double length = 0.0;           // 2 * max(0, log(h / r))
  bool lower_bound_flag = true;
};

// Core-tunnel length outside the maximal cusp horoball, measured along the
// dual edge of the generator face: h = the largest visible sphere radius,
// r = radius of the generator sphere.  Requires a CertifiedFordDomain
// certificate containing the power-one face; throws NotCertified otherwise.
TunnelMeasurement tunnel_length(const FordCertificate& cert);

// eps = safety * exp(-R); the family parameter guaranteeing tunnel length
// at least R.  Requires R > 0 and safety in (0, 1).
double epsilon_for_target(double R, double safety);

}  // namespace ford
