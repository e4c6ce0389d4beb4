#include "ford/tunnel.hpp"

#include <cmath>

#include "ford/errors.hpp"

namespace ford {

DualEdge dual_edge(const SpineFace& face) {
  if (!face.paired)
    throw UnpairedFace("face " + face.word.str() + " has no visible inverse");
  return DualEdge{VerticalRay{face.center, face.radius},
                  VerticalRay{face.partner_center, face.partner_radius}};
}

TunnelMeasurement tunnel_length(const FordCertificate& cert) {
  if (cert.status != CertificateStatus::CertifiedFordDomain)
    throw NotCertified("tunnel length requires a certified Ford domain, got " +
                       to_string(cert.status));
  const SpineFace* generator = nullptr;
  double h = 0.0;
  for (const auto& f : cert.faces) {
    h = std::max(h, f.radius);
    if (f.paired) h = std::max(h, f.partner_radius);
    if (std::abs(f.word.power) == 1) generator = &f;
  }
  if (!generator)
    throw NotCertified("no power-one face in the certified domain");
  (void)dual_edge(*generator);  // must be paired; throws otherwise

  TunnelMeasurement t;
  t.horoball_height = h;
  t.sphere_top = generator->radius;
  t.length = 2.0 * std::max(0.0, std::log(h / generator->radius));
  t.lower_bound_flag = true;
  return t;
}

double epsilon_for_target(double R, double safety) {
  if (!(R > 0.0)) throw MalformedInput("target length must be positive");
  if (!(safety > 0.0 && safety < 1.0))
    throw MalformedInput("safety factor must lie in (0, 1)");
  return safety * std::exp(-R);
}

}  // namespace ford
