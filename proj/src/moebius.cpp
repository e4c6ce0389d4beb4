#include "ford/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace ford {

namespace {

// flip the global sign so the first entry with |e| > entry_zero has
// Re > 0, or Re == 0 and Im > 0 (argument in (-pi/2, pi/2])
void canonicalize_sign(complexd& a, complexd& b, complexd& c, complexd& d) {
  for (complexd* e : {&a, &b, &c, &d}) {
    if (std::abs(*e) <= tol::entry_zero) continue;
    const double re = e->real(), im = e->imag();
    if (re < 0.0 || (re == 0.0 && im < 0.0)) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
    }
    return;
  }
}

}  // namespace

MoebiusMap MoebiusMap::make(complexd a, complexd b, complexd c, complexd d) {
  const complexd det = a * d - b * c;
  if (std::abs(det) < tol::entry_zero) {
    throw MalformedInput("moebius: determinant is numerically zero");
  }
  const complexd s = std::sqrt(det);
  a /= s;
  b /= s;
  c /= s;
  d /= s;
  canonicalize_sign(a, b, c, d);
  return MoebiusMap{a, b, c, d};
}

MoebiusMap MoebiusMap::make_unit(complexd a, complexd b, complexd c,
                                 complexd d) {
  canonicalize_sign(a, b, c, d);
  return MoebiusMap{a, b, c, d};
}

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n) {
  return MoebiusMap::make_unit(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                               m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

MoebiusMap inverse(const MoebiusMap& m) {
  return MoebiusMap::make_unit(m.d, -m.b, -m.c, m.a);
}

MoebiusMap power(const MoebiusMap& g, int n, std::optional<complexd> trace) {
  if (n == 0) return MoebiusMap::identity();
  // invert last: inverse() re-canonicalizes the sign, which would desync a
  // caller-supplied trace from the matrix actually fed to the recurrence
  if (n < 0) return inverse(power(g, -n, trace));
  const complexd tr = trace.value_or(g.a + g.d);
  complexd pa = 1.0, pb = 0.0, pc = 0.0, pd = 1.0;  // g^{k-1}
  complexd qa = g.a, qb = g.b, qc = g.c, qd = g.d;  // g^k
  for (int k = 1; k < n; ++k) {
    const complexd na = tr * qa - pa;
    const complexd nb = tr * qb - pb;
    const complexd nc = tr * qc - pc;
    const complexd nd = tr * qd - pd;
    pa = qa;
    pb = qb;
    pc = qc;
    pd = qd;
    qa = na;
    qb = nb;
    qc = nc;
    qd = nd;
  }
  return MoebiusMap::make_unit(qa, qb, qc, qd);
}

BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p) {
  if (p.at_infinity) {
    if (std::abs(m.c) <= tol::entry_zero) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(m.a / m.c);
  }
  const complexd den = m.c * p.z + m.d;
  if (std::abs(den) <= tol::entry_zero) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((m.a * p.z + m.b) / den);
}

BoundaryPoint apply(const MoebiusMap& m, complexd z) {
  return apply(m, BoundaryPoint::finite(z));
}

// Poincare extension to upper half-space.  Writing w = z + t*j as a
// quaternion, m(w) = (a*w + b)(c*w + d)^{-1}; expanding and clearing the
// quaternion inverse gives the closed form below with
// den = |cz+d|^2 + |c|^2 t^2.
H3Point apply(const MoebiusMap& m, const H3Point& p) {
  const complexd u = m.c * p.z + m.d;
  const double den = std::norm(u) + std::norm(m.c) * p.t * p.t;
  const complexd z =
      ((m.a * p.z + m.b) * std::conj(u) + m.a * std::conj(m.c) * p.t * p.t) /
      den;
  return H3Point{z, p.t / den};
}

double distance_mod_sign(const MoebiusMap& m, const MoebiusMap& n) {
  double plus = 0.0, minus = 0.0;
  const complexd me[4] = {m.a, m.b, m.c, m.d};
  const complexd ne[4] = {n.a, n.b, n.c, n.d};
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(me[i] - ne[i]));
    minus = std::max(minus, std::abs(me[i] + ne[i]));
  }
  return std::min(plus, minus);
}

bool approx_equal_mod_sign(const MoebiusMap& m, const MoebiusMap& n,
                           double tol) {
  return distance_mod_sign(m, n) <= tol;
}

IsometricSphere isometric_sphere(const MoebiusMap& m, std::string word) {
  if (std::abs(m.c) <= tol::entry_zero) {
    throw StabilizerElement("isometric_sphere: element fixes infinity");
  }
  return IsometricSphere{-m.d / m.c, 1.0 / std::abs(m.c), std::move(word)};
}

double sphere_image_check(const MoebiusMap& m, int samples) {
  const IsometricSphere s = isometric_sphere(m);
  const IsometricSphere target = isometric_sphere(inverse(m));
  const double pi = std::acos(-1.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double phi = 2.0 * pi * (i + 0.5) / samples;
    for (int j = 0; j < samples; ++j) {
      // polar angle bounded away from the equator so t > 0
      const double psi = 0.5 * pi * (j + 0.5) / samples;
      const H3Point p{
          s.center + s.radius * std::sin(psi) * std::polar(1.0, phi),
          s.radius * std::cos(psi)};
      const H3Point q = apply(m, p);
      const double dist = std::hypot(std::abs(q.z - target.center), q.t);
      worst = std::max(worst, std::abs(dist - target.radius));
    }
  }
  return worst;
}

}  // namespace ford
