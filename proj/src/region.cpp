#include "ford/region.hpp"

#include <algorithm>
#include <cmath>

namespace ford {

namespace {

double cross(complexd a, complexd b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double dot(complexd a, complexd b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

// signed area swept between directions u and v along the unit circle
double sector(complexd u, complexd v) {
  return 0.5 * std::atan2(cross(u, v), dot(u, v));
}

// intersection parameters of segment p + s*(q-p), s in [0,1], with the unit
// circle, using the cancellation-stable quadratic form
int segment_circle(complexd p, complexd q, double out[2]) {
  const complexd dvec = q - p;
  const double A = std::norm(dvec);
  if (A == 0.0) return 0;
  const double B = 2.0 * dot(p, dvec);
  const double C = std::norm(p) - 1.0;
  const double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return 0;
  const double sq = std::sqrt(disc);
  const double qq = -0.5 * (B + (B >= 0.0 ? sq : -sq));
  double s0 = qq / A;
  double s1 = (qq == 0.0) ? s0 : C / qq;
  if (s0 > s1) std::swap(s0, s1);
  int n = 0;
  if (s0 > 0.0 && s0 < 1.0) out[n++] = s0;
  if (s1 > 0.0 && s1 < 1.0 && s1 != s0) out[n++] = s1;
  return n;
}

// signed area of (triangle 0,p,q) intersect (unit disk)
double edge_area(complexd p, complexd q) {
  const bool pin = std::norm(p) <= 1.0;
  const bool qin = std::norm(q) <= 1.0;
  if (pin && qin) return 0.5 * cross(p, q);
  double s[2];
  const int n = segment_circle(p, q, s);
  if (pin) {  // exits once
    const complexd e = n >= 1 ? p + s[0] * (q - p) : p;
    return 0.5 * cross(p, e) + sector(e, q);
  }
  if (qin) {  // enters once
    const complexd e = n >= 1 ? p + s[n - 1] * (q - p) : q;
    return sector(p, e) + 0.5 * cross(e, q);
  }
  if (n == 2) {  // passes through
    const complexd e0 = p + s[0] * (q - p);
    const complexd e1 = p + s[1] * (q - p);
    return sector(p, e0) + 0.5 * cross(e0, e1) + sector(e1, q);
  }
  return sector(p, q);
}

}  // namespace

DiskRegion::DiskRegion() {
  const double m = 1.125;  // bounding square of the unit disk
  poly_ = {{-m, -m}, {m, -m}, {m, m}, {-m, m}};
}

void DiskRegion::clip(complexd n, double b) {
  const double len = std::abs(n);
  if (len == 0.0) return;
  n /= len;
  b /= len;
  if (b <= -1.5) return;  // keeps the whole working square
  std::vector<complexd> next;
  next.reserve(poly_.size() + 2);
  const auto side = [&](complexd y) { return dot(n, y) - b; };
  for (size_t i = 0; i < poly_.size(); ++i) {
    const complexd cur = poly_[i];
    const complexd nxt = poly_[(i + 1) % poly_.size()];
    const double fc = side(cur), fn = side(nxt);
    if (fc >= 0.0) next.push_back(cur);
    if ((fc > 0.0 && fn < 0.0) || (fc < 0.0 && fn > 0.0)) {
      next.push_back(cur + (fc / (fc - fn)) * (nxt - cur));
    }
  }
  poly_ = std::move(next);
}

double DiskRegion::area() const {
  if (poly_.size() < 3) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < poly_.size(); ++i) {
    total += edge_area(poly_[i], poly_[(i + 1) % poly_.size()]);
  }
  return std::max(0.0, total);
}

std::vector<complexd> DiskRegion::boundary_points() const {
  std::vector<complexd> pts;
  if (poly_.size() < 3) return pts;
  for (size_t i = 0; i < poly_.size(); ++i) {
    const complexd p = poly_[i];
    const complexd q = poly_[(i + 1) % poly_.size()];
    if (std::norm(p) <= 1.0) pts.push_back(p);
    double s[2];
    const int n = segment_circle(p, q, s);
    for (int t = 0; t < n; ++t) pts.push_back(p + s[t] * (q - p));
  }
  // circle samples strictly inside the polygon
  const auto inside = [&](complexd y) {
    for (size_t i = 0; i < poly_.size(); ++i) {
      const complexd a = poly_[i];
      const complexd b = poly_[(i + 1) % poly_.size()];
      if (cross(b - a, y - a) < 0.0) return false;
    }
    return true;
  };
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 64; ++k) {
    const complexd y = std::polar(1.0, 2.0 * pi * (k + 0.5) / 64.0);
    if (inside(y)) pts.push_back(y);
  }
  return pts;
}

std::optional<complexd> DiskRegion::interior_point() const {
  const std::vector<complexd> pts = boundary_points();
  if (pts.empty()) return std::nullopt;
  complexd sum{0.0, 0.0};
  for (complexd p : pts) sum += p;
  return sum / double(pts.size());
}

}  // namespace ford
