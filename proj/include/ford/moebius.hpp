#pragma once

#include <complex>
#include <optional>
#include <string>

#include "ford/errors.hpp"
#include "ford/tolerances.hpp"

namespace ford {

using complexd = std::complex<double>;

// point of the sphere at infinity, C union {inf}
struct BoundaryPoint {
  complexd z{0.0, 0.0};
  bool at_infinity = false;

  static BoundaryPoint infinity() { return {complexd{0.0, 0.0}, true}; }
  static BoundaryPoint finite(complexd w) { return {w, false}; }
};

// upper half-space point (x, y, t), t > 0, written as z = x+iy plus height t
struct H3Point {
  complexd z{0.0, 0.0};
  double t = 1.0;
};

// Unit-determinant Moebius transformation acting on C union {inf} and on
// upper half-space.  Stored entries are det-normalized and sign-canonical:
// the first entry of (a,b,c,d) with modulus > tol::entry_zero has argument
// in (-pi/2, pi/2].  Elements are compared modulo global sign.
struct MoebiusMap {
  complexd a{1.0, 0.0};
  complexd b{0.0, 0.0};
  complexd c{0.0, 0.0};
  complexd d{1.0, 0.0};

  static MoebiusMap make(complexd a, complexd b, complexd c, complexd d);
  // Trusted variant: canonicalizes the sign but skips det renormalization.
  // For results of internal operations (products, inverses, recurrence
  // powers) whose true determinant is exactly 1: evaluating ad - bc there
  // cancels catastrophically when the entries are large, and dividing by
  // that noisy root would scale the matrix by a spurious factor.
  static MoebiusMap make_unit(complexd a, complexd b, complexd c, complexd d);
  static MoebiusMap identity() { return MoebiusMap{}; }
  static MoebiusMap translation(complexd t) {
    return make_unit(1.0, t, 0.0, 1.0);
  }

  complexd det() const { return a * d - b * c; }
};

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n);
MoebiusMap inverse(const MoebiusMap& m);

// g^n by the Cayley-Hamilton recurrence g^{k+1} = tr(g) g^k - g^{k-1}.
// Repeated composition loses ~|entries|^2 * eps_machine per multiply, which
// swamps the geometry once the entries are large; the recurrence never
// cancels the dominant scale against itself.  The trace as computed from the
// stored entries can itself suffer that cancellation (a and d huge and
// nearly opposite), so callers who know tr(g) in closed form should pass it.
MoebiusMap power(const MoebiusMap& g, int n,
                 std::optional<complexd> trace = std::nullopt);

inline MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  return compose(m, n);
}

BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p);
// convenience for finite input; may still return the point at infinity
BoundaryPoint apply(const MoebiusMap& m, complexd z);
H3Point apply(const MoebiusMap& m, const H3Point& p);

// max entrywise difference min'd over the global sign ambiguity
double distance_mod_sign(const MoebiusMap& m, const MoebiusMap& n);
bool approx_equal_mod_sign(const MoebiusMap& m, const MoebiusMap& n,
                           double tol = tol::word_map);

// Euclidean hemisphere |p - center| = radius centered on the boundary plane;
// the locus where m does not change the Euclidean metric scale.  word is a
// display label supplied by the enumeration (empty for raw maps).
struct IsometricSphere {
  complexd center{0.0, 0.0};
  double radius = 1.0;
  std::string word;
};

// center = apply(inverse(m), inf) = -d/c, radius = 1/|c|;
// throws StabilizerElement when |c| <= tol::entry_zero
IsometricSphere isometric_sphere(const MoebiusMap& m, std::string word = {});

// Samples points of S_m in H^3, pushes them through m, and returns the
// largest deviation from the sphere of m^{-1} (m acts on S_m as inversion
// followed by a Euclidean isometry, so the image must be S_{m^{-1}} exactly).
double sphere_image_check(const MoebiusMap& m, int samples = 24);

}  // namespace ford
