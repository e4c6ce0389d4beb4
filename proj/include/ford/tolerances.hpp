#pragma once

// Global numeric tolerances. Geometric comparisons share a single absolute
// tolerance; the remaining constants cover the places where a different
// scale is forced (determinant normalization, angle sums, residual areas).
namespace ford::tol {

// absolute tolerance for geometric comparisons (heights, centers, planes)
inline constexpr double geom = 1e-9;

// |ad - bc - 1| after normalization
inline constexpr double det = 1e-12;

// word evaluation vs stored map, and map deduplication (modulo sign)
inline constexpr double word_map = 1e-10;

// edge-cycle dihedral angle sum vs 2*pi
inline constexpr double angle = 1e-6;

// residual exposure area, measured in the sphere's local frame (units of
// radius^2); equals the nominal 1e-12 rule at unit radius and stays
// scale-correct for the sqrt(eps)-sized spheres of the thin-sphere family
inline constexpr double area = 1e-12;

// entries below this modulus are treated as zero (sign canonicalization,
// stabilizer detection via |c|)
inline constexpr double entry_zero = 1e-12;

}  // namespace ford::tol
