#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <vector>

namespace ford {

using bigint = boost::multiprecision::cpp_int;

// a class (a, b) in the rank-two cusp subgroup
struct HomologyClass {
  long long a = 0;
  long long b = 0;
  bool operator==(const HomologyClass&) const = default;
};

// The mod-n epimorphism phi(a, b) = 2ma - b whose kernel avoids every input
// class: m = max |b_i| + 2, c_i = |phi(class_i)|, n = prod c_i.  Each image
// shares a factor with n, so no input class generates Z_n.
struct HomologyPlan {
  long long m = 2;
  bigint n = 1;
  std::vector<bigint> c;
  std::vector<bigint> images;  // signed phi values
  std::vector<bigint> gcds;    // gcd(|image|, n), each > 1
  std::vector<HomologyClass> classes;  // nonzero classes the plan covers
  int discarded_zero = 0;
};

// Throws EmptyInput when nothing is left after discarding zero classes,
// ZeroFirstCoordinate when some nonzero class has a = 0 (run change_basis).
HomologyPlan build_plan(const std::vector<HomologyClass>& classes);

struct BasisChange {
  std::array<std::array<long long, 2>, 2> U{{{1, 0}, {0, 1}}};  // row-major
  std::vector<HomologyClass> transformed;
  bool changed = false;
};

// A unimodular change of coordinates making every first coordinate nonzero;
// tries shears [[1,k],[0,1]] and sheared swaps [[k,1],[1,0]] for k = 0,1,...
BasisChange change_basis(const std::vector<HomologyClass>& classes);

struct KernelBasis {
  std::array<bigint, 2> v1;  // (1, 2m + k n)
  std::array<bigint, 2> v2;  // (0, n)
};

// Kernel basis of phi mod n with determinant n; k stretches the first vector
// (arbitrarily long filling slopes).
KernelBasis kernel_basis(const HomologyPlan& plan, const bigint& k = 0);

}  // namespace ford
