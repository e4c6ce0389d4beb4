#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "ford/errors.hpp"
#include "ford/homology.hpp"

using namespace ford;

namespace {

bigint gcd_big(bigint a, bigint b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const bigint r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bigint phi_mod(const HomologyPlan& plan, const bigint& a, const bigint& b) {
  bigint v = (2 * plan.m * a - b) % plan.n;
  if (v < 0) v += plan.n;
  return v;
}

}  // namespace

TEST_CASE("single class (1,0): m = 2, n = 4") {
  const HomologyPlan plan = build_plan({{1, 0}});
  CHECK(plan.m == 2);
  CHECK(plan.n == 4);
  REQUIRE(plan.c.size() == 1);
  CHECK(plan.c[0] == 4);
  CHECK(plan.images[0] == 4);
  CHECK(plan.gcds[0] == 4);

  const KernelBasis kb = kernel_basis(plan);
  CHECK(kb.v1[0] == 1);
  CHECK(kb.v1[1] == 4);  // 2m + 0*n
  CHECK(kb.v2[0] == 0);
  CHECK(kb.v2[1] == 4);
  CHECK(kb.v1[0] * kb.v2[1] - kb.v1[1] * kb.v2[0] == plan.n);
}

TEST_CASE("two classes (1,0), (2,3): n = 170") {
  const HomologyPlan plan = build_plan({{1, 0}, {2, 3}});
  CHECK(plan.m == 5);  // max|b| + 2
  CHECK(plan.n == 170);
  CHECK(plan.c == std::vector<bigint>{10, 17});
  // surjectivity witness: phi(1, 2m-1) = 1
  CHECK(phi_mod(plan, 1, 2 * plan.m - 1) == 1);
}

TEST_CASE("zero classes are discarded, empty input throws") {
  const HomologyPlan plan = build_plan({{0, 0}, {1, 0}, {0, 0}});
  CHECK(plan.discarded_zero == 2);
  CHECK(plan.classes.size() == 1);
  CHECK_THROWS_AS(build_plan({}), EmptyInput);
  CHECK_THROWS_AS(build_plan({{0, 0}, {0, 0}}), EmptyInput);
}

TEST_CASE("zero first coordinate defers to change_basis") {
  CHECK_THROWS_AS(build_plan({{0, 3}}), ZeroFirstCoordinate);

  const BasisChange bc = change_basis({{0, 3}, {2, -1}});
  CHECK(bc.changed);
  // unimodular
  CHECK(bc.U[0][0] * bc.U[1][1] - bc.U[0][1] * bc.U[1][0] != 0);
  for (const auto& g : bc.transformed) CHECK(g.a != 0);
  const HomologyPlan plan = build_plan(bc.transformed);
  CHECK(plan.n >= 2);

  const BasisChange noop = change_basis({{1, 0}, {2, 3}});
  CHECK(!noop.changed);
}

TEST_CASE("kernel stretching parameter k") {
  const HomologyPlan plan = build_plan({{1, 0}});
  const KernelBasis kb = kernel_basis(plan, 7);
  CHECK(kb.v1[1] == 4 + 7 * 4);
  CHECK(kb.v1[0] * kb.v2[1] - kb.v1[1] * kb.v2[0] == plan.n);
  // both vectors die under phi mod n
  CHECK(phi_mod(plan, kb.v1[0], kb.v1[1]) == 0);
  CHECK(phi_mod(plan, kb.v2[0], kb.v2[1]) == 0);
}

TEST_CASE("random class sets satisfy the plan invariants") {
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<long long> coord(-30, 30);
  std::uniform_int_distribution<int> count(1, 5);

  for (int iter = 0; iter < 300; ++iter) {
    std::vector<HomologyClass> classes;
    const int nc = count(rng);
    for (int i = 0; i < nc; ++i) {
      long long a = coord(rng);
      while (a == 0) a = coord(rng);
      classes.push_back({a, coord(rng)});
    }
    const HomologyPlan plan = build_plan(classes);

    CHECK(plan.n >= 2);
    for (size_t i = 0; i < plan.c.size(); ++i) {
      CHECK(plan.c[i] >= 2);
      CHECK(plan.n % plan.c[i] == 0);
      CHECK(plan.gcds[i] > 1);
      CHECK(plan.gcds[i] == gcd_big(plan.images[i], plan.n));
      // the class maps to something that cannot generate Z_n
      CHECK(phi_mod(plan, plan.classes[i].a, plan.classes[i].b) % plan.c[i] ==
            0);
    }
    // surjectivity: (1, 2m-1) hits 1
    CHECK(phi_mod(plan, 1, 2 * plan.m - 1) == 1);

    const KernelBasis kb = kernel_basis(plan, iter % 5);
    CHECK(phi_mod(plan, kb.v1[0], kb.v1[1]) == 0);
    CHECK(phi_mod(plan, kb.v2[0], kb.v2[1]) == 0);
    CHECK(kb.v1[0] * kb.v2[1] - kb.v1[1] * kb.v2[0] == plan.n);
  }
}

TEST_CASE("filling slopes avoid every input class") {
  // with two or more classes each |image| = c_i properly divides n, so no
  // input class lands in the kernel of phi mod n
  const HomologyPlan plan = build_plan({{3, 7}, {-2, 5}});
  for (const auto& g : plan.classes) {
    CHECK(phi_mod(plan, g.a, g.b) != 0);
  }
}
