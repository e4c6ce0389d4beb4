#include "ford/homology.hpp"

#include <cstdlib>

#include "ford/errors.hpp"

namespace ford {

HomologyPlan build_plan(const std::vector<HomologyClass>& classes) {
  HomologyPlan plan;
  for (const auto& g : classes) {
    if (g.a == 0 && g.b == 0) {
      plan.discarded_zero += 1;
      continue;
    }
    plan.classes.push_back(g);
  }
  if (plan.classes.empty())
    throw EmptyInput("no nonzero homology classes given");
  long long max_b = 0;
  for (const auto& g : plan.classes) {
    if (g.a == 0)
      throw ZeroFirstCoordinate(
          "class with zero first coordinate; apply change_basis first");
    max_b = std::max(max_b, std::llabs(g.b));
  }
  plan.m = max_b + 2;
  plan.n = 1;
  for (const auto& g : plan.classes) {
    const bigint image = bigint(2) * plan.m * g.a - g.b;
    plan.images.push_back(image);
    plan.c.push_back(abs(image));
    plan.n *= plan.c.back();
  }
  for (const auto& image : plan.images)
    plan.gcds.push_back(gcd(abs(image), plan.n));
  return plan;
}

BasisChange change_basis(const std::vector<HomologyClass>& classes) {
  auto apply = [&](const std::array<std::array<long long, 2>, 2>& U) {
    std::vector<HomologyClass> out;
    out.reserve(classes.size());
    for (const auto& g : classes)
      out.push_back({U[0][0] * g.a + U[0][1] * g.b,
                     U[1][0] * g.a + U[1][1] * g.b});
    return out;
  };
  auto all_nonzero = [](const std::vector<HomologyClass>& cs) {
    for (const auto& g : cs)
      if (g.a == 0 && !(g.b == 0)) return false;
    return true;
  };
  for (long long k = 0;; ++k) {
    for (const std::array<std::array<long long, 2>, 2>& U :
         {std::array<std::array<long long, 2>, 2>{{{1, k}, {0, 1}}},
          std::array<std::array<long long, 2>, 2>{{{k, 1}, {1, 0}}}}) {
      auto t = apply(U);
      if (all_nonzero(t)) {
        BasisChange bc;
        bc.U = U;
        bc.transformed = std::move(t);
        bc.changed = !(U[0][0] == 1 && U[0][1] == 0 && U[1][0] == 0 &&
                       U[1][1] == 1);
        return bc;
      }
    }
  }
}

KernelBasis kernel_basis(const HomologyPlan& plan, const bigint& k) {
  KernelBasis kb;
  kb.v1 = {bigint(1), bigint(2) * plan.m + k * plan.n};
  kb.v2 = {bigint(0), plan.n};
  return kb;
}

}  // namespace ford
