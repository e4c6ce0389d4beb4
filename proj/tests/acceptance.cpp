// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, independent of the library's internals.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ford/homology.hpp"
#include "ford/pipeline.hpp"

using namespace ford;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", idx, ok ? "PASS" : "FAIL",
              what.c_str());
  if (!ok) ++failures;
}

ScenarioConfig family_cfg(double eps) {
  ScenarioConfig cfg;
  cfg.family = FamilySpec{eps, std::nullopt, 0.5};
  return cfg;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near(complexd a, complexd b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
  const double eps10 = 0.5 * std::exp(-10.0);
  const FordAnalysis run10 = run_analysis(family_cfg(eps10));

  // 1: thin-family reproduction at eps = 0.5 e^-10
  {
    bool ok = run10.certificate.status ==
              CertificateStatus::CertifiedFordDomain;
    ok = ok && run10.certificate.faces.size() == 2;
    if (ok) {
      const SpineFace& f1 = run10.certificate.faces[0];
      const SpineFace& f2 = run10.certificate.faces[1];
      ok = ok && f1.word.power == 1 && f1.partner.power == -1;
      ok = ok && f2.word.power == 2 && f2.partner.power == -2;
      const double r = std::sqrt(eps10);
      ok = ok && near(f1.center, complexd(-1.0, 0.0), 1e-9);
      ok = ok && near(f1.radius, r, 1e-9);
      ok = ok && near(f1.partner_center, complexd(-1.0 - eps10, 0.0), 1e-9);
      ok = ok && near(f1.partner_radius, r, 1e-9);
      ok = ok && near(f2.center, complexd(0.0, 0.0), 1e-9);
      ok = ok && near(f2.radius, 1.0, 1e-9);
      ok = ok && near(f2.partner_center, complexd(-2.0 - eps10, 0.0), 1e-9);
      ok = ok && near(f2.partner_radius, 1.0, 1e-9);
    }
    std::vector<double> offsets;
    for (const auto& e : run10.edges) offsets.push_back(e.plane.offset);
    std::sort(offsets.begin(), offsets.end());
    ok = ok && offsets.size() == 3;
    if (ok) {
      ok = ok && near(offsets[0], -1.0 - 1.5 * eps10, 1e-9);
      ok = ok && near(offsets[1], -1.0 - 0.5 * eps10, 1e-9);
      ok = ok && near(offsets[2], -1.0 + 0.5 * eps10, 1e-9);
    }
    report(1, ok,
           "thin family eps = 0.5 e^-10: certified domain, two face cosets, "
           "sphere data and the three edge planes within 1e-9");
  }

  // 2: tunnel length log(1/eps), and the target-R round trip
  {
    bool ok = run10.tunnel.has_value();
    if (ok) {
      ok = ok && near(run10.tunnel->length, std::log(1.0 / eps10), 1e-9);
      ok = ok && run10.tunnel->length >= 10.0;
    }
    for (double R : {1.0, 5.0, 20.0}) {
      ScenarioConfig cfg;
      cfg.family = FamilySpec{std::nullopt, R, 0.5};
      const FordAnalysis an = run_analysis(cfg);
      ok = ok &&
           an.certificate.status == CertificateStatus::CertifiedFordDomain &&
           an.tunnel && an.tunnel->length >= R;
    }
    report(2, ok,
           "tunnel length = log(1/eps) within 1e-9, >= 10; target-R round "
           "trip clears R for R in {1, 5, 20}");
  }

  // 3: simple explicit generator
  ScenarioConfig simple_cfg;
  simple_cfg.matrix =
      std::array<complexd, 4>{complexd(2.5, 0.0), complexd(-1.0, 0.0),
                              complexd(1.0, 0.0), complexd(0.0, 0.0)};
  const FordAnalysis simple = run_analysis(simple_cfg);
  {
    bool ok =
        simple.certificate.status == CertificateStatus::CertifiedFordDomain;
    ok = ok && simple.certificate.faces.size() == 1;
    ok = ok && simple.edges.empty();
    ok = ok && simple.certificate.tangencies.empty();
    ok = ok && simple.certificate.minimally_parabolic == "certified";
    ok = ok && simple.tunnel && std::abs(simple.tunnel->length) <= 1e-12;
    report(3, ok,
           "gamma = [[2.5,-1],[1,0]]: certified, one spine face, no visible "
           "edges, no tangencies, tunnel length 0 within 1e-12");
  }

  // 4: indiscreteness witness on the short lattice
  {
    ScenarioConfig cfg = family_cfg(0.01);
    cfg.t_alpha = complexd(0.9, 0.0);
    const FordAnalysis an = run_analysis(cfg);
    bool ok =
        an.certificate.status == CertificateStatus::CertifiedIndiscrete;
    ok = ok && an.certificate.indiscreteness.has_value();
    if (ok) {
      const auto& w = *an.certificate.indiscreteness;
      ok = ok && w.radius > w.tau;
      ok = ok && near(w.radius, 1.0, 1e-9);
      ok = ok && near(w.tau, 0.9, 1e-12);
      ok = ok && near(w.escalation, 1.0 / 0.9, 1e-12);
    }
    report(4, ok,
           "eps = 0.01 with t_alpha = 0.9: certified indiscrete, witness "
           "radius 1 > tau 0.9, escalation 1/0.9 within 1e-12");
  }

  // 5: edge-cycle monodromy of criterion 1's run
  {
    bool ok = run10.certificate.cycles.size() == 1;
    if (ok) {
      const EdgeCycle& cyc = run10.certificate.cycles[0];
      ok = ok && cyc.closed;
      ok = ok && cyc.monodromy_error <= 1e-9;
      ok = ok &&
           std::abs(cyc.angle_sum - 2.0 * std::numbers::pi) <= 1e-6;
    }
    report(5, ok,
           "single edge cycle: monodromy = identity mod sign within 1e-9, "
           "dihedral sum 2 pi within 1e-6");
  }

  // 6: oracle equivalence on criteria 1/3 configs + 20 random eps
  {
    bool ok = true;
    auto check_cfg = [&](ScenarioConfig cfg) {
      cfg.oracle_grid = 256;
      const FordAnalysis an = run_analysis(cfg);
      ok = ok && an.oracle_powers.has_value() && an.oracle_agrees;
    };
    check_cfg(family_cfg(eps10));
    check_cfg(simple_cfg);
    std::mt19937 rng(73u);
    std::uniform_real_distribution<double> logeps(std::log(1e-4),
                                                  std::log(0.1));
    for (int i = 0; i < 20; ++i) check_cfg(family_cfg(std::exp(logeps(rng))));
    report(6, ok,
           "exact visible set matches the 256^2 sampling oracle on both "
           "fixed configurations and 20 random eps in [1e-4, 0.1]");
  }

  // 7: homology plan properties
  {
    bool ok = true;
    const HomologyPlan p1 = build_plan({{1, 0}});
    ok = ok && p1.n == 4;
    const HomologyPlan p2 = build_plan({{1, 0}, {2, 3}});
    ok = ok && p2.n == 170;

    std::mt19937 rng(987u);
    std::uniform_int_distribution<long long> coord(-50, 50);
    std::uniform_int_distribution<int> count(1, 6);
    auto mod_n = [](const HomologyPlan& plan, const bigint& a,
                    const bigint& b) {
      bigint v = (2 * plan.m * a - b) % plan.n;
      if (v < 0) v += plan.n;
      return v;
    };
    for (int iter = 0; ok && iter < 1000; ++iter) {
      std::vector<HomologyClass> classes;
      const int nc = count(rng);
      for (int i = 0; i < nc; ++i) {
        long long a = coord(rng);
        while (a == 0) a = coord(rng);
        classes.push_back({a, coord(rng)});
      }
      const HomologyPlan plan = build_plan(classes);
      ok = ok && mod_n(plan, 1, 2 * plan.m - 1) == 1;  // surjectivity
      for (size_t i = 0; ok && i < plan.c.size(); ++i) {
        ok = ok && plan.c[i] >= 2 && plan.n % plan.c[i] == 0;
        ok = ok && plan.gcds[i] > 1;
      }
      const KernelBasis kb = kernel_basis(plan, iter % 7);
      ok = ok && mod_n(plan, kb.v1[0], kb.v1[1]) == 0;
      ok = ok && mod_n(plan, kb.v2[0], kb.v2[1]) == 0;
      ok = ok && kb.v1[0] * kb.v2[1] - kb.v1[1] * kb.v2[0] == plan.n;
    }
    report(7, ok,
           "1000 random class sets: surjectivity, c_i >= 2 dividing n, "
           "gcd(image, n) > 1, kernel basis in kernel with determinant n; "
           "fixed cases n = 4 and n = 170");
  }

  // 8: sweep bracketing
  {
    ScenarioConfig cfg = family_cfg(0.01);
    cfg.sweep = SweepSpec{"t_alpha", {}, 20.0, 0.5, 40, true};
    const SweepResult sw = run_sweep(cfg);
    bool ok = !sw.rows.empty();
    ok = ok &&
         sw.rows.front().status == CertificateStatus::CertifiedFordDomain;
    ok = ok &&
         sw.rows.back().status == CertificateStatus::CertifiedIndiscrete;
    ok = ok && sw.last_certified.has_value() &&
         sw.first_indiscrete.has_value();
    ok = ok && *sw.last_certified > *sw.first_indiscrete;
    report(8, ok,
           "t_alpha sweep 20 -> 0.5 at eps = 0.01: starts certified, ends "
           "certified indiscrete, transition bracketed");
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                    : "acceptance: FAILURES");
  return failures == 0 ? 0 : 1;
}
