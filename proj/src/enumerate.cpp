#include "ford/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace ford {

std::string GroupWord::str() const {
  std::string s = "g";
  if (power != 1) s += "^" + std::to_string(power);
  if (shift[0] != 0 || shift[1] != 0) {
    s += "*t(" + std::to_string(shift[0]) + "," + std::to_string(shift[1]) +
         ")";
  }
  return s;
}

MoebiusMap GroupWord::evaluate(const MoebiusMap& gamma, const CuspLattice& lat,
                               std::optional<complexd> trace) const {
  return compose(ford::power(gamma, power, trace),
                 lat.shift(shift[0], shift[1]));
}

MoebiusMap evaluate_product(const std::vector<GroupWord>& words,
                            const MoebiusMap& gamma, const CuspLattice& lat,
                            std::optional<complexd> trace) {
  MoebiusMap out = MoebiusMap::identity();
  long run = 0;
  const auto flush = [&](long p) {
    if (p != 0) out = compose(out, power(gamma, static_cast<int>(p), trace));
  };
  for (const GroupWord& w : words) {
    run += w.power;
    if (w.shift[0] != 0 || w.shift[1] != 0) {
      flush(run);
      run = 0;
      out = compose(out, lat.shift(w.shift[0], w.shift[1]));
    }
  }
  flush(run);
  return out;
}

std::vector<WordElement> enumerate_candidates(
    const MoebiusMap& gamma, const VerticalDomain& domain, int max_word_len,
    std::optional<double> window_pad, std::optional<complexd> trace) {
  if (max_word_len < 1) {
    throw MalformedInput("enumerate: max_word_len must be >= 1");
  }
  const CuspLattice& lat = domain.lattice;

  // powers first; the default pad needs the largest radius
  struct Power {
    int n;
    MoebiusMap map;
  };
  std::vector<Power> powers;
  double max_radius = 0.0;
  for (int absn = 1; absn <= max_word_len; ++absn) {
    for (int sgn : {+1, -1}) {
      const GroupWord w{sgn * absn, {0, 0}};
      const MoebiusMap m = w.evaluate(gamma, lat, trace);
      if (std::abs(m.c) <= tol::entry_zero) continue;  // stabilizer
      powers.push_back({sgn * absn, m});
      max_radius = std::max(max_radius, 1.0 / std::abs(m.c));
    }
  }

  const double pad =
      window_pad.value_or(2.0 * std::max(lat.min_translation(), max_radius));
  // margins in lattice coordinates giving Euclidean slab distance >= pad
  const double area = lat.cell_area();
  const double mx = pad * std::abs(lat.t_beta) / area;
  const double my = pad * std::abs(lat.t_alpha) / area;

  std::vector<WordElement> out;
  for (const Power& p : powers) {
    const complexd center = -p.map.d / p.map.c;
    const auto [x, y] = lat.coords(center - domain.base_corner);
    // center - translation(j,k) lands in the padded cell
    const int j_lo = static_cast<int>(std::ceil(x - 1.0 - mx));
    const int j_hi = static_cast<int>(std::floor(x + mx));
    const int k_lo = static_cast<int>(std::ceil(y - 1.0 - my));
    const int k_hi = static_cast<int>(std::floor(y + my));
    for (int j = j_lo; j <= j_hi; ++j) {
      for (int k = k_lo; k <= k_hi; ++k) {
        const GroupWord w{p.n, {j, k}};
        const MoebiusMap m = compose(p.map, lat.shift(j, k));
        out.push_back({w, m, isometric_sphere(m, w.str())});
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const WordElement& a, const WordElement& b) {
              return a.word < b.word;
            });
  // duplicate maps modulo sign (e.g. elliptic coincidences) keep the
  // canonically earliest word
  std::vector<WordElement> dedup;
  for (WordElement& e : out) {
    const bool seen = std::any_of(
        dedup.begin(), dedup.end(), [&](const WordElement& f) {
          return approx_equal_mod_sign(e.map, f.map, tol::word_map);
        });
    if (!seen) dedup.push_back(std::move(e));
  }
  return dedup;
}

}  // namespace ford
