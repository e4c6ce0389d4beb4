#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ford/lattice.hpp"
#include "ford/moebius.hpp"

namespace ford {

// Group word g^power * t(j,k), where t(j,k) is the lattice translation by
// j*t_alpha + k*t_beta.  Left lattice factors never move an isometric
// sphere, so enumeration normalizes coset representatives to this shape;
// the right shift translates the sphere center by -translation(j,k).
struct GroupWord {
  int power = 1;
  std::array<int, 2> shift{0, 0};

  std::string str() const;
  // trace: see power(); pass tr(gamma) when known in closed form
  MoebiusMap evaluate(const MoebiusMap& gamma, const CuspLattice& lat,
                      std::optional<complexd> trace = std::nullopt) const;

  // ordering used everywhere output order matters: |power| asc, positive
  // power before negative, then shift lexicographic
  friend bool operator<(const GroupWord& lhs, const GroupWord& rhs) {
    const auto key = [](const GroupWord& w) {
      return std::tuple(std::abs(w.power), w.power < 0, w.shift[0],
                        w.shift[1]);
    };
    return key(lhs) < key(rhs);
  }
  friend bool operator==(const GroupWord& lhs, const GroupWord& rhs) {
    return lhs.power == rhs.power && lhs.shift == rhs.shift;
  }
};

struct WordElement {
  GroupWord word;
  MoebiusMap map;
  IsometricSphere sphere;
};

// All reduced powers g^n, 0 < |n| <= max_word_len, each multiplied by every
// lattice shift that places its sphere center inside the window obtained by
// padding the fundamental cell of `domain` by window_pad (Euclidean margin).
// Stabilizer powers (|c| ~ 0) are skipped; duplicate maps modulo sign are
// deduplicated keeping the earliest word in canonical order.  window_pad
// defaults to 2*max(min_translation, largest sphere radius).
std::vector<WordElement> enumerate_candidates(
    const MoebiusMap& gamma, const VerticalDomain& domain, int max_word_len = 6,
    std::optional<double> window_pad = std::nullopt,
    std::optional<complexd> trace = std::nullopt);

// Product words[0] * words[1] * ... * words[m-1] (leftmost factor outermost).
// Runs of powers not separated by a nonzero lattice shift are collapsed
// through power() before any matrix multiplication, so a cycle relator like
// g^2 g^-1 g^-1 evaluates to the exact identity instead of passing through
// large-entry intermediates.
MoebiusMap evaluate_product(const std::vector<GroupWord>& words,
                            const MoebiusMap& gamma, const CuspLattice& lat,
                            std::optional<complexd> trace = std::nullopt);

}  // namespace ford
