#pragma once

// The cycle-lemma rotation between marked nonnegative paths and free
// balanced paths, and the h <-> ud exchange between Schroeder paths with even
// u-segments and Dyck paths.

#include "kpaths/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace kpaths {

/// A nonnegative path P with one colored down-step of P* = P d. The mark
/// counts down-steps of P* from the left, 0-based; the appended d is index m.
struct MarkedPath {
  LatticePath base;
  unsigned mark = 0;

  void validate() const {
    if (!base.is_nonnegative() || base.end_height() != 0) throw std::invalid_argument("base must be a nonnegative path ending on the axis");
    if (mark > base.downs()) throw std::invalid_argument("mark must be <= number of down-steps of the base");
  }

  bool operator==(const MarkedPath&) const = default;
};

/// Balanced (as many downs as ups), sign unconstrained.
inline bool is_free_path(const LatticePath& path) { return path.end_height() == 0; }

/// Split P* at the colored d into P1 d Q1 and return Q1 P1.
inline LatticePath phi(const MarkedPath& mp) {
  mp.validate();
  std::vector<Step> star = mp.base.steps();
  star.push_back(Step::down);
  std::size_t cut = 0;
  unsigned seen = 0;
  for (std::size_t i = 0; i < star.size(); ++i) {
    if (star[i] != Step::down) continue;
    if (seen++ == mp.mark) {
      cut = i;
      break;
    }
  }
  std::vector<Step> out(star.begin() + static_cast<std::ptrdiff_t>(cut) + 1, star.end());
  out.insert(out.end(), star.begin(), star.begin() + static_cast<std::ptrdiff_t>(cut));
  return LatticePath(mp.base.k(), std::move(out));
}

/// Split L = L1 L2 at its leftmost lowest point, rebuild P* = L2 d L1 with
/// the inserted d colored, and drop the final step of P*.
inline MarkedPath phi_inv(const LatticePath& path) {
  if (!is_free_path(path)) throw std::invalid_argument("phi_inv needs a balanced path");
  const std::vector<int> h = path.heights();
  std::size_t split = 0;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] < h[split]) split = i;
  }
  const auto& s = path.steps();
  std::vector<Step> star(s.begin() + static_cast<std::ptrdiff_t>(split), s.end());
  unsigned mark = 0;
  for (Step st : star) mark += st == Step::down ? 1U : 0U;
  star.push_back(Step::down);
  star.insert(star.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(split));
  star.pop_back();
  return MarkedPath{LatticePath(path.k(), std::move(star)), mark};
}

/// Replace each h of a 2-path by ud. Every u-segment must have even length.
inline LatticePath schroder_to_dyck(const LatticePath& path) {
  if (path.k() != 2) throw std::invalid_argument("schroder_to_dyck needs a 2-path");
  for (const auto& [len, count] : u_segment_profile(path).counts) {
    if (len % 2 != 0) throw std::invalid_argument("u-segment of odd length " + std::to_string(len));
  }
  std::vector<Step> out;
  out.reserve(path.size() + path.horizontals());
  for (Step s : path.steps()) {
    if (s == Step::horiz) {
      out.push_back(Step::up);
      out.push_back(Step::down);
    } else {
      out.push_back(s);
    }
  }
  return LatticePath(0, std::move(out));
}

/// Read D as blocks u^i d^j of maximal runs; each block with odd i becomes
/// u^{i-1} h d^{j-1}.
inline LatticePath dyck_to_schroder(const LatticePath& path) {
  if (path.horizontals() != 0 || !path.is_nonnegative() || path.end_height() != 0) {
    throw std::invalid_argument("dyck_to_schroder needs a Dyck path");
  }
  const auto& s = path.steps();
  std::vector<Step> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t ups = 0;
    while (i < s.size() && s[i] == Step::up) {
      ++ups;
      ++i;
    }
    std::size_t downs = 0;
    while (i < s.size() && s[i] == Step::down) {
      ++downs;
      ++i;
    }
    if (ups % 2 == 1) {
      out.insert(out.end(), ups - 1, Step::up);
      out.push_back(Step::horiz);
      out.insert(out.end(), downs - 1, Step::down);
    } else {
      out.insert(out.end(), ups, Step::up);
      out.insert(out.end(), downs, Step::down);
    }
  }
  return LatticePath(2, std::move(out));
}

}  // namespace kpaths
