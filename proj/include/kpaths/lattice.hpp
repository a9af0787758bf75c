#pragma once

// k-paths: lattice paths with up-steps (1,1), down-steps (1,-1) and
// horizontal steps (k,0). Representation, exhaustive enumeration and the
// three segment statistics (u-segments, internal u-segments, (u,h)-segments).

#include "kpaths/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpaths {

enum class Step : char { up = 'u', horiz = 'h', down = 'd' };

constexpr int height_change(Step s) { return s == Step::up ? 1 : (s == Step::down ? -1 : 0); }

/// A step sequence together with the horizontal span k of its h-steps.
class LatticePath {
 public:
  LatticePath() = default;

  LatticePath(unsigned k, std::vector<Step> steps) : k_(k), steps_(std::move(steps)) {
    if (k_ == 0 && horizontals() != 0) throw std::invalid_argument("k = 0 paths cannot contain h-steps");
  }

  /// Parses the compact {u, d, h} step string, e.g. "uhdud".
  static LatticePath parse(std::string_view text, unsigned k) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'u': steps.push_back(Step::up); break;
        case 'd': steps.push_back(Step::down); break;
        case 'h': steps.push_back(Step::horiz); break;
        default: throw std::invalid_argument(std::string("invalid step character '") + c + "'");
      }
    }
    return LatticePath(k, std::move(steps));
  }

  unsigned k() const { return k_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  unsigned ups() const { return count(Step::up); }
  unsigned downs() const { return count(Step::down); }
  unsigned horizontals() const { return count(Step::horiz); }

  /// x-extent: #u + #d + k * #h.
  unsigned length() const { return ups() + downs() + k_ * horizontals(); }

  int end_height() const { return static_cast<int>(ups()) - static_cast<int>(downs()); }

  /// Ordinate before each step and after the last one (size() + 1 entries).
  std::vector<int> heights() const {
    std::vector<int> h;
    h.reserve(steps_.size() + 1);
    h.push_back(0);
    for (Step s : steps_) h.push_back(h.back() + height_change(s));
    return h;
  }

  bool is_nonnegative() const {
    int h = 0;
    for (Step s : steps_) {
      h += height_change(s);
      if (h < 0) return false;
    }
    return true;
  }

  bool has_horizontal_on_axis() const {
    int h = 0;
    for (Step s : steps_) {
      if (s == Step::horiz && h == 0) return true;
      h += height_change(s);
    }
    return false;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
  }

  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;

 private:
  unsigned count(Step which) const {
    unsigned c = 0;
    for (Step s : steps_) c += (s == which) ? 1U : 0U;
    return c;
  }

  unsigned k_ = 0;
  std::vector<Step> steps_;
};

// ---------------------------------------------------------------------------
// Segment profiles

/// Multiset of segment lengths: counts[i] = number of segments of length i.
struct SegmentProfile {
  std::map<unsigned, unsigned> counts;

  /// Number of segments.
  unsigned r() const {
    unsigned s = 0;
    for (const auto& [len, c] : counts) s += c;
    return s;
  }

  /// Sum of i * counts[i].
  unsigned total_length() const {
    unsigned s = 0;
    for (const auto& [len, c] : counts) s += len * c;
    return s;
  }

  unsigned operator[](unsigned len) const {
    auto it = counts.find(len);
    return it == counts.end() ? 0 : it->second;
  }

  void add(unsigned len) { ++counts[len]; }

  /// Multiset inclusion.
  bool contains(const SegmentProfile& other) const {
    for (const auto& [len, c] : other.counts) {
      if ((*this)[len] < c) return false;
    }
    return true;
  }

  /// The monomial prod t_i^{counts[i]}.
  BigRat weight(const WeightVector& t) const {
    BigRat w(1);
    for (const auto& [len, c] : counts) w *= pow(t[len], c);
    return w;
  }

  /// (r_1, ..., r_m) with r_i = counts[i].
  std::vector<unsigned> as_type(unsigned m) const {
    std::vector<unsigned> v(m, 0);
    for (const auto& [len, c] : counts) {
      if (len > m) throw std::out_of_range("segment longer than type size");
      v[len - 1] = c;
    }
    return v;
  }

  bool operator==(const SegmentProfile&) const = default;
};

namespace detail {

// Calls visit(start, length) for each maximal run of up-steps.
template <class Visit>
void for_each_u_segment(const LatticePath& path, Visit visit) {
  const auto& s = path.steps();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != Step::up) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] == Step::up) ++i;
    visit(start, static_cast<unsigned>(i - start));
  }
}

}  // namespace detail

/// alpha-profile: lengths of all maximal up-runs.
inline SegmentProfile u_segment_profile(const LatticePath& path) {
  SegmentProfile p;
  detail::for_each_u_segment(path, [&](std::size_t, unsigned len) { p.add(len); });
  return p;
}

/// beta-profile: every u-segment except one starting at position 0. A
/// u-segment after a leading h-step is internal.
inline SegmentProfile internal_u_segment_profile(const LatticePath& path) {
  SegmentProfile p;
  detail::for_each_u_segment(path, [&](std::size_t start, unsigned len) {
    if (start != 0) p.add(len);
  });
  return p;
}

/// u-segments whose starting point lies strictly above the x-axis. Differs
/// from the beta-profile on paths that return to the axis and rise again.
inline SegmentProfile off_axis_u_segment_profile(const LatticePath& path) {
  SegmentProfile p;
  const std::vector<int> h = path.heights();
  detail::for_each_u_segment(path, [&](std::size_t start, unsigned len) {
    if (h[start] != 0) p.add(len);
  });
  return p;
}

/// Up-step counts of the maximal {u, h}-runs.
struct UhSegments {
  unsigned first = 0;              // run starting before the first down-step
  std::vector<unsigned> internal;  // every later run, in order
  bool operator==(const UhSegments&) const = default;
};

inline UhSegments uh_segment_profile(const LatticePath& path) {
  UhSegments out;
  const auto& s = path.steps();
  bool seen_down = false;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == Step::down) {
      seen_down = true;
      ++i;
      continue;
    }
    unsigned ups = 0;
    while (i < s.size() && s[i] != Step::down) {
      ups += (s[i] == Step::up) ? 1U : 0U;
      ++i;
    }
    if (seen_down) {
      out.internal.push_back(ups);
    } else {
      out.first = ups;
    }
  }
  return out;
}

namespace detail {

inline void check_modulus(unsigned k, unsigned ell) {
  if (k == 0) throw std::invalid_argument("segment conditions need k >= 1");
  if (ell >= k) throw std::invalid_argument("segment conditions need 0 <= ell < k");
}

}  // namespace detail

/// Internal (u,h)-segments have up-count = 0 (mod k); the first has up-count
/// = ell (mod k).
inline bool satisfies_tilde_conditions(const LatticePath& path, unsigned k, unsigned ell) {
  detail::check_modulus(k, ell);
  const UhSegments uh = uh_segment_profile(path);
  if (uh.first % k != ell) return false;
  for (unsigned c : uh.internal) {
    if (c % k != 0) return false;
  }
  return true;
}

/// Internal u-segments have length = 0 (mod k); the u-segment at position 0
/// has length = ell (mod k). Without such a segment the first condition reads
/// as length 0.
inline bool satisfies_bar_conditions(const LatticePath& path, unsigned k, unsigned ell) {
  detail::check_modulus(k, ell);
  unsigned first = 0;
  bool ok = true;
  detail::for_each_u_segment(path, [&](std::size_t start, unsigned len) {
    if (start == 0) {
      first = len;
    } else if (len % k != 0) {
      ok = false;
    }
  });
  return ok && first % k == ell;
}

// ---------------------------------------------------------------------------
// Families and enumeration

/// L (free), P (nonnegative) or Q (nonnegative, no h-step on the axis) with
/// m up-steps, m down-steps and j horizontal steps of span k.
struct PathFamily {
  unsigned k = 0;
  unsigned m = 0;
  unsigned j = 0;
  bool nonnegative = true;
  bool no_h_on_axis = false;

  static PathFamily free(unsigned k, unsigned m, unsigned j) { return {k, m, j, false, false}; }
  static PathFamily p(unsigned k, unsigned m, unsigned j) { return {k, m, j, true, false}; }
  static PathFamily q(unsigned k, unsigned m, unsigned j) { return {k, m, j, true, true}; }

  unsigned length() const { return 2 * m + k * j; }

  void validate() const {
    if (k == 0 && j > 0) throw std::invalid_argument("k = 0 forces j = 0");
  }

  bool contains(const LatticePath& path) const {
    if (path.k() != k || path.ups() != m || path.downs() != m || path.horizontals() != j) return false;
    if (nonnegative && !path.is_nonnegative()) return false;
    if (no_h_on_axis && path.has_horizontal_on_axis()) return false;
    return true;
  }
};

using PathVisitor = std::function<void(const LatticePath&)>;

/// Depth-first generation of every member of `family`, in lexicographic step
/// order with u < h < d. The visited path is only valid during the call.
inline void enumerate_paths(const PathFamily& family, const PathVisitor& visit) {
  family.validate();
  const unsigned total = 2 * family.m + family.j;
  std::vector<Step> buf;
  buf.reserve(total);
  LatticePath scratch;

  std::function<void(int, unsigned, unsigned, unsigned)> rec = [&](int h, unsigned u_left, unsigned d_left,
                                                                  unsigned h_left) {
    if (u_left == 0 && d_left == 0 && h_left == 0) {
      scratch = LatticePath(family.k, buf);
      visit(scratch);
      return;
    }
    if (u_left > 0) {
      buf.push_back(Step::up);
      rec(h + 1, u_left - 1, d_left, h_left);
      buf.pop_back();
    }
    // An h-step at height 0 is only usable if it can be followed legally.
    if (h_left > 0 && !(family.no_h_on_axis && h == 0)) {
      buf.push_back(Step::horiz);
      rec(h, u_left, d_left, h_left - 1);
      buf.pop_back();
    }
    if (d_left > 0 && !(family.nonnegative && h == 0)) {
      buf.push_back(Step::down);
      rec(h - 1, u_left, d_left - 1, h_left);
      buf.pop_back();
    }
  };
  rec(0, family.m, family.m, family.j);
}

inline std::vector<LatticePath> collect_paths(const PathFamily& family) {
  std::vector<LatticePath> out;
  enumerate_paths(family, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

using PathFilter = std::function<bool(const LatticePath&)>;

inline BigInt count_family(const PathFamily& family, const PathFilter& filter = {}) {
  std::uint64_t n = 0;
  enumerate_paths(family, [&](const LatticePath& p) {
    if (!filter || filter(p)) ++n;
  });
  return BigInt(static_cast<unsigned long>(n));
}

/// Visits every member of the families with the given k whose length
/// 2m + kj equals `length` (k = 0 contributes only j = 0).
inline void enumerate_by_length(unsigned k, unsigned length, bool nonnegative, bool no_h_on_axis,
                                const PathVisitor& visit) {
  for (unsigned m = 0; 2 * m <= length; ++m) {
    const unsigned rest = length - 2 * m;
    unsigned j = 0;
    if (k == 0) {
      if (rest != 0) continue;
    } else {
      if (rest % k != 0) continue;
      j = rest / k;
    }
    enumerate_paths(PathFamily{k, m, j, nonnegative, no_h_on_axis}, visit);
  }
}

inline BigInt count_by_length(unsigned k, unsigned length, const PathFilter& filter = {}) {
  std::uint64_t n = 0;
  enumerate_by_length(k, length, true, false, [&](const LatticePath& p) {
    if (!filter || filter(p)) ++n;
  });
  return BigInt(static_cast<unsigned long>(n));
}

}  // namespace kpaths
