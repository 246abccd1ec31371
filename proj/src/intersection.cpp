#include "pantslab/intersection.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "parallel.hpp"
#include "pantslab/errors.hpp"

namespace pantslab {

std::string_view arc_name(ArcType arc) {
  switch (arc) {
    case ArcType::xx: return "xx";
    case ArcType::yy: return "yy";
    case ArcType::zz: return "zz";
    case ArcType::xy: return "xy";
    case ArcType::yz: return "yz";
    case ArcType::xz: return "xz";
  }
  return "?";
}

LiftSearch LiftSearch::for_length(std::size_t word_length) {
  const int n = static_cast<int>(word_length);
  return {n + 2, 2, 4 * n + 8};
}

void LiftSearch::validate(std::size_t longest_word) const {
  if (escalation_step < 1) throw InvariantViolation("lift search: escalation_step must be positive");
  if (initial_radius < static_cast<int>(longest_word) + 2) {
    throw InvariantViolation("lift search: initial_radius " + std::to_string(initial_radius) +
                             " is below word length + 2 = " + std::to_string(longest_word + 2));
  }
  if (max_radius < initial_radius) {
    throw InvariantViolation("lift search: max_radius below initial_radius");
  }
}

namespace {

// Lines through the base vertex: the axes of the rotations of w.
std::vector<AxisPair> lines_through_base(const CyclicWord& w) {
  std::vector<AxisPair> lines;
  lines.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) lines.push_back(axis(w.rotated(i)));
  return lines;
}

// Counts the pair (a, b) of lines through the base vertex exactly when the
// base vertex is where b enters their common segment; every crossing orbit
// has exactly one such representative.
bool counts_as_crossing(const AxisPair& a, const AxisPair& b, const RibbonStructure& ribbon) {
  const Generator b_back = b.minus.letter(0);
  if (b_back == a.plus.letter(0) || b_back == a.minus.letter(0)) return false;
  return link(a, b, ribbon);
}

void require_primitive(const CyclicWord& w) {
  if (!is_primitive(w)) throw InvariantViolation("requires primitive class: " + w.to_string());
}

}  // namespace

std::uint64_t self_intersection(const CyclicWord& word, const RibbonStructure& ribbon, Exec exec) {
  require_primitive(word);
  const auto lines = lines_through_base(word);
  const std::size_t n = lines.size();
  const std::uint64_t ordered = detail::sum_over(n, exec, [&](std::size_t i) {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && counts_as_crossing(lines[i], lines[j], ribbon)) ++c;
    }
    return c;
  });
  // Each unordered crossing is seen once from each side.
  return ordered / 2;
}

std::uint64_t self_intersection(const CurveClass& cls, const RibbonStructure& ribbon, Exec exec) {
  return self_intersection(cls.word(), ribbon, exec);
}

std::uint64_t selfint_formula(const TwistTriple& t) {
  t.validate();
  return static_cast<std::uint64_t>((t.a - 1) / 2 + 3 * ((t.b - 2) / 2) + 5 * ((t.c - 1) / 2) + 6);
}

std::uint64_t pairwise_intersection(const CyclicWord& first, const CyclicWord& second,
                                    const RibbonStructure& ribbon, Exec exec) {
  require_primitive(first);
  require_primitive(second);
  if (canonicalize(first) == canonicalize(second)) {
    throw InvariantViolation("pairwise_intersection requires distinct classes");
  }
  const auto a_lines = lines_through_base(first);
  const auto b_lines = lines_through_base(second);
  return detail::sum_over(a_lines.size(), exec, [&](std::size_t i) {
    std::uint64_t c = 0;
    for (const auto& b : b_lines) {
      if (counts_as_crossing(a_lines[i], b, ribbon)) ++c;
    }
    return c;
  });
}

std::uint64_t pairwise_intersection(const CurveClass& first, const CurveClass& second,
                                    const RibbonStructure& ribbon, Exec exec) {
  return pairwise_intersection(first.word(), second.word(), ribbon, exec);
}

namespace {

enum class BoundaryKind { x, y, z };

struct Corner {
  CyclicWord walk;  // boundary line through this corner, read from the base vertex
  BoundaryKind kind;
};

std::vector<Corner> base_corners(const RibbonStructure& ribbon) {
  const auto cx = CurveClass::parse("x");
  const auto cy = CurveClass::parse("y");
  std::vector<Corner> corners;
  bool has_x = false;
  bool has_y = false;
  for (Generator start : ribbon.order()) {
    Letters walk;
    Generator d = start;
    do {
      walk.push_back(d);
      d = ribbon.successor(inverse(d));
    } while (d != start);
    auto w = CyclicWord::from_letters(std::move(walk));
    const auto cls = canonicalize(w);
    BoundaryKind kind = BoundaryKind::z;
    if (cls == cx) {
      kind = BoundaryKind::x;
      has_x = true;
    } else if (cls == cy) {
      kind = BoundaryKind::y;
      has_y = true;
    }
    corners.push_back({std::move(w), kind});
  }
  if (!has_x || !has_y) {
    throw InvariantViolation("ribbon " + ribbon.to_string() +
                             " does not have x and y as boundary components");
  }
  return corners;
}

const Corner& first_corner(const std::vector<Corner>& corners, BoundaryKind kind) {
  for (const auto& c : corners) {
    if (c.kind == kind) return c;
  }
  throw InvariantViolation("ribbon has no corner on the requested boundary");
}

std::pair<BoundaryKind, BoundaryKind> endpoints(ArcType arc) {
  using K = BoundaryKind;
  switch (arc) {
    case ArcType::xx: return {K::x, K::x};
    case ArcType::yy: return {K::y, K::y};
    case ArcType::zz: return {K::z, K::z};
    case ArcType::xy: return {K::x, K::y};
    case ArcType::yz: return {K::y, K::z};
    case ArcType::xz: return {K::x, K::z};
  }
  return {K::x, K::x};
}

ReducedWord as_reduced(std::span<const Generator> letters) { return ReducedWord::reduce(letters); }

}  // namespace

ArcLift arc_lift(ArcType arc, const RibbonStructure& ribbon) {
  const auto corners = base_corners(ribbon);
  const auto [p, q] = endpoints(arc);
  if (p != q) {
    // A chord of the base vertex disk between the two corners.
    return {axis(first_corner(corners, p).walk), axis(first_corner(corners, q).walk),
            {ReducedWord{}}};
  }
  // Leave boundary p, run once around a second boundary, return to p.
  const BoundaryKind around = p == BoundaryKind::y ? BoundaryKind::x
                              : p == BoundaryKind::x ? BoundaryKind::y
                                                     : BoundaryKind::x;
  const auto& home = first_corner(corners, p).walk;
  const auto turn = first_corner(corners, around).walk.letters();
  const ReducedWord shift = as_reduced(turn);
  std::vector<ReducedWord> support;
  for (std::size_t k = 0; k <= turn.size(); ++k) support.push_back(as_reduced(turn.subspan(0, k)));
  AxisPair line = axis(home);
  return {line, line.translated(shift), std::move(support)};
}

namespace {

Letters power_letters(const CyclicWord& w, long m) {
  Letters out;
  const Letters inv = inverse_letters(w.letters());
  const auto& unit = m >= 0 ? Letters(w.letters().begin(), w.letters().end()) : inv;
  for (long i = 0; i < std::abs(m); ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

// Vertex at signed position k along the axis of w (position 0 is the base
// vertex, position n is w).
ReducedWord axis_vertex(const CyclicWord& w, long k) {
  const long n = static_cast<long>(w.size());
  long q = k / n;
  long r = k % n;
  if (r < 0) {
    r += n;
    --q;
  }
  Letters letters = power_letters(w, q);
  letters.insert(letters.end(), w.letters().begin(), w.letters().begin() + r);
  return ReducedWord::reduce(letters);
}

bool shortlex_less(std::span<const Generator> a, std::span<const Generator> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Shortlex-least element of the right coset <w> g.
Letters coset_key(const CyclicWord& w, const ReducedWord& g) {
  const long n = static_cast<long>(w.size());
  const long bound = 2 * static_cast<long>(g.size()) / n + 2;
  std::optional<Letters> best;
  for (long m = -bound; m <= bound; ++m) {
    Letters cat = power_letters(w, m);
    cat.insert(cat.end(), g.letters().begin(), g.letters().end());
    auto red = ReducedWord::reduce(cat);
    Letters candidate(red.letters().begin(), red.letters().end());
    if (!best || shortlex_less(candidate, *best)) best = std::move(candidate);
  }
  return *best;
}

}  // namespace

std::uint64_t arc_intersection_at_radius(const CyclicWord& word, ArcType arc, int radius,
                                         const RibbonStructure& ribbon, Exec exec) {
  const ArcLift lift = arc_lift(arc, ribbon);
  const AxisPair curve = axis(word);

  // Translates g.lift whose support meets the axis within the radius, one
  // per <w>-orbit.
  std::set<Letters> seen;
  std::vector<ReducedWord> translates;
  for (long k = -radius; k <= radius; ++k) {
    const ReducedWord v = axis_vertex(word, k);
    for (const auto& s : lift.support) {
      ReducedWord g = v * s.inverse();
      if (seen.insert(coset_key(word, g)).second) translates.push_back(std::move(g));
    }
  }
  return detail::sum_over(translates.size(), exec, [&](std::size_t i) -> std::uint64_t {
    const auto& g = translates[i];
    return separates(curve, lift.first.translated(g), lift.second.translated(g), ribbon) ? 1 : 0;
  });
}

namespace {

void require_interior(const CyclicWord& word, const RibbonStructure& ribbon) {
  if (!is_primitive(word)) {
    throw InvariantViolation("not an interior class: " + word.to_string() + " is not primitive");
  }
  const auto cls = canonicalize(word);
  for (const auto& boundary : boundary_cycles(ribbon)) {
    if (cls == boundary) {
      throw InvariantViolation("not an interior class: " + word.to_string() +
                               " is a boundary curve");
    }
    if (pairwise_intersection(cls, boundary, ribbon, Exec::serial) != 0) {
      throw InvariantViolation("not an interior class: " + word.to_string() +
                               " meets boundary " + boundary.to_string());
    }
  }
}

StabilizedCount stabilize(const CyclicWord& word, ArcType arc, const LiftSearch& search,
                          const RibbonStructure& ribbon, Exec exec) {
  int radius = search.initial_radius;
  std::uint64_t count = arc_intersection_at_radius(word, arc, radius, ribbon, exec);
  for (;;) {
    const int next = radius + search.escalation_step;
    if (next > search.max_radius) {
      throw UnstableEnumeration("unstable enumeration: arc " + std::string(arc_name(arc)) +
                                " count did not settle by radius " +
                                std::to_string(search.max_radius));
    }
    const std::uint64_t next_count = arc_intersection_at_radius(word, arc, next, ribbon, exec);
    if (next_count == count) return {count, radius};
    radius = next;
    count = next_count;
  }
}

}  // namespace

StabilizedCount arc_intersection(const CyclicWord& word, ArcType arc, const LiftSearch& search,
                                 const RibbonStructure& ribbon, Exec exec) {
  search.validate(word.size());
  require_interior(word, ribbon);
  return stabilize(word, arc, search, ribbon, exec);
}

StabilizedCount arc_intersection(const CurveClass& cls, ArcType arc, const LiftSearch& search,
                                 const RibbonStructure& ribbon, Exec exec) {
  return arc_intersection(cls.word(), arc, search, ribbon, exec);
}

ArcSpectrum arc_spectrum(const CyclicWord& word, const LiftSearch& search,
                         const RibbonStructure& ribbon, Exec exec) {
  search.validate(word.size());
  require_interior(word, ribbon);
  ArcSpectrum out;
  for (ArcType arc : kAllArcTypes) {
    const auto result = stabilize(word, arc, search, ribbon, exec);
    out.counts[arc] = result.count;
    out.stabilized_radius[static_cast<std::size_t>(arc)] = result.radius;
  }
  return out;
}

ArcVector arc_vector(const CurveClass& cls, const LiftSearch& search,
                     const RibbonStructure& ribbon, Exec exec) {
  return arc_spectrum(cls.word(), search, ribbon, exec).counts;
}

bool is_simple(const CurveClass& cls, const RibbonStructure& ribbon) {
  return self_intersection(cls, ribbon) == 0;
}

}  // namespace pantslab
