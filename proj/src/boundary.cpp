#include "pantslab/boundary.hpp"

#include <algorithm>

#include "pantslab/errors.hpp"

namespace pantslab {

RibbonStructure RibbonStructure::from_order(std::array<Generator, 4> order) {
  RibbonStructure r;
  r.order_ = order;
  r.position_.fill(-1);
  for (int i = 0; i < 4; ++i) {
    auto& slot = r.position_[static_cast<std::size_t>(index_of(order[static_cast<std::size_t>(i)]))];
    if (slot != -1) {
      throw InvariantViolation("ribbon order repeats direction '" +
                               std::string(1, to_char(order[static_cast<std::size_t>(i)])) + "'");
    }
    slot = i;
  }
  return r;
}

RibbonStructure RibbonStructure::parse(std::string_view text) {
  Letters letters = parse_letters(text);
  if (letters.size() != 4) {
    throw InvariantViolation("ribbon order needs exactly four directions, got " +
                             std::to_string(letters.size()));
  }
  return from_order({letters[0], letters[1], letters[2], letters[3]});
}

RibbonStructure RibbonStructure::mirrored() const {
  return from_order({order_[0], order_[3], order_[2], order_[1]});
}

std::vector<CyclicWord> boundary_walks(const RibbonStructure& r) {
  // Leave along direction d, arrive through inverse(d), turn to its successor.
  std::array<bool, 4> used{};
  std::vector<CyclicWord> walks;
  for (Generator start : r.order()) {
    if (used[static_cast<std::size_t>(index_of(start))]) continue;
    Letters walk;
    Generator d = start;
    while (!used[static_cast<std::size_t>(index_of(d))]) {
      used[static_cast<std::size_t>(index_of(d))] = true;
      walk.push_back(d);
      d = r.successor(inverse(d));
    }
    walks.push_back(CyclicWord::from_letters(std::move(walk)));
  }
  return walks;
}

std::vector<CurveClass> boundary_cycles(const RibbonStructure& r) {
  std::vector<CurveClass> out;
  for (const auto& w : boundary_walks(r)) out.push_back(canonicalize(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveClass> pants_boundary_classes() {
  std::vector<CurveClass> out{CurveClass::parse("x"), CurveClass::parse("y"),
                              CurveClass::parse("xy")};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RibbonCandidate> survey_ribbons() {
  using G = Generator;
  std::array<G, 3> rest{G::X, G::y, G::Y};
  const auto expected = pants_boundary_classes();
  std::vector<RibbonCandidate> out;
  do {
    auto ribbon = RibbonStructure::from_order({G::x, rest[0], rest[1], rest[2]});
    auto cycles = boundary_cycles(ribbon);
    RibbonCandidate cand{ribbon, cycles, false, {}};
    if (cycles.size() == 1) {
      cand.reason = "one boundary cycle (punctured torus)";
    } else if (cycles != expected) {
      cand.reason = "boundary cycles are not {x, y, xy}";
    } else {
      cand.accepted = true;
    }
    out.push_back(std::move(cand));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

const RibbonStructure& default_ribbon() {
  static const RibbonStructure ribbon = [] {
    for (auto& cand : survey_ribbons()) {
      if (cand.accepted) return cand.ribbon;
    }
    throw Error("no ribbon order realizes the pants boundary");
  }();
  return ribbon;
}

BoundaryPoint BoundaryPoint::make(const ReducedWord& head, const CyclicWord& repetend) {
  const std::size_t n = repetend.size();
  std::size_t keep = head.size();
  std::size_t offset = 0;
  while (keep > 0 && head[keep - 1] == inverse(repetend[offset % n])) {
    --keep;
    ++offset;
  }
  return BoundaryPoint(ReducedWord::reduce(head.letters().subspan(0, keep)),
                       repetend.rotated(offset % n));
}

BoundaryPoint BoundaryPoint::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw InvariantViolation("boundary point must be written head|repetend");
  }
  auto head = ReducedWord::parse(text.substr(0, bar));
  auto rep = ReducedWord::parse(text.substr(bar + 1));
  Letters rep_letters(rep.letters().begin(), rep.letters().end());
  return make(head, CyclicWord::from_letters(std::move(rep_letters)));
}

BoundaryPoint BoundaryPoint::translated(const ReducedWord& g) const {
  return make(g * head_, repetend_);
}

std::size_t comparison_depth(const BoundaryPoint& p, const BoundaryPoint& q) {
  return p.head().size() + q.head().size() +
         2 * (p.repetend().size() + q.repetend().size()) + 4;
}

std::optional<std::size_t> first_divergence(const BoundaryPoint& p, const BoundaryPoint& q) {
  const std::size_t depth = comparison_depth(p, q);
  for (std::size_t k = 0; k < depth; ++k) {
    if (p.letter(k) != q.letter(k)) return k;
  }
  return std::nullopt;
}

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q) {
  return !first_divergence(p, q).has_value();
}

bool same_line(const AxisPair& a, const AxisPair& b) {
  return (same_point(a.plus, b.plus) && same_point(a.minus, b.minus)) ||
         (same_point(a.plus, b.minus) && same_point(a.minus, b.plus));
}

AxisPair axis(const CyclicWord& w) {
  return {BoundaryPoint::make(ReducedWord{}, w), BoundaryPoint::make(ReducedWord{}, w.inverse())};
}

AxisPair axis(const CurveClass& cls) { return axis(cls.word()); }

AxisPair axis_of_element(const ReducedWord& element) {
  auto d = cyclic_decompose(element);
  if (!d) throw InvariantViolation("trivial element has no axis");
  return {BoundaryPoint::make(d->conjugator, d->core),
          BoundaryPoint::make(d->conjugator, d->core.inverse())};
}

namespace {

Orientation orient(Generator a, Generator b, Generator c, const RibbonStructure& r) {
  const int pa = r.position(a);
  const int db = (r.position(b) - pa + 4) % 4;
  const int dc = (r.position(c) - pa + 4) % 4;
  return db < dc ? Orientation::positive : Orientation::negative;
}

}  // namespace

Orientation cyclic_order(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                         const RibbonStructure& ribbon) {
  const auto pq = first_divergence(p, q);
  const auto qr = first_divergence(q, r);
  const auto pr = first_divergence(p, r);
  if (!pq || !qr || !pr) throw InvariantViolation("coincident points");
  const std::size_t m = std::min({*pq, *qr, *pr});
  // Exactly one pair can agree past m; the third point is then seen through
  // the edge leading back toward the root.
  if (*pq > m) {
    const std::size_t k = *pq;
    return orient(p.letter(k), q.letter(k), inverse(p.letter(k - 1)), ribbon);
  }
  if (*qr > m) {
    const std::size_t k = *qr;
    return orient(inverse(q.letter(k - 1)), q.letter(k), r.letter(k), ribbon);
  }
  if (*pr > m) {
    const std::size_t k = *pr;
    return orient(p.letter(k), inverse(p.letter(k - 1)), r.letter(k), ribbon);
  }
  return orient(p.letter(m), q.letter(m), r.letter(m), ribbon);
}

namespace {

bool shares_endpoint(const AxisPair& a, const AxisPair& b) {
  return same_point(a.plus, b.plus) || same_point(a.plus, b.minus) ||
         same_point(a.minus, b.plus) || same_point(a.minus, b.minus);
}

}  // namespace

bool link(const AxisPair& a, const AxisPair& b, const RibbonStructure& ribbon) {
  if (shares_endpoint(a, b)) throw InvariantViolation("degenerate pair");
  return cyclic_order(a.plus, b.plus, a.minus, ribbon) !=
         cyclic_order(a.plus, b.minus, a.minus, ribbon);
}

bool separates(const AxisPair& a, const AxisPair& b1, const AxisPair& b2,
               const RibbonStructure& ribbon) {
  if (same_line(b1, b2)) throw InvariantViolation("separates: B1 and B2 are the same line");
  if (shares_endpoint(a, b1) || shares_endpoint(a, b2)) {
    throw InvariantViolation("separates: A shares an endpoint with B1 or B2");
  }
  if (link(a, b1, ribbon) || link(a, b2, ribbon)) {
    throw InvariantViolation("separates: A links B1 or B2");
  }
  return cyclic_order(a.plus, b1.plus, a.minus, ribbon) !=
         cyclic_order(a.plus, b2.plus, a.minus, ribbon);
}

}  // namespace pantslab
