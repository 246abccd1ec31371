#pragma once

// Combinatorial circle at infinity of F(x, y). The pants ribbon structure
// fixes a cyclic order of the four directions at every vertex of the Cayley
// tree; that order extends to a cyclic order on ends of the tree, which is
// all the linking and separation predicates below need.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pantslab/words.hpp"

namespace pantslab {

class RibbonStructure {
 public:
  /// Throws InvariantViolation if a direction is missing or repeated.
  static RibbonStructure from_order(std::array<Generator, 4> order);
  /// Four letters, e.g. "xXyY".
  static RibbonStructure parse(std::string_view text);

  const std::array<Generator, 4>& order() const { return order_; }
  int position(Generator g) const { return position_[static_cast<std::size_t>(index_of(g))]; }
  Generator successor(Generator g) const {
    return order_[static_cast<std::size_t>((position(g) + 1) % 4)];
  }
  /// Reverses the cyclic order (the mirror-image surface).
  RibbonStructure mirrored() const;
  std::string to_string() const { return pantslab::to_string(order_); }

  friend bool operator==(const RibbonStructure&, const RibbonStructure&) = default;

 private:
  RibbonStructure() = default;
  std::array<Generator, 4> order_{};
  std::array<int, 4> position_{};
};

/// One boundary walk of the fattened wedge of circles, read starting at the
/// corner (inverse(back()), front()) of the base vertex.
std::vector<CyclicWord> boundary_walks(const RibbonStructure& r);
/// Boundary walks as unoriented classes, one per walk, sorted.
std::vector<CurveClass> boundary_cycles(const RibbonStructure& r);

/// The classes [x], [y], [xy]; the pants model requires these as boundary.
std::vector<CurveClass> pants_boundary_classes();

struct RibbonCandidate {
  RibbonStructure ribbon;
  std::vector<CurveClass> cycles;
  bool accepted = false;
  std::string reason;
};

/// All six cyclic orders that start with x, with the verdict of the pants
/// check for each.
std::vector<RibbonCandidate> survey_ribbons();
/// The first accepted candidate from survey_ribbons(); computed once.
const RibbonStructure& default_ribbon();

/// An eventually periodic reduced infinite word head * repetend^infinity.
class BoundaryPoint {
 public:
  /// Normalizes head * repetend^inf by cancelling at the junction.
  static BoundaryPoint make(const ReducedWord& head, const CyclicWord& repetend);
  /// "head|repetend" using the word syntax on both sides; head may be empty.
  static BoundaryPoint parse(std::string_view text);

  const ReducedWord& head() const { return head_; }
  const CyclicWord& repetend() const { return repetend_; }

  Generator letter(std::size_t k) const {
    const std::size_t h = head_.size();
    return k < h ? head_[k] : repetend_[(k - h) % repetend_.size()];
  }
  BoundaryPoint translated(const ReducedWord& g) const;
  std::string to_string() const { return head_.to_string() + "|" + repetend_.to_string(); }

 private:
  BoundaryPoint(ReducedWord head, CyclicWord repetend)
      : head_(std::move(head)), repetend_(std::move(repetend)) {}
  ReducedWord head_;
  CyclicWord repetend_;
};

/// Depth past which agreeing points are declared equal:
/// |head1| + |head2| + 2(|rep1| + |rep2|) + 4.
std::size_t comparison_depth(const BoundaryPoint& p, const BoundaryPoint& q);
/// Index of the first differing letter, or nullopt if the points coincide.
std::optional<std::size_t> first_divergence(const BoundaryPoint& p, const BoundaryPoint& q);
bool same_point(const BoundaryPoint& p, const BoundaryPoint& q);

/// Endpoints of the axis of a group element: attracting and repelling.
struct AxisPair {
  BoundaryPoint plus;
  BoundaryPoint minus;

  AxisPair translated(const ReducedWord& g) const {
    return {plus.translated(g), minus.translated(g)};
  }
};

/// Unordered comparison of the endpoint pairs.
bool same_line(const AxisPair& a, const AxisPair& b);

/// (w^inf, (w^-1)^inf) for a cyclically reduced word; passes through 1.
AxisPair axis(const CyclicWord& w);
AxisPair axis(const CurveClass& cls);
/// For g c g^-1 with c cyclically reduced: (g c^inf, g (c^-1)^inf).
/// Throws InvariantViolation for the trivial element.
AxisPair axis_of_element(const ReducedWord& element);

enum class Orientation : std::int8_t { negative = -1, positive = 1 };

/// Cyclic orientation of three pairwise distinct boundary points. Throws
/// InvariantViolation("coincident points") otherwise.
Orientation cyclic_order(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                         const RibbonStructure& ribbon = default_ribbon());

/// True iff the endpoints of b separate those of a. Throws
/// InvariantViolation("degenerate pair") if the axes share an endpoint.
bool link(const AxisPair& a, const AxisPair& b, const RibbonStructure& ribbon = default_ribbon());

/// True iff b1 and b2 lie in different complementary intervals of a's
/// endpoints. Requires a unlinked from both, no shared endpoints, b1 != b2.
bool separates(const AxisPair& a, const AxisPair& b1, const AxisPair& b2,
               const RibbonStructure& ribbon = default_ribbon());

}  // namespace pantslab
