#pragma once

// Intersection counts on the pair of pants, computed from linking of lifts
// in the Cayley tree.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pantslab/boundary.hpp"
#include "pantslab/exec.hpp"
#include "pantslab/words.hpp"

namespace pantslab {

/// The six essential simple arcs, named by the boundary components holding
/// their endpoints. Boundary z is the class of xy.
enum class ArcType : std::uint8_t { xx, yy, zz, xy, yz, xz };

inline constexpr std::array<ArcType, 6> kAllArcTypes = {ArcType::xx, ArcType::yy, ArcType::zz,
                                                        ArcType::xy, ArcType::yz, ArcType::xz};

std::string_view arc_name(ArcType arc);

struct ArcVector {
  std::array<std::uint64_t, 6> counts{};

  std::uint64_t operator[](ArcType arc) const { return counts[static_cast<std::size_t>(arc)]; }
  std::uint64_t& operator[](ArcType arc) { return counts[static_cast<std::size_t>(arc)]; }
  friend bool operator==(const ArcVector&, const ArcVector&) = default;
};

/// Radius schedule for arc-lift enumeration. Radius counts vertices of the
/// curve's axis on either side of the base vertex.
struct LiftSearch {
  int initial_radius = 0;
  int escalation_step = 2;
  int max_radius = 0;

  /// initial |w| + 2, step 2, cap 4|w| + 8.
  static LiftSearch for_length(std::size_t word_length);
  /// Throws InvariantViolation if the schedule cannot cover words of the
  /// given length.
  void validate(std::size_t longest_word) const;
};

/// Number of pairs of distinct lifts of the class that cross, up to the
/// deck group; equals the minimal self-intersection number. Requires a
/// primitive class.
std::uint64_t self_intersection(const CurveClass& cls,
                                const RibbonStructure& ribbon = default_ribbon(),
                                Exec exec = Exec::parallel);
/// Same count for any cyclically reduced representative (any rotation or
/// orientation).
std::uint64_t self_intersection(const CyclicWord& word,
                                const RibbonStructure& ribbon = default_ribbon(),
                                Exec exec = Exec::parallel);

/// (a-1)/2 + 3(b-2)/2 + 5(c-1)/2 + 6.
std::uint64_t selfint_formula(const TwistTriple& t);

/// Geometric intersection number of two distinct primitive classes.
std::uint64_t pairwise_intersection(const CyclicWord& first, const CyclicWord& second,
                                    const RibbonStructure& ribbon = default_ribbon(),
                                    Exec exec = Exec::parallel);
std::uint64_t pairwise_intersection(const CurveClass& first, const CurveClass& second,
                                    const RibbonStructure& ribbon = default_ribbon(),
                                    Exec exec = Exec::parallel);

/// A representative lift of an arc: the two boundary lines it joins and the
/// tree vertices its fattened neighborhood touches.
struct ArcLift {
  AxisPair first;
  AxisPair second;
  std::vector<ReducedWord> support;
};

/// Derives the lift of `arc` from the corners of the ribbon at the base
/// vertex. Requires a ribbon whose boundary contains [x] and [y].
ArcLift arc_lift(ArcType arc, const RibbonStructure& ribbon = default_ribbon());

/// Crossing count of arc lifts met by the axis within `radius`, up to the
/// cyclic group of the curve. Stabilizes once radius reaches |w|.
std::uint64_t arc_intersection_at_radius(const CyclicWord& word, ArcType arc, int radius,
                                         const RibbonStructure& ribbon = default_ribbon(),
                                         Exec exec = Exec::parallel);

struct StabilizedCount {
  std::uint64_t count = 0;
  int radius = 0;  ///< first radius whose count matched the next one
};

/// Escalates the radius until two consecutive radii agree. Throws
/// UnstableEnumeration past max_radius and InvariantViolation
/// ("not an interior class") for non-primitive or peripheral classes.
StabilizedCount arc_intersection(const CyclicWord& word, ArcType arc, const LiftSearch& search,
                                 const RibbonStructure& ribbon = default_ribbon(),
                                 Exec exec = Exec::parallel);
StabilizedCount arc_intersection(const CurveClass& cls, ArcType arc, const LiftSearch& search,
                                 const RibbonStructure& ribbon = default_ribbon(),
                                 Exec exec = Exec::parallel);

struct ArcSpectrum {
  ArcVector counts;
  std::array<int, 6> stabilized_radius{};
};

ArcSpectrum arc_spectrum(const CyclicWord& word, const LiftSearch& search,
                         const RibbonStructure& ribbon = default_ribbon(),
                         Exec exec = Exec::parallel);
ArcVector arc_vector(const CurveClass& cls, const LiftSearch& search,
                     const RibbonStructure& ribbon = default_ribbon(), Exec exec = Exec::parallel);

bool is_simple(const CurveClass& cls, const RibbonStructure& ribbon = default_ribbon());

}  // namespace pantslab
