#pragma once

// Word combinatorics in the free group F(x, y) = pi_1 of the pair of pants.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pantslab {

/// One of the four letters. The enumerator order is the total order used for
/// canonical forms: x < X < y < Y (X = x^-1, Y = y^-1).
enum class Generator : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

inline constexpr Generator kAllGenerators[4] = {Generator::x, Generator::X,
                                                Generator::y, Generator::Y};

constexpr Generator inverse(Generator g) {
  return static_cast<Generator>(static_cast<std::uint8_t>(g) ^ 1u);
}
constexpr bool is_x_letter(Generator g) { return static_cast<std::uint8_t>(g) < 2; }
constexpr bool is_positive(Generator g) { return (static_cast<std::uint8_t>(g) & 1u) == 0; }
constexpr int index_of(Generator g) { return static_cast<int>(g); }

char to_char(Generator g);
std::optional<Generator> generator_from_char(char c);

using Letters = std::vector<Generator>;

std::string to_string(std::span<const Generator> letters);
/// Exponent shorthand, e.g. "yxy^3Xy^4Xy^9".
std::string to_compact_string(std::span<const Generator> letters);

/// Parses the textual word syntax: letters x X y Y, optional non-negative
/// exponent suffix ("x^3", "Y^2"), whitespace ignored. No reduction is done.
/// Throws InvariantViolation on malformed input.
Letters parse_letters(std::string_view text);

Letters inverse_letters(std::span<const Generator> letters);

/// A freely reduced word: no letter is adjacent to its inverse.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Reduces the input.
  static ReducedWord reduce(std::span<const Generator> letters);
  static ReducedWord parse(std::string_view text);

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }

  ReducedWord inverse() const;
  std::string to_string() const { return pantslab::to_string(letters_); }

  friend ReducedWord operator*(const ReducedWord& a, const ReducedWord& b);
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  explicit ReducedWord(Letters letters) : letters_(std::move(letters)) {}
  Letters letters_;
};

/// Stack-based free reduction; output is the unique reduced representative.
ReducedWord free_reduce(std::span<const Generator> letters);

/// A nonempty cyclically reduced word, read cyclically.
class CyclicWord {
 public:
  /// Throws InvariantViolation unless `letters` is nonempty and cyclically
  /// reduced.
  static CyclicWord from_letters(Letters letters);

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }

  /// Left rotation by k: letters k..n-1 followed by 0..k-1.
  CyclicWord rotated(std::size_t k) const;
  CyclicWord inverse() const;
  std::string to_string() const { return pantslab::to_string(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(Letters letters) : letters_(std::move(letters)) {}
  Letters letters_;
};

/// Splits a reduced word as g * c * g^-1 with c cyclically reduced.
/// Returns nullopt for the empty word.
struct CyclicDecomposition {
  ReducedWord conjugator;
  CyclicWord core;
};
std::optional<CyclicDecomposition> cyclic_decompose(const ReducedWord& w);

/// Unoriented free homotopy class: the least cyclic shift over the word and
/// its inverse.
class CurveClass {
 public:
  /// Reduces, cyclically reduces and canonicalizes. Throws InvariantViolation
  /// ("trivial class") when the input is trivial in the group.
  static CurveClass from_letters(std::span<const Generator> letters);
  static CurveClass parse(std::string_view text);

  const CyclicWord& word() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  std::string to_string() const { return canonical_.to_string(); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  friend CurveClass canonicalize(const CyclicWord& word);
  explicit CurveClass(CyclicWord w) : canonical_(std::move(w)) {}
  CyclicWord canonical_;
};

CurveClass canonicalize(const CyclicWord& word);

/// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation(std::span<const Generator> letters);

/// True iff the canonical word is not a proper power.
bool is_primitive(const CurveClass& cls);
bool is_primitive(const CyclicWord& word);

/// Half-twist parameters of the curve family.
struct TwistTriple {
  int a = 0;
  int b = 0;
  int c = 0;

  /// Names the first violated constraint, or nullopt when valid.
  std::optional<std::string> violation() const;
  /// Throws InvariantViolation naming the violated constraint.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const TwistTriple&, const TwistTriple&) = default;
  friend auto operator<=>(const TwistTriple&, const TwistTriple&) = default;
};

/// y x y^((c+1)/2) x^-1 y^(b/2) x^-1 y^((a-1)/2); length 4 + (a+b+c)/2.
CyclicWord gamma_word(const TwistTriple& t);

/// Signed lengths of the maximal y-blocks of the cyclic word, blocks merged
/// across the seam; sorted ascending.
std::vector<int> y_exponent_multiset(const CurveClass& cls);
/// Multiset equality allowing a global sign flip.
bool same_up_to_sign(std::span<const int> a, std::span<const int> b);

}  // namespace pantslab
