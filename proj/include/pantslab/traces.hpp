#pragma once

// SL(2) trace polynomials in the Fricke coordinates X = tr x, Y = tr y,
// Z = tr xy, with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "pantslab/words.hpp"

namespace pantslab {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  std::uint32_t degree() const { return x + y + z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic: higher total degree first, then larger (x, y, z).
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a > b;
  }
};

class TracePolynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GradedLexGreater>;

  TracePolynomial() = default;
  static TracePolynomial constant(long c);
  static TracePolynomial variable_x();
  static TracePolynomial variable_y();
  static TracePolynomial variable_z();

  /// Nonzero terms in graded-lex order.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t total_degree() const;

  TracePolynomial& operator+=(const TracePolynomial& other);
  TracePolynomial& operator-=(const TracePolynomial& other);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  /// Evaluates with 512-bit floating arithmetic and rounds once to double.
  double evaluate(double x, double y, double z) const;

  /// "coeff X^i Y^j Z^k" terms in graded-lex order joined by " + "; "0" for
  /// the zero polynomial.
  std::string to_string() const;
  std::vector<std::string> term_strings() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const { return a + d; }
  double determinant() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // valid for det 1
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
};

/// Images of x and y under a representation into SL(2, R).
struct RepresentationPoint {
  Mat2 x_image;
  Mat2 y_image;

  /// Entries uniform in [-2, 2]; rejects determinants <= 0.25 and rescales
  /// to determinant 1.
  static RepresentationPoint random(std::mt19937_64& rng);
  bool valid(double tolerance = 1e-9) const;
};

double evaluate(const TracePolynomial& p, const RepresentationPoint& pt);

/// Memoized trace computation. Keys are canonical cyclic words, so the memo
/// is shared by conjugates and inverses. Not thread-safe; use one instance
/// per thread.
class TraceCalculator {
 public:
  const TracePolynomial& trace(const ReducedWord& w);
  const TracePolynomial& trace(const CurveClass& cls);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const TracePolynomial& trace_of_canonical(const CyclicWord& canonical);
  const TracePolynomial& trace_of_letters(std::span<const Generator> letters);
  TracePolynomial compute(const CyclicWord& canonical);

  std::unordered_map<std::string, TracePolynomial> memo_;
  TracePolynomial two_ = TracePolynomial::constant(2);
};

TracePolynomial trace_polynomial(const ReducedWord& w);
bool trace_equivalent(const CurveClass& first, const CurveClass& second);

}  // namespace pantslab
