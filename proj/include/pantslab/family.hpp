#pragma once

// The two-parameter curve family, the full Diophantine solution set, and
// pair certificates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pantslab/exec.hpp"
#include "pantslab/intersection.hpp"
#include "pantslab/words.hpp"

namespace pantslab {

inline constexpr const char* kToolVersion = "pantslab 1.0.0";

struct FamilyParams {
  int k = 0;  ///< even, positive
  int t = 0;  ///< odd, >= 3

  std::optional<std::string> violation() const;
  void validate() const;
};

/// ((7k+t, 4k+t+1, t), (8k+t, 2k+t+1, k+t)).
std::pair<TwistTriple, TwistTriple> family_pair(const FamilyParams& p);

/// (a-a') + 3(b-b') + 5(c-c') = 0 and (a-a') + (b-b') + (c-c') = 0.
bool diophantine_check(const TwistTriple& first, const TwistTriple& second);

using TriplePair = std::pair<TwistTriple, TwistTriple>;

/// All unordered pairs of distinct valid triples with a <= max_a that pass
/// diophantine_check, each as (smaller, larger), sorted lexicographically.
/// Walks the solution line (d, -2d, d) from each base triple.
std::vector<TriplePair> diophantine_enumerate(int max_a, Exec exec = Exec::parallel);

enum class Verdict { verified, failed };

/// One curve's half of a certificate. Optional fields stay empty when the
/// pipeline stopped before computing them.
struct CurveRecord {
  TwistTriple triple;
  std::optional<std::string> word;
  std::optional<std::uint64_t> selfint_formula;
  std::optional<std::uint64_t> selfint_computed;
  std::optional<ArcVector> arcs;
  std::optional<std::vector<int>> y_exponents;
  std::optional<std::string> trace_polynomial;
};

struct PairCertificate {
  CurveRecord first;
  CurveRecord second;
  std::optional<bool> diophantine;
  std::optional<bool> classes_distinct;
  std::optional<bool> trace_polys_equal;
  Verdict verdict = Verdict::failed;
  std::string reason;  ///< empty when verified
  std::string tool_version = kToolVersion;
};

/// Runs the full pipeline. Throws InvariantViolation if the triples are
/// identical; any other failure becomes a failed verdict with its reason.
/// When `search` is empty, LiftSearch::for_length of the longer word is used.
PairCertificate verify_pair(const TwistTriple& first, const TwistTriple& second,
                            const std::optional<LiftSearch>& search = std::nullopt,
                            Exec exec = Exec::parallel);

/// Certificates for many pairs, in input order. Pairs are independent and
/// run concurrently under Exec::parallel.
std::vector<PairCertificate> verify_pairs(const std::vector<TriplePair>& pairs,
                                          const std::optional<LiftSearch>& search = std::nullopt,
                                          Exec exec = Exec::parallel);

}  // namespace pantslab
