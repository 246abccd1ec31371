#include "pantslab/family.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "pantslab/errors.hpp"
#include "pantslab/traces.hpp"

namespace pantslab {

std::optional<std::string> FamilyParams::violation() const {
  if (k <= 0 || k % 2 != 0) return "k must be an even positive integer";
  if (t < 3 || t % 2 == 0) return "t must be an odd integer >= 3";
  return std::nullopt;
}

void FamilyParams::validate() const {
  if (auto v = violation()) {
    throw InvariantViolation("invalid family parameters (k=" + std::to_string(k) +
                             ", t=" + std::to_string(t) + "): " + *v);
  }
}

std::pair<TwistTriple, TwistTriple> family_pair(const FamilyParams& p) {
  p.validate();
  TwistTriple first{7 * p.k + p.t, 4 * p.k + p.t + 1, p.t};
  TwistTriple second{8 * p.k + p.t, 2 * p.k + p.t + 1, p.k + p.t};
  first.validate();
  second.validate();
  return {first, second};
}

bool diophantine_check(const TwistTriple& first, const TwistTriple& second) {
  const long da = first.a - second.a;
  const long db = first.b - second.b;
  const long dc = first.c - second.c;
  return da + 3 * db + 5 * dc == 0 && da + db + dc == 0;
}

namespace {

std::vector<TwistTriple> valid_triples(int max_a) {
  std::vector<TwistTriple> out;
  for (int a = 1; a <= max_a; a += 2) {
    for (int b = 2; b <= a; b += 2) {
      for (int c = 1; c <= b; c += 2) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace

std::vector<TriplePair> diophantine_enumerate(int max_a, Exec exec) {
  if (max_a < 1) throw InvariantViolation("max_a must be positive");
  const auto bases = valid_triples(max_a);
  // Both equations force the difference onto (d, -2d, d); d > 0 picks the
  // orientation where the base is the lexicographically smaller triple.
  auto per_base = detail::map_indices<std::vector<TriplePair>>(
      bases.size(), exec, [&](std::size_t i) {
        std::vector<TriplePair> found;
        const TwistTriple& base = bases[i];
        for (int d = 1; base.a + d <= max_a; ++d) {
          TwistTriple other{base.a + d, base.b - 2 * d, base.c + d};
          if (other.violation()) continue;
          if (diophantine_check(base, other)) found.emplace_back(base, other);
        }
        return found;
      });
  std::vector<TriplePair> out;
  for (auto& chunk : per_base) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

namespace {

void fill_record(CurveRecord& rec, const LiftSearch& search, TraceCalculator& traces,
                 std::optional<CurveClass>& cls, Exec exec) {
  rec.triple.validate();
  const CyclicWord word = gamma_word(rec.triple);
  rec.word = word.to_string();
  rec.selfint_formula = selfint_formula(rec.triple);
  cls = canonicalize(word);
  rec.y_exponents = y_exponent_multiset(*cls);
  rec.selfint_computed = self_intersection(*cls, default_ribbon(), exec);
  rec.arcs = arc_vector(*cls, search, default_ribbon(), exec);
  rec.trace_polynomial = traces.trace(*cls).to_string();
}

}  // namespace

PairCertificate verify_pair(const TwistTriple& first, const TwistTriple& second,
                            const std::optional<LiftSearch>& search, Exec exec) {
  if (first == second) {
    throw InvariantViolation("verify_pair: triples are identical " + first.to_string());
  }
  PairCertificate cert;
  cert.first.triple = first;
  cert.second.triple = second;
  cert.diophantine = diophantine_check(first, second);

  LiftSearch schedule;
  if (search) {
    schedule = *search;
  } else {
    std::size_t longest = 0;
    for (const auto& t : {first, second}) {
      if (!t.violation()) longest = std::max(longest, gamma_word(t).size());
    }
    schedule = LiftSearch::for_length(longest);
  }

  TraceCalculator traces;
  std::optional<CurveClass> classes[2];
  CurveRecord* records[2] = {&cert.first, &cert.second};
  for (int i = 0; i < 2; ++i) {
    try {
      fill_record(*records[i], schedule, traces, classes[i], exec);
    } catch (const Error& e) {
      cert.verdict = Verdict::failed;
      cert.reason = e.what();
      return cert;
    }
  }

  cert.classes_distinct = *classes[0] != *classes[1];
  cert.trace_polys_equal = traces.trace(*classes[0]) == traces.trace(*classes[1]);

  auto fail = [&](std::string why) {
    cert.verdict = Verdict::failed;
    cert.reason = std::move(why);
    return cert;
  };
  if (*cert.first.selfint_formula != *cert.second.selfint_formula) {
    return fail("self-intersection formula values differ");
  }
  if (*cert.first.selfint_computed != *cert.first.selfint_formula ||
      *cert.second.selfint_computed != *cert.second.selfint_formula) {
    return fail("computed self-intersection disagrees with the formula");
  }
  if (*cert.first.arcs != *cert.second.arcs) return fail("arc vectors differ");
  if (!*cert.classes_distinct) return fail("curve classes coincide");
  if (*cert.trace_polys_equal) return fail("trace polynomials are equal");
  cert.verdict = Verdict::verified;
  cert.reason.clear();
  return cert;
}

std::vector<PairCertificate> verify_pairs(const std::vector<TriplePair>& pairs,
                                          const std::optional<LiftSearch>& search, Exec exec) {
  // Parallelism goes over pairs; each pair runs its kernels serially.
  return detail::map_indices<PairCertificate>(pairs.size(), exec, [&](std::size_t i) {
    const auto& [first, second] = pairs[i];
    if (first == second) {
      PairCertificate cert;
      cert.first.triple = first;
      cert.second.triple = second;
      cert.reason = "triples are identical";
      return cert;
    }
    return verify_pair(first, second, search, Exec::serial);
  });
}

}  // namespace pantslab
