#include "pantslab/report.hpp"

#include <sstream>

namespace pantslab {

using ordered_json = nlohmann::ordered_json;

nlohmann::ordered_json to_json(const ArcVector& arcs) {
  ordered_json j = ordered_json::object();
  for (ArcType arc : kAllArcTypes) j[std::string(arc_name(arc))] = arcs[arc];
  return j;
}

nlohmann::ordered_json to_json(const TwistTriple& t) { return ordered_json::array({t.a, t.b, t.c}); }

std::string verdict_name(Verdict v) { return v == Verdict::verified ? "verified" : "failed"; }

namespace {

template <class T, class Fn>
ordered_json optional_json(const std::optional<T>& v, Fn&& fn) {
  return v ? fn(*v) : ordered_json(nullptr);
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class Field>
ordered_json both(const PairCertificate& c, Field field) {
  return ordered_json::array({field(c.first), field(c.second)});
}

}  // namespace

nlohmann::ordered_json to_json(const PairCertificate& cert) {
  ordered_json j;
  j["triples"] = both(cert, [](const CurveRecord& r) { return to_json(r.triple); });
  j["words"] = both(cert, [](const CurveRecord& r) { return optional_json(r.word); });
  j["self_intersection"] = {
      {"formula", both(cert, [](const CurveRecord& r) { return optional_json(r.selfint_formula); })},
      {"computed",
       both(cert, [](const CurveRecord& r) { return optional_json(r.selfint_computed); })}};
  j["arc_vectors"] = both(cert, [](const CurveRecord& r) {
    return optional_json(r.arcs, [](const ArcVector& a) { return to_json(a); });
  });
  j["classes_distinct"] = optional_json(cert.classes_distinct);
  j["trace_polynomials_equal"] = optional_json(cert.trace_polys_equal);
  j["y_exponent_multisets"] =
      both(cert, [](const CurveRecord& r) { return optional_json(r.y_exponents); });
  j["diophantine"] = optional_json(cert.diophantine);
  j["trace_polynomials"] =
      both(cert, [](const CurveRecord& r) { return optional_json(r.trace_polynomial); });
  j["verdict"] = verdict_name(cert.verdict);
  if (cert.verdict == Verdict::failed) {
    j["reason"] = cert.reason;
  } else {
    // Distinct trace polynomials give non-equivalence only through
    // Horowitz's theorem, which is cited rather than re-checked here.
    j["non_equivalence_basis"] = "distinct trace polynomials (Horowitz trace theorem)";
  }
  j["tool_version"] = cert.tool_version;
  return j;
}

namespace {

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() {
  std::ostringstream os;
  os << "a1,b1,c1,a2,b2,c2,diophantine,selfint_formula_1,selfint_formula_2,"
        "selfint_computed_1,selfint_computed_2";
  for (int side = 1; side <= 2; ++side) {
    for (ArcType arc : kAllArcTypes) os << ",arc_" << arc_name(arc) << "_" << side;
  }
  os << ",classes_distinct,trace_polynomials_equal,verdict,reason,tool_version";
  return os.str();
}

std::string csv_row(const PairCertificate& cert) {
  std::ostringstream os;
  const auto& f = cert.first;
  const auto& s = cert.second;
  os << f.triple.a << ',' << f.triple.b << ',' << f.triple.c << ',' << s.triple.a << ','
     << s.triple.b << ',' << s.triple.c << ',' << cell(cert.diophantine) << ','
     << cell(f.selfint_formula) << ',' << cell(s.selfint_formula) << ','
     << cell(f.selfint_computed) << ',' << cell(s.selfint_computed);
  for (const CurveRecord* r : {&f, &s}) {
    for (ArcType arc : kAllArcTypes) {
      os << ',';
      if (r->arcs) os << (*r->arcs)[arc];
    }
  }
  os << ',' << cell(cert.classes_distinct) << ',' << cell(cert.trace_polys_equal) << ','
     << verdict_name(cert.verdict) << ',' << quoted(cert.reason) << ','
     << quoted(cert.tool_version);
  return os.str();
}

}  // namespace pantslab
