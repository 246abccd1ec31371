#include "pantslab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "pantslab/errors.hpp"
#include "pantslab/family.hpp"
#include "pantslab/intersection.hpp"
#include "pantslab/report.hpp"
#include "pantslab/traces.hpp"

namespace pantslab::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvariantViolation("malformed " + what + ": '" + text + "'");
  }
  return value;
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, colon), "range"), parse_int(text.substr(colon + 1), "range")};
  if (r.lo > r.hi) throw InvariantViolation("empty range '" + text + "'");
  return r;
}

void SweepSpec::validate() const {
  const bool grid = k_range.has_value() || t_range.has_value();
  if (grid && max_a) throw InvariantViolation("sweep takes either --k/--t ranges or --max-a, not both");
  if (!grid && !max_a) throw InvariantViolation("sweep needs --k and --t ranges or --max-a");
  if (grid && !(k_range && t_range)) throw InvariantViolation("sweep needs both --k and --t");
  if (max_a && *max_a < 1) throw InvariantViolation("--max-a must be positive");
  if (threads < 0) throw InvariantViolation("--threads must be non-negative");
}

namespace {

struct Context {
  bool pretty = false;
  std::optional<int> max_radius;  // PANTSLAB_MAX_RADIUS
  std::ostream& out;
};

std::optional<int> max_radius_from_env() {
  const char* raw = std::getenv("PANTSLAB_MAX_RADIUS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const int v = parse_int(raw, "PANTSLAB_MAX_RADIUS");
  if (v < 1) throw InvariantViolation("PANTSLAB_MAX_RADIUS must be positive");
  return v;
}

LiftSearch search_for(std::size_t word_length, const Context& ctx) {
  LiftSearch s = LiftSearch::for_length(word_length);
  if (ctx.max_radius) s.max_radius = *ctx.max_radius;
  return s;
}

std::optional<LiftSearch> search_for_pair(const TwistTriple& a, const TwistTriple& b,
                                          const Context& ctx) {
  if (!ctx.max_radius) return std::nullopt;
  std::size_t longest = 0;
  for (const auto& t : {a, b}) {
    if (!t.violation()) longest = std::max(longest, gamma_word(t).size());
  }
  return search_for(longest, ctx);
}

void emit(const Context& ctx, const ordered_json& j) { ctx.out << j.dump(2) << '\n'; }

std::string arcs_text(const ArcVector& arcs) {
  std::string s;
  for (ArcType arc : kAllArcTypes) {
    if (!s.empty()) s += ' ';
    s += std::string(arc_name(arc)) + "=" + std::to_string(arcs[arc]);
  }
  return s;
}

void print_certificate_pretty(const Context& ctx, const PairCertificate& cert) {
  auto& os = ctx.out;
  for (const CurveRecord* r : {&cert.first, &cert.second}) {
    os << "gamma" << r->triple.to_string() << '\n';
    if (r->word) os << "  word: " << *r->word << '\n';
    if (r->selfint_formula && r->selfint_computed) {
      os << "  self-intersection: formula " << *r->selfint_formula << ", computed "
         << *r->selfint_computed << '\n';
    }
    if (r->arcs) os << "  arcs: " << arcs_text(*r->arcs) << '\n';
  }
  if (cert.classes_distinct) {
    os << "classes distinct: " << (*cert.classes_distinct ? "yes" : "no") << '\n';
  }
  if (cert.trace_polys_equal) {
    os << "trace polynomials equal: " << (*cert.trace_polys_equal ? "yes" : "no") << '\n';
  }
  os << "verdict: " << verdict_name(cert.verdict);
  if (!cert.reason.empty()) os << " (" << cert.reason << ")";
  os << '\n';
}

int report_certificate(const Context& ctx, const PairCertificate& cert, ordered_json wrapper = {}) {
  if (ctx.pretty) {
    print_certificate_pretty(ctx, cert);
  } else if (wrapper.is_null()) {
    emit(ctx, to_json(cert));
  } else {
    wrapper["certificate"] = to_json(cert);
    emit(ctx, wrapper);
  }
  return cert.verdict == Verdict::verified ? kSuccess : kFailedVerdict;
}

int cmd_word(const Context& ctx, const TwistTriple& t) {
  const auto w = gamma_word(t);
  if (ctx.pretty) {
    ctx.out << to_compact_string(w.letters()) << '\n';
    return kSuccess;
  }
  ordered_json j;
  j["triple"] = to_json(t);
  j["word"] = w.to_string();
  j["compact"] = to_compact_string(w.letters());
  j["length"] = w.size();
  emit(ctx, j);
  return kSuccess;
}

int cmd_selfint(const Context& ctx, const TwistTriple& t) {
  const auto formula = selfint_formula(t);
  const auto computed = self_intersection(canonicalize(gamma_word(t)));
  if (ctx.pretty) {
    ctx.out << "formula " << formula << ", computed " << computed << '\n';
  } else {
    ordered_json j;
    j["triple"] = to_json(t);
    j["formula"] = formula;
    j["computed"] = computed;
    emit(ctx, j);
  }
  return formula == computed ? kSuccess : kFailedVerdict;
}

int cmd_arcs(const Context& ctx, const TwistTriple& t) {
  const auto w = gamma_word(t);
  const auto spectrum = arc_spectrum(w, search_for(w.size(), ctx));
  if (ctx.pretty) {
    ctx.out << arcs_text(spectrum.counts) << '\n';
    return kSuccess;
  }
  ordered_json j;
  j["triple"] = to_json(t);
  j["arcs"] = to_json(spectrum.counts);
  ordered_json radii = ordered_json::object();
  for (ArcType arc : kAllArcTypes) {
    radii[std::string(arc_name(arc))] = spectrum.stabilized_radius[static_cast<std::size_t>(arc)];
  }
  j["stabilized_radius"] = radii;
  emit(ctx, j);
  return kSuccess;
}

int cmd_trace(const Context& ctx, const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& tok : tokens) text += tok;
  const auto w = ReducedWord::parse(text);
  const auto p = trace_polynomial(w);
  if (ctx.pretty) {
    ctx.out << p.to_string() << '\n';
    return kSuccess;
  }
  ordered_json j;
  j["word"] = w.to_string();
  j["polynomial"] = p.to_string();
  j["terms"] = p.term_strings();
  j["total_degree"] = p.total_degree();
  emit(ctx, j);
  return kSuccess;
}

int cmd_pair(const Context& ctx, const TwistTriple& a, const TwistTriple& b) {
  return report_certificate(ctx, verify_pair(a, b, search_for_pair(a, b, ctx)));
}

int cmd_family(const Context& ctx, const FamilyParams& p) {
  const auto [a, b] = family_pair(p);
  ordered_json wrapper;
  wrapper["params"] = {{"k", p.k}, {"t", p.t}};
  return report_certificate(ctx, verify_pair(a, b, search_for_pair(a, b, ctx)), wrapper);
}

int cmd_enumerate(const Context& ctx, int max_a) {
  const auto pairs = diophantine_enumerate(max_a);
  if (ctx.pretty) {
    for (const auto& [s, l] : pairs) ctx.out << s.to_string() << ' ' << l.to_string() << '\n';
    return kSuccess;
  }
  ordered_json j;
  j["max_a"] = max_a;
  j["count"] = pairs.size();
  ordered_json list = ordered_json::array();
  for (const auto& [s, l] : pairs) list.push_back(ordered_json::array({to_json(s), to_json(l)}));
  j["pairs"] = list;
  emit(ctx, j);
  return kSuccess;
}

int cmd_sweep(const Context& ctx, const SweepSpec& spec) {
  spec.validate();
  std::vector<TriplePair> pairs;
  std::vector<std::optional<FamilyParams>> params;
  if (spec.max_a) {
    pairs = diophantine_enumerate(*spec.max_a);
    params.resize(pairs.size());
  } else {
    // Only parameters satisfying the family constraints are swept.
    for (int k = spec.k_range->lo; k <= spec.k_range->hi; ++k) {
      for (int t = spec.t_range->lo; t <= spec.t_range->hi; ++t) {
        FamilyParams p{k, t};
        if (p.violation()) continue;
        pairs.push_back(family_pair(p));
        params.emplace_back(p);
      }
    }
    if (pairs.empty()) throw InvariantViolation("sweep ranges contain no valid (k, t)");
  }

  Exec exec = Exec::parallel;
  if (spec.threads == 1) exec = Exec::serial;
#ifdef _OPENMP
  if (spec.threads > 1) omp_set_num_threads(spec.threads);
#endif

  std::optional<LiftSearch> search;
  if (ctx.max_radius) {
    std::size_t longest = 0;
    for (const auto& [a, b] : pairs) {
      longest = std::max({longest, gamma_word(a).size(), gamma_word(b).size()});
    }
    search = search_for(longest, ctx);
  }
  const auto certs = verify_pairs(pairs, search, exec);

  std::ostringstream body;
  if (spec.format == SweepFormat::csv) {
    body << csv_header() << '\n';
    for (const auto& c : certs) body << csv_row(c) << '\n';
  } else {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["mode"] = spec.max_a ? "enumerate" : "family";
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < certs.size(); ++i) {
      ordered_json item;
      if (params[i]) item["params"] = {{"k", params[i]->k}, {"t", params[i]->t}};
      item["certificate"] = to_json(certs[i]);
      list.push_back(std::move(item));
    }
    j["certificates"] = list;
    body << j.dump(2) << '\n';
  }

  if (spec.output.empty()) {
    ctx.out << body.str();
  } else {
    std::ofstream file(spec.output, std::ios::binary);
    if (!file) throw InvariantViolation("cannot open output file '" + spec.output + "'");
    file << body.str();
  }
  std::size_t failed = 0;
  for (const auto& c : certs) failed += c.verdict == Verdict::failed;
  if (ctx.pretty) {
    ctx.out << certs.size() << " pairs, " << failed << " failed\n";
  }
  return failed == 0 ? kSuccess : kFailedVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves on the pair of pants: intersection spectra, trace polynomials and "
               "equivalence certificates",
               "pantslab"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable summary instead of JSON");

  TwistTriple triple;
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("a", triple.a, "half twists a")->required();
    sub->add_option("b", triple.b, "half twists b")->required();
    sub->add_option("c", triple.c, "half twists c")->required();
  };
  auto* word = app.add_subcommand("word", "Print the fundamental-group word of gamma(a,b,c)");
  add_triple(word);
  auto* selfint = app.add_subcommand("selfint", "Self-intersection: formula and computed");
  add_triple(selfint);
  auto* arcs = app.add_subcommand("arcs", "Intersection with the six essential simple arcs");
  add_triple(arcs);

  std::vector<std::string> word_tokens;
  auto* trace = app.add_subcommand("trace", "Trace polynomial of a word in X, Y, Z");
  trace->add_option("word", word_tokens, "word, e.g. xY or x^3 Y^2")->required();

  TwistTriple second;
  auto* pair = app.add_subcommand("pair", "Certificate for gamma(a,b,c) vs gamma(a',b',c')");
  add_triple(pair);
  pair->add_option("a2", second.a, "a'")->required();
  pair->add_option("b2", second.b, "b'")->required();
  pair->add_option("c2", second.c, "c'")->required();

  FamilyParams params;
  auto* family = app.add_subcommand("family", "Certificate for the family member (k, t)");
  family->add_option("k", params.k, "even k > 0")->required();
  family->add_option("t", params.t, "odd t >= 3")->required();

  int max_a = 0;
  auto* enumerate = app.add_subcommand("enumerate", "All solution pairs with a <= N");
  enumerate->add_option("--max-a", max_a, "bound on a")->required();

  SweepSpec spec;
  std::string k_text, t_text, format_text = "json";
  int sweep_max_a = 0;
  auto* sweep = app.add_subcommand("sweep", "Certificates over a parameter grid");
  auto* k_opt = sweep->add_option("--k", k_text, "k range lo:hi");
  auto* t_opt = sweep->add_option("--t", t_text, "t range lo:hi");
  auto* max_a_opt = sweep->add_option("--max-a", sweep_max_a, "enumerate all pairs with a <= N");
  sweep->add_option("--output,-o", spec.output, "output path (default: stdout)");
  sweep->add_option("--format", format_text, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--threads", spec.threads, "worker threads (1 = serial reference path)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Context ctx{pretty, max_radius_from_env(), out};
    if (*word) return cmd_word(ctx, triple);
    if (*selfint) return cmd_selfint(ctx, triple);
    if (*arcs) return cmd_arcs(ctx, triple);
    if (*trace) return cmd_trace(ctx, word_tokens);
    if (*pair) return cmd_pair(ctx, triple, second);
    if (*family) return cmd_family(ctx, params);
    if (*enumerate) return cmd_enumerate(ctx, max_a);
    if (*sweep) {
      if (*k_opt) spec.k_range = IntRange::parse(k_text);
      if (*t_opt) spec.t_range = IntRange::parse(t_text);
      if (*max_a_opt) spec.max_a = sweep_max_a;
      spec.format = format_text == "csv" ? SweepFormat::csv : SweepFormat::json;
      return cmd_sweep(ctx, spec);
    }
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailedVerdict;
  }
  return kUsageError;
}

}  // namespace pantslab::cli
