#include "pantslab/traces.hpp"

#include <algorithm>
#include <cmath>

namespace pantslab {

TracePolynomial TracePolynomial::constant(long c) {
  TracePolynomial p;
  p.add_term({}, mpz_class(c));
  return p;
}

TracePolynomial TracePolynomial::variable_x() {
  TracePolynomial p;
  p.add_term({1, 0, 0}, 1);
  return p;
}

TracePolynomial TracePolynomial::variable_y() {
  TracePolynomial p;
  p.add_term({0, 1, 0}, 1);
  return p;
}

TracePolynomial TracePolynomial::variable_z() {
  TracePolynomial p;
  p.add_term({0, 0, 1}, 1);
  return p;
}

void TracePolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t TracePolynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial out;
  mpz_class product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term({ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, product);
    }
  }
  return out;
}

double TracePolynomial::evaluate(double x, double y, double z) const {
  constexpr mp_bitcnt_t kBits = 512;
  std::uint32_t max_x = 0, max_y = 0, max_z = 0;
  for (const auto& [m, c] : terms_) {
    max_x = std::max(max_x, m.x);
    max_y = std::max(max_y, m.y);
    max_z = std::max(max_z, m.z);
  }
  auto powers = [&](double base, std::uint32_t top) {
    std::vector<mpf_class> out;
    out.emplace_back(1, kBits);
    const mpf_class b(base, kBits);
    for (std::uint32_t i = 1; i <= top; ++i) out.push_back(mpf_class(out.back() * b, kBits));
    return out;
  };
  const auto px = powers(x, max_x);
  const auto py = powers(y, max_y);
  const auto pz = powers(z, max_z);
  mpf_class sum(0, kBits);
  mpf_class term(0, kBits);
  for (const auto& [m, c] : terms_) {
    term = c;
    term *= px[m.x];
    term *= py[m.y];
    term *= pz[m.z];
    sum += term;
  }
  return sum.get_d();
}

std::vector<std::string> TracePolynomial::term_strings() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    out.push_back(c.get_str() + " X^" + std::to_string(m.x) + " Y^" + std::to_string(m.y) +
                  " Z^" + std::to_string(m.z));
  }
  return out;
}

std::string TracePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : term_strings()) {
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s;
}

RepresentationPoint RepresentationPoint::random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  auto sample = [&] {
    for (;;) {
      Mat2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
      const double det = m.determinant();
      if (det <= 0.25) continue;
      const double s = 1.0 / std::sqrt(det);
      return Mat2{m.a * s, m.b * s, m.c * s, m.d * s};
    }
  };
  RepresentationPoint pt;
  pt.x_image = sample();
  pt.y_image = sample();
  return pt;
}

bool RepresentationPoint::valid(double tolerance) const {
  return std::abs(x_image.determinant() - 1.0) <= tolerance &&
         std::abs(y_image.determinant() - 1.0) <= tolerance;
}

double evaluate(const TracePolynomial& p, const RepresentationPoint& pt) {
  return p.evaluate(pt.x_image.trace(), pt.y_image.trace(), (pt.x_image * pt.y_image).trace());
}

namespace {

std::string memo_key(std::span<const Generator> letters) { return to_string(letters); }

const TracePolynomial& generator_trace(Generator g) {
  static const TracePolynomial kX = TracePolynomial::variable_x();
  static const TracePolynomial kY = TracePolynomial::variable_y();
  return is_x_letter(g) ? kX : kY;
}

}  // namespace

const TracePolynomial& TraceCalculator::trace(const ReducedWord& w) {
  return trace_of_letters(w.letters());
}

const TracePolynomial& TraceCalculator::trace(const CurveClass& cls) {
  return trace_of_canonical(cls.word());
}

const TracePolynomial& TraceCalculator::trace_of_letters(std::span<const Generator> letters) {
  auto d = cyclic_decompose(ReducedWord::reduce(letters));
  if (!d) return two_;
  return trace_of_canonical(canonicalize(d->core).word());
}

const TracePolynomial& TraceCalculator::trace_of_canonical(const CyclicWord& canonical) {
  const std::string key = memo_key(canonical.letters());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  TracePolynomial value = compute(canonical);
  return memo_.emplace(key, std::move(value)).first->second;
}

TracePolynomial TraceCalculator::compute(const CyclicWord& word) {
  const auto s = word.letters();
  const std::size_t n = s.size();

  // Powers of a single generator: T_0 = 2, T_1 = t, T_k+1 = t T_k - T_k-1.
  const bool single = std::all_of(s.begin(), s.end(),
                                  [&](Generator g) { return is_x_letter(g) == is_x_letter(s[0]); });
  if (single) {
    const auto& t = generator_trace(s[0]);
    TracePolynomial prev = two_;
    TracePolynomial cur = t;
    for (std::size_t k = 1; k < n; ++k) {
      TracePolynomial next = t * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  // Rotate so the word starts at a block boundary, then list blocks.
  std::size_t start = 0;
  while (s[start] == s[(start + n - 1) % n]) ++start;
  Letters w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = s[(start + i) % n];
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && w[j] == w[i]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  // A block g^e with e >= 2, moved to the end: tr(u g^e) = tr g tr(u g^e-1) - tr(u g^e-2).
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    const auto [b, e] = *it;
    if (e - b < 2) continue;
    Letters rotated(w.begin() + static_cast<std::ptrdiff_t>(e), w.end());
    rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(e));
    const Generator g = rotated.back();
    Letters shorter1(rotated.begin(), rotated.end() - 1);
    Letters shorter2(rotated.begin(), rotated.end() - 2);
    TracePolynomial t1 = trace_of_letters(shorter1);
    const TracePolynomial& t2 = trace_of_letters(shorter2);
    return generator_trace(g) * t1 - t2;
  }

  // All exponents are +-1, so letters alternate between x and y.
  if (n == 2) {
    const bool same_sign = is_positive(w[0]) == is_positive(w[1]);
    if (same_sign) return TracePolynomial::variable_z();
    return TracePolynomial::variable_x() * TracePolynomial::variable_y() -
           TracePolynomial::variable_z();
  }

  auto slice = [&](std::size_t from, std::size_t to) {
    return Letters(w.begin() + static_cast<std::ptrdiff_t>(from),
                   w.begin() + static_cast<std::ptrdiff_t>(to));
  };
  auto concat = [](Letters a, std::span<const Generator> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  // Repeated letter: w ~ g U g V, tr = tr(gU) tr(gV) - tr(U V^-1).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w[i] != w[j]) continue;
      Letters rot = concat(slice(i, n), slice(0, i));
      const std::size_t jj = j - i;
      Letters u(rot.begin() + 1, rot.begin() + static_cast<std::ptrdiff_t>(jj));
      Letters v(rot.begin() + static_cast<std::ptrdiff_t>(jj) + 1, rot.end());
      const Generator g = rot[0];
      TracePolynomial gu = trace_of_letters(concat({g}, u));
      TracePolynomial gv = trace_of_letters(concat({g}, v));
      const TracePolynomial& rest = trace_of_letters(concat(u, inverse_letters(v)));
      return gu * gv - rest;
    }
  }

  // Each letter occurs once: w = g U g^-1 V,
  // tr = tr(gU) tr(g^-1 V) - tr(g U V^-1 g).
  const Generator g = w[0];
  const std::size_t j = static_cast<std::size_t>(
      std::find(w.begin(), w.end(), inverse(g)) - w.begin());
  Letters u = slice(1, j);
  Letters v = slice(j + 1, n);
  TracePolynomial gu = trace_of_letters(concat({g}, u));
  TracePolynomial gv = trace_of_letters(concat({inverse(g)}, v));
  Letters last = concat(concat({g}, u), inverse_letters(v));
  last.push_back(g);
  const TracePolynomial& rest = trace_of_letters(last);
  return gu * gv - rest;
}

TracePolynomial trace_polynomial(const ReducedWord& w) {
  TraceCalculator calc;
  return calc.trace(w);
}

bool trace_equivalent(const CurveClass& first, const CurveClass& second) {
  if (first == second) return true;
  TraceCalculator calc;
  TracePolynomial a = calc.trace(first);
  return a == calc.trace(second);
}

}  // namespace pantslab
