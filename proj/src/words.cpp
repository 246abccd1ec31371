#include "pantslab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pantslab/errors.hpp"

namespace pantslab {

char to_char(Generator g) {
  static constexpr char kNames[] = {'x', 'X', 'y', 'Y'};
  return kNames[index_of(g)];
}

std::optional<Generator> generator_from_char(char c) {
  switch (c) {
    case 'x': return Generator::x;
    case 'X': return Generator::X;
    case 'y': return Generator::y;
    case 'Y': return Generator::Y;
    default: return std::nullopt;
  }
}

std::string to_string(std::span<const Generator> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Generator g : letters) s.push_back(to_char(g));
  return s;
}

std::string to_compact_string(std::span<const Generator> letters) {
  std::string s;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    s.push_back(to_char(letters[i]));
    if (j - i > 1) {
      s.push_back('^');
      s += std::to_string(j - i);
    }
    i = j;
  }
  return s;
}

Letters parse_letters(std::string_view text) {
  Letters out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    auto g = generator_from_char(text[i]);
    if (!g) {
      throw InvariantViolation("malformed word: unexpected character '" +
                               std::string(1, text[i]) + "' at offset " + std::to_string(i) +
                               " (allowed letters: x X y Y)");
    }
    ++i;
    skip_space();
    std::size_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc{} || ptr == first) {
        throw InvariantViolation("malformed word: '^' must be followed by a non-negative integer");
      }
      i += static_cast<std::size_t>(ptr - first);
      skip_space();
    }
    out.insert(out.end(), power, *g);
  }
  return out;
}

Letters inverse_letters(std::span<const Generator> letters) {
  Letters out(letters.size());
  std::transform(letters.rbegin(), letters.rend(), out.begin(),
                 [](Generator g) { return inverse(g); });
  return out;
}

ReducedWord free_reduce(std::span<const Generator> letters) {
  return ReducedWord::reduce(letters);
}

ReducedWord ReducedWord::reduce(std::span<const Generator> letters) {
  Letters out;
  out.reserve(letters.size());
  for (Generator g : letters) {
    if (!out.empty() && out.back() == pantslab::inverse(g)) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::parse(std::string_view text) { return reduce(parse_letters(text)); }

ReducedWord ReducedWord::inverse() const { return ReducedWord(inverse_letters(letters_)); }

ReducedWord operator*(const ReducedWord& a, const ReducedWord& b) {
  std::size_t cancel = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cancel < limit && a.letters_[a.size() - 1 - cancel] == inverse(b.letters_[cancel])) {
    ++cancel;
  }
  Letters out(a.letters_.begin(), a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), b.letters_.end());
  return ReducedWord(std::move(out));
}

CyclicWord CyclicWord::from_letters(Letters letters) {
  if (letters.empty()) throw InvariantViolation("cyclic word must be nonempty");
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (letters[i] == pantslab::inverse(letters[(i + 1) % n]) && n > 1) {
      throw InvariantViolation("word is not cyclically reduced: " + pantslab::to_string(letters));
    }
  }
  return CyclicWord(std::move(letters));
}

CyclicWord CyclicWord::rotated(std::size_t k) const {
  Letters out(letters_.size());
  k %= letters_.size();
  std::rotate_copy(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k),
                   letters_.end(), out.begin());
  return CyclicWord(std::move(out));
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(inverse_letters(letters_)); }

std::optional<CyclicDecomposition> cyclic_decompose(const ReducedWord& w) {
  if (w.empty()) return std::nullopt;
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == inverse(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  // A reduced nonempty word cannot collapse entirely.
  return CyclicDecomposition{
      ReducedWord::reduce(letters.subspan(0, lo)),
      CyclicWord::from_letters(Letters(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                       letters.begin() + static_cast<std::ptrdiff_t>(hi)))};
}

std::size_t least_rotation(std::span<const Generator> s) {
  // Booth's algorithm over the doubled string.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return s[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k)) {
      if (at(j) < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CurveClass canonicalize(const CyclicWord& word) {
  CyclicWord forward = word.rotated(least_rotation(word.letters()));
  CyclicWord inv = word.inverse();
  CyclicWord backward = inv.rotated(least_rotation(inv.letters()));
  return CurveClass(std::min(forward, backward));
}

CurveClass CurveClass::from_letters(std::span<const Generator> letters) {
  auto decomposition = cyclic_decompose(ReducedWord::reduce(letters));
  if (!decomposition) throw InvariantViolation("trivial class");
  return canonicalize(decomposition->core);
}

CurveClass CurveClass::parse(std::string_view text) { return from_letters(parse_letters(text)); }

bool is_primitive(const CyclicWord& word) {
  // Smallest period from the prefix function.
  auto s = word.letters();
  const std::size_t n = s.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  const std::size_t period = n - pi[n - 1];
  return period == n || n % period != 0;
}

bool is_primitive(const CurveClass& cls) { return is_primitive(cls.word()); }

std::optional<std::string> TwistTriple::violation() const {
  if (a < 1 || b < 1 || c < 1) return "twist parameters must be positive integers";
  if (a % 2 == 0) return "a must be odd";
  if (c % 2 == 0) return "c must be odd";
  if (b % 2 != 0) return "b must be even";
  if (b < 2) return "b must be at least 2";
  if (!(a >= b && b >= c)) return "ordering a >= b >= c violated";
  return std::nullopt;
}

void TwistTriple::validate() const {
  if (auto v = violation()) {
    throw InvariantViolation("invalid twist triple " + to_string() + ": " + *v);
  }
}

std::string TwistTriple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

CyclicWord gamma_word(const TwistTriple& t) {
  t.validate();
  using G = Generator;
  Letters w{G::y, G::x};
  w.insert(w.end(), static_cast<std::size_t>((t.c + 1) / 2), G::y);
  w.push_back(G::X);
  w.insert(w.end(), static_cast<std::size_t>(t.b / 2), G::y);
  w.push_back(G::X);
  w.insert(w.end(), static_cast<std::size_t>((t.a - 1) / 2), G::y);
  return CyclicWord::from_letters(std::move(w));
}

std::vector<int> y_exponent_multiset(const CurveClass& cls) {
  auto s = cls.word().letters();
  const std::size_t n = s.size();
  std::vector<int> blocks;
  // Start just after an x-letter so no y-block straddles the seam.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_x_letter(s[i])) {
      start = (i + 1) % n;
      break;
    }
  }
  if (start == n) {
    // Pure power of y.
    blocks.push_back(is_positive(s[0]) ? static_cast<int>(n) : -static_cast<int>(n));
    return blocks;
  }
  int run = 0;
  Generator run_letter = Generator::y;
  for (std::size_t k = 0; k < n; ++k) {
    Generator g = s[(start + k) % n];
    if (!is_x_letter(g) && run > 0 && g == run_letter) {
      ++run;
      continue;
    }
    if (run > 0) blocks.push_back(is_positive(run_letter) ? run : -run);
    run = 0;
    if (!is_x_letter(g)) {
      run = 1;
      run_letter = g;
    }
  }
  if (run > 0) blocks.push_back(is_positive(run_letter) ? run : -run);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool same_up_to_sign(std::span<const int> a, std::span<const int> b) {
  auto sorted = [](std::span<const int> v, int sign) {
    std::vector<int> out;
    for (int e : v) out.push_back(sign * e);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto base = sorted(a, 1);
  return base == sorted(b, 1) || base == sorted(b, -1);
}

}  // namespace pantslab
