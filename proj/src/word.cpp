#include "curves/word.hpp"

#include <algorithm>

#include "curves/errors.hpp"

namespace curves {

char Letter::to_char() const {
  const char base = sign > 0 ? 'a' : 'A';
  return static_cast<char>(base + gen);
}

Letter Letter::from_char(char ch) {
  if (ch >= 'a' && ch <= 'z') return {ch - 'a', 1};
  if (ch >= 'A' && ch <= 'Z') return {ch - 'A', -1};
  throw ParseError(std::string("invalid letter '") + ch + "' (expected a-z or A-Z)");
}

Word free_reduce(std::span<const Letter> raw) {
  Word out;
  auto& stack = out.letters_;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return out;
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char ch : text) {
    try {
      raw.push_back(Letter::from_char(ch));
    } catch (const ParseError&) {
      throw ParseError("invalid character '" + std::string(1, ch) + "' in word \"" +
                       std::string(text) + "\"");
    }
  }
  return free_reduce(raw);
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  Word out;
  out.letters_ = std::move(inv);
  return out;
}

Word Word::pow(long exponent) const {
  if (exponent == 0 || empty()) return {};
  const Word base = exponent > 0 ? *this : inverse();
  const long times = exponent > 0 ? exponent : -exponent;
  std::vector<Letter> raw;
  raw.reserve(base.size() * static_cast<std::size_t>(times));
  for (long i = 0; i < times; ++i) raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  return free_reduce(raw);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) s.push_back(l.to_char());
  return s;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> raw = lhs.letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return free_reduce(raw);
}

namespace {

// Start index of the least rotation. Words here are short, so a direct
// comparison of all rotations is enough.
std::size_t least_rotation(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t t = 0; t < n; ++t) {
      const Letter& x = s[(cand + t) % n];
      const Letter& y = s[(best + t) % n];
      if (x == y) continue;
      if (x < y) best = cand;
      break;
    }
  }
  return best;
}

}  // namespace

CyclicWord CyclicWord::from_cyclically_reduced(std::vector<Letter> letters) {
  CyclicWord c;
  if (!letters.empty()) {
    const std::size_t start = least_rotation(letters);
    std::rotate(letters.begin(), letters.begin() + static_cast<long>(start), letters.end());
  }
  c.letters_ = std::move(letters);
  return c;
}

CyclicWord CyclicWord::parse(std::string_view text) { return cyclic_reduce(Word::parse(text)).word; }

const Letter& CyclicWord::at_cyclic(long i) const {
  const long n = static_cast<long>(letters_.size());
  long r = i % n;
  if (r < 0) r += n;
  return letters_[static_cast<std::size_t>(r)];
}

Word CyclicWord::as_word() const { return free_reduce(letters_); }

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return from_cyclically_reduced(std::move(inv));
}

CyclicWord CyclicWord::pow(long exponent) const {
  if (exponent < 1) throw PreconditionError("CyclicWord::pow expects a positive exponent");
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(exponent));
  for (long i = 0; i < exponent; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return from_cyclically_reduced(std::move(out));
}

std::string CyclicWord::str() const { return as_word().str(); }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi));
  std::vector<Letter> prefix(ls.begin(), ls.begin() + static_cast<long>(lo));

  CyclicReduction out;
  if (core.empty()) {
    out.conjugator = {};
    return out;
  }
  // core = u v and the canonical rotation is v u, so core = u (v u) u^-1.
  const std::size_t start = least_rotation(core);
  prefix.insert(prefix.end(), core.begin(), core.begin() + static_cast<long>(start));
  out.conjugator = free_reduce(prefix);
  out.word = CyclicWord::from_cyclically_reduced(std::move(core));
  return out;
}

bool conjugate_eq(const CyclicWord& u, const CyclicWord& v) { return u == v; }

PrimitiveDecomposition primitive_root(const CyclicWord& c) {
  if (c.empty()) throw PreconditionError("contractible has no primitive root");
  const std::size_t n = c.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = c[i] == c[i - period];
    if (periodic) {
      std::vector<Letter> root(c.letters().begin(), c.letters().begin() + static_cast<long>(period));
      return {CyclicWord::from_cyclically_reduced(std::move(root)), static_cast<long>(n / period)};
    }
  }
  return {c, 1};
}

int orientation_character(std::uint32_t twist_mask, std::span<const Letter> letters) {
  int chi = 1;
  for (const Letter& l : letters) {
    if ((twist_mask >> l.gen) & 1u) chi = -chi;
  }
  return chi;
}

}  // namespace curves
