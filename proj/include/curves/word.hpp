#pragma once

// Free-group words over generators named by lowercase ASCII letters.
// The inverse of generator `x` is written `X`.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curves {

struct Letter {
  int gen = 0;   // 0..25, 'a' + gen
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  char to_char() const;
  static Letter from_char(char ch);  // throws ParseError

  // Generator id first, then +1 before -1.
  int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& lhs, const Letter& rhs) {
    return lhs.key() <=> rhs.key();
  }
};

// Freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(long exponent) const;
  std::string str() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  friend Word free_reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);

// Cyclically reduced word stored as its lexicographically least rotation,
// i.e. a canonical key for a conjugacy class.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Canonicalizes; `letters` must already be cyclically reduced.
  static CyclicWord from_cyclically_reduced(std::vector<Letter> letters);
  // Parses, reduces and canonicalizes. Conjugates parse to equal values.
  static CyclicWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  // Index taken modulo the length; negative indices wrap.
  const Letter& at_cyclic(long i) const;

  // Canonical representative read as a based loop.
  Word as_word() const;
  CyclicWord inverse() const;
  CyclicWord pow(long exponent) const;  // exponent >= 1
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& lhs, const CyclicWord& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord word;
  Word conjugator;  // conjugator * word * conjugator^-1 == input
};

CyclicReduction cyclic_reduce(const Word& w);

bool conjugate_eq(const CyclicWord& u, const CyclicWord& v);

struct PrimitiveDecomposition {
  CyclicWord root;
  long exponent = 1;
};

// Largest k with c == root^k. Throws PreconditionError on the identity.
PrimitiveDecomposition primitive_root(const CyclicWord& c);

// +1 iff the word crosses twisted generators an even number of times.
// Bit `g` of `twist_mask` marks generator g as twisted.
int orientation_character(std::uint32_t twist_mask, std::span<const Letter> letters);

}  // namespace curves
