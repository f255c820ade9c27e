#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace findep {

using Color = std::uint8_t;

/// A finite word over the alphabet [q] = {1, ..., q}.
class Word {
 public:
  Word() = default;
  Word(int q, std::vector<Color> symbols);
  Word(int q, std::initializer_list<int> symbols);

  int alphabet() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// 1-based access, matching the usual x_1 ... x_n indexing.
  Color at(std::size_t i) const;
  Color operator[](std::size_t zero_based) const noexcept { return symbols_[zero_based]; }

  std::span<const Color> symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// Concatenation; alphabets must agree.
  Word operator+(const Word& rhs) const;
  Word with_appended(Color a) const;
  Word with_prepended(Color a) const;

  Word reversed() const;

  /// Applies a color permutation given as a 0-indexed table perm[c-1] = image of c.
  Word relabeled(std::span<const int> perm) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  int q_ = 2;
  std::vector<Color> symbols_;
};

/// True iff no two adjacent symbols are equal.
bool is_proper(const Word& x) noexcept;
bool is_proper(std::span<const Color> x) noexcept;

/// x with its i-th symbol (1-based) removed. Throws std::out_of_range.
Word remove(const Word& x, std::size_t i);

/// Parses "1,2,1" (empty string = empty word). Throws std::invalid_argument.
Word parse_word(std::string_view text, int q);

/// Calls f(word) for every word of [q]^n in lexicographic order.
template <class F>
void for_each_word(int q, std::size_t n, F&& f) {
  std::vector<Color> s(n, 1);
  while (true) {
    f(Word(q, s));
    auto it = s.rbegin();
    for (; it != s.rend() && *it == q; ++it) *it = 1;
    if (it == s.rend()) return;
    ++*it;
  }
}

/// Calls f(word) for every proper coloring in [q]^n.
template <class F>
void for_each_proper_word(int q, std::size_t n, F&& f) {
  std::vector<Color> s;
  s.reserve(n);
  auto rec = [&](auto&& self) -> void {
    if (s.size() == n) {
      f(Word(q, s));
      return;
    }
    for (int c = 1; c <= q; ++c) {
      if (!s.empty() && s.back() == c) continue;
      s.push_back(static_cast<Color>(c));
      self(self);
      s.pop_back();
    }
  };
  rec(rec);
}

/// A word over {-1, +1}.
class SignWord {
 public:
  SignWord() = default;
  explicit SignWord(std::vector<std::int8_t> signs);
  SignWord(std::initializer_list<int> signs);

  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }
  std::int8_t operator[](std::size_t zero_based) const noexcept { return signs_[zero_based]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  /// "+-++" style rendering.
  std::string str() const;

  friend bool operator==(const SignWord&, const SignWord&) = default;
  friend auto operator<=>(const SignWord&, const SignWord&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

/// Parses "+-+" (or "+,-,+"). Throws std::invalid_argument.
SignWord parse_sign_word(std::string_view text);

/// Lengths of the maximal constant blocks of y, left to right.
std::vector<std::size_t> runs(const SignWord& y);

/// Builds a sign word with the given run lengths, starting with `first`.
/// Zero-length runs make their neighbours coalesce.
SignWord from_runs(std::span<const std::size_t> lengths, std::int8_t first = +1);

/// Calls f(y) for every y in {-,+}^n.
template <class F>
void for_each_sign_word(std::size_t n, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int8_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1 ? +1 : -1;
    f(SignWord(std::move(s)));
  }
}

/// The (y; z) row encoding of a 4-color word: colors 1,2,3,4 are the columns
/// (-,-), (-,+), (+,-), (+,+).
struct Rows {
  SignWord y;
  SignWord z;
};

Rows to_rows(const Word& x);
Word from_rows(const SignWord& y, const SignWord& z);

}  // namespace findep
