#include "findep/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace findep {

namespace {

void check_symbols(int q, std::span<const Color> symbols) {
  if (q < 1 || q > 255) throw std::invalid_argument("alphabet size out of range: " + std::to_string(q));
  for (Color c : symbols) {
    if (c < 1 || c > q) {
      throw std::invalid_argument("symbol " + std::to_string(c) + " outside [" + std::to_string(q) + "]");
    }
  }
}

}  // namespace

Word::Word(int q, std::vector<Color> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_symbols(q_, symbols_);
}

Word::Word(int q, std::initializer_list<int> symbols) : q_(q) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 1 || s > q) throw std::invalid_argument("symbol outside alphabet");
    symbols_.push_back(static_cast<Color>(s));
  }
  check_symbols(q_, symbols_);
}

Color Word::at(std::size_t i) const {
  if (i < 1 || i > symbols_.size()) throw std::out_of_range("word index out of range");
  return symbols_[i - 1];
}

Word Word::operator+(const Word& rhs) const {
  if (q_ != rhs.q_) throw std::invalid_argument("concatenating words over different alphabets");
  Word out = *this;
  out.symbols_.insert(out.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return out;
}

Word Word::with_appended(Color a) const {
  auto s = symbols_;
  s.push_back(a);
  return Word(q_, std::move(s));
}

Word Word::with_prepended(Color a) const {
  std::vector<Color> s;
  s.reserve(symbols_.size() + 1);
  s.push_back(a);
  s.insert(s.end(), symbols_.begin(), symbols_.end());
  return Word(q_, std::move(s));
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.symbols_.begin(), out.symbols_.end());
  return out;
}

Word Word::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(q_)) throw std::invalid_argument("permutation size mismatch");
  Word out = *this;
  for (auto& c : out.symbols_) c = static_cast<Color>(perm[c - 1]);
  check_symbols(q_, out.symbols_);
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

bool is_proper(std::span<const Color> x) noexcept {
  return std::adjacent_find(x.begin(), x.end()) == x.end();
}

bool is_proper(const Word& x) noexcept { return is_proper(x.symbols()); }

Word remove(const Word& x, std::size_t i) {
  if (i < 1 || i > x.size()) {
    throw std::out_of_range("remove: index " + std::to_string(i) + " outside 1.." + std::to_string(x.size()));
  }
  std::vector<Color> s(x.begin(), x.end());
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return Word(x.alphabet(), std::move(s));
}

Word parse_word(std::string_view text, int q) {
  std::vector<Color> s;
  if (text.empty()) return Word(q, s);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
    }
    if (value < 1 || value > q) {
      throw std::invalid_argument("color " + std::to_string(value) + " outside [" + std::to_string(q) + "]");
    }
    s.push_back(static_cast<Color>(value));
    pos = comma + 1;
  }
  return Word(q, std::move(s));
}

SignWord::SignWord(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign word entries must be +1 or -1");
  }
}

SignWord::SignWord(std::initializer_list<int> signs) {
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign word entries must be +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

std::string SignWord::str() const {
  std::string out;
  for (auto s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

SignWord parse_sign_word(std::string_view text) {
  std::vector<std::int8_t> s;
  for (char c : text) {
    if (c == '+') {
      s.push_back(+1);
    } else if (c == '-') {
      s.push_back(-1);
    } else if (c != ',' && c != ' ') {
      throw std::invalid_argument("malformed sign word: '" + std::string(text) + "'");
    }
  }
  return SignWord(std::move(s));
}

std::vector<std::size_t> runs(const SignWord& y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i == 0 || y[i] != y[i - 1]) {
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return out;
}

SignWord from_runs(std::span<const std::size_t> lengths, std::int8_t first) {
  std::vector<std::int8_t> s;
  std::int8_t sign = first;
  for (auto len : lengths) {
    s.insert(s.end(), len, sign);
    sign = static_cast<std::int8_t>(-sign);
  }
  return SignWord(std::move(s));
}

Rows to_rows(const Word& x) {
  if (x.alphabet() != 4) throw std::invalid_argument("row encoding needs a 4-color word");
  std::vector<std::int8_t> y, z;
  y.reserve(x.size());
  z.reserve(x.size());
  for (Color c : x) {
    y.push_back(c >= 3 ? +1 : -1);
    z.push_back(c % 2 == 0 ? +1 : -1);
  }
  return {SignWord(std::move(y)), SignWord(std::move(z))};
}

Word from_rows(const SignWord& y, const SignWord& z) {
  if (y.size() != z.size()) throw std::invalid_argument("row lengths differ");
  std::vector<Color> s(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    s[i] = static_cast<Color>(1 + (y[i] > 0 ? 2 : 0) + (z[i] > 0 ? 1 : 0));
  }
  return Word(4, std::move(s));
}

}  // namespace findep
