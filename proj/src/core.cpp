#include "shp/core.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace shp {

namespace {

void check_letter(const Letter& l, int k) {
  if (l.value < 0 || l.value > k) {
    throw std::invalid_argument("letter value " + std::to_string(l.value) +
                                " outside 0.." + std::to_string(k));
  }
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Splits on any run of separators, dropping empty pieces.
std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Strict comma list: "a,b,c" with optional surrounding blanks; no empty items.
std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = trim(text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
    if (piece.empty()) throw ParseError("empty item in list '" + std::string(text) + "'");
    out.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Word::Word(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

Word::Word(int k, std::vector<Letter> letters) : Word(k) {
  for (const auto& l : letters) check_letter(l, k);
  letters_ = std::move(letters);
}

Word Word::prefix(std::size_t length) const {
  Word out(k_);
  out.letters_.assign(letters_.begin(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(
                                             std::min(length, letters_.size())));
  return out;
}

bool operator==(const Word& a, const Word& b) {
  require_same_arity(a, b);
  return a.letters_ == b.letters_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  require_same_arity(a, b);
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.arity()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& l : w.letters()) {
    std::size_t code = static_cast<std::size_t>(l.value) * 2 +
                       static_cast<std::size_t>(l.polarity);
    h ^= code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void require_same_arity(const Word& a, const Word& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("words of arity " + std::to_string(a.arity()) + " and " +
                        std::to_string(b.arity()) + " cannot be combined");
  }
}

ParikhCounts::ParikhCounts(int k) : k_(k), counts_(2 * static_cast<std::size_t>(k + 1), 0) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

std::int64_t ParikhCounts::count(int value, Polarity p) const {
  if (value < 0 || value > k_) return 0;
  return counts_[2 * static_cast<std::size_t>(value) + static_cast<std::size_t>(p)];
}

std::int64_t ParikhCounts::count(int value) const {
  return count(value, Polarity::positive) + count(value, Polarity::negative);
}

std::int64_t ParikhCounts::total() const noexcept {
  std::int64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

void ParikhCounts::add(const Letter& l, std::int64_t times) {
  check_letter(l, k_);
  counts_[2 * static_cast<std::size_t>(l.value) + static_cast<std::size_t>(l.polarity)] += times;
}

ParikhCounts counts(const Word& w) {
  ParikhCounts c(w.arity());
  for (const auto& l : w.letters()) c.add(l);
  return c;
}

std::int64_t lambda_delta(const Letter& l, int k, Polarity p) {
  // Same polarity: every letter counts +1 (the k-letter term plus the
  // i = 0..k-1 sum). Opposite polarity (k-i): subtracts i.
  if (l.polarity == p) return 1;
  return -static_cast<std::int64_t>(k - l.value);
}

std::int64_t lambda(const ParikhCounts& c, Polarity p) {
  const int k = c.arity();
  std::int64_t sum = c.count(k, p);
  for (int i = 1; i <= k; ++i) sum -= static_cast<std::int64_t>(i) * c.count(k - i, opposite(p));
  for (int i = 0; i < k; ++i) sum += c.count(i, p);
  return sum;
}

std::int64_t lambda_plus(const ParikhCounts& c) { return lambda(c, Polarity::positive); }
std::int64_t lambda_minus(const ParikhCounts& c) { return lambda(c, Polarity::negative); }
std::int64_t lambda_plus(const Word& w) { return lambda_plus(counts(w)); }
std::int64_t lambda_minus(const Word& w) { return lambda_minus(counts(w)); }

Word parse_word(std::string_view text, int k) {
  std::vector<Letter> letters;
  for (auto token : split_tokens(text)) {
    if (token.size() < 2) throw ParseError("malformed letter '" + std::string(token) + "'");
    const char sign = token.back();
    if (sign != '+' && sign != '-') {
      throw ParseError("letter '" + std::string(token) + "' lacks a +/- suffix");
    }
    auto digits = token.substr(0, token.size() - 1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed letter '" + std::string(token) + "'");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("letter value out of range in '" + std::string(token) + "'");
    }
    if (value > k) {
      throw ParseError("letter '" + std::string(token) + "' exceeds arity k=" + std::to_string(k));
    }
    letters.push_back({value, sign == '+' ? Polarity::positive : Polarity::negative});
  }
  return Word(k, std::move(letters));
}

std::string format_letter(const Letter& l) {
  return std::to_string(l.value) + sign_char(l.polarity);
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

std::vector<Letter> alphabet(int k) {
  std::vector<Letter> out;
  for (int v = 0; v <= k; ++v) {
    out.push_back({v, Polarity::positive});
    out.push_back({v, Polarity::negative});
  }
  return out;
}

void for_each_word(int k, std::size_t length,
                   const std::function<bool(const Word&)>& visit) {
  const auto sigma = alphabet(k);
  std::vector<std::size_t> digits(length, 0);
  std::vector<Letter> letters(length, sigma.front());
  while (true) {
    if (!visit(Word(k, letters))) return;
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < sigma.size()) {
        letters[i] = sigma[digits[i]];
        break;
      }
      digits[i] = 0;
      letters[i] = sigma.front();
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

SignedPermutation::SignedPermutation(std::vector<std::int64_t> values,
                                     std::vector<Polarity> signs)
    : values_(std::move(values)), signs_(std::move(signs)) {
  if (values_.size() != signs_.size()) {
    throw std::invalid_argument("signed permutation needs as many signs (" +
                                std::to_string(signs_.size()) + ") as values (" +
                                std::to_string(values_.size()) + ")");
  }
  std::unordered_set<std::int64_t> seen;
  for (auto v : values_) {
    if (!seen.insert(v).second) {
      throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                  " in signed permutation");
    }
  }
}

std::vector<std::int64_t> parse_values(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto item : split_commas(text)) {
    std::int64_t v = 0;
    const char* first = item.data();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("malformed value '" + std::string(item) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Polarity> parse_signs(std::string_view text) {
  std::vector<Polarity> out;
  for (auto item : split_commas(text)) {
    if (item == "+") {
      out.push_back(Polarity::positive);
    } else if (item == "-") {
      out.push_back(Polarity::negative);
    } else {
      throw ParseError("malformed sign '" + std::string(item) + "'");
    }
  }
  return out;
}

SignedPermutation parse_signed_permutation(std::string_view values,
                                           std::string_view signs) {
  return SignedPermutation(parse_values(values), parse_signs(signs));
}

std::string format_values(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_signs(std::span<const Polarity> signs) {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ',';
    out += sign_char(signs[i]);
  }
  return out;
}

}  // namespace shp
