#include "pavoid/words.hpp"

#include "pavoid/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <utility>

namespace pavoid {

namespace {

// Number of consecutive positions i with w[i] == w[i + period] that make up
// an occurrence of the given kind.
std::size_t required_matches(PatternKind kind, std::size_t period) noexcept {
  switch (kind) {
    case PatternKind::Square:
      return period;
    case PatternKind::Overlap:
      return period + 1;
    case PatternKind::Cube:
      return 2 * period;
  }
  return period;
}

bool printable_letter(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f;
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) {
    throw ArgumentError("alphabet must contain at least one letter");
  }
  if (letters_.size() > 255) {
    throw ArgumentError("alphabet has more than 255 letters");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i];
    if (!printable_letter(c)) {
      throw ArgumentError(fmt::format(
          "alphabet letter at position {} is not a printable ASCII character", i));
    }
    if (letters_.find(c) != i) {
      throw ArgumentError(fmt::format("duplicate alphabet letter '{}'", c));
    }
  }
}

Alphabet Alphabet::from_symbols(std::span<const std::string> symbols) {
  std::string letters;
  for (const auto& s : symbols) {
    if (s.size() != 1) {
      throw ArgumentError(
          fmt::format("alphabet symbol \"{}\" is not a single character", s));
    }
    letters.push_back(s.front());
  }
  return Alphabet(letters);
}

char Alphabet::symbol(Letter index) const {
  if (index >= letters_.size()) {
    throw ArgumentError(fmt::format("letter index {} out of range for alphabet of size {}",
                                    index, letters_.size()));
  }
  return letters_[index];
}

std::optional<Letter> Alphabet::index_of(char symbol) const noexcept {
  const auto pos = letters_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

AlphabetPtr make_alphabet(std::string_view letters) {
  return std::make_shared<const Alphabet>(letters);
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) {
    throw ArgumentError(fmt::format("alphabet mismatch: {{{}}} vs {{{}}}", a.letters(),
                                    b.letters()));
  }
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw ArgumentError("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw ArgumentError("word needs an alphabet");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= alphabet_->size()) {
      throw ArgumentError(fmt::format("letter index {} at position {} out of range", letters_[i], i));
    }
  }
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > letters_.size() || length > letters_.size() - start) {
    throw ArgumentError(fmt::format("factor [{}, {}) outside word of length {}", start,
                                    start + length, letters_.size()));
  }
  const auto first = letters_.begin() + static_cast<std::ptrdiff_t>(start);
  return Word(alphabet_, std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(length)));
}

Word Word::suffix(std::size_t length) const {
  if (length > letters_.size()) {
    throw ArgumentError(fmt::format("suffix of length {} longer than word", length));
  }
  return factor(letters_.size() - length, length);
}

bool Word::starts_with(const Word& other) const {
  return other.size() <= size() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& other) const {
  return other.size() <= size() &&
         std::equal(other.letters_.rbegin(), other.letters_.rend(), letters_.rbegin());
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (const Letter l : letters_) out.push_back(alphabet_->letters()[l]);
  return out;
}

bool Word::operator==(const Word& other) const {
  return letters_ == other.letters_ &&
         (alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_);
}

Word operator+(const Word& lhs, const Word& rhs) {
  require_same_alphabet(lhs.alphabet(), rhs.alphabet());
  std::vector<Letter> out(lhs.letters().begin(), lhs.letters().end());
  out.insert(out.end(), rhs.letters().begin(), rhs.letters().end());
  return Word(lhs.alphabet_ptr(), std::move(out));
}

Word parse_word(std::string_view text, AlphabetPtr alphabet) {
  if (!alphabet) throw ArgumentError("word needs an alphabet");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto idx = alphabet->index_of(text[i]);
    if (!idx) {
      throw ParseError(fmt::format("character '{}' at position {} is not in alphabet {{{}}}",
                                   text[i], i, alphabet->letters()),
                       i);
    }
    letters.push_back(*idx);
  }
  return Word(std::move(alphabet), std::move(letters));
}

std::size_t count_factor(const Word& word, const Word& factor) {
  if (factor.empty()) throw ArgumentError("count_factor needs a nonempty factor");
  require_same_alphabet(word.alphabet(), factor.alphabet());
  if (factor.size() > word.size()) return 0;
  const auto w = word.letters();
  const auto f = factor.letters();
  std::size_t count = 0;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  }
  return count;
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Square:
      return "square";
    case PatternKind::Overlap:
      return "overlap";
    case PatternKind::Cube:
      return "cube";
  }
  return "?";
}

std::optional<PatternKind> parse_pattern_kind(std::string_view name) {
  if (name == "square") return PatternKind::Square;
  if (name == "overlap") return PatternKind::Overlap;
  if (name == "cube") return PatternKind::Cube;
  return std::nullopt;
}

std::size_t pattern_span(PatternKind kind, std::size_t period) noexcept {
  return required_matches(kind, period) + period;
}

std::size_t Occurrence::span() const noexcept { return pattern_span(kind, period); }

bool occurrence_matches(std::span<const Letter> letters, const Occurrence& occ) {
  if (occ.period == 0 || occ.end() > letters.size()) return false;
  const std::size_t need = required_matches(occ.kind, occ.period);
  for (std::size_t i = occ.start; i < occ.start + need; ++i) {
    if (letters[i] != letters[i + occ.period]) return false;
  }
  return true;
}

// For each period, in increasing order, run a counter of consecutive
// positions i with w[i] == w[i + p]. Span is increasing in the period, so the
// first hit is the (span, start) minimum.
std::optional<Occurrence> find_pattern(std::span<const Letter> w, PatternKind kind) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; pattern_span(kind, p) <= n; ++p) {
    const std::size_t need = required_matches(kind, p);
    std::size_t run = 0;
    for (std::size_t i = 0; i + p < n; ++i) {
      run = (w[i] == w[i + p]) ? run + 1 : 0;
      if (run == need) return Occurrence{kind, i + 1 - need, p};
    }
  }
  return std::nullopt;
}

std::optional<Occurrence> find_pattern(const Word& word, PatternKind kind) {
  return find_pattern(word.letters(), kind);
}

bool extend_check(std::span<const Letter> w, PatternKind kind) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; pattern_span(kind, p) <= n; ++p) {
    if (occurrence_matches(w, Occurrence{kind, n - pattern_span(kind, p), p})) return true;
  }
  return false;
}

bool extend_check(const Word& word, PatternKind kind) {
  return extend_check(word.letters(), kind);
}

PatternFreeEnumerator::PatternFreeEnumerator(AlphabetPtr alphabet, PatternKind kind,
                                             std::size_t max_len)
    : alphabet_(std::move(alphabet)), kind_(kind), max_len_(max_len),
      yielded_(max_len + 1, 0) {
  if (!alphabet_) throw ArgumentError("enumerator needs an alphabet");
  done_ = max_len_ == 0;
}

// Moves buf_ to the next pattern-free word of length depth_ in lexicographic
// order. Every proper prefix of buf_ is pattern-free at all times, so only
// the suffix ending at the newest letter needs checking.
bool PatternFreeEnumerator::advance() {
  const auto k = static_cast<Letter>(alphabet_->size());
  bool bump = !fresh_;
  fresh_ = false;
  for (;;) {
    if (bump) {
      while (!buf_.empty() && buf_.back() + 1u == k) buf_.pop_back();
      if (buf_.empty()) return false;
      ++buf_.back();
    } else {
      buf_.push_back(0);
    }
    if (extend_check(buf_, kind_)) {
      bump = true;
      continue;
    }
    bump = false;
    if (buf_.size() == depth_) return true;
  }
}

std::optional<Word> PatternFreeEnumerator::next() {
  while (!done_) {
    if (advance()) {
      ++yielded_[depth_];
      return Word(alphabet_, buf_);
    }
    if (depth_ == max_len_) {
      done_ = true;
      break;
    }
    ++depth_;
    fresh_ = true;
    buf_.clear();
  }
  return std::nullopt;
}

std::vector<Word> enumerate_pattern_free(AlphabetPtr alphabet, PatternKind kind,
                                         std::size_t max_len) {
  PatternFreeEnumerator e(std::move(alphabet), kind, max_len);
  std::vector<Word> out;
  while (auto w = e.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace pavoid
