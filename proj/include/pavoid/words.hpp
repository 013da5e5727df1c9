#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pavoid {

using Letter = std::uint8_t;

// Ordered set of single-character letters. The construction order fixes the
// letter indices, and with them lexicographic and enumeration order.
class Alphabet {
 public:
  // Every character of `letters` is one letter. Letters must be printable
  // ASCII (no whitespace) and pairwise distinct; at least one is required.
  explicit Alphabet(std::string_view letters);

  // Tokenized form: each symbol must be exactly one character.
  static Alphabet from_symbols(std::span<const std::string> symbols);

  std::size_t size() const noexcept { return letters_.size(); }
  std::string_view letters() const noexcept { return letters_; }
  char symbol(Letter index) const;
  std::optional<Letter> index_of(char symbol) const noexcept;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string_view letters);

// Finite word over a shared alphabet. Immutable after construction.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word factor(std::size_t start, std::size_t length) const;
  Word prefix(std::size_t length) const { return factor(0, length); }
  Word suffix(std::size_t length) const;
  bool starts_with(const Word& other) const;
  bool ends_with(const Word& other) const;

  std::string str() const;

  // Alphabets compare by content, so words built from separately parsed but
  // identical alphabets are equal.
  bool operator==(const Word& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

Word operator+(const Word& lhs, const Word& rhs);

void require_same_alphabet(const Alphabet& a, const Alphabet& b);

// Maps each character of `text` to its letter index. Throws ParseError naming
// the first character not in the alphabet and its position.
Word parse_word(std::string_view text, AlphabetPtr alphabet);

// Number of (possibly overlapping) occurrences of a nonempty factor.
std::size_t count_factor(const Word& word, const Word& factor);

enum class PatternKind { Square, Overlap, Cube };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> parse_pattern_kind(std::string_view name);

// A located repetition. `period` is |X| for squares and cubes and |cX| for
// overlaps, so the three repeated letters of an overlap sit at start,
// start + period and start + 2 * period.
struct Occurrence {
  PatternKind kind = PatternKind::Square;
  std::size_t start = 0;
  std::size_t period = 1;

  std::size_t span() const noexcept;
  std::size_t end() const noexcept { return start + span(); }

  bool operator==(const Occurrence&) const = default;
};

std::size_t pattern_span(PatternKind kind, std::size_t period) noexcept;

// Direct letter-by-letter verification that `occ` designates a real
// occurrence inside `letters`.
bool occurrence_matches(std::span<const Letter> letters, const Occurrence& occ);

// First occurrence in (span, start, period) order, or nothing if the word
// avoids the pattern.
std::optional<Occurrence> find_pattern(std::span<const Letter> letters, PatternKind kind);
std::optional<Occurrence> find_pattern(const Word& word, PatternKind kind);

// True iff some occurrence ends exactly at the last letter.
bool extend_check(std::span<const Letter> letters, PatternKind kind);
bool extend_check(const Word& word, PatternKind kind);

// Pattern-free words of length 1..max_len, shorter first and lexicographic
// within a length. Iterative deepening over a backtracking search pruned by
// extend_check; memory use is O(max_len). Single consumer.
class PatternFreeEnumerator {
 public:
  PatternFreeEnumerator(AlphabetPtr alphabet, PatternKind kind, std::size_t max_len);

  std::optional<Word> next();

  // Words yielded so far at each length; index 0 is unused.
  const std::vector<std::uint64_t>& yielded_per_length() const noexcept { return yielded_; }

 private:
  bool advance();

  AlphabetPtr alphabet_;
  PatternKind kind_;
  std::size_t max_len_;
  std::size_t depth_ = 1;
  bool fresh_ = true;
  bool done_ = false;
  std::vector<Letter> buf_;
  std::vector<std::uint64_t> yielded_;
};

std::vector<Word> enumerate_pattern_free(AlphabetPtr alphabet, PatternKind kind,
                                         std::size_t max_len);

}  // namespace pavoid
