#pragma once

#include "pavoid/morphisms.hpp"
#include "pavoid/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pavoid {

enum class Direction {
  Forward,   // pattern-free word with a pattern in its image
  Backward,  // word containing the pattern with a pattern-free image
};

std::string_view to_string(Direction d);

struct Counterexample {
  Direction direction = Direction::Forward;
  Word word;
  Word image;
  // Located in `image` for Forward, in `word` for Backward.
  Occurrence occurrence;
};

struct CertifyStats {
  std::size_t max_len = 0;
  // Words examined at each length; index 0 is unused.
  std::vector<std::uint64_t> words_per_length;

  std::uint64_t words_checked() const noexcept;
};

struct CertifyResult {
  std::optional<Counterexample> counterexample;
  CertifyStats stats;
};

// Smallest legal max_len for a backward run (shortest word that can contain
// the pattern).
std::size_t minimum_backward_length(PatternKind kind) noexcept;

// Walks every pattern-free source word of length 1..max_len, shortest first
// and lexicographic within a length, and stops at the first whose image
// contains the pattern.
CertifyResult certify_forward(const Morphism& m, PatternKind kind, std::size_t max_len);

// Walks all k^L words for L = 1..max_len in the same order, keeps those that
// contain the pattern, and stops at the first whose image is pattern-free.
CertifyResult certify_backward(const Morphism& m, PatternKind kind, std::size_t max_len);

struct Residues {
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;

  bool operator==(const Residues&) const = default;
};

// r_i = (j0 + i * period) mod n; by construction r2 = (2 r1 - r0) mod n.
Residues residues(std::size_t j0, std::size_t period, std::size_t n);

enum class AlignmentCase {
  R0LeR2LtR1,  // r0 <= r2 < r1
  R2LtR0LtR1,  // r2 < r0 < r1
  R1LtR0LeR2,  // r1 < r0 <= r2
  R1LtR2LtR0,  // r1 < r2 < r0
  R0LtR1LtR2,  // r0 < r1 < r2 (cannot sit inside exactly four tiles)
  R2LtR1LtR0,  // r2 < r1 < r0 (cannot sit inside exactly four tiles)
  Aligned,     // period = 0 mod n
  LongR0LtR1,  // more than four tiles, r0 < r1
  LongR1LtR0,  // more than four tiles, r1 < r0
};

std::string_view to_string(AlignmentCase c);

struct AlignmentDiagnosis {
  Residues residues;
  std::size_t first_tile = 0;
  std::size_t tile_span = 0;
  AlignmentCase label = AlignmentCase::Aligned;
};

// Tile geometry of an overlap inside the image of an n-uniform morphism.
// Up to four touched tiles the full residue order is reported; longer spans
// only compare r0 and r1.
AlignmentDiagnosis classify_alignment(const Occurrence& occ, std::size_t n);

// Multi-line human-readable account of a forward counterexample: residues,
// tiles and their preimage letters, and either the aligned preimage
// reconstruction or the border-condition violations that allow a misaligned
// occurrence.
std::string explain(const Morphism& m, const Counterexample& cex);

}  // namespace pavoid
