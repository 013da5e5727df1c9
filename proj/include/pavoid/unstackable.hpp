#pragma once

#include "pavoid/morphisms.hpp"
#include "pavoid/words.hpp"

#include <string>
#include <variant>
#include <vector>

namespace pavoid {

// A pattern-free source word whose image (or image concatenation) contains
// the pattern.
struct ImageWitness {
  Word word;
  Word image;
  Occurrence occurrence;
};

enum class BorderSide {
  SSuffix,  // S is a suffix of image(offender)
  UPrefix,  // U is a prefix of image(offender)
};

// image(a) = S V and image(b) = V U with a short nonempty border V, where S
// ends some image or U begins some image.
struct BorderWitness {
  Letter a = 0;
  Letter b = 0;
  Word v;
  Word s;
  Word u;
  BorderSide side = BorderSide::SSuffix;
  Letter offender = 0;
};

enum class EndSide { First, Last };

// Two distinct letters whose images begin (or end) with the same letter.
struct EndsWitness {
  Letter a = 0;
  Letter b = 0;
  EndSide side = EndSide::First;
  Letter shared = 0;
};

using Witness = std::variant<ImageWitness, BorderWitness, EndsWitness>;

struct ConditionReport {
  std::string condition;
  std::vector<Witness> witnesses;
  // Number of candidate words or configurations examined.
  std::size_t examined = 0;

  bool holds() const noexcept { return witnesses.empty(); }
};

enum class Definition { OverlapDef1, SquareDef4 };

std::string_view to_string(Definition def);

struct Verdict {
  Definition definition = Definition::OverlapDef1;
  std::vector<ConditionReport> reports;
  std::vector<std::string> warnings;

  bool pass() const noexcept;
};

// Condition (i) of both definitions: every pattern-free word of length
// exactly three has a pattern-free image. kind must be Overlap or Square.
ConditionReport check_image_triples(const Morphism& m, PatternKind kind);

// The border condition: for all ordered pairs (a, b), a == b included, and
// every V with 1 <= |V| <= floor(n/2) that is both a suffix of image(a) = S V
// and a prefix of image(b) = V U, S ends no image and U begins no image.
// Witnesses come out ordered by (a, b, |V|, side, offender). Requires a
// uniform morphism.
ConditionReport check_border_condition(const Morphism& m);

// Images of distinct letters pairwise differ in first letter and in last
// letter.
ConditionReport check_marked_ends(const Morphism& m);

// The three consequences of condition (i) for overlaps: every image is
// overlap-free, every concatenation image(a) image(b) is overlap-free, and
// ends are marked. Requires at least two source letters.
std::vector<ConditionReport> check_lemma_consequences(const Morphism& m);

Verdict check_overlap_def(const Morphism& m);
Verdict check_square_def(const Morphism& m);
Verdict check_definition(const Morphism& m, Definition def);

// Replays a witness through the words module: true iff the recorded words
// really exhibit the claimed violation for morphism m.
bool recheck_witness(const Morphism& m, const Witness& w);

std::string describe(const Morphism& m, const Witness& w);

}  // namespace pavoid
