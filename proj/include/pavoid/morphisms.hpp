#pragma once

#include "pavoid/words.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pavoid {

// Non-erasing morphism from source* to target*, given by one image word per
// source letter.
class Morphism {
 public:
  // Throws ArgumentError when the image count differs from the source size,
  // when an image is over a different alphabet, or when an image is empty.
  Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  // Convenience: images given as text over `target`.
  static Morphism from_strings(std::string_view source, std::string_view target,
                               const std::vector<std::string>& images);

  const Alphabet& source() const noexcept { return *source_; }
  const Alphabet& target() const noexcept { return *target_; }
  const AlphabetPtr& source_ptr() const noexcept { return source_; }
  const AlphabetPtr& target_ptr() const noexcept { return target_; }

  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(Letter letter) const { return images_.at(letter); }

  bool operator==(const Morphism& other) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
};

Morphism make_morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

Word apply(const Morphism& m, const Word& word);

// Common image length, if every image has the same length.
std::optional<std::size_t> uniformity(const Morphism& m);

// Same as uniformity() but throws PreconditionError naming `what` when the
// morphism is not uniform.
std::size_t require_uniform(const Morphism& m, std::string_view what);

// First `target_len` letters of the fixed point m^omega(seed). The morphism
// must be an endomorphism and prolongable on seed.
Word iterate_prefix(const Morphism& m, char seed, std::size_t target_len);

// Built-in morphisms: thue_morse, leech, f4, g4.
const std::vector<std::string>& catalog_names();
Morphism catalog(std::string_view name);

}  // namespace pavoid
