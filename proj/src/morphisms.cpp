#include "pavoid/morphisms.hpp"

#include "pavoid/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <utility>

namespace pavoid {

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw ArgumentError("morphism needs source and target alphabets");
  if (images_.size() != source_->size()) {
    throw ArgumentError(fmt::format("morphism has {} images for {} source letters",
                                    images_.size(), source_->size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_alphabet(images_[i].alphabet(), *target_);
    if (images_[i].empty()) {
      throw ArgumentError(fmt::format("image of '{}' is empty (morphism must be non-erasing)",
                                      source_->symbol(static_cast<Letter>(i))));
    }
  }
}

Morphism Morphism::from_strings(std::string_view source, std::string_view target,
                                const std::vector<std::string>& images) {
  auto src = make_alphabet(source);
  auto tgt = (source == target) ? src : make_alphabet(target);
  std::vector<Word> words;
  words.reserve(images.size());
  for (const auto& img : images) words.push_back(parse_word(img, tgt));
  return Morphism(std::move(src), std::move(tgt), std::move(words));
}

bool Morphism::operator==(const Morphism& other) const {
  return *source_ == *other.source_ && *target_ == *other.target_ && images_ == other.images_;
}

Morphism make_morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images) {
  return Morphism(std::move(source), std::move(target), std::move(images));
}

Word apply(const Morphism& m, const Word& word) {
  require_same_alphabet(word.alphabet(), m.source());
  std::vector<Letter> out;
  if (const auto n = uniformity(m)) out.reserve(*n * word.size());
  for (const Letter l : word.letters()) {
    const auto img = m.image(l).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(m.target_ptr(), std::move(out));
}

std::optional<std::size_t> uniformity(const Morphism& m) {
  const auto& images = m.images();
  const std::size_t n = images.front().size();
  const bool uniform =
      std::all_of(images.begin(), images.end(), [n](const Word& w) { return w.size() == n; });
  if (!uniform) return std::nullopt;
  return n;
}

std::size_t require_uniform(const Morphism& m, std::string_view what) {
  const auto n = uniformity(m);
  if (!n) throw PreconditionError(fmt::format("{} requires a uniform morphism", what));
  return *n;
}

Word iterate_prefix(const Morphism& m, char seed, std::size_t target_len) {
  if (!(m.source() == m.target())) {
    throw PreconditionError("iteration requires source and target alphabets to be equal");
  }
  if (target_len == 0) throw ArgumentError("iteration length must be at least 1");
  const auto s = m.source().index_of(seed);
  if (!s) throw ArgumentError(fmt::format("seed '{}' is not in the alphabet", seed));
  const Word& first = m.image(*s);
  if (first[0] != *s) {
    throw PreconditionError(fmt::format("morphism is not prolongable on '{}': its image begins with '{}'",
                                        seed, m.target().symbol(first[0])));
  }
  if (first.size() == 1 && target_len > 1) {
    throw PreconditionError(
        fmt::format("fixed point of '{}' is the single letter '{}'", seed, seed));
  }

  // Only the first target_len letters can influence the first target_len
  // letters of the next iterate.
  Word w(m.source_ptr(), {*s});
  while (w.size() < target_len) w = apply(m, w.prefix(std::min(w.size(), target_len)));
  return w.prefix(target_len);
}

namespace {

struct CatalogEntry {
  std::string_view name;
  std::string_view alphabet;
  std::array<std::string_view, 4> images;
};

// Images exactly as displayed in the literature with grouping spaces
// removed.
constexpr std::array<CatalogEntry, 4> kCatalog{{
    {"thue_morse", "01", {"01", "10"}},
    {"leech", "012", {"0121021201210", "1202102012021", "2010210120102"}},
    {"f4",
     "0123",
     {"01231230103213210", "12302301210320321", "23013012321031032",
      "30120123032102103"}},
    {"g4",
     "0123",
     {"012301221211203210", "123013003033010321", "230120123310221032",
      "301230110100132103"}},
}};

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kCatalog) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

Morphism catalog(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name != name) continue;
    std::vector<std::string> images;
    for (std::size_t i = 0; i < e.alphabet.size(); ++i) images.emplace_back(e.images[i]);
    return Morphism::from_strings(e.alphabet, e.alphabet, images);
  }
  throw ArgumentError(fmt::format("unknown catalog morphism \"{}\"", name));
}

}  // namespace pavoid
