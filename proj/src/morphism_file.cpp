#include "pavoid/morphism_file.hpp"

#include "pavoid/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace pavoid {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Alphabet parse_alphabet_value(std::string_view value, std::size_t line) {
  const bool tokenized = std::any_of(value.begin(), value.end(),
                                     [](char c) { return is_space(c) || c == ','; });
  try {
    if (!tokenized) return Alphabet(value);
    std::vector<std::string> symbols;
    std::string cur;
    for (const char c : value) {
      if (is_space(c) || c == ',') {
        if (!cur.empty()) symbols.push_back(std::exchange(cur, {}));
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) symbols.push_back(cur);
    return Alphabet::from_symbols(symbols);
  } catch (const ArgumentError& e) {
    throw ParseError(fmt::format("line {}: {}", line, e.what()), line);
  }
}

}  // namespace

Morphism parse_morphism(std::string_view text) {
  std::optional<Alphabet> source;
  std::optional<Alphabet> target;
  std::map<Letter, std::pair<std::string, std::size_t>> rules;  // letter -> (image, line)

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("alphabet:")) {
      if (source) throw ParseError(fmt::format("line {}: duplicate alphabet header", line_no), line_no);
      if (!rules.empty()) {
        throw ParseError(fmt::format("line {}: alphabet header must precede the rules", line_no), line_no);
      }
      source = parse_alphabet_value(trim(line.substr(9)), line_no);
      continue;
    }
    if (line.starts_with("target:")) {
      if (target) throw ParseError(fmt::format("line {}: duplicate target header", line_no), line_no);
      if (!rules.empty()) {
        throw ParseError(fmt::format("line {}: target header must precede the rules", line_no), line_no);
      }
      target = parse_alphabet_value(trim(line.substr(7)), line_no);
      continue;
    }

    if (!source) {
      throw ParseError(fmt::format("line {}: expected 'alphabet:' header before rules", line_no), line_no);
    }
    const auto arrow = line.find("->", 1);
    if (arrow == std::string_view::npos) {
      throw ParseError(fmt::format("line {}: expected '<letter> -> <image>'", line_no), line_no);
    }
    const auto lhs = trim(line.substr(0, arrow));
    const auto rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != 1) {
      throw ParseError(fmt::format("line {}: rule letter \"{}\" is not a single character", line_no, lhs),
                       line_no);
    }
    const auto letter = source->index_of(lhs.front());
    if (!letter) {
      throw ParseError(fmt::format("line {}: rule letter '{}' is not in the alphabet", line_no, lhs), line_no);
    }
    if (rules.contains(*letter)) {
      throw ParseError(fmt::format("line {}: second rule for letter '{}'", line_no, lhs), line_no);
    }
    std::string image;
    std::copy_if(rhs.begin(), rhs.end(), std::back_inserter(image), [](char c) { return !is_space(c); });
    rules.emplace(*letter, std::make_pair(std::move(image), line_no));
  }

  if (!source) throw ParseError("missing 'alphabet:' header");
  auto src = std::make_shared<const Alphabet>(*source);
  auto tgt = target ? std::make_shared<const Alphabet>(*target) : src;

  std::vector<Word> images;
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto it = rules.find(static_cast<Letter>(i));
    if (it == rules.end()) {
      throw ParseError(fmt::format("no rule for letter '{}'", src->symbol(static_cast<Letter>(i))));
    }
    const auto& [image, line] = it->second;
    if (image.empty()) {
      throw ParseError(fmt::format("line {}: empty image (morphism must be non-erasing)", line), line);
    }
    try {
      images.push_back(parse_word(image, tgt));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("line {}: image {}", line, e.what()), line);
    }
  }
  return Morphism(std::move(src), std::move(tgt), std::move(images));
}

Morphism read_morphism_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError(fmt::format("cannot open morphism file \"{}\"", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_morphism(buf.str());
}

std::string format_morphism(const Morphism& m) {
  std::string out = fmt::format("alphabet: {}\n", m.source().letters());
  if (!(m.target() == m.source())) out += fmt::format("target: {}\n", m.target().letters());
  for (std::size_t i = 0; i < m.source().size(); ++i) {
    out += fmt::format("{} -> {}\n", m.source().symbol(static_cast<Letter>(i)),
                       m.image(static_cast<Letter>(i)).str());
  }
  return out;
}

}  // namespace pavoid
