#include "pavoid/unstackable.hpp"

#include "pavoid/error.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace pavoid {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Word> all_words(const AlphabetPtr& alphabet, std::size_t length) {
  const std::size_t k = alphabet->size();
  std::vector<Word> out;
  std::vector<Letter> buf(length, 0);
  for (;;) {
    out.emplace_back(alphabet, buf);
    std::size_t i = length;
    while (i > 0 && buf[i - 1] + 1u == k) buf[--i] = 0;
    if (i == 0) break;
    ++buf[i - 1];
  }
  return out;
}

ConditionReport marked_ends(const Morphism& m, std::string condition) {
  ConditionReport report{std::move(condition), {}, 0};
  const auto& images = m.images();
  for (const EndSide side : {EndSide::First, EndSide::Last}) {
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        ++report.examined;
        const Word& ha = images[a];
        const Word& hb = images[b];
        const Letter la = side == EndSide::First ? ha[0] : ha[ha.size() - 1];
        const Letter lb = side == EndSide::First ? hb[0] : hb[hb.size() - 1];
        if (la == lb) {
          report.witnesses.emplace_back(
              EndsWitness{static_cast<Letter>(a), static_cast<Letter>(b), side, la});
        }
      }
    }
  }
  return report;
}

std::string letter(const Alphabet& alphabet, Letter l) {
  return std::string(1, alphabet.symbol(l));
}

}  // namespace

std::string_view to_string(Definition def) {
  return def == Definition::OverlapDef1 ? "overlap" : "square";
}

bool Verdict::pass() const noexcept {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ConditionReport& r) { return r.holds(); });
}

ConditionReport check_image_triples(const Morphism& m, PatternKind kind) {
  if (kind == PatternKind::Cube) {
    throw ArgumentError("image triple check is defined for overlaps and squares only");
  }
  ConditionReport report{kind == PatternKind::Overlap ? "def1.i" : "def4.i", {}, 0};
  for (const Word& w : all_words(m.source_ptr(), 3)) {
    if (find_pattern(w, kind)) continue;
    ++report.examined;
    Word image = apply(m, w);
    if (auto occ = find_pattern(image, kind)) {
      report.witnesses.emplace_back(ImageWitness{w, std::move(image), *occ});
    }
  }
  return report;
}

ConditionReport check_border_condition(const Morphism& m) {
  const std::size_t n = require_uniform(m, "the border condition");
  ConditionReport report{"def1.ii", {}, 0};
  const auto& images = m.images();
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = 0; b < images.size(); ++b) {
      for (std::size_t len = 1; len <= n / 2; ++len) {
        Word v = images[a].suffix(len);
        if (!images[b].starts_with(v)) continue;
        ++report.examined;
        Word s = images[a].prefix(n - len);
        Word u = images[b].suffix(n - len);
        for (const BorderSide side : {BorderSide::SSuffix, BorderSide::UPrefix}) {
          for (std::size_t c = 0; c < images.size(); ++c) {
            const bool hit = side == BorderSide::SSuffix ? images[c].ends_with(s)
                                                         : images[c].starts_with(u);
            if (hit) {
              report.witnesses.emplace_back(BorderWitness{static_cast<Letter>(a),
                                                          static_cast<Letter>(b), v, s, u,
                                                          side, static_cast<Letter>(c)});
            }
          }
        }
      }
    }
  }
  return report;
}

ConditionReport check_marked_ends(const Morphism& m) { return marked_ends(m, "def4.ii"); }

std::vector<ConditionReport> check_lemma_consequences(const Morphism& m) {
  if (m.source().size() < 2) {
    throw PreconditionError("the consequences of condition (i) need at least two source letters");
  }
  const auto& src = m.source_ptr();
  std::vector<ConditionReport> out;

  ConditionReport single{"lemma2.i", {}, 0};
  for (const Word& w : all_words(src, 1)) {
    ++single.examined;
    Word image = apply(m, w);
    if (auto occ = find_pattern(image, PatternKind::Overlap)) {
      single.witnesses.emplace_back(ImageWitness{w, std::move(image), *occ});
    }
  }
  out.push_back(std::move(single));

  ConditionReport pairs{"lemma2.ii", {}, 0};
  for (const Word& w : all_words(src, 2)) {
    ++pairs.examined;
    Word image = apply(m, w);
    if (auto occ = find_pattern(image, PatternKind::Overlap)) {
      pairs.witnesses.emplace_back(ImageWitness{w, std::move(image), *occ});
    }
  }
  out.push_back(std::move(pairs));

  out.push_back(marked_ends(m, "lemma2.iii"));
  return out;
}

Verdict check_overlap_def(const Morphism& m) {
  require_uniform(m, "the overlap definition");
  Verdict v{Definition::OverlapDef1, {}, {}};
  v.reports.push_back(check_image_triples(m, PatternKind::Overlap));
  v.reports.push_back(check_border_condition(m));
  if (m.source().size() == 1) {
    v.warnings.emplace_back(
        "condition def1.i holds vacuously: a one-letter alphabet has no overlap-free words of length 3");
  }
  return v;
}

Verdict check_square_def(const Morphism& m) {
  require_uniform(m, "the square definition");
  Verdict v{Definition::SquareDef4, {}, {}};
  v.reports.push_back(check_image_triples(m, PatternKind::Square));
  v.reports.push_back(check_marked_ends(m));
  auto border = check_border_condition(m);
  border.condition = "def4.iii";
  v.reports.push_back(std::move(border));
  if (m.source().size() == 1) {
    v.warnings.emplace_back(
        "condition def4.i holds vacuously: a one-letter alphabet has no square-free words of length 3");
  }
  return v;
}

Verdict check_definition(const Morphism& m, Definition def) {
  return def == Definition::OverlapDef1 ? check_overlap_def(m) : check_square_def(m);
}

bool recheck_witness(const Morphism& m, const Witness& w) {
  return std::visit(
      Overloaded{
          [&](const ImageWitness& iw) {
            return apply(m, iw.word) == iw.image &&
                   occurrence_matches(iw.image.letters(), iw.occurrence);
          },
          [&](const BorderWitness& bw) {
            const Word& ha = m.image(bw.a);
            const Word& hb = m.image(bw.b);
            if (bw.v.empty() || !(bw.s + bw.v == ha) || !(bw.v + bw.u == hb)) return false;
            const Word& hc = m.image(bw.offender);
            return bw.side == BorderSide::SSuffix ? hc.ends_with(bw.s) : hc.starts_with(bw.u);
          },
          [&](const EndsWitness& ew) {
            if (ew.a == ew.b) return false;
            const Word& ha = m.image(ew.a);
            const Word& hb = m.image(ew.b);
            if (ew.side == EndSide::First) return ha[0] == ew.shared && hb[0] == ew.shared;
            return ha[ha.size() - 1] == ew.shared && hb[hb.size() - 1] == ew.shared;
          },
      },
      w);
}

std::string describe(const Morphism& m, const Witness& w) {
  const Alphabet& src = m.source();
  const Alphabet& tgt = m.target();
  return std::visit(
      Overloaded{
          [&](const ImageWitness& iw) {
            return fmt::format("W={} h(W)={} contains {} at start {} period {}", iw.word.str(),
                               iw.image.str(), to_string(iw.occurrence.kind),
                               iw.occurrence.start, iw.occurrence.period);
          },
          [&](const BorderWitness& bw) {
            const std::string c = letter(src, bw.offender);
            const std::string tail =
                bw.side == BorderSide::SSuffix
                    ? fmt::format("S is a suffix of h({})={}", c, m.image(bw.offender).str())
                    : fmt::format("U is a prefix of h({})={}", c, m.image(bw.offender).str());
            return fmt::format("a={} b={} V={} S={} U={}: {}", letter(src, bw.a),
                               letter(src, bw.b), bw.v.str(), bw.s.str(), bw.u.str(), tail);
          },
          [&](const EndsWitness& ew) {
            return fmt::format("h({}) and h({}) both {} with {}", letter(src, ew.a),
                               letter(src, ew.b), ew.side == EndSide::First ? "begin" : "end",
                               letter(tgt, ew.shared));
          },
      },
      w);
}

}  // namespace pavoid
