#include "pavoid/certify.hpp"

#include "pavoid/error.hpp"
#include "pavoid/unstackable.hpp"

#include <fmt/format.h>

#include <numeric>
#include <sstream>

namespace pavoid {

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

std::uint64_t CertifyStats::words_checked() const noexcept {
  return std::accumulate(words_per_length.begin(), words_per_length.end(), std::uint64_t{0});
}

std::size_t minimum_backward_length(PatternKind kind) noexcept {
  return kind == PatternKind::Square ? 2 : 3;
}

CertifyResult certify_forward(const Morphism& m, PatternKind kind, std::size_t max_len) {
  if (max_len < 1) throw ArgumentError("forward certification needs max_len >= 1");
  CertifyResult result;
  result.stats.max_len = max_len;
  result.stats.words_per_length.assign(max_len + 1, 0);

  PatternFreeEnumerator words(m.source_ptr(), kind, max_len);
  while (auto w = words.next()) {
    ++result.stats.words_per_length[w->size()];
    Word image = apply(m, *w);
    if (auto occ = find_pattern(image, kind)) {
      result.counterexample = Counterexample{Direction::Forward, std::move(*w), std::move(image), *occ};
      break;
    }
  }
  return result;
}

CertifyResult certify_backward(const Morphism& m, PatternKind kind, std::size_t max_len) {
  const std::size_t min_len = minimum_backward_length(kind);
  if (max_len < min_len) {
    throw ArgumentError(fmt::format("backward certification for {} needs max_len >= {}",
                                    to_string(kind), min_len));
  }
  CertifyResult result;
  result.stats.max_len = max_len;
  result.stats.words_per_length.assign(max_len + 1, 0);

  const auto& alphabet = m.source_ptr();
  const std::size_t k = alphabet->size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Letter> buf(len, 0);
    for (;;) {
      if (auto occ = find_pattern(buf, kind)) {
        ++result.stats.words_per_length[len];
        Word w(alphabet, buf);
        Word image = apply(m, w);
        if (!find_pattern(image, kind)) {
          result.counterexample =
              Counterexample{Direction::Backward, std::move(w), std::move(image), *occ};
          return result;
        }
      }
      std::size_t i = len;
      while (i > 0 && buf[i - 1] + 1u == k) buf[--i] = 0;
      if (i == 0) break;
      ++buf[i - 1];
    }
  }
  return result;
}

Residues residues(std::size_t j0, std::size_t period, std::size_t n) {
  if (n == 0) throw ArgumentError("residues need n >= 1");
  if (period == 0) throw ArgumentError("residues need period >= 1");
  return Residues{j0 % n, (j0 + period) % n, (j0 + 2 * period) % n};
}

std::string_view to_string(AlignmentCase c) {
  switch (c) {
    case AlignmentCase::R0LeR2LtR1:
      return "r0<=r2<r1";
    case AlignmentCase::R2LtR0LtR1:
      return "r2<r0<r1";
    case AlignmentCase::R1LtR0LeR2:
      return "r1<r0<=r2";
    case AlignmentCase::R1LtR2LtR0:
      return "r1<r2<r0";
    case AlignmentCase::R0LtR1LtR2:
      return "r0<r1<r2";
    case AlignmentCase::R2LtR1LtR0:
      return "r2<r1<r0";
    case AlignmentCase::Aligned:
      return "aligned";
    case AlignmentCase::LongR0LtR1:
      return "long_r0<r1";
    case AlignmentCase::LongR1LtR0:
      return "long_r1<r0";
  }
  return "?";
}

AlignmentDiagnosis classify_alignment(const Occurrence& occ, std::size_t n) {
  if (occ.kind != PatternKind::Overlap) {
    throw ArgumentError("alignment classification applies to overlap occurrences");
  }
  if (occ.period == 0) throw ArgumentError("occurrence period must be positive");
  if (n == 0) throw ArgumentError("tile length must be positive");

  AlignmentDiagnosis d;
  d.residues = residues(occ.start, occ.period, n);
  d.first_tile = occ.start / n;
  d.tile_span = (occ.end() - 1) / n - d.first_tile + 1;

  const auto [r0, r1, r2] = d.residues;
  if (occ.period % n == 0) {
    d.label = AlignmentCase::Aligned;
  } else if (d.tile_span > 4) {
    d.label = r0 < r1 ? AlignmentCase::LongR0LtR1 : AlignmentCase::LongR1LtR0;
  } else if (r0 < r1) {
    // r2 == r1 would force r0 == r1.
    if (r2 < r0) {
      d.label = AlignmentCase::R2LtR0LtR1;
    } else if (r2 < r1) {
      d.label = AlignmentCase::R0LeR2LtR1;
    } else {
      d.label = AlignmentCase::R0LtR1LtR2;
    }
  } else {
    if (r2 < r1) {
      d.label = AlignmentCase::R2LtR1LtR0;
    } else if (r2 < r0) {
      d.label = AlignmentCase::R1LtR2LtR0;
    } else {
      d.label = AlignmentCase::R1LtR0LeR2;
    }
  }
  return d;
}

namespace {

std::string sym(const Alphabet& a, Letter l) { return std::string(1, a.symbol(l)); }

// The pairs of positions (x, x + period) forced equal by the occurrence are
// exactly x in [start, start + period + extra), with extra = 1 for overlaps
// and 0 for squares.
std::size_t equality_length(const Occurrence& occ) {
  return occ.kind == PatternKind::Overlap ? occ.period + 1 : occ.period;
}

// Aligned case: the occurrence forces tile s0 + i to equal tile s0 + k + i in
// its last letter (and, for the closing letter of an overlap, its first
// letter), where k = period / n. Replays the preimage reconstruction.
void explain_aligned(std::ostringstream& out, const Morphism& m, const Counterexample& cex,
                     std::size_t n) {
  const auto& occ = cex.occurrence;
  const Word& w = cex.word;
  const Alphabet& src = m.source();
  const std::size_t s0 = occ.start / n;
  const std::size_t k = occ.period / n;
  const bool overlap = occ.kind == PatternKind::Overlap;
  const std::size_t pre_len = overlap ? 2 * k + 1 : 2 * k;

  const Letter d = w[s0];
  out << fmt::format("  repeated tile: T{} = h({}) = {}\n", s0, sym(src, d), m.image(d).str());
  const Word preimage = w.factor(s0, pre_len);
  out << fmt::format("  preimage factor W[{}..{}] = {}\n", s0, s0 + pre_len - 1, preimage.str());

  const std::size_t pairs = overlap ? k + 1 : k;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Letter x = w[s0 + i];
    const Letter y = w[s0 + k + i];
    if (x == y) continue;
    const bool closing = overlap && i == k;
    std::string reason;
    if (m.image(x) == m.image(y)) {
      reason = "the two letters share the same image";
    } else if (closing) {
      reason = "their images begin with the same letter (first letters not marked)";
    } else {
      reason = "their images end with the same letter (last letters not marked)";
    }
    out << fmt::format("  preimage is not a {}: W[{}]={} and W[{}]={} differ; {}\n",
                       to_string(occ.kind), s0 + i, sym(src, x), s0 + k + i, sym(src, y), reason);
    return;
  }
  const Word y = w.factor(s0 + 1, k - 1);
  if (overlap) {
    out << fmt::format("  preimage is the overlap dYdYd with d={} Y={}\n", sym(src, d), y.str());
  } else {
    out << fmt::format("  preimage is the square zYzY with z={} Y={}\n", sym(src, d), y.str());
  }
}

// Misaligned case: look for a full tile T_q whose shifted copy (by +period or
// -period) lies inside the occurrence. The copy straddles a tile boundary,
// so T_q = V U with V a suffix of one tile and U a prefix of the next, and
// one of |V|, |U| is at most floor(n/2). That is a border-condition
// violation.
void explain_misaligned(std::ostringstream& out, const Morphism& m, const Counterexample& cex,
                        std::size_t n) {
  const auto& occ = cex.occurrence;
  const Word& w = cex.word;
  const Alphabet& src = m.source();
  const std::size_t eq_begin = occ.start;
  const std::size_t eq_len = equality_length(occ);

  for (std::size_t q = 0; q < w.size(); ++q) {
    const std::size_t lo = q * n;
    const std::size_t hi = lo + n;  // exclusive
    std::optional<std::size_t> copy;
    if (lo >= eq_begin && hi <= eq_begin + eq_len) {
      copy = lo + occ.period;
    } else if (lo >= eq_begin + occ.period && hi <= eq_begin + occ.period + eq_len) {
      copy = lo - occ.period;
    }
    if (!copy) continue;

    const std::size_t left_tile = *copy / n;
    const std::size_t alpha = n - *copy % n;  // letters of the copy in left_tile
    const Letter x = w[q];
    const Letter a = w[left_tile];
    const Letter b = w[left_tile + 1];
    out << fmt::format(
        "  full tile T{} = h({}) = {} reappears across tiles T{}|T{} = h({})|h({}): "
        "{} = {} + {}\n",
        q, sym(src, x), m.image(x).str(), left_tile, left_tile + 1, sym(src, a), sym(src, b),
        m.image(x).str(), m.image(a).suffix(alpha).str(), m.image(b).prefix(n - alpha).str());
    if (alpha <= n / 2) {
      out << fmt::format(
          "  border violation: a={} b={} V={} S={} U={}: U is a prefix of h({})\n", sym(src, a),
          sym(src, x), m.image(x).prefix(alpha).str(), m.image(a).prefix(n - alpha).str(),
          m.image(x).suffix(n - alpha).str(), sym(src, b));
    } else {
      out << fmt::format(
          "  border violation: a={} b={} V={} S={} U={}: S is a suffix of h({})\n", sym(src, x),
          sym(src, b), m.image(x).suffix(n - alpha).str(), m.image(x).prefix(alpha).str(),
          m.image(b).suffix(alpha).str(), sym(src, a));
    }
    return;
  }

  out << "  the occurrence covers no full tile in either copy\n";
  if (occ.kind != PatternKind::Cube) {
    const auto triples = check_image_triples(m, occ.kind);
    for (const auto& wit : triples.witnesses) {
      out << "  " << triples.condition << " violation: " << describe(m, wit) << "\n";
    }
  }
  const auto border = check_border_condition(m);
  for (const auto& wit : border.witnesses) {
    out << "  border violation: " << describe(m, wit) << "\n";
  }
}

}  // namespace

std::string explain(const Morphism& m, const Counterexample& cex) {
  if (cex.direction != Direction::Forward) {
    throw ArgumentError("explain applies to forward counterexamples");
  }
  const auto& occ = cex.occurrence;
  std::ostringstream out;
  out << fmt::format("forward counterexample: W={} h(W)={}\n", cex.word.str(), cex.image.str());
  out << fmt::format("  {} at start {} period {}: {}\n", to_string(occ.kind), occ.start,
                     occ.period, cex.image.factor(occ.start, occ.span()).str());

  if (occ.kind == PatternKind::Overlap) {
    out << fmt::format("  positions j0={} j1={} j2={}\n", occ.start, occ.start + occ.period,
                       occ.start + 2 * occ.period);
  } else if (occ.kind == PatternKind::Square) {
    out << fmt::format("  positions c: j0={} j1={}  d: i0={} i1={}\n", occ.start,
                       occ.start + occ.period, occ.start + occ.period - 1,
                       occ.start + 2 * occ.period - 1);
  }

  const auto n = uniformity(m);
  if (!n) {
    out << "  morphism is not uniform; tile analysis unavailable\n";
    return out.str();
  }

  const std::size_t first = occ.start / *n;
  const std::size_t last = (occ.end() - 1) / *n;
  out << fmt::format("  n={}, tiles T{}..T{}:", *n, first, last);
  for (std::size_t t = first; t <= last; ++t) {
    out << fmt::format(" {}", cex.word.str()[t]);
  }
  out << "\n";

  if (occ.kind == PatternKind::Overlap) {
    const auto diag = classify_alignment(occ, *n);
    out << fmt::format("  residues r0={} r1={} r2={}; tile span {}; case {}\n", diag.residues.r0,
                       diag.residues.r1, diag.residues.r2, diag.tile_span, to_string(diag.label));
  } else {
    out << fmt::format("  residues r0={} r1={}\n", occ.start % *n, (occ.start + occ.period) % *n);
  }

  if (occ.period % *n == 0) {
    out << "  aligned: period is a multiple of n\n";
    explain_aligned(out, m, cex, *n);
  } else {
    out << "  misaligned: period is not a multiple of n\n";
    explain_misaligned(out, m, cex, *n);
  }
  return out.str();
}

}  // namespace pavoid
