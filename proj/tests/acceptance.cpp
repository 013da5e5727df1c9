// Acceptance suite: one [PASS]/[FAIL] line per criterion. Exit status is
// non-zero when any selected criterion fails.
//
//   pavoid_acceptance            run all criteria
//   pavoid_acceptance 4 7        run only criteria 4 and 7

#include "pavoid/certify.hpp"
#include "pavoid/morphism_file.hpp"
#include "pavoid/morphisms.hpp"
#include "pavoid/unstackable.hpp"
#include "pavoid/words.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "run_cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace pavoid;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + std::move(what));
    }
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

std::string strip(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::vector<std::string> image_strings(const Morphism& m) {
  std::vector<std::string> out;
  for (const auto& img : m.images()) out.push_back(img.str());
  return out;
}

// Overlap occurrences seen in images while running criteria 4 and 5, as
// (occurrence, n) pairs. Checked by criterion 7.
struct SeenOverlap {
  Occurrence occ;
  std::size_t n;
};
std::vector<SeenOverlap>& seen_overlaps() {
  static std::vector<SeenOverlap> seen;
  return seen;
}

void record_overlaps(const Morphism& m, const ConditionReport& r) {
  const auto n = uniformity(m);
  if (!n) return;
  for (const auto& w : r.witnesses) {
    if (const auto* iw = std::get_if<ImageWitness>(&w)) {
      if (iw->occurrence.kind == PatternKind::Overlap) seen_overlaps().push_back({iw->occurrence, *n});
    }
  }
}

Outcome ac1_golden_prefix() {
  Outcome o;
  const std::string golden = "01101001100101101001011001101001";
  const std::string lib = iterate_prefix(catalog("thue_morse"), '0', 32).str();
  o.require(lib == golden, "library prefix " + lib);
  const auto r = clitest::run(clitest::quote(PAVOID_CLI_PATH) +
                              " iterate thue_morse --seed 0 --length 32");
  o.require(r.exit_code == 0 && r.out == golden + "\n", "CLI printed " + r.out);
  return o;
}

Outcome ac2_catalog_fidelity() {
  Outcome o;
  const Morphism leech = catalog("leech");
  const std::vector<std::string> leech_display{"0121021201210", "1202102012021", "2010210120102"};
  o.require(image_strings(leech) == leech_display, "Leech images");

  const std::vector<std::string> f_display{"0123 1230 1 0321 3210", "1230 2301 2 1032 0321",
                                           "2301 3012 3 2103 1032", "3012 0123 0 3210 2103"};
  const std::vector<std::string> g_display{"0123 0122121120 3210", "1230 1300303301 0321",
                                           "2301 2012331022 1032", "3012 3011010013 2103"};
  const Morphism f = catalog("f4");
  const Morphism g = catalog("g4");
  for (std::size_t i = 0; i < 4; ++i) {
    o.require(f.image(static_cast<Letter>(i)).str() == strip(f_display[i]),
              fmt::format("f4 image {}", i));
    o.require(g.image(static_cast<Letter>(i)).str() == strip(g_display[i]),
              fmt::format("g4 image {}", i));
  }
  const auto fn = uniformity(f);
  const auto gn = uniformity(g);
  o.require(fn == std::size_t{17}, fmt::format("f4 is {}-uniform, expected 17", fn.value_or(0)));
  o.require(gn == std::size_t{20}, fmt::format("g4 is {}-uniform, expected 20", gn.value_or(0)));
  o.note(fmt::format("f4 uniform length {}, g4 uniform length {}", fn.value_or(0), gn.value_or(0)));
  return o;
}

Outcome ac3_definition_checkers() {
  Outcome o;
  o.require(check_square_def(catalog("leech")).pass(), "check_square_def(leech)");
  o.require(check_overlap_def(catalog("g4")).pass(), "check_overlap_def(g4)");
  o.require(check_overlap_def(catalog("f4")).pass(), "check_overlap_def(f4)");

  const Morphism mu = catalog("thue_morse");
  const auto v = check_overlap_def(mu);
  o.require(!v.pass(), "check_overlap_def(mu) should fail");
  const auto border = check_border_condition(mu);
  if (border.witnesses.empty()) {
    o.require(false, "no border witness for mu");
  } else {
    const auto& w = std::get<BorderWitness>(border.witnesses.front());
    o.require(w.a == 0 && w.b == 1 && w.v.str() == "1" && w.s.str() == "0" &&
                  w.side == BorderSide::SSuffix && w.offender == 1,
              "mu first border witness");
    o.require(recheck_witness(mu, w), "mu witness replay");
  }

  // From-scratch scan over all borders for each catalog entry.
  for (const auto& name : catalog_names()) {
    const Morphism m = catalog(name);
    const auto scan = oracle::border_scan(image_strings(m));
    const auto lib = check_border_condition(m);
    bool same = scan.size() == lib.witnesses.size();
    for (std::size_t i = 0; same && i < scan.size(); ++i) {
      const auto& got = std::get<BorderWitness>(lib.witnesses[i]);
      const auto& [a, b, vv, s, u, side, c] = scan[i];
      same = got.a == a && got.b == b && got.v.str() == vv && got.s.str() == s &&
             got.u.str() == u && (got.side == BorderSide::SSuffix) == (side == 'S') &&
             got.offender == c;
    }
    o.require(same, "oracle border scan disagrees on " + name);
    if (name == "thue_morse") {
      o.require(!scan.empty() && std::get<0>(scan[0]) == 0 && std::get<1>(scan[0]) == 1 &&
                    std::get<2>(scan[0]) == "1" && std::get<3>(scan[0]) == "0" &&
                    std::get<5>(scan[0]) == 'S' && std::get<6>(scan[0]) == 1,
                "oracle first witness for mu");
    }
    o.note(fmt::format("{}: {} border witnesses", name, scan.size()));
  }
  return o;
}

Outcome ac4_certification() {
  Outcome o;
  for (const auto& name : catalog_names()) {
    const Morphism m = catalog(name);
    const std::size_t max_len = m.source().size() == 2 ? 10 : 6;
    const std::pair<Definition, PatternKind> defs[] = {
        {Definition::OverlapDef1, PatternKind::Overlap},
        {Definition::SquareDef4, PatternKind::Square}};
    for (const auto& [def, kind] : defs) {
      const auto verdict = check_definition(m, def);
      for (const auto& r : verdict.reports) record_overlaps(m, r);
      if (!verdict.pass()) continue;
      for (const Direction dir : {Direction::Forward, Direction::Backward}) {
        const auto result = dir == Direction::Forward ? certify_forward(m, kind, max_len)
                                                      : certify_backward(m, kind, max_len);
        o.require(!result.counterexample,
                  fmt::format("{} {} {} counterexample", name, to_string(kind), to_string(dir)));
        o.note(fmt::format("{} {} {} max_len {}: {} words, none", name, to_string(kind),
                           to_string(dir), max_len, result.stats.words_checked()));
      }
    }
  }
  return o;
}

Outcome ac5_lemma2() {
  Outcome o;
  std::vector<Morphism> ms;
  for (const auto& name : catalog_names()) ms.push_back(catalog(name));
  for (auto& m : testgen::mutated_morphisms(300, 2026)) ms.push_back(std::move(m));

  std::size_t premise = 0;
  for (const auto& m : ms) {
    const auto triples = check_image_triples(m, PatternKind::Overlap);
    record_overlaps(m, triples);
    if (m.source().size() < 2) continue;
    const auto reports = check_lemma_consequences(m);
    for (const auto& r : reports) record_overlaps(m, r);
    // Images of short words that contain overlaps feed criterion 7 too.
    if (const auto cex = certify_forward(m, PatternKind::Overlap, 4).counterexample) {
      seen_overlaps().push_back({cex->occurrence, *uniformity(m)});
    }
    if (!triples.holds()) continue;
    ++premise;
    for (const auto& r : reports) {
      o.require(r.holds(), fmt::format("{} fails on {}", r.condition, format_morphism(m)));
    }
  }
  o.require(ms.size() >= 104, "fewer than 100 mutated morphisms");
  o.note(fmt::format("{} morphisms, {} satisfy the triple condition", ms.size(), premise));
  return o;
}

Outcome ac6_hierarchy() {
  Outcome o;
  std::size_t words = 0;
  for (const std::string letters : {"01", "012"}) {
    const auto alpha = make_alphabet(letters);
    for (std::size_t len = 0; len <= 10; ++len) {
      std::vector<Letter> buf(len, 0);
      for (;;) {
        const Word w(alpha, buf);
        ++words;
        const bool sq = find_pattern(w, PatternKind::Square).has_value();
        const bool ov = find_pattern(w, PatternKind::Overlap).has_value();
        const bool cu = find_pattern(w, PatternKind::Cube).has_value();
        if ((!sq && ov) || (!ov && cu)) o.require(false, w.str());
        std::size_t i = len;
        while (i > 0 && buf[i - 1] + 1u == letters.size()) buf[--i] = 0;
        if (i == 0) break;
        ++buf[i - 1];
      }
    }
  }
  o.note(fmt::format("{} words checked", words));
  return o;
}

Outcome ac7_residues() {
  Outcome o;
  const auto& seen = seen_overlaps();
  o.require(!seen.empty(), "no overlap occurrences were recorded");
  std::size_t misaligned = 0;
  for (const auto& [occ, n] : seen) {
    const std::size_t r0 = occ.start % n;
    const std::size_t r1 = (occ.start + occ.period) % n;
    const std::size_t r2 = (occ.start + 2 * occ.period) % n;
    const auto d = classify_alignment(occ, n);
    o.require(d.residues == Residues{r0, r1, r2},
              fmt::format("residues of ({}, {}) n={}", occ.start, occ.period, n));
    o.require(r2 == (2 * r1 + n - r0) % n,
              fmt::format("r2 != 2r1 - r0 for ({}, {}) n={}", occ.start, occ.period, n));
    if (d.label != AlignmentCase::Aligned) ++misaligned;
  }
  o.note(fmt::format("{} overlap occurrences, {} misaligned", seen.size(), misaligned));
  return o;
}

Outcome ac8_enumeration() {
  Outcome o;
  const std::pair<PatternKind, oracle::Kind> kinds[] = {{PatternKind::Square, oracle::Kind::Square},
                                                        {PatternKind::Overlap, oracle::Kind::Overlap},
                                                        {PatternKind::Cube, oracle::Kind::Cube}};
  for (const std::string letters : {"0", "01", "012"}) {
    for (const auto& [kind, ok] : kinds) {
      for (std::size_t max_len = 0; max_len <= 8; ++max_len) {
        const auto got = enumerate_pattern_free(make_alphabet(letters), kind, max_len);
        const auto want = oracle::filter_free(letters, ok, max_len);
        bool same = got.size() == want.size();
        for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i].str() == want[i];
        o.require(same, fmt::format("k={} {} max_len {}", letters.size(), to_string(kind), max_len));
      }
    }
  }

  // Ternary square-free counts per length, recounted over all 3^L words.
  PatternFreeEnumerator e(make_alphabet("012"), PatternKind::Square, 8);
  while (e.next()) {
  }
  std::string counts;
  for (std::size_t len = 1; len <= 8; ++len) {
    std::size_t recount = 0;
    for (const auto& w : oracle::all_words("012", len)) {
      bool free = true;
      for (std::size_t i = 0; free && i < w.size(); ++i) {
        for (std::size_t p = 1; free && i + 2 * p <= w.size(); ++p) {
          free = w.compare(i, p, w, i + p, p) != 0;
        }
      }
      recount += free;
    }
    o.require(e.yielded_per_length()[len] == recount,
              fmt::format("ternary square-free count at length {}", len));
    counts += fmt::format(" {}", recount);
  }
  o.note("ternary square-free counts:" + counts);
  return o;
}

Outcome ac9_cli_contract() {
  Outcome o;
  const std::string cli = clitest::quote(PAVOID_CLI_PATH);
  auto run = [&](const std::string& args) { return clitest::run(cli + " " + args); };
  const auto dir = std::filesystem::temp_directory_path();

  // Round-trip: catalog show -> file -> parse gives the same morphism.
  for (const auto& name : catalog_names()) {
    const auto shown = run("catalog show " + name);
    o.require(shown.exit_code == 0, "catalog show " + name);
    o.require(parse_morphism(shown.out) == catalog(name), "round-trip " + name);
  }
  o.require(clitest::run(cli + " catalog show leech | " + cli + " check-morphism - --def square")
                    .exit_code == 0,
            "catalog show leech | check-morphism - --def square");

  const auto write = [&](const std::string& file, const std::string& text) {
    const auto path = dir / file;
    std::ofstream(path) << text;
    return clitest::quote(path.string());
  };
  const std::string nonuniform = write("pavoid_acc_nonuniform.txt", "alphabet: 01\n0 -> 0\n1 -> 10\n");
  const std::string bad = write("pavoid_acc_bad.txt", "alphabet: 01\n0 -> 00\n1 -> 11\n");

  struct Case {
    std::string args;
    int exit;
    std::string command;
  };
  const std::vector<Case> cases{
      {"check-word alfalfa --pattern overlap --alphabet afl", 1, "check-word"},
      {"check-word 0110 --pattern overlap --alphabet 01", 0, "check-word"},
      {"check-word 01x --pattern overlap --alphabet 01", 2, ""},
      {"check-morphism leech --def square", 0, "check-morphism"},
      {"check-morphism thue_morse --def overlap", 1, "check-morphism"},
      {"check-morphism " + nonuniform + " --def overlap", 2, ""},
      {"certify leech --pattern square --max-len 6 --direction both", 0, "certify"},
      {"certify " + bad + " --pattern square --max-len 2 --direction forward", 1, "certify"},
      {"certify leech --pattern overlap --max-len 0", 2, ""},
  };
  for (const auto& c : cases) {
    const auto human = run(c.args);
    o.require(human.exit_code == c.exit, fmt::format("exit {} for {}", human.exit_code, c.args));
    if (c.command.empty()) continue;
    const auto machine = run(c.args + " --json");
    o.require(machine.exit_code == c.exit, "exit code with --json for " + c.args);
    const auto j = nlohmann::json::parse(machine.out, nullptr, false);
    o.require(!j.is_discarded() && clitest::valid_report(j, c.command), "JSON schema for " + c.args);
    const std::string want = c.exit == 0 ? (c.command == "check-morphism" ? "pass" : "none")
                                         : (c.command == "check-morphism" ? "fail" : "found");
    o.require(!j.is_discarded() && j.value("verdict", "") == want, "verdict for " + c.args);
  }

  const auto mu = nlohmann::json::parse(run("check-morphism thue_morse --def overlap --json").out,
                                        nullptr, false);
  o.require(!mu.is_discarded() && mu["witness"].value("V", "") == "1" &&
                mu["witness"].value("a", "") == "0" && mu["witness"].value("b", "") == "1",
            "thue_morse border witness in JSON");
  o.require(run("apply leech 0").out == "0121021201210\n", "apply leech 0");
  o.require(run("catalog list").out == "thue_morse\nleech\nf4\ng4\n", "catalog list");

  std::filesystem::remove(dir / "pavoid_acc_nonuniform.txt");
  std::filesystem::remove(dir / "pavoid_acc_bad.txt");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Thue-Morse golden prefix", ac1_golden_prefix},
      {2, "catalog fidelity", ac2_catalog_fidelity},
      {3, "definition checkers and border oracle", ac3_definition_checkers},
      {4, "bounded certification of passing catalog morphisms", ac4_certification},
      {5, "triple condition implies its three consequences", ac5_lemma2},
      {6, "pattern hierarchy up to length 10", ac6_hierarchy},
      {7, "residue relation r2 = 2r1 - r0 mod n", ac7_residues},
      {8, "enumeration matches filter-all-words", ac8_enumeration},
      {9, "CLI contract", ac9_cli_contract},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  // Criterion 7 inspects occurrences gathered while 4 and 5 run.
  if (selected.count(7)) {
    selected.insert(4);
    selected.insert(5);
  }

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    fmt::print("[{}] AC{} {} ({:.0f} ms)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, ms);
    for (const auto& n : o.notes) fmt::print("       {}\n", n);
  }
  return all ? 0 : 1;
}
