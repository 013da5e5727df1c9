// pavoid command-line interface.
//
// Exit codes: 0 = property holds / no counterexample, 1 = witnessed failure,
// 2 = usage, parse or precondition error.

#include "pavoid/pavoid.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

// Operational failure raised inside a command; reported on stderr.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(pav_status status) {
  if (status != PAV_OK) throw CliError(pav_last_error());
}

struct MorphismDeleter {
  void operator()(pav_morphism* m) const { pav_morphism_free(m); }
};
struct VerdictDeleter {
  void operator()(pav_verdict* v) const { pav_verdict_free(v); }
};
struct CertificateDeleter {
  void operator()(pav_certificate* c) const { pav_certificate_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { pav_string_free(s); }
};

using MorphismPtr = std::unique_ptr<pav_morphism, MorphismDeleter>;
using VerdictPtr = std::unique_ptr<pav_verdict, VerdictDeleter>;
using CertificatePtr = std::unique_ptr<pav_certificate, CertificateDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return std::string(OwnedString(s).get()); }

// FILE may be "-" (stdin), a path, or the name of a built-in morphism.
MorphismPtr load_morphism(const std::string& spec) {
  pav_morphism* m = nullptr;
  if (spec == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    check(pav_morphism_parse(text.c_str(), &m));
    return MorphismPtr(m);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    check(pav_morphism_read_file(spec.c_str(), &m));
    return MorphismPtr(m);
  }
  if (pav_morphism_from_catalog(spec.c_str(), &m) == PAV_OK) return MorphismPtr(m);
  throw CliError("\"" + spec + "\" is neither a readable morphism file nor a catalog name");
}

const char* pattern_name(pav_pattern p) {
  switch (p) {
    case PAV_SQUARE:
      return "square";
    case PAV_OVERLAP:
      return "overlap";
    case PAV_CUBE:
      return "cube";
  }
  return "?";
}

Json occurrence_json(const pav_occurrence& occ) {
  return Json{{"kind", pattern_name(occ.kind)}, {"start", occ.start}, {"period", occ.period}};
}

Json stats_json(std::uint64_t words_checked, const Json& max_len, double elapsed_ms) {
  return Json{{"words_checked", words_checked}, {"max_len", max_len}, {"elapsed_ms", elapsed_ms}};
}

Json report_json(const std::string& command, const std::string& verdict, Json witness,
                 Json stats) {
  return Json{{"command", command}, {"verdict", verdict}, {"witness", std::move(witness)},
              {"stats", std::move(stats)}};
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---- check-word ---------------------------------------------------------

struct CheckWordArgs {
  std::string word;
  pav_pattern pattern = PAV_OVERLAP;
  std::string alphabet;
  bool json = false;
};

int cmd_check_word(const CheckWordArgs& args) {
  Stopwatch clock;
  std::string alphabet = args.alphabet;
  if (alphabet.empty()) {
    std::string letters = args.word;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    alphabet = letters.empty() ? "01" : letters;
  }
  int found = 0;
  pav_occurrence occ{};
  check(pav_find_pattern(alphabet.c_str(), args.word.c_str(), args.pattern, &found, &occ));

  if (args.json) {
    Json witness = nullptr;
    if (found) {
      witness = Json{{"word", args.word}, {"image", nullptr}, {"occurrence", occurrence_json(occ)}};
    }
    std::cout << report_json("check-word", found ? "found" : "none", std::move(witness),
                             stats_json(1, nullptr, clock.elapsed_ms()))
                     .dump(2)
              << "\n";
  } else if (found) {
    const std::size_t span = occ.kind == PAV_SQUARE   ? 2 * occ.period
                             : occ.kind == PAV_CUBE   ? 3 * occ.period
                                                      : 2 * occ.period + 1;
    std::cout << pattern_name(occ.kind) << " at start " << occ.start << " period " << occ.period
              << ": " << args.word.substr(occ.start, span) << "\n";
  } else {
    std::cout << "pattern-free (" << pattern_name(args.pattern) << ")\n";
  }
  return found ? kExitFail : kExitPass;
}

// ---- check-morphism ----------------------------------------------------

struct CheckMorphismArgs {
  std::string file;
  pav_definition def = PAV_DEF_OVERLAP;
  bool json = false;
};

Json witness_json(const pav_witness& w) {
  switch (w.kind) {
    case PAV_WITNESS_IMAGE:
      return Json{{"word", w.word}, {"image", w.image}, {"occurrence", occurrence_json(w.occurrence)}};
    case PAV_WITNESS_BORDER:
      return Json{{"a", std::string(1, w.a)}, {"b", std::string(1, w.b)}, {"V", w.v},
                  {"S", w.s}, {"U", w.u}};
    case PAV_WITNESS_ENDS:
      return Json{{"a", std::string(1, w.a)},
                  {"b", std::string(1, w.b)},
                  {"end", w.side == 0 ? "first" : "last"},
                  {"letter", std::string(1, w.shared)}};
  }
  return nullptr;
}

int cmd_check_morphism(const CheckMorphismArgs& args) {
  Stopwatch clock;
  const auto m = load_morphism(args.file);
  size_t n = 0;
  check(pav_morphism_uniformity(m.get(), &n));
  if (n == 0) throw CliError("definition checkers require a uniform morphism");

  pav_verdict* raw = nullptr;
  check(pav_check_definition(m.get(), args.def, &raw));
  const VerdictPtr verdict(raw);
  const bool pass = pav_verdict_pass(verdict.get()) != 0;
  const size_t reports = pav_verdict_report_count(verdict.get());

  if (args.json) {
    Json witness = nullptr;
    for (size_t r = 0; r < reports && witness.is_null(); ++r) {
      if (pav_verdict_witness_count(verdict.get(), r) == 0) continue;
      pav_witness w{};
      check(pav_verdict_witness(verdict.get(), r, 0, &w));
      witness = witness_json(w);
    }
    const std::uint64_t triples = reports ? pav_verdict_report_examined(verdict.get(), 0) : 0;
    std::cout << report_json("check-morphism", pass ? "pass" : "fail", std::move(witness),
                             stats_json(triples, 3, clock.elapsed_ms()))
                     .dump(2)
              << "\n";
    return pass ? kExitPass : kExitFail;
  }

  std::cout << "definition: " << (args.def == PAV_DEF_SQUARE ? "square" : "overlap")
            << " (unstackable image words)\n";
  std::cout << "uniform: n=" << n << "\n";
  for (size_t i = 0; i < pav_verdict_warning_count(verdict.get()); ++i) {
    std::cout << "warning: " << pav_verdict_warning(verdict.get(), i) << "\n";
  }
  for (size_t r = 0; r < reports; ++r) {
    const size_t count = pav_verdict_witness_count(verdict.get(), r);
    std::cout << pav_verdict_report_condition(verdict.get(), r) << ": "
              << (count == 0 ? "holds" : "FAILS") << " (examined "
              << pav_verdict_report_examined(verdict.get(), r) << ", witnesses " << count << ")\n";
    for (size_t i = 0; i < count; ++i) {
      std::cout << "  " << pav_verdict_witness_text(verdict.get(), r, i) << "\n";
    }
  }
  std::cout << "verdict: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitPass : kExitFail;
}

// ---- certify -----------------------------------------------------------

struct CertifyArgs {
  std::string file;
  pav_pattern pattern = PAV_OVERLAP;
  size_t max_len = 0;
  std::string direction = "both";
  bool json = false;
};

int cmd_certify(const CertifyArgs& args) {
  Stopwatch clock;
  const bool forward = args.direction != "backward";
  const bool backward = args.direction != "forward";
  if (args.max_len < 1) throw CliError("--max-len must be at least 1");
  if (backward && args.max_len < pav_minimum_backward_length(args.pattern)) {
    throw CliError("--max-len must be at least " +
                   std::to_string(pav_minimum_backward_length(args.pattern)) +
                   " for backward certification of " + pattern_name(args.pattern) + "s");
  }
  const auto m = load_morphism(args.file);

  std::uint64_t total = 0;
  Json witness = nullptr;
  bool found = false;
  for (const pav_direction dir : {PAV_FORWARD, PAV_BACKWARD}) {
    if ((dir == PAV_FORWARD && !forward) || (dir == PAV_BACKWARD && !backward) || found) continue;
    const char* dir_name = dir == PAV_FORWARD ? "forward" : "backward";
    pav_certificate* raw = nullptr;
    check(pav_certify(m.get(), args.pattern, dir, args.max_len, &raw));
    const CertificatePtr cert(raw);
    total += pav_certificate_words_checked(cert.get());

    if (!args.json) {
      std::cout << dir_name << ": words checked per length:";
      for (size_t len = 1; len <= args.max_len; ++len) {
        std::cout << " " << len << ":" << pav_certificate_words_at(cert.get(), len);
      }
      std::cout << "\n";
    }
    if (!pav_certificate_found(cert.get())) {
      if (!args.json) std::cout << dir_name << ": no counterexample\n";
      continue;
    }
    found = true;
    const char* word = nullptr;
    const char* image = nullptr;
    pav_occurrence occ{};
    check(pav_certificate_counterexample(cert.get(), nullptr, &word, &image, &occ));
    witness = Json{{"word", word}, {"image", image}, {"occurrence", occurrence_json(occ)}};
    if (!args.json) {
      std::cout << dir_name << ": counterexample W=" << word << " h(W)=" << image << " "
                << pattern_name(occ.kind) << " in " << (dir == PAV_FORWARD ? "h(W)" : "W")
                << " at start " << occ.start << " period " << occ.period << "\n";
      if (dir == PAV_FORWARD) {
        char* text = nullptr;
        check(pav_certificate_explain(m.get(), cert.get(), &text));
        std::cout << take(text);
      }
    }
  }

  if (args.json) {
    std::cout << report_json("certify", found ? "found" : "none", std::move(witness),
                             stats_json(total, args.max_len, clock.elapsed_ms()))
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verdict: " << (found ? "found" : "none") << "\n";
  }
  return found ? kExitFail : kExitPass;
}

// ---- apply / iterate / catalog ----------------------------------------

int cmd_apply(const std::string& file, const std::string& word) {
  const auto m = load_morphism(file);
  char* out = nullptr;
  check(pav_morphism_apply(m.get(), word.c_str(), &out));
  std::cout << take(out) << "\n";
  return kExitPass;
}

int cmd_iterate(const std::string& file, const std::string& seed, size_t length) {
  if (seed.size() != 1) throw CliError("--seed must be a single letter");
  const auto m = load_morphism(file);
  char* out = nullptr;
  check(pav_morphism_iterate(m.get(), seed.front(), length, &out));
  std::cout << take(out) << "\n";
  return kExitPass;
}

int cmd_catalog_list() {
  for (size_t i = 0; i < pav_catalog_size(); ++i) std::cout << pav_catalog_name(i) << "\n";
  return kExitPass;
}

int cmd_catalog_show(const std::string& name) {
  pav_morphism* raw = nullptr;
  check(pav_morphism_from_catalog(name.c_str(), &raw));
  const MorphismPtr m(raw);
  char* out = nullptr;
  check(pav_morphism_format(m.get(), &out));
  std::cout << "# " << name << "\n" << take(out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in words and uniform morphisms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pav_version()));

  const std::map<std::string, pav_pattern> all_patterns{
      {"overlap", PAV_OVERLAP}, {"square", PAV_SQUARE}, {"cube", PAV_CUBE}};
  const std::map<std::string, pav_pattern> morphism_patterns{{"overlap", PAV_OVERLAP},
                                                             {"square", PAV_SQUARE}};
  const std::map<std::string, pav_definition> definitions{{"overlap", PAV_DEF_OVERLAP},
                                                          {"square", PAV_DEF_SQUARE}};

  CheckWordArgs cw;
  auto* check_word = app.add_subcommand("check-word", "Search a word for a square, overlap or cube");
  check_word->add_option("word", cw.word, "Word to scan")->required();
  check_word->add_option("--pattern", cw.pattern, "overlap | square | cube (default overlap)")
      ->transform(CLI::CheckedTransformer(all_patterns));
  check_word->add_option("--alphabet", cw.alphabet,
                         "Alphabet letters (default: the distinct letters of the word)");
  check_word->add_flag("--json", cw.json, "Machine-readable report");

  CheckMorphismArgs cm;
  auto* check_morphism = app.add_subcommand(
      "check-morphism",
      "Check the unstackable-image-words conditions. Borders V range over "
      "1 <= |V| <= floor(n/2); V empty is excluded. Whenever V is a suffix of "
      "h(a) = SV and a prefix of h(b) = VU, S must end no image and U must begin "
      "no image.");
  check_morphism->add_option("file", cm.file, "Morphism file, '-' for stdin, or catalog name")
      ->required();
  check_morphism->add_option("--def", cm.def, "overlap | square (default overlap)")
      ->transform(CLI::CheckedTransformer(definitions));
  check_morphism->add_flag("--json", cm.json, "Machine-readable report");

  CertifyArgs ce;
  auto* certify = app.add_subcommand("certify", "Bounded exhaustive search for counterexamples");
  certify->add_option("file", ce.file, "Morphism file, '-' for stdin, or catalog name")->required();
  certify->add_option("--pattern", ce.pattern, "overlap | square (default overlap)")
      ->transform(CLI::CheckedTransformer(morphism_patterns));
  certify->add_option("--max-len", ce.max_len, "Longest source word to examine")->required();
  certify->add_option("--direction", ce.direction, "forward | backward | both (default both)")
      ->check(CLI::IsMember({"forward", "backward", "both"}));
  certify->add_flag("--json", ce.json, "Machine-readable report");

  std::string apply_file, apply_word;
  auto* apply = app.add_subcommand("apply", "Print the image of a word");
  apply->add_option("file", apply_file, "Morphism file, '-' for stdin, or catalog name")->required();
  apply->add_option("word", apply_word, "Source word")->required();

  std::string iterate_file, iterate_seed;
  size_t iterate_length = 0;
  auto* iterate = app.add_subcommand("iterate", "Print a prefix of the fixed point");
  iterate->add_option("file", iterate_file, "Morphism file, '-' for stdin, or catalog name")
      ->required();
  iterate->add_option("--seed", iterate_seed, "Starting letter")->required();
  iterate->add_option("--length", iterate_length, "Prefix length")->required();

  std::string show_name;
  auto* catalog = app.add_subcommand("catalog", "Built-in morphisms");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List built-in morphism names");
  auto* catalog_show = catalog->add_subcommand("show", "Print a built-in morphism as a file");
  catalog_show->add_option("name", show_name, "Catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check_word) return cmd_check_word(cw);
    if (*check_morphism) return cmd_check_morphism(cm);
    if (*certify) return cmd_certify(ce);
    if (*apply) return cmd_apply(apply_file, apply_word);
    if (*iterate) return cmd_iterate(iterate_file, iterate_seed, iterate_length);
    if (*catalog_list) return cmd_catalog_list();
    if (*catalog_show) return cmd_catalog_show(show_name);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
