#include "pavoid/pavoid.h"

#include "pavoid/certify.hpp"
#include "pavoid/error.hpp"
#include "pavoid/morphism_file.hpp"
#include "pavoid/morphisms.hpp"
#include "pavoid/unstackable.hpp"
#include "pavoid/words.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <variant>
#include <vector>

struct pav_morphism {
  pavoid::Morphism m;
  std::string source;
  std::string target;
  std::vector<std::string> images;
};

namespace {

// Witness with its strings materialised so the C view can point into it.
struct StoredWitness {
  pav_witness view{};
  std::string word, image, v, s, u, text;
};

struct StoredReport {
  std::string condition;
  bool holds = true;
  std::size_t examined = 0;
  std::vector<StoredWitness> witnesses;
};

}  // namespace

struct pav_verdict {
  bool pass = false;
  std::vector<StoredReport> reports;
  std::vector<std::string> warnings;
};

struct pav_certificate {
  pavoid::CertifyResult result;
  std::string word;
  std::string image;
};

namespace {

thread_local std::string g_last_error;

pav_status fail(pav_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class F>
pav_status guarded(F&& f) noexcept {
  try {
    f();
    return PAV_OK;
  } catch (const pavoid::ParseError& e) {
    return fail(PAV_E_PARSE, e.what());
  } catch (const pavoid::PreconditionError& e) {
    return fail(PAV_E_PRECONDITION, e.what());
  } catch (const pavoid::ArgumentError& e) {
    return fail(PAV_E_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PAV_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PAV_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PAV_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pavoid::PatternKind to_kind(pav_pattern p) {
  switch (p) {
    case PAV_SQUARE:
      return pavoid::PatternKind::Square;
    case PAV_OVERLAP:
      return pavoid::PatternKind::Overlap;
    case PAV_CUBE:
      return pavoid::PatternKind::Cube;
  }
  throw pavoid::ArgumentError("unknown pattern kind");
}

pav_pattern from_kind(pavoid::PatternKind k) {
  switch (k) {
    case pavoid::PatternKind::Square:
      return PAV_SQUARE;
    case pavoid::PatternKind::Overlap:
      return PAV_OVERLAP;
    case pavoid::PatternKind::Cube:
      return PAV_CUBE;
  }
  return PAV_SQUARE;
}

pav_occurrence from_occurrence(const pavoid::Occurrence& o) {
  return pav_occurrence{from_kind(o.kind), o.start, o.period};
}

void require(const void* p, const char* what) {
  if (!p) throw pavoid::ArgumentError(std::string(what) + " must not be null");
}

pav_morphism* wrap(pavoid::Morphism m) {
  auto* h = new pav_morphism{std::move(m), {}, {}, {}};
  h->source = std::string(h->m.source().letters());
  h->target = std::string(h->m.target().letters());
  for (const auto& img : h->m.images()) h->images.push_back(img.str());
  return h;
}

StoredWitness store(const pavoid::Morphism& m, const pavoid::Witness& w) {
  StoredWitness out;
  out.text = pavoid::describe(m, w);
  const auto& src = m.source();
  if (const auto* iw = std::get_if<pavoid::ImageWitness>(&w)) {
    out.word = iw->word.str();
    out.image = iw->image.str();
    out.view.kind = PAV_WITNESS_IMAGE;
    out.view.occurrence = from_occurrence(iw->occurrence);
  } else if (const auto* bw = std::get_if<pavoid::BorderWitness>(&w)) {
    out.v = bw->v.str();
    out.s = bw->s.str();
    out.u = bw->u.str();
    out.view.kind = PAV_WITNESS_BORDER;
    out.view.a = src.symbol(bw->a);
    out.view.b = src.symbol(bw->b);
    out.view.side = bw->side == pavoid::BorderSide::SSuffix ? 0 : 1;
    out.view.offender = src.symbol(bw->offender);
  } else {
    const auto& ew = std::get<pavoid::EndsWitness>(w);
    out.view.kind = PAV_WITNESS_ENDS;
    out.view.a = src.symbol(ew.a);
    out.view.b = src.symbol(ew.b);
    out.view.side = ew.side == pavoid::EndSide::First ? 0 : 1;
    out.view.shared = m.target().symbol(ew.shared);
  }
  return out;
}

// Pointers are fixed up only once the owning vector stops growing.
void bind_views(StoredWitness& w) {
  w.view.word = w.view.kind == PAV_WITNESS_IMAGE ? w.word.c_str() : nullptr;
  w.view.image = w.view.kind == PAV_WITNESS_IMAGE ? w.image.c_str() : nullptr;
  w.view.v = w.view.kind == PAV_WITNESS_BORDER ? w.v.c_str() : nullptr;
  w.view.s = w.view.kind == PAV_WITNESS_BORDER ? w.s.c_str() : nullptr;
  w.view.u = w.view.kind == PAV_WITNESS_BORDER ? w.u.c_str() : nullptr;
}

const StoredReport* report_at(const pav_verdict* v, size_t report) {
  if (!v || report >= v->reports.size()) return nullptr;
  return &v->reports[report];
}

}  // namespace

extern "C" {

const char* pav_version(void) { return "1.0.0"; }

const char* pav_last_error(void) { return g_last_error.c_str(); }

void pav_string_free(char* s) { std::free(s); }

pav_status pav_find_pattern(const char* alphabet, const char* word, pav_pattern kind, int* found,
                            pav_occurrence* occ) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(found, "found");
    const auto w = pavoid::parse_word(word, pavoid::make_alphabet(alphabet));
    const auto hit = pavoid::find_pattern(w, to_kind(kind));
    *found = hit ? 1 : 0;
    if (hit && occ) *occ = from_occurrence(*hit);
  });
}

pav_status pav_count_factor(const char* alphabet, const char* word, const char* factor,
                            size_t* count) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(factor, "factor");
    require(count, "count");
    const auto a = pavoid::make_alphabet(alphabet);
    *count = pavoid::count_factor(pavoid::parse_word(word, a), pavoid::parse_word(factor, a));
  });
}

pav_status pav_morphism_parse(const char* text, pav_morphism** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(pavoid::parse_morphism(text));
  });
}

pav_status pav_morphism_read_file(const char* path, pav_morphism** out) {
  if (!path || !out) return fail(PAV_E_ARGUMENT, "path and out must not be null");
  std::FILE* f = std::fopen(path, "rb");
  if (!f) return fail(PAV_E_IO, (std::string("cannot open morphism file \"") + path + "\"").c_str());
  std::fclose(f);
  return guarded([&] { *out = wrap(pavoid::read_morphism_file(path)); });
}

pav_status pav_morphism_from_catalog(const char* name, pav_morphism** out) {
  if (!name || !out) return fail(PAV_E_ARGUMENT, "name and out must not be null");
  const auto& names = pavoid::catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    return fail(PAV_E_NOT_FOUND, (std::string("unknown catalog morphism \"") + name + "\"").c_str());
  }
  return guarded([&] { *out = wrap(pavoid::catalog(name)); });
}

void pav_morphism_free(pav_morphism* m) { delete m; }

size_t pav_catalog_size(void) { return pavoid::catalog_names().size(); }

const char* pav_catalog_name(size_t index) {
  const auto& names = pavoid::catalog_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

pav_status pav_morphism_format(const pav_morphism* m, char** out) {
  return guarded([&] {
    require(m, "morphism");
    require(out, "out");
    *out = dup_string(pavoid::format_morphism(m->m));
  });
}

const char* pav_morphism_source(const pav_morphism* m) { return m ? m->source.c_str() : nullptr; }

const char* pav_morphism_target(const pav_morphism* m) { return m ? m->target.c_str() : nullptr; }

const char* pav_morphism_image(const pav_morphism* m, size_t i) {
  if (!m || i >= m->images.size()) return nullptr;
  return m->images[i].c_str();
}

pav_status pav_morphism_uniformity(const pav_morphism* m, size_t* n) {
  return guarded([&] {
    require(m, "morphism");
    require(n, "n");
    *n = pavoid::uniformity(m->m).value_or(0);
  });
}

pav_status pav_morphism_apply(const pav_morphism* m, const char* word, char** out) {
  return guarded([&] {
    require(m, "morphism");
    require(word, "word");
    require(out, "out");
    const auto w = pavoid::parse_word(word, m->m.source_ptr());
    *out = dup_string(pavoid::apply(m->m, w).str());
  });
}

pav_status pav_morphism_iterate(const pav_morphism* m, char seed, size_t length, char** out) {
  return guarded([&] {
    require(m, "morphism");
    require(out, "out");
    *out = dup_string(pavoid::iterate_prefix(m->m, seed, length).str());
  });
}

pav_status pav_check_definition(const pav_morphism* m, pav_definition def, pav_verdict** out) {
  return guarded([&] {
    require(m, "morphism");
    require(out, "out");
    const auto verdict = pavoid::check_definition(
        m->m, def == PAV_DEF_SQUARE ? pavoid::Definition::SquareDef4 : pavoid::Definition::OverlapDef1);
    auto v = std::make_unique<pav_verdict>();
    v->pass = verdict.pass();
    v->warnings = verdict.warnings;
    for (const auto& r : verdict.reports) {
      StoredReport sr{r.condition, r.holds(), r.examined, {}};
      sr.witnesses.reserve(r.witnesses.size());
      for (const auto& w : r.witnesses) sr.witnesses.push_back(store(m->m, w));
      for (auto& w : sr.witnesses) bind_views(w);
      v->reports.push_back(std::move(sr));
    }
    *out = v.release();
  });
}

void pav_verdict_free(pav_verdict* v) { delete v; }

int pav_verdict_pass(const pav_verdict* v) { return v && v->pass ? 1 : 0; }

size_t pav_verdict_report_count(const pav_verdict* v) { return v ? v->reports.size() : 0; }

const char* pav_verdict_report_condition(const pav_verdict* v, size_t report) {
  const auto* r = report_at(v, report);
  return r ? r->condition.c_str() : nullptr;
}

int pav_verdict_report_holds(const pav_verdict* v, size_t report) {
  const auto* r = report_at(v, report);
  return r && r->holds ? 1 : 0;
}

size_t pav_verdict_report_examined(const pav_verdict* v, size_t report) {
  const auto* r = report_at(v, report);
  return r ? r->examined : 0;
}

size_t pav_verdict_witness_count(const pav_verdict* v, size_t report) {
  const auto* r = report_at(v, report);
  return r ? r->witnesses.size() : 0;
}

pav_status pav_verdict_witness(const pav_verdict* v, size_t report, size_t index,
                               pav_witness* out) {
  const auto* r = report_at(v, report);
  if (!r || index >= r->witnesses.size() || !out) {
    return fail(PAV_E_ARGUMENT, "witness index out of range");
  }
  *out = r->witnesses[index].view;
  return PAV_OK;
}

const char* pav_verdict_witness_text(const pav_verdict* v, size_t report, size_t index) {
  const auto* r = report_at(v, report);
  if (!r || index >= r->witnesses.size()) return nullptr;
  return r->witnesses[index].text.c_str();
}

size_t pav_verdict_warning_count(const pav_verdict* v) { return v ? v->warnings.size() : 0; }

const char* pav_verdict_warning(const pav_verdict* v, size_t index) {
  if (!v || index >= v->warnings.size()) return nullptr;
  return v->warnings[index].c_str();
}

pav_status pav_certify(const pav_morphism* m, pav_pattern kind, pav_direction dir, size_t max_len,
                       pav_certificate** out) {
  return guarded([&] {
    require(m, "morphism");
    require(out, "out");
    auto c = std::make_unique<pav_certificate>();
    c->result = dir == PAV_BACKWARD ? pavoid::certify_backward(m->m, to_kind(kind), max_len)
                                    : pavoid::certify_forward(m->m, to_kind(kind), max_len);
    if (c->result.counterexample) {
      c->word = c->result.counterexample->word.str();
      c->image = c->result.counterexample->image.str();
    }
    *out = c.release();
  });
}

void pav_certificate_free(pav_certificate* c) { delete c; }

int pav_certificate_found(const pav_certificate* c) {
  return c && c->result.counterexample ? 1 : 0;
}

pav_status pav_certificate_counterexample(const pav_certificate* c, pav_direction* dir,
                                          const char** word, const char** image,
                                          pav_occurrence* occ) {
  if (!c || !c->result.counterexample) return fail(PAV_E_ARGUMENT, "no counterexample");
  const auto& cex = *c->result.counterexample;
  if (dir) *dir = cex.direction == pavoid::Direction::Forward ? PAV_FORWARD : PAV_BACKWARD;
  if (word) *word = c->word.c_str();
  if (image) *image = c->image.c_str();
  if (occ) *occ = from_occurrence(cex.occurrence);
  return PAV_OK;
}

size_t pav_certificate_max_len(const pav_certificate* c) { return c ? c->result.stats.max_len : 0; }

uint64_t pav_certificate_words_at(const pav_certificate* c, size_t length) {
  if (!c || length == 0 || length >= c->result.stats.words_per_length.size()) return 0;
  return c->result.stats.words_per_length[length];
}

uint64_t pav_certificate_words_checked(const pav_certificate* c) {
  return c ? c->result.stats.words_checked() : 0;
}

pav_status pav_certificate_explain(const pav_morphism* m, const pav_certificate* c, char** out) {
  return guarded([&] {
    require(m, "morphism");
    require(c, "certificate");
    require(out, "out");
    if (!c->result.counterexample) throw pavoid::ArgumentError("no counterexample to explain");
    *out = dup_string(pavoid::explain(m->m, *c->result.counterexample));
  });
}

size_t pav_minimum_backward_length(pav_pattern kind) {
  return pavoid::minimum_backward_length(kind == PAV_SQUARE ? pavoid::PatternKind::Square
                                                            : pavoid::PatternKind::Overlap);
}

}  // extern "C"
