#include "sugeom/sugeom.h"

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "parser.hpp"
#include "report.hpp"

struct sg_structure {
  sugeom::StructureFile file;
};

struct sg_report {
  sugeom::CommandReport report;
  std::string file;
  std::vector<std::pair<std::string, std::string>> facts;
};

namespace {

thread_local std::string last_error;

sg_status from_kind(sugeom::ErrorKind k) {
  switch (k) {
    case sugeom::ErrorKind::Unsupported:
      return SG_UNSUPPORTED;
    default:
      return SG_INPUT_ERROR;
  }
}

template <class F>
sg_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const sugeom::Error& e) {
    last_error = e.what();
    return from_kind(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SG_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SG_INTERNAL;
  }
}

sg_status bad_argument(const char* what) {
  last_error = what;
  return SG_INPUT_ERROR;
}

sg_status emit(sugeom::CommandReport rep, sg_report** out, std::string file = {}) {
  auto* r = new sg_report{std::move(rep), std::move(file), {}};
  for (const auto& [k, v] : r->report.facts) r->facts.emplace_back(k, v.text);
  *out = r;
  return r->report.pass ? SG_OK : SG_CHECK_FAILED;
}

template <class F>
sg_status command(const sg_structure* s, sg_report** out, F&& f) {
  if (!s || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] { return emit(f(s->file), out); });
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "1.0.0"; }

const char* sg_status_string(sg_status status) {
  switch (status) {
    case SG_OK:
      return "ok";
    case SG_CHECK_FAILED:
      return "check failed";
    case SG_INPUT_ERROR:
      return "input error";
    case SG_UNSUPPORTED:
      return "unsupported";
    case SG_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sg_last_error(void) { return last_error.c_str(); }

sg_status sg_structure_parse(const char* text, sg_structure** out) {
  if (!text || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_structure{sugeom::parse_structure_file(text)};
    return SG_OK;
  });
}

sg_status sg_structure_load(const char* path, sg_structure** out) {
  if (!path || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_structure{sugeom::load_structure_file(path)};
    return SG_OK;
  });
}

void sg_structure_free(sg_structure* s) { delete s; }

int sg_structure_dimension(const sg_structure* s) { return s ? s->file.algebra.dimension() : 0; }

sg_status sg_validate(const sg_structure* s, sg_report** out) {
  return command(s, out, [](const auto& f) { return sugeom::validate_file(f); });
}

sg_status sg_cohomology(const sg_structure* s, int max_degree, sg_report** out) {
  return command(s, out, [&](const auto& f) { return sugeom::cohomology_file(f, max_degree); });
}

sg_status sg_check(const sg_structure* s, sg_check_kind kind, sg_report** out) {
  if (kind < SG_CHECK_DEFAULT || kind > SG_CHECK_HYPO) return bad_argument("unknown check kind");
  return command(s, out, [&](const auto& f) { return sugeom::check_file(f, static_cast<sugeom::CheckKind>(kind)); });
}

sg_status sg_evolve_verify(const sg_structure* s, sg_report** out) {
  return command(s, out, [](const auto& f) { return sugeom::evolve_file(f); });
}

sg_status sg_suspend(const sg_structure* s, sg_report** out) {
  if (!s || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    auto res = sugeom::suspend_file(s->file);
    return emit(std::move(res.report), out, std::move(res.file));
  });
}

sg_status sg_bismut(const sg_structure* s, unsigned show, sg_report** out) {
  if (show == 0 || show > SG_SHOW_ALL) return bad_argument("bad show mask");
  return command(s, out, [&](const auto& f) { return sugeom::bismut_file(f, show); });
}

sg_status sg_holonomy(const sg_structure* s, int max_order, sg_report** out) {
  if (max_order < 0) return bad_argument("max order must be non-negative");
  return command(s, out, [&](const auto& f) { return sugeom::holonomy_file(f, max_order); });
}

const char* sg_report_text(const sg_report* r) { return r ? r->report.text.c_str() : ""; }
const char* sg_report_file(const sg_report* r) { return r ? r->file.c_str() : ""; }
int sg_report_pass(const sg_report* r) { return r && r->report.pass; }
size_t sg_report_fact_count(const sg_report* r) { return r ? r->facts.size() : 0; }

const char* sg_report_fact_key(const sg_report* r, size_t i) {
  return r && i < r->facts.size() ? r->facts[i].first.c_str() : nullptr;
}

const char* sg_report_fact_value(const sg_report* r, size_t i) {
  return r && i < r->facts.size() ? r->facts[i].second.c_str() : nullptr;
}

void sg_report_free(sg_report* r) { delete r; }

size_t sg_catalog_size(void) {
  try {
    return sugeom::catalog_manifest().size();
  } catch (...) {
    return 0;
  }
}

const char* sg_catalog_name(size_t i) {
  return i < sg_catalog_size() ? sugeom::catalog_manifest()[i].name.c_str() : nullptr;
}

const char* sg_catalog_location(size_t i) {
  return i < sg_catalog_size() ? sugeom::catalog_manifest()[i].location.c_str() : nullptr;
}

const char* sg_catalog_payload(size_t i) {
  return i < sg_catalog_size() ? sugeom::catalog_manifest()[i].payload.c_str() : nullptr;
}

sg_status sg_catalog_run(const char* name, sg_report** out) {
  if (!name || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    const auto* entry = sugeom::find_entry(name);
    if (!entry) return bad_argument(("unknown catalog entry: " + std::string(name)).c_str());
    auto res = sugeom::run_entry(*entry);
    sugeom::CommandReport rep = res.report;
    rep.text = res.str();
    rep.pass = res.pass;
    return emit(std::move(rep), out);
  });
}

sg_status sg_catalog_report(const char* name, sg_report** out) {
  if (!name || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    const auto* entry = sugeom::find_entry(name);
    if (!entry) return bad_argument(("unknown catalog entry: " + std::string(name)).c_str());
    return emit(sugeom::full_report(sugeom::parse_structure_file(entry->payload)), out);
  });
}

sg_status sg_catalog_run_all(int jobs, sg_report** out) {
  if (!out) return bad_argument("null argument");
  *out = nullptr;
  if (jobs < 1) return bad_argument("jobs must be at least 1");
  return guarded([&] {
    auto res = sugeom::run_all(jobs);
    sugeom::CommandReport rep;
    rep.text = res.summary();
    rep.pass = res.pass;
    for (const auto& e : res.entries) rep.facts[e.name] = {e.pass ? "pass" : "fail", {}, {}};
    return emit(std::move(rep), out);
  });
}

}  // extern "C"
