#include "catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "catalog_data.hpp"
#include "error.hpp"
#include "parser.hpp"

namespace sugeom {

namespace {

const char* embedded(const std::string& name) {
  for (std::size_t i = 0; i < kCatalogFileCount; ++i)
    if (name == kCatalogFiles[i].name) return kCatalogFiles[i].text;
  return nullptr;
}

std::string value_text(const nlohmann::json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_string()) return v.get<std::string>();
  fail(ErrorKind::Parse, "catalog: unsupported expectation value " + v.dump());
}

std::vector<CatalogEntry> load_manifest() {
  const char* text = embedded("manifest.json");
  if (!text) fail(ErrorKind::Precondition, "catalog: manifest.json is not embedded");
  auto doc = nlohmann::json::parse(text);
  std::vector<CatalogEntry> out;
  for (const auto& e : doc.at("entries")) {
    CatalogEntry c;
    c.name = e.at("name").get<std::string>();
    c.location = e.at("location").get<std::string>();
    c.file = e.at("file").get<std::string>();
    c.note = e.value("note", "");
    const char* payload = embedded(c.file);
    if (!payload) fail(ErrorKind::Precondition, "catalog: missing file " + c.file);
    c.payload = payload;
    for (const auto& [key, v] : e.at("expect").items()) {
      Expectation x;
      x.check = key;
      if (v.is_object()) {
        x.value = value_text(v.at("value"));
        x.paper_states = value_text(v.at("paper_states"));
      } else {
        x.value = value_text(v);
      }
      c.expected.push_back(std::move(x));
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_manifest() {
  static const std::vector<CatalogEntry> entries = load_manifest();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog_manifest())
    if (e.name == name) return &e;
  return nullptr;
}

bool fact_matches(const Fact& fact, const std::string& expected) {
  try {
    if (fact.form) return parse_form(expected, fact.form->dimension()) == *fact.form;
    if (fact.scalar) return parse_scalar(expected) == *fact.scalar;
  } catch (const Error&) {
    return false;
  }
  return fact.text == expected;
}

EntryResult run_entry(const CatalogEntry& entry) {
  EntryResult r;
  r.name = entry.name;
  r.location = entry.location;
  try {
    auto file = parse_structure_file(entry.payload);
    r.report = full_report(file);
    r.pass = true;
    for (const auto& x : entry.expected) {
      ExpectationResult c;
      c.expectation = x;
      auto it = r.report.facts.find(x.check);
      if (it == r.report.facts.end()) {
        c.actual = "(missing)";
      } else {
        c.actual = it->second.text;
        c.pass = fact_matches(it->second, x.value);
      }
      r.pass = r.pass && c.pass;
      r.checks.push_back(std::move(c));
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
  }
  return r;
}

std::string EntryResult::str() const {
  std::ostringstream os;
  os << "== " << name << " (" << location << ")\n";
  if (!error.empty()) {
    os << "error: " << error << "\n";
    return os.str();
  }
  os << report.text;
  os << "expectations:\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.expectation.check << " = " << c.expectation.value;
    if (!c.pass) os << "   (got " << c.actual << ")";
    if (c.expectation.paper_states) os << "   [stated: " << *c.expectation.paper_states << "]";
    os << "\n";
  }
  size_t ok = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  os << "result: " << (pass ? "PASS" : "FAIL") << " (" << ok << "/" << checks.size() << " expectations)\n";
  return os.str();
}

RunAllResult run_all(int jobs) {
  const auto& entries = catalog_manifest();
  RunAllResult out;
  out.entries.resize(entries.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < entries.size();) out.entries[i] = run_entry(entries[i]);
  };
  size_t workers = std::clamp<size_t>(jobs < 1 ? 1 : size_t(jobs), 1, entries.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : out.entries) out.pass = out.pass && e.pass;
  return out;
}

std::string RunAllResult::summary() const {
  size_t width = 5;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  std::ostringstream os;
  os << std::string("entry") + std::string(width - 5, ' ') << "  checks   status  location\n";
  size_t passed = 0, stated = 0;
  for (const auto& e : entries) {
    size_t ok = 0, flagged = 0;
    for (const auto& c : e.checks) {
      ok += c.pass;
      flagged += c.expectation.paper_states.has_value();
    }
    stated += flagged;
    passed += e.pass;
    std::string counts = std::to_string(ok) + "/" + std::to_string(e.checks.size());
    os << e.name << std::string(width - e.name.size(), ' ') << "  " << counts
       << std::string(counts.size() < 7 ? 7 - counts.size() : 0, ' ') << "  " << (e.pass ? "PASS" : "FAIL") << "    "
       << e.location << (e.error.empty() ? "" : "  [error: " + e.error + "]") << "\n";
  }
  os << passed << "/" << entries.size() << " entries pass; " << stated
     << " expectations record a verified value that differs from the stated one\n";
  return os.str();
}

}  // namespace sugeom
