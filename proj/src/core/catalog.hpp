#pragma once

// The built-in catalog: structure files with expected facts, stored as data.

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace sugeom {

struct Expectation {
  std::string check;  // fact key, e.g. "holonomy_dim"
  std::string value;  // verified value, rendered as text
  std::optional<std::string> paper_states;
};

struct CatalogEntry {
  std::string name;
  std::string location;
  std::string file;
  std::string payload;  // structure file text
  std::string note;
  std::vector<Expectation> expected;
};

struct ExpectationResult {
  Expectation expectation;
  bool pass = false;
  std::string actual;  // "(missing)" when no fact was produced
};

struct EntryResult {
  std::string name;
  std::string location;
  bool pass = false;
  std::string error;  // exception text when the entry could not be evaluated
  CommandReport report;
  std::vector<ExpectationResult> checks;
  std::string str() const;  // report followed by the expectation table
};

/// Entries sorted by name.
const std::vector<CatalogEntry>& catalog_manifest();
const CatalogEntry* find_entry(const std::string& name);

/// Compares a fact against an expected value: forms and scalars exactly,
/// everything else as text.
bool fact_matches(const Fact& fact, const std::string& expected);

EntryResult run_entry(const CatalogEntry& entry);

struct RunAllResult {
  std::vector<EntryResult> entries;  // sorted by name
  bool pass = true;
  std::string summary() const;
};

/// jobs <= 1 runs sequentially; the result does not depend on jobs.
RunAllResult run_all(int jobs = 1);

}  // namespace sugeom
