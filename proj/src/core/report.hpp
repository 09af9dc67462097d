#pragma once

// Text reports for structure files.  Every report also records named facts
// (typed values) so that catalog expectations can be checked against them.

#include <map>
#include <optional>
#include <string>

#include "connection.hpp"
#include "evolution.hpp"

namespace sugeom {

struct Fact {
  std::string text;
  std::optional<Form> form;
  std::optional<Scalar> scalar;
};

using Facts = std::map<std::string, Fact>;

struct CommandReport {
  bool pass = true;
  std::string text;
  Facts facts;
};

enum class CheckKind { Default, SU2, SU3, SU4, Balanced, Hypo };

enum ShowMask : unsigned {
  ShowTorsion = 1,
  ShowConnection = 2,
  ShowCurvature = 4,
  ShowNabla = 8,
  ShowAll = 15,
};

/// Forms eta, omega1..3 (5-dimensional algebra).
std::optional<SU2Structure> su2_of(const StructureFile& f);
/// F and J, with Psi_plus / Psi_minus when present.
std::optional<SUnStructure> sun_of(const StructureFile& f);
std::optional<ParamFamily> family_of(const StructureFile& f);

CommandReport validate_file(const StructureFile& f);
CommandReport cohomology_file(const StructureFile& f, int max_degree);
CommandReport check_file(const StructureFile& f, CheckKind kind);
CommandReport evolve_file(const StructureFile& f);

struct SuspendOutput {
  CommandReport report;
  std::string file;  // structure file of the six-dimensional structure
};
SuspendOutput suspend_file(const StructureFile& f);

CommandReport bismut_file(const StructureFile& f, unsigned show = ShowTorsion | ShowConnection | ShowCurvature);
CommandReport holonomy_file(const StructureFile& f, int max_order);

/// Every section that applies to the file; used for catalog entries.
CommandReport full_report(const StructureFile& f, int max_order = 3);

}  // namespace sugeom
