// Command-line front end.  Links only the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sugeom/sugeom.h"

namespace {

constexpr int kInputError = 2;

int fail_input(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kInputError;
}

int finish(sg_status st, sg_report* r, std::ostream& out = std::cout) {
  if (r) {
    out << sg_report_text(r);
    sg_report_free(r);
  }
  switch (st) {
    case SG_OK:
      return 0;
    case SG_CHECK_FAILED:
      return 1;
    default:
      return fail_input(std::string(sg_status_string(st)) + ": " + sg_last_error());
  }
}

// Loads FILE and runs one command on it.
template <class F>
int with_file(const std::string& path, F&& run) {
  sg_structure* s = nullptr;
  if (sg_status st = sg_structure_load(path.c_str(), &s); st != SG_OK)
    return fail_input(path + ": " + sg_last_error());
  sg_report* r = nullptr;
  sg_status st = run(s, &r);
  sg_structure_free(s);
  return finish(st, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with SU(2)- and SU(n)-structures on Lie algebras", "sugeom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sg_version());

  std::string file;
  int code = 0;

  auto* validate = app.add_subcommand("validate", "check d^2 = 0 and the structure identities");
  validate->add_option("FILE", file, "structure file (.alg)")->required();
  validate->callback([&] { code = with_file(file, [](auto* s, auto** r) { return sg_validate(s, r); }); });

  int max_degree = -1;
  auto* cohomology = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  cohomology->add_option("FILE", file, "structure file (.alg)")->required();
  cohomology->add_option("--max-degree", max_degree, "highest degree (default: dimension)")
      ->check(CLI::NonNegativeNumber);
  cohomology->callback([&] {
    code = with_file(file, [&](auto* s, auto** r) {
      return sg_cohomology(s, max_degree < 0 ? sg_structure_dimension(s) : max_degree, r);
    });
  });

  sg_check_kind kind = SG_CHECK_DEFAULT;
  auto* check = app.add_subcommand("check", "check an SU(2) or SU(n) structure");
  check->add_option("FILE", file, "structure file (.alg)")->required();
  auto* kinds = check->add_option_group("kind")->require_option(0, 1);
  kinds->add_flag_callback("--su2", [&] { kind = SG_CHECK_SU2; }, "SU(2)-structure identities");
  kinds->add_flag_callback("--su3", [&] { kind = SG_CHECK_SU3; }, "SU(3)-structure identities");
  kinds->add_flag_callback("--su4", [&] { kind = SG_CHECK_SU4; }, "SU(4)-structure identities");
  kinds->add_flag_callback("--balanced", [&] { kind = SG_CHECK_BALANCED; }, "balanced condition");
  kinds->add_flag_callback("--hypo", [&] { kind = SG_CHECK_HYPO; }, "hypo condition");
  check->callback([&] { code = with_file(file, [&](auto* s, auto** r) { return sg_check(s, kind, r); }); });

  auto* evolve = app.add_subcommand("evolve-verify", "verify the balanced evolution equations of a family");
  evolve->add_option("FILE", file, "structure file (.alg) with a [family] section")->required();
  evolve->callback([&] { code = with_file(file, [](auto* s, auto** r) { return sg_evolve_verify(s, r); }); });

  std::string out_path;
  auto* suspend = app.add_subcommand("suspend", "six-dimensional structure of a balanced family");
  suspend->add_option("FILE", file, "structure file (.alg) with a [family] section")->required();
  suspend->add_option("-o,--output", out_path, "write the suspended structure file here");
  suspend->callback([&] {
    code = with_file(file, [&](auto* s, sg_report** r) {
      sg_status st = sg_suspend(s, r);
      if (*r && !out_path.empty()) {
        std::ofstream os(out_path);
        os << sg_report_file(*r);
        if (!os) {
          std::cerr << "error: cannot write " << out_path << "\n";
          sg_report_free(*r);
          *r = nullptr;
          return SG_INPUT_ERROR;
        }
      }
      return st;
    });
  });

  std::vector<std::string> show;
  auto* bismut = app.add_subcommand("bismut", "Bismut connection, torsion and curvature");
  bismut->add_option("FILE", file, "structure file (.alg)")->required();
  bismut->add_option("--show", show, "connection, torsion, curvature, nabla (repeatable)")
      ->check(CLI::IsMember({"connection", "torsion", "curvature", "nabla"}));
  bismut->callback([&] {
    unsigned mask = show.empty() ? SG_SHOW_TORSION | SG_SHOW_CONNECTION | SG_SHOW_CURVATURE : 0;
    for (const auto& w : show)
      mask |= w == "torsion" ? SG_SHOW_TORSION
              : w == "connection" ? SG_SHOW_CONNECTION
              : w == "curvature" ? SG_SHOW_CURVATURE
                                 : SG_SHOW_NABLA;
    code = with_file(file, [&](auto* s, auto** r) { return sg_bismut(s, mask, r); });
  });

  int max_order = 3;
  auto* holonomy = app.add_subcommand("holonomy", "infinitesimal holonomy algebra of the Bismut connection");
  holonomy->add_option("FILE", file, "structure file (.alg)")->required();
  holonomy->add_option("--max-order", max_order, "highest derivative of the curvature (default 3)")
      ->check(CLI::NonNegativeNumber);
  holonomy->callback([&] { code = with_file(file, [&](auto* s, auto** r) { return sg_holonomy(s, max_order, r); }); });

  std::string name;
  int jobs = 1;
  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list entries");
  list->callback([&] {
    size_t n = sg_catalog_size(), width = 0;
    for (size_t i = 0; i < n; ++i) width = std::max(width, std::string(sg_catalog_name(i)).size());
    for (size_t i = 0; i < n; ++i) {
      std::string nm = sg_catalog_name(i);
      std::cout << nm << std::string(width - nm.size() + 2, ' ') << sg_catalog_location(i) << "\n";
    }
  });
  auto* run = catalog->add_subcommand("run", "run one entry against its expectations");
  run->add_option("NAME", name, "entry name")->required();
  run->callback([&] {
    sg_report* r = nullptr;
    sg_status st = sg_catalog_run(name.c_str(), &r);
    code = finish(st, r);
  });
  auto* run_all = catalog->add_subcommand("run-all", "run every entry");
  run_all->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  run_all->callback([&] {
    sg_report* r = nullptr;
    sg_status st = sg_catalog_run_all(jobs, &r);
    code = finish(st, r);
  });

  auto* report = app.add_subcommand("report", "full report of a catalog entry");
  report->add_option("NAME", name, "entry name")->required();
  report->callback([&] {
    sg_report* r = nullptr;
    sg_status st = sg_catalog_report(name.c_str(), &r);
    code = finish(st, r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return kInputError;
  }
  return code;
}
