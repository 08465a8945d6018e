// Command-line driver. Talks to the library only through tfym.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tfym/tfym.h"

namespace {

struct Args {
  std::string config;
  int seeds = 50;
  int degree_cap = -1;
  int dim = -1;
  int threads = 0;
  bool float_sweep = false;
  bool fake_flat = false;
  bool timing = false;
  std::string out, csv, emit_forms, connection;
};

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

int fail(const char* what) {
  std::cerr << "tfym: " << what << ": " << tfym_last_error() << "\n";
  return 2;
}

int run(const std::string& command, const Args& a) {
  std::string connection_text;
  if (!a.connection.empty()) {
    std::ifstream f(a.connection, std::ios::binary);
    if (!f) {
      std::cerr << "tfym: cannot read connection file " << a.connection << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    connection_text = ss.str();
  }

  tfym_instance* inst = nullptr;
  if (tfym_instance_load(a.config.c_str(), &inst) != TFYM_OK) return fail(a.config.c_str());

  tfym_options opt;
  tfym_options_init(&opt);
  opt.seeds = a.seeds;
  opt.degree_cap = a.degree_cap;
  opt.dim = a.dim;
  opt.float_sweep = a.float_sweep;
  opt.fake_flat = a.fake_flat;
  opt.threads = a.threads;
  if (!connection_text.empty()) opt.connection_text = connection_text.c_str();

  tfym_report* rep = nullptr;
  const tfym_status st = tfym_run(inst, command.c_str(), &opt, &rep);
  tfym_instance_free(inst);
  if (st != TFYM_OK) return fail(command.c_str());

  int code = tfym_report_passed(rep) ? 0 : 1;
  const std::string json = tfym_report_json(rep, a.timing);
  if (a.out.empty()) {
    std::cout << json;
  } else if (!write_file(a.out, json)) {
    std::cerr << "tfym: cannot write " << a.out << "\n";
    code = 2;
  }
  if (!a.csv.empty() && !write_file(a.csv, tfym_report_csv(rep))) {
    std::cerr << "tfym: cannot write " << a.csv << "\n";
    code = 2;
  }
  if (!a.emit_forms.empty() && !write_file(a.emit_forms, tfym_report_forms(rep))) {
    std::cerr << "tfym: cannot write " << a.emit_forms << "\n";
    code = 2;
  }
  tfym_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for differential 2-crossed modules and 3-form gauge fields"};
  app.set_version_flag("--version", std::string(tfym_version()));
  app.require_subcommand(1);

  Args a;
  std::string chosen;
  auto add = [&](const char* name, const char* help, bool gauge) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", a.config, "instance config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", a.out, "write the report here instead of stdout");
    sub->add_flag("--timing", a.timing, "include per-check wall time (reports are then not reproducible)");
    if (gauge) {
      sub->add_option("--seeds", a.seeds, "number of random seeds")->check(CLI::Range(1, 100000));
      sub->add_option("--degree-cap", a.degree_cap, "polynomial degree cap for random forms")->check(CLI::Range(0, 8));
      sub->add_option("--dim", a.dim, "ambient dimension d")->check(CLI::Range(1, 6));
      sub->add_option("--threads", a.threads, "worker threads (0: all cores)")->check(CLI::Range(0, 1024));
    }
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };

  add("verify", "axioms, invariance, induced maps and finite group-surface checks", false);
  CLI::App* bianchi = add("bianchi", "3-Bianchi identities on random connections", true);
  bianchi->add_option("--connection", a.connection, "also check this connection (forms file with A, B, C)")
      ->check(CLI::ExistingFile);
  CLI::App* grad = add("gradcheck", "first variation against the field equations", true);
  grad->add_flag("--float-sweep", a.float_sweep, "central-difference sweep with convergence order");
  grad->add_option("--csv", a.csv, "write the sweep rows as CSV");
  grad->add_flag("--fake-flat", a.fake_flat, "also build fake-flat witnesses and compare both equation systems");
  grad->add_option("--emit-forms", a.emit_forms, "write constructed witnesses in the forms text format");
  CLI::App* act = add("action", "exact action against quadrature", true);
  act->add_option("--connection", a.connection, "also evaluate this connection (forms file with A, B, C)")
      ->check(CLI::ExistingFile);
  add("reduce", "declared reduction arrow against directly coded reduced equations", true);

  CLI11_PARSE(app, argc, argv);
  return run(chosen, a);
}
