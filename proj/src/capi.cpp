#include "tfym/tfym.h"

#include <exception>
#include <new>
#include <string>

#include "tfym/commands.hpp"

struct tfym_instance {
  tfym::InstanceConfig cfg;
};

struct tfym_report {
  tfym::CommandReport rep;
  std::string json, csv;
};

namespace {

thread_local std::string last_error;

template <class Fn>
tfym_status guarded(Fn fn) {
  last_error.clear();
  try {
    fn();
    return TFYM_OK;
  } catch (const tfym::ConfigError& e) {
    last_error = e.what();
    return TFYM_ERR_CONFIG;
  } catch (const tfym::StructuralError& e) {
    last_error = e.what();
    return TFYM_ERR_STRUCTURAL;
  } catch (const tfym::PreconditionError& e) {
    last_error = e.what();
    return TFYM_ERR_PRECONDITION;
  } catch (const tfym::CompositionError& e) {
    last_error = e.what();
    return TFYM_ERR_COMPOSITION;
  } catch (const tfym::ConstructionError& e) {
    last_error = e.what();
    return TFYM_ERR_CONSTRUCTION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TFYM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TFYM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TFYM_ERR_INTERNAL;
  }
}

tfym_status invalid(const char* what) {
  last_error = what;
  return TFYM_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* tfym_version(void) { return "1.0.0"; }

const char* tfym_last_error(void) { return last_error.c_str(); }

tfym_status tfym_instance_load(const char* path, tfym_instance** out) {
  if (!path || !out) return invalid("null argument");
  *out = nullptr;
  std::string text;
  try {
    text = tfym::read_text_file(path);
  } catch (const std::exception& e) {
    last_error = e.what();
    return TFYM_ERR_IO;
  }
  return guarded([&] { *out = new tfym_instance{tfym::parse_config(text)}; });
}

tfym_status tfym_instance_parse(const char* json_text, tfym_instance** out) {
  if (!json_text || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new tfym_instance{tfym::parse_config(json_text)}; });
}

void tfym_instance_free(tfym_instance* inst) { delete inst; }

const char* tfym_instance_name(const tfym_instance* inst) { return inst ? inst->cfg.name.c_str() : ""; }

void tfym_options_init(tfym_options* opt) {
  if (!opt) return;
  opt->seeds = -1;
  opt->degree_cap = -1;
  opt->dim = -1;
  opt->float_sweep = 0;
  opt->fake_flat = 0;
  opt->threads = -1;
  opt->connection_text = nullptr;
}

tfym_status tfym_run(const tfym_instance* inst, const char* command, const tfym_options* opt, tfym_report** out) {
  if (!inst || !command || !out) return invalid("null argument");
  *out = nullptr;
  tfym::RunOptions ro;
  if (opt) {
    if (opt->seeds >= 0) ro.seeds = opt->seeds;
    if (opt->degree_cap >= 0) ro.degree_cap = opt->degree_cap;
    if (opt->dim >= 0) ro.dim = opt->dim;
    ro.float_sweep = opt->float_sweep != 0;
    ro.fake_flat = opt->fake_flat != 0;
    if (opt->threads >= 0) ro.threads = opt->threads;
    if (opt->connection_text) ro.connection_text = opt->connection_text;
  }
  return guarded([&] { *out = new tfym_report{tfym::run_command(command, inst->cfg, ro), {}, {}}; });
}

int tfym_report_passed(const tfym_report* rep) { return rep && rep->rep.passed() ? 1 : 0; }

const char* tfym_report_json(tfym_report* rep, int with_timing) {
  if (!rep) return "";
  rep->json = rep->rep.to_json(with_timing != 0);
  return rep->json.c_str();
}

const char* tfym_report_csv(tfym_report* rep) {
  if (!rep) return "";
  rep->csv = rep->rep.to_csv();
  return rep->csv.c_str();
}

const char* tfym_report_forms(const tfym_report* rep) { return rep ? rep->rep.forms.c_str() : ""; }

void tfym_report_free(tfym_report* rep) { delete rep; }

}  // extern "C"
