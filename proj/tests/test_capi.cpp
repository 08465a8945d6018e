#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "tfym/tfym.h"

#ifndef TFYM_CONFIG_DIR
#define TFYM_CONFIG_DIR "configs"
#endif

namespace {

std::string config(const char* name) { return std::string(TFYM_CONFIG_DIR) + "/" + name + ".json"; }

struct Instance {
  tfym_instance* p = nullptr;
  ~Instance() { tfym_instance_free(p); }
};

struct Report {
  tfym_report* p = nullptr;
  ~Report() { tfym_report_free(p); }
};

tfym_options quick() {
  tfym_options o;
  tfym_options_init(&o);
  o.seeds = 2;
  o.degree_cap = 2;
  return o;
}

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::string(tfym_version()).size() > 0);
  tfym_options o;
  tfym_options_init(&o);
  CHECK(o.seeds < 0);
  CHECK(o.dim < 0);
  CHECK(o.connection_text == nullptr);
}

TEST_CASE("load, run and read the report") {
  Instance inst;
  REQUIRE(tfym_instance_load(config("su2_peiffer").c_str(), &inst.p) == TFYM_OK);
  CHECK(std::string(tfym_instance_name(inst.p)) == "su2_peiffer");
  const tfym_options o = quick();
  Report rep;
  REQUIRE(tfym_run(inst.p, "bianchi", &o, &rep.p) == TFYM_OK);
  CHECK(tfym_report_passed(rep.p) == 1);
  const std::string json = tfym_report_json(rep.p, 0);
  CHECK(json.find("\"command\": \"bianchi\"") != std::string::npos);
  CHECK(json.find("\"seconds\"") == std::string::npos);
  CHECK(std::string(tfym_report_json(rep.p, 1)).find("\"seconds\"") != std::string::npos);
  CHECK(std::string(tfym_report_csv(rep.p)).empty());
}

TEST_CASE("float sweep produces CSV rows and fake-flat forms") {
  Instance inst;
  REQUIRE(tfym_instance_load(config("su2_u1").c_str(), &inst.p) == TFYM_OK);
  tfym_options o = quick();
  o.seeds = 1;
  o.float_sweep = 1;
  o.fake_flat = 1;
  Report rep;
  REQUIRE(tfym_run(inst.p, "gradcheck", &o, &rep.p) == TFYM_OK);
  const std::string csv = tfym_report_csv(rep.p);
  CHECK(csv.rfind("seed,step,central_difference,bulk_pairing,discrepancy\n", 0) == 0);
  CHECK(std::string(tfym_report_forms(rep.p)).find("form seed0.A g 1 4 3") != std::string::npos);
}

TEST_CASE("a failing instance reports failure, not an error") {
  Instance inst;
  REQUIRE(tfym_instance_load(config("broken_peiffer").c_str(), &inst.p) == TFYM_OK);
  Report rep;
  REQUIRE(tfym_run(inst.p, "verify", nullptr, &rep.p) == TFYM_OK);
  CHECK(tfym_report_passed(rep.p) == 0);
}

TEST_CASE("error codes") {
  tfym_instance* inst = nullptr;
  CHECK(tfym_instance_load("/nonexistent/x.json", &inst) == TFYM_ERR_IO);
  CHECK(inst == nullptr);
  CHECK(std::string(tfym_last_error()).find("/nonexistent/x.json") != std::string::npos);

  CHECK(tfym_instance_parse("{ nope", &inst) == TFYM_ERR_CONFIG);
  CHECK(std::string(tfym_last_error()).find("invalid JSON") != std::string::npos);
  CHECK(tfym_instance_parse("{}", &inst) == TFYM_ERR_CONFIG);
  CHECK(std::string(tfym_last_error()) == "name: missing required field");

  CHECK(tfym_instance_parse(nullptr, &inst) == TFYM_ERR_INVALID_ARGUMENT);
  CHECK(tfym_instance_load("x", nullptr) == TFYM_ERR_INVALID_ARGUMENT);

  Instance su2;
  REQUIRE(tfym_instance_load(config("su2_peiffer").c_str(), &su2.p) == TFYM_OK);
  CHECK(std::string(tfym_last_error()).empty());
  tfym_report* rep = nullptr;
  const tfym_options o = quick();
  CHECK(tfym_run(su2.p, "reduce", &o, &rep) == TFYM_ERR_PRECONDITION);
  CHECK(rep == nullptr);
  CHECK(tfym_run(su2.p, "frobnicate", &o, &rep) == TFYM_ERR_CONFIG);
  CHECK(tfym_run(su2.p, nullptr, &o, &rep) == TFYM_ERR_INVALID_ARGUMENT);

  tfym_options bad = quick();
  bad.dim = 3;
  CHECK(tfym_run(su2.p, "bianchi", &bad, &rep) == TFYM_ERR_PRECONDITION);
  bad = quick();
  bad.connection_text = "form A g 1 4\nend\n";
  CHECK(tfym_run(su2.p, "bianchi", &bad, &rep) != TFYM_OK);

  Instance aff;
  REQUIRE(tfym_instance_load(config("aff1").c_str(), &aff.p) == TFYM_OK);
  CHECK(tfym_run(aff.p, "action", &o, &rep) == TFYM_ERR_PRECONDITION);

  tfym_instance_free(nullptr);
  tfym_report_free(nullptr);
}
