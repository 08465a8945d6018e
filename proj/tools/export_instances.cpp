// Writes the built-in instances as config documents: export_instances <dir>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tfym/config.hpp"
#include "tfym/instances.hpp"

using namespace tfym;

namespace {

InstanceConfig base(const std::string& name, DifferentialTwoCrossedModule M, std::uint64_t seed) {
  InstanceConfig c;
  c.name = name;
  M.name = name;
  c.module = std::move(M);
  c.random.seed = seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_instances <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::vector<InstanceConfig> all;

  {
    auto c = base("abelian_chain", abelian_chain_instance(), 11);
    c.finite = {trivial_finite_instance(), cyclic_chain_instance()};
    all.push_back(std::move(c));
  }
  {
    auto c = base("u2_crossed", u2_crossed_instance(), 12);
    c.reduction = ReductionArrow::ym3_to_ym2;
    all.push_back(std::move(c));
  }
  all.push_back(base("su2_u1", su2_u1_instance(), 13));
  {
    auto c = base("su2_peiffer", su2_peiffer_instance(), 14);
    c.finite = {s3_search_instance()};
    all.push_back(std::move(c));
  }
  all.push_back(base("su2_split", su2_split_instance(), 15));
  {
    // one Peiffer entry off by one
    auto M = su2_peiffer_instance();
    M.peiffer(0, 1, 2) += 1;
    M.beta_right_inverse.reset();
    all.push_back(base("broken_peiffer", std::move(M), 16));
  }
  all.push_back(base("aff1", aff1_instance(), 17));
  {
    auto c = base("su2_only", su2_only_instance(), 18);
    c.reduction = ReductionArrow::ym3_to_ym1;
    all.push_back(std::move(c));
  }
  {
    auto c = base("u1_g", u1_g_instance(), 19);
    c.reduction = ReductionArrow::ym2_to_elec1;
    all.push_back(std::move(c));
  }
  {
    auto c = base("u1_h", u1_h_instance(), 20);
    c.reduction = ReductionArrow::ym3_to_elec2;
    all.push_back(std::move(c));
  }
  {
    auto c = base("u1_l", u1_l_instance(), 21);
    c.reduction = ReductionArrow::ym3_to_elec3;
    all.push_back(std::move(c));
  }

  for (const auto& c : all) {
    const std::string path = dir + "/" + c.name + ".json";
    std::ofstream out(path, std::ios::binary);
    out << export_config(c);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    std::cout << path << "\n";
  }
  return 0;
}
