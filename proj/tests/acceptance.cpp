// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <cstdio>
#include <iostream>
#include <sstream>

#include "suites.hpp"

namespace {

int failed = 0;

void line(int n, const char* title, bool ok, const std::string& detail, const suites::Result* r = nullptr) {
  if (!ok) ++failed;
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", n, title, detail.c_str());
  if (r)
    for (size_t i = 0; i < r->failures.size() && i < 10; ++i) std::printf("       %s\n", r->failures[i].c_str());
  std::fflush(stdout);
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

}  // namespace

int main() {
  using namespace suites;
  try {
    {
      double worst = 0;
      const auto t0 = Clock::now();
      const Result r = axiom_suite(&worst);
      line(1, "axiom suite", r.ok() && worst < 5.0,
           std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) + " failures, " + r.notes[0] +
               ", slowest instance " + fmt(worst) + " s (budget 5 s), total " + fmt(since(t0)) + " s",
           &r);
    }
    {
      double worst = 0;
      const Result r = bianchi_suite(50, &worst);
      line(2, "3-Bianchi identities", r.ok() && worst < 60.0,
           "50 seeds x " + std::to_string(validated_configs().size()) + " instances at d = 4, degree <= 3; " +
               std::to_string(r.failures.size()) + " nonzero residuals; slowest instance " + fmt(worst) +
               " s (budget 60 s)",
           &r);
    }
    {
      const auto t0 = Clock::now();
      PropTally t = prop_suite(20);
      bool ok = true;
      std::string detail;
      Result all;
      for (auto& [name, res] : t.by_identity) {
        ok = ok && res.ok();
        detail += name + " " + std::to_string(res.checks) + (res.failures.empty() ? "" : "!") + ", ";
        all.merge(res);
      }
      for (const char* need : {"AC", "AA'", "AW", "BB", "ABB", "bracket_invariance", "action_invariance.B1AB2", "action_invariance.C1AC2", "AB1B2",
                               "AC1C2", "B1B2C", "sigma_bar.antisymmetry", "kappa_bar.antisymmetry", "BAB", "ASD"})
        if (t.of(need).checks == 0) {
          ok = false;
          detail += std::string("missing ") + need + ", ";
        }
      line(3, "graded identity suites", ok,
           "20 seeds, every degree split with total <= 4; checks per identity: " + detail + fmt(since(t0)) + " s", &all);
    }
    {
      const auto t0 = Clock::now();
      VariationalStats st;
      const Result r = variational_suite(20, st);
      line(4, "variational field equations", r.ok(),
           std::to_string(st.exact_pairs) + " exact first-variation = bulk-pairing matches; convergence order in [" +
               fmt(st.min_order, 5) + ", " + fmt(st.max_order, 5) + "] over " + std::to_string(st.orders_fitted) +
               " sweeps (required 2.0 +- 0.2); " + std::to_string(st.quadratic_skips) +
               " sweeps on quadratic actions have no truncation error to fit; " + fmt(since(t0)) + " s",
           &r);
    }
    {
      const Result r = reduction_suite(10);
      line(5, "reduction diagram", r.ok(),
           "five arrows, 10 seeds each, " + std::to_string(r.checks) + " exact comparisons, " +
               std::to_string(r.failures.size()) + " mismatches",
           &r);
    }
    {
      long n = 0;
      const Result r = surface_suite(&n);
      line(6, "group-surface suite", r.ok() && n > 0,
           std::to_string(n) + " finite instances, " + std::to_string(r.checks) +
               " exhaustive boundary, inverse and identity checks, " + std::to_string(r.failures.size()) + " violations",
           &r);
    }
    {
      const Result r = induced_suite(5);
      line(7, "induced maps", r.ok(),
           std::to_string(r.checks) + " exact relation checks (sigma, kappa, eta1, eta2, alpha*, beta*, antisymmetry, "
           "EB under the eta swap), " + std::to_string(r.failures.size()) + " failures",
           &r);
    }
    {
      KernelTally t = kernel_suite(20);
      Result all;
      for (const Result* p : {&t.d_squared, &t.double_star, &t.pairing_symmetry, &t.quadrature, &t.oracle})
        all.merge(*p);
      const bool ok = t.d_squared.ok() && t.double_star.ok() && t.pairing_symmetry.ok() && t.quadrature.ok() &&
                      t.oracle.ok();
      line(8, "calculus kernel", ok,
           "d^2 = 0 x" + std::to_string(t.d_squared.checks) + ", double star x" + std::to_string(t.double_star.checks) +
               ", graded pairing symmetry x" + std::to_string(t.pairing_symmetry.checks) + ", quadrature x" +
               std::to_string(t.quadrature.checks) + " (worst relative " + fmt(t.worst_relative) +
               ", tolerance 1e-10), oracle x" + std::to_string(t.oracle.checks),
           &all);
    }
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  return failed == 0 ? 0 : 1;
}
