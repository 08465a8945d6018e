#pragma once

#include <string>
#include <vector>

#include "tfym/crossed_module.hpp"
#include "tfym/variational.hpp"

namespace tfym {

enum class ReductionArrow { ym3_to_ym2, ym3_to_ym1, ym3_to_elec3, ym3_to_elec2, ym2_to_elec1 };

const char* arrow_name(ReductionArrow a);
ReductionArrow arrow_from_name(const std::string& s);
const std::vector<ReductionArrow>& all_arrows();

// Throws PreconditionError naming the violated triviality condition.
void check_arrow_applicable(const DifferentialTwoCrossedModule& M, ReductionArrow a);

struct ReductionComparison {
  std::string name;  // e.g. "EA"
  Rational residual;  // max coefficient of (general - reduced)
};

// Residual forms of the reduced theory computed directly from its own equations,
// compared with field_eq_residuals of the general machinery, plus the two actions.
std::vector<ReductionComparison> compare_reduction(const Calculus<Rational>& calc, ReductionArrow a,
                                                   const ThreeConnection<Rational>& c);

// Directly coded reduced equations.
ResidualTriple<Rational> two_form_ym_residuals(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c);
Form<Rational> ym_residual(const Calculus<Rational>& calc, const Form<Rational>& A);
Form<Rational> electro_residual(const Form<Rational>& potential);  // d * d P

}  // namespace tfym
