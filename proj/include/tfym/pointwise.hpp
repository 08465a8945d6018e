#pragma once

#include <vector>

#include "tfym/gauge.hpp"

namespace tfym {

// Double-precision action by tensor-product Gauss-Legendre quadrature of the
// Lagrangian evaluated node by node: the connection and its exterior derivative
// are sampled at each node and the curvatures are formed there, so no polynomial
// products are expanded. Uses A ^ A = 1/2 A ^[,] A for the g-valued 1-form.
// Returns S(c + s v) for each shift s in order.
std::vector<double> pointwise_actions(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                                      const ThreeConnection<Rational>& c, const ThreeConnection<Rational>& v,
                                      const std::vector<double>& shifts);

double pointwise_action(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                        const ThreeConnection<Rational>& c);

}  // namespace tfym
