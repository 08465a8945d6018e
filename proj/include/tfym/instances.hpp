#pragma once

#include <vector>

#include "tfym/crossed_module.hpp"

namespace tfym {

// h = R^2 between one-dimensional g and l, beta = (1,1)^T, alpha = (1,-1).
// All brackets, actions and the lifting vanish.
DifferentialTwoCrossedModule abelian_chain_instance();

// g = h = u(2), alpha = id, adjoint action, l = 0.
DifferentialTwoCrossedModule u2_crossed_instance();

// g = su(2), h = 0, l = u(1) with trivial action.
DifferentialTwoCrossedModule su2_u1_instance();

// g = h = l = su(2), adjoint actions, alpha = 0, beta = id, {Y, Y'} = [Y, Y'].
DifferentialTwoCrossedModule su2_peiffer_instance();

// g = su(2), h = su(2) + su(2), l = su(2); alpha projects to the first summand,
// beta includes into the second, {(u,v), (u',v')} = [v - u, v'].
DifferentialTwoCrossedModule su2_split_instance();

// g = aff(1), h = l = 0. Valid, but g has no nondegenerate invariant form.
DifferentialTwoCrossedModule aff1_instance();

// Single-algebra instances used by the reduction checks.
DifferentialTwoCrossedModule su2_only_instance();     // g = su(2), h = l = 0
DifferentialTwoCrossedModule u1_g_instance();         // g = u(1), h = l = 0
DifferentialTwoCrossedModule u1_h_instance();         // h = u(1), g = l = 0
DifferentialTwoCrossedModule u1_l_instance();         // l = u(1), g = h = 0

struct PeifferCandidate {
  Rational beta_scale;
  Rational peiffer_scale;
};

// Brute force over beta = c * id, {,} = lambda * [,] on g = h = l = su(2) with
// alpha = 0 and adjoint actions. Returns the candidates passing axiom_report.
std::vector<PeifferCandidate> search_su2_peiffer(const std::vector<Rational>& scales);

// Fills M.peiffer from the boundary axiom beta{Y_a,Y_b} = [Y_a,Y_b] - alpha(Y_a) |> Y_b,
// taking the particular solution with free coordinates zero. Returns false when
// some right-hand side is outside the image of beta.
bool solve_peiffer_from_boundary(DifferentialTwoCrossedModule& M);

}  // namespace tfym
