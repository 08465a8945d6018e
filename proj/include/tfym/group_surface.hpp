#pragma once

#include <vector>

#include "tfym/finite_group.hpp"

namespace tfym {

// alpha(h) = g2 g1^-1
struct Square {
  int g1 = 0, g2 = 0, h = 0;
  bool operator==(const Square&) const = default;
};

// Faces (g1, g2; h1) and (g3, g4; h2) joined by l, beta(l) = h2 h1^-1. Face edges
// follow the stacking order of vertical composition, alpha(h1) = g1^-1 g2 and
// alpha(h2) = g3^-1 g4, so that stacked faces compose as h1 h3.
struct Cube {
  int g1 = 0, g2 = 0, g3 = 0, g4 = 0, h1 = 0, h2 = 0, l = 0;
  bool operator==(const Cube&) const = default;
};

bool square_valid(const FiniteTwoCrossedModule& M, const Square& s);
bool cube_valid(const FiniteTwoCrossedModule& M, const Cube& c);

Square square_identity_h(const FiniteTwoCrossedModule& M, int g);
Square square_identity_v(const FiniteTwoCrossedModule& M);
// Throws CompositionError unless s1.g2 == s2.g1.
Square square_compose_h(const FiniteTwoCrossedModule& M, const Square& s1, const Square& s2);
Square square_compose_v(const FiniteTwoCrossedModule& M, const Square& s1, const Square& s2);
Square square_inverse_h(const FiniteTwoCrossedModule& M, const Square& s);
Square square_inverse_v(const FiniteTwoCrossedModule& M, const Square& s);

Cube cube_identity_h(const FiniteTwoCrossedModule& M, int g1, int g2, int h);
Cube cube_identity_v(const FiniteTwoCrossedModule& M, int g1, int g3);
// Throws CompositionError unless c1's right face equals c2's left face.
Cube cube_compose_h(const FiniteTwoCrossedModule& M, const Cube& c1, const Cube& c2);
// Throws CompositionError unless c1's bottom edges (g2, g4) are c2's top edges (g1, g3).
Cube cube_compose_v(const FiniteTwoCrossedModule& M, const Cube& c1, const Cube& c2);
Cube cube_inverse_h(const FiniteTwoCrossedModule& M, const Cube& c);
Cube cube_inverse_v(const FiniteTwoCrossedModule& M, const Cube& c);

std::vector<Square> all_squares(const FiniteTwoCrossedModule& M);
std::vector<Cube> all_cubes(const FiniteTwoCrossedModule& M);

struct SurfaceCounts {
  long square_pairs_h = 0, square_pairs_v = 0, square_triples_h = 0;
  long cube_pairs_h = 0, cube_pairs_v = 0;
};

// Exhaustive checks over all composable pairs: boundary relations of each
// composition and inverse, inverse laws on both sides, identity laws, horizontal
// associativity, and agreement of vertical composition with an independently built
// semidirect product table. Residual = number of violations.
AxiomReport group_surface_report(const FiniteTwoCrossedModule& M, SurfaceCounts* counts = nullptr);

}  // namespace tfym
