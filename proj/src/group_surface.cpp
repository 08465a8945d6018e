#include "tfym/group_surface.hpp"

namespace tfym {

bool square_valid(const FiniteTwoCrossedModule& M, const Square& s) {
  return M.a(s.h) == M.G.mul(s.g2, M.G.inv(s.g1));
}

bool cube_valid(const FiniteTwoCrossedModule& M, const Cube& c) {
  const auto &G = M.G, &H = M.H;
  return M.b(c.l) == H.mul(c.h2, H.inv(c.h1)) && M.a(c.h1) == G.mul(G.inv(c.g1), c.g2) &&
         M.a(c.h2) == G.mul(G.inv(c.g3), c.g4);
}

Square square_identity_h(const FiniteTwoCrossedModule& M, int g) { return {g, g, M.H.identity()}; }
Square square_identity_v(const FiniteTwoCrossedModule& M) {
  return {M.G.identity(), M.G.identity(), M.H.identity()};
}

Square square_compose_h(const FiniteTwoCrossedModule& M, const Square& s1, const Square& s2) {
  if (s1.g2 != s2.g1) throw CompositionError("horizontal square composition: right edge of the first square differs from left edge of the second");
  return {s1.g1, s2.g2, M.H.mul(s2.h, s1.h)};
}

Square square_compose_v(const FiniteTwoCrossedModule& M, const Square& s1, const Square& s2) {
  return {M.G.mul(s1.g1, s2.g1), M.G.mul(s1.g2, s2.g2), M.H.mul(s1.h, M.on_h(s1.g1, s2.h))};
}

Square square_inverse_h(const FiniteTwoCrossedModule& M, const Square& s) { return {s.g2, s.g1, M.H.inv(s.h)}; }

Square square_inverse_v(const FiniteTwoCrossedModule& M, const Square& s) {
  const int gi = M.G.inv(s.g1);
  return {gi, M.G.inv(s.g2), M.on_h(gi, M.H.inv(s.h))};
}

Cube cube_identity_h(const FiniteTwoCrossedModule& M, int g1, int g2, int h) {
  return {g1, g2, g1, g2, h, h, M.L.identity()};
}

Cube cube_identity_v(const FiniteTwoCrossedModule& M, int g1, int g3) {
  return {g1, g1, g3, g3, M.H.identity(), M.H.identity(), M.L.identity()};
}

Cube cube_compose_h(const FiniteTwoCrossedModule& M, const Cube& c1, const Cube& c2) {
  if (c1.g3 != c2.g1 || c1.g4 != c2.g2 || c1.h2 != c2.h1)
    throw CompositionError("horizontal cube composition: shared face mismatch");
  // l o l' = l' l
  return {c1.g1, c1.g2, c2.g3, c2.g4, c1.h1, c2.h2, M.L.mul(c2.l, c1.l)};
}

Cube cube_compose_v(const FiniteTwoCrossedModule& M, const Cube& c1, const Cube& c2) {
  if (c1.g2 != c2.g1 || c1.g4 != c2.g3) throw CompositionError("vertical cube composition: shared face mismatch");
  const auto& H = M.H;
  // side faces compose as h3 o h1 = h1 h3, and l * l' = l (h1 |>' l')
  return {c1.g1, c2.g2, c1.g3, c2.g4, H.mul(c1.h1, c2.h1), H.mul(c1.h2, c2.h2), M.L.mul(c1.l, M.prime(c1.h1, c2.l))};
}

Cube cube_inverse_h(const FiniteTwoCrossedModule& M, const Cube& c) {
  return {c.g3, c.g4, c.g1, c.g2, c.h2, c.h1, M.L.inv(c.l)};
}

Cube cube_inverse_v(const FiniteTwoCrossedModule& M, const Cube& c) {
  const auto& H = M.H;
  const int h1i = H.inv(c.h1);
  return {c.g2, c.g1, c.g4, c.g3, h1i, H.inv(c.h2), M.prime(h1i, M.L.inv(c.l))};
}

std::vector<Square> all_squares(const FiniteTwoCrossedModule& M) {
  std::vector<Square> out;
  for (int g1 = 0; g1 < M.G.order(); ++g1)
    for (int h = 0; h < M.H.order(); ++h) out.push_back({g1, M.G.mul(M.a(h), g1), h});
  return out;
}

std::vector<Cube> all_cubes(const FiniteTwoCrossedModule& M) {
  const auto &G = M.G, &H = M.H;
  std::vector<Cube> out;
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int h1 = 0; h1 < H.order(); ++h1)
      for (int g3 = 0; g3 < G.order(); ++g3)
        for (int l = 0; l < M.L.order(); ++l) {
          const int h2 = H.mul(M.b(l), h1);
          out.push_back({g1, G.mul(g1, M.a(h1)), g3, G.mul(g3, M.a(h2)), h1, h2, l});
        }
  return out;
}

AxiomReport group_surface_report(const FiniteTwoCrossedModule& M, SurfaceCounts* counts) {
  const auto &G = M.G, &H = M.H, &L = M.L;
  const auto squares = all_squares(M);
  const auto cubes = all_cubes(M);
  SurfaceCounts n;
  long sq_h = 0, sq_v = 0, sq_assoc = 0, sq_semidirect = 0, sq_inv_h = 0, sq_inv_v = 0, sq_ident = 0;
  long cb_h = 0, cb_v = 0, cb_inv_h = 0, cb_inv_v = 0, cb_ident = 0, cb_valid = 0, sq_valid = 0;

  // (h, g)(h', g') = (h (g |> h'), g g') on index h * |G| + g, built from the tables alone
  const int ng = G.order(), nh = H.order();
  std::vector<int> semidirect(static_cast<size_t>(ng) * nh * ng * nh);
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int g2 = 0; g2 < ng; ++g2)
          semidirect[static_cast<size_t>(h * ng + g) * ng * nh + (h2 * ng + g2)] =
              H.mul(h, M.on_h(g, h2)) * ng + G.mul(g, g2);

  for (const auto& s1 : squares) {
    if (!square_valid(M, s1)) ++sq_valid;
    // inverse boundary relations alpha(h^-h) = g1 g2^-1, alpha(h^-v) = g2^-1 g1
    const Square ih = square_inverse_h(M, s1), iv = square_inverse_v(M, s1);
    if (M.a(ih.h) != G.mul(s1.g1, G.inv(s1.g2)) || !square_valid(M, ih)) ++sq_inv_h;
    if (M.a(iv.h) != G.mul(G.inv(s1.g2), s1.g1) || !square_valid(M, iv)) ++sq_inv_v;
    if (!(square_compose_h(M, s1, ih) == square_identity_h(M, s1.g1)) ||
        !(square_compose_h(M, ih, s1) == square_identity_h(M, s1.g2)))
      ++sq_inv_h;
    if (!(square_compose_v(M, s1, iv) == square_identity_v(M)) || !(square_compose_v(M, iv, s1) == square_identity_v(M)))
      ++sq_inv_v;
    if (!(square_compose_h(M, square_identity_h(M, s1.g1), s1) == s1) ||
        !(square_compose_h(M, s1, square_identity_h(M, s1.g2)) == s1) ||
        !(square_compose_v(M, square_identity_v(M), s1) == s1) || !(square_compose_v(M, s1, square_identity_v(M)) == s1))
      ++sq_ident;
    for (const auto& s2 : squares) {
      // vertical: any pair; alpha(h1 * h2) = g2 g4 g3^-1 g1^-1
      ++n.square_pairs_v;
      const Square v = square_compose_v(M, s1, s2);
      const int expect_v = G.mul(G.mul(s1.g2, s2.g2), G.mul(G.inv(s2.g1), G.inv(s1.g1)));
      if (M.a(v.h) != expect_v || !square_valid(M, v)) ++sq_v;
      const int prod = semidirect[static_cast<size_t>(s1.h * ng + s1.g1) * ng * nh + (s2.h * ng + s2.g1)];
      if (prod != v.h * ng + v.g1) ++sq_semidirect;
      if (s1.g2 != s2.g1) continue;
      // horizontal: alpha(h1 o h2) = g3 g1^-1
      ++n.square_pairs_h;
      const Square c = square_compose_h(M, s1, s2);
      if (M.a(c.h) != G.mul(s2.g2, G.inv(s1.g1)) || !square_valid(M, c)) ++sq_h;
      for (const auto& s3 : squares) {
        if (s3.g1 != s2.g2) continue;
        ++n.square_triples_h;
        if (!(square_compose_h(M, square_compose_h(M, s1, s2), s3) == square_compose_h(M, s1, square_compose_h(M, s2, s3))))
          ++sq_assoc;
      }
    }
  }

  for (const auto& c1 : cubes) {
    if (!cube_valid(M, c1)) ++cb_valid;
    const Cube ih = cube_inverse_h(M, c1), iv = cube_inverse_v(M, c1);
    if (M.b(ih.l) != H.mul(c1.h1, H.inv(c1.h2)) || !cube_valid(M, ih)) ++cb_inv_h;
    if (M.b(iv.l) != H.mul(H.inv(c1.h2), c1.h1) || !cube_valid(M, iv)) ++cb_inv_v;
    if (!(cube_compose_h(M, c1, ih) == cube_identity_h(M, c1.g1, c1.g2, c1.h1)) ||
        !(cube_compose_h(M, ih, c1) == cube_identity_h(M, c1.g3, c1.g4, c1.h2)))
      ++cb_inv_h;
    if (!(cube_compose_v(M, c1, iv) == cube_identity_v(M, c1.g1, c1.g3)) ||
        !(cube_compose_v(M, iv, c1) == cube_identity_v(M, c1.g2, c1.g4)))
      ++cb_inv_v;
    if (!(cube_compose_h(M, cube_identity_h(M, c1.g1, c1.g2, c1.h1), c1) == c1) ||
        !(cube_compose_h(M, c1, cube_identity_h(M, c1.g3, c1.g4, c1.h2)) == c1) ||
        !(cube_compose_v(M, cube_identity_v(M, c1.g1, c1.g3), c1) == c1) ||
        !(cube_compose_v(M, c1, cube_identity_v(M, c1.g2, c1.g4)) == c1))
      ++cb_ident;
    for (const auto& c2 : cubes) {
      if (c1.g3 == c2.g1 && c1.g4 == c2.g2 && c1.h2 == c2.h1) {
        ++n.cube_pairs_h;
        const Cube c = cube_compose_h(M, c1, c2);
        // beta(l o l') = beta(l') beta(l) = h3 h1^-1
        if (M.b(c.l) != H.mul(c2.h2, H.inv(c1.h1)) || M.b(c.l) != H.mul(M.b(c2.l), M.b(c1.l)) || !cube_valid(M, c))
          ++cb_h;
      }
      if (c1.g2 == c2.g1 && c1.g4 == c2.g3) {
        ++n.cube_pairs_v;
        const Cube c = cube_compose_v(M, c1, c2);
        // beta(l * l') = h2 h4 h3^-1 h1^-1
        const int expect = H.mul(H.mul(c1.h2, c2.h2), H.mul(H.inv(c2.h1), H.inv(c1.h1)));
        if (M.b(c.l) != expect || !cube_valid(M, c)) ++cb_v;
      }
    }
  }
  (void)L;

  AxiomReport r;
  r.add("square_enumeration_valid", Rational(sq_valid));
  r.add("square_h_boundary", Rational(sq_h));
  r.add("square_v_boundary", Rational(sq_v));
  r.add("square_h_associative", Rational(sq_assoc));
  r.add("square_v_semidirect", Rational(sq_semidirect));
  r.add("square_inverse_h", Rational(sq_inv_h));
  r.add("square_inverse_v", Rational(sq_inv_v));
  r.add("square_identity", Rational(sq_ident));
  r.add("cube_enumeration_valid", Rational(cb_valid));
  r.add("cube_h_boundary", Rational(cb_h));
  r.add("cube_v_boundary", Rational(cb_v));
  r.add("cube_inverse_h", Rational(cb_inv_h));
  r.add("cube_inverse_v", Rational(cb_inv_v));
  r.add("cube_identity", Rational(cb_ident));
  if (counts) *counts = n;
  return r;
}

}  // namespace tfym
