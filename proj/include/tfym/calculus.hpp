#pragma once

#include <array>
#include <optional>

#include "tfym/forms.hpp"
#include "tfym/invariant_forms.hpp"

namespace tfym {

inline Part part_of_slot(Slot s) {
  switch (s) {
    case Slot::g: case Slot::mat_g: return Part::g;
    case Slot::h: case Slot::mat_h: return Part::h;
    case Slot::l: case Slot::mat_l: return Part::l;
    default: throw StructuralError("scalar form where an algebra-valued form was expected");
  }
}
inline Slot slot_of(Part p) { return p == Part::g ? Slot::g : p == Part::h ? Slot::h : Slot::l; }
inline Slot matrix_slot(Part p) { return p == Part::g ? Slot::mat_g : p == Part::h ? Slot::mat_h : Slot::mat_l; }

// Every wedge combinator, lifted map and pairing of one differential 2-crossed
// module, with tensors converted once to the coefficient type T. The pairing
// and the induced maps need an invariant triple.
template <class T>
class Calculus {
 public:
  explicit Calculus(const DifferentialTwoCrossedModule& M, std::optional<InvariantFormTriple> tri = std::nullopt,
                    bool swap_eta = false)
      : M_(M), tri_(std::move(tri)) {
    validate_shapes(M_);
    for (Part p : {Part::g, Part::h, Part::l}) {
      const LieAlgebra& L = *algebra_of(M_, p);
      const int i = static_cast<int>(p);
      bracket_[i] = Bilinear<T>::from_tensor(L.structure);
      if (L.rep) build_rep(p, L);
    }
    act_[0] = Bilinear<T>::from_tensor(M_.act_g);
    act_[1] = Bilinear<T>::from_tensor(M_.act_h);
    act_[2] = Bilinear<T>::from_tensor(M_.act_l);
    peiffer_ = Bilinear<T>::from_tensor(M_.peiffer);
    prime_ = Bilinear<T>::from_tensor(prime_action_tensor(M_));
    if (tri_) {
      for (Part p : {Part::g, Part::h, Part::l}) {
        const Matrix& G = tri_->gram(p);
        Tensor3 t(G.rows, G.cols, 1);
        for (int a = 0; a < G.rows; ++a)
          for (int b = 0; b < G.cols; ++b) t(a, b, 0) = G(a, b);
        pair_[static_cast<int>(p)] = Bilinear<T>::from_tensor(t);
      }
      sigma_ = Bilinear<T>::from_tensor(sigma_tensor(M_, *tri_));
      kappa_ = Bilinear<T>::from_tensor(kappa_tensor(M_, *tri_));
      eta_[0] = Bilinear<T>::from_tensor(eta_tensor(M_, *tri_, swap_eta ? 2 : 1));
      eta_[1] = Bilinear<T>::from_tensor(eta_tensor(M_, *tri_, swap_eta ? 1 : 2));
      alpha_star_ = alpha_star_matrix(M_, *tri_);
      beta_star_ = beta_star_matrix(M_, *tri_);
    }
  }

  const DifferentialTwoCrossedModule& module() const { return M_; }
  bool has_triple() const { return tri_.has_value(); }
  const InvariantFormTriple& triple() const {
    if (!tri_) throw PreconditionError("no invariant form triple bound");
    return *tri_;
  }
  int width(Part p) const { return algebra_of(M_, p)->dim; }
  Form<T> zero(int d, int k, Part p) const { return Form<T>(d, k, slot_of(p), width(p)); }

  // Products are truncated in this variable when set (used for the variation parameter).
  Truncation truncation;

  Form<T> bracket(const Form<T>& w1, const Form<T>& w2) const {
    const Part p = same_part(w1, w2, "bracket wedge");
    return wedge_bilinear(w1, w2, bracket_[static_cast<int>(p)], slot_of(p), truncation);
  }
  Form<T> action(const Form<T>& a, const Form<T>& w) const {
    expect(a, Part::g, "action wedge (left)");
    const Part p = part_of_slot(w.slot);
    return wedge_bilinear(a, w, act_[static_cast<int>(p)], slot_of(p), truncation);
  }
  Form<T> peiffer(const Form<T>& b1, const Form<T>& b2) const {
    expect(b1, Part::h, "Peiffer wedge");
    expect(b2, Part::h, "Peiffer wedge");
    return wedge_bilinear(b1, b2, peiffer_, Slot::l, truncation);
  }
  Form<T> prime_action(const Form<T>& b, const Form<T>& c) const {
    expect(b, Part::h, "prime-action wedge (left)");
    expect(c, Part::l, "prime-action wedge (right)");
    return wedge_bilinear(b, c, prime_, Slot::l, truncation);
  }

  bool has_rep(Part p) const { return rep_[static_cast<int>(p)].has_value(); }
  // Associative wedge sum A^a ^ A'^b X_a X_b, valued in n x n matrices.
  Form<T> plain(const Form<T>& w1, const Form<T>& w2) const {
    const Part p = same_part(w1, w2, "plain wedge");
    const auto& r = rep_or_throw(p);
    return wedge_bilinear(w1, w2, r.product, matrix_slot(p), truncation);
  }
  // Algebra-valued form -> its image under the representation.
  Form<T> to_matrix(const Form<T>& w) const {
    const Part p = part_of_slot(w.slot);
    return apply_linear(rep_or_throw(p).lift, w, matrix_slot(p));
  }
  // Inverse of to_matrix on its image; in exact mode anything off the image is rejected.
  Form<T> from_matrix(const Form<T>& w) const {
    const Part p = part_of_slot(w.slot);
    const auto& r = rep_or_throw(p);
    Form<T> out = apply_linear(r.left_inverse, w, slot_of(p));
    if constexpr (Field<T>::exact) {
      if (!(apply_linear(r.lift, out, w.slot) == w))
        throw StructuralError("matrix-valued form is outside the image of the representation");
    }
    return out;
  }

  // The A ^ A term of the curvature: associative when g is represented,
  // otherwise 1/2 A ^[,] A if the module allows the substitution.
  Form<T> self_wedge(const Form<T>& a) const {
    expect(a, Part::g, "A ^ A");
    if (has_rep(Part::g)) return from_matrix(plain(a, a));
    if (M_.bracket_substitution) return bracket(a, a).scaled(T(1) / T(2));
    throw StructuralError("A ^ A needs a matrix representation of g or the bracket substitution flag");
  }

  Form<T> alpha(const Form<T>& b) const {
    expect(b, Part::h, "alpha lift");
    return apply_linear(M_.alpha, b, Slot::g);
  }
  Form<T> beta(const Form<T>& c) const {
    expect(c, Part::l, "beta lift");
    return apply_linear(M_.beta, c, Slot::h);
  }
  Form<T> alpha_star(const Form<T>& a) const {
    expect(a, Part::g, "alpha* lift");
    triple();
    return apply_linear(alpha_star_, a, Slot::h);
  }
  Form<T> beta_star(const Form<T>& b) const {
    expect(b, Part::h, "beta* lift");
    triple();
    return apply_linear(beta_star_, b, Slot::l);
  }

  Form<T> pair(const Form<T>& w1, const Form<T>& w2) const {
    const Part p = same_part(w1, w2, "pairing");
    triple();
    return wedge_bilinear(w1, w2, pair_[static_cast<int>(p)], Slot::scalar, truncation);
  }
  Form<T> sigma_bar(const Form<T>& b1, const Form<T>& b2) const {
    expect(b1, Part::h, "sigma bar");
    expect(b2, Part::h, "sigma bar");
    triple();
    return wedge_bilinear(b1, b2, sigma_, Slot::g, truncation);
  }
  Form<T> kappa_bar(const Form<T>& c1, const Form<T>& c2) const {
    expect(c1, Part::l, "kappa bar");
    expect(c2, Part::l, "kappa bar");
    triple();
    return wedge_bilinear(c1, c2, kappa_, Slot::g, truncation);
  }
  // sum C^b ^ B^a eta_i(Z_b, Y_a)
  Form<T> eta_bar(int i, const Form<T>& c, const Form<T>& b) const {
    if (i != 1 && i != 2) throw StructuralError("eta index must be 1 or 2");
    expect(c, Part::l, "eta bar");
    expect(b, Part::h, "eta bar");
    triple();
    return wedge_bilinear(c, b, eta_[i - 1], Slot::h, truncation);
  }

 private:
  struct Rep {
    Bilinear<T> product;
    Matrix lift;          // n^2 x dim
    Matrix left_inverse;  // dim x n^2
  };

  void build_rep(Part p, const LieAlgebra& L) {
    const MatrixRep& R = *L.rep;
    const int n = R.n, n2 = n * n;
    Rep r;
    Tensor3 prod(L.dim, L.dim, n2);
    for (int a = 0; a < L.dim; ++a)
      for (int b = 0; b < L.dim; ++b) {
        Matrix xy = R.mats[a] * R.mats[b];
        for (int e = 0; e < n2; ++e) prod(a, b, e) = xy.v[e];
      }
    r.product = Bilinear<T>::from_tensor(prod);
    r.lift = Matrix(n2, L.dim);
    for (int a = 0; a < L.dim; ++a)
      for (int e = 0; e < n2; ++e) r.lift(e, a) = R.mats[a].v[e];
    const Matrix lt = transpose(r.lift);
    r.left_inverse = inverse(lt * r.lift) * lt;
    rep_[static_cast<int>(p)] = std::move(r);
  }

  const Rep& rep_or_throw(Part p) const {
    const auto& r = rep_[static_cast<int>(p)];
    if (!r) throw StructuralError("algebra " + algebra_of(M_, p)->name + " has no matrix representation");
    return *r;
  }

  static void expect(const Form<T>& w, Part p, const char* what) {
    if (w.slot != slot_of(p))
      throw StructuralError(std::string(what) + ": form valued in " + slot_name(w.slot) + ", expected " +
                            slot_name(slot_of(p)));
  }
  static Part same_part(const Form<T>& w1, const Form<T>& w2, const char* what) {
    if (w1.slot != w2.slot || w1.slot == Slot::scalar || w1.slot >= Slot::mat_g)
      throw StructuralError(std::string(what) + ": incompatible algebras " + slot_name(w1.slot) + " and " +
                            slot_name(w2.slot));
    return part_of_slot(w1.slot);
  }

  DifferentialTwoCrossedModule M_;
  std::optional<InvariantFormTriple> tri_;
  std::array<Bilinear<T>, 3> bracket_, act_, pair_;
  std::array<std::optional<Rep>, 3> rep_;
  Bilinear<T> peiffer_, prime_, sigma_, kappa_;
  std::array<Bilinear<T>, 2> eta_;
  Matrix alpha_star_, beta_star_;
};

}  // namespace tfym
