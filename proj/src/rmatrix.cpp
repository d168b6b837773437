#include "trihopf/rmatrix.hpp"

#include <string>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

std::string e(int i) { return "e" + std::to_string(i); }

}  // namespace

Report verify_quasitriangular(const HopfPresentation& h, const Tensor2& r, Exec ex) {
  Report rep;
  int d = h.dim();
  if (r.d1() != d || r.d2() != d) {
    rep.add("shape", false, "R is not in A (x) A");
    return rep;
  }
  const Parity* par = h.parity_ptr();
  Vec one = h.one();
  Tensor3 r13 = embed13(r, one);
  Tensor3 r23 = embed23(one, r);
  Tensor3 r12 = embed12(r, one);

  Tensor3 lhs = kernels::comult_left(ex, h.comult, r);
  Tensor3 rhs = kernels::mul3(ex, h.algebra, par, r13, r23);
  std::string wit;
  if (lhs != rhs) {
    auto p = lhs.first_difference(rhs);
    wit = "(Delta x id)(R) != R13 R23 at (" + std::to_string(p.i) + "," + std::to_string(p.j) + "," +
          std::to_string(p.k) + ")";
  }
  rep.add("(Delta x id)(R) = R13 R23", wit.empty(), wit);

  wit.clear();
  lhs = kernels::comult_right(ex, h.comult, r);
  rhs = kernels::mul3(ex, h.algebra, par, r13, r12);
  if (lhs != rhs) {
    auto p = lhs.first_difference(rhs);
    wit = "(id x Delta)(R) != R13 R12 at (" + std::to_string(p.i) + "," + std::to_string(p.j) + "," +
          std::to_string(p.k) + ")";
  }
  rep.add("(id x Delta)(R) = R13 R12", wit.empty(), wit);

  wit.clear();
  long bad = kernels::first_failure(ex, d, [&](long i) {
    Tensor2 cop = tensor_op(h, h.comult[i]);
    return kernels::serial::mul2(h.algebra, h.algebra, par, par, cop, r) !=
           kernels::serial::mul2(h.algebra, h.algebra, par, par, r, h.comult[i]);
  });
  if (bad >= 0) wit = "Delta^cop(" + e(static_cast<int>(bad)) + ") R != R Delta(" + e(static_cast<int>(bad)) + ")";
  rep.add("Delta^cop(a) R = R Delta(a)", wit.empty(), wit);

  wit.clear();
  bool invertible = is_tensor_inverse(h, r, tensor_op(h, r));
  if (!invertible) {
    try {
      invertible = tensor_inverse(h, r).has_value();
      if (!invertible) wit = "R is not invertible";
    } catch (const BudgetExceeded& err) {
      wit = std::string("inverse not determined: ") + err.what();
    }
  }
  rep.add("R invertible", invertible, wit);
  return rep;
}

bool is_triangular(const HopfPresentation& h, const Tensor2& r) {
  return tensor_mul(h, r, tensor_op(h, r)) == one_tensor(h);
}

DrinfeldElement drinfeld_element(const HopfPresentation& h, const Tensor2& r) {
  int d = h.dim();
  Tensor2 r21 = tensor_op(h, r);
  DrinfeldElement out;
  out.u = multiply_legs(h, apply_maps(h.antipode, Matrix::identity(d), r21));
  auto inv = h.algebra.inverse(out.u);
  if (!inv) throw StructureError("Drinfeld element is not invertible");
  out.u_inverse = *inv;
  Matrix s2 = h.antipode * h.antipode;
  out.implements_s2 = true;
  for (int i = 0; i < d && out.implements_s2; ++i)
    if (h.mul(h.mul(out.u, h.e(i)), out.u_inverse) != s2.column(i)) out.implements_s2 = false;
  out.grouplike = h.coproduct(out.u) == Tensor2::pure(out.u, out.u) && h.eps(out.u) == Cyclotomic(1);
  out.involutive = h.mul(out.u, out.u) == h.one();
  return out;
}

Tensor2 r_u(const HopfPresentation& h, const Vec& u) {
  if (h.mul(u, u) != h.one() || h.coproduct(u) != Tensor2::pure(u, u)) {
    throw UsageError("R_u needs a grouplike u with u^2 = 1");
  }
  Vec one = h.one();
  Tensor2 out = Tensor2::pure(one, one) + Tensor2::pure(one, u) + Tensor2::pure(u, one) - Tensor2::pure(u, u);
  return out.scaled(Cyclotomic(Rational(1, 2)));
}

MinimalPart minimal_part(const HopfPresentation& h, const Tensor2& r) {
  std::vector<Vec> gens = r.left_legs();
  for (auto& v : r.right_legs()) gens.push_back(v);
  if (h.is_super()) {
    std::vector<Vec> homog;
    for (const auto& v : gens) {
      Vec ev(v.size()), od(v.size());
      for (size_t i = 0; i < v.size(); ++i) ((*h.parity)[i] ? od : ev)[i] = v[i];
      if (!is_zero_vec(ev)) homog.push_back(ev);
      if (!is_zero_vec(od)) homog.push_back(od);
    }
    gens = homog;
  }
  MinimalPart out;
  out.basis = generated_subalgebra(h.algebra, gens);
  out.hopf = sub_hopf(h, out.basis);
  CoordinateSolver cs(out.basis);
  auto rc = tensor_coords(r, cs, cs);
  if (!rc) throw StructureError("R does not lie in the square of its minimal part");
  out.r = *rc;
  out.rank = static_cast<int>(out.basis.size());
  out.tensor_rank = r.rank();
  return out;
}

Matrix f_r_map(const HopfPresentation& h, const Tensor2& r) {
  (void)h;
  return r.as_matrix().transpose();
}

Report verify_f_r_isomorphism(const HopfPresentation& h, const Tensor2& r) {
  if (h.is_super()) throw UsageError("f_R check is implemented for ordinary Hopf algebras");
  Report rep;
  MinimalPart m = minimal_part(h, r);
  int k = m.rank;
  HopfPresentation dual = dual_hopf(m.hopf);
  Matrix f = f_r_map(m.hopf, m.r);
  rep.add("bijective", rank(f) == k, rank(f) == k ? "" : "f_R has rank " + std::to_string(rank(f)));
  std::string wit;
  for (int i = 0; i < k && wit.empty(); ++i)
    for (int j = 0; j < k && wit.empty(); ++j)
      if (f.apply(dual.algebra.basis_product(i, j)) != m.hopf.mul(f.column(i), f.column(j)))
        wit = "f(p" + std::to_string(i) + " p" + std::to_string(j) + ") != f(p" + std::to_string(i) + ") f(p" +
              std::to_string(j) + ")";
  if (wit.empty() && f.apply(dual.one()) != m.hopf.one()) wit = "f(1) != 1";
  rep.add("algebra map", wit.empty(), wit);
  wit.clear();
  for (int i = 0; i < k && wit.empty(); ++i) {
    Tensor2 lhs = m.hopf.coproduct(f.column(i));
    Tensor2 rhs = apply_maps(f, f, dual.comult[i].flip());
    if (lhs != rhs) wit = "Delta(f(p" + std::to_string(i) + ")) != (f x f) Delta^cop(p" + std::to_string(i) + ")";
    else if (m.hopf.eps(f.column(i)) != dual.counit[i]) wit = "eps(f(p" + std::to_string(i) + ")) != eps(p" + std::to_string(i) + ")";
  }
  rep.add("coalgebra map from the co-opposite", wit.empty(), wit);
  return rep;
}

}  // namespace trihopf
