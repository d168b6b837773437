#include "trihopf/hopf.hpp"

#include <string>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

std::string e(int i) { return "e" + std::to_string(i); }

std::string at(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string at(Tensor3::Index p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

Tensor2 comult_of(const std::vector<Tensor2>& delta, int d, const Vec& a) {
  Tensor2 out(d, d);
  for (int i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    out += delta[i].scaled(a[i]);
  }
  return out;
}

}  // namespace

Tensor2 HopfPresentation::coproduct(const Vec& a) const { return comult_of(comult, dim(), a); }

Cyclotomic HopfPresentation::eps(const Vec& a) const {
  Cyclotomic s;
  for (int i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !counit[i].is_zero()) s += a[i] * counit[i];
  return s;
}

int vector_parity(const Parity& p, const Vec& v) {
  bool even = false;
  bool odd = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    (p[i] ? odd : even) = true;
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

Report verify_hopf(const HopfPresentation& h, Exec ex) {
  Report rep;
  int d = h.dim();
  const StructureAlgebra& a = h.algebra;
  const Parity* par = h.parity_ptr();
  if (static_cast<int>(h.comult.size()) != d || static_cast<int>(h.counit.size()) != d || h.antipode.rows() != d ||
      h.antipode.cols() != d || (par && static_cast<int>(par->size()) != d)) {
    rep.add("shape", false, "component sizes disagree with dim " + std::to_string(d));
    return rep;
  }
  for (const auto& t : h.comult)
    if (t.d1() != d || t.d2() != d) {
      rep.add("shape", false, "comultiplication tensor of wrong size");
      return rep;
    }
  rep.merge(verify_algebra(a));

  if (par) {
    std::string wit;
    for (int i = 0; i < d && wit.empty(); ++i) {
      if ((*par)[i] != 0 && (*par)[i] != 1) wit = "parity of " + e(i) + " is not 0/1";
    }
    for (int i = 0; i < d && wit.empty(); ++i)
      for (int j = 0; j < d && wit.empty(); ++j)
        for (const auto& [k, c] : a.product(i, j))
          if ((*par)[k] != ((*par)[i] ^ (*par)[j])) {
            wit = e(i) + " " + e(j) + " has component on " + e(k) + " of wrong parity";
            break;
          }
    if (wit.empty() && vector_parity(*par, a.unit()) != 0) wit = "unit is not even";
    for (int i = 0; i < d && wit.empty(); ++i) {
      for (auto [p, q] : h.comult[i].support())
        if (((*par)[p] ^ (*par)[q]) != (*par)[i]) {
          wit = "Delta(" + e(i) + ") has component " + at(std::pair<int, int>{p, q}) + " of wrong parity";
          break;
        }
      if (wit.empty() && (*par)[i] && !h.counit[i].is_zero()) wit = "counit nonzero on odd " + e(i);
      if (wit.empty() && vector_parity(*par, h.antipode.column(i)) != -1 &&
          !is_zero_vec(h.antipode.column(i)) && vector_parity(*par, h.antipode.column(i)) != (*par)[i])
        wit = "S(" + e(i) + ") has wrong parity";
      if (wit.empty() && vector_parity(*par, h.antipode.column(i)) == -1) wit = "S(" + e(i) + ") is not homogeneous";
    }
    rep.add("grading", wit.empty(), wit);
  }

  std::string wit;
  long bad = kernels::first_failure(ex, d, [&](long i) {
    Tensor3 l = kernels::serial::comult_left(h.comult, h.comult[i]);
    Tensor3 r = kernels::serial::comult_right(h.comult, h.comult[i]);
    return l != r;
  });
  if (bad >= 0) {
    Tensor3 l = kernels::serial::comult_left(h.comult, h.comult[bad]);
    Tensor3 r = kernels::serial::comult_right(h.comult, h.comult[bad]);
    wit = "(Delta x id)Delta(" + e(static_cast<int>(bad)) + ") != (id x Delta)Delta(" + e(static_cast<int>(bad)) +
          ") at " + at(l.first_difference(r));
  }
  rep.add("coassociativity", wit.empty(), wit);

  wit.clear();
  for (int i = 0; i < d && wit.empty(); ++i) {
    Vec left(d), right(d);
    for (auto [p, q] : h.comult[i].support()) {
      const Cyclotomic& c = h.comult[i](p, q);
      if (!h.counit[p].is_zero()) left[q] += h.counit[p] * c;
      if (!h.counit[q].is_zero()) right[p] += h.counit[q] * c;
    }
    if (left != unit_vec(d, i)) wit = "(eps x id)Delta(" + e(i) + ") != " + e(i);
    else if (right != unit_vec(d, i)) wit = "(id x eps)Delta(" + e(i) + ") != " + e(i);
  }
  rep.add("counit", wit.empty(), wit);

  wit.clear();
  bad = kernels::first_failure(ex, static_cast<long>(d) * d, [&](long n) {
    int i = static_cast<int>(n / d), j = static_cast<int>(n % d);
    Tensor2 lhs = comult_of(h.comult, d, a.basis_product(i, j));
    Tensor2 rhs = kernels::serial::mul2(a, a, par, par, h.comult[i], h.comult[j]);
    return lhs != rhs;
  });
  if (bad >= 0) {
    int i = static_cast<int>(bad / d), j = static_cast<int>(bad % d);
    Tensor2 lhs = comult_of(h.comult, d, a.basis_product(i, j));
    Tensor2 rhs = kernels::serial::mul2(a, a, par, par, h.comult[i], h.comult[j]);
    wit = "Delta(" + e(i) + " " + e(j) + ") != Delta(" + e(i) + ") Delta(" + e(j) + ") at " +
          at(lhs.first_difference(rhs));
  }
  rep.add("comultiplicativity", wit.empty(), wit);

  wit.clear();
  Tensor2 unit_image = h.coproduct(a.unit());
  if (unit_image != Tensor2::pure(a.unit(), a.unit())) wit = "Delta(1) != 1 x 1 at " + at(unit_image.first_difference(Tensor2::pure(a.unit(), a.unit())));
  rep.add("comultiplication unital", wit.empty(), wit);

  wit.clear();
  if (h.eps(a.unit()) != Cyclotomic(1)) wit = "eps(1) != 1";
  for (int i = 0; i < d && wit.empty(); ++i)
    for (int j = 0; j < d && wit.empty(); ++j)
      if (h.eps(a.basis_product(i, j)) != h.counit[i] * h.counit[j])
        wit = "eps(" + e(i) + " " + e(j) + ") != eps(" + e(i) + ") eps(" + e(j) + ")";
  rep.add("counit multiplicative", wit.empty(), wit);

  wit.clear();
  for (int i = 0; i < d && wit.empty(); ++i) {
    Vec left(d), right(d);
    for (auto [p, q] : h.comult[i].support()) {
      const Cyclotomic& c = h.comult[i](p, q);
      Vec sp = h.antipode.column(p);
      Vec sq = h.antipode.column(q);
      left = add(left, scale(a.multiply(sp, unit_vec(d, q)), c));
      right = add(right, scale(a.multiply(unit_vec(d, p), sq), c));
    }
    Vec target = scale(a.unit(), h.counit[i]);
    if (left != target) wit = "m(S x id)Delta(" + e(i) + ") != eps(" + e(i) + ")1";
    else if (right != target) wit = "m(id x S)Delta(" + e(i) + ") != eps(" + e(i) + ")1";
  }
  rep.add("antipode", wit.empty(), wit);
  return rep;
}

Report verify_hopf_map(const HopfPresentation& from, const HopfPresentation& to, const Matrix& f) {
  Report rep;
  int d = from.dim();
  if (f.cols() != d || f.rows() != to.dim()) {
    rep.add("shape", false, "map is not dim(to) x dim(from)");
    return rep;
  }
  std::string wit;
  for (int i = 0; i < d && wit.empty(); ++i)
    for (int j = 0; j < d && wit.empty(); ++j)
      if (f.apply(from.algebra.basis_product(i, j)) != to.mul(f.column(i), f.column(j)))
        wit = "f(" + e(i) + " " + e(j) + ") != f(" + e(i) + ") f(" + e(j) + ")";
  if (wit.empty() && f.apply(from.one()) != to.one()) wit = "f(1) != 1";
  rep.add("algebra map", wit.empty(), wit);

  wit.clear();
  for (int i = 0; i < d && wit.empty(); ++i) {
    Tensor2 lhs = apply_maps(f, f, from.comult[i]);
    Tensor2 rhs = to.coproduct(f.column(i));
    if (lhs != rhs) wit = "(f x f)Delta(" + e(i) + ") != Delta(f(" + e(i) + ")) at " + at(lhs.first_difference(rhs));
    else if (to.eps(f.column(i)) != from.counit[i]) wit = "eps(f(" + e(i) + ")) != eps(" + e(i) + ")";
  }
  rep.add("coalgebra map", wit.empty(), wit);

  wit.clear();
  Matrix fs = f * from.antipode, sf = to.antipode * f;
  for (int i = 0; i < d && wit.empty(); ++i)
    if (fs.column(i) != sf.column(i)) wit = "f(S(" + e(i) + ")) != S(f(" + e(i) + "))";
  rep.add("antipode", wit.empty(), wit);

  if (from.is_super() || to.is_super()) {
    wit.clear();
    if (from.is_super() != to.is_super()) wit = "only one side is super";
    for (int i = 0; i < d && wit.empty(); ++i) {
      int p = vector_parity(*to.parity_ptr(), f.column(i));
      if (p != -1 && !is_zero_vec(f.column(i)) && p != (*from.parity_ptr())[i]) wit = "f changes the parity of " + e(i);
      if (p == -1) wit = "f(" + e(i) + ") is not homogeneous";
    }
    rep.add("even map", wit.empty(), wit);
  }

  int r = rank(f);
  rep.add("bijective", r == d && d == to.dim(), "rank " + std::to_string(r));
  return rep;
}

HopfPresentation group_algebra(const FiniteGroup& g, int conductor) {
  int n = g.order();
  HopfPresentation h;
  h.algebra = group_algebra_structure(g, conductor);
  h.comult.reserve(n);
  h.counit.assign(n, Cyclotomic(1));
  h.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    Tensor2 t(n, n);
    t(i, i) = Cyclotomic(1);
    h.comult.push_back(std::move(t));
    h.antipode(g.inv(i), i) = Cyclotomic(1);
  }
  return h;
}

HopfPresentation dual_hopf(const HopfPresentation& h) {
  if (h.is_super()) throw UsageError("dual of a Hopf superalgebra is not supported");
  int d = h.dim();
  HopfPresentation out;
  out.algebra = StructureAlgebra(d, h.conductor());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v(d);
      for (int k = 0; k < d; ++k) v[k] = h.comult[k](i, j);
      out.algebra.set_product(i, j, v);
    }
  out.algebra.set_unit(h.counit);
  out.comult.assign(d, Tensor2(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : h.algebra.product(i, j)) out.comult[k](i, j) = c;
  out.counit = h.algebra.unit();
  out.antipode = h.antipode.transpose();
  return out;
}

Tensor2 tensor_flip(const Tensor2& x) { return x.flip(); }

Tensor2 tensor_op(const HopfPresentation& h, const Tensor2& x) {
  Tensor2 out = x.flip();
  if (!h.is_super()) return out;
  const Parity& p = *h.parity;
  for (auto [i, j] : out.support())
    if (p[i] & p[j]) out(i, j) = -out(i, j);
  return out;
}

HopfPresentation co_opposite(const HopfPresentation& h) {
  HopfPresentation out = h;
  for (auto& t : out.comult) t = tensor_op(h, t);
  auto inv = inverse(h.antipode);
  if (!inv) throw StructureError("antipode is not invertible");
  out.antipode = *inv;
  return out;
}

std::optional<Tensor2> tensor_coords(const Tensor2& x, const CoordinateSolver& c1, const CoordinateSolver& c2) {
  int k1 = c1.size(), k2 = c2.size();
  Matrix mid(k1, x.d2());
  for (int j = 0; j < x.d2(); ++j) {
    Vec col(x.d1());
    for (int i = 0; i < x.d1(); ++i) col[i] = x(i, j);
    if (is_zero_vec(col)) continue;
    auto c = c1.coords(col);
    if (!c) return std::nullopt;
    for (int s = 0; s < k1; ++s) mid(s, j) = (*c)[s];
  }
  Tensor2 out(k1, k2);
  for (int s = 0; s < k1; ++s) {
    Vec row = mid.row(s);
    if (is_zero_vec(row)) continue;
    auto c = c2.coords(row);
    if (!c) return std::nullopt;
    for (int t = 0; t < k2; ++t) out(s, t) = (*c)[t];
  }
  return out;
}

Tensor2 tensor_from_coords(const Tensor2& c, const std::vector<Vec>& b1, const std::vector<Vec>& b2) {
  int d1 = b1.empty() ? 0 : static_cast<int>(b1[0].size());
  int d2 = b2.empty() ? 0 : static_cast<int>(b2[0].size());
  Matrix m1 = Matrix::from_columns(b1, d1);
  Matrix m2 = Matrix::from_columns(b2, d2);
  return Tensor2::from_matrix(m1 * c.as_matrix() * m2.transpose());
}

HopfPresentation change_basis(const HopfPresentation& h, const Matrix& p) {
  int d = h.dim();
  auto pinv = inverse(p);
  if (!pinv || p.rows() != d) throw UsageError("change of basis matrix is not invertible");
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(p.column(j));
  HopfPresentation out;
  out.algebra = StructureAlgebra(d, h.conductor());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.algebra.set_product(i, j, pinv->apply(h.algebra.multiply(cols[i], cols[j])));
  out.algebra.set_unit(pinv->apply(h.algebra.unit()));
  for (int i = 0; i < d; ++i) {
    out.comult.push_back(apply_maps(*pinv, *pinv, h.coproduct(cols[i])));
    out.counit.push_back(h.eps(cols[i]));
  }
  out.antipode = *pinv * h.antipode * p;
  if (h.is_super()) {
    Parity par(d);
    for (int j = 0; j < d; ++j) {
      par[j] = vector_parity(*h.parity, cols[j]);
      if (par[j] < 0) throw UsageError("new basis vector " + std::to_string(j) + " is not homogeneous");
    }
    out.parity = par;
  }
  return out;
}

HopfPresentation sub_hopf(const HopfPresentation& h, const std::vector<Vec>& basis) {
  CoordinateSolver cs(basis);
  int k = cs.size();
  HopfPresentation out;
  out.algebra = restrict_algebra(h.algebra, basis);
  for (int i = 0; i < k; ++i) {
    auto t = tensor_coords(h.coproduct(basis[i]), cs, cs);
    if (!t) throw StructureError("subspace is not closed under comultiplication (basis vector " + std::to_string(i) + ")");
    out.comult.push_back(*t);
    out.counit.push_back(h.eps(basis[i]));
  }
  out.antipode = Matrix(k, k);
  for (int i = 0; i < k; ++i) {
    auto c = cs.coords(h.S(basis[i]));
    if (!c) throw StructureError("subspace is not closed under the antipode (basis vector " + std::to_string(i) + ")");
    for (int j = 0; j < k; ++j) out.antipode(j, i) = (*c)[j];
  }
  if (h.is_super()) {
    Parity par(k);
    for (int i = 0; i < k; ++i) {
      par[i] = vector_parity(*h.parity, basis[i]);
      if (par[i] < 0) throw UsageError("sub-Hopf basis vector " + std::to_string(i) + " is not homogeneous");
    }
    out.parity = par;
  }
  return out;
}

std::vector<Vec> grouplikes(const HopfPresentation& h) {
  int d = h.dim();
  StructureAlgebra dual(d, h.conductor());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v(d);
      for (int k = 0; k < d; ++k) v[k] = h.comult[k](i, j);
      dual.set_product(i, j, v);
    }
  dual.set_unit(h.counit);

  // One-dimensional representations factor through the abelianization.
  Subspace ideal(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) ideal.add(sub(dual.basis_product(i, j), dual.basis_product(j, i)));
  for (size_t n = 0; n < ideal.basis().size(); ++n) {
    Vec v = ideal.basis()[n];
    for (int i = 0; i < d; ++i) {
      ideal.add(dual.multiply(unit_vec(d, i), v));
      ideal.add(dual.multiply(v, unit_vec(d, i)));
    }
  }
  if (ideal.dim() == d) return {};
  Quotient ab = quotient(dual, ideal.basis());
  auto rad = jacobson_radical(ab.algebra);
  Quotient ss = quotient(ab.algebra, rad);
  Matrix proj = ss.projection * ab.projection;
  auto idems = split_commutative(ss.algebra);

  std::vector<Vec> out;
  for (const auto& f : idems) {
    int piv = -1;
    for (int t = 0; t < ss.algebra.dim(); ++t)
      if (!f[t].is_zero()) {
        piv = t;
        break;
      }
    Vec g(d);
    for (int i = 0; i < d; ++i) {
      Vec xf = ss.algebra.multiply(proj.column(i), f);
      g[i] = xf[piv] / f[piv];
    }
    if (h.coproduct(g) != Tensor2::pure(g, g) || h.eps(g) != Cyclotomic(1))
      throw StructureError("character of the dual algebra does not give a grouplike element");
    out.push_back(std::move(g));
  }
  // Put the identity first for readability.
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] == h.one()) {
      std::swap(out[0], out[i]);
      break;
    }
  return out;
}

std::vector<Vec> skew_primitives(const HopfPresentation& h, const Vec& g, const Vec& hh) {
  int d = h.dim();
  Matrix m(d * d, d);
  for (int i = 0; i < d; ++i) {
    Tensor2 t = h.comult[i] - Tensor2::pure(unit_vec(d, i), g) - Tensor2::pure(hh, unit_vec(d, i));
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) m(p * d + q, i) = t(p, q);
  }
  return nullspace(m);
}

bool is_commutative(const HopfPresentation& h) {
  if (!h.is_super()) return h.algebra.is_commutative();
  const Parity& p = *h.parity;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      Vec ij = h.algebra.basis_product(i, j);
      Vec ji = h.algebra.basis_product(j, i);
      if ((p[i] & p[j]) ? ij != scale(ji, Cyclotomic(-1)) : ij != ji) return false;
    }
  return true;
}

bool is_cocommutative(const HopfPresentation& h) {
  for (const auto& t : h.comult)
    if (tensor_op(h, t) != t) return false;
  return true;
}

Matrix antipode_power(const HopfPresentation& h, int k) {
  Matrix out = Matrix::identity(h.dim());
  for (int i = 0; i < k; ++i) out = h.antipode * out;
  return out;
}

Tensor2 one_tensor(const HopfPresentation& h) { return Tensor2::pure(h.one(), h.one()); }

Tensor2 tensor_mul(const HopfPresentation& h, const Tensor2& x, const Tensor2& y, Exec ex) {
  return kernels::mul2(ex, h.algebra, h.algebra, h.parity_ptr(), h.parity_ptr(), x, y);
}

Tensor3 tensor3_mul(const HopfPresentation& h, const Tensor3& x, const Tensor3& y, Exec ex) {
  return kernels::mul3(ex, h.algebra, h.parity_ptr(), x, y);
}

bool is_tensor_inverse(const HopfPresentation& h, const Tensor2& x, const Tensor2& y) {
  Tensor2 one = one_tensor(h);
  return tensor_mul(h, x, y) == one && tensor_mul(h, y, x) == one;
}

StructureAlgebra super_tensor_algebra(const StructureAlgebra& a, const Parity* pa, const StructureAlgebra& b,
                                      const Parity* pb) {
  if (!pa || !pb) return tensor_algebra(a, b);
  int da = a.dim(), db = b.dim();
  StructureAlgebra out(da * db, a.conductor() == 1 ? b.conductor() : a.conductor());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          SparseVec v;
          bool neg = (*pa)[k] & (*pb)[j];
          for (const auto& [m, c1] : a.product(i, k))
            for (const auto& [n, c2] : b.product(j, l)) v.emplace_back(m * db + n, neg ? -(c1 * c2) : c1 * c2);
          out.set_product(i * db + j, k * db + l, std::move(v));
        }
  Vec u(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      if (!a.unit()[i].is_zero() && !b.unit()[j].is_zero()) u[i * db + j] = a.unit()[i] * b.unit()[j];
  out.set_unit(u);
  return out;
}

namespace {

std::vector<Vec> homogeneous_parts(const Parity* p, const std::vector<Vec>& vs) {
  if (!p) return vs;
  std::vector<Vec> out;
  for (const auto& v : vs) {
    Vec ev(v.size()), od(v.size());
    for (size_t i = 0; i < v.size(); ++i) ((*p)[i] ? od : ev)[i] = v[i];
    if (!is_zero_vec(ev)) out.push_back(ev);
    if (!is_zero_vec(od)) out.push_back(od);
  }
  return out;
}

}  // namespace

std::optional<Tensor2> tensor_inverse(const HopfPresentation& h, const Tensor2& x, int max_dim) {
  const Parity* par = h.parity_ptr();
  auto b1 = generated_subalgebra(h.algebra, homogeneous_parts(par, x.left_legs()));
  auto b2 = generated_subalgebra(h.algebra, homogeneous_parts(par, x.right_legs()));
  int k1 = static_cast<int>(b1.size()), k2 = static_cast<int>(b2.size());
  if (k1 * k2 > max_dim) {
    throw BudgetExceeded("tensor inverse needs a " + std::to_string(k1 * k2) + "-dimensional solve (limit " +
                         std::to_string(max_dim) + ")");
  }
  StructureAlgebra a1 = restrict_algebra(h.algebra, b1);
  StructureAlgebra a2 = restrict_algebra(h.algebra, b2);
  std::optional<Parity> p1, p2;
  if (par) {
    p1 = Parity(k1);
    p2 = Parity(k2);
    for (int i = 0; i < k1; ++i) (*p1)[i] = vector_parity(*par, b1[i]);
    for (int i = 0; i < k2; ++i) (*p2)[i] = vector_parity(*par, b2[i]);
    for (int v : *p1)
      if (v < 0) throw StructureError("leg subalgebra basis is not homogeneous");
    for (int v : *p2)
      if (v < 0) throw StructureError("leg subalgebra basis is not homogeneous");
  }
  StructureAlgebra t = super_tensor_algebra(a1, p1 ? &*p1 : nullptr, a2, p2 ? &*p2 : nullptr);
  auto c = tensor_coords(x, CoordinateSolver(b1), CoordinateSolver(b2));
  if (!c) throw StructureError("tensor does not lie in its leg subalgebras");
  Vec xv(k1 * k2);
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k2; ++j) xv[i * k2 + j] = (*c)(i, j);
  auto yv = t.inverse(xv);
  if (!yv) return std::nullopt;
  Tensor2 yc(k1, k2);
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k2; ++j) yc(i, j) = (*yv)[i * k2 + j];
  Tensor2 y = tensor_from_coords(yc, b1, b2);
  if (!is_tensor_inverse(h, x, y)) throw StructureError("tensor inverse failed verification");
  return y;
}

Tensor2 apply_maps(const Matrix& f, const Matrix& g, const Tensor2& x) {
  return Tensor2::from_matrix(f * x.as_matrix() * g.transpose());
}

Vec multiply_legs(const HopfPresentation& h, const Tensor2& x) {
  Vec out(h.dim());
  for (auto [i, j] : x.support())
    for (const auto& [k, c] : h.algebra.product(i, j)) out[k] += x(i, j) * c;
  return out;
}

HopfPresentation extend_scalars(const HopfPresentation& h, int conductor) {
  if (conductor < 1 || conductor % h.conductor() != 0)
    throw UsageError("conductor " + std::to_string(conductor) + " is not a multiple of " + std::to_string(h.conductor()));
  auto lift = [conductor](const Cyclotomic& c) { return c.is_zero() ? c : embed(c, conductor); };
  int n = h.dim();
  HopfPresentation out = h;
  out.algebra = StructureAlgebra(n, conductor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec v = h.algebra.product(i, j);
      for (auto& [k, c] : v) c = lift(c);
      out.algebra.set_product(i, j, std::move(v));
    }
  Vec u = h.one();
  for (auto& c : u) c = lift(c);
  out.algebra.set_unit(u);
  for (auto& t : out.comult) t = extend_scalars(t, conductor);
  for (auto& c : out.counit) c = lift(c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.antipode(i, j) = lift(h.antipode(i, j));
  return out;
}

Tensor2 extend_scalars(const Tensor2& t, int conductor) {
  Tensor2 out = t;
  for (auto [i, j] : t.support()) out(i, j) = embed(t(i, j), conductor);
  return out;
}

}  // namespace trihopf
