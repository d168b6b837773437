#include "trihopf/twist.hpp"

#include <algorithm>
#include <numeric>

#include "trihopf/errors.hpp"
#include "trihopf/recognize.hpp"

namespace trihopf {

namespace {

std::string idx3(Tensor3::Index p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

Vec left_counit(const HopfPresentation& h, const Tensor2& x) {
  Vec out(h.dim());
  for (auto [p, q] : x.support())
    if (!h.counit[p].is_zero()) out[q] += h.counit[p] * x(p, q);
  return out;
}

Vec right_counit(const HopfPresentation& h, const Tensor2& x) {
  Vec out(h.dim());
  for (auto [p, q] : x.support())
    if (!h.counit[q].is_zero()) out[p] += h.counit[q] * x(p, q);
  return out;
}

}  // namespace

TwistCheck check_twist(const HopfPresentation& h, const Tensor2& j, Exec ex, const Tensor2* inverse_hint) {
  TwistCheck out;
  int d = h.dim();
  if (j.d1() != d || j.d2() != d) {
    out.report.add("shape", false, "J is not in A (x) A");
    return out;
  }
  Vec one = h.one();
  std::string wit;
  if (left_counit(h, j) != one) wit = "(eps x id)(J) != 1";
  else if (right_counit(h, j) != one) wit = "(id x eps)(J) != 1";
  out.report.add("counit normalization", wit.empty(), wit);

  wit.clear();
  Tensor3 lhs = kernels::mul3(ex, h.algebra, h.parity_ptr(), kernels::comult_left(ex, h.comult, j), embed12(j, one));
  Tensor3 rhs = kernels::mul3(ex, h.algebra, h.parity_ptr(), kernels::comult_right(ex, h.comult, j), embed23(one, j));
  if (lhs != rhs) wit = "(Delta x id)(J)(J x 1) != (id x Delta)(J)(1 x J) at " + idx3(lhs.first_difference(rhs));
  out.report.add("twist equation", wit.empty(), wit);
  bool quasi = out.report.passed();

  wit.clear();
  std::optional<Tensor2> inv;
  try {
    if (inverse_hint && is_tensor_inverse(h, j, *inverse_hint)) inv = *inverse_hint;
    else inv = tensor_inverse(h, j);
    if (!inv) wit = "J is not invertible";
  } catch (const BudgetExceeded& e) {
    wit = std::string("inverse not determined: ") + e.what();
  }
  out.report.add("invertible", inv.has_value(), wit);
  if (!quasi) {
    out.status = TwistStatus::not_quasitwist;
  } else if (!inv) {
    out.status = TwistStatus::singular_quasitwist;
  } else {
    out.status = TwistStatus::twist;
    out.twist = Twist{j, *inv};
  }
  return out;
}

Twist verify_twist(const HopfPresentation& h, const Tensor2& j, Exec ex, const Tensor2* inverse_hint) {
  TwistCheck c = check_twist(h, j, ex, inverse_hint);
  if (c.status != TwistStatus::twist) {
    const AxiomResult* f = c.report.failure();
    std::string what = c.status == TwistStatus::singular_quasitwist ? "quasitwist is not invertible" : "not a quasitwist";
    throw StructureError(what + (f ? ": " + f->name + " (" + f->witness + ")" : ""));
  }
  return *c.twist;
}

Twist gauge(const HopfPresentation& h, const Twist& t, const Vec& x) {
  if (h.eps(x) != Cyclotomic(1)) throw UsageError("gauge element must have counit 1");
  auto xi = h.algebra.inverse(x);
  if (!xi) throw UsageError("gauge element is not invertible");
  Twist out;
  out.j = tensor_mul(h, tensor_mul(h, h.coproduct(x), t.j), Tensor2::pure(*xi, *xi));
  out.inverse = tensor_mul(h, tensor_mul(h, Tensor2::pure(x, x), t.inverse), h.coproduct(*xi));
  if (!is_tensor_inverse(h, out.j, out.inverse)) throw StructureError("gauge transform lost invertibility");
  return out;
}

HopfPresentation twist_hopf(const HopfPresentation& h, const Twist& t) {
  int d = h.dim();
  HopfPresentation out = h;
  for (int i = 0; i < d; ++i) out.comult[i] = tensor_mul(h, tensor_mul(h, t.inverse, h.comult[i]), t.j);
  Vec q = multiply_legs(h, apply_maps(h.antipode, Matrix::identity(d), t.j));
  auto qi = h.algebra.inverse(q);
  if (!qi) throw StructureError("Q = m(S x id)(J) is not invertible");
  Matrix lq = h.algebra.left_mult(*qi);
  Matrix rq = h.algebra.right_mult(q);
  out.antipode = lq * rq * h.antipode;
  return out;
}

Tensor2 twist_r(const HopfPresentation& h, const Tensor2& r, const Twist& t) {
  return tensor_mul(h, tensor_mul(h, tensor_op(h, t.inverse), r), t.j);
}

Twist inverse_twist(const HopfPresentation& twisted, const Twist& t) {
  (void)twisted;
  return Twist{t.inverse, t.j};
}

Twist abelian_twist(const FiniteGroup& a, const TwoCocycle& c, int conductor) {
  if (!a.is_abelian()) throw UsageError("abelian_twist needs an abelian group");
  CharacterGroup cg = character_group(a);
  int n = a.order();
  if (c.order != n) throw UsageError("cocycle must live on the character group");
  if (!c(0, 0).is_one()) throw UsageError("cocycle must satisfy c(1,1) = 1");
  auto err = cocycle_violation(cg.dual, c);
  if (!err.empty()) throw UsageError("not a 2-cocycle: " + err);
  Cyclotomic inv_n = Cyclotomic(Rational(1, n));
  std::vector<Vec> e(n, Vec(n));
  for (int chi = 0; chi < n; ++chi)
    for (int g = 0; g < n; ++g) e[chi][g] = inv_n * cg.characters[chi].value(g, conductor).inv();
  Tensor2 j(n, n);
  for (int chi = 0; chi < n; ++chi)
    for (int psi = 0; psi < n; ++psi) {
      const Cyclotomic& v = c(chi, psi);
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) j(g, h) += v * e[chi][g] * e[psi][h];
    }
  return verify_twist(group_algebra(a, conductor), j);
}

Cyclotomic evaluate_characters(const FiniteGroup& a, const Tensor2& j, int chi, int psi, int conductor) {
  CharacterGroup cg = character_group(a);
  Cyclotomic s;
  for (auto [g, h] : j.support())
    s += j(g, h) * cg.characters[chi].value(g, conductor) * cg.characters[psi].value(h, conductor);
  return s;
}

Report verify_g_coalgebra(const FiniteGroup& g, const GCoalgebra& c) {
  Report rep;
  int d = c.dim;
  std::string wit;
  for (int i = 0; i < d && wit.empty(); ++i)
    if (kernels::serial::comult_left(c.comult, c.comult[i]) != kernels::serial::comult_right(c.comult, c.comult[i]))
      wit = "coassociativity fails on basis vector " + std::to_string(i);
  rep.add("coassociativity", wit.empty(), wit);
  wit.clear();
  for (int i = 0; i < d && wit.empty(); ++i) {
    Vec l(d), r(d);
    for (auto [p, q] : c.comult[i].support()) {
      if (!c.counit[p].is_zero()) l[q] += c.counit[p] * c.comult[i](p, q);
      if (!c.counit[q].is_zero()) r[p] += c.counit[q] * c.comult[i](p, q);
    }
    if (l != unit_vec(d, i) || r != unit_vec(d, i)) wit = "counit law fails on basis vector " + std::to_string(i);
  }
  rep.add("counit", wit.empty(), wit);
  wit.clear();
  if (c.action[0] != Matrix::identity(d)) wit = "identity does not act trivially";
  for (int a = 0; a < g.order() && wit.empty(); ++a)
    for (int b = 0; b < g.order() && wit.empty(); ++b)
      if (c.action[a] * c.action[b] != c.action[g.mul(a, b)])
        wit = "action of " + std::to_string(a) + " then " + std::to_string(b) + " is not the product";
  rep.add("group action", wit.empty(), wit);
  wit.clear();
  for (int a = 0; a < g.order() && wit.empty(); ++a) {
    const Matrix& m = c.action[a];
    for (int i = 0; i < d && wit.empty(); ++i) {
      Vec gi = m.column(i);
      Tensor2 lhs(d, d);
      Cyclotomic eps;
      for (int k = 0; k < d; ++k)
        if (!gi[k].is_zero()) {
          lhs += c.comult[k].scaled(gi[k]);
          eps += gi[k] * c.counit[k];
        }
      if (lhs != apply_maps(m, m, c.comult[i])) wit = "Delta(g c) != (g x g) Delta(c) for g = " + std::to_string(a) + ", c = " + std::to_string(i);
      else if (eps != c.counit[i]) wit = "eps(g c) != eps(c) for g = " + std::to_string(a) + ", c = " + std::to_string(i);
    }
  }
  rep.add("action by coalgebra maps", wit.empty(), wit);
  return rep;
}

GCoalgebra twisted_coalgebra(const FiniteGroup& g, const Tensor2& j, int conductor) {
  int n = g.order();
  GCoalgebra c;
  c.dim = n;
  c.conductor = conductor;
  c.counit.assign(n, Cyclotomic(1));
  c.comult.assign(n, Tensor2(n, n));
  for (int a = 0; a < n; ++a)
    for (auto [h, k] : j.support()) c.comult[a](g.mul(a, h), g.mul(a, k)) += j(h, k);
  for (int a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (int h = 0; h < n; ++h) m(g.mul(a, h), h) = Cyclotomic(1);
    c.action.push_back(std::move(m));
  }
  return c;
}

GCoalgebra dual_twisted_group_coalgebra(const FiniteGroup& h, const TwoCocycle& c, int conductor) {
  int n = h.order();
  GCoalgebra out;
  out.dim = n;
  out.conductor = conductor;
  out.comult.assign(n, Tensor2(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.comult[h.mul(a, b)](a, b) = c(a, b);
  out.counit.assign(n, Cyclotomic(0));
  out.counit[0] = c(0, 0).inv();
  // X_h X_a X_h^-1 = kappa(h, a) X_{h a h^-1}
  auto kappa = [&](int x, int a) {
    return c(x, a) * c(h.mul(x, a), h.inv(x)) / (c(x, h.inv(x)) * c(0, 0));
  };
  for (int x = 0; x < n; ++x) {
    Matrix m(n, n);
    for (int g = 0; g < n; ++g) {
      int t = h.conj(x, g);
      m(t, g) = kappa(h.inv(x), t);
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

Report verify_g_coalgebra_map(const FiniteGroup& g, const GCoalgebra& from, const GCoalgebra& to, const Matrix& f) {
  Report rep;
  rep.add("bijective", rank(f) == from.dim && from.dim == to.dim, rank(f) == from.dim ? "" : "map is singular");
  std::string wit;
  for (int a = 0; a < g.order() && wit.empty(); ++a)
    if (f * from.action[a] != to.action[a] * f) wit = "not equivariant for group element " + std::to_string(a);
  rep.add("equivariant", wit.empty(), wit);
  wit.clear();
  for (int i = 0; i < from.dim && wit.empty(); ++i) {
    Vec fi = f.column(i);
    Tensor2 lhs(to.dim, to.dim);
    Cyclotomic eps;
    for (int k = 0; k < to.dim; ++k)
      if (!fi[k].is_zero()) {
        lhs += to.comult[k].scaled(fi[k]);
        eps += fi[k] * to.counit[k];
      }
    if (lhs != apply_maps(f, f, from.comult[i])) wit = "comultiplication not preserved on basis vector " + std::to_string(i);
    else if (eps != from.counit[i]) wit = "counit not preserved on basis vector " + std::to_string(i);
  }
  rep.add("coalgebra map", wit.empty(), wit);
  return rep;
}

StructureAlgebra movshev_dual_algebra(const FiniteGroup& g, const Tensor2& j, int conductor) {
  int n = g.order();
  StructureAlgebra a(n, conductor);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec v(n);
      for (int k = 0; k < n; ++k) {
        int gi = g.inv(k);
        v[k] = j(g.mul(gi, x), g.mul(gi, y));
      }
      a.set_product(x, y, v);
    }
  a.set_unit(Vec(n, Cyclotomic(1)));
  if (!jacobson_radical(a).empty()) throw StructureError("dual of the twisted coalgebra is not semisimple");
  return a;
}

Subgroup movshev_stabilizer(const FiniteGroup& g, const Tensor2& j, int conductor) {
  int n = g.order();
  StructureAlgebra a = movshev_dual_algebra(g, j, conductor);
  auto idem = primitive_central_idempotents(a);
  const Vec& e = idem.at(0);
  std::vector<int> st;
  for (int x = 0; x < n; ++x) {
    Vec moved(n);
    for (int y = 0; y < n; ++y) moved[g.mul(x, y)] = e[y];
    if (moved == e) st.push_back(x);
  }
  return make_subgroup(g, st);
}

Extraction extract_quasitwist(const FiniteGroup& g, const GCoalgebra& c) {
  int n = c.dim;
  if (n != g.order()) throw UsageError("coalgebra dimension differs from the group order");
  auto attempt = [&](Vec lambda) -> std::optional<Extraction> {
    Cyclotomic e;
    for (int i = 0; i < n; ++i)
      if (!lambda[i].is_zero()) e += lambda[i] * c.counit[i];
    if (e.is_zero()) return std::nullopt;
    lambda = scale(lambda, e.inv());
    std::vector<Vec> cols;
    for (int a = 0; a < n; ++a) cols.push_back(c.action[a].apply(lambda));
    Matrix m = Matrix::from_columns(cols, n);
    auto mi = inverse(m);
    if (!mi) return std::nullopt;
    Tensor2 dl(n, n);
    for (int i = 0; i < n; ++i)
      if (!lambda[i].is_zero()) dl += c.comult[i].scaled(lambda[i]);
    Extraction out;
    out.j = apply_maps(*mi, *mi, dl);
    out.lambda = lambda;
    out.iso = m;
    return out;
  };
  for (int i = 0; i < n; ++i)
    if (auto r = attempt(unit_vec(n, i))) return *r;
  if (n > 20) throw BudgetExceeded("lambda search beyond basis vectors needs dimension at most 20");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    Vec l(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) l[i] = Cyclotomic(1);
    if (auto r = attempt(l)) return *r;
  }
  throw StructureError("no lambda with a free orbit found; the coalgebra is not the regular representation");
}

namespace {

std::optional<Vec> coboundary_gauge(const HopfPresentation& h, const Tensor2& j1, const Tensor2& j2) {
  int d = h.dim();
  if (!h.algebra.is_commutative() || !jacobson_radical(h.algebra).empty()) return std::nullopt;
  std::vector<Vec> idem;
  try {
    idem = split_commutative(h.algebra);
  } catch (const NonSplitError&) {
    return std::nullopt;
  }
  if (static_cast<int>(idem.size()) != d) return std::nullopt;
  Matrix p = Matrix::from_columns(idem, d);
  Matrix pi = *inverse(p);
  // Delta(E_k) is a sum of E_i (x) E_j; record k for each (i, j).
  std::vector<std::vector<int>> table(d, std::vector<int>(d, -1));
  for (int k = 0; k < d; ++k) {
    Tensor2 t = apply_maps(pi, pi, h.coproduct(idem[k]));
    for (auto [i, jj] : t.support()) {
      if (!t(i, jj).is_one() || table[i][jj] != -1) return std::nullopt;
      table[i][jj] = k;
    }
  }
  int o = -1;
  for (int k = 0; k < d; ++k)
    if (h.eps(idem[k]).is_one()) o = k;
  if (o < 0) return std::nullopt;
  Tensor2 a1 = apply_maps(pi, pi, j1);
  Tensor2 a2 = apply_maps(pi, pi, j2);
  // relabel so that the counit idempotent is 0
  std::vector<int> lab(d), unlab(d);
  std::iota(unlab.begin(), unlab.end(), 0);
  std::swap(unlab[0], unlab[o]);
  for (int i = 0; i < d; ++i) lab[unlab[i]] = i;
  std::vector<std::vector<int>> rel(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < d; ++jj) {
      int k = table[unlab[i]][unlab[jj]];
      if (k < 0) return std::nullopt;
      rel[i][jj] = lab[k];
    }
  FiniteGroup grp;
  try {
    grp = FiniteGroup::from_cayley_table(rel);
  } catch (const StructureError&) {
    return std::nullopt;
  }
  if (!grp.is_abelian()) return std::nullopt;
  auto t = [&](int x, int y) -> Cyclotomic {
    const Cyclotomic& den = a1(unlab[x], unlab[y]);
    return a2(unlab[x], unlab[y]) / den;
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (a1(unlab[x], unlab[y]).is_zero()) return std::nullopt;
  AbelianBasis ab = abelian_basis(grp);
  // b on powers of each generator
  std::vector<std::vector<Cyclotomic>> pw;
  for (size_t r = 0; r < ab.generators.size(); ++r) {
    int gen = ab.generators[r], n = ab.orders[r];
    std::vector<Cyclotomic> prod(n + 1, Cyclotomic(1));
    int cur = gen;
    for (int m = 2; m <= n; ++m) {
      prod[m] = prod[m - 1] * t(cur, gen);
      cur = grp.mul(cur, gen);
    }
    auto roots = field_roots(prod[n].inv(), n, h.conductor());
    if (roots.empty()) return std::nullopt;
    const Cyclotomic& beta = roots[0];
    std::vector<Cyclotomic> b(n, Cyclotomic(1));
    Cyclotomic bp = Cyclotomic(1);
    for (int m = 1; m < n; ++m) {
      bp *= beta;
      b[m] = bp * prod[m];
    }
    pw.push_back(std::move(b));
  }
  Vec b(d);
  for (int x = 0; x < d; ++x) {
    int cur = 0;
    Cyclotomic val = Cyclotomic(1);
    for (size_t r = 0; r < ab.generators.size(); ++r) {
      int e = ab.coords[x][r];
      int piece = grp.pow(ab.generators[r], e);
      val = val * pw[r][e] * t(cur, piece);
      cur = grp.mul(cur, piece);
    }
    b[x] = val;
  }
  Vec x(d);
  for (int i = 0; i < d; ++i) x = add(x, scale(idem[unlab[i]], b[i]));
  return x;
}

}  // namespace

GaugeSearch find_gauge(const HopfPresentation& h, const Tensor2& j1, const Tensor2& j2, long budget) {
  GaugeSearch out;
  int d = h.dim();
  auto inv1 = tensor_inverse(h, j1);
  if (!inv1) {
    out.note = "first tensor is not invertible";
    return out;
  }
  auto try_x = [&](Vec x) {
    ++out.evaluations;
    Cyclotomic e = h.eps(x);
    if (e.is_zero()) return false;
    x = scale(x, e.inv());
    if (!h.algebra.inverse(x)) return false;
    Tensor2 j = tensor_mul(h, tensor_mul(h, h.coproduct(x), j1), Tensor2::pure(*h.algebra.inverse(x), *h.algebra.inverse(x)));
    if (j != j2) return false;
    out.found = true;
    out.x = x;
    return true;
  };
  std::vector<Vec> gl;
  try {
    gl = grouplikes(h);
  } catch (const NonSplitError&) {
  }
  for (const auto& g : gl) {
    if (out.evaluations >= budget) break;
    if (try_x(g)) {
      out.note = "grouplike";
      return out;
    }
  }
  if (out.evaluations < budget) {
    if (auto x = coboundary_gauge(h, j1, j2)) {
      if (try_x(*x)) {
        out.note = "coboundary";
        return out;
      }
    }
  }
  if (d <= 24) {
    for (unsigned long mask = 1; mask < (1UL << d) && out.evaluations < budget; ++mask) {
      Vec x(d);
      for (int i = 0; i < d; ++i)
        if (mask & (1UL << i)) x[i] = Cyclotomic(1);
      if (try_x(x)) {
        out.note = "0/1 support";
        return out;
      }
    }
  }
  out.note = "inconclusive";
  return out;
}

}  // namespace trihopf
