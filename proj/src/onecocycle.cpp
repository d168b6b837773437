#include "trihopf/onecocycle.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "trihopf/errors.hpp"
#include "trihopf/rmatrix.hpp"

namespace trihopf {

namespace {

std::string s(int v) { return std::to_string(v); }

std::string pos(std::pair<int, int> p) { return "(" + s(p.first) + "," + s(p.second) + ")"; }

// (g.chi)(x) = chi(g^-1 . x), as a table over character indices.
std::vector<std::vector<int>> dual_action(const CocycleDatum& d, const CharacterGroup& cg) {
  std::map<std::vector<int>, int> index;
  for (int chi = 0; chi < static_cast<int>(cg.characters.size()); ++chi) index[cg.characters[chi].exps] = chi;
  int na = d.a.order();
  std::vector<std::vector<int>> out(d.g.order(), std::vector<int>(na));
  for (int g = 0; g < d.g.order(); ++g) {
    int gi = d.g.inv(g);
    for (int chi = 0; chi < na; ++chi) {
      std::vector<int> e(na);
      for (int x = 0; x < na; ++x) e[x] = cg.characters[chi].exps[d.action[gi][x]];
      auto it = index.find(e);
      if (it == index.end()) throw StructureError("action of " + s(g) + " does not permute the characters");
      out[g][chi] = it->second;
    }
  }
  return out;
}

}  // namespace

CocycleDatum klein_on_z4_datum() {
  CocycleDatum d;
  d.g = direct_product(cyclic_group(2), cyclic_group(2));  // (i,j) at 2i+j
  d.g.set_names({"1", "y", "x", "xy"});
  d.a = cyclic_group(4);
  d.a.set_names({"1", "a", "a^2", "a^3"});
  d.action.assign(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int k = 0; k < 4; ++k) d.action[g][k] = (g % 2 == 1) ? (4 - k) % 4 : k;
  d.pi = {0, 1, 2, 3};
  return d;
}

CocycleDatum s3_on_z6_datum() {
  CocycleDatum d;
  d.g = symmetric_group(3);
  d.a = direct_product(cyclic_group(2), cyclic_group(3));  // (a,b) at 3a+b
  d.action.assign(6, std::vector<int>(6));
  d.pi.assign(6, 0);
  const std::vector<std::pair<std::string, int>> pi2 = {{"()", 0},    {"(1 2 3)", 1}, {"(1 3 2)", 2},
                                                        {"(1 2)", 2}, {"(1 3)", 0},   {"(2 3)", 1}};
  for (const auto& [name, b] : pi2) {
    int g = d.g.find(name);
    if (g < 0) throw std::logic_error("missing permutation " + name);
    bool odd = name.size() == 5;
    d.pi[g] = (odd ? 3 : 0) + b;
    for (int x = 0; x < 6; ++x) d.action[g][x] = (x / 3) * 3 + (odd ? (3 - x % 3) % 3 : x % 3);
  }
  return d;
}

CocycleDatum identity_datum(const FiniteGroup& a) {
  if (!a.is_abelian()) throw UsageError("identity datum needs an abelian group");
  CocycleDatum d;
  d.g = a;
  d.a = a;
  d.action.assign(a.order(), std::vector<int>(a.order()));
  d.pi.resize(a.order());
  for (int g = 0; g < a.order(); ++g) {
    d.pi[g] = g;
    for (int x = 0; x < a.order(); ++x) d.action[g][x] = x;
  }
  return d;
}

Report verify_cocycle(const CocycleDatum& d) {
  Report rep;
  int ng = d.g.order(), na = d.a.order();
  if (static_cast<int>(d.action.size()) != ng || static_cast<int>(d.pi.size()) != ng) {
    rep.add("shape", false, "action or pi not indexed by G");
    return rep;
  }
  for (const auto& row : d.action)
    if (static_cast<int>(row.size()) != na) {
      rep.add("shape", false, "action row not indexed by A");
      return rep;
    }
  for (int v : d.pi)
    if (v < 0 || v >= na) {
      rep.add("shape", false, "pi takes a value outside A");
      return rep;
    }
  rep.add("orders agree", ng == na, ng == na ? "" : "|G| = " + s(ng) + ", |A| = " + s(na));

  std::string wit;
  for (int x = 0; x < na && wit.empty(); ++x)
    if (d.action[0][x] != x) wit = "identity moves " + s(x);
  for (int g = 0; g < ng && wit.empty(); ++g)
    for (int x = 0; x < na && wit.empty(); ++x)
      for (int y = 0; y < na && wit.empty(); ++y)
        if (d.action[g][d.a.mul(x, y)] != d.a.mul(d.action[g][x], d.action[g][y]))
          wit = s(g) + " is not multiplicative on " + pos({x, y});
  for (int g = 0; g < ng && wit.empty(); ++g)
    for (int h = 0; h < ng && wit.empty(); ++h)
      for (int x = 0; x < na && wit.empty(); ++x)
        if (d.action[d.g.mul(g, h)][x] != d.action[g][d.action[h][x]])
          wit = "(gh).x != g.(h.x) at (g,h,x) = (" + s(g) + "," + s(h) + "," + s(x) + ")";
  rep.add("action by automorphisms", wit.empty(), wit);

  wit.clear();
  for (int g = 0; g < ng && wit.empty(); ++g)
    for (int h = 0; h < ng && wit.empty(); ++h)
      if (d.pi[d.g.mul(g, h)] != d.a.mul(d.pi[g], d.action[g][d.pi[h]]))
        wit = "pi(gh) != pi(g) g.pi(h) at " + pos({g, h});
  rep.add("cocycle identity", wit.empty(), wit);

  wit.clear();
  std::vector<int> seen(na, -1);
  for (int g = 0; g < ng && wit.empty(); ++g) {
    if (seen[d.pi[g]] >= 0) wit = "pi(" + s(seen[d.pi[g]]) + ") = pi(" + s(g) + ")";
    seen[d.pi[g]] = g;
  }
  if (wit.empty() && ng != na) wit = "orders differ";
  rep.add("bijective", wit.empty(), wit);
  return rep;
}

std::vector<int> pi_inverse(const CocycleDatum& d) {
  int na = d.a.order();
  if (static_cast<int>(d.pi.size()) != na) throw StructureError("pi cannot be bijective: |G| != |A|");
  std::vector<int> inv(na, -1);
  for (int g = 0; g < na; ++g) {
    if (inv[d.pi[g]] >= 0) throw StructureError("pi is not injective: pi(" + s(inv[d.pi[g]]) + ") = pi(" + s(g) + ")");
    inv[d.pi[g]] = g;
  }
  return inv;
}

Cyclotomic DoubledDatum::pairing(int x, int chi) const { return chars.characters[chi].value(x, conductor); }

// gt.pair(g, b') = g b' = (g.b') g.
std::pair<int, int> DoubledDatum::split(int h) const {
  int g = gt.q_part(h);
  return {chi_action[g][gt.a_part(h)], g};
}

DoubledDatum double_datum(const CocycleDatum& d) {
  if (!d.a.is_abelian()) throw UsageError("the double needs an abelian coefficient group");
  auto base = verify_cocycle(d);
  if (!base.passed()) throw StructureError("not a bijective 1-cocycle: " + base.failure()->witness);
  DoubledDatum dd;
  dd.base = d;
  dd.order_a = d.a.order();
  dd.conductor = d.a.exponent();
  dd.chars = character_group(d.a);
  dd.chi_action = dual_action(d, dd.chars);
  const auto& chi_act = dd.chi_action;
  dd.gt = semidirect_product(d.g, dd.chars.dual, chi_act);

  int n = dd.order_a;
  int big = dd.gt.group.order();
  CocycleDatum& out = dd.datum;
  out.g = dd.gt.group;
  out.a = direct_product(d.a, dd.chars.dual);  // (x, chi) at x*n + chi
  out.action.assign(big, std::vector<int>(n * n));
  out.pi.assign(big, 0);
  for (int h = 0; h < big; ++h) {
    auto [b, g] = dd.split(h);
    for (int x = 0; x < n; ++x)
      for (int chi = 0; chi < n; ++chi) out.action[h][x * n + chi] = d.action[g][x] * n + chi_act[g][chi];
    out.pi[h] = d.pi[g] * n + b;
  }
  return dd;
}

TMap tmap(const CocycleDatum& d) {
  auto pinv = pi_inverse(d);
  TMap t;
  t.map.resize(d.a.order());
  for (int x = 0; x < d.a.order(); ++x) t.map[x] = d.pi[d.g.inv(pinv[d.a.inv(x)])];
  return t;
}

Tensor2 pull_back_tensor(const CocycleDatum& d, const Tensor2& j) {
  auto pinv = pi_inverse(d);
  int n = d.g.order();
  if (j.d1() != n || j.d2() != n) throw UsageError("tensor is not on k[A] (x) k[A]");
  Tensor2 out(n, n);
  for (auto [x, y] : j.support()) out(pinv[x], pinv[y]) = j(x, y);
  return out;
}

bool is_invariant(const CocycleDatum& d, const Tensor2& j) {
  for (int g = 0; g < d.g.order(); ++g) {
    Tensor2 moved(j.d1(), j.d2());
    for (auto [x, y] : j.support()) moved(d.action[g][x], d.action[g][y]) = j(x, y);
    if (moved != j) return false;
  }
  return true;
}

Tensor2 canonical_pairing_twist(const DoubledDatum& dd) {
  int n = dd.order_a;
  Tensor2 j(n * n, n * n);
  Cyclotomic inv_n(Rational(1, n));
  for (int x = 0; x < n; ++x)
    for (int chi = 0; chi < n; ++chi) j(x * n, chi) = inv_n * dd.pairing(x, chi);
  return j;
}

CocycleTwist jbar(const CocycleDatum& d, Exec ex) {
  CocycleTwist out;
  out.doubled = double_datum(d);
  out.t = tmap(d);
  const DoubledDatum& dd = out.doubled;
  out.host = group_algebra(dd.gt.group, dd.conductor);
  auto pinv = pi_inverse(d);
  int n = dd.order_a, big = dd.gt.group.order();
  Cyclotomic inv_n(Rational(1, n));
  Tensor2 j(big, big);
  out.closed_form_inverse = Tensor2(big, big);
  for (int x = 0; x < n; ++x)
    for (int chi = 0; chi < n; ++chi) {
      Cyclotomic v = dd.pairing(x, chi);
      j(dd.g_elem(pinv[x]), dd.chi_elem(chi)) += inv_n * v;
      out.closed_form_inverse(dd.g_elem(pinv[out.t.map[x]]), dd.chi_elem(chi)) += inv_n * v.inv();
    }
  auto solved = tensor_inverse(out.host, j);
  if (!solved) throw StructureError("Jbar is not invertible");
  if (*solved != out.closed_form_inverse) {
    throw std::logic_error("solved inverse of Jbar differs from the closed form at " +
                           pos(solved->first_difference(out.closed_form_inverse)));
  }
  out.twist = verify_twist(out.host, j, ex, &*solved);
  return out;
}

Tensor2 closed_form_r(const DoubledDatum& dd, const TMap& t) {
  auto pinv = pi_inverse(dd.base);
  const FiniteGroup& h = dd.gt.group;
  int n = dd.order_a, big = h.order();
  Cyclotomic inv_n2(Rational(1, n * n));
  Tensor2 r(big, big);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int cx = 0; cx < n; ++cx)
        for (int cy = 0; cy < n; ++cy) {
          int left = h.mul(dd.chi_elem(cx), dd.g_elem(pinv[x]));
          int right = h.mul(dd.g_elem(pinv[t.map[y]]), dd.chi_elem(cy));
          r(left, right) += inv_n2 * dd.pairing(x, cy) * dd.pairing(y, cx).inv();
        }
  return r;
}

CocycleTriangular rmatrix_from_cocycle(const CocycleDatum& d, Exec ex) {
  CocycleTriangular out;
  out.source = jbar(d, ex);
  const HopfPresentation& host = out.source.host;
  out.hopf = twist_hopf(host, out.source.twist);
  out.r = twist_r(host, one_tensor(host), out.source.twist);
  Tensor2 cf = closed_form_r(out.source.doubled, out.source.t);
  if (cf != out.r) throw std::logic_error("closed-form R differs from Jbar_21^-1 Jbar at " + pos(cf.first_difference(out.r)));

  Report& rep = out.report;
  rep.merge(verify_hopf(out.hopf, ex), "hopf: ");
  rep.merge(verify_quasitriangular(out.hopf, out.r, ex), "R: ");
  rep.add("triangular", is_triangular(out.hopf, out.r), "R R_21 != 1 (x) 1");
  bool full = !determinant(out.r.as_matrix()).is_zero();
  rep.add("minimal", full, full ? "" : "coefficient matrix of R is singular (rank " + s(out.r.rank()) + ")");
  auto u = drinfeld_element(out.hopf, out.r);
  rep.add("Drinfeld element is 1", u.u == out.hopf.one(), "u != 1");
  rep.add("noncommutative", !is_commutative(out.hopf), "algebra is commutative");
  rep.add("noncocommutative", !is_cocommutative(out.hopf), "coalgebra is cocommutative");
  return out;
}

ProjectiveRep projective_rep(const CocycleDatum& d, Exec ex) {
  ProjectiveRep out;
  DoubledDatum dd = double_datum(d);
  const FiniteGroup& h = dd.gt.group;
  int n = dd.order_a, big = h.order();
  Cyclotomic inv_n(Rational(1, n));
  out.j = Tensor2(big, big);
  for (int g = 0; g < n; ++g)
    for (int b = 0; b < n; ++b) out.j(dd.chi_elem(b), dd.g_elem(g)) += inv_n * dd.pairing(d.pi[g], b);
  HopfPresentation host = group_algebra(h, dd.conductor);
  auto tc = check_twist(host, out.j, ex);
  out.report.add("J is a twist", tc.status == TwistStatus::twist, tc.report.failure() ? tc.report.failure()->witness : "");

  // (Y_u * Y_v)(w) = (Y_u (x) Y_v)(Delta_J(w)).
  GCoalgebra c = twisted_coalgebra(h, out.j, dd.conductor);
  std::vector<Vec> prod(static_cast<size_t>(big) * big, Vec(big));
  for (int w = 0; w < big; ++w)
    for (auto [u, v] : c.comult[w].support()) prod[static_cast<size_t>(u) * big + v][w] += c.comult[w](u, v);
  out.dual = StructureAlgebra(big, dd.conductor);
  for (int u = 0; u < big; ++u)
    for (int v = 0; v < big; ++v) out.dual.set_product(u, v, prod[static_cast<size_t>(u) * big + v]);
  out.dual.set_unit(c.counit);

  // Z_h = s_h Y_h with s_{bg} = |A| b(pi(g)). The factor |A| cancels the
  // normalization of J, so the multiplication law below has no scalar.
  Vec sc(big);
  for (int x = 0; x < big; ++x) {
    auto [b, g] = dd.split(x);
    sc[x] = Cyclotomic(n) * dd.pairing(d.pi[g], b);
  }
  out.dual_z = StructureAlgebra(big, dd.conductor);
  for (int u = 0; u < big; ++u)
    for (int v = 0; v < big; ++v) {
      Vec p = prod[static_cast<size_t>(u) * big + v];
      for (int w = 0; w < big; ++w)
        if (!p[w].is_zero()) p[w] = p[w] * sc[u] * sc[v] / sc[w];
      out.dual_z.set_product(u, v, p);
    }
  Vec zu(big);
  for (int w = 0; w < big; ++w) zu[w] = c.counit[w] / sc[w];
  out.dual_z.set_unit(zu);

  std::string wit;
  for (int u = 0; u < big && wit.empty(); ++u)
    for (int v = 0; v < big && wit.empty(); ++v) {
      auto [b2, g2] = dd.split(u);
      auto [b1, g1] = dd.split(v);
      Vec expect(big);
      expect[h.mul(dd.chi_elem(b1), dd.g_elem(g2))] = dd.pairing(d.pi[g1], b2);
      if (out.dual_z.basis_product(u, v) != expect) wit = "Z_" + s(u) + " * Z_" + s(v);
    }
  out.report.add("multiplication law", wit.empty(), wit);

  out.z_action.dim = n;
  out.z_action.action.assign(big, Matrix(n, n));
  for (int x = 0; x < big; ++x) {
    auto [b, g] = dd.split(x);
    for (int a = 0; a < n; ++a) out.z_action.action[x](d.pi[g], a) = dd.pairing(a, b);
  }
  auto vr = verify_representation(out.dual_z, out.z_action);
  out.report.merge(vr, "action: ");
  Matrix flat(n * n, big);
  for (int x = 0; x < big; ++x)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) flat(i * n + k, x) = out.z_action.action[x](i, k);
  int rk = rank(flat);
  out.report.add("isomorphism onto End(V)", rk == n * n && big == n * n, "image has dimension " + s(rk));

  out.phi.assign(big, Matrix(n, n));
  for (int x = 0; x < big; ++x) {
    auto [b, g] = dd.split(x);
    for (int a = 0; a < n; ++a) {
      int target = d.a.mul(d.action[g][a], d.pi[g]);
      out.phi[x](target, a) = dd.pairing(target, b).inv();
    }
  }
  wit.clear();
  for (int x = 0; x < big && wit.empty(); ++x)
    for (int y = 0; y < big && wit.empty(); ++y) {
      Matrix lhs = out.phi[x] * out.phi[y];
      const Matrix& rhs = out.phi[h.mul(x, y)];
      std::optional<Cyclotomic> ratio;
      for (int i = 0; i < n && wit.empty(); ++i)
        for (int k = 0; k < n && wit.empty(); ++k) {
          if (rhs(i, k).is_zero() != lhs(i, k).is_zero()) wit = "supports differ for " + pos({x, y});
          else if (!rhs(i, k).is_zero()) {
            Cyclotomic q = lhs(i, k) / rhs(i, k);
            if (!ratio) ratio = q;
            else if (*ratio != q) wit = "phi(x)phi(y) is not a multiple of phi(xy) for " + pos({x, y});
          }
        }
    }
  out.report.add("projective representation", wit.empty(), wit);
  Matrix pflat(n * n, big);
  for (int x = 0; x < big; ++x)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) pflat(i * n + k, x) = out.phi[x](i, k);
  int prk = rank(pflat);
  out.report.add("irreducible", prk == n * n, "span of phi(H) has dimension " + s(prk));
  return out;
}

}  // namespace trihopf
