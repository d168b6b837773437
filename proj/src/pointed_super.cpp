#include "trihopf/pointed_super.hpp"

#include <bit>
#include <string>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

std::string e(int i) { return "e" + std::to_string(i); }

// (-1)^#{(s,t) : s in S, t in T, s > t}, the sign of sorting x_S x_T.
int exterior_sign(unsigned s, unsigned t) {
  int swaps = 0;
  for (unsigned rest = t; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

// Product in Lambda V on vectors indexed by masks.
Vec wedge(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t s = 0; s < a.size(); ++s) {
    if (a[s].is_zero()) continue;
    for (size_t t = 0; t < b.size(); ++t) {
      if (b[t].is_zero() || (s & t) != 0) continue;
      Cyclotomic c = a[s] * b[t];
      if (exterior_sign(static_cast<unsigned>(s), static_cast<unsigned>(t)) < 0) c = -c;
      out[s | t] += c;
    }
  }
  return out;
}

// rho(x_{i1}) ... rho(x_{ik}) in Lambda V.
Vec act_on_monomial(const Matrix& rho, unsigned mask, int v) {
  size_t n = size_t{1} << v;
  Vec out(n);
  out[0] = Cyclotomic(1);
  for (int i = 0; i < v; ++i) {
    if (((mask >> i) & 1u) == 0) continue;
    Vec img(n);
    for (int l = 0; l < v; ++l) img[size_t{1} << l] = rho(l, i);
    out = wedge(out, img);
  }
  return out;
}

HopfPresentation forget_parity(const HopfPresentation& h) {
  HopfPresentation out = h;
  out.parity.reset();
  return out;
}

bool is_grouplike(const HopfPresentation& h, const Vec& g) {
  return h.coproduct(g) == Tensor2::pure(g, g) && h.eps(g) == Cyclotomic(1);
}

// Parity of each basis vector under Ad(u), or UsageError.
Parity parity_from(const HopfPresentation& h, const Vec& u) {
  if (!is_grouplike(h, u) || h.mul(u, u) != h.one()) throw UsageError("u must be grouplike with u^2 = 1");
  Parity p(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    Vec c = h.mul(h.mul(u, h.e(i)), u);
    if (c == h.e(i)) p[i] = 0;
    else if (c == scale(h.e(i), Cyclotomic(-1))) p[i] = 1;
    else throw UsageError("basis vector " + e(i) + " is not an eigenvector of Ad(u)");
  }
  return p;
}

// Delta with the terms whose second leg has parity 0 / 1, recombined as
// D_0 - (-1)^p(a) (g (x) 1) D_1.
Tensor2 regrade_comult(const HopfPresentation& plain, const Parity& par, const Tensor2& delta, int pa, const Vec& g) {
  int d = plain.dim();
  Tensor2 d0(d, d), d1(d, d);
  for (auto [i, j] : delta.support()) (par[j] ? d1 : d0)(i, j) = delta(i, j);
  Tensor2 moved = tensor_mul(plain, Tensor2::pure(g, plain.one()), d1);
  return pa ? d0 + moved : d0 - moved;
}

Tensor2 exp_series(const HopfPresentation& h, const Tensor2& x) {
  Tensor2 out = one_tensor(h);
  Tensor2 term = out;
  for (int k = 1; k <= 2 * h.dim() + 1; ++k) {
    term = tensor_mul(h, term, x).scaled(Cyclotomic(Rational(1, k)));
    if (term.is_zero()) return out;
    out += term;
  }
  throw StructureError("exponential series did not terminate; the argument is not nilpotent");
}

int character_of_form(const PointedDatum& d, const CharacterGroup& cg, int g) {
  for (int chi = 0; chi < static_cast<int>(cg.characters.size()); ++chi) {
    bool same = true;
    for (int y = 0; y < d.g.order() && same; ++y)
      if (cg.characters[chi].value(y, d.conductor) != d.form(g, y)) same = false;
    if (same) return chi;
  }
  throw StructureError("F(" + std::to_string(g) + ", .) is not a character");
}

// Conditions on phi alone; empty string when they hold.
std::string phi_violation(const PointedDatum& d, const CharacterGroup& cg, const std::vector<int>& phi) {
  int n = d.g.order();
  if (static_cast<int>(phi.size()) != n) return "phi bijective: wrong size";
  std::vector<char> hit(n, 0);
  for (int x : phi) {
    if (x < 0 || x >= n || hit[x]) return "phi bijective: not a bijection onto G";
    hit[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[cg.dual.mul(a, b)] != d.g.mul(phi[a], phi[b]))
        return "phi homomorphism: fails on characters " + std::to_string(a) + ", " + std::to_string(b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cg.characters[a].value(phi[cg.dual.inv(b)], d.conductor) != cg.characters[b].value(phi[a], d.conductor))
        return "phi^*(alpha) = phi(alpha^-1): fails on characters " + std::to_string(a) + ", " + std::to_string(b);
  for (int g = 0; g < n; ++g)
    if (d.n[g] > 0 && phi[character_of_form(d, cg, g)] != g)
      return "phi f = id on I_F': fails at " + d.g.name(g);
  return "";
}

}  // namespace

bool in_odd_support(const PointedDatum& d, int g) { return d.form(g, g) == Cyclotomic(-1); }

Report verify_datum(const PointedDatum& d) {
  Report rep;
  int n = d.g.order();
  rep.add("abelian", d.g.is_abelian(), d.g.is_abelian() ? "" : "G is not abelian");
  bool shape = d.form.order == n && static_cast<int>(d.n.size()) == n;
  if (!shape) {
    rep.add("shape", false, "form or n does not match |G| = " + std::to_string(n));
    return rep;
  }
  rep.add("bimultiplicative", is_bimultiplicative(d.g, d.form), "F is not a bicharacter");
  std::string wit;
  for (int x = 0; x < n && wit.empty(); ++x)
    for (int y = 0; y < n && wit.empty(); ++y)
      if (!(d.form(x, y) * d.form(y, x)).is_one())
        wit = "F(" + d.g.name(x) + "," + d.g.name(y) + ") F(" + d.g.name(y) + "," + d.g.name(x) + ") != 1";
  rep.add("skew-symmetric", wit.empty(), wit);
  wit.clear();
  for (int x = 1; x < n && wit.empty(); ++x) {
    bool trivial = true;
    for (int y = 0; y < n; ++y)
      if (!d.form(x, y).is_one()) trivial = false;
    if (trivial) wit = "F(" + d.g.name(x) + ", .) is trivial";
  }
  rep.add("nondegenerate", wit.empty(), wit);
  wit.clear();
  for (int g = 0; g < n && wit.empty(); ++g) {
    if (d.n[g] < 0) wit = "n(" + d.g.name(g) + ") < 0";
    else if (d.n[g] > 0 && !in_odd_support(d, g)) wit = "n(" + d.g.name(g) + ") > 0 but F(g,g) != -1";
  }
  rep.add("n supported on I_F", wit.empty(), wit);
  return rep;
}

PointedDatum hn_datum(int n) {
  PointedDatum d;
  d.g = cyclic_group(2);
  d.g.set_names({"1", "g"});
  d.form = trivial_cocycle(2);
  d.form(1, 1) = Cyclotomic(-1);
  d.conductor = 1;
  d.n = {0, n};
  return d;
}

PointedDatum klein_pointed_datum(int n10, int n11) {
  PointedDatum d;
  d.g = direct_product(cyclic_group(2), cyclic_group(2));
  d.g.set_names({"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  d.form = trivial_cocycle(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int a1 = a / 2, a2 = a % 2, b1 = b / 2, b2 = b % 2;
      if ((a1 * b1 + a1 * b2 + a2 * b1) % 2 != 0) d.form(a, b) = Cyclotomic(-1);
    }
  d.conductor = 1;
  d.n = {0, 0, n10, n11};
  return d;
}

PointedDatum z4z4_pointed_datum(int n10, int n30) {
  PointedDatum d;
  d.g = direct_product(cyclic_group(4), cyclic_group(4));
  std::vector<std::string> names;
  for (int a = 0; a < 16; ++a) names.push_back("(" + std::to_string(a / 4) + "," + std::to_string(a % 4) + ")");
  d.g.set_names(names);
  d.form = trivial_cocycle(16);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      int a1 = a / 4, a2 = a % 4, b1 = b / 4, b2 = b % 4;
      int k = ((a1 * b2 - a2 * b1 + 2 * a1 * b1) % 4 + 4) % 4;
      d.form(a, b) = Cyclotomic::root_of_unity(k, 4);
    }
  d.conductor = 4;
  d.n.assign(16, 0);
  d.n[4] = n10;
  d.n[12] = n30;
  return d;
}

PointedAlgebra build_hd(const PointedDatum& d) {
  Report rep = verify_datum(d);
  if (!rep.passed()) throw UsageError("invalid datum: " + rep.failure()->name + ": " + rep.failure()->witness);
  PointedAlgebra out;
  out.datum = d;
  const FiniteGroup& g = d.g;
  int order = g.order();
  for (int a = 0; a < order; ++a)
    for (int l = 0; l < d.n[a]; ++l) {
      out.degree.push_back(a);
      out.local.push_back(l);
    }
  int m = out.generators();
  if (m > 12) throw UsageError("too many odd generators");
  unsigned masks = 1u << m;
  int dim = order * static_cast<int>(masks);
  HopfPresentation& h = out.hopf;
  h.algebra = StructureAlgebra(dim, d.conductor);

  // (a x_S)(b x_T) = prod_{i in S} F(b, g_i) prod_{s in S, t in T, s > t} F(g_t, g_s) ab x_{S u T}
  for (unsigned s = 0; s < masks; ++s)
    for (int a = 0; a < order; ++a)
      for (unsigned t = 0; t < masks; ++t)
        for (int b = 0; b < order; ++b) {
          SparseVec v;
          if ((s & t) == 0) {
            Cyclotomic c(1);
            for (int i = 0; i < m; ++i) {
              if (((s >> i) & 1u) == 0) continue;
              c *= d.form(b, out.degree[i]);
              for (int j = 0; j < i; ++j)
                if ((t >> j) & 1u) c *= d.form(out.degree[j], out.degree[i]);
            }
            v.emplace_back(out.index(g.mul(a, b), s | t), c);
          }
          h.algebra.set_product(out.index(a, s), out.index(b, t), std::move(v));
        }
  h.algebra.set_unit(unit_vec(dim, 0));

  Vec one = h.one();
  std::vector<Tensor2> dx(m);
  std::vector<Vec> sx(m);
  for (int i = 0; i < m; ++i) {
    Vec x = out.generator(i);
    Vec gi = out.group_element(out.degree[i]);
    dx[i] = Tensor2::pure(x, one) + Tensor2::pure(gi, x);
    sx[i] = scale(unit_vec(dim, out.index(g.inv(out.degree[i]), 1u << i)), Cyclotomic(-1));
  }
  h.comult.assign(dim, Tensor2());
  h.counit.assign(dim, Cyclotomic(0));
  h.antipode = Matrix(dim, dim);
  for (unsigned s = 0; s < masks; ++s)
    for (int a = 0; a < order; ++a) {
      Vec ga = out.group_element(a);
      Tensor2 delta = Tensor2::pure(ga, ga);
      Vec anti = out.group_element(g.inv(a));
      for (int i = 0; i < m; ++i) {
        if (((s >> i) & 1u) == 0) continue;
        delta = tensor_mul(h, delta, dx[i]);
        anti = h.mul(sx[i], anti);
      }
      int k = out.index(a, s);
      h.comult[k] = delta;
      if (s == 0) h.counit[k] = Cyclotomic(1);
      for (int r = 0; r < dim; ++r) h.antipode(r, k) = anti[r];
    }
  return out;
}

AntipodeOrder s4_check(const HopfPresentation& h) {
  AntipodeOrder out;
  Matrix id = Matrix::identity(h.dim());
  Matrix s2 = h.antipode * h.antipode;
  out.s2_identity = s2 == id;
  out.s4_identity = s2 * s2 == id;
  std::string wit;
  if (!out.s4_identity) {
    Matrix s4 = s2 * s2;
    for (int i = 0; i < h.dim() && wit.empty(); ++i)
      if (s4.column(i) != id.column(i)) wit = "S^4(" + e(i) + ") != " + e(i);
  }
  out.report.add("S^4 = Id", out.s4_identity, wit);
  return out;
}

Report verify_tdatum(const PointedDatum& d, const TDatum& t) {
  Report rep;
  CharacterGroup cg = character_group(d.g);
  std::string wit = phi_violation(d, cg, t.phi);
  rep.add("phi in Phi", wit.empty(), wit);
  int n = d.g.order();
  wit.clear();
  if (static_cast<int>(t.m.size()) != n) wit = "one matrix per group element expected";
  for (int g = 0; g < n && wit.empty(); ++g) {
    if (d.n[g] == 0) continue;
    int gi = d.g.inv(g);
    const Matrix& m = t.m[g];
    if (m.rows() != d.n[gi] || m.cols() != d.n[g]) {
      wit = "M_" + d.g.name(g) + " must map V_g^* onto V_g^-1 (n_g = " + std::to_string(d.n[g]) +
            ", n_g^-1 = " + std::to_string(d.n[gi]) + ")";
    } else if (m.rows() != m.cols()) {
      wit = "M_" + d.g.name(g) + " cannot be invertible: n_g = " + std::to_string(d.n[g]) + " but n_g^-1 = " +
            std::to_string(d.n[gi]);
    } else if (determinant(m).is_zero()) {
      wit = "M_" + d.g.name(g) + " is singular";
    }
  }
  rep.add("M_g invertible", wit.empty(), wit);
  if (!wit.empty()) return rep;
  for (int g = 0; g < n && wit.empty(); ++g)
    if (d.n[g] > 0 && t.m[d.g.inv(g)] != t.m[g].transpose()) wit = "M_" + d.g.name(g) + "^* != M_" + d.g.name(d.g.inv(g));
  rep.add("M_g^* = M_g^-1", wit.empty(), wit);
  return rep;
}

TDatum canonical_tdatum(const PointedDatum& d) {
  CharacterGroup cg = character_group(d.g);
  int n = d.g.order();
  TDatum t;
  t.phi.assign(n, 0);
  for (int g = 0; g < n; ++g) t.phi[character_of_form(d, cg, g)] = g;
  t.m.assign(n, Matrix());
  for (int g = 0; g < n; ++g) {
    if (d.n[g] == 0) continue;
    Matrix m(d.n[d.g.inv(g)], d.n[g]);
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) m(i, i) = Cyclotomic(1);
    t.m[g] = m;
  }
  return t;
}

std::vector<std::vector<int>> phi_candidates(const PointedDatum& d) {
  CharacterGroup cg = character_group(d.g);
  AbelianBasis basis = abelian_basis(cg.dual);
  int n = d.g.order();
  int k = static_cast<int>(basis.generators.size());
  std::vector<std::vector<int>> out;
  std::vector<int> images(k, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      if (d.g.pow(images[i], basis.orders[i]) != 0) ok = false;
    if (ok) {
      std::vector<int> phi(n, 0);
      for (int chi = 0; chi < n; ++chi) {
        int x = 0;
        for (int i = 0; i < k; ++i) x = d.g.mul(x, d.g.pow(images[i], basis.coords[chi][i]));
        phi[chi] = x;
      }
      if (phi_violation(d, cg, phi).empty()) out.push_back(phi);
    }
    int i = 0;
    while (i < k && ++images[i] == n) images[i++] = 0;
    if (i == k) break;
  }
  return out;
}

bool has_admissible_m(const PointedDatum& d) {
  for (int g = 0; g < d.g.order(); ++g)
    if (d.n[g] != d.n[d.g.inv(g)]) return false;
  return true;
}

Vec dual_character(const PointedAlgebra& h, int chi) {
  CharacterGroup cg = character_group(h.datum.g);
  Vec v(h.hopf.dim());
  for (int a = 0; a < h.datum.g.order(); ++a) v[h.index(a, 0)] = cg.characters[chi].value(a, h.datum.conductor);
  return v;
}

Vec dual_p(const PointedAlgebra& h, int i) {
  Vec v(h.hopf.dim());
  for (int a = 0; a < h.datum.g.order(); ++a) v[h.index(a, 1u << i)] = Cyclotomic(1);
  return v;
}

PointedTriangular minimal_triangular_structure(const PointedAlgebra& h, const TDatum& t) {
  const PointedDatum& d = h.datum;
  Report valid = verify_tdatum(d, t);
  if (!valid.passed()) throw UsageError("T-datum rejected: " + valid.failure()->name + ": " + valid.failure()->witness);
  const HopfPresentation& a = h.hopf;
  HopfPresentation dual = co_opposite(dual_hopf(a));
  int dim = a.dim(), order = d.g.order(), m = h.generators();

  // M(P_{x_i}) = sum_j M_g(j, l) y_j over the basis y_j of V_{g^-1}.
  std::vector<int> first(order, -1);
  for (int i = m - 1; i >= 0; --i) first[h.degree[i]] = i;
  std::vector<Vec> m_img(m);
  std::vector<Vec> p(m);
  for (int i = 0; i < m; ++i) {
    int g = h.degree[i], gi = d.g.inv(g);
    Vec v(dim);
    for (int j = 0; j < d.n[gi]; ++j) v = add(v, scale(h.generator(first[gi] + j), t.m[g](j, h.local[i])));
    m_img[i] = v;
    p[i] = dual_p(h, i);
  }

  // f_T on the products alpha P_{i1} ... P_{ik}, then solved back to the dual basis.
  std::vector<Vec> src, img;
  for (int chi = 0; chi < order; ++chi)
    for (unsigned s = 0; s < (1u << m); ++s) {
      Vec x = dual_character(h, chi);
      Vec y = h.group_element(t.phi[chi]);
      for (int i = 0; i < m; ++i) {
        if (((s >> i) & 1u) == 0) continue;
        x = dual.mul(x, p[i]);
        y = a.mul(y, m_img[i]);
      }
      src.push_back(x);
      img.push_back(y);
    }
  PointedTriangular out;
  auto inv = inverse(Matrix::from_columns(src, dim));
  out.report.add("generators span the dual", inv.has_value(), inv ? "" : "products of characters and P_x are dependent");
  if (!inv) return out;
  out.f = Matrix::from_columns(img, dim) * *inv;
  out.r = Tensor2::from_matrix(out.f.transpose());
  out.report.merge(verify_hopf_map(dual, a, out.f), "f_T: ");
  out.report.merge(verify_quasitriangular(a, out.r), "R_T: ");
  out.report.add("triangular", is_triangular(a, out.r), "R R_21 != 1 (x) 1");
  std::string wit;
  try {
    int rank = minimal_part(a, out.r).rank;
    if (rank != dim) wit = "minimal part has dimension " + std::to_string(rank);
  } catch (const StructureError& err) {
    wit = err.what();
  }
  out.report.add("minimal", wit.empty(), wit);
  return out;
}

BiproductCheck biproduct_projection(const HopfPresentation& a, const Tensor2& r) {
  BiproductCheck out;
  int d = a.dim();
  out.k_basis = grouplikes(a);
  int k = static_cast<int>(out.k_basis.size());
  auto finv = inverse(f_r_map(a, r));
  out.report.add("f_R invertible", finv.has_value(), finv ? "" : "R is not minimal");
  if (!finv) return out;
  Matrix incl = Matrix::from_columns(out.k_basis, d);
  Matrix restrict = incl.transpose();
  auto phi_inv = inverse(restrict * *finv * incl);
  out.report.add("i^* f_R^-1 i invertible", phi_inv.has_value(), phi_inv ? "" : "restriction to K is singular");
  if (!phi_inv) return out;
  out.pi = *phi_inv * restrict * *finv;
  out.report.add("pi i = id", out.pi * incl == Matrix::identity(k), "pi does not split the inclusion");

  HopfPresentation kh = sub_hopf(a, out.k_basis);
  std::string wit;
  for (int i = 0; i < d && wit.empty(); ++i)
    for (int j = 0; j < d && wit.empty(); ++j)
      if (out.pi.apply(a.algebra.basis_product(i, j)) != kh.mul(out.pi.column(i), out.pi.column(j)))
        wit = "pi(" + e(i) + " " + e(j) + ") != pi(" + e(i) + ") pi(" + e(j) + ")";
  if (wit.empty() && out.pi.apply(a.one()) != kh.one()) wit = "pi(1) != 1";
  out.report.add("pi algebra map", wit.empty(), wit);
  wit.clear();
  for (int i = 0; i < d && wit.empty(); ++i) {
    if (apply_maps(out.pi, out.pi, a.comult[i]) != kh.coproduct(out.pi.column(i)))
      wit = "Delta(pi(" + e(i) + ")) != (pi x pi) Delta(" + e(i) + ")";
    else if (kh.eps(out.pi.column(i)) != a.counit[i])
      wit = "eps(pi(" + e(i) + ")) != eps(" + e(i) + ")";
  }
  out.report.add("pi coalgebra map", wit.empty(), wit);

  // B = ker(x -> (id x pi) Delta(x) - x (x) 1_K).
  Vec one_k = out.pi.apply(a.one());
  Matrix lin(d * k, d);
  Matrix idd = Matrix::identity(d);
  for (int i = 0; i < d; ++i) {
    Tensor2 t = apply_maps(idd, out.pi, a.comult[i]) - Tensor2::pure(a.e(i), one_k);
    for (int r1 = 0; r1 < d; ++r1)
      for (int r2 = 0; r2 < k; ++r2) lin(r1 * k + r2, i) = t(r1, r2);
  }
  out.b_basis = nullspace(lin);
  std::vector<Vec> products;
  for (const auto& b : out.b_basis)
    for (const auto& g : out.k_basis) products.push_back(a.mul(b, g));
  int span = products.empty() ? 0 : rank(Matrix::from_columns(products, d));
  bool split = static_cast<int>(out.b_basis.size()) * k == d && span == d;
  out.report.add("A = B x K", split,
                 split ? "" : "dim B = " + std::to_string(out.b_basis.size()) + ", |G(A)| = " + std::to_string(k) +
                                  ", span of B K = " + std::to_string(span));
  return out;
}

Report verify_super_group_datum(const SuperGroupDatum& s) {
  Report rep;
  int n = s.q.order();
  std::string wit;
  if (static_cast<int>(s.action.size()) != n) wit = "one matrix per group element expected";
  for (int q = 0; q < n && wit.empty(); ++q)
    if (s.action[q].rows() != s.v || s.action[q].cols() != s.v) wit = "action matrix of wrong size";
  if (wit.empty() && s.action[0] != Matrix::identity(s.v)) wit = "identity does not act trivially";
  for (int a = 0; a < n && wit.empty(); ++a)
    for (int b = 0; b < n && wit.empty(); ++b)
      if (s.action[s.q.mul(a, b)] != s.action[a] * s.action[b])
        wit = "rho(" + s.q.name(a) + s.q.name(b) + ") != rho(" + s.q.name(a) + ") rho(" + s.q.name(b) + ")";
  rep.add("representation", wit.empty(), wit);
  return rep;
}

SuperGroupDatum sign_super_datum(int v) {
  SuperGroupDatum s;
  s.q = cyclic_group(2);
  s.q.set_names({"1", "g"});
  s.v = v;
  s.action = {Matrix::identity(v), Matrix::identity(v).scaled(Cyclotomic(-1))};
  return s;
}

SupergroupAlgebra supergroup_algebra(const SuperGroupDatum& s) {
  Report rep = verify_super_group_datum(s);
  if (!rep.passed()) throw UsageError("invalid supergroup datum: " + rep.failure()->witness);
  if (s.v > 10) throw UsageError("odd space too large");
  SupergroupAlgebra out;
  out.datum = s;
  const FiniteGroup& q = s.q;
  int order = q.order();
  unsigned masks = 1u << s.v;
  int dim = order * static_cast<int>(masks);
  HopfPresentation& h = out.hopf;
  h.algebra = StructureAlgebra(dim, s.conductor);
  Parity par(dim);
  for (unsigned m = 0; m < masks; ++m)
    for (int a = 0; a < order; ++a) par[out.index(a, m)] = std::popcount(m) % 2;
  h.parity = par;

  // x_S q' = q' (q'^-1 . x_S), so (q x_S)(q' x_T) = q q' (q'^-1 . x_S) x_T.
  std::vector<std::vector<Vec>> acted(order, std::vector<Vec>(masks));
  for (int a = 0; a < order; ++a)
    for (unsigned m = 0; m < masks; ++m) acted[a][m] = act_on_monomial(s.action[a], m, s.v);
  for (unsigned sm = 0; sm < masks; ++sm)
    for (int a = 0; a < order; ++a)
      for (unsigned tm = 0; tm < masks; ++tm)
        for (int b = 0; b < order; ++b) {
          Vec w = wedge(acted[q.inv(b)][sm], unit_vec(static_cast<int>(masks), static_cast<int>(tm)));
          SparseVec v;
          for (unsigned r = 0; r < masks; ++r)
            if (!w[r].is_zero()) v.emplace_back(out.index(q.mul(a, b), r), w[r]);
          h.algebra.set_product(out.index(a, sm), out.index(b, tm), std::move(v));
        }
  h.algebra.set_unit(unit_vec(dim, 0));

  Vec one = h.one();
  h.comult.assign(dim, Tensor2());
  h.counit.assign(dim, Cyclotomic(0));
  h.antipode = Matrix(dim, dim);
  for (unsigned m = 0; m < masks; ++m)
    for (int a = 0; a < order; ++a) {
      Vec ga = out.group_element(a);
      Tensor2 delta = Tensor2::pure(ga, ga);
      // S(x_{i1} ... x_{ik}) = (-1)^(k-1) S(x_{i2} ... x_{ik}) S(x_{i1}) with S(x) = -x.
      Vec anti = one;
      int degree = 0;
      for (int i = s.v - 1; i >= 0; --i) {
        if (((m >> i) & 1u) == 0) continue;
        Vec x = out.generator(i);
        anti = h.mul(anti, scale(x, Cyclotomic(-1)));
        if (degree % 2 == 1) anti = scale(anti, Cyclotomic(-1));
        ++degree;
      }
      for (int i = 0; i < s.v; ++i) {
        if (((m >> i) & 1u) == 0) continue;
        Vec x = out.generator(i);
        delta = tensor_mul(h, delta, Tensor2::pure(x, one) + Tensor2::pure(one, x));
      }
      anti = h.mul(anti, out.group_element(q.inv(a)));
      int k = out.index(a, m);
      h.comult[k] = delta;
      if (m == 0) h.counit[k] = Cyclotomic(1);
      for (int r = 0; r < dim; ++r) h.antipode(r, k) = anti[r];
    }
  return out;
}

HopfPresentation bosonize(const HopfPresentation& super, const Vec& g) {
  if (!super.is_super()) throw UsageError("bosonize needs a Hopf superalgebra");
  const Parity& par = *super.parity;
  HopfPresentation plain = forget_parity(super);
  if (parity_from(plain, g) != par) throw UsageError("Ad(g) is not the parity");
  HopfPresentation out = plain;
  for (int i = 0; i < super.dim(); ++i) {
    out.comult[i] = regrade_comult(plain, par, super.comult[i], par[i], g);
    if (par[i]) {
      Vec s = plain.mul(g, super.antipode.column(i));
      for (int r = 0; r < super.dim(); ++r) out.antipode(r, i) = s[r];
    }
  }
  return out;
}

HopfPresentation unbosonize(const HopfPresentation& ordinary, const Vec& u) {
  if (ordinary.is_super()) throw UsageError("unbosonize needs an ordinary Hopf algebra");
  Parity par = parity_from(ordinary, u);
  HopfPresentation out = ordinary;
  out.parity = par;
  for (int i = 0; i < ordinary.dim(); ++i) {
    out.comult[i] = regrade_comult(ordinary, par, ordinary.comult[i], par[i], u);
    if (par[i]) {
      Vec s = ordinary.mul(u, ordinary.antipode.column(i));
      for (int r = 0; r < ordinary.dim(); ++r) out.antipode(r, i) = s[r];
    }
  }
  return out;
}

std::pair<Tensor2, Tensor2> split_even_odd(const Parity& p, const Tensor2& x) {
  Tensor2 even(x.d1(), x.d2()), odd(x.d1(), x.d2());
  for (auto [i, j] : x.support()) {
    if (p[i] != p[j]) throw UsageError("tensor has a component " + e(i) + " (x) " + e(j) + " of mixed parity");
    (p[i] ? odd : even)(i, j) = x(i, j);
  }
  return {even, odd};
}

Tensor2 super_to_ordinary_r(const HopfPresentation& super, const Tensor2& r, const Vec& g) {
  if (!super.is_super()) throw UsageError("super_to_ordinary_r needs a Hopf superalgebra");
  HopfPresentation plain = forget_parity(super);
  auto [r0, r1] = split_even_odd(*super.parity, r);
  Tensor2 x = r0 + tensor_mul(plain, Tensor2::pure(plain.one(), g), r1);
  return tensor_mul(plain, x, r_u(plain, g));
}

Tensor2 ordinary_to_super_r(const HopfPresentation& ordinary, const Tensor2& r, const Vec& u) {
  if (ordinary.is_super()) throw UsageError("ordinary_to_super_r needs an ordinary Hopf algebra");
  Parity par = parity_from(ordinary, u);
  auto [r0, r1] = split_even_odd(par, r);
  Tensor2 x = r0 + tensor_mul(ordinary, Tensor2::pure(ordinary.one(), u), r1);
  return tensor_mul(ordinary, x, r_u(ordinary, u));
}

Twist exp_twist(const SupergroupAlgebra& a, const Matrix& r) {
  int v = a.datum.v;
  if (r.rows() != v || r.cols() != v) throw UsageError("r must be a " + std::to_string(v) + " x " + std::to_string(v) + " matrix");
  if (r != r.transpose()) throw UsageError("r must be symmetric");
  int d = a.hopf.dim();
  Tensor2 half(d, d);
  Cyclotomic c(Rational(1, 2));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (!r(i, j).is_zero()) half(a.index(0, 1u << i), a.index(0, 1u << j)) = c * r(i, j);
  Tensor2 j = exp_series(a.hopf, half);
  Tensor2 jinv = exp_series(a.hopf, half.scaled(Cyclotomic(-1)));
  return verify_twist(a.hopf, j, default_exec(), &jinv);
}

Twist even_twist_correspondence(const HopfPresentation& super, const Tensor2& j, const Vec& g) {
  if (!super.is_super()) throw UsageError("even_twist_correspondence needs a Hopf superalgebra");
  auto [j0, j1] = split_even_odd(*super.parity, j);
  HopfPresentation a = bosonize(super, g);
  Tensor2 out = j0 - tensor_mul(a, Tensor2::pure(g, a.one()), j1);
  return verify_twist(a, out);
}

}  // namespace trihopf
