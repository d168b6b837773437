#include "trihopf/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

std::vector<int> positions(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < h.size(); ++i) pos[h.elements[i]] = i;
  return pos;
}

Tensor2 restrict_to(const Tensor2& j, const Subgroup& h) {
  int n = h.size();
  Tensor2 out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out(a, b) = j(h.elements[a], h.elements[b]);
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::string sizes_str(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

int first_nonzero(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

Twist cotriangular_twist(const CotriangularInput& in) {
  int n = in.g.order();
  if (in.j.d1() != n || in.j.d2() != n) throw UsageError("twist size differs from |G|");
  for (auto [a, b] : in.j.support())
    if (!in.h.contains(a) || !in.h.contains(b))
      throw UsageError("twist has support at (" + std::to_string(a) + "," + std::to_string(b) + ") outside H x H");
  return verify_twist(group_algebra(in.g, in.conductor), in.j);
}

StructureAlgebra coset_algebra(const HopfPresentation& a, const std::vector<int>& coset) {
  int n = a.dim(), m = static_cast<int>(coset.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[coset[i]] = i;
  StructureAlgebra out(m, a.conductor());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      SparseVec v;
      for (int k = 0; k < n; ++k) {
        const Cyclotomic& c = a.comult[k](coset[x], coset[y]);
        if (c.is_zero()) continue;
        if (pos[k] < 0)
          throw StructureError("delta_" + std::to_string(coset[x]) + " delta_" + std::to_string(coset[y]) +
                               " has a component at " + std::to_string(k) + " outside the coset");
        v.emplace_back(pos[k], c);
      }
      std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      out.set_product(x, y, std::move(v));
    }
  out.set_unit(Vec(m, Cyclotomic(1)));
  return out;
}

MovshevPair movshev_pair(const CotriangularInput& in, const Twist& t) {
  MovshevPair p;
  p.h = subgroup_as_group(in.g, in.h);
  const FiniteGroup& h = p.h;
  int n = h.order();
  Tensor2 j = restrict_to(t.j, in.h), ji = restrict_to(t.inverse, in.h);
  p.a1 = movshev_dual_algebra(h, j, in.conductor);
  // (delta_x delta_y)(k) = J^-1(x k^-1, y k^-1)
  p.a2 = StructureAlgebra(n, in.conductor);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec v(n);
      for (int k = 0; k < n; ++k) v[k] = ji(h.mul(x, h.inv(k)), h.mul(y, h.inv(k)));
      p.a2.set_product(x, y, v);
    }
  p.a2.set_unit(Vec(n, Cyclotomic(1)));
  p.rho1.assign(n, std::vector<int>(n));
  p.rho2.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y) {
      p.rho1[a][y] = h.mul(a, y);
      p.rho2[a][y] = h.mul(y, h.inv(a));
    }
  return p;
}

ProjectiveLift projective_lift(const FiniteGroup& h, const StructureAlgebra& a,
                               const std::vector<std::vector<int>>& rho) {
  int n = a.dim(), order = h.order();
  std::vector<Matrix> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = a.left_mult(unit_vec(n, i));
    right[i] = a.right_mult(unit_vec(n, i));
  }
  ProjectiveLift out;
  out.t.resize(order);
  for (int g = 0; g < order; ++g) {
    // T e_i = e_{rho(g)(i)} T for every i
    Matrix sys(n * n, n);
    for (int i = 0; i < n; ++i) {
      Matrix block = right[i] - left[rho[g][i]];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sys(i * n + r, c) = block(r, c);
    }
    auto ns = nullspace(sys);
    if (ns.size() != 1)
      throw StructureError("element " + std::to_string(g) + " is implemented by a " + std::to_string(ns.size()) +
                           "-dimensional space of conjugators");
    Vec t = ns[0];
    if (g == 0) {
      int k = first_nonzero(a.unit());
      t = scale(t, a.unit()[k] * t[k].inv());
    } else {
      int k = first_nonzero(t);
      t = scale(t, t[k].inv());
    }
    out.t[g] = t;
  }
  out.c = trivial_cocycle(order);
  for (int g = 0; g < order; ++g)
    for (int k = 0; k < order; ++k) {
      Vec prod = a.multiply(out.t[g], out.t[k]);
      const Vec& target = out.t[h.mul(g, k)];
      int i = first_nonzero(target);
      Cyclotomic c = prod[i] * target[i].inv();
      if (prod != scale(target, c))
        throw StructureError("T_" + std::to_string(g) + " T_" + std::to_string(k) + " is not a multiple of T_gh");
      out.c(g, k) = c;
    }
  return out;
}

DoubleCosetBlockReport dual_double_coset_decomposition(const CotriangularInput& in) {
  Twist t = cotriangular_twist(in);
  HopfPresentation a = twist_hopf(group_algebra(in.g, in.conductor), t);
  auto hpos = positions(in.g, in.h);
  DoubleCosetBlockReport out;

  std::optional<ProjectiveLift> lift1, lift2;
  try {
    MovshevPair mp = movshev_pair(in, t);
    auto p1 = block_profile(mp.a1), p2 = block_profile(mp.a2);
    bool simple = p1.sizes.size() == 1 && p2.sizes.size() == 1 && p1.radical_dim == 0 && p2.radical_dim == 0;
    out.report.add("(A_1)^* and (A_2)^* simple", simple,
                   simple ? "" : "profiles " + p1.str() + " and " + p2.str());
    if (simple) {
      lift1 = projective_lift(mp.h, mp.a1, mp.rho1);
      lift2 = projective_lift(mp.h, mp.a2, mp.rho2);
    }
  } catch (const StructureError& e) {
    out.report.add("(A_1)^* and (A_2)^* simple", false, e.what());
  }

  int total = 0, hsize = in.h.size();
  for (const auto& z : double_cosets(in.g, in.h)) {
    CosetBlocks cb;
    cb.representative = z.representative;
    cb.size = static_cast<int>(z.elements.size());
    StabilizerData sd = stabilizer_data(in.g, in.h, z.representative);
    cb.k = sd.k;
    cb.ratio = hsize / sd.k.size();
    std::string tag = "Z(" + in.g.name(z.representative) + "): ";
    total += cb.size;

    try {
      auto prof = block_profile(coset_algebra(a, z.elements));
      cb.blocks = prof.sizes;
      out.report.add(tag + "semisimple", prof.radical_dim == 0, "radical dimension " + std::to_string(prof.radical_dim));
      if (prof.radical_dim == 0) out.report.results.back().witness.clear();
    } catch (const StructureError& e) {
      out.report.add(tag + "subalgebra", false, e.what());
      out.cosets.push_back(cb);
      continue;
    }
    bool dim_ok = cb.size * sd.k.size() == hsize * hsize;
    out.report.add(tag + "dim = |H|^2/|K_g|", dim_ok,
                   dim_ok ? "" : std::to_string(cb.size) + " vs " + std::to_string(hsize * hsize / sd.k.size()));
    bool divisible = std::all_of(cb.blocks.begin(), cb.blocks.end(), [&](int d) { return d % cb.ratio == 0; });
    out.report.add(tag + "blocks divisible by |H|/|K_g|", divisible,
                   divisible ? "" : sizes_str(cb.blocks) + " vs " + std::to_string(cb.ratio));

    if (lift1 && lift2) {
      FiniteGroup kg = subgroup_as_group(in.g, sd.k);
      int m = sd.k.size();
      cb.c_w = trivial_cocycle(m);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          int ex = sd.k.elements[x], ey = sd.k.elements[y];
          cb.c_w(x, y) = lift1->c(hpos[sd.theta1[ex]], hpos[sd.theta1[ey]]) *
                         lift2->c(hpos[sd.theta2[ex]], hpos[sd.theta2[ey]]);
        }
      auto ref = block_profile(twisted_group_algebra(kg, cb.c_w, in.conductor));
      for (int d : ref.sizes) cb.predicted.push_back(d * cb.ratio);
      std::sort(cb.predicted.begin(), cb.predicted.end());
      bool match = cb.predicted == cb.blocks;
      out.report.add(tag + "blocks match the twisted group algebra of K_g", match,
                     match ? "" : sizes_str(cb.blocks) + " vs " + sizes_str(cb.predicted));
    }
    out.cosets.push_back(std::move(cb));
  }
  out.report.add("sum of dim (A^*)_Z = dim A", total == a.dim());
  return out;
}

FgEmbedding fg_embedding(const CotriangularInput& in, int g) {
  Twist t = cotriangular_twist(in);
  HopfPresentation a = twist_hopf(group_algebra(in.g, in.conductor), t);
  MovshevPair mp = movshev_pair(in, t);
  const FiniteGroup& G = in.g;
  auto hpos = positions(G, in.h);
  int n = in.h.size();

  std::vector<int> coset;
  for (int x : in.h.elements)
    for (int y : in.h.elements) coset.push_back(G.mul(G.mul(x, g), y));
  std::sort(coset.begin(), coset.end());
  coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
  std::vector<int> zpos(G.order(), -1);
  for (size_t i = 0; i < coset.size(); ++i) zpos[coset[i]] = static_cast<int>(i);
  int m = static_cast<int>(coset.size());

  FgEmbedding out;
  out.target = tensor_algebra(mp.a2, mp.a1);
  // F_x(delta_y) for x in Z: columns indexed like `coset`
  auto embed = [&](int x) {
    Matrix f(n * n, m);
    for (int h = 0; h < n; ++h)
      for (int h2 = 0; h2 < n; ++h2) {
        int y = G.mul(G.mul(in.h.elements[h], x), in.h.elements[h2]);
        f(h * n + h2, zpos[y]) += Cyclotomic(1);
      }
    return f;
  };
  out.f = embed(g);
  out.rank = rank(out.f);
  out.report.add("injective", out.rank == m, "rank " + std::to_string(out.rank) + " < " + std::to_string(m));
  if (out.rank == m) out.report.results.back().witness.clear();

  StructureAlgebra za = coset_algebra(a, coset);
  std::string bad;
  for (int x = 0; x < m && bad.empty(); ++x)
    for (int y = 0; y < m && bad.empty(); ++y) {
      Vec lhs = out.f.apply(za.basis_product(x, y));
      Vec rhs = out.target.multiply(out.f.column(x), out.f.column(y));
      if (lhs != rhs) bad = "delta_" + G.name(coset[x]) + ", delta_" + G.name(coset[y]);
    }
  out.report.add("multiplicative", bad.empty(), bad);
  out.report.add("unital", out.f.apply(za.unit()) == out.target.unit());

  // rho(a) = rho_2(a) (x) rho_1(g^-1 a g) on delta_h (x) delta_h', a in K_g
  StabilizerData sd = stabilizer_data(G, in.h, g);
  std::vector<std::vector<int>> perms;
  for (int k : sd.k.elements) {
    int a2 = hpos[k], a1 = hpos[sd.theta1[k]];
    std::vector<int> p(n * n);
    for (int h = 0; h < n; ++h)
      for (int h2 = 0; h2 < n; ++h2) p[h * n + h2] = mp.rho2[a2][h] * n + mp.rho1[a1][h2];
    perms.push_back(std::move(p));
  }
  std::vector<char> seen(n * n, 0);
  int orbits = 0;
  for (int s = 0; s < n * n; ++s) {
    if (seen[s]) continue;
    ++orbits;
    for (const auto& p : perms) seen[p[s]] = 1;
  }
  out.invariant_dim = orbits;
  bool invariant = true;
  for (int c = 0; c < m && invariant; ++c)
    for (const auto& p : perms) {
      Vec v = out.f.column(c);
      for (int s = 0; s < n * n; ++s)
        if (v[p[s]] != v[s]) invariant = false;
    }
  out.report.add("image in U_g", invariant);
  out.report.add("image = U_g", out.rank == orbits,
                 "rank " + std::to_string(out.rank) + ", dim U_g " + std::to_string(orbits));
  if (out.rank == orbits) out.report.results.back().witness.clear();
  out.report.add("dim U_g = |H|^2/|K_g|", orbits * sd.k.size() == n * n);

  // F_{a g a'}(phi) = (rho_2(a) (x) rho_1(a')^-1) F_g(phi)
  bad.clear();
  for (int a1 = 0; a1 < n && bad.empty(); ++a1)
    for (int a2 = 0; a2 < n && bad.empty(); ++a2) {
      int x = G.mul(G.mul(in.h.elements[a1], g), in.h.elements[a2]);
      Matrix fx = embed(x);
      int inv2 = hpos[G.inv(in.h.elements[a2])];
      Matrix moved(n * n, m);
      for (int h = 0; h < n; ++h)
        for (int h2 = 0; h2 < n; ++h2)
          for (int c = 0; c < m; ++c)
            moved(mp.rho2[a1][h] * n + mp.rho1[inv2][h2], c) = out.f(h * n + h2, c);
      if (moved != fx) bad = "a = " + in.g.name(in.h.elements[a1]) + ", a' = " + in.g.name(in.h.elements[a2]);
    }
  out.report.add("equivariance", bad.empty(), bad);
  return out;
}

KaplanskyResult kaplansky_check(const HopfPresentation& h, bool assert_divisibility) {
  KaplanskyResult out;
  out.profile = block_profile(dual_hopf(h).algebra);
  int n = h.dim();
  std::string bad;
  for (int d : out.profile.sizes)
    if (n % d != 0) bad = std::to_string(d) + " does not divide " + std::to_string(n);
  out.divides = bad.empty();
  if (assert_divisibility) out.report.add("irreducible dimensions divide dim", out.divides, bad);
  return out;
}

ChevalleyReport chevalley_check(const HopfPresentation& h) {
  ChevalleyReport out;
  auto rad = jacobson_radical(h.algebra);
  out.radical_dim = static_cast<int>(rad.size());
  int n = h.dim();

  std::string bad;
  for (size_t i = 0; i < rad.size() && bad.empty(); ++i)
    if (!h.eps(rad[i]).is_zero()) bad = "radical vector " + std::to_string(i);
  out.report.add("eps(Rad) = 0", bad.empty(), bad);

  Subspace rs(n);
  for (const auto& r : rad) rs.add(r);
  bad.clear();
  for (size_t i = 0; i < rad.size() && bad.empty(); ++i)
    if (!rs.contains(h.S(rad[i]))) bad = "radical vector " + std::to_string(i);
  out.report.add("S(Rad) in Rad", bad.empty(), bad);

  bad.clear();
  Matrix proj = Matrix::identity(n);
  if (!rad.empty()) proj = quotient(h.algebra, rad).projection;
  for (size_t i = 0; i < rad.size() && bad.empty(); ++i)
    if (!apply_maps(proj, proj, h.coproduct(rad[i])).is_zero()) bad = "radical vector " + std::to_string(i);
  out.report.add("Delta(Rad) in Rad (x) A + A (x) Rad", bad.empty(), bad);
  out.is_hopf_ideal = out.report.passed();

  if (h.is_super()) return out;
  std::vector<AlgebraRepresentation> simples;
  try {
    simples = simple_modules(h.algebra);
  } catch (const NonSplitError&) {
    return out;
  }
  out.tensor_test_run = true;
  out.simple_tensors_semisimple = true;
  for (const auto& v : simples)
    for (const auto& w : simples) {
      AlgebraRepresentation vw = tensor_representation(h, v, w);
      for (const auto& r : rad)
        if (!vw.of(r).is_zero()) out.simple_tensors_semisimple = false;
    }
  out.report.add("Hopf-ideal test agrees with tensor products of simples",
                 out.is_hopf_ideal == out.simple_tensors_semisimple,
                 out.simple_tensors_semisimple ? "tensor products semisimple" : "some tensor product not semisimple");
  if (out.report.results.back().passed) out.report.results.back().witness.clear();
  return out;
}

Cyclotomic categorical_dimension(const HopfPresentation& h, const Tensor2& r, const AlgebraRepresentation& v) {
  return v.of(drinfeld_element(h, r).u).trace();
}

bool is_rational_integer(const Cyclotomic& x) { return x.is_rational() && x.rational_value().is_integer(); }

AlgebraRepresentation tensor_representation(const HopfPresentation& h, const AlgebraRepresentation& v,
                                            const AlgebraRepresentation& w) {
  if (h.is_super()) throw UsageError("tensor_representation needs an ordinary Hopf algebra");
  int n = h.dim();
  AlgebraRepresentation out;
  out.dim = v.dim * w.dim;
  out.action.assign(n, Matrix(out.dim, out.dim));
  for (int k = 0; k < n; ++k)
    for (auto [i, j] : h.comult[k].support())
      out.action[k] = out.action[k] + kronecker(v.action[i], w.action[j]).scaled(h.comult[k](i, j));
  return out;
}

AlgebraRepresentation character_representation(const Vec& values) {
  AlgebraRepresentation out;
  out.dim = 1;
  for (const auto& c : values) {
    Matrix m(1, 1);
    m(0, 0) = c;
    out.action.push_back(m);
  }
  return out;
}

}  // namespace trihopf
