#include "trihopf/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trihopf/errors.hpp"
#include "trihopf/recognize.hpp"

namespace trihopf {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  }
  return s;
}

Vec to_dense(const SparseVec& v, int dim) {
  Vec d(dim);
  for (const auto& [i, c] : v) d[i] += c;
  return d;
}

StructureAlgebra::StructureAlgebra(int dim, int conductor)
    : dim_(dim), conductor_(conductor), mult_(static_cast<size_t>(dim) * dim), unit_(dim) {
  CyclotomicField::get(conductor);
}

void StructureAlgebra::set_product(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != dim_) throw UsageError("product vector has wrong length");
  mult_[static_cast<size_t>(i) * dim_ + j] = to_sparse(v);
}

void StructureAlgebra::set_product(int i, int j, SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  mult_[static_cast<size_t>(i) * dim_ + j] = std::move(v);
}

Cyclotomic StructureAlgebra::constant(int i, int j, int k) const {
  for (const auto& [idx, c] : product(i, j))
    if (idx == k) return c;
  return Cyclotomic();
}

void StructureAlgebra::set_unit(Vec u) {
  if (static_cast<int>(u.size()) != dim_) throw UsageError("unit vector has wrong length");
  unit_ = std::move(u);
}

Vec StructureAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Cyclotomic ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Matrix StructureAlgebra::left_mult(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j) += a[i] * c;
  }
  return m;
}

Matrix StructureAlgebra::right_mult(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (a[j].is_zero()) continue;
    for (int i = 0; i < dim_; ++i)
      for (const auto& [k, c] : product(i, j)) m(k, i) += a[j] * c;
  }
  return m;
}

Vec StructureAlgebra::trace_vector() const {
  Vec t(dim_);
  for (int k = 0; k < dim_; ++k)
    for (int m = 0; m < dim_; ++m)
      for (const auto& [idx, c] : product(k, m))
        if (idx == m) t[k] += c;
  return t;
}

bool StructureAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

std::optional<Vec> StructureAlgebra::inverse(const Vec& a) const {
  auto x = solve(left_mult(a), unit_);
  if (!x) return std::nullopt;
  if (multiply(*x, a) != unit_) return std::nullopt;
  return x;
}

Vec StructureAlgebra::power(const Vec& a, int k) const {
  if (k < 0) {
    auto inv = inverse(a);
    if (!inv) throw DivisionByZero("negative power of a non-unit");
    return power(*inv, -k);
  }
  Vec r = unit_;
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.dim_ != b.dim_ || a.unit_ != b.unit_) return false;
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

bool Report::passed() const { return failure() == nullptr; }

const AxiomResult* Report::failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

void Report::add(std::string name, bool ok, std::string witness) {
  results.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& r : other.results) results.push_back({prefix + r.name, r.passed, r.witness});
}

Report verify_algebra(const StructureAlgebra& a) {
  Report rep;
  int n = a.dim();
  std::string wit;
  for (int i = 0; i < n && wit.empty(); ++i)
    for (int j = 0; j < n && wit.empty(); ++j) {
      Vec ij = a.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        Vec lhs(n);
        for (int m = 0; m < n; ++m) {
          if (ij[m].is_zero()) continue;
          for (const auto& [t, c] : a.product(m, k)) lhs[t] += ij[m] * c;
        }
        Vec rhs = a.multiply(unit_vec(n, i), a.basis_product(j, k));
        if (lhs != rhs) {
          wit = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) +
                " != e" + std::to_string(i) + " (e" + std::to_string(j) + " e" + std::to_string(k) + ")";
          break;
        }
      }
    }
  rep.add("associativity", wit.empty(), wit);
  wit.clear();
  for (int i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
      wit = "unit fails on e" + std::to_string(i);
      break;
    }
  }
  rep.add("unit", wit.empty(), wit);
  return rep;
}

std::vector<Vec> jacobson_radical(const StructureAlgebra& a) {
  int n = a.dim();
  Vec t = a.trace_vector();
  Matrix form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!t[k].is_zero()) form(i, j) += c * t[k];
  return nullspace(form.transpose());
}

std::vector<Vec> center(const StructureAlgebra& a) {
  int n = a.dim();
  Matrix eq(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product(j, i)) eq(i * n + k, j) += c;
      for (const auto& [k, c] : a.product(i, j)) eq(i * n + k, j) -= c;
    }
  return nullspace(eq);
}

StructureAlgebra restrict_algebra(const StructureAlgebra& a, const std::vector<Vec>& basis) {
  int k = static_cast<int>(basis.size());
  CoordinateSolver cs(basis);
  StructureAlgebra s(k, a.conductor());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto c = cs.coords(a.multiply(basis[i], basis[j]));
      if (!c) throw StructureError("span is not closed under multiplication");
      s.set_product(i, j, *c);
    }
  auto u = cs.coords(a.unit());
  if (!u) throw StructureError("span does not contain the unit");
  s.set_unit(*u);
  return s;
}

std::vector<Vec> generated_subalgebra(const StructureAlgebra& a, const std::vector<Vec>& gens) {
  Subspace s(a.dim());
  std::vector<Vec> elems;
  auto push = [&](const Vec& v) {
    if (s.add(v)) elems.push_back(v);
  };
  push(a.unit());
  for (const auto& g : gens) push(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      Vec x = elems[i];
      Vec y = elems[j];
      push(a.multiply(x, y));
      push(a.multiply(y, x));
    }
  return s.basis();
}

Quotient quotient(const StructureAlgebra& a, const std::vector<Vec>& ideal) {
  int n = a.dim();
  Subspace s(n);
  for (const auto& v : ideal) s.add(v);
  std::vector<char> pivot(n, 0);
  for (int p : s.pivots()) pivot[p] = 1;
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (!pivot[i]) comp.push_back(i);
  int q = static_cast<int>(comp.size());
  Quotient out;
  out.projection = Matrix(q, n);
  out.lift = Matrix(n, q);
  for (int j = 0; j < n; ++j) {
    Vec r = s.residue(unit_vec(n, j));
    for (int c = 0; c < q; ++c) out.projection(c, j) = r[comp[c]];
  }
  for (int c = 0; c < q; ++c) out.lift(comp[c], c) = Cyclotomic(1);
  out.algebra = StructureAlgebra(q, a.conductor());
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) out.algebra.set_product(i, j, out.projection.apply(a.basis_product(comp[i], comp[j])));
  out.algebra.set_unit(out.projection.apply(a.unit()));
  return out;
}

std::string BlockProfile::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  os << "}";
  return os.str();
}

namespace {

Cyclotomic form_value(const StructureAlgebra& a, const Vec& t, const Vec& x, const Vec& y) {
  Vec p = a.multiply(x, y);
  Cyclotomic s;
  for (int k = 0; k < a.dim(); ++k)
    if (!p[k].is_zero() && !t[k].is_zero()) s += p[k] * t[k];
  return s;
}

// Unit of a two-sided ideal (spanned by basis) in a semisimple algebra.
Vec ideal_unit(const StructureAlgebra& a, const std::vector<Vec>& basis) {
  int k = static_cast<int>(basis.size());
  int n = a.dim();
  Matrix eq(k * n, k);
  Vec rhs(k * n);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      Vec p = a.multiply(basis[t], basis[s]);
      for (int m = 0; m < n; ++m) eq(s * n + m, t) = p[m];
    }
    for (int m = 0; m < n; ++m) rhs[s * n + m] = basis[s][m];
  }
  auto sol = solve(eq, rhs);
  if (!sol) throw StructureError("ideal has no unit (algebra not semisimple?)");
  Vec u(n);
  for (int t = 0; t < k; ++t)
    if (!(*sol)[t].is_zero()) u = add(u, scale(basis[t], (*sol)[t]));
  return u;
}

// Matrix of v -> z v on span(basis) in basis coordinates.
Matrix restricted_left_mult(const StructureAlgebra& a, const Vec& z, const std::vector<Vec>& basis,
                            const CoordinateSolver& cs) {
  int k = static_cast<int>(basis.size());
  Matrix m(k, k);
  for (int t = 0; t < k; ++t) {
    auto c = cs.coords(a.multiply(z, basis[t]));
    if (!c) throw StructureError("subspace is not stable under multiplication");
    for (int s = 0; s < k; ++s) m(s, t) = (*c)[s];
  }
  return m;
}

}  // namespace

BlockProfile block_profile(const StructureAlgebra& a) {
  BlockProfile bp;
  bp.dim = a.dim();
  auto rad = jacobson_radical(a);
  bp.radical_dim = static_cast<int>(rad.size());
  StructureAlgebra q = rad.empty() ? a : quotient(a, rad).algebra;
  auto zb = center(q);
  int z = static_cast<int>(zb.size());
  if (z == 0) return bp;
  StructureAlgebra zalg = restrict_algebra(q, zb);
  Vec tq = q.trace_vector();
  Vec tz = zalg.trace_vector();
  Matrix ta(z, z), tzm(z, z);
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j) {
      ta(i, j) = form_value(q, tq, zb[i], zb[j]);
      tzm(i, j) = form_value(zalg, tz, unit_vec(z, i), unit_vec(z, j));
    }
  auto tzi = inverse(tzm);
  if (!tzi) throw StructureError("trace form of the center is degenerate");
  Matrix m = *tzi * ta;
  int counted = 0;
  int total = 0;
  for (int d = 1; d * d <= q.dim() && counted < z; ++d) {
    Matrix s = m;
    for (int i = 0; i < z; ++i) s(i, i) -= Cyclotomic(d * d);
    int mult = z - rank(s);
    for (int r = 0; r < mult; ++r) bp.sizes.push_back(d);
    counted += mult;
    total += mult * d * d;
  }
  if (counted != z || total != q.dim()) {
    throw StructureError("block profile inconsistent: sum of d^2 = " + std::to_string(total) + ", expected " +
                         std::to_string(q.dim()));
  }
  return bp;
}

std::vector<Vec> split_commutative(const StructureAlgebra& c) {
  int n = c.dim();
  struct Comp {
    std::vector<Vec> basis;
    Vec unit;
  };
  std::vector<Comp> comps;
  {
    Comp all;
    for (int i = 0; i < n; ++i) all.basis.push_back(unit_vec(n, i));
    all.unit = c.unit();
    comps.push_back(all);
  }
  for (int zi = 0; zi < n; ++zi) {
    bool pending = false;
    for (const auto& cp : comps) pending = pending || cp.basis.size() > 1;
    if (!pending) break;
    Vec z = unit_vec(n, zi);
    std::vector<Comp> next;
    for (auto& cp : comps) {
      int k = static_cast<int>(cp.basis.size());
      if (k == 1) {
        next.push_back(cp);
        continue;
      }
      CoordinateSolver cs(cp.basis);
      Matrix m = restricted_left_mult(c, z, cp.basis, cs);
      auto eigs = field_eigenvalues(m, c.conductor());
      std::vector<Comp> pieces;
      int covered = 0;
      for (const auto& l : eigs) {
        Matrix s = m;
        for (int i = 0; i < k; ++i) s(i, i) -= l;
        auto ker = nullspace(s);
        Comp p;
        for (const auto& v : ker) {
          Vec w(n);
          for (int t = 0; t < k; ++t)
            if (!v[t].is_zero()) w = add(w, scale(cp.basis[t], v[t]));
          p.basis.push_back(w);
        }
        covered += static_cast<int>(p.basis.size());
        pieces.push_back(std::move(p));
      }
      if (pieces.size() == 1 && covered == k) {
        next.push_back(cp);
        continue;
      }
      Vec rest = cp.unit;
      for (auto& p : pieces) {
        p.unit = ideal_unit(c, p.basis);
        rest = sub(rest, p.unit);
        next.push_back(p);
      }
      if (covered < k) {
        Comp r;
        r.basis = span_basis([&] {
          std::vector<Vec> vs;
          for (const auto& b : cp.basis) vs.push_back(c.multiply(rest, b));
          return vs;
        }(), n);
        r.unit = rest;
        next.push_back(r);
      }
    }
    comps = std::move(next);
  }
  std::vector<Vec> idems;
  for (const auto& cp : comps) {
    if (cp.basis.size() != 1) throw NonSplitError("commutative algebra does not split over Q(zeta_" + std::to_string(c.conductor()) + ")");
    idems.push_back(cp.unit);
  }
  return idems;
}

std::vector<Vec> primitive_central_idempotents(const StructureAlgebra& a) {
  auto zb = center(a);
  StructureAlgebra zalg = restrict_algebra(a, zb);
  auto local = split_commutative(zalg);
  std::vector<Vec> out;
  for (const auto& e : local) {
    Vec v(a.dim());
    for (size_t t = 0; t < zb.size(); ++t)
      if (!e[t].is_zero()) v = add(v, scale(zb[t], e[t]));
    out.push_back(v);
  }
  return out;
}

Matrix AlgebraRepresentation::of(const Vec& a) const {
  Matrix m(dim, dim);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + action[i].scaled(a[i]);
  return m;
}

Report verify_representation(const StructureAlgebra& a, const AlgebraRepresentation& v) {
  Report rep;
  std::string wit;
  if (static_cast<int>(v.action.size()) != a.dim()) {
    rep.add("shape", false, "action list length differs from algebra dimension");
    return rep;
  }
  for (int i = 0; i < a.dim() && wit.empty(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (v.of(a.basis_product(i, j)) != v.action[i] * v.action[j]) {
        wit = "rho(e" + std::to_string(i) + " e" + std::to_string(j) + ") != rho(e" + std::to_string(i) + ") rho(e" +
              std::to_string(j) + ")";
        break;
      }
    }
  rep.add("multiplicative", wit.empty(), wit);
  rep.add("unital", v.of(a.unit()) == Matrix::identity(v.dim), "rho(1) != identity");
  return rep;
}

AlgebraRepresentation regular_representation(const StructureAlgebra& a) {
  AlgebraRepresentation r;
  r.dim = a.dim();
  for (int i = 0; i < a.dim(); ++i) r.action.push_back(a.left_mult(unit_vec(a.dim(), i)));
  return r;
}

AlgebraRepresentation simple_module_for_block(const StructureAlgebra& a, const Vec& e) {
  int n = a.dim();
  Vec f = e;
  for (int guard = 0; guard < n + 1; ++guard) {
    std::vector<Vec> corner_span;
    for (int i = 0; i < n; ++i) corner_span.push_back(a.multiply(a.multiply(f, unit_vec(n, i)), f));
    auto cb = span_basis(corner_span, n);
    int k = static_cast<int>(cb.size());
    if (k == 1) break;
    CoordinateSolver cs(cb);
    // Candidates: the echelon basis, the corner images f e_i f, then pairwise sums.
    std::vector<Vec> cands = cb;
    for (const auto& y : corner_span)
      if (!is_zero_vec(y)) cands.push_back(y);
    for (int s = 0; s < k; ++s)
      for (int t = s + 1; t < k; ++t) cands.push_back(add(cb[s], cb[t]));
    std::optional<Vec> x;
    std::vector<Matrix> mats;
    for (const auto& y : cands) {
      Matrix m = restricted_left_mult(a, y, cb, cs);
      if (rank(m) < k) {
        x = y;
        break;
      }
      mats.push_back(std::move(m));
    }
    for (size_t t = 0; !x && t < mats.size(); ++t) {
      for (const auto& l : field_eigenvalues(mats[t], a.conductor())) {
        Vec cand = sub(cands[t], scale(f, l));
        if (!is_zero_vec(cand)) {
          x = cand;
          break;
        }
      }
    }
    if (!x) throw NonSplitError("no zero divisor found in a simple block");
    std::vector<Vec> left;
    for (const auto& c : cb) left.push_back(a.multiply(c, *x));
    auto lb = span_basis(left, n);
    int l = static_cast<int>(lb.size());
    Matrix eq(l * n, l);
    Vec rhs(l * n);
    for (int s = 0; s < l; ++s) {
      for (int t = 0; t < l; ++t) {
        Vec p = a.multiply(lb[s], lb[t]);
        for (int m = 0; m < n; ++m) eq(s * n + m, t) = p[m];
      }
      for (int m = 0; m < n; ++m) rhs[s * n + m] = lb[s][m];
    }
    auto sol = solve(eq, rhs);
    if (!sol) throw StructureError("left ideal has no right identity");
    Vec nf(n);
    for (int t = 0; t < l; ++t)
      if (!(*sol)[t].is_zero()) nf = add(nf, scale(lb[t], (*sol)[t]));
    f = nf;
  }
  std::vector<Vec> span;
  for (int i = 0; i < n; ++i) span.push_back(a.multiply(unit_vec(n, i), f));
  auto vb = span_basis(span, n);
  CoordinateSolver cs(vb);
  AlgebraRepresentation rep;
  rep.dim = static_cast<int>(vb.size());
  for (int i = 0; i < n; ++i) rep.action.push_back(restricted_left_mult(a, unit_vec(n, i), vb, cs));
  return rep;
}

std::vector<AlgebraRepresentation> simple_modules(const StructureAlgebra& a) {
  auto rad = jacobson_radical(a);
  if (rad.empty()) {
    std::vector<AlgebraRepresentation> out;
    for (const auto& e : primitive_central_idempotents(a)) out.push_back(simple_module_for_block(a, e));
    return out;
  }
  Quotient q = quotient(a, rad);
  std::vector<AlgebraRepresentation> out;
  for (const auto& e : primitive_central_idempotents(q.algebra)) {
    AlgebraRepresentation rq = simple_module_for_block(q.algebra, e);
    AlgebraRepresentation ra;
    ra.dim = rq.dim;
    for (int i = 0; i < a.dim(); ++i) ra.action.push_back(rq.of(q.projection.column(i)));
    out.push_back(std::move(ra));
  }
  return out;
}

StructureAlgebra twisted_group_algebra(const FiniteGroup& g, const TwoCocycle& c, int conductor) {
  int n = g.order();
  if (c.order != n) throw UsageError("cocycle size differs from group order");
  StructureAlgebra a(n, conductor);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (c(x, y).is_zero()) throw StructureError("cocycle value vanishes");
      a.set_product(x, y, SparseVec{{g.mul(x, y), c(x, y)}});
    }
  Vec u(n);
  u[0] = c(0, 0).inv();
  a.set_unit(u);
  return a;
}

StructureAlgebra group_algebra_structure(const FiniteGroup& g, int conductor) {
  return twisted_group_algebra(g, trivial_cocycle(g.order()), conductor);
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  StructureAlgebra o(a.dim(), a.conductor());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) o.set_product(i, j, a.product(j, i));
  o.set_unit(a.unit());
  return o;
}

StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  int na = a.dim(), nb = b.dim();
  StructureAlgebra t(na * nb, std::lcm(a.conductor(), b.conductor()));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          SparseVec p;
          for (const auto& [x, cx] : a.product(i, k))
            for (const auto& [y, cy] : b.product(j, l)) p.emplace_back(x * nb + y, cx * cy);
          t.set_product(i * nb + j, k * nb + l, std::move(p));
        }
  Vec u(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (!a.unit()[i].is_zero() && !b.unit()[j].is_zero()) u[i * nb + j] = a.unit()[i] * b.unit()[j];
  t.set_unit(u);
  return t;
}

}  // namespace trihopf
