#include "trihopf/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "trihopf/errors.hpp"

namespace trihopf {

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw StructureError("empty Cayley table");
  FiniteGroup g;
  g.n_ = n;
  g.t_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw StructureError("Cayley table row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= n) {
        throw StructureError("not closed: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                             std::to_string(c) + " is out of range");
      }
      g.t_[static_cast<size_t>(a) * n + b] = c;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      throw StructureError("element 0 is not the identity: witness " + std::to_string(a));
    }
  }
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw StructureError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw StructureError("not associative: witness (a,b,c) = (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return g;
}

int FiniteGroup::pow(int a, int k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) throw UsageError("name list length differs from group order");
  names_ = std::move(names);
}

std::string FiniteGroup::name(int a) const {
  if (names_.empty()) return std::to_string(a);
  return names_[a];
}

int FiniteGroup::find(const std::string& name) const {
  for (int a = 0; a < n_; ++a) {
    if (this->name(a) == name) return a;
  }
  return -1;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h;
  h.member.assign(g.order(), 0);
  for (int x : elements) {
    if (x < 0 || x >= g.order()) throw UsageError("subgroup element out of range");
    h.member[x] = 1;
  }
  if (elements.empty() || elements[0] != 0) throw StructureError("subgroup must contain the identity");
  for (int a : elements) {
    for (int b : elements) {
      if (!h.member[g.mul(a, b)]) {
        throw StructureError("subset not closed: " + std::to_string(a) + "*" + std::to_string(b));
      }
    }
  }
  h.elements = std::move(elements);
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> elems{0};
  seen[0] = 1;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(elems[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return make_subgroup(g, elems);
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, all);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {0}); }

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<Subgroup> list;
  auto add = [&](const Subgroup& h) {
    if (found.insert(h.elements).second) list.push_back(h);
  };
  add(trivial_subgroup(g));
  for (int x = 1; x < g.order(); ++x) add(generated_subgroup(g, {x}));
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> gens = list[i].elements;
      gens.insert(gens.end(), list[j].elements.begin(), list[j].elements.end());
      add(generated_subgroup(g, gens));
    }
  }
  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return list;
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> e;
  for (int x : a.elements)
    if (b.contains(x)) e.push_back(x);
  return make_subgroup(g, e);
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> e;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int a : h.elements) {
      if (!h.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) e.push_back(x);
  }
  return make_subgroup(g, e);
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  std::vector<int> e;
  for (int m = 0; m < g.order(); ++m)
    if (g.mul(m, x) == g.mul(x, m)) e.push_back(m);
  return make_subgroup(g, e);
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, gens);
}

bool is_perfect(const FiniteGroup& g) { return commutator_subgroup(g).size() == g.order(); }

bool is_self_normalizing(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, h).size() == h.size(); }

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < h.size(); ++i) index[h.elements[i]] = i;
  std::vector<std::vector<int>> t(h.size(), std::vector<int>(h.size()));
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j) t[i][j] = index[g.mul(h.elements[i], h.elements[j])];
  FiniteGroup s = FiniteGroup::from_cayley_table(t);
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (int x : h.elements) names.push_back(g.name(x));
    s.set_names(names);
  }
  return s;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw UsageError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_cayley_table(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int p = a.mul(x / b.order(), y / b.order());
      int q = b.mul(x % b.order(), y % b.order());
      t[x][y] = p * b.order() + q;
    }
  FiniteGroup g = FiniteGroup::from_cayley_table(t);
  if (!a.names().empty() || !b.names().empty()) {
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) names.push_back("(" + a.name(x / b.order()) + "," + b.name(x % b.order()) + ")");
    g.set_names(names);
  }
  return g;
}

std::string cycle_notation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::vector<std::vector<int>> permutation_group_elements(const std::vector<std::vector<int>>& gens, int degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      if (static_cast<int>(s.size()) != degree) throw UsageError("permutation degree mismatch");
      std::vector<int> c(degree);
      for (int k = 0; k < degree; ++k) c[k] = s[queue[i][k]];
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens, int degree) {
  auto perms = permutation_group_elements(gens, degree);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(degree);
      for (int k = 0; k < degree; ++k) c[k] = perms[a][perms[b][k]];
      t[a][b] = index.at(c);
    }
  FiniteGroup g = FiniteGroup::from_cayley_table(t);
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(cycle_notation(p));
  g.set_names(names);
  return g;
}

FiniteGroup symmetric_group(int n) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[i], s[i + 1]);
    gens.push_back(s);
  }
  return permutation_group(gens, n);
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

SemidirectProduct semidirect_product(const FiniteGroup& q, const FiniteGroup& a,
                                     const std::vector<std::vector<int>>& action) {
  int nq = q.order();
  int na = a.order();
  if (static_cast<int>(action.size()) != nq) throw UsageError("action must list one map per element of Q");
  for (int x = 0; x < nq; ++x) {
    if (static_cast<int>(action[x].size()) != na) throw UsageError("action map has wrong length");
    std::vector<int> sorted = action[x];
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < na; ++i)
      if (sorted[i] != i) throw StructureError("action of " + std::to_string(x) + " is not a bijection");
    for (int u = 0; u < na; ++u)
      for (int v = 0; v < na; ++v)
        if (action[x][a.mul(u, v)] != a.mul(action[x][u], action[x][v])) {
          throw StructureError("action of " + std::to_string(x) + " is not a homomorphism at (" +
                               std::to_string(u) + "," + std::to_string(v) + ")");
        }
  }
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      for (int u = 0; u < na; ++u)
        if (action[q.mul(x, y)][u] != action[x][action[y][u]]) {
          throw StructureError("action is not a homomorphism Q -> Aut(A) at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
        }
  SemidirectProduct sp;
  sp.q_order = nq;
  sp.a_order = na;
  int n = nq * na;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int q1 = x / na, a1 = x % na, q2 = y / na, a2 = y % na;
      t[x][y] = sp.pair(q.mul(q1, q2), a.mul(action[q.inv(q2)][a1], a2));
    }
  sp.group = FiniteGroup::from_cayley_table(t);
  if (!q.names().empty() || !a.names().empty()) {
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) names.push_back("(" + q.name(x / na) + "," + a.name(x % na) + ")");
    sp.group.set_names(names);
  }
  return sp;
}

int AbelianBasis::element(const std::vector<int>& exps) const {
  int x = 0;
  for (size_t i = 0; i < generators.size(); ++i) x = group->mul(x, group->pow(generators[i], exps[i]));
  return x;
}

AbelianBasis abelian_basis(const FiniteGroup& a) {
  if (!a.is_abelian()) throw UsageError("abelian_basis requires an abelian group");
  int n = a.order();
  std::vector<int> cand;
  for (int x = 1; x < n; ++x) cand.push_back(x);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int x, int y) { return a.element_order(x) > a.element_order(y); });
  std::vector<int> gens;
  std::function<bool(std::vector<char>&, int)> search = [&](std::vector<char>& in, int size) -> bool {
    if (size == n) return true;
    for (int x : cand) {
      int ox = a.element_order(x);
      bool trivial = true;
      for (int k = 1, p = x; k < ox; ++k, p = a.mul(p, x)) {
        if (in[p]) {
          trivial = false;
          break;
        }
      }
      if (!trivial) continue;
      std::vector<char> next(n, 0);
      for (int s = 0; s < n; ++s) {
        if (!in[s]) continue;
        for (int k = 0, p = s; k < ox; ++k, p = a.mul(p, x)) next[p] = 1;
      }
      gens.push_back(x);
      if (search(next, size * ox)) return true;
      gens.pop_back();
    }
    return false;
  };
  std::vector<char> start(n, 0);
  start[0] = 1;
  if (!search(start, 1)) throw StructureError("no cyclic decomposition found");
  AbelianBasis b;
  b.group = &a;
  b.generators = gens;
  for (int g : gens) b.orders.push_back(a.element_order(g));
  b.coords.assign(n, std::vector<int>(gens.size(), 0));
  std::vector<int> e(gens.size(), 0);
  for (int count = 0; count < n; ++count) {
    b.coords[b.element(e)] = e;
    for (size_t i = 0; i < e.size(); ++i) {
      if (++e[i] < b.orders[i]) break;
      e[i] = 0;
    }
  }
  return b;
}

Cyclotomic Character::value(int g, int conductor) const {
  int64_t k = exps[g];
  if (conductor % modulus == 0) return Cyclotomic::root_of_unity(k * (conductor / modulus), conductor);
  // Q(zeta_2m) = Q(zeta_m) for odd m, with zeta_2m = -zeta_m^((m+1)/2).
  int half = modulus / 2;
  if (modulus % 4 == 2 && conductor % half == 0) {
    Cyclotomic z = Cyclotomic::root_of_unity(k * ((half + 1) / 2) * (conductor / half), conductor);
    return (k % 2 != 0) ? -z : z;
  }
  throw UsageError("conductor does not contain the character values");
}

CharacterGroup character_group(const FiniteGroup& a) {
  AbelianBasis b = abelian_basis(a);
  int e = a.exponent();
  int n = a.order();
  CharacterGroup cg;
  cg.modulus = e;
  std::vector<int> k(b.generators.size(), 0);
  for (int count = 0; count < n; ++count) {
    Character chi;
    chi.modulus = e;
    chi.exps.resize(n);
    for (int x = 0; x < n; ++x) {
      long v = 0;
      for (size_t i = 0; i < k.size(); ++i) v += static_cast<long>(k[i]) * (e / b.orders[i]) * b.coords[x][i];
      chi.exps[x] = static_cast<int>(v % e);
    }
    cg.characters.push_back(chi);
    for (size_t i = 0; i < k.size(); ++i) {
      if (++k[i] < b.orders[i]) break;
      k[i] = 0;
    }
  }
  std::sort(cg.characters.begin(), cg.characters.end(),
            [](const Character& x, const Character& y) { return x.exps < y.exps; });
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[cg.characters[i].exps] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> s(n);
      for (int x = 0; x < n; ++x) s[x] = (cg.characters[i].exps[x] + cg.characters[j].exps[x]) % e;
      t[i][j] = index.at(s);
    }
  cg.dual = FiniteGroup::from_cayley_table(t);
  return cg;
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<DoubleCoset> out;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    DoubleCoset z;
    z.representative = x;
    for (int a : h.elements)
      for (int b : h.elements) {
        int y = g.mul(g.mul(a, x), b);
        if (!seen[y]) {
          seen[y] = 1;
          z.elements.push_back(y);
        }
      }
    std::sort(z.elements.begin(), z.elements.end());
    out.push_back(std::move(z));
  }
  return out;
}

StabilizerData stabilizer_data(const FiniteGroup& g, const Subgroup& h, int x) {
  StabilizerData s;
  s.g = x;
  std::vector<int> k;
  for (int a : h.elements) {
    // a in g H g^-1 iff g^-1 a g in H
    if (h.contains(g.mul(g.mul(g.inv(x), a), x))) k.push_back(a);
  }
  s.k = make_subgroup(g, k);
  s.theta1.assign(g.order(), -1);
  s.theta2.assign(g.order(), -1);
  for (int a : s.k.elements) {
    s.theta1[a] = g.mul(g.mul(g.inv(x), a), x);
    s.theta2[a] = a;
  }
  return s;
}

TwoCocycle trivial_cocycle(int order) {
  TwoCocycle c;
  c.order = order;
  c.values.assign(static_cast<size_t>(order) * order, Cyclotomic(1));
  return c;
}

std::string cocycle_violation(const FiniteGroup& g, const TwoCocycle& c) {
  int n = g.order();
  if (c.order != n) return "cocycle table size differs from group order";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c(a, b).is_zero()) return "c(" + std::to_string(a) + "," + std::to_string(b) + ") = 0";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        if (c(a, b) * c(g.mul(a, b), d) != c(a, g.mul(b, d)) * c(b, d)) {
          return "cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(d) + ")";
        }
      }
  return "";
}

TwoCocycle cocycle_from_bilinear(const FiniteGroup& a, const AbelianBasis& basis,
                                 const std::vector<std::vector<int>>& m, int modulus) {
  int r = static_cast<int>(basis.generators.size());
  if (static_cast<int>(m.size()) != r) throw UsageError("bilinear matrix size differs from basis rank");
  TwoCocycle c;
  c.order = a.order();
  c.values.resize(static_cast<size_t>(c.order) * c.order);
  for (int x = 0; x < c.order; ++x)
    for (int y = 0; y < c.order; ++y) {
      long e = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) e += static_cast<long>(basis.coords[x][i]) * m[i][j] * basis.coords[y][j];
      c(x, y) = Cyclotomic::root_of_unity(e, modulus);
    }
  if (!is_bimultiplicative(a, c)) throw StructureError("exponent matrix does not define a bilinear form");
  return c;
}

bool is_bimultiplicative(const FiniteGroup& a, const TwoCocycle& c) {
  int n = a.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (c(a.mul(x, y), z) != c(x, z) * c(y, z)) return false;
        if (c(x, a.mul(y, z)) != c(x, y) * c(x, z)) return false;
      }
  return true;
}

bool is_nondegenerate(const FiniteGroup& g, const TwoCocycle& c) {
  for (int x = 1; x < g.order(); ++x) {
    Subgroup cz = centralizer(g, x);
    bool nontrivial = false;
    for (int m : cz.elements) {
      if (c(m, x) != c(x, m)) {
        nontrivial = true;
        break;
      }
    }
    if (!nontrivial) return false;
  }
  return true;
}

TwoCocycle pullback(const TwoCocycle& c, const std::vector<int>& f) {
  TwoCocycle p;
  p.order = static_cast<int>(f.size());
  p.values.resize(static_cast<size_t>(p.order) * p.order);
  for (int a = 0; a < p.order; ++a)
    for (int b = 0; b < p.order; ++b) p(a, b) = c(f[a], f[b]);
  return p;
}

}  // namespace trihopf
