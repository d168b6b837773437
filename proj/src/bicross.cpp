#include "trihopf/bicross.hpp"

#include <algorithm>
#include <functional>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

std::vector<int> positions(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < h.size(); ++i) pos[h.elements[i]] = i;
  return pos;
}

// g = x y with x in first, y in second, as positions.
struct Factorizer {
  std::vector<std::pair<int, int>> table;
  Factorizer(const FiniteGroup& g, const Subgroup& first, const Subgroup& second) : table(g.order(), {-1, -1}) {
    for (int i = 0; i < first.size(); ++i)
      for (int j = 0; j < second.size(); ++j) {
        int p = g.mul(first.elements[i], second.elements[j]);
        if (table[p].first >= 0) throw StructureError("element " + std::to_string(p) + " factors twice");
        table[p] = {i, j};
      }
    for (int p = 0; p < g.order(); ++p)
      if (table[p].first < 0) throw StructureError("element " + std::to_string(p) + " has no factorization");
  }
};

bool perfect_subgroup(const FiniteGroup& g, const Subgroup& h) { return is_perfect(subgroup_as_group(g, h)); }

int abelianization_order(const FiniteGroup& g, const Subgroup& h) {
  FiniteGroup s = subgroup_as_group(g, h);
  return s.order() / commutator_subgroup(s).size();
}

int fixed_points(const std::vector<std::vector<int>>& act) {
  int n = act.empty() ? 0 : static_cast<int>(act[0].size());
  int count = 0;
  for (int x = 0; x < n; ++x) {
    bool fixed = true;
    for (const auto& row : act)
      if (row[x] != x) fixed = false;
    if (fixed) ++count;
  }
  return count;
}

}  // namespace

ExactFactorization make_factorization(const FiniteGroup& g, const Subgroup& g1, const Subgroup& g2) {
  if (g1.size() * g2.size() != g.order()) {
    throw StructureError("|G1||G2| = " + std::to_string(g1.size() * g2.size()) + " != |G| = " + std::to_string(g.order()));
  }
  for (int x : g1.elements)
    if (x != 0 && g2.contains(x)) throw StructureError("G1 and G2 share the element " + std::to_string(x));
  return ExactFactorization{g, g1, g2};
}

MatchedActions matched_actions(const ExactFactorization& f) {
  const FiniteGroup& g = f.g;
  Factorizer f12(g, f.g1, f.g2), f21(g, f.g2, f.g1);
  int n1 = f.g1.size(), n2 = f.g2.size();
  MatchedActions m;
  m.g1_on_g2.assign(n1, std::vector<int>(n2));
  m.g2_on_g1.assign(n2, std::vector<int>(n1));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      int ab = g.mul(f.g1.elements[a], f.g2.elements[b]);
      int ba = g.mul(f.g2.elements[b], f.g1.elements[a]);
      m.g1_on_g2[a][b] = f21.table[ab].first;
      m.g2_on_g1[b][a] = f12.table[ba].first;
    }
  return m;
}

std::vector<ExactFactorization> find_exact_factorizations(const FiniteGroup& g, int limit) {
  std::vector<ExactFactorization> out;
  auto subs = all_subgroups(g);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      if (static_cast<int>(out.size()) >= limit) return out;
      if (a.size() * b.size() != g.order()) continue;
      if (intersection(g, a, b).size() != 1) continue;
      out.push_back(ExactFactorization{g, a, b});
    }
  return out;
}

HopfPresentation bicrossproduct(const ExactFactorization& f, int conductor) {
  make_factorization(f.g, f.g1, f.g2);
  const FiniteGroup& g = f.g;
  auto m = matched_actions(f);
  auto p1 = positions(g, f.g1), p2 = positions(g, f.g2);
  int n1 = f.g1.size(), n2 = f.g2.size(), d = n1 * n2;
  auto idx = [n1](int b, int a) { return b * n1 + a; };
  auto el1 = [&](int a) { return f.g1.elements[a]; };
  auto el2 = [&](int b) { return f.g2.elements[b]; };
  auto inv1 = [&](int a) { return p1[g.inv(el1(a))]; };
  auto inv2 = [&](int b) { return p2[g.inv(el2(b))]; };

  HopfPresentation h;
  h.algebra = StructureAlgebra(d, conductor);
  // (delta_b (x) a)(delta_c (x) a') = [b = a.c] delta_b (x) a a'
  for (int b = 0; b < n2; ++b)
    for (int a = 0; a < n1; ++a)
      for (int c = 0; c < n2; ++c)
        for (int a2 = 0; a2 < n1; ++a2) {
          SparseVec v;
          if (m.g1_on_g2[a][c] == b) v.emplace_back(idx(b, p1[g.mul(el1(a), el1(a2))]), Cyclotomic(1));
          h.algebra.set_product(idx(b, a), idx(c, a2), std::move(v));
        }
  Vec unit(d);
  for (int b = 0; b < n2; ++b) unit[idx(b, 0)] = Cyclotomic(1);
  h.algebra.set_unit(unit);

  // Delta(delta_p (x) a) = sum_{bc = p} (delta_b (x) a) (x) (delta_c (x) b^-1 . a)
  h.comult.assign(d, Tensor2(d, d));
  for (int b = 0; b < n2; ++b)
    for (int c = 0; c < n2; ++c) {
      int p = p2[g.mul(el2(b), el2(c))];
      for (int a = 0; a < n1; ++a) h.comult[idx(p, a)](idx(b, a), idx(c, m.g2_on_g1[inv2(b)][a])) = Cyclotomic(1);
    }
  h.counit.assign(d, Cyclotomic(0));
  for (int a = 0; a < n1; ++a) h.counit[idx(0, a)] = Cyclotomic(1);

  // S(f)(x) = sum_a f_{(x^-1 . a)^-1}((a^-1 . x)^-1) a, the first action being G2 on G1.
  h.antipode = Matrix(d, d);
  for (int x = 0; x < n2; ++x)
    for (int a = 0; a < n1; ++a) {
      int a0 = inv1(m.g2_on_g1[inv2(x)][a]);
      int p = inv2(m.g1_on_g2[inv1(a)][x]);
      h.antipode(idx(x, a), idx(p, a0)) += Cyclotomic(1);
    }
  return h;
}

BiperfectResult biperfect_test(const ExactFactorization& f) {
  BiperfectResult r;
  const FiniteGroup& g = f.g;
  r.group_theoretic = perfect_subgroup(g, f.g1) && perfect_subgroup(g, f.g2) && is_self_normalizing(g, f.g1) &&
                      is_self_normalizing(g, f.g2);
  auto m = matched_actions(f);
  r.formula_hdual = fixed_points(m.g1_on_g2) * abelianization_order(g, f.g1);
  r.formula_h = fixed_points(m.g2_on_g1) * abelianization_order(g, f.g2);
  HopfPresentation h = bicrossproduct(f, g.exponent());
  r.grouplike_count_h = static_cast<int>(grouplikes(h).size());
  r.grouplike_count_hdual = static_cast<int>(grouplikes(dual_hopf(h)).size());
  bool biperfect = r.grouplike_count_h == 1 && r.grouplike_count_hdual == 1;
  r.consistent = r.grouplike_count_h == r.formula_h && r.grouplike_count_hdual == r.formula_hdual &&
                 r.group_theoretic == biperfect;
  return r;
}

std::vector<int> predicted_block_sizes(const ExactFactorization& f) {
  const FiniteGroup& g = f.g;
  auto m = matched_actions(f);
  int n1 = f.g1.size(), n2 = f.g2.size();
  std::vector<char> seen(n2, 0);
  std::vector<int> out;
  for (int x = 0; x < n2; ++x) {
    if (seen[x]) continue;
    std::vector<int> stab;
    for (int a = 0; a < n1; ++a) {
      seen[m.g1_on_g2[a][x]] = 1;
      if (m.g1_on_g2[a][x] == x) stab.push_back(f.g1.elements[a]);
    }
    Subgroup s = make_subgroup(g, stab);
    auto prof = block_profile(group_algebra_structure(subgroup_as_group(g, s), 1));
    for (int v : prof.sizes) out.push_back(v * n1 / s.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

DualityResult duality_check(const ExactFactorization& f) {
  const FiniteGroup& g = f.g;
  HopfPresentation h = bicrossproduct(f);
  HopfPresentation hd = dual_hopf(h);
  HopfPresentation swapped = bicrossproduct(ExactFactorization{g, f.g2, f.g1});
  auto p1 = positions(g, f.g1), p2 = positions(g, f.g2);
  Factorizer f12(g, f.g1, f.g2), f21(g, f.g2, f.g1);
  int n1 = f.g1.size(), n2 = f.g2.size(), d = n1 * n2;

  // Each candidate sends (a, b) in G1 x G2 to the pair (b', a') labelling (delta_b' (x) a')^*.
  using Corr = std::function<std::pair<int, int>(int, int)>;
  auto el1 = [&](int a) { return f.g1.elements[a]; };
  auto el2 = [&](int b) { return f.g2.elements[b]; };
  std::vector<std::pair<std::string, Corr>> candidates = {
      {"(a,b) -> (b,a)", [&](int a, int b) { return std::pair{b, a}; }},
      {"(a,b) -> (b^-1,a^-1)", [&](int a, int b) { return std::pair{p2[g.inv(el2(b))], p1[g.inv(el1(a))]}; }},
      {"(a,b) -> (b^-1,a)", [&](int a, int b) { return std::pair{p2[g.inv(el2(b))], a}; }},
      {"(a,b) -> (b,a^-1)", [&](int a, int b) { return std::pair{b, p1[g.inv(el1(a))]}; }},
      {"(a,b) -> factors of ab = b'a'",
       [&](int a, int b) {
         auto [x, y] = f21.table[g.mul(el1(a), el2(b))];
         return std::pair{x, y};
       }},
      {"(a,b) -> factors of (ab)^-1 = b'a'",
       [&](int a, int b) {
         auto [x, y] = f21.table[g.inv(g.mul(el1(a), el2(b)))];
         return std::pair{x, y};
       }},
      {"(a,b) -> factors of ba = a'b'",
       [&](int a, int b) {
         auto [x, y] = f12.table[g.mul(el2(b), el1(a))];
         return std::pair{y, x};
       }},
      {"(a,b) -> factors of (ba)^-1 = a'b'",
       [&](int a, int b) {
         auto [x, y] = f12.table[g.inv(g.mul(el2(b), el1(a)))];
         return std::pair{y, x};
       }},
  };

  DualityResult out;
  Report last;
  for (const auto& [name, corr] : candidates) {
    Matrix iso(d, d);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) {
        auto [b2, a2] = corr(a, b);
        iso(b2 * n1 + a2, a * n2 + b) = Cyclotomic(1);
      }
    Report r = verify_hopf_map(swapped, hd, iso);
    if (r.passed()) {
      out.report = r;
      out.map = name;
      out.iso = iso;
      return out;
    }
    last = r;
  }
  out.report = last;
  out.report.add("canonical correspondence", false, "no candidate correspondence is a Hopf isomorphism");
  return out;
}

}  // namespace trihopf
