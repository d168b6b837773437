#include "trihopf/gallery.hpp"

#include <algorithm>
#include <cstdlib>

#include "trihopf/bicross.hpp"
#include "trihopf/errors.hpp"
#include "trihopf/onecocycle.hpp"
#include "trihopf/pointed_super.hpp"

#ifndef TRIHOPF_GALLERY_DIR
#define TRIHOPF_GALLERY_DIR "gallery"
#endif

namespace trihopf {

namespace {

int int_param(const Json& p, const char* key) {
  const Json& v = p.at(key);
  if (!v.is_number_integer()) throw UsageError(std::string("parameter '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_param(const Json& v, const char* key) {
  if (v.is_number_integer()) return Rational(v.get<int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw UsageError(std::string("parameter '") + key + "' must be a rational");
}

Json defaults(const std::string& b) {
  if (b == "sweedler") return {{"lambda", "1"}};
  if (b == "hn") return {{"n", 2}};
  if (b == "klein_pointed") return {{"n10", 1}, {"n11", 1}};
  return Json::object();
}

// Host k[G~] and Jbar from a bijective 1-cocycle datum.
GalleryObject from_cocycle(const CocycleDatum& d) {
  CocycleTwist ct = jbar(d);
  GalleryObject g;
  g.hopf = twist_hopf(ct.host, ct.twist);
  g.r = twist_r(ct.host, one_tensor(ct.host), ct.twist);
  return g;
}

}  // namespace

std::vector<std::string> gallery_builders() {
  return {"sweedler", "hn", "klein_pointed", "dim16", "dim36", "cotriangular_p3", "bicross_s3", "group_s3", "dual_group_s3"};
}

Json normalized_params(const std::string& builder, const Json& params) {
  auto names = gallery_builders();
  if (std::find(names.begin(), names.end(), builder) == names.end())
    throw UsageError("unknown gallery object '" + builder + "'");
  Json out = defaults(builder);
  if (!params.is_null() && !params.is_object()) throw UsageError("gallery parameters must be an object");
  if (params.is_object())
    for (const auto& [k, v] : params.items()) {
      if (!out.contains(k)) throw UsageError("gallery object '" + builder + "' has no parameter '" + k + "'");
      out[k] = v;
    }
  if (out.contains("lambda")) out["lambda"] = rational_param(out["lambda"], "lambda").str();
  return out;
}

HopfPresentation sweedler_hopf() { return build_hd(hn_datum(1)).hopf; }

Tensor2 sweedler_r_matrix(const Rational& lambda) {
  HopfPresentation h = sweedler_hopf();
  Tensor2 r = r_u(h, h.e(1));
  Cyclotomic c = Cyclotomic(lambda) * Cyclotomic(Rational(1, 2));
  r(2, 2) -= c;
  r(2, 3) += c;
  r(3, 3) -= c;
  r(3, 2) -= c;
  return r;
}

CotriangularInput cotriangular_p3_input() {
  const int p = 3, n = p * p;
  FiniteGroup a = direct_product(cyclic_group(p), cyclic_group(p));
  std::vector<std::vector<int>> act(2, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    act[0][x] = x;
    act[1][x] = (x / p) * p + (p - x % p) % p;
  }
  SemidirectProduct sd = semidirect_product(cyclic_group(2), a, act);
  CotriangularInput in;
  in.g = sd.group;
  std::vector<int> h(n);
  for (int x = 0; x < n; ++x) h[x] = sd.pair(0, x);
  in.h = make_subgroup(in.g, h);
  in.conductor = p;
  in.j = Tensor2(2 * n, 2 * n);
  Cyclotomic s(Rational(1, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int e = (((x / p) * (y % p) - (x % p) * (y / p)) % p + p) % p;
      in.j(h[x], h[y]) = s * Cyclotomic::root_of_unity(e, p);
    }
  return in;
}

GalleryObject build_gallery(const std::string& builder, const Json& params) {
  Json p = normalized_params(builder, params);
  GalleryObject g;
  if (builder == "sweedler") {
    g.hopf = sweedler_hopf();
    g.r = sweedler_r_matrix(Rational::parse(p["lambda"].get<std::string>()));
  } else if (builder == "hn" || builder == "klein_pointed") {
    PointedDatum d = builder == "hn" ? hn_datum(int_param(p, "n"))
                                     : klein_pointed_datum(int_param(p, "n10"), int_param(p, "n11"));
    PointedAlgebra a = build_hd(d);
    g.hopf = a.hopf;
    g.r = minimal_triangular_structure(a, canonical_tdatum(d)).r;
  } else if (builder == "dim16") {
    g = from_cocycle(klein_on_z4_datum());
  } else if (builder == "dim36") {
    g = from_cocycle(s3_on_z6_datum());
  } else if (builder == "cotriangular_p3") {
    CotriangularInput in = cotriangular_p3_input();
    HopfPresentation host = group_algebra(in.g, in.conductor);
    Twist t = cotriangular_twist(in);
    g.hopf = twist_hopf(host, t);
    g.r = twist_r(host, one_tensor(host), t);
  } else if (builder == "bicross_s3") {
    FiniteGroup s3 = symmetric_group(3);
    g.hopf = bicrossproduct(make_factorization(s3, generated_subgroup(s3, {s3.find("(1 2 3)")}),
                                               generated_subgroup(s3, {s3.find("(1 2)")})));
  } else if (builder == "group_s3") {
    g.hopf = group_algebra(symmetric_group(3), 1);
    g.r = one_tensor(g.hopf);
  } else if (builder == "dual_group_s3") {
    g.hopf = dual_hopf(group_algebra(symmetric_group(3), 1));
  }
  g.builder = builder;
  g.params = p;
  return g;
}

GalleryReport gallery_report(const HopfPresentation& h, const std::optional<Tensor2>& r) {
  GalleryReport out;
  Json& p = out.profile;
  Report hopf = verify_hopf(h);
  out.checks.merge(hopf, "hopf: ");
  p["dim"] = h.dim();
  p["conductor"] = h.conductor();
  p["hopf_axioms"] = hopf.passed();
  if (!hopf.passed()) return out;

  p["grouplikes"] = static_cast<int>(grouplikes(h).size());
  p["commutative"] = is_commutative(h);
  p["cocommutative"] = is_cocommutative(h);
  Matrix s2 = antipode_power(h, 2), s4 = antipode_power(h, 4), id = Matrix::identity(h.dim());
  p["s2_identity"] = s2 == id;
  p["s4_identity"] = s4 == id;
  auto bp = block_profile(h.algebra);
  p["blocks"] = bp.sizes;
  p["radical_dim"] = bp.radical_dim;
  p["dual_blocks"] = block_profile(dual_hopf(h).algebra).sizes;
  p["chevalley"] = chevalley_check(h).is_hopf_ideal;
  if (!r) return out;

  Report qt = verify_quasitriangular(h, *r);
  out.checks.merge(qt, "R: ");
  p["quasitriangular"] = qt.passed();
  if (!qt.passed()) return out;
  p["triangular"] = is_triangular(h, *r);
  p["r_rank"] = r->rank();
  p["minimal_rank"] = minimal_part(h, *r).rank;
  DrinfeldElement u = drinfeld_element(h, *r);
  p["drinfeld_u"] = vec_to_json(u.u);
  p["drinfeld_u_one"] = u.u == h.one();
  p["drinfeld_u_grouplike"] = u.grouplike;
  p["drinfeld_u_involutive"] = u.involutive;
  if (h.is_super()) return out;
  try {
    Json dims = Json::array();
    bool integral = true;
    for (const auto& v : simple_modules(h.algebra)) {
      Cyclotomic d = categorical_dimension(h, *r, v);
      integral = integral && is_rational_integer(d);
      dims.push_back(scalar_to_json(d));
    }
    p["categorical_dims"] = dims;
    p["categorical_dims_integral"] = integral;
  } catch (const NonSplitError&) {
    p["categorical_dims"] = nullptr;
  }
  return out;
}

std::string gallery_dir() {
  if (const char* env = std::getenv("TRIHOPF_GALLERY_DIR")) return env;
  return TRIHOPF_GALLERY_DIR;
}

Json load_manifest() { return load_json_file(gallery_dir() + "/manifest.json"); }

std::vector<Json> manifest_entries(const Json& manifest, const std::string& builder, const Json& params) {
  std::vector<Json> out;
  for (const auto& e : manifest.at("entries")) {
    if (e.at("builder") != builder) continue;
    if (normalized_params(builder, e.value("params", Json::object())) == params) out.push_back(e);
  }
  return out;
}

Report compare_expectations(const Json& profile, const Json& expect) {
  Report rep;
  for (const auto& [key, entry] : expect.items()) {
    const Json& want = entry.at("value");
    if (!profile.contains(key)) {
      rep.add("expect " + key, false, "not computed");
      continue;
    }
    const Json& got = profile.at(key);
    bool ok = got == want;
    rep.add("expect " + key, ok, ok ? "" : "got " + got.dump() + ", expected " + want.dump());
  }
  return rep;
}

}  // namespace trihopf
