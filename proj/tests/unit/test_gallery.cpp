#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "support/fixtures.hpp"
#include "trihopf/bicross.hpp"
#include "trihopf/errors.hpp"
#include "trihopf/gallery.hpp"
#include "trihopf/onecocycle.hpp"
#include "trihopf/pointed_super.hpp"

using namespace trihopf;

namespace {

int class_count(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  int k = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++k;
    for (int y = 0; y < g.order(); ++y) seen[g.conj(y, x)] = 1;
  }
  return k;
}

// Degrees of the irreducible characters when the nonlinear ones are forced to be 2:
// k classes, l = |G/G'| linear characters and (k - l) * 4 = |G| - l.
std::vector<int> degrees_forced_by_counting(const FiniteGroup& g) {
  int k = class_count(g);
  int l = g.order() / commutator_subgroup(g).size();
  REQUIRE((k - l) * 4 == g.order() - l);
  std::vector<int> out(l, 1);
  out.insert(out.end(), k - l, 2);
  return out;
}

// Profile entries tagged "oracle" in the manifest, recomputed here.
Json oracle_values(const std::string& builder) {
  Json o;
  if (builder == "dim16" || builder == "dim36") {
    auto d = builder == "dim16" ? klein_on_z4_datum() : s3_on_z6_datum();
    auto ct = jbar(d);
    auto deg = degrees_forced_by_counting(ct.doubled.gt.group);
    o["blocks"] = deg;
    // f_R : A^*cop -> A is an isomorphism for minimal R, so A^* and A share blocks.
    auto g = build_gallery(builder);
    REQUIRE(verify_f_r_isomorphism(g.hopf, *g.r).passed());
    o["dual_blocks"] = deg;
  } else if (builder == "cotriangular_p3") {
    o["blocks"] = degrees_forced_by_counting(cotriangular_p3_input().g);
  } else if (builder == "group_s3") {
    o["blocks"] = degrees_forced_by_counting(symmetric_group(3));
  } else if (builder == "dual_group_s3") {
    o["dual_blocks"] = degrees_forced_by_counting(symmetric_group(3));
  } else if (builder == "bicross_s3") {
    FiniteGroup s3 = symmetric_group(3);
    auto a3 = generated_subgroup(s3, {s3.find("(1 2 3)")}), t = generated_subgroup(s3, {s3.find("(1 2)")});
    auto f = make_factorization(s3, a3, t);
    o["grouplikes"] = biperfect_test(f).formula_h;
    o["blocks"] = predicted_block_sizes(f);
    o["dual_blocks"] = predicted_block_sizes(make_factorization(s3, t, a3));
  } else if (builder == "sweedler" || builder == "hn") {
    // I = span of the basis vectors with a nonempty exterior part is a nilpotent ideal
    // with quotient k[Z2], so Rad = I and A/Rad has two one-dimensional blocks.
    auto g = build_gallery(builder, builder == "hn" ? Json{{"n", 2}} : Json::object());
    int n = g.hopf.dim();
    std::vector<Vec> ideal;
    for (int i = 2; i < n; ++i) ideal.push_back(unit_vec(n, i));
    Subspace is(n);
    for (const auto& v : ideal) is.add(v);
    for (const auto& v : ideal)
      for (int i = 0; i < n; ++i) {
        REQUIRE(is.contains(g.hopf.mul(v, unit_vec(n, i))));
        REQUIRE(is.contains(g.hopf.mul(unit_vec(n, i), v)));
      }
    // Products of more than n - 2 ideal elements vanish.
    Vec p = unit_vec(n, n - 1);
    for (int k = 0; k < n; ++k) p = g.hopf.mul(p, unit_vec(n, 2 + k % (n - 2)));
    REQUIRE(is_zero_vec(p));
    o["blocks"] = std::vector<int>{1, 1};
    o["radical_dim"] = n - 2;
  }
  return o;
}

}  // namespace

TEST_CASE("oracle-tagged manifest values match independent computations") {
  Json m = load_manifest();
  int checked = 0;
  for (const auto& e : m["entries"]) {
    const std::string b = e["builder"];
    Json o = oracle_values(b);
    for (const auto& [key, entry] : e["expect"].items()) {
      if (entry["basis"] != "oracle") continue;
      REQUIRE_MESSAGE(o.contains(key), e["name"] << " " << key);
      CHECK_MESSAGE(o[key] == entry["value"], e["name"] << " " << key);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("gallery objects match their manifest entries") {
  Json m = load_manifest();
  for (const auto& e : m["entries"]) {
    const std::string b = e["builder"];
    if (b == "dim36") continue;  // covered by the acceptance run
    auto g = build_gallery(b, e["params"]);
    auto rep = gallery_report(g.hopf, g.r);
    CHECK_MESSAGE(rep.checks.passed(), e["name"]);
    auto cmp = compare_expectations(rep.profile, e["expect"]);
    for (const auto& r : cmp.results) CHECK_MESSAGE(r.passed, e["name"] << " " << r.name << ": " << r.witness);
  }
}

TEST_CASE("manifest lookup normalizes parameters") {
  Json m = load_manifest();
  auto p = normalized_params("sweedler", Json{{"lambda", 1}});
  CHECK(p == Json{{"lambda", "1"}});
  CHECK(manifest_entries(m, "sweedler", p).size() == 1);
  CHECK(manifest_entries(m, "sweedler", normalized_params("sweedler", Json{{"lambda", "-1"}})).size() == 1);
  CHECK(manifest_entries(m, "sweedler", normalized_params("sweedler", Json{{"lambda", "7"}})).empty());
  CHECK(normalized_params("hn", Json::object()) == Json{{"n", 2}});
  CHECK_THROWS_AS(normalized_params("nope", Json::object()), UsageError);
  CHECK_THROWS_AS(normalized_params("hn", Json{{"m", 1}}), UsageError);
}

TEST_CASE("a wrong expectation is reported with both values") {
  Json profile{{"dim", 4}};
  Json expect{{"dim", {{"value", 5}, {"basis", "identity"}}}, {"rank", {{"value", 1}, {"basis", "identity"}}}};
  auto r = compare_expectations(profile, expect);
  REQUIRE(r.results.size() == 2);
  CHECK_FALSE(r.results[0].passed);
  CHECK(r.results[0].witness == "got 4, expected 5");
  CHECK(r.results[1].witness == "not computed");
}

TEST_CASE("presentations survive a JSON round trip") {
  for (const char* b : {"sweedler", "cotriangular_p3", "bicross_s3"}) {
    auto g = build_gallery(b);
    Json j = hopf_to_json(g.hopf);
    auto back = hopf_from_json(Json::parse(j.dump()), "mem");
    CHECK(fixtures::same_presentation(back, g.hopf));
    CHECK(back.conductor() == g.hopf.conductor());
    CHECK(hopf_to_json(back).dump() == j.dump());
    if (g.r) CHECK(tensor_from_json(Json::parse(tensor_to_json(*g.r).dump()), "mem") == *g.r);
  }
  auto super = supergroup_algebra(sign_super_datum(2)).hopf;
  CHECK(fixtures::same_presentation(hopf_from_json(hopf_to_json(super), "mem"), super));

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Cyclotomic c = fixtures::small_scalar(rng, 12) * Cyclotomic(Rational(1, 1 + t % 5));
    CHECK(scalar_from_json(Json::parse(scalar_to_json(c).dump()), "s") == c);
  }
  CHECK(scalar_from_json(Json(3), "s") == Cyclotomic(3));
  CHECK(scalar_from_json(Json("-2/6"), "s") == Cyclotomic(Rational(-1, 3)));
}

TEST_CASE("malformed input names the location") {
  Json j = hopf_to_json(fixtures::sweedler_by_hand());
  auto message = [](const Json& x) {
    try {
      hopf_from_json(x, "f.json");
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  Json a = j;
  a.erase("counit");
  CHECK(message(a) == "f.json: missing key 'counit'");
  Json b = j;
  b["products"][0][2] = 9;
  CHECK(message(b) == "f.json/products/0/2: index 9 out of range [0, 4)");
  Json c = j;
  c["antipode"][1][2] = "1/0";
  CHECK(message(c).rfind("f.json/antipode/1/2:", 0) == 0);
  Json d = j;
  d["coproduct"][0][3] = Json{{"conductor", 3}, {"coeffs", {"1"}}};
  CHECK(message(d) == "f.json/coproduct/0/3/coeffs: expected 2 coefficients");
  Json e = j;
  e["parity"] = {0, 1};
  CHECK(message(e) == "f.json/parity: expected 4 entries");

  std::string path = "/tmp/trihopf_bad_input.json";
  {
    std::ofstream out(path);
    out << "{\"dim\": 4,\n \"conductor\": }";
  }
  try {
    load_json_file(path);
    FAIL("no error");
  } catch (const UsageError& err) {
    std::string w = err.what();
    CHECK(w.rfind(path + ": parse error at byte 26", 0) == 0);
  }
  CHECK_THROWS_AS(load_json_file("/nonexistent/x.json"), UsageError);
}
