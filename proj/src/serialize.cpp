#include "trihopf/serialize.hpp"

#include <fstream>
#include <sstream>

#include "trihopf/errors.hpp"

namespace trihopf {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw UsageError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

int as_index(const Json& j, int bound, const std::string& where) {
  int i = as_int(j, where);
  if (i < 0 || i >= bound) bad(where, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return i;
}

const Json& as_array(const Json& j, const std::string& where, size_t len = 0) {
  if (!j.is_array()) bad(where, "expected an array");
  if (len && j.size() != len) bad(where, "expected " + std::to_string(len) + " entries");
  return j;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, size_t i) { return where + "/" + std::to_string(i); }

}  // namespace

Json scalar_to_json(const Cyclotomic& c) {
  if (c.is_rational()) return c.rational_value().str();
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.str());
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Cyclotomic(j.get<int64_t>());
    if (j.is_string()) return Cyclotomic(Rational::parse(j.get<std::string>()));
  } catch (const std::exception& e) {
    bad(where, e.what());
  }
  if (!j.is_object()) bad(where, "expected a scalar");
  int n = as_int(field(j, "conductor", where), at(where, "conductor"));
  if (n < 1) bad(at(where, "conductor"), "conductor must be positive");
  const auto& f = CyclotomicField::get(n);
  const Json& cj = as_array(field(j, "coeffs", where), at(where, "coeffs"));
  if (static_cast<int>(cj.size()) != f.degree())
    bad(at(where, "coeffs"), "expected " + std::to_string(f.degree()) + " coefficients");
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < cj.size(); ++i) {
    if (!cj[i].is_string() && !cj[i].is_number_integer()) bad(at(at(where, "coeffs"), i), "expected a rational");
    try {
      coeffs.push_back(cj[i].is_string() ? Rational::parse(cj[i].get<std::string>()) : Rational(cj[i].get<int64_t>()));
    } catch (const std::exception& e) {
      bad(at(at(where, "coeffs"), i), e.what());
    }
  }
  return Cyclotomic(f, std::move(coeffs));
}

Json tensor_to_json(const Tensor2& t) {
  Json e = Json::array();
  for (auto [i, j] : t.support()) e.push_back(Json::array({i, j, scalar_to_json(t(i, j))}));
  return Json{{"dims", {t.d1(), t.d2()}}, {"entries", e}};
}

Tensor2 tensor_from_json(const Json& j, const std::string& where) {
  const Json& dims = as_array(field(j, "dims", where), at(where, "dims"), 2);
  int d1 = as_int(dims[0], at(where, "dims/0")), d2 = as_int(dims[1], at(where, "dims/1"));
  Tensor2 t(d1, d2);
  const Json& e = as_array(field(j, "entries", where), at(where, "entries"));
  for (size_t k = 0; k < e.size(); ++k) {
    std::string w = at(at(where, "entries"), k);
    const Json& row = as_array(e[k], w, 3);
    t(as_index(row[0], d1, w + "/0"), as_index(row[1], d2, w + "/1")) += scalar_from_json(row[2], w + "/2");
  }
  return t;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(Json::array({i, scalar_to_json(v[i])}));
  return out;
}

Vec vec_from_json(const Json& j, int dim, const std::string& where) {
  Vec v(dim);
  as_array(j, where);
  for (size_t k = 0; k < j.size(); ++k) {
    std::string w = at(where, k);
    const Json& row = as_array(j[k], w, 2);
    v[as_index(row[0], dim, w + "/0")] += scalar_from_json(row[1], w + "/1");
  }
  return v;
}

Json hopf_to_json(const HopfPresentation& h) {
  int n = h.dim();
  Json products = Json::array(), coproduct = Json::array(), antipode = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : h.algebra.product(i, j)) products.push_back(Json::array({i, j, k, scalar_to_json(c)}));
  for (int k = 0; k < n; ++k)
    for (auto [i, j] : h.comult[k].support())
      coproduct.push_back(Json::array({k, i, j, scalar_to_json(h.comult[k](i, j))}));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!h.antipode(r, c).is_zero()) antipode.push_back(Json::array({r, c, scalar_to_json(h.antipode(r, c))}));
  Json out{{"format", "trihopf.hopf/1"},
           {"dim", n},
           {"conductor", h.conductor()},
           {"unit", vec_to_json(h.one())},
           {"counit", vec_to_json(h.counit)},
           {"products", products},
           {"coproduct", coproduct},
           {"antipode", antipode}};
  if (h.parity) out["parity"] = *h.parity;
  return out;
}

HopfPresentation hopf_from_json(const Json& j, const std::string& where) {
  int n = as_int(field(j, "dim", where), at(where, "dim"));
  if (n < 1) bad(at(where, "dim"), "dimension must be positive");
  int conductor = as_int(field(j, "conductor", where), at(where, "conductor"));
  if (conductor < 1) bad(at(where, "conductor"), "conductor must be positive");
  HopfPresentation h;
  h.algebra = StructureAlgebra(n, conductor);
  std::vector<Vec> prod(static_cast<size_t>(n) * n, Vec(n));
  const Json& pj = as_array(field(j, "products", where), at(where, "products"));
  for (size_t k = 0; k < pj.size(); ++k) {
    std::string w = at(at(where, "products"), k);
    const Json& row = as_array(pj[k], w, 4);
    int a = as_index(row[0], n, w + "/0"), b = as_index(row[1], n, w + "/1"), c = as_index(row[2], n, w + "/2");
    prod[static_cast<size_t>(a) * n + b][c] += scalar_from_json(row[3], w + "/3");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.algebra.set_product(a, b, prod[static_cast<size_t>(a) * n + b]);
  h.algebra.set_unit(vec_from_json(field(j, "unit", where), n, at(where, "unit")));
  h.counit = vec_from_json(field(j, "counit", where), n, at(where, "counit"));
  h.comult.assign(n, Tensor2(n, n));
  const Json& cj = as_array(field(j, "coproduct", where), at(where, "coproduct"));
  for (size_t k = 0; k < cj.size(); ++k) {
    std::string w = at(at(where, "coproduct"), k);
    const Json& row = as_array(cj[k], w, 4);
    int c = as_index(row[0], n, w + "/0"), a = as_index(row[1], n, w + "/1"), b = as_index(row[2], n, w + "/2");
    h.comult[c](a, b) += scalar_from_json(row[3], w + "/3");
  }
  h.antipode = Matrix(n, n);
  const Json& sj = as_array(field(j, "antipode", where), at(where, "antipode"));
  for (size_t k = 0; k < sj.size(); ++k) {
    std::string w = at(at(where, "antipode"), k);
    const Json& row = as_array(sj[k], w, 3);
    int r = as_index(row[0], n, w + "/0"), c = as_index(row[1], n, w + "/1");
    h.antipode(r, c) += scalar_from_json(row[2], w + "/2");
  }
  if (auto it = j.find("parity"); it != j.end()) {
    const Json& par = as_array(*it, at(where, "parity"), n);
    Parity p(n);
    for (int i = 0; i < n; ++i) {
      int v = as_int(par[i], at(at(where, "parity"), i));
      if (v != 0 && v != 1) bad(at(at(where, "parity"), i), "parity must be 0 or 1");
      p[i] = v;
    }
    h.parity = p;
  }
  return h;
}

Json group_to_json(const FiniteGroup& g) {
  Json out{{"order", g.order()}, {"table", g.table()}};
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  const Json& t = as_array(field(j, "table", where), at(where, "table"));
  std::vector<std::vector<int>> table;
  for (size_t r = 0; r < t.size(); ++r) {
    const Json& row = as_array(t[r], at(at(where, "table"), r), t.size());
    std::vector<int> v;
    for (size_t c = 0; c < row.size(); ++c) v.push_back(as_int(row[c], at(at(at(where, "table"), r), c)));
    table.push_back(std::move(v));
  }
  FiniteGroup g;
  try {
    g = FiniteGroup::from_cayley_table(table);
  } catch (const StructureError& e) {
    bad(at(where, "table"), e.what());
  }
  if (auto it = j.find("names"); it != j.end()) g.set_names(it->get<std::vector<std::string>>());
  return g;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& a : r.results) {
    Json c{{"name", a.name}, {"passed", a.passed}};
    if (!a.witness.empty()) c["witness"] = a.witness;
    checks.push_back(c);
  }
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace trihopf
