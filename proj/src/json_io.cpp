#include "mcx/json_io.hpp"

#include "mcx/error.hpp"

namespace mcx {

namespace {

DyadicRational coefficient_from_json(const Json& v) {
  if (v.is_string()) return DyadicRational::parse(v.get<std::string>());
  if (v.is_number_integer()) return DyadicRational(v.get<long>());
  throw DomainError("coefficient must be a \"p/q\" string or an integer, got " + v.dump());
}

int order_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw DomainError(std::string("JSON object needs an integer \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json to_json(const MulticomplexNumber& x) {
  Json coeffs = Json::object();
  const auto c = x.coeffs();
  for (std::uint32_t m = 0; m < c.size(); ++m) {
    if (!c[m].is_zero()) coeffs[UnitIndex{m}.name()] = c[m].to_fraction_string();
  }
  return Json{{"n", x.order()}, {"coeffs", coeffs}};
}

MulticomplexNumber multicomplex_from_json(const Json& j) {
  const int n = order_from_json(j, "n");
  require_order(n);
  std::vector<DyadicRational> c(unit_count(n));
  if (j.contains("coeffs")) {
    if (!j["coeffs"].is_object()) throw DomainError("\"coeffs\" must be an object");
    for (const auto& [name, value] : j["coeffs"].items()) {
      const UnitIndex u = UnitIndex::parse(name);
      if (u.mask >= unit_count(n)) throw DomainError("unit '" + name + "' is not in I(" + std::to_string(n) + ")");
      c[u.mask] += coefficient_from_json(value);
    }
  }
  return MulticomplexNumber(n, std::move(c));
}

Json to_json(const IdempotentVector& v) {
  Json comps = Json::array();
  for (const auto& c : v.components()) {
    comps.push_back(Json{{"re", c.re.to_fraction_string()}, {"im", c.im.to_fraction_string()}});
  }
  return Json{{"n", v.order()}, {"components", comps}};
}

IdempotentVector idempotent_from_json(const Json& j) {
  const int n = order_from_json(j, "n");
  require_order(n);
  if (!j.contains("components") || !j["components"].is_array()) throw DomainError("\"components\" must be an array");
  std::vector<ComplexComponent> comps;
  for (const auto& c : j["components"]) {
    comps.push_back(ComplexComponent{coefficient_from_json(c.at("re")), coefficient_from_json(c.at("im"))});
  }
  return IdempotentVector(n, std::move(comps));
}

Json to_json(const SignedPermutation& p) { return Json{{"N", p.symbols()}, {"images", p.images()}}; }

SignedPermutation permutation_from_json(const Json& j) {
  const int n = order_from_json(j, "N");
  if (!j.contains("images") || !j["images"].is_array()) throw DomainError("\"images\" must be an array");
  auto images = j["images"].get<std::vector<int>>();
  if (static_cast<int>(images.size()) != n) throw DomainError("\"images\" length differs from \"N\"");
  return SignedPermutation(std::move(images));
}

Json to_json(const PreservingInvolution& p, EpsOrder labels) {
  Json images = Json::array();
  for (const auto& u : p.unit_images) images.push_back(u.name());
  return Json{{"kernel_dim", p.kernel_dimension},
              {"matrix", p.matrix.entries()},
              {"perm", to_json(relabel(p.automorphism.permutation(), labels))},
              {"unit_images", images}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"suite", r.name}, {"passed", r.passed}, {"checks", checks}};
}

}  // namespace mcx
