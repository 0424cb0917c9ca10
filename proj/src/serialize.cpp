#include "kakeya/serialize.hpp"

namespace kakeya {

namespace {
const Int kJsonSafe = Int(1) << 53;
}

Json int_to_json(const Int& x) {
  if (x <= kJsonSafe && x >= -kJsonSafe) return Json(to_i64(x));
  return Json(x.str());
}

Int json_to_int(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<uint64_t>());
  throw ConfigError("expected an integer (number or decimal string)");
}

Json int_set_to_json(const IntSet& s) {
  Json arr = Json::array();
  for (const Int& x : s) arr.push_back(int_to_json(x));
  return arr;
}

IntSet json_to_int_set(const Json& j) {
  std::vector<Int> v;
  for (const auto& e : j) v.push_back(json_to_int(e));
  return IntSet(std::move(v));
}

Json planar_to_json(const PlanarSet& s) {
  Json arr = Json::array();
  for (const auto& [x, y] : s) arr.push_back(Json::array({int_to_json(x), int_to_json(y)}));
  return arr;
}

PlanarSet json_to_planar(const Json& j) {
  std::vector<PlanarPoint> pts;
  for (const auto& e : j) pts.emplace_back(json_to_int(e.at(0)), json_to_int(e.at(1)));
  return PlanarSet(std::move(pts));
}

Json certificate_to_json(const ApCertificate& c) {
  Json entries = Json::object();
  for (const auto& [d, a] : c.entries) entries[d.str()] = int_to_json(a);
  return Json{{"k", c.k}, {"entries", entries}};
}

ApCertificate json_to_certificate(const Json& j) {
  ApCertificate c;
  c.k = j.at("k").get<int64_t>();
  for (const auto& [key, val] : j.at("entries").items()) c.entries[Int(key)] = json_to_int(val);
  return c;
}

Json qr_to_json(const QRConstruction& c) {
  return Json{{"k", c.k},
              {"m", c.m},
              {"Q", int_to_json(c.q)},
              {"S", int_set_to_json(c.s)},
              {"certificate", certificate_to_json(c.certificate.certificate())},
              {"size_bound", int_to_json(c.size_bound)},
              {"size_ok", c.size_ok}};
}

Json fpset_to_json(const FpSet& s) {
  Json pts = Json::array();
  for (uint64_t v : s) {
    Json coords = Json::array();
    for (uint32_t c : s.space().decode(v)) coords.push_back(c);
    pts.push_back(coords);
  }
  return Json{{"p", s.space().p}, {"n", s.space().n}, {"points", pts}};
}

FpSet json_to_fpset(const Json& j) {
  FpSpace sp(j.at("p").get<uint32_t>(), j.at("n").get<uint32_t>());
  std::vector<uint64_t> pts;
  for (const auto& e : j.at("points")) {
    std::vector<uint32_t> coords;
    for (const auto& c : e) coords.push_back(c.get<uint32_t>());
    pts.push_back(sp.encode(coords));
  }
  return FpSet(sp, std::move(pts));
}

Json joint_z_to_json(const JointZ& j) {
  Json atoms = Json::array();
  for (const auto& [xy, w] : j.mass)
    atoms.push_back(Json::array(
        {int_to_json(xy.first), int_to_json(xy.second), rat_to_string(w)}));
  return Json{{"ambient", "Z"}, {"atoms", atoms}};
}

JointZ json_to_joint_z(const Json& j) {
  if (j.at("ambient") != "Z") throw ConfigError("expected ambient Z");
  JointZ out;
  for (const auto& e : j.at("atoms"))
    out.mass[{json_to_int(e.at(0)), json_to_int(e.at(1))}] +=
        rat_from_string(e.at(2).get<std::string>());
  out.check();
  return out;
}

Json joint_fp_to_json(const JointFp& j) {
  Json atoms = Json::array();
  for (const auto& [xy, w] : j.mass) {
    Json xc = Json::array(), yc = Json::array();
    for (uint32_t c : j.space.decode(xy.first)) xc.push_back(c);
    for (uint32_t c : j.space.decode(xy.second)) yc.push_back(c);
    atoms.push_back(Json::array({xc, yc, rat_to_string(w)}));
  }
  return Json{{"ambient", Json{{"type", "Fp"}, {"p", j.space.p}, {"n", j.space.n}}},
              {"atoms", atoms}};
}

JointFp json_to_joint_fp(const Json& j) {
  const Json& amb = j.at("ambient");
  if (amb.at("type") != "Fp") throw ConfigError("expected ambient Fp");
  JointFp out;
  out.space = FpSpace(amb.at("p").get<uint32_t>(), amb.at("n").get<uint32_t>());
  for (const auto& e : j.at("atoms")) {
    std::vector<uint32_t> xc, yc;
    for (const auto& c : e.at(0)) xc.push_back(c.get<uint32_t>());
    for (const auto& c : e.at(1)) yc.push_back(c.get<uint32_t>());
    out.mass[{out.space.encode(xc), out.space.encode(yc)}] +=
        rat_from_string(e.at(2).get<std::string>());
  }
  out.check();
  return out;
}

Json es_instance_to_json(const ESInstance& inst) {
  Json primes = Json::array();
  for (const Int& p : inst.primes) primes.push_back(int_to_json(p));
  return Json{{"primes", primes}, {"k", inst.k}, {"w", int_to_json(inst.w)}};
}

ESInstance json_to_es_instance(const Json& j) {
  ESInstance inst;
  for (const auto& e : j.at("primes")) inst.primes.push_back(json_to_int(e));
  inst.k = j.at("k").get<int64_t>();
  inst.w = json_to_int(j.at("w"));
  inst.check();
  return inst;
}

}  // namespace kakeya
