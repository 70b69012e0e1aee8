#include "hingekit/io.hpp"

#include <boost/math/constants/constants.hpp>
#include <fstream>
#include <stdexcept>

namespace hingekit {

namespace {

mpq_class parse_rational(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational: " + j.get<std::string>());
  q.canonicalize();
  return q;
}

void expect_schema(const json& j) {
  if (j.contains("schema") && j["schema"] != kSchema)
    throw std::invalid_argument("unsupported schema " + j["schema"].dump());
}

template <class T>
json polygon_json(const Polygon<T>& p) {
  json a = json::array();
  for (const auto& v : p) a.push_back(point_json(v));
  return a;
}

template <class T>
Polygon<T> polygon_from_json(const json& j) {
  Polygon<T> p;
  for (const auto& v : j) p.push_back(point_from_json<T>(v));
  return p;
}

}  // namespace

json scalar_json(const Exact& x) {
  return {{"a", x.a().get_str()}, {"b", x.b().get_str()}, {"c", x.c().get_str()}, {"d", x.d().get_str()}};
}

json scalar_json(const Real& x) {
  return {{"approx", real_to_string(x)}, {"epsilon", real_to_string(approx_epsilon(), 6)}};
}

template <>
Exact scalar_from_json<Exact>(const json& j) {
  if (j.is_number_integer()) return Exact(j.get<long>());
  if (j.is_string()) return Exact(parse_rational(j));
  if (!j.is_object() || j.contains("approx")) throw std::invalid_argument("exact scalar expected");
  auto part = [&](const char* k) { return j.contains(k) ? parse_rational(j[k]) : mpq_class(0); };
  return Exact(part("a"), part("b"), part("c"), part("d"));
}

template <>
Real scalar_from_json<Real>(const json& j) {
  if (j.is_number()) return Real(j.get<double>());
  if (j.is_string()) return real_from_string(j.get<std::string>());
  if (j.contains("approx")) return real_from_string(j["approx"].get<std::string>());
  return ScalarTraits<Exact>::to_real(scalar_from_json<Exact>(j));
}

template <class T>
json point_json(const Point<T>& p) {
  return json::array({scalar_json(p.x()), scalar_json(p.y())});
}

template <class T>
Point<T> point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be a pair");
  return Point<T>(scalar_from_json<T>(j[0]), scalar_from_json<T>(j[1]));
}

template <class T>
json motion_json(const RigidMotion<T>& m) {
  json j{{"linear", json::array({json::array({scalar_json(m.linear(0, 0)), scalar_json(m.linear(0, 1))}),
                                 json::array({scalar_json(m.linear(1, 0)), scalar_json(m.linear(1, 1))})})},
         {"translation", point_json<T>(m.translation)}};
  if constexpr (ScalarTraits<T>::exact) {
    if (auto a = angle_of(m.linear)) j["angle15"] = a->steps;
  }
  return j;
}

template <class T>
RigidMotion<T> motion_from_json(const json& j) {
  RigidMotion<T> m;
  m.translation = point_from_json<T>(j.at("translation"));
  if (j.contains("linear")) {
    const auto& l = j["linear"];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.linear(r, c) = scalar_from_json<T>(l.at(r).at(c));
  } else if (j.contains("angle15")) {
    if constexpr (ScalarTraits<T>::exact) {
      m.linear = rotation_matrix(Angle15(j["angle15"].get<int>()));
    } else {
      m.linear = rotation_matrix(Real(j["angle15"].get<int>()) * Real(15) * boost::math::constants::pi<Real>() /
                                 Real(180));
    }
  }
  return m;
}

json polyform_json(const Polyform& f) {
  json cells = json::array();
  for (const auto& c : f.cells) cells.push_back({c.x, c.y, c.t});
  return {{"schema", kSchema}, {"family", family_name(f.family)}, {"cells", cells}};
}

Polyform polyform_from_json(const json& j) {
  expect_schema(j);
  if (j.contains("grid")) return parse_omino_grid(j["grid"].get<std::string>());
  Family f = family_from_name(j.at("family").get<std::string>());
  std::vector<Cell> cells;
  for (const auto& c : j.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.size() > 2 ? c[2].get<int>() : 0});
  return make_polyform(f, cells);
}

template <class T>
json dissection_json(const HingedDissection<T>& h) {
  json pieces = json::array();
  for (const auto& p : h.pieces)
    pieces.push_back({{"id", p.id}, {"polygon", polygon_json(p.polygon)}, {"anchors", polygon_json(p.anchors)}});
  json hinges = json::array();
  for (const auto& hg : h.hinges) hinges.push_back({hg.piece_a, hg.anchor_a, hg.piece_b, hg.anchor_b});
  return {{"schema", kSchema},
          {"mode", ScalarTraits<T>::mode},
          {"name", h.name},
          {"topology", topology_name(h.topology)},
          {"pieces", pieces},
          {"hinges", hinges}};
}

template <class T>
HingedDissection<T> dissection_from_json(const json& j) {
  expect_schema(j);
  HingedDissection<T> h;
  h.name = j.value("name", "");
  h.topology = topology_from_name(j.at("topology").get<std::string>());
  for (const auto& p : j.at("pieces"))
    h.pieces.push_back({p.value("id", "p" + std::to_string(h.pieces.size())), polygon_from_json<T>(p.at("polygon")),
                        polygon_from_json<T>(p.at("anchors"))});
  for (const auto& hg : j.at("hinges"))
    h.hinges.push_back({hg.at(0).get<int>(), hg.at(1).get<int>(), hg.at(2).get<int>(), hg.at(3).get<int>()});
  return h;
}

template <class T>
json complex_json(const CellComplex<T>& c) {
  json cells = json::array();
  for (const auto& p : c.cells) cells.push_back(polygon_json(p));
  return {{"family", c.family}, {"cells", cells}};
}

template <class T>
CellComplex<T> complex_from_json(const json& j) {
  CellComplex<T> c;
  c.family = j.value("family", "");
  for (const auto& p : j.at("cells")) c.cells.push_back(polygon_from_json<T>(p));
  return c;
}

template <class T>
json realization_json(const Realization<T>& r) {
  json motions = json::array();
  for (const auto& m : r.motions) motions.push_back(motion_json(m));
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"cell", t.cell},
                     {"parent", t.parent},
                     {"host_piece", t.host_piece},
                     {"hinge_point", point_json(t.hinge_point)},
                     {"version", t.version},
                     {"reversed", t.reversed},
                     {"note", t.note}});
  return {{"schema", kSchema},          {"mode", ScalarTraits<T>::mode}, {"dissection", dissection_json(r.dissection)},
          {"motions", motions},         {"target", complex_json(r.target)}, {"trace", trace}};
}

template <class T>
Realization<T> realization_from_json(const json& j) {
  expect_schema(j);
  Realization<T> r;
  r.dissection = dissection_from_json<T>(j.at("dissection"));
  for (const auto& m : j.at("motions")) r.motions.push_back(motion_from_json<T>(m));
  r.target = complex_from_json<T>(j.at("target"));
  if (j.contains("trace"))
    for (const auto& t : j["trace"])
      r.trace.push_back({t.value("cell", -1), t.value("parent", -1), t.value("host_piece", -1),
                         point_from_json<T>(t.at("hinge_point")), t.value("version", 0), t.value("reversed", false),
                         t.value("note", "")});
  return r;
}

template <class T>
json rotation_json(const Rotation<T>& r) {
  json motions = json::array();
  for (const auto& m : r.motions) motions.push_back(motion_json(m));
  return {{"name", r.name}, {"polygon", polygon_json(r.polygon)}, {"motions", motions}};
}

template <class T>
Rotation<T> rotation_from_json(const json& j) {
  Rotation<T> r;
  r.name = j.value("name", "");
  r.polygon = polygon_from_json<T>(j.at("polygon"));
  for (const auto& m : j.at("motions")) r.motions.push_back(motion_from_json<T>(m));
  return r;
}

template <class T>
json extendible_json(const ExtendibleChain<T>& c) {
  return {{"schema", kSchema},
          {"mode", ScalarTraits<T>::mode},
          {"chain", dissection_json(c.chain)},
          {"p", rotation_json(c.p)},
          {"q", rotation_json(c.q)}};
}

template <class T>
ExtendibleChain<T> extendible_from_json(const json& j) {
  expect_schema(j);
  return {dissection_from_json<T>(j.at("chain")), rotation_from_json<T>(j.at("p")), rotation_from_json<T>(j.at("q"))};
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json j{{"schema", kSchema}, {"mode", r.mode}, {"pass", r.pass()}, {"checks", checks}};
  if (r.mode == "approx") {
    json m{{"decisions", r.margin.decisions}, {"separation", real_to_string(r.margin.separation(), 6)}};
    if (r.margin.smallest_nonzero) m["smallest_nonzero"] = real_to_string(*r.margin.smallest_nonzero, 6);
    if (r.margin.largest_zero) m["largest_zero"] = real_to_string(*r.margin.largest_zero, 6);
    j["margin"] = m;
  }
  return j;
}

json hinging_json(const SquareHinging& h) {
  json hinges = json::array();
  for (const auto& hg : h.hinges) hinges.push_back({hg.a, corner_name(hg.ca), hg.b, corner_name(hg.cb)});
  return {{"squares", h.n}, {"hinges", hinges}, {"label", h.label()}};
}

json certificate_json(const LowerBoundCertificate& c) {
  json verdicts = json::array();
  for (const auto& v : c.verdicts)
    verdicts.push_back({{"index", v.index},
                        {"hinging", hinging_json(v.hinging)},
                        {"realizable", v.realizable},
                        {"unrealizable", v.unrealizable},
                        {"nodes", v.nodes}});
  return {{"schema", kSchema},      {"n", c.n},           {"assumption", c.assumption},
          {"impossible", c.impossible}, {"verdicts", verdicts}, {"seconds", c.seconds}};
}

std::string document_mode(const json& j) {
  if (j.contains("mode")) return j["mode"].get<std::string>();
  if (j.contains("dissection") && j["dissection"].contains("mode")) return j["dissection"]["mode"].get<std::string>();
  return "exact";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

#define HINGEKIT_IO(T)                                                             \
  template json point_json<T>(const Point<T>&);                                    \
  template Point<T> point_from_json<T>(const json&);                               \
  template json motion_json<T>(const RigidMotion<T>&);                             \
  template RigidMotion<T> motion_from_json<T>(const json&);                        \
  template json dissection_json<T>(const HingedDissection<T>&);                    \
  template HingedDissection<T> dissection_from_json<T>(const json&);               \
  template json complex_json<T>(const CellComplex<T>&);                            \
  template CellComplex<T> complex_from_json<T>(const json&);                       \
  template json realization_json<T>(const Realization<T>&);                        \
  template Realization<T> realization_from_json<T>(const json&);                   \
  template json rotation_json<T>(const Rotation<T>&);                              \
  template Rotation<T> rotation_from_json<T>(const json&);                         \
  template json extendible_json<T>(const ExtendibleChain<T>&);                     \
  template ExtendibleChain<T> extendible_from_json<T>(const json&);

HINGEKIT_IO(Exact)
HINGEKIT_IO(Real)

}  // namespace hingekit
