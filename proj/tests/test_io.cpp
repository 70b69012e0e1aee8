#include <doctest.h>

#include <regex>

#include "hingekit/io.hpp"
#include "hingekit/svg.hpp"

using namespace hingekit;

namespace {

int count(const std::string& s, const std::string& what) {
  int n = 0;
  for (size_t at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("exact scalars round trip through json") {
  Exact x(mpq_class(1, 3), mpq_class(-2, 7), mpq_class(0), mpq_class(5, 2));
  auto j = scalar_json(x);
  CHECK(j["b"] == "-2/7");
  CHECK(scalar_from_json<Exact>(j) == x);
  CHECK(scalar_from_json<Exact>(json("3/6")) == Exact::rational(1, 2));
  CHECK_THROWS_AS(scalar_from_json<Exact>(json{{"a", "x/y"}}), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_json<Exact>(json{{"approx", "0.5"}}), std::invalid_argument);
}

TEST_CASE("approximate scalars carry their tolerance") {
  Real x = sqrt(Real(2));
  auto j = scalar_json(x);
  CHECK(j.contains("epsilon"));
  CHECK(abs(scalar_from_json<Real>(j) - x) < Real(1e-35));
}

TEST_CASE("motions, polyforms and realizations round trip") {
  auto m = motion_from_angle(Angle15(5), {Exact(1), Exact::rational(1, 2)});
  auto mj = motion_json(m);
  CHECK(mj["angle15"] == 5);
  auto back = motion_from_json<Exact>(mj);
  CHECK(back.linear == m.linear);
  CHECK(back.translation == m.translation);

  for (auto f : {Family::Omino, Family::Iamond, Family::Hex, Family::Abolo}) {
    auto form = enumerate_fixed(f, 3).back();
    CHECK(fixed_key(polyform_from_json(polyform_json(form))) == fixed_key(form));
  }
  CHECK(polyform_from_json(json{{"grid", "##\n#."}}).cells.size() == 3);

  auto r = realize<Exact>("polyregular_half", 6, enumerate_fixed(Family::Hex, 2)[0]);
  auto j = realization_json(r);
  CHECK(j["schema"] == kSchema);
  auto again = realization_json(realization_from_json<Exact>(json::parse(j.dump())));
  CHECK(again == j);
  CHECK(verify_configuration(realization_from_json<Exact>(j)).pass());
  CHECK(document_mode(j) == "exact");

  json bad = j;
  bad["schema"] = "other/9";
  CHECK_THROWS_AS(realization_from_json<Exact>(bad), std::invalid_argument);
}

TEST_CASE("approximate documents round trip") {
  auto c = dudeney_extendible_chain();
  auto j = extendible_json(c);
  CHECK(document_mode(j) == "approx");
  auto back = extendible_from_json<Real>(j);
  CHECK(extendible_violations(back).empty());
  auto rep = verify_configuration(realization_of(back.chain, back.q));
  auto rj = report_json(rep);
  CHECK(rj["pass"] == true);
  CHECK(rj.contains("margin"));
}

TEST_CASE("svg output is deterministic and counts pieces and hinges") {
  auto tet = realize<Exact>("polyomino_2n", 4, parse_omino_grid("###\n.#."));
  auto a = emit_svg(tet), b = emit_svg(tet);
  CHECK(a == b);
  CHECK(count(a, "<path ") == 8);
  CHECK(count(a, "<circle ") == 8);
  CHECK(count(a, "<polygon ") == 4);
  CHECK(a.find("approximate") == std::string::npos);
  // Three decimals on every coordinate past the header.
  std::string s = a.substr(a.find("<g "));
  std::regex number(R"(-?\d+\.(\d+))");
  for (std::sregex_iterator it(s.begin(), s.end(), number), end; it != end; ++it) CHECK((*it)[1].length() == 3);

  RenderSpec ex;
  ex.exaggerated = true;
  auto e = emit_svg(tet, ex);
  CHECK(count(e, "<line ") == 8);
  CHECK(count(e, "<circle ") == 0);
  RenderSpec bad;
  bad.scale = 0;
  CHECK_THROWS_AS(emit_svg(tet, bad), std::invalid_argument);
}

TEST_CASE("golden svg of the moniamond") {
  auto r = realize<Exact>("polyregular_kn", 3, enumerate_fixed(Family::Iamond, 1)[0]);
  const std::string svg = emit_svg(r);
  CHECK(count(svg, "<path ") == 3);
  CHECK(count(svg, "<circle ") == 3);
  CHECK(count(svg, "<polygon ") == 1);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("approximate svg states its tolerance") {
  auto c = dudeney_extendible_chain();
  auto r = realize_extendible(c, enumerate_fixed(Family::Omino, 2)[0]);
  auto svg = emit_svg(r);
  CHECK(svg.find("<!-- approximate coordinates, epsilon 1e-09 -->") != std::string::npos);
  CHECK(count(svg, "<path ") == 14);
}
