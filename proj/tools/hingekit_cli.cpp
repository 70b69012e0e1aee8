// Command-line front end. Every subcommand reads and writes "hingekit/1" JSON.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hingekit/io.hpp"
#include "hingekit/svg.hpp"

using namespace hingekit;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << "\n";
  else write_json_file(out, j);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON polyform, or an omino drawn as ASCII art.
Polyform read_target(const std::string& path) {
  std::string text = slurp(path);
  auto j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return parse_omino_grid(text);
  return polyform_from_json(j);
}

json rotated_document(const json& dissection, const json& rotations) {
  return {{"schema", kSchema}, {"mode", dissection.at("mode")}, {"dissection", dissection}, {"rotations", rotations}};
}

template <class T>
json construct_family(const std::string& name, int k, int n, const std::string& base_path) {
  if (name == "restricted") {
    if (base_path.empty()) throw UsageError("restricted needs --base polygon.json");
    auto j = read_json_file(base_path);
    Polygon<T> base;
    for (const auto& v : j.contains("polygon") ? j["polygon"] : j) base.push_back(point_from_json<T>(v));
    return dissection_json(h_restricted(base, n));
  }
  auto rule = family_rule<T>(name, k);
  return dissection_json(rule.canonical(n));
}

template <class T>
int verify_document(const json& j, const std::string& out) {
  auto r = realization_from_json<T>(j);
  Margin margin;
  VerificationReport rep;
  {
    MarginScope scope(margin);
    rep = verify_configuration(r);
  }
  emit(report_json(rep), out);
  if (!rep.pass())
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "check " << c.name << " failed: " << c.detail << "\n";
  return rep.pass() ? kOk : kFailed;
}

template <class T>
json convert_document(const json& doc, bool to_cycle, bool midpoints) {
  const json& dj = doc.contains("dissection") ? doc["dissection"] : doc;
  auto h = dissection_from_json<T>(dj);
  std::vector<Rotation<T>> rots;
  if (doc.contains("rotations"))
    for (const auto& r : doc["rotations"]) rots.push_back(rotation_from_json<T>(r));
  if (to_cycle) {
    auto cc = chain_to_cycle(h);
    h = cc.cycle;
    for (auto& r : rots) r = cc.lift(r);
  }
  json log = json::array();
  if (midpoints) {
    if (rots.empty()) throw UsageError("--add-midpoint-hinges needs a document with rotations");
    auto res = add_midpoint_hinges(h, rots);
    h = res.cycle;
    rots = res.rotations;
    log = res.log;
  }
  json rj = json::array();
  for (const auto& r : rots) rj.push_back(rotation_json(r));
  json out = rotated_document(dissection_json(h), rj);
  if (!log.empty()) out["log"] = log;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hinged dissections of polyforms: construction, realization, verification"};
  app.require_subcommand(1);
  std::string out;
  double epsilon = 1e-9;
  app.add_option("--epsilon", epsilon, "Tolerance for approximate mode")->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "List fixed polyforms");
  std::string family = "omino";
  int n = 1, k = 0;
  en->add_option("--family", family, "omino, iamond, hex or abolo")->required();
  en->add_option("--n", n, "Cells per form")->required()->check(CLI::PositiveNumber);
  en->add_option("--out", out, "Output JSON file (stdout by default)");

  auto* co = app.add_subcommand("construct", "Build a hinged dissection");
  std::string dissection, base, mode = "exact";
  co->add_option("--dissection", dissection,
                 "Construction name, restricted, dual_omino_path, dudeney or dudeney_extendible")
      ->required();
  co->add_option("--k", k, "Polygon sides for polyregular constructions");
  co->add_option("--n", n, "Size parameter")->check(CLI::PositiveNumber);
  co->add_option("--base", base, "Base polygon JSON for restricted");
  co->add_option("--mode", mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
  co->add_option("--out", out, "Output JSON file");

  auto* re = app.add_subcommand("realize", "Rotate a construction into a target polyform");
  std::string target;
  re->add_option("--dissection", dissection, "Construction name")->required();
  re->add_option("--k", k, "Polygon sides for polyregular constructions");
  re->add_option("--target", target, "Polyform JSON or omino ASCII art")->required()->check(CLI::ExistingFile);
  re->add_option("--mode", mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
  re->add_option("--out", out, "Output JSON file");

  auto* ve = app.add_subcommand("verify", "Check a realization");
  std::string realization;
  ve->add_option("--realization", realization, "Realization JSON")->required()->check(CLI::ExistingFile);
  ve->add_option("--out", out, "Report JSON file");

  auto* lb = app.add_subcommand("search-lb", "Exhaustive search over chain hingings of unit squares");
  int squares = 5;
  lb->add_option("--n", squares, "Number of squares (3, 4 or 5)")->check(CLI::Range(3, 5));
  lb->add_option("--out", out, "Certificate JSON file");

  auto* cv = app.add_subcommand("convert", "Transform a hinged dissection");
  std::string to_cycle_file, midpoint_file;
  cv->add_option("--chain-to-cycle", to_cycle_file, "Dissection (optionally with rotations) to turn into a cycle")
      ->check(CLI::ExistingFile);
  cv->add_option("--add-midpoint-hinges", midpoint_file, "Cycle with rotations to hinge at every edge midpoint")
      ->check(CLI::ExistingFile);
  cv->add_option("--out", out, "Output JSON file");

  auto* cr = app.add_subcommand("cross", "Dissections shared by two kinds of polyform");
  int dual = 0, bridge = 0;
  std::string chain_file;
  cr->add_option("--dual-omino", dual, "Path size n: realize into a 2n-omino or an n-omino of sqrt2 squares");
  cr->add_option("--bridge", bridge, "Common 16n-piece polyabolo dissection of I-shaped n- and 2n-ominoes");
  cr->add_option("--extendible", chain_file, "Extendible chain JSON")->check(CLI::ExistingFile);
  cr->add_option("--n", n, "Copies of the chain (must equal the target size)");
  cr->add_option("--target", target, "Polyform JSON or omino ASCII art")->check(CLI::ExistingFile);
  cr->add_option("--out", out, "Output JSON file");

  auto* rd = app.add_subcommand("render", "Draw a realization as SVG");
  std::string style = "exact";
  RenderSpec spec;
  bool flat = false;
  rd->add_option("--realization", realization, "Realization JSON")->required()->check(CLI::ExistingFile);
  rd->add_option("--style", style, "exact or exaggerated")->check(CLI::IsMember({"exact", "exaggerated"}));
  rd->add_option("--out", out, "SVG file (stdout by default)");
  rd->add_option("--scale", spec.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  rd->add_option("--stroke", spec.stroke_width, "Stroke width in pixels")->check(CLI::PositiveNumber);
  rd->add_option("--hinge-radius", spec.hinge_radius, "Hinge dot radius in pixels")->check(CLI::PositiveNumber);
  rd->add_flag("--no-shading", flat, "Leave pieces unfilled");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  set_approx_epsilon(Real(epsilon));

  try {
    if (*en) {
      auto forms = enumerate_fixed(family_from_name(family), n);
      json list = json::array();
      for (const auto& f : forms) list.push_back(polyform_json(f));
      emit({{"schema", kSchema}, {"family", family}, {"n", n}, {"count", forms.size()}, {"forms", list}}, out);
      return kOk;
    }
    if (*co) {
      if (dissection == "dudeney") {
        auto d = dudeney_dissection();
        emit(rotated_document(dissection_json(d.chain), {rotation_json(d.triangle), rotation_json(d.square)}), out);
      } else if (dissection == "dudeney_extendible") {
        emit(extendible_json(dudeney_extendible_chain()), out);
      } else if (dissection == "dual_omino_path") {
        emit(dissection_json(dual_omino_path(n)), out);
      } else {
        emit(mode == "exact" ? construct_family<Exact>(dissection, k, n, base)
                             : construct_family<Real>(dissection, k, n, base),
             out);
      }
      return kOk;
    }
    if (*re) {
      auto t = read_target(target);
      json j = mode == "exact" ? realization_json(realize<Exact>(dissection, k, t))
                               : realization_json(realize<Real>(dissection, k, t));
      emit(j, out);
      return kOk;
    }
    if (*ve) {
      auto j = read_json_file(realization);
      return document_mode(j) == "exact" ? verify_document<Exact>(j, out) : verify_document<Real>(j, out);
    }
    if (*lb) {
      if (squares == 5) {
        auto cert = check_pentomino_lower_bound();
        emit(certificate_json(cert), out);
        return cert.impossible ? kOk : kFailed;
      }
      auto targets = enumerate_fixed(Family::Omino, squares);
      json rows = json::array();
      bool any = false;
      for (const auto& h : enumerate_chain_hingings(squares)) {
        auto got = realizable_set(h, targets);
        any = any || got.size() == targets.size();
        rows.push_back({{"hinging", hinging_json(h)}, {"realizable", got.size()}, {"targets", targets.size()}});
      }
      emit({{"schema", kSchema}, {"n", squares}, {"hingings", rows}, {"some_hinging_realizes_all", any}}, out);
      return any ? kOk : kFailed;
    }
    if (*cv) {
      if (to_cycle_file.empty() && midpoint_file.empty())
        throw UsageError("convert needs --chain-to-cycle or --add-midpoint-hinges");
      auto doc = read_json_file(!to_cycle_file.empty() ? to_cycle_file : midpoint_file);
      const bool to_cycle = !to_cycle_file.empty(), mid = !midpoint_file.empty();
      emit(document_mode(doc) == "exact" ? convert_document<Exact>(doc, to_cycle, mid)
                                         : convert_document<Real>(doc, to_cycle, mid),
           out);
      return kOk;
    }
    if (*cr) {
      json result;
      bool ok = true;
      auto check = [&](const auto& r) {
        auto rep = verify_configuration(r);
        ok = ok && rep.pass();
        json j = realization_json(r);
        j["report"] = report_json(rep);
        return j;
      };
      if (bridge > 0) {
        auto [a, b] = realize_polyabolo_as_omino_bridge(bridge);
        result = {{"schema", kSchema}, {"four_per_square", check(a)}, {"two_per_square", check(b)},
                  {"same_signature", signature(a.dissection) == signature(b.dissection)}};
      } else if (dual > 0 || !chain_file.empty()) {
        if (target.empty()) throw UsageError("cross needs --target");
        auto t = read_target(target);
        if (dual > 0) {
          result = check(realize_dual_omino(dual, t));
        } else {
          auto chain = extendible_from_json<Real>(read_json_file(chain_file));
          if (app.get_subcommand("cross")->count("--n") && static_cast<size_t>(n) != t.cells.size())
            throw UsageError("--n must equal the number of target cells");
          Margin margin;
          {
            MarginScope scope(margin);
            result = check(realize_extendible(chain, t));
          }
        }
      } else {
        throw UsageError("cross needs --dual-omino, --bridge or --extendible");
      }
      emit(result, out);
      return ok ? kOk : kFailed;
    }
    if (*rd) {
      auto j = read_json_file(realization);
      spec.exaggerated = style == "exaggerated";
      spec.shading = !flat || spec.exaggerated;
      std::string svg = document_mode(j) == "exact" ? emit_svg(realization_from_json<Exact>(j), spec)
                                                    : emit_svg(realization_from_json<Real>(j), spec);
      if (out.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        f << svg;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const RealizeError& e) {
    std::cerr << "realization failed: " << e.what() << "\n";
    for (const auto& line : e.partial_trace) std::cerr << "  " << line << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
