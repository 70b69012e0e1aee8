// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hingekit/search.hpp"
#include "hingekit/transforms.hpp"
#include "oracles.hpp"

using namespace hingekit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) note << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d %s: %s(%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.note.str().c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Realizes every fixed form with one construction; all must verify, have `pieces` pieces and
// share one signature.
void exhaustive(Outcome& o, const std::string& construction, int k, Family f, int n, int pieces, size_t* count) {
  std::set<std::string> sigs;
  auto forms = enumerate_fixed(f, n);
  if (count) *count = forms.size();
  for (const auto& form : forms) {
    auto r = realize<Exact>(construction, k, form);
    o.require(verify_configuration(r).pass(), construction + " fails on " + fixed_key(form));
    o.require(static_cast<int>(r.dissection.size()) == pieces, construction + " piece count");
    sigs.insert(signature(r.dissection).text);
  }
  o.require(sigs.size() == 1, construction + " n=" + std::to_string(n) + " has several signatures");
}

}  // namespace

int main() {
  criterion(1, "polyomino universality, n = 1..6", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const size_t expect[] = {1, 2, 6, 19, 63, 216};
    for (int n = 1; n <= 6; ++n) {
      size_t count = 0;
      exhaustive(o, "polyomino_2n", 4, Family::Omino, n, 2 * n, &count);
      o.require(count == expect[n - 1], "target count at n=" + std::to_string(n));
      o.note << count << (n < 6 ? "/" : " targets; ");
    }
    o.require(since(t0) < 120, "slower than 2 minutes");
  });

  criterion(2, "polyiamonds and polyhexes, four constructions, n = 1..5", [](Outcome& o) {
    long runs = 0;
    for (int k : {3, 6}) {
      const Family f = k == 3 ? Family::Iamond : Family::Hex;
      const int half = (k + 1) / 2;
      for (int n = 1; n <= 5; ++n) {
        size_t c = 0;
        exhaustive(o, "polyregular_kn", k, f, n, k * n, &c);
        exhaustive(o, "polyregular_half", k, f, n, half * n, nullptr);
        runs += 2 * c;
        if (n >= 2) {
          exhaustive(o, "polyregular_knmk", k, f, n, k * (n - 1), nullptr);
          exhaustive(o, "polyregular_half_m1", k, f, n, half * (n - 1), nullptr);
          runs += 2 * c;
        }
      }
    }
    o.note << runs << " realizations; ";
  });

  criterion(3, "square case of the half construction equals the polyomino construction", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n)
      o.require(signature(h_polyregular_half<Exact>(4, n)) == signature(h_polyomino_2n<Exact>(n)),
                "signatures differ at n=" + std::to_string(n));
  });

  criterion(4, "polyabolo universality, n = 1..4", [](Outcome& o) {
    std::set<std::string> cases;
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> sigs;
      auto forms = enumerate_fixed(Family::Abolo, n);
      for (const auto& form : forms) {
        auto r = realize<Exact>("polyabolo_4n", 3, form);
        o.require(verify_configuration(r).pass(), "fails on " + fixed_key(form));
        o.require(static_cast<int>(r.dissection.size()) == 4 * n, "piece count");
        sigs.insert(signature(r.dissection).text);
        for (const auto& t : r.trace)
          if (auto at = t.note.find("case "); at != std::string::npos) cases.insert(t.note.substr(at, t.note.find(';', at) - at));
        for (const auto& h : r.dissection.hinges) {
          const auto p = r.anchor_position(h.piece_a, h.anchor_a);
          bool mid = false;
          for (const auto& c : r.target.cells)
            for (size_t i = 0; i < c.size() && !mid; ++i)
              mid = same_point<Exact>((c[i] + c[(i + 1) % c.size()]) / Exact(2), p);
          o.require(mid, "hinge off a cell-edge midpoint");
        }
      }
      o.require(sigs.size() == 1, "several signatures at n=" + std::to_string(n));
      o.note << forms.size() << (n < 4 ? "/" : " targets; ");
    }
    o.require(cases.size() == 3, "attach cases seen: " + std::to_string(cases.size()));
    for (const auto& c : cases) o.note << c << "; ";
  });

  criterion(5, "pentomino lower bound and square-hinging controls", [](Outcome& o) {
    auto cert = check_pentomino_lower_bound();
    o.require(cert.impossible, "some hinging realizes every pentomino");
    o.require(cert.verdicts.size() == 81, "hinging count");
    std::map<std::string, int> named;
    for (const auto& v : cert.verdicts) {
      o.require(!v.unrealizable.empty(), "hinging without a named pentomino");
      ++named[v.unrealizable];
    }
    for (const auto& [name, n] : named) o.note << name << " x" << n << ", ";
    o.require(cert.seconds < 60, "slower than 60 s");
    o.note << "search " << cert.seconds << " s; ";
    auto tro = enumerate_fixed(Family::Omino, 3);
    std::set<std::string> free_tro;
    for (const auto& t : realizable_set(tromino_hinging(), tro)) free_tro.insert(free_key(t));
    o.require(free_tro.size() == 2, "tromino control");
    auto tet = enumerate_fixed(Family::Omino, 4);
    o.require(tet.size() == 19 && realizable_set(tetromino_hinging(), tet).size() == 19, "tetromino control");
    o.note << "controls: 2 trominoes, 19 tetrominoes; ";
  });

  criterion(6, "chain to cycle", [](Outcome& o) {
    auto d = dudeney_dissection();
    auto cc = chain_to_cycle(d.chain);
    o.require(cc.cycle.size() <= 9, "triangle-square cycle too long");
    o.require(cc.cycle.topology == Topology::Cycle, "not a cycle");
    for (const auto* rot : {&d.triangle, &d.square}) {
      auto rep = verify_configuration(realization_of(cc.cycle, cc.lift(*rot)));
      o.require(rep.pass(), rot->name + " fails");
    }
    o.note << "triangle-square chain -> " << cc.cycle.size() << " pieces, both shapes verify; ";
    std::mt19937 rng(31337);
    int done = 0, worst = 0;
    while (done < 50) {
      const int n = 2 + done % 6;
      auto h = oracle::random_tree(rng, n);
      if (!h) continue;
      Rotation<Exact> id{"square", oracle::square4(), std::vector<RigidMotion<Exact>>(n)};
      if (!verify_configuration(realization_of(*h, id)).pass()) continue;
      auto c = chain_to_cycle(*h);
      o.require(c.cycle.size() <= static_cast<size_t>(3 * n - 3), "3n-3 exceeded");
      o.require(verify_configuration(realization_of(c.cycle, c.lift(id))).pass(), "random cycle fails");
      worst = std::max(worst, static_cast<int>(c.cycle.size()) - (3 * n - 3));
      ++done;
    }
    o.note << done << " random trees, max pieces - (3n-3) = " << worst << "; ";
  });

  criterion(7, "cross-type extendible chain", [](Outcome& o) {
    auto c = dudeney_extendible_chain();
    o.require(extendible_violations(c).empty(), "chain is not extendible");
    for (int n = 1; n <= 4; ++n)
      o.require(concat_extendible(c, n).size() == static_cast<size_t>(7 * n), "7n piece count");
    auto pcs = chain_pieces(concat_extendible(c, 4));
    for (int k : {10, 17, 24}) o.require(same_descriptor(describe(pcs[3]), describe(pcs[k])), "period 7");
    Margin all;
    int count = 0;
    for (int n = 1; n <= 3; ++n)
      for (auto f : {Family::Iamond, Family::Omino})
        for (const auto& form : enumerate_fixed(f, n)) {
          auto r = realize_extendible(c, form);
          auto rep = verify_configuration(r);
          o.require(rep.pass() && r.dissection.size() == static_cast<size_t>(7 * n), "fails on " + fixed_key(form));
          all.merge(rep.margin);
          ++count;
        }
    const Real eps = approx_epsilon();
    o.require(all.smallest_nonzero && *all.smallest_nonzero >= eps, "margin below epsilon");
    o.require(!all.largest_zero || *all.largest_zero < eps, "zero above epsilon");
    o.note << count << " targets; margin: smallest non-zero "
           << (all.smallest_nonzero ? real_to_string(*all.smallest_nonzero, 3) : "none") << ", largest zero "
           << (all.largest_zero ? real_to_string(*all.largest_zero, 3) : "none") << ", epsilon "
           << real_to_string(eps, 3) << "; ";
  });

  criterion(8, "dual-scale ominoes and the polyabolo bridge", [](Outcome& o) {
    for (int n = 1; n <= 2; ++n) {
      std::set<std::string> sigs;
      int count = 0;
      for (int cells : {2 * n, n})
        for (const auto& form : enumerate_fixed(Family::Omino, cells)) {
          auto r = realize_dual_omino(n, form);
          o.require(verify_configuration(r).pass(), "fails on " + fixed_key(form));
          o.require(r.dissection.size() == static_cast<size_t>(4 * n), "4n piece count");
          sigs.insert(signature(r.dissection).text);
          ++count;
        }
      o.require(sigs.size() == 1, "several signatures");
      o.note << "n=" << n << ": " << count << " targets; ";
    }
    auto [a, b] = realize_polyabolo_as_omino_bridge(1);
    o.require(a.dissection.size() == 16, "bridge piece count");
    o.require(verify_configuration(a).pass() && verify_configuration(b).pass(), "bridge fails");
    o.require(signature(a.dissection) == signature(b.dissection), "bridge signatures differ");
    o.note << "bridge " << a.dissection.size() << " pieces; ";
  });

  criterion(9, "restricted polyforms", [](Outcome& o) {
    const Exact h = Exact::sqrt3() / Exact(2);
    const std::vector<std::pair<std::string, Polygon<Exact>>> bases{
        {"square", {{Exact(0), Exact(0)}, {Exact(1), Exact(0)}, {Exact(1), Exact(1)}, {Exact(0), Exact(1)}}},
        {"triangle", {{Exact(0), Exact(0)}, {Exact(1), Exact(0)}, {Exact::rational(1, 2), h}}},
        {"quadrilateral", {{Exact(0), Exact(0)}, {Exact(4), Exact(0)}, {Exact(3), Exact(2)}, {Exact(0), Exact(1)}}}};
    for (const auto& [name, base] : bases) {
      const int k = static_cast<int>(base.size());
      auto rule = restricted_rule(base);
      o.note << name << " ";
      for (int n = 1; n <= 3; ++n) {
        std::set<std::string> sigs;
        auto forms = enumerate_restricted(base, n);
        for (const auto& f : forms) {
          auto r = realize(rule, f.complex());
          o.require(verify_configuration(r).pass(), name + " fails");
          o.require(r.dissection.size() == static_cast<size_t>(k * n), name + " kn piece count");
          sigs.insert(signature(r.dissection).text);
        }
        o.require(sigs.size() == 1, name + " several signatures");
        o.note << forms.size() << (n < 3 ? "/" : "; ");
      }
    }
  });

  criterion(10, "verifier soundness", [](Outcome& o) {
    std::vector<Realization<Exact>> pool;
    for (const char* g : {"###\n.#.", "##\n.##", "####", "#..\n###"})
      pool.push_back(realize<Exact>("polyomino_2n", 4, parse_omino_grid(g)));
    pool.push_back(realize<Exact>("polyregular_kn", 3, enumerate_fixed(Family::Iamond, 3)[0]));
    pool.push_back(realize<Exact>("polyabolo_4n", 3, enumerate_fixed(Family::Abolo, 2)[1]));
    std::mt19937 rng(20240617);
    int caught = 0;
    for (int i = 0; i < 200; ++i) {
      auto r = pool[i % pool.size()];
      oracle::mutate(r, rng);
      caught += !verify_configuration(r).pass();
    }
    o.require(caught == 200, "a mutation passed verification");
    long cases = oracle::for_each_chord_set(7, 6, [](int m, const auto& chords) {
      return chords_noncrossing(m, chords) == oracle::crossing_free(chords);
    });
    o.require(cases > 0, "chord test disagrees with the oracle");
    o.note << caught << "/200 mutations caught, " << std::labs(cases) << " chord sets agree; ";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
