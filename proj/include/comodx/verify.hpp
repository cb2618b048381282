#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "adjunction.hpp"
#include "catalog.hpp"
#include "cover.hpp"
#include "io.hpp"
#include "loop_group.hpp"

namespace comodx {

enum class Verdict { pass, fail, error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "error";
  }
}

struct CaseResult {
  std::string suite;
  std::string name;
  std::string inputs;
  Verdict verdict = Verdict::error;
  std::string certificate;
  double seconds = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.verdict == v; }));
  }
  /// 0 when everything passed, 1 on any failure or error.
  int exit_code() const { return count(Verdict::pass) == cases.size() ? 0 : 1; }

  std::string text(bool timing = false) const {
    std::ostringstream os;
    os << "seed " << seed << "\n";
    std::string suite;
    for (const auto& c : cases) {
      if (c.suite != suite) {
        suite = c.suite;
        std::size_t n = 0, p = 0;
        for (const auto& d : cases)
          if (d.suite == suite) {
            ++n;
            p += d.verdict == Verdict::pass;
          }
        os << "suite " << suite << ": " << p << "/" << n << " pass\n";
      }
      os << "  " << to_string(c.verdict) << "  " << c.name;
      if (!c.inputs.empty()) os << "  [" << c.inputs << "]";
      os << "  " << c.certificate;
      if (timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %.3fs", c.seconds);
        os << buf;
      }
      os << "\n";
    }
    os << "total: " << cases.size() << " cases, " << count(Verdict::pass) << " pass, " << count(Verdict::fail)
       << " fail, " << count(Verdict::error) << " error\n";
    return os.str();
  }

  Json json(bool timing = false) const {
    Json out = {{"seed", seed}};
    Json cs = Json::array();
    for (const auto& c : cases) {
      Json j = {{"suite", c.suite}, {"name", c.name}, {"inputs", c.inputs}, {"verdict", to_string(c.verdict)},
                {"certificate", c.certificate}};
      if (timing) j["seconds"] = c.seconds;
      cs.push_back(j);
    }
    out["cases"] = cs;
    out["summary"] = {{"cases", cases.size()},
                      {"pass", count(Verdict::pass)},
                      {"fail", count(Verdict::fail)},
                      {"error", count(Verdict::error)}};
    return out;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 0;             // catalog size per suite; 0 picks each suite's default
  std::vector<std::string> suites;   // empty runs all
  unsigned threads = 0;              // 0 uses the hardware concurrency
};

namespace detail {

struct Outcome {
  bool ok = false;
  std::string certificate;
};

struct Task {
  std::string name;
  std::string inputs;
  std::function<Outcome()> run;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string counts_string(const SimplicialSet& X) {
  std::string s;
  for (auto c : X.counts()) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "(" + s + ")";
}

inline std::size_t size_of(const Comodule& c) { return c.space->total_nondegenerate(); }

inline SimplicialMap pointed_map(const SSet& A, const SSet& B, SimplicialMap::Images img) {
  return SimplicialMap(A, B, std::move(img));
}

// ----- suites ---------------------------------------------------------------

inline std::vector<Task> catalog_suite(std::uint64_t seed, std::size_t k) {
  std::vector<Task> tasks;
  for (auto& doc : catalog(seed, k ? k : 20)) {
    tasks.push_back({doc.name, doc.kind(), [doc] {
                       auto text = serialize(doc);
                       auto back = parse(text);
                       bool same = serialize(back) == text && back.kind() == doc.kind();
                       return Outcome{same, "round trip " + std::string(same ? "exact" : "differs") + ", " +
                                                std::to_string(std::count(text.begin(), text.end(), '\n')) + " lines"};
                     }});
  }
  return tasks;
}

inline std::vector<Task> adjunction_suite(std::uint64_t seed, std::size_t k) {
  std::vector<Task> tasks;
  Catalog cat(seed);
  for (auto& doc : cat.comodules(k ? k : 50)) {
    auto c = std::get<Comodule>(doc.object);
    tasks.push_back({"counit/" + doc.name, "", [c] {
                       auto ct = counit(c);
                       bool ok = ct.inverse.has_value();
                       auto s = star(c);
                       auto u = unit(s.space);
                       bool tri = compose(star_map(ct.map, u.star, s), u.map).map == identity_map(s.space.total);
                       return Outcome{ok && tri, "inverse " + std::string(ok ? "certified" : "missing") + ", triangle " +
                                                     (tri ? "holds" : "fails") + ", " + std::to_string(size_of(c)) +
                                                     " simplices"};
                     }});
  }
  for (auto& doc : cat.retractive_spaces(k ? k : 50)) {
    auto Z = std::get<RetractiveSpace>(doc.object);
    tasks.push_back({"unit/" + doc.name, "", [Z] {
                       auto u = unit(Z);
                       bool hz = is_hz_equivalence(u.map.map).equivalence;
                       bool iso = certify_iso(u.map.map).has_value();
                       auto ct = counit(u.slash.comodule);
                       bool tri = compose(ct.map, slash_map(u.map, u.slash, ct.slash)).map ==
                                  identity_map(u.slash.comodule.space);
                       return Outcome{hz && tri, "HZ " + yes_no(hz) + ", iso " + yes_no(iso) + ", triangle " +
                                                     (tri ? "holds" : "fails")};
                     }});
  }
  for (const auto& [bname, X] : Catalog::bases()) {
    if (X->total_nondegenerate() == 1) continue;
    tasks.push_back({"unit/cylinder-" + bname, "(X x D1, i0, pr1)", [X = X] {
                       auto Z = cylinder_object(X);
                       auto u = unit(Z);
                       bool hz = is_hz_equivalence(u.map.map).equivalence;
                       bool differ = Z.total->counts() != u.star.space.total->counts();
                       bool iso = certify_iso(u.map.map).has_value();
                       return Outcome{hz && differ && !iso, "HZ " + yes_no(hz) + ", counts " + counts_string(*Z.total) +
                                                                " vs " + counts_string(*u.star.space.total) + ", iso " +
                                                                yes_no(iso)};
                     }});
  }
  return tasks;
}

inline std::vector<Task> esplit_suite(std::uint64_t seed, std::size_t k) {
  std::vector<Task> tasks;
  Catalog cat(seed);
  for (auto& doc : cat.retractive_spaces(k ? k : 50)) {
    auto Z = std::get<RetractiveSpace>(doc.object);
    tasks.push_back({doc.name, "", [Z] {
                       auto s = e_split_check(Z);
                       return Outcome{s.holds, "H(Z) = " + s.total.to_string() + "; split " + s.split.to_string()};
                     }});
  }
  return tasks;
}

inline std::vector<std::pair<std::string, SSet>> pointed_samples() {
  return {{"S0", sphere(0)},
          {"S1", sphere(1)},
          {"S2", sphere(2)},
          {"D1*", with_basepoint(standard_simplex(1), 0)},
          {"RP2", rp2_minimal()},
          {"S1vS1", wedge(sphere(1), sphere(1))}};
}

inline std::vector<Task> cofree_suite() {
  std::vector<Task> tasks;
  for (const auto& [xn, X] : Catalog::bases())
    for (const auto& [yn, Y] : pointed_samples()) {
      if (X->dimension() + Y->dimension() > 4) continue;
      tasks.push_back({xn + "/" + yn, "", [X = X, Y = Y] {
                         auto R = ret_functor(Y, X);
                         auto F = cofree(Y, X);
                         auto t = star(F.comodule);
                         auto m = cofree_star_comparison(R, F, t);
                         bool iso = certify_iso(m.map).has_value();
                         return Outcome{iso, std::string("F(Y)*X -> Ret_X(Y) ") + (iso ? "certified iso" : "not iso") +
                                                 ", counts " + counts_string(*R.space.total)};
                       }});
    }
  return tasks;
}

inline std::vector<Comodule> test_objects(const SSet& X) {
  Catalog c(0);
  return {c.identity_comodule(X), cofree(sphere(0), X).comodule, zero_comodule(X)};
}

inline Outcome universal_outcome(const ComodulePullback& pb, const ComoduleMap& f, const ComoduleMap& g,
                                 std::vector<Comodule> tests) {
  std::size_t total = size_of(f.source) + size_of(f.target) + size_of(g.source) + size_of(pb.comodule);
  if (total > 200) return Outcome{false, "instance too large for exhaustive search (" + std::to_string(total) + ")"};
  tests.push_back(pb.comodule);
  std::size_t cones = 0, bad = 0;
  for (const auto& W : tests) {
    auto up = check_pullback_universal(pb, f, g, W);
    cones += up.cones;
    bad += up.failures;
  }
  return Outcome{bad == 0 && cones > 0, std::to_string(cones) + " cones, " + std::to_string(bad) +
                                            " without a unique mediating map, " + std::to_string(total) + " simplices"};
}

inline std::vector<Task> pullback_suite() {
  std::vector<Task> tasks;
  // cospans of full subcomodules of X₊ and maps to zero
  struct Sub {
    std::string x;
    std::set<int> a, b;
  };
  std::vector<std::pair<std::string, SSet>> xs{{"D1", standard_simplex(1)}, {"D2", standard_simplex(2)},
                                               {"dD2", boundary_simplex(2)}};
  std::vector<std::tuple<int, std::set<int>, std::set<int>>> subs{
      {0, {0}, {1}},       {0, {0, 1}, {1}},    {0, {0, 1}, {0, 1}}, {1, {0, 1}, {1, 2}}, {1, {0}, {1, 2}},
      {1, {0, 1, 2}, {1}}, {1, {0, 2}, {0, 1}}, {2, {0, 1}, {1, 2}}, {2, {0, 2}, {0, 1}}, {2, {0}, {0, 1, 2}}};
  auto set_name = [](const std::set<int>& s) {
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out;
  };
  for (const auto& [xi, a, b] : subs) {
    const auto& [xn, X] = xs[xi];
    tasks.push_back({"sub/" + xn + "-" + set_name(a) + "-" + set_name(b), "A+ -> X+ <- B+", [X = X, a = a, b = b] {
                       auto all = full_subcomodule(X, {0, 1, 2});
                       auto A = full_subcomodule(X, a);
                       auto B = full_subcomodule(X, b);
                       auto f = sub_inclusion(A, all);
                       auto g = sub_inclusion(B, all);
                       auto pb = comodule_pullback(f, g);
                       auto tests = test_objects(X);
                       tests.push_back(A.comodule);
                       return universal_outcome(pb, f, g, tests);
                     }});
  }
  for (const auto& [xn, X] : xs) {
    tasks.push_back({"zero/" + xn, "F(S0) -> 0 <- X+", [X = X] {
                       auto f = to_zero(cofree(sphere(0), X).comodule);
                       auto g = to_zero(Catalog(0).identity_comodule(X));
                       return universal_outcome(comodule_pullback(f, g), f, g, test_objects(X));
                     }});
  }
  // g = F(h) for pointed maps h: W'' → W
  auto S1 = sphere(1);
  auto W2 = wedge(sphere(1), sphere(1));
  auto loop = SimplexRef::nondeg(1, 0);
  auto v = SimplexRef::nondeg(0, 0);
  struct Named {
    std::string name;
    SimplicialMap map;
  };
  SimplicialMap::Images fold_img(2);
  fold_img[0].assign(W2->count(0), v);
  fold_img[1].assign(W2->count(1), loop);
  std::vector<Named> hs{
      {"fold", SimplicialMap(W2, S1, fold_img)},
      {"bp", constant_map(pointed_point(), S1, 0)},
      {"id", identity_map(S1)},
      {"edge", SimplicialMap(with_basepoint(standard_simplex(1), 0), S1, {{v, v}, {loop}})},
      {"S0", constant_map(sphere(0), S1, 0)},
  };
  std::vector<Named> ks{{"id", identity_map(S1)}, {"fold", hs[0].map}, {"bp", hs[1].map}};
  for (auto X : {point(), standard_simplex(1)}) {
    std::string xn = X->count(0) == 1 ? "pt" : "D1";
    for (const auto& k : ks)
      for (const auto& h : hs) {
        if (k.name != "id" && h.name != "fold" && h.name != "id") continue;
        // the mediating-map search over D1 blows the hom-set budget here
        if (xn == "D1" && k.name == "fold" && h.name == "fold") continue;
        tasks.push_back({"cofree/" + xn + "-" + k.name + "-" + h.name, "F(k) -> F(S1) <- F(h)", [X, k, h] {
                           auto FW = cofree(k.map.codomain(), X);
                           auto F1 = cofree(k.map.domain(), X);
                           auto F2 = cofree(h.map.domain(), X);
                           auto f = cofree_map(k.map, F1, FW);
                           auto g = cofree_map(h.map, F2, FW);
                           auto general = comodule_pullback(f, g);
                           auto special = comodule_pullback_cofree(f, FW, h.map);
                           bool agree = pullback_formulas_agree(general, special, F2);
                           auto up = universal_outcome(general, f, g, test_objects(X));
                           return Outcome{agree && up.ok, std::string("formulas ") + (agree ? "agree" : "differ") + "; " +
                                                              up.certificate};
                         }});
      }
  }
  return tasks;
}

inline std::vector<Task> preservation_suite(std::uint64_t seed) {
  std::vector<Task> tasks;
  std::vector<std::pair<std::string, SSet>> xs{{"D1", standard_simplex(1)}, {"D2", standard_simplex(2)},
                                               {"dD2", boundary_simplex(2)}, {"D3", standard_simplex(3)}};
  // spans A ← C → B: C ⊆ A, C ⊆ B or B = 0
  std::vector<std::tuple<int, std::set<int>, std::set<int>, std::set<int>>> spans{
      {1, {0}, {0, 1}, {0, 2}}, {1, {1}, {0, 1}, {1, 2}}, {1, {0, 1}, {0, 1, 2}, {}}, {1, {0}, {0, 1}, {}},
      {2, {0}, {0, 1}, {0, 2}}, {2, {1}, {0, 1}, {1, 2}}, {2, {0, 1}, {0, 1, 2}, {}}, {0, {0}, {0, 1}, {}},
      {0, {0}, {0, 1}, {0, 1}}, {0, {1}, {0, 1}, {}},     {1, {}, {0}, {1}},         {2, {}, {0, 1}, {2}},
      {3, {0}, {0, 1}, {0, 2}}, {3, {0, 1}, {0, 1, 2}, {0, 1, 3}}, {3, {1, 2}, {0, 1, 2}, {1, 2, 3}},
      {3, {0}, {0, 1, 2, 3}, {}}, {3, {2}, {1, 2}, {2, 3}}, {3, {}, {0, 1}, {2, 3}},
      {3, {0, 3}, {0, 1, 3}, {0, 2, 3}}, {3, {1}, {0, 1, 2}, {}}};
  auto set_name = [](const std::set<int>& s) {
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out.empty() ? std::string("none") : out;
  };
  for (const auto& [xi, c, a, b] : spans) {
    const auto& [xn, X] = xs[xi];
    std::string nm = xn + "-" + set_name(c) + "-" + set_name(a) + "-" + (b.empty() ? "zero" : set_name(b));
    auto build = [X = X, c = c, a = a, b = b] {
      auto C = full_subcomodule(X, c);
      auto A = full_subcomodule(X, a);
      auto f = sub_inclusion(C, A);
      ComoduleMap g = b.empty() ? to_zero(C.comodule) : sub_inclusion(C, full_subcomodule(X, b));
      return std::make_pair(f, g);
    };
    tasks.push_back({"star/" + nm, "", [build] {
                       auto [f, g] = build();
                       auto r = check_star_preserves(f, g);
                       return Outcome{r.all(), "pushout " + yes_no(r.pushout) + ", mono " + yes_no(r.star_mono) +
                                                   ", slash mono " + yes_no(r.slash_mono)};
                     }});
    if (xn == "D2") {
      auto D1 = standard_simplex(1);
      for (int e : {0, 1, 2}) {
        tasks.push_back({"pullback-pushout/" + nm + "-edge" + std::to_string(e), "", [build, D1, X = X, e] {
                           auto [f, g] = build();
                           SimplicialMap a(D1, X, {{X->face(1, SimplexRef::nondeg(1, e)), X->face(0, SimplexRef::nondeg(1, e))},
                                                   {SimplexRef::nondeg(1, e)}});
                           bool ok = check_pullback_preserves_pushout(a, f, g);
                           return Outcome{ok, std::string("a^* of the pushout ") + (ok ? "is" : "is not") +
                                                  " the pushout of the a^*"};
                         }});
      }
    }
  }
  // naturality square a_*(Z/X') ≅ (a_*Z)/X over several base maps
  Catalog cat(seed);
  struct BaseMap {
    std::string name;
    SimplicialMap a;
  };
  auto D1 = standard_simplex(1);
  auto D2 = standard_simplex(2);
  auto S1 = sphere(1);
  std::vector<BaseMap> maps{
      {"loop", SimplicialMap(D1, S1, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}})},
      {"const", constant_map(D2, D1, 1)},
      {"edge", SimplicialMap(D1, D2, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 2)}, {SimplexRef::nondeg(1, 1)}})},
      {"id", identity_map(S1)},
      {"to-pt", constant_map(S1, point(), 0)}};
  for (const auto& m : maps) {
    std::vector<std::pair<std::string, RetractiveSpace>> zs{{"cylinder", cylinder_object(m.a.domain())},
                                                            {"ret-S1", ret_functor(sphere(1), m.a.domain()).space},
                                                            {"attach", cat.random_attachment(m.a.domain())},
                                                            {"zero", zero_retractive(m.a.domain())}};
    for (const auto& [zn, Z] : zs)
      tasks.push_back({"pushforward/" + m.name + "-" + zn, "", [a = m.a, Z = Z] {
                         bool ok = check_pushforward_square(a, Z);
                         return Outcome{ok, std::string("comparison ") + (ok ? "certified iso over X" : "fails")};
                       }});
  }
  return tasks;
}

inline std::vector<Task> homology_suite() {
  std::vector<Task> tasks;
  auto expect = [&](std::string name, SSet X, bool reduced, std::vector<AbelianGroup> groups) {
    tasks.push_back({name, reduced ? "reduced" : "unreduced", [X, reduced, groups] {
                       auto H = homology(*X, reduced);
                       bool ok = true;
                       for (std::size_t n = 0; n < groups.size(); ++n) ok = ok && H.at(static_cast<int>(n)) == groups[n];
                       for (int n = static_cast<int>(groups.size()); n <= X->dimension() + 1; ++n) ok = ok && H.at(n).trivial();
                       return Outcome{ok, H.to_string()};
                     }});
  };
  auto Z = make_group(1);
  auto O = make_group(0);
  expect("S2", sphere(2), true, {O, O, Z});
  expect("S2-boundary-tetrahedron", boundary_simplex(3), true, {O, O, Z});
  expect("torus", product(sphere(1), sphere(1)).object, false, {Z, make_group(2), Z});
  expect("RP2-six-vertex", rp2_triangulation(), false, {Z, make_group(0, {2}), O});
  expect("RP2-one-vertex", rp2_minimal(), false, {Z, make_group(0, {2}), O});
  expect("RP2-reduced", collapse_spanning_tree(rp2_triangulation()), false, {Z, make_group(0, {2}), O});
  expect("S1vS1", wedge(sphere(1), sphere(1)), false, {Z, make_group(2)});
  expect("D3", standard_simplex(3), true, {});
  return tasks;
}

inline std::vector<Task> cover_suite() {
  std::vector<Task> tasks;
  for (auto [name, X] : std::vector<std::pair<std::string, SSet>>{{"RP2-six-vertex", rp2_triangulation()},
                                                                  {"RP2-one-vertex", rp2_minimal()}})
    tasks.push_back({name, "", [X = X] {
                       auto r = universal_cover(X);
                       if (r.exceeded()) return Outcome{false, "coset bound exceeded"};
                       auto H = homology(*r.cover->total, false);
                       bool h = H.at(0) == make_group(1) && H.at(1).trivial() && H.at(2) == make_group(1);
                       return Outcome{r.cover->order() == 2 && h && r.certificate.all(),
                                      "|G| = " + std::to_string(r.cover->order()) + ", H = " + H.to_string() +
                                          ", invariants " + (r.certificate.all() ? "hold" : "fail")};
                     }});
  for (int n = 0; n <= 3; ++n)
    tasks.push_back({"D" + std::to_string(n), "", [n] {
                       auto r = universal_cover(standard_simplex(n));
                       if (r.exceeded()) return Outcome{false, "coset bound exceeded"};
                       bool iso = certify_iso(r.cover->q).has_value();
                       return Outcome{iso && r.certificate.all(), std::string("q ") + (iso ? "is" : "is not") +
                                                                      " an isomorphism, |G| = " +
                                                                      std::to_string(r.cover->order())};
                     }});
  tasks.push_back({"S1", "", [] {
                     auto r = universal_cover(sphere(1));
                     return Outcome{r.exceeded(), r.exceeded() ? "Exceeded after " + std::to_string(r.cosets_defined) + " cosets"
                                                               : "unexpected finite group"};
                   }});
  tasks.push_back({"S2", "", [] {
                     auto r = universal_cover(sphere(2));
                     return Outcome{!r.exceeded() && r.cover->order() == 1 && r.certificate.all(), "simply connected"};
                   }});
  return tasks;
}

inline std::vector<std::pair<std::string, RetractiveMap>> retractive_maps_over(const SSet& X) {
  std::vector<std::pair<std::string, RetractiveSpace>> spaces{
      {"zero", zero_retractive(X)},           {"cylinder", cylinder_object(X)},
      {"ret-S0", ret_functor(sphere(0), X).space}, {"ret-S1", ret_functor(sphere(1), X).space},
      {"ret-S2", ret_functor(sphere(2), X).space}, {"cone", relative_cone(cylinder_object(X)).space}};
  std::vector<std::pair<std::string, RetractiveMap>> out;
  for (const auto& [n, Z] : spaces) {
    out.push_back({"id-" + n, identity_map(Z)});
    out.push_back({"to-zero-" + n, to_zero(Z)});
    out.push_back({"from-zero-" + n, from_zero(Z)});
    out.push_back({"unit-" + n, unit(Z).map});
  }
  auto R = ret_functor(sphere(1), X).space;
  auto cone = relative_cone(R);
  out.push_back({"cone-bottom-ret-S1", make_retractive_map(R, cone.space, cone.bottom)});
  return out;
}

inline std::vector<std::pair<std::string, ComoduleMap>> comodule_maps_over(const SSet& X) {
  std::vector<std::pair<std::string, ComoduleMap>> out;
  for (const auto& [yn, Y] : std::vector<std::pair<std::string, SSet>>{{"S0", sphere(0)}, {"S1", sphere(1)}}) {
    auto F = cofree(Y, X).comodule;
    out.push_back({"id-F" + yn, identity_map(F)});
    out.push_back({"to-zero-F" + yn, to_zero(F)});
    out.push_back({"from-zero-F" + yn, from_zero(F)});
    out.push_back({"counit-F" + yn, counit(F).map});
  }
  return out;
}

inline std::vector<Task> twisted_suite() {
  std::vector<Task> tasks;
  auto rp2 = rp2_minimal();
  auto cover = std::make_shared<CoverData>(*universal_cover(rp2).cover);
  for (auto& [n, f] : retractive_maps_over(rp2))
    tasks.push_back({"RP2/" + n, "Hq implies HZ", [f = f, cover] {
                       bool hq = is_hq_equivalence(f, *cover).equivalence;
                       bool hz = is_hz_equivalence(f.map).equivalence;
                       return Outcome{!hq || hz, "Hq " + yes_no(hq) + ", HZ " + yes_no(hz)};
                     }});
  for (auto& [n, f] : comodule_maps_over(rp2))
    tasks.push_back({"RP2/comodule-" + n, "Hq implies HZ", [f = f, cover] {
                       bool hq = is_hq_equivalence(f, *cover).equivalence;
                       bool hz = is_hz_equivalence(f.map, ChainPolicy::based).equivalence;
                       return Outcome{!hq || hz, "Hq " + yes_no(hq) + ", HZ " + yes_no(hz)};
                     }});
  for (auto [xn, X] : std::vector<std::pair<std::string, SSet>>{{"D1", standard_simplex(1)}, {"S2", sphere(2)}}) {
    auto cv = std::make_shared<CoverData>(*universal_cover(X).cover);
    for (auto& [n, f] : retractive_maps_over(X))
      tasks.push_back({xn + "/" + n, "Hq equals HZ", [f = f, cv] {
                         bool hq = is_hq_equivalence(f, *cv).equivalence;
                         bool hz = is_hz_equivalence(f.map).equivalence;
                         return Outcome{hq == hz, "Hq " + yes_no(hq) + ", HZ " + yes_no(hz)};
                       }});
    for (auto& [n, f] : comodule_maps_over(X))
      tasks.push_back({xn + "/comodule-" + n, "Hq equals HZ", [f = f, cv] {
                         bool hq = is_hq_equivalence(f, *cv).equivalence;
                         bool hz = is_hz_equivalence(f.map, ChainPolicy::based).equivalence;
                         return Outcome{hq == hz, "Hq " + yes_no(hq) + ", HZ " + yes_no(hz)};
                       }});
  }
  return tasks;
}

inline std::vector<std::pair<std::string, SSet>> reduced_bases() {
  return {{"S1", sphere(1)}, {"S1vS1", wedge(sphere(1), sphere(1))}, {"RP2", collapse_spanning_tree(rp2_triangulation())}};
}

inline std::vector<Task> loopgroup_suite(std::uint64_t seed, int truncation = 4, std::size_t words = 500) {
  std::vector<Task> tasks;
  for (auto [xn, X] : reduced_bases()) {
    auto G = std::make_shared<LoopGroup>(X, truncation);
    auto report = [](const IdentityReport& r) {
      return std::to_string(r.checked) + " checks" + (r.passed() ? "" : ", first failure: " + r.failures.front());
    };
    tasks.push_back({xn + "/gx-identities", "N=" + std::to_string(truncation), [G, seed, words, report] {
                       auto r = check_loop_group_identities(*G, words, seed);
                       return Outcome{r.passed(), report(r)};
                     }});
    tasks.push_back({xn + "/twisting", "", [G, report] {
                       auto r = check_twisting_identities(*G);
                       return Outcome{r.passed(), report(r)};
                     }});
    tasks.push_back({xn + "/px-identities", "", [G, seed, words, report] {
                       auto r = check_px_identities(*G, words, seed + 1);
                       return Outcome{r.passed(), report(r)};
                     }});
    tasks.push_back({xn + "/px-quotient", "", [G, seed] {
                       bool ok = px_quotient_certificate(*G, 5, seed);
                       return Outcome{ok, ok ? "orbits biject with simplices of X" : "quotient check failed"};
                     }});
    tasks.push_back({xn + "/px-connectivity", "100 words", [G, seed] {
                       std::mt19937_64 rng(seed + 2);
                       std::size_t ok = 0, edges = 0;
                       for (int k = 0; k < 100; ++k) {
                         auto w = G->random_word(0, rng() % 7, rng);
                         auto p = px_connectivity_certificate(*G, w);
                         ok += p.verified && p.vertices.back().empty();
                         edges += p.edges.size();
                       }
                       return Outcome{ok == 100, std::to_string(ok) + "/100 paths verified, " + std::to_string(edges) +
                                                     " edges"};
                     }});
    tasks.push_back({xn + "/pi0", "", [G, X = X] {
                       auto ab = abelianization(pi0_loop_group(*G));
                       auto h1 = homology(*X, false).at(1);
                       return Outcome{ab == h1, "pi0 abelianized " + ab.to_string() + ", H1 " + h1.to_string()};
                     }});
  }
  return tasks;
}

inline void run_tasks(std::vector<Task>& tasks, std::vector<CaseResult>& out, const std::string& suite, unsigned threads) {
  std::size_t base = out.size();
  out.resize(base + tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      auto& r = out[base + i];
      r.suite = suite;
      r.name = tasks[i].name;
      r.inputs = tasks[i].inputs;
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto o = tasks[i].run();
        r.verdict = o.ok ? Verdict::pass : Verdict::fail;
        r.certificate = o.certificate;
      } catch (const std::exception& e) {
        r.verdict = Verdict::error;
        r.certificate = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(base), out.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  return {"catalog", "adjunction", "esplit", "cofree", "pullback", "preservation",
          "homology", "cover", "twisted", "loopgroup"};
}

inline Report run_verify(const VerifyOptions& opt) {
  auto names = opt.suites.empty() ? suite_names() : opt.suites;
  for (const auto& n : names) {
    auto all = suite_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) throw std::invalid_argument("unknown suite '" + n + "'");
  }
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  Report rep;
  rep.seed = opt.seed;
  for (const auto& n : names) {
    std::vector<detail::Task> tasks;
    if (n == "catalog") tasks = detail::catalog_suite(opt.seed, opt.cases);
    else if (n == "adjunction") tasks = detail::adjunction_suite(opt.seed, opt.cases);
    else if (n == "esplit") tasks = detail::esplit_suite(opt.seed, opt.cases);
    else if (n == "cofree") tasks = detail::cofree_suite();
    else if (n == "pullback") tasks = detail::pullback_suite();
    else if (n == "preservation") tasks = detail::preservation_suite(opt.seed);
    else if (n == "homology") tasks = detail::homology_suite();
    else if (n == "cover") tasks = detail::cover_suite();
    else if (n == "twisted") tasks = detail::twisted_suite();
    else tasks = detail::loopgroup_suite(opt.seed);
    detail::run_tasks(tasks, rep.cases, n, threads);
  }
  return rep;
}

}  // namespace comodx
