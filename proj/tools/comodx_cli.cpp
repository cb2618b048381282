#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "comodx/verify.hpp"

using namespace comodx;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json homology_json(const HomologySummary& H) {
  Json out = Json::array();
  for (std::size_t k = 0; k < H.groups.size(); ++k) {
    const auto& g = H.groups[k];
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    out.push_back({{"degree", H.min_degree + static_cast<int>(k)}, {"rank", g.rank}, {"torsion", torsion},
                   {"group", g.to_string()}});
  }
  return out;
}

std::string counts(const SimplicialSet& X) {
  std::string s;
  for (auto c : X.counts()) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "(" + s + ")";
}

void emit(const Json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

SSet underlying_sset(const Document& doc) {
  if (auto* X = std::get_if<SSet>(&doc.object)) return *X;
  if (auto* Z = std::get_if<RetractiveSpace>(&doc.object)) return Z->total;
  if (auto* c = std::get_if<Comodule>(&doc.object)) return c->space;
  throw InputError("expected a simplicial set document, got kind '" + doc.kind() + "'");
}

int cmd_homology(const std::string& file, bool reduced, bool json) {
  auto doc = read_document(file);
  auto X = underlying_sset(doc);
  if (reduced && !X->pointed()) throw InputError("--reduced needs a pointed simplicial set");
  auto H = homology(*X, reduced);
  std::ostringstream os;
  os << (reduced ? "reduced homology of " : "homology of ") << (doc.name.empty() ? file : doc.name) << "\n";
  for (std::size_t k = 0; k < H.groups.size(); ++k)
    os << "  H" << H.min_degree + static_cast<int>(k) << "  " << H.groups[k].to_string() << "\n";
  emit({{"name", doc.name}, {"reduced", reduced}, {"homology", homology_json(H)}}, json, os.str());
  return kPass;
}

int cmd_check(const std::string& file, bool json) {
  try {
    auto doc = read_document(file);
    std::string dims;
    std::visit(
        [&](const auto& obj) {
          using T = std::decay_t<decltype(obj)>;
          if constexpr (std::is_same_v<T, SSet>) dims = counts(*obj);
          else if constexpr (std::is_same_v<T, SimplicialMap>) dims = counts(*obj.domain()) + " -> " + counts(*obj.codomain());
          else if constexpr (std::is_same_v<T, RetractiveSpace>) dims = counts(*obj.total) + " over " + counts(*obj.base);
          else if constexpr (std::is_same_v<T, Comodule>) dims = counts(*obj.space) + " over " + counts(*obj.base);
          else dims = counts(*obj.base);
        },
        doc.object);
    emit({{"valid", true}, {"kind", doc.kind()}, {"name", doc.name}, {"simplices", dims}}, json,
         "valid " + doc.kind() + " " + doc.name + " " + dims + "\n");
    return kPass;
  } catch (const InvalidDocument& e) {
    emit({{"valid", false}, {"error", e.what()}}, json, std::string("invalid: ") + e.what() + "\n");
    return kViolation;
  }
}

int cmd_unit(const std::string& file, bool json) {
  auto doc = read_document(file);
  RetractiveSpace Z;
  if (auto* z = std::get_if<RetractiveSpace>(&doc.object)) Z = *z;
  else if (auto* c = std::get_if<Comodule>(&doc.object)) Z = star(*c).space;
  else throw InputError("adjoint unit needs a retractive or comodule document");
  auto u = unit(Z);
  auto v = is_hz_equivalence(u.map.map);
  bool iso = certify_iso(u.map.map).has_value();
  std::ostringstream os;
  os << "unit Z -> (Z/X)*X\n"
     << "  Z          " << counts(*Z.total) << "\n"
     << "  (Z/X)*X    " << counts(*u.star.space.total) << "\n"
     << "  iso        " << (iso ? "yes" : "no") << "\n"
     << "  HZ-equiv   " << (v.equivalence ? "yes" : "no") << "  cone: " << v.cone.to_string() << "\n";
  emit({{"source", counts(*Z.total)},
        {"target", counts(*u.star.space.total)},
        {"iso", iso},
        {"hz_equivalence", v.equivalence},
        {"cone_homology", homology_json(v.cone)}},
       json, os.str());
  return v.equivalence ? kPass : kViolation;
}

int cmd_roundtrip(const std::string& file, bool json) {
  auto doc = read_document(file);
  Comodule c;
  if (auto* p = std::get_if<Comodule>(&doc.object)) c = *p;
  else if (auto* z = std::get_if<RetractiveSpace>(&doc.object)) c = slash(*z).comodule;
  else throw InputError("adjoint roundtrip needs a comodule or retractive document");
  auto ct = counit(c);
  bool inverse = ct.inverse.has_value();
  auto u = unit(ct.star.space);
  bool triangle = compose(star_map(ct.map, u.star, ct.star), u.map).map == identity_map(ct.star.space.total);
  bool labels = ct.slash.comodule.labels.size() == c.labels.size();
  if (inverse) {
    // labels must be carried back exactly along the inverse
    const auto& inv = *ct.inverse;
    for (int n = 0; labels && n <= c.space->dimension(); ++n)
      for (int b = 0; labels && b < static_cast<int>(c.space->count(n)); ++b) {
        auto q = inv.image(n, b);
        labels = q.word.empty() && ct.slash.comodule.labels[n][q.base] == c.labels[n][b];
      }
  }
  bool ok = inverse && triangle && labels;
  std::ostringstream os;
  os << "counit (c*X)/X -> c\n"
     << "  c          " << counts(*c.space) << " over " << counts(*c.base) << "\n"
     << "  c*X        " << counts(*ct.star.space.total) << "\n"
     << "  inverse    " << (inverse ? "certified" : "missing") << "\n"
     << "  labels     " << (labels ? "preserved" : "differ") << "\n"
     << "  triangle   " << (triangle ? "holds" : "fails") << "\n"
     << (ok ? "pass\n" : "FAIL\n");
  emit({{"space", counts(*c.space)},
        {"star", counts(*ct.star.space.total)},
        {"inverse_certified", inverse},
        {"labels_preserved", labels},
        {"triangle", triangle},
        {"pass", ok}},
       json, os.str());
  return ok ? kPass : kViolation;
}

int cmd_cover(const std::string& file, std::size_t max_cosets, bool json) {
  auto doc = read_document(file);
  auto X = underlying_sset(doc);
  if (!is_connected(*X)) throw InputError("cover needs a connected simplicial set");
  auto r = universal_cover(X, max_cosets);
  std::ostringstream os;
  Json j = {{"name", doc.name}, {"pi1", r.pi1.presentation.to_string()}, {"cosets_defined", r.cosets_defined}};
  os << "pi1 = " << r.pi1.presentation.to_string() << "\n";
  if (r.exceeded()) {
    os << "Exceeded: coset enumeration defined " << r.cosets_defined << " cosets (bound " << max_cosets << ")\n";
    j["order"] = "Exceeded";
    emit(j, json, os.str());
    return kPass;
  }
  const auto& cv = *r.cover;
  auto H = homology(*cv.total, false);
  const auto& c = r.certificate;
  os << "|pi1| = " << cv.order() << "\n"
     << "cover " << counts(*cv.total) << " -> " << counts(*X) << "\n"
     << "H(cover): " << H.to_string() << "\n"
     << "covering " << (c.covering ? "yes" : "no") << ", connected " << (c.connected ? "yes" : "no")
     << ", simply connected " << (c.simply_connected ? "yes" : "no") << ", deck free and transitive "
     << (c.deck_free_transitive ? "yes" : "no") << ", cocycle " << (c.cocycle ? "yes" : "no") << "\n";
  j["order"] = cv.order();
  j["cover_simplices"] = counts(*cv.total);
  j["cover_homology"] = homology_json(H);
  j["certificate"] = {{"covering", c.covering},
                      {"connected", c.connected},
                      {"simply_connected", c.simply_connected},
                      {"deck_free_transitive", c.deck_free_transitive},
                      {"cocycle", c.cocycle}};
  emit(j, json, os.str());
  return c.all() ? kPass : kViolation;
}

int cmd_loopgroup(const std::string& file, int truncate, std::uint64_t seed, bool json) {
  auto doc = read_document(file);
  auto X = underlying_sset(doc);
  bool collapsed = false;
  if (X->count(0) != 1) {
    if (!is_connected(*X)) throw InputError("loopgroup needs a connected simplicial set");
    X = collapse_spanning_tree(X);
    collapsed = true;
  }
  LoopGroup G(X, truncate);
  auto ids = check_loop_group_identities(G, 500, seed);
  auto tw = check_twisting_identities(G);
  auto px = check_px_identities(G, 500, seed + 1);
  auto ab = abelianization(pi0_loop_group(G));
  auto h1 = homology(*X, false).at(1);
  bool ok = ids.passed() && tw.passed() && px.passed() && ab == h1;
  std::ostringstream os;
  Json gens = Json::array();
  if (collapsed) os << "collapsed a spanning tree to make X reduced\n";
  os << "GX truncated at degree " << truncate << "\n";
  for (int n = 0; n <= truncate; ++n) {
    os << "  GX_" << n << ": free on " << G.generator_count(n) << " generators\n";
    gens.push_back(G.generator_count(n));
  }
  auto line = [&](const char* what, const IdentityReport& r) {
    os << "  " << what << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(r.failures.size(), 5); ++k) os << "    " << r.failures[k] << "\n";
  };
  line("simplicial identities", ids);
  line("twisting identities", tw);
  line("PX identities", px);
  os << "  pi0 abelianized: " << ab.to_string() << ", H1: " << h1.to_string() << (ab == h1 ? " (equal)" : " (DIFFER)")
     << "\n";
  auto rep = [](const IdentityReport& r) {
    return Json{{"checked", r.checked}, {"failures", r.failures}};
  };
  emit({{"name", doc.name},
        {"collapsed", collapsed},
        {"truncation", truncate},
        {"generators", gens},
        {"simplicial_identities", rep(ids)},
        {"twisting_identities", rep(tw)},
        {"px_identities", rep(px)},
        {"pi0_abelianization", ab.to_string()},
        {"h1", h1.to_string()},
        {"pass", ok}},
       json, os.str());
  return ok ? kPass : kViolation;
}

int cmd_verify(const VerifyOptions& opt, bool json, bool timing) {
  auto rep = run_verify(opt);
  if (json)
    std::cout << rep.json(timing).dump(2) << "\n";
  else
    std::cout << rep.text(timing);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comodules, retractive spaces and their adjunction over finite simplicial sets"};
  app.require_subcommand(1);
  bool json = false;

  std::string file;
  bool reduced = false;
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a document's simplicial set");
  homology_cmd->add_option("FILE", file)->required();
  homology_cmd->add_flag("--reduced", reduced, "Reduced homology (pointed input)");
  homology_cmd->add_flag("--json", json);

  auto* check_cmd = app.add_subcommand("check", "Validate a document of any kind");
  check_cmd->add_option("FILE", file)->required();
  check_cmd->add_flag("--json", json);

  auto* adjoint_cmd = app.add_subcommand("adjoint", "Unit and counit of the star/slash adjunction");
  adjoint_cmd->require_subcommand(1);
  auto* unit_cmd = adjoint_cmd->add_subcommand("unit", "Build the unit and test it for HZ-equivalence");
  unit_cmd->add_option("FILE", file)->required();
  unit_cmd->add_flag("--json", json);
  auto* round_cmd = adjoint_cmd->add_subcommand("roundtrip", "Certify the counit and the slash/star round trip");
  round_cmd->add_option("FILE", file)->required();
  round_cmd->add_flag("--json", json);

  std::size_t max_cosets = 10'000;
  auto* cover_cmd = app.add_subcommand("cover", "Fundamental group and universal cover");
  cover_cmd->add_option("FILE", file)->required();
  cover_cmd->add_option("--max-cosets", max_cosets, "Coset enumeration bound")->check(CLI::PositiveNumber);
  cover_cmd->add_flag("--json", json);

  int truncate = 0;
  std::uint64_t lg_seed = 1;
  auto* loop_cmd = app.add_subcommand("loopgroup", "Kan loop group, twisting function and PX checks");
  loop_cmd->add_option("FILE", file)->required();
  loop_cmd->add_option("--truncate", truncate, "Top degree of GX")->required()->check(CLI::NonNegativeNumber);
  loop_cmd->add_option("--seed", lg_seed, "Seed for random words");
  loop_cmd->add_flag("--json", json);

  VerifyOptions vopt;
  std::string suite;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites over the generated catalog");
  verify_cmd->add_option("--suite", suite, "One of: catalog adjunction esplit cofree pullback preservation homology "
                                           "cover twisted loopgroup");
  verify_cmd->add_option("--seed", vopt.seed, "Catalog seed");
  verify_cmd->add_option("--cases", vopt.cases, "Catalog objects per suite");
  verify_cmd->add_option("--threads", vopt.threads, "Worker threads (default: all cores)");
  verify_cmd->add_flag("--timing", timing, "Include per-case wall time");
  verify_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*homology_cmd) return cmd_homology(file, reduced, json);
    if (*check_cmd) return cmd_check(file, json);
    if (*unit_cmd) return cmd_unit(file, json);
    if (*round_cmd) return cmd_roundtrip(file, json);
    if (*cover_cmd) return cmd_cover(file, max_cosets, json);
    if (*loop_cmd) return cmd_loopgroup(file, truncate, lg_seed, json);
    if (!suite.empty()) vopt.suites = {suite};
    return cmd_verify(vopt, json, timing);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DimensionLimit& e) {
    std::cerr << "error: " << e.what() << " (set COMODULE_MAX_DIM to raise it)\n";
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
