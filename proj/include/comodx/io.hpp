#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "comodule.hpp"
#include "retractive.hpp"

namespace comodx {

using Json = nlohmann::ordered_json;

/// Malformed document text or a document that fails validation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose object breaks one of its identities.
class InvalidDocument : public ParseError {
 public:
  using ParseError::ParseError;
};

using Object = std::variant<SSet, SimplicialMap, RetractiveSpace, Comodule, SimplicialMonoidData>;

struct Document {
  std::string name;
  Object object;

  std::string kind() const {
    static const char* kinds[] = {"sset", "map", "retractive", "comodule", "monoid"};
    return kinds[object.index()];
  }
};

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

namespace detail {

/// Ids per dimension: the simplex names when they are unique and nonempty, else "x<n>.<b>".
inline std::vector<std::vector<std::string>> simplex_ids(const SimplicialSet& X) {
  std::vector<std::vector<std::string>> ids(X.dimension() + 1);
  for (int n = 0; n <= X.dimension(); ++n) {
    std::set<std::string> seen;
    bool unique = true;
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b)
      unique = unique && !X.name(n, b).empty() && seen.insert(X.name(n, b)).second;
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b)
      ids[n].push_back(unique ? X.name(n, b) : "x" + std::to_string(n) + "." + std::to_string(b));
  }
  return ids;
}

inline Json ref_json(const SimplexRef& s, const std::vector<std::vector<std::string>>& ids) {
  return Json::array({Json(s.word.indices()), ids.at(s.base_dim()).at(s.base)});
}

inline Json sset_json(const SimplicialSet& X) {
  auto ids = simplex_ids(X);
  Json j = Json::object();
  if (X.pointed()) j["basepoint"] = ids[0][*X.basepoint()];
  Json levels = Json::array();
  for (int n = 0; n <= X.dimension(); ++n) {
    Json level = Json::array();
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) {
      Json s = {{"id", ids[n][b]}};
      if (n > 0) {
        Json faces = Json::array();
        for (const auto& f : X.simplex(n, b).faces) faces.push_back(ref_json(f, ids));
        s["faces"] = faces;
      }
      level.push_back(s);
    }
    levels.push_back(level);
  }
  j["simplices"] = levels;
  return j;
}

inline Json images_json(const SimplicialMap& f) {
  auto dids = simplex_ids(*f.domain());
  auto cids = simplex_ids(*f.codomain());
  Json levels = Json::array();
  for (int n = 0; n <= f.domain()->dimension(); ++n) {
    Json level = Json::array();
    for (int b = 0; b < static_cast<int>(f.domain()->count(n)); ++b)
      level.push_back({{"id", dids[n][b]}, {"image", ref_json(f.image(n, b), cids)}});
    levels.push_back(level);
  }
  return levels;
}

/// Compact rows, one per line; containers that do not fit are broken up.
inline void write_pretty(std::ostream& os, const Json& j, int indent) {
  std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || flat.size() + indent <= 100) {
    os << flat;
    return;
  }
  std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << pad << Json(it.key()).dump() << ": ";
      write_pretty(os, it.value(), indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << "}";
  } else {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      write_pretty(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << "]";
  }
}

}  // namespace detail

inline Json to_json(const Document& doc) {
  Json j = {{"kind", doc.kind()}, {"name", doc.name}};
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, SSet>) {
          auto body = detail::sset_json(*obj);
          for (auto& [k, v] : body.items()) j[k] = v;
        } else if constexpr (std::is_same_v<T, SimplicialMap>) {
          j["domain"] = detail::sset_json(*obj.domain());
          j["codomain"] = detail::sset_json(*obj.codomain());
          j["images"] = detail::images_json(obj);
        } else if constexpr (std::is_same_v<T, RetractiveSpace>) {
          j["base"] = detail::sset_json(*obj.base);
          j["total"] = detail::sset_json(*obj.total);
          j["inclusion"] = detail::images_json(obj.incl);
          j["retraction"] = detail::images_json(obj.retr);
        } else if constexpr (std::is_same_v<T, Comodule>) {
          j["base"] = detail::sset_json(*obj.base);
          j["space"] = detail::sset_json(*obj.space);
          auto yids = detail::simplex_ids(*obj.space);
          auto xids = detail::simplex_ids(*obj.base);
          Json levels = Json::array();
          for (int n = 0; n <= obj.space->dimension(); ++n) {
            Json level = Json::object();
            for (int b = 0; b < static_cast<int>(obj.space->count(n)); ++b)
              if (obj.labels[n][b]) level[yids[n][b]] = detail::ref_json(*obj.labels[n][b], xids);
            levels.push_back(level);
          }
          j["labels"] = levels;
        } else {
          const auto& X = *obj.base;
          auto ids = detail::simplex_ids(X);
          j["elements"] = ids[0];
          j["unit"] = ids[0][obj.unit];
          Json table = Json::array();
          for (int a = 0; a < static_cast<int>(X.count(0)); ++a) {
            Json row = Json::array();
            for (int b = 0; b < static_cast<int>(X.count(0)); ++b)
              row.push_back(ids[0][obj.multiply(SimplexRef::nondeg(0, a), SimplexRef::nondeg(0, b)).base]);
            table.push_back(row);
          }
          j["table"] = table;
        }
      },
      doc.object);
  return j;
}

/// Canonical text: JSON with one simplex (or image, or label row) per line.
inline std::string serialize(const Document& doc) {
  std::ostringstream os;
  detail::write_pretty(os, to_json(doc), 0);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Reading
// ---------------------------------------------------------------------------

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

struct IdTable {
  std::vector<std::map<std::string, int>> ids;
  int lookup(int dim, const std::string& id, const std::string& where) const {
    if (dim < 0 || dim >= static_cast<int>(ids.size())) throw ParseError(where + ": no simplices of dimension " + std::to_string(dim));
    auto it = ids[dim].find(id);
    if (it == ids[dim].end()) throw ParseError(where + ": unknown " + std::to_string(dim) + "-simplex '" + id + "'");
    return it->second;
  }
};

/// [word, id] at dimension n.
inline SimplexRef parse_ref(const Json& j, int n, const IdTable& t, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array()) throw ParseError(where + ": expected [degeneracies, id]");
  std::vector<int> ops;
  for (const auto& o : j[0]) {
    if (!o.is_number_integer()) throw ParseError(where + ": degeneracy indices must be integers");
    ops.push_back(o.get<int>());
  }
  DegeneracyWord w;
  try {
    w = DegeneracyWord::from_operators(ops);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  int k = n - static_cast<int>(w.size());
  for (int i : w.indices())
    if (i > n - 1) throw ParseError(where + ": degeneracy index out of range");
  int base = t.lookup(k, str(j[1], where), where);
  return SimplexRef{n, base, w};
}

inline std::pair<SSet, IdTable> parse_sset(const Json& j, const std::string& where) {
  const auto& levels = field(j, "simplices", where);
  if (!levels.is_array()) throw ParseError(where + ".simplices: expected an array of dimensions");
  SimplicialSet X;
  IdTable t;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    t.ids.emplace_back();
    const auto& level = levels[n];
    std::string lw = where + ".simplices[" + std::to_string(n) + "]";
    if (!level.is_array()) throw ParseError(lw + ": expected an array");
    for (std::size_t b = 0; b < level.size(); ++b) {
      std::string sw = lw + "[" + std::to_string(b) + "]";
      std::string id = str(field(level[b], "id", sw), sw + ".id");
      if (t.ids[n].count(id)) throw ParseError(sw + ": duplicate id '" + id + "'");
      std::vector<SimplexRef> faces;
      if (n > 0) {
        const auto& fs = field(level[b], "faces", sw);
        if (!fs.is_array() || fs.size() != n + 1) throw ParseError(sw + ": expected " + std::to_string(n + 1) + " faces");
        for (std::size_t i = 0; i < fs.size(); ++i)
          faces.push_back(parse_ref(fs[i], static_cast<int>(n) - 1, t, sw + ".faces[" + std::to_string(i) + "]"));
      }
      t.ids[n][id] = X.add_simplex(static_cast<int>(n), id, std::move(faces));
    }
  }
  if (j.contains("basepoint")) X.set_basepoint(t.lookup(0, str(j["basepoint"], where + ".basepoint"), where + ".basepoint"));
  check_dimension(X.dimension(), where);
  try {
    X.validate();
  } catch (const ValidationError& e) {
    throw InvalidDocument(where + ": " + e.what());
  }
  return {share(std::move(X)), std::move(t)};
}

inline SimplicialMap parse_images(const Json& j, const SSet& dom, const IdTable& dt, const SSet& cod, const IdTable& ct,
                                  const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of dimensions");
  SimplicialMap::Images img(dom->dimension() + 1);
  for (int n = 0; n <= dom->dimension(); ++n) {
    img[n].resize(dom->count(n));
    std::vector<bool> seen(dom->count(n), false);
    if (n >= static_cast<int>(j.size())) throw ParseError(where + ": missing dimension " + std::to_string(n));
    for (std::size_t k = 0; k < j[n].size(); ++k) {
      std::string w = where + "[" + std::to_string(n) + "][" + std::to_string(k) + "]";
      int b = dt.lookup(n, str(field(j[n][k], "id", w), w + ".id"), w);
      img[n][b] = parse_ref(field(j[n][k], "image", w), n, ct, w + ".image");
      seen[b] = true;
    }
    for (std::size_t b = 0; b < seen.size(); ++b)
      if (!seen[b]) throw ParseError(where + ": no image for '" + dom->name(n, static_cast<int>(b)) + "'");
  }
  try {
    return SimplicialMap(dom, cod, std::move(img));
  } catch (const ValidationError& e) {
    throw InvalidDocument(where + ": " + e.what());
  }
}

}  // namespace detail

inline Document from_json(const Json& j) {
  Document doc;
  std::string kind = detail::str(detail::field(j, "kind", "document"), "document.kind");
  if (j.contains("name")) doc.name = detail::str(j["name"], "document.name");
  try {
    if (kind == "sset") {
      doc.object = detail::parse_sset(j, "document").first;
    } else if (kind == "map") {
      auto [d, dt] = detail::parse_sset(detail::field(j, "domain", "document"), "domain");
      auto [c, ct] = detail::parse_sset(detail::field(j, "codomain", "document"), "codomain");
      doc.object = detail::parse_images(detail::field(j, "images", "document"), d, dt, c, ct, "images");
    } else if (kind == "retractive") {
      auto [x, xt] = detail::parse_sset(detail::field(j, "base", "document"), "base");
      auto [z, zt] = detail::parse_sset(detail::field(j, "total", "document"), "total");
      auto i = detail::parse_images(detail::field(j, "inclusion", "document"), x, xt, z, zt, "inclusion");
      auto r = detail::parse_images(detail::field(j, "retraction", "document"), z, zt, x, xt, "retraction");
      doc.object = make_retractive(i, r);
    } else if (kind == "comodule") {
      auto [x, xt] = detail::parse_sset(detail::field(j, "base", "document"), "base");
      auto [y, yt] = detail::parse_sset(detail::field(j, "space", "document"), "space");
      const auto& lj = detail::field(j, "labels", "document");
      if (!lj.is_array()) throw ParseError("labels: expected an array of dimensions");
      Labels labels(y->dimension() + 1);
      for (int n = 0; n <= y->dimension(); ++n) {
        labels[n].assign(y->count(n), std::nullopt);
        if (n >= static_cast<int>(lj.size())) continue;
        if (!lj[n].is_object()) throw ParseError("labels[" + std::to_string(n) + "]: expected an object");
        for (auto it = lj[n].begin(); it != lj[n].end(); ++it) {
          std::string w = "labels[" + std::to_string(n) + "]." + it.key();
          labels[n][yt.lookup(n, it.key(), w)] = detail::parse_ref(it.value(), n, xt, w);
        }
      }
      doc.object = from_labels(x, y, std::move(labels));
    } else if (kind == "monoid") {
      const auto& el = detail::field(j, "elements", "document");
      std::vector<std::string> names;
      std::map<std::string, int> pos;
      for (const auto& e : el) {
        names.push_back(detail::str(e, "elements"));
        if (!pos.emplace(names.back(), static_cast<int>(names.size()) - 1).second)
          throw ParseError("elements: duplicate '" + names.back() + "'");
      }
      auto at = [&](const Json& v, const std::string& w) {
        auto it = pos.find(detail::str(v, w));
        if (it == pos.end()) throw ParseError(w + ": unknown element");
        return it->second;
      };
      std::vector<std::vector<int>> table;
      const auto& tj = detail::field(j, "table", "document");
      for (std::size_t a = 0; a < tj.size(); ++a) {
        table.emplace_back();
        for (std::size_t b = 0; b < tj[a].size(); ++b)
          table.back().push_back(at(tj[a][b], "table[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
        if (table.back().size() != names.size()) throw ParseError("table: row " + std::to_string(a) + " has the wrong length");
      }
      doc.object = discrete_monoid(names, table, at(detail::field(j, "unit", "document"), "unit"));
    } else {
      throw ParseError("document.kind: unknown kind '" + kind + "'");
    }
  } catch (const ValidationError& e) {
    throw InvalidDocument(std::string("validation failed: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

inline Document parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  return from_json(j);
}

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace comodx
