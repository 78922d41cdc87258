#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "causaltop/causal_site.hpp"
#include "causaltop/errors.hpp"
#include "causaltop/framework.hpp"
#include "causaltop/minkowski.hpp"
#include "causaltop/rational.hpp"
#include "causaltop/region.hpp"
#include "causaltop/topology.hpp"

namespace causaltop {

using Json = nlohmann::ordered_json;

// --- frameworks ------------------------------------------------------------

inline Json framework_to_json(const Framework& fw) {
  Json j;
  j["places"] = fw.places();
  Json fam = Json::array();
  for (auto m : fw.framology()) fam.push_back(fw.member_names(m));
  j["framology"] = fam;
  return j;
}

inline Framework framework_from_json(const Json& j) {
  std::vector<std::string> places = j.at("places").get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> fam;
  for (const auto& member : j.at("framology"))
    fam.push_back(member.get<std::vector<std::string>>());
  return Framework(std::move(places), fam);
}

// --- topologies ------------------------------------------------------------

inline Json topology_to_json(const FiniteTopology& t) {
  Json j;
  j["ground"] = t.points();
  Json closed = Json::array();
  for (auto m : t.closed_sets()) closed.push_back(t.member_names(m));
  j["closed"] = closed;
  return j;
}

inline FiniteTopology topology_from_json(const Json& j) {
  std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
  std::sort(ground.begin(), ground.end());
  if (ground.size() > FiniteTopology::kMaxPoints)
    throw ResourceError("ground set too large");
  const std::uint32_t g =
      ground.empty() ? 0u : (std::uint32_t{1} << ground.size()) - 1;
  FiniteTopology lookup = FiniteTopology::from_closed_masks(ground, {0u, g});
  std::vector<std::uint32_t> closed;
  for (const auto& member : j.at("closed")) {
    std::uint32_t m = 0;
    for (const auto& name : member)
      m |= std::uint32_t{1} << lookup.index_of(name.get<std::string>());
    closed.push_back(m);
  }
  return FiniteTopology::from_closed_masks(std::move(ground), std::move(closed));
}

// --- causal sites ----------------------------------------------------------

inline Json causal_site_to_json(const CausalSite& cs) {
  Json j;
  j["elements"] = cs.names();
  j["bottom"] = cs.names()[cs.bottom()];
  const std::size_t n = cs.size();
  Json leq = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !cs.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      bool direct = true;  // transitive reduction
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && cs.leq(static_cast<int>(a), static_cast<int>(c)) &&
            cs.leq(static_cast<int>(c), static_cast<int>(b)))
          direct = false;
      if (direct) leq.push_back(Json::array({cs.names()[a], cs.names()[b]}));
    }
  j["leq"] = leq;
  Json prec = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cs.prec(static_cast<int>(a), static_cast<int>(b)))
        prec.push_back(Json::array({cs.names()[a], cs.names()[b]}));
  j["prec"] = prec;
  return j;
}

inline CausalSite causal_site_from_json(const Json& j) {
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  auto index_of = [&](const std::string& nm) {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw ValidationError("unknown element: " + nm);
    return static_cast<int>(it - names.begin());
  };
  const int bottom = index_of(j.at("bottom").get<std::string>());

  // leq is stored as its transitive reduction; expand to the full relation.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& pair : j.at("leq"))
    reach[index_of(pair.at(0).get<std::string>())]
         [index_of(pair.at(1).get<std::string>())] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = true;

  std::vector<std::pair<int, int>> leq_pairs, prec_pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (reach[a][b]) leq_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  for (const auto& pair : j.at("prec"))
    prec_pairs.emplace_back(index_of(pair.at(0).get<std::string>()),
                            index_of(pair.at(1).get<std::string>()));
  return CausalSite(std::move(names), bottom, leq_pairs, prec_pairs);
}

// --- Minkowski vectors and regions ----------------------------------------

inline Json mink_vec_to_json(const MinkVec& v) {
  Json arr = Json::array();
  for (const auto& c : v.coords) arr.push_back(rat_to_string(c));
  return arr;
}

inline MinkVec mink_vec_from_json(const Json& j) {
  std::vector<Rat> coords;
  for (const auto& c : j) coords.push_back(rat_from_string(c.get<std::string>()));
  return MinkVec(std::move(coords));
}

// Regions travel as unions of closed diamonds with (t, x) corner points.
inline Json region_to_json(const Region& r) {
  Json j;
  j["dim"] = 2;
  Json ds = Json::array();
  for (const auto& b : r.to_blocks()) {
    Json d;
    d["p"] = mink_vec_to_json(from_null({b.u_lo, b.v_lo}));
    d["q"] = mink_vec_to_json(from_null({b.u_hi, b.v_hi}));
    ds.push_back(d);
  }
  j["diamonds"] = ds;
  return j;
}

inline Region region_from_json(const Json& j) {
  if (j.at("dim").get<int>() != 2)
    throw ValidationError("region documents must have dim 2");
  std::vector<std::pair<MinkVec, MinkVec>> diamonds;
  for (const auto& d : j.at("diamonds"))
    diamonds.emplace_back(mink_vec_from_json(d.at("p")), mink_vec_from_json(d.at("q")));
  return region_from_diamonds(diamonds);
}

// Lists of diamonds (kept separate, not normalized into one region).
inline std::vector<Region> region_list_from_json(const Json& j) {
  if (j.at("dim").get<int>() != 2)
    throw ValidationError("region documents must have dim 2");
  std::vector<Region> out;
  for (const auto& d : j.at("diamonds"))
    out.push_back(region_from_diamonds(
        {{mink_vec_from_json(d.at("p")), mink_vec_from_json(d.at("q"))}}));
  return out;
}

// --- document envelope -----------------------------------------------------

struct Document {
  std::string kind;  // framework | topology | causal_site | region_set
  Json payload;
};

inline Json document_to_json(const Document& doc) {
  Json j;
  j["kind"] = doc.kind;
  j["version"] = "1";
  j["payload"] = doc.payload;
  return j;
}

inline Document document_from_json(const Json& j) {
  Document doc;
  doc.kind = j.at("kind").get<std::string>();
  if (j.at("version").get<std::string>() != "1")
    throw ValidationError("unsupported document version");
  static const std::vector<std::string> kinds{"framework", "topology",
                                             "causal_site", "region_set"};
  if (std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end())
    throw ValidationError("unknown document kind: " + doc.kind);
  doc.payload = j.at("payload");
  return doc;
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const Json::exception& e) {
    throw ValidationError("malformed document " + path + ": " + e.what());
  }
}

inline void save_document(const std::string& path, const Document& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << document_to_json(doc).dump(2) << "\n";
}

// --- DOT export ------------------------------------------------------------

// Transitively reduced specialization graph (edge x -> y iff x <= y).
inline std::string export_dot(const FiniteTopology& t) {
  const auto sp = specialization(t);
  const std::size_t n = sp.points.size();
  auto le = [&](std::size_t x, std::size_t y) { return (sp.below[y] >> x & 1u) != 0; };
  std::string out = "digraph specialization {\n";
  for (const auto& p : sp.points) out += "  \"" + p + "\";\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) direct = false;
      if (direct)
        out += "  \"" + sp.points[x] + "\" -> \"" + sp.points[y] + "\";\n";
    }
  return out + "}\n";
}

// Hasse diagram of the order (solid) plus causal precedence (dashed).
inline std::string export_dot(const CausalSite& cs) {
  const std::size_t n = cs.size();
  std::string out = "digraph causal_site {\n";
  for (const auto& nm : cs.names()) out += "  \"" + nm + "\";\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !cs.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && cs.leq(static_cast<int>(a), static_cast<int>(c)) &&
            cs.leq(static_cast<int>(c), static_cast<int>(b)))
          direct = false;
      if (direct)
        out += "  \"" + cs.names()[a] + "\" -> \"" + cs.names()[b] + "\";\n";
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cs.prec(static_cast<int>(a), static_cast<int>(b)))
        out += "  \"" + cs.names()[a] + "\" -> \"" + cs.names()[b] +
               "\" [style=dashed];\n";
  return out + "}\n";
}

}  // namespace causaltop
