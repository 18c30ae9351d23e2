#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "positroidlab/analysis.hpp"

namespace plab {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "positroidlab/v1";

// ---------------------------------------------------------------------------
// JSON encodings.

inline Json to_json(const Perm& p) { return Json{{"n", p.n()}, {"images", p.images()}}; }

inline Perm perm_from_json(const Json& j) {
  std::vector<int> img = j.at("images").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<int>() != int(img.size()))
    throw DomainError("permutation size mismatch in JSON");
  return Perm(std::move(img));
}

inline Json to_json(const AffinePerm& f) {
  return Json{{"n", f.n()}, {"window", f.window()}};
}

inline AffinePerm affine_from_json(const Json& j) {
  return AffinePerm(j.at("n").get<int>(), j.at("window").get<std::vector<long long>>());
}

inline Json to_json(const KSubset& s) { return Json(s.members()); }

inline KSubset ksubset_from_json(const Json& j, int n) {
  return KSubset::of(n, j.get<std::vector<int>>());
}

inline Json to_json(const Necklace& N) {
  Json subs = Json::array();
  for (const KSubset& s : N.subsets()) subs.push_back(to_json(s));
  return Json{{"n", N.n()},
              {"k", N.k()},
              {"subsets", subs},
              {"removal", N.removal().images()},
              {"insertion", N.insertion().images()}};
}

inline Necklace necklace_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<KSubset> subs;
  for (const Json& s : j.at("subsets")) subs.push_back(ksubset_from_json(s, n));
  return Necklace(std::move(subs), Perm(j.at("removal").get<std::vector<int>>()),
                  Perm(j.at("insertion").get<std::vector<int>>()));
}

inline Json to_json(const Positroid& M, bool with_bases) {
  Json j{{"necklace", to_json(M.necklace())}};
  if (with_bases) {
    Json bases = Json::array();
    for (const KSubset& b : M.bases()) bases.push_back(to_json(b));
    j["bases"] = bases;
  }
  return j;
}

inline Json to_json(const PlabicGraph& G) {
  Json vertices = Json::array();
  for (int v = 0; v < G.num_vertices(); ++v)
    vertices.push_back(Json{{"id", v},
                            {"color", G.color[v] == VColor::boundary
                                          ? "boundary"
                                          : G.color[v] == VColor::white ? "white" : "black"}});
  Json edges = Json::array();
  for (const auto& e : G.edges) edges.push_back(Json::array({e[0], e[1]}));
  Json rot = Json::object();
  for (int v = 0; v < G.num_vertices(); ++v) rot[std::to_string(v)] = G.rot[v];
  std::vector<int> boundary;
  for (int v = 0; v < G.n; ++v) boundary.push_back(v);
  return Json{{"n", G.n},          {"rho", G.rho.images()}, {"vertices", vertices},
              {"edges", edges},    {"rotation", rot},       {"boundary", boundary}};
}

inline PlabicGraph graph_from_json(const Json& j) {
  PlabicGraph G;
  G.n = j.at("n").get<int>();
  G.rho = Perm(j.at("rho").get<std::vector<int>>());
  for (const Json& v : j.at("vertices")) {
    std::string c = v.at("color").get<std::string>();
    G.color.push_back(c == "boundary" ? VColor::boundary
                                      : c == "white" ? VColor::white : VColor::black);
  }
  for (const Json& e : j.at("edges"))
    G.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  G.rot.resize(G.num_vertices());
  for (auto& [key, val] : j.at("rotation").items())
    G.rot[std::stoi(key)] = val.get<std::vector<int>>();
  validate(G);
  return G;
}

inline Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [arc, mult] : q.arrows)
    arrows.push_back(Json::array({arc.first, arc.second, mult}));
  return Json{{"vertices", q.m}, {"frozen", q.frozen}, {"arrows", arrows}};
}

inline Json to_json(const Seed& s) {
  Json frozen = Json::array(), mut = Json::array();
  std::vector<std::string> names;
  for (int v = 0; v < s.size(); ++v)
    names.push_back(s.label(v) ? s.label(v)->to_string() : "x" + std::to_string(v));
  for (int v = 0; v < s.size(); ++v) {
    Json lab;
    if (s.label(v)) lab = Json{{"pluecker", to_json(*s.label(v))}};
    else lab = Json{{"laurent", s.expr(v).to_string(names)}};
    (s.frozen(v) ? frozen : mut).push_back(lab);
  }
  Json arrows = Json::array();
  for (const auto& [arc, mult] : s.quiver().arrows)
    arrows.push_back(Json::array({arc.first, arc.second, mult}));
  return Json{{"frozen", frozen}, {"mutable", mut}, {"arrows", arrows}};
}

inline Json to_json(const QMatrix& M) {
  Json rows = Json::array();
  for (int r = 0; r < M.k; ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.n; ++c) row.push_back(rat_to_string(M.a[r][c]));
    rows.push_back(row);
  }
  return Json{{"k", M.k}, {"n", M.n}, {"entries", rows}};
}

inline QMatrix matrix_from_json(const Json& j) {
  QMatrix M = QMatrix::zero(j.at("k").get<int>(), j.at("n").get<int>());
  const Json& rows = j.at("entries");
  for (int r = 0; r < M.k; ++r)
    for (int c = 0; c < M.n; ++c)
      M.a[r][c] = rat_from_string(rows.at(r).at(c).get<std::string>());
  return M;
}

inline Json to_json(const SweepReport& rep) {
  Json instances = Json::array();
  for (const SweepInstance& inst : rep.instances) {
    Json j{{"theorem", rep.kind}, {"n", inst.n},          {"k", inst.k},
           {"pi", inst.pi},       {"status", inst.status}};
    if (!inst.witness.empty()) j["witness"] = inst.witness;
    instances.push_back(j);
  }
  return Json{{"theorem", rep.kind},
              {"n_max", rep.n_max},
              {"all_pass", rep.all_pass},
              {"checks", rep.checks},
              {"instances", instances}};
}

inline Json to_json(const QuasiCertificate& cert) {
  Json j{{"ok", cert.ok}, {"points_checked", cert.points_checked}};
  if (!cert.ok) {
    j["failure"] = cert.failure;
    return j;
  }
  j["frozen_change"] = cert.frozen_change;
  j["mutable_rescale"] = cert.rescale;
  j["mutable_map"] = cert.mutable_map;
  return j;
}

/// Wraps a payload with the schema tag.
inline Json versioned(Json payload) {
  Json j{{"schema", kSchema}};
  j.update(payload);
  return j;
}

// ---------------------------------------------------------------------------
// DOT exports.

inline std::string dot(const PlabicGraph& G, const FaceLabeling* fl = nullptr) {
  std::ostringstream out;
  out << "graph plabic {\n  layout=neato;\n";
  for (int v = 0; v < G.num_vertices(); ++v) {
    if (G.color[v] == VColor::boundary)
      out << "  v" << v << " [shape=plaintext,label=\"" << G.rho(v + 1) << "\"];\n";
    else
      out << "  v" << v << " [shape=circle,label=\"\",style=filled,fillcolor="
          << (G.color[v] == VColor::white ? "white" : "black") << "];\n";
  }
  for (const auto& e : G.edges) out << "  v" << e[0] << " -- v" << e[1] << ";\n";
  if (fl) {
    out << "  // face labels\n";
    for (int f = 0; f < fl->fd.num_faces; ++f)
      out << "  // face " << f << ": " << fl->target[f].to_string() << "\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string dot(const Quiver& q, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int v = 0; v < q.m; ++v)
    out << "  v" << v << " [label=\"" << names[v] << "\""
        << (q.frozen[v] ? ",shape=box" : ",shape=ellipse") << "];\n";
  for (const auto& [arc, mult] : q.arrows) {
    out << "  v" << arc.first << " -> v" << arc.second;
    if (mult > 1) out << " [label=\"" << mult << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string dot(const ToggleGraph& tg, const Perm& pi) {
  std::ostringstream out;
  out << "graph toggle_graph {\n  // trip permutation " << pi.to_string() << "\n";
  for (int v = 0; v < int(tg.vertices.size()); ++v)
    out << "  v" << v << " [label=\"" << reduce(tg.vertices[v]).to_string() << "\",color="
        << (tg.component[v] == 0 ? "black" : "red") << "];\n";
  for (auto [x, y] : tg.edges) out << "  v" << x << " -- v" << y << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// SVG for tilings and necklace curves.

namespace detail {

inline double approx(const Rat& r) { return r.get_d(); }

struct SvgFrame {
  double min_x = -1, min_y = -1, max_x = 1, max_y = 1;
  double sx(const Rat& x) const { return 40 + (approx(x) - min_x) / (max_x - min_x) * 520; }
  double sy(const Rat& y) const { return 40 + (max_y - approx(y)) / (max_y - min_y) * 520; }
};

}  // namespace detail

/// Tiling picture: faces shaded by color, edges, vertices labeled by subsets.
/// An optional necklace draws its closed curve on top.
inline std::string svg(const PlabicTiling& T, const Necklace* curve = nullptr) {
  detail::SvgFrame fr;
  for (const Vec2& p : T.positions) {
    fr.min_x = std::min(fr.min_x, detail::approx(p.x) - 0.3);
    fr.max_x = std::max(fr.max_x, detail::approx(p.x) + 0.3);
    fr.min_y = std::min(fr.min_y, detail::approx(p.y) - 0.3);
    fr.max_y = std::max(fr.max_y, detail::approx(p.y) + 0.3);
  }
  std::map<KSubset, Vec2> pos;
  for (size_t i = 0; i < T.vertices.size(); ++i) pos[T.vertices[i]] = T.positions[i];
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  for (const TilingFace& f : T.faces) {
    out << "  <polygon points=\"";
    for (const KSubset& m : f.members) {
      const Vec2& p = pos.at(m);
      out << fr.sx(p.x) << "," << fr.sy(p.y) << " ";
    }
    out << "\" fill=\"" << (f.white ? "#f8f8f8" : "#c0c0c0")
        << "\" stroke=\"none\"/>\n";
  }
  for (const auto& [a, b] : T.edges) {
    const Vec2 &p = pos.at(a), &q = pos.at(b);
    out << "  <line x1=\"" << fr.sx(p.x) << "\" y1=\"" << fr.sy(p.y) << "\" x2=\""
        << fr.sx(q.x) << "\" y2=\"" << fr.sy(q.y) << "\" stroke=\"#404040\"/>\n";
  }
  if (curve) {
    std::vector<Vec2> pts = polygon_points(curve->n());
    out << "  <polygon points=\"";
    for (int a = 1; a <= curve->n(); ++a) {
      Vec2 p = subset_point(curve->at(a), pts);
      out << fr.sx(p.x) << "," << fr.sy(p.y) << " ";
    }
    out << "\" fill=\"none\" stroke=\"#d02020\" stroke-width=\"2\"/>\n";
  }
  for (size_t i = 0; i < T.vertices.size(); ++i) {
    const Vec2& p = T.positions[i];
    out << "  <circle cx=\"" << fr.sx(p.x) << "\" cy=\"" << fr.sy(p.y)
        << "\" r=\"3\" fill=\"#202020\"/>\n"
        << "  <text x=\"" << fr.sx(p.x) + 5 << "\" y=\"" << fr.sy(p.y) - 5
        << "\" font-size=\"11\">" << T.vertices[i].to_string() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace plab
