#include "gausswords/export.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace gauss::io {

using json = nlohmann::ordered_json;

std::string state_id(const carter::TraversalState& s) {
  return std::to_string(s.position) + "/" + to_char(s.incoming);
}

std::string faces_to_dot(const carter::FaceDecomposition& fd) {
  const carter::Surface surface(fd.word);
  std::ostringstream os;
  os << "digraph faces {\n";
  os << "  label=\"" << render(fd.word) << "\";\n";
  os << "  node [shape=box];\n";
  for (std::size_t f = 0; f < fd.faces.size(); ++f) {
    os << "  subgraph cluster_face" << f << " {\n";
    os << "    label=\"face " << f << "\";\n";
    for (const auto& s : fd.faces[f]) {
      os << "    \"" << state_id(s) << "\" [label=\"" << state_id(s) << " "
         << to_string(fd.word[s.position]) << "\"];\n";
    }
    os << "  }\n";
  }
  for (const auto& face : fd.faces) {
    for (const auto& s : face) {
      os << "  \"" << state_id(s) << "\" -> \"" << state_id(surface.step(s)) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string faces_to_json(const carter::FaceDecomposition& fd) {
  json j;
  j["schema"] = kFacesSchema;
  j["word"] = render(fd.word);
  json faces = json::array();
  for (const auto& face : fd.faces) {
    json cycle = json::array();
    for (const auto& s : face) {
      json state;
      state["position"] = s.position;
      state["direction"] = std::string(1, to_char(s.incoming));
      cycle.push_back(state);
    }
    faces.push_back(cycle);
  }
  j["faces"] = faces;
  return j.dump();
}

std::string euler_to_json(const GaussWord& w, const carter::EulerReport& r) {
  json j;
  j["schema"] = kEulerSchema;
  j["word"] = render(w);
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["faces"] = r.faces;
  j["chi"] = r.chi;
  return j.dump();
}

namespace {

std::vector<interlace::Edge> sorted_edges(const interlace::InterlacementGraph& g) {
  std::vector<interlace::Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges)
    if (e.v < e.u) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  return edges;
}

}  // namespace

std::string interlacement_to_dot(const interlace::InterlacementGraph& g) {
  std::ostringstream os;
  os << "graph interlacement {\n";
  for (const auto& v : g.vertices()) os << "  " << v.value() << ";\n";
  for (const auto& e : sorted_edges(g)) {
    os << "  " << e.u.value() << " -- " << e.v.value() << " [label=\"" << e.beta << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string interlacement_to_json(const interlace::InterlacementGraph& g) {
  json j;
  j["schema"] = kInterlaceSchema;
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back(v.value());
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& e : sorted_edges(g)) {
    json o;
    o["u"] = e.u.value();
    o["v"] = e.v.value();
    o["beta"] = e.beta;
    o["beta_count"] = e.beta_count;
    es.push_back(o);
  }
  j["edges"] = es;
  return j.dump();
}

std::string describe_witness(const interlace::PlanarityVerdict& v) {
  std::ostringstream os;
  if (const auto* l = std::get_if<Label>(&v.witness)) {
    os << "label " << l->value() << " has an odd number of interlaced labels";
  } else if (const auto* p = std::get_if<std::pair<Label, Label>>(&v.witness)) {
    os << "labels " << p->first.value() << " and " << p->second.value()
       << " are not interlaced but have odd beta";
  } else if (const auto* c = std::get_if<std::vector<Label>>(&v.witness)) {
    os << "closed path ";
    for (std::size_t i = 0; i < c->size(); ++i) os << (i ? "-" : "") << (*c)[i].value();
    os << " has odd beta sum";
  }
  return os.str();
}

}  // namespace gauss::io
