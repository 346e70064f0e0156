#include "steiner/document.hpp"

#include <fstream>
#include <sstream>

namespace steiner {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace

std::string TreeDocument::serialize() const {
  json j;
  j["format_version"] = kFormatVersion;
  json meta;
  meta["construction"] = construction;
  if (tree.declared_eps) {
    meta["eps"] = *tree.declared_eps;
  } else {
    meta["eps"] = nullptr;
  }
  meta["params"] = params;
  j["metadata"] = std::move(meta);

  json topo;
  topo["root_terminal"] = tree.topology.root_terminal();
  json nodes = json::array();
  for (int i = 0; i < tree.topology.node_count(); ++i) {
    nodes.push_back(tree.topology.is_terminal(i) ? "terminal" : "steiner");
  }
  topo["nodes"] = std::move(nodes);
  json edges = json::array();
  for (auto [u, v] : tree.topology.edges()) {
    edges.push_back(json::array({u, v}));
  }
  topo["edges"] = std::move(edges);
  j["topology"] = std::move(topo);

  json positions = json::array();
  for (Point p : tree.position) {
    positions.push_back(json::array({p.real(), p.imag()}));
  }
  j["positions"] = std::move(positions);
  return j.dump(2) + "\n";
}

TreeDocument TreeDocument::parse(const std::string& text) {
  json j = parse_text(text);
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw ParseError("unsupported format_version");
    }
    const json& topo = j.at("topology");
    const json& nodes = topo.at("nodes");
    std::vector<NodeKind> kinds;
    for (const auto& kind : nodes) {
      std::string name = kind.get<std::string>();
      if (name == "terminal") {
        kinds.push_back(NodeKind::terminal);
      } else if (name == "steiner") {
        kinds.push_back(NodeKind::steiner);
      } else {
        throw ParseError("unknown node kind " + name);
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : topo.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    TreeDocument doc;
    doc.tree.topology = FullTopology::from_edges(static_cast<int>(kinds.size()), edges, kinds,
                                                 topo.at("root_terminal").get<int>());
    for (const auto& p : j.at("positions")) {
      doc.tree.position.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    doc.tree.validate();
    const json& meta = j.at("metadata");
    doc.construction = meta.value("construction", std::string{});
    if (meta.contains("eps") && !meta.at("eps").is_null()) {
      doc.tree.declared_eps = meta.at("eps").get<double>();
    }
    if (meta.contains("params")) doc.params = meta.at("params");
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tree document: ") + e.what());
  }
}

void TreeDocument::save(const std::string& path) const { write_file(path, serialize()); }

TreeDocument TreeDocument::load(const std::string& path) { return parse(read_file(path)); }

std::string PathDocument::serialize() const {
  json j;
  j["format_version"] = kFormatVersion;
  json vertices = json::array();
  for (Point p : path.vertices) vertices.push_back(json::array({p.real(), p.imag()}));
  j["path"] = {{"vertices", std::move(vertices)}, {"turns", path.turns}};
  j["tree_length"] = tree_length;
  j["endpoint_distance"] = endpoint_distance;
  j["kappa"] = kappa;
  if (schmidt_bound) {
    j["schmidt_bound"] = *schmidt_bound;
  } else {
    j["schmidt_bound"] = nullptr;
  }
  return j.dump(2) + "\n";
}

PathDocument PathDocument::parse(const std::string& text) {
  json j = parse_text(text);
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw ParseError("unsupported format_version");
    }
    PathDocument doc;
    std::vector<Point> vertices;
    for (const auto& p : j.at("path").at("vertices")) {
      vertices.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    doc.path = PolyPath::from_vertices(std::move(vertices));
    doc.path.turns = j.at("path").at("turns").get<std::vector<double>>();
    doc.tree_length = j.at("tree_length").get<double>();
    doc.endpoint_distance = j.at("endpoint_distance").get<double>();
    doc.kappa = j.at("kappa").get<double>();
    if (!j.at("schmidt_bound").is_null()) {
      doc.schmidt_bound = j.at("schmidt_bound").get<double>();
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed path document: ") + e.what());
  }
}

void PathDocument::save(const std::string& path) const { write_file(path, serialize()); }

PathDocument PathDocument::load(const std::string& path) { return parse(read_file(path)); }

bool looks_like_path_document(const std::string& text) {
  json j = parse_text(text);
  return j.contains("path");
}

}  // namespace steiner
