#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twodist/graph.hpp"

namespace twodist {

using json = nlohmann::ordered_json;

std::string graph_to_json(const Graph& g) {
  Graph c = g;
  c.normalize();
  json j;
  j["kind"] = c.kind == GraphKind::Ebg ? "ebg" : "pvebg";
  j["num_vertices"] = c.num_vertices;
  json reds = json::array();
  for (auto [u, v] : c.red_edges) reds.push_back({u, v});
  j["red_edges"] = reds;
  json blues = json::array();
  for (auto [u, v] : c.blue_edges) blues.push_back({u, v});
  j["blue_edges"] = blues;
  json greens = json::array();
  for (const auto& ge : c.green_edges) {
    json e;
    e["tail"] = ge.tail;
    e["head"] = ge.head;
    e["class"] = ge.cls;
    greens.push_back(e);
  }
  j["green_edges"] = greens;
  json classes = json::array();
  for (const auto& gc : c.classes) {
    json cl;
    cl["id"] = gc.id;
    cl["colour"] = gc.colour == Colour::Red ? "red" : "blue";
    classes.push_back(cl);
  }
  j["classes"] = classes;
  json labels = json::object();
  for (const auto& [v, lab] : c.labels) labels[std::to_string(v)] = lab;
  j["labels"] = labels;
  return j.dump() + "\n";
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  Graph g;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ebg") g.kind = GraphKind::Ebg;
  else if (kind == "pvebg") g.kind = GraphKind::Pvebg;
  else throw ParseError("graph: unknown kind '" + kind + "'");
  g.num_vertices = j.at("num_vertices").get<int>();
  for (const auto& e : j.at("red_edges")) g.red_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  for (const auto& e : j.at("blue_edges")) g.blue_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  if (j.contains("green_edges"))
    for (const auto& e : j.at("green_edges"))
      g.green_edges.push_back(
          {e.at("tail").get<int>(), e.at("head").get<int>(), e.at("class").get<std::string>()});
  if (j.contains("classes"))
    for (const auto& cl : j.at("classes"))
      g.classes.push_back({cl.at("id").get<std::string>(),
                           cl.at("colour").get<std::string>() == "red" ? Colour::Red : Colour::Blue});
  if (j.contains("labels"))
    for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
      g.labels[std::stoi(it.key())] = it.value().get<std::string>();
  g.normalize();
  auto bad = validate(g);
  if (!bad.empty()) throw ParseError("graph: " + bad.front());
  return g;
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << graph_to_json(g);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

std::string graph_content_hash(const Graph& g) {
  std::string bytes = graph_to_json(g);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace twodist
