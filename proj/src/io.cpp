#include "rdc/io.hpp"

#include <fstream>
#include <sstream>

namespace rdc {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json out;
  out["order"] = g.order();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges")) {
      throw IoError("graph JSON needs \"order\" and \"edges\"");
    }
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw IoError("each edge must be a [u, v] pair");
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return Graph(order, edges, std::move(labels));
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("invalid graph: ") + e.what());
  }
}

json coloring_to_json(const Coloring& c) { return {{"colors", c.colors()}}; }

Coloring coloring_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("colors")) {
      throw IoError("coloring JSON needs \"colors\"");
    }
    return Coloring(j.at("colors").get<std::vector<Color>>());
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed coloring JSON: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("invalid coloring: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

}  // namespace rdc
