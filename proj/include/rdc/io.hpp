#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "rdc/coloring.hpp"
#include "rdc/graph.hpp"

namespace rdc {

/// Malformed or unreadable input/output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"order": n, "edges": [[u,v],...], "labels": [...]}, edges u < v and
/// lexicographically sorted. "labels" is omitted for unlabeled graphs.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {"colors": [c_0, c_1, ...]} indexed by vertex id.
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes to a sibling temp file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

}  // namespace rdc
