#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "frustum/graph.hpp"

namespace frustum::io {

/// "u v\n" per edge, u < v, ascending.
void write_edge_list(std::ostream& out, const FrustumGraph& g);
/// "id birth_time cap_id\n" per vertex; cap_id is "-" for seeds.
void write_vertex_meta(std::ostream& out, const FrustumGraph& g);
/// "cap_id time p1,p2,... y1,y2,...\n" per cap.
void write_caps(std::ostream& out, const FrustumGraph& g);

std::vector<std::pair<VertexId, VertexId>> read_edge_list(std::istream& in);
std::vector<VertexMeta> read_vertex_meta(std::istream& in);
std::vector<CapRecord> read_caps(std::istream& in);

/// File names used inside a run directory.
inline constexpr const char* kEdgesFile = "edges.txt";
inline constexpr const char* kVerticesFile = "vertices.txt";
inline constexpr const char* kCapsFile = "caps.txt";
inline constexpr const char* kModelFile = "model.txt";

void save_graph(const std::filesystem::path& dir, const FrustumGraph& g);
/// Reads edges + vertex metadata, and caps when the file is present.
FrustumGraph load_graph(const std::filesystem::path& dir);

}  // namespace frustum::io
