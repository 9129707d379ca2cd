#include "frustum/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "frustum/errors.hpp"

namespace frustum::io {
namespace {

std::uint64_t parse_u64(const std::string& tok, int lineno, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!tok.empty() && tok[0] != '-') v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) {
    throw InputError(std::string(what) + " line " + std::to_string(lineno) + ": bad number '" + tok + "'");
  }
  return v;
}

std::vector<VertexId> parse_id_list(const std::string& text, int lineno) {
  std::vector<VertexId> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<VertexId>(parse_u64(tok, lineno, "caps")));
  return out;
}

void write_id_list(std::ostream& out, const std::vector<VertexId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ',';
    out << ids[i];
  }
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read '" + p.string() + "'");
  return in;
}

}  // namespace

void write_edge_list(std::ostream& out, const FrustumGraph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_vertex_meta(std::ostream& out, const FrustumGraph& g) {
  for (const auto& m : g.vertex_meta()) {
    out << m.id << ' ' << m.birth_time << ' ';
    if (m.cap_id) {
      out << *m.cap_id;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

void write_caps(std::ostream& out, const FrustumGraph& g) {
  for (const auto& c : g.caps()) {
    out << c.cap_id << ' ' << c.time << ' ';
    write_id_list(out, c.parent_clique);
    out << ' ';
    write_id_list(out, c.new_vertices);
    out << '\n';
  }
}

std::vector<std::pair<VertexId, VertexId>> read_edge_list(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw InputError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    const auto u = parse_u64(a, lineno, "edge list");
    const auto v = parse_u64(b, lineno, "edge list");
    if (u >= v) throw InputError("edge list line " + std::to_string(lineno) + ": need u < v");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return edges;
}

std::vector<VertexMeta> read_vertex_meta(std::istream& in) {
  std::vector<VertexMeta> meta;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string id, birth, cap, extra;
    if (!(ls >> id >> birth >> cap) || (ls >> extra)) {
      throw InputError("vertex metadata line " + std::to_string(lineno) + ": expected 'id birth_time cap_id'");
    }
    VertexMeta m;
    m.id = static_cast<VertexId>(parse_u64(id, lineno, "vertex metadata"));
    m.birth_time = static_cast<std::int64_t>(parse_u64(birth, lineno, "vertex metadata"));
    if (cap != "-") m.cap_id = parse_u64(cap, lineno, "vertex metadata");
    meta.push_back(m);
  }
  return meta;
}

std::vector<CapRecord> read_caps(std::istream& in) {
  std::vector<CapRecord> caps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string id, time, parents, news, extra;
    if (!(ls >> id >> time >> parents >> news) || (ls >> extra)) {
      throw InputError("caps line " + std::to_string(lineno) + ": expected 'cap_id time parents new'");
    }
    CapRecord c;
    c.cap_id = parse_u64(id, lineno, "caps");
    c.time = static_cast<std::int64_t>(parse_u64(time, lineno, "caps"));
    c.parent_clique = parse_id_list(parents, lineno);
    c.new_vertices = parse_id_list(news, lineno);
    caps.push_back(std::move(c));
  }
  return caps;
}

void save_graph(const std::filesystem::path& dir, const FrustumGraph& g) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_out(dir / kEdgesFile);
    write_edge_list(out, g);
  }
  {
    auto out = open_out(dir / kVerticesFile);
    write_vertex_meta(out, g);
  }
  {
    auto out = open_out(dir / kCapsFile);
    write_caps(out, g);
  }
}

FrustumGraph load_graph(const std::filesystem::path& dir) {
  auto meta_in = open_in(dir / kVerticesFile);
  auto meta = read_vertex_meta(meta_in);
  auto edges_in = open_in(dir / kEdgesFile);
  const auto edges = read_edge_list(edges_in);
  std::vector<CapRecord> caps;
  if (std::filesystem::exists(dir / kCapsFile)) {
    auto caps_in = open_in(dir / kCapsFile);
    caps = read_caps(caps_in);
  }
  std::vector<std::vector<VertexId>> adj(meta.size());
  for (auto [u, v] : edges) {
    if (v >= meta.size()) throw InputError("edge endpoint " + std::to_string(v) + " has no metadata");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return FrustumGraph::from_parts(std::move(adj), std::move(meta), std::move(caps));
}

}  // namespace frustum::io
