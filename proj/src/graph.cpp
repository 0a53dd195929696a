#include "chainmail/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace chainmail {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::string ValidationReport::to_text() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].kind << ": " << violations[i].detail;
  }
  return out.str();
}

ValidationReport validate(const GraphData& data) {
  ValidationReport rep;
  auto add = [&rep](const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  };

  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < data.vertices.size(); ++i) {
    const auto& v = data.vertices[i];
    if (!valid_id(v.id)) {
      add("bad-vertex-id", "vertex #" + std::to_string(i) +
                               " id must be non-empty over [A-Za-z0-9_.-], got \"" + v.id + "\"");
      continue;
    }
    if (!index.emplace(v.id, static_cast<int>(i)).second)
      add("duplicate-vertex-id", "\"" + v.id + "\"");
  }

  for (size_t i = 0; i < data.edges.size(); ++i) {
    const auto& e = data.edges[i];
    std::string where = "edge #" + std::to_string(i);
    if (!index.count(e.u)) add("unknown-endpoint", where + " references \"" + e.u + "\"");
    if (!index.count(e.v)) add("unknown-endpoint", where + " references \"" + e.v + "\"");
    if (e.u == e.v) add("self-loop", where + " at \"" + e.u + "\"");
    if (e.sign != 1 && e.sign != -1)
      add("bad-sign", where + " sign must be 1 or -1, got " + std::to_string(e.sign));
  }

  if (data.rotation) {
    for (const auto& [id, order] : *data.rotation) {
      if (!index.count(id)) {
        add("rotation-unknown-vertex", "\"" + id + "\"");
        continue;
      }
      std::vector<int> incident;
      for (size_t i = 0; i < data.edges.size(); ++i)
        if (data.edges[i].u == id || data.edges[i].v == id) incident.push_back(static_cast<int>(i));
      std::vector<int> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != incident)
        add("rotation-mismatch",
            "\"" + id + "\" must list each incident edge index exactly once");
    }
    for (const auto& v : data.vertices)
      if (index.count(v.id) && !data.rotation->count(v.id))
        add("rotation-missing-vertex", "\"" + v.id + "\"");
  }

  return rep;
}

std::optional<int> ChainmailGraph::index_of(const std::string& id) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

int ChainmailGraph::require_index(const std::string& id) const {
  auto i = index_of(id);
  if (!i) throw Error(errc::bad_argument, "unknown vertex id \"" + id + "\"");
  return *i;
}

const std::vector<std::vector<int>>& ChainmailGraph::rotation() const {
  if (!rotation_) throw Error(errc::bad_argument, "graph has no rotation system");
  return *rotation_;
}

ChainmailGraph build_graph(const GraphData& data) {
  ValidationReport rep = validate(data);
  if (!rep.ok()) throw Error(errc::invalid, "invalid graph: " + rep.to_text());

  ChainmailGraph g;
  g.vertices_ = data.vertices;
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < g.vertices_.size(); ++i) index[g.vertices_[i].id] = static_cast<int>(i);

  // Normalize endpoint order inside each edge, then sort the edge list by
  // (id(u), id(v), sign); the permutation is remembered for rotation remap.
  size_t m = data.edges.size();
  std::vector<Edge> raw(m);
  for (size_t i = 0; i < m; ++i) {
    const auto& e = data.edges[i];
    int ui = index[e.u], vi = index[e.v];
    if (data.vertices[vi].id < data.vertices[ui].id) std::swap(ui, vi);
    raw[i] = Edge{ui, vi, e.sign};
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    const Edge& a = raw[x];
    const Edge& b = raw[y];
    const std::string& au = g.vertices_[a.u].id;
    const std::string& av = g.vertices_[a.v].id;
    const std::string& bu = g.vertices_[b.u].id;
    const std::string& bv = g.vertices_[b.v].id;
    return std::tie(au, av, a.sign) < std::tie(bu, bv, b.sign);
  });
  std::vector<int> new_pos(m);
  g.edges_.resize(m);
  for (size_t k = 0; k < m; ++k) {
    g.edges_[k] = raw[perm[k]];
    new_pos[perm[k]] = static_cast<int>(k);
  }

  if (data.rotation) {
    std::vector<std::vector<int>> rot(g.vertices_.size());
    for (const auto& [id, order] : *data.rotation) {
      std::vector<int> remapped;
      remapped.reserve(order.size());
      for (int old : order) remapped.push_back(new_pos[old]);
      // Cyclic lists start at the smallest edge index.
      if (!remapped.empty()) {
        auto mn = std::min_element(remapped.begin(), remapped.end());
        std::rotate(remapped.begin(), mn, remapped.end());
      }
      rot[index[id]] = std::move(remapped);
    }
    g.rotation_ = std::move(rot);
  }
  return g;
}

ChainmailGraph make_graph(const std::vector<Vertex>& vertices,
                          const std::vector<GraphData::RawEdge>& edges) {
  GraphData d;
  d.vertices = vertices;
  d.edges = edges;
  return build_graph(d);
}

VertexSubset VertexSubset::of_indices(const ChainmailGraph& g, std::vector<int> indices) {
  for (int i : indices)
    if (i < 0 || i >= g.vertex_count())
      throw Error(errc::bad_argument, "subset index out of range");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  VertexSubset s;
  s.idx_ = std::move(indices);
  return s;
}

VertexSubset VertexSubset::of_ids(const ChainmailGraph& g, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(g.require_index(id));
  return of_indices(g, std::move(idx));
}

VertexSubset VertexSubset::of_bits(const BitVec& bits) {
  VertexSubset s;
  s.idx_ = bits.ones();
  return s;
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(idx_.begin(), idx_.end(), v);
}

std::vector<std::string> VertexSubset::ids(const ChainmailGraph& g) const {
  std::vector<std::string> r;
  r.reserve(idx_.size());
  for (int i : idx_) r.push_back(g.vertex(i).id);
  return r;
}

std::string VertexSubset::to_text(const ChainmailGraph& g) const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (i) out << ",";
    out << g.vertex(idx_[i]).id;
  }
  out << "}";
  return out.str();
}

long long signed_edge_count(const ChainmailGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw Error(errc::bad_argument, "vertex index out of range");
  if (u == v) throw Error(errc::bad_argument, "signed_edge_count requires distinct vertices");
  long long s = 0;
  for (const auto& e : g.edges())
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) s += e.sign;
  return s;
}

long long signed_edge_count(const ChainmailGraph& g, const std::string& u, const std::string& v) {
  return signed_edge_count(g, g.require_index(u), g.require_index(v));
}

SymIntMatrix laplacian(const ChainmailGraph& g) {
  SymIntMatrix m(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) m.set(i, i, to_mpz(g.vertex(i).weight));
  for (const auto& e : g.edges()) m.add(e.u, e.v, mpz_class(e.sign));
  return m;
}

ChainmailGraph induced_subgraph(const ChainmailGraph& g, const VertexSubset& s) {
  GraphData d;
  for (int i : s.indices()) d.vertices.push_back(g.vertex(i));

  std::vector<int> kept_edges;
  for (size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    if (s.contains(e.u) && s.contains(e.v)) {
      d.edges.push_back({g.vertex(e.u).id, g.vertex(e.v).id, e.sign});
      kept_edges.push_back(static_cast<int>(k));
    }
  }

  if (g.has_rotation()) {
    std::vector<int> new_idx(g.edges().size(), -1);
    for (size_t k = 0; k < kept_edges.size(); ++k) new_idx[kept_edges[k]] = static_cast<int>(k);
    std::map<std::string, std::vector<int>> rot;
    for (int i : s.indices()) {
      std::vector<int> order;
      for (int old : g.rotation()[i])
        if (new_idx[old] >= 0) order.push_back(new_idx[old]);
      rot[g.vertex(i).id] = std::move(order);
    }
    d.rotation = std::move(rot);
  }
  return build_graph(d);
}

ChainmailGraph contract_vertices(const ChainmailGraph& g, const std::string& a,
                                 const std::string& b) {
  int ia = g.require_index(a);
  int ib = g.require_index(b);
  if (ia == ib) throw Error(errc::bad_argument, "cannot contract a vertex with itself");

  long long mu = signed_edge_count(g, ia, ib);
  __int128 w = static_cast<__int128>(g.vertex(ia).weight) + g.vertex(ib).weight +
               2 * static_cast<__int128>(mu);
  if (w > INT64_MAX || w < INT64_MIN) throw Error(errc::invalid, "merged weight overflows");

  GraphData d;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == ib) continue;
    Vertex v = g.vertex(i);
    if (i == ia) v.weight = static_cast<long long>(w);
    d.vertices.push_back(std::move(v));
  }
  for (const auto& e : g.edges()) {
    bool ab = (e.u == ia && e.v == ib) || (e.u == ib && e.v == ia);
    if (ab) continue;
    auto remap = [&](int x) { return x == ib ? a : g.vertex(x).id; };
    d.edges.push_back({remap(e.u), remap(e.v), e.sign});
  }
  return build_graph(d);
}

}  // namespace chainmail
