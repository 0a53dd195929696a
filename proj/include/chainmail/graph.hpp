#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainmail/error.hpp"
#include "chainmail/linalg.hpp"

namespace chainmail {

struct Vertex {
  std::string id;
  long long weight = 0;

  bool operator==(const Vertex&) const = default;
};

// Endpoints are vertex indices; after canonicalization id(u) <= id(v) and the
// edge list is sorted by (id(u), id(v), sign).
struct Edge {
  int u = 0;
  int v = 0;
  int sign = 1;

  bool operator==(const Edge&) const = default;
};

// Raw graph description prior to validation/canonicalization.
struct GraphData {
  struct RawEdge {
    std::string u, v;
    int sign = 1;
  };
  std::vector<Vertex> vertices;
  std::vector<RawEdge> edges;
  // Per-vertex cyclic lists of indices into `edges` (the order given above).
  std::optional<std::map<std::string, std::vector<int>>> rotation;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

ValidationReport validate(const GraphData& data);

// Weighted signed plane multigraph. Immutable once built; the edge multiset
// and rotation system are stored canonically, so equal graphs compare equal
// and serialize identically.
class ChainmailGraph {
public:
  ChainmailGraph() = default;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> index_of(const std::string& id) const;
  // Throws errc::bad_argument for unknown ids.
  int require_index(const std::string& id) const;

  bool has_rotation() const { return rotation_.has_value(); }
  // Indexed by vertex; entries are indices into edges().
  const std::vector<std::vector<int>>& rotation() const;

  bool operator==(const ChainmailGraph&) const = default;

private:
  friend ChainmailGraph build_graph(const GraphData&);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::vector<int>>> rotation_;
};

// Validates and canonicalizes; throws errc::invalid with the full violation
// report on failure.
ChainmailGraph build_graph(const GraphData& data);

// Convenience for edge lists given as (u, v, sign) id triples, no rotation.
ChainmailGraph make_graph(const std::vector<Vertex>& vertices,
                          const std::vector<GraphData::RawEdge>& edges);

// Subset of a host graph's vertices, kept as sorted indices.
class VertexSubset {
public:
  VertexSubset() = default;
  static VertexSubset of_indices(const ChainmailGraph& g, std::vector<int> indices);
  static VertexSubset of_ids(const ChainmailGraph& g, const std::vector<std::string>& ids);
  static VertexSubset of_bits(const BitVec& bits);

  const std::vector<int>& indices() const { return idx_; }
  int size() const { return static_cast<int>(idx_.size()); }
  bool contains(int v) const;
  std::vector<std::string> ids(const ChainmailGraph& g) const;
  // "{v1,v4}", members in declaration order.
  std::string to_text(const ChainmailGraph& g) const;

  bool operator==(const VertexSubset&) const = default;

private:
  std::vector<int> idx_;
};

// Sum of signs over all edges between the two (distinct) vertices.
long long signed_edge_count(const ChainmailGraph& g, int u, int v);
long long signed_edge_count(const ChainmailGraph& g, const std::string& u, const std::string& v);

// Symmetric matrix with weights on the diagonal and signed edge counts off it,
// rows/columns in vertex declaration order.
SymIntMatrix laplacian(const ChainmailGraph& g);

// Keeps the subset's vertices (declaration order), edges inside it, and the
// restriction of the rotation system.
ChainmailGraph induced_subgraph(const ChainmailGraph& g, const VertexSubset& s);

// Merges b into a: merged vertex keeps a's id and slot, weight
// w(a) + w(b) + 2 * signed_edge_count(a, b); a-b edges are deleted, all other
// edges keep their signs (no cancellation). The rotation system is dropped.
ChainmailGraph contract_vertices(const ChainmailGraph& g, const std::string& a,
                                 const std::string& b);

// JSON object with "vertices", "edges" and optional "rotation"; see README.
ChainmailGraph parse_graph(const std::string& text);

// Compact single-line JSON; byte-stable, and parse(serialize(g)) == g.
std::string serialize_graph(const ChainmailGraph& g);

}  // namespace chainmail
