// Finite simplicial complexes on the vertex labels 1..m.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// A face is a strictly increasing list of vertex labels.
using Face = std::vector<int>;

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orders faces by size, then lexicographically.
struct FaceOrder {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct FHVectors {
  int n = 0;                    // dim K + 1
  std::vector<std::int64_t> f;  // f[i] = f_{i-1}, i = 0..n
  std::vector<std::int64_t> h;  // h_0..h_n
};

/// Immutable downward-closed family of faces, always containing the empty
/// face. Labels in 1..m that lie in no face are ghost vertices.
class SimplicialComplex {
 public:
  SimplicialComplex() { faces_.insert(Face{}); facets_.push_back(Face{}); }

  static SimplicialComplex from_facets(int m, std::vector<Face> facets) {
    if (m < 0) throw ComplexError("vertex count must be non-negative");
    SimplicialComplex k;
    k.m_ = m;
    k.faces_.clear();
    for (auto& facet : facets) {
      std::sort(facet.begin(), facet.end());
      if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
        throw ComplexError("facet lists a vertex twice");
      }
      for (int v : facet) {
        if (v < 1 || v > m) {
          throw ComplexError("vertex label " + std::to_string(v) +
                             " outside 1.." + std::to_string(m));
        }
      }
      k.add_closure(facet);
    }
    k.faces_.insert(Face{});
    k.rebuild_facets();
    return k;
  }

  static SimplicialComplex from_faces(int m, const std::set<Face, FaceOrder>& faces) {
    std::vector<Face> list(faces.begin(), faces.end());
    return from_facets(m, std::move(list));
  }

  /// The full simplex on n vertices (dimension n-1).
  static SimplicialComplex simplex(int n) {
    Face all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    return from_facets(n, {all});
  }

  /// The boundary of the simplex on n vertices.
  static SimplicialComplex simplex_boundary(int n) {
    std::vector<Face> facets;
    for (int skip = 1; skip <= n; ++skip) {
      Face f;
      for (int v = 1; v <= n; ++v) {
        if (v != skip) f.push_back(v);
      }
      facets.push_back(f);
    }
    return from_facets(n, facets);
  }

  static SimplicialComplex discrete(int m) {
    std::vector<Face> facets;
    for (int v = 1; v <= m; ++v) facets.push_back({v});
    return from_facets(m, facets);
  }

  /// Boundary of the m-gon.
  static SimplicialComplex polygon(int m) {
    std::vector<Face> facets;
    for (int v = 1; v <= m; ++v) facets.push_back({v, v % m + 1});
    return from_facets(m, facets);
  }

  /// Path 1 - 2 - ... - m.
  static SimplicialComplex path(int m) {
    std::vector<Face> facets;
    for (int v = 1; v < m; ++v) facets.push_back({v, v + 1});
    if (m == 1) facets.push_back({1});
    return from_facets(m, facets);
  }

  int vertex_count() const { return m_; }

  int dimension() const {
    return static_cast<int>(faces_.rbegin()->size()) - 1;
  }

  const std::vector<Face>& facets() const { return facets_; }

  const std::set<Face, FaceOrder>& faces() const { return faces_; }

  std::vector<Face> faces_of_dimension(int d) const {
    std::vector<Face> out;
    for (const auto& f : faces_) {
      if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
    }
    return out;
  }

  bool contains(const Face& f) const { return faces_.count(f) > 0; }

  bool has_edge(int i, int j) const {
    if (i == j) return false;
    return contains(i < j ? Face{i, j} : Face{j, i});
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (const auto& f : faces_of_dimension(0)) out.push_back(f.front());
    return out;
  }

  std::vector<int> ghost_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= m_; ++v) {
      if (!contains({v})) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  void add_closure(const Face& facet) {
    const std::size_t n = facet.size();
    if (n > 30) throw ComplexError("facet too large");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(facet[i]);
      }
      faces_.insert(std::move(sub));
    }
  }

  void rebuild_facets() {
    facets_.clear();
    for (auto it = faces_.rbegin(); it != faces_.rend(); ++it) {
      bool maximal = true;
      for (const auto& f : facets_) {
        if (std::includes(f.begin(), f.end(), it->begin(), it->end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets_.push_back(*it);
    }
    std::sort(facets_.begin(), facets_.end(), FaceOrder{});
  }

  int m_ = 0;
  std::set<Face, FaceOrder> faces_;
  std::vector<Face> facets_;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// f-vector, and the h-vector solved from
///   sum_i f_{i-1} t^i (1-t)^{n-i} = sum_i h_i t^i.
inline FHVectors f_h_vectors(const SimplicialComplex& k) {
  FHVectors out;
  out.n = k.dimension() + 1;
  out.f.assign(out.n + 1, 0);
  for (const auto& face : k.faces()) ++out.f[face.size()];
  out.h.assign(out.n + 1, 0);
  for (int j = 0; j <= out.n; ++j) {
    std::int64_t hj = 0;
    for (int i = 0; i <= j; ++i) {
      std::int64_t term = binomial(out.n - i, j - i) * out.f[i];
      hj += ((j - i) % 2 == 0) ? term : -term;
    }
    out.h[j] = hj;
  }
  return out;
}

/// Minimal non-faces with at least two vertices. Ghost vertices are the
/// one-vertex minimal non-faces and are reported by ghost_vertices().
inline std::vector<Face> missing_faces(const SimplicialComplex& k) {
  std::set<Face, FaceOrder> found;
  const auto verts = k.vertices();
  for (const auto& sigma : k.faces()) {
    if (sigma.empty()) continue;
    for (int v : verts) {
      if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
      Face cand = sigma;
      cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
      if (k.contains(cand)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
        Face sub = cand;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = k.contains(sub);
      }
      if (minimal) found.insert(cand);
    }
  }
  return {found.begin(), found.end()};
}

inline bool is_flag(const SimplicialComplex& k) {
  for (const auto& f : missing_faces(k)) {
    if (f.size() != 2) return false;
  }
  return true;
}

/// All faces with at most d+1 vertices.
inline SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
  if (d < 0) throw ComplexError("skeleton dimension must be non-negative");
  std::vector<Face> keep;
  for (const auto& f : k.faces()) {
    if (static_cast<int>(f.size()) <= d + 1) keep.push_back(f);
  }
  return SimplicialComplex::from_facets(k.vertex_count(), keep);
}

/// The flag complex of the 1-skeleton of K: every clique of the graph is a face.
inline SimplicialComplex flagification(const SimplicialComplex& k) {
  std::vector<Face> cliques{{}};
  std::vector<Face> frontier{{}};
  const auto verts = k.vertices();
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const auto& c : frontier) {
      for (int v : verts) {
        if (!c.empty() && v <= c.back()) continue;
        bool ok = true;
        for (int u : c) ok = ok && k.has_edge(u, v);
        if (!ok) continue;
        Face bigger = c;
        bigger.push_back(v);
        next.push_back(bigger);
      }
    }
    cliques.insert(cliques.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return SimplicialComplex::from_facets(k.vertex_count(), cliques);
}

/// Covering relations sigma < tau with |tau| = |sigma| + 1.
inline std::vector<std::pair<Face, Face>> face_poset(const SimplicialComplex& k) {
  std::vector<std::pair<Face, Face>> out;
  for (const auto& tau : k.faces()) {
    for (std::size_t drop = 0; drop < tau.size(); ++drop) {
      Face sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(drop));
      out.emplace_back(std::move(sigma), tau);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    FaceOrder lt;
    if (a.first != b.first) return lt(a.first, b.first);
    return lt(a.second, b.second);
  });
  return out;
}

}  // namespace toric
