// Shared helpers for the test suites.

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "toric/complex.hpp"
#include "toric/exactlin.hpp"

namespace toric::testing {

/// Random complex on m vertices: a few random facets of random size.
inline SimplicialComplex random_complex(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> facet_count(1, std::max(1, m));
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<Face> facets;
  const int n = facet_count(rng);
  for (int i = 0; i < n; ++i) {
    Face f;
    for (int v = 1; v <= m; ++v) {
      if (coin(rng) == 0) f.push_back(v);
    }
    facets.push_back(f);
  }
  // keep every vertex present most of the time
  for (int v = 1; v <= m; ++v) {
    if (coin(rng) != 0) facets.push_back({v});
  }
  return SimplicialComplex::from_facets(m, facets);
}

/// Every simplicial complex on exactly the vertex set {1..m} (no ghosts), one
/// per isomorphism class.
inline std::vector<SimplicialComplex> complexes_up_to_isomorphism(int m) {
  std::vector<Face> subsets;
  for (int mask = 1; mask < (1 << m); ++mask) {
    Face f;
    for (int v = 1; v <= m; ++v) {
      if (mask & (1 << (v - 1))) f.push_back(v);
    }
    if (f.size() >= 2) subsets.push_back(f);
  }
  std::sort(subsets.begin(), subsets.end(), FaceOrder{});

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto canonical = [&](const std::set<Face, FaceOrder>& faces) {
    std::set<Face, FaceOrder> best;
    bool first = true;
    for (const auto& p : perms) {
      std::set<Face, FaceOrder> image;
      for (const auto& f : faces) {
        Face g;
        for (int v : f) g.push_back(p[static_cast<std::size_t>(v - 1)]);
        std::sort(g.begin(), g.end());
        image.insert(g);
      }
      if (first || std::lexicographical_compare(image.begin(), image.end(), best.begin(),
                                                best.end(), FaceOrder{})) {
        best = image;
        first = false;
      }
    }
    return best;
  };

  std::set<std::vector<Face>> seen;
  std::vector<SimplicialComplex> out;
  // Downward-closed families of the subsets with >= 2 vertices.
  const std::size_t n = subsets.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::set<Face, FaceOrder> faces{{}};
    for (int v = 1; v <= m; ++v) faces.insert({v});
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) faces.insert(subsets[i]);
    }
    bool closed = true;
    for (const auto& f : faces) {
      for (std::size_t drop = 0; drop < f.size() && closed; ++drop) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        closed = faces.count(sub) > 0;
      }
      if (!closed) break;
    }
    if (!closed) continue;
    auto key = canonical(faces);
    std::vector<Face> flat(key.begin(), key.end());
    if (!seen.insert(flat).second) continue;
    out.push_back(SimplicialComplex::from_faces(m, faces));
  }
  return out;
}

/// Dense fraction-based rank, written independently of Echelon.
inline std::size_t dense_rank(std::vector<std::vector<BigRational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<BigRational>> to_dense(const SparseMatrix& m) {
  std::vector<std::vector<BigRational>> out(m.rows(), std::vector<BigRational>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) out[r][c] = v;
  }
  return out;
}

inline std::vector<std::size_t> dims_vector(const std::map<int, std::size_t>& m, int upto) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= upto; ++d) {
    auto it = m.find(d);
    out.push_back(it == m.end() ? 0 : it->second);
  }
  return out;
}

}  // namespace toric::testing
