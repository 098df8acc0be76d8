// Cohomology of moment-angle complexes through the Koszul complex
// (Lambda(U) (x) Q[K], d u_j = v_j) and its finite reduced quotient by the
// acyclic ideal (u_j v_j, v_j^2).
//
// Both models split over Z^m multidegrees, where u_j and v_j each count once
// toward vertex j; every homology computation below runs block by block.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "facering.hpp"
#include "graded.hpp"
#include "parallel.hpp"

namespace toric {

/// u_sigma (x) v^a in the full Koszul complex.
struct KoszulBasisElement {
  Face sigma;
  Monomial a;

  int degree() const { return static_cast<int>(sigma.size()) + 2 * a.total(); }

  /// (-|sigma|, 2 * (|a| + |sigma|))
  std::pair<int, int> bidegree() const {
    int s = static_cast<int>(sigma.size());
    return {-s, 2 * (a.total() + s)};
  }

  friend auto operator<=>(const KoszulBasisElement&, const KoszulBasisElement&) = default;
};

/// u_sigma (x) v_tau in the reduced model; sigma and tau are disjoint.
struct ReducedBasisElement {
  Face sigma;
  Face tau;

  int degree() const { return static_cast<int>(sigma.size() + 2 * tau.size()); }

  std::pair<int, int> bidegree() const {
    int s = static_cast<int>(sigma.size());
    return {-s, 2 * static_cast<int>(sigma.size() + tau.size())};
  }

  friend auto operator<=>(const ReducedBasisElement&, const ReducedBasisElement&) = default;
};

struct ZkBetti {
  std::map<int, std::size_t> total;                     // cohomological degree -> dim
  std::map<std::pair<int, int>, std::size_t> bigraded;  // (-|sigma|, 2|sigma u tau|) -> dim
};

namespace detail {

inline void check_vertex_set(const SimplicialComplex& k, const Face& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > k.vertex_count() || (i > 0 && s[i] <= s[i - 1])) {
      throw std::invalid_argument("exterior part must be an increasing list of vertex labels");
    }
  }
}

inline Face erase_at(const Face& s, std::size_t pos) {
  Face out = s;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

inline Face insert_sorted(const Face& s, int v) {
  Face out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline std::vector<Face> subsets_of(const Face& s) {
  std::vector<Face> out;
  const std::size_t n = s.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Face sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

inline Face complement_in(const Face& whole, const Face& part) {
  Face out;
  std::set_difference(whole.begin(), whole.end(), part.begin(), part.end(),
                      std::back_inserter(out));
  return out;
}

// All exponent vectors of length m with entry sum s.
inline void exponent_vectors(int m, int s, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(s);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = s; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(m, s - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Monomial> multidegrees_up_to(int m, int max_total) {
  std::vector<Monomial> out;
  if (m == 0) {
    out.push_back(Monomial{});
    return out;
  }
  for (int s = 0; s <= max_total; ++s) {
    std::vector<std::vector<int>> vecs;
    std::vector<int> cur;
    exponent_vectors(m, s, cur, vecs);
    for (auto& v : vecs) out.push_back(Monomial{std::move(v)});
  }
  return out;
}

// Homology of a finite cohomological complex whose degrees lie in [lo, hi],
// padded with empty degrees at both ends.
template <typename Label, typename Differential>
std::map<int, std::size_t> complete_cohomology(int lo, int hi,
                                               std::vector<std::vector<Label>> bases,
                                               Differential d) {
  bases.insert(bases.begin(), std::vector<Label>{});
  bases.push_back({});
  auto w = assemble_window(Direction::cohomological, lo - 1, std::move(bases), d);
  std::map<int, std::size_t> out;
  for (int k = lo; k <= hi; ++k) {
    std::size_t h = homology_dim(w, k);
    if (h) out[k] = h;
  }
  return out;
}

}  // namespace detail

/// d(u_sigma (x) v^a) = sum_{j in sigma} (-1)^{pos(j)} u_{sigma - j} (x) v_j v^a,
/// pos(j) = number of elements of sigma below j; terms leaving Q[K] vanish.
inline LinearCombination<KoszulBasisElement> koszul_differential(
    const SimplicialComplex& k, const KoszulBasisElement& e) {
  detail::check_vertex_set(k, e.sigma);
  if (!in_face_ring(k, e.a)) throw std::invalid_argument("polynomial part is not in Q[K]");
  LinearCombination<KoszulBasisElement> out;
  for (std::size_t p = 0; p < e.sigma.size(); ++p) {
    const int j = e.sigma[p];
    auto prod = sr_multiply(k, e.a, Monomial::vertex(k.vertex_count(), j));
    if (!prod) continue;
    out[{detail::erase_at(e.sigma, p), *prod}] += (p % 2 == 0) ? 1 : -1;
  }
  return out;
}

/// Same formula with u_j v_j = v_j^2 = 0.
inline LinearCombination<ReducedBasisElement> reduced_differential(
    const SimplicialComplex& k, const ReducedBasisElement& e) {
  detail::check_vertex_set(k, e.sigma);
  if (!k.contains(e.tau)) throw std::invalid_argument("tau is not a face");
  for (int v : e.sigma) {
    if (std::binary_search(e.tau.begin(), e.tau.end(), v)) {
      throw std::invalid_argument("sigma and tau must be disjoint");
    }
  }
  LinearCombination<ReducedBasisElement> out;
  for (std::size_t p = 0; p < e.sigma.size(); ++p) {
    Face bigger = detail::insert_sorted(e.tau, e.sigma[p]);
    if (!k.contains(bigger)) continue;
    out[{detail::erase_at(e.sigma, p), std::move(bigger)}] += (p % 2 == 0) ? 1 : -1;
  }
  return out;
}

/// The whole reduced model as one cohomological window, padded with an empty
/// degree at each end.
inline ChainComplexWindow<ReducedBasisElement> reduced_koszul_window(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  const int top = m + k.dimension() + 1;
  std::vector<std::vector<ReducedBasisElement>> bases(static_cast<std::size_t>(top + 3));
  Face all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  for (const auto& tau : k.faces()) {
    for (auto& sigma : detail::subsets_of(detail::complement_in(all, tau))) {
      ReducedBasisElement e{std::move(sigma), tau};
      bases[static_cast<std::size_t>(e.degree() + 1)].push_back(std::move(e));
    }
  }
  for (auto& b : bases) std::sort(b.begin(), b.end());
  return assemble_window(Direction::cohomological, -1, std::move(bases),
                         [&](const ReducedBasisElement& e) { return reduced_differential(k, e); });
}

/// The full model in degrees 0..max_degree, padded below with an empty degree.
inline ChainComplexWindow<KoszulBasisElement> full_koszul_window(const SimplicialComplex& k,
                                                                 int max_degree) {
  const int m = k.vertex_count();
  std::vector<std::vector<KoszulBasisElement>> bases(static_cast<std::size_t>(max_degree + 2));
  Face all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  for (int s = 0; 2 * s <= max_degree; ++s) {
    for (auto& a : sr_basis(k, s)) {
      for (auto& sigma : detail::subsets_of(all)) {
        KoszulBasisElement e{std::move(sigma), a};
        if (e.degree() <= max_degree) {
          bases[static_cast<std::size_t>(e.degree() + 1)].push_back(std::move(e));
        }
      }
    }
  }
  for (auto& b : bases) std::sort(b.begin(), b.end());
  return assemble_window(Direction::cohomological, -1, std::move(bases),
                         [&](const KoszulBasisElement& e) { return koszul_differential(k, e); });
}

/// Betti numbers of Z_K from the reduced model, split over the subsets
/// W = sigma u tau of the vertex set.
inline ZkBetti zk_betti(const SimplicialComplex& k, unsigned threads = 1) {
  const int m = k.vertex_count();
  Face all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  const auto blocks = detail::subsets_of(all);

  auto block_homology = [&](std::size_t i) {
    const Face& w = blocks[i];
    const int size = static_cast<int>(w.size());
    std::vector<std::vector<ReducedBasisElement>> bases(static_cast<std::size_t>(size + 1));
    for (auto& tau : detail::subsets_of(w)) {
      if (!k.contains(tau)) continue;
      ReducedBasisElement e{detail::complement_in(w, tau), std::move(tau)};
      bases[e.tau.size()].push_back(std::move(e));
    }
    for (auto& b : bases) std::sort(b.begin(), b.end());
    // Degree |W| + |tau|; index the block by |tau| in 0..|W|.
    auto local = detail::complete_cohomology(
        0, size, std::move(bases), [&](const ReducedBasisElement& e) {
          return reduced_differential(k, e);
        });
    return local;
  };
  auto per_block = parallel_map(blocks.size(), threads, block_homology);

  ZkBetti out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int size = static_cast<int>(blocks[i].size());
    for (const auto& [tau_size, dim] : per_block[i]) {
      out.total[size + tau_size] += dim;
      out.bigraded[{-(size - tau_size), 2 * size}] += dim;
    }
  }
  return out;
}

/// Betti numbers in degrees <= max_degree from the full model, summed over
/// every multidegree b with |b| <= max_degree (each block is a finite complex
/// living in degrees |b|..2|b|).
inline std::map<int, std::size_t> zk_betti_via_full_model(const SimplicialComplex& k,
                                                          int max_degree,
                                                          unsigned threads = 1) {
  if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  const int m = k.vertex_count();
  const auto blocks = detail::multidegrees_up_to(m, max_degree);

  auto block_homology = [&](std::size_t i) {
    const Monomial& b = blocks[i];
    const int s = b.total();
    std::vector<std::vector<KoszulBasisElement>> bases(static_cast<std::size_t>(s + 1));
    for (auto& sigma : detail::subsets_of(b.support())) {
      Monomial a = b;
      for (int v : sigma) --a.exponents[static_cast<std::size_t>(v - 1)];
      if (!k.contains(a.support())) continue;
      KoszulBasisElement e{std::move(sigma), std::move(a)};
      bases[static_cast<std::size_t>(e.degree() - s)].push_back(std::move(e));
    }
    for (auto& v : bases) std::sort(v.begin(), v.end());
    auto local = detail::complete_cohomology(
        0, s, std::move(bases),
        [&](const KoszulBasisElement& e) { return koszul_differential(k, e); });
    std::map<int, std::size_t> shifted;
    for (const auto& [d, dim] : local) shifted[d + s] = dim;
    return shifted;
  };
  auto per_block = parallel_map(blocks.size(), threads, block_homology);

  std::map<int, std::size_t> out;
  for (const auto& block : per_block) {
    for (const auto& [d, dim] : block) {
      if (d <= max_degree) out[d] += dim;
    }
  }
  return out;
}

}  // namespace toric
