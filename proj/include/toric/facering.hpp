// Stanley-Reisner algebra Q[K] and its dual coalgebra Q<K>.
//
// Both share one basis: exponent vectors whose support is a face of K.
// In Q[K] the vector a stands for the monomial v^a, in Q<K> for the dual
// basis element v<a>.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "exactlin.hpp"
#include "graded.hpp"

namespace toric {

struct Monomial {
  std::vector<int> exponents;  // length m; entry i-1 is the exponent of v_i

  static Monomial unit(int m) { return {std::vector<int>(static_cast<std::size_t>(m), 0)}; }
  static Monomial vertex(int m, int v) {
    Monomial a = unit(m);
    a.exponents.at(static_cast<std::size_t>(v - 1)) = 1;
    return a;
  }

  int m() const { return static_cast<int>(exponents.size()); }

  int total() const {
    int s = 0;
    for (int e : exponents) s += e;
    return s;
  }

  bool is_unit() const { return total() == 0; }

  Face support() const {
    Face f;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] > 0) f.push_back(static_cast<int>(i) + 1);
    }
    return f;
  }

  /// Componentwise b <= *this.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] > other.exponents[i]) return false;
    }
    return true;
  }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial c = a;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] += b.exponents[i];
    return c;
  }

  friend Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial c = a;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] -= b.exponents[i];
    return c;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct GradingConvention {
  int vertex_degree = 1;  // 1 or 2

  int degree(const Monomial& a) const { return vertex_degree * a.total(); }
};

inline bool in_face_ring(const SimplicialComplex& k, const Monomial& a) {
  return a.m() == k.vertex_count() && k.contains(a.support());
}

namespace detail {

// Compositions of `total` into `parts` positive integers.
inline void compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// All monomials b <= bound, in increasing order.
inline std::vector<Monomial> divisors(const Monomial& bound) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::unit(bound.m());
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.exponents.size();
    while (i > 0 && cur.exponents[i - 1] == bound.exponents[i - 1]) {
      cur.exponents[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
    ++cur.exponents[i - 1];
  }
}

}  // namespace detail

/// Monomials of Q[K] with the given exponent sum, in decreasing
/// lexicographic order of exponent vectors (v_1^k first).
inline std::vector<Monomial> sr_basis(const SimplicialComplex& k, int total_exponent) {
  if (total_exponent < 0) throw std::invalid_argument("total exponent must be non-negative");
  const int m = k.vertex_count();
  std::vector<Monomial> out;
  for (const auto& sigma : k.faces()) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    detail::compositions(total_exponent, static_cast<int>(sigma.size()), cur, comps);
    for (const auto& c : comps) {
      Monomial a = Monomial::unit(m);
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        a.exponents[static_cast<std::size_t>(sigma[i] - 1)] = c[i];
      }
      out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

/// Coproduct of v<a>: every ordered split a = b + c with coefficient 1,
/// including (1, v<a>) and (v<a>, 1). Ordered by increasing b.
inline std::vector<std::pair<Monomial, Monomial>> sr_coproduct(const SimplicialComplex& k,
                                                               const Monomial& a) {
  if (!in_face_ring(k, a)) throw std::invalid_argument("sr_coproduct: support is not a face");
  std::vector<std::pair<Monomial, Monomial>> out;
  for (auto& b : detail::divisors(a)) out.emplace_back(b, a - b);
  return out;
}

/// Product v^a v^b in Q[K]: the sum monomial, or nothing when its support
/// is not a face.
inline std::optional<Monomial> sr_multiply(const SimplicialComplex& k, const Monomial& a,
                                           const Monomial& b) {
  Monomial c = a + b;
  if (!k.contains(c.support())) return std::nullopt;
  return c;
}

/// h(t) / (1-t)^n, with t replaced by t^2 under the degree-2 grading.
inline PoincareSeries sr_poincare_series(const SimplicialComplex& k,
                                         GradingConvention g = {}) {
  if (g.vertex_degree != 1 && g.vertex_degree != 2) {
    throw std::invalid_argument("vertex degree must be 1 or 2");
  }
  FHVectors fh = f_h_vectors(k);
  std::vector<BigInt> h;
  for (auto x : fh.h) h.emplace_back(x);
  Polynomial den = Polynomial{1, -1}.pow(static_cast<unsigned>(fh.n));
  PoincareSeries s(Polynomial(std::move(h)), den);
  return g.vertex_degree == 2 ? s.substitute_power(2) : s;
}

struct LsopQuotient {
  std::map<int, std::size_t> dims;  // keyed by exponent degree (cohomological degree / 2)
  bool finite = false;
  std::size_t total() const {
    std::size_t s = 0;
    for (const auto& [d, n] : dims) s += n;
    return s;
  }
};

/// Degreewise dimensions of Q[K]/(l_1..l_n), l_i = sum_j L[i][j] v_j.
///
/// Stops once the quotient has vanished for m consecutive degrees (finite)
/// or when `degree_cap` is reached (reported as infinite). A negative cap
/// selects dim K + m + 2, past which an lsop quotient is always zero.
inline LsopQuotient lsop_quotient(const SimplicialComplex& k,
                                  const std::vector<std::vector<long>>& lambda,
                                  int degree_cap = -1) {
  const int m = k.vertex_count();
  if (static_cast<int>(lambda.size()) > m) {
    throw std::invalid_argument("more linear forms than vertices");
  }
  for (const auto& row : lambda) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("linear form has wrong number of coefficients");
    }
  }
  if (degree_cap < 0) degree_cap = k.dimension() + m + 2;
  const int needed_zero_run = std::max(m, 1);

  LsopQuotient out;
  int zero_run = 0;
  std::vector<Monomial> prev;
  for (int deg = 0; deg <= degree_cap; ++deg) {
    std::vector<Monomial> basis = sr_basis(k, deg);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<SparseVector> relations;
    for (const auto& row : lambda) {
      for (const auto& b : prev) {
        std::map<std::size_t, BigRational> acc;
        for (int j = 1; j <= m; ++j) {
          long coeff = row[static_cast<std::size_t>(j - 1)];
          if (coeff == 0) continue;
          auto prod = sr_multiply(k, b, Monomial::vertex(m, j));
          if (!prod) continue;
          acc[index.at(*prod)] += coeff;
        }
        SparseVector v;
        for (auto& [c, x] : acc) {
          if (x != 0) v.emplace_back(c, x);
        }
        if (!v.empty()) relations.push_back(std::move(v));
      }
    }
    std::size_t dim = quotient_dimension(relations, basis.size());
    out.dims[deg] = dim;
    zero_run = dim == 0 ? zero_run + 1 : 0;
    if (zero_run >= needed_zero_run) {
      out.finite = true;
      return out;
    }
    prev = std::move(basis);
  }
  return out;
}

}  // namespace toric
