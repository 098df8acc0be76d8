// Loop-space homology of DJ(K): the cobar construction on the Stanley-Reisner
// coalgebra Q<K>, the graph product of exterior algebras it is compared
// against, and the series identities available for flag complexes.
//
// A cobar generator chi_a has degree 2|a| - 1, so every letter is odd and a
// word of multidegree b with L letters sits in degree 2|b| - L. The
// differential adds one letter and preserves b, hence the complex splits into
// finite blocks, one per multidegree.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "facering.hpp"
#include "graded.hpp"
#include "koszul.hpp"
#include "parallel.hpp"

namespace toric {

struct CobarGenerator {
  Monomial a;

  int degree() const { return 2 * a.total() - 1; }

  friend auto operator<=>(const CobarGenerator&, const CobarGenerator&) = default;
};

struct TensorWord {
  std::vector<CobarGenerator> letters;

  int degree() const {
    int d = 0;
    for (const auto& g : letters) d += g.degree();
    return d;
  }

  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

struct CobarOptions {
  unsigned threads = 1;
  std::size_t word_cap = 200000;  // per homological degree
};

/// The basis of some degree would exceed the configured word cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(int degree, std::uint64_t words, std::size_t cap)
      : std::runtime_error("cobar basis in degree " + std::to_string(degree) + " has " +
                           std::to_string(words) + " words, over the cap of " +
                           std::to_string(cap)),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NotFlagError : public std::invalid_argument {
 public:
  NotFlagError() : std::invalid_argument("complex is not flag") {}
};

/// A series that should count dimensions produced a negative coefficient.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_generator(const SimplicialComplex& k, const CobarGenerator& g) {
  if (g.a.total() == 0 || !in_face_ring(k, g.a)) {
    throw std::invalid_argument("cobar letter must be a non-unit monomial supported on a face");
  }
}

// Nonzero monomials c <= b with face support: the letters usable inside block b.
inline std::vector<Monomial> letters_below(const SimplicialComplex& k, const Monomial& b) {
  std::vector<Monomial> out;
  for (auto& c : divisors(b)) {
    if (c.total() > 0 && k.contains(c.support())) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// d(chi_a) = sum over a = b + c, b, c nonzero, of chi_b chi_c, extended to
/// words by d(xy) = dx y + (-1)^{|x|} x dy.
inline LinearCombination<TensorWord> cobar_d(const SimplicialComplex& k, const TensorWord& w) {
  for (const auto& g : w.letters) detail::check_generator(k, g);
  LinearCombination<TensorWord> out;
  int sign = 1;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Monomial& a = w.letters[i].a;
    for (const auto& b : detail::divisors(a)) {
      if (b.total() == 0 || b == a) continue;
      TensorWord term;
      term.letters.reserve(w.letters.size() + 1);
      term.letters.insert(term.letters.end(), w.letters.begin(),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(i));
      term.letters.push_back({b});
      term.letters.push_back({a - b});
      term.letters.insert(term.letters.end(),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          w.letters.end());
      auto& slot = out[std::move(term)];
      slot += sign;
    }
    // every letter has odd degree
    sign = -sign;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

/// Words per homological degree 0..max_degree+1 over all blocks |b| <= max_degree.
inline std::map<int, std::uint64_t> cobar_word_counts(const SimplicialComplex& k,
                                                      int max_degree) {
  const int m = k.vertex_count();
  // count[b][L]: words of multidegree b with L letters, by recursion on the
  // first letter.
  std::map<Monomial, std::vector<std::uint64_t>> count;
  std::map<int, std::uint64_t> by_degree;
  for (auto& b : detail::multidegrees_up_to(m, max_degree)) {
    const int s = b.total();
    std::vector<std::uint64_t> row(static_cast<std::size_t>(s + 1), 0);
    if (s == 0) {
      row[0] = 1;
    } else {
      for (const auto& c : detail::letters_below(k, b)) {
        const auto& rest = count.at(b - c);
        for (std::size_t len = 0; len < rest.size(); ++len) row[len + 1] += rest[len];
      }
    }
    for (int len = 0; len <= s; ++len) {
      const int deg = 2 * s - len;
      if (deg <= max_degree + 1 && row[static_cast<std::size_t>(len)] > 0) {
        by_degree[deg] += row[static_cast<std::size_t>(len)];
      }
    }
    count.emplace(std::move(b), std::move(row));
  }
  return by_degree;
}

namespace detail {

inline void enforce_word_cap(const SimplicialComplex& k, int max_degree, std::size_t cap) {
  for (const auto& [deg, n] : cobar_word_counts(k, max_degree)) {
    if (n > cap) throw ResourceCapExceeded(deg, n, cap);
  }
}

}  // namespace detail

namespace detail {

// Words of one multidegree block, with letters replaced by their index in
// the sorted letter list; lexicographic order of index words then agrees with
// the order of TensorWord.
struct CobarBlock {
  using Word = std::vector<std::uint16_t>;

  struct WordHash {
    std::size_t operator()(const Word& w) const {
      std::size_t h = w.size();
      for (auto x : w) h = h * 1000003u ^ x;
      return h;
    }
  };

  std::vector<Monomial> letters;
  std::vector<std::vector<std::pair<std::uint16_t, std::uint16_t>>> splits;  // proper b + c
  std::map<std::size_t, std::vector<Word>> by_length;

  CobarBlock(const SimplicialComplex& k, const Monomial& b, std::size_t min_len,
             std::size_t max_len)
      : letters(letters_below(k, b)) {
    std::sort(letters.begin(), letters.end());
    std::map<Monomial, std::uint16_t> id;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      id.emplace(letters[i], static_cast<std::uint16_t>(i));
    }
    splits.resize(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (const auto& p : divisors(letters[i])) {
        if (p.total() == 0 || p == letters[i]) continue;
        splits[i].push_back({id.at(p), id.at(letters[i] - p)});
      }
    }
    for (std::size_t len = min_len; len <= max_len; ++len) by_length[len];
    std::vector<int> remaining = b.exponents;
    Word cur;
    enumerate(remaining, b.total(), min_len, max_len, cur);
    for (auto& [len, words] : by_length) std::sort(words.begin(), words.end());
  }

  TensorWord to_tensor(const Word& w) const {
    TensorWord t;
    t.letters.reserve(w.size());
    for (auto x : w) t.letters.push_back({letters[x]});
    return t;
  }

  // Matrix of d from words of length len to words of length len + 1.
  SparseMatrix differential(std::size_t len) const {
    const auto& source = by_length.at(len);
    const auto& target = by_length.at(len + 1);
    std::unordered_map<Word, std::size_t, WordHash> index;
    index.reserve(target.size());
    for (std::size_t r = 0; r < target.size(); ++r) index.emplace(target[r], r);
    SparseMatrix mat(target.size(), source.size());
    Word next;
    for (std::size_t c = 0; c < source.size(); ++c) {
      const Word& w = source[c];
      for (std::size_t i = 0; i < w.size(); ++i) {
        const BigRational sign(i % 2 == 0 ? 1 : -1);  // letters are odd
        for (const auto& [p, q] : splits[w[i]]) {
          next.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          next.push_back(p);
          next.push_back(q);
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
          mat.add(index.at(next), c, sign);
        }
      }
    }
    return mat;
  }

 private:
  void enumerate(std::vector<int>& remaining, int left, std::size_t min_len,
                 std::size_t max_len, Word& cur) {
    if (left == 0) {
      if (cur.size() >= min_len) by_length[cur.size()].push_back(cur);
      return;
    }
    if (cur.size() + 1 > max_len) return;
    if (cur.size() + static_cast<std::size_t>(left) < min_len) return;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto& e = letters[i].exponents;
      bool fits = true;
      for (std::size_t v = 0; v < e.size() && fits; ++v) fits = e[v] <= remaining[v];
      if (!fits) continue;
      for (std::size_t v = 0; v < e.size(); ++v) remaining[v] -= e[v];
      cur.push_back(static_cast<std::uint16_t>(i));
      enumerate(remaining, left - letters[i].total(), min_len, max_len, cur);
      cur.pop_back();
      for (std::size_t v = 0; v < e.size(); ++v) remaining[v] += e[v];
    }
  }
};

}  // namespace detail

/// Block of the cobar complex in multidegree b, degrees |b|-1 .. min(max_degree+1, 2|b|).
inline ChainComplexWindow<TensorWord> cobar_block_window(const SimplicialComplex& k,
                                                         const Monomial& b, int max_degree) {
  const int s = b.total();
  const int lo = s - 1;
  const int hi = std::max(std::min(max_degree + 1, 2 * s), s + 1);
  // degree = 2s - length
  auto length_of = [&](int deg) { return static_cast<std::size_t>(std::max(0, 2 * s - deg)); };
  detail::CobarBlock block(k, b, length_of(hi), length_of(lo));
  std::vector<std::vector<TensorWord>> bases;
  for (int deg = lo; deg <= hi; ++deg) {
    std::vector<TensorWord> basis;
    if (2 * s - deg >= 0) {
      for (const auto& w : block.by_length.at(length_of(deg))) basis.push_back(block.to_tensor(w));
    }
    bases.push_back(std::move(basis));
  }
  std::vector<SparseMatrix> links;
  for (int deg = lo; deg < hi; ++deg) {
    // homological link from deg + 1 down to deg
    if (2 * s - deg - 1 >= 0) {
      links.push_back(block.differential(length_of(deg + 1)));
    } else {
      links.emplace_back(bases[static_cast<std::size_t>(deg - lo)].size(),
                         bases[static_cast<std::size_t>(deg + 1 - lo)].size());
    }
  }
  return ChainComplexWindow<TensorWord>(Direction::homological, lo, std::move(bases),
                                        std::move(links));
}

/// The cobar complex in degrees -1..max_degree+1 as a single window.
inline ChainComplexWindow<TensorWord> cobar_window(const SimplicialComplex& k, int max_degree,
                                                   const CobarOptions& opts = {}) {
  detail::enforce_word_cap(k, max_degree, opts.word_cap);
  const int lo = -1, hi = max_degree + 1;
  std::vector<std::vector<TensorWord>> bases(static_cast<std::size_t>(hi - lo + 1));
  std::vector<ChainComplexWindow<TensorWord>> blocks;
  for (const auto& b : detail::multidegrees_up_to(k.vertex_count(), max_degree)) {
    bool ghost = false;
    for (int v : b.support()) ghost = ghost || !k.contains({v});
    if (ghost) continue;
    blocks.push_back(cobar_block_window(k, b, max_degree));
  }
  for (const auto& w : blocks) {
    for (int deg = std::max(lo, w.lowest()); deg <= std::min(hi, w.highest()); ++deg) {
      const auto& src = w.basis(deg);
      auto& dst = bases[static_cast<std::size_t>(deg - lo)];
      dst.insert(dst.end(), src.begin(), src.end());
    }
  }
  for (auto& v : bases) std::sort(v.begin(), v.end());
  auto position = [&](int deg, const TensorWord& t) {
    const auto& v = bases[static_cast<std::size_t>(deg - lo)];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), t) - v.begin());
  };
  std::vector<SparseMatrix> links;
  for (int deg = lo; deg < hi; ++deg) {
    links.emplace_back(bases[static_cast<std::size_t>(deg - lo)].size(),
                       bases[static_cast<std::size_t>(deg + 1 - lo)].size());
  }
  // Each block is a direct summand: copy its links with rows and columns renumbered.
  for (const auto& w : blocks) {
    for (int deg = std::max(lo, w.lowest()); deg < std::min(hi, w.highest()); ++deg) {
      const SparseMatrix& d = w.into(deg);
      const auto& rows = w.basis(deg);
      const auto& cols = w.basis(deg + 1);
      std::vector<std::size_t> col_pos(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) col_pos[c] = position(deg + 1, cols[c]);
      auto& link = links[static_cast<std::size_t>(deg - lo)];
      for (std::size_t r = 0; r < d.rows(); ++r) {
        const std::size_t gr = position(deg, rows[r]);
        for (const auto& [c, v] : d.row(r)) link.add(gr, col_pos[c], v);
      }
    }
  }
  return ChainComplexWindow<TensorWord>(Direction::homological, lo, std::move(bases),
                                        std::move(links));
}

/// dim H_k of the cobar construction for k = 0..max_degree.
inline std::map<int, std::size_t> loop_homology(const SimplicialComplex& k, int max_degree,
                                                const CobarOptions& opts = {}) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  detail::enforce_word_cap(k, max_degree, opts.word_cap);
  const auto blocks = detail::multidegrees_up_to(k.vertex_count(), max_degree);
  auto per_block = parallel_map(blocks.size(), opts.threads, [&](std::size_t i) {
    const Monomial& b = blocks[i];
    const int s = b.total();
    std::map<int, std::size_t> local;
    for (int v : b.support()) {
      if (!k.contains({v})) return local;  // no letter covers a ghost vertex
    }
    auto w = cobar_block_window(k, b, max_degree);
    for (int deg = s; deg <= std::min(max_degree, 2 * s - 1 + (s == 0 ? 1 : 0)); ++deg) {
      std::size_t h = homology_dim(w, deg);
      if (h) local[deg] = h;
    }
    return local;
  });
  std::map<int, std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out[d] = 0;
  for (const auto& block : per_block) {
    for (const auto& [d, dim] : block) out[d] += dim;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph product of exterior algebras: T(U)/(u_i^2, u_i u_j + u_j u_i for edges)

struct GraphProductWord {
  std::vector<int> letters;
  friend auto operator<=>(const GraphProductWord&, const GraphProductWord&) = default;
};

/// Lexicographically least rearrangement of `w` by swaps of adjacent letters
/// joined by an edge, with the sign (-1)^{number of swaps}. Empty when the
/// word vanishes, i.e. two equal letters are separated only by letters
/// commuting with them.
inline std::optional<std::pair<int, GraphProductWord>> graph_product_normalize(
    const SimplicialComplex& k, const GraphProductWord& w) {
  const auto& x = w.letters;
  for (int v : x) {
    if (!k.contains({v})) throw std::invalid_argument("letter is not a vertex of K");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] == x[i]) return std::nullopt;
      if (!k.has_edge(x[i], x[j])) break;
    }
  }
  std::vector<int> rest = x;
  GraphProductWord out;
  int sign = 1;
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q) movable = k.has_edge(rest[q], rest[p]);
      if (movable && rest[p] < rest[best]) best = p;
    }
    if (best % 2 == 1) sign = -sign;
    out.letters.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return std::make_pair(sign, out);
}

namespace detail {

// Whether appending `a` to a normal, nonzero word keeps it normal and nonzero.
inline bool extends_normal(const SimplicialComplex& k, const std::vector<int>& w, int a) {
  for (std::size_t i = w.size(); i-- > 0;) {
    const int y = w[i];
    if (y == a) return false;
    if (!k.has_edge(a, y)) return true;
    if (y > a) return false;
  }
  return true;
}

inline void count_normal_words(const SimplicialComplex& k, const std::vector<int>& verts,
                               std::vector<int>& w, int max_len,
                               std::vector<std::uint64_t>& counts) {
  ++counts[w.size()];
  if (static_cast<int>(w.size()) == max_len) return;
  for (int a : verts) {
    if (!extends_normal(k, w, a)) continue;
    w.push_back(a);
    count_normal_words(k, verts, w, max_len, counts);
    w.pop_back();
  }
}

}  // namespace detail

/// Normal-form word counts of the graph product in degrees 0..max_degree.
/// Only the 1-skeleton of K matters.
inline std::map<int, std::size_t> graph_product_dims(const SimplicialComplex& k,
                                                     int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_degree + 1), 0);
  std::vector<int> w;
  detail::count_normal_words(k, k.vertices(), w, max_degree, counts);
  std::map<int, std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out[d] = counts[static_cast<std::size_t>(d)];
  return out;
}

// ---------------------------------------------------------------------------
// Series for flag complexes

/// (1+t)^n / (1 - h_1 t + ... + (-1)^n h_n t^n).
inline PoincareSeries flag_loop_series(const SimplicialComplex& k) {
  if (!is_flag(k)) throw NotFlagError();
  FHVectors fh = f_h_vectors(k);
  std::vector<BigInt> den;
  for (std::size_t i = 0; i < fh.h.size(); ++i) {
    den.emplace_back(i % 2 == 0 ? fh.h[i] : -fh.h[i]);
  }
  return {Polynomial{1, 1}.pow(static_cast<unsigned>(fh.n)), Polynomial(std::move(den))};
}

/// F(Q[K]; -t) * F_flag(t) == 1 through t^n.
inline bool froberg_check(const SimplicialComplex& k, std::size_t n) {
  PoincareSeries product =
      series_mul(sr_poincare_series(k).negate_variable(), flag_loop_series(k));
  auto c = series_expand(product, n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i] != (i == 0 ? 1 : 0)) return false;
  }
  return true;
}

/// First degree <= max_degree where cobar homology is larger than the graph
/// product, with the difference.
inline std::optional<std::pair<int, std::size_t>> flag_divergence(
    const SimplicialComplex& k, int max_degree, const CobarOptions& opts = {}) {
  auto loop = loop_homology(k, max_degree, opts);
  auto gp = graph_product_dims(k, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    if (loop.at(d) > gp.at(d)) return std::make_pair(d, loop.at(d) - gp.at(d));
  }
  return std::nullopt;
}

/// Expansion of F_flag(t) / (1+t)^m through t^n; these are the Betti numbers
/// of the loop space of Z_K.
inline std::vector<BigInt> omega_zk_series(const SimplicialComplex& k, std::size_t n) {
  PoincareSeries torus(Polynomial{1, 1}.pow(static_cast<unsigned>(k.vertex_count())));
  auto c = series_expand(series_div(flag_loop_series(k), torus), n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) {
      throw InconsistencyError("negative coefficient at t^" + std::to_string(i) +
                               " in the loop series of Z_K");
    }
  }
  return c;
}

/// Truncated product prod_{k odd} (1+t^k)^{l_k} prod_{k even} (1-t^k)^{-l_k}.
inline std::vector<BigInt> pbw_series(const std::map<int, BigInt>& ranks, std::size_t n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (const auto& [deg, l] : ranks) {
    if (deg < 1 || l == 0) continue;
    const std::size_t d = static_cast<std::size_t>(deg);
    // factor coefficients at t^{d j}
    std::vector<BigInt> factor(n / d + 1, 0);
    factor[0] = 1;
    for (std::size_t j = 1; j < factor.size(); ++j) {
      // odd: C(l, j); even: C(l + j - 1, j)
      BigInt top = deg % 2 == 1 ? BigInt(l - BigInt(j - 1)) : BigInt(l + BigInt(j - 1));
      factor[j] = factor[j - 1] * top / BigInt(j);
    }
    std::vector<BigInt> q(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (p[i] == 0) continue;
      for (std::size_t j = 0; i + d * j <= n; ++j) q[i + d * j] += p[i] * factor[j];
    }
    p = std::move(q);
  }
  return p;
}

/// Inverts pbw_series degree by degree: the ranks l_1..l_n of the graded Lie
/// algebra of primitives.
inline std::map<int, BigInt> lie_ranks(const std::vector<BigInt>& coeffs, std::size_t n) {
  if (coeffs.size() <= n) throw std::invalid_argument("series shorter than truncation");
  if (coeffs[0] != 1) throw std::invalid_argument("series must start with 1");
  std::map<int, BigInt> ranks;
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt l = coeffs[k] - p[k];
    if (l < 0) {
      throw std::invalid_argument("negative rank in degree " + std::to_string(k) +
                                  ": series is not of PBW type");
    }
    ranks[static_cast<int>(k)] = l;
    p = pbw_series(ranks, n);
  }
  return ranks;
}

}  // namespace toric
