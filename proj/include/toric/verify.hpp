// Cross-checks that every computation in the library is expected to satisfy.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cobar.hpp"
#include "complex.hpp"
#include "facering.hpp"
#include "koszul.hpp"

namespace toric {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_degree = 6;
  unsigned threads = 1;
  std::size_t word_cap = 200000;
  bool inject_fault = false;  // negative control: corrupt one cobar matrix entry
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

namespace detail {

// Adds 1 to an entry of the first differential of some composite so that its
// target column feeds a nonzero column of the second; the composite then
// picks up that column and cannot vanish.
template <typename Label>
bool corrupt_window(ChainComplexWindow<Label>& w) {
  auto& links = w.mutable_links();
  const bool homological = w.direction() == Direction::homological;
  for (std::size_t i = 0; i + 1 < links.size(); ++i) {
    SparseMatrix& first = homological ? links[i + 1] : links[i];
    const SparseMatrix& second = homological ? links[i] : links[i + 1];
    if (first.cols() == 0) continue;
    for (std::size_t r = 0; r < second.cols(); ++r) {
      if (!second.column(r).empty()) {
        first.add(r, 0, 1);
        return true;
      }
    }
  }
  return false;
}

inline std::string nonzeros_detail(std::size_t n) {
  return n == 0 ? "all composites zero" : std::to_string(n) + " nonzero entries in d^2";
}

inline std::string dims_text(const std::map<int, std::size_t>& dims) {
  std::string s;
  for (const auto& [d, n] : dims) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d) + ":" + std::to_string(n);
  }
  return s.empty() ? "-" : s;
}

}  // namespace detail

inline VerifyReport verify_complex(const SimplicialComplex& k, const VerifyOptions& opts = {}) {
  if (opts.max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const CobarOptions cobar_opts{opts.threads, opts.word_cap};

  auto reduced = reduced_koszul_window(k);
  {
    auto n = reduced.d_squared_nonzeros();
    add("koszul_reduced_d_squared", n == 0, detail::nonzeros_detail(n));
  }
  {
    auto n = full_koszul_window(k, opts.max_degree).d_squared_nonzeros();
    add("koszul_full_d_squared", n == 0, detail::nonzeros_detail(n));
  }
  {
    auto w = cobar_window(k, opts.max_degree, cobar_opts);
    bool corrupted = opts.inject_fault && detail::corrupt_window(w);
    auto n = w.d_squared_nonzeros();
    bool ok = n == 0 && !(opts.inject_fault && !corrupted);
    add("cobar_d_squared", ok,
        opts.inject_fault && !corrupted ? "fault injected" : detail::nonzeros_detail(n));
  }

  const auto betti = zk_betti(k, opts.threads).total;
  {
    auto full = zk_betti_via_full_model(k, opts.max_degree, opts.threads);
    std::map<int, std::size_t> shared;
    for (const auto& [d, n] : betti) {
      if (d <= opts.max_degree && n) shared[d] = n;
    }
    add("koszul_reduced_vs_full", full == shared,
        "reduced " + detail::dims_text(shared) + " / full " + detail::dims_text(full));
  }
  {
    long chains = 0, homology = 0;
    for (int d = 0; d < reduced.highest(); ++d) {
      long n = static_cast<long>(reduced.basis(d).size());
      chains += d % 2 == 0 ? n : -n;
    }
    for (const auto& [d, n] : betti) homology += d % 2 == 0 ? long(n) : -long(n);
    add("euler_characteristic", chains == homology,
        "chains " + std::to_string(chains) + ", homology " + std::to_string(homology));
  }

  {
    bool ok = true;
    std::size_t tested = 0;
    for (int d = 0; d <= 3 && ok; ++d) {
      for (const auto& a : sr_basis(k, d)) {
        std::multiset<std::tuple<Monomial, Monomial, Monomial>> left, right;
        for (const auto& [x, y] : sr_coproduct(k, a)) {
          for (const auto& [x1, x2] : sr_coproduct(k, x)) left.insert({x1, x2, y});
          for (const auto& [y1, y2] : sr_coproduct(k, y)) right.insert({x, y1, y2});
        }
        ++tested;
        if (left != right) {
          ok = false;
          break;
        }
      }
    }
    add("coproduct_coassociative", ok, std::to_string(tested) + " basis monomials");
  }
  {
    auto series = series_expand(sr_poincare_series(k), static_cast<std::size_t>(opts.max_degree));
    bool ok = true;
    for (int d = 0; d <= opts.max_degree; ++d) {
      ok = ok && series[static_cast<std::size_t>(d)] == BigInt(sr_basis(k, d).size());
    }
    add("face_ring_basis_vs_series", ok, "degrees 0.." + std::to_string(opts.max_degree));
  }

  const bool flag = is_flag(k);
  if (flag) {
    add("froberg_identity", froberg_check(k, 10), "through t^10");
  }
  {
    auto loop = loop_homology(k, opts.max_degree, cobar_opts);
    auto gp = graph_product_dims(k, opts.max_degree);
    std::optional<std::pair<int, std::size_t>> div;
    for (int d = 0; d <= opts.max_degree && !div; ++d) {
      if (loop.at(d) > gp.at(d)) div = std::make_pair(d, loop.at(d) - gp.at(d));
    }
    if (flag) {
      add("flag_divergence_consistency", loop == gp,
          loop == gp ? "loop homology equals graph product" : "loop homology differs");
    } else {
      std::size_t r = 0;
      for (const auto& f : missing_faces(k)) {
        if (f.size() >= 3 && (r == 0 || f.size() < r)) r = f.size();
      }
      const int expected = 2 * static_cast<int>(r) - 2;
      bool ok = expected <= opts.max_degree ? (div && div->first == expected) : !div;
      std::string got = div ? "degree " + std::to_string(div->first) : "none";
      add("flag_divergence_consistency", ok,
          "expected degree " + std::to_string(expected) + ", found " + got);
    }
  }
  return report;
}

}  // namespace toric
