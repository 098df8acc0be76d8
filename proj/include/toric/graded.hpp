// Graded bookkeeping: finite windows of chain complexes, their homology,
// and Poincare series kept as exact rational functions.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactlin.hpp"

namespace toric {

class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Direction { homological, cohomological };

/// A contiguous slice [lowest, highest] of a graded complex.
///
/// link(i) is the differential between degrees lowest+i and lowest+i+1,
/// stored with columns indexed by its source basis and rows by its target
/// basis. For a homological window the source is the upper degree.
template <typename Label>
class ChainComplexWindow {
 public:
  ChainComplexWindow(Direction direction, int lowest,
                     std::vector<std::vector<Label>> bases,
                     std::vector<SparseMatrix> links)
      : direction_(direction),
        lowest_(lowest),
        bases_(std::move(bases)),
        links_(std::move(links)) {
    if (bases_.empty()) throw WindowError("window has no degrees");
    if (links_.size() + 1 != bases_.size()) {
      throw WindowError("window needs one differential between each pair of degrees");
    }
    for (std::size_t i = 0; i < links_.size(); ++i) {
      std::size_t lower = bases_[i].size();
      std::size_t upper = bases_[i + 1].size();
      std::size_t want_rows = direction_ == Direction::homological ? lower : upper;
      std::size_t want_cols = direction_ == Direction::homological ? upper : lower;
      if (links_[i].rows() != want_rows || links_[i].cols() != want_cols) {
        throw WindowError("differential shape does not match adjacent bases");
      }
    }
  }

  Direction direction() const { return direction_; }
  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(bases_.size()) - 1; }
  bool in_window(int k) const { return k >= lowest_ && k <= highest(); }
  bool is_interior(int k) const { return k > lowest_ && k < highest(); }

  const std::vector<Label>& basis(int k) const { return bases_.at(index(k)); }

  /// Differential leaving degree k; k and its target must both be in the window.
  const SparseMatrix& out_of(int k) const {
    return direction_ == Direction::homological ? links_.at(index(k) - 1)
                                                : links_.at(index(k));
  }

  /// Differential arriving in degree k.
  const SparseMatrix& into(int k) const {
    return direction_ == Direction::homological ? links_.at(index(k))
                                                : links_.at(index(k) - 1);
  }

  /// Number of nonzero entries over all composites of consecutive differentials.
  std::size_t d_squared_nonzeros() const {
    std::size_t bad = 0;
    for (std::size_t i = 0; i + 1 < links_.size(); ++i) {
      SparseMatrix composite = direction_ == Direction::homological
                                   ? links_[i] * links_[i + 1]
                                   : links_[i + 1] * links_[i];
      bad += composite.nonzeros();
    }
    return bad;
  }

  std::vector<SparseMatrix>& mutable_links() { return links_; }

 private:
  std::size_t index(int k) const {
    if (!in_window(k)) throw WindowError("degree outside window");
    return static_cast<std::size_t>(k - lowest_);
  }

  Direction direction_;
  int lowest_;
  std::vector<std::vector<Label>> bases_;
  std::vector<SparseMatrix> links_;
};

template <typename Label>
std::size_t homology_dim(const ChainComplexWindow<Label>& w, int k) {
  if (!w.is_interior(k)) {
    throw WindowError("degree " + std::to_string(k) + " is not interior to the window");
  }
  return w.basis(k).size() - rank(w.out_of(k)) - rank(w.into(k));
}

/// Homology dimension at every interior degree.
template <typename Label>
std::map<int, std::size_t> homology_dims(const ChainComplexWindow<Label>& w) {
  if (w.highest() - w.lowest() < 2) {
    throw WindowError("window too narrow: no interior degree");
  }
  std::map<int, std::size_t> out;
  for (int k = w.lowest() + 1; k < w.highest(); ++k) out[k] = homology_dim(w, k);
  return out;
}

/// Cycles at degree k spanning a complement of the boundaries.
///
/// Each representative is reduced modulo the boundary space, so the result
/// depends only on the window and the basis order.
template <typename Label>
std::vector<SparseVector> homology_representatives(const ChainComplexWindow<Label>& w,
                                                   int k) {
  if (!w.is_interior(k)) {
    throw WindowError("degree " + std::to_string(k) + " is not interior to the window");
  }
  const std::size_t dim = w.basis(k).size();
  SparseMatrix boundary_rows = w.into(k).transpose();
  Echelon boundaries = detail::echelon_of_rows(detail::rows_of(boundary_rows), dim);
  Echelon span = boundaries;
  std::vector<SparseVector> reps;
  for (auto& z : kernel_basis(w.out_of(k))) {
    if (span.insert(z)) reps.push_back(boundaries.reduce(std::move(z)));
  }
  return reps;
}

template <typename Label>
using LinearCombination = std::map<Label, BigRational>;

/// Builds a window from per-degree bases and a differential given on basis
/// elements. Every term d produces must lie in the adjacent basis.
template <typename Label, typename Differential>
ChainComplexWindow<Label> assemble_window(Direction direction, int lowest,
                                          std::vector<std::vector<Label>> bases,
                                          Differential d) {
  std::vector<SparseMatrix> links;
  for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
    const auto& source = direction == Direction::homological ? bases[i + 1] : bases[i];
    const auto& target = direction == Direction::homological ? bases[i] : bases[i + 1];
    std::map<Label, std::size_t> index;
    for (std::size_t r = 0; r < target.size(); ++r) index.emplace(target[r], r);
    SparseMatrix mat(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      for (const auto& [label, coeff] : d(source[c])) {
        auto it = index.find(label);
        if (it == index.end()) {
          throw std::logic_error("differential leaves the adjacent basis");
        }
        mat.add(it->second, c, coeff);
      }
    }
    links.push_back(std::move(mat));
  }
  return ChainComplexWindow<Label>(direction, lowest, std::move(bases), std::move(links));
}

// ---------------------------------------------------------------------------
// Integer polynomials and Poincare series

/// Dense integer polynomial; coefficient i multiplies t^i. Never has a zero
/// leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static Polynomial constant(const BigInt& x) { return Polynomial(std::vector<BigInt>{x}); }
  static Polynomial monomial(const BigInt& x, std::size_t power) {
    std::vector<BigInt> c(power + 1, 0);
    c[power] = x;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// p(-t)
  Polynomial negate_variable() const {
    std::vector<BigInt> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
  }

  /// p(t^k)
  Polynomial substitute_power(unsigned k) const {
    if (c_.empty()) return {};
    std::vector<BigInt> c((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const BigInt& x = c_[i];
      if (x == 0) continue;
      BigInt mag = abs(x);
      if (first) {
        if (x < 0) os << "-";
      } else {
        os << (x < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag.str();
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

namespace detail {

using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const Polynomial& p) {
  RatPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

// Remainder of a divided by b over Q.
inline RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

// Primitive integer multiple of p with positive leading coefficient.
inline Polynomial primitive_part(const RatPoly& p) {
  BigInt lcm_den = 1;
  for (const auto& c : p) {
    BigInt d = denominator(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> z;
  for (const auto& c : p) z.push_back(BigInt(numerator(c) * (lcm_den / denominator(c))));
  BigInt g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g == 0) return {};
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return Polynomial(std::move(z));
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

// Exact quotient a / b in Z[t]; throws if b does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  RatPoly num = to_rat(a);
  RatPoly den = to_rat(b);
  if (den.empty()) throw SeriesError("division by the zero polynomial");
  if (num.size() < den.size()) {
    if (num.empty()) return {};
    throw SeriesError("inexact polynomial division");
  }
  RatPoly q(num.size() - den.size() + 1, 0);
  while (num.size() >= den.size() && !num.empty()) {
    BigRational f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  if (!num.empty()) throw SeriesError("inexact polynomial division");
  std::vector<BigInt> out;
  for (const auto& c : q) {
    if (denominator(c) != 1) throw SeriesError("non-integral polynomial quotient");
    out.emplace_back(numerator(c));
  }
  return Polynomial(std::move(out));
}

}  // namespace detail

/// Rational function numerator / denominator with integer coefficients,
/// kept in lowest terms with denominator constant term +1.
class PoincareSeries {
 public:
  PoincareSeries() : num_(Polynomial{1}), den_(Polynomial{1}) {}
  PoincareSeries(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }
  explicit PoincareSeries(Polynomial numerator)
      : PoincareSeries(std::move(numerator), Polynomial{1}) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// S(-t)
  PoincareSeries negate_variable() const {
    return {num_.negate_variable(), den_.negate_variable()};
  }

  /// S(t^k)
  PoincareSeries substitute_power(unsigned k) const {
    return {num_.substitute_power(k), den_.substitute_power(k)};
  }

  friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  friend PoincareSeries operator/(const PoincareSeries& a, const PoincareSeries& b) {
    if (b.is_zero()) throw SeriesError("division by the zero series");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

  std::string to_string() const {
    if (den_ == Polynomial{1}) return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw SeriesError("zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial{1};
      return;
    }
    Polynomial g = detail::poly_gcd(num_, den_);
    num_ = detail::divide_exact(num_, g);
    den_ = detail::divide_exact(den_, g);
    BigInt c0 = den_.coeff(0);
    if (c0 != 1 && c0 != -1) {
      throw SeriesError("denominator constant term must be +1 or -1");
    }
    if (c0 == -1) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// Power-series coefficients c_0..c_n by long division.
inline std::vector<BigInt> series_expand(const Polynomial& num, const Polynomial& den,
                                         std::size_t n) {
  BigInt d0 = den.coeff(0);
  if (d0 == 0) throw SeriesError("denominator has zero constant term");
  if (d0 != 1 && d0 != -1) throw SeriesError("denominator constant term must be +1 or -1");
  std::vector<BigInt> c(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt acc = num.coeff(k);
    for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(std::max(den.degree(), 0));
         ++j) {
      acc -= den.coeff(j) * c[k - j];
    }
    c[k] = acc * d0;  // d0 is its own inverse
  }
  return c;
}

inline std::vector<BigInt> series_expand(const PoincareSeries& s, std::size_t n) {
  return series_expand(s.numerator(), s.denominator(), n);
}

inline PoincareSeries series_mul(const PoincareSeries& a, const PoincareSeries& b) {
  return a * b;
}

inline PoincareSeries series_div(const PoincareSeries& a, const PoincareSeries& b) {
  return a / b;
}

}  // namespace toric
