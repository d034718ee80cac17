#ifndef TOROIDAL_ORACLE_HPP
#define TOROIDAL_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "toroidal/lattice.hpp"

namespace toroidal {

// Brute-force oracles, deliberately independent of the Hermite/Smith code
// paths in lattice.hpp: rational elimination plus plain enumeration.

namespace oracle_detail {

using SmallVec = std::vector<std::int64_t>;

inline SmallVec to_small(const ExponentVector& v) {
  SmallVec r;
  for (const auto& x : v) r.push_back((std::int64_t)x);
  return r;
}

// Solve sum t_i rows_i = target over Q by Gaussian elimination. Unique
// solution expected (rows independent); nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(const std::vector<SmallVec>& rows,
                                                           const SmallVec& target) {
  const std::size_t r = rows.size();
  const std::size_t d = target.size();
  // columns are unknowns t_i, one equation per coordinate
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(r + 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < r; ++i) m[j][i] = Rational(rows[i][j]);
    m[j][r] = Rational(target[j]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(r, d);
  for (std::size_t col = 0; col < r && row < d; ++col) {
    std::size_t pr = row;
    while (pr < d && m[pr][col] == 0) ++pr;
    if (pr == d) continue;
    std::swap(m[row], m[pr]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col] / m[row][col];
      for (std::size_t k = col; k <= r; ++k) m[i][k] -= factor * m[row][k];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<Rational> t(r, Rational(0));
  for (std::size_t col = 0; col < r; ++col) {
    if (pivot_of_col[col] == d) continue;
    t[col] = m[pivot_of_col[col]][r] / m[pivot_of_col[col]][col];
  }
  // verify (also rejects inconsistent systems and dependent-row surprises)
  for (std::size_t j = 0; j < d; ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < r; ++i) acc += t[i] * Rational(rows[i][j]);
    if (acc != Rational(target[j])) return std::nullopt;
  }
  return t;
}

inline std::size_t rational_rank(const std::vector<SmallVec>& rows, std::size_t d) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> mr;
    for (std::size_t j = 0; j < d; ++j) mr.push_back(Rational(r[j]));
    m.push_back(mr);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < m.size(); ++col) {
    std::size_t pr = rank;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[rank], m[pr]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rational factor = m[i][col] / m[rank][col];
      for (std::size_t k = col; k < d; ++k) m[i][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle_detail

// Coset count of A inside H. Requires the A generators to be Q-independent.
// Every H generator is written in rational A-coordinates; its class modulo
// Z^r is a point of the fundamental cube [0,1)^r, and the classes generate a
// finite group isomorphic to H/A. That group is enumerated by closure.
inline Int oracle_quotient(const std::vector<ExponentVector>& h_gens,
                           const std::vector<ExponentVector>& a_gens,
                           std::size_t max_order = 20000) {
  require(!h_gens.empty(), ErrorCode::BoxTooSmall, "empty H");
  const std::size_t dim = h_gens[0].size();
  std::vector<oracle_detail::SmallVec> hs, as;
  for (const auto& g : h_gens) {
    require(g.size() == dim, ErrorCode::MixedDimensions, "oracle H generator");
    hs.push_back(oracle_detail::to_small(g));
  }
  for (const auto& g : a_gens) {
    require(g.size() == dim, ErrorCode::MixedDimensions, "oracle A generator");
    as.push_back(oracle_detail::to_small(g));
  }
  require(oracle_detail::rational_rank(as, dim) == as.size(), ErrorCode::BoxTooSmall,
          "oracle needs independent A generators");

  auto frac = [](const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    Rational f = x - Rational(q);
    if (f < 0) f += 1;
    return f;
  };

  std::vector<std::vector<Rational>> images;
  for (const auto& h : hs) {
    auto t = oracle_detail::solve_rational(as, h);
    require(t.has_value(), ErrorCode::BoxTooSmall, "quotient is not finite");
    std::vector<Rational> im;
    for (const auto& ti : *t) im.push_back(frac(ti));
    images.push_back(im);
  }

  std::set<std::vector<Rational>> group;
  std::vector<std::vector<Rational>> frontier;
  std::vector<Rational> zero(as.size(), Rational(0));
  group.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    auto p = frontier.back();
    frontier.pop_back();
    for (const auto& im : images) {
      std::vector<Rational> q(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) q[j] = frac(p[j] + im[j]);
      if (group.insert(q).second) {
        require(group.size() <= max_order, ErrorCode::BoxTooSmall,
                "coset count exceeds enumeration budget");
        frontier.push_back(q);
      }
    }
  }
  return Int((std::uint64_t)group.size());
}

// Exhaustive membership search: is v an integer combination of gens with all
// coefficients in [-window, window]?
inline bool oracle_contains(const std::vector<ExponentVector>& gens, const ExponentVector& v,
                            int window = 20) {
  std::size_t dim = v.size();
  std::vector<oracle_detail::SmallVec> gs;
  for (const auto& g : gens) gs.push_back(oracle_detail::to_small(g));
  auto target = oracle_detail::to_small(v);
  if (gs.empty()) return is_zero(v);
  std::vector<int> coeff(gs.size(), -window);
  for (;;) {
    oracle_detail::SmallVec p(dim, 0);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) p[j] += coeff[i] * gs[i][j];
    if (p == target) return true;
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == window) coeff[k++] = -window;
    if (k == coeff.size()) break;
    ++coeff[k];
  }
  return false;
}

}  // namespace toroidal

#endif
