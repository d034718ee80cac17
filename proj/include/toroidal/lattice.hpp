#ifndef TOROIDAL_LATTICE_HPP
#define TOROIDAL_LATTICE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal {

// Exponent vector of a Laurent monomial, written additively.
using ExponentVector = std::vector<Int>;

inline ExponentVector ev(std::initializer_list<long> entries) {
  ExponentVector v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

inline ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  require(a.size() == b.size(), ErrorCode::MixedDimensions, "vector add");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVector sub(const ExponentVector& a, const ExponentVector& b) {
  require(a.size() == b.size(), ErrorCode::MixedDimensions, "vector sub");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// componentwise a <= b
inline bool leq_componentwise(const ExponentVector& a, const ExponentVector& b) {
  require(a.size() == b.size(), ErrorCode::MixedDimensions, "componentwise compare");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// divisibility of monomials: x^a | x^b  <=>  a <= b componentwise
inline bool divides_monomial(const ExponentVector& a, const ExponentVector& b) {
  return leq_componentwise(a, b);
}

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline void check_same_dimension(const std::vector<ExponentVector>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    require(rows[i].size() == rows[0].size(), ErrorCode::MixedDimensions, "generator list");
}

}  // namespace detail

// Triangular (Hermite-style) basis of the subgroup generated by `gens`:
// pivot columns strictly increase, pivots are positive, entries above a pivot
// lie in [0, pivot). Empty list encodes the zero subgroup.
inline std::vector<ExponentVector> canonical_basis(std::vector<ExponentVector> rows) {
  if (rows.empty()) return rows;
  detail::check_same_dimension(rows);
  const std::size_t n = rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    // Euclid on the entries of this column below `top`
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best == rows.size()) break;  // column is zero below top
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[top][col];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) {
        if (rows[top][col] < 0)
          for (std::size_t j = 0; j < n; ++j) rows[top][j] = -rows[top][j];
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < top; ++i) {
          Int q = detail::floor_div(rows[i][col], rows[top][col]);
          if (q != 0)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[top][j];
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

// Coordinates of v in a canonical (triangular) basis, when v lies in the span.
inline std::optional<std::vector<Int>> coordinates_in_basis(const std::vector<ExponentVector>& basis,
                                                            ExponentVector v) {
  std::vector<Int> coords(basis.size(), Int(0));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::size_t pc = 0;
    while (pc < basis[r].size() && basis[r][pc] == 0) ++pc;
    if (v[pc] == 0) continue;
    if (v[pc] % basis[r][pc] != 0) return std::nullopt;
    Int q = v[pc] / basis[r][pc];
    coords[r] = q;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * basis[r][j];
  }
  if (!is_zero(v)) return std::nullopt;
  return coords;
}

class SubLattice {
 public:
  SubLattice(std::size_t dimension, std::vector<ExponentVector> generators)
      : dimension_(dimension), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      require(g.size() == dimension_, ErrorCode::MixedDimensions, "sublattice generator");
    basis_ = canonical_basis(generators_);
  }

  static SubLattice zero(std::size_t dimension) { return SubLattice(dimension, {}); }

  static SubLattice full(std::size_t dimension) {
    std::vector<ExponentVector> id;
    for (std::size_t i = 0; i < dimension; ++i) {
      ExponentVector e(dimension, Int(0));
      e[i] = 1;
      id.push_back(e);
    }
    return SubLattice(dimension, id);
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<ExponentVector>& basis() const { return basis_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  bool contains(const ExponentVector& v) const {
    require(v.size() == dimension_, ErrorCode::MixedDimensions, "membership test");
    return coordinates_in_basis(basis_, v).has_value();
  }

  bool contains(const SubLattice& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const ExponentVector& g) { return contains(g); });
  }

  bool operator==(const SubLattice& o) const { return dimension_ == o.dimension_ && basis_ == o.basis_; }

 private:
  std::size_t dimension_;
  std::vector<ExponentVector> generators_;
  std::vector<ExponentVector> basis_;
};

inline bool contains(const SubLattice& L, const ExponentVector& v) { return L.contains(v); }

struct QuotientReport {
  bool finite = false;
  std::vector<Int> elementary_divisors;  // nontrivial ones, d1 | d2 | ...
  Int order = 1;                         // product of divisors (valid when finite)
  std::size_t length = 0;                // Omega(order)     (valid when finite)
};

namespace detail {

// Smith elementary divisors of an integer matrix (no modular shortcuts).
inline std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m) {
  std::vector<Int> divisors;
  std::size_t r0 = 0, c0 = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  while (r0 < rows && c0 < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;  // rest of matrix is zero
    std::swap(m[r0], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = true;
    for (std::size_t i = r0 + 1; i < rows; ++i) {
      if (m[i][c0] == 0) continue;
      Int q = m[i][c0] / m[r0][c0];
      for (std::size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (std::size_t j = c0 + 1; j < cols; ++j) {
      if (m[r0][j] == 0) continue;
      Int q = m[r0][j] / m[r0][c0];
      for (std::size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the remaining block, else absorb an offending row
    bool ok = true;
    for (std::size_t i = r0 + 1; i < rows && ok; ++i)
      for (std::size_t j = c0 + 1; j < cols && ok; ++j)
        if (m[i][j] % m[r0][c0] != 0) {
          for (std::size_t k = c0; k < cols; ++k) m[r0][k] += m[i][k];
          ok = false;
        }
    if (!ok) continue;
    divisors.push_back(abs(m[r0][c0]));
    ++r0, ++c0;
  }
  return divisors;
}

}  // namespace detail

// Quotient H/A for A a subgroup of H, by diagonalizing the coordinate matrix
// of A's basis in a basis of H.
inline QuotientReport quotient(const SubLattice& H, const SubLattice& A) {
  require(H.dimension() == A.dimension(), ErrorCode::MixedDimensions, "quotient");
  std::vector<std::vector<Int>> coords;
  for (const auto& g : A.generators()) {
    auto c = coordinates_in_basis(H.basis(), g);
    require(c.has_value(), ErrorCode::NotASubgroup, "A generator outside H");
    coords.push_back(*c);
  }
  QuotientReport rep;
  if (A.rank() < H.rank()) {
    rep.finite = false;
    return rep;
  }
  rep.finite = true;
  auto divisors = detail::smith_divisors(std::move(coords));
  // rank(A) == rank(H) guarantees H.rank() nonzero divisors
  for (const auto& d : divisors) {
    if (d == 1) continue;
    rep.elementary_divisors.push_back(d);
    rep.order *= d;
  }
  rep.length = omega_with_multiplicity(rep.order);
  return rep;
}

inline std::size_t rank_of_monomials(const std::vector<ExponentVector>& ms) {
  if (ms.empty()) return 0;
  detail::check_same_dimension(ms);
  return canonical_basis(ms).size();
}

}  // namespace toroidal

#endif
