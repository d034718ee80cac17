#ifndef TOROIDAL_FORMS_HPP
#define TOROIDAL_FORMS_HPP

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toroidal/lattice.hpp"
#include "toroidal/series.hpp"

namespace toroidal {

// How many components of the toroidal divisor pass through the point.
enum class PointType { One = 1, Two = 2, Three = 3 };

inline int divisor_count(PointType t) { return (int)t; }

inline const char* point_name(PointType t) {
  switch (t) {
    case PointType::One: return "1-point";
    case PointType::Two: return "2-point";
    case PointType::Three: return "3-point";
  }
  return "?";
}

// Source-side local coordinates are always x, y, z; the first
// divisor_count(source) of them cut the divisor at the point.
inline const std::vector<std::string>& source_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

using Exps = std::vector<int>;  // length 3, nonnegative, over x,y,z

inline ExponentVector to_lattice(const Exps& e, std::size_t dim) {
  ExponentVector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(Int(e[i]));
  return v;
}

inline int total_of(const Exps& e) {
  int t = 0;
  for (int x : e) t += x;
  return t;
}

// ---- structured parameter expressions -------------------------------------

// monomial times an (optional) unit series
struct PureMonomial {
  Exps exps;
  std::optional<TruncatedSeries> unit;
};

// monomial times (alpha + var)
struct MonomialTimesTranslate {
  Exps exps;
  Rational alpha;
  int var;  // index into source_vars()
};

// g + monomial * (var + shift), or g + monomial when tail_var is absent
struct SeriesPlusMonomial {
  TruncatedSeries g;
  Exps tail;
  std::optional<int> tail_var;
  Rational tail_shift{0};
};

struct IndexedTerm {
  TruncatedSeries coeff;  // over the allowed free variables only
  Exps exps;              // monomial in divisor variables
};

// finite canonical expansion: sum of coeff_i * monomial_i plus a tail
// monomial, optionally times (var + shift), optionally times a unit
struct IndexedSum {
  std::vector<IndexedTerm> terms;
  Exps tail;
  std::optional<int> tail_var;
  Rational tail_shift{0};
  std::optional<TruncatedSeries> tail_unit;
};

struct FreeVariable {
  int var;
};

// unstructured input, to be normalized before classification
struct RawSeries {
  TruncatedSeries s;
};

using Expansion =
    std::variant<PureMonomial, MonomialTimesTranslate, SeriesPlusMonomial, IndexedSum, FreeVariable, RawSeries>;

struct LocalForm {
  PointType source = PointType::One;
  PointType target = PointType::One;
  int degree = 12;  // truncation degree for all coefficient series
  Expansion u{FreeVariable{0}};
  Expansion v{FreeVariable{1}};
  Expansion w{FreeVariable{2}};
  std::string provenance;

  const Expansion& slot(int i) const { return i == 0 ? u : i == 1 ? v : w; }
};

// ---- rendering -------------------------------------------------------------

inline TruncatedSeries render(const Expansion& e, int degree) {
  const auto& vars = source_vars();
  auto mono = [&](const Exps& x) {
    return TruncatedSeries::monomial(vars, degree, x, Rational(1));
  };
  if (const auto* p = std::get_if<PureMonomial>(&e)) {
    auto m = mono(p->exps);
    return p->unit ? m * *p->unit : m;
  }
  if (const auto* p = std::get_if<MonomialTimesTranslate>(&e)) {
    auto t = TruncatedSeries::variable(vars, degree, (std::size_t)p->var) +
             TruncatedSeries::constant(vars, degree, p->alpha);
    return mono(p->exps) * t;
  }
  if (const auto* p = std::get_if<SeriesPlusMonomial>(&e)) {
    auto r = p->g;
    auto tail = mono(p->tail);
    if (p->tail_var)
      tail = tail * (TruncatedSeries::variable(vars, degree, (std::size_t)*p->tail_var) +
                     TruncatedSeries::constant(vars, degree, p->tail_shift));
    return r + tail;
  }
  if (const auto* p = std::get_if<IndexedSum>(&e)) {
    TruncatedSeries r(vars, degree);
    for (const auto& t : p->terms) r += t.coeff * mono(t.exps);
    auto tail = mono(p->tail);
    if (p->tail_var)
      tail = tail * (TruncatedSeries::variable(vars, degree, (std::size_t)*p->tail_var) +
                     TruncatedSeries::constant(vars, degree, p->tail_shift));
    if (p->tail_unit) tail = tail * *p->tail_unit;
    return r + tail;
  }
  if (const auto* p = std::get_if<FreeVariable>(&e))
    return TruncatedSeries::variable(vars, degree, (std::size_t)p->var);
  return std::get<RawSeries>(e).s;
}

inline TruncatedSeries render_u(const LocalForm& f) { return render(f.u, f.degree); }
inline TruncatedSeries render_v(const LocalForm& f) { return render(f.v, f.degree); }
inline TruncatedSeries render_w(const LocalForm& f) { return render(f.w, f.degree); }

// ---- small structural helpers ----------------------------------------------

// The expression as monomial * unit, when it certifiably is one; exponents
// returned over all three source variables.
inline std::optional<Exps> as_monomial_times_unit(const Expansion& e, int degree) {
  if (const auto* p = std::get_if<PureMonomial>(&e)) {
    if (p->unit && !p->unit->is_unit()) return std::nullopt;
    return p->exps;
  }
  if (const auto* p = std::get_if<MonomialTimesTranslate>(&e)) {
    if (p->alpha != 0) return p->exps;  // alpha + var is a unit
    Exps r = p->exps;
    r[(std::size_t)p->var] += 1;
    return r;
  }
  if (const auto* p = std::get_if<FreeVariable>(&e)) {
    Exps r(3, 0);
    r[(std::size_t)p->var] = 1;
    return r;
  }
  // generic: factor the rendered series as min-exponent times a unit
  auto s = render(e, degree);
  if (s.is_zero()) return std::nullopt;
  Exps m = s.terms().begin()->first;
  for (const auto& [t, c] : s.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t[i]);
  if (s.terms().find(m) == s.terms().end()) return std::nullopt;  // quotient not a unit
  return m;
}

// strict monomial (trivial unit only)
inline std::optional<Exps> as_pure_monomial(const Expansion& e) {
  if (const auto* p = std::get_if<PureMonomial>(&e)) {
    if (p->unit) {
      if (!p->unit->is_unit()) return std::nullopt;
      auto c = p->unit->constant_term();
      TruncatedSeries cpy = *p->unit;
      if (!(cpy == TruncatedSeries::constant(cpy.vars(), cpy.degree(), c)) || c != 1)
        return std::nullopt;
    }
    return p->exps;
  }
  if (const auto* p = std::get_if<FreeVariable>(&e)) {
    Exps r(3, 0);
    r[(std::size_t)p->var] = 1;
    return r;
  }
  return std::nullopt;
}

struct Ray {
  std::array<int, 2> prim;  // primitive direction (a, b)
  int multiple;             // k with exps = k * prim
};

inline std::optional<Ray> as_ray_power(const Exps& e) {
  if (e[2] != 0) return std::nullopt;
  int a = e[0], b = e[1];
  if (a <= 0 && b <= 0) return std::nullopt;
  int g = std::gcd(a, b);
  if (g == 0) return std::nullopt;
  return Ray{{a / g, b / g}, g};
}

// exps = t * prim for integer t >= 0?
inline std::optional<int> ray_index(const std::array<int, 2>& prim, const Exps& e) {
  if (e[2] != 0) return std::nullopt;
  long pa = prim[0], pb = prim[1];
  long ea = e[0], eb = e[1];
  long t = -1;
  if (pa != 0) {
    if (ea % pa != 0) return std::nullopt;
    t = ea / pa;
  }
  if (pb != 0) {
    if (eb % pb != 0) return std::nullopt;
    long t2 = eb / pb;
    if (t >= 0 && t2 != t) return std::nullopt;
    t = t2;
  }
  if (pa == 0 && ea != 0) return std::nullopt;
  if (pb == 0 && eb != 0) return std::nullopt;
  if (t < 0) return std::nullopt;
  return (int)t;
}

}  // namespace toroidal

#endif
