#ifndef TOROIDAL_NORMALIZE_HPP
#define TOROIDAL_NORMALIZE_HPP

#include <map>

#include "toroidal/classify.hpp"

namespace toroidal {

namespace normalize_detail {

// w over a 1-point source: sum_{i<c} alpha_i(pair var) x^i + x^c (z + beta),
// where z is the completion of the given free variable.
inline IndexedSum power_shape(const TruncatedSeries& w, int pair_var, int zvar, int degree) {
  int c = -1;
  for (const auto& [e, coeff] : w.terms())
    if (e[(std::size_t)zvar] > 0 && (c < 0 || e[0] < c)) c = e[0];
  if (c < 0) {
    if (!w.exact())
      fail(ErrorCode::Indeterminate, "truncation too small to isolate the completion part");
    fail(ErrorCode::MalformedInput, "expansion has no completion variable");
  }
  Exps lead(3, 0);
  lead[0] = c;
  lead[(std::size_t)zvar] = 1;
  require(w.terms().count(lead) > 0, ErrorCode::MalformedInput,
          "completion variable does not enter linearly at the leading level");
  IndexedSum out;
  std::map<int, TruncatedSeries> by_power;
  Rational beta(0);
  for (const auto& [e, coeff] : w.terms()) {
    if (e[0] >= c) {
      Exps pure(3, 0);
      pure[0] = c;
      if (e == pure) beta = coeff;
      continue;  // absorbed into the translated variable
    }
    auto it = by_power.find(e[0]);
    if (it == by_power.end())
      it = by_power.emplace(e[0], TruncatedSeries(source_vars(), degree)).first;
    Exps ce(3, 0);
    ce[(std::size_t)pair_var] = e[(std::size_t)pair_var];
    it->second.add_term(ce, coeff);
  }
  for (auto& [i, s] : by_power) {
    if (s.is_zero()) continue;
    IndexedTerm t;
    t.coeff = s;
    t.exps = Exps{i, 0, 0};
    out.terms.push_back(t);
  }
  out.tail = Exps{c, 0, 0};
  out.tail_var = zvar;
  out.tail_shift = beta;
  require(c > 0 || beta == 0, ErrorCode::MalformedInput,
          "parameter with a nonzero value at the point");
  return out;
}

// w over a 2-point source with independent (u, v):
// sum alpha_ij x^i y^j + x^e y^f (z + beta), indexed terms not divisible by the tail.
inline IndexedSum grid_shape(const TruncatedSeries& w, int degree) {
  std::optional<Exps> tail;
  for (const auto& [e, coeff] : w.terms())
    if (e[2] > 0) {
      Exps xy{e[0], e[1], 0};
      if (!tail)
        tail = xy;
      else
        for (int i = 0; i < 2; ++i) (*tail)[i] = std::min((*tail)[i], xy[i]);
    }
  if (!tail) {
    if (!w.exact())
      fail(ErrorCode::Indeterminate, "truncation too small to isolate the completion part");
    fail(ErrorCode::MalformedInput, "expansion has no completion variable");
  }
  Exps lead = *tail;
  lead[2] = 1;
  require(w.terms().count(lead) > 0, ErrorCode::MalformedInput,
          "completion variable does not enter linearly at the leading level");
  for (const auto& [e, coeff] : w.terms())
    if (e[2] > 0)
      require(e[0] >= (*tail)[0] && e[1] >= (*tail)[1], ErrorCode::MalformedInput,
              "completion support has incomparable minima");
  IndexedSum out;
  Rational beta(0);
  for (const auto& [e, coeff] : w.terms()) {
    if (e[2] > 0) continue;
    if (e[0] >= (*tail)[0] && e[1] >= (*tail)[1]) {
      if (e[0] == (*tail)[0] && e[1] == (*tail)[1]) beta = coeff;
      continue;  // absorbed
    }
    IndexedTerm t;
    t.coeff = TruncatedSeries::constant(source_vars(), degree, coeff);
    t.exps = e;
    out.terms.push_back(t);
  }
  out.tail = *tail;
  out.tail_var = 2;
  out.tail_shift = beta;
  require(total_of(*tail) > 0 || beta == 0, ErrorCode::MalformedInput,
          "parameter with a nonzero value at the point");
  return out;
}

// w over a 2-point source along a ray: sum alpha_i(cvar) (x^a y^b)^i + x^c y^d,
// the off-ray part collapsing to one monomial times a recorded unit.
inline IndexedSum ray_shape(const TruncatedSeries& w, const std::array<int, 2>& prim, int cvar,
                            int degree) {
  std::vector<Exps> offray;
  for (const auto& [e, coeff] : w.terms()) {
    Exps xy{e[0], e[1], 0};
    if (!ray_index(prim, xy)) offray.push_back(e);
  }
  if (offray.empty()) {
    if (!w.exact())
      fail(ErrorCode::Indeterminate, "truncation too small to isolate the off-ray part");
    fail(ErrorCode::MalformedInput, "expansion has no off-ray monomial");
  }
  // the tail is an off-ray term dividing every off-ray term with on-ray quotient
  std::optional<Exps> tail;
  for (const auto& t : offray) {
    if (t[2] != 0) continue;
    bool ok = true;
    for (const auto& s : offray) {
      Exps diff{s[0] - t[0], s[1] - t[1], 0};
      if (diff[0] < 0 || diff[1] < 0 || !ray_index(prim, diff)) ok = false;
    }
    if (ok) {
      require(!tail, ErrorCode::MalformedInput, "ambiguous off-ray tail");
      tail = t;
    }
  }
  require(tail.has_value(), ErrorCode::MalformedInput, "off-ray part is not monomial times unit");
  IndexedSum out;
  out.tail = *tail;
  TruncatedSeries unit(source_vars(), degree);
  std::map<int, TruncatedSeries> by_index;
  for (const auto& [e, coeff] : w.terms()) {
    Exps xy{e[0], e[1], 0};
    auto idx = ray_index(prim, xy);
    if (idx) {
      // on-ray terms divisible by the tail join its unit, keeping the side
      // condition "tail does not divide any indexed monomial"
      if (e[0] >= (*tail)[0] && e[1] >= (*tail)[1]) {
        Exps q{e[0] - (*tail)[0], e[1] - (*tail)[1], e[2]};
        unit.add_term(q, coeff);
        continue;
      }
      auto it = by_index.find(*idx);
      if (it == by_index.end())
        it = by_index.emplace(*idx, TruncatedSeries(source_vars(), degree)).first;
      Exps ce(3, 0);
      ce[(std::size_t)cvar] = e[(std::size_t)cvar];
      require(e[(std::size_t)cvar] == e[2] || cvar == 2, ErrorCode::MalformedInput,
              "ray coefficient outside its variable");
      it->second.add_term(ce, coeff);
    } else {
      Exps q{e[0] - (*tail)[0], e[1] - (*tail)[1], e[2]};
      unit.add_term(q, coeff);
    }
  }
  for (auto& [i, s] : by_index) {
    if (s.is_zero()) continue;
    IndexedTerm t;
    t.coeff = s;
    t.exps = Exps{i * prim[0], i * prim[1], 0};
    out.terms.push_back(t);
  }
  require(unit.is_unit(), ErrorCode::MalformedInput, "off-ray part is not monomial times unit");
  if (!(unit == TruncatedSeries::constant(source_vars(), degree, Rational(1)))) out.tail_unit = unit;
  return out;
}

// w over a 3-point source: sum alpha_i M_i + N with rank(u,v,M_i)=2,
// rank(u,v,N)=3, everything else folding into N's unit.
inline IndexedSum rank2_shape(const TruncatedSeries& w, const Exps& ue, const Exps& ve,
                              int degree) {
  auto u = to_lattice(ue, 3);
  auto v = to_lattice(ve, 3);
  std::vector<Exps> rank3;
  for (const auto& [e, coeff] : w.terms())
    if (rank_of_monomials({u, v, to_lattice(e, 3)}) == 3) rank3.push_back(e);
  if (rank3.empty()) {
    if (!w.exact())
      fail(ErrorCode::Indeterminate, "truncation too small to isolate the transversal monomial");
    fail(ErrorCode::MalformedInput, "expansion has no transversal monomial");
  }
  std::optional<Exps> tail;
  for (const auto& t : rank3) {
    bool ok = true;
    for (const auto& s : rank3)
      if (s[0] < t[0] || s[1] < t[1] || s[2] < t[2]) ok = false;
    if (ok) {
      require(!tail, ErrorCode::MalformedInput, "ambiguous transversal monomial");
      tail = t;
    }
  }
  require(tail.has_value(), ErrorCode::MalformedInput,
          "transversal part is not monomial times unit");
  IndexedSum out;
  out.tail = *tail;
  TruncatedSeries unit(source_vars(), degree);
  for (const auto& [e, coeff] : w.terms()) {
    bool divisible = e[0] >= (*tail)[0] && e[1] >= (*tail)[1] && e[2] >= (*tail)[2];
    if (divisible) {
      unit.add_term(Exps{e[0] - (*tail)[0], e[1] - (*tail)[1], e[2] - (*tail)[2]}, coeff);
      continue;
    }
    require(rank_of_monomials({u, v, to_lattice(e, 3)}) == 2, ErrorCode::MalformedInput,
            "term neither dependent nor divisible by the transversal monomial");
    IndexedTerm t;
    t.coeff = TruncatedSeries::constant(source_vars(), degree, coeff);
    t.exps = e;
    out.terms.push_back(t);
  }
  require(unit.is_unit(), ErrorCode::MalformedInput,
          "transversal part is not monomial times unit");
  if (!(unit == TruncatedSeries::constant(source_vars(), degree, Rational(1)))) out.tail_unit = unit;
  return out;
}

inline Expansion collapse(IndexedSum sum) {
  if (!sum.terms.empty()) return sum;
  if (sum.tail_var) {
    if (total_of(sum.tail) == 0 && sum.tail_shift == 0 && !sum.tail_unit)
      return FreeVariable{*sum.tail_var};
    if (!sum.tail_unit) return MonomialTimesTranslate{sum.tail, sum.tail_shift, *sum.tail_var};
    return sum;
  }
  PureMonomial m;
  m.exps = sum.tail;
  m.unit = sum.tail_unit;
  return m;
}

}  // namespace normalize_detail

// Restructure w into the canonical expansion matching the toroidal pair (u, v).
inline LocalForm normalize_w(const LocalForm& f) {
  auto pm = classify_pair(f);
  require(pm.has_value(), ErrorCode::NotPrepared, "(u, v) is not a toroidal pair");
  auto w = render_w(f);
  LocalForm out = f;
  switch (pm->primary) {
    case PairCase::PowerTranslate:
    case PairCase::PowerFree: {
      int zvar = pm->pair_var == 1 ? 2 : 1;
      out.w = normalize_detail::collapse(
          normalize_detail::power_shape(w, pm->pair_var, zvar, f.degree));
      break;
    }
    case PairCase::Independent:
      out.w = normalize_detail::collapse(normalize_detail::grid_shape(w, f.degree));
      break;
    case PairCase::RayTranslate:
    case PairCase::RayFree:
      out.w = normalize_detail::collapse(
          normalize_detail::ray_shape(w, pm->prim, 2, f.degree));
      break;
    case PairCase::RankTwo:
      out.w = normalize_detail::collapse(
          normalize_detail::rank2_shape(w, pm->u_exps, pm->v_exps, f.degree));
      break;
  }
  return out;
}

// Restructure the middle parameter v when the expansion lives there
// (w is a free variable); used by the exchange charts.
inline LocalForm normalize_middle(const LocalForm& f) {
  const auto* wf = std::get_if<FreeVariable>(&f.w);
  require(wf != nullptr, ErrorCode::NotPrepared, "middle normalization needs a free w");
  auto ue = as_pure_monomial(f.u);
  require(ue.has_value(), ErrorCode::NotPrepared, "middle normalization needs monomial u");
  auto v = render_v(f);
  LocalForm out = f;
  if (f.source == PointType::One) {
    int zvar = wf->var == 1 ? 2 : 1;
    out.v =
        normalize_detail::collapse(normalize_detail::power_shape(v, wf->var, zvar, f.degree));
    return out;
  }
  if (f.source == PointType::Two) {
    auto ray = as_ray_power(*ue);
    require(ray.has_value(), ErrorCode::NotPrepared, "middle normalization needs a ray u");
    out.v = normalize_detail::collapse(
        normalize_detail::ray_shape(v, ray->prim, wf->var, f.degree));
    return out;
  }
  fail(ErrorCode::UnsupportedCase, "middle normalization at a 3-point");
}

}  // namespace toroidal

#endif
