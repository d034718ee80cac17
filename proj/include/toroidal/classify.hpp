#ifndef TOROIDAL_CLASSIFY_HPP
#define TOROIDAL_CLASSIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "toroidal/forms.hpp"

namespace toroidal {

// ---- toroidal pairs (the six canonical (u,v) shapes) ------------------------

enum class PairCase {
  PowerTranslate = 1,  // u = x^a,          v = x^b (alpha + y)
  Independent,         // u = x^a y^b,      v = x^c y^d,  ad - bc != 0
  RayTranslate,        // u = (x^a y^b)^k,  v = (x^a y^b)^t (alpha + z)
  RankTwo,             // u, v monomials in x,y,z of rank 2
  PowerFree,           // u = x^a,          v = y          (1-point target)
  RayFree,             // u = (x^a y^b)^k,  v = z          (1-point target)
};

inline const char* pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::PowerTranslate: return "power-translate";
    case PairCase::Independent: return "independent-monomials";
    case PairCase::RayTranslate: return "ray-translate";
    case PairCase::RankTwo: return "rank-two-monomials";
    case PairCase::PowerFree: return "power-free";
    case PairCase::RayFree: return "ray-free";
  }
  return "?";
}

struct PairMatch {
  PairCase primary{};
  std::vector<PairCase> all;  // every matching case, in listing order
  Exps u_exps{0, 0, 0}, v_exps{0, 0, 0};
  std::array<int, 2> prim{0, 0};
  int k = 0, t = 0;
  Rational alpha{0};
  int pair_var = -1;  // translated variable, or the free variable of v
  Int det{0};
};

namespace classify_detail {

inline bool uses_only_vars(const TruncatedSeries& s, const std::set<int>& allowed) {
  for (const auto& [e, c] : s.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && !allowed.count((int)i)) return false;
  return true;
}

inline std::optional<PairMatch> match_power_translate(const LocalForm& f) {
  if (f.source != PointType::One || f.target == PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  const auto* vt = std::get_if<MonomialTimesTranslate>(&f.v);
  if (!ue || !vt) return std::nullopt;
  if ((*ue)[1] != 0 || (*ue)[2] != 0 || (*ue)[0] < 1) return std::nullopt;
  if (vt->exps[1] != 0 || vt->exps[2] != 0 || vt->exps[0] < 1) return std::nullopt;
  if (vt->alpha == 0 || (vt->var != 1 && vt->var != 2)) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::PowerTranslate;
  m.u_exps = *ue;
  m.v_exps = vt->exps;
  m.alpha = vt->alpha;
  m.pair_var = vt->var;
  return m;
}

inline std::optional<PairMatch> match_independent(const LocalForm& f) {
  if (f.source != PointType::Two || f.target == PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  auto ve = as_pure_monomial(f.v);
  if (!ue || !ve) return std::nullopt;
  if ((*ue)[2] != 0 || (*ve)[2] != 0) return std::nullopt;
  if ((*ue)[0] + (*ue)[1] < 1 || (*ve)[0] + (*ve)[1] < 1) return std::nullopt;
  Int det = Int((*ue)[0]) * (*ve)[1] - Int((*ue)[1]) * (*ve)[0];
  if (det == 0) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::Independent;
  m.u_exps = *ue;
  m.v_exps = *ve;
  m.det = det;
  return m;
}

inline std::optional<PairMatch> match_ray_translate(const LocalForm& f) {
  if (f.source != PointType::Two || f.target == PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  const auto* vt = std::get_if<MonomialTimesTranslate>(&f.v);
  if (!ue || !vt) return std::nullopt;
  auto ray = as_ray_power(*ue);
  if (!ray || ray->prim[0] < 1 || ray->prim[1] < 1 || ray->multiple < 1) return std::nullopt;
  if (vt->var != 2 || vt->alpha == 0) return std::nullopt;
  auto t = ray_index(ray->prim, vt->exps);
  if (!t || *t < 1) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::RayTranslate;
  m.u_exps = *ue;
  m.v_exps = vt->exps;
  m.prim = ray->prim;
  m.k = ray->multiple;
  m.t = *t;
  m.alpha = vt->alpha;
  m.pair_var = 2;
  return m;
}

inline std::optional<PairMatch> match_rank_two(const LocalForm& f) {
  if (f.source != PointType::Three || f.target == PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  auto ve = as_pure_monomial(f.v);
  if (!ue || !ve) return std::nullopt;
  if (total_of(*ue) < 1 || total_of(*ve) < 1) return std::nullopt;
  if (rank_of_monomials({to_lattice(*ue, 3), to_lattice(*ve, 3)}) != 2) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::RankTwo;
  m.u_exps = *ue;
  m.v_exps = *ve;
  return m;
}

inline std::optional<PairMatch> match_power_free(const LocalForm& f) {
  if (f.source != PointType::One || f.target != PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  const auto* vf = std::get_if<FreeVariable>(&f.v);
  if (!ue || !vf) return std::nullopt;
  if ((*ue)[1] != 0 || (*ue)[2] != 0 || (*ue)[0] < 1) return std::nullopt;
  if (vf->var != 1 && vf->var != 2) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::PowerFree;
  m.u_exps = *ue;
  m.pair_var = vf->var;
  return m;
}

inline std::optional<PairMatch> match_ray_free(const LocalForm& f) {
  if (f.source != PointType::Two || f.target != PointType::One) return std::nullopt;
  auto ue = as_pure_monomial(f.u);
  const auto* vf = std::get_if<FreeVariable>(&f.v);
  if (!ue || !vf || vf->var != 2) return std::nullopt;
  auto ray = as_ray_power(*ue);
  if (!ray || ray->prim[0] < 1 || ray->prim[1] < 1 || ray->multiple < 1) return std::nullopt;
  PairMatch m;
  m.primary = PairCase::RayFree;
  m.u_exps = *ue;
  m.prim = ray->prim;
  m.k = ray->multiple;
  m.pair_var = 2;
  return m;
}

}  // namespace classify_detail

// First matching case in listing order; records every matching case.
inline std::optional<PairMatch> classify_pair(const LocalForm& f) {
  using Fn = std::optional<PairMatch> (*)(const LocalForm&);
  static const std::pair<PairCase, Fn> table[] = {
      {PairCase::PowerTranslate, classify_detail::match_power_translate},
      {PairCase::Independent, classify_detail::match_independent},
      {PairCase::RayTranslate, classify_detail::match_ray_translate},
      {PairCase::RankTwo, classify_detail::match_rank_two},
      {PairCase::PowerFree, classify_detail::match_power_free},
      {PairCase::RayFree, classify_detail::match_ray_free},
  };
  std::optional<PairMatch> first;
  std::vector<PairCase> all;
  for (const auto& [c, fn] : table) {
    auto m = fn(f);
    if (m) {
      all.push_back(c);
      if (!first) first = m;
    }
  }
  if (!first) return std::nullopt;
  first->all = all;
  return first;
}

// ---- toroidal morphisms (the six full (u,v,w) shapes) -----------------------

enum class ToroidalCase {
  ThreeOverThree = 1,
  TwoOverThree,
  OneOverThree,
  TwoOverTwo,
  OneOverTwo,
  OneOverOne,
};

struct ToroidalMatch {
  ToroidalCase which{};
  Int det{0};
};

inline std::optional<ToroidalMatch> classify_toroidal(const LocalForm& f) {
  auto ue = as_pure_monomial(f.u);
  auto ve = as_pure_monomial(f.v);
  auto we = as_pure_monomial(f.w);
  const auto* vt = std::get_if<MonomialTimesTranslate>(&f.v);
  const auto* wt = std::get_if<MonomialTimesTranslate>(&f.w);
  const auto* vf = std::get_if<FreeVariable>(&f.v);
  const auto* wf = std::get_if<FreeVariable>(&f.w);

  auto det3 = [&](const Exps& a, const Exps& b, const Exps& c) {
    Int m[3][3];
    for (int j = 0; j < 3; ++j) m[0][j] = a[j], m[1][j] = b[j], m[2][j] = c[j];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  auto det2 = [](const Exps& a, const Exps& b) { return Int(a[0]) * b[1] - Int(a[1]) * b[0]; };

  if (f.source == PointType::Three && f.target == PointType::Three && ue && ve && we) {
    Int d = det3(*ue, *ve, *we);
    if (d != 0) return ToroidalMatch{ToroidalCase::ThreeOverThree, d};
    return std::nullopt;
  }
  if (f.source == PointType::Two && f.target == PointType::Three && ue && ve && wt) {
    if ((*ue)[2] == 0 && (*ve)[2] == 0 && wt->exps[2] == 0 && wt->var == 2 && wt->alpha != 0) {
      Int d = det2(*ue, *ve);
      if (d != 0) return ToroidalMatch{ToroidalCase::TwoOverThree, d};
    }
    return std::nullopt;
  }
  if (f.source == PointType::One && f.target == PointType::Three && ue && vt && wt) {
    bool pure_x = (*ue)[1] == 0 && (*ue)[2] == 0 && vt->exps[1] == 0 && vt->exps[2] == 0 &&
                  wt->exps[1] == 0 && wt->exps[2] == 0;
    if (pure_x && (*ue)[0] > 0 && vt->exps[0] > 0 && wt->exps[0] > 0 && vt->alpha != 0 &&
        wt->alpha != 0 && vt->var != wt->var && vt->var >= 1 && wt->var >= 1)
      return ToroidalMatch{ToroidalCase::OneOverThree};
    return std::nullopt;
  }
  if (f.source == PointType::Two && f.target == PointType::Two && ue && ve && wf) {
    if ((*ue)[2] == 0 && (*ve)[2] == 0 && wf->var == 2) {
      Int d = det2(*ue, *ve);
      if (d != 0) return ToroidalMatch{ToroidalCase::TwoOverTwo, d};
    }
    return std::nullopt;
  }
  if (f.source == PointType::One && f.target == PointType::Two && ue && vt && wf) {
    bool pure_x = (*ue)[1] == 0 && (*ue)[2] == 0 && vt->exps[1] == 0 && vt->exps[2] == 0;
    if (pure_x && (*ue)[0] > 0 && vt->exps[0] > 0 && vt->alpha != 0 && vt->var != wf->var &&
        vt->var >= 1 && wf->var >= 1)
      return ToroidalMatch{ToroidalCase::OneOverTwo};
    return std::nullopt;
  }
  if (f.source == PointType::One && f.target == PointType::One && ue && vf && wf) {
    if ((*ue)[1] == 0 && (*ue)[2] == 0 && (*ue)[0] > 0 && vf->var != wf->var && vf->var >= 1 &&
        wf->var >= 1)
      return ToroidalMatch{ToroidalCase::OneOverOne};
    return std::nullopt;
  }
  return std::nullopt;
}

// ---- monomial forms ----------------------------------------------------------

enum class MonomialFormCase {
  OverPowerTranslate = 1,
  OverIndependent,
  OverRayTranslate,
  OverRankTwo,
  OverPowerFree,
  OverRayFree,
};

struct MonomialFormMatch {
  MonomialFormCase which{};
  PairMatch pair;
  Int det{0};
};

inline std::optional<MonomialFormMatch> classify_monomial_form(const LocalForm& f) {
  auto pm = classify_pair(f);
  if (!pm) return std::nullopt;
  const auto* wt = std::get_if<MonomialTimesTranslate>(&f.w);
  auto we = as_pure_monomial(f.w);
  switch (pm->primary) {
    case PairCase::PowerTranslate: {
      if (f.target != PointType::Two || !wt) return std::nullopt;
      int other = pm->pair_var == 1 ? 2 : 1;
      if (wt->exps[1] == 0 && wt->exps[2] == 0 && wt->exps[0] > 0 && wt->var == other)
        return MonomialFormMatch{MonomialFormCase::OverPowerTranslate, *pm};
      return std::nullopt;
    }
    case PairCase::Independent: {
      if (f.target != PointType::Two || !wt) return std::nullopt;
      if (wt->exps[2] == 0 && wt->exps[0] + wt->exps[1] > 0 && wt->var == 2)
        return MonomialFormMatch{MonomialFormCase::OverIndependent, *pm};
      return std::nullopt;
    }
    case PairCase::RayTranslate: {
      if (!we || (*we)[2] != 0) return std::nullopt;
      Int d = Int(pm->prim[0]) * (*we)[1] - Int(pm->prim[1]) * (*we)[0];
      if (d != 0) return MonomialFormMatch{MonomialFormCase::OverRayTranslate, *pm, d};
      return std::nullopt;
    }
    case PairCase::RankTwo: {
      if (f.target != PointType::Two || !we) return std::nullopt;
      Int m[3][3];
      for (int j = 0; j < 3; ++j)
        m[0][j] = pm->u_exps[j], m[1][j] = pm->v_exps[j], m[2][j] = (*we)[j];
      Int d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      if (d != 0) return MonomialFormMatch{MonomialFormCase::OverRankTwo, *pm, d};
      return std::nullopt;
    }
    case PairCase::PowerFree: {
      if (!wt) return std::nullopt;
      int other = pm->pair_var == 1 ? 2 : 1;
      if (wt->exps[1] == 0 && wt->exps[2] == 0 && wt->exps[0] > 0 && wt->var == other)
        return MonomialFormMatch{MonomialFormCase::OverPowerFree, *pm};
      return std::nullopt;
    }
    case PairCase::RayFree: {
      if (!we || (*we)[2] != 0) return std::nullopt;
      Int d = Int(pm->prim[0]) * (*we)[1] - Int(pm->prim[1]) * (*we)[0];
      if (d != 0) return MonomialFormMatch{MonomialFormCase::OverRayFree, *pm, d};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- canonical expansion extraction -----------------------------------------

// one-variable indexed expansion: sum_i coeff_i(free var) x^i + x^c (var + shift)
struct PowerExpansion {
  std::vector<std::pair<int, TruncatedSeries>> terms;  // sorted by index
  int c = 0;
  std::optional<int> tail_var;
  Rational shift{0};
};

inline std::optional<PowerExpansion> as_power_expansion(const Expansion& e, int degree,
                                                        int coeff_var) {
  PowerExpansion r;
  if (const auto* p = std::get_if<IndexedSum>(&e)) {
    for (const auto& t : p->terms) {
      if (t.exps[1] != 0 || t.exps[2] != 0) return std::nullopt;
      if (!classify_detail::uses_only_vars(t.coeff, {coeff_var})) return std::nullopt;
      if (t.coeff.is_zero()) continue;
      r.terms.emplace_back(t.exps[0], t.coeff);
    }
    if (p->tail[1] != 0 || p->tail[2] != 0 || p->tail_unit) return std::nullopt;
    r.c = p->tail[0];
    r.tail_var = p->tail_var;
    r.shift = p->tail_shift;
  } else if (const auto* p = std::get_if<SeriesPlusMonomial>(&e)) {
    std::map<int, TruncatedSeries> by_power;
    for (const auto& [t, coeff] : p->g.terms()) {
      if (t[1] > 0 && coeff_var != 1) return std::nullopt;
      if (t[2] > 0 && coeff_var != 2) return std::nullopt;
      auto it = by_power.find(t[0]);
      if (it == by_power.end())
        it = by_power.emplace(t[0], TruncatedSeries(source_vars(), degree)).first;
      Exps ce(3, 0);
      ce[(std::size_t)coeff_var] = t[(std::size_t)coeff_var];
      it->second.add_term(ce, coeff);
    }
    for (auto& [i, s] : by_power)
      if (!s.is_zero()) r.terms.emplace_back(i, s);
    if (p->tail[1] != 0 || p->tail[2] != 0) return std::nullopt;
    r.c = p->tail[0];
    r.tail_var = p->tail_var;
    r.shift = p->tail_shift;
  } else if (const auto* p = std::get_if<MonomialTimesTranslate>(&e)) {
    if (p->exps[1] != 0 || p->exps[2] != 0) return std::nullopt;
    r.c = p->exps[0];
    r.tail_var = p->var;
    r.shift = p->alpha;
  } else {
    return std::nullopt;
  }
  std::sort(r.terms.begin(), r.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

// ray indexed expansion: sum_i coeff_i(free var) (x^a y^b)^i + tail monomial
struct RayExpansion {
  std::array<int, 2> prim{0, 0};
  std::vector<std::pair<int, TruncatedSeries>> terms;  // ray indices, sorted
  Exps tail{0, 0, 0};                                  // off-ray monomial
  std::optional<int> tail_var;                         // translated tail variant
  Rational shift{0};
};

inline std::optional<RayExpansion> as_ray_expansion(const Expansion& e, int degree,
                                                    const std::array<int, 2>& prim,
                                                    int coeff_var) {
  RayExpansion r;
  r.prim = prim;
  const auto* p = std::get_if<IndexedSum>(&e);
  if (!p) {
    if (const auto* sp = std::get_if<SeriesPlusMonomial>(&e)) {
      // regroup the series part along the ray
      std::map<int, TruncatedSeries> by_index;
      for (const auto& [t, coeff] : sp->g.terms()) {
        Exps xy{t[0], t[1], 0};
        auto idx = ray_index(prim, xy);
        if (!idx) return std::nullopt;
        if (t[2] > 0 && coeff_var != 2) return std::nullopt;
        auto it = by_index.find(*idx);
        if (it == by_index.end())
          it = by_index.emplace(*idx, TruncatedSeries(source_vars(), degree)).first;
        Exps ce(3, 0);
        ce[2] = t[2];
        it->second.add_term(ce, coeff);
      }
      for (auto& [i, s] : by_index)
        if (!s.is_zero()) r.terms.emplace_back(i, s);
      r.tail = sp->tail;
      r.tail_var = sp->tail_var;
      r.shift = sp->tail_shift;
      return r;
    }
    if (const auto* pm = std::get_if<PureMonomial>(&e)) {
      if (pm->unit) return std::nullopt;
      r.tail = pm->exps;
      return r;
    }
    return std::nullopt;
  }
  for (const auto& t : p->terms) {
    auto idx = ray_index(prim, t.exps);
    if (!idx) return std::nullopt;
    if (!classify_detail::uses_only_vars(t.coeff, {coeff_var})) return std::nullopt;
    if (t.coeff.is_zero()) continue;
    r.terms.emplace_back(*idx, t.coeff);
  }
  if (p->tail_unit) return std::nullopt;
  r.tail = p->tail;
  r.tail_var = p->tail_var;
  r.shift = p->tail_shift;
  std::sort(r.terms.begin(), r.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

// ---- prepared morphisms ------------------------------------------------------

enum class PreparedCase {
  ThreePointTarget = 1,  // q a 3-point: units times monomials, toroidal pair after permuting
  ToroidalPair,          // q a 2-point, (u, v) a toroidal pair
  MiddleAtOnePoint,      // q a 2-point, expansion sits in v, p a 1-point
  MiddleAtTwoPoint,      // q a 2-point, expansion sits in v, p a 2-point
  OnePointTarget,        // q a 1-point, (u, v) a toroidal pair
};

struct PreparedVerdict {
  PreparedCase which{};
  std::optional<PairMatch> pair;
  std::array<int, 2> perm{0, 1};  // slots used as the toroidal pair (3-point targets)
};

inline std::optional<PreparedVerdict> is_prepared(const LocalForm& f) {
  if (f.target == PointType::Three) {
    for (int s = 0; s < 3; ++s)
      if (!as_monomial_times_unit(f.slot(s), f.degree)) return std::nullopt;
    static const std::array<int, 2> perms[] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    for (const auto& pr : perms) {
      LocalForm g = f;
      g.u = f.slot(pr[0]);
      g.v = f.slot(pr[1]);
      auto m = classify_pair(g);
      if (m) {
        PreparedVerdict v;
        v.which = PreparedCase::ThreePointTarget;
        v.pair = m;
        v.perm = pr;
        return v;
      }
    }
    return std::nullopt;
  }
  if (f.target == PointType::Two) {
    if (auto m = classify_pair(f)) {
      PreparedVerdict v;
      v.which = PreparedCase::ToroidalPair;
      v.pair = m;
      return v;
    }
    const auto* wf = std::get_if<FreeVariable>(&f.w);
    if (!wf) return std::nullopt;
    if (f.source == PointType::One) {
      // u = x^a, v = x^c (gamma(x, w-var) + x^d z'), w free
      auto ue = as_pure_monomial(f.u);
      if (!ue || (*ue)[1] != 0 || (*ue)[2] != 0 || (*ue)[0] < 1) return std::nullopt;
      auto pe = as_power_expansion(f.v, f.degree, wf->var);
      if (!pe || pe->terms.empty() || !pe->tail_var || *pe->tail_var == wf->var)
        return std::nullopt;
      int lead = pe->terms.front().first;
      if (!pe->terms.front().second.is_unit()) return std::nullopt;
      if (pe->c <= lead) return std::nullopt;
      PreparedVerdict v;
      v.which = PreparedCase::MiddleAtOnePoint;
      return v;
    }
    if (f.source == PointType::Two) {
      // u = (x^a y^b)^k, v = (x^a y^b)^l (gamma(ray, z) + off-ray), w = z free
      auto ue = as_pure_monomial(f.u);
      if (!ue) return std::nullopt;
      auto ray = as_ray_power(*ue);
      if (!ray || ray->prim[0] < 1 || ray->prim[1] < 1) return std::nullopt;
      if (wf->var != 2) return std::nullopt;
      auto re = as_ray_expansion(f.v, f.degree, ray->prim, 2);
      if (!re || re->terms.empty() || re->tail_var) return std::nullopt;
      if (!re->terms.front().second.is_unit()) return std::nullopt;
      if (ray_index(ray->prim, re->tail)) return std::nullopt;  // tail must be off the ray
      Int d = Int(ray->prim[0]) * re->tail[1] - Int(ray->prim[1]) * re->tail[0];
      if (d == 0 || re->tail[2] != 0) return std::nullopt;
      PreparedVerdict v;
      v.which = PreparedCase::MiddleAtTwoPoint;
      return v;
    }
    return std::nullopt;
  }
  // q a 1-point
  if (auto m = classify_pair(f)) {
    PreparedVerdict v;
    v.which = PreparedCase::OnePointTarget;
    v.pair = m;
    return v;
  }
  return std::nullopt;
}

// ---- super parameters --------------------------------------------------------

enum class SuperCase {
  OnePointOverTwo = 1,
  GridOverTwo,
  RayOverTwo,
  ThreePointOverTwo,
  OnePointOverOne,
  RayOverOne,
};

struct SuperVerdict {
  SuperCase which{};
  bool gamma_zero = false;
};

namespace classify_detail {

// w = x^cu * gamma + tail * (var + shift): checks the rendered series has a
// single var-carrying monomial (the tail) and that the rest factors as a
// monomial times a unit after removing the tail shift.
inline std::optional<bool> unit_plus_translate_shape(const TruncatedSeries& w, int var) {
  std::optional<Exps> tail;
  Rational tail_coeff;
  for (const auto& [e, c] : w.terms()) {
    if (e[(std::size_t)var] == 0) continue;
    Exps base = e;
    base[(std::size_t)var] = 0;
    if (e[(std::size_t)var] != 1 || tail) return std::nullopt;
    tail = base;
    tail_coeff = c;
  }
  if (!tail) return std::nullopt;
  // strip tail * (var + shift) and test the remainder
  TruncatedSeries rest = w;
  Exps tv = *tail;
  tv[(std::size_t)var] = 1;
  rest.add_term(tv, -tail_coeff);
  auto shift_it = w.terms().find(*tail);
  if (shift_it != w.terms().end()) rest.add_term(*tail, -shift_it->second);
  if (rest.is_zero()) return true;  // gamma = 0
  Exps m = rest.terms().begin()->first;
  for (const auto& [t, c] : rest.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t[i]);
  if (m[(std::size_t)var] != 0) return std::nullopt;
  if (rest.terms().find(m) == rest.terms().end()) return std::nullopt;
  return false;  // gamma is a unit
}

}  // namespace classify_detail

inline std::optional<SuperVerdict> is_super(const LocalForm& f) {
  auto pm = classify_pair(f);
  if (!pm) return std::nullopt;
  auto w = render_w(f);
  if (f.target == PointType::Two) {
    switch (pm->primary) {
      case PairCase::PowerTranslate: {
        int other = pm->pair_var == 1 ? 2 : 1;
        if (!classify_detail::uses_only_vars(w, {0, pm->pair_var, other})) return std::nullopt;
        auto g0 = classify_detail::unit_plus_translate_shape(w, other);
        if (!g0) return std::nullopt;
        return SuperVerdict{SuperCase::OnePointOverTwo, *g0};
      }
      case PairCase::Independent: {
        auto g0 = classify_detail::unit_plus_translate_shape(w, 2);
        if (!g0) return std::nullopt;
        return SuperVerdict{SuperCase::GridOverTwo, *g0};
      }
      case PairCase::RayTranslate: {
        // w = ray^l gamma(ray, z) + off-ray monomial
        auto re = as_ray_expansion(f.w, f.degree, pm->prim, 2);
        if (!re || re->tail_var) return std::nullopt;
        bool gamma_zero = re->terms.empty();
        if (!gamma_zero && !re->terms.front().second.is_unit()) return std::nullopt;
        Int d = Int(pm->prim[0]) * re->tail[1] - Int(pm->prim[1]) * re->tail[0];
        if (d == 0 || re->tail[2] != 0) return std::nullopt;
        return SuperVerdict{SuperCase::RayOverTwo, gamma_zero};
      }
      case PairCase::RankTwo: {
        auto u = to_lattice(pm->u_exps, 3);
        auto v = to_lattice(pm->v_exps, 3);
        std::vector<Exps> rank3;
        for (const auto& [e, c] : w.terms())
          if (rank_of_monomials({u, v, to_lattice(e, 3)}) == 3) rank3.push_back(e);
        if (rank3.size() != 1) return std::nullopt;
        TruncatedSeries rest = w;
        rest.add_term(rank3[0], -w.terms().at(rank3[0]));
        if (rest.is_zero()) return SuperVerdict{SuperCase::ThreePointOverTwo, true};
        Exps m = rest.terms().begin()->first;
        for (const auto& [t, c] : rest.terms())
          for (std::size_t i = 0; i < 3; ++i) m[i] = std::min(m[i], t[i]);
        if (rest.terms().find(m) == rest.terms().end()) return std::nullopt;
        if (rank_of_monomials({u, v, to_lattice(m, 3)}) != 2) return std::nullopt;
        for (const auto& [t, c] : rest.terms()) {
          Exps off(3);
          for (int i = 0; i < 3; ++i) off[i] = t[i] - m[i];
          if (rank_of_monomials({u, v, to_lattice(off, 3)}) > 2) return std::nullopt;
        }
        return SuperVerdict{SuperCase::ThreePointOverTwo, false};
      }
      default:
        return std::nullopt;
    }
  }
  if (f.target == PointType::One) {
    switch (pm->primary) {
      case PairCase::PowerFree: {
        int other = pm->pair_var == 1 ? 2 : 1;
        auto g0 = classify_detail::unit_plus_translate_shape(w, other);
        if (!g0) return std::nullopt;
        return SuperVerdict{SuperCase::OnePointOverOne, *g0};
      }
      case PairCase::RayFree: {
        auto re = as_ray_expansion(f.w, f.degree, pm->prim, 2);
        if (!re || re->tail_var) return std::nullopt;
        bool gamma_zero = re->terms.empty();
        if (!gamma_zero && !re->terms.front().second.is_unit()) return std::nullopt;
        Int d = Int(pm->prim[0]) * re->tail[1] - Int(pm->prim[1]) * re->tail[0];
        if (d == 0 || re->tail[2] != 0) return std::nullopt;
        return SuperVerdict{SuperCase::RayOverOne, gamma_zero};
      }
      default:
        return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- good and weakly good forms ----------------------------------------------

struct GoodVerdict {
  bool good = false;
  std::vector<Exps> offending;  // indexed terms violating the filter
};

// The divisibility filters on the indexed part of w, per source/target shape.
inline std::optional<GoodVerdict> is_good(const LocalForm& f) {
  auto pm = classify_pair(f);
  if (!pm) return std::nullopt;
  GoodVerdict verdict;
  verdict.good = true;
  auto w = render_w(f);

  auto note = [&](const Exps& e) {
    verdict.good = false;
    verdict.offending.push_back(e);
  };

  switch (pm->primary) {
    case PairCase::PowerFree:
    case PairCase::PowerTranslate: {
      // modulus: a for a 1-point target, gcd(a, b) for a 2-point target
      long a = pm->u_exps[0];
      long modulus = pm->primary == PairCase::PowerFree ? a : std::gcd(a, (long)pm->v_exps[0]);
      int zvar = pm->pair_var == 1 ? 2 : 1;
      std::optional<int> n;
      for (const auto& [e, c] : w.terms())
        if (e[(std::size_t)zvar] > 0) {
          if (e[(std::size_t)zvar] != 1 || n) return std::nullopt;
          if (e[(std::size_t)(pm->pair_var)] != 0) return std::nullopt;
          n = e[0];
        }
      if (!n) return std::nullopt;
      for (const auto& [e, c] : w.terms()) {
        if (e[(std::size_t)zvar] > 0) continue;
        if (e[0] == *n && e[(std::size_t)pm->pair_var] == 0) continue;  // the shift alpha
        if (e[0] % modulus == 0) note(e);
      }
      return verdict;
    }
    case PairCase::RayFree:
    case PairCase::RayTranslate: {
      long modulus = pm->primary == PairCase::RayFree ? pm->k : std::gcd((long)pm->k, (long)pm->t);
      std::optional<Exps> tail;
      for (const auto& [e, c] : w.terms()) {
        Exps xy{e[0], e[1], 0};
        auto idx = ray_index(pm->prim, xy);
        if (idx) {
          if (*idx % modulus == 0) note(e);
          continue;
        }
        if (e[2] != 0) return std::nullopt;  // off-ray terms must be the plain tail
        if (tail && *tail != e) return std::nullopt;
        tail = e;
      }
      if (!tail) return std::nullopt;
      return verdict;
    }
    case PairCase::Independent: {
      SubLattice L(2, {to_lattice(pm->u_exps, 2), to_lattice(pm->v_exps, 2)});
      std::optional<Exps> tail;
      for (const auto& [e, c] : w.terms())
        if (e[2] > 0) {
          if (e[2] != 1 || tail) return std::nullopt;
          tail = e;
        }
      if (!tail) return std::nullopt;
      for (const auto& [e, c] : w.terms()) {
        if (e[2] > 0) continue;
        if (L.contains(to_lattice(e, 2))) note(e);
      }
      return verdict;
    }
    case PairCase::RankTwo: {
      auto u = to_lattice(pm->u_exps, 3);
      auto v = to_lattice(pm->v_exps, 3);
      SubLattice L(3, {u, v});
      std::optional<Exps> tail;
      for (const auto& [e, c] : w.terms()) {
        if (rank_of_monomials({u, v, to_lattice(e, 3)}) == 3) {
          if (tail) return std::nullopt;
          tail = e;
          continue;
        }
        if (L.contains(to_lattice(e, 3))) note(e);
      }
      if (!tail) return std::nullopt;
      return verdict;
    }
  }
  return std::nullopt;
}

struct WeaklyGoodVerdict {
  bool weakly_good = false;
  std::string reason;
};

inline std::optional<WeaklyGoodVerdict> is_weakly_good(const LocalForm& f) {
  if (f.target != PointType::One) return std::nullopt;
  auto pm = classify_pair(f);
  if (!pm) return std::nullopt;
  if (pm->primary == PairCase::PowerFree) {
    auto pe = as_power_expansion(f.w, f.degree, pm->pair_var);
    if (!pe || !pe->tail_var) return std::nullopt;
    long a = pm->u_exps[0];
    if (pe->terms.empty()) return WeaklyGoodVerdict{false, "empty expansion"};
    for (std::size_t i = 0; i < pe->terms.size(); ++i) {
      if (pe->terms[i].first == 0) return WeaklyGoodVerdict{false, "zero index"};
      if (pe->terms[i].first >= pe->c) return WeaklyGoodVerdict{false, "index reaches the tail"};
    }
    if (pe->terms.front().first % a == 0) return WeaklyGoodVerdict{false, "a divides sigma_0"};
    return WeaklyGoodVerdict{true, ""};
  }
  if (pm->primary == PairCase::RayFree) {
    auto re = as_ray_expansion(f.w, f.degree, pm->prim, 2);
    if (!re || re->tail_var) return std::nullopt;
    Int d = Int(pm->prim[0]) * re->tail[1] - Int(pm->prim[1]) * re->tail[0];
    if (d == 0 || re->tail[2] != 0) return std::nullopt;
    if (re->terms.empty()) return WeaklyGoodVerdict{false, "empty expansion"};
    for (const auto& [i, c] : re->terms)
      if (i == 0) return WeaklyGoodVerdict{false, "zero index"};
    if (re->terms.front().first % pm->k == 0) return WeaklyGoodVerdict{false, "k divides sigma_0"};
    int sm = re->terms.back().first;
    if (sm * pm->prim[0] > re->tail[0] && sm * pm->prim[1] > re->tail[1])
      return WeaklyGoodVerdict{false, "sigma_m (a,b) exceeds (c,d)"};
    return WeaklyGoodVerdict{true, ""};
  }
  return std::nullopt;
}

}  // namespace toroidal

#endif
