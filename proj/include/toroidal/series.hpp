#ifndef TOROIDAL_SERIES_HPP
#define TOROIDAL_SERIES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal {

namespace series_detail {

// graded lexicographic: total degree first, then lex in declared variable order
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

}  // namespace series_detail

// Multivariate power series over exact rationals, truncated at a total degree.
// `exact()` reports that no term has ever been discarded by the truncation,
// i.e. the value is an honest polynomial, not a jet.
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational, series_detail::GradedLex>;

  TruncatedSeries(std::vector<std::string> vars, int degree)
      : vars_(std::move(vars)), degree_(degree), exact_(true) {
    require(!vars_.empty() && vars_.size() <= 3, ErrorCode::MalformedInput,
            "series over 1 to 3 variables");
    require(degree_ >= 0, ErrorCode::MalformedInput, "negative truncation degree");
  }

  static TruncatedSeries constant(std::vector<std::string> vars, int degree, const Rational& c) {
    TruncatedSeries s(std::move(vars), degree);
    if (c != 0) s.terms_[Exponents(s.vars_.size(), 0)] = c;
    return s;
  }

  static TruncatedSeries variable(std::vector<std::string> vars, int degree, std::size_t index) {
    TruncatedSeries s(std::move(vars), degree);
    require(index < s.vars_.size(), ErrorCode::MalformedInput, "variable index");
    Exponents e(s.vars_.size(), 0);
    e[index] = 1;
    s.add_term(e, Rational(1));
    return s;
  }

  static TruncatedSeries monomial(std::vector<std::string> vars, int degree, Exponents e,
                                  const Rational& c) {
    TruncatedSeries s(std::move(vars), degree);
    require(e.size() == s.vars_.size(), ErrorCode::MalformedInput, "monomial exponents");
    s.add_term(e, c);
    return s;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  int degree() const { return degree_; }
  bool exact() const { return exact_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_unit() const { return constant_term() != 0; }

  // least total degree of a term; degree()+1 when zero
  int order() const {
    if (terms_.empty()) return degree_ + 1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
  }

  void add_term(const Exponents& e, const Rational& c) {
    require(e.size() == vars_.size(), ErrorCode::MalformedInput, "term exponents");
    for (int x : e) require(x >= 0, ErrorCode::MalformedInput, "negative exponent in series");
    if (c == 0) return;
    if (std::accumulate(e.begin(), e.end(), 0) > degree_) {
      exact_ = false;
      return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    exact_ = exact_ && o.exact_;
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += o.negated(); }

  TruncatedSeries negated() const {
    TruncatedSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  TruncatedSeries& scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries r(a.vars_, a.degree_);
    r.exact_ = a.exact_ && b.exact_;
    for (const auto& [ea, ca] : a.terms_) {
      int da = std::accumulate(ea.begin(), ea.end(), 0);
      for (const auto& [eb, cb] : b.terms_) {
        int db = std::accumulate(eb.begin(), eb.end(), 0);
        if (da + db > a.degree_) {
          r.exact_ = false;
          continue;
        }
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        Rational prod = ca * cb;
        auto [it, inserted] = r.terms_.try_emplace(e, prod);
        if (!inserted) {
          it->second += prod;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  TruncatedSeries pow(unsigned n) const {
    TruncatedSeries r = constant(vars_, degree_, Rational(1));
    TruncatedSeries base = *this;
    while (n) {
      if (n & 1) r = r * base;
      base = (n >>= 1) ? base * base : base;
    }
    return r;
  }

  bool operator==(const TruncatedSeries& o) const {
    return vars_ == o.vars_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  // multiply by a single monomial (exponents may push terms past the degree)
  TruncatedSeries shifted(const Exponents& e) const {
    TruncatedSeries r(vars_, degree_);
    r.exact_ = exact_;
    for (const auto& [t, c] : terms_) {
      Exponents s(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) s[i] = t[i] + e[i];
      r.add_term(s, c);
    }
    return r;
  }

  // exact division by a monomial; fails if some term is not divisible
  TruncatedSeries divided_by_monomial(const Exponents& e) const {
    TruncatedSeries r(vars_, degree_);
    r.exact_ = exact_;
    for (const auto& [t, c] : terms_) {
      Exponents s(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        require(t[i] >= e[i], ErrorCode::MalformedInput, "monomial division with remainder");
        s[i] = t[i] - e[i];
      }
      r.terms_[s] = c;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) {
          os << "*" << vars_[i];
          if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
  }

  void check_compatible(const TruncatedSeries& o) const {
    require(vars_ == o.vars_, ErrorCode::VariableMismatch, "series variable sets differ");
    require(degree_ == o.degree_, ErrorCode::TruncationMismatch, "series truncation degrees differ");
  }

  void mark_inexact() { exact_ = false; }

 private:
  std::vector<std::string> vars_;
  int degree_;
  bool exact_;
  TermMap terms_;
};

struct UnitSeries {
  TruncatedSeries series;
  explicit UnitSeries(TruncatedSeries s) : series(std::move(s)) {
    require(series.is_unit(), ErrorCode::NotAUnit, "constant term is zero");
  }
};

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

namespace series_detail {

inline void enumerate_exponents(std::size_t nvars, int max_total,
                                const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i + 1 == nvars) {
      for (int k = 0; k <= remaining; ++k) {
        e[i] = k;
        fn(e);
      }
      e[i] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[i] = k;
      rec(i + 1, remaining - k);
    }
    e[i] = 0;
  };
  rec(0, max_total);
}

}  // namespace series_detail

// Inverse of a unit, by graded recursion on the coefficients.
inline UnitSeries invert_unit(const UnitSeries& u) {
  const TruncatedSeries& a = u.series;
  Rational c0 = a.constant_term();
  TruncatedSeries b(a.vars(), a.degree());
  std::vector<int> zero(a.vars().size(), 0);
  b.add_term(zero, Rational(1) / c0);
  // nonconstant part of a, for the convolution
  std::vector<std::pair<std::vector<int>, Rational>> tail;
  for (const auto& [e, c] : a.terms())
    if (e != zero) tail.emplace_back(e, c);
  if (!tail.empty()) {
    // walk all exponents in graded order; b's coefficient at m only depends on
    // strictly smaller ones
    std::vector<std::vector<int>> all;
    series_detail::enumerate_exponents(a.vars().size(), a.degree(),
                                       [&](const std::vector<int>& e) { all.push_back(e); });
    std::sort(all.begin(), all.end(), series_detail::GradedLex{});
    for (const auto& m : all) {
      if (m == zero) continue;
      Rational acc(0);
      for (const auto& [e, c] : tail) {
        bool fits = true;
        std::vector<int> rest(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          rest[i] = m[i] - e[i];
          if (rest[i] < 0) fits = false;
        }
        if (!fits) continue;
        auto it = b.terms().find(rest);
        if (it != b.terms().end()) acc += c * it->second;
      }
      if (acc != 0) b.add_term(m, -acc / c0);
    }
    b.mark_inexact();
  }
  return UnitSeries(std::move(b));
}

// Binomial expansion (1+m)^e for rational e; requires constant term exactly 1.
inline UnitSeries rational_power(const UnitSeries& u, const Rational& e) {
  const TruncatedSeries& a = u.series;
  require(a.constant_term() == 1, ErrorCode::ConstantNotOne,
          "rational_power needs constant term 1");
  TruncatedSeries m = a - TruncatedSeries::constant(a.vars(), a.degree(), Rational(1));
  TruncatedSeries acc = TruncatedSeries::constant(a.vars(), a.degree(), Rational(1));
  TruncatedSeries mk = TruncatedSeries::constant(a.vars(), a.degree(), Rational(1));
  Rational binom(1);
  for (int k = 1; k <= a.degree(); ++k) {
    if (m.is_zero()) break;
    binom *= (e - Rational(k - 1)) / Rational(k);
    if (binom == 0) break;  // e is a nonnegative integer < k: expansion terminates
    mk = mk * m;
    if (mk.is_zero()) break;
    TruncatedSeries t = mk;
    t.scale(binom);
    acc += t;
  }
  bool integral_power = denominator(e) == 1 && e >= 0;
  if (!integral_power) acc.mark_inexact();
  return UnitSeries(std::move(acc));
}

// Composition s(images). Every image must share one variable set and the
// truncation degree of s. Images with nonzero constant term are translations;
// those are only sound when s is an honest polynomial (exact), since
// truncation is not compatible with constant shifts.
inline TruncatedSeries substitute(const TruncatedSeries& s,
                                  const std::vector<TruncatedSeries>& images) {
  require(images.size() == s.vars().size(), ErrorCode::MalformedInput,
          "one image per variable required");
  for (const auto& im : images) {
    images[0].check_compatible(im);
    require(im.degree() == s.degree(), ErrorCode::TruncationMismatch,
            "image truncation degree differs");
    if (im.constant_term() != 0)
      require(s.exact(), ErrorCode::DivergentSubstitution,
              "translation applied to a truncated (non-polynomial) series");
  }
  const auto& tvars = images[0].vars();
  int D = s.degree();
  // lazily computed powers of each image
  std::vector<std::vector<TruncatedSeries>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(TruncatedSeries::constant(tvars, D, Rational(1)));
  auto image_power = [&](std::size_t i, int k) -> const TruncatedSeries& {
    while ((int)powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  TruncatedSeries r(tvars, D);
  bool lossy = !s.exact();
  for (const auto& [e, c] : s.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(tvars, D, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * image_power(i, e[i]);
    if (!term.exact()) lossy = true;
    r += term;
  }
  if (lossy) r.mark_inexact();
  return r;
}

}  // namespace toroidal

#endif
