#pragma once

// Buchberger's algorithm for polynomial ideals (non-negative exponents).

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cocert/laurent.hpp"

namespace cocert {

enum class MonomialOrder { DegRevLex, Lex };

/// Sign of a - b in the given order (variable 0 is the largest).
inline int compare_monomials(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::DegRevLex) {
    const long da = std::accumulate(a.begin(), a.end(), 0L), db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

struct Term {
  Exponent exp;
  Scalar coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

/// Polynomial as terms sorted strictly decreasing in a monomial order.
using SortedPoly = std::vector<Term>;

inline SortedPoly to_sorted(const LaurentPoly& f, MonomialOrder order) {
  require(!f.has_negative_exponent(), ErrorKind::InvalidArgument,
          "Groebner routines need non-negative exponents: " + f.str());
  SortedPoly p;
  for (const auto& [e, c] : f.terms()) p.push_back({e, c});
  std::sort(p.begin(), p.end(),
            [order](const Term& a, const Term& b) { return compare_monomials(a.exp, b.exp, order) > 0; });
  return p;
}

inline LaurentPoly from_sorted(const SortedPoly& p, const std::vector<std::string>& vars, Field f) {
  LaurentPoly r(vars, f);
  for (const auto& t : p) r.add_term(t.exp, t.coeff);
  return r;
}

namespace detail {

struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Exponent& a, const Exponent& b) const { return compare_monomials(a, b, order) > 0; }
};

using WorkPoly = std::map<Exponent, Scalar, OrderGreater>;

inline void sub_multiple(WorkPoly& w, const Scalar& c, const Exponent& shift, const SortedPoly& g) {
  Exponent e(shift.size());
  for (const auto& t : g) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exp[i] + shift[i];
    const Scalar v = c * t.coeff;
    auto [it, inserted] = w.try_emplace(e, -v);
    if (!inserted) {
      it->second -= v;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

inline SortedPoly make_monic(SortedPoly p) {
  if (p.empty()) return p;
  const Scalar inv = p.front().coeff.inv();
  for (auto& t : p) t.coeff *= inv;
  return p;
}

}  // namespace detail

/// Full reduction of f modulo basis (remainder of the multivariate division).
inline SortedPoly reduce(const SortedPoly& f, const std::vector<SortedPoly>& basis, MonomialOrder order) {
  detail::WorkPoly w(detail::OrderGreater{order});
  for (const auto& t : f) w.emplace(t.exp, t.coeff);
  SortedPoly rem;
  Exponent shift;
  while (!w.empty()) {
    auto lead = w.begin();
    const SortedPoly* div = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && divides(g.front().exp, lead->first)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back({lead->first, lead->second});
      w.erase(lead);
      continue;
    }
    shift.assign(lead->first.size(), 0);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lead->first[i] - div->front().exp[i];
    const Scalar c = lead->second / div->front().coeff;
    detail::sub_multiple(w, c, shift, *div);
  }
  return rem;
}

inline SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g, MonomialOrder order) {
  const Exponent l = lcm(f.front().exp, g.front().exp);
  detail::WorkPoly w(detail::OrderGreater{order});
  Exponent sf(l.size()), sg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - f.front().exp[i];
    sg[i] = l[i] - g.front().exp[i];
  }
  const Field field = f.front().coeff.field();
  detail::sub_multiple(w, -f.front().coeff.inv(), sf, f);
  detail::sub_multiple(w, g.front().coeff.inv(), sg, g);
  SortedPoly out;
  for (auto& [e, c] : w) out.push_back({e, c});
  (void)field;
  return out;
}

/// Reduced Groebner basis of the ideal generated by gens (Buchberger with
/// the coprime-leading-monomial criterion and normal pair selection).
inline std::vector<SortedPoly> groebner_basis(const std::vector<SortedPoly>& gens, MonomialOrder order) {
  std::vector<SortedPoly> g;
  for (const auto& f : gens) {
    SortedPoly r = reduce(f, g, order);
    if (!r.empty()) g.push_back(detail::make_monic(std::move(r)));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    const Exponent l = lcm(g[pr.first].front().exp, g[pr.second].front().exp);
    return std::accumulate(l.begin(), l.end(), 0L);
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const auto& a, const auto& b) { return lcm_degree(a) < lcm_degree(b); });
    const auto [i, j] = *best;
    pairs.erase(best);
    const Exponent& li = g[i].front().exp;
    const Exponent& lj = g[j].front().exp;
    bool coprime = true;
    for (std::size_t v = 0; v < li.size(); ++v)
      if (li[v] && lj[v]) coprime = false;
    if (coprime) continue;
    SortedPoly r = reduce(s_polynomial(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    g.push_back(detail::make_monic(std::move(r)));
    const std::size_t k = g.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // minimize: drop elements whose leading monomial is a multiple of another's
  std::vector<SortedPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].front().exp, g[i].front().exp) && (g[j].front().exp != g[i].front().exp || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // inter-reduce tails
  std::vector<SortedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SortedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    SortedPoly tail(minimal[i].begin() + 1, minimal[i].end());
    SortedPoly r = reduce(tail, others, order);
    SortedPoly full{minimal[i].front()};
    full.insert(full.end(), r.begin(), r.end());
    reduced.push_back(detail::make_monic(std::move(full)));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const SortedPoly& a, const SortedPoly& b) {
    return compare_monomials(a.front().exp, b.front().exp, order) < 0;
  });
  return reduced;
}

/// Buchberger's criterion checked directly: every S-polynomial reduces to 0.
inline bool s_pairs_reduce_to_zero(const std::vector<SortedPoly>& g, MonomialOrder order) {
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!reduce(s_polynomial(g[i], g[j], order), g, order).empty()) return false;
  return true;
}

/// True when every element has its leading coefficient 1 and no term of any
/// element is divisible by the leading monomial of another element.
inline bool is_reduced_basis(const std::vector<SortedPoly>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].empty() || !g[i].front().coeff.is_one()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i])
        if (divides(g[j].front().exp, t.exp)) return false;
    }
  }
  return true;
}

}  // namespace cocert
