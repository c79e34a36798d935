// SPDX-License-Identifier: Apache-2.0
#include "lgrank/skewpoly.hpp"

#include <algorithm>
#include <sstream>

namespace lgrank {

template <class S>
SkewRing<S>::SkewRing(ThetaAlgebra<S> th) : th_(std::move(th)) {}

template <class S>
void SkewRing<S>::insert(Poly& f, const MultiIndex& u, const Elem& c) const {
  if (u.size() != m()) throw DomainError("exponent has the wrong number of variables");
  auto it = f.find(u);
  if (it == f.end()) {
    if (!c.is_zero()) f.emplace(u, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::constant(const Elem& a) const {
  return monomial(a, MultiIndex(m(), 0));
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::monomial(const Elem& a, const MultiIndex& u) const {
  Poly f;
  insert(f, u, a);
  return f;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::x(std::size_t i) const {
  if (i >= m()) throw DomainError("variable index out of range");
  MultiIndex u(m(), 0);
  u[i] = 1;
  return monomial(th_.algebra().L().one(), u);
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::add(const Poly& f, const Poly& g) const {
  Poly out = f;
  for (const auto& [u, c] : g) insert(out, u, c);
  return out;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::sub(const Poly& f, const Poly& g) const {
  Poly out = f;
  for (const auto& [u, c] : g) insert(out, u, -c);
  return out;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::scale(const Elem& a, const Poly& f) const {
  Poly out;
  for (const auto& [u, c] : f) insert(out, u, a * c);
  return out;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::mul(const Poly& f, const Poly& g) const {
  const auto& ext = th_.ext();
  Poly out;
  for (const auto& [i, a] : f)
    for (const auto& [j, b] : g) {
      MultiIndex e(m());
      for (std::size_t k = 0; k < m(); ++k) e[k] = i[k] + j[k];
      insert(out, e, a * ext.apply(th_.group_index(i), b));
    }
  return out;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::reduce(const Poly& f) const {
  const auto& n = th_.type();
  Poly out;
  for (const auto& [u, c] : f) {
    MultiIndex r(m());
    for (std::size_t k = 0; k < m(); ++k) r[k] = u[k] % n[k];
    insert(out, r, c);
  }
  return out;
}

template <class S>
bool SkewRing<S>::is_reduced(const Poly& f) const {
  const auto& n = th_.type();
  for (const auto& [u, c] : f)
    for (std::size_t k = 0; k < m(); ++k)
      if (u[k] >= n[k]) return false;
  return true;
}

template <class S>
LGElement<S> SkewRing<S>::phi(const Poly& f) const {
  const auto& alg = th_.algebra();
  LGElement<S> out = alg.zero();
  for (const auto& [u, c] : f) out[th_.group_index(u)] += c;
  return out;
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::phi_inv(const LGElement<S>& p) const {
  Poly out;
  for (std::size_t g = 0; g < p.size(); ++g)
    if (!p[g].is_zero()) out.emplace(th_.exponent(g), p[g]);
  return out;
}

template <class S>
std::pair<MultiIndex, typename SkewRing<S>::Elem> SkewRing<S>::leading_term(const Poly& f, MonomialOrder o) const {
  if (f.empty()) throw DomainError("leading term of the zero polynomial");
  auto best = f.begin();
  for (auto it = f.begin(); it != f.end(); ++it)
    if (order_less(best->first, it->first, o)) best = it;
  return {best->first, best->second};
}

template <class S>
WitnessReport<S> SkewRing<S>::af_witness_check(const LGElement<S>& p, MonomialOrder o, std::size_t samples,
                                               std::uint64_t seed) const {
  const auto& n = th_.type();
  const Poly pbar = phi_inv(p);
  WitnessReport<S> rep;
  rep.lead = leading_term(pbar, o).first;
  std::vector<std::size_t> range(m());
  for (std::size_t k = 0; k < m(); ++k) range[k] = n[k] - rep.lead[k];
  std::vector<MultiIndex> z = delta_grid(range);
  rep.z_size = z.size();
  if (z.size() > samples) {
    Rng rng(seed);
    std::vector<MultiIndex> pick;
    for (std::size_t s = 0; s < samples; ++s) pick.push_back(z[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(z.size()) - 1))]);
    std::sort(pick.begin(), pick.end());
    pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
    z = std::move(pick);
  }
  rep.sampled = z.size();
  const auto& L = th_.algebra().L();
  Matrix<Elem> products(0, th_.algebra().N(), L.zero());
  for (const auto& v : z) {
    Poly q = reduce(mul(monomial(L.one(), v), pbar));
    MultiIndex want(m());
    for (std::size_t k = 0; k < m(); ++k) want[k] = rep.lead[k] + v[k];
    if (q.empty() || leading_term(q, o).first != want) ++rep.failures;
    products.append_row(phi(q).coeffs());
  }
  rep.product_rank = rank(products);
  return rep;
}

template <class S>
std::string SkewRing<S>::to_text(const Poly& f) const {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : f) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    bool any = false;
    for (std::size_t k = 0; k < m(); ++k) {
      if (u[k] == 0) continue;
      os << (any ? " " : " * ") << "x" << k + 1;
      if (u[k] > 1) os << "^" << u[k];
      any = true;
    }
  }
  return os.str();
}

template <class S>
typename SkewRing<S>::Poly SkewRing<S>::random(Rng& rng, std::size_t terms, std::size_t max_exp, long height) const {
  Poly out;
  for (std::size_t t = 0; t < terms; ++t) {
    MultiIndex u(m());
    for (auto& x : u) x = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_exp)));
    insert(out, u, th_.algebra().random_scalar(rng, height));
  }
  return out;
}

template class SkewRing<Rational>;
template class SkewRing<ModP>;

}  // namespace lgrank
