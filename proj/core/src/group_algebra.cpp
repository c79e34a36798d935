// SPDX-License-Identifier: Apache-2.0
#include "lgrank/group_algebra.hpp"

namespace lgrank {

template <class S>
GroupAlgebra<S>::GroupAlgebra(std::shared_ptr<const Extension<S>> ext) : ext_(std::move(ext)) {
  if (!ext_) throw DomainError("group algebra needs an extension");
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::zero() const {
  return Vec(std::vector<Elem>(N(), L().zero()));
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::group_element(std::size_t g) const {
  return monomial(L().one(), g);
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::monomial(const Elem& a, std::size_t g) const {
  Vec v = zero();
  v[g] = a;
  return v;
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::trace_element() const {
  return Vec(std::vector<Elem>(N(), L().one()));
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::from_coeffs(std::vector<Elem> c) const {
  if (c.size() != N()) throw DomainError("L[G] element needs " + std::to_string(N()) + " coefficients");
  for (const auto& x : c)
    if (x.field() != &L()) throw DomainError("L[G] coefficient is not an element of L");
  return Vec(std::move(c));
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::compose(const Vec& u, const Vec& v) const {
  Vec out = zero();
  for (std::size_t g = 0; g < N(); ++g) {
    if (u[g].is_zero()) continue;
    for (std::size_t h = 0; h < N(); ++h) {
      if (v[h].is_zero()) continue;
      out[ext_->compose(g, h)] += u[g] * ext_->apply(g, v[h]);
    }
  }
  return out;
}

template <class S>
typename GroupAlgebra<S>::Elem GroupAlgebra<S>::evaluate(const Vec& a, const Elem& x) const {
  Elem r = L().zero();
  for (std::size_t g = 0; g < N(); ++g)
    if (!a[g].is_zero()) r += a[g] * ext_->apply(g, x);
  return r;
}

template <class S>
std::vector<typename GroupAlgebra<S>::Elem> GroupAlgebra<S>::ev_vector(const Vec& a,
                                                                       const std::vector<Elem>& b) const {
  std::vector<Elem> out;
  out.reserve(b.size());
  for (const auto& x : b) out.push_back(evaluate(a, x));
  return out;
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::adjoint(const Vec& u) const {
  Vec out = zero();
  for (std::size_t g = 0; g < N(); ++g) out[g] = ext_->apply(g, u[ext_->inverse(g)]);
  return out;
}

template <class S>
typename GroupAlgebra<S>::Elem GroupAlgebra<S>::inner(const Vec& a, const Vec& b) const {
  Elem r = L().zero();
  for (std::size_t g = 0; g < N(); ++g) r += a[g] * b[g];
  return r;
}

template <class S>
typename GroupAlgebra<S>::LMatrix GroupAlgebra<S>::moore_matrix(const std::vector<Elem>& v) const {
  LMatrix m(N(), v.size(), L().zero());
  for (std::size_t g = 0; g < N(); ++g)
    for (std::size_t j = 0; j < v.size(); ++j) m(g, j) = ext_->apply(g, v[j]);
  return m;
}

template <class S>
typename GroupAlgebra<S>::LMatrix GroupAlgebra<S>::dickson_matrix(const Vec& a) const {
  LMatrix d(N(), N(), L().zero());
  for (std::size_t j = 0; j < N(); ++j)
    for (std::size_t k = 0; k < N(); ++k) d(ext_->compose(j, k), j) = ext_->apply(j, a[k]);
  return d;
}

template <class S>
typename GroupAlgebra<S>::LMatrix GroupAlgebra<S>::endo_matrix(const Vec& a, const Basis<S>& b1,
                                                               const Basis<S>& b2) const {
  LMatrix m(N(), N(), K().zero());
  for (std::size_t j = 0; j < N(); ++j) {
    auto co = b2.coordinates(evaluate(a, b1[j]));
    for (std::size_t i = 0; i < N(); ++i) m(i, j) = co[i];
  }
  return m;
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::interpolate(const LMatrix& m, const Basis<S>& b) const {
  if (m.rows() != N() || m.cols() != N()) throw DomainError("interpolate needs an N x N matrix over K");
  Basis<S> dual = ext_->dual_basis(b);
  Vec out = zero();
  for (std::size_t j = 0; j < N(); ++j) {
    Elem v = b.combine(m.col(j));
    if (v.is_zero()) continue;
    for (std::size_t g = 0; g < N(); ++g) out[g] += v * ext_->apply(g, dual[j]);
  }
  return out;
}

template <class S>
RankReport GroupAlgebra<S>::rank_report(const Vec& a) const {
  RankReport r;
  r.endo_rank_K = rank(endo_matrix(a));
  LMatrix moore = moore_matrix(ev_vector(a, ext_->canonical_basis().elements()));
  r.moore_rank_L = rank(moore);
  r.dickson_rank_L = rank(dickson_matrix(a));
  // f o a = 0 iff sum_g f_g g(v_j) = 0 for all j: left kernel of the Moore matrix
  r.annihilator_codim = N() - kernel_basis(moore.transpose()).rows();
  return r;
}

template <class S>
std::size_t GroupAlgebra<S>::rank_of(const Vec& a) const {
  RankReport r = rank_report(a);
  if (!r.agree())
    throw InvariantViolation("rank characterisations disagree: " + std::to_string(r.endo_rank_K) + " " +
                             std::to_string(r.moore_rank_L) + " " + std::to_string(r.dickson_rank_L) + " " +
                             std::to_string(r.annihilator_codim));
  return r.endo_rank_K;
}

template <class S>
KSubspace<S> GroupAlgebra<S>::kernel_subspace(const Vec& a) const {
  return KSubspace<S>::span(kernel(endo_matrix(a)));
}

template <class S>
KSubspace<S> GroupAlgebra<S>::image_subspace(const Vec& a) const {
  return KSubspace<S>::span(endo_matrix(a).transpose());
}

template <class S>
Subspace<typename GroupAlgebra<S>::Elem> GroupAlgebra<S>::annihilator(const Vec& a) const {
  LMatrix moore = moore_matrix(ev_vector(a, ext_->canonical_basis().elements()));
  return Subspace<Elem>::span(kernel(moore.transpose()));
}

template <class S>
bool GroupAlgebra<S>::dickson_similarity_check(const Vec& a) const {
  const Elem alpha = ext_->primitive_element();
  LMatrix am = ext_->multiplication_matrix(alpha);
  // A(m_alpha, B) - alpha Id over L
  LMatrix shifted(N(), N(), L().zero());
  for (std::size_t i = 0; i < N(); ++i)
    for (std::size_t j = 0; j < N(); ++j) {
      shifted(i, j) = ext_->embed(am(i, j));
      if (i == j) shifted(i, j) -= alpha;
    }
  // v is a left eigenvector: v^T A = alpha v^T
  LMatrix eig = kernel(shifted.transpose());
  if (eig.rows() != 1)
    throw InvariantViolation("eigenspace of the primitive element has dimension " + std::to_string(eig.rows()));
  std::vector<Elem> v = eig.row(0);  // reduced echelon: first nonzero entry is 1
  LMatrix mg = moore_matrix(v);
  LMatrix a_k = endo_matrix(a);
  LMatrix a_l(N(), N(), L().zero());
  for (std::size_t i = 0; i < N(); ++i)
    for (std::size_t j = 0; j < N(); ++j) a_l(i, j) = ext_->embed(a_k(i, j));
  LMatrix rhs = mg * a_l * lgrank::inverse(mg);
  return dickson_matrix(a).transpose() == rhs;
}

template <class S>
typename GroupAlgebra<S>::Elem GroupAlgebra<S>::random_scalar(Rng& rng, long height) const {
  std::vector<S> c;
  c.reserve(L().dim());
  const std::uint32_t p = L().characteristic();
  for (std::size_t i = 0; i < L().dim(); ++i)
    c.push_back(L().scalar(p ? rng.uniform(0, p - 1) : rng.uniform(-height, height)));
  return L().make(std::move(c));
}

template <class S>
typename GroupAlgebra<S>::Elem GroupAlgebra<S>::random_K_scalar(Rng& rng, long height) const {
  std::vector<S> c;
  const std::uint32_t p = K().characteristic();
  for (std::size_t i = 0; i < K().dim(); ++i)
    c.push_back(K().scalar(p ? rng.uniform(0, p - 1) : rng.uniform(-height, height)));
  return K().make(std::move(c));
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::random_element(Rng& rng, long height) const {
  Vec v = zero();
  for (std::size_t g = 0; g < N(); ++g) v[g] = random_scalar(rng, height);
  return v;
}

template <class S>
typename GroupAlgebra<S>::Vec GroupAlgebra<S>::random_rank(Rng& rng, std::size_t t, long height) const {
  if (t > N()) throw DomainError("rank exceeds N");
  for (int attempt = 0; attempt < 64; ++attempt) {
    LMatrix x(N(), t, K().zero()), y(t, N(), K().zero());
    for (std::size_t i = 0; i < N(); ++i)
      for (std::size_t j = 0; j < t; ++j) x(i, j) = random_K_scalar(rng, height);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < N(); ++j) y(i, j) = random_K_scalar(rng, height);
    LMatrix m = t == 0 ? LMatrix(N(), N(), K().zero()) : x * y;
    if (rank(m) != t) continue;
    return interpolate(m);
  }
  throw InvariantViolation("could not sample an element of rank " + std::to_string(t));
}

template class GroupAlgebra<Rational>;
template class GroupAlgebra<ModP>;

}  // namespace lgrank
