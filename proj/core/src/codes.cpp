// SPDX-License-Identifier: Apache-2.0
#include "lgrank/codes.hpp"

#include <algorithm>

namespace lgrank {

template <class S>
Code<S>::Code(GroupAlgebra<S> alg, Subspace<Elem> space) : alg_(std::move(alg)), space_(std::move(space)) {
  if (space_.ambient_dim() != alg_.N()) throw DomainError("code space has the wrong length");
}

template <class S>
Code<S> Code<S>::from_generators(const GroupAlgebra<S>& alg, const std::vector<Vec>& gens) {
  LMatrix m(0, alg.N(), alg.L().zero());
  for (const auto& g : gens) {
    if (g.size() != alg.N()) throw DomainError("generator has the wrong length");
    m.append_row(g.coeffs());
  }
  return Code(alg, Subspace<Elem>::span(m));
}

template <class S>
Code<S> Code<S>::zero_code(const GroupAlgebra<S>& alg) {
  return Code(alg, Subspace<Elem>(alg.N(), alg.L().zero()));
}

template <class S>
Code<S> Code<S>::full(const GroupAlgebra<S>& alg) {
  return Code(alg, Subspace<Elem>::full(alg.N(), alg.L().zero(), alg.L().one()));
}

template <class S>
std::vector<typename Code<S>::Vec> Code<S>::basis() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

template <class S>
typename Code<S>::Vec Code<S>::combine(const std::vector<Elem>& lambda) const {
  if (lambda.size() != dim()) throw DomainError("message length differs from the code dimension");
  Vec out = alg_.zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lambda[i].is_zero()) continue;
    out += lambda[i] * basis_vector(i);
  }
  return out;
}

template <class S>
Code<S> Code<S>::dual() const {
  return Code(alg_, Subspace<Elem>::span(vector_dual(space_.basis(), length())));
}

template <class S>
Code<S> Code<S>::sum(const Code& o) const {
  return Code(alg_, space_.sum(o.space_));
}

template <class S>
Code<S> Code<S>::intersect(const Code& o) const {
  return Code(alg_, space_.intersect(o.space_));
}

template <class S>
Code<S> Code<S>::compose_right(const Vec& h) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(alg_.compose(basis_vector(i), h));
  return from_generators(alg_, gens);
}

template <class S>
Matrix<FieldElement<S>> evaluation_code(const Code<S>& c, const Basis<S>& b) {
  Matrix<FieldElement<S>> m(0, c.length(), c.ext().L().zero());
  for (std::size_t i = 0; i < c.dim(); ++i) m.append_row(c.algebra().ev_vector(c.basis_vector(i), b.elements()));
  return m;
}

template <class S>
Matrix<FieldElement<S>> ext_matrix(const Extension<S>& ext, const std::vector<FieldElement<S>>& v,
                                   const Basis<S>& b) {
  Matrix<FieldElement<S>> m(ext.degree(), v.size(), ext.K().zero());
  for (std::size_t j = 0; j < v.size(); ++j) {
    auto co = b.coordinates(v[j]);
    for (std::size_t i = 0; i < ext.degree(); ++i) m(i, j) = co[i];
  }
  return m;
}

template <class S>
std::vector<Matrix<FieldElement<S>>> ext_matrix_code(const Code<S>& c, const Basis<S>& b1, const Basis<S>& b2) {
  std::vector<Matrix<FieldElement<S>>> out;
  const auto& beta = c.ext().canonical_basis();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j)
      out.push_back(c.algebra().endo_matrix(beta[j] * c.basis_vector(i), b1, b2));
  return out;
}

template <class S>
std::vector<Matrix<FieldElement<S>>> ext_vector_code(const Extension<S>& ext, const Matrix<FieldElement<S>>& gen,
                                                     const Basis<S>& b) {
  std::vector<Matrix<FieldElement<S>>> out;
  const auto& beta = ext.canonical_basis();
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    auto row = gen.row(i);
    for (std::size_t j = 0; j < beta.size(); ++j) {
      std::vector<FieldElement<S>> v;
      for (const auto& x : row) v.push_back(beta[j] * x);
      out.push_back(ext_matrix(ext, v, b));
    }
  }
  return out;
}

template <class S>
KSubspace<S> matrix_span(const std::vector<Matrix<FieldElement<S>>>& ms, std::size_t rows, std::size_t cols,
                         const FieldElement<S>& zero) {
  Matrix<FieldElement<S>> flat(0, rows * cols, zero);
  for (const auto& m : ms) {
    if (m.rows() != rows || m.cols() != cols) throw DomainError("matrix code: shape mismatch");
    std::vector<FieldElement<S>> v;
    v.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) v.push_back(m(i, j));
    flat.append_row(v);
  }
  return KSubspace<S>::span(flat);
}

template <class S>
std::vector<FieldElement<S>> k_coordinates(const Extension<S>& ext, const LGElement<S>& a) {
  std::vector<FieldElement<S>> out;
  out.reserve(a.size() * ext.degree());
  for (std::size_t g = 0; g < a.size(); ++g) {
    auto co = ext.coordinates(a[g]);
    out.insert(out.end(), co.begin(), co.end());
  }
  return out;
}

template <class S>
LGElement<S> from_k_coordinates(const Extension<S>& ext, const std::vector<FieldElement<S>>& x) {
  const std::size_t n = ext.degree();
  if (x.size() != n * n) throw DomainError("K-coordinate vector of an L[G] element needs N^2 entries");
  std::vector<FieldElement<S>> c;
  for (std::size_t g = 0; g < n; ++g)
    c.push_back(ext.from_coordinates(std::vector<FieldElement<S>>(x.begin() + g * n, x.begin() + (g + 1) * n)));
  return LGElement<S>(std::move(c));
}

template <class S>
KSubspace<S> k_expansion(const Code<S>& c) {
  const std::size_t n = c.length();
  Matrix<FieldElement<S>> m(0, n * n, c.ext().K().zero());
  const auto& beta = c.ext().canonical_basis();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.append_row(k_coordinates(c.ext(), beta[j] * c.basis_vector(i)));
  return KSubspace<S>::span(m);
}

template <class S>
Code<S> shorten(const Code<S>& c, const KSubspace<S>& i) {
  const auto& ext = c.ext();
  if (i.ambient_dim() != ext.degree()) throw DomainError("shortening subspace is not inside L");
  if (i.dim() == 0 || c.dim() == 0) return c;
  auto ws = k_elements(ext, i);
  Matrix<FieldElement<S>> cond(ws.size(), c.dim(), ext.L().zero());
  for (std::size_t k = 0; k < ws.size(); ++k)
    for (std::size_t j = 0; j < c.dim(); ++j) cond(k, j) = c.algebra().evaluate(c.basis_vector(j), ws[k]);
  Matrix<FieldElement<S>> lam = kernel(cond);
  std::vector<LGElement<S>> gens;
  for (std::size_t r = 0; r < lam.rows(); ++r) gens.push_back(c.combine(lam.row(r)));
  return Code<S>::from_generators(c.algebra(), gens);
}

template <class S>
Code<S> product_code(const Code<S>& b, const Code<S>& a) {
  const auto& alg = a.algebra();
  const auto& beta = a.ext().canonical_basis();
  std::vector<LGElement<S>> gens;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t l = 0; l < a.dim(); ++l) {
      auto al = a.basis_vector(l);
      for (std::size_t j = 0; j < beta.size(); ++j) gens.push_back(alg.compose(b.basis_vector(i), beta[j] * al));
    }
  return Code<S>::from_generators(alg, gens);
}

namespace {

std::size_t rank_mod_p(std::vector<std::uint32_t> m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const std::uint64_t iv = inv(m[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i * cols + c] * iv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = static_cast<std::uint32_t>((m[i * cols + j] + (p - f) * m[r * cols + j]) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t min_distance_bruteforce(const Code<ModP>& c, std::uint64_t budget) {
  const auto& ext = c.ext();
  if (ext.spec().backend != FieldSpec::Backend::finite)
    throw DomainError("brute-force minimum distance needs a finite field; use sampled bounds");
  const std::size_t n = c.length(), k = c.dim();
  if (k == 0) throw DomainError("the zero code has no minimum distance");
  const std::size_t dl = ext.L().dim();  // = n, since K is the prime field
  const std::uint32_t p = ext.L().characteristic();
  const std::size_t digits = dl * k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (total > budget / p) throw BudgetExceeded("enumeration of p^(N k) codewords exceeds the budget");
    total *= p;
  }
  // contribution of the prime-basis element u times c_i to ev_B, as an n x n matrix over F_p
  const auto& b = ext.canonical_basis();
  std::vector<std::vector<std::uint32_t>> contrib;
  for (std::size_t i = 0; i < k; ++i) {
    auto ev = c.algebra().ev_vector(c.basis_vector(i), b.elements());
    for (std::size_t u = 0; u < dl; ++u) {
      std::vector<std::uint32_t> m(n * n, 0);
      auto bu = ext.L().monomial(u);
      for (std::size_t j = 0; j < n; ++j) {
        auto co = (bu * ev[j]).coeffs();
        for (std::size_t r = 0; r < n; ++r) m[r * n + j] = co[r].value();
      }
      contrib.push_back(std::move(m));
    }
  }
  std::size_t best = n;
  std::vector<std::uint32_t> digit(digits, 0), acc(n * n);
  for (std::uint64_t t = 1; t < total; ++t) {
    for (std::size_t d = 0; d < digits; ++d) {
      if (++digit[d] < p) break;
      digit[d] = 0;
    }
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t d = 0; d < digits; ++d) {
      if (digit[d] == 0) continue;
      const auto& m = contrib[d];
      for (std::size_t e = 0; e < n * n; ++e) acc[e] = (acc[e] + digit[d] * m[e]) % p;
    }
    std::size_t r = rank_mod_p(acc, n, n, p);
    if (r < best) best = r;
    if (best == 1) break;
  }
  return best;
}

template <class S>
std::size_t min_rank_sampled_bound(const Code<S>& c, std::size_t trials, std::uint64_t seed, long height,
                                   const std::vector<LGElement<S>>& extra) {
  const auto& alg = c.algebra();
  std::size_t best = c.length();
  bool any = false;
  for (const auto& x : extra) {
    if (!c.contains(x)) throw DomainError("injected candidate is not a codeword");
    if (x.is_zero()) continue;
    best = std::min(best, alg.rank_fast(x));
    any = true;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::split(seed, t));
    std::vector<FieldElement<S>> lam;
    for (std::size_t i = 0; i < c.dim(); ++i) lam.push_back(alg.random_scalar(rng, height));
    auto x = c.combine(lam);
    if (x.is_zero()) continue;
    best = std::min(best, alg.rank_fast(x));
    any = true;
  }
  if (!any) throw DomainError("no nonzero codeword was sampled");
  return best;
}

template <class S>
bool dual_lg_check(const Code<S>& c, const Basis<S>& b) {
  const auto& ext = c.ext();
  if (!ext.is_abelian()) throw DomainError("L[G] duality needs an abelian group");
  auto lhs = Subspace<FieldElement<S>>::span(evaluation_code(c.dual(), b));
  auto rhs = Subspace<FieldElement<S>>::span(vector_dual(evaluation_code(c, ext.dual_basis(b)), c.length()));
  return lhs == rhs;
}

template <class S>
bool matrix_duality_check(const Code<S>& c, const Basis<S>& b) {
  const auto& ext = c.ext();
  const std::size_t n = c.length();
  auto v = evaluation_code(c, b);
  auto lhs = matrix_code_dual(matrix_span(ext_vector_code(ext, v, b), n, n, ext.K().zero()));
  auto rhs = matrix_span(ext_vector_code(ext, vector_dual(v, n), ext.dual_basis(b)), n, n, ext.K().zero());
  return lhs == rhs;
}

template <class S>
bool change_of_basis_check(const Code<S>& c, const Basis<S>& b1, const Basis<S>& b2) {
  const auto& ext = c.ext();
  const std::size_t n = c.length();
  Matrix<FieldElement<S>> x(n, n, ext.L().zero());
  for (std::size_t j = 0; j < n; ++j) {
    auto co = b2.coordinates(b1[j]);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = ext.embed(co[i]);
  }
  return evaluation_code(c, b1) == evaluation_code(c, b2) * x;
}

template <class S>
bool dual_normal_basis_check(const Extension<S>& ext, const FieldElement<S>& alpha) {
  std::vector<FieldElement<S>> orbit;
  for (std::size_t g = 0; g < ext.degree(); ++g) orbit.push_back(ext.apply(g, alpha));
  auto dual = ext.dual_basis(ext.make_basis(orbit));
  const auto& beta = dual[ext.identity()];
  for (std::size_t g = 0; g < ext.degree(); ++g)
    if (dual[g] != ext.apply(g, beta)) return false;
  return true;
}

#define LGRANK_CODES(S)                                                                                      \
  template class Code<S>;                                                                                    \
  template Matrix<FieldElement<S>> evaluation_code(const Code<S>&, const Basis<S>&);                       \
  template Matrix<FieldElement<S>> ext_matrix(const Extension<S>&, const std::vector<FieldElement<S>>&,   \
                                              const Basis<S>&);                                            \
  template std::vector<Matrix<FieldElement<S>>> ext_matrix_code(const Code<S>&, const Basis<S>&,            \
                                                                const Basis<S>&);                          \
  template std::vector<Matrix<FieldElement<S>>> ext_vector_code(const Extension<S>&,                        \
                                                                const Matrix<FieldElement<S>>&,            \
                                                                const Basis<S>&);                          \
  template KSubspace<S> matrix_span(const std::vector<Matrix<FieldElement<S>>>&, std::size_t, std::size_t, \
                                    const FieldElement<S>&);                                               \
  template std::vector<FieldElement<S>> k_coordinates(const Extension<S>&, const LGElement<S>&);           \
  template LGElement<S> from_k_coordinates(const Extension<S>&, const std::vector<FieldElement<S>>&);      \
  template KSubspace<S> k_expansion(const Code<S>&);                                                       \
  template Code<S> shorten(const Code<S>&, const KSubspace<S>&);                                           \
  template Code<S> product_code(const Code<S>&, const Code<S>&);                                           \
  template std::size_t min_rank_sampled_bound(const Code<S>&, std::size_t, std::uint64_t, long,            \
                                              const std::vector<LGElement<S>>&);                           \
  template bool dual_lg_check(const Code<S>&, const Basis<S>&);                                            \
  template bool matrix_duality_check(const Code<S>&, const Basis<S>&);                                     \
  template bool change_of_basis_check(const Code<S>&, const Basis<S>&, const Basis<S>&);                   \
  template bool dual_normal_basis_check(const Extension<S>&, const FieldElement<S>&);

LGRANK_CODES(Rational)
LGRANK_CODES(ModP)

}  // namespace lgrank
