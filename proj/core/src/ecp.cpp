// SPDX-License-Identifier: Apache-2.0
#include "lgrank/ecp.hpp"

#include <chrono>
#include <cmath>

namespace lgrank {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::closed_form:
      return "closed-form";
    case Provenance::brute_force:
      return "brute-force";
    case Provenance::assumed:
      return "assumed";
  }
  return "?";
}

template <class S>
bool ErrorCorrectingPair<S>::verified() const {
  for (const auto* f : {&d_a, &d_b_dual, &d_c})
    if (!f->has_value() || (*f)->source == Provenance::assumed) return false;
  return true;
}

template <class S>
std::vector<std::string> pair_violations(const ErrorCorrectingPair<S>& pair) {
  std::vector<std::string> out;
  if (pair.a.length() != pair.c.length() || pair.b.length() != pair.c.length())
    throw DomainError("pair codes live in different ambients");
  if (!pair.c.dual().contains(product_code(pair.b, pair.a))) out.push_back("B o A is not inside C^perp");
  if (pair.a.dim() <= pair.t) out.push_back("dim A <= t");
  if (pair.d_b_dual && pair.d_b_dual->value <= pair.t) out.push_back("d(B^perp) <= t");
  if (pair.d_a && pair.d_c && pair.d_a->value + pair.d_c->value <= pair.c.length())
    out.push_back("d(A) + d(C) <= N");
  return out;
}

template <class S>
KSubspace<S> compute_K(const LGElement<S>& r, const Code<S>& a, const Code<S>& b) {
  const auto& ext = a.ext();
  const std::size_t n = a.length();
  if (r.size() != n || b.length() != n) throw DomainError("compute_K: length mismatch");
  const auto& beta = ext.canonical_basis();
  const auto kz = ext.K().zero();
  // image[g'][j] = g'(beta_j)
  std::vector<std::vector<FieldElement<S>>> image(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < n; ++j) image[g].push_back(ext.apply(g, beta[j]));

  Matrix<FieldElement<S>> sys(0, n * n, kz);
  auto push_l_equation = [&](const std::vector<FieldElement<S>>& coeff) {
    // coeff[g*n + j] in L; one K-row per canonical coordinate of the value
    std::vector<std::vector<FieldElement<S>>> rows(n, std::vector<FieldElement<S>>(n * n, kz));
    for (std::size_t u = 0; u < n * n; ++u) {
      if (coeff[u].is_zero()) continue;
      auto co = ext.coordinates(coeff[u]);
      for (std::size_t q = 0; q < n; ++q) rows[q][u] = co[q];
    }
    for (auto& row : rows) sys.append_row(row);
  };

  // <b_h o (beta_j g), r> = sum_g' b_{h,g'} g'(beta_j) r_{g' g}
  for (std::size_t h = 0; h < b.dim(); ++h) {
    auto bh = b.basis_vector(h);
    std::vector<FieldElement<S>> coeff(n * n, ext.L().zero());
    for (std::size_t gp = 0; gp < n; ++gp) {
      if (bh[gp].is_zero()) continue;
      for (std::size_t g = 0; g < n; ++g) {
        const auto& rv = r[ext.compose(gp, g)];
        if (rv.is_zero()) continue;
        const auto w = bh[gp] * rv;
        for (std::size_t j = 0; j < n; ++j) coeff[g * n + j] += w * image[gp][j];
      }
    }
    push_l_equation(coeff);
  }
  // x in A: <x, u_l> = 0 for a basis of A^perp
  Code<S> ad = a.dual();
  for (std::size_t l = 0; l < ad.dim(); ++l) {
    auto u = ad.basis_vector(l);
    std::vector<FieldElement<S>> coeff(n * n, ext.L().zero());
    for (std::size_t g = 0; g < n; ++g)
      if (!u[g].is_zero())
        for (std::size_t j = 0; j < n; ++j) coeff[g * n + j] = beta[j] * u[g];
    push_l_equation(coeff);
  }
  if (sys.rows() == 0) return KSubspace<S>::full(n * n, kz, ext.K().one());
  return KSubspace<S>::span(kernel_basis(sys));
}

template <class S>
DecodeResult<S> decode(const ErrorCorrectingPair<S>& pair, const LGElement<S>& r) {
  const auto& c = pair.c;
  const auto& ext = c.ext();
  const auto& alg = c.algebra();
  const std::size_t n = c.length();
  if (r.size() != n) throw DomainError("decode: received word has the wrong length");
  DecodeResult<S> out;
  KSubspace<S> kr = compute_K(r, pair.a, pair.b);
  if (kr.dim() == 0) {
    out.failure = "K(r) = {0}";
    return out;
  }
  LGElement<S> a = from_k_coordinates(ext, kr.vector(0));
  KSubspace<S> jperp = orth_complement_trace(ext, alg.kernel_subspace(a));
  auto ws = k_elements(ext, jperp);
  Code<S> cd = c.dual();
  // unknowns c_g, last column carries -rhs
  Matrix<FieldElement<S>> sys(0, n + 1, ext.L().zero());
  for (std::size_t i = 0; i < cd.dim(); ++i) {
    auto row = cd.basis_vector(i).coeffs();
    row.push_back(ext.L().zero());
    sys.append_row(row);
  }
  for (const auto& w : ws) {
    std::vector<FieldElement<S>> row;
    for (std::size_t g = 0; g < n; ++g) row.push_back(ext.apply(g, w));
    row.push_back(-alg.evaluate(r, w));
    sys.append_row(row);
  }
  Matrix<FieldElement<S>> ker = kernel_basis(sys);
  if (ker.rows() == 0 || ker(0, n).is_zero()) {
    out.failure = "no codeword agrees with r on J^perp";
    return out;
  }
  if (ker.rows() > 1) {
    out.failure = "codeword is not unique";
    return out;
  }
  const auto scale = ker(0, n).inverse();
  std::vector<FieldElement<S>> cw;
  for (std::size_t g = 0; g < n; ++g) cw.push_back(ker(0, g) * scale);
  out.codeword = LGElement<S>(std::move(cw));
  return out;
}

template <class S>
ErrorCorrectingPair<S> rm_ecp_construct(const ThetaAlgebra<S>& th, std::size_t r, std::size_t a, std::size_t b) {
  const auto& n = th.type();
  const std::size_t p = th.max_degree(), big_n = th.algebra().N();
  if (r > p) throw DomainError("RM order r exceeds sum (n_i - 1)");
  if (r + 1 > p || a + b > p - r - 1) throw DomainError("ECP condition a + b <= p - r - 1 violated");
  const std::size_t ka = rm_dimension(a, n);
  const std::size_t db = rm_min_distance(p - 1 - b, n);
  const std::size_t da = rm_min_distance(a, n), dc = rm_min_distance(r, n);
  const std::size_t t = std::min(ka, db) - 1;
  if (ka <= t) throw DomainError("ECP condition k(a) > t violated");
  if (db <= t) throw DomainError("ECP condition d(p-1-b) > t violated");
  if (da + dc <= big_n) throw DomainError("ECP condition d(a) + d(r) > N violated");
  // (X o g)^perp = X^perp o g, so C^perp = RM_inv(p-r-1) o theta^(-2); A carries the extra shift
  const auto& alg = th.algebra();
  const auto shift = alg.compose(th.theta_minus_one(), th.theta_minus_one());
  ErrorCorrectingPair<S> pair{th.rm_inv_code(a).compose_right(shift), th.rm_inv_code(b),
                              th.rm_code(r).compose_right(th.theta_minus_one()),
                              t, DistanceFact{da, Provenance::closed_form},
                              DistanceFact{db, Provenance::closed_form}, DistanceFact{dc, Provenance::closed_form}};
  if (!pair.c.dual().contains(product_code(pair.b, pair.a)))
    throw InvariantViolation("ECP construction: B o A is not inside C^perp");
  return pair;
}

TmaxResult t_max_search(std::size_t r, const std::vector<std::size_t>& n) {
  const std::size_t p = rm_max_degree(n);
  std::size_t big_n = 1;
  for (auto x : n) big_n *= x;
  if (r > p) throw DomainError("RM order r exceeds sum (n_i - 1)");
  TmaxResult out;
  const std::size_t dr = rm_min_distance(r, n);
  bool found = false;
  if (r + 1 <= p)
    for (std::size_t a = 0; a <= p - r - 1; ++a)
      for (std::size_t b = 0; a + b <= p - r - 1; ++b) {
        if (rm_min_distance(a, n) + dr <= big_n) continue;
        const std::size_t t = std::min(rm_dimension(a, n), rm_min_distance(p - 1 - b, n)) - 1;
        if (!found || t > out.t_exhaustive) {
          out.t_exhaustive = t;
          out.a = a;
          out.b = b;
          found = true;
        }
      }
  if (n.size() == 2 && n[0] == n[1]) {
    const double nn = static_cast<double>(n[0]), rr = static_cast<double>(r);
    out.alpha = -nn - 1.5 + std::sqrt(3 * nn * nn + (3 - 2 * rr) * nn + 0.25);
    const double fl = std::floor(out.alpha), ce = std::ceil(out.alpha);
    // outside the valid ranges the expression gives no pair
    if (fl < 0 || ce + rr > static_cast<double>(p)) {
      out.t_closed_form = 0;
    } else {
      const std::size_t k = rm_dimension(static_cast<std::size_t>(fl), n);
      const std::size_t d = rm_min_distance(static_cast<std::size_t>(ce) + r, n);
      out.t_closed_form = std::min(k, d) - 1;
    }
  }
  return out;
}

double unique_radius(double gamma) { return (1 - gamma) / 2; }
double ecp_radius(double gamma) { return 2 - gamma - std::sqrt(3 - 2 * gamma); }

template <class S>
LGElement<S> random_rank_error(const GroupAlgebra<S>& alg, std::size_t t, std::uint64_t seed, long height) {
  if (t < 1 || t > alg.N()) throw DomainError("error rank must be in [1, N]");
  Rng rng(seed);
  LGElement<S> e = alg.random_rank(rng, t, height);
  if (alg.rank_fast(e) != t) throw InvariantViolation("sampled error has the wrong rank");
  return e;
}

template <class S>
RoundtripReport ecp_roundtrip(const ErrorCorrectingPair<S>& pair, std::size_t t, std::size_t trials,
                              std::uint64_t seed, long height) {
  const auto start = std::chrono::steady_clock::now();
  const auto& alg = pair.c.algebra();
  RoundtripReport rep;
  rep.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(Rng::split(seed, i));
    std::vector<FieldElement<S>> msg;
    for (std::size_t k = 0; k < pair.c.dim(); ++k) msg.push_back(alg.random_scalar(rng, height));
    LGElement<S> cw = pair.c.combine(msg);
    LGElement<S> r = cw;
    if (t > 0) r += random_rank_error(alg, t, rng.next(), height);
    auto res = decode(pair, r);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
      for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
      h = (h ^ 0xff) * 0x100000001b3ULL;
    };
    for (std::size_t g = 0; g < r.size(); ++g) mix(r[g].str());
    if (!res.ok()) {
      ++rep.failures;
      mix("fail");
    } else {
      for (std::size_t g = 0; g < res.codeword->size(); ++g) mix((*res.codeword)[g].str());
      if (*res.codeword == cw)
        ++rep.successes;
      else
        ++rep.miscorrected;
    }
    rep.digests.push_back(h);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

template <class S>
EcpPropertyReport ecp_property_checks(const ErrorCorrectingPair<S>& pair, std::size_t error_rank,
                                      std::size_t trials, std::uint64_t seed) {
  const auto& alg = pair.c.algebra();
  EcpPropertyReport rep;
  rep.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(Rng::split(seed, i));
    LGElement<S> e = random_rank_error(alg, error_rank, rng.next());
    std::vector<FieldElement<S>> msg;
    for (std::size_t k = 0; k < pair.c.dim(); ++k) msg.push_back(alg.random_scalar(rng, 2));
    LGElement<S> cw = pair.c.combine(msg);
    KSubspace<S> ke = compute_K(e, pair.a, pair.b);
    if (compute_K(cw + e, pair.a, pair.b) != ke) rep.k_translation = false;
    LGElement<S> x = alg.random_element(rng, 2), y = alg.random_element(rng, 2);
    if (alg.inner(alg.compose(y, x), e) != alg.inner(y, alg.compose(e, alg.adjoint(x)))) rep.adjunction = false;
    if (!pair.d_b_dual || error_rank < pair.d_b_dual->value)
      if (k_expansion(shorten(pair.a, alg.support(e))) != ke) rep.shortening = false;
  }
  return rep;
}

#define LGRANK_ECP(S)                                                                                          \
  template struct ErrorCorrectingPair<S>;                                                                     \
  template std::vector<std::string> pair_violations(const ErrorCorrectingPair<S>&);                           \
  template KSubspace<S> compute_K(const LGElement<S>&, const Code<S>&, const Code<S>&);                       \
  template DecodeResult<S> decode(const ErrorCorrectingPair<S>&, const LGElement<S>&);                        \
  template ErrorCorrectingPair<S> rm_ecp_construct(const ThetaAlgebra<S>&, std::size_t, std::size_t,          \
                                                   std::size_t);                                              \
  template LGElement<S> random_rank_error(const GroupAlgebra<S>&, std::size_t, std::uint64_t, long);          \
  template RoundtripReport ecp_roundtrip(const ErrorCorrectingPair<S>&, std::size_t, std::size_t,             \
                                         std::uint64_t, long);                                                \
  template EcpPropertyReport ecp_property_checks(const ErrorCorrectingPair<S>&, std::size_t, std::size_t,     \
                                                 std::uint64_t);

LGRANK_ECP(Rational)
LGRANK_ECP(ModP)

}  // namespace lgrank
