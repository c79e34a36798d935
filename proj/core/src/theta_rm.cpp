// SPDX-License-Identifier: Apache-2.0
#include "lgrank/theta_rm.hpp"

#include <algorithm>
#include <numeric>

namespace lgrank {

std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::grevlex ? "grevlex" : "grlex";
}

std::size_t weight(const MultiIndex& i) {
  return std::accumulate(i.begin(), i.end(), std::size_t{0});
}

bool order_less(const MultiIndex& a, const MultiIndex& b, MonomialOrder o) {
  if (a.size() != b.size()) throw DomainError("monomials with different numbers of variables");
  const std::size_t wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (o == MonomialOrder::grlex) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }
  // grevlex: the smaller exponent in the last differing variable is larger
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

bool revlex_less(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

std::vector<MultiIndex> delta_grid(const std::vector<std::size_t>& n) {
  std::size_t total = 1;
  for (auto x : n) total *= x;
  std::vector<MultiIndex> out;
  out.reserve(total);
  MultiIndex cur(n.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    out.push_back(cur);
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (++cur[k] < n[k]) break;
      cur[k] = 0;
    }
  }
  return out;
}

namespace {

void check_feasible(const std::vector<std::size_t>& a, std::size_t total) {
  if (a.empty()) throw DomainError("f(a, N) needs at least one part");
  std::size_t sum = 0;
  for (auto x : a) {
    if (x == 0) throw DomainError("f(a, N) needs positive parts");
    sum += x;
  }
  if (total < a.size() || total > sum)
    throw DomainError("f(a, N) is infeasible: need m <= N <= sum a_i");
}

std::vector<std::size_t> sorted_desc(std::vector<std::size_t> a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

std::size_t product(const std::vector<std::size_t>& a) {
  std::size_t p = 1;
  for (auto x : a) p *= x;
  return p;
}

std::size_t binom(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::size_t f_min_product_bruteforce(const std::vector<std::size_t>& a, std::size_t total) {
  check_feasible(a, total);
  std::vector<std::size_t> ranges;
  for (auto x : a) ranges.push_back(x);
  std::size_t best = SIZE_MAX;
  for (const auto& idx : delta_grid(ranges)) {
    std::size_t sum = 0, prod = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      sum += idx[i] + 1;
      prod *= idx[i] + 1;
    }
    if (sum == total) best = std::min(best, prod);
  }
  return best;
}

std::size_t f_min_product_closed(const std::vector<std::size_t>& a_in, std::size_t total) {
  check_feasible(a_in, total);
  const auto a = sorted_desc(a_in);
  std::size_t rem = total - a.size(), s = 0, prod = 1;
  while (s < a.size() && rem >= a[s] - 1) {
    rem -= a[s] - 1;
    prod *= a[s];
    ++s;
  }
  return (rem + 1) * prod;
}

std::size_t f_min_product(const std::vector<std::size_t>& a, std::size_t total) {
  const std::size_t brute = f_min_product_bruteforce(a, total);
  const std::size_t closed = f_min_product_closed(a, total);
  if (brute != closed)
    throw InvariantViolation("f(a, N): closed form " + std::to_string(closed) + " vs brute force " +
                             std::to_string(brute));
  return brute;
}

std::size_t rm_max_degree(const std::vector<std::size_t>& n) {
  std::size_t p = 0;
  for (auto x : n) {
    if (x == 0) throw DomainError("group type entries must be positive");
    p += x - 1;
  }
  return p;
}

std::size_t af_lower_bound(const std::vector<std::size_t>& n_in, std::size_t d) {
  if (n_in.empty()) throw DomainError("empty group type");
  for (auto x : n_in)
    if (x < 2) throw DomainError("the bound needs n_i >= 2");
  if (d > rm_max_degree(n_in)) throw DomainError("theta-degree exceeds sum (n_i - 1)");
  const auto n = sorted_desc(n_in);
  std::size_t tail = 0;
  for (std::size_t s = n.size(); s-- > 0;) {
    if (d - tail < n[s]) {
      const std::size_t l = d - tail;
      std::size_t prod = n[s] - l;
      for (std::size_t i = 0; i < s; ++i) prod *= n[i];
      return prod;
    }
    tail += n[s] - 1;
  }
  throw InvariantViolation("no decomposition of the degree found");
}

Rational sz_kernel_bound(const std::vector<std::size_t>& n, std::size_t d) {
  if (n.empty()) throw DomainError("empty group type");
  const std::size_t mn = *std::min_element(n.begin(), n.end());
  return Rational(static_cast<long>(d * product(n)), static_cast<long>(mn));
}

RmDimension rm_dimension_all(std::size_t r, const std::vector<std::size_t>& n) {
  RmDimension out;
  for (const auto& i : delta_grid(n))
    if (weight(i) <= r) ++out.monomial_count;
  // weak compositions with bounded parts, by inclusion-exclusion
  const std::size_t m = n.size();
  for (std::size_t l = 0; l <= r; ++l) {
    long c = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      long shift = 0;
      int bits = 0;
      for (std::size_t k = 0; k < m; ++k)
        if (mask >> k & 1) {
          shift += static_cast<long>(n[k]);
          ++bits;
        }
      const long term = static_cast<long>(binom(static_cast<long>(l) - shift + static_cast<long>(m) - 1,
                                                static_cast<long>(m) - 1));
      c += (bits % 2 ? -term : term);
    }
    out.composition_sum += static_cast<std::size_t>(c);
  }
  // coefficients of prod (1 - z^n_j) / (1 - z) = prod (1 + ... + z^(n_j - 1))
  std::vector<std::size_t> poly{1};
  for (auto nj : n) {
    std::vector<std::size_t> next(poly.size() + nj - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t b = 0; b < nj; ++b) next[a + b] += poly[a];
    poly = std::move(next);
  }
  for (std::size_t l = 0; l <= r && l < poly.size(); ++l) out.generating_function += poly[l];
  return out;
}

std::size_t rm_dimension(std::size_t r, const std::vector<std::size_t>& n) {
  auto d = rm_dimension_all(r, n);
  if (!d.agree())
    throw InvariantViolation("RM dimension: " + std::to_string(d.monomial_count) + " / " +
                             std::to_string(d.composition_sum) + " / " + std::to_string(d.generating_function));
  return d.monomial_count;
}

std::size_t rm_min_distance_bruteforce(std::size_t r, const std::vector<std::size_t>& n) {
  std::size_t best = SIZE_MAX;
  for (const auto& u : delta_grid(n)) {
    if (weight(u) > r) continue;
    std::size_t prod = 1;
    for (std::size_t i = 0; i < n.size(); ++i) prod *= n[i] - u[i];
    best = std::min(best, prod);
  }
  return best;
}

std::size_t rm_min_distance(std::size_t r, const std::vector<std::size_t>& n) {
  const std::size_t p = rm_max_degree(n);
  if (r > p) throw DomainError("r exceeds sum (n_i - 1)");
  const std::size_t closed = r == p ? 1 : af_lower_bound(n, r);
  const std::size_t brute = rm_min_distance_bruteforce(r, n);
  if (closed != brute)
    throw InvariantViolation("RM distance: closed form " + std::to_string(closed) + " vs " + std::to_string(brute));
  return closed;
}

std::size_t classical_rm_distance(std::size_t r, std::size_t n, std::size_t m) {
  if (n < 2) throw DomainError("grid size must be at least 2");
  const std::size_t s = r / (n - 1), l = r % (n - 1);
  if (s >= m) return 1;
  std::size_t d = n - l;
  for (std::size_t i = 0; i + s + 1 < m; ++i) d *= n;
  return d;
}

template <class T>
std::size_t hamming_distance_bruteforce(const Matrix<T>& gen) {
  const std::size_t n = gen.cols();
  if (n > 20) throw BudgetExceeded("Hamming brute force is limited to 20 columns");
  const std::size_t k = rank(gen);
  if (k == 0) throw DomainError("zero code");
  std::size_t best_zeros = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const auto pc = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (pc <= best_zeros) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (rank(gen.submatrix_cols(cols)) < k) best_zeros = pc;
  }
  return n - best_zeros;
}

template <class S>
ThetaAlgebra<S>::ThetaAlgebra(GroupAlgebra<S> alg) : alg_(std::move(alg)), ab_(alg_.ext().abelian()) {
  if (ab_ == nullptr || !alg_.ext().is_abelian())
    throw DomainError("theta-polynomials need an abelian Galois group: " + alg_.ext().spec().summary());
  n_ = ab_->orders;
}

template <class S>
std::size_t ThetaAlgebra<S>::group_index(const MultiIndex& i) const {
  if (i.size() != m()) throw DomainError("multi-index has the wrong number of entries");
  std::size_t t = 0, stride = 1;
  for (std::size_t k = 0; k < m(); ++k) {
    t += (i[k] % n_[k]) * stride;
    stride *= n_[k];
  }
  return ab_->index.at(t);
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::monomial(const MultiIndex& i) const {
  return alg_.group_element(group_index(i));
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::monomial(const MultiIndex& i, const Elem& c) const {
  return alg_.monomial(c, group_index(i));
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::theta(std::size_t i) const {
  return alg_.group_element(ab_->generators.at(i));
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::inv_monomial(const MultiIndex& i) const {
  MultiIndex neg(m());
  for (std::size_t k = 0; k < m(); ++k) neg[k] = (n_[k] - i.at(k) % n_[k]) % n_[k];
  return monomial(neg);
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::theta_minus_one() const {
  return inv_monomial(MultiIndex(m(), 1));
}

template <class S>
std::optional<std::size_t> ThetaAlgebra<S>::degree(const Vec& p) const {
  std::optional<std::size_t> d;
  for (std::size_t g = 0; g < p.size(); ++g)
    if (!p[g].is_zero()) d = std::max(d.value_or(0), weight(exponent(g)));
  return d;
}

template <class S>
MultiIndex ThetaAlgebra<S>::leading_exponent(const Vec& p, MonomialOrder o) const {
  std::optional<MultiIndex> best;
  for (std::size_t g = 0; g < p.size(); ++g) {
    if (p[g].is_zero()) continue;
    const auto& e = exponent(g);
    if (!best || order_less(*best, e, o)) best = e;
  }
  if (!best) throw DomainError("leading term of the zero polynomial");
  return *best;
}

template <class S>
Code<S> ThetaAlgebra<S>::rm_code(std::size_t r) const {
  if (r > max_degree()) throw DomainError("RM order r exceeds sum (n_i - 1)");
  std::vector<Vec> gens;
  for (const auto& i : delta_grid(n_))
    if (weight(i) <= r) gens.push_back(monomial(i));
  return Code<S>::from_generators(alg_, gens);
}

template <class S>
Code<S> ThetaAlgebra<S>::rm_inv_code(std::size_t r) const {
  if (r > max_degree()) throw DomainError("RM order r exceeds sum (n_i - 1)");
  std::vector<Vec> gens;
  for (const auto& i : delta_grid(n_))
    if (weight(i) <= r) gens.push_back(inv_monomial(i));
  return Code<S>::from_generators(alg_, gens);
}

template <class S>
Code<S> ThetaAlgebra<S>::rm_dual_closed(std::size_t r) const {
  const std::size_t p = max_degree();
  if (r > p) throw DomainError("RM order r exceeds sum (n_i - 1)");
  if (r == p) return Code<S>::zero_code(alg_);
  return rm_inv_code(p - r - 1).compose_right(theta_minus_one());
}

template <class S>
Code<S> ThetaAlgebra<S>::rm_dual(std::size_t r) const {
  Code<S> generic = rm_code(r).dual();
  if (generic != rm_dual_closed(r)) throw InvariantViolation("RM dual: closed form differs from the generic dual");
  return generic;
}

template <class S>
bool ThetaAlgebra<S>::rm_dual_evaluation_check(std::size_t r, const Basis<S>& b) const {
  const std::size_t p = max_degree(), n = alg_.N();
  using Sub = Subspace<Elem>;
  Sub lhs = Sub::span(vector_dual(evaluation_code(rm_code(r), b), n));
  if (r == p) return lhs.dim() == 0;
  Basis<S> dual = ext().dual_basis(b);
  MultiIndex minus_one(m());
  for (std::size_t k = 0; k < m(); ++k) minus_one[k] = n_[k] - 1;
  const std::size_t shift = group_index(minus_one);
  std::vector<Elem> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back(ext().apply(shift, dual[j]));
  Code<S> inv = rm_inv_code(p - r - 1);
  Matrix<Elem> rows(0, n, alg_.L().zero());
  for (std::size_t i = 0; i < inv.dim(); ++i) rows.append_row(alg_.ev_vector(inv.basis_vector(i), pts));
  return lhs == Sub::span(rows);
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::annihilator_poly(const std::vector<Elem>& v, std::size_t i) const {
  if (i >= m()) throw DomainError("generator index out of range");
  const auto& ex = ext();
  for (const auto& x : v)
    for (std::size_t j = 0; j < m(); ++j)
      if (j != i && ex.apply(ab_->generators[j], x) != x)
        throw DomainError("annihilator_poly: element is not in the fixed field L_i");
  if (v.size() > n_[i]) throw DomainError("annihilator_poly: dim V exceeds n_i");
  const std::size_t th = ab_->generators[i];
  Vec p = alg_.identity();
  for (const auto& x : v) {
    Elem y = alg_.evaluate(p, x);
    if (y.is_zero()) throw DomainError("annihilator_poly: the given vectors are K-dependent; pass a basis of V");
    Elem c = ex.apply(th, y) * y.inverse();
    p = alg_.compose(alg_.group_element(th), p) - c * p;
  }
  return p;
}

template <class S>
void ThetaAlgebra<S>::require_kummer() const {
  const auto& spec = ext().spec();
  const bool ok = spec.backend == FieldSpec::Backend::tower && m() == spec.radicals.size() &&
                  (spec.base == FieldSpec::Base::cyclotomic || euler_phi(spec.root_of_unity) == 1);
  if (!ok) throw DomainError("this construction needs a Kummer tower with the roots of unity in K");
}

template <class S>
typename ThetaAlgebra<S>::Elem ThetaAlgebra<S>::root_of_unity(std::size_t order) const {
  const long e = ext().spec().root_of_unity;
  if (e % static_cast<long>(order) != 0) throw DomainError("zeta_n is not in K");
  return ext().restrict(ext().zeta().pow(e / static_cast<long>(order)));
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::min_weight_codeword(std::size_t r) const {
  require_kummer();
  if (r > max_degree()) throw DomainError("r exceeds sum (n_i - 1)");
  if (r == 0) return alg_.identity();
  // positions sorted by n descending (stable); s, l refer to this order
  std::vector<std::size_t> pos(m());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [this](std::size_t a, std::size_t b) { return n_[a] > n_[b]; });
  std::size_t s = m(), l = 0, tail = 0;
  for (std::size_t q = m(); q-- > 0;) {
    if (r - tail < n_[pos[q]]) {
      s = q;
      l = r - tail;
      break;
    }
    tail += n_[pos[q]] - 1;
  }
  if (s == m()) throw InvariantViolation("no decomposition of the degree found");
  Vec out = alg_.identity();
  // P_s o P_(s+1) o ... o P_m: build from the right
  for (std::size_t q = m(); q-- > s;) {
    const std::size_t i = pos[q];
    const std::size_t top = q == s ? l : n_[i] - 1;
    std::vector<Elem> v;
    Elem a = ext().radical(i);
    Elem pw = a;
    for (std::size_t k = 1; k <= top; ++k) {
      v.push_back(pw);
      pw = pw * a;
    }
    Vec p = annihilator_poly(v, i);
    Elem at1 = alg_.evaluate(p, alg_.L().one());
    out = alg_.compose(at1.inverse() * p, out);
  }
  return out;
}

template <class S>
Matrix<FieldElement<S>> ThetaAlgebra<S>::classical_rm_generator(std::size_t r) const {
  require_kummer();
  auto rows_idx = delta_grid(n_);
  std::vector<MultiIndex> rows;
  for (const auto& i : rows_idx)
    if (weight(i) <= r) rows.push_back(i);
  std::stable_sort(rows.begin(), rows.end(), revlex_less);
  auto pts = delta_grid(n_);
  std::vector<Elem> zeta;
  for (auto nk : n_) zeta.push_back(root_of_unity(nk));
  const auto& K = ext().K();
  Matrix<Elem> grid(rows.size(), pts.size(), K.zero());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) {
      Elem v = K.one();
      for (std::size_t k = 0; k < m(); ++k) v = v * zeta[k].pow(static_cast<long>((rows[a][k] * pts[b][k]) % n_[k]));
      grid(a, b) = v;
    }
  return grid;
}

namespace {

// Block recursion: rows of block j are zeta^(j c) Y(r - j, t - 1) in column block c.
template <class S>
Matrix<FieldElement<S>> y_recursive(std::size_t r, std::size_t t, const std::vector<std::size_t>& n,
                                    const std::vector<FieldElement<S>>& zeta, const Field<S>& K) {
  if (t == 0) {
    Matrix<FieldElement<S>> one(1, 1, K.zero());
    one(0, 0) = K.one();
    return one;
  }
  const std::size_t nt = n[t - 1];
  std::size_t sub_cols = 1;
  for (std::size_t k = 0; k + 1 < t; ++k) sub_cols *= n[k];
  Matrix<FieldElement<S>> out(0, sub_cols * nt, K.zero());
  for (std::size_t j = 0; j <= std::min(r, nt - 1); ++j) {
    auto sub = y_recursive<S>(r - j, t - 1, n, zeta, K);
    for (std::size_t i = 0; i < sub.rows(); ++i) {
      std::vector<FieldElement<S>> row;
      for (std::size_t c = 0; c < nt; ++c) {
        FieldElement<S> f = zeta[t - 1].pow(static_cast<long>((j * c) % nt));
        for (std::size_t q = 0; q < sub_cols; ++q) row.push_back(f * sub(i, q));
      }
      out.append_row(row);
    }
  }
  return out;
}

}  // namespace

template <class S>
GeneratorFactorization<S> ThetaAlgebra<S>::rm_generator_factorization(std::size_t r) const {
  require_kummer();
  if (r > max_degree()) throw DomainError("r exceeds sum (n_i - 1)");
  GeneratorFactorization<S> f;
  for (const auto& i : delta_grid(n_))
    if (weight(i) <= r) f.rows.push_back(i);
  std::stable_sort(f.rows.begin(), f.rows.end(), revlex_less);
  f.columns = delta_grid(n_);
  const auto& L = alg_.L();
  const auto& K = ext().K();
  const std::size_t n = alg_.N();
  std::vector<Elem> basis;
  for (const auto& j : f.columns) {
    Elem b = L.one();
    for (std::size_t k = 0; k < m(); ++k) b = b * ext().radical(k).pow(static_cast<long>(j[k]));
    basis.push_back(b);
  }
  f.g = Matrix<Elem>(0, n, L.zero());
  for (const auto& i : f.rows) f.g.append_row(alg_.ev_vector(monomial(i), basis));
  f.diag = Matrix<Elem>(n, n, L.zero());
  for (std::size_t c = 0; c < n; ++c) f.diag(c, c) = basis[c];
  std::vector<Elem> zeta;
  for (auto nk : n_) zeta.push_back(root_of_unity(nk));
  f.y = y_recursive<S>(r, m(), n_, zeta, K);
  f.grid = classical_rm_generator(r);
  Matrix<Elem> yl(f.y.rows(), f.y.cols(), L.zero());
  for (std::size_t a = 0; a < f.y.rows(); ++a)
    for (std::size_t b = 0; b < f.y.cols(); ++b) yl(a, b) = ext().embed(f.y(a, b));
  f.factorization_holds = f.y.rows() == f.g.rows() && f.g == yl * f.diag;
  f.grid_matches = f.y == f.grid;
  if (n <= 16) f.hamming_distance = hamming_distance_bruteforce(f.y);
  const bool uniform = std::all_of(n_.begin(), n_.end(), [this](std::size_t x) { return x == n_[0]; });
  if (uniform) f.hamming_formula = classical_rm_distance(r, n_[0], m());
  return f;
}

template <class S>
typename ThetaAlgebra<S>::Vec ThetaAlgebra<S>::random_polynomial(Rng& rng, long height) const {
  const std::size_t top = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_degree())));
  Vec p = alg_.zero();
  for (;;) {
    for (const auto& i : delta_grid(n_)) {
      if (weight(i) > top || rng.uniform(0, 1) == 0) continue;
      Elem c = alg_.random_scalar(rng, height);
      p[group_index(i)] = c;
    }
    if (!p.is_zero()) return p;
  }
}

template <class S>
AfReport ThetaAlgebra<S>::af_random_property_suite(std::size_t trials, std::uint64_t seed, long height) const {
  AfReport rep;
  rep.trials = trials;
  const std::size_t total = std::accumulate(n_.begin(), n_.end(), std::size_t{0});
  const std::size_t big_n = alg_.N();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::split(seed, t));
    Vec p = random_polynomial(rng, height);
    const std::size_t d = *degree(p);
    const std::size_t rk = alg_.rank_fast(p);
    auto fail = [&](const std::string& what, const std::string& bound) {
      rep.violations.push_back({t, what, rk, bound});
    };
    ++rep.checks;
    const std::size_t af = af_lower_bound(n_, d);
    if (rk < af) fail("alon-furedi", std::to_string(af));
    ++rep.checks;
    const Rational sz = sz_kernel_bound(n_, d);
    if (sz < Rational(static_cast<long>(big_n - rk))) fail("schwartz-zippel kernel", sz.str());
    for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex}) {
      const auto u = leading_exponent(p, o);
      std::size_t z = 1;
      for (std::size_t k = 0; k < m(); ++k) z *= n_[k] - u[k];
      ++rep.checks;
      if (rk < z) fail("leading term " + order_name(o), std::to_string(z));
      ++rep.checks;
      const std::size_t f = f_min_product(n_, total - weight(u));
      if (rk < f) fail("f(n, sum n - |lt|) " + order_name(o), std::to_string(f));
    }
  }
  return rep;
}

template class ThetaAlgebra<Rational>;
template class ThetaAlgebra<ModP>;
template std::size_t hamming_distance_bruteforce(const Matrix<FieldElement<Rational>>&);
template std::size_t hamming_distance_bruteforce(const Matrix<FieldElement<ModP>>&);

}  // namespace lgrank
