// SPDX-License-Identifier: Apache-2.0
#include "lgrank/field.hpp"

#include <sstream>

namespace lgrank {

template <class S>
bool FieldElement<S>::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

template <class S>
void FieldElement<S>::adopt(const FieldElement& o) {
  if (f_ == nullptr && o.f_ != nullptr) {
    f_ = o.f_;
    c_ = o.f_->zero().coeffs();
  }
  if (o.f_ != nullptr && f_ != o.f_ && c_.size() != o.c_.size())
    throw DomainError("field elements from different fields: " + f_->name() + " vs " +
                      o.f_->name());
}

template <class S>
FieldElement<S>& FieldElement<S>::operator*=(const FieldElement& o) {
  if (o.f_ == nullptr) {
    for (auto& x : c_) x = S{} * x;
    return *this;
  }
  adopt(o);
  std::vector<S> out;
  f_->multiply(c_, o.c_, out);
  c_ = std::move(out);
  return *this;
}

template <class S>
FieldElement<S> FieldElement<S>::inverse() const {
  if (f_ == nullptr) throw SingularMatrixError("inverse of zero");
  return f_->inverse(*this);
}

template <class S>
FieldElement<S> FieldElement<S>::pow(long e) const {
  if (f_ == nullptr) throw DomainError("pow of an unbound element");
  if (e < 0) return inverse().pow(-e);
  FieldElement r = f_->one();
  FieldElement b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

template <class S>
std::string FieldElement<S>::str() const {
  if (f_ == nullptr) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].str();
    auto ex = f_->exponents(i);
    std::string mono;
    for (std::size_t v = 0; v < ex.size(); ++v) {
      if (ex[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f_->variables()[v].name;
      if (ex[v] > 1) mono += "^" + std::to_string(ex[v]);
    }
    bool neg = !coef.empty() && coef[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) coef = coef.substr(1);
    if (mono.empty()) {
      os << coef;
    } else {
      if (coef != "1") os << coef << "*";
      os << mono;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

template <class S>
Field<S>::Field(std::string name, std::uint32_t characteristic, std::vector<Variable<S>> vars,
                const Field* base)
    : name_(std::move(name)), p_(characteristic), vars_(std::move(vars)), base_(base) {
  for (const auto& v : vars_) {
    if (v.degree < 1 || v.tail.size() != v.degree)
      throw DomainError("variable " + v.name + ": relation tail must have `degree` entries");
    radix_.push_back(v.degree);
    dim_ *= v.degree;
  }
  if (base_ != nullptr) {
    if (base_->vars_.size() > vars_.size()) throw DomainError("base has more variables");
    for (std::size_t i = 0; i < base_->vars_.size(); ++i)
      if (base_->vars_[i].degree != vars_[i].degree || !(base_->vars_[i].tail == vars_[i].tail))
        throw DomainError("base variables must lead this field's variables");
  }
  // powers x_k^e reduced, for 0 <= e <= 2(d_k - 1)
  std::vector<std::vector<std::vector<S>>> pw(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const std::size_t d = vars_[k].degree;
    std::size_t top = 2 * (d - 1);
    for (std::size_t e = 0; e <= top; ++e) {
      std::vector<S> v(d, scalar(0));
      if (e < d) {
        v[e] = scalar(1);
      } else {
        const auto& prev = pw[k][e - 1];
        // x * prev, then fold x^d
        S carry = prev[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) v[i] = prev[i - 1];
        v[0] = scalar(0);
        for (std::size_t i = 0; i < d; ++i) v[i] += carry * vars_[k].tail[i];
      }
      pw[k].push_back(std::move(v));
    }
  }
  std::vector<std::size_t> stride(vars_.size(), 1);
  for (std::size_t k = 1; k < vars_.size(); ++k) stride[k] = stride[k - 1] * radix_[k - 1];

  table_.assign(dim_ * dim_, {});
  for (std::size_t u = 0; u < dim_; ++u) {
    auto eu = exponents(u);
    for (std::size_t w = u; w < dim_; ++w) {
      auto ew = exponents(w);
      std::vector<Term> terms{{0, scalar(1)}};
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        const auto& pv = pw[k][eu[k] + ew[k]];
        std::vector<Term> next;
        for (const auto& t : terms)
          for (std::size_t j = 0; j < pv.size(); ++j)
            if (!pv[j].is_zero())
              next.push_back({static_cast<std::uint32_t>(t.index + j * stride[k]), t.coeff * pv[j]});
        terms = std::move(next);
      }
      table_[u * dim_ + w] = terms;
      table_[w * dim_ + u] = std::move(terms);
    }
  }
  build_integer_table();
}

template <class S>
void Field<S>::build_integer_table() {}

template <>
void Field<Rational>::build_integer_table() {
  mpz_class den = 1;
  for (const auto& terms : table_)
    for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.value().get_den_mpz_t());
  table_den_ = den;
  itable_.resize(table_.size());
  for (std::size_t k = 0; k < table_.size(); ++k)
    for (const auto& t : table_[k]) {
      mpz_class c = t.coeff.value().get_num() * (den / t.coeff.value().get_den());
      itable_[k].emplace_back(t.index, std::move(c));
    }
}

template <class S>
std::vector<std::size_t> Field<S>::exponents(std::size_t index) const {
  std::vector<std::size_t> e(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    e[k] = index % radix_[k];
    index /= radix_[k];
  }
  return e;
}

template <class S>
std::size_t Field<S>::index_of(const std::vector<std::size_t>& exps) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (exps.at(k) >= radix_[k]) throw DomainError("exponent out of range");
    idx += exps[k] * stride;
    stride *= radix_[k];
  }
  return idx;
}

template <class S>
FieldElement<S> Field<S>::variable(std::size_t v) const {
  std::vector<std::size_t> e(vars_.size(), 0);
  if (vars_.at(v).degree == 1) {
    // a degree-one variable equals its tail constant
    return from_scalar(vars_[v].tail[0]);
  }
  e[v] = 1;
  return monomial(index_of(e));
}

template <class S>
FieldElement<S> Field<S>::make(std::vector<S> c) const {
  if (c.size() != dim_) throw DomainError("coefficient vector has wrong length for " + name_);
  return FieldElement<S>(this, std::move(c));
}

template <class S>
void Field<S>::multiply(const std::vector<S>& a, const std::vector<S>& b, std::vector<S>& out) const {
  out.assign(dim_, scalar(0));
  S t = scalar(0), scratch = scalar(0);
  for (std::size_t u = 0; u < dim_; ++u) {
    if (a[u].is_zero()) continue;
    for (std::size_t w = 0; w < dim_; ++w) {
      if (b[w].is_zero()) continue;
      t = a[u] * b[w];
      for (const auto& term : table_[u * dim_ + w]) {
        if (term.coeff.is_one())
          out[term.index] += t;
        else
          S::fma(out[term.index], t, term.coeff, scratch);
      }
    }
  }
}

// Common-denominator integer arithmetic: avoids a gcd per coefficient product.
template <>
void Field<Rational>::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               std::vector<Rational>& out) const {
  auto to_int = [this](const std::vector<Rational>& x, std::vector<mpz_class>& num, mpz_class& den,
                       std::vector<std::uint32_t>& nz) {
    den = 1;
    nz.clear();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      nz.push_back(static_cast<std::uint32_t>(i));
      const mpz_srcptr d = x[i].value().get_den_mpz_t();
      if (mpz_cmp_ui(d, 1) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d);
    }
    num.resize(dim_);
    for (auto i : nz) {
      const mpq_class& q = x[i].value();
      if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0) {
        mpz_mul(num[i].get_mpz_t(), q.get_num_mpz_t(), den.get_mpz_t());
      } else {
        mpz_divexact(num[i].get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        mpz_mul(num[i].get_mpz_t(), num[i].get_mpz_t(), q.get_num_mpz_t());
      }
    }
  };
  thread_local std::vector<mpz_class> an, bn, acc;
  thread_local std::vector<std::uint32_t> anz, bnz;
  thread_local mpz_class ad, bd, prod;
  to_int(a, an, ad, anz);
  to_int(b, bn, bd, bnz);
  acc.resize(dim_);
  for (auto& x : acc) x = 0;
  for (auto u : anz)
    for (auto w : bnz) {
      mpz_mul(prod.get_mpz_t(), an[u].get_mpz_t(), bn[w].get_mpz_t());
      for (const auto& [idx, c] : itable_[u * dim_ + w]) {
        if (mpz_cmp_ui(c.get_mpz_t(), 1) == 0)
          mpz_add(acc[idx].get_mpz_t(), acc[idx].get_mpz_t(), prod.get_mpz_t());
        else
          mpz_addmul(acc[idx].get_mpz_t(), prod.get_mpz_t(), c.get_mpz_t());
      }
    }
  mpz_class den = ad * bd * table_den_;
  out.assign(dim_, Rational());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(acc[i]) == 0) continue;
    mpq_class q(acc[i], den);
    q.canonicalize();
    out[i] = Rational(std::move(q));
  }
}

template <class S>
std::vector<FieldElement<S>> Field<S>::to_base(const FieldElement<S>& x) const {
  if (base_ == nullptr) throw DomainError(name_ + " has no base field");
  const std::size_t db = base_->dim(), n = dim_ / db;
  std::vector<FieldElement<S>> out;
  out.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<S> c(x.coeffs().begin() + l * db, x.coeffs().begin() + (l + 1) * db);
    out.emplace_back(base_, std::move(c));
  }
  return out;
}

template <class S>
FieldElement<S> Field<S>::from_base(const std::vector<FieldElement<S>>& c) const {
  if (base_ == nullptr) throw DomainError(name_ + " has no base field");
  const std::size_t db = base_->dim(), n = dim_ / db;
  if (c.size() != n) throw DomainError("wrong number of base coordinates");
  std::vector<S> out;
  out.reserve(dim_);
  for (std::size_t l = 0; l < n; ++l) {
    if (c[l].coeffs().empty()) {
      for (std::size_t i = 0; i < db; ++i) out.push_back(scalar(0));
    } else {
      out.insert(out.end(), c[l].coeffs().begin(), c[l].coeffs().end());
    }
  }
  return FieldElement<S>(this, std::move(out));
}

template <class S>
FieldElement<S> Field<S>::embed(const FieldElement<S>& k) const {
  if (base_ == nullptr) throw DomainError(name_ + " has no base field");
  auto z = zero();
  for (std::size_t i = 0; i < k.coeffs().size(); ++i) z.coeffs()[i] = k.coeffs()[i];
  return z;
}

template <class S>
bool Field<S>::in_base(const FieldElement<S>& x) const {
  const std::size_t db = base_dim();
  for (std::size_t i = db; i < x.coeffs().size(); ++i)
    if (!x.coeffs()[i].is_zero()) return false;
  return true;
}

template <class S>
FieldElement<S> Field<S>::restrict_to_base(const FieldElement<S>& x) const {
  if (base_ == nullptr) throw DomainError(name_ + " has no base field");
  if (!in_base(x)) throw DomainError("element does not lie in the base field");
  std::vector<S> c(x.coeffs().begin(), x.coeffs().begin() + base_->dim());
  return FieldElement<S>(base_, std::move(c));
}

template <class S>
Matrix<FieldElement<S>> Field<S>::mult_matrix(const FieldElement<S>& x) const {
  if (base_ == nullptr) throw DomainError(name_ + " has no base field");
  const std::size_t db = base_->dim(), n = dim_ / db;
  Matrix<FieldElement<S>> m(n, n, base_->zero());
  for (std::size_t j = 0; j < n; ++j) {
    auto col = to_base(x * monomial(j * db));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

template <class S>
Matrix<S> Field<S>::prime_mult_matrix(const FieldElement<S>& x) const {
  Matrix<S> m(dim_, dim_, scalar(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    auto col = x * monomial(j);
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col.coeffs()[i];
  }
  return m;
}

template <class S>
FieldElement<S> Field<S>::inverse(const FieldElement<S>& x) const {
  if (x.is_zero()) throw SingularMatrixError("inverse of zero in " + name_);
  if (base_ != nullptr && base_->dim() > 1) {
    auto m = mult_matrix(x);
    std::vector<FieldElement<S>> rhs(m.rows(), base_->zero());
    rhs[0] = base_->one();
    auto y = solve(m, rhs);
    if (!y) throw InvariantViolation(name_ + " is not a field: zero divisor found");
    return from_base(*y);
  }
  auto m = prime_mult_matrix(x);
  std::vector<S> rhs(dim_, scalar(0));
  rhs[0] = scalar(1);
  auto y = solve(m, rhs);
  if (!y) throw InvariantViolation(name_ + " is not a field: zero divisor found");
  return FieldElement<S>(this, std::move(*y));
}

// Rational case: fraction-free elimination on the integer-scaled
// multiplication matrix, then one rational back substitution.
template <>
FieldElement<Rational> Field<Rational>::inverse(const FieldElement<Rational>& x) const {
  if (x.is_zero()) throw SingularMatrixError("inverse of zero in " + name_);
  const std::size_t n = dim_;
  std::vector<mpz_class> num;
  mpz_class den = 1;
  for (const auto& c : x.coeffs())
    if (!c.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  // column w of the matrix is x times monomial w, scaled to integers
  std::vector<mpz_class> xi(n);
  for (std::size_t i = 0; i < n; ++i) xi[i] = x.coeffs()[i].value().get_num() * (den / x.coeffs()[i].value().get_den());
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n + 1));
  for (std::size_t u = 0; u < n; ++u) {
    if (sgn(xi[u]) == 0) continue;
    for (std::size_t w = 0; w < n; ++w)
      for (const auto& [idx, c] : itable_[u * n + w]) mpz_addmul(a[idx][w].get_mpz_t(), xi[u].get_mpz_t(), c.get_mpz_t());
  }
  a[0][n] = 1;
  mpz_class prev = 1, t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a[piv][k]) == 0) ++piv;
    if (piv == n) throw InvariantViolation(name_ + " is not a field: zero divisor found");
    std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_mul(t.get_mpz_t(), a[k][k].get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // back substitution; the scale factors den * table_den_ are restored at the end
  std::vector<mpq_class> y(n);
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class r(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j)
      if (sgn(a[ii][j]) != 0 && sgn(y[j]) != 0) r -= mpq_class(a[ii][j]) * y[j];
    y[ii] = r / mpq_class(a[ii][ii]);
  }
  std::vector<Rational> out(n);
  mpq_class scale(den * table_den_);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(y[i]) != 0) out[i] = Rational(y[i] * scale);
  return FieldElement<Rational>(this, std::move(out));
}

template class Field<Rational>;
template class Field<ModP>;
template class FieldElement<Rational>;
template class FieldElement<ModP>;

}  // namespace lgrank
