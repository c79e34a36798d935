// SPDX-License-Identifier: Apache-2.0
#include "lgrank/extension.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace lgrank {

// ---------------------------------------------------------------- numbers

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long euler_phi(long e) {
  long r = e, n = e;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    r -= r / d;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> units_mod(long e) {
  std::vector<long> u;
  if (e <= 2) return {1};
  for (long s = 1; s < e; ++s)
    if (std::gcd(s, e) == 1) u.push_back(s);
  return u;
}

namespace {

using IntPoly = std::vector<long>;  // low to high

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials by a monic divisor
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw InvariantViolation("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long e) {
  if (e < 1) throw DomainError("root_of_unity must be positive");
  IntPoly num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (long d = 1; d < e; ++d)
    if (e % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  return num;
}

namespace {

// ------------------------------------------------------------ F_p polys

IntPoly pmod(IntPoly a, const IntPoly& f, long p) {
  for (auto& x : a) x = ((x % p) + p) % p;
  trim(a);
  const std::size_t df = f.size() - 1;
  long lead_inv = ModP(f.back(), p).inverse().value();
  while (a.size() > df) {
    long c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = ((a[shift + j] - c * f[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

IntPoly pmulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, long p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return pmod(c, f, p);
}

IntPoly ppowmod(IntPoly b, unsigned long e, const IntPoly& f, long p) {
  IntPoly r{1};
  b = pmod(b, f, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, b, f, p);
    e >>= 1;
    if (e > 0) b = pmulmod(b, b, f, p);
  }
  return r;
}

IntPoly pgcd(IntPoly a, IntPoly b, long p) {
  for (auto& x : a) x = ((x % p) + p) % p;
  for (auto& x : b) x = ((x % p) + p) % p;
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = pmod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test
bool irreducible_mod_p(const IntPoly& f, long p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  auto frob_iter = [&](std::size_t k) {
    IntPoly h{0, 1};
    for (std::size_t i = 0; i < k; ++i) h = ppowmod(h, static_cast<unsigned long>(p), f, p);
    return h;
  };
  IntPoly x{0, 1};
  IntPoly top = frob_iter(n);
  IntPoly diff = top;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (long q = 2; q <= static_cast<long>(n); ++q) {
    if (n % q != 0 || !is_prime(q)) continue;
    IntPoly h = frob_iter(n / q);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    trim(h);
    IntPoly g = pgcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

IntPoly smallest_irreducible(long p, std::size_t n) {
  unsigned long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<unsigned long>(p);
  for (unsigned long t = 0; t < total; ++t) {
    IntPoly f(n + 1, 0);
    unsigned long v = t;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<long>(v % p);
      v /= p;
    }
    f[n] = 1;
    if (irreducible_mod_p(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

// ------------------------------------------------------- Kummer check

using Factorization = std::map<long, long>;  // prime -> exponent

void factor_into(mpz_class n, long sign_exp, Factorization& out) {
  if (n < 0) n = -n;
  for (long d = 2; mpz_class(d) * d <= n; ++d) {
    while (n % d == 0) {
      out[d] += sign_exp;
      n /= d;
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw DomainError("radicand too large to factor");
    out[n.get_si()] += sign_exp;
  }
}

// Is b = sign * prod p^e a q-th power in Q(zeta_e)?  Odd q: only if it is a
// q-th power in Q. q = 2: Q(sqrt b) must lie in Q(zeta_e), i.e. its
// discriminant divides the conductor.
bool is_power_in_cyclotomic(int sign, const Factorization& f, long q, long e) {
  bool rational_power = true;
  for (const auto& [pr, ex] : f)
    if (ex % q != 0) rational_power = false;
  if (q % 2 == 1) return rational_power;
  if (rational_power && sign > 0) return true;
  long d = sign;
  for (const auto& [pr, ex] : f)
    if (((ex % 2) + 2) % 2 == 1) d *= pr;
  long disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
  long conductor = (e % 2 == 1) ? 2 * e : e;
  return conductor % std::labs(disc) == 0;
}

void check_kummer_independence(const FieldSpec& spec) {
  const auto& rad = spec.radicals;
  const std::size_t m = rad.size();
  if (m == 0) return;
  std::vector<Factorization> fac(m);
  std::vector<int> sgn(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& q = rad[i].radicand.value();
    sgn[i] = q < 0 ? -1 : 1;
    factor_into(q.get_num(), 1, fac[i]);
    factor_into(q.get_den(), -1, fac[i]);
  }
  std::size_t total = 1;
  for (const auto& r : rad) total *= static_cast<std::size_t>(r.order);
  std::vector<long> c(m);
  for (std::size_t t = 1; t < total; ++t) {
    std::size_t v = t;
    for (std::size_t i = 0; i < m; ++i) {
      c[i] = static_cast<long>(v % rad[i].order);
      v /= rad[i].order;
    }
    // order of c
    long ord = 1;
    for (std::size_t i = 0; i < m; ++i) {
      long oi = rad[i].order / std::gcd(c[i], rad[i].order);
      ord = std::lcm(ord, oi);
    }
    if (!is_prime(ord)) continue;
    Factorization b;
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i) {
      long ex = c[i] * ord / rad[i].order;
      if (ex == 0) continue;
      for (const auto& [pr, e] : fac[i]) b[pr] += e * ex;
      if (sgn[i] < 0 && ex % 2 != 0) sign = -sign;
    }
    if (is_power_in_cyclotomic(sign, b, ord, spec.root_of_unity))
      throw DomainError("radicands are multiplicatively dependent: " + spec.summary() +
                        " is not a field");
  }
}

std::string trim_ws(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw DomainError("");
    return x;
  } catch (...) {
    throw DomainError("field descriptor: `" + key + "` expects an integer, got `" + v + "`");
  }
}

}  // namespace

// -------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::finite_field(std::uint32_t p, std::size_t degree, std::vector<long> poly) {
  FieldSpec s;
  s.backend = Backend::finite;
  s.p = p;
  s.degree = degree;
  if (!is_prime(p)) throw DomainError("finite field: p = " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("finite field: degree must be at least 1");
  if (poly.empty()) {
    poly = smallest_irreducible(p, degree);
  } else {
    for (auto& c : poly) c = ((c % static_cast<long>(p)) + p) % p;
    if (poly.size() != degree + 1 || poly.back() != 1)
      throw DomainError("finite field: polynomial must be monic of degree " + std::to_string(degree));
    if (!irreducible_mod_p(poly, p)) throw DomainError("finite field: polynomial is reducible mod p");
  }
  s.polynomial = std::move(poly);
  return s;
}

FieldSpec FieldSpec::tower(long e, std::vector<Radical> radicals, Base base) {
  FieldSpec s;
  s.backend = Backend::tower;
  s.root_of_unity = e;
  s.base = base;
  s.radicals = std::move(radicals);
  if (e < 1) throw DomainError("tower: root_of_unity must be positive");
  for (const auto& r : s.radicals) {
    if (r.order < 2) throw DomainError("tower: radical order must be at least 2");
    if (e % r.order != 0)
      throw DomainError("tower: radical order " + std::to_string(r.order) +
                        " does not divide root_of_unity " + std::to_string(e));
    if (r.radicand.is_zero()) throw DomainError("tower: radicand must be nonzero");
  }
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim_ws(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("field descriptor line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim_ws(line.substr(0, eq)), val = trim_ws(line.substr(eq + 1));
    if (kv.count(key)) throw DomainError("field descriptor: duplicate key `" + key + "`");
    kv[key] = val;
  }
  auto get = [&](const std::string& k) -> std::string {
    auto it = kv.find(k);
    if (it == kv.end()) throw DomainError("field descriptor: missing key `" + k + "`");
    return it->second;
  };
  if (get("format") != "lgrank-field/1")
    throw DomainError("field descriptor: unsupported format `" + get("format") + "`");
  const std::string backend = get("backend");
  std::vector<std::string> allowed;
  FieldSpec s;
  if (backend == "finite") {
    allowed = {"format", "backend", "p", "degree", "polynomial"};
    long p = parse_long("p", get("p"));
    long n = parse_long("degree", get("degree"));
    if (p < 2 || n < 1) throw DomainError("field descriptor: bad p or degree");
    std::vector<long> poly;
    if (kv.count("polynomial") && kv["polynomial"] != "auto")
      for (const auto& t : split_list(kv["polynomial"])) poly.push_back(parse_long("polynomial", t));
    s = finite_field(static_cast<std::uint32_t>(p), static_cast<std::size_t>(n), poly);
  } else if (backend == "tower") {
    allowed = {"format", "backend", "root_of_unity", "base", "radicals"};
    long e = parse_long("root_of_unity", get("root_of_unity"));
    Base base = Base::cyclotomic;
    if (kv.count("base")) {
      if (kv["base"] == "cyclotomic") base = Base::cyclotomic;
      else if (kv["base"] == "rational") base = Base::rational;
      else throw DomainError("field descriptor: base must be cyclotomic or rational");
    }
    std::vector<Radical> rads;
    if (kv.count("radicals")) {
      for (const auto& t : split_list(kv["radicals"])) {
        auto colon = t.find(':');
        if (colon == std::string::npos)
          throw DomainError("field descriptor: radical `" + t + "` must read order:radicand");
        Radical r;
        r.order = parse_long("radicals", t.substr(0, colon));
        r.radicand = Rational::parse(t.substr(colon + 1));
        rads.push_back(r);
      }
    }
    s = tower(e, rads, base);
  } else {
    throw DomainError("field descriptor: unknown backend `" + backend + "`");
  }
  for (const auto& [k, v] : kv)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw DomainError("field descriptor: unknown key `" + k + "`");
  return s;
}

FieldSpec FieldSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open field descriptor " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string FieldSpec::canonical_text() const {
  std::ostringstream os;
  os << "format = lgrank-field/1\n";
  if (backend == Backend::finite) {
    os << "backend = finite\np = " << p << "\ndegree = " << degree << "\npolynomial = ";
    for (std::size_t i = 0; i < polynomial.size(); ++i) os << (i ? ", " : "") << polynomial[i];
    os << "\n";
  } else {
    os << "backend = tower\nroot_of_unity = " << root_of_unity
       << "\nbase = " << (base == Base::cyclotomic ? "cyclotomic" : "rational") << "\nradicals =";
    for (std::size_t i = 0; i < radicals.size(); ++i)
      os << (i ? ", " : " ") << radicals[i].order << ":" << radicals[i].radicand.str();
    os << "\n";
  }
  return os.str();
}

std::uint64_t FieldSpec::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_text()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string FieldSpec::summary() const {
  std::ostringstream os;
  if (backend == Backend::finite) {
    os << "F_" << p << "^" << degree << " over F_" << p;
    return os.str();
  }
  os << (root_of_unity > 2 ? "Q(zeta_" + std::to_string(root_of_unity) + ")" : std::string("Q"));
  if (!radicals.empty()) {
    os << "(";
    for (std::size_t i = 0; i < radicals.size(); ++i)
      os << (i ? ", " : "") << radicals[i].radicand.str() << "^(1/" << radicals[i].order << ")";
    os << ")";
  }
  os << " over "
     << (base == Base::cyclotomic && root_of_unity > 2 ? "Q(zeta_" + std::to_string(root_of_unity) + ")"
                                                       : std::string("Q"));
  return os.str();
}

// -------------------------------------------------------------- Extension

template <class S>
Extension<S>::Extension(FieldSpec spec) : spec_(std::move(spec)) {}

template <class S>
std::shared_ptr<const Extension<S>> Extension<S>::create(const FieldSpec& spec) {
  std::shared_ptr<Extension> ext(new Extension(spec));
  if constexpr (ScalarTraits<S>::characteristic_zero) {
    if (spec.backend != FieldSpec::Backend::tower)
      throw DomainError("rational scalars need the tower backend");
    ext->build_tower();
  } else {
    if (spec.backend != FieldSpec::Backend::finite)
      throw DomainError("F_p scalars need the finite backend");
    ext->build_finite();
  }
  ext->build_abelian();
  ext->certify();
  return ext;
}

template <class S>
void Extension<S>::build_tower() {
  if constexpr (ScalarTraits<S>::characteristic_zero) {
    check_kummer_independence(spec_);
    const long e = spec_.root_of_unity;
    const long phi = euler_phi(e);
    std::vector<Variable<S>> kvars, lvars;
    if (phi > 1) {
      auto cyc = cyclotomic_polynomial(e);
      Variable<S> z{"z", static_cast<std::size_t>(phi), {}};
      for (long i = 0; i < phi; ++i) z.tail.push_back(S(-cyc[i]));
      if (spec_.base == FieldSpec::Base::cyclotomic) kvars.push_back(z);
      lvars.push_back(z);
      zeta_var_ = 0;
    }
    for (std::size_t i = 0; i < spec_.radicals.size(); ++i) {
      const auto& r = spec_.radicals[i];
      Variable<S> a{"a" + std::to_string(i + 1), static_cast<std::size_t>(r.order), {}};
      a.tail.assign(r.order, S(0));
      a.tail[0] = r.radicand;
      radical_var_.push_back(lvars.size());
      lvars.push_back(a);
    }
    K_ = std::make_unique<Field<S>>("K", 0, kvars);
    L_ = std::make_unique<Field<S>>("L", 0, lvars, K_.get());
    N_ = L_->degree_over_base();

    std::vector<long> svals = (spec_.base == FieldSpec::Base::cyclotomic) ? std::vector<long>{1}
                                                                          : units_mod(e);
    const Elem z = zeta();
    std::vector<std::vector<Elem>> images;
    std::vector<Automorphism<S>> autos;
    std::size_t ktotal = 1;
    for (const auto& r : spec_.radicals) ktotal *= static_cast<std::size_t>(r.order);
    const std::size_t m = spec_.radicals.size();
    for (long s : svals) {
      for (std::size_t t = 0; t < ktotal; ++t) {
        // k_1 most significant so that the list is lexicographic
        std::vector<long> k(m);
        std::size_t v = t;
        for (std::size_t i = m; i-- > 0;) {
          k[i] = static_cast<long>(v % spec_.radicals[i].order);
          v /= spec_.radicals[i].order;
        }
        std::vector<Elem> img;
        std::string label = "s=" + std::to_string(s);
        if (phi > 1) img.push_back(z.pow(s));
        for (std::size_t i = 0; i < m; ++i) {
          long step = e / spec_.radicals[i].order;
          img.push_back(z.pow(k[i] * step) * radical(i));
          label += ",k" + std::to_string(i + 1) + "=" + std::to_string(k[i]);
        }
        std::vector<long> params{s};
        params.insert(params.end(), k.begin(), k.end());
        autos.push_back({params, label});
        images.push_back(std::move(img));
      }
    }
    build_group(images, std::move(autos));
  }
}

template <class S>
void Extension<S>::build_finite() {
  if constexpr (!ScalarTraits<S>::characteristic_zero) {
    const std::uint32_t p = spec_.p;
    const std::size_t n = spec_.degree;
    Variable<S> x{"x", n, {}};
    for (std::size_t i = 0; i < n; ++i) x.tail.push_back(ModP(-spec_.polynomial[i], p));
    K_ = std::make_unique<Field<S>>("K", p, std::vector<Variable<S>>{});
    L_ = std::make_unique<Field<S>>("L", p, std::vector<Variable<S>>{x}, K_.get());
    N_ = n;
    radical_var_.push_back(0);
    std::vector<std::vector<Elem>> images;
    std::vector<Automorphism<S>> autos;
    Elem img = L_->variable(0);
    for (std::size_t j = 0; j < n; ++j) {
      autos.push_back({{static_cast<long>(j)}, "frob^" + std::to_string(j)});
      images.push_back({img});
      img = img.pow(p);
    }
    build_group(images, std::move(autos));
  }
}

template <class S>
void Extension<S>::build_group(const std::vector<std::vector<Elem>>& images,
                               std::vector<Automorphism<S>> autos) {
  group_ = std::move(autos);
  if (group_.size() != N_)
    throw InvariantViolation("group order " + std::to_string(group_.size()) + " differs from degree " +
                             std::to_string(N_));
  const std::size_t D = L_->dim();
  const auto& vars = L_->variables();
  // relations must be respected
  for (std::size_t g = 0; g < group_.size(); ++g) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const Elem& y = images[g][v];
      Elem lhs = y.pow(static_cast<long>(vars[v].degree));
      Elem rhs = L_->zero(), pw = L_->one();
      for (std::size_t i = 0; i < vars[v].degree; ++i) {
        rhs += pw * vars[v].tail[i];
        pw *= y;
      }
      if (lhs != rhs)
        throw InvariantViolation("automorphism " + group_[g].label + " does not respect relation of " +
                                 vars[v].name);
    }
    for (std::size_t v = 0; v < K_->variables().size(); ++v)
      if (images[g][v] != L_->variable(v))
        throw InvariantViolation("automorphism " + group_[g].label + " moves K");
  }
  action_.assign(group_.size(), {});
  for (std::size_t g = 0; g < group_.size(); ++g) {
    action_[g].resize(D);
    for (std::size_t u = 0; u < D; ++u) {
      auto ex = L_->exponents(u);
      Elem img = L_->one();
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (ex[v] > 0) img *= images[g][v].pow(static_cast<long>(ex[v]));
      for (std::size_t i = 0; i < D; ++i)
        if (!img.coeffs()[i].is_zero())
          action_[g][u].emplace_back(static_cast<std::uint32_t>(i), img.coeffs()[i]);
    }
  }
  // composition table by matching variable images
  const std::size_t n = group_.size();
  table_.assign(n * n, SIZE_MAX);
  inverse_.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> comp;
      for (std::size_t v = 0; v < vars.size(); ++v) comp.push_back(apply(i, images[j][v]));
      for (std::size_t k = 0; k < n; ++k)
        if (images[k] == comp) {
          table_[i * n + j] = k;
          break;
        }
      if (table_[i * n + j] == SIZE_MAX) throw InvariantViolation("group is not closed under composition");
      if (table_[i * n + j] == 0) inverse_[i] = j;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (inverse_[i] == SIZE_MAX) throw InvariantViolation("automorphism without inverse");
  std::vector<Elem> basis;
  for (std::size_t j = 0; j < N_; ++j) basis.push_back(L_->monomial(j * K_->dim()));
  canonical_ = std::make_unique<Basis<S>>(this, std::move(basis));
}

template <class S>
void Extension<S>::build_abelian() {
  AbelianStructure a;
  if (spec_.backend == FieldSpec::Backend::finite) {
    if (N_ > 1) {
      a.generators.push_back(1);
      a.orders.push_back(N_);
    }
  } else {
    const long phi = euler_phi(spec_.root_of_unity);
    const bool kummer = spec_.base == FieldSpec::Base::cyclotomic || phi == 1;
    if (kummer) {
      for (std::size_t i = 0; i < spec_.radicals.size(); ++i) {
        std::vector<long> params(1 + spec_.radicals.size(), 0);
        params[0] = 1;
        params[1 + i] = 1;
        a.generators.push_back(*find(params));
        a.orders.push_back(static_cast<std::size_t>(spec_.radicals[i].order));
      }
    } else if (spec_.radicals.empty()) {
      // cyclic unit group: look for a primitive root
      bool found = false;
      for (long s : units_mod(spec_.root_of_unity)) {
        long ord = 1, v = s % spec_.root_of_unity;
        while (v != 1) {
          v = v * s % spec_.root_of_unity;
          ++ord;
        }
        if (ord == phi) {
          a.generators.push_back(*find({s}));
          a.orders.push_back(static_cast<std::size_t>(phi));
          found = true;
          break;
        }
      }
      if (!found) return;
    } else {
      return;
    }
  }
  const std::size_t n = group_.size();
  a.index.assign(n, SIZE_MAX);
  a.exponents.assign(n, {});
  std::vector<std::size_t> ex(a.generators.size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t v = t, g = identity();
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
      ex[i] = v % a.orders[i];
      v /= a.orders[i];
      for (std::size_t r = 0; r < ex[i]; ++r) g = compose(g, a.generators[i]);
    }
    if (!a.exponents[g].empty() || (g == identity() && t != 0))
      throw InvariantViolation("generators do not give a direct product decomposition");
    a.index[t] = g;
    a.exponents[g] = ex;
  }
  if (n == 1) a.exponents[0] = {};
  abelian_ = std::move(a);
}

template <class S>
void Extension<S>::certify() {
  if (N_ <= 24)
    for (std::size_t a = 0; a < N_; ++a)
      for (std::size_t b = 0; b < N_; ++b)
        for (std::size_t c = 0; c < N_; ++c)
          if (compose(compose(a, b), c) != compose(a, compose(b, c)))
            throw InvariantViolation("composition table is not associative");
  // Moore determinant of the canonical basis
  Matrix<Elem> moore(N_, N_, L_->zero());
  for (std::size_t g = 0; g < N_; ++g)
    for (std::size_t j = 0; j < N_; ++j) moore(g, j) = apply(g, canonical_basis()[j]);
  if (det(moore).is_zero())
    throw DomainError("Moore determinant vanishes: " + spec_.summary() + " is not a Galois field extension");
}

template <class S>
std::optional<std::size_t> Extension<S>::find(const std::vector<long>& params) const {
  for (std::size_t i = 0; i < group_.size(); ++i)
    if (group_[i].params == params) return i;
  return std::nullopt;
}

template <class S>
bool Extension<S>::is_abelian() const {
  for (std::size_t i = 0; i < N_; ++i)
    for (std::size_t j = 0; j < N_; ++j)
      if (compose(i, j) != compose(j, i)) return false;
  return true;
}

template <class S>
typename Extension<S>::Elem Extension<S>::apply(std::size_t g, const Elem& x) const {
  const auto& act = action_.at(g);
  std::vector<S> out(L_->dim(), L_->scalar(0));
  S scratch = L_->scalar(0);
  for (std::size_t u = 0; u < act.size(); ++u) {
    const S& xu = x.coeffs()[u];
    if (xu.is_zero()) continue;
    for (const auto& [i, c] : act[u]) S::fma(out[i], xu, c, scratch);
  }
  return L_->make(std::move(out));
}

template <class S>
typename Extension<S>::Elem Extension<S>::trace(const Elem& x) const {
  Elem t = L_->zero();
  for (std::size_t g = 0; g < N_; ++g) t += apply(g, x);
  return t;
}

template <class S>
typename Extension<S>::Elem Extension<S>::trace_K(const Elem& x) const {
  Elem t = trace(x);
  if (!L_->in_base(t)) throw InvariantViolation("trace does not lie in K");
  return L_->restrict_to_base(t);
}

template <class S>
typename Extension<S>::Elem Extension<S>::norm(const Elem& x) const {
  Elem t = L_->one();
  for (std::size_t g = 0; g < N_; ++g) t *= apply(g, x);
  return t;
}

template <class S>
Basis<S> Extension<S>::make_basis(std::vector<Elem> elems) const {
  return Basis<S>(this, std::move(elems));
}

template <class S>
Basis<S> Extension<S>::dual_basis(const Basis<S>& b) const {
  Matrix<Elem> gram(N_, N_, K_->zero());
  for (std::size_t i = 0; i < N_; ++i)
    for (std::size_t j = i; j < N_; ++j) {
      gram(i, j) = trace_K(b[i] * b[j]);
      gram(j, i) = gram(i, j);
    }
  Matrix<Elem> inv = lgrank::inverse(gram);
  std::vector<Elem> dual;
  for (std::size_t j = 0; j < N_; ++j) {
    Elem d = L_->zero();
    for (std::size_t k = 0; k < N_; ++k) d += embed(inv(k, j)) * b[k];
    dual.push_back(d);
  }
  return Basis<S>(this, std::move(dual));
}

template <class S>
typename Extension<S>::Elem Extension<S>::candidate(std::size_t k) const {
  const std::size_t D = L_->dim();
  std::vector<S> c(D, L_->scalar(0));
  if (k == 0) {
    for (std::size_t j = 0; j < N_; ++j) c[j * K_->dim()] = L_->scalar(1);
    return L_->make(std::move(c));
  }
  static const long digits[5] = {0, 1, -1, 2, -2};
  std::size_t v = k;
  for (std::size_t i = 0; i < D && v > 0; ++i) {
    c[i] = L_->scalar(digits[v % 5]);
    v /= 5;
  }
  return L_->make(std::move(c));
}

template <class S>
typename Extension<S>::Elem Extension<S>::normal_element() const {
  for (std::size_t k = 0; k < 100000; ++k) {
    Elem x = candidate(k);
    if (x.is_zero()) continue;
    Matrix<Elem> m(N_, N_, K_->zero());
    for (std::size_t g = 0; g < N_; ++g) {
      auto co = coordinates(apply(g, x));
      for (std::size_t i = 0; i < N_; ++i) m(i, g) = co[i];
    }
    if (rank(m) == N_) return x;
  }
  throw InvariantViolation("no normal element among the search candidates");
}

template <class S>
typename Extension<S>::Elem Extension<S>::primitive_element() const {
  for (std::size_t k = 0; k < 100000; ++k) {
    Elem x = candidate(k);
    Matrix<Elem> m(N_, N_, K_->zero());
    Elem pw = L_->one();
    for (std::size_t j = 0; j < N_; ++j) {
      auto co = coordinates(pw);
      for (std::size_t i = 0; i < N_; ++i) m(i, j) = co[i];
      pw *= x;
    }
    if (rank(m) == N_) return x;
  }
  throw InvariantViolation("no primitive element among the search candidates");
}

template <class S>
std::vector<typename Extension<S>::Elem> Extension<S>::fixed_field(const std::vector<std::size_t>& gens) const {
  Matrix<Elem> stacked(0, N_, K_->zero());
  for (auto g : gens) {
    auto a = automorphism_matrix(g);
    for (std::size_t i = 0; i < N_; ++i) {
      auto row = a.row(i);
      row[i] -= K_->one();
      stacked.append_row(row);
    }
  }
  Matrix<Elem> ker = gens.empty() ? Matrix<Elem>::identity(N_, K_->zero(), K_->one()) : kernel(stacked);
  std::vector<Elem> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) out.push_back(from_coordinates(ker.row(r)));
  return out;
}

template <class S>
std::vector<typename Extension<S>::Elem> Extension<S>::fixed_field_basis(std::size_t i) const {
  if (!abelian_) throw DomainError("fixed_field_basis needs an abelian group with chosen generators");
  if (i >= abelian_->generators.size()) throw DomainError("generator index out of range");
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < abelian_->generators.size(); ++j)
    if (j != i) others.push_back(abelian_->generators[j]);
  return fixed_field(others);
}

template <class S>
typename Extension<S>::KMatrix Extension<S>::automorphism_matrix(std::size_t g) const {
  KMatrix m(N_, N_, K_->zero());
  for (std::size_t j = 0; j < N_; ++j) {
    auto co = coordinates(apply(g, canonical_basis()[j]));
    for (std::size_t i = 0; i < N_; ++i) m(i, j) = co[i];
  }
  return m;
}

template <class S>
typename Extension<S>::Elem Extension<S>::zeta() const {
  if (spec_.backend != FieldSpec::Backend::tower) throw DomainError("zeta is defined for towers only");
  if (zeta_var_ != SIZE_MAX) return L_->variable(zeta_var_);
  return L_->from_int(spec_.root_of_unity == 2 ? -1 : 1);
}

template <class S>
typename Extension<S>::Elem Extension<S>::radical(std::size_t i) const {
  return L_->variable(radical_var_.at(i));
}

// ------------------------------------------------------------------ Basis

template <class S>
Basis<S>::Basis(const Extension<S>* ext, std::vector<Elem> elems) : ext_(ext), elems_(std::move(elems)) {
  const std::size_t n = ext_->degree();
  if (elems_.size() != n)
    throw DomainError("a basis needs exactly " + std::to_string(n) + " elements, got " +
                      std::to_string(elems_.size()));
  P_ = Matrix<Elem>(n, n, ext_->K().zero());
  for (std::size_t j = 0; j < n; ++j) {
    auto co = ext_->coordinates(elems_[j]);
    for (std::size_t i = 0; i < n; ++i) P_(i, j) = co[i];
  }
  try {
    Pinv_ = lgrank::inverse(P_);
  } catch (const SingularMatrixError&) {
    throw DomainError("elements are not a K-basis of L");
  }
}

template <class S>
std::vector<typename Basis<S>::Elem> Basis<S>::coordinates(const Elem& x) const {
  return Pinv_.apply(ext_->coordinates(x));
}

template <class S>
typename Basis<S>::Elem Basis<S>::combine(const std::vector<Elem>& k) const {
  if (k.size() != elems_.size()) throw DomainError("coefficient count differs from basis size");
  Elem r = ext_->L().zero();
  for (std::size_t j = 0; j < k.size(); ++j) r += ext_->embed(k[j]) * elems_[j];
  return r;
}

template class Extension<Rational>;
template class Extension<ModP>;
template class Basis<Rational>;
template class Basis<ModP>;

}  // namespace lgrank
