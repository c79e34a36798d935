// SPDX-License-Identifier: Apache-2.0
#include "lgrank/verify.hpp"

#include <functional>

namespace lgrank {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "dickson", "duality", "ecp", "rm", "skew"};
  return names;
}

template <class S>
Basis<S> random_basis(const Extension<S>& ext, Rng& rng, long height) {
  GroupAlgebra<S> alg(Extension<S>::create(ext.spec()));
  const std::size_t n = ext.degree();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<FieldElement<S>> elems;
    Matrix<FieldElement<S>> m(0, n, ext.K().zero());
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement<S> x = ext.L().zero();
      for (std::size_t k = 0; k < n; ++k) {
        const auto c = rng.uniform(-height, height);
        if (c != 0) x += ext.embed(ext.K().from_int(c)) * ext.canonical_basis()[k];
      }
      elems.push_back(x);
      m.append_row(ext.coordinates(x));
    }
    if (rank(m) == n) return ext.make_basis(elems);
  }
  throw InvariantViolation("could not sample a random basis");
}

namespace {

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  // runs body(i) for i < count; a thrown error counts as a failure
  void check(const std::string& name, std::size_t count, const std::function<bool(std::size_t)>& body) {
    CheckResult r{suite_, name, 0, count, ""};
    for (std::size_t i = 0; i < count; ++i) {
      try {
        if (body(i)) ++r.passed;
      } catch (const Error& e) {
        if (r.note.empty()) r.note = e.what();
      }
    }
    out_.push_back(std::move(r));
  }
  void skip(const std::string& name, const std::string& why) { out_.push_back({suite_, name, 0, 0, "skipped: " + why}); }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

template <class S>
struct Ctx {
  std::shared_ptr<const Extension<S>> ext;
  GroupAlgebra<S> alg;
  SuiteOptions opt;
  Rng rng(std::size_t salt, std::size_t i) const { return Rng(Rng::split(opt.seed ^ (0x100000001b3ULL * salt), i)); }
  bool abelian() const { return ext->is_abelian() && ext->abelian() != nullptr; }
  bool kummer() const {
    const auto& s = ext->spec();
    return s.backend == FieldSpec::Backend::tower && abelian() &&
           (s.base == FieldSpec::Base::cyclotomic || euler_phi(s.root_of_unity) == 1);
  }
};

template <class S>
void suite_algebra(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("algebra", out);
  const auto& alg = c.alg;
  const auto& ext = *c.ext;
  const std::size_t t = c.opt.trials, n = alg.N();
  rec.check("ring axioms of (L[G], +, o)", t, [&](std::size_t i) {
    Rng rng = c.rng(1, i);
    auto u = alg.random_element(rng, 2), v = alg.random_element(rng, 2), w = alg.random_element(rng, 2);
    return alg.compose(alg.compose(u, v), w) == alg.compose(u, alg.compose(v, w)) &&
           alg.compose(u, v + w) == alg.compose(u, v) + alg.compose(u, w) &&
           alg.compose(u + v, w) == alg.compose(u, w) + alg.compose(v, w) && alg.compose(alg.identity(), u) == u &&
           alg.compose(u, alg.identity()) == u;
  });
  rec.check("evaluation is a ring map to End_K(L)", t, [&](std::size_t i) {
    Rng rng = c.rng(2, i);
    auto u = alg.random_element(rng, 2), v = alg.random_element(rng, 2);
    auto x = alg.random_scalar(rng, 3);
    return alg.evaluate(alg.compose(u, v), x) == alg.evaluate(u, alg.evaluate(v, x));
  });
  rec.check("adjoint: trace identity, involution, anti-homomorphism", t, [&](std::size_t i) {
    Rng rng = c.rng(3, i);
    auto u = alg.random_element(rng, 2), v = alg.random_element(rng, 2);
    auto x = alg.random_scalar(rng, 3), y = alg.random_scalar(rng, 3);
    return ext.trace(alg.evaluate(u, x) * y) == ext.trace(x * alg.evaluate(alg.adjoint(u), y)) &&
           alg.adjoint(alg.adjoint(u)) == u &&
           alg.adjoint(alg.compose(u, v)) == alg.compose(alg.adjoint(v), alg.adjoint(u));
  });
  rec.check("Artin independence: interpolate(endo_matrix(a)) = a", t, [&](std::size_t i) {
    Rng rng = c.rng(4, i);
    auto a = alg.random_element(rng, 2);
    return alg.interpolate(alg.endo_matrix(a)) == a;
  });
  rec.check("rank characterization (four ranks agree)", t, [&](std::size_t i) {
    Rng rng = c.rng(5, i);
    const std::size_t r = i % (n + 1);
    auto a = alg.random_rank(rng, r, 2);
    auto rep = alg.rank_report(a);
    return rep.agree() && rep.endo_rank_K == r;
  });
  rec.check("dim supp(a) = rk(a)", t, [&](std::size_t i) {
    Rng rng = c.rng(6, i);
    auto a = alg.random_rank(rng, i % (n + 1), 2);
    return alg.support(a).dim() == alg.rank_fast(a);
  });
  rec.check("<a o tau(b), c> = <a, c o b>", t, [&](std::size_t i) {
    Rng rng = c.rng(7, i);
    auto a = alg.random_element(rng, 2), b = alg.random_element(rng, 2), d = alg.random_element(rng, 2);
    return alg.inner(alg.compose(a, alg.adjoint(b)), d) == alg.inner(a, alg.compose(d, b));
  });
  rec.check("evaluation is K-linear but not L-linear", 1, [&](std::size_t) {
    if (n < 2) return true;
    Rng rng = c.rng(8, 0);
    auto g = alg.group_element(1);
    auto x = alg.random_scalar(rng, 3), y = alg.random_scalar(rng, 3);
    auto k = ext.embed(ext.K().from_int(rng.uniform(2, 9)));
    const bool k_linear = alg.evaluate(g, k * x + y) == k * alg.evaluate(g, x) + alg.evaluate(g, y);
    // some canonical basis element is moved by g, so it is not L-linear
    bool witness = false;
    for (const auto& b : ext.canonical_basis().elements())
      if (alg.evaluate(g, b * x) != b * alg.evaluate(g, x)) witness = true;
    return k_linear && witness;
  });
}

template <class S>
void suite_dickson(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("dickson", out);
  const auto& alg = c.alg;
  const std::size_t t = c.opt.trials, n = alg.N();
  rec.check("transpose law D(a)^T = D(tau(a))", t, [&](std::size_t i) {
    Rng rng = c.rng(11, i);
    auto a = alg.random_element(rng, 2);
    return alg.dickson_matrix(a).transpose() == alg.dickson_matrix(alg.adjoint(a));
  });
  rec.check("rank characterization rk_L D(a) = rk_K a", t, [&](std::size_t i) {
    Rng rng = c.rng(12, i);
    const std::size_t r = i % (n + 1);
    auto a = alg.random_rank(rng, r, 2);
    auto rep = alg.rank_report(a);
    return rep.agree() && rep.dickson_rank_L == r;
  });
  rec.check("column j of D(a) is g_j o a", 1, [&](std::size_t) {
    Rng rng = c.rng(13, 0);
    auto a = alg.random_element(rng, 2);
    auto d = alg.dickson_matrix(a);
    for (std::size_t j = 0; j < n; ++j) {
      auto col = alg.compose(alg.group_element(j), a);
      for (std::size_t i = 0; i < n; ++i)
        if (d(i, j) != col[i]) return false;
    }
    return true;
  });
  const std::size_t ts = std::max<std::size_t>(1, t / 4);
  rec.check("Dickson similarity with a left eigenvector of A(m_alpha)", ts, [&](std::size_t i) {
    Rng rng = c.rng(14, i);
    auto a = i == 0 ? alg.identity() : alg.random_element(rng, 2);
    return alg.dickson_similarity_check(a);
  });
}

template <class S>
void suite_duality(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("duality", out);
  const auto& alg = c.alg;
  const auto& ext = *c.ext;
  const std::size_t t = c.opt.trials, n = alg.N();
  const std::size_t ts = std::max<std::size_t>(1, t / 4);
  rec.check("dual basis: Tr(b_i b*_j) = delta_ij and B** = B", ts, [&](std::size_t i) {
    Rng rng = c.rng(21, i);
    auto b = random_basis(ext, rng);
    auto d = ext.dual_basis(b);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (ext.trace_K(b[p] * d[q]) != (p == q ? ext.K().one() : ext.K().zero())) return false;
    return ext.dual_basis(d) == b;
  });
  rec.check("inverse Moore: M_G(B)^-1 = M_G(B*)^T", ts, [&](std::size_t i) {
    Rng rng = c.rng(22, i);
    auto b = random_basis(ext, rng);
    auto d = ext.dual_basis(b);
    return alg.moore_matrix(b.elements()) * alg.moore_matrix(d.elements()).transpose() ==
           Matrix<FieldElement<S>>::identity(n, ext.L().zero(), ext.L().one());
  });
  rec.check("dual of a normal basis is a normal basis", ts, [&](std::size_t i) {
    if (i == 0) return dual_normal_basis_check(ext, ext.normal_element());
    Rng rng = c.rng(23, i);
    for (int k = 0; k < 32; ++k) {
      auto x = alg.random_scalar(rng, 2);
      std::vector<FieldElement<S>> orbit;
      for (std::size_t g = 0; g < n; ++g) orbit.push_back(ext.apply(g, x));
      if (rank(alg.moore_matrix(orbit)) == n) return dual_normal_basis_check(ext, x);
    }
    return dual_normal_basis_check(ext, ext.normal_element());
  });
  auto random_code = [&](Rng& rng) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    std::vector<LGElement<S>> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(alg.random_element(rng, 2));
    return Code<S>::from_generators(alg, gens);
  };
  rec.check("dim C + dim C^perp = N and C^perp^perp = C", t, [&](std::size_t i) {
    Rng rng = c.rng(24, i);
    auto code = random_code(rng);
    return code.dim() + code.dual().dim() == n && code.dual().dual() == code;
  });
  rec.check("change of basis C(B1) = C(B2) X", ts, [&](std::size_t i) {
    Rng rng = c.rng(25, i);
    auto code = random_code(rng);
    auto b1 = random_basis(ext, rng), b2 = random_basis(ext, rng);
    return change_of_basis_check(code, b1, b2);
  });
  rec.check("matrix duality Ext_B(V)^perp = Ext_B*(V^perp)", ts, [&](std::size_t i) {
    Rng rng = c.rng(26, i);
    auto code = random_code(rng);
    return matrix_duality_check(code, random_basis(ext, rng));
  });
  if (!c.abelian()) {
    rec.skip("C^perp(B) = C(B*)^perp", "needs an abelian group");
    rec.skip("RM dual: generic = closed form", "needs an abelian group");
    rec.skip("RM dual in the evaluation setting", "needs an abelian group");
    return;
  }
  rec.check("C^perp(B) = C(B*)^perp", ts, [&](std::size_t i) {
    Rng rng = c.rng(27, i);
    auto code = random_code(rng);
    return dual_lg_check(code, random_basis(ext, rng));
  });
  ThetaAlgebra<S> th(alg);
  const std::size_t p = th.max_degree();
  rec.check("RM dual: generic = closed form", p + 1, [&](std::size_t r) {
    auto d = th.rm_dual(r);
    return d.dim() + th.rm_code(r).dim() == n;
  });
  rec.check("RM dual in the evaluation setting", p + 1, [&](std::size_t r) {
    Rng rng = c.rng(28, r);
    return th.rm_dual_evaluation_check(r, random_basis(ext, rng));
  });
}

template <class S>
void suite_rm(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("rm", out);
  const auto& alg = c.alg;
  ThetaAlgebra<S> th(alg);
  const auto& n = th.type();
  const std::size_t p = th.max_degree(), big_n = alg.N();
  rec.check("dimension: monomials = compositions = generating function = dim", p + 1, [&](std::size_t r) {
    return rm_dimension_all(r, n).agree() && th.rm_code(r).dim() == rm_dimension(r, n);
  });
  rec.check("distance: closed form = brute-force minimum = AF bound", p + 1, [&](std::size_t r) {
    const std::size_t d = rm_min_distance(r, n);
    return r == p ? d == 1 : d == af_lower_bound(n, r);
  });
  rec.check("k(r) + k(p-r-1) = N", p, [&](std::size_t r) { return rm_dimension(r, n) + rm_dimension(p - r - 1, n) == big_n; });
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t r = 0; r <= p; ++r)
      for (std::size_t s = 0; r + s <= p; ++s) pairs.emplace_back(r, s);
    rec.check("product law RM(r) o RM(r') = RM(r + r')", pairs.size(), [&](std::size_t i) {
      auto [r, s] = pairs[i];
      return product_code(th.rm_code(r), th.rm_code(s)) == th.rm_code(r + s);
    });
  }
  if (c.kummer()) {
    rec.check("min-weight codeword has rank d(r) and degree <= r", p + 1, [&](std::size_t r) {
      auto w = th.min_weight_codeword(r);
      return alg.rank_fast(w) == rm_min_distance(r, n) && th.rm_code(r).contains(w) && *th.degree(w) <= r;
    });
    rec.check("annihilator of span{a_i, .., a_i^k} has kernel dim k N/n_i", th.m(), [&](std::size_t i) {
      std::vector<FieldElement<S>> v;
      auto a = c.ext->radical(i);
      auto pw = a;
      for (std::size_t k = 1; k < n[i]; ++k) {
        v.push_back(pw);
        pw = pw * a;
      }
      auto poly = th.annihilator_poly(v, i);
      for (const auto& x : v)
        if (!alg.evaluate(poly, x).is_zero()) return false;
      return alg.rank_fast(poly) == big_n - v.size() * big_n / n[i];
    });
    bool roots = true;
    for (auto x : n)
      if (c.ext->spec().root_of_unity % static_cast<long>(x) != 0) roots = false;
    if (roots) {
      rec.check("G = Y Diag(B), Y = grid evaluation, Hamming distance", p + 1, [&](std::size_t r) {
        auto f = th.rm_generator_factorization(r);
        bool ok = f.factorization_holds && f.grid_matches;
        if (f.hamming_formula != 0 && big_n <= 16) ok = ok && f.hamming_distance == f.hamming_formula;
        return ok;
      });
    }
  } else {
    rec.skip("min-weight codeword has rank d(r) and degree <= r", "needs a Kummer tower");
  }
  auto rep = th.af_random_property_suite(c.opt.trials, c.opt.seed);
  out.push_back({"rm", "Alon-Furedi / Schwartz-Zippel / leading-term bounds", rep.checks - rep.violations.size(),
                 rep.checks, rep.violations.empty() ? "" : rep.violations.front().check});
}

template <class S>
void suite_ecp(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("ecp", out);
  const auto& alg = c.alg;
  ThetaAlgebra<S> th(alg);
  const auto& n = th.type();
  const std::size_t p = th.max_degree();
  // smallest r with a pair of positive radius
  std::optional<std::pair<std::size_t, TmaxResult>> choice;
  for (std::size_t r = 0; r + 1 <= p && !choice; ++r) {
    auto tm = t_max_search(r, n);
    if (tm.t_exhaustive >= 1) choice.emplace(r, tm);
  }
  if (!choice) {
    rec.skip("error-correcting pair", "no pair of positive radius for this type");
    return;
  }
  const auto [r, tm] = *choice;
  auto pair = rm_ecp_construct(th, r, tm.a, tm.b);
  rec.check("pair conditions (B o A in C^perp, dim A > t, distances)", 1,
            [&](std::size_t) { return pair_violations(pair).empty() && pair.verified(); });
  const std::size_t ts = std::max<std::size_t>(1, c.opt.trials / 4);
  auto props = ecp_property_checks(pair, pair.t, ts, c.opt.seed);
  out.push_back({"ecp", "K(c + e) = K(e)", props.k_translation ? ts : 0, ts, ""});
  out.push_back({"ecp", "<b o a, e> = <b, e o tau(a)>", props.adjunction ? ts : 0, ts, ""});
  out.push_back({"ecp", "K(e) = Short_supp(e)(A)", props.shortening ? ts : 0, ts, ""});
  rec.check("decode(c) = c", 1, [&](std::size_t) {
    Rng rng = c.rng(31, 0);
    std::vector<FieldElement<S>> msg;
    for (std::size_t k = 0; k < pair.c.dim(); ++k) msg.push_back(alg.random_scalar(rng, 2));
    auto cw = pair.c.combine(msg);
    auto res = decode(pair, cw);
    return res.ok() && *res.codeword == cw;
  });
  auto rt = ecp_roundtrip(pair, pair.t, ts, c.opt.seed);
  out.push_back({"ecp", "decode random rank-t errors (r=" + std::to_string(r) + ", t=" + std::to_string(pair.t) + ")",
                 rt.successes, rt.trials, ""});
}

template <class S>
void suite_skew(const Ctx<S>& c, std::vector<CheckResult>& out) {
  Recorder rec("skew", out);
  const auto& alg = c.alg;
  SkewRing<S> ring{ThetaAlgebra<S>(alg)};
  const auto& th = ring.theta();
  const auto& n = th.type();
  const std::size_t t = c.opt.trials;
  std::size_t maxn = *std::max_element(n.begin(), n.end());
  rec.check("phi(f g) = phi(f) o phi(g)", t, [&](std::size_t i) {
    Rng rng = c.rng(41, i);
    auto f = ring.random(rng, 3, 2 * maxn, 2), g = ring.random(rng, 3, 2 * maxn, 2);
    return ring.phi(ring.mul(f, g)) == alg.compose(ring.phi(f), ring.phi(g));
  });
  rec.check("reduce is idempotent and compatible with products", t, [&](std::size_t i) {
    Rng rng = c.rng(42, i);
    auto f = ring.random(rng, 3, 2 * maxn, 2), g = ring.random(rng, 3, 2 * maxn, 2);
    auto rf = ring.reduce(f);
    return ring.reduce(rf) == rf && ring.is_reduced(rf) &&
           ring.reduce(ring.mul(f, g)) == ring.reduce(ring.mul(rf, ring.reduce(g)));
  });
  rec.check("phi o phi_inv = id and phi_inv(phi(f)) = reduce(f)", t, [&](std::size_t i) {
    Rng rng = c.rng(43, i);
    auto a = alg.random_element(rng, 2);
    auto f = ring.random(rng, 4, 2 * maxn, 2);
    return ring.phi(ring.phi_inv(a)) == a && ring.phi_inv(ring.phi(f)) == ring.reduce(f);
  });
  rec.check("x_i^n_i is central and maps to Id", th.m(), [&](std::size_t i) {
    Rng rng = c.rng(44, i);
    MultiIndex u(th.m(), 0);
    u[i] = n[i];
    auto xn = ring.monomial(alg.L().one(), u);
    auto a = ring.constant(alg.random_scalar(rng, 3));
    return ring.mul(xn, a) == ring.mul(a, xn) && ring.phi(xn) == alg.identity();
  });
  rec.check("x_i a = theta_i(a) x_i", th.m(), [&](std::size_t i) {
    Rng rng = c.rng(45, i);
    auto a = alg.random_scalar(rng, 3);
    auto lhs = ring.mul(ring.x(i), ring.constant(a));
    MultiIndex u(th.m(), 0);
    u[i] = 1;
    return lhs == ring.monomial(c.ext->apply(th.group_index(u), a), u);
  });
  rec.check("witness: lt(x^v P) = x^(u+v) on Z, products independent, rk P >= |Z|", t, [&](std::size_t i) {
    Rng rng = c.rng(46, i);
    auto poly = th.random_polynomial(rng, 2);
    const std::size_t rk = alg.rank_fast(poly);
    for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex}) {
      auto rep = ring.af_witness_check(poly, o, 256, c.opt.seed + i);
      if (!rep.ok() || rk < rep.z_size) return false;
    }
    return true;
  });
}

}  // namespace

template <class S>
std::vector<CheckResult> run_suite(const std::string& name, std::shared_ptr<const Extension<S>> ext,
                                   const SuiteOptions& opt) {
  const auto& names = suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw DomainError("unknown suite `" + name + "` (expected algebra, dickson, duality, ecp, rm, skew or all)");
  Ctx<S> c{ext, GroupAlgebra<S>(ext), opt};
  std::vector<CheckResult> out;
  const bool all = name == "all";
  auto needs_abelian = [&](const std::string& s) {
    if (c.abelian()) return true;
    if (!all) throw DomainError("suite `" + s + "` needs an abelian Galois group; " + ext->spec().summary() + " is not abelian");
    out.push_back({s, "suite", 0, 0, "skipped: needs an abelian group"});
    return false;
  };
  if (all || name == "algebra") suite_algebra(c, out);
  if (all || name == "dickson") suite_dickson(c, out);
  if (all || name == "duality") suite_duality(c, out);
  if ((all || name == "rm") && needs_abelian("rm")) suite_rm(c, out);
  if ((all || name == "ecp") && needs_abelian("ecp")) suite_ecp(c, out);
  if ((all || name == "skew") && needs_abelian("skew")) suite_skew(c, out);
  return out;
}

template std::vector<CheckResult> run_suite(const std::string&, std::shared_ptr<const Extension<Rational>>,
                                            const SuiteOptions&);
template std::vector<CheckResult> run_suite(const std::string&, std::shared_ptr<const Extension<ModP>>,
                                            const SuiteOptions&);
template Basis<Rational> random_basis(const Extension<Rational>&, Rng&, long);
template Basis<ModP> random_basis(const Extension<ModP>&, Rng&, long);

}  // namespace lgrank
