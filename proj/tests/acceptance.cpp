// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden_s3.hpp"
#include "lgrank/verify.hpp"

using namespace lgrank;

namespace {

using QExt = std::shared_ptr<const Extension<Rational>>;
using FExt = std::shared_ptr<const Extension<ModP>>;

QExt tower(long e, std::vector<Radical> r, FieldSpec::Base base = FieldSpec::Base::cyclotomic) {
  return Extension<Rational>::create(FieldSpec::tower(e, std::move(r), base));
}
FExt finite(std::uint32_t p, std::size_t n) { return Extension<ModP>::create(FieldSpec::finite_field(p, n)); }

QExt kummer3() { return tower(3, {{3, Rational(2)}}); }
QExt kummer33() { return tower(3, {{3, Rational(2)}, {3, Rational(3)}}); }
QExt kummer32() { return tower(6, {{3, Rational(2)}, {2, Rational(3)}}); }
QExt biquadratic() { return tower(2, {{2, Rational(2)}, {2, Rational(3)}}, FieldSpec::Base::rational); }
QExt triquadratic() {
  return tower(2, {{2, Rational(2)}, {2, Rational(3)}, {2, Rational(5)}}, FieldSpec::Base::rational);
}

struct Outcome {
  bool ok{true};
  std::ostringstream detail;
  std::string failures;
  void fail(const std::string& what) {
    ok = false;
    failures += (failures.empty() ? "" : "; ") + what;
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

// ---------------------------------------------------------------------------

template <class S>
void rank_field(Outcome& out, std::shared_ptr<const Extension<S>> ext, const std::string& label, std::size_t count,
                std::uint64_t seed) {
  GroupAlgebra<S> alg(ext);
  const std::size_t n = alg.N();
  Rng brng(seed ^ 0x5bd1e995ULL);
  const Basis<S> b = random_basis(*ext, brng);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(Rng::split(seed, i));
    auto a = i % 4 == 3 ? alg.random_element(rng, 2) : alg.random_rank(rng, i % (n + 1), 2);
    const auto rep = alg.rank_report(a);
    // rank is independent of the basis used for the evaluation vector and its Ext matrix
    const auto ev = alg.ev_vector(a, b.elements());
    const std::size_t moore_b = rank(alg.moore_matrix(ev));
    const std::size_t ext_b = rank(ext_matrix(*ext, ev, b));
    const bool target = i % 4 == 3 || rep.endo_rank_K == i % (n + 1);
    if (!rep.agree() || moore_b != rep.endo_rank_K || ext_b != rep.endo_rank_K || !target) ++bad;
  }
  out.detail << label << " N=" << n << " " << (count - bad) << "/" << count << "; ";
  if (bad) out.fail(label + ": " + std::to_string(bad) + " disagreements");
}

void c1(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  rank_field(out, finite(2, 4), "F16/F2", 100, 101);
  rank_field(out, finite(3, 3), "F27/F3", 100, 102);
  rank_field(out, kummer3(), "Q(z3)(2^1/3)/Q(z3)", 100, 103);
  rank_field(out, tower(3, {{3, Rational(2)}}, FieldSpec::Base::rational), "Q(z3,2^1/3)/Q", 100, 104);
  rank_field(out, kummer33(), "Q(z3)(2^1/3,3^1/3)/Q(z3)", 100, 105);
  rank_field(out, tower(6, {{2, Rational(2)}, {3, Rational(3)}}, FieldSpec::Base::rational), "Q(z3,2^1/2,3^1/3)/Q",
             100, 106);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.detail << "total " << sec << " s";
  if (sec >= 60) out.fail("runtime " + std::to_string(sec) + " s exceeds 60 s");
}

void c2(Outcome& out) {
  for (long p : {2L, 3L, 5L}) {
    const auto r = golden_s3::check(p);
    out.detail << "p=" << p << (r.ok() ? " ok" : " MISMATCH") << "; ";
    if (!r.basis_is_canonical) out.fail("p=" + std::to_string(p) + " basis");
    if (!r.automorphism_matrices) out.fail("p=" + std::to_string(p) + " A,B,X,Y");
    if (!r.generator_rows) out.fail("p=" + std::to_string(p) + " generator rows");
    if (!r.ext_span) out.fail("p=" + std::to_string(p) + " matrix code span");
  }
}

template <class S>
void duality_field(Outcome& out, std::shared_ptr<const Extension<S>> ext, const std::string& label,
                   std::size_t trials) {
  const auto res = run_suite<S>("duality", ext, {77, trials});
  std::size_t checks = 0;
  for (const auto& r : res) {
    if (r.skipped()) {
      out.fail(label + ": skipped " + r.name);
      continue;
    }
    checks += r.total;
    if (!r.ok()) out.fail(label + ": " + r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.total));
  }
  out.detail << label << " N=" << ext->degree() << " " << checks << " checks; ";
}

void c3(Outcome& out) {
  duality_field(out, finite(2, 4), "F16", 6);
  duality_field(out, finite(3, 3), "F27", 6);
  duality_field(out, kummer3(), "Q(z3)(2^1/3)", 6);
  duality_field(out, biquadratic(), "Q(2^1/2,3^1/2)", 6);
  duality_field(out, kummer32(), "Q(z6)(2^1/3,3^1/2)", 3);
  duality_field(out, kummer33(), "Q(z3)(2^1/3,3^1/3)", 3);
}

void c4(Outcome& out) {
  std::vector<std::pair<std::string, QExt>> fields{{"(2,2)", biquadratic()},
                                                   {"(3,2)", kummer32()},
                                                   {"(3,3)", kummer33()},
                                                   {"(2,2,2)", triquadratic()}};
  std::uint64_t seed = 400;
  for (const auto& [label, ext] : fields) {
    ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(ext)};
    if (join(th.type()) != label) out.fail("type " + join(th.type()) + " expected " + label);
    const auto rep = th.af_random_property_suite(500, ++seed);
    out.detail << label << " " << rep.trials << " polys " << rep.checks << " checks " << rep.violations.size()
               << " violations; ";
    if (rep.trials < 500) out.fail(label + ": only " + std::to_string(rep.trials) + " trials");
    for (const auto& v : rep.violations)
      out.fail(label + " trial " + std::to_string(v.trial) + " " + v.check + ": rank " + std::to_string(v.rank) +
               " < " + v.bound);
  }
  // f(a, N) for every tuple with entries >= 1, at most six entries and product <= 64
  std::size_t inputs = 0, mism = 0;
  std::vector<std::size_t> a;
  std::function<void(std::size_t)> rec = [&](std::size_t prod) {
    if (!a.empty()) {
      std::size_t sum = 0;
      for (auto x : a) sum += x;
      for (std::size_t total = a.size(); total <= sum; ++total) {
        ++inputs;
        if (f_min_product_closed(a, total) != f_min_product_bruteforce(a, total)) ++mism;
      }
    }
    if (a.size() == 6) return;
    for (std::size_t x = 1; x * prod <= 64; ++x) {
      a.push_back(x);
      rec(prod * x);
      a.pop_back();
    }
  };
  rec(1);
  out.detail << "f(a,N): " << inputs << " inputs, " << mism << " mismatches";
  if (mism) out.fail("f(a,N): " + std::to_string(mism) + " mismatches");
}

void c5(Outcome& out) {
  std::size_t types = 0, cases = 0;
  std::vector<std::size_t> n;
  std::function<void(std::size_t)> rec = [&](std::size_t prod) {
    if (!n.empty()) {
      ++types;
      const std::size_t p = rm_max_degree(n);
      for (std::size_t r = 0; r <= p; ++r) {
        ++cases;
        const auto k = rm_dimension_all(r, n);
        if (!k.agree())
          out.fail("k disagreement at r=" + std::to_string(r) + " n=" + join(n));
        const std::size_t closed = r == p ? 1 : af_lower_bound(n, r);
        const std::size_t brute = rm_min_distance_bruteforce(r, n);
        if (closed != brute)
          out.fail("d at r=" + std::to_string(r) + " n=" + join(n) + ": " + std::to_string(closed) + " vs " +
                   std::to_string(brute));
      }
    }
    for (std::size_t x = 2; x * prod <= 64; ++x) {
      n.push_back(x);
      rec(prod * x);
      n.pop_back();
    }
  };
  rec(1);
  out.detail << types << " types, " << cases << " (r,n) cases; ";
  for (const auto& ext : {kummer33(), kummer32()}) {
    ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(ext)};
    const auto& n2 = th.type();
    for (std::size_t r = 0; r <= th.max_degree(); ++r) {
      const auto w = th.min_weight_codeword(r);
      const std::size_t rk = th.algebra().rank_fast(w);
      const std::size_t d = rm_min_distance(r, n2);
      const auto code = th.rm_code(r);
      if (rk != d || !code.contains(w))
        out.fail("min weight codeword n=" + join(n2) + " r=" + std::to_string(r) + ": rank " + std::to_string(rk) +
                 " vs d " + std::to_string(d));
    }
    out.detail << "min_weight_codeword " << join(n2) << " r=0.." << th.max_degree() << "; ";
  }
}

void c6(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  auto ext = Extension<ModP>::create(FieldSpec::finite_field(2, 4));
  ThetaAlgebra<ModP> th{GroupAlgebra<ModP>(ext)};
  for (std::size_t r = 0; r <= 3; ++r) {
    const auto code = th.rm_code(r);
    const std::size_t d = min_distance_bruteforce(code);
    out.detail << "r=" << r << " k=" << code.dim() << " d=" << d << "; ";
    if (d != 4 - r) out.fail("r=" + std::to_string(r) + ": d=" + std::to_string(d));
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.detail << sec << " s";
  if (sec >= 30) out.fail("runtime " + std::to_string(sec) + " s exceeds 30 s");
}

void c7(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(kummer33())};
  const auto pair = rm_ecp_construct(th, 1, 1, 1);
  const auto viol = pair_violations(pair);
  for (const auto& v : viol) out.fail("pair: " + v);
  if (pair.t < 2) out.fail("pair radius " + std::to_string(pair.t) + " below 2");
  const std::uint64_t seed = 2024;
  const auto rep = ecp_roundtrip(pair, 2, 50, seed);
  out.detail << "decoded " << rep.successes << "/" << rep.trials << " (failures " << rep.failures << ", miscorrected "
             << rep.miscorrected << ", " << rep.seconds << " s); ";
  if (rep.successes != 50) out.fail(std::to_string(rep.successes) + "/50 decoded");
  const auto again = ecp_roundtrip(pair, 2, 3, seed);
  const bool same = std::equal(again.digests.begin(), again.digests.end(), rep.digests.begin());
  out.detail << "rerun of 3 trials " << (same ? "identical" : "DIFFERENT") << "; ";
  if (!same) out.fail("not deterministic under seed");
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.detail << "total " << sec << " s";
  if (sec >= 600) out.fail("runtime exceeds 10 min");
}

void c8(Outcome& out) {
  for (const auto& ext : {biquadratic(), kummer33()}) {
    ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(ext)};
    const std::size_t n = th.type()[0], m = th.m();
    for (std::size_t r = 0; r <= th.max_degree(); ++r) {
      const auto f = th.rm_generator_factorization(r);
      const std::size_t formula = classical_rm_distance(r, n, m);
      const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      if (!f.factorization_holds) out.fail(at + ": G != Y Diag");
      if (!f.grid_matches) out.fail(at + ": Y is not the grid evaluation matrix");
      if (f.hamming_distance != formula || f.hamming_formula != formula)
        out.fail(at + ": Hamming " + std::to_string(f.hamming_distance) + " vs " + std::to_string(formula));
      out.detail << at << " d_H=" << f.hamming_distance << "; ";
    }
  }
}

void c9(Outcome& out) {
  for (const auto& ext : {kummer33(), biquadratic()}) {
    SkewRing<Rational> ring{ThetaAlgebra<Rational>(GroupAlgebra<Rational>(ext))};
    const auto& th = ring.theta();
    const auto& alg = th.algebra();
    const std::size_t maxn = *std::max_element(th.type().begin(), th.type().end());
    std::size_t hom = 0, wit = 0;
    for (std::size_t i = 0; i < 100; ++i) {
      Rng rng(Rng::split(900, i));
      auto f = ring.random(rng, 3, 2 * maxn, 2), g = ring.random(rng, 3, 2 * maxn, 2);
      if (ring.phi(ring.mul(f, g)) == alg.compose(ring.phi(f), ring.phi(g))) ++hom;
    }
    for (std::size_t i = 0; i < 100; ++i) {
      Rng rng(Rng::split(901, i));
      auto p = th.random_polynomial(rng, 2);
      const std::size_t rk = alg.rank_fast(p);
      const auto deg = th.degree(p);
      // rank >= |Z| >= the bound of the RM distance for deg P
      const std::size_t bound = deg ? (*deg >= th.max_degree() ? 1 : af_lower_bound(th.type(), *deg)) : 0;
      bool good = deg.has_value();
      for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex}) {
        const auto rep = ring.af_witness_check(p, o, 256, 902 + i);
        good = good && rep.ok() && rk >= rep.z_size && rep.z_size >= bound;
      }
      if (good) ++wit;
    }
    out.detail << join(th.type()) << " phi " << hom << "/100, witness " << wit << "/100; ";
    if (hom != 100) out.fail(join(th.type()) + ": phi homomorphism " + std::to_string(hom) + "/100");
    if (wit != 100) out.fail(join(th.type()) + ": witness " + std::to_string(wit) + "/100");
  }
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(LGRANK_CLI) + " " + args + " 2>&1";
  std::string text;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return text;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, got);
  pclose(p);
  return text;
}

void c10(Outcome& out) {
  const auto t33 = t_max_search(1, {3, 3});
  out.detail << "(3,3) r=1 t=" << t33.t_exhaustive << "; ";
  if (t33.t_exhaustive != 2) out.fail("(3,3) r=1: t=" + std::to_string(t33.t_exhaustive));
  const auto t44 = t_max_search(1, {4, 4});
  out.detail << "(4,4) r=1 exhaustive " << t44.t_exhaustive << " closed "
             << (t44.t_closed_form ? std::to_string(*t44.t_closed_form) : "-")
             << (t44.discrepancy() ? " flagged" : " not flagged") << "; ";
  if (t44.t_exhaustive != 3 || t44.t_closed_form != 2 || !t44.discrepancy()) out.fail("(4,4) r=1 discrepancy");
  const std::string csv = run_cli("radii --steps 20 --n 8,16");
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  out.detail << "radii gamma=0 row: " << row;
  if (row.rfind("0.000000000000,0.500000000000,0.267949192431,", 0) != 0) out.fail("radii gamma=0 row: " + row);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"rank characterization on finite and tower backends", c1},
      {"S3 golden fixture", c2},
      {"duality suite", c3},
      {"Alon-Furedi and Schwartz-Zippel bounds, f(a,N)", c4},
      {"theta-RM dimension and distance", c5},
      {"MRD specialization over F16/F2", c6},
      {"ECP decoding at N=9", c7},
      {"generator matrix factorization", c8},
      {"skew polynomial isomorphism and witness", c9},
      {"t_max and radii data", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failed;
    std::printf("%s criterion %zu: %s [%.1f s] %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), sec,
                out.detail.str().c_str());
    if (!out.ok) std::printf("  failures: %s\n", out.failures.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
