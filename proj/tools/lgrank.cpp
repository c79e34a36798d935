// SPDX-License-Identifier: Apache-2.0
// lgrank: command line front end for the lgrank core library.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgrank/ecp.hpp"
#include "lgrank/io.hpp"
#include "lgrank/verify.hpp"

using namespace lgrank;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kFail = 1;   // checks failed or decoding failed
constexpr int kError = 2;  // invalid input

struct Common {
  std::string field;
  std::uint64_t seed{0};
  std::size_t trials{20};
  std::string out;
  std::string format{"text"};
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError("`" + path + "` is not valid JSON: " + e.what());
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(c.out, std::ios::binary);
  if (!o) throw DomainError("cannot write `" + c.out + "`");
  o << text;
}

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::vector<std::size_t> parse_type(const std::string& s) {
  std::vector<std::size_t> n;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',' || ch == 'x') {
      if (cur.empty()) throw DomainError("bad type `" + s + "`, expected e.g. 3,3");
      const long v = std::stol(cur);
      if (v < 2) throw DomainError("type entries must be >= 2");
      n.push_back(static_cast<std::size_t>(v));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else if (ch != ' ') {
      throw DomainError("bad type `" + s + "`, expected e.g. 3,3");
    }
  }
  return n;
}

std::string type_text(const std::vector<std::size_t>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

FieldSpec load_spec(const Common& c, bool required = true) {
  if (c.field.empty()) {
    if (required) throw DomainError("--field is required");
    return FieldSpec::tower(3, {{3, Rational(2)}}, FieldSpec::Base::cyclotomic);
  }
  return FieldSpec::load(c.field);
}

// calls f(ext) with the scalar type matching the backend
template <class F>
int with_field(const FieldSpec& spec, F&& f) {
  if (spec.backend == FieldSpec::Backend::finite) return f(Extension<ModP>::create(spec));
  return f(Extension<Rational>::create(spec));
}

template <class S>
void require_abelian(const Extension<S>& ext, const std::string& what) {
  if (!ext.is_abelian() || ext.abelian() == nullptr)
    throw DomainError(what + " needs an abelian Galois group; " + ext.spec().summary() + " is not abelian");
}

template <class S>
std::string matrix_text(const Matrix<FieldElement<S>>& m) {
  return matrix_to_csv(m);
}

// ------------------------------------------------------------ field describe

template <class S>
int cmd_field_describe(const Common& c, std::shared_ptr<const Extension<S>> ext) {
  std::ostringstream os;
  const auto& e = *ext;
  const bool csv = c.format == "csv";
  auto kv = [&](const std::string& k, const std::string& v) {
    if (csv)
      os << csv_row({k, v}) << "\n";
    else
      os << k << ": " << v << "\n";
  };
  if (csv) os << "key,value\n";
  kv("field", e.spec().summary());
  kv("hash", hash_hex(e.hash()));
  kv("degree", std::to_string(e.degree()));
  kv("abelian", e.is_abelian() ? "yes" : "no");
  if (const auto* ab = e.abelian()) kv("type", type_text(ab->orders));
  for (std::size_t g = 0; g < e.group_order(); ++g) kv("automorphism " + std::to_string(g), e.group()[g].label);
  for (std::size_t i = 0; i < e.degree(); ++i) kv("basis " + std::to_string(i), e.canonical_basis()[i].str());
  kv("normal element", e.normal_element().str());
  emit(c, os.str());
  return kOk;
}

// ---------------------------------------------------------------- code build

template <class S>
Code<S> rm_with_shift(const ThetaAlgebra<S>& th, std::size_t r, const std::string& shift) {
  Code<S> code = th.rm_code(r);
  if (shift == "theta^-1") return code.compose_right(th.theta_minus_one());
  if (!shift.empty() && shift != "none") throw DomainError("unknown shift `" + shift + "` (none or theta^-1)");
  return code;
}

template <class S>
int cmd_code_build(const Common& c, std::shared_ptr<const Extension<S>> ext, std::optional<std::size_t> r,
                   const std::string& shift, const std::string& generators) {
  GroupAlgebra<S> alg(ext);
  std::optional<Code<S>> code;
  RmMetadata meta;
  if (r) {
    require_abelian(*ext, "a theta-Reed-Muller code");
    ThetaAlgebra<S> th(alg);
    if (*r > th.max_degree())
      throw DomainError("r = " + std::to_string(*r) + " exceeds the maximal degree " + std::to_string(th.max_degree()));
    code = rm_with_shift(th, *r, shift);
    meta = {th.type(), *r, shift == "none" ? "" : shift};
  } else {
    if (generators.empty()) throw DomainError("give --rm <r> or --generators <file>");
    Json j = read_json(generators);
    std::vector<LGElement<S>> gens;
    for (const auto& g : j) gens.push_back(lg_from_json(*ext, Json{{"field_hash", hash_hex(ext->hash())}, {"coeffs", g}}));
    code = Code<S>::from_generators(alg, gens);
  }
  if (c.format == "csv") {
    Matrix<FieldElement<S>> g(0, alg.N(), ext->L().zero());
    for (std::size_t i = 0; i < code->dim(); ++i) g.append_row(code->basis_vector(i).coeffs());
    emit(c, matrix_to_csv(g));
  } else {
    emit(c, code_to_json(*code, r ? &meta : nullptr).dump(1) + "\n");
  }
  return kOk;
}

// ------------------------------------------------------- encode / corrupt

template <class S>
int cmd_encode(const Common& c, std::shared_ptr<const Extension<S>> ext, const std::string& code_path,
               const std::string& message, bool seed_set) {
  GroupAlgebra<S> alg(ext);
  Code<S> code = code_from_json(alg, read_json(code_path));
  std::vector<FieldElement<S>> msg;
  if (!message.empty()) {
    Json j = read_json(message);
    if (!j.is_array() || j.size() != code.dim())
      throw DomainError("message must be a list of " + std::to_string(code.dim()) + " field elements");
    for (const auto& x : j) msg.push_back(element_from_json(ext->L(), x));
  } else {
    if (!seed_set) throw DomainError("a random message needs --seed");
    Rng rng(c.seed);
    for (std::size_t i = 0; i < code.dim(); ++i) msg.push_back(alg.random_scalar(rng, 2));
  }
  emit(c, lg_to_json(*ext, code.combine(msg)).dump(1) + "\n");
  return kOk;
}

template <class S>
int cmd_corrupt(const Common& c, std::shared_ptr<const Extension<S>> ext, const std::string& word, std::size_t t) {
  GroupAlgebra<S> alg(ext);
  if (t > alg.N()) throw DomainError("error rank exceeds N = " + std::to_string(alg.N()));
  auto w = lg_from_json(*ext, read_json(word));
  emit(c, lg_to_json(*ext, w + random_rank_error(alg, t, c.seed)).dump(1) + "\n");
  return kOk;
}

// ------------------------------------------------------------------- decode

template <class S>
int cmd_decode(const Common& c, std::shared_ptr<const Extension<S>> ext, const std::string& code_path,
               const std::string& word, std::size_t a, std::size_t b) {
  require_abelian(*ext, "decoding");
  GroupAlgebra<S> alg(ext);
  ThetaAlgebra<S> th(alg);
  Json j = read_json(code_path);
  if (!j.contains("rm")) throw DomainError("decode needs a code built with `code build --rm r --shift theta^-1`");
  const auto r = j["rm"].at("r").get<std::size_t>();
  Code<S> code = code_from_json(alg, j);
  auto received = lg_from_json(*ext, read_json(word));
  auto pair = rm_ecp_construct(th, r, a, b);
  if (!(pair.c == code)) throw DomainError("code descriptor is not RM(" + std::to_string(r) + ") o theta^-1");
  auto res = decode(pair, received);
  if (!res.ok()) {
    emit(c, "FAIL " + res.failure + "\n");
    return kFail;
  }
  emit(c, lg_to_json(*ext, *res.codeword).dump(1) + "\n");
  return kOk;
}

// -------------------------------------------------------------------- tables

int cmd_params(const Common& c, const std::vector<std::size_t>& n, std::size_t steps) {
  const std::size_t p = rm_max_degree(n);
  if (steps == 0) throw DomainError("--steps must be positive");
  const bool square = n.size() == 2 && n[0] == n[1];
  const bool csv = c.format == "csv";
  std::ostringstream os;
  std::vector<std::string> head{"r", "k", "d"};
  if (square) head.insert(head.end(), {"x", "k(x)", "d(x)"});
  if (csv)
    os << csv_row(head) << "\n";
  else
    os << "# type " << type_text(n) << ", N = " << rm_dimension(p, n) << "\n";
  for (std::size_t j = 0; j <= p * steps; ++j) {
    std::vector<std::string> row;
    if (j % steps == 0) {
      const std::size_t r = j / steps;
      row = {std::to_string(r), std::to_string(rm_dimension(r, n)), std::to_string(rm_min_distance(r, n))};
    } else if (square) {
      row = {"", "", ""};
    } else {
      continue;
    }
    if (square) {
      const double nn = static_cast<double>(n[0]), x = static_cast<double>(j) / static_cast<double>(steps);
      double k, d;
      if (x <= nn - 1) {
        k = (x + 1) * (x + 2) / 2;
        d = nn * nn - nn * x;
      } else {
        k = nn * nn - (2 * nn - 2 - x) * (2 * nn - 1 - x) / 2;
        d = 2 * nn - 1 - x;
      }
      row.insert(row.end(), {fixed12(x), fixed12(k), fixed12(d)});
    }
    if (csv) {
      os << csv_row(row) << "\n";
    } else {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "  " : "") << head[i] << "=" << (row[i].empty() ? "-" : row[i]);
      os << "\n";
    }
  }
  emit(c, os.str());
  return kOk;
}

int cmd_radii(const Common& c, std::size_t steps, const std::vector<std::size_t>& finite) {
  if (steps == 0) throw DomainError("--steps must be positive");
  std::ostringstream os;
  std::vector<std::string> head{"gamma", "unique", "ecp"};
  for (auto n : finite) head.push_back("tmax_n" + std::to_string(n));
  os << csv_row(head) << "\n";
  for (std::size_t i = 0; i <= steps; ++i) {
    const double g = static_cast<double>(i) / static_cast<double>(steps);
    std::vector<std::string> row{fixed12(g), fixed12(unique_radius(g)), fixed12(ecp_radius(g))};
    for (auto n : finite) {
      // r = floor(gamma n), exact in integers
      const std::size_t r = i * n / steps;
      const auto tm = t_max_search(r, {n, n});
      row.push_back(fixed12(static_cast<double>(tm.t_exhaustive) / static_cast<double>(n * n)));
    }
    os << csv_row(row) << "\n";
  }
  emit(c, os.str());
  return kOk;
}

int cmd_tmax(const Common& c, const std::vector<std::size_t>& n, std::optional<std::size_t> only_r) {
  const std::size_t p = rm_max_degree(n);
  std::ostringstream os;
  os << csv_row({"r", "t_exhaustive", "a", "b", "t_closed_form", "alpha", "discrepancy"}) << "\n";
  for (std::size_t r = 0; r < p; ++r) {
    if (only_r && *only_r != r) continue;
    const auto tm = t_max_search(r, n);
    os << csv_row({std::to_string(r), std::to_string(tm.t_exhaustive), std::to_string(tm.a), std::to_string(tm.b),
                   tm.t_closed_form ? std::to_string(*tm.t_closed_form) : "",
                   tm.t_closed_form ? fixed12(tm.alpha) : "", tm.discrepancy() ? "yes" : "no"})
       << "\n";
  }
  if (only_r && *only_r >= p) throw DomainError("r must be below the maximal degree " + std::to_string(p));
  emit(c, os.str());
  return kOk;
}

// -------------------------------------------------------------------- verify

template <class S>
int cmd_verify(const Common& c, std::shared_ptr<const Extension<S>> ext, const std::string& suite) {
  auto res = run_suite<S>(suite, ext, {c.seed, c.trials});
  std::ostringstream os;
  std::size_t failed = 0, skipped = 0;
  const bool csv = c.format == "csv";
  if (csv)
    os << "status,suite,check,passed,total,note\n";
  else
    os << "# " << ext->spec().summary() << ", seed " << c.seed << ", trials " << c.trials << "\n";
  for (const auto& r : res) {
    const std::string status = r.skipped() ? "SKIP" : r.ok() ? "PASS" : "FAIL";
    if (r.skipped()) ++skipped;
    else if (!r.ok()) ++failed;
    if (csv) {
      os << csv_row({status, r.suite, r.name, std::to_string(r.passed), std::to_string(r.total), r.note}) << "\n";
    } else {
      os << status << " " << r.suite << ": " << r.name;
      if (!r.skipped()) os << " [" << r.passed << "/" << r.total << "]";
      if (!r.note.empty()) os << " (" << r.note << ")";
      os << "\n";
    }
  }
  if (!csv)
    os << "# " << res.size() - skipped - failed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  emit(c, os.str());
  return failed == 0 ? kOk : kFail;
}

// -------------------------------------------------------------- factorize-rm

template <class S>
int cmd_factorize(const Common& c, std::shared_ptr<const Extension<S>> ext, std::size_t r) {
  require_abelian(*ext, "factorize-rm");
  GroupAlgebra<S> alg(ext);
  ThetaAlgebra<S> th(alg);
  if (r > th.max_degree()) throw DomainError("r exceeds the maximal degree " + std::to_string(th.max_degree()));
  auto f = th.rm_generator_factorization(r);
  std::ostringstream os;
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  if (c.format == "csv") {
    os << "matrix,row,col,value\n";
    auto dump = [&](const std::string& name, const Matrix<FieldElement<S>>& m) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) os << csv_row({name, std::to_string(i), std::to_string(j), m(i, j).str()}) << "\n";
    };
    dump("Y", f.y);
    dump("Diag", f.diag);
    dump("G", f.g);
    os << csv_row({"verdict", "", "", yes(f.factorization_holds && f.grid_matches)}) << "\n";
  } else {
    os << "# type " << type_text(th.type()) << ", r = " << r << "\n";
    os << "# Y\n" << matrix_to_csv(f.y) << "# Diag\n" << matrix_to_csv(f.diag) << "# G\n" << matrix_to_csv(f.g);
    os << "G = Y Diag: " << yes(f.factorization_holds) << "\n";
    os << "Y = monomials on the root-of-unity grid: " << yes(f.grid_matches) << "\n";
    if (f.hamming_formula != 0)
      os << "Hamming distance of Y: " << f.hamming_distance << " (formula " << f.hamming_formula << ")\n";
  }
  emit(c, os.str());
  return f.factorization_holds && f.grid_matches ? kOk : kFail;
}

// ----------------------------------------------------------------- roundtrip

template <class S>
int cmd_roundtrip(const Common& c, std::shared_ptr<const Extension<S>> ext, std::size_t r, std::size_t a,
                  std::size_t b, std::optional<std::size_t> t_opt) {
  require_abelian(*ext, "roundtrip");
  GroupAlgebra<S> alg(ext);
  ThetaAlgebra<S> th(alg);
  auto pair = rm_ecp_construct(th, r, a, b);
  const std::size_t t = t_opt.value_or(pair.t);
  if (t > alg.N()) throw DomainError("error rank exceeds N = " + std::to_string(alg.N()));
  auto rep = ecp_roundtrip(pair, t, c.trials, c.seed);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "r,a,b,radius,t,trials,successes,failures,miscorrected\n";
    os << csv_row({std::to_string(r), std::to_string(a), std::to_string(b), std::to_string(pair.t), std::to_string(t),
                   std::to_string(rep.trials), std::to_string(rep.successes), std::to_string(rep.failures),
                   std::to_string(rep.miscorrected)})
       << "\n";
  } else {
    os << "roundtrip " << ext->spec().summary() << " r=" << r << " a=" << a << " b=" << b << " radius=" << pair.t
       << " t=" << t << ": " << rep.successes << "/" << rep.trials << " decoded, " << rep.failures << " failures, "
       << rep.miscorrected << " miscorrected\n";
  }
  emit(c, os.str());
  // wall time goes to stderr so stdout stays byte-deterministic
  std::cerr << "roundtrip time: " << fixed12(rep.seconds) << " s\n";
  return t <= pair.t && rep.successes != rep.trials ? kFail : kOk;
}

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lgrank: rank-metric codes in skew group algebras L[G]"};
  app.require_subcommand(1);
  Common c;
  bool seed_set = false;

  auto add_field = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--field", c.field, "field descriptor file");
    if (required) o->required();
  };
  auto add_seed = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--seed", c.seed, "u64 seed; all randomness derives from it");
    if (required) o->required();
    return o;
  };
  auto add_output = [&](CLI::App* s) {
    s->add_option("--out", c.out, "write to this file instead of stdout");
    s->add_option("--format", c.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  };

  auto* field = app.add_subcommand("field", "field descriptor tools");
  field->require_subcommand(1);
  auto* describe = field->add_subcommand("describe", "print degree, group and canonical basis");
  add_field(describe, true);
  add_output(describe);

  auto* code = app.add_subcommand("code", "code descriptor tools");
  code->require_subcommand(1);
  auto* build = code->add_subcommand("build", "build a code descriptor");
  std::optional<std::size_t> rm_r;
  std::string shift = "none", generators;
  add_field(build, true);
  add_output(build);
  build->add_option("--rm", rm_r, "theta-Reed-Muller code of degree r");
  build->add_option("--shift", shift, "none or theta^-1 (right composition)");
  build->add_option("--generators", generators, "JSON list of L[G] coefficient lists");

  std::string code_path, word, message;
  auto* encode = app.add_subcommand("encode", "encode a message (or a seeded random one)");
  add_field(encode, true);
  add_output(encode);
  add_seed(encode, false)->each([&](const std::string&) { seed_set = true; });
  encode->add_option("--code", code_path, "code descriptor")->required();
  encode->add_option("--message", message, "JSON list of dim C field elements");

  std::size_t rank_t = 0;
  auto* corrupt = app.add_subcommand("corrupt", "add a random error of given rank");
  add_field(corrupt, true);
  add_output(corrupt);
  add_seed(corrupt, true);
  corrupt->add_option("--word", word, "L[G] element")->required();
  corrupt->add_option("--rank", rank_t, "rank of the error")->required();

  std::size_t a = 0, b = 0;
  auto* dec = app.add_subcommand("decode", "decode with the theta-RM error-correcting pair (a, b)");
  add_field(dec, true);
  add_output(dec);
  dec->add_option("--code", code_path, "code descriptor of RM(r) o theta^-1")->required();
  dec->add_option("--word", word, "received L[G] element")->required();
  dec->add_option("--a", a, "degree of A")->required();
  dec->add_option("--b", b, "degree of B")->required();

  std::string type_s = "3,3";
  std::size_t steps = 1;
  auto* params = app.add_subcommand("params", "dimension and distance table of RM(r, n)");
  add_output(params);
  params->add_option("--n", type_s, "type, e.g. 3,3");
  params->add_option("--steps", steps, "samples per unit of x for the (n, n) curves");

  std::size_t radii_steps = 20;
  std::string finite_s = "8,16";
  auto* radii = app.add_subcommand("radii", "relative decoding radii as CSV");
  add_output(radii);
  radii->add_option("--steps", radii_steps, "gamma grid size");
  radii->add_option("--n", finite_s, "finite n columns");

  std::optional<std::size_t> tmax_r;
  auto* tmax = app.add_subcommand("tmax", "largest ECP radius per r");
  add_output(tmax);
  tmax->add_option("--n", type_s, "type, e.g. 3,3");
  tmax->add_option("--r", tmax_r, "single degree");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "algebra, dickson, duality, ecp, rm, skew or all")->required();
  add_field(verify, false);
  add_output(verify);
  add_seed(verify, true);
  verify->add_option("--trials", c.trials, "random trials per check");

  std::size_t fr = 0;
  auto* fact = app.add_subcommand("factorize-rm", "G = Y Diag factorization of the RM generator matrix");
  add_field(fact, true);
  add_output(fact);
  fact->add_option("--r", fr, "degree")->required();

  std::size_t rt_r = 0, rt_a = 0, rt_b = 0;
  std::optional<std::size_t> rt_t;
  auto* rt = app.add_subcommand("roundtrip", "encode, corrupt and decode random words");
  add_field(rt, true);
  add_output(rt);
  add_seed(rt, true);
  rt->add_option("--trials", c.trials, "number of words");
  rt->add_option("--r", rt_r, "degree of C")->required();
  rt->add_option("--a", rt_a, "degree of A")->required();
  rt->add_option("--b", rt_b, "degree of B")->required();
  rt->add_option("--t", rt_t, "error rank (default: the pair radius)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lgrank: error: " << one_line(e.what()) << "\n";
    return kError;
  }

  try {
    if (describe->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_field_describe(c, ext); });
    if (build->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_code_build(c, ext, rm_r, shift, generators); });
    if (encode->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_encode(c, ext, code_path, message, seed_set); });
    if (corrupt->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_corrupt(c, ext, word, rank_t); });
    if (dec->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_decode(c, ext, code_path, word, a, b); });
    if (params->parsed()) return cmd_params(c, parse_type(type_s), steps);
    if (radii->parsed()) return cmd_radii(c, radii_steps, parse_type(finite_s));
    if (tmax->parsed()) return cmd_tmax(c, parse_type(type_s), tmax_r);
    if (verify->parsed()) {
      const auto& names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw DomainError("unknown suite `" + suite + "` (expected algebra, dickson, duality, ecp, rm, skew or all)");
      return with_field(load_spec(c, false), [&](auto ext) { return cmd_verify(c, ext, suite); });
    }
    if (fact->parsed()) return with_field(load_spec(c), [&](auto ext) { return cmd_factorize(c, ext, fr); });
    if (rt->parsed())
      return with_field(load_spec(c), [&](auto ext) { return cmd_roundtrip(c, ext, rt_r, rt_a, rt_b, rt_t); });
  } catch (const std::exception& e) {
    std::cerr << "lgrank: error: " << one_line(e.what()) << "\n";
    return kError;
  }
  return kError;
}
