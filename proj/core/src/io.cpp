// SPDX-License-Identifier: Apache-2.0
#include "lgrank/io.hpp"

#include <cstdio>

namespace lgrank {

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class S>
Json element_to_json(const FieldElement<S>& x) {
  const Field<S>* f = x.field();
  if (f == nullptr) throw DomainError("cannot serialise an element without a field");
  if (f->base() != nullptr) {
    Json out = Json::array();
    for (const auto& c : f->to_base(x)) out.push_back(element_to_json(c));
    return out;
  }
  if (f->dim() == 1) return x.coeffs()[0].str();
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(c.str());
  return out;
}

template <class S>
FieldElement<S> element_from_json(const Field<S>& f, const Json& j) {
  if (f.base() != nullptr) {
    if (!j.is_array() || j.size() != f.degree_over_base())
      throw DomainError("field element: expected " + std::to_string(f.degree_over_base()) + " base coordinates");
    std::vector<FieldElement<S>> c;
    for (const auto& x : j) c.push_back(element_from_json(*f.base(), x));
    return f.from_base(c);
  }
  auto scalar = [&](const Json& s) {
    if (!s.is_string()) throw DomainError("field element: coordinates are strings");
    return ScalarTraits<S>::parse(s.get<std::string>(), f.characteristic());
  };
  if (f.dim() == 1) return f.from_scalar(scalar(j));
  if (!j.is_array() || j.size() != f.dim())
    throw DomainError("field element: expected " + std::to_string(f.dim()) + " coordinates");
  std::vector<S> c;
  for (const auto& x : j) c.push_back(scalar(x));
  return f.make(std::move(c));
}

template <class S>
Json matrix_to_json(const Matrix<FieldElement<S>>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class S>
Matrix<FieldElement<S>> matrix_from_json(const Field<S>& f, const Json& j) {
  const auto r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
  const auto& e = j.at("entries");
  if (e.size() != r) throw DomainError("matrix: row count mismatch");
  Matrix<FieldElement<S>> m(r, c, f.zero());
  for (std::size_t i = 0; i < r; ++i) {
    if (e[i].size() != c) throw DomainError("matrix: column count mismatch");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = element_from_json(f, e[i][k]);
  }
  return m;
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(cells[i]);
  }
  return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !cell.empty()) row.push_back(std::move(cell));
      if (!row.empty()) rows.push_back(std::move(row));
      row.clear();
      cell.clear();
      any = false;
    } else {
      cell += ch;
      any = true;
    }
  }
  if (quoted) throw DomainError("csv: unterminated quoted cell");
  if (any || !cell.empty()) row.push_back(std::move(cell));
  if (!row.empty()) rows.push_back(std::move(row));
  return rows;
}

template <class S>
std::string matrix_to_csv(const Matrix<FieldElement<S>>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Json e = element_to_json(m(i, j));
      cells.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    out += csv_row(cells) + "\n";
  }
  return out;
}

template <class S>
Matrix<FieldElement<S>> matrix_from_csv(const Field<S>& f, const std::string& text) {
  auto rows = csv_parse(text);
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix<FieldElement<S>> m(rows.size(), c, f.zero());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("csv matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      const auto& cell = rows[i][j];
      Json e = !cell.empty() && cell[0] == '[' ? Json::parse(cell) : Json(cell);
      m(i, j) = element_from_json(f, e);
    }
  }
  return m;
}

template <class S>
Json lg_to_json(const Extension<S>& ext, const LGElement<S>& a) {
  if (a.size() != ext.degree()) throw DomainError("L[G] element has the wrong length");
  Json c = Json::array();
  for (std::size_t g = 0; g < a.size(); ++g) c.push_back(element_to_json(a[g]));
  return Json{{"field_hash", hash_hex(ext.hash())}, {"coeffs", c}};
}

template <class S>
LGElement<S> lg_from_json(const Extension<S>& ext, const Json& j) {
  if (j.at("field_hash").get<std::string>() != hash_hex(ext.hash()))
    throw DomainError("L[G] element was written for a different field descriptor");
  const auto& c = j.at("coeffs");
  if (c.size() != ext.degree()) throw DomainError("L[G] element has the wrong length");
  std::vector<FieldElement<S>> out;
  for (const auto& x : c) out.push_back(element_from_json(ext.L(), x));
  return LGElement<S>(std::move(out));
}

template <class S>
Json code_to_json(const Code<S>& c, const RmMetadata* rm) {
  const auto& ext = c.ext();
  Json gens = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) gens.push_back(lg_to_json(ext, c.basis_vector(i))["coeffs"]);
  Json out{{"field", ext.spec().canonical_text()},
           {"field_hash", hash_hex(ext.hash())},
           {"length", c.length()},
           {"dim", c.dim()},
           {"generators", gens}};
  if (rm != nullptr) out["rm"] = Json{{"type", rm->type}, {"r", rm->r}, {"shift", rm->shift}};
  return out;
}

template <class S>
Code<S> code_from_json(const GroupAlgebra<S>& alg, const Json& j) {
  const auto& ext = alg.ext();
  if (j.at("field_hash").get<std::string>() != hash_hex(ext.hash()))
    throw DomainError("code was written for a different field descriptor");
  std::vector<LGElement<S>> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(lg_from_json(ext, Json{{"field_hash", hash_hex(ext.hash())}, {"coeffs", g}}));
  Code<S> c = Code<S>::from_generators(alg, gens);
  if (j.contains("dim") && j["dim"].get<std::size_t>() != c.dim()) throw DomainError("code: dimension mismatch");
  return c;
}

template <class S>
Json skew_to_json(const SkewPolynomial<S>& f) {
  Json out = Json::array();
  for (const auto& [u, c] : f) out.push_back(Json{{"exp", u}, {"coeff", element_to_json(c)}});
  return out;
}

template <class S>
SkewPolynomial<S> skew_from_json(const Field<S>& L, const Json& j) {
  SkewPolynomial<S> f;
  for (const auto& t : j) {
    auto c = element_from_json(L, t.at("coeff"));
    if (c.is_zero()) throw DomainError("skew polynomial: zero coefficient stored");
    if (!f.emplace(t.at("exp").get<MultiIndex>(), c).second) throw DomainError("skew polynomial: repeated exponent");
  }
  return f;
}

#define LGRANK_IO(S)                                                                            \
  template Json element_to_json(const FieldElement<S>&);                                        \
  template FieldElement<S> element_from_json(const Field<S>&, const Json&);                     \
  template Json matrix_to_json(const Matrix<FieldElement<S>>&);                                 \
  template Matrix<FieldElement<S>> matrix_from_json(const Field<S>&, const Json&);              \
  template std::string matrix_to_csv(const Matrix<FieldElement<S>>&);                           \
  template Matrix<FieldElement<S>> matrix_from_csv(const Field<S>&, const std::string&);        \
  template Json lg_to_json(const Extension<S>&, const LGElement<S>&);                           \
  template LGElement<S> lg_from_json(const Extension<S>&, const Json&);                         \
  template Json code_to_json(const Code<S>&, const RmMetadata*);                                \
  template Code<S> code_from_json(const GroupAlgebra<S>&, const Json&);                         \
  template Json skew_to_json(const SkewPolynomial<S>&);                                         \
  template SkewPolynomial<S> skew_from_json(const Field<S>&, const Json&);

LGRANK_IO(Rational)
LGRANK_IO(ModP)

}  // namespace lgrank
