// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgrank/codes.hpp"
#include "lgrank/skewpoly.hpp"

namespace lgrank {

using Json = nlohmann::json;

std::string hash_hex(std::uint64_t h);

// Field element: a prime-field coordinate is a string ("p/q", "p", or a
// residue); a field with a base is a list over the base, recursively; any
// other field of dimension > 1 is a list of coordinate strings.
template <class S>
Json element_to_json(const FieldElement<S>& x);
template <class S>
FieldElement<S> element_from_json(const Field<S>& f, const Json& j);

template <class S>
Json matrix_to_json(const Matrix<FieldElement<S>>& m);
template <class S>
Matrix<FieldElement<S>> matrix_from_json(const Field<S>& f, const Json& j);

// RFC 4180 style: one line per row, cells are the compact JSON of the entry.
template <class S>
std::string matrix_to_csv(const Matrix<FieldElement<S>>& m);
template <class S>
Matrix<FieldElement<S>> matrix_from_csv(const Field<S>& f, const std::string& text);

std::string csv_quote(const std::string& cell);
std::string csv_row(const std::vector<std::string>& cells);
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

// L[G] element tagged with the field descriptor hash
template <class S>
Json lg_to_json(const Extension<S>& ext, const LGElement<S>& a);
template <class S>
LGElement<S> lg_from_json(const Extension<S>& ext, const Json& j);

struct RmMetadata {
  std::vector<std::size_t> type;
  std::size_t r{0};
  std::string shift;  // "", "theta^-1", ...
};

template <class S>
Json code_to_json(const Code<S>& c, const RmMetadata* rm = nullptr);
template <class S>
Code<S> code_from_json(const GroupAlgebra<S>& alg, const Json& j);

template <class S>
Json skew_to_json(const SkewPolynomial<S>& f);
template <class S>
SkewPolynomial<S> skew_from_json(const Field<S>& L, const Json& j);

}  // namespace lgrank
