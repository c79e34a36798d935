// SPDX-License-Identifier: Apache-2.0
#include "lgrank/scalar.hpp"

#include <cctype>

namespace lgrank {

Rational Rational::parse(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw DomainError("empty rational literal");
  if (t[0] == '+') t = t.substr(1);
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && x[0] == '-') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (!valid_int(t.substr(0, slash))) throw DomainError("bad rational literal: " + s);
  if (slash != std::string::npos) {
    std::string den = t.substr(slash + 1);
    if (!valid_int(den) || den[0] == '-') throw DomainError("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw DomainError("bad rational literal: " + s);
  if (slash != std::string::npos && sgn(q.get_den()) == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

ModP ModP::inverse() const {
  if (v_ == 0) throw SingularMatrixError("inverse of zero mod p");
  // extended Euclid
  long a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    long q = a / m;
    long t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw DomainError("modulus is not prime");
  return ModP(x0, p_);
}

ModP ScalarTraits<ModP>::parse(const std::string& s, std::uint32_t p) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw DomainError("bad F_p literal: " + s);
    return ModP(v, p);
  } catch (const std::logic_error&) {
    throw DomainError("bad F_p literal: " + s);
  }
}

}  // namespace lgrank
