// Copyright 2026 The rrseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RRSEQ_POLY_HPP
#define RRSEQ_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rrseq {

using Int = mpz_class;
using Frac = mpq_class;

// Reduced fraction with positive denominator.  den == 0 throws.
Frac make_frac(const Int& num, const Int& den);

// Renders as "num/den" even when den == 1, so downstream text output is
// unambiguous about exactness.
std::string frac_str(const Frac& x);

int sign_of(const Int& x);
int sign_of(const Frac& x);

// Dense univariate polynomial over Z, coefficients in ascending order.
// The zero polynomial is the empty coefficient vector and reports degree
// kZeroDegree.  Coefficient vectors are always trimmed, so for a nonzero
// polynomial the last stored coefficient is the (nonzero) leading one.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);

  static Poly constant(Int c);
  static Poly monomial(Int c, std::size_t k);  // c * x^k

  // Parses the text form: ascending coefficients, decimal integers,
  // separated by whitespace.  "13827 2456 99 1" is x^3+99x^2+2456x+13827.
  // Empty input or a malformed token throws std::invalid_argument.
  static Poly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  // Coefficient of x^i; zero beyond the degree.
  const Int& coeff(std::size_t i) const;
  const Int& leading() const;  // precondition: nonzero polynomial
  const std::vector<Int>& coeffs() const { return c_; }

  // Inverse of parse: ascending decimal coefficients, single spaces.
  // The zero polynomial prints as "0".
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Int> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Int& s);

Poly derivative(const Poly& p);
Poly reciprocal(const Poly& p);  // x^deg * p(1/x); throws on zero

Frac eval(const Poly& p, const Frac& x);
Int eval_int(const Poly& p, const Int& x);
// Exact sign of p(x) at a rational point, computed with integers only.
int sign_at(const Poly& p, const Frac& x);

struct ContentPrimitive {
  Int content;     // carries the sign of the leading coefficient
  Poly primitive;  // positive leading coefficient
};
// Throws on the zero polynomial.
ContentPrimitive content_primitive(const Poly& p);

// Primitive gcd with positive leading coefficient (subresultant PRS).
// Throws if both arguments are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

bool divides_exactly(const Poly& d, const Poly& p);
// Quotient p/d when the division is exact over Z; throws otherwise.
Poly divide_exact(const Poly& p, const Poly& d);

struct SqfFactor {
  Poly factor;  // primitive, positive leading coefficient, square-free
  unsigned multiplicity = 0;
};

struct SqfDecomp {
  Int content;
  std::vector<SqfFactor> factors;  // ascending multiplicity, pairwise coprime
  Poly reconstruct() const;        // content * prod factor^multiplicity
};

// Yun's algorithm.  Throws on the zero polynomial.
SqfDecomp squarefree_decompose(const Poly& p);
bool is_squarefree(const Poly& p);

}  // namespace rrseq

#endif  // RRSEQ_POLY_HPP
