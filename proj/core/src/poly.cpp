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

#include "rrseq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rrseq {

namespace {
const Int kZero = 0;
}  // namespace

Frac make_frac(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("fraction with zero denominator");
  Frac f(num, den);
  f.canonicalize();
  return f;
}

std::string frac_str(const Frac& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int sign_of(const Int& x) { return sgn(x); }
int sign_of(const Frac& x) { return sgn(x); }

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::constant(Int c) {
  std::vector<Int> v;
  if (sgn(c) != 0) v.push_back(std::move(c));
  return Poly(std::move(v));
}

Poly Poly::monomial(Int c, std::size_t k) {
  if (sgn(c) == 0) return Poly();
  std::vector<Int> v(k + 1, kZero);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::parse(std::string_view text) {
  std::vector<Int> coeffs;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string token(text.substr(i, j - i));
    Int v;
    if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0)
      throw std::invalid_argument("bad coefficient token: '" + token + "'");
    coeffs.push_back(std::move(v));
    i = j;
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial text");
  return Poly(std::move(coeffs));
}

const Int& Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Int& Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += c_[i].get_str();
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Int> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Int> c(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Int& s) {
  if (sgn(s) == 0) return Poly();
  std::vector<Int> c(a.coeffs());
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return Poly();
  std::vector<Int> c(p.size() - 1, kZero);
  for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly(std::move(c));
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  std::vector<Int> c(p.coeffs());
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

Frac eval(const Poly& p, const Frac& x) {
  Frac acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += Frac(p.coeffs()[i]);
  }
  return acc;
}

Int eval_int(const Poly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p.coeffs()[i];
  }
  return acc;
}

int sign_at(const Poly& p, const Frac& x) {
  if (p.is_zero()) return 0;
  // Homogeneous Horner: sign of sum a_i num^i den^(deg-i); den > 0.
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  Int acc = p.coeffs().back();
  Int dp = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dp *= den;
    acc *= num;
    acc += p.coeffs()[i] * dp;
  }
  return sgn(acc);
}

ContentPrimitive content_primitive(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  Int g = 0;
  for (const Int& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<Int> c(p.size(), kZero);
  for (std::size_t i = 0; i < p.size(); ++i)
    mpz_divexact(c[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return {std::move(g), Poly(std::move(c))};
}

bool divides_exactly(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  if (p.degree() < d.degree()) return false;
  std::vector<Int> rem(p.coeffs());
  const auto& dc = d.coeffs();
  const Int& lead = d.leading();
  for (std::size_t k = rem.size(); k-- > 0 && k + 1 >= dc.size();) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) return false;
    Int q;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    const std::size_t off = k - (dc.size() - 1);
    for (std::size_t i = 0; i < dc.size(); ++i) rem[off + i] -= q * dc[i];
  }
  for (const Int& r : rem)
    if (sgn(r) != 0) return false;
  return true;
}

Poly divide_exact(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return Poly();
  if (p.degree() < d.degree()) throw std::invalid_argument("inexact polynomial division");
  std::vector<Int> rem(p.coeffs());
  const auto& dc = d.coeffs();
  const Int& lead = d.leading();
  std::vector<Int> quot(p.size() - dc.size() + 1, kZero);
  for (std::size_t k = rem.size(); k-- > 0 && k + 1 >= dc.size();) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw std::invalid_argument("inexact polynomial division");
    const std::size_t off = k - (dc.size() - 1);
    mpz_divexact(quot[off].get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i < dc.size(); ++i) rem[off + i] -= quot[off] * dc[i];
  }
  for (const Int& r : rem)
    if (sgn(r) != 0) throw std::invalid_argument("inexact polynomial division");
  return Poly(std::move(quot));
}

}  // namespace rrseq
