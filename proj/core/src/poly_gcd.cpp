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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "poly_internal.hpp"

namespace rrseq {
namespace detail {

// Pseudo-remainder prem(A, B) = lc(B)^(deg A - deg B + 1) * A mod B.
// Preconditions: B nonzero, deg A >= deg B.
Poly prem(const Poly& A, const Poly& B) {
  const int da = A.degree();
  const int db = B.degree();
  std::vector<Int> r(A.coeffs());
  const Int& lb = B.leading();
  for (int k = da; k >= db; --k) {
    // Multiply the tail below x^k by lc(B) and eliminate x^k.
    Int lead = r[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] *= lb;
    r[static_cast<std::size_t>(k)] = 0;
    if (sgn(lead) != 0) {
      const int off = k - db;
      for (int i = 0; i < db; ++i)
        r[static_cast<std::size_t>(off + i)] -= lead * B.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(db > 0 ? db : 0));
  return Poly(std::move(r));
}

namespace {

// Two large primes for the coprimality probe; both avoid small-coefficient
// collisions and fit the 64-bit modular kernel below.
constexpr std::uint64_t kProbePrimes[] = {2305843009213693951ull,   // 2^61 - 1
                                          9223372036854775783ull};  // 2^63 - 25

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return acc;
}

std::vector<std::uint64_t> reduce_mod(const Poly& p, std::uint64_t m) {
  std::vector<std::uint64_t> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), m);
  return r;
}

int mod_degree(const std::vector<std::uint64_t>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

// Degree of gcd(f, g) over Z/m (m prime).  Plain Euclid; both leading
// coefficients must survive reduction, which the caller checks.
int mod_gcd_degree(std::vector<std::uint64_t> f, std::vector<std::uint64_t> g,
                   std::uint64_t m) {
  int df = mod_degree(f);
  int dg = mod_degree(g);
  while (dg >= 0) {
    // f mod g in place.
    const std::uint64_t inv = powmod(g[static_cast<std::size_t>(dg)], m - 2, m);
    for (int k = df; k >= dg; --k) {
      const std::uint64_t lead = f[static_cast<std::size_t>(k)];
      if (lead == 0) continue;
      const std::uint64_t q = mulmod(lead, inv, m);
      const int off = k - dg;
      for (int i = 0; i <= dg; ++i) {
        std::uint64_t& fi = f[static_cast<std::size_t>(off + i)];
        fi = (fi + m - mulmod(q, g[static_cast<std::size_t>(i)], m)) % m;
      }
    }
    f.resize(static_cast<std::size_t>(dg));
    std::swap(f, g);
    df = dg;
    dg = mod_degree(g);
  }
  return df;
}

}  // namespace

// Sound one-sided test: true means gcd(f, g) is constant over Q.  A false
// return is inconclusive.  Relies on lc(G) | lc(f) for any primitive divisor
// G of a primitive f: if neither leading coefficient vanishes mod q and the
// reduced gcd has degree 0, no nonconstant common divisor can exist.
bool definitely_coprime(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  for (const std::uint64_t m : kProbePrimes) {
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), m) == 0) continue;
    if (mpz_fdiv_ui(g.leading().get_mpz_t(), m) == 0) continue;
    if (mod_gcd_degree(reduce_mod(f, m), reduce_mod(g, m), m) == 0) return true;
  }
  return false;
}

}  // namespace detail

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return content_primitive(q).primitive;
  if (q.is_zero()) return content_primitive(p).primitive;

  Poly A = content_primitive(p).primitive;
  Poly B = content_primitive(q).primitive;
  if (A.degree() < B.degree()) std::swap(A, B);
  if (B.degree() == 0) return Poly::constant(1);
  if (detail::definitely_coprime(A, B)) return Poly::constant(1);

  // Subresultant polynomial remainder sequence (Collins).
  Int g = 1, h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    Poly R = detail::prem(A, B);
    if (R.is_zero()) return content_primitive(B).primitive;
    if (R.degree() == 0) return Poly::constant(1);
    A = std::move(B);
    // B = R / (g * h^delta), exact scalar division.
    Int div = g;
    for (int i = 0; i < delta; ++i) div *= h;
    std::vector<Int> c(R.size());
    for (std::size_t i = 0; i < R.size(); ++i)
      mpz_divexact(c[i].get_mpz_t(), R.coeffs()[i].get_mpz_t(), div.get_mpz_t());
    B = Poly(std::move(c));
    g = A.leading();
    if (delta >= 1) {
      // h = g^delta / h^(delta-1), exact.
      Int num = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      Int den = 1;
      for (int i = 0; i + 1 < delta; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-freeness of the zero polynomial");
  if (p.degree() <= 1) return true;
  const Poly f = content_primitive(p).primitive;
  const Poly fp = derivative(f);
  if (detail::definitely_coprime(f, fp)) return true;
  return poly_gcd(f, fp).degree() == 0;
}

}  // namespace rrseq
