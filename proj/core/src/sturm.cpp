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

#include <stdexcept>
#include <vector>

#include "poly_internal.hpp"
#include "rrseq/root_count.hpp"

namespace rrseq {

namespace {

// Sturm chain over Z.  Each remainder is the negated pseudo-remainder,
// reduced to its primitive part.  prem multiplies by lc^(delta+1), which can
// flip signs when lc < 0 and delta is even; compensate so every element
// keeps the sign of the rational Sturm chain.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  Poly a = content_primitive(p).primitive;
  chain.push_back(a);
  if (a.degree() < 1) return chain;
  Poly b = derivative(a);
  b = content_primitive(b).primitive;
  chain.push_back(b);
  while (chain.back().degree() >= 1) {
    const Poly& A = chain[chain.size() - 2];
    const Poly& B = chain.back();
    const int delta = A.degree() - B.degree();
    Poly r = detail::prem(A, B);
    if (r.is_zero()) break;
    // next ~ -rem(A, B) = -r / lc(B)^(delta+1); the primitive part has a
    // positive leading coefficient, so reapply the sign -rem would carry.
    const int prem_scale_sign =
        (sgn(B.leading()) < 0 && delta % 2 == 0) ? -1 : 1;
    const int next_sign = -sgn(r.leading()) * prem_scale_sign;
    Poly next = content_primitive(r).primitive;
    if (next_sign < 0) next = -next;
    chain.push_back(std::move(next));
  }
  return chain;
}

int sign_at_inf(const Poly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

long variations_at(const std::vector<Poly>& chain,
                   const std::optional<Frac>& x, bool plus_inf) {
  long var = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    const int s = x ? sign_at(q, *x) : sign_at_inf(q, plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

long sturm_count(const Poly& p, const std::optional<Frac>& lo,
                 const std::optional<Frac>& hi) {
  if (p.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
  if (p.degree() == 0) return 0;
  if (lo && hi && !(*lo < *hi))
    throw std::invalid_argument("empty interval: lo must be below hi");
  if (lo && sign_at(p, *lo) == 0)
    throw std::invalid_argument("interval endpoint is a root");
  if (hi && sign_at(p, *hi) == 0)
    throw std::invalid_argument("interval endpoint is a root");

  const std::vector<Poly> chain = sturm_chain(p);
  const long vl = variations_at(chain, lo, false);
  const long vh = variations_at(chain, hi, true);
  return vl - vh;
}

}  // namespace rrseq
