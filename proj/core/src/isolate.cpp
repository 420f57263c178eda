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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rrseq/root_count.hpp"

namespace rrseq {

int sign_variations(const std::vector<Int>& coeffs) {
  int var = 0;
  int last = 0;
  for (const Int& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

Int root_bound(const Poly& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("root bound needs degree at least 1");
  Int maxabs = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Int a = abs(p.coeffs()[i]);
    if (a > maxabs) maxabs = std::move(a);
  }
  Int lead = abs(p.leading());
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), maxabs.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

namespace {

// In-place Taylor shift by one: c(x) -> c(x+1).
void taylor_shift1(std::vector<Int>& c) {
  const std::size_t n = c.size() - 1;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = n; i-- > j;) c[i] += c[i + 1];
}

// Sign variations of the Descartes test polynomial (1+x)^n q(1/(1+x)),
// stopping as soon as two variations are certain.  The shift finalizes one
// output coefficient per pass and prefix variations never decrease, so the
// early exit is sound.  Returns 0, 1, or 2 (meaning two or more).
int mobius_variations_capped(const std::vector<Int>& q) {
  std::vector<Int> r(q.rbegin(), q.rend());
  const std::size_t n = r.size() - 1;
  int var = 0;
  int last = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = n; i-- > j;) r[i] += r[i + 1];
    const int s = sgn(r[j]);
    if (s != 0) {
      if (last != 0 && s != last && ++var >= 2) return 2;
      last = s;
    }
  }
  const int s = sgn(r[n]);
  if (s != 0 && last != 0 && s != last) ++var;
  return var;
}

// Divide out a large common power of two; keeps coefficient growth in
// check along deep subdivision paths.
void strip_twos(std::vector<Int>& q) {
  mp_bitcnt_t minval = 0;
  bool first = true;
  for (const Int& c : q) {
    if (sgn(c) == 0) continue;
    const mp_bitcnt_t v = mpz_scan1(c.get_mpz_t(), 0);
    if (first || v < minval) {
      minval = v;
      first = false;
    }
    if (minval < 64) return;
  }
  if (first) return;
  for (Int& c : q)
    mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), minval);
}

class Isolator {
 public:
  std::vector<IsolRegion> regions;

  void emit_point(const Frac& m) {
    regions.push_back({IsolRegion::Kind::point, m, m});
  }

  void emit_interval(const Frac& a, const Frac& b) {
    if (a < b)
      regions.push_back({IsolRegion::Kind::open_interval, a, b});
    else
      regions.push_back({IsolRegion::Kind::open_interval, b, a});
  }

  // q holds scaled coefficients of the input restricted to the x-range
  // between lo and hi under the affine map t in (0,1) -> x; the map may be
  // increasing or decreasing, all sign logic lives in t-space.  Once a root
  // at lo is divided out, left descendants keep the same lo but no longer
  // see it in their coefficients, hence the inherited flag.
  void rec(std::vector<Int> q, const Frac& lo, const Frac& hi,
           bool inherited_lo_root = false) {
    // A zero constant block means lo itself is a root; it belongs to
    // whoever split it off, so drop the factor and remember the flag.
    std::size_t strip = 0;
    while (strip < q.size() && sgn(q[strip]) == 0) ++strip;
    const bool lo_root = inherited_lo_root || strip > 0;
    if (strip) q.erase(q.begin(), q.begin() + static_cast<long>(strip));
    if (q.size() <= 1) return;
    strip_twos(q);

    const int v = sign_variations(q);
    if (v == 0) return;  // no roots on (0, inf) at all

    Int at_one = 0;
    for (const Int& c : q) at_one += c;
    const bool hi_root = sgn(at_one) == 0;

    bool must_split = false;
    if (v == 1) {
      // Exactly one root on (0, inf); place it by endpoint signs.
      if (hi_root) return;  // that root is t = 1, not interior
      if (sgn(q[0]) == sgn(at_one)) return;
      if (!lo_root) {
        emit_interval(lo, hi);
        return;
      }
      must_split = true;  // interior root but lo is a root: shrink first
    }
    if (!must_split) {
      const int w = mobius_variations_capped(q);
      if (w == 0) return;
      if (w == 1 && !lo_root && !hi_root) {
        emit_interval(lo, hi);
        return;
      }
    }

    // Split at t = 1/2: left is 2^n q(x/2), right its shift by one.
    const std::size_t n = q.size() - 1;
    std::vector<Int> left(q.size());
    for (std::size_t i = 0; i <= n; ++i)
      mpz_mul_2exp(left[i].get_mpz_t(), q[i].get_mpz_t(), n - i);
    Int apex = 0;
    for (const Int& c : left) apex += c;
    Frac mid = lo + hi;
    mid /= 2;
    if (sgn(apex) == 0) emit_point(mid);
    std::vector<Int> right(left);
    taylor_shift1(right);
    rec(std::move(left), lo, mid, lo_root);
    rec(std::move(right), mid, hi, false);
  }
};

}  // namespace

std::vector<IsolRegion> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
  if (p.degree() < 1)
    throw std::invalid_argument("isolation needs degree at least 1");
  if (!is_squarefree(p))
    throw std::invalid_argument("polynomial must be square-free");

  Isolator iso;
  if (sgn(p.coeff(0)) == 0) iso.emit_point(Frac(0));

  const Int B = root_bound(p);
  const std::size_t n = p.size();
  std::vector<Int> qpos(n), qneg(n);
  Int power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    qpos[i] = p.coeffs()[i] * power;
    qneg[i] = (i % 2 == 0) ? qpos[i] : -qpos[i];
    power *= B;
  }
  iso.rec(std::move(qpos), Frac(0), Frac(B));
  iso.rec(std::move(qneg), Frac(0), Frac(-B));

  std::sort(iso.regions.begin(), iso.regions.end(),
            [](const IsolRegion& a, const IsolRegion& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  return iso.regions;
}

}  // namespace rrseq
