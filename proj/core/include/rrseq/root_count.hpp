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

#ifndef RRSEQ_ROOT_COUNT_HPP
#define RRSEQ_ROOT_COUNT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rrseq/poly.hpp"

namespace rrseq {

// Region isolating exactly one distinct real root: either the root itself
// (a rational point, lo == hi) or an open interval (lo, hi) with lo < hi
// whose endpoints are not roots.
struct IsolRegion {
  enum class Kind { point, open_interval };
  Kind kind = Kind::open_interval;
  Frac lo;
  Frac hi;

  friend bool operator==(const IsolRegion&, const IsolRegion&) = default;
};

struct RootCount {
  long total = 0;     // real roots counted with multiplicity
  long distinct = 0;  // distinct real roots
  // One entry per distinct real root, sorted, pairwise disjoint.
  std::vector<std::pair<IsolRegion, unsigned>> regions;
};

// Sign variations of a coefficient sequence after deleting zeros.
int sign_variations(const std::vector<Int>& coeffs);

// Cauchy-style bound: every real root lies strictly inside (-B, B).
// B = 1 + ceil(max_{i<deg} |a_i| / |a_deg|).  Precondition: degree >= 1.
Int root_bound(const Poly& p);

// Isolating regions for all real roots of a square-free polynomial of
// degree >= 1 (bisection with Descartes' rule on (0,1)-transformed
// coefficients).  Throws std::invalid_argument if p is not square-free.
std::vector<IsolRegion> isolate_real_roots(const Poly& p);

// Number of distinct real roots in (lo, hi] by Sturm's theorem; an absent
// bound means the corresponding infinity.  Finite endpoints must not be
// roots.  Precondition: p nonzero.
long sturm_count(const Poly& p, const std::optional<Frac>& lo,
                 const std::optional<Frac>& hi);

// Full real-root count of an arbitrary nonzero integer polynomial:
// square-free decomposition, isolation per factor, totals with
// multiplicity.  Regions across factors are refined until disjoint.
RootCount num_real_roots(const Poly& p);

}  // namespace rrseq

#endif  // RRSEQ_ROOT_COUNT_HPP
