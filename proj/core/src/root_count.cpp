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

namespace {

struct Tagged {
  IsolRegion reg;
  unsigned mult;
  const Poly* factor;
};

bool region_less(const Tagged& a, const Tagged& b) {
  if (a.reg.lo != b.reg.lo) return a.reg.lo < b.reg.lo;
  return a.reg.hi < b.reg.hi;
}

// Sorted neighbors are disjoint when the left one ends at or before the
// right one starts; open intervals may share an endpoint.
bool disjoint_sorted(const IsolRegion& a, const IsolRegion& b) {
  if (a.kind == IsolRegion::Kind::point && b.kind == IsolRegion::Kind::point)
    return a.lo != b.lo;
  if (a.kind == IsolRegion::Kind::point) return a.lo <= b.lo;
  if (b.kind == IsolRegion::Kind::point) return a.hi <= b.lo;
  return a.hi <= b.lo;
}

// Shrink an interval region around its root: keep the half with the sign
// change, or collapse to a point when the midpoint is the root.
void bisect(Tagged& t) {
  if (t.reg.kind == IsolRegion::Kind::point) return;
  Frac mid = t.reg.lo + t.reg.hi;
  mid /= 2;
  const int sm = sign_at(*t.factor, mid);
  if (sm == 0) {
    t.reg = {IsolRegion::Kind::point, mid, mid};
    return;
  }
  if (sign_at(*t.factor, t.reg.lo) != sm)
    t.reg.hi = mid;
  else
    t.reg.lo = mid;
}

}  // namespace

RootCount num_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
  RootCount rc;
  if (p.degree() == 0) return rc;

  const SqfDecomp dec = squarefree_decompose(p);
  std::vector<Tagged> items;
  for (const SqfFactor& sf : dec.factors)
    for (const IsolRegion& r : isolate_real_roots(sf.factor))
      items.push_back({r, sf.multiplicity, &sf.factor});

  std::sort(items.begin(), items.end(), region_less);
  if (dec.factors.size() > 1) {
    // Regions from different factors hold different roots (the factors are
    // coprime), so bisection separates every overlapping pair eventually.
    for (;;) {
      bool clean = true;
      for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        if (disjoint_sorted(items[i].reg, items[i + 1].reg)) continue;
        clean = false;
        bisect(items[i]);
        bisect(items[i + 1]);
      }
      if (clean) break;
      std::sort(items.begin(), items.end(), region_less);
    }
  }

  rc.distinct = static_cast<long>(items.size());
  for (const Tagged& t : items) {
    rc.total += t.mult;
    rc.regions.emplace_back(t.reg, t.mult);
  }
  return rc;
}

}  // namespace rrseq
