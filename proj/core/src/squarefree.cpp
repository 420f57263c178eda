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

#include "poly_internal.hpp"
#include "rrseq/poly.hpp"

namespace rrseq {

Poly SqfDecomp::reconstruct() const {
  Poly acc = Poly::constant(content);
  for (const SqfFactor& sf : factors)
    for (unsigned i = 0; i < sf.multiplicity; ++i) acc = acc * sf.factor;
  return acc;
}

// Yun's algorithm over Z.  All divisions are exact: every divisor is a
// primitive gcd of primitive polynomials.
SqfDecomp squarefree_decompose(const Poly& p) {
  if (p.is_zero())
    throw std::invalid_argument("square-free decomposition of the zero polynomial");

  auto [content, f] = content_primitive(p);
  SqfDecomp out{std::move(content), {}};
  if (f.degree() <= 0) return out;

  const Poly fp = derivative(f);
  if (f.degree() == 1 || detail::definitely_coprime(f, fp)) {
    out.factors.push_back({std::move(f), 1});
    return out;
  }

  const Poly u = poly_gcd(f, fp);
  if (u.degree() == 0) {
    out.factors.push_back({std::move(f), 1});
    return out;
  }

  Poly v = divide_exact(f, u);
  Poly w = divide_exact(fp, u);
  unsigned i = 1;
  while (v.degree() > 0) {
    const Poly z = w - derivative(v);
    const Poly h = poly_gcd(v, z);
    if (h.degree() > 0) out.factors.push_back({h, i});
    v = divide_exact(v, h);
    w = divide_exact(z, h);
    ++i;
  }
  return out;
}

}  // namespace rrseq
