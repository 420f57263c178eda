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

#include "rrseq/rr_engine.hpp"

#include <cstdlib>
#include <stdexcept>

#include "rrseq/parallel.hpp"
#include "rrseq/seq_catalog.hpp"

namespace rrseq {

int resolve_threads(int requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("RRSEQ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc >= 1 ? static_cast<int>(hc) : 1;
}

namespace {

long section_root_count(const std::vector<Int>& terms, std::size_t n) {
  std::vector<Int> c(terms.begin(), terms.begin() + static_cast<long>(n) + 1);
  return num_real_roots(Poly(std::move(c))).total;
}

// First i <= n_max whose section does not have all of its i roots real;
// evaluates sections in ascending order and stops at the first failure.
std::optional<long> first_incomplete_section(const std::vector<Int>& terms,
                                             std::size_t n_max) {
  long prev = 0;
  for (std::size_t i = 0; i <= n_max; ++i) {
    long bi;
    if (i > 0 && sgn(terms[i]) == 0) {
      bi = prev;
    } else {
      bi = section_root_count(terms, i);
    }
    if (bi != static_cast<long>(i)) return static_cast<long>(i);
    prev = bi;
  }
  return std::nullopt;
}

}  // namespace

RRReport rr_transform(std::vector<Int> terms, std::size_t n_max, int threads,
                      std::string source) {
  if (terms.size() <= n_max)
    throw std::invalid_argument("not enough terms for requested n_max");
  if (sgn(terms[0]) == 0)
    throw std::invalid_argument("a_0 must be nonzero");

  // When a_n == 0 the section is unchanged, so only the distinct effective
  // degrees need a root count.
  std::vector<std::size_t> eff(n_max + 1);
  std::vector<std::size_t> distinct;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n == 0 || sgn(terms[n]) != 0) {
      eff[n] = n;
      distinct.push_back(n);
    } else {
      eff[n] = eff[n - 1];
    }
  }

  std::vector<long> counts(distinct.size());
  parallel_for_index(distinct.size(), resolve_threads(threads),
                     [&](std::size_t idx) {
                       counts[idx] = section_root_count(terms, distinct[idx]);
                     });

  std::vector<long> by_degree(n_max + 1, 0);
  for (std::size_t idx = 0; idx < distinct.size(); ++idx)
    by_degree[distinct[idx]] = counts[idx];

  RRReport rep;
  rep.source = std::move(source);
  rep.b.resize(n_max + 1);
  rep.dual.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rep.b[n] = by_degree[eff[n]];
    rep.dual[n] = static_cast<long>(n) - rep.b[n];
    if (!rep.first_nonminimal && rep.b[n] != static_cast<long>(n % 2))
      rep.first_nonminimal = static_cast<long>(n);
  }
  terms.resize(n_max + 1);
  rep.terms = std::move(terms);
  return rep;
}

std::pair<bool, std::vector<long>> is_completely_real(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
  if (sgn(p.coeff(0)) == 0)
    throw std::invalid_argument("constant term must be nonzero");
  const RRReport rep =
      rr_transform(p.coeffs(), static_cast<std::size_t>(p.degree()));
  bool ok = true;
  for (std::size_t i = 0; i < rep.b.size(); ++i)
    if (rep.b[i] != static_cast<long>(i)) {
      ok = false;
      break;
    }
  return {ok, rep.b};
}

std::optional<long> find_c_n(long n, std::optional<long> k_start, long k_cap,
                             int threads) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (k_cap < 0) throw std::invalid_argument("k_cap must be nonnegative");
  (void)threads;  // sections are evaluated with early exit, cheapest serial
  long k0 = k_start.value_or(0);
  if (k0 < 0) k0 = 0;
  for (long k = k0; k <= k_cap; ++k) {
    std::vector<Int> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      Int t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(i + 1),
                    static_cast<unsigned long>(k));
      terms.push_back(std::move(t));
    }
    if (!first_incomplete_section(terms, static_cast<std::size_t>(n)))
      return k;
  }
  return std::nullopt;
}

std::optional<long> table2_min_k(long n, long k_cap, int threads) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k_cap < 0) throw std::invalid_argument("k_cap must be nonnegative");
  (void)threads;
  for (long k = 0; k <= k_cap; ++k) {
    const Poly p = build_rootprod_poly(n, k);
    if (!first_incomplete_section(p.coeffs(),
                                  static_cast<std::size_t>(p.degree())))
      return k;
  }
  return std::nullopt;
}

Poly build_squares_poly(const Int& c, long n) {
  if (sgn(c) == 0) throw std::invalid_argument("c must be nonzero");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    Int v;
    mpz_pow_ui(v.get_mpz_t(), c.get_mpz_t(),
               static_cast<unsigned long>(n * n - k * k));
    coeffs[static_cast<std::size_t>(k)] = std::move(v);
  }
  return Poly(std::move(coeffs));
}

Poly build_rootprod_poly(long n, long k) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Poly acc = Poly::constant(1);
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> lin(2);
    lin[0] = 1;
    mpz_ui_pow_ui(lin[1].get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(k));
    acc = acc * Poly(std::move(lin));
  }
  return acc;
}

std::vector<CrScanEntry> eulerian_poly_cr_scan(long n_lo, long n_hi,
                                               int threads) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<CrScanEntry> out(count);
  parallel_for_index(count, resolve_threads(threads), [&](std::size_t idx) {
    const long n = n_lo + static_cast<long>(idx);
    const EulerianRow row = eulerian_row(static_cast<unsigned>(n));
    const Poly p{std::vector<Int>(row.values)};
    auto [ok, b] = is_completely_real(p);
    out[idx] = {n, ok, std::move(b)};
  });
  return out;
}

}  // namespace rrseq
