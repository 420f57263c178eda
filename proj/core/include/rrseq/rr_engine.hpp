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

#ifndef RRSEQ_RR_ENGINE_HPP
#define RRSEQ_RR_ENGINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrseq/poly.hpp"
#include "rrseq/root_count.hpp"

namespace rrseq {

// b_n = number of real roots, with multiplicity, of the n-th section
// a_0 + a_1 x + ... + a_n x^n.
struct RRReport {
  std::string source;               // label of the input sequence
  std::vector<Int> terms;           // a_0..a_n_max
  std::vector<long> b;              // b_0..b_n_max
  std::vector<long> dual;           // n - b_n
  std::optional<long> first_nonminimal;  // least n with b_n != n mod 2
};

// Requires terms.size() > n_max and terms[0] != 0.  When a_n == 0 the n-th
// section equals the previous one and its count is reused, not recomputed.
RRReport rr_transform(std::vector<Int> terms, std::size_t n_max,
                      int threads = 1, std::string source = {});

// Whether every section of p (constant term nonzero) has all real roots,
// i.e. b_i == i for 0 <= i <= deg p.  Returns the full b list either way.
std::pair<bool, std::vector<long>> is_completely_real(const Poly& p);

// Least k such that every section of sum (i+1)^k x^i, i <= n, has all real
// roots; searches k ascending from k_start (default 0) through k_cap.
// Returns nullopt when the cap is exhausted.
std::optional<long> find_c_n(long n, std::optional<long> k_start, long k_cap,
                             int threads = 1);

// Least k such that prod_{i=1}^n (i^k x + 1), expanded, is completely real;
// same cap convention as find_c_n.
std::optional<long> table2_min_k(long n, long k_cap, int threads = 1);

// Coefficients c^(n^2 - k^2) for x^k, k = 0..n; requires c != 0, n >= 0.
Poly build_squares_poly(const Int& c, long n);

// Expanded prod_{i=1}^n (i^k x + 1); n >= 0 (empty product is 1).
Poly build_rootprod_poly(long n, long k);

struct CrScanEntry {
  long n = 0;
  bool completely_real = false;
  std::vector<long> b;
};

// For each n in [n_lo, n_hi], tests whether the polynomial with the
// Eulerian numbers A(n, 0..n-1) as coefficients is completely real.
std::vector<CrScanEntry> eulerian_poly_cr_scan(long n_lo, long n_hi,
                                               int threads = 1);

}  // namespace rrseq

#endif  // RRSEQ_RR_ENGINE_HPP
