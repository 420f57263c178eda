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

#ifndef RRSEQ_SEQ_CATALOG_HPP
#define RRSEQ_SEQ_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rrseq/poly.hpp"

namespace rrseq {

enum class SeqFamily {
  primes,                 // a_n = (n+1)-th prime
  fibonacci,              // a_n = F(n+1): 1 1 2 3 5 ...
  k_fibonacci,            // k >= 2; k-step recurrence aligned so a_0 = 1
  exponential,            // a_n = c^n, c != 0
  binomial,               // a_n = C(n+k, k), k >= 1
  n_plus_1,               // a_n = n+1
  n_plus_1_sq,            // a_n = (n+1)^2
  power,                  // a_n = (n+1)^k, k >= 1
  catalan,                // a_n = C(2n, n)/(n+1)
  central_binomial,       // a_n = C(2n, n)
  central_binomial_odd,   // a_n = C(2n+1, n)
  factorial,              // a_n = n!
  double_factorial_odd,   // a_n = 1, 1, 3, 15, ... ((2n-1)!!)
  double_factorial_even,  // a_n = 1, 2, 8, 48, ... ((2n)!!)
  self_power,             // a_n = n^n with a_0 = 1
  two_pow,                // a_n = 2^(n^k), k >= 2
  euler_phi,              // a_n = phi(n+1)
  prime_pi,               // a_n = pi(n+2)
  moebius,                // a_n = mu(n+1); interior zeros allowed
  sigma,                  // a_n = sigma_j(n+1), j >= 1
  quadratic,              // a_n = (qa n^2 + qb n + qc) * lcm of denominators
};

struct SeqSpec {
  SeqFamily family = SeqFamily::primes;
  long k = 0;   // k_fibonacci, binomial, power, two_pow
  Int c = 0;    // exponential
  long j = 0;   // sigma
  Frac qa, qb, qc;  // quadratic

  static SeqSpec simple(SeqFamily f);
  static SeqSpec with_k(SeqFamily f, long k);
  static SeqSpec with_c(const Int& c);
  static SeqSpec with_j(long j);
  static SeqSpec make_quadratic(const Frac& a, const Frac& b, const Frac& c);

  // Canonical display name, e.g. "power(k=50)" or "exponential(c=-3)".
  std::string name() const;
};

// Terms a_0..a_n_max.  Parameter violations throw std::invalid_argument.
std::vector<Int> generate(const SeqSpec& spec, std::size_t n_max);

// Exact successor ratio a_{n+1}/a_n; throws when a_n == 0.
Frac ratio_exact(const SeqSpec& spec, std::size_t n);

// Eulerian numbers A(n, 0..n-1) for n >= 1.
struct EulerianRow {
  unsigned n = 0;
  std::vector<Int> values;
};
EulerianRow eulerian_row(unsigned n);

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
};
std::vector<FamilyInfo> family_catalog();
std::optional<SeqFamily> family_from_name(const std::string& name);

}  // namespace rrseq

#endif  // RRSEQ_SEQ_CATALOG_HPP
