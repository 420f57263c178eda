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

#ifndef RRSEQ_THEOREM_LAB_HPP
#define RRSEQ_THEOREM_LAB_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrseq/poly.hpp"
#include "rrseq/root_count.hpp"

namespace rrseq {

// A bounded search ran out of budget without a decision.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classification of a_n = a n^2 + b n + c (a, b, c >= 0 rational) by the
// minimality criteria for quadratic sequences.  Cases I, II and III(i)/(ii)
// are decided outright; III(iii) includes a root condition over all odd n
// that is only checked up to a bound, hence "candidate".
enum class QuadVerdict {
  invalid,
  not_minimal,
  case_i,
  case_ii,
  case_iii_i,
  case_iii_ii,
  case_iii_iii_candidate,
};

struct QuadClassification {
  QuadVerdict verdict = QuadVerdict::invalid;
  // Named conditions with their evaluated truth, in check order.
  std::vector<std::pair<std::string, bool>> details;
};

QuadClassification classify_quadratic(const Frac& a, const Frac& b,
                                      const Frac& c, long odd_check_bound = 99);

// The auxiliary polynomial q_n whose roots in (-1, 0) drive case III(iii);
// denominators cleared.  Requires n >= 2.
Poly build_qn(const Frac& a, const Frac& b, const Frac& c, long n);

// Fit (a, b, c, d), coprime integers, with (c n + d) a_{n+1} = (a n + b) a_n
// for every available n.  Solved exactly from n = 0, 1, 2 and verified
// against the rest; nullopt when no fit exists.
struct RatioFit {
  Int a, b, c, d;
  std::size_t verified_through = 0;  // last n with the relation checked
  bool side_conditions_hold = false;  // a,b,c,d >= 0 and c <= d
};
std::optional<RatioFit> detect_rational_ratio(const std::vector<Int>& terms);

// p + u x^(n+1) with rational u; coefficients of the extension and the
// integer polynomial after clearing denominators.
struct Extension {
  Frac u;
  std::vector<Frac> q;
  Poly cleared() const;
};

// For p of degree n with n distinct real roots, produces u != 0 such that
// p + u x^(n+1) has n+1 distinct real roots, via sample points between
// isolated roots.  The result is verified before returning.
Extension extend_distinct_roots(const Poly& p);

// For p of degree n with exactly (n mod 2) real roots and a_0 > 0, searches
// u > 0 (powers of two, up and down from 1, bounded trials) such that
// p + u x^(n+1) has exactly ((n+1) mod 2) real roots.  Throws
// SearchExhausted when the budget is spent.
Extension extend_minimal(const Poly& p, int max_exponent = 64);

// Real-root totals of (x-1)^n + u x^(n+1) over a sample grid; checks that
// no sample reaches a fully real extension for n >= 3, plus the special
// behavior at n = 2 and at the double-root parameter u = -n^n/(n+1)^(n+1).
struct PropScanEntry {
  long n = 0;
  Frac u;
  long real_roots = 0;
  bool within_bound = false;  // real_roots <= n
};

struct PropScanReport {
  std::vector<PropScanEntry> entries;
  bool all_within_bound = false;
  bool n2_exception_holds = false;   // some u in (-1/6, 0) gives 3 real roots
  bool double_root_counts_hold = false;  // u* gives 2 (n odd) or 3 (n even)
};

PropScanReport proposition_scan(long n_lo, long n_hi,
                                const std::vector<Frac>& u_samples);

// Hyperbolic-exponential style criteria for a positive sequence, checked
// through index n_check:
//   (i)  u_n = a_{2n-1}/a_{2n} and v_n = 2n a_{2n} / ((2n+1) a_{2n+1})
//        both strictly decreasing,
//   (ii) sum_{i<=n} a_{2i-1} u_n^(2i-1) < a_0,
//  (iii) sum_{i<=n} 2i a_{2i} v_n^(2i-1) < a_1.
struct HyperExpReport {
  bool ratios_decreasing = false;
  bool ineq_ii_holds = false;
  bool ineq_iii_holds = false;
  long checked_n = 0;
};

HyperExpReport hyperexp_criteria(const std::vector<Int>& terms, long n_check);

}  // namespace rrseq

#endif  // RRSEQ_THEOREM_LAB_HPP
