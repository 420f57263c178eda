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

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rrseq/parallel.hpp"
#include "rrseq/rr_engine.hpp"
#include "rrseq/seq_catalog.hpp"

using namespace rrseq;

TEST_CASE("transform validation") {
  CHECK_THROWS_AS(rr_transform({Int(1)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(rr_transform({Int(0), Int(2)}, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_completely_real(Poly{}), std::invalid_argument);
  CHECK_THROWS_AS(is_completely_real(Poly::parse("0 1")), std::invalid_argument);
}

TEST_CASE("transform invariants hold on random integer sequences") {
  std::mt19937_64 rng(20260814u);
  std::uniform_int_distribution<int> cd(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n_max = 10 + static_cast<std::size_t>(trial % 3);
    std::vector<Int> terms(n_max + 1);
    for (auto& t : terms) t = cd(rng);
    while (sgn(terms[0]) == 0) terms[0] = cd(rng);
    const RRReport rep = rr_transform(terms, n_max);

    REQUIRE(rep.b.size() == n_max + 1);
    REQUIRE(rep.dual.size() == n_max + 1);
    CHECK(rep.terms == terms);
    CHECK(rep.b[0] == 0);
    if (sgn(terms[1]) != 0) CHECK(rep.b[1] == 1);
    bool minimal_so_far = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const long bn = rep.b[n];
      CHECK(bn >= 0);
      CHECK(bn <= static_cast<long>(n));
      if (sgn(terms[n]) == 0 && n > 0) {
        CHECK(bn == rep.b[n - 1]);
      } else {
        CHECK(bn % 2 == static_cast<long>(n % 2));
        if (n % 2 == 1) CHECK(bn >= 1);
      }
      CHECK(rep.dual[n] == static_cast<long>(n) - bn);
      // Each entry agrees with a direct count of the (trimmed) section.
      std::vector<Int> c(terms.begin(), terms.begin() + static_cast<long>(n) + 1);
      CHECK(bn == num_real_roots(Poly(std::move(c))).total);
      if (rep.b[n] != static_cast<long>(n % 2)) {
        if (minimal_so_far) {
          REQUIRE(rep.first_nonminimal.has_value());
          CHECK(*rep.first_nonminimal == static_cast<long>(n));
        }
        minimal_so_far = false;
      }
    }
    if (minimal_so_far) CHECK(!rep.first_nonminimal.has_value());
  }
}

TEST_CASE("a completely real cubic whose reciprocal is not completely real") {
  const Poly p = Poly::parse("13827 2456 99 1");
  const auto [ok, b] = is_completely_real(p);
  CHECK(ok);
  CHECK(b == std::vector<long>{0, 1, 2, 3});

  const Poly rev = reciprocal(p);
  CHECK(rev.str() == "1 99 2456 13827");
  const auto [rok, rb] = is_completely_real(rev);
  CHECK(!rok);
  // The full cubic still has three real roots; the 2-section is the first
  // (and only) failure.
  CHECK(rb == std::vector<long>{0, 1, 0, 3});

  // b_2 = 0 is still n mod 2; the first parity deviation is b_3 = 3.
  const RRReport rep = rr_transform(rev.coeffs(), 3);
  REQUIRE(rep.first_nonminimal.has_value());
  CHECK(*rep.first_nonminimal == 3);
}

TEST_CASE("zero coefficients reuse the previous section count") {
  const auto mu = generate(SeqSpec::simple(SeqFamily::moebius), 30);
  const RRReport rep = rr_transform(mu, 30);
  for (std::size_t n = 1; n <= 30; ++n) {
    if (sgn(mu[n]) == 0) CHECK(rep.b[n] == rep.b[n - 1]);
    std::vector<Int> c(mu.begin(), mu.begin() + static_cast<long>(n) + 1);
    CHECK(rep.b[n] == num_real_roots(Poly(std::move(c))).total);
  }
}

TEST_CASE("thread count never changes the report") {
  const auto terms = generate(SeqSpec::simple(SeqFamily::primes), 40);
  const RRReport r1 = rr_transform(terms, 40, 1, "primes");
  for (int threads : {2, 3, 8}) {
    const RRReport rt = rr_transform(terms, 40, threads, "primes");
    CHECK(rt.b == r1.b);
    CHECK(rt.dual == r1.dual);
    CHECK(rt.first_nonminimal == r1.first_nonminimal);
    CHECK(rt.terms == r1.terms);
    CHECK(rt.source == r1.source);
  }
}

TEST_CASE("resolve_threads precedence") {
  CHECK(resolve_threads(5) == 5);
  CHECK(resolve_threads(1) == 1);
  setenv("RRSEQ_THREADS", "3", 1);
  CHECK(resolve_threads(0) == 3);
  CHECK(resolve_threads(7) == 7);
  unsetenv("RRSEQ_THREADS");
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("least exponent making every power-sequence section real-rooted") {
  const long expected[] = {0, 0, 5, 12, 21, 33, 47, 63, 81};
  for (long n = 0; n <= 8; ++n) {
    const auto k = find_c_n(n, std::nullopt, 100);
    REQUIRE(k.has_value());
    CHECK(*k == expected[n]);
    if (n >= 1) {
      // Starting the search at the previous value must not change it.
      const auto hinted = find_c_n(n, expected[n - 1], 100);
      REQUIRE(hinted.has_value());
      CHECK(*hinted == expected[n]);
    }
  }
  CHECK(!find_c_n(2, std::nullopt, 4).has_value());
  CHECK_THROWS_AS(find_c_n(-1, std::nullopt, 10), std::invalid_argument);
  CHECK_THROWS_AS(find_c_n(3, std::nullopt, -1), std::invalid_argument);
}

TEST_CASE("least exponent making the root-product polynomial completely real") {
  const long expected[] = {0, 0, 0, 2, 4, 5, 6, 7, 8, 9, 10};
  for (long n = 1; n <= 10; ++n) {
    const auto k = table2_min_k(n, 50);
    REQUIRE(k.has_value());
    CHECK(*k == expected[n]);
  }
  CHECK(!table2_min_k(3, 1).has_value());
  CHECK_THROWS_AS(table2_min_k(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(table2_min_k(3, -2), std::invalid_argument);
}

TEST_CASE("square-exponent polynomial construction") {
  CHECK(build_squares_poly(Int(3), 3).str() == "19683 6561 243 1");
  CHECK(build_squares_poly(Int(-2), 2).str() == "16 -8 1");
  CHECK(build_squares_poly(Int(2), 0).str() == "1");
  CHECK_THROWS_AS(build_squares_poly(Int(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_squares_poly(Int(2), -1), std::invalid_argument);
  // c^2 >= 4 makes the construction completely real; |c| = 1 does not stay
  // real-rooted for long.
  for (long n : {1L, 2L, 3L, 4L, 5L}) {
    CHECK(is_completely_real(build_squares_poly(Int(2), n)).first);
    CHECK(is_completely_real(build_squares_poly(Int(-3), n)).first);
  }
  CHECK(!is_completely_real(build_squares_poly(Int(1), 4)).first);
}

TEST_CASE("root-product polynomial construction") {
  CHECK(build_rootprod_poly(0, 7).str() == "1");
  CHECK(build_rootprod_poly(3, 1).str() == "1 6 11 6");
  CHECK(build_rootprod_poly(3, 2).str() == "1 14 49 36");
  CHECK(build_rootprod_poly(4, 0).str() == "1 4 6 4 1");
  CHECK_THROWS_AS(build_rootprod_poly(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_rootprod_poly(3, -1), std::invalid_argument);
  // By construction all n roots are real: -1/i^k.
  const Poly p = build_rootprod_poly(6, 3);
  CHECK(num_real_roots(p).total == 6);
}

TEST_CASE("eulerian coefficient polynomials are completely real exactly up to n = 8") {
  // The boundary is sometimes quoted one higher, but the 4-section of the
  // n = 9 row, 1 + 502x + 14608x^2 + 88234x^3 + 156190x^4, has a conjugate
  // pair near -0.260 +/- 0.049i (confirmed with an independent exact
  // count), so it has two real roots rather than four.
  const auto entries = eulerian_poly_cr_scan(1, 12);
  REQUIRE(entries.size() == 12);
  for (const auto& e : entries) {
    REQUIRE(e.b.size() == static_cast<std::size_t>(e.n));
    if (e.n <= 8) {
      CHECK(e.completely_real);
      for (std::size_t i = 0; i < e.b.size(); ++i)
        CHECK(e.b[i] == static_cast<long>(i));
    } else {
      CHECK(!e.completely_real);
    }
    // The full polynomial itself always has only real roots.
    CHECK(e.b.back() == e.n - 1);
  }
  CHECK(entries[8].b == std::vector<long>{0, 1, 2, 3, 2, 3, 6, 7, 8});
  // Determinism across thread counts.
  const auto par = eulerian_poly_cr_scan(1, 12, 4);
  REQUIRE(par.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(par[i].n == entries[i].n);
    CHECK(par[i].completely_real == entries[i].completely_real);
    CHECK(par[i].b == entries[i].b);
  }
  CHECK_THROWS_AS(eulerian_poly_cr_scan(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(eulerian_poly_cr_scan(4, 2), std::invalid_argument);
}

TEST_CASE("fiftieth-power sequence transform prefix") {
  const auto terms = generate(SeqSpec::with_k(SeqFamily::power, 50), 15);
  const RRReport rep = rr_transform(terms, 15, 1, "power(k=50)");
  CHECK(rep.b == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 5, 6, 7, 6, 7, 8, 9, 8, 9});
  REQUIRE(rep.first_nonminimal.has_value());
  CHECK(*rep.first_nonminimal == 2);
}
