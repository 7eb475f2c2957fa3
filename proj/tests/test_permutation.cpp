#include <catch2/catch_amalgamated.hpp>

#include <shapeinv/permutation.hpp>
#include <shapeinv/tableau.hpp>

#include "brute.hpp"

using namespace shapeinv;

TEST_CASE("permutation validation", "[permutation]") {
  CHECK_NOTHROW(Permutation{3, 1, 2});
  CHECK_THROWS_AS((Permutation{1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS((Permutation{0, 1}), InvalidArgument);
  CHECK_THROWS_AS((Permutation{1, 4, 2}), InvalidArgument);
  const Permutation p{3, 1, 2};
  CHECK(p.size() == 3);
  CHECK(p.at(1) == 3);
  CHECK(p.position_of(3) == 1);
  CHECK(p.position_of(2) == 3);
  CHECK(Permutation::identity(4) == Permutation{1, 2, 3, 4});
  CHECK(Permutation::reverse(4) == Permutation{4, 3, 2, 1});
}

TEST_CASE("inversions", "[permutation]") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(inversions(Permutation::identity(n)) == 0);
    CHECK(inversions(Permutation::reverse(n)) == static_cast<std::uint64_t>(n * (n - 1) / 2));
  }
  CHECK(inversions(Permutation{2, 1, 3, 6, 5, 4, 8, 7}) == 5);

  SECTION("merge count agrees with pair counting on S_7") {
    brute::for_each_perm(7, [](const brute::Vec& v) {
      REQUIRE(inversions(v) == brute::inversions(v));
    });
  }

  SECTION("inverse has the same count on S_7") {
    brute::for_each_perm(7, [](const brute::Vec& v) {
      const Permutation p(v);
      REQUIRE(inversions(inverse(p)) == inversions(p));
    });
  }
}

TEST_CASE("inverse", "[permutation]") {
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(Permutation{2, 1, 3, 6, 5, 4, 8, 7}) == Permutation{2, 1, 3, 6, 5, 4, 8, 7});
  CHECK(inverse(Permutation{3, 1, 2}) == Permutation{2, 3, 1});
  brute::for_each_perm(6, [](const brute::Vec& v) {
    const Permutation p(v);
    REQUIRE(inverse(p).vec() == brute::inverse(v));
    REQUIRE(inverse(inverse(p)) == p);
  });
}

TEST_CASE("elementary transpositions", "[permutation]") {
  const Permutation pi{3, 2, 1, 7, 6, 5, 4, 10, 9, 8};
  CHECK(right_transpose(right_transpose(pi, 7), 6) == Permutation{3, 2, 1, 7, 6, 10, 5, 4, 9, 8});
  CHECK(left_transpose(left_transpose(pi, 3), 4) == Permutation{5, 2, 1, 7, 6, 4, 3, 10, 9, 8});
  CHECK(right_transpose(Permutation{1, 3, 2}, 2) == Permutation{1, 2, 3});
  CHECK(left_transpose(Permutation{2, 3, 1}, 1) == Permutation{1, 3, 2});
  CHECK(right_transpose(Permutation::identity(4), 2) == Permutation{1, 3, 2, 4});
  CHECK(left_transpose(Permutation::identity(4), 2) == Permutation{1, 3, 2, 4});
  CHECK_THROWS_AS(right_transpose(pi, 0), InvalidArgument);
  CHECK_THROWS_AS(right_transpose(pi, 10), InvalidArgument);
  CHECK_THROWS_AS(left_transpose(pi, 10), InvalidArgument);

  brute::for_each_perm(6, [](const brute::Vec& v) {
    const Permutation p(v);
    for (int i = 1; i < 6; ++i) {
      const auto r = right_transpose(p, i);
      const auto l = left_transpose(p, i);
      const auto a = static_cast<long>(inversions(p));
      REQUIRE(std::abs(static_cast<long>(inversions(r)) - a) == 1);
      REQUIRE(std::abs(static_cast<long>(inversions(l)) - a) == 1);
      // s_i · π = (π⁻¹ · s_i)⁻¹
      REQUIRE(l == inverse(right_transpose(inverse(p), i)));
    }
  });
}

TEST_CASE("longest monotone subsequences", "[permutation]") {
  CHECK(lis_length(Permutation::identity(7)) == 7);
  CHECK(lds_length(Permutation::identity(7)) == 1);
  const Permutation ex{6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7};
  CHECK(lds_length(ex) == 6);
  CHECK(lis_length(ex) == 2);
  CHECK(lis_length(Permutation{3, 1, 2}) == 2);
  CHECK(lds_length(Permutation{3, 1, 2}) == 2);

  SECTION("patience sorting agrees with subsets and with the RS shape on S_7") {
    brute::for_each_perm(7, [](const brute::Vec& v) {
      const Permutation p(v);
      const auto sh = shape_of(p);
      REQUIRE(lis_length(p) == brute::lis(v));
      REQUIRE(lds_length(p) == brute::lds(v));
      REQUIRE(lis_length(p) == sh[0]);
      REQUIRE(lds_length(p) == sh.length());
    });
  }
}

TEST_CASE("leftmost longest decreasing subsequence", "[permutation]") {
  CHECK(leftmost_lds(Permutation::reverse(5)) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(leftmost_lds(Permutation{2, 1, 3}) == std::vector<int>{1, 2});

  SECTION("two maximal LDS: the one whose top sits further left wins") {
    const brute::Vec v{6, 5, 4, 3, 2, 12, 1, 11, 10, 9, 8, 7};
    const auto all = brute::all_max_lds(v);
    std::vector<int> expected;
    for (const auto& cand : all)
      if (expected.empty() || cand < expected) expected = cand;
    CHECK(expected == std::vector<int>{1, 2, 3, 4, 5, 7});
    CHECK(leftmost_lds(Permutation(v)) == expected);
  }

  SECTION("valid, maximal, leftmost top, greedy completion on S_n for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
      brute::for_each_perm(n, [](const brute::Vec& v) {
        const auto got = leftmost_lds(v);
        const auto all = brute::all_max_lds(v);
        REQUIRE(static_cast<int>(got.size()) == brute::lds(v));
        for (std::size_t i = 1; i < got.size(); ++i) {
          REQUIRE(got[i - 1] < got[i]);
          REQUIRE(v[static_cast<std::size_t>(got[i - 1] - 1)] > v[static_cast<std::size_t>(got[i] - 1)]);
        }
        // Greedy leftmost completion is the lexicographically smallest
        // position list among maximal LDS.
        const auto best = *std::min_element(all.begin(), all.end());
        REQUIRE(got == best);
        for (const auto& other : all) REQUIRE(got.front() <= other.front());
      });
    }
  }
}
