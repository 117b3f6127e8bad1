#include <doctest.h>

#include "sympf/errors.hpp"
#include "sympf/index.hpp"

using namespace sympf;

TEST_CASE("symplectic order puts the barred index first") {
  CHECK(compare_symp(Index::bar(1), Index::plain(1)) < 0);
  CHECK(compare_symp(Index::plain(1), Index::plain(1)) == 0);
  CHECK(compare_symp(Index::plain(2), Index::bar(2)) > 0);
  CHECK(compare_symp(Index::plain(1), Index::bar(2)) < 0);
}

TEST_CASE("numeric order puts all unbarred indices first") {
  const int r = 5;
  CHECK(compare_numeric(Index::plain(r), Index::bar(1)) < 0);
  CHECK(compare_numeric(Index::bar(1), Index::plain(1)) > 0);
  CHECK(compare_numeric(Index::plain(3), Index::plain(3)) == 0);
}

TEST_CASE("both orders are total orders on all indices, r <= 6") {
  for (int r = 1; r <= 6; ++r) {
    auto idx = all_indices(r);
    for (auto a : idx)
      for (auto b : idx) {
        CHECK((compare_symp(a, b) == 0) == (a == b));
        CHECK((compare_numeric(a, b) == 0) == (a == b));
        CHECK((compare_symp(a, b) < 0) == (compare_symp(b, a) > 0));
        CHECK((compare_numeric(a, b) < 0) == (compare_numeric(b, a) > 0));
        for (auto c : idx) {
          if (compare_symp(a, b) < 0 && compare_symp(b, c) < 0) CHECK(compare_symp(a, c) < 0);
          if (compare_numeric(a, b) < 0 && compare_numeric(b, c) < 0) CHECK(compare_numeric(a, c) < 0);
        }
      }
    // Numeric order agrees with matrix position.
    for (auto a : idx)
      for (auto b : idx) CHECK((compare_numeric(a, b) < 0) == (a.position(r) < b.position(r)));
  }
}

TEST_CASE("encodings round-trip") {
  const int r = 4;
  CHECK(Index::bar(1).position(2) == 3);
  CHECK(Index::bar(2).position(2) == 4);
  for (auto a : all_indices(r)) {
    CHECK(Index::from_signed(a.to_signed()) == a);
    CHECK(Index::from_position(a.position(r), r) == a);
    CHECK(Index::from_symp_rank(a.symp_rank()) == a);
  }
  CHECK(Index::from_signed(-3) == Index::bar(3));
  CHECK_THROWS_AS(Index::from_signed(0), UsageError);
  CHECK_THROWS_AS(Index::from_position(9, 4), UsageError);
}

TEST_CASE("even shapes") {
  auto s = enumerate_even_shapes(4, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].parts() == std::vector<int>{2, 2});
  s = enumerate_even_shapes(4, 4);
  REQUIRE(s.size() == 2);
  CHECK(s[0].parts() == std::vector<int>{4});
  CHECK(s[1].parts() == std::vector<int>{2, 2});
  s = enumerate_even_shapes(0, 7);
  REQUIRE(s.size() == 1);
  CHECK(s[0].parts().empty());
  CHECK_THROWS_AS(enumerate_even_shapes(3, 4), UsageError);
  for (int total = 0; total <= 12; total += 2)
    for (const auto& sh : enumerate_even_shapes(total, 6)) {
      CHECK(sh.is_even());
      CHECK(sh.size() == total);
    }
  CHECK(enumerate_even_shapes(12, 12).size() == 11);  // partitions of 6
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Shape({1, 2}), UsageError);
  CHECK_THROWS_AS(Shape({2, 0}), UsageError);
  CHECK(Shape({4, 2, 2}).is_even());
  CHECK_FALSE(Shape({3, 1}).is_even());
}
