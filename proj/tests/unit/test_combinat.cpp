#include "doctest.h"

#include "htoda/characters.hpp"
#include "htoda/partition.hpp"
#include "htoda/verify.hpp"

using namespace htoda;

TEST_CASE("partition parsing and basic accessors") {
  Partition p = Partition::parse("[4,2,1]");
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 4);
  CHECK(p.part(5) == 0);
  CHECK(p.str() == "[4,2,1]");
  CHECK(Partition::parse("[]").size() == 0);
  CHECK(Partition::parse("[1,2]").str() == "[2,1]");  // parts get sorted
  CHECK_THROWS_AS(Partition::parse("[1,x]"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,1"), std::invalid_argument);
}

TEST_CASE("partition counts for small sizes") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int d = 0; d <= 9; ++d)
    CHECK(partitions_of(d).size() == static_cast<size_t>(expected[d]));
}

TEST_CASE("transpose is an involution and flips kappa") {
  for (int d = 1; d <= 7; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      CHECK(lam.transpose().transpose() == lam);
      CHECK(kappa(lam.transpose()) == -kappa(lam));
    }
  }
  CHECK(kappa(Partition({2})) == 2);
  CHECK(kappa(Partition({1, 1})) == -2);
  CHECK(kappa(Partition({2, 1})) == 0);
  CHECK(kappa(Partition({3})) == 6);
}

TEST_CASE("hook-length dimensions") {
  CHECK(dim_irrep(Partition({1})) == 1);
  CHECK(dim_irrep(Partition({2, 1})) == 2);
  CHECK(dim_irrep(Partition({3, 2})) == 5);
  CHECK(dim_irrep(Partition({2, 2})) == 2);
  CHECK(dim_irrep(Partition({4, 3, 2, 1})) == 768);

  // sum of dim^2 over partitions of d counts the group elements
  for (int d = 1; d <= 6; ++d) {
    Int total = 0;
    for (const Partition& lam : partitions_of(d)) {
      Int dim = dim_irrep(lam);
      total += dim * dim;
    }
    CHECK(total == factorial(d));
  }
}

TEST_CASE("centralizer orders and class sizes") {
  ClassData c21 = class_data(Partition::parse("[2,1]"));
  CHECK(c21.z == 2);
  CHECK(c21.class_size == 3);
  ClassData c311 = class_data(Partition::parse("[3,1,1]"));
  CHECK(c311.z == 6);  // 3 * (2! * 1^2)
  CHECK(c311.class_size == 20);
  for (int d = 1; d <= 7; ++d) {
    Int total = 0;
    for (const Partition& mu : partitions_of(d)) total += class_data(mu).class_size;
    CHECK(total == factorial(d));
  }
}

TEST_CASE("character table of the symmetric group on three letters") {
  Partition r3 = Partition({3}), r21 = Partition({2, 1}),
            r111 = Partition({1, 1, 1});
  CHECK(character(r3, r111) == 1);
  CHECK(character(r3, r21) == 1);
  CHECK(character(r3, r3) == 1);
  CHECK(character(r21, r111) == 2);
  CHECK(character(r21, r21) == 0);
  CHECK(character(r21, r3) == -1);
  CHECK(character(r111, r111) == 1);
  CHECK(character(r111, r21) == -1);
  CHECK(character(r111, r3) == 1);
}

TEST_CASE("central character at a transposition class is kappa over two") {
  for (int d = 2; d <= 7; ++d) {
    std::vector<int> tcls{2};
    for (int i = 2; i < d; ++i) tcls.push_back(1);
    Partition trans(tcls);
    for (const Partition& lam : partitions_of(d)) {
      CHECK(f_class(lam, trans) == rat(kappa(lam), 2));
      std::vector<int> ones(d, 1);
      CHECK(f_class(lam, Partition(ones)) == 1);
    }
  }
}

TEST_CASE("combinatorial property suite at reduced bounds") {
  VerifyOptions opts;
  opts.d_oracle = 3;
  CHECK(verify_combinat(opts).all_ok());
}
