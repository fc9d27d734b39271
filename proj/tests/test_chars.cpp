#include <catch_amalgamated.hpp>

#include <vector>

#include "kfq/chars.hpp"
#include "kfq/verify.hpp"

using namespace kfq;

TEST_CASE("laurent polynomial basics") {
  LaurentPoly x = LaurentPoly::monomial(Weight::from_ints({1, 0}), 2);
  LaurentPoly y = LaurentPoly::monomial(Weight::from_ints({0, -1}), 3);
  LaurentPoly p = x * y + x;
  CHECK(p.coefficient(Weight::from_ints({1, -1})) == 6);
  CHECK(p.coefficient(Weight::from_ints({1, 0})) == 2);
  CHECK(p.coefficient(Weight::from_ints({0, 0})) == 0);
  CHECK(p.support_size() == 2);
  CHECK(p.eval_ones() == 8);
  CHECK((p - p).support_size() == 0);
  CHECK(p.leading_term().first == Weight::from_ints({1, 0}));
  SignedPermutation w({2, 1});
  CHECK(p.apply(w).coefficient(Weight::from_ints({-1, 1})) == 6);
}

TEST_CASE("alternants") {
  RootSystem b1{Kind::B, 1};
  LaurentPoly a = alternant(b1, rho(b1));
  CHECK(a.support_size() == 2);
  CHECK(a.leading_term().second == 1);
  // antisymmetric under the sign flip
  CHECK(a.apply(SignedPermutation({-1})) == a * Int(-1));
  RootSystem a2{Kind::A, 2};
  CHECK(alternant(a2, rho(a2)).support_size() == 2);
  // singular input collapses to zero
  RootSystem c2{Kind::C, 2};
  CHECK(alternant(c2, Weight::from_ints({1, 1})).support_size() == 0);
}

TEST_CASE("irreducible characters and dimensions") {
  CharCache cc;
  CHECK(cc.weyl_character({Kind::B, 2}, Partition({1, 1})).eval_ones() == 10);
  CHECK(cc.weyl_character({Kind::C, 2}, Partition({1, 1})).eval_ones() == 5);
  CHECK(cc.weyl_character({Kind::D, 2}, Partition({2, 2})).eval_ones() == 5);
  CHECK(cc.weyl_character({Kind::B, 1}, Partition({2})).eval_ones() == 5);
  CHECK(cc.weyl_character({Kind::C, 1}, Partition({2})).eval_ones() == 3);
  CHECK(cc.weyl_character({Kind::D, 3}, Partition({1, 1, 1})).eval_ones() == 10);
  CHECK(cc.weyl_character({Kind::B, 2}, Partition({0, 0})) == LaurentPoly::one(2));
}

TEST_CASE("characters match the dimension product") {
  CharCache cc;
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    for (const Partition& nu : partitions_up_to(3, 2)) {
      CAPTURE(kind_name(k), nu.to_string());
      Weight w = Weight::from_partition(nu);
      CHECK(cc.weyl_character(rs, w).eval_ones() == cc.dim_formula(rs, w));
      if (k == Kind::D && nu.part(2) > 0) {
        Weight neg = Weight::from_ints({nu.part(1), -nu.part(2)});
        CHECK(cc.weyl_character(rs, neg).eval_ones() == cc.dim_formula(rs, neg));
      }
    }
  }
}

TEST_CASE("character input validation") {
  CharCache cc;
  CHECK_THROWS_AS(cc.weyl_character({Kind::A, 2}, Partition({1, 0})), InvalidInput);
  CHECK_THROWS_AS(cc.weyl_character({Kind::C, 2}, Weight::from_ints({1, 2})),
                  InvalidInput);
  CHECK_THROWS_AS(cc.weyl_character({Kind::C, 2}, Weight::from_ints({1, -1})),
                  InvalidInput);
  CHECK_THROWS_AS(cc.weyl_character({Kind::D, 2}, Weight::from_doubled({3, 1})),
                  InvalidInput);
  // D allows a negative last coordinate as long as it is dominated
  CHECK_NOTHROW(cc.weyl_character({Kind::D, 2}, Weight::from_ints({2, -1})));
  CHECK_THROWS_AS(cc.weyl_character({Kind::D, 2}, Weight::from_ints({1, -2})),
                  InvalidInput);
}

TEST_CASE("mirror characters in type D") {
  CharCache cc;
  RootSystem d2{Kind::D, 2};
  LaurentPoly plus = cc.weyl_character(d2, Partition({1, 1}));
  LaurentPoly minus = cc.weyl_character(d2, Weight::from_ints({1, -1}));
  CHECK(minus != plus);
  CHECK(minus == plus.apply(SignedPermutation({1, -2})));
  CHECK(minus.eval_ones() == plus.eval_ones());
}

TEST_CASE("row generating family") {
  CharCache cc;
  CHECK(cc.h_family({Kind::B, 2}, 1).support_size() == 5);
  CHECK(cc.h_family({Kind::C, 2}, 1).support_size() == 4);
  CHECK(cc.h_family({Kind::D, 2}, 1).support_size() == 4);
  CHECK(cc.h_family({Kind::C, 2}, 0) == LaurentPoly::one(2));
  CHECK(cc.h_family({Kind::C, 2}, -1) == LaurentPoly::zero(2));
  RootSystem c2{Kind::C, 2};
  CHECK(cc.H_family(c2, 3) == cc.h_family(c2, 3) + cc.h_family(c2, 1));
  CHECK(cc.H_family(c2, -1) == LaurentPoly::zero(2));
  CHECK(cc.E_family(c2, 2) == cc.e_family(c2, 2) + cc.e_family(c2, 0));
}

TEST_CASE("exterior powers of the standard module") {
  CharCache cc;
  CHECK(cc.ext_power({Kind::B, 1}, 1).support_size() == 3);
  RootSystem d2{Kind::D, 2};
  LaurentPoly e2 = cc.ext_power(d2, 2);
  CHECK(e2.support_size() == 5);
  CHECK(e2.eval_ones() == 6);
  CHECK(e2.coefficient(Weight::zero(2)) == 2);
  // the top power is the trivial determinant character
  CHECK(cc.ext_power(d2, 4) == LaurentPoly::one(2));
  CHECK(cc.ext_power({Kind::C, 2}, 4) == LaurentPoly::one(2));
  CHECK(cc.ext_power(d2, 5) == LaurentPoly::zero(2));
  CHECK(cc.ext_power(d2, -1) == LaurentPoly::zero(2));
  // binomial dimensions
  CHECK(cc.ext_power({Kind::B, 2}, 2).eval_ones() == 10);
  CHECK(cc.ext_power({Kind::B, 2}, 3).eval_ones() == 10);
}

TEST_CASE("column family conventions past the rank") {
  CharCache cc;
  RootSystem b1{Kind::B, 1};
  CHECK(cc.e_family(b1, 2) == cc.e_family(b1, 1));
  CHECK(cc.e_family(b1, 3) == LaurentPoly::one(1));
  CHECK(cc.e_family(b1, 4) == LaurentPoly::zero(1));
  CHECK(cc.e_family({Kind::C, 1}, 2) == LaurentPoly::zero(1));
  CHECK(cc.e_family({Kind::C, 2}, 3) == LaurentPoly::zero(2));
  RootSystem d2{Kind::D, 2};
  CHECK(cc.e_family(d2, 2) == cc.weyl_character(d2, Partition({1, 1})));
  CHECK(cc.e_family(d2, 3) == cc.e_family(d2, 1));
  CHECK(cc.e_family(d2, 4) == LaurentPoly::one(2));
  CHECK(cc.e_family(d2, 5) == LaurentPoly::zero(2));
  // in type C the virtual difference is the honest column character
  RootSystem c2{Kind::C, 2};
  CHECK(cc.e_family(c2, 2) == cc.weyl_character(c2, Partition({1, 1})));
  CHECK(cc.e_family(c2, 2).eval_ones() == 5);
}

TEST_CASE("row determinants") {
  CharCache cc;
  RootSystem b2{Kind::B, 2};
  CHECK(determinant_u(cc, b2, {1, 1}) == cc.weyl_character(b2, Partition({1, 1})));
  RootSystem c2{Kind::C, 2};
  CHECK(determinant_u(cc, c2, {2, 1}) == cc.weyl_character(c2, Partition({2, 1})));
  CHECK(determinant_u(cc, c2, {}) == LaurentPoly::one(2));
  // type D with a nonzero last part produces the sum of the two mirrors
  RootSystem d2{Kind::D, 2};
  LaurentPoly split = cc.weyl_character(d2, Partition({1, 1})) +
                      cc.weyl_character(d2, Weight::from_ints({1, -1}));
  CHECK(determinant_u(cc, d2, {1, 1}) == split);
  CHECK(determinant_u(cc, d2, {2, 0}) == cc.weyl_character(d2, Partition({2, 0})));
}

TEST_CASE("cumulative row determinants agree") {
  CharCache cc;
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    for (std::vector<long long> alpha :
         std::vector<std::vector<long long>>{{2, 1}, {2, 2}, {4, 4}, {5, 4}}) {
      CAPTURE(kind_name(k), alpha);
      CHECK(determinant_u_capital(cc, rs, alpha) == determinant_u(cc, rs, alpha));
    }
  }
  RootSystem c3{Kind::C, 3};
  CHECK(determinant_u_capital(cc, c3, {2, 1, 1}) == determinant_u(cc, c3, {2, 1, 1}));
}

TEST_CASE("flipping the corner difference breaks the determinant") {
  CharCache cc;
  RootSystem c2{Kind::C, 2};
  const std::vector<long long> alpha{4, 4};
  const int n = 2;
  std::vector<std::vector<LaurentPoly>> a(n,
                                          std::vector<LaurentPoly>(n, LaurentPoly::zero(2)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly x = cc.H_family(c2, alpha[i - 1] - i + j);
      if (i == n && j == n)
        x += cc.H_family(c2, alpha[i - 1] - i - j);
      else
        x -= cc.H_family(c2, alpha[i - 1] - i - j);
      a[i - 1][j - 1] = std::move(x);
    }
  LaurentPoly wrong = detail::det_subset(a, 2);
  LaurentPoly right = determinant_u(cc, c2, alpha);
  CHECK(wrong != right);
  CHECK(wrong.eval_ones() == 125);
  CHECK(right.eval_ones() == 55);
}

TEST_CASE("column determinants") {
  CharCache cc;
  RootSystem b1{Kind::B, 1};
  CHECK(determinant_v(cc, b1, {1, 1}) == cc.weyl_character(b1, Partition({2})));
  RootSystem c2{Kind::C, 2};
  LaurentPoly v22 = determinant_v(cc, c2, {2, 2});
  CHECK(v22 == cc.weyl_character(c2, Partition({2, 2})));
  CHECK(v22.eval_ones() == 14);
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    for (std::vector<long long> beta :
         std::vector<std::vector<long long>>{{2, 1}, {2, 2}, {1, 1, 1}}) {
      CAPTURE(kind_name(k), beta);
      CHECK(determinant_v_capital(cc, rs, beta) == determinant_v(cc, rs, beta));
    }
  }
}

TEST_CASE("reflecting the column family at the wrong point fails") {
  CharCache cc;
  // substitute e_p -> e_{2m-p} for every kind, as a uniform reflection
  // would have it, and watch both witnesses collapse
  RootSystem c2{Kind::C, 2};
  auto eref2 = [&cc, &c2](long long p) -> LaurentPoly {
    if (p < 0 || p > 4) return LaurentPoly::zero(2);
    if (p > 2) p = 4 - p;
    return cc.e_family(c2, p);
  };
  std::vector<std::vector<LaurentPoly>> a(2, std::vector<LaurentPoly>(2, LaurentPoly::zero(2)));
  const std::vector<long long> beta{2, 2};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      LaurentPoly x = eref2(beta[i - 1] - i + j);
      if (j > 1) x += eref2(beta[i - 1] - i - j + 2);
      a[i - 1][j - 1] = std::move(x);
    }
  LaurentPoly wrong = detail::det_subset(a, 2);
  CHECK(wrong != cc.weyl_character(c2, Partition({2, 2})));
  CHECK(wrong.eval_ones() == -2);

  RootSystem b1{Kind::B, 1};
  auto eref1 = [&cc, &b1](long long p) -> LaurentPoly {
    if (p < 0 || p > 2) return LaurentPoly::zero(1);
    if (p > 1) p = 2 - p;
    return cc.e_family(b1, p);
  };
  std::vector<std::vector<LaurentPoly>> b(2, std::vector<LaurentPoly>(2, LaurentPoly::zero(1)));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      LaurentPoly x = eref1(1 - i + j);
      if (j > 1) x += eref1(1 - i - j + 2);
      b[i - 1][j - 1] = std::move(x);
    }
  LaurentPoly wrongb = detail::det_subset(b, 1);
  CHECK(wrongb != cc.weyl_character(b1, Partition({2})));
  CHECK(wrongb.eval_ones() == 7);
}

TEST_CASE("raising kernels reproduce the determinants") {
  CharCache cc;
  const LaurentPoly little2 = raising_kernel(2, false);
  const LaurentPoly cap2 = raising_kernel(2, true);
  CHECK(little2.support_size() == 4);
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    for (std::vector<long long> mu :
         std::vector<std::vector<long long>>{{2, 1}, {1, 1}, {3, 0}}) {
      LaurentPoly little_acc(2), cap_acc(2);
      for (const auto& [e2, c] : little2.terms()) {
        LaurentPoly prod = LaurentPoly::one(2);
        for (int i = 0; i < 2; ++i)
          prod = prod * cc.h_family(rs, mu[i] + e2[i] / 2);
        little_acc += prod * c;
      }
      for (const auto& [e2, c] : cap2.terms()) {
        LaurentPoly prod = LaurentPoly::one(2);
        for (int i = 0; i < 2; ++i)
          prod = prod * cc.H_family(rs, mu[i] + e2[i] / 2);
        cap_acc += prod * c;
      }
      CAPTURE(kind_name(k), mu);
      LaurentPoly expect = determinant_u(cc, rs, mu);
      CHECK(little_acc == expect);
      CHECK(cap_acc == expect);
    }
  }
  const LaurentPoly little3 = raising_kernel(3, false);
  RootSystem c3{Kind::C, 3};
  LaurentPoly acc(3);
  for (const auto& [e2, c] : little3.terms()) {
    LaurentPoly prod = LaurentPoly::one(3);
    for (int i = 0; i < 3; ++i) prod = prod * cc.h_family(c3, 1 + e2[i] / 2);
    acc += prod * c;
  }
  CHECK(acc == determinant_u(cc, c3, {1, 1, 1}));
}

TEST_CASE("monomial factorization of the determinant kernels") {
  for (int m = 1; m <= 3; ++m) {
    std::vector<long long> stair;
    for (int i = 0; i < m; ++i) stair.push_back(m - i);
    auto chk = delta_factorization_check(m, stair);
    CAPTURE(m);
    CHECK(chk.little_ok);
    CHECK(chk.capital_ok);
  }
  auto flat = delta_factorization_check(2, {2, 2});
  CHECK(flat.little_ok);
  CHECK(flat.capital_ok);
  CHECK_THROWS_AS(delta_factorization_check(2, {1}), InvalidInput);
}

TEST_CASE("product decomposition into irreducibles") {
  CharCache cc;
  RootSystem c3{Kind::C, 3};
  LaurentPoly prod = cc.h_family(c3, 4) * cc.h_family(c3, 2) * cc.h_family(c3, 1);
  auto dec = schur_decompose(cc, c3, prod);
  CHECK(dec.size() == 13);
  CHECK(dec.at(Weight::from_ints({2, 1, 0})) == 2);
  CHECK(dec.at(Weight::from_ints({4, 1, 0})) == 4);
  CHECK(dec.at(Weight::from_ints({7, 0, 0})) == 1);
  CHECK(dec.at(Weight::from_ints({1, 0, 0})) == 1);
  // an irreducible decomposes as itself
  RootSystem c2{Kind::C, 2};
  auto self = schur_decompose(cc, c2, cc.weyl_character(c2, Partition({2, 1})));
  CHECK(self.size() == 1);
  CHECK(self.at(Weight::from_ints({2, 1})) == 1);
  // non-invariant input is rejected
  CHECK_THROWS_AS(
      schur_decompose(cc, c2, LaurentPoly::monomial(Weight::from_ints({1, 0}), 1)),
      InvalidInput);
}

TEST_CASE("type D products split along the mirror") {
  CharCache cc;
  RootSystem d2{Kind::D, 2};
  LaurentPoly h1 = cc.h_family(d2, 1);
  auto dec = schur_decompose(cc, d2, h1 * h1);
  CHECK(dec.size() == 4);
  CHECK(dec.at(Weight::from_ints({2, 0})) == 1);
  CHECK(dec.at(Weight::from_ints({1, 1})) == 1);
  CHECK(dec.at(Weight::from_ints({1, -1})) == 1);
  CHECK(dec.at(Weight::zero(2)) == 1);
  auto keys = partition_keys(dec);
  CHECK(keys.size() == 3);
  CHECK(keys.at(Partition({1, 1})) == 1);
  CHECK(keys.count(Partition({2, 0})) == 1);
}

TEST_CASE("module sweeps at small bounds") {
  PartitionFnCache pf;
  CharCache cc;
  long long exact = 0, split = 0;
  auto modules = sweep_single_modules(cc, 3, 2, &exact, &split);
  CHECK(modules.ok);
  CHECK(exact > 0);
  CHECK(split > 0);
  auto oracle = sweep_oracle_q1(pf, cc, 2, 4, 3);
  CHECK(oracle.ok);
  CHECK(oracle.cases > 0);
}
