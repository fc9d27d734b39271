#include <catch_amalgamated.hpp>

#include <vector>

#include "kfq/kostka.hpp"

using namespace kfq;

namespace {

// Counts semistandard fillings of shape lambda with entries 1..m and
// content mu: rows weakly increase, columns strictly increase. Independent
// of the alternating-sum machinery.
long long count_ssyt(const Partition& lambda, const Partition& mu) {
  const int m = mu.length();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > 0) rows.push_back(std::vector<int>(lambda.part(i), 0));
  std::vector<int> remaining(m + 1, 0);
  for (int i = 1; i <= m; ++i) remaining[i] = mu.part(i);

  long long found = 0;
  auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      ++found;
      return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      if (remaining[v] == 0) continue;
      --remaining[v];
      rows[r][c] = v;
      self(self, nr, nc);
      ++remaining[v];
    }
  };
  if (rows.empty()) return lambda.weight() == mu.weight() ? 1 : 0;
  fill(fill, 0, 0);
  return found;
}

}  // namespace

TEST_CASE("shifted box values") {
  PartitionFnCache pf;
  CHECK(kostka_foulkes(pf, {Kind::D, 3}, Partition({6, 5, 4}), Partition({5, 4, 2}))
            .to_string() == "q^3 + q^2");
  CHECK(kostka_foulkes(pf, {Kind::C, 3}, Partition({6, 5, 4}), Partition({5, 4, 2}))
            .to_string() == "q^5 + 2*q^4 + 3*q^3 + 2*q^2");
  CHECK(kostka_foulkes(pf, {Kind::D, 2}, Partition({3, 2}), Partition({2, 1}))
            .to_string() == "q");
  CHECK(kostka_foulkes(pf, {Kind::C, 2}, Partition({3, 2}), Partition({2, 1}))
            .to_string() == "q^2 + q");
}

TEST_CASE("type A values") {
  PartitionFnCache pf;
  CHECK(kostka_extended_A(pf, Partition({2, 0}), Weight::from_ints({1, 1}))
            .to_string() == "q");
  CHECK(kostka_extended_A(pf, Partition({1, 1}), Weight::from_ints({2, 0})).is_zero());
  // arbitrary integral second argument; coefficients may go negative
  CHECK(kostka_extended_A(pf, Partition({1, 0}), Weight::from_ints({-1, 2}))
            .to_string() == "q^2 - 1");
  CHECK_THROWS_AS(kostka_extended_A(pf, Partition({1, 0}), Weight::from_ints({1})),
                  InvalidInput);
  CHECK_THROWS_AS(
      kostka_extended_A(pf, Partition({1, 0}), Weight::from_doubled({1, 1})),
      InvalidInput);
}

TEST_CASE("diagonal entries are one") {
  PartitionFnCache pf;
  for (Kind k : {Kind::B, Kind::C, Kind::D})
    CHECK(kostka_foulkes(pf, {k, 2}, Partition({2, 1}), Partition({2, 1})) ==
          QPolynomial::one());
  CHECK(kostka_extended_A(pf, Partition({2, 1}), Weight::from_ints({2, 1})) ==
        QPolynomial::one());
}

TEST_CASE("equal weights reduce every kind to type A") {
  PartitionFnCache pf;
  for (int w = 0; w <= 4; ++w) {
    std::vector<Partition> parts;
    partitions_of(w, 2, w, parts);
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        QPolynomial a = kostka_extended_A(pf, la, Weight::from_partition(mu));
        for (Kind k : {Kind::B, Kind::C, Kind::D}) {
          CAPTURE(kind_name(k), la.to_string(), mu.to_string());
          CHECK(kostka_foulkes(pf, {k, 2}, la, mu) == a);
        }
      }
  }
  CHECK(kostka_foulkes(pf, {Kind::B, 2}, Partition({2, 0}), Partition({1, 1}))
            .to_string() == "q");
}

TEST_CASE("value at one counts semistandard fillings") {
  PartitionFnCache pf;
  for (int w = 0; w <= 4; ++w) {
    std::vector<Partition> parts;
    partitions_of(w, 3, w, parts);
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        CAPTURE(la.to_string(), mu.to_string());
        QPolynomial p = kostka_extended_A(pf, la, Weight::from_partition(mu));
        CHECK(p.eval_one() == Int(count_ssyt(la, mu)));
        CHECK(p.nonnegative_coefficients());
      }
  }
}

TEST_CASE("coefficients stay nonnegative on partition pairs") {
  PartitionFnCache pf;
  auto parts = partitions_up_to(4, 2);
  for (Kind k : {Kind::B, Kind::C, Kind::D})
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        CAPTURE(kind_name(k), la.to_string(), mu.to_string());
        CHECK(kostka_foulkes(pf, {k, 2}, la, mu).nonnegative_coefficients());
      }
}

TEST_CASE("alternating sum straightens or vanishes") {
  PartitionFnCache pf;
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    // (0,2) + rho sorts with one inversion: minus the value at (1,1)
    CHECK(kostka_sum_at(pf, rs, Weight::from_ints({0, 2}), Partition({1, 1})) ==
          -kostka_foulkes(pf, rs, Partition({1, 1}), Partition({1, 1})));
    // (0,1) + rho hits a wall of the dominant chamber: zero
    CHECK(kostka_sum_at(pf, rs, Weight::from_ints({0, 1}), Partition({1, 1}))
              .is_zero());
  }
  PartitionFnCache pf2;
  CHECK_THROWS_AS(kostka_sum_at(pf2, {Kind::B, 2}, Weight::from_ints({1, 0, 0}),
                                Partition({1, 1})),
                  InvalidInput);
}

TEST_CASE("restricted sum equals the shifted polynomial") {
  PartitionFnCache pf;
  auto parts = partitions_up_to(4, 2);
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    RootSystem rs{k, 2};
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        long long lo = 0;
        if (la.weight() > mu.weight()) lo = (la.weight() - mu.weight() + 1) / 2;
        for (long long kk = lo; kk <= lo + 1; ++kk) {
          CAPTURE(kind_name(k), la.to_string(), mu.to_string(), kk);
          CHECK(restricted_kostka(pf, k, la, mu, kk) ==
                kostka_foulkes(pf, rs, la.plus_kappa(static_cast<int>(kk)),
                               mu.plus_kappa(static_cast<int>(kk))));
        }
      }
  }
  // and at rank three, where the symmetric group is properly smaller
  CHECK(restricted_kostka(pf, Kind::D, Partition({2, 1, 0}), Partition({1, 1, 1}), 0) ==
        kostka_foulkes(pf, {Kind::D, 3}, Partition({2, 1, 0}), Partition({1, 1, 1})));
  CHECK(restricted_kostka(pf, Kind::C, Partition({3, 1, 0}), Partition({2, 1, 1}), 2) ==
        kostka_foulkes(pf, {Kind::C, 3}, Partition({5, 3, 2}), Partition({4, 3, 3})));
}

TEST_CASE("restricted sum validates its arguments") {
  PartitionFnCache pf;
  CHECK_THROWS_AS(restricted_kostka(pf, Kind::A, Partition({1, 0}), Partition({1, 0}), 0),
                  InvalidInput);
  CHECK_THROWS_AS(restricted_kostka(pf, Kind::C, Partition({1, 0}), Partition({1}), 0),
                  InvalidInput);
  // k below the stability bound for |lambda| > |mu|
  CHECK_THROWS_AS(restricted_kostka(pf, Kind::C, Partition({4, 0}), Partition({1, 0}), 1),
                  InvalidInput);
  CHECK_NOTHROW(restricted_kostka(pf, Kind::C, Partition({4, 0}), Partition({1, 0}), 2));
}
