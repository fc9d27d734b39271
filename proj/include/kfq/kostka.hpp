#pragma once

// Kostka-Foulkes polynomials of classical type via the alternating Weyl
// group sum over q-Kostant values, plus the restricted sum that computes
// stable shifted values with only a symmetric group's worth of terms.

#include "partfn.hpp"

namespace kfq {

/// Alternating sum with an arbitrary (not necessarily dominant) first
/// argument: sum over the Weyl group of sign(w) * P_q(w(alpha + rho) -
/// (mu + rho)). Equals sign * kostka_foulkes(straightened alpha, mu) when
/// alpha + rho is regular, zero when it is not.
inline QPolynomial kostka_sum_at(PartitionFnCache& cache, const RootSystem& rs,
                                 const Weight& alpha, const Partition& mu,
                                 const Int& max_order = Int(10000000)) {
  if (alpha.rank() != rs.rank || mu.length() != rs.rank)
    throw InvalidInput("kostka: arguments must have length equal to the rank");
  const Weight r = rho(rs);
  const Weight top = alpha + r;
  const Weight bottom = Weight::from_partition(mu) + r;
  const GroupTable& table = group_table(rs.kind, rs.rank, max_order);
  QPolynomial sum;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    QPolynomial term = cache.kostant_q(rs, table.elements[i].apply(top) - bottom);
    if (table.signs[i] > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// K^X_{lambda,mu}(q) for partitions lambda, mu of length equal to the rank.
/// Nonnegative coefficients for all partition inputs; K = 0 unless
/// |lambda| and |mu| allow a root decomposition.
inline QPolynomial kostka_foulkes(PartitionFnCache& cache, const RootSystem& rs,
                                  const Partition& lambda, const Partition& mu,
                                  const Int& max_order = Int(10000000)) {
  return kostka_sum_at(cache, rs, Weight::from_partition(lambda), mu, max_order);
}

/// Extended type A polynomial K^A_{lambda,gamma}(q): gamma is any integral
/// vector, the sum runs over S_m with the staircase rho, and coefficients
/// may be negative.
inline QPolynomial kostka_extended_A(PartitionFnCache& cache,
                                     const Partition& lambda, const Weight& gamma,
                                     const Int& max_order = Int(10000000)) {
  const int m = lambda.length();
  if (gamma.rank() != m) throw InvalidInput("kostka: length mismatch");
  if (!gamma.is_integral()) throw InvalidInput("kostka: gamma must be integral");
  RootSystem rs(Kind::A, m);
  const Weight r = rho(rs);
  const Weight top = Weight::from_partition(lambda) + r;
  const Weight bottom = gamma + r;
  const GroupTable& table = group_table(Kind::A, m, max_order);
  QPolynomial sum;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    QPolynomial term = cache.kostant_q(rs, table.elements[i].apply(top) - bottom);
    if (table.signs[i] > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Stable value of K^X_{lambda + k kappa, mu + k kappa} computed as the
/// restricted sum over S_m (with the staircase rho), valid for any
/// k >= (|lambda| - |mu|) / 2. The sum itself does not involve k; the k
/// argument is validated so callers state which shifted Kostka polynomial
/// they mean. X may be B, C or D.
inline QPolynomial restricted_kostka(PartitionFnCache& cache, Kind kind,
                                     const Partition& lambda, const Partition& mu,
                                     long long k,
                                     const Int& max_order = Int(10000000)) {
  if (kind == Kind::A) throw InvalidInput("restricted_kostka: kind must be B, C or D");
  const int m = lambda.length();
  if (mu.length() != m) throw InvalidInput("restricted_kostka: length mismatch");
  if (2 * k < lambda.weight() - mu.weight())
    throw InvalidInput("restricted_kostka: k below the stability bound");
  RootSystem rs(kind, m);
  const Weight r = rho_staircase(m);
  const Weight top = Weight::from_partition(lambda) + r;
  const Weight bottom = Weight::from_partition(mu) + r;
  const GroupTable& table = group_table(Kind::A, m, max_order);
  QPolynomial sum;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    QPolynomial term = cache.kostant_q(rs, table.elements[i].apply(top) - bottom);
    if (table.signs[i] > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace kfq
