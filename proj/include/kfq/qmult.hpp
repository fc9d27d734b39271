#pragma once

// The four q-multiplicities for tensor products of row and column modules,
// the duality checks against shifted Kostka-Foulkes polynomials, and the
// alternative evaluation through type A extended Kostka polynomials
// weighted by pair-decomposition counts.

#include "kostka.hpp"

namespace kfq {

/// u, U: tensor products of row modules (orthogonal, symplectic).
/// v, V: tensor products of column modules (orthogonal, symplectic).
enum class Flavor { u, U, v, V };

inline std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::u: return "u";
    case Flavor::U: return "U";
    case Flavor::v: return "v";
    case Flavor::V: return "V";
  }
  throw InvalidInput("bad flavor");
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "u") return Flavor::u;
  if (s == "U") return Flavor::U;
  if (s == "v") return Flavor::v;
  if (s == "V") return Flavor::V;
  throw InvalidInput("unknown flavor: '" + s + "' (expected u, U, v or V)");
}

struct QMultQuery {
  Flavor flavor;
  Partition lambda;
  Partition mu;
};

namespace detail {

/// sum over S_m of sign(sigma) g(sigma(lambda + rho_m) - mu - rho_m),
/// g = f_q (capital = false) or F_q (capital = true).
inline QPolynomial row_qmult(PartitionFnCache& cache, bool capital,
                             const Partition& lambda, const Partition& mu,
                             const Int& max_order) {
  const int m = lambda.length();
  if (m == 0) return QPolynomial::one();
  const Weight r = rho_staircase(m);
  const Weight top = Weight::from_partition(lambda) + r;
  const Weight bottom = Weight::from_partition(mu) + r;
  const GroupTable& table = group_table(Kind::A, m, max_order);
  const RootSystem rs(capital ? Kind::C : Kind::D, m);
  QPolynomial sum;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    Weight arg = table.elements[i].apply(top) - bottom;
    QPolynomial term = cache.kostant_q(rs, invol_I(arg));
    if (table.signs[i] > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace detail

/// q-multiplicity of V(lambda) in the tensor product attached to mu.
/// lambda and mu must have the same length. Row flavors read the length as
/// the rank; column flavors conjugate both partitions (padded to
/// max(lambda_1, mu_1) parts) and delegate to the row sum.
inline QPolynomial qmult(PartitionFnCache& cache, const QMultQuery& query,
                         const Int& max_order = Int(10000000)) {
  const Partition& lambda = query.lambda;
  const Partition& mu = query.mu;
  if (lambda.length() != mu.length())
    throw InvalidInput("qmult: lambda and mu must have the same length");
  switch (query.flavor) {
    case Flavor::u:
      return detail::row_qmult(cache, false, lambda, mu, max_order);
    case Flavor::U:
      return detail::row_qmult(cache, true, lambda, mu, max_order);
    case Flavor::v:
    case Flavor::V: {
      const int m = std::max(lambda.first(), mu.first());
      if (m == 0) return QPolynomial::one();
      return detail::row_qmult(cache, query.flavor == Flavor::V,
                               lambda.conjugate(m), mu.conjugate(m), max_order);
    }
  }
  throw InvalidInput("bad flavor");
}

inline QPolynomial qmult(PartitionFnCache& cache, Flavor flavor,
                         const Partition& lambda, const Partition& mu,
                         const Int& max_order = Int(10000000)) {
  return qmult(cache, QMultQuery{flavor, lambda, mu}, max_order);
}

// ---------------------------------------------------------------------------
// Duality checks
// ---------------------------------------------------------------------------

struct DualityReport {
  Partition lambda, mu;
  long long k = 0;
  QPolynomial orth, symp;  // u, U (row) or v, V (column)
  QPolynomial kostka_D, kostka_C;
  bool ok() const { return orth == kostka_D && symp == kostka_C; }
};

/// Row duality: u = K^{D_m} and U = K^{C_m} at (hat(lambda) + k kappa,
/// hat(mu) + k kappa), hats in the box of width n = max(lambda_1, mu_1).
/// Requires |lambda| <= |mu| and 2k >= |mu| - |lambda|.
inline DualityReport verify_duality_row(PartitionFnCache& cache,
                                        const Partition& lambda, const Partition& mu,
                                        long long k,
                                        const Int& max_order = Int(10000000)) {
  const int m = lambda.length();
  if (mu.length() != m || m < 1)
    throw InvalidInput("verify_duality_row: need equal lengths >= 1");
  if (lambda.weight() > mu.weight())
    throw InvalidInput("verify_duality_row: |lambda| must be <= |mu|");
  if (2 * k < mu.weight() - lambda.weight())
    throw InvalidInput("verify_duality_row: k below the admissible bound");
  const int n = std::max(lambda.first(), mu.first());
  DualityReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.k = k;
  rep.orth = qmult(cache, Flavor::u, lambda, mu, max_order);
  rep.symp = qmult(cache, Flavor::U, lambda, mu, max_order);
  const Partition lh = lambda.hat(n).plus_kappa(static_cast<int>(k));
  const Partition mh = mu.hat(n).plus_kappa(static_cast<int>(k));
  rep.kostka_D = kostka_foulkes(cache, RootSystem(Kind::D, m), lh, mh, max_order);
  rep.kostka_C = kostka_foulkes(cache, RootSystem(Kind::C, m), lh, mh, max_order);
  return rep;
}

/// Column duality: v = K^{D_m} and V = K^{C_m} at (tilde(lambda) + k kappa,
/// tilde(mu) + k kappa), where m = max(lambda_1, mu_1), the conjugates are
/// padded to length m, and the tildes are hats of the conjugates in the box
/// of width n = max(lambda'_1, mu'_1). Requires |lambda| <= |mu| and
/// 2k >= |mu| - |lambda|.
inline DualityReport verify_duality_column(PartitionFnCache& cache,
                                           const Partition& lambda,
                                           const Partition& mu, long long k,
                                           const Int& max_order = Int(10000000)) {
  if (mu.length() != lambda.length())
    throw InvalidInput("verify_duality_column: need equal lengths");
  if (lambda.weight() > mu.weight())
    throw InvalidInput("verify_duality_column: |lambda| must be <= |mu|");
  if (2 * k < mu.weight() - lambda.weight())
    throw InvalidInput("verify_duality_column: k below the admissible bound");
  DualityReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.k = k;
  rep.orth = qmult(cache, Flavor::v, lambda, mu, max_order);
  rep.symp = qmult(cache, Flavor::V, lambda, mu, max_order);
  const int m = std::max(lambda.first(), mu.first());
  if (m == 0) {
    rep.kostka_D = QPolynomial::one();
    rep.kostka_C = QPolynomial::one();
    return rep;
  }
  const Partition lc = lambda.conjugate(m);
  const Partition mc = mu.conjugate(m);
  const int n = std::max(lc.first(), mc.first());
  const Partition lt = lc.hat(n).plus_kappa(static_cast<int>(k));
  const Partition mt = mc.hat(n).plus_kappa(static_cast<int>(k));
  rep.kostka_D = kostka_foulkes(cache, RootSystem(Kind::D, m), lt, mt, max_order);
  rep.kostka_C = kostka_foulkes(cache, RootSystem(Kind::C, m), lt, mt, max_order);
  return rep;
}

// ---------------------------------------------------------------------------
// Kostka-number route
// ---------------------------------------------------------------------------

/// Number of ways to write delta as sum_{r <= s} e_rs (eps_r + eps_s)
/// (kind C) or with r < s strictly (kind D), e_rs nonnegative integers.
/// delta must be a nonnegative integral vector.
inline Int decomposition_counts(Kind kind, const Weight& delta) {
  if (kind != Kind::C && kind != Kind::D)
    throw InvalidInput("decomposition_counts: kind must be C or D");
  if (!delta.is_integral())
    throw InvalidInput("decomposition_counts: delta must be integral");
  std::vector<long long> rem = delta.to_ints();
  const int m = static_cast<int>(rem.size());
  for (long long x : rem)
    if (x < 0) throw InvalidInput("decomposition_counts: delta must be nonnegative");

  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < m; ++r)
    for (int s = (kind == Kind::C ? r : r + 1); s < m; ++s)
      pairs.push_back({r, s});

  auto rec = [&](auto&& self, std::size_t idx) -> Int {
    bool zero = true;
    for (long long x : rem)
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) return 1;
    if (idx == pairs.size()) return 0;
    auto [r, s] = pairs[idx];
    long long cap = (r == s) ? rem[r] / 2 : std::min(rem[r], rem[s]);
    Int total = 0;
    for (long long t = 0; t <= cap; ++t) {
      if (t > 0) {
        rem[r] -= 1;
        rem[s] -= 1;
      }
      total += self(self, idx + 1);
    }
    rem[r] += cap;
    rem[s] += cap;
    return total;
  };
  return rec(rec, 0);
}

/// Evaluates u (flavor u) or U (flavor U) through type A polynomials:
/// q^{d/2} * sum over delta >= 0 with |delta| = d of c_delta *
/// K^A_{hat(lambda), hat(mu) + delta}, d = |mu| - |lambda|, hats in the box
/// of width max(lambda_1, mu_1), c from kind D (u) or C (U). Returns zero
/// when d is odd or negative, matching the direct sums.
inline QPolynomial qmult_via_kostka_numbers(PartitionFnCache& cache, Flavor flavor,
                                            const Partition& lambda,
                                            const Partition& mu,
                                            const Int& max_order = Int(10000000)) {
  if (flavor != Flavor::u && flavor != Flavor::U)
    throw InvalidInput("qmult_via_kostka_numbers: row flavors only");
  const int m = lambda.length();
  if (mu.length() != m) throw InvalidInput("qmult_via_kostka_numbers: length mismatch");
  const long long d = mu.weight() - lambda.weight();
  if (d < 0 || d % 2 != 0) return QPolynomial::zero();
  if (m == 0) return QPolynomial::one();

  const int n = std::max(lambda.first(), mu.first());
  const Partition lh = lambda.hat(n);
  const Partition mh = mu.hat(n);
  const Kind ckind = flavor == Flavor::u ? Kind::D : Kind::C;

  QPolynomial acc;
  std::vector<long long> delta(m, 0);
  auto rec = [&](auto&& self, int idx, long long rem) -> void {
    if (idx == m - 1) {
      delta[idx] = rem;
      Int c = decomposition_counts(ckind, Weight::from_ints(delta));
      if (c != 0) {
        Weight gamma = Weight::from_partition(mh) + Weight::from_ints(delta);
        acc += kostka_extended_A(cache, lh, gamma, max_order) * c;
      }
      return;
    }
    for (long long t = 0; t <= rem; ++t) {
      delta[idx] = t;
      self(self, idx + 1, rem - t);
    }
  };
  rec(rec, 0, d);
  return acc.shifted(1, d / 2);
}

/// Box-complement symmetry of the type A polynomials at equal weights:
/// K^A_{lambda,mu} = K^A_{hat(lambda),hat(mu)}, hats in the box of width
/// max(lambda_1, mu_1).
struct AhatReport {
  QPolynomial plain, hatted;
  bool ok() const { return plain == hatted; }
};

inline AhatReport ahat_symmetry_check(PartitionFnCache& cache,
                                      const Partition& lambda, const Partition& mu,
                                      const Int& max_order = Int(10000000)) {
  if (lambda.length() != mu.length())
    throw InvalidInput("ahat_symmetry_check: length mismatch");
  if (lambda.weight() != mu.weight())
    throw InvalidInput("ahat_symmetry_check: needs |lambda| = |mu|");
  const int n = std::max(lambda.first(), mu.first());
  AhatReport rep;
  rep.plain = kostka_extended_A(cache, lambda, Weight::from_partition(mu), max_order);
  rep.hatted = kostka_extended_A(cache, lambda.hat(n),
                                 Weight::from_partition(mu.hat(n)), max_order);
  return rep;
}

}  // namespace kfq
