#pragma once

// q-analogue of the Kostant partition function. The coefficient of q^k in
// kostant_q(rs, beta) counts the ways to write beta as a sum of exactly k
// positive roots of rs (with multiplicity). Everything is exact.

#include <mutex>

#include "weyl.hpp"

namespace kfq {

/// Memo shared across partition-function evaluations. Internally
/// synchronized; a full cache skips inserts (results stay correct, repeated
/// work is just recomputed). Pass one instance around: the memo is keyed by
/// (kind, rank, root index, remainder), so every query reuses it.
class PartitionFnCache {
 public:
  explicit PartitionFnCache(std::size_t max_entries = 4000000)
      : max_entries_(max_entries) {}

  std::size_t max_entries() const { return max_entries_; }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
  }

  /// Sum over k of q^k * #{ multisets of k positive roots summing to beta }.
  /// beta must be integral of the system's rank.
  QPolynomial kostant_q(const RootSystem& rs, const Weight& beta) {
    if (beta.rank() != rs.rank) throw InvalidInput("kostant_q: rank mismatch");
    if (!beta.is_integral()) throw InvalidInput("kostant_q: beta must be integral");

    const int m = rs.rank;
    std::vector<std::vector<long long>> roots;
    for (const Weight& r : positive_roots(rs)) roots.push_back(r.to_ints());
    // L(v) = sum_i (m - i + 1) v_i is >= 1 on every positive root, which
    // bounds multiplicities and forces termination.
    std::vector<long long> rootL(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) rootL[r] = lfun(roots[r]);

    std::vector<long long> rem = beta.to_ints();
    return rec(rs, roots, rootL, 0, rem);
  }

 private:
  static long long lfun(const std::vector<long long>& v) {
    long long s = 0;
    const long long m = static_cast<long long>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (m - static_cast<long long>(i)) * v[i];
    return s;
  }

  QPolynomial rec(const RootSystem& rs,
                  const std::vector<std::vector<long long>>& roots,
                  const std::vector<long long>& rootL, std::size_t idx,
                  std::vector<long long>& rem) {
    const long long lrem = lfun(rem);
    if (lrem < 0) return QPolynomial::zero();

    bool zero = true;
    long long total = 0;
    for (long long x : rem) {
      if (x != 0) zero = false;
      total += x;
    }
    if (zero) return QPolynomial::one();
    if (idx == roots.size() || lrem == 0) return QPolynomial::zero();

    switch (rs.kind) {
      case Kind::A:
        if (total != 0) return QPolynomial::zero();
        break;
      case Kind::B:
        if (total < 0) return QPolynomial::zero();
        break;
      case Kind::C:
      case Kind::D:
        // every positive root has coordinate sum 0 or 2
        if (total < 0 || total % 2 != 0) return QPolynomial::zero();
        break;
    }

    std::vector<long long> key;
    key.reserve(rem.size() + 3);
    key.push_back(static_cast<long long>(rs.kind));
    key.push_back(rs.rank);
    key.push_back(static_cast<long long>(idx));
    key.insert(key.end(), rem.begin(), rem.end());
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    QPolynomial res;
    const std::vector<long long>& root = roots[idx];
    const long long maxmult = lrem / rootL[idx];
    for (long long t = 0; t <= maxmult; ++t) {
      if (t > 0)
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= root[i];
      res += rec(rs, roots, rootL, idx + 1, rem).shifted(1, t);
    }
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += maxmult * root[i];

    {
      std::lock_guard<std::mutex> lock(mu_);
      if (memo_.size() < max_entries_) memo_.emplace(std::move(key), res);
    }
    return res;
  }

  std::size_t max_entries_;
  mutable std::mutex mu_;
  std::map<std::vector<long long>, QPolynomial> memo_;
};

/// f_q(alpha) = kostant_q(D_m, I(alpha)), m = rank of alpha. At m = 1 this
/// degenerates to [alpha = 0].
inline QPolynomial f_q(PartitionFnCache& cache, const Weight& alpha) {
  return cache.kostant_q(RootSystem(Kind::D, alpha.rank()), invol_I(alpha));
}

/// F_q(alpha) = kostant_q(C_m, I(alpha)).
inline QPolynomial F_q(PartitionFnCache& cache, const Weight& alpha) {
  return cache.kostant_q(RootSystem(Kind::C, alpha.rank()), invol_I(alpha));
}

/// Which inverse product the series oracle expands.
enum class SeriesKind {
  phi,  // prod_{i<j} (1 - q x_i/x_j)^-1 * prod_{r<s} (1 - q/(x_r x_s))^-1
  Phi,  // same with r <= s in the second product
};

/// All monomial coefficients of the chosen inverse product, truncated to
/// q-degree <= degree_bound. Returns weight -> polynomial; any weight
/// absent from the map has zero coefficient through that degree. This is
/// the independent cross-check for f_q (phi) and F_q (Phi).
inline std::map<Weight, QPolynomial> series_oracle_coefficients(
    SeriesKind which, int m, long long degree_bound) {
  if (m < 1) throw InvalidInput("series oracle: rank must be >= 1");
  if (degree_bound < 0) throw InvalidInput("series oracle: negative degree bound");

  std::vector<std::vector<long long>> dirs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<long long> v(m, 0);
      v[i] = 1;
      v[j] = -1;
      dirs.push_back(v);
    }
  for (int r = 0; r < m; ++r)
    for (int s = (which == SeriesKind::Phi ? r : r + 1); s < m; ++s) {
      std::vector<long long> v(m, 0);
      v[r] -= 1;
      v[s] -= 1;
      dirs.push_back(v);
    }

  std::map<std::vector<long long>, QPolynomial> acc;
  acc[std::vector<long long>(m, 0)] = QPolynomial::one();
  for (const auto& dir : dirs) {
    std::map<std::vector<long long>, QPolynomial> next;
    for (const auto& [vec, poly] : acc) {
      std::vector<long long> v(vec);
      for (long long t = 0; t <= degree_bound; ++t) {
        if (t > 0)
          for (int i = 0; i < m; ++i) v[i] += dir[i];
        QPolynomial contrib = poly.shifted(1, t).truncated(degree_bound);
        if (contrib.is_zero()) break;
        auto [it, inserted] = next.emplace(v, contrib);
        if (!inserted) it->second += contrib;
      }
    }
    acc = std::move(next);
  }

  std::map<Weight, QPolynomial> out;
  for (auto& [vec, poly] : acc)
    if (!poly.is_zero()) out.emplace(Weight::from_ints(vec), poly);
  return out;
}

}  // namespace kfq
