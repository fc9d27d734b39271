#pragma once

// Exact character computations: alternants, Weyl characters via exact
// division, the h/e entry families, determinant forms for row and column
// modules, factorization checks for the determinant kernels, and a greedy
// decomposition of invariant Laurent polynomials into irreducible characters.

#include <mutex>

#include "weyl.hpp"

namespace kfq {

/// Laurent polynomial in x_1..x_rank with Int coefficients. Exponents are
/// stored doubled so alternants at half-integral rho work; every public
/// character has integral exponents. Term order is lexicographic on the
/// exponent vector, which is the order the division and decomposition
/// routines lean on.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank) : rank_(rank) {
    if (rank < 1) throw InvalidInput("LaurentPoly rank must be >= 1");
  }

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }

  static LaurentPoly one(int rank) {
    LaurentPoly p(rank);
    p.t_[std::vector<long long>(rank, 0)] = 1;
    return p;
  }

  static LaurentPoly monomial(const Weight& w, Int c = Int(1)) {
    LaurentPoly p(w.rank());
    if (c != 0) p.t_[w.doubled()] = std::move(c);
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t support_size() const { return t_.size(); }
  const std::map<std::vector<long long>, Int>& terms() const { return t_; }

  Int coefficient(const Weight& w) const {
    auto it = t_.find(w.doubled());
    return it == t_.end() ? Int(0) : it->second;
  }

  void add_term(const std::vector<long long>& doubled_exp, const Int& c) {
    if (c == 0) return;
    Int& slot = t_[doubled_exp];
    slot += c;
    if (slot == 0) t_.erase(doubled_exp);
  }

  /// Lexicographically greatest term; the polynomial must be nonzero.
  std::pair<Weight, Int> leading_term() const {
    if (t_.empty()) throw InvalidInput("leading term of zero");
    auto it = t_.rbegin();
    return {Weight::from_doubled(it->first), it->second};
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r += o;
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r -= o;
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    check(o);
    LaurentPoly r(rank_);
    std::vector<long long> e(rank_);
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        for (int i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
        if (r.t_.size() > kMaxSupport)
          throw GuardExceeded("character support guard exceeded");
      }
    return r;
  }

  LaurentPoly operator*(const Int& s) const {
    LaurentPoly r(rank_);
    if (s == 0) return r;
    for (const auto& [e, c] : t_) r.t_[e] = c * s;
    return r;
  }

  /// Multiplies by c * x^shift (doubled exponent vector).
  LaurentPoly shifted(const std::vector<long long>& shift, const Int& c) const {
    LaurentPoly r(rank_);
    if (c == 0) return r;
    std::vector<long long> e(rank_);
    for (const auto& [e1, c1] : t_) {
      for (int i = 0; i < rank_; ++i) e[i] = e1[i] + shift[i];
      r.t_[e] = c1 * c;
    }
    return r;
  }

  /// x^beta -> x^{w beta} on every term.
  LaurentPoly apply(const SignedPermutation& w) const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : t_)
      r.add_term(w.apply(Weight::from_doubled(e)).doubled(), c);
    return r;
  }

  /// Value at x_1 = ... = x_rank = 1 (the dimension, for a character).
  Int eval_ones() const {
    Int s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
  }

  bool operator==(const LaurentPoly& o) const {
    return rank_ == o.rank_ && t_ == o.t_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  void check(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw InvalidInput("LaurentPoly rank mismatch");
  }

  static constexpr std::size_t kMaxSupport = 2000000;

  int rank_;
  std::map<std::vector<long long>, Int> t_;
};

/// sum over the Weyl group of sign(w) x^{w gamma}.
inline LaurentPoly alternant(const RootSystem& rs, const Weight& gamma,
                             const Int& max_order = Int(10000000)) {
  if (gamma.rank() != rs.rank) throw InvalidInput("alternant: rank mismatch");
  const GroupTable& table = group_table(rs.kind, rs.rank, max_order);
  LaurentPoly a(rs.rank);
  for (std::size_t i = 0; i < table.elements.size(); ++i)
    a.add_term(table.elements[i].apply(gamma).doubled(), Int(table.signs[i]));
  return a;
}

namespace detail {

/// Exact quotient num / den, or throws. den's lexicographically greatest
/// coefficient must be a unit (it is +-1 for every alternant).
inline LaurentPoly exact_divide(LaurentPoly num, const LaurentPoly& den,
                                long long iteration_cap = 10000000) {
  if (den.is_zero()) throw InvalidInput("division by zero polynomial");
  const auto [dlead, dcoeff] = den.leading_term();
  if (dcoeff != 1 && dcoeff != -1)
    throw InvalidInput("divisor leading coefficient is not a unit");
  LaurentPoly q(num.rank());
  std::vector<long long> shift(num.rank());
  long long iters = 0;
  while (!num.is_zero()) {
    if (++iters > iteration_cap) throw GuardExceeded("polynomial division guard");
    const auto [nlead, ncoeff] = num.leading_term();
    for (int i = 0; i < num.rank(); ++i)
      shift[i] = nlead.doubled_at(i) - dlead.doubled_at(i);
    Int c = dcoeff == 1 ? ncoeff : Int(-ncoeff);
    q.add_term(shift, c);
    num -= den.shifted(shift, c);
  }
  return q;
}

inline bool dominant_for(Kind kind, const Weight& nu) {
  const auto& t = nu.doubled();
  const int m = static_cast<int>(t.size());
  for (int i = 0; i + 1 < m; ++i)
    if (t[i] < t[i + 1]) return false;
  long long last = t[m - 1];
  if (kind == Kind::D) {
    // last entry may be negative as long as the one before dominates it
    if (m >= 2 && t[m - 2] < (last < 0 ? -last : last)) return false;
    return true;
  }
  return last >= 0;
}

}  // namespace detail

/// Memoizing home for Weyl characters and the derived entry families.
/// Kinds B, C, D only. Internally synchronized.
class CharCache {
 public:
  explicit CharCache(Int max_order = Int(10000000))
      : max_order_(std::move(max_order)) {}

  /// Irreducible character of highest weight nu by Weyl's formula,
  /// alternant(nu + rho) / alternant(rho). nu must be dominant integral;
  /// for D the last coordinate may be negative.
  LaurentPoly weyl_character(const RootSystem& rs, const Weight& nu) {
    if (rs.kind == Kind::A)
      throw InvalidInput("weyl_character: kinds B, C, D only");
    if (nu.rank() != rs.rank) throw InvalidInput("weyl_character: rank mismatch");
    if (!nu.is_integral()) throw InvalidInput("weyl_character: nu must be integral");
    if (!detail::dominant_for(rs.kind, nu))
      throw InvalidInput("weyl_character: nu is not dominant");

    std::vector<long long> key = cache_key(rs, nu.doubled());
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = chars_.find(key);
      if (it != chars_.end()) return it->second;
    }
    const Weight r = rho(rs);
    LaurentPoly chi =
        detail::exact_divide(alternant(rs, nu + r, max_order_), alternant(rs, r, max_order_));
    std::lock_guard<std::mutex> lock(mu_);
    return chars_.emplace(std::move(key), std::move(chi)).first->second;
  }

  LaurentPoly weyl_character(const RootSystem& rs, const Partition& lambda) {
    return weyl_character(rs, Weight::from_partition(lambda.padded(rs.rank)));
  }

  /// Character of the row module V(k e_1); zero for k < 0, one for k = 0.
  LaurentPoly h_family(const RootSystem& rs, long long k) {
    if (k < 0) return LaurentPoly::zero(rs.rank);
    std::vector<int> parts(rs.rank, 0);
    parts[0] = static_cast<int>(k);
    return weyl_character(rs, Partition(parts));
  }

  /// Character of the p-th exterior power of the standard module
  /// (dimension 2m+1 for B, 2m for C and D); zero outside [0, dim].
  LaurentPoly ext_power(const RootSystem& rs, long long p) {
    const auto& all = ext_powers(rs);
    if (p < 0 || p >= static_cast<long long>(all.size()))
      return LaurentPoly::zero(rs.rank);
    return all[static_cast<std::size_t>(p)];
  }

  /// Character of the column module V(1^p) for 0 <= p <= m, extended
  /// beyond m by the exterior-power symmetry of the standard module:
  /// B: e_p = e_{2m+1-p}; D: e_p = e_{2m-p}; C: the virtual difference
  /// ext_power(p) - ext_power(p-2), which can have negative coefficients.
  LaurentPoly e_family(const RootSystem& rs, long long p) {
    const int m = rs.rank;
    if (p < 0) return LaurentPoly::zero(m);
    switch (rs.kind) {
      case Kind::B:
        if (p > 2 * m + 1) return LaurentPoly::zero(m);
        if (p > m) p = 2 * m + 1 - p;
        break;
      case Kind::D:
        if (p > 2 * m) return LaurentPoly::zero(m);
        if (p > m) p = 2 * m - p;
        // p = m would be the reducible middle exterior power; the
        // reflection never lands there (2m - p < m for p > m)
        break;
      case Kind::C:
        return ext_power(rs, p) - ext_power(rs, p - 2);
      case Kind::A:
        throw InvalidInput("e_family: kinds B, C, D only");
    }
    std::vector<int> parts(m, 0);
    for (int i = 0; i < p && i < m; ++i) parts[i] = 1;
    return weyl_character(rs, Partition(parts));
  }

  /// H_k = h_k + h_{k-2} + h_{k-4} + ...
  LaurentPoly H_family(const RootSystem& rs, long long k) {
    LaurentPoly s(rs.rank);
    for (long long t = k; t >= 0; t -= 2) s += h_family(rs, t);
    return s;
  }

  /// E_p = e_p + e_{p-2} + e_{p-4} + ...
  LaurentPoly E_family(const RootSystem& rs, long long p) {
    LaurentPoly s(rs.rank);
    for (long long t = p; t >= 0; t -= 2) s += e_family(rs, t);
    return s;
  }

  /// Independent dimension count: Weyl dimension formula as an exact
  /// product over positive roots. Works for the D weights with negative
  /// last coordinate too.
  Int dim_formula(const RootSystem& rs, const Weight& nu) {
    if (!detail::dominant_for(rs.kind, nu) || !nu.is_integral())
      throw InvalidInput("dim_formula: nu must be dominant integral");
    const Weight r = rho(rs);
    const Weight top = nu + r;
    Int num = 1, den = 1;
    for (const Weight& a : positive_roots(rs)) {
      long long dn = 0, dd = 0;
      for (int i = 0; i < rs.rank; ++i) {
        dn += top.doubled_at(i) * a.doubled_at(i);
        dd += r.doubled_at(i) * a.doubled_at(i);
      }
      num *= dn;
      den *= dd;
    }
    if (den == 0) throw InvalidInput("dim_formula: degenerate rho pairing");
    Int q = num / den;
    if (q * den != num) throw GuardExceeded("dim_formula: non-exact division");
    return q;
  }

  const Int& max_order() const { return max_order_; }

 private:
  static std::vector<long long> cache_key(const RootSystem& rs,
                                          const std::vector<long long>& v) {
    std::vector<long long> key;
    key.reserve(v.size() + 2);
    key.push_back(static_cast<long long>(rs.kind));
    key.push_back(rs.rank);
    key.insert(key.end(), v.begin(), v.end());
    return key;
  }

  const std::vector<LaurentPoly>& ext_powers(const RootSystem& rs) {
    if (rs.kind == Kind::A) throw InvalidInput("ext_powers: kinds B, C, D only");
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(static_cast<int>(rs.kind), rs.rank);
    auto it = exts_.find(key);
    if (it != exts_.end()) return it->second;

    const int m = rs.rank;
    std::vector<Weight> vars;
    for (int i = 0; i < m; ++i) {
      std::vector<long long> v(m, 0);
      v[i] = 1;
      vars.push_back(Weight::from_ints(v));
      v[i] = -1;
      vars.push_back(Weight::from_ints(v));
    }
    if (rs.kind == Kind::B) vars.push_back(Weight::zero(m));

    std::vector<LaurentPoly> es(vars.size() + 1, LaurentPoly::zero(m));
    es[0] = LaurentPoly::one(m);
    for (std::size_t v = 0; v < vars.size(); ++v)
      for (std::size_t p = std::min(v + 1, vars.size()); p >= 1; --p) {
        LaurentPoly t = es[p - 1].shifted(vars[v].doubled(), 1);
        es[p] += t;
      }
    return exts_.emplace(key, std::move(es)).first->second;
  }

  Int max_order_;
  std::mutex mu_;
  std::map<std::vector<long long>, LaurentPoly> chars_;
  std::map<std::pair<int, int>, std::vector<LaurentPoly>> exts_;
};

// ---------------------------------------------------------------------------
// Determinant forms
// ---------------------------------------------------------------------------

namespace detail {

/// Determinant by the subset convolution over column sets: O(2^n n) entry
/// multiplications, far fewer polynomial products than Leibniz for n <= 8.
inline LaurentPoly det_subset(const std::vector<std::vector<LaurentPoly>>& a,
                              int rank) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return LaurentPoly::one(rank);
  std::vector<LaurentPoly> dp(std::size_t(1) << n, LaurentPoly::zero(rank));
  dp[0] = LaurentPoly::one(rank);
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = __builtin_popcountll(mask);
    for (int c = 0; c < n; ++c) {
      if (mask & (std::size_t(1) << c)) continue;
      if (a[row][c].is_zero()) continue;
      // sign flips once per already placed column right of c
      int above = __builtin_popcountll(mask >> (c + 1));
      LaurentPoly contrib = dp[mask] * a[row][c];
      if (above % 2) contrib = contrib * Int(-1);
      dp[mask | (std::size_t(1) << c)] += contrib;
    }
  }
  return dp.back();
}

}  // namespace detail

/// Row determinant: n x n with n = alpha size, entries built from h.
/// Column 1 is the single term h_{alpha_i - i + 1}; column j >= 2 is
/// h_{alpha_i - i + j} + h_{alpha_i - i - j + 2}. For a partition alpha
/// this is the row module character u_alpha (B, C: the irreducible
/// character; D with alpha_m > 0: the sum of the two mirror characters).
inline LaurentPoly determinant_u(CharCache& cc, const RootSystem& rs,
                                 const std::vector<long long>& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::vector<LaurentPoly>> a(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero(rs.rank)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly x = cc.h_family(rs, alpha[i - 1] - i + j);
      if (j > 1) x += cc.h_family(rs, alpha[i - 1] - i - j + 2);
      a[i - 1][j - 1] = std::move(x);
    }
  return detail::det_subset(a, rs.rank);
}

/// Same determinant written with the cumulative H family: every entry is
/// H_{alpha_i - i + j} - H_{alpha_i - i - j}, the minus pattern holding in
/// the last column too (bottom right corner H_{alpha_n} - H_{alpha_n - 2n}).
/// Equal to determinant_u whenever h_k = H_k - H_{k-2}, that is always.
inline LaurentPoly determinant_u_capital(CharCache& cc, const RootSystem& rs,
                                         const std::vector<long long>& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::vector<LaurentPoly>> a(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero(rs.rank)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a[i - 1][j - 1] = cc.H_family(rs, alpha[i - 1] - i + j) -
                        cc.H_family(rs, alpha[i - 1] - i - j);
  return detail::det_subset(a, rs.rank);
}

/// Column determinant: entries from the exterior powers of the standard
/// module (for C the virtual differences), plus pattern with a single
/// first column. For beta = conjugate(lambda) this is the column module
/// character v_beta.
inline LaurentPoly determinant_v(CharCache& cc, const RootSystem& rs,
                                 const std::vector<long long>& beta) {
  const int n = static_cast<int>(beta.size());
  auto little = [&cc, &rs](long long p) {
    if (rs.kind == Kind::C) return cc.ext_power(rs, p) - cc.ext_power(rs, p - 2);
    return cc.ext_power(rs, p);
  };
  std::vector<std::vector<LaurentPoly>> a(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero(rs.rank)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly x = little(beta[i - 1] - i + j);
      if (j > 1) x += little(beta[i - 1] - i - j + 2);
      a[i - 1][j - 1] = std::move(x);
    }
  return detail::det_subset(a, rs.rank);
}

/// Cumulative version of determinant_v (minus pattern, all columns):
/// entries Cap_{beta_i-i+j} - Cap_{beta_i-i-j} with Cap_p the cumulative
/// sum of the exterior powers (for C, Cap_p = ext_power(p) itself since
/// the differences telescope).
inline LaurentPoly determinant_v_capital(CharCache& cc, const RootSystem& rs,
                                         const std::vector<long long>& beta) {
  const int n = static_cast<int>(beta.size());
  auto cap = [&cc, &rs](long long p) {
    if (rs.kind == Kind::C) return cc.ext_power(rs, p);
    LaurentPoly s(rs.rank);
    for (long long t = p; t >= 0; t -= 2) s += cc.ext_power(rs, t);
    return s;
  };
  std::vector<std::vector<LaurentPoly>> a(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero(rs.rank)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a[i - 1][j - 1] = cap(beta[i - 1] - i + j) - cap(beta[i - 1] - i - j);
  return detail::det_subset(a, rs.rank);
}

// ---------------------------------------------------------------------------
// Determinant kernels and raising products
// ---------------------------------------------------------------------------

/// Expansion of prod_{i<j} (1 - x_i/x_j) * prod over pairs (1 - 1/(x_r x_s)),
/// with r < s (capital = false, the row/f kernel) or r <= s (capital = true,
/// the row/F kernel). These are the q = 1 raising-operator kernels: the
/// monomial coefficients c_v satisfy s_mu = sum_v c_v h_{mu + v}.
inline LaurentPoly raising_kernel(int m, bool capital) {
  LaurentPoly acc = LaurentPoly::one(m);
  auto factor = [m](const std::vector<long long>& dir) {
    LaurentPoly f = LaurentPoly::one(m);
    std::vector<long long> d2(m);
    for (int i = 0; i < m; ++i) d2[i] = 2 * dir[i];
    f.add_term(d2, Int(-1));
    return f;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<long long> v(m, 0);
      v[i] = 1;
      v[j] = -1;
      acc = acc * factor(v);
    }
  for (int r = 0; r < m; ++r)
    for (int s = capital ? r : r + 1; s < m; ++s) {
      std::vector<long long> v(m, 0);
      v[r] -= 1;
      v[s] -= 1;
      acc = acc * factor(v);
    }
  return acc;
}

struct FactorizationCheck {
  bool little_ok;   // plus-pattern monomial determinant = x^alpha * kernel(r<s)
  bool capital_ok;  // minus-pattern monomial determinant = x^alpha * kernel(r<=s)
};

/// Verifies the two factorization identities behind the determinant forms
/// at the pure-monomial level (entries x_i^{exponent} instead of characters).
inline FactorizationCheck delta_factorization_check(
    int m, const std::vector<long long>& alpha) {
  if (static_cast<int>(alpha.size()) != m)
    throw InvalidInput("delta_factorization_check: size mismatch");
  auto mono = [m](int var, long long e) {
    LaurentPoly p(m);
    std::vector<long long> v(m, 0);
    v[var] = 2 * e;
    p.add_term(v, 1);
    return p;
  };
  std::vector<std::vector<LaurentPoly>> little(
      m, std::vector<LaurentPoly>(m, LaurentPoly::zero(m))),
      cap(m, std::vector<LaurentPoly>(m, LaurentPoly::zero(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      LaurentPoly x = mono(i - 1, alpha[i - 1] - i + j);
      if (j > 1) x += mono(i - 1, alpha[i - 1] - i - j + 2);
      little[i - 1][j - 1] = std::move(x);
      cap[i - 1][j - 1] =
          mono(i - 1, alpha[i - 1] - i + j) - mono(i - 1, alpha[i - 1] - i - j);
    }
  std::vector<long long> a2(m);
  for (int i = 0; i < m; ++i) a2[i] = 2 * alpha[i];
  LaurentPoly little_rhs = raising_kernel(m, false).shifted(a2, 1);
  LaurentPoly cap_rhs = raising_kernel(m, true).shifted(a2, 1);
  return {detail::det_subset(little, m) == little_rhs,
          detail::det_subset(cap, m) == cap_rhs};
}

// ---------------------------------------------------------------------------
// Decomposition into irreducibles
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<SignedPermutation> invariance_generators(Kind kind, int m) {
  std::vector<SignedPermutation> gens;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> img(m);
    for (int j = 0; j < m; ++j) img[j] = j + 1;
    std::swap(img[i], img[i + 1]);
    gens.push_back(SignedPermutation(std::move(img)));
  }
  if (kind == Kind::B || kind == Kind::C) {
    std::vector<int> img(m);
    for (int j = 0; j < m; ++j) img[j] = j + 1;
    img[m - 1] = -m;
    gens.push_back(SignedPermutation(std::move(img)));
  }
  if (kind == Kind::D && m >= 2) {
    std::vector<int> img(m);
    for (int j = 0; j < m; ++j) img[j] = j + 1;
    img[m - 2] = -m;
    img[m - 1] = -(m - 1);
    gens.push_back(SignedPermutation(std::move(img)));
  }
  return gens;
}

}  // namespace detail

/// Writes an invariant Laurent polynomial as a Z-combination of irreducible
/// characters; returns highest weight -> multiplicity. Keys are dominant
/// weights: partitions except that for D the last coordinate may be
/// negative (mirror pairs (.., a) and (.., -a) are distinct keys).
/// Throws InvalidInput if f is not invariant or not a character combination.
inline std::map<Weight, Int> schur_decompose(CharCache& cc, const RootSystem& rs,
                                             LaurentPoly f,
                                             long long iteration_cap = 100000) {
  if (f.rank() != rs.rank) throw InvalidInput("schur_decompose: rank mismatch");
  for (const SignedPermutation& g :
       detail::invariance_generators(rs.kind, rs.rank))
    if (f.apply(g) != f)
      throw InvalidInput("schur_decompose: input is not Weyl invariant");

  std::map<Weight, Int> out;
  long long iters = 0;
  while (!f.is_zero()) {
    if (++iters > iteration_cap)
      throw GuardExceeded("schur_decompose: iteration guard");
    const auto [nu, c] = f.leading_term();
    if (!nu.is_integral() || !detail::dominant_for(rs.kind, nu))
      throw InvalidInput("schur_decompose: leading term is not dominant integral");
    f -= cc.weyl_character(rs, nu) * c;
    out[nu] += c;
  }
  return out;
}

/// Partition-keyed part of a decomposition. Keys with a negative last
/// coordinate (type D mirrors) are dropped: each mirror's multiplicity
/// matches its partner's by the outer symmetry, so the partition keys
/// carry the full cross-kind comparison.
inline std::map<Partition, Int> partition_keys(const std::map<Weight, Int>& dec) {
  std::map<Partition, Int> out;
  for (const auto& [nu, c] : dec) {
    std::vector<long long> v = nu.to_ints();
    if (!v.empty() && v.back() < 0) continue;
    std::vector<int> parts(v.begin(), v.end());
    out[Partition(std::move(parts))] += c;
  }
  return out;
}

}  // namespace kfq
