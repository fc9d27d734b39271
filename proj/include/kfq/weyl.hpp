#pragma once

// Root systems of classical type, their Weyl groups realized as signed
// permutations, length functions, and the straightening move used by the
// alternating sums.

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>

#include "core.hpp"

namespace kfq {

enum class Kind { A, B, C, D };

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
  }
  throw InvalidInput("bad kind");
}

inline Kind parse_kind(const std::string& s) {
  if (s == "A" || s == "a") return Kind::A;
  if (s == "B" || s == "b") return Kind::B;
  if (s == "C" || s == "c") return Kind::C;
  if (s == "D" || s == "d") return Kind::D;
  throw InvalidInput("unknown root system kind: '" + s + "'");
}

/// A classical root system realized in Z^rank. Kind A here means the
/// rank-many-coordinates realization whose positive roots are e_i - e_j,
/// i < j (the gl_rank convention), so rank >= 1 throughout. D of rank 1 is
/// the degenerate system with no roots and trivial Weyl group.
struct RootSystem {
  Kind kind;
  int rank;

  RootSystem(Kind k, int m) : kind(k), rank(m) {
    if (m < 1) throw InvalidInput("rank must be >= 1");
  }

  bool operator<(const RootSystem& o) const {
    return std::make_pair(static_cast<int>(kind), rank) <
           std::make_pair(static_cast<int>(o.kind), o.rank);
  }
};

/// Positive roots in a fixed deterministic order: first e_i - e_j (i < j,
/// lex), then e_i + e_j (i < j, lex), then the short/long tail for B/C.
inline std::vector<Weight> positive_roots(const RootSystem& rs) {
  const int m = rs.rank;
  std::vector<Weight> roots;
  auto mk = [m](int i, int j, long long ci, long long cj) {
    std::vector<long long> v(m, 0);
    v[i] = ci;
    if (j >= 0) v[j] += cj;
    return Weight::from_ints(v);
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) roots.push_back(mk(i, j, 1, -1));
  if (rs.kind != Kind::A)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) roots.push_back(mk(i, j, 1, 1));
  if (rs.kind == Kind::B)
    for (int i = 0; i < m; ++i) roots.push_back(mk(i, -1, 1, 0));
  if (rs.kind == Kind::C)
    for (int i = 0; i < m; ++i) roots.push_back(mk(i, -1, 2, 0));
  return roots;
}

/// Half-sum of positive roots. B_m: (m-1/2, ..., 1/2); C_m: (m, ..., 1);
/// D_m: (m-1, ..., 0). For kind A this returns the staircase (m, ..., 1):
/// the alternating sums only see rho modulo multiples of (1,...,1), which
/// the symmetric group fixes, and the staircase is the normalization the
/// q-multiplicity formulas are written in.
inline Weight rho(const RootSystem& rs) {
  const int m = rs.rank;
  std::vector<long long> t(m);
  for (int i = 0; i < m; ++i) {
    switch (rs.kind) {
      case Kind::A: t[i] = 2LL * (m - i); break;
      case Kind::B: t[i] = 2LL * (m - i) - 1; break;
      case Kind::C: t[i] = 2LL * (m - i); break;
      case Kind::D: t[i] = 2LL * (m - i - 1); break;
    }
  }
  return Weight::from_doubled(std::move(t));
}

/// The staircase (m, m-1, ..., 1) as a weight.
inline Weight rho_staircase(int m) {
  std::vector<long long> v(m);
  for (int i = 0; i < m; ++i) v[i] = m - i;
  return Weight::from_ints(v);
}

/// Coordinate involution I(a_1, ..., a_m) = (-a_m, ..., -a_1).
inline Weight invol_I(const Weight& w) {
  std::vector<long long> t(w.doubled().rbegin(), w.doubled().rend());
  for (long long& x : t) x = -x;
  return Weight::from_doubled(std::move(t));
}

// ---------------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------------

/// w is stored by its images: img[i-1] = w(i) in {-m..-1, 1..m}, with every
/// absolute value appearing once. Acts on weights by
/// (w.beta)_i = sign(w(i)) * beta_{|w(i)|}.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> img) : img_(std::move(img)) {
    const int m = static_cast<int>(img_.size());
    std::vector<bool> seen(m + 1, false);
    for (int v : img_) {
      int a = v < 0 ? -v : v;
      if (a < 1 || a > m || seen[a]) throw InvalidInput("bad signed permutation");
      seen[a] = true;
    }
  }

  static SignedPermutation identity(int m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    return SignedPermutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  const std::vector<int>& images() const { return img_; }

  bool is_unsigned() const {
    for (int v : img_)
      if (v < 0) return false;
    return true;
  }

  int negative_entries() const {
    int n = 0;
    for (int v : img_)
      if (v < 0) ++n;
    return n;
  }

  Weight apply(const Weight& beta) const {
    if (beta.rank() != size()) throw InvalidInput("rank mismatch in group action");
    std::vector<long long> t(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      int v = img_[i];
      long long x = beta.doubled_at((v < 0 ? -v : v) - 1);
      t[i] = v < 0 ? -x : x;
    }
    return Weight::from_doubled(std::move(t));
  }

  /// (this o other)(i) = this(other(i)).
  SignedPermutation compose(const SignedPermutation& other) const {
    if (other.size() != size()) throw InvalidInput("size mismatch in composition");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      int j = other.img_[i];
      img[i] = j > 0 ? img_[j - 1] : -img_[-j - 1];
    }
    return SignedPermutation(std::move(img));
  }

  SignedPermutation inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      int v = img_[i];
      if (v > 0)
        img[v - 1] = static_cast<int>(i) + 1;
      else
        img[-v - 1] = -(static_cast<int>(i) + 1);
    }
    return SignedPermutation(std::move(img));
  }

  /// Conjugation by the order-reversing permutation:
  /// sigma*(k) = m + 1 - sigma(m - k + 1). A length-preserving group
  /// involution with s_i* = s_{m-i}; it intertwines coordinate reversal,
  /// sigma(I(beta)) = I(sigma*(beta)). Defined for unsigned permutations.
  SignedPermutation star() const {
    if (!is_unsigned()) throw InvalidInput("star is defined on S_m only");
    const int m = static_cast<int>(img_.size());
    std::vector<int> img(img_.size());
    for (int k = 0; k < m; ++k) img[k] = m + 1 - img_[m - 1 - k];
    return SignedPermutation(std::move(img));
  }

  bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
  bool operator<(const SignedPermutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

/// Number of positive roots of the given system that w sends negative.
/// For kind A, w must be unsigned.
inline int length(const SignedPermutation& w, const RootSystem& rs) {
  if (rs.kind == Kind::A && !w.is_unsigned())
    throw InvalidInput("length in kind A needs an unsigned permutation");
  std::set<std::vector<long long>> pos;
  for (const Weight& r : positive_roots(rs)) pos.insert(r.doubled());
  int len = 0;
  for (const Weight& r : positive_roots(rs))
    if (pos.count((-w.apply(r)).doubled())) ++len;
  return len;
}

// ---------------------------------------------------------------------------
// Group enumeration
// ---------------------------------------------------------------------------

/// Order of the Weyl group attached to the kind: m! (A), 2^m m! (B, C),
/// 2^(m-1) m! (D; 1 when m = 1).
inline Int weyl_order(Kind kind, int m) {
  Int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  switch (kind) {
    case Kind::A: return f;
    case Kind::B:
    case Kind::C: return f << m;
    case Kind::D: return m == 1 ? Int(1) : f << (m - 1);
  }
  throw InvalidInput("bad kind");
}

struct GroupTable {
  std::vector<SignedPermutation> elements;
  std::vector<int> lengths;  // aligned with elements
  std::vector<int> signs;    // (-1)^length
};

namespace detail {

inline GroupTable build_group_table(Kind kind, int m) {
  GroupTable t;
  std::vector<int> img;
  std::vector<bool> used(m + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(img.size()) == m) {
      int neg = 0;
      for (int v : img)
        if (v < 0) ++neg;
      if (kind == Kind::D && neg % 2 != 0) return;
      t.elements.push_back(SignedPermutation(img));
      return;
    }
    for (int a = 1; a <= m; ++a) {
      if (used[a]) continue;
      used[a] = true;
      if (kind != Kind::A) {
        img.push_back(-a);
        self(self);
        img.pop_back();
      }
      img.push_back(a);
      self(self);
      img.pop_back();
      used[a] = false;
    }
  };
  rec(rec);

  RootSystem rs(kind, m);
  std::set<std::vector<long long>> pos;
  for (const Weight& r : positive_roots(rs)) pos.insert(r.doubled());
  const auto roots = positive_roots(rs);
  t.lengths.reserve(t.elements.size());
  t.signs.reserve(t.elements.size());
  for (const SignedPermutation& w : t.elements) {
    int len = 0;
    for (const Weight& r : roots)
      if (pos.count((-w.apply(r)).doubled())) ++len;
    t.lengths.push_back(len);
    t.signs.push_back(len % 2 == 0 ? 1 : -1);
  }
  return t;
}

}  // namespace detail

/// Cached table of the full Weyl group with lengths and signs. Throws
/// GuardExceeded if the group order is above max_order. Thread-safe.
inline const GroupTable& group_table(Kind kind, int m,
                                     const Int& max_order = Int(10000000)) {
  if (m < 1) throw InvalidInput("rank must be >= 1");
  if (weyl_order(kind, m) > max_order)
    throw GuardExceeded("Weyl group of " + kind_name(kind) + "_" +
                        std::to_string(m) + " exceeds the order guard");
  static std::map<std::pair<int, int>, GroupTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, detail::build_group_table(kind, m)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

/// Sorts alpha + rho strictly; returns the unique (lambda, sign) with
/// w(alpha + rho) = lambda + rho, lambda a partition, sign the sign of w,
/// or nullopt if alpha + rho has a repeated entry (sum contribution zero)
/// or the straightened weight is not a partition.
inline std::optional<std::pair<Partition, int>> dot_straighten(
    const Weight& alpha, const Weight& rho_vec) {
  if (alpha.rank() != rho_vec.rank()) throw InvalidInput("rank mismatch");
  std::vector<long long> g(alpha.rank());
  for (int i = 0; i < alpha.rank(); ++i)
    g[i] = alpha.doubled_at(i) + rho_vec.doubled_at(i);
  int inversions = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] == g[j]) return std::nullopt;
      if (g[i] < g[j]) ++inversions;
    }
  std::vector<long long> s(g);
  std::sort(s.rbegin(), s.rend());
  std::vector<int> parts(g.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    long long d = s[i] - rho_vec.doubled_at(static_cast<int>(i));
    if (d < 0 || d % 2 != 0) return std::nullopt;
    parts[i] = static_cast<int>(d / 2);
  }
  return std::make_pair(Partition(parts), inversions % 2 == 0 ? 1 : -1);
}

}  // namespace kfq
