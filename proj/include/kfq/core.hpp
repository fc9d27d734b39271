#pragma once

// Basic value types shared by every module: partitions, integral/half-integral
// weight vectors, and polynomials in q with big-integer coefficients.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kfq {

using Int = boost::multiprecision::cpp_int;

/// Bad arguments from the caller (CLI maps this to exit code 2).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A resource guard tripped (CLI maps this to exit code 3).
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// Weakly decreasing vector of nonnegative ints. Trailing zeros are
/// significant: (2,1,0) has length 3 and is distinct from (2,1).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw InvalidInput("partition parts must be nonnegative");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw InvalidInput("partition parts must be weakly decreasing");
    }
  }

  static Partition zero(int length) { return Partition(std::vector<int>(length, 0)); }

  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  /// i-th part, 1-based, zero beyond the stored length.
  int part(int i) const {
    if (i < 1) throw InvalidInput("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
  }

  long long weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
  }

  /// Largest part (0 for the empty partition).
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  /// Number of nonzero parts.
  int nonzero_parts() const {
    int n = 0;
    while (n < length() && parts_[n] > 0) ++n;
    return n;
  }

  /// Conjugate partition; result has length max(first(), min_length).
  Partition conjugate(int min_length = 0) const {
    int len = std::max(first(), min_length);
    std::vector<int> c(len, 0);
    for (int j = 1; j <= len; ++j)
      for (int p : parts_) c[j - 1] += (p >= j) ? 1 : 0;
    return Partition(std::move(c));
  }

  /// Complement in the m x n box: (n - p_m, ..., n - p_1) where m = length().
  /// Requires n >= first().
  Partition hat(int n) const {
    if (n < first()) throw InvalidInput("hat parameter smaller than largest part");
    std::vector<int> h(parts_.size());
    for (int i = 0; i < length(); ++i) h[i] = n - parts_[length() - 1 - i];
    return Partition(std::move(h));
  }

  /// Adds k to every part (k >= 0): the shift by k*kappa, kappa = (1,...,1).
  Partition plus_kappa(int k) const {
    if (k < 0) throw InvalidInput("kappa shift must be nonnegative");
    std::vector<int> p(parts_);
    for (int& x : p) x += k;
    return Partition(std::move(p));
  }

  /// Same partition extended by zeros to the given length.
  Partition padded(int len) const {
    if (len < length()) throw InvalidInput("cannot pad to a shorter length");
    std::vector<int> p(parts_);
    p.resize(len, 0);
    return Partition(std::move(p));
  }

  /// Copy with trailing zeros removed.
  Partition trimmed() const {
    std::vector<int> p(parts_.begin(), parts_.begin() + nonzero_parts());
    return Partition(std::move(p));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  /// Comma-joined parts, "6,5,4"; the empty partition gives "".
  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < length(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  /// Parses "6,5,4". Empty string gives the empty partition.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
      std::istringstream is(text);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
          v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
          throw InvalidInput("bad partition entry: '" + tok + "'");
        }
        if (pos != tok.size()) throw InvalidInput("bad partition entry: '" + tok + "'");
        parts.push_back(v);
      }
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of total weight exactly w into exactly `length` parts
/// (trailing zeros allowed), each part <= max_part. Descending lex order.
inline void partitions_of(int w, int length, int max_part,
                          std::vector<Partition>& out) {
  std::vector<int> cur(length, 0);
  // walk parts left to right, each at most the previous one
  auto rec = [&](auto&& self, int idx, int rem, int cap) -> void {
    if (idx == length) {
      if (rem == 0) out.push_back(Partition(cur));
      return;
    }
    int hi = std::min(cap, rem);
    for (int p = hi; p >= 0; --p) {
      cur[idx] = p;
      if (rem - p <= (length - idx - 1) * p) self(self, idx + 1, rem - p, p);
    }
    cur[idx] = 0;
  };
  rec(rec, 0, w, std::min(max_part, w));
}

/// All partitions with length `length`, weight <= max_weight, parts <=
/// max_part; ordered by weight then descending lex.
inline std::vector<Partition> partitions_up_to(int max_weight, int length,
                                               int max_part = 1 << 20) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) partitions_of(w, length, max_part, out);
  return out;
}

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

/// Element of (1/2)Z^m, stored as doubled integers so half-integral rho
/// vectors are exact. Most public entry points require integral weights.
class Weight {
 public:
  Weight() = default;

  static Weight from_doubled(std::vector<long long> twice) {
    Weight w;
    w.twice_ = std::move(twice);
    return w;
  }

  static Weight from_ints(const std::vector<long long>& v) {
    std::vector<long long> t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = 2 * v[i];
    return from_doubled(std::move(t));
  }

  static Weight from_partition(const Partition& p) {
    std::vector<long long> t(p.length());
    for (int i = 0; i < p.length(); ++i) t[i] = 2LL * p.parts()[i];
    return from_doubled(std::move(t));
  }

  static Weight zero(int rank) { return from_doubled(std::vector<long long>(rank, 0)); }

  int rank() const { return static_cast<int>(twice_.size()); }
  const std::vector<long long>& doubled() const { return twice_; }
  long long doubled_at(int i) const { return twice_[i]; }

  bool is_integral() const {
    for (long long t : twice_)
      if (t % 2 != 0) return false;
    return true;
  }

  bool is_zero() const {
    for (long long t : twice_)
      if (t != 0) return false;
    return true;
  }

  /// Integer coordinates; throws unless integral.
  std::vector<long long> to_ints() const {
    if (!is_integral()) throw InvalidInput("weight is not integral");
    std::vector<long long> v(twice_.size());
    for (std::size_t i = 0; i < twice_.size(); ++i) v[i] = twice_[i] / 2;
    return v;
  }

  /// Sum of coordinates, doubled.
  long long total_doubled() const {
    return std::accumulate(twice_.begin(), twice_.end(), 0LL);
  }

  Weight operator+(const Weight& o) const {
    check_rank(o);
    std::vector<long long> t(twice_);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += o.twice_[i];
    return from_doubled(std::move(t));
  }

  Weight operator-(const Weight& o) const {
    check_rank(o);
    std::vector<long long> t(twice_);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= o.twice_[i];
    return from_doubled(std::move(t));
  }

  Weight operator-() const {
    std::vector<long long> t(twice_);
    for (long long& x : t) x = -x;
    return from_doubled(std::move(t));
  }

  bool operator==(const Weight& o) const { return twice_ == o.twice_; }
  bool operator!=(const Weight& o) const { return twice_ != o.twice_; }
  bool operator<(const Weight& o) const { return twice_ < o.twice_; }

  /// "1,-1" for integral weights, "3/2,1/2" otherwise.
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < twice_.size(); ++i) {
      if (i) os << ',';
      if (twice_[i] % 2 == 0)
        os << twice_[i] / 2;
      else
        os << twice_[i] << "/2";
    }
    return os.str();
  }

  /// Parses integer coordinates "1,-1,0".
  static Weight parse(const std::string& text) {
    std::vector<long long> v;
    if (!text.empty()) {
      std::istringstream is(text);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        long long x;
        try {
          x = std::stoll(tok, &pos);
        } catch (const std::exception&) {
          throw InvalidInput("bad weight entry: '" + tok + "'");
        }
        if (pos != tok.size()) throw InvalidInput("bad weight entry: '" + tok + "'");
        v.push_back(x);
      }
    }
    return from_ints(v);
  }

 private:
  void check_rank(const Weight& o) const {
    if (twice_.size() != o.twice_.size()) throw InvalidInput("weight rank mismatch");
  }

  std::vector<long long> twice_;
};

// ---------------------------------------------------------------------------
// QPolynomial
// ---------------------------------------------------------------------------

/// Polynomial in q over Int. Exponents may be any nonnegative integer; all
/// arithmetic is exact. Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial zero() { return QPolynomial(); }

  static QPolynomial one() { return monomial(1, 0); }

  static QPolynomial monomial(Int coeff, long long exp) {
    QPolynomial p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  const std::map<long long, Int>& coefficients() const { return c_; }

  Int coefficient(long long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
  }

  long long degree() const {
    // degree of the zero polynomial is -1 by convention here
    return c_.empty() ? -1 : c_.rbegin()->first;
  }

  void add_term(long long exp, const Int& coeff) {
    if (coeff == 0) return;
    Int& slot = c_[exp];
    slot += coeff;
    if (slot == 0) c_.erase(exp);
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }

  QPolynomial operator+(const QPolynomial& o) const {
    QPolynomial r(*this);
    r += o;
    return r;
  }

  QPolynomial operator-(const QPolynomial& o) const {
    QPolynomial r(*this);
    r -= o;
    return r;
  }

  QPolynomial operator*(const QPolynomial& o) const {
    QPolynomial r;
    for (const auto& [e1, c1] : c_)
      for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  QPolynomial operator*(const Int& s) const {
    QPolynomial r;
    if (s == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e] = c * s;
    return r;
  }

  QPolynomial operator-() const { return *this * Int(-1); }

  /// Multiplies by c * q^k.
  QPolynomial shifted(const Int& coeff, long long k) const {
    QPolynomial r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c * coeff;
    return r;
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return c_ != o.c_; }
  bool operator<(const QPolynomial& o) const { return c_ < o.c_; }

  Int eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  bool nonnegative_coefficients() const {
    for (const auto& [e, c] : c_)
      if (c < 0) return false;
    return true;
  }

  /// Drops all terms of exponent > bound.
  QPolynomial truncated(long long bound) const {
    QPolynomial r;
    for (const auto& [e, c] : c_)
      if (e <= bound) r.c_[e] = c;
    return r;
  }

  /// Canonical rendering, highest exponent first:
  ///   "q^5 + 2*q^4 + 3*q^3 + 2*q^2",  "q",  "1",  "0",  "-q^2 - 1".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      Int a = it->second;
      if (lead) {
        if (a < 0) os << '-';
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      Int mag = a < 0 ? Int(-a) : a;
      long long e = it->first;
      if (e == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
      }
      lead = false;
    }
    return os.str();
  }

 private:
  std::map<long long, Int> c_;
};

}  // namespace kfq
