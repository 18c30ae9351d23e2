#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "positroidlab/perm.hpp"

namespace plab {

/// k-subset of [1,n] as an n-bit mask. Bit (e-1) set means e is a member.
class KSubset {
 public:
  KSubset() : n_(0), mask_(0) {}

  KSubset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 30) throw DomainError("ground set size out of range");
    if (mask >> n) throw DomainError("subset member out of range");
  }

  static KSubset of(int n, std::initializer_list<int> members) {
    std::uint32_t m = 0;
    for (int e : members) {
      if (e < 1 || e > n) throw DomainError("subset member out of range");
      m |= 1u << (e - 1);
    }
    return KSubset(n, m);
  }

  static KSubset of(int n, const std::vector<int>& members) {
    std::uint32_t m = 0;
    for (int e : members) {
      if (e < 1 || e > n) throw DomainError("subset member out of range");
      m |= 1u << (e - 1);
    }
    return KSubset(n, m);
  }

  /// Digit shorthand "346" (n <= 9 only).
  static KSubset from_string(const std::string& s, int n) {
    std::vector<int> mem;
    std::string cur;
    bool spaced = s.find(' ') != std::string::npos || s.find(',') != std::string::npos;
    if (spaced) {
      std::string t = s;
      for (char& c : t)
        if (c == ',') c = ' ';
      size_t pos = 0;
      while (pos < t.size()) {
        size_t next = t.find(' ', pos);
        if (next == std::string::npos) next = t.size();
        if (next > pos) mem.push_back(std::stoi(t.substr(pos, next - pos)));
        pos = next + 1;
      }
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') throw DomainError("bad subset digit string: " + s);
        mem.push_back(c - '0');
      }
    }
    return of(n, mem);
  }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int k() const { return std::popcount(mask_); }
  bool contains(int e) const { return (mask_ >> (e - 1)) & 1u; }

  KSubset with(int e) const { return KSubset(n_, mask_ | (1u << (e - 1))); }
  KSubset without(int e) const { return KSubset(n_, mask_ & ~(1u << (e - 1))); }

  /// Exchange: remove `out`, insert `in`. Requires out in S, in not in S (or equal).
  KSubset exchanged(int out, int in) const {
    if (!contains(out)) throw DomainError("exchange removes a non-member");
    KSubset s = without(out);
    if (s.contains(in)) throw DomainError("exchange inserts an existing member");
    return s.with(in);
  }

  std::vector<int> members() const {
    std::vector<int> mem;
    for (int e = 1; e <= n_; ++e)
      if (contains(e)) mem.push_back(e);
    return mem;
  }

  KSubset apply(const Perm& sigma) const {
    std::uint32_t m = 0;
    for (int e = 1; e <= n_; ++e)
      if (contains(e)) m |= 1u << (sigma(e) - 1);
    return KSubset(n_, m);
  }

  std::string to_string() const {
    std::string s;
    auto mem = members();
    if (n_ <= 9) {
      for (int e : mem) s += char('0' + e);
      return s.empty() ? "{}" : s;
    }
    s = "{";
    for (size_t i = 0; i < mem.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(mem[i]);
    }
    return s + "}";
  }

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const KSubset& a, const KSubset& b) { return !(a == b); }
  friend bool operator<(const KSubset& a, const KSubset& b) { return a.mask_ < b.mask_; }

 private:
  int n_;
  std::uint32_t mask_;
};

/// All k-subsets of [1,n] in colex (= increasing mask) order.
inline std::vector<KSubset> all_ksubsets(int n, int k) {
  std::vector<KSubset> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(KSubset(n, m));
  return out;
}

/// Gale order: S <=_i T, comparing the <_i-sorted element lists
/// componentwise (equivalently, prefix counts of the <_i order).
inline bool gale_leq(int i, const KSubset& S, const KSubset& T) {
  if (S.n() != T.n()) throw DomainError("Gale comparison across ground sets");
  if (S.k() != T.k()) throw DomainError("Gale comparison of unequal sizes");
  int n = S.n();
  int cs = 0, ct = 0;
  for (int step = 0; step < n; ++step) {
    int e = (i - 1 + step) % n + 1;
    if (S.contains(e)) ++cs;
    if (T.contains(e)) ++ct;
    if (cs < ct) return false;
  }
  return true;
}

}  // namespace plab
