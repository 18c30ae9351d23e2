#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "positroidlab/necklace.hpp"

namespace plab {

/// dim of the (cone over the) open variety indexed by pi.
inline long long dimension(const Perm& pi) {
  auto [k, n] = type_of(pi);
  return (long long)k * (n - k) + 1 - lift(pi).length();
}

/// Basis collection determined by a forward Grassmann necklace. Membership is
/// the n Gale conditions; the basis list is materialized lazily and cached.
class Positroid {
 public:
  explicit Positroid(const Perm& pi) : pi_(pi), necklace_(forward_necklace(pi)) {}

  const Perm& perm() const { return pi_; }
  const Necklace& necklace() const { return necklace_; }
  int n() const { return necklace_.n(); }
  int k() const { return necklace_.k(); }

  bool contains(const KSubset& S) const {
    if (S.n() != n() || S.k() != k()) throw DomainError("subset of incompatible type");
    for (int i = 1; i <= n(); ++i)
      if (!gale_leq(i, necklace_.at(i), S)) return false;
    return true;
  }

  /// All bases, in colex order. Thread-safe idempotent fill.
  const std::vector<KSubset>& bases() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!bases_) {
      std::vector<KSubset> out;
      for (const KSubset& S : all_ksubsets(n(), k()))
        if (contains(S)) out.push_back(S);
      bases_ = std::move(out);
    }
    return *bases_;
  }

  long long num_bases() const { return (long long)bases().size(); }

 private:
  Perm pi_;
  Necklace necklace_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<KSubset>> bases_;
};

/// Exchange probe for necklaces reachable from the forward necklace by
/// noncrossing toggles (the caller attests reachability). Returns whether the
/// exchanged set is a basis, and throws VerificationError if the non-basis
/// guarantee is violated while its hypotheses hold.
inline bool necklace_exchange_nonbasis(const Necklace& N, int z, int y, const Positroid& M) {
  int n = N.n();
  Perm trip = N.trip();
  int pos = N.removal().inverse()(z);
  const KSubset& L = N.at(pos);
  int piz = trip(z);

  bool member;
  if (!L.contains(y) && y != z) {
    member = M.contains(L.exchanged(z, y));
    // y strictly before pi(z) in the cyclic order from z
    bool hyp = detail::cyc_pos(z, y, n) < detail::cyc_pos(z, piz, n);
    if (hyp && member)
      throw VerificationError("exchanged set unexpectedly in the positroid (removal clause)");
  } else if (L.contains(y) && y != piz && !L.contains(piz)) {
    member = M.contains(L.exchanged(y, piz));
    bool hyp = detail::cyc_pos(z, piz, n) < detail::cyc_pos(z, y, n);
    if (hyp && member)
      throw VerificationError("exchanged set unexpectedly in the positroid (insertion clause)");
  } else {
    throw DomainError("exchange probe does not apply");
  }
  return member;
}

}  // namespace plab
