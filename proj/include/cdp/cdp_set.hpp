#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cdp/perm.hpp"

namespace cdp {

/// A maximal set of n pairwise completely different permutations in S(n),
/// equivalently the rows of a Latin square of order n.  Structure flags
/// (abelian, group, contains identity) are computed once at construction.
///
/// Canonical enumeration orders the set so that perms[i](0) = i; every
/// maximal set admits exactly one such ordering because the images of 0 are
/// pairwise distinct.
class CdpSet {
public:
    /// Validate pairwise complete difference and maximality.
    /// Throws not-cdp (with the clashing triple) or not-maximal.
    static CdpSet verify(std::vector<Permutation> perms);

    /// The cyclic group C(n) = {c^k}, c(t) = t+1 mod n, in canonical order.
    static CdpSet cyclic(int n);

    /// Regular representation of a finite group given by its multiplication
    /// table (table[i][j] = index of g_i * g_j).  Group axioms are verified;
    /// throws not-a-group otherwise.  Row i becomes the permutation
    /// k -> table[i][k]; the result is always a group CDP set.
    static CdpSet regular_representation(const std::vector<std::vector<int>>& table);

    int n() const noexcept { return static_cast<int>(perms_.size()); }
    const Permutation& operator[](int i) const { return perms_.at(i); }
    const std::vector<Permutation>& perms() const noexcept { return perms_; }

    bool is_abelian() const noexcept { return abelian_; }
    bool is_group() const noexcept { return group_; }
    bool contains_identity() const noexcept { return has_identity_; }

    bool is_canonical() const;
    CdpSet canonicalized() const;

    /// Order-insensitive equality of the underlying permutation sets.
    bool same_set(const CdpSet& other) const;

    /// Conjugated set E with E_j(perms[k](j)) = k; E_0 = identity.
    /// Requires canonical order.
    CdpSet conjugated() const;

    /// The permutation xi with perms[i](xi(i)) = 0, i.e. xi(i) indexes the
    /// inverse of perms[i] within the set.  Requires canonical order and
    /// identity as perms[0]; throws xi-undefined when the defining relation
    /// perms[i](j) = 0 = perms[j](i) is not symmetric (possible for
    /// non-group sets).
    Permutation xi() const;

    /// {left ∘ perms[i] ∘ right}; the result is re-verified.
    CdpSet transformed(const Permutation& left, const Permutation& right) const;

    /// Elementwise inverses {perms[i]^{-1}}.
    CdpSet inverse_set() const;

    /// For sets whose conjugated set is abelian: returns (S', s1) where s1 is
    /// the unique element fixing 0 and S' = {perms[i] ∘ s1^{-1}} is an abelian
    /// group CDP set with the same conjugated set.  Throws not-abelianizable.
    std::pair<CdpSet, Permutation> abelianized() const;

private:
    CdpSet(std::vector<Permutation> perms, bool checked);
    void compute_flags();

    std::vector<Permutation> perms_;
    bool abelian_ = false;
    bool group_ = false;
    bool has_identity_ = false;

    friend void enumerate_cdp_sets(int, bool, const std::function<void(const CdpSet&)>&, int);
};

/// Stream every maximal CDP set of degree n exactly once, in a deterministic
/// order.  Each set is emitted in canonical row order when canonical_rows is
/// set and in lexicographic row order otherwise (the underlying collection of
/// sets is the same).  Throws enumeration-bound when n exceeds the guard.
void enumerate_cdp_sets(int n, bool canonical_rows,
                        const std::function<void(const CdpSet&)>& yield, int bound = 6);

std::vector<CdpSet> enumerate_all(int n, bool canonical_rows, int bound = 6);

}  // namespace cdp
