#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fanorm {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group as a dense element-indexed Cayley table. Elements are
/// 0..n-1 and the identity is always index 0. Instances are immutable after
/// construction and safe to share across threads.
class FiniteGroup {
  public:
    // Validates all structural invariants (Latin square, identity, inverses,
    // associativity) and throws ValidationError on the first failure.
    // Associativity is exhaustive up to order 512 and sampled (>= 1e5 seeded
    // triples) above.
    FiniteGroup(std::vector<std::int32_t> cayley, std::string label);

    int order() const { return n_; }
    const std::string& label() const { return label_; }
    bool abelian() const { return abelian_; }

    int mul(int x, int y) const { return cayley_[static_cast<std::size_t>(x) * n_ + y]; }
    int inv(int x) const { return inv_[x]; }
    int identity() const { return 0; }

    /// x^k for k >= 0 by repeated multiplication.
    int power(int x, long k) const;

    /// Smallest m >= 1 with x^m = e.
    int element_order(int x) const;

    /// Sorted multiset of element orders; equal profiles are a cheap
    /// necessary condition for isomorphism.
    std::vector<int> order_profile() const;

    std::span<const std::int32_t> cayley() const { return cayley_; }

    // Construction beyond this order would need multi-GB dense tables.
    static constexpr int kMaxOrder = 8192;

  private:
    int n_;
    std::vector<std::int32_t> cayley_;
    std::vector<std::int32_t> inv_;
    std::string label_;
    bool abelian_;

    void validate() const;
};

/// True if the two handles denote the same group (same object or identical
/// tables). Used to reject cross-group operations on mismatched functions.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// ---------------------------------------------------------------------------
// constructions

/// Z_n with cayley[x][y] = (x + y) mod n.
GroupPtr build_cyclic(int n);

/// Direct product; element index is mixed-radix with the FIRST factor
/// slowest-varying, so the group matrix of a product is the Kronecker
/// product of the factor matrices in natural order.
GroupPtr build_product(const std::vector<GroupPtr>& factors);

/// Dihedral group of order 2n (symmetries of the regular n-gon).
GroupPtr build_dihedral(int n);

/// Symmetric group S_n, elements in lexicographic permutation order.
/// n <= 7: larger orders exceed the dense-table cap.
GroupPtr build_symmetric(int n);

/// Closure of a set of permutations (0-based images of a common finite set)
/// under composition. Throws if the closure exceeds the dense-table cap.
GroupPtr build_from_permutations(const std::vector<std::vector<int>>& generators);

/// Mixed-radix index of a product-group element, first factor slowest.
int product_index(const std::vector<GroupPtr>& factors, const std::vector<int>& coords);

// ---------------------------------------------------------------------------
// subgroups, cosets, quotients

/// A validated subgroup: sorted member list containing the identity, closed
/// under multiplication and inverses, with |members| dividing the parent
/// order.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;
    /// Position of x in the sorted member list; -1 if absent.
    int rank(int x) const;
};

Subgroup make_subgroup(GroupPtr parent, std::vector<int> members);

/// A subgroup reindexed as a standalone FiniteGroup (identity first);
/// to_parent[i] is the parent index of sub-element i.
struct SubgroupGroup {
    GroupPtr group;
    std::vector<int> to_parent;
};

SubgroupGroup subgroup_as_group(const Subgroup& h);

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& generators);

enum class CosetSide { left, right };

struct CosetWitness {
    Subgroup subgroup;
    CosetSide side;
    int representative;  // F = rep*H (left) or H*rep (right)
};

/// Decides whether F is a coset of some subgroup: picks a in F and tests
/// whether a^{-1}F (then Fa^{-1}) is a subgroup. Returns the witness, or
/// nullopt when F is not a coset. Empty F is rejected.
std::optional<CosetWitness> is_coset(GroupPtr g, std::span<const int> elements);

/// All subgroups of G (|G| <= 64): cyclic subgroups, then pairwise joins
/// until fixpoint. Sorted by (size, members).
std::vector<Subgroup> enumerate_subgroups(GroupPtr g);

struct Quotient {
    GroupPtr source;
    Subgroup kernel;
    GroupPtr group;                // the quotient group
    std::vector<int> projection;   // source index -> quotient index
};

/// Quotient by a normal subgroup; throws if N is not normal in G.
Quotient quotient(GroupPtr g, const Subgroup& n);

/// Preimage {x : projection[x] in F} of a subset of the quotient.
std::vector<int> pullback_set(const Quotient& q, std::span<const int> f);

// ---------------------------------------------------------------------------
// homomorphisms

/// A homomorphism between finite groups as a full image table.
struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }

    /// Validates map[x*y] = map[x]*map[y] and map[e] = e.
    static GroupHom checked(GroupPtr domain, GroupPtr codomain, std::vector<int> map);
    /// No validation; for diagnostics and negative tests.
    static GroupHom unchecked(GroupPtr domain, GroupPtr codomain, std::vector<int> map);
};

/// All homomorphisms domain -> codomain, found by assigning generator images
/// and propagating. Intended for small groups (|domain|, |codomain| <= ~24).
std::vector<GroupHom> enumerate_homs(GroupPtr domain, GroupPtr codomain);

// ---------------------------------------------------------------------------
// subset helpers (bitmask form is used by the search module for |G| <= 64)

std::vector<int> mask_to_elements(std::uint64_t mask);
std::uint64_t elements_to_mask(std::span<const int> elements);

}  // namespace fanorm
