#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nsct {

/// Index of a group element. The identity is always 0.
using Element = std::uint32_t;

/// Membership mask over element indices 0..n-1.
using Mask = boost::dynamic_bitset<>;

/// Caps applied while building groups and lattices.
struct Limits {
    std::size_t max_order;
    std::size_t max_lattice = 10000;
    /// Seed for the sampled associativity check on large Cayley tables.
    std::uint64_t seed = 0x5eed;

    /// Default caps; `NSCT_MAX_ORDER` in the environment overrides max_order.
    static Limits defaults();
};

/// Bookkeeping for groups built by build_unitriangular.
struct UnitriangularInfo {
    int dim = 0;
    int prime = 0;
    /// Strictly-upper positions (i, j), 1-based, in row-major order. Entry k of
    /// an element's coordinate vector is the matrix entry at positions[k].
    std::vector<std::pair<int, int>> positions;
    /// coords[g] is the strictly-upper entry vector of element g.
    std::vector<std::vector<int>> coords;
};

/// A finite group stored as a dense multiplication table.
class Group {
public:
    /// Validates the table. `table` must already have its identity at index 0.
    Group(std::size_t order, std::vector<Element> table,
          std::vector<std::string> labels = {}, std::uint64_t seed = Limits{}.seed);

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return 0; }

    Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
    Element inv(Element a) const noexcept { return inverse_[a]; }
    /// g·h·g⁻¹
    Element conj(Element g, Element h) const noexcept { return mul(mul(g, h), inv(g)); }
    Element power(Element g, long long k) const;

    std::size_t element_order(Element g) const noexcept { return element_order_[g]; }
    std::size_t exponent() const noexcept { return exponent_; }

    /// A small generating set, chosen greedily in index order.
    const std::vector<Element>& generators() const noexcept { return generators_; }

    std::string label(Element g) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// source_index()[g] is the index g had in the caller's input before the
    /// identity was moved to 0. The identity permutation when nothing moved.
    const std::vector<Element>& source_index() const noexcept { return source_index_; }

    const std::optional<UnitriangularInfo>& unitriangular() const noexcept { return ut_; }

    Mask empty_mask() const { return Mask(order_); }

private:
    friend Group build_from_cayley(const std::vector<std::vector<Element>>&, const Limits&);
    friend Group build_unitriangular(int, int, const Limits&);

    void finish();

    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::vector<std::size_t> element_order_;
    std::size_t exponent_ = 1;
    std::vector<Element> generators_;
    std::vector<std::string> labels_;
    std::vector<Element> source_index_;
    std::optional<UnitriangularInfo> ut_;
};

/// A normal subgroup, held as a membership mask. Instances produced by this
/// library are always validated; `trusted` is for callers that already know.
class NormalSubgroup {
public:
    NormalSubgroup() = default;

    /// Throws NotASubgroup or NotNormal, with a witness, if `mask` fails.
    static NormalSubgroup checked(const Group& g, Mask mask);
    static NormalSubgroup trusted(Mask mask);
    static NormalSubgroup trivial(const Group& g);
    static NormalSubgroup whole(const Group& g);

    const Mask& mask() const noexcept { return mask_; }
    std::size_t order() const noexcept { return order_; }
    bool contains(Element g) const { return mask_.test(g); }
    bool is_subset_of(const NormalSubgroup& other) const { return mask_.is_subset_of(other.mask_); }
    std::vector<Element> members() const;

    friend bool operator==(const NormalSubgroup& a, const NormalSubgroup& b) { return a.mask_ == b.mask_; }
    /// Canonical order: by order, then lexicographically by sorted member list.
    friend std::strong_ordering operator<=>(const NormalSubgroup& a, const NormalSubgroup& b);

private:
    explicit NormalSubgroup(Mask mask) : mask_(std::move(mask)), order_(mask_.count()) {}

    Mask mask_;
    std::size_t order_ = 0;
};

/// Conjugacy classes, ids sorted by (size ascending, minimal member).
struct ClassPartition {
    std::vector<std::size_t> class_of;
    std::vector<Element> reps;  ///< minimal member of each class
    std::vector<std::size_t> sizes;
    std::vector<std::vector<Element>> members;

    std::size_t count() const noexcept { return reps.size(); }
};

/// Result of subgroup validation: empty when valid, else a human-readable witness.
std::optional<std::string> subgroup_violation(const Group& g, const Mask& mask);
std::optional<std::string> normality_violation(const Group& g, const Mask& mask);

Group build_from_cayley(const std::vector<std::vector<Element>>& table,
                        const Limits& limits = Limits::defaults());

/// Permutation product is composition: (a·b)(i) = a(b(i)). Element 0 is the
/// identity; the rest appear in breadth-first discovery order.
Group build_from_permutations(std::size_t degree,
                              const std::vector<std::vector<std::size_t>>& generators,
                              const Limits& limits = Limits::defaults());

Group build_unitriangular(int dim, int prime, const Limits& limits = Limits::defaults());

/// Matrices whose strictly-upper entries vanish outside `positions` (1-based).
NormalSubgroup pattern_subgroup(const Group& g, const std::vector<std::pair<int, int>>& positions);

ClassPartition conjugacy_classes(const Group& g);

/// Smallest normal subgroup containing `seed`.
NormalSubgroup normal_closure(const Group& g, const std::vector<Element>& seed);
NormalSubgroup normal_closure(const Group& g, const ClassPartition& classes,
                              const std::vector<Element>& seed);

NormalSubgroup subgroup_product(const Group& g, const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup subgroup_intersection(const Group& g, const NormalSubgroup& a, const NormalSubgroup& b);

/// Every normal subgroup exactly once, in canonical order.
std::vector<NormalSubgroup> all_normal_subgroups(const Group& g,
                                                 const Limits& limits = Limits::defaults());

bool is_prime(long long p);

}  // namespace nsct
