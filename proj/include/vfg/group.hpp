#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vfg {

// Finite 2-group given by a dense multiplication table.
//
// Element 0 is always the identity. The table is validated at construction:
// identity row/column, two-sided inverses, associativity (exhaustive up to
// kMaxOrder) and 2-power element orders.
class Group {
public:
    static constexpr int kMaxOrder = 4096;

    Group(std::vector<int> table, std::string label, std::vector<int> generators = {});

    int order() const { return order_; }
    const std::string& label() const { return label_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }

    // Distinguished generators (element indices), e.g. the images of the
    // presentation generators for groups built by coset enumeration.
    const std::vector<int>& generators() const { return generators_; }

    const std::vector<int>& table() const { return table_; }

    void set_label(std::string label) { label_ = std::move(label); }

private:
    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string label_;
    std::vector<int> generators_;
};

// Subgroup of a fixed parent, stored as a sorted member set. Equality is by
// canonical member set, which is what subgroup deduplication relies on.
class Subgroup {
public:
    Subgroup(const Group& parent, std::vector<int> members);

    const Group& parent() const { return *parent_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int element) const;

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && members_ == other.members_;
    }

private:
    const Group* parent_;
    std::vector<int> members_;  // sorted, contains 0
};

int power(const Group& g, int a, int k);
int element_order(const Group& g, int a);
int commutator(const Group& g, int a, int b);   // a^-1 b^-1 a b
int conjugate(const Group& g, int a, int b);    // b^-1 a b

bool is_abelian(const Group& g);
int exponent(const Group& g);
int nilpotency_class(const Group& g);  // trivial -> 0, nontrivial abelian -> 1

Subgroup subgroup_generated(const Group& g, std::span<const int> gens);
Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup center(const Group& g);
Subgroup agemo(const Group& g, int k);  // generated by k-th powers; k a power of 2
Subgroup frattini(const Group& g);      // G' . <squares>  (Burnside basis)

bool is_abelian(const Subgroup& h);
bool is_elementary_abelian(const Subgroup& h);
bool is_central(const Subgroup& h);  // every member commutes with all of parent
int subgroup_exponent(const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Re-tabulates a subgroup as a standalone Group; member order is preserved
// (identity stays at index 0 since members are sorted).
Group subgroup_as_group(const Subgroup& h, std::string label);

Group direct_product(const Group& a, const Group& b);

// All subgroups, deterministic order (size, then lexicographic member set).
// Capped at order 64.
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> maximal_subgroups(const Group& g);

// All distinct <a,b> with (a,b) != 1. Capped at order 64.
std::vector<Subgroup> two_generated_nonabelian_subgroups(const Group& g);

// Invariant fingerprint, then backtracking over images of a small generating
// set. Capped at order 256.
bool is_isomorphic(const Group& a, const Group& b);

struct Fingerprint {
    int order = 0;
    std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
    int center_order = 0;
    int derived_order = 0;
    int frattini_order = 0;
    int exponent = 0;

    bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const Group& g);

inline constexpr int kIsomorphismCap = 256;
inline constexpr int kSubgroupEnumCap = 64;

}  // namespace vfg
