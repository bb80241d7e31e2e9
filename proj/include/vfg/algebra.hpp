#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "vfg/group.hpp"

namespace vfg {

// Element of the group algebra FG over the two-element field: one coefficient
// bit per group element. Addition is XOR; the identity of FG is basis(G, 0).
class AlgebraElement {
public:
    explicit AlgebraElement(const Group& g);
    static AlgebraElement zero(const Group& g) { return AlgebraElement(g); }
    static AlgebraElement one(const Group& g) { return basis(g, 0); }
    static AlgebraElement basis(const Group& g, int element);
    static AlgebraElement from_support(const Group& g, std::initializer_list<int> elements);

    const Group& group() const { return *group_; }

    bool get(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void flip(int i) { bits_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void set(int i, bool v) {
        if (get(i) != v) flip(i);
    }

    bool is_zero() const;
    int popcount() const;
    std::vector<int> support() const;

    AlgebraElement& operator^=(const AlgebraElement& other);
    bool operator==(const AlgebraElement& other) const;

private:
    const Group* group_;
    std::vector<std::uint64_t> bits_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
// Convolution over the Cayley table.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    return add(x, y);
}
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y);
}

// Coefficient sum in F2, i.e. support parity.
int augmentation(const AlgebraElement& x);

// FG is local for a finite 2-group over F2: x is a unit iff augmentation 1.
bool is_unit(const AlgebraElement& x);

// Equals mul(x,x) but computed from the symmetric pair expansion
// x^2 = sum_i g_i^2 + sum_{i<j} (g_i g_j + g_j g_i).
AlgebraElement square(const AlgebraElement& x);

// Smallest 2-power k with x^k = 1, by repeated squaring.
int unit_order(const AlgebraElement& x);

// Smallest k with z^k = 0 (1 for z = 0). Throws if z is not nilpotent within
// the group-order bound, which signals augmentation != 0.
int nilpotency_index(const AlgebraElement& z);

// xy + yx.
AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y);

// Squaring through a coset decomposition over a central subgroup N:
//   x^2 = sum_i g_i^2 u_i^2 + sum_{i<j} [g_i,g_j] u_i u_j
// with [a,b] = ab + ba. Must agree with square(x).
AlgebraElement brauer_square(const AlgebraElement& x, const Subgroup& central);

struct CosetDecomposition {
    std::vector<int> transversal;            // g_1 = identity first
    std::vector<AlgebraElement> components;  // supported on the subgroup
};
// Deterministic transversal (smallest element index per coset, ascending).
CosetDecomposition decompose_over(const AlgebraElement& x, const Subgroup& n);

}  // namespace vfg
