#include "vfg/algebra.hpp"

#include <bit>
#include <stdexcept>

#include "vfg/errors.hpp"

namespace vfg {

namespace {

void require_same_group(const AlgebraElement& x, const AlgebraElement& y) {
    if (&x.group() != &y.group())
        throw std::invalid_argument("algebra elements belong to different groups");
}

}  // namespace

AlgebraElement::AlgebraElement(const Group& g)
    : group_(&g), bits_((static_cast<std::size_t>(g.order()) + 63) / 64, 0) {}

AlgebraElement AlgebraElement::basis(const Group& g, int element) {
    AlgebraElement x(g);
    if (element < 0 || element >= g.order())
        throw std::invalid_argument("basis element out of range");
    x.flip(element);
    return x;
}

AlgebraElement AlgebraElement::from_support(const Group& g, std::initializer_list<int> elements) {
    AlgebraElement x(g);
    for (int e : elements) {
        if (e < 0 || e >= g.order()) throw std::invalid_argument("support element out of range");
        x.flip(e);
    }
    return x;
}

bool AlgebraElement::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

int AlgebraElement::popcount() const {
    int n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

std::vector<int> AlgebraElement::support() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t v = bits_[w];
        while (v) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return out;
}

AlgebraElement& AlgebraElement::operator^=(const AlgebraElement& other) {
    require_same_group(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    return group_ == other.group_ && bits_ == other.bits_;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out = x;
    out ^= y;
    return out;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_group(x, y);
    const Group& g = x.group();
    AlgebraElement out(g);
    std::vector<int> ys = y.support();
    for (int i : x.support())
        for (int j : ys) out.flip(g.mul(i, j));
    return out;
}

int augmentation(const AlgebraElement& x) { return x.popcount() & 1; }

bool is_unit(const AlgebraElement& x) { return augmentation(x) == 1; }

AlgebraElement square(const AlgebraElement& x) {
    const Group& g = x.group();
    AlgebraElement out(g);
    std::vector<int> s = x.support();
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.flip(g.mul(s[i], s[i]));
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            out.flip(g.mul(s[i], s[j]));
            out.flip(g.mul(s[j], s[i]));
        }
    }
    return out;
}

int unit_order(const AlgebraElement& x) {
    if (!is_unit(x)) throw std::domain_error("unit_order requires augmentation 1");
    const AlgebraElement identity = AlgebraElement::one(x.group());
    int order = 1;
    AlgebraElement cur = x;
    int steps = 0;
    while (!(cur == identity)) {
        cur = square(cur);
        order *= 2;
        if (++steps > 2 * x.group().order())
            throw std::domain_error("unit order did not stabilize within the squaring cap");
    }
    return order;
}

int nilpotency_index(const AlgebraElement& z) {
    if (z.is_zero()) return 1;
    AlgebraElement cur = z;
    int k = 1;
    while (!cur.is_zero()) {
        cur = mul(cur, z);
        ++k;
        if (k > z.group().order() + 1)
            throw std::domain_error("element is not nilpotent within the group-order bound");
    }
    return k;
}

AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y) {
    return add(mul(x, y), mul(y, x));
}

CosetDecomposition decompose_over(const AlgebraElement& x, const Subgroup& n) {
    const Group& g = x.group();
    if (&n.parent() != &g) throw std::invalid_argument("subgroup belongs to a different group");
    CosetDecomposition dec;
    std::vector<int> coset_of(g.order(), -1);
    for (int e = 0; e < g.order(); ++e) {
        if (coset_of[e] >= 0) continue;
        int rep = e;  // smallest element of its left coset, by scan order
        int index = static_cast<int>(dec.transversal.size());
        dec.transversal.push_back(rep);
        dec.components.emplace_back(g);
        for (int m : n.members()) coset_of[g.mul(rep, m)] = index;
    }
    for (int e : x.support()) {
        int i = coset_of[e];
        // component u_i holds g_i^-1 * e, supported on N
        dec.components[i].flip(g.mul(g.inv(dec.transversal[i]), e));
    }
    return dec;
}

AlgebraElement brauer_square(const AlgebraElement& x, const Subgroup& central) {
    const Group& g = x.group();
    if (!is_central(central))
        throw std::invalid_argument("brauer_square requires a central subgroup");
    CosetDecomposition dec = decompose_over(x, central);
    AlgebraElement out(g);
    std::size_t m = dec.transversal.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (dec.components[i].is_zero()) continue;
        AlgebraElement gi2 = AlgebraElement::basis(g, g.mul(dec.transversal[i], dec.transversal[i]));
        out ^= mul(gi2, square(dec.components[i]));
        for (std::size_t j = i + 1; j < m; ++j) {
            if (dec.components[j].is_zero()) continue;
            AlgebraElement bracket = lie_bracket(AlgebraElement::basis(g, dec.transversal[i]),
                                                 AlgebraElement::basis(g, dec.transversal[j]));
            out ^= mul(bracket, mul(dec.components[i], dec.components[j]));
        }
    }
    return out;
}

}  // namespace vfg
