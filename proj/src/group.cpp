#include "vfg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "vfg/errors.hpp"

namespace vfg {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Group::Group(std::vector<int> table, std::string label, std::vector<int> generators)
    : table_(std::move(table)), label_(std::move(label)), generators_(std::move(generators)) {
    std::size_t cells = table_.size();
    int n = 1;
    while (static_cast<std::size_t>(n) * n < cells) ++n;
    if (static_cast<std::size_t>(n) * n != cells)
        throw ValidationError("table size " + std::to_string(cells) + " is not a perfect square");
    order_ = n;

    if (!is_power_of_two(order_))
        throw ValidationError("order " + std::to_string(order_) + " is not a power of 2");
    if (order_ > kMaxOrder)
        throw SizeLimitError("order " + std::to_string(order_) + " exceeds cap " +
                             std::to_string(kMaxOrder));

    for (int v : table_)
        if (v < 0 || v >= order_) throw ValidationError("table entry out of range");

    for (int a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw ValidationError("index 0 is not a two-sided identity at element " +
                                  std::to_string(a));
    }

    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");

    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0)
                    throw ValidationError("one-sided inverse at element " + std::to_string(a));
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0)
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }

    for (int a = 0; a < order_; ++a)
        if (!is_power_of_two(element_order(*this, a)))
            throw ValidationError("element " + std::to_string(a) + " does not have 2-power order");

    for (int g : generators_)
        if (g < 0 || g >= order_) throw ValidationError("generator index out of range");
}

Subgroup::Subgroup(const Group& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_[0] != 0)
        throw ValidationError("subgroup must contain the identity");
    for (int m : members_)
        if (m < 0 || m >= parent.order()) throw ValidationError("subgroup member out of range");
}

bool Subgroup::contains(int element) const {
    return std::binary_search(members_.begin(), members_.end(), element);
}

int power(const Group& g, int a, int k) {
    int r = 0;
    for (int i = 0; i < k; ++i) r = g.mul(r, a);
    return r;
}

int element_order(const Group& g, int a) {
    int k = 1, x = a;
    while (x != 0) {
        x = g.mul(x, a);
        ++k;
        if (k > g.order()) throw ValidationError("element order exceeds group order");
    }
    return k;
}

int commutator(const Group& g, int a, int b) {
    return g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b);
}

int conjugate(const Group& g, int a, int b) { return g.mul(g.mul(g.inv(b), a), b); }

bool is_abelian(const Group& g) {
    for (int a = 1; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

int exponent(const Group& g) {
    int m = 1;
    for (int a = 1; a < g.order(); ++a) m = std::max(m, element_order(g, a));
    return m;
}

Subgroup subgroup_generated(const Group& g, std::span<const int> gens) {
    std::vector<char> mark(g.order(), 0);
    std::vector<int> els;
    auto add = [&](int e) {
        if (!mark[e]) {
            mark[e] = 1;
            els.push_back(e);
        }
    };
    add(0);
    for (int e : gens) add(e);
    // worklist closure: every element added multiplies (both sides) with all
    // members present at its processing time; later members pick up the
    // remaining pairs when they are processed themselves
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = 0; j <= i && j < els.size(); ++j) {
            add(g.mul(els[i], els[j]));
            add(g.mul(els[j], els[i]));
        }
    }
    return Subgroup(g, std::move(els));
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const Group& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup derived_subgroup(const Group& g) {
    std::set<int> comms;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) comms.insert(commutator(g, a, b));
    std::vector<int> gens(comms.begin(), comms.end());
    return subgroup_generated(g, gens);
}

Subgroup center(const Group& g) {
    std::vector<int> members;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b)
            if (g.mul(a, b) != g.mul(b, a)) central = false;
        if (central) members.push_back(a);
    }
    return Subgroup(g, std::move(members));
}

Subgroup agemo(const Group& g, int k) {
    if (k <= 0 || (k & (k - 1)) != 0) throw ValidationError("agemo exponent must be a power of 2");
    std::set<int> powers;
    for (int a = 0; a < g.order(); ++a) powers.insert(power(g, a, k));
    std::vector<int> gens(powers.begin(), powers.end());
    return subgroup_generated(g, gens);
}

Subgroup frattini(const Group& g) {
    std::set<int> gens;
    Subgroup derived = derived_subgroup(g);
    for (int m : derived.members()) gens.insert(m);
    for (int a = 0; a < g.order(); ++a) gens.insert(g.mul(a, a));
    std::vector<int> v(gens.begin(), gens.end());
    return subgroup_generated(g, v);
}

int nilpotency_class(const Group& g) {
    if (g.order() == 1) return 0;
    std::vector<int> gamma = full_subgroup(g).members();
    int c = 0;
    while (gamma.size() > 1) {
        std::set<int> comms;
        for (int a : gamma)
            for (int b = 0; b < g.order(); ++b) comms.insert(commutator(g, a, b));
        std::vector<int> gens(comms.begin(), comms.end());
        gamma = subgroup_generated(g, gens).members();
        ++c;
        if (c > g.order()) throw ValidationError("lower central series does not terminate");
    }
    return c;
}

bool is_abelian(const Subgroup& h) {
    const Group& g = h.parent();
    const auto& m = h.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
    return true;
}

bool is_elementary_abelian(const Subgroup& h) {
    if (!is_abelian(h)) return false;
    for (int m : h.members())
        if (m != 0 && h.parent().mul(m, m) != 0) return false;
    return true;
}

bool is_central(const Subgroup& h) {
    const Group& g = h.parent();
    for (int m : h.members())
        for (int b = 0; b < g.order(); ++b)
            if (g.mul(m, b) != g.mul(b, m)) return false;
    return true;
}

int subgroup_exponent(const Subgroup& h) {
    int m = 1;
    for (int e : h.members())
        if (e != 0) m = std::max(m, element_order(h.parent(), e));
    return m;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return Subgroup(a.parent(), std::move(out));
}

Group subgroup_as_group(const Subgroup& h, std::string label) {
    const Group& g = h.parent();
    const auto& m = h.members();
    std::map<int, int> idx;
    for (std::size_t i = 0; i < m.size(); ++i) idx[m[i]] = static_cast<int>(i);
    std::vector<int> table(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            auto it = idx.find(g.mul(m[i], m[j]));
            if (it == idx.end()) throw ValidationError("member set is not closed");
            table[i * m.size() + j] = it->second;
        }
    return Group(std::move(table), std::move(label));
}

Group direct_product(const Group& a, const Group& b) {
    long combined = static_cast<long>(a.order()) * b.order();
    if (combined > Group::kMaxOrder)
        throw SizeLimitError("direct product order " + std::to_string(combined) + " exceeds cap");
    int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < nb; ++a2)
            for (int b1 = 0; b1 < na; ++b1)
                for (int b2 = 0; b2 < nb; ++b2)
                    table[static_cast<std::size_t>(a1 * nb + a2) * n + (b1 * nb + b2)] =
                        a.mul(a1, b1) * nb + b.mul(a2, b2);
    std::vector<int> gens;
    for (int g : a.generators()) gens.push_back(g * nb);
    for (int g : b.generators()) gens.push_back(g);
    return Group(std::move(table), a.label() + "x" + b.label(), std::move(gens));
}

std::vector<Subgroup> all_subgroups(const Group& g) {
    if (g.order() > kSubgroupEnumCap)
        throw SizeLimitError("subgroup enumeration capped at order " +
                             std::to_string(kSubgroupEnumCap));
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> work;
    seen.insert({0});
    work.push_back({0});
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.front());
        work.pop_front();
        for (int e = 1; e < g.order(); ++e) {
            if (std::binary_search(cur.begin(), cur.end(), e)) continue;
            std::vector<int> gens = cur;
            gens.push_back(e);
            std::vector<int> ext = subgroup_generated(g, gens).members();
            if (seen.insert(ext).second) work.push_back(std::move(ext));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.emplace_back(g, m);
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.members() < y.members();
    });
    return out;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
    std::vector<Subgroup> subs = all_subgroups(g);
    std::vector<Subgroup> out;
    for (const auto& h : subs) {
        if (h.size() == g.order()) continue;
        bool maximal = true;
        for (const auto& k : subs) {
            if (k.size() == g.order() || k.size() <= h.size()) continue;
            if (std::includes(k.members().begin(), k.members().end(), h.members().begin(),
                              h.members().end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(h);
    }
    return out;
}

std::vector<Subgroup> two_generated_nonabelian_subgroups(const Group& g) {
    if (g.order() > kSubgroupEnumCap)
        throw SizeLimitError("2-generated subgroup enumeration capped at order " +
                             std::to_string(kSubgroupEnumCap));
    std::set<std::vector<int>> seen;
    for (int a = 1; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            if (commutator(g, a, b) == 0) continue;
            int gens[2] = {a, b};
            seen.insert(subgroup_generated(g, gens).members());
        }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.emplace_back(g, m);
    return out;
}

Fingerprint fingerprint(const Group& g) {
    Fingerprint fp;
    fp.order = g.order();
    std::map<int, int> hist;
    for (int a = 0; a < g.order(); ++a) ++hist[element_order(g, a)];
    fp.order_histogram.assign(hist.begin(), hist.end());
    fp.center_order = center(g).size();
    fp.derived_order = derived_subgroup(g).size();
    fp.frattini_order = frattini(g).size();
    fp.exponent = exponent(g);
    return fp;
}

namespace {

// Greedy small generating set: add an element whenever it enlarges the
// closure. In a 2-group each addition at least doubles the subgroup.
std::vector<int> small_generating_set(const Group& g) {
    std::vector<int> gens;
    std::vector<int> mem{0};
    for (int a = 1; a < g.order(); ++a) {
        if (std::binary_search(mem.begin(), mem.end(), a)) continue;
        gens.push_back(a);
        mem = subgroup_generated(g, gens).members();
        if (static_cast<int>(mem.size()) == g.order()) break;
    }
    return gens;
}

// Attempts to extend gen -> image to a full isomorphism by BFS over products.
// Conflict-free completion over every (element, generator) pair makes the map
// multiplicative; bijectivity is then a size check on the image.
bool extends_to_isomorphism(const Group& a, const Group& b, const std::vector<int>& gens,
                            const std::vector<int>& images) {
    std::vector<int> phi(a.order(), -1);
    phi[0] = 0;
    std::deque<int> queue{0};
    int assigned = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = a.mul(x, gens[k]);
            int im = b.mul(phi[x], images[k]);
            if (phi[y] < 0) {
                phi[y] = im;
                ++assigned;
                queue.push_back(y);
            } else if (phi[y] != im) {
                return false;
            }
        }
    }
    if (assigned != a.order()) return false;
    std::vector<char> hit(b.order(), 0);
    for (int v : phi) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const Group& a, const Group& b) {
    if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap)
        throw SizeLimitError("isomorphism search capped at order " +
                             std::to_string(kIsomorphismCap));
    if (a.order() != b.order()) return false;
    if (!(fingerprint(a) == fingerprint(b))) return false;

    std::vector<int> gens = small_generating_set(a);
    if (gens.empty()) return true;  // both trivial

    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int ord = element_order(a, gens[k]);
        for (int e = 0; e < b.order(); ++e)
            if (element_order(b, e) == ord) candidates[k].push_back(e);
    }

    std::vector<int> images(gens.size(), -1);
    // iterative backtracking over candidate tuples
    std::vector<std::size_t> pos(gens.size(), 0);
    std::size_t depth = 0;
    while (true) {
        if (pos[depth] == candidates[depth].size()) {
            if (depth == 0) return false;
            pos[depth] = 0;
            --depth;
            ++pos[depth];
            continue;
        }
        images[depth] = candidates[depth][pos[depth]];
        if (depth + 1 < gens.size()) {
            ++depth;
            continue;
        }
        if (extends_to_isomorphism(a, b, gens, images)) return true;
        ++pos[depth];
    }
}

}  // namespace vfg
