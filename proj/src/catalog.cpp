#include "vfg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "vfg/errors.hpp"

namespace vfg {

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word pow(const Word& w, int k) {
    Word out;
    for (int i = 0; i < k; ++i) out = out * w;
    return out;
}

Word comm(const Word& a, const Word& b) { return inverse(a) * inverse(b) * a * b; }

Word gen(int k) { return Word{{k}}; }

namespace {

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT with coincidence processing), trivial subgroup.
// Column encoding: generator i -> 2i, its inverse -> 2i+1; col^1 inverts.
class CosetEnumerator {
public:
    CosetEnumerator(const Presentation& p, int cap) : ngens_(p.num_generators), cap_(cap) {
        cols_ = 2 * ngens_;
        for (const Word& w : p.relators) {
            std::vector<int> cw;
            for (int l : w.letters) {
                if (l == 0 || std::abs(l) > ngens_)
                    throw ValidationError("relator letter out of range");
                cw.push_back(l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1);
            }
            if (!cw.empty()) relators_.push_back(std::move(cw));
        }
        define_coset();
        run();
    }

    // Live coset count after enumeration.
    int live_count() const {
        int n = 0;
        for (int c = 0; c < static_cast<int>(tab_.size()); ++c)
            if (p_[c] == c) ++n;
        return n;
    }

    // Action of column col on live coset c (result is live).
    int act(int c, int col) const { return tab_[c][col]; }

    int cols() const { return cols_; }

private:
    int define_coset() {
        if (static_cast<int>(tab_.size()) >= cap_)
            throw EnumerationCapError("coset enumeration exceeded cap " + std::to_string(cap_));
        tab_.emplace_back(cols_, -1);
        p_.push_back(static_cast<int>(p_.size()));
        return static_cast<int>(tab_.size()) - 1;
    }

    int rep(int k) {
        int l = k;
        while (p_[l] != l) l = p_[l];
        while (p_[k] != l) {
            int t = p_[k];
            p_[k] = l;
            k = t;
        }
        return l;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        dead_.push_back(b);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!dead_.empty()) {
            int e = dead_.front();
            dead_.pop_front();
            for (int c = 0; c < cols_; ++c) {
                int f = tab_[e][c];
                if (f < 0) continue;
                if (tab_[f][c ^ 1] == e) tab_[f][c ^ 1] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (tab_[e1][c] >= 0) {
                    merge(f1, tab_[e1][c]);
                } else if (tab_[f1][c ^ 1] >= 0) {
                    merge(e1, tab_[f1][c ^ 1]);
                } else {
                    tab_[e1][c] = f1;
                    tab_[f1][c ^ 1] = e1;
                }
            }
        }
    }

    void scan_and_fill(int a, const std::vector<int>& w) {
        int i = 0, j = static_cast<int>(w.size()) - 1;
        int f = a, b = a;
        for (;;) {
            while (i <= j && tab_[f][w[i]] >= 0) f = tab_[f][w[i++]];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && tab_[b][w[j] ^ 1] >= 0) b = tab_[b][w[j--] ^ 1];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                tab_[f][w[i]] = b;
                tab_[b][w[i] ^ 1] = f;
                return;
            }
            int n = define_coset();
            tab_[f][w[i]] = n;
            tab_[n][w[i] ^ 1] = f;
            f = n;
            ++i;
        }
    }

    void run() {
        for (int c = 0; c < static_cast<int>(tab_.size()); ++c) {
            if (rep(c) != c) continue;
            for (const auto& w : relators_) {
                scan_and_fill(c, w);
                if (rep(c) != c) break;
            }
            if (rep(c) != c) continue;
            for (int col = 0; col < cols_; ++col) {
                if (tab_[c][col] < 0) {
                    int n = define_coset();
                    tab_[c][col] = n;
                    tab_[n][col ^ 1] = c;
                }
            }
        }
    }

    int ngens_;
    int cap_;
    int cols_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> p_;
    std::deque<int> dead_;
};

}  // namespace

Group from_presentation(const Presentation& p, int coset_cap, std::string label) {
    if (coset_cap < 1) throw ValidationError("coset cap must be >= 1");
    if (p.num_generators < 0) throw ValidationError("negative generator count");
    if (p.num_generators == 0) return Group({0}, std::move(label));

    CosetEnumerator enumerator(p, coset_cap);

    // BFS renumbering over live cosets; discovery column order g1, g1^-1, g2, ...
    std::map<int, int> number;  // live coset id -> element index
    std::vector<int> order_of_discovery;
    number[0] = 0;
    order_of_discovery.push_back(0);
    std::vector<std::vector<int>> words;  // element index -> defining column word
    words.push_back({});
    for (std::size_t head = 0; head < order_of_discovery.size(); ++head) {
        int c = order_of_discovery[head];
        for (int col = 0; col < enumerator.cols(); ++col) {
            int d = enumerator.act(c, col);
            if (d < 0) throw ValidationError("incomplete coset table after enumeration");
            if (!number.count(d)) {
                number[d] = static_cast<int>(order_of_discovery.size());
                order_of_discovery.push_back(d);
                std::vector<int> w = words[head];
                w.push_back(col);
                words.push_back(std::move(w));
            }
        }
    }

    int n = static_cast<int>(order_of_discovery.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        int coset_a = order_of_discovery[a];
        for (int b = 0; b < n; ++b) {
            int c = coset_a;
            for (int col : words[b]) c = enumerator.act(c, col);
            table[static_cast<std::size_t>(a) * n + b] = number.at(c);
        }
    }

    std::vector<int> gens;
    for (int i = 0; i < p.num_generators; ++i) gens.push_back(number.at(enumerator.act(0, 2 * i)));

    return Group(std::move(table), std::move(label), std::move(gens));
}

Group cyclic_group(int n, std::string label) {
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    std::vector<int> gens;
    if (n > 1) gens.push_back(1);
    return Group(std::move(table), std::move(label), std::move(gens));
}

namespace {

const Word g1 = gen(1), g2 = gen(2), g3 = gen(3);

Presentation d8_presentation() { return {2, {pow(g1, 4), pow(g2, 2), pow(g1 * g2, 2)}}; }

Presentation q8_presentation() {
    return {2, {pow(g1, 4), pow(g1, 2) * inverse(pow(g2, 2)), inverse(g2) * g1 * g2 * g1}};
}

Presentation g16_3_presentation() {
    return {2,
            {pow(g1, 4), pow(g2, 2), comm(pow(g1, 2), g2),
             pow(g1 * g2, 3) * inverse(g2 * pow(g1, 3))}};
}

Presentation g16_4_presentation() {
    return {2, {pow(g1, 4), pow(g2, 4), inverse(g2) * g1 * g2 * inverse(pow(g1, 3))}};
}

// A literal relation (gh)^2 = 1 here would collapse the group to order 16
// (it forces hg = g^-1 h^-1, so every word normalizes to g^a h^b). The
// squared commutator (g,h)^2 = 1 yields the order-32 group that the Case 2
// presentation is isomorphic to, matching the subscript.
Presentation g32_2_presentation() {
    return {2,
            {pow(g1, 4), pow(g2, 4), pow(comm(g1, g2), 2), comm(pow(g1, 2), g2),
             comm(g1, pow(g2, 2))}};
}

// Defined by the Case 7.4 presentation: g^4 = h^4 = (g^3 h)^2 = 1,
// g h g^2 = h g h^2. This is the order-32 group of class 3 that the
// Case 7.4 witness argument requires.
Presentation g32_6_presentation() {
    return {2,
            {pow(g1, 4), pow(g2, 4), pow(pow(g1, 3) * g2, 2),
             (g1 * g2 * pow(g1, 2)) * inverse(g2 * g1 * pow(g2, 2))}};
}

// <a,b,c> with a^2 = b^2 = c^2 = 1 and all commutators central: order 64,
// G' elementary abelian of order 8. Test bed for the |G'| >= 8 witness search.
Presentation e64_presentation() {
    Presentation p;
    p.num_generators = 3;
    p.relators = {pow(g1, 2), pow(g2, 2), pow(g3, 2)};
    const Word gens[3] = {g1, g2, g3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k) p.relators.push_back(comm(comm(gens[i], gens[j]), gens[k]));
    return p;
}

struct Atom {
    Presentation (*presentation)();
    int cyclic_order;  // nonzero -> cyclic, presentation unused
    int expected_order;
    const char* structure;
};

const std::map<std::string, Atom>& atoms() {
    static const std::map<std::string, Atom> m = {
        {"C2", {nullptr, 2, 2, "C2"}},
        {"C4", {nullptr, 4, 4, "C4"}},
        {"C8", {nullptr, 8, 8, "C8"}},
        {"D8", {&d8_presentation, 0, 8, "D8"}},
        {"Q8", {&q8_presentation, 0, 8, "Q8"}},
        {"G16_3", {&g16_3_presentation, 0, 16, "(C4xC2):C2"}},
        {"G16_4", {&g16_4_presentation, 0, 16, "C4:C4"}},
        {"G32_2", {&g32_2_presentation, 0, 32, "(C4xC2):C4"}},
        {"G32_6", {&g32_6_presentation, 0, 32, "((C4xC2):C2):C2"}},
        {"E64", {&e64_presentation, 0, 64, "central elementary abelian G' of order 8"}},
    };
    return m;
}

Group build_atom(const std::string& name) {
    const Atom& a = atoms().at(name);
    if (a.cyclic_order) return cyclic_group(a.cyclic_order, name);
    Group g = from_presentation(a.presentation(), kDefaultCosetCap, name);
    if (g.order() != a.expected_order)
        throw ValidationError("builtin " + name + " enumerated to order " +
                              std::to_string(g.order()) + ", expected " +
                              std::to_string(a.expected_order));
    return g;
}

}  // namespace

CatalogEntry builtin(const std::string& name) {
    // split on 'x' into atoms; "C2xC2" parses as C2 x C2
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    for (const auto& part : parts)
        if (!atoms().count(part)) throw ValidationError("unknown builtin group '" + name + "'");

    Group g = build_atom(parts[0]);
    int expected = atoms().at(parts[0]).expected_order;
    std::string structure = atoms().at(parts[0]).structure;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        g = direct_product(g, build_atom(parts[i]));
        expected *= atoms().at(parts[i]).expected_order;
        structure += " x ";
        structure += atoms().at(parts[i]).structure;
    }
    if (g.order() != expected)
        throw ValidationError("builtin " + name + " has order " + std::to_string(g.order()) +
                              ", expected " + std::to_string(expected));
    g.set_label(name);
    return CatalogEntry{name, "builtin", std::move(g), expected, structure};
}

std::vector<CatalogEntry> default_catalog() {
    static const char* names[] = {
        "C2",    "C4",    "C2xC2", "C8",    "C4xC2", "C2xC2xC2", "D8",    "Q8",    "C4xC4",
        "G16_3", "G16_4", "D8xC2", "Q8xC2", "G32_2", "G32_6",    "D8xC4", "D8xD8", "E64",
    };
    std::vector<CatalogEntry> out;
    for (const char* n : names) out.push_back(builtin(n));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.name < b.name;
    });
    return out;
}

Presentation case_presentation(const std::string& name) {
    if (name == "CaseA") {
        // conclusion of Case A: g^4 = h^2 = 1, (g^2,h) = 1, (gh)^4 = 1
        return {2, {pow(g1, 4), pow(g2, 2), comm(pow(g1, 2), g2), pow(g1 * g2, 4)}};
    }
    if (name == "CaseB") {
        // g^4 = h^4 = (gh)^2 = 1, (g^2,h) = 1
        return {2, {pow(g1, 4), pow(g2, 4), pow(g1 * g2, 2), comm(pow(g1, 2), g2)}};
    }
    if (name == "Case2") {
        // g^4 = h^4 = (g,h^2) = (g^2,h) = 1, (gh)^2 = (hg)^2
        return {2,
                {pow(g1, 4), pow(g2, 4), comm(g1, pow(g2, 2)), comm(pow(g1, 2), g2),
                 pow(g1 * g2, 2) * inverse(pow(g2 * g1, 2))}};
    }
    if (name == "Case4") {
        // g^4 = h^4 = 1, g^2 = h^2, (gh)^2 = (hg)^2
        return {2,
                {pow(g1, 4), pow(g2, 4), pow(g1, 2) * inverse(pow(g2, 2)),
                 pow(g1 * g2, 2) * inverse(pow(g2 * g1, 2))}};
    }
    if (name == "Case7_4") {
        return {2,
                {pow(g1, 4), pow(g2, 4), pow(pow(g1, 3) * g2, 2),
                 (g1 * g2 * pow(g1, 2)) * inverse(g2 * g1 * pow(g2, 2))}};
    }
    throw ValidationError("unknown proof-case presentation '" + name + "'");
}

// ---------------------------------------------------------------------------
// File formats

CatalogEntry read_cayley_table(std::istream& in, const std::string& name) {
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(1, "empty file");
    std::istringstream head(line);
    std::string kw;
    int n = 0;
    if (!(head >> kw >> n) || kw != "order" || n < 1)
        throw ParseError(line_no, "expected 'order N'");

    std::string label = name;
    if (!next_line()) throw ParseError(line_no + 1, "missing table rows");
    if (line.rfind("label ", 0) == 0) {
        label = line.substr(6);
        if (!next_line()) throw ParseError(line_no + 1, "missing table rows");
    }

    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
        if (row > 0 && !next_line()) throw ParseError(line_no + 1, "missing table row");
        std::istringstream rs(line);
        for (int col = 0; col < n; ++col) {
            int v;
            if (!(rs >> v)) throw ParseError(line_no, "short table row");
            if (v < 0 || v >= n)
                throw ParseError(line_no, "entry " + std::to_string(v) + " out of range");
            table.push_back(v);
        }
        int extra;
        if (rs >> extra) throw ParseError(line_no, "extra entries in table row");
    }

    // Group construction performs the axiom and 2-power-order validation.
    Group g(std::move(table), label);
    return CatalogEntry{label, "file", std::move(g), n, std::nullopt};
}

CatalogEntry load_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_cayley_table(in, path);
}

void write_cayley_table(const CatalogEntry& entry, std::ostream& out) {
    const Group& g = entry.group;
    out << "order " << g.order() << "\n";
    if (!entry.name.empty()) out << "label " << entry.name << "\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
}

void save_cayley_table(const CatalogEntry& entry, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open '" + path + "' for writing");
    write_cayley_table(entry, out);
}

Word parse_word(const std::string& text, int num_generators, int line_no) {
    Word out;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(line_no, msg); };

    // parses one atom (letter or bracketed commutator) plus optional ^n,
    // appending to out
    std::function<void(Word&)> parse_atom = [&](Word& acc) {
        Word unit;
        char c = text[i];
        if (c == '[') {
            ++i;
            std::size_t depth = 1, start = i;
            std::size_t comma = std::string::npos;
            while (i < text.size() && depth > 0) {
                if (text[i] == '[') ++depth;
                if (text[i] == ']') --depth;
                if (text[i] == ',' && depth == 1 && comma == std::string::npos) comma = i;
                ++i;
            }
            if (depth != 0) fail("unbalanced '['");
            if (comma == std::string::npos) fail("expected ',' inside '[...]'");
            Word lhs = parse_word(text.substr(start, comma - start), num_generators, line_no);
            Word rhs = parse_word(text.substr(comma + 1, i - 1 - (comma + 1)), num_generators,
                                  line_no);
            unit = comm(lhs, rhs);
        } else if (c == 'g' || c == 'G') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) fail("expected generator number after 'g'/'G'");
            int k = std::stoi(text.substr(start, i - start));
            if (k < 1 || k > num_generators) fail("generator g" + std::to_string(k) + " out of range");
            unit = Word{{c == 'g' ? k : -k}};
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) fail("expected positive integer after '^'");
            int e = std::stoi(text.substr(start, i - start));
            if (e < 1) fail("power must be positive");
            unit = pow(unit, e);
        }
        acc = acc * unit;
    };

    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        parse_atom(out);
    }
    return out;
}

Presentation read_presentation(std::istream& in) {
    std::string line;
    int line_no = 0;
    Presentation p;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (!have_header) {
            std::istringstream head(trimmed);
            std::string kw;
            if (!(head >> kw >> p.num_generators) || kw != "gens" || p.num_generators < 1)
                throw ParseError(line_no, "expected 'gens k'");
            have_header = true;
            continue;
        }
        p.relators.push_back(parse_word(trimmed, p.num_generators, line_no));
    }
    if (!have_header) throw ParseError(line_no ? line_no : 1, "missing 'gens k' header");
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_presentation(in);
}

}  // namespace vfg
