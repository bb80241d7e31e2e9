#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vfg/group.hpp"

namespace vfg {

// Word over presentation generators: letters are signed 1-based generator
// indices (+k = generator k, -k = its inverse).
struct Word {
    std::vector<int> letters;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word pow(const Word& w, int k);
Word comm(const Word& a, const Word& b);  // a^-1 b^-1 a b
Word gen(int k);                          // single-letter word

struct Presentation {
    int num_generators = 0;
    std::vector<Word> relators;
};

inline constexpr int kDefaultCosetCap = 65536;

// HLT-style Todd-Coxeter coset enumeration over the trivial subgroup.
// Element numbering is breadth-first coset discovery order, identity first,
// so two runs on the same presentation produce identical tables.
Group from_presentation(const Presentation& p, int coset_cap = kDefaultCosetCap,
                        std::string label = "presented");

struct CatalogEntry {
    std::string name;
    std::string source;  // "builtin" | "file"
    Group group;
    std::optional<int> expected_order;
    std::optional<std::string> expected_structure;
};

// Built-in groups: C2, C4, C8, C2xC2, C4xC2, C4xC4, D8, Q8, G16_3, G16_4,
// G32_2, G32_6, E64, and direct-product expressions over these atoms joined
// with 'x' (e.g. "D8xC2").
CatalogEntry builtin(const std::string& name);

// The default verification catalog, sorted by (order, name).
std::vector<CatalogEntry> default_catalog();

// Presentations attached to the individual proof cases (A, B, 2, 4, 7.4),
// keyed by case label. Used by the proof-case witness checks.
Presentation case_presentation(const std::string& name);

// Cayley-table text format: "order N", optional "label <string>", then N rows
// of N 0-based indices (row a, column b = a*b, identity = 0).
CatalogEntry load_cayley_table(const std::string& path);
CatalogEntry read_cayley_table(std::istream& in, const std::string& name);
void save_cayley_table(const CatalogEntry& entry, const std::string& path);
void write_cayley_table(const CatalogEntry& entry, std::ostream& out);

// Presentation text format: "gens k", then one relator per line as a word over
// g1..gk / G1..Gk with ^n for positive powers and [x,y] commutator sugar.
Presentation read_presentation(std::istream& in);
Presentation load_presentation(const std::string& path);
Word parse_word(const std::string& text, int num_generators, int line_no = 0);

Group cyclic_group(int n, std::string label);

}  // namespace vfg
