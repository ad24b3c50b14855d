#pragma once
#include <memory>
#include <string>
#include <vector>

#include "loopalg/homology.hpp"

namespace loopalg {

// Free generating set. For a surface Sigma_{g,r} (r >= 1) the generators are
// a1, b1, ..., ag, bg, g2, ..., gr; gamma_1 is eliminated through the
// relation [a1,b1]...[ag,bg] g1 g2...gr = 1. Generator order matches the
// homology basis order (a_i -> A_i, b_i -> B_i, g_j -> C_j).
struct GenSet {
    std::vector<std::string> names;

    static std::shared_ptr<const GenSet> surface(int genus, int boundary);
    static std::shared_ptr<const GenSet> named(std::vector<std::string> names);

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string &name) const; // -1 if absent
};

using GenSetRef = std::shared_ptr<const GenSet>;

// Freely reduced word in the generators. Symbols are +-(index+1).
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(GenSetRef gens) : gens_(std::move(gens)) {}
    // Reduces the raw symbol sequence; idempotent on reduced input.
    GroupWord(GenSetRef gens, std::vector<int> raw_symbols);

    static GroupWord generator(GenSetRef gens, int index, int sign = +1);

    const GenSetRef &gens() const { return gens_; }
    std::size_t length() const { return syms_.size(); }
    bool is_identity() const { return syms_.empty(); }
    int symbol(std::size_t i) const { return syms_[i]; }
    const std::vector<int> &symbols() const { return syms_; }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord &o) const;
    GroupWord pow(int n) const;

    bool operator==(const GroupWord &o) const { return syms_ == o.syms_; }
    // Length, then lexicographic: a deterministic total order for map keys.
    bool operator<(const GroupWord &o) const;

private:
    GenSetRef gens_;
    std::vector<int> syms_;
};

// u v u^-1 v^-1
GroupWord word_commutator(const GroupWord &u, const GroupWord &v);

// Text syntax: whitespace-separated `a1 b1 a1^-1 g2`, exponents `^<int>`.
GroupWord parse_word(const GenSetRef &gens, const std::string &text);
std::string print_word(const GroupWord &w); // round-trips through parse_word

// Boundary word for the j-th boundary component (1-based). For r = 1 this is
// the boundary loop zeta = [a1,b1]...[ag,bg] run against the surface
// orientation, the direction that makes theta(zeta) = exp(omega) attainable.
// For j >= 2 it is the generator g_j; for j = 1, r >= 2 it is the word
// solving the surface relation.
GroupWord boundary_word(const GenSetRef &gens, int genus, int boundary, int j);

// Image of w under the endomorphism sending generator i to images[i].
GroupWord apply_endomorphism(const std::vector<GroupWord> &images, const GroupWord &w);

// Homology class of w over the given surface basis (generator i -> letter i).
std::vector<Rat> homology_class(const GroupWord &w, const HomologyRef &h);

} // namespace loopalg
