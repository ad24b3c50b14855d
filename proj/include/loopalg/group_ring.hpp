#pragma once
#include <map>

#include "loopalg/word.hpp"

namespace loopalg {

// Finite rational combination of group words; zero coefficients are dropped.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(GenSetRef gens) : gens_(std::move(gens)) {}
    static GroupRingElement of_word(const GroupWord &w, const Rat &c = Rat(1));
    static GroupRingElement one(const GenSetRef &gens);

    const GenSetRef &gens() const { return gens_; }
    const std::map<GroupWord, Rat> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const GroupWord &w, const Rat &c);
    GroupRingElement &operator+=(const GroupRingElement &o);
    GroupRingElement &operator-=(const GroupRingElement &o);
    GroupRingElement &operator*=(const Rat &c);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
    bool operator==(const GroupRingElement &o) const { return terms_ == o.terms_; }

private:
    GenSetRef gens_;
    std::map<GroupWord, Rat> terms_;
};

// Convolution product with free reduction.
GroupRingElement ring_mul(const GroupRingElement &u, const GroupRingElement &v);

// Augmentation: sum of coefficients; a ring map.
Rat aug(const GroupRingElement &u);

// (w - 1), the basic augmentation-ideal element.
GroupRingElement fox_delta(const GroupWord &w);

} // namespace loopalg
