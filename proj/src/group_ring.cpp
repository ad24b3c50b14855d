#include "loopalg/group_ring.hpp"

namespace loopalg {

GroupRingElement GroupRingElement::of_word(const GroupWord &w, const Rat &c) {
    GroupRingElement e(w.gens());
    e.add(w, c);
    return e;
}

GroupRingElement GroupRingElement::one(const GenSetRef &gens) {
    return of_word(GroupWord(gens));
}

void GroupRingElement::add(const GroupWord &w, const Rat &c) {
    if (c == 0) return;
    if (!gens_) gens_ = w.gens();
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement &GroupRingElement::operator*=(const Rat &c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto &[w, val] : terms_) val *= c;
    return *this;
}

GroupRingElement ring_mul(const GroupRingElement &u, const GroupRingElement &v) {
    GroupRingElement out(u.gens() ? u.gens() : v.gens());
    for (const auto &[wu, cu] : u.terms())
        for (const auto &[wv, cv] : v.terms())
            out.add(wu * wv, cu * cv);
    return out;
}

Rat aug(const GroupRingElement &u) {
    Rat s(0);
    for (const auto &[w, c] : u.terms()) s += c;
    return s;
}

GroupRingElement fox_delta(const GroupWord &w) {
    GroupRingElement e = GroupRingElement::of_word(w);
    e.add(GroupWord(w.gens()), Rat(-1));
    return e;
}

} // namespace loopalg
