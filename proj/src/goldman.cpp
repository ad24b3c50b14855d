#include "loopalg/goldman.hpp"
#include "loopalg/linalg.hpp"

#include <algorithm>

namespace loopalg {

namespace {

std::size_t ipow(int base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

constexpr int kExpSeriesCap = 512;

} // namespace

FreeLoop::FreeLoop(const GroupWord &w) {
    std::vector<int> syms = w.symbols();
    // cyclic reduction
    while (syms.size() >= 2 && syms.front() == -syms.back()) {
        syms.erase(syms.begin());
        syms.pop_back();
    }
    // canonical rotation: lexicographically least
    std::vector<int> best = syms;
    for (std::size_t r = 1; r < syms.size(); ++r) {
        std::vector<int> rot(syms.begin() + r, syms.end());
        rot.insert(rot.end(), syms.begin(), syms.begin() + r);
        if (rot < best) best = rot;
    }
    rep_ = GroupWord(w.gens(), std::move(best));
}

GoldmanElement GoldmanElement::of_loop(const FreeLoop &l, const Rat &c) {
    GoldmanElement e(l.representative().gens());
    e.add(l, c);
    return e;
}

GoldmanElement GoldmanElement::of_ring(const GroupRingElement &u) {
    GoldmanElement e(u.gens());
    for (const auto &[w, c] : u.terms()) e.add(FreeLoop(w), c);
    return e;
}

void GoldmanElement::add(const FreeLoop &l, const Rat &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GoldmanElement &GoldmanElement::operator+=(const GoldmanElement &o) {
    for (const auto &[l, c] : o.terms_) add(l, c);
    return *this;
}

GoldmanElement &GoldmanElement::operator-=(const GoldmanElement &o) {
    for (const auto &[l, c] : o.terms_) add(l, -c);
    return *this;
}

GoldmanElement &GoldmanElement::operator*=(const Rat &c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto &[l, val] : terms_) val *= c;
    return *this;
}

TruncatedTensor lambda_theta(const FreeLoop &l, const Expansion &theta) {
    return cyclicize(theta.evaluate(l.representative()));
}

TruncatedTensor lambda_theta(const GoldmanElement &u, const Expansion &theta) {
    TruncatedTensor acc(theta.homology(), theta.trunc());
    for (const auto &[l, c] : u.terms()) {
        TruncatedTensor t = lambda_theta(l, theta);
        t *= c;
        acc += t;
    }
    return acc;
}

TruncatedTensor lambda_theta_at_depth(const FreeLoop &l, const Expansion &theta) {
    return cyclicize(theta.evaluate_at_depth(l.representative()));
}

TruncatedTensor lambda_theta_at_depth(const GoldmanElement &u, const Expansion &theta) {
    TruncatedTensor acc(theta.homology(), theta.depth());
    for (const auto &[l, c] : u.terms()) {
        TruncatedTensor t = lambda_theta_at_depth(l, theta);
        t *= c;
        acc += t;
    }
    return acc;
}

int goldman_degree(const GoldmanElement &u, const Expansion &theta) {
    return lambda_theta(u, theta).lowest_degree();
}

// ---------------------------------------------------------------------------
// Derivations

Derivation::Derivation(HomologyRef basis, int trunc)
    : basis_(std::move(basis)), trunc_(trunc) {
    values_.assign(basis_->rank(), TruncatedTensor(basis_, trunc_));
}

void Derivation::set_value(int letter, TruncatedTensor v) {
    values_.at(letter) = std::move(v);
}

bool Derivation::is_zero() const {
    for (const auto &v : values_)
        if (!v.is_zero()) return false;
    return true;
}

Derivation &Derivation::operator+=(const Derivation &o) {
    for (int i = 0; i < basis_->rank(); ++i) values_[i] += o.values_[i];
    return *this;
}

Derivation &Derivation::operator-=(const Derivation &o) {
    for (int i = 0; i < basis_->rank(); ++i) values_[i] -= o.values_[i];
    return *this;
}

Derivation &Derivation::operator*=(const Rat &c) {
    for (auto &v : values_) v *= c;
    return *this;
}

Derivation Derivation::operator-() const {
    Derivation d = *this;
    d *= Rat(-1);
    return d;
}

TruncatedTensor Derivation::apply(const TruncatedTensor &t) const {
    if (!basis_->same_basis(*t.basis()))
        throw ConfigError("derivation applied to a tensor over another basis");
    if (t.trunc() > trunc_)
        throw ConfigError("derivation values are shallower than the tensor");
    const int N = t.trunc();
    const int rank = basis_->rank();
    TruncatedTensor out(t.basis(), t.trunc());
    for (int m = 1; m <= N; ++m) {
        const auto &blk = t.block(m);
        for (std::size_t idx = 0; idx < blk.size(); ++idx) {
            if (blk[idx] == 0) continue;
            for (int pos = 0; pos < m; ++pos) {
                const std::size_t tail = ipow(rank, m - pos - 1);
                const std::size_t prefix = idx / (tail * rank);
                const int letter = static_cast<int>((idx / tail) % rank);
                const std::size_t suffix = idx % tail;
                const auto &val = values_[letter];
                for (int k = 0; k + m - 1 <= out.trunc(); ++k) {
                    const auto &vb = val.block(k);
                    if (vb.empty()) continue;
                    const int od = m - 1 + k;
                    for (std::size_t j = 0; j < vb.size(); ++j) {
                        if (vb[j] == 0) continue;
                        const std::size_t oidx =
                            (prefix * ipow(rank, k) + j) * tail + suffix;
                        out.add_coef(od, oidx, blk[idx] * vb[j]);
                    }
                }
            }
        }
    }
    return out;
}

Derivation tensor_to_derivation(const TruncatedTensor &t) {
    const auto &h = t.basis();
    if (!h->nondegenerate())
        throw ConfigError("tensor_to_derivation needs a nondegenerate pairing (r = 1)");
    if (t.coef(0, 0) != 0)
        throw DomainError("tensor_to_derivation needs a tensor without degree-0 part");
    const int rank = h->rank();
    Derivation d(h, t.trunc());
    std::vector<TruncatedTensor> vals(rank, TruncatedTensor(h, t.trunc()));
    for (int m = 1; m <= t.trunc(); ++m) {
        const auto &blk = t.block(m);
        for (std::size_t idx = 0; idx < blk.size(); ++idx) {
            if (blk[idx] == 0) continue;
            const std::size_t tail = ipow(rank, m - 1);
            const int head = static_cast<int>(idx / tail);
            const std::size_t rest = idx % tail;
            for (int x = 0; x < rank; ++x) {
                const Rat p = h->pair(x, head);
                if (p != 0) vals[x].add_coef(m - 1, rest, p * blk[idx]);
            }
        }
    }
    for (int x = 0; x < rank; ++x) d.set_value(x, std::move(vals[x]));
    return d;
}

TruncatedTensor derivation_to_tensor(const Derivation &d) {
    const auto &h = d.basis();
    if (!h->nondegenerate())
        throw ConfigError("derivation_to_tensor needs a nondegenerate pairing (r = 1)");
    TruncatedTensor t(h, d.trunc());
    for (int i = 0; i < h->genus; ++i) {
        t += mul(TruncatedTensor::letter(h, d.trunc(), 2 * i + 1), d.value(2 * i));
        t -= mul(TruncatedTensor::letter(h, d.trunc(), 2 * i), d.value(2 * i + 1));
    }
    return t;
}

Derivation derivation_bracket(const Derivation &a, const Derivation &b) {
    Derivation out(a.basis(), a.trunc());
    for (int i = 0; i < a.basis()->rank(); ++i)
        out.set_value(i, a.apply(b.value(i)) - b.apply(a.value(i)));
    return out;
}

int check_exp_conditions(const Derivation &d) {
    const int rank = d.basis()->rank();
    // (i)+(iii): values have no degree-0 part, so filtration degrees never drop.
    for (int i = 0; i < rank; ++i)
        if (d.value(i).coef(0, 0) != 0)
            throw ConvergenceError("exp(D): derivation value has a degree-0 part");
    // (ii): the degree-1 block must be nilpotent.
    RatMatrix m(rank, std::vector<Rat>(rank, Rat(0)));
    for (int i = 0; i < rank; ++i) {
        const auto &blk = d.value(i).block(1);
        for (int j = 0; j < rank && !blk.empty(); ++j) m[j][i] = blk[j];
    }
    RatMatrix p = m;
    for (int nu = 1; nu <= rank + 1; ++nu) {
        bool zero = true;
        for (const auto &row : p)
            for (const auto &x : row)
                if (x != 0) { zero = false; break; }
        if (zero) return nu;
        RatMatrix q(rank, std::vector<Rat>(rank, Rat(0)));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k) {
                if (p[i][k] == 0) continue;
                for (int j = 0; j < rank; ++j)
                    if (m[k][j] != 0) q[i][j] += p[i][k] * m[k][j];
            }
        p = std::move(q);
    }
    throw ConvergenceError("exp(D): degree-1 part of the derivation is not nilpotent");
}

TruncatedTensor exp_derivation_apply(const Derivation &d, const TruncatedTensor &t) {
    check_exp_conditions(d);
    TruncatedTensor acc = t;
    TruncatedTensor term = t;
    for (int k = 1; k <= kExpSeriesCap; ++k) {
        term = d.apply(term);
        term *= Rat(1, k);
        if (term.is_zero()) return acc;
        acc += term;
    }
    throw ConvergenceError("exp(D): series did not terminate at truncation");
}

Derivation sigma_derivation(const GoldmanElement &u, const Expansion &theta) {
    return -tensor_to_derivation(lambda_theta_at_depth(u, theta));
}

TruncatedTensor goldman_bracket(const GoldmanElement &u, const GoldmanElement &v,
                                const Expansion &theta) {
    const Derivation du = tensor_to_derivation(lambda_theta_at_depth(u, theta));
    const Derivation dv = tensor_to_derivation(lambda_theta_at_depth(v, theta));
    return (-derivation_to_tensor(derivation_bracket(du, dv))).truncated(theta.trunc());
}

TruncatedTensor sigma_action(const GoldmanElement &u, const GroupRingElement &v,
                             const Expansion &theta) {
    return sigma_derivation(u, theta)
        .apply(theta.evaluate_at_depth(v))
        .truncated(theta.trunc());
}

TruncatedTensor sigma_action(const GoldmanElement &u, const TruncatedTensor &v,
                             const Expansion &theta) {
    if (v.trunc() > theta.depth())
        throw ConfigError("tensor is deeper than the expansion");
    return sigma_derivation(u, theta).apply(v);
}

LieMembership lie_membership(const TruncatedTensor &t) {
    LieMembership m;
    // cyclic: degree-0 part zero and each graded piece fixed by N/m
    if (t.coef(0, 0) != 0) return m;
    TruncatedTensor scaled(t.basis(), t.trunc());
    for (int deg = 1; deg <= t.trunc(); ++deg) {
        TruncatedTensor part = t.degree_part(deg);
        part *= Rat(deg);
        scaled += part;
    }
    if (!(cyclicize(t) == scaled)) return m;
    m.in_ag_minus = true;
    const int low = t.lowest_degree();
    m.in_ag = low >= 2;
    if (t.basis()->nondegenerate()) {
        const Derivation d = tensor_to_derivation(t);
        bool lie = true;
        for (int i = 0; i < t.basis()->rank() && lie; ++i)
            lie = is_lie_like(d.value(i));
        m.in_lg = lie;
        m.in_lg_plus = lie && low >= 3;
    }
    return m;
}

} // namespace loopalg
