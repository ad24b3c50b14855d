#pragma once
#include "loopalg/expansion.hpp"

namespace loopalg {

// Free homotopy class of a loop: cyclically reduced word up to cyclic
// rotation, stored at its lexicographically least rotation.
class FreeLoop {
public:
    FreeLoop() = default;
    explicit FreeLoop(const GroupWord &w);

    const GroupWord &representative() const { return rep_; }
    bool is_constant() const { return rep_.is_identity(); }
    FreeLoop inverse() const { return FreeLoop(rep_.inverse()); }

    bool operator==(const FreeLoop &o) const { return rep_ == o.rep_; }
    bool operator<(const FreeLoop &o) const { return rep_ < o.rep_; }

private:
    GroupWord rep_;
};

// Finite rational combination of free loops.
class GoldmanElement {
public:
    GoldmanElement() = default;
    explicit GoldmanElement(GenSetRef gens) : gens_(std::move(gens)) {}
    static GoldmanElement of_loop(const FreeLoop &l, const Rat &c = Rat(1));
    // |.| applied to a group-ring element.
    static GoldmanElement of_ring(const GroupRingElement &u);

    const std::map<FreeLoop, Rat> &terms() const { return terms_; }
    void add(const FreeLoop &l, const Rat &c);
    GoldmanElement &operator+=(const GoldmanElement &o);
    GoldmanElement &operator-=(const GoldmanElement &o);
    GoldmanElement &operator*=(const Rat &c);

private:
    GenSetRef gens_;
    std::map<FreeLoop, Rat> terms_;
};

// lambda_theta(|x|) = N(theta(x)): the isomorphism onto cyclic tensors.
TruncatedTensor lambda_theta(const GoldmanElement &u, const Expansion &theta);
TruncatedTensor lambda_theta(const FreeLoop &l, const Expansion &theta);
// Same, one degree deeper (the derivation-valued operations consume one
// degree of lambda data).
TruncatedTensor lambda_theta_at_depth(const GoldmanElement &u, const Expansion &theta);
TruncatedTensor lambda_theta_at_depth(const FreeLoop &l, const Expansion &theta);

// Continuous derivation of the truncated tensor algebra, recorded by its
// values on the homology basis.
class Derivation {
public:
    Derivation() = default;
    Derivation(HomologyRef basis, int trunc);

    const HomologyRef &basis() const { return basis_; }
    int trunc() const { return trunc_; }
    const TruncatedTensor &value(int letter) const { return values_.at(letter); }
    void set_value(int letter, TruncatedTensor v);

    bool is_zero() const;
    Derivation &operator+=(const Derivation &o);
    Derivation &operator-=(const Derivation &o);
    Derivation &operator*=(const Rat &c);
    Derivation operator-() const;

    // Leibniz extension. Top-degree information that would land beyond the
    // truncation is dropped.
    TruncatedTensor apply(const TruncatedTensor &t) const;

private:
    HomologyRef basis_;
    int trunc_ = 0;
    std::vector<TruncatedTensor> values_;
};

// T-hat_1 = H ox T-hat = Der(T-hat) under the Poincare duality X -> (Y.X):
// a summand h w acts by X -> (X.h) w. Needs r = 1.
Derivation tensor_to_derivation(const TruncatedTensor &t);
// Inverse identification: sum_i ( B_i D(A_i) - A_i D(B_i) ).
TruncatedTensor derivation_to_tensor(const Derivation &d);

Derivation derivation_bracket(const Derivation &a, const Derivation &b);

// Largest nilpotency index of the degree-1 part, or throws ConvergenceError
// if the exponential of d is not defined at truncation (conditions of the
// filtered-derivation convergence lemma, checked mechanically).
int check_exp_conditions(const Derivation &d);
// exp(d) applied to t, as a terminating series at truncation.
TruncatedTensor exp_derivation_apply(const Derivation &d, const TruncatedTensor &t);

// sigma(u) as a derivation of tensors: theta(sigma(u) v) = -lambda(u) theta(v).
Derivation sigma_derivation(const GoldmanElement &u, const Expansion &theta);

// lambda_theta([u,v]): the Goldman bracket computed through symplectic
// derivations, with the sign fixed so that -lambda_theta is a Lie algebra
// homomorphism. Needs r = 1 and rebuilds theta one degree deeper, so the
// result is exact at theta's truncation.
TruncatedTensor goldman_bracket(const GoldmanElement &u, const GoldmanElement &v,
                                const Expansion &theta);

// theta(sigma(u) v), exact at theta's truncation.
TruncatedTensor sigma_action(const GoldmanElement &u, const GroupRingElement &v,
                             const Expansion &theta);
// Tensor overload: applied at the tensor's own truncation (top degree is
// re-truncated, as for any derivation application).
TruncatedTensor sigma_action(const GoldmanElement &u, const TruncatedTensor &v,
                             const Expansion &theta);

struct LieMembership {
    bool in_ag_minus = false; // cyclic tensor (symplectic derivation)
    bool in_ag = false;       // cyclic, lowest degree >= 2
    bool in_lg = false;       // coproduct-stabilizing: every D(X) Lie-like
    bool in_lg_plus = false;  // additionally lowest degree >= 3
};
LieMembership lie_membership(const TruncatedTensor &t);

// Lowest lambda-degree of u: n means u in the n-th Goldman filtration step
// (the constant loop reports trunc+1).
int goldman_degree(const GoldmanElement &u, const Expansion &theta);

} // namespace loopalg
