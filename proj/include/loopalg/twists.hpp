#pragma once
#include "loopalg/goldman.hpp"

namespace loopalg {

// lambda image of |f(x)| for a series f = sum_{k>=2} a_k (t-1)^k given by its
// coefficients (index k). f(1) = f'(1) = 0 is required, i.e. a_0 = a_1 = 0.
TruncatedTensor f_of_loop(const std::vector<Rat> &coeffs, const FreeLoop &c,
                          const Expansion &theta);
// Default f = L(t) = (1/2)(log t)^2.
TruncatedTensor L_of(const FreeLoop &c, const Expansion &theta);
// Same, at the expansion's depth (for derivation-valued consumers).
TruncatedTensor L_of_at_depth(const FreeLoop &c, const Expansion &theta);

// exp(sigma(z L(C))) acting on truncated tensors. Built from theta rebuilt
// one degree deeper, so images are exact at theta's truncation.
class TwistOperator {
public:
    TwistOperator(const FreeLoop &c, const Expansion &theta, const Rat &z = Rat(1));

    // The derivation sigma(z L(C)) (one degree deeper than theta).
    const Derivation &derivation() const { return der_; }
    TruncatedTensor apply(const TruncatedTensor &t) const;
    // Cached image of theta(generator).
    const TruncatedTensor &generator_image(int gen) const { return gen_img_.at(gen); }

private:
    Derivation der_;
    int out_trunc_;
    std::vector<TruncatedTensor> gen_img_;
};

// Standard simple closed curves on Sigma_{g,1} with twist formulas on pi_1.
struct ClassicalCurve {
    enum class Kind { a1, b1, boundary, separating };
    Kind kind = Kind::a1;
    int h = 1; // separating: the curve [a1,b1]...[ah,bh]

    static ClassicalCurve parse(const std::string &tag); // a1 | b1 | zeta | sep<h>
};

// The curve as a free loop.
GroupWord classical_curve_word(const ClassicalCurve &c, const GenSetRef &gens, int genus);
// Right-handed Dehn twist along the curve, as the induced automorphism of
// pi_1 (Sigma_{g,1}, *) with * on the boundary. Orientation convention:
// t_{a1}(b1) = b1 a1; everything else follows from it.
std::vector<GroupWord> classical_twist_images(const ClassicalCurve &c,
                                              const GenSetRef &gens, int genus);
GroupWord classical_twist(const ClassicalCurve &c, const GenSetRef &gens, int genus,
                          const GroupWord &w);

// Degree-1..3 report of z X*(-Y) + b X + c X*Y over the rank-2 free algebra,
// with b, c solved from the degree-1 equation. The degree-3 residual is the
// obstruction to realizing the twist along a figure eight.
struct FigureEightReport {
    Rat z, b, c;
    TruncatedTensor residual2, residual3;
    // residual3 = obstruction_coef * [Y,[Y,X]]
    Rat obstruction_coef;
};
FigureEightReport figure_eight_obstruction(const Rat &z, int trunc);

enum class PairKind { separating, bounding_pair, simply_intersecting };

struct PairLogReport {
    TruncatedTensor value; // lambda image
    int filtration;        // least n with value in N(T-hat_n)
};

// Logarithms of the Torelli generators: L(C) for a separating curve,
// L(C2) - L(C1) for a bounding pair, and the Hausdorff commutator
// P = L(C1) * L(C2) * (-L(C1)) * (-L(C2)) for a simply intersecting pair.
// Hypotheses are checked on homology classes / lambda images and a failing
// check raises DomainError with a diagnostic.
PairLogReport pair_logs(PairKind kind, const std::vector<FreeLoop> &loops,
                        const Expansion &theta);

// Mapping class recorded by its action on the pi_1 generators.
struct MappingClassAction {
    std::vector<GroupWord> images;

    static MappingClassAction identity(const GenSetRef &gens);
    static MappingClassAction of_twist(const ClassicalCurve &c, const GenSetRef &gens,
                                       int genus, int power = 1);
    GroupWord apply(const GroupWord &w) const { return apply_endomorphism(images, w); }
    // (this o psi): first psi, then this.
    MappingClassAction after(const MappingClassAction &psi) const;
};

// Letter images of an algebra automorphism U with (U - id) raising degree by
// at least one on generators; returns the derivation log(U) with
// exp(log U) = U at truncation.
Derivation log_automorphism(const std::vector<TruncatedTensor> &letter_images,
                            const HomologyRef &basis);

// Logarithm of the Dehn-Nielsen action theta . phi . theta^{-1} in lambda
// coordinates (the cyclic tensor t with log U = -D_t). Works for any
// group-like expansion; phi must act trivially on homology so the logarithm
// converges at truncation.
TruncatedTensor dehn_nielsen_log(const MappingClassAction &phi, const Expansion &theta);

// Truncated geometric Johnson homomorphism: the cyclic tensor tau with
// DN(phi) = exp(sigma(tau)), sign consistent with -lambda_theta. Requires a
// symplectic theta and a Torelli action (identity on homology).
TruncatedTensor johnson_tau(const MappingClassAction &phi, const Expansion &theta);

} // namespace loopalg
