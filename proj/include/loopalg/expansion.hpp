#pragma once
#include "loopalg/group_ring.hpp"
#include "loopalg/tensor.hpp"

namespace loopalg {

// Standard-form curve for the curve-adapted constructors:
//   non_separating:    eta = a1
//   separating_nonnull: eta = g_{k+1}...g_r [a1,b1]...[ah,bh]   (needs r >= 2)
//   separating_null:    eta = [a1,b1]...[ah,bh]
struct CurveCaseDescriptor {
    enum class Kind { non_separating, separating_nonnull, separating_null };
    Kind kind = Kind::non_separating;
    int k = 1; // separating_nonnull: boundary split position, 1 <= k <= r-1
    int h = 0; // handles in the commutator part, 0 <= h <= g
};

// Group-like expansion theta: pi -> T-hat. Every generator image is
// group-like with degree-1 part the generator's homology class; evaluation
// is multiplicative.
//
// Images are constructed and stored one degree deeper than the nominal
// truncation: operations that turn tensors into derivations consume one
// degree (the degree-(k+1) part of a tensor carries the degree-k derivation
// values), so staying exact at the truncation requires the deeper images.
// The defining equations of the constructors hold through depth().
class Expansion {
public:
    enum class Kind { exponential, symplectic, curve_adapted };

    const SurfaceSignature &signature() const { return sig_; }
    int trunc() const { return sig_.trunc; }
    int depth() const { return sig_.trunc + 1; }
    Kind kind() const { return kind_; }
    const GenSetRef &gens() const { return gens_; }
    const HomologyRef &homology() const { return homology_; }

    // At the nominal truncation.
    const TruncatedTensor &image(int gen) const { return img_.at(gen); }
    const TruncatedTensor &image_inverse(int gen) const { return inv_.at(gen); }
    const TruncatedTensor &log_image(int gen) const { return logimg_.at(gen); }
    TruncatedTensor evaluate(const GroupWord &w) const;
    TruncatedTensor evaluate(const GroupRingElement &u) const;

    // One degree deeper.
    const TruncatedTensor &image_at_depth(int gen) const { return img_deep_.at(gen); }
    TruncatedTensor evaluate_at_depth(const GroupWord &w) const;
    TruncatedTensor evaluate_at_depth(const GroupRingElement &u) const;

    friend Expansion exponential_expansion(const SurfaceSignature &sig);
    friend Expansion symplectic_expansion(const SurfaceSignature &sig);
    friend Expansion curve_adapted_expansion(const SurfaceSignature &sig,
                                             const CurveCaseDescriptor &desc);

private:
    SurfaceSignature sig_;
    Kind kind_ = Kind::exponential;
    CurveCaseDescriptor case_;
    GenSetRef gens_;
    HomologyRef homology_;
    // logimg_deep_ drives the construction; the rest is derived from it.
    std::vector<TruncatedTensor> logimg_deep_, img_deep_, inv_deep_;
    std::vector<TruncatedTensor> logimg_, img_, inv_;

    void finish_from_logs();
    static void correct_commutator_product(Expansion &e, int h, const GroupWord &eta,
                                           const TruncatedTensor &target);
    TruncatedTensor evaluate_with(const std::vector<TruncatedTensor> &img,
                                  const std::vector<TruncatedTensor> &inv,
                                  const GroupWord &w) const;
};

// theta(x) = exp([x]) on every free generator.
Expansion exponential_expansion(const SurfaceSignature &sig);

// Group-like expansion with theta(zeta) = exp(omega) exactly at truncation
// (r = 1, N >= 2). Deterministic: the degree-p defect of log theta(zeta) is
// removed by corrections obtained from the Dynkin left-bracketing section of
// the free Lie algebra.
Expansion symplectic_expansion(const SurfaceSignature &sig);

Expansion curve_adapted_expansion(const SurfaceSignature &sig,
                                  const CurveCaseDescriptor &desc);

// The standard-form word eta of the descriptor.
GroupWord curve_word(const GenSetRef &gens, const SurfaceSignature &sig,
                     const CurveCaseDescriptor &desc);

// Smallest m with a nonzero degree-m component of theta(u); N+1 when theta(u)
// vanishes at truncation. Equals the I-adic degree for m <= N since theta is
// filter-preserving.
int filtration_degree(const GroupRingElement &u, const Expansion &theta);

} // namespace loopalg
