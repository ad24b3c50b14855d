#pragma once
#include "loopalg/expansion.hpp"
#include "loopalg/group_ring.hpp"
#include "loopalg/tensor.hpp"

namespace loopalg {

// Finitely generated free groupoid: objects p0..p_{k-1}, one tree arc
// d_j: p0 -> p_j per extra object, and a free group of loops at p0.
// Morphism spaces are tree-trivialized: a morphism p_i -> p_j is
// d_i^{-1} (loop part) d_j, so a payload over the loop coordinates is all
// the data. Completed payloads are truncated tensors over the loop basis
// through the exponential expansion of the loop group.
struct GroupoidSpec {
    std::vector<std::string> objects; // objects[0] is the base
    std::vector<std::string> arc_names; // arc j-1 targets objects[j]
    GenSetRef loops;
    HomologyRef loop_basis; // pairing-free, labels = loop names
    int trunc = 1;

    static GroupoidSpec make(std::vector<std::string> objects,
                             std::vector<std::string> arc_names,
                             std::vector<std::string> loop_names, int trunc);
    int object_index(const std::string &name) const;
    int object_count() const { return static_cast<int>(objects.size()); }

    TruncatedTensor embed(const GroupRingElement &payload) const;
    TruncatedTensor embed(const GroupWord &loop) const;
};

struct SacMorphism {
    int src = 0, tgt = 0;
    TruncatedTensor payload;

    bool operator==(const SacMorphism &o) const {
        return src == o.src && tgt == o.tgt && payload == o.payload;
    }
};

SacMorphism sac_identity(const GroupoidSpec &spec, int obj);
SacMorphism sac_arc(const GroupoidSpec &spec, int j, int sign = +1); // d_j or d_j^{-1}
SacMorphism sac_loop(const GroupoidSpec &spec, const GroupWord &w);
SacMorphism sac_of_ring(const GroupoidSpec &spec, int src, int tgt,
                        const GroupRingElement &payload);

// Left-to-right path composition; K-bilinear; target(u) must equal source(v).
SacMorphism sac_compose(const GroupoidSpec &spec, const SacMorphism &u,
                        const SacMorphism &v);

// n with the tree-trivialized payload in I^n (trunc+1 when zero).
int sac_filtration_degree(const SacMorphism &u);

Rat sac_aug(const SacMorphism &u);

// Derivation of the completed groupoid algebra, in trivialized coordinates:
// values on the loop letters plus one payload v_j per tree arc with
// D(d_j) = v_j d_j. Extends by Leibniz:
//   payload(D(m)) = -v_src u + D_T(u) + u v_tgt.
struct SacDerivation {
    std::vector<TruncatedTensor> letter_values; // per loop letter
    std::vector<TruncatedTensor> arc_values;    // per tree arc (v_j)
};

SacDerivation sac_zero_derivation(const GroupoidSpec &spec);
SacMorphism sac_derive(const GroupoidSpec &spec, const SacDerivation &d,
                       const SacMorphism &u);

// Convergence conditions at truncation: all values without degree-0 part and
// nilpotent degree-1 letter block. Throws ConvergenceError otherwise.
void sac_check_exp_conditions(const GroupoidSpec &spec, const SacDerivation &d);
// exp(D)(u); a SAC automorphism at truncation.
SacMorphism sac_exp_apply(const GroupoidSpec &spec, const SacDerivation &d,
                          const SacMorphism &u);
// log(exp(D))(u) computed from the series in (exp(D) - id); converges under
// the same conditions.
SacMorphism sac_log_of_exp_apply(const GroupoidSpec &spec, const SacDerivation &d,
                                 const SacMorphism &u);

// Morphism class in the abelianized groupoid algebra ZG/F_2: augmentation
// plus the homology vector of the loop part.
struct AbelianMorphism {
    int src = 0, tgt = 0;
    Rat eps;
    std::vector<Rat> cls;
    bool operator==(const AbelianMorphism &o) const = default;
};

AbelianMorphism abelianize(const GroupoidSpec &spec, const SacMorphism &u);

// The action of sigma-bar((x-1)^2) on the abelianized algebra. Intersection
// numbers with the generators are inputs: loop_pair[l] = (x . x_l),
// arc_pair[j] = (x . d_j). On a path class gamma the action is
// 2 (x . gamma) gamma (x - 1).
class SigmaBarSquare {
public:
    SigmaBarSquare(const GroupoidSpec &spec, const GroupWord &x,
                   std::vector<Rat> loop_pair, std::vector<Rat> arc_pair);
    AbelianMorphism apply(const AbelianMorphism &u) const;

private:
    std::vector<Rat> x_cls_;
    std::vector<Rat> loop_pair_, arc_pair_;
};

} // namespace loopalg
