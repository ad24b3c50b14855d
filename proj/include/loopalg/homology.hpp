#pragma once
#include <memory>
#include <string>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

// Compact oriented surface of genus g with r >= 1 boundary components,
// computed modulo tensor degree > N.
struct SurfaceSignature {
    int genus = 0;
    int boundary = 1;
    int trunc = 1;

    SurfaceSignature() = default;
    SurfaceSignature(int g, int r, int N) : genus(g), boundary(r), trunc(N) {
        if (g < 0 || r < 1 || N < 1)
            throw ConfigError("surface signature needs g >= 0, r >= 1, N >= 1");
    }
    int homology_rank() const { return 2 * genus + boundary - 1; }
    SurfaceSignature with_trunc(int N) const { return {genus, boundary, N}; }
    bool operator==(const SurfaceSignature &o) const = default;
};

// First homology of the surface (or any free abelian coordinate space for
// tensor payloads) with a fixed ordered basis and an antisymmetric pairing.
//
// Basis order for a surface: A1 < B1 < ... < Ag < Bg < C2 < ... < Cr.
// Pairing convention: Ai . Bi = +1, boundary classes Cj pair to zero with
// everything; for r = 1 the pairing is the standard nondegenerate symplectic
// form.
class Homology {
public:
    static std::shared_ptr<const Homology> of_surface(int genus, int boundary);
    // Pairing-free basis (used for groupoid loop coordinates).
    static std::shared_ptr<const Homology> free_basis(std::vector<std::string> labels);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::string &label(int i) const { return labels_.at(i); }
    const std::vector<std::string> &labels() const { return labels_; }
    int label_index(const std::string &name) const; // -1 if absent

    bool has_pairing() const { return !pairing_.empty(); }
    bool nondegenerate() const { return nondegenerate_; }
    // <x . y>, antisymmetric.
    const Rat &pair(int x, int y) const;

    int genus = 0, boundary = 0; // 0,0 for free bases

    bool same_basis(const Homology &o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rat>> pairing_;
    bool nondegenerate_ = false;
};

using HomologyRef = std::shared_ptr<const Homology>;

} // namespace loopalg
