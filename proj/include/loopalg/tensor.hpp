#pragma once
#include <cstdint>
#include <vector>

#include "loopalg/homology.hpp"

namespace loopalg {

class DoubleTensor;

// Element of the completed tensor algebra over H, kept modulo degree > N.
//
// Degree-m words are encoded as base-rank integers, leftmost letter most
// significant, so idx(uv) = idx(u) * rank^|v| + idx(v). Each degree holds a
// dense coefficient block; an unallocated block is zero. The JSON interface
// (json_io.hpp) stays sparse with canonical (degree, word) term order.
class TruncatedTensor {
public:
    TruncatedTensor() = default;
    TruncatedTensor(HomologyRef basis, int trunc);

    static TruncatedTensor unit(HomologyRef basis, int trunc);
    static TruncatedTensor letter(HomologyRef basis, int trunc, int letter_index);
    // Single word with coefficient; letters given left to right.
    static TruncatedTensor word(HomologyRef basis, int trunc,
                                const std::vector<int> &letters, const Rat &coef = Rat(1));

    int rank() const { return basis_ ? basis_->rank() : 0; }
    int trunc() const { return trunc_; }
    const HomologyRef &basis() const { return basis_; }

    static std::size_t block_size(int rank, int degree);

    bool is_zero() const;
    // Smallest degree with a nonzero component; trunc()+1 when zero.
    int lowest_degree() const;
    const Rat &coef(int degree, std::size_t word_index) const;
    void add_coef(int degree, std::size_t word_index, const Rat &c);

    // Degree-m coefficient block; empty vector means zero. For iteration.
    const std::vector<Rat> &block(int degree) const;
    std::vector<Rat> &mutable_block(int degree);

    TruncatedTensor degree_part(int degree) const;
    TruncatedTensor truncated(int new_trunc) const; // new_trunc <= trunc()

    TruncatedTensor &operator+=(const TruncatedTensor &o);
    TruncatedTensor &operator-=(const TruncatedTensor &o);
    TruncatedTensor &operator*=(const Rat &c);
    friend TruncatedTensor operator+(TruncatedTensor a, const TruncatedTensor &b) { return a += b; }
    friend TruncatedTensor operator-(TruncatedTensor a, const TruncatedTensor &b) { return a -= b; }
    friend TruncatedTensor operator*(TruncatedTensor a, const Rat &c) { return a *= c; }
    TruncatedTensor operator-() const;
    bool operator==(const TruncatedTensor &o) const;

    std::string pretty() const;

private:
    void require_compat(const TruncatedTensor &o) const;
    HomologyRef basis_;
    int trunc_ = 0;
    std::vector<std::vector<Rat>> terms_; // terms_[m], dense or empty

    friend TruncatedTensor mul(const TruncatedTensor &, const TruncatedTensor &);
    friend TruncatedTensor mul_serial(const TruncatedTensor &, const TruncatedTensor &);
};

// Graded product truncated to degree N. `mul` parallelizes over output
// degrees with OpenMP; `mul_serial` is the reference kept for tests and the
// benchmark. Results are identical for any thread count.
TruncatedTensor mul(const TruncatedTensor &u, const TruncatedTensor &v);
TruncatedTensor mul_serial(const TruncatedTensor &u, const TruncatedTensor &v);

TruncatedTensor commutator(const TruncatedTensor &u, const TruncatedTensor &v);

// exp(u) = sum u^k / k!; requires zero degree-0 part.
TruncatedTensor exp_t(const TruncatedTensor &u);
// log(u) = sum (-1)^(n-1)/n (u-1)^n; requires degree-0 part 1.
TruncatedTensor log_t(const TruncatedTensor &u);
// Multiplicative inverse; requires nonzero degree-0 part.
TruncatedTensor inverse(const TruncatedTensor &u);
// Hausdorff series log(exp(u) exp(v)); u, v with zero degree-0 part.
TruncatedTensor bch(const TruncatedTensor &u, const TruncatedTensor &v);

// Cyclicization N: X1...Xn -> sum of the n cyclic rotations; kills degree 0.
TruncatedTensor cyclicize(const TruncatedTensor &u);

// Apply a letter substitution into another basis (used for surface
// inclusions); letter_map[i] is the image letter index in `target`.
TruncatedTensor map_letters(const TruncatedTensor &u, HomologyRef target,
                            const std::vector<int> &letter_map);

// Substitute images[i] for letter i, extended as an algebra map. `cap`
// bounds the output degree (defaults to the common truncation).
TruncatedTensor substitute(const TruncatedTensor &u,
                           const std::vector<TruncatedTensor> &images, int cap = -1);

// Element of (T ox T) / (total degree > N).
class DoubleTensor {
public:
    DoubleTensor() = default;
    DoubleTensor(HomologyRef basis, int trunc);

    int trunc() const { return trunc_; }
    const std::vector<Rat> &block(int da, int db) const;
    void add_coef(int da, int db, std::size_t ia, std::size_t ib, const Rat &c);

    DoubleTensor &operator+=(const DoubleTensor &o);
    DoubleTensor &operator-=(const DoubleTensor &o);
    bool operator==(const DoubleTensor &o) const;
    bool is_zero() const;

private:
    HomologyRef basis_;
    int trunc_ = 0;
    // blocks_[a][b], sizes rank^a * rank^b, allocated on demand
    std::vector<std::vector<std::vector<Rat>>> blocks_;

    friend DoubleTensor mul(const DoubleTensor &, const DoubleTensor &);
};

DoubleTensor mul(const DoubleTensor &u, const DoubleTensor &v);
// u ox v with total degree > N dropped.
DoubleTensor tensor_pair(const TruncatedTensor &u, const TruncatedTensor &v);
// Algebra map with every letter primitive: D(X) = X ox 1 + 1 ox X.
DoubleTensor coproduct(const TruncatedTensor &u);

// Group-like: deg-0 part 1 and Delta(u) = u ox u at truncation.
bool is_group_like(const TruncatedTensor &u);
// Lie-like: Delta(u) = u ox 1 + 1 ox u at truncation.
bool is_lie_like(const TruncatedTensor &u);

// Basis of {u : deg(u) <= max_deg, vu = uv in degrees <= max_deg + d} for
// homogeneous v of degree d, computed degreewise by an exact kernel solve.
std::vector<TruncatedTensor> commutant_basis(const TruncatedTensor &v, int max_deg);

// Poincare dual of a basis vector: the functional Y -> (Y . X), as a
// coefficient row over the basis. Needs a nondegenerate pairing.
std::vector<Rat> dualize(const HomologyRef &h, int letter_index);

// omega = sum_i (A_i B_i - B_i A_i) in H^{ox 2}.
TruncatedTensor symplectic_form(HomologyRef h, int trunc);

} // namespace loopalg
