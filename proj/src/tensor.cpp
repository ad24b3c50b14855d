#include "loopalg/tensor.hpp"
#include "loopalg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loopalg {

namespace {

std::size_t ipow(int base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

void decode_word(std::size_t idx, int rank, int degree, std::vector<int> &out) {
    out.assign(degree, 0);
    for (int i = degree - 1; i >= 0; --i) {
        out[i] = static_cast<int>(idx % rank);
        idx /= rank;
    }
}

const Rat kZero(0);

} // namespace

TruncatedTensor::TruncatedTensor(HomologyRef basis, int trunc)
    : basis_(std::move(basis)), trunc_(trunc) {
    if (!basis_) throw ConfigError("tensor needs a basis");
    if (trunc_ < 1) throw ConfigError("truncation must be >= 1");
    terms_.resize(trunc_ + 1);
}

std::size_t TruncatedTensor::block_size(int rank, int degree) { return ipow(rank, degree); }

TruncatedTensor TruncatedTensor::unit(HomologyRef basis, int trunc) {
    TruncatedTensor t(std::move(basis), trunc);
    t.add_coef(0, 0, Rat(1));
    return t;
}

TruncatedTensor TruncatedTensor::letter(HomologyRef basis, int trunc, int letter_index) {
    TruncatedTensor t(std::move(basis), trunc);
    if (letter_index < 0 || letter_index >= t.rank())
        throw ConfigError("letter index out of range");
    t.add_coef(1, static_cast<std::size_t>(letter_index), Rat(1));
    return t;
}

TruncatedTensor TruncatedTensor::word(HomologyRef basis, int trunc,
                                      const std::vector<int> &letters, const Rat &coef) {
    TruncatedTensor t(std::move(basis), trunc);
    const int m = static_cast<int>(letters.size());
    if (m > trunc) return t;
    std::size_t idx = 0;
    for (int l : letters) {
        if (l < 0 || l >= t.rank()) throw ConfigError("letter index out of range");
        idx = idx * t.rank() + static_cast<std::size_t>(l);
    }
    t.add_coef(m, idx, coef);
    return t;
}

bool TruncatedTensor::is_zero() const {
    for (const auto &blk : terms_)
        for (const auto &c : blk)
            if (c != 0) return false;
    return true;
}

int TruncatedTensor::lowest_degree() const {
    for (int m = 0; m <= trunc_; ++m)
        for (const auto &c : terms_[m])
            if (c != 0) return m;
    return trunc_ + 1;
}

const Rat &TruncatedTensor::coef(int degree, std::size_t word_index) const {
    if (degree < 0 || degree > trunc_ || terms_[degree].empty()) return kZero;
    return terms_[degree][word_index];
}

void TruncatedTensor::add_coef(int degree, std::size_t word_index, const Rat &c) {
    if (degree < 0 || degree > trunc_ || c == 0) return;
    mutable_block(degree)[word_index] += c;
}

const std::vector<Rat> &TruncatedTensor::block(int degree) const {
    static const std::vector<Rat> empty;
    if (degree < 0 || degree > trunc_) return empty;
    return terms_[degree];
}

std::vector<Rat> &TruncatedTensor::mutable_block(int degree) {
    auto &blk = terms_.at(degree);
    if (blk.empty()) blk.assign(block_size(rank(), degree), Rat(0));
    return blk;
}

TruncatedTensor TruncatedTensor::degree_part(int degree) const {
    TruncatedTensor out(basis_, trunc_);
    if (degree >= 0 && degree <= trunc_) out.terms_[degree] = terms_[degree];
    return out;
}

TruncatedTensor TruncatedTensor::truncated(int new_trunc) const {
    if (new_trunc > trunc_) throw ConfigError("cannot extend a truncated tensor");
    TruncatedTensor out(basis_, new_trunc);
    for (int m = 0; m <= new_trunc; ++m) out.terms_[m] = terms_[m];
    return out;
}

void TruncatedTensor::require_compat(const TruncatedTensor &o) const {
    if (!basis_ || !o.basis_ || !basis_->same_basis(*o.basis_) || trunc_ != o.trunc_)
        throw ConfigError("mismatched tensor bases or truncations");
}

TruncatedTensor &TruncatedTensor::operator+=(const TruncatedTensor &o) {
    require_compat(o);
    for (int m = 0; m <= trunc_; ++m) {
        if (o.terms_[m].empty()) continue;
        auto &blk = mutable_block(m);
        const auto &ob = o.terms_[m];
        for (std::size_t i = 0; i < ob.size(); ++i)
            if (ob[i] != 0) blk[i] += ob[i];
    }
    return *this;
}

TruncatedTensor &TruncatedTensor::operator-=(const TruncatedTensor &o) {
    require_compat(o);
    for (int m = 0; m <= trunc_; ++m) {
        if (o.terms_[m].empty()) continue;
        auto &blk = mutable_block(m);
        const auto &ob = o.terms_[m];
        for (std::size_t i = 0; i < ob.size(); ++i)
            if (ob[i] != 0) blk[i] -= ob[i];
    }
    return *this;
}

TruncatedTensor &TruncatedTensor::operator*=(const Rat &c) {
    if (c == 0) {
        for (auto &blk : terms_) blk.clear();
        return *this;
    }
    for (auto &blk : terms_)
        for (auto &x : blk)
            if (x != 0) x *= c;
    return *this;
}

TruncatedTensor TruncatedTensor::operator-() const {
    TruncatedTensor out = *this;
    out *= Rat(-1);
    return out;
}

bool TruncatedTensor::operator==(const TruncatedTensor &o) const {
    require_compat(o);
    for (int m = 0; m <= trunc_; ++m) {
        const auto &a = terms_[m];
        const auto &b = o.terms_[m];
        if (a.empty() && b.empty()) continue;
        const std::size_t n = block_size(rank(), m);
        for (std::size_t i = 0; i < n; ++i) {
            const Rat &x = a.empty() ? kZero : a[i];
            const Rat &y = b.empty() ? kZero : b[i];
            if (x != y) return false;
        }
    }
    return true;
}

std::string TruncatedTensor::pretty() const {
    std::ostringstream os;
    bool first = true;
    std::vector<int> w;
    for (int m = 0; m <= trunc_; ++m) {
        const auto &blk = terms_[m];
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            Rat c = blk[i];
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            decode_word(i, rank(), m, w);
            if (m == 0) {
                os << rat_str(c);
            } else {
                if (c != 1) os << rat_str(c) << "*";
                for (int l : w) os << basis_->label(l);
            }
        }
    }
    if (first) os << "0";
    return os.str();
}

TruncatedTensor mul_serial(const TruncatedTensor &u, const TruncatedTensor &v) {
    u.require_compat(v);
    const int N = u.trunc_;
    const int rank = u.rank();
    TruncatedTensor out(u.basis_, N);
    mpq_class tmp;
    for (int d = 0; d <= N; ++d) {
        for (int a = 0; a <= d; ++a) {
            const auto &ua = u.terms_[a];
            const auto &vb = v.terms_[d - a];
            if (ua.empty() || vb.empty()) continue;
            auto &ob = out.mutable_block(d);
            const std::size_t shift = ipow(rank, d - a);
            for (std::size_t i = 0; i < ua.size(); ++i) {
                if (ua[i] == 0) continue;
                const std::size_t base = i * shift;
                for (std::size_t j = 0; j < vb.size(); ++j) {
                    if (vb[j] == 0) continue;
                    mpq_mul(tmp.get_mpq_t(), ua[i].get_mpq_t(), vb[j].get_mpq_t());
                    mpq_add(ob[base + j].get_mpq_t(), ob[base + j].get_mpq_t(),
                            tmp.get_mpq_t());
                }
            }
        }
    }
    return out;
}

TruncatedTensor mul(const TruncatedTensor &u, const TruncatedTensor &v) {
    u.require_compat(v);
    const int N = u.trunc_;
    const int rank = u.rank();
    // below this many coefficient products the barriers cost more than the
    // arithmetic; fall back to the reference kernel
    constexpr std::size_t kParallelThreshold = 1 << 16;
    std::size_t work = 0;
    for (int d = 0; d <= N; ++d)
        for (int a = 0; a <= d; ++a)
            if (!u.terms_[a].empty() && !v.terms_[d - a].empty())
                work += u.terms_[a].size() * v.terms_[d - a].size();
    if (work < kParallelThreshold) return mul_serial(u, v);

    TruncatedTensor out(u.basis_, N);
    // allocate output blocks up front; the parallel loops below only write
    for (int d = 0; d <= N; ++d)
        for (int a = 0; a <= d; ++a)
            if (!u.terms_[a].empty() && !v.terms_[d - a].empty()) {
                out.mutable_block(d);
                break;
            }
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        mpq_class tmp;
        for (int d = 0; d <= N; ++d) {
            for (int a = 0; a <= d; ++a) {
                const auto &ua = u.terms_[a];
                const auto &vb = v.terms_[d - a];
                if (ua.empty() || vb.empty()) continue;
                auto &ob = out.terms_[d];
                const std::size_t shift = ipow(rank, d - a);
                // distinct (i, j) pairs write distinct output slots, so the
                // static split is race-free and scheduling-independent
#ifdef _OPENMP
#pragma omp for schedule(static) collapse(2)
#endif
                for (std::size_t i = 0; i < ua.size(); ++i) {
                    for (std::size_t j = 0; j < vb.size(); ++j) {
                        if (ua[i] == 0 || vb[j] == 0) continue;
                        mpq_mul(tmp.get_mpq_t(), ua[i].get_mpq_t(),
                                vb[j].get_mpq_t());
                        mpq_add(ob[i * shift + j].get_mpq_t(),
                                ob[i * shift + j].get_mpq_t(), tmp.get_mpq_t());
                    }
                }
            }
        }
    }
    return out;
}

TruncatedTensor commutator(const TruncatedTensor &u, const TruncatedTensor &v) {
    return mul(u, v) - mul(v, u);
}

TruncatedTensor exp_t(const TruncatedTensor &u) {
    if (u.coef(0, 0) != 0) throw DomainError("exp needs zero degree-0 part");
    TruncatedTensor acc = TruncatedTensor::unit(u.basis(), u.trunc());
    TruncatedTensor term = acc;
    for (int k = 1; k <= u.trunc(); ++k) {
        term = mul(term, u);
        term *= Rat(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

TruncatedTensor log_t(const TruncatedTensor &u) {
    if (u.coef(0, 0) != 1) throw DomainError("log needs degree-0 part 1");
    TruncatedTensor v = u;
    v -= TruncatedTensor::unit(u.basis(), u.trunc());
    TruncatedTensor acc(u.basis(), u.trunc());
    TruncatedTensor p = v;
    for (int n = 1; n <= u.trunc(); ++n) {
        if (p.is_zero()) break;
        TruncatedTensor term = p;
        term *= Rat((n % 2) ? 1 : -1, n);
        acc += term;
        if (n < u.trunc()) p = mul(p, v);
    }
    return acc;
}

TruncatedTensor inverse(const TruncatedTensor &u) {
    const Rat c0 = u.coef(0, 0);
    if (c0 == 0) throw DomainError("inverse needs nonzero degree-0 part");
    // u = c0 (1 - w), u^-1 = c0^-1 sum w^k
    TruncatedTensor w = TruncatedTensor::unit(u.basis(), u.trunc());
    {
        TruncatedTensor scaled = u;
        scaled *= 1 / c0;
        w -= scaled;
    }
    TruncatedTensor acc = TruncatedTensor::unit(u.basis(), u.trunc());
    TruncatedTensor p = w;
    for (int k = 1; k <= u.trunc(); ++k) {
        if (p.is_zero()) break;
        acc += p;
        if (k < u.trunc()) p = mul(p, w);
    }
    acc *= 1 / c0;
    return acc;
}

TruncatedTensor bch(const TruncatedTensor &u, const TruncatedTensor &v) {
    if (u.coef(0, 0) != 0 || v.coef(0, 0) != 0)
        throw DomainError("bch needs zero degree-0 parts");
    return log_t(mul(exp_t(u), exp_t(v)));
}

TruncatedTensor cyclicize(const TruncatedTensor &u) {
    const int rank = u.rank();
    TruncatedTensor out(u.basis(), u.trunc());
    for (int m = 1; m <= u.trunc(); ++m) {
        const auto &blk = u.block(m);
        if (blk.empty()) continue;
        auto &ob = out.mutable_block(m);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            std::size_t idx = i;
            for (int r = 0; r < m; ++r) {
                ob[idx] += blk[i];
                // rotate left by one letter
                const std::size_t top = ipow(rank, m - 1);
                idx = (idx % top) * rank + idx / top;
            }
        }
    }
    return out;
}

TruncatedTensor map_letters(const TruncatedTensor &u, HomologyRef target,
                            const std::vector<int> &letter_map) {
    if (static_cast<int>(letter_map.size()) != u.rank())
        throw ConfigError("letter map size mismatch");
    TruncatedTensor out(target, u.trunc());
    const int rank = u.rank();
    const int trank = out.rank();
    std::vector<int> w;
    for (int m = 0; m <= u.trunc(); ++m) {
        const auto &blk = u.block(m);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            decode_word(i, rank, m, w);
            std::size_t idx = 0;
            for (int l : w) idx = idx * trank + static_cast<std::size_t>(letter_map.at(l));
            out.add_coef(m, idx, blk[i]);
        }
    }
    return out;
}

TruncatedTensor substitute(const TruncatedTensor &u,
                           const std::vector<TruncatedTensor> &images, int cap) {
    const int rank = u.rank();
    if (static_cast<int>(images.size()) != rank)
        throw ConfigError("substitute needs one image per letter");
    const int N = (cap < 0) ? u.trunc() : std::min(cap, u.trunc());
    HomologyRef out_basis = rank ? images[0].basis() : u.basis();
    const int out_trunc = rank ? images[0].trunc() : u.trunc();
    TruncatedTensor out(out_basis, out_trunc);
    out.add_coef(0, 0, u.coef(0, 0));

    // Each image must have zero degree-0 part so products gain at least one
    // degree per letter and the walk below terminates at depth N.
    for (const auto &img : images)
        if (img.coef(0, 0) != 0)
            throw DomainError("substitute: letter images need zero degree-0 part");

    // live[d]: depth-d prefixes of support words of degree > d. The walk
    // descends only into live prefixes, which keeps sparse inputs cheap.
    std::vector<std::unordered_set<std::size_t>> live(N + 1);
    for (int m = 1; m <= N; ++m) {
        const auto &blk = u.block(m);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            std::size_t p = i;
            for (int d = m - 1; d >= 1; --d) {
                p /= rank;
                live[d].insert(p);
            }
        }
    }

    // Depth-first walk over the prefix tree of u's support, keeping the
    // running product of letter images on a stack.
    struct Frame { std::size_t prefix; int next_letter; };
    std::vector<TruncatedTensor> prod_stack;
    prod_stack.push_back(TruncatedTensor::unit(out_basis, out_trunc));
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        Frame &f = stack.back();
        const int depth = static_cast<int>(stack.size()) - 1;
        if (f.next_letter >= rank || depth >= N) {
            stack.pop_back();
            prod_stack.pop_back();
            continue;
        }
        const int l = f.next_letter++;
        const std::size_t child = f.prefix * rank + static_cast<std::size_t>(l);
        const int cdepth = depth + 1;
        const Rat &c = u.coef(cdepth, child);
        const bool descend = cdepth < N && live[cdepth].count(child) > 0;
        if (c == 0 && !descend) continue;
        TruncatedTensor p = mul(prod_stack.back(), images[l]);
        if (c != 0) {
            TruncatedTensor t = p;
            t *= c;
            out += t;
        }
        if (descend && !p.is_zero()) {
            prod_stack.push_back(std::move(p));
            stack.push_back({child, 0});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// DoubleTensor

DoubleTensor::DoubleTensor(HomologyRef basis, int trunc)
    : basis_(std::move(basis)), trunc_(trunc) {
    if (!basis_) throw ConfigError("tensor needs a basis");
    blocks_.resize(trunc_ + 1);
    for (int a = 0; a <= trunc_; ++a) blocks_[a].resize(trunc_ - a + 1);
}

const std::vector<Rat> &DoubleTensor::block(int da, int db) const {
    static const std::vector<Rat> empty;
    if (da < 0 || db < 0 || da + db > trunc_) return empty;
    return blocks_[da][db];
}

void DoubleTensor::add_coef(int da, int db, std::size_t ia, std::size_t ib, const Rat &c) {
    if (da < 0 || db < 0 || da + db > trunc_ || c == 0) return;
    auto &blk = blocks_[da][db];
    const std::size_t nb = TruncatedTensor::block_size(basis_->rank(), db);
    if (blk.empty())
        blk.assign(TruncatedTensor::block_size(basis_->rank(), da) * nb, Rat(0));
    blk[ia * nb + ib] += c;
}

DoubleTensor &DoubleTensor::operator+=(const DoubleTensor &o) {
    for (int a = 0; a <= trunc_; ++a)
        for (int b = 0; a + b <= trunc_; ++b) {
            const auto &ob = o.blocks_[a][b];
            if (ob.empty()) continue;
            auto &blk = blocks_[a][b];
            if (blk.empty()) blk.assign(ob.size(), Rat(0));
            for (std::size_t i = 0; i < ob.size(); ++i)
                if (ob[i] != 0) blk[i] += ob[i];
        }
    return *this;
}

DoubleTensor &DoubleTensor::operator-=(const DoubleTensor &o) {
    for (int a = 0; a <= trunc_; ++a)
        for (int b = 0; a + b <= trunc_; ++b) {
            const auto &ob = o.blocks_[a][b];
            if (ob.empty()) continue;
            auto &blk = blocks_[a][b];
            if (blk.empty()) blk.assign(ob.size(), Rat(0));
            for (std::size_t i = 0; i < ob.size(); ++i)
                if (ob[i] != 0) blk[i] -= ob[i];
        }
    return *this;
}

bool DoubleTensor::is_zero() const {
    for (const auto &row : blocks_)
        for (const auto &blk : row)
            for (const auto &c : blk)
                if (c != 0) return false;
    return true;
}

bool DoubleTensor::operator==(const DoubleTensor &o) const {
    if (trunc_ != o.trunc_ || !basis_->same_basis(*o.basis_)) return false;
    DoubleTensor d = *this;
    d -= o;
    return d.is_zero();
}

DoubleTensor mul(const DoubleTensor &u, const DoubleTensor &v) {
    const int N = u.trunc_;
    const int rank = u.basis_->rank();
    DoubleTensor out(u.basis_, N);
    for (int a1 = 0; a1 <= N; ++a1)
        for (int b1 = 0; a1 + b1 <= N; ++b1) {
            const auto &ub = u.blocks_[a1][b1];
            if (ub.empty()) continue;
            const std::size_t nb1 = ipow(rank, b1);
            for (int a2 = 0; a1 + b1 + a2 <= N; ++a2)
                for (int b2 = 0; a1 + b1 + a2 + b2 <= N; ++b2) {
                    const auto &vb = v.blocks_[a2][b2];
                    if (vb.empty()) continue;
                    const std::size_t nb2 = ipow(rank, b2);
                    const std::size_t na2 = ipow(rank, a2);
                    for (std::size_t i = 0; i < ub.size(); ++i) {
                        if (ub[i] == 0) continue;
                        const std::size_t ia1 = i / nb1, ib1 = i % nb1;
                        for (std::size_t j = 0; j < vb.size(); ++j) {
                            if (vb[j] == 0) continue;
                            const std::size_t ia2 = j / nb2, ib2 = j % nb2;
                            out.add_coef(a1 + a2, b1 + b2, ia1 * na2 + ia2,
                                         ib1 * nb2 + ib2, ub[i] * vb[j]);
                        }
                    }
                }
        }
    return out;
}

DoubleTensor tensor_pair(const TruncatedTensor &u, const TruncatedTensor &v) {
    DoubleTensor out(u.basis(), u.trunc());
    for (int a = 0; a <= u.trunc(); ++a) {
        const auto &ua = u.block(a);
        if (ua.empty()) continue;
        for (int b = 0; a + b <= u.trunc(); ++b) {
            const auto &vb = v.block(b);
            if (vb.empty()) continue;
            for (std::size_t i = 0; i < ua.size(); ++i) {
                if (ua[i] == 0) continue;
                for (std::size_t j = 0; j < vb.size(); ++j)
                    if (vb[j] != 0) out.add_coef(a, b, i, j, ua[i] * vb[j]);
            }
        }
    }
    return out;
}

DoubleTensor coproduct(const TruncatedTensor &u) {
    const int rank = u.rank();
    DoubleTensor out(u.basis(), u.trunc());
    std::vector<int> w;
    for (int m = 0; m <= u.trunc(); ++m) {
        const auto &blk = u.block(m);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            decode_word(i, rank, m, w);
            // Delta(X1...Xm) = sum over subsets S of {1..m} of w|S ox w|S^c
            for (std::size_t s = 0; s < (static_cast<std::size_t>(1) << m); ++s) {
                std::size_t ia = 0, ib = 0;
                int da = 0, db = 0;
                for (int pos = 0; pos < m; ++pos) {
                    if (s & (static_cast<std::size_t>(1) << pos)) {
                        ia = ia * rank + static_cast<std::size_t>(w[pos]);
                        ++da;
                    } else {
                        ib = ib * rank + static_cast<std::size_t>(w[pos]);
                        ++db;
                    }
                }
                out.add_coef(da, db, ia, ib, blk[i]);
            }
        }
    }
    return out;
}

bool is_group_like(const TruncatedTensor &u) {
    if (u.coef(0, 0) != 1) return false;
    return coproduct(u) == tensor_pair(u, u);
}

bool is_lie_like(const TruncatedTensor &u) {
    const auto one = TruncatedTensor::unit(u.basis(), u.trunc());
    DoubleTensor expected = tensor_pair(u, one);
    expected += tensor_pair(one, u);
    return coproduct(u) == expected;
}

TruncatedTensor symplectic_form(HomologyRef h, int trunc) {
    TruncatedTensor w(h, trunc);
    for (int i = 0; i < h->genus; ++i) {
        w += mul(TruncatedTensor::letter(h, trunc, 2 * i),
                 TruncatedTensor::letter(h, trunc, 2 * i + 1));
        w -= mul(TruncatedTensor::letter(h, trunc, 2 * i + 1),
                 TruncatedTensor::letter(h, trunc, 2 * i));
    }
    return w;
}

std::vector<TruncatedTensor> commutant_basis(const TruncatedTensor &v, int max_deg) {
    int d = -1;
    for (int m = 0; m <= v.trunc(); ++m) {
        bool nz = false;
        for (const auto &c : v.block(m))
            if (c != 0) { nz = true; break; }
        if (nz) {
            if (d >= 0) throw DomainError("commutant: v must be homogeneous");
            d = m;
        }
    }
    if (d < 1) throw DomainError("commutant: v must be homogeneous of degree >= 1");
    if (max_deg < 0 || max_deg + d > v.trunc())
        throw DomainError("commutant: truncation too small for requested degree");

    const int rank = v.rank();
    const auto &vblk = v.block(d);
    std::vector<TruncatedTensor> result;
    for (int m = 0; m <= max_deg; ++m) {
        const std::size_t ncols = ipow(rank, m);
        const std::size_t nrows = ipow(rank, m + d);
        RatMatrix a(nrows, std::vector<Rat>(ncols, Rat(0)));
        const std::size_t shift_m = ipow(rank, m);
        const std::size_t shift_d = ipow(rank, d);
        for (std::size_t i = 0; i < vblk.size(); ++i) {
            if (vblk[i] == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) {
                a[i * shift_m + j][j] += vblk[i]; // v w
                a[j * shift_d + i][j] -= vblk[i]; // -w v
            }
        }
        for (auto &vec : kernel_basis(a, static_cast<int>(ncols))) {
            TruncatedTensor t(v.basis(), v.trunc());
            for (std::size_t j = 0; j < vec.size(); ++j)
                if (vec[j] != 0) t.add_coef(m, j, vec[j]);
            result.push_back(std::move(t));
        }
    }
    return result;
}

std::vector<Rat> dualize(const HomologyRef &h, int letter_index) {
    if (!h->nondegenerate())
        throw ConfigError("dualize needs a nondegenerate pairing (r = 1)");
    std::vector<Rat> row(h->rank());
    for (int y = 0; y < h->rank(); ++y) row[y] = h->pair(y, letter_index);
    return row;
}

} // namespace loopalg
