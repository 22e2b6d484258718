#pragma once

#include "sparse.hpp"

#include <optional>
#include <vector>

namespace hopfcyc {

// Gauss–Jordan span with the deterministic pivot rule: a new pivot sits at the
// first nonzero index of the reduced vector, and all pivots stay mutually
// reduced.  Optionally carries a "tag" vector per pivot through the same row
// operations (used for kernel combinations and quotient coordinates).
template <class S>
class ReducedSpan {
public:
    struct Pivot {
        int row;
        SparseVec<S> v;   // v.at(row) == 1, zero at every other pivot row
        SparseVec<S> tag;
    };

    ReducedSpan() = default;
    ReducedSpan(int dim, int tag_dim) : dim_(dim), tag_dim_(tag_dim) {}

    int dim() const { return dim_; }
    int rank() const { return (int)piv_.size(); }
    const std::vector<Pivot>& pivots() const { return piv_; }

    // Reduce (v, tag) against the pivots; the residual vanishes iff v lies in
    // the span.
    std::pair<SparseVec<S>, SparseVec<S>> reduce(SparseVec<S> v, SparseVec<S> tag) const
    {
        for (const auto& p : piv_) {
            S c = v.at(p.row);
            if (!is_zero(c)) {
                v.axpy(-c, p.v);
                tag.axpy(-c, p.tag);
            }
        }
        return {std::move(v), std::move(tag)};
    }
    SparseVec<S> residual(const SparseVec<S>& v) const
    {
        return reduce(v, SparseVec<S>(tag_dim_)).first;
    }
    bool contains(const SparseVec<S>& v) const { return residual(v).is_zero(); }

    // Returns the pivot index if v grew the span, nullopt otherwise (in which
    // case *dependent_tag, when given, receives the reduced tag).
    std::optional<int> insert(SparseVec<S> v, SparseVec<S> tag,
                              SparseVec<S>* dependent_tag = nullptr)
    {
        auto [r, t] = reduce(std::move(v), std::move(tag));
        if (r.is_zero()) {
            if (dependent_tag)
                *dependent_tag = std::move(t);
            return std::nullopt;
        }
        int row = r.ent.front().first; // first nonzero, in index order
        S inv = S(1) / r.ent.front().second;
        r.scale(inv);
        t.scale(inv);
        // keep earlier pivots reduced at the new pivot row
        for (auto& p : piv_) {
            S c = p.v.at(row);
            if (!is_zero(c)) {
                p.v.axpy(-c, r);
                p.tag.axpy(-c, t);
            }
        }
        piv_.push_back({row, std::move(r), std::move(t)});
        return row;
    }
    std::optional<int> insert(SparseVec<S> v) { return insert(std::move(v), SparseVec<S>(tag_dim_)); }

    bool is_pivot_row(int row) const
    {
        for (const auto& p : piv_)
            if (p.row == row)
                return true;
        return false;
    }

private:
    int dim_ = 0;
    int tag_dim_ = 0;
    std::vector<Pivot> piv_;
};

template <class S>
struct RankKernel {
    int rank = 0;
    std::vector<SparseVec<S>> kernel; // vectors in the source space
};

// Exact rank and kernel basis; pivot choice and kernel basis are fully
// deterministic (columns left to right, first-nonzero pivot rule).
template <class S>
RankKernel<S> rank_and_kernel(const SparseMap<S>& m)
{
    ReducedSpan<S> span(m.rows, m.cols);
    RankKernel<S> out;
    for (int j = 0; j < m.cols; ++j) {
        SparseVec<S> dep;
        if (!span.insert(m.col[j], unit_vec<S>(m.cols, j), &dep))
            out.kernel.push_back(std::move(dep));
    }
    out.rank = span.rank();
    return out;
}

template <class S>
int rank_of(const SparseMap<S>& m)
{
    ReducedSpan<S> span(m.rows, 0);
    for (int j = 0; j < m.cols; ++j)
        span.insert(m.col[j]);
    return span.rank();
}

// dim ker(d_out) - rank(d_in) at one position of a complex; insists the pair
// actually is a complex.
template <class S>
int homology_dimension(const SparseMap<S>& d_in, const SparseMap<S>& d_out)
{
    if (d_in.rows != d_out.cols)
        throw DimensionError("homology_dimension: d_in.target != d_out.source");
    if (!d_out.compose(d_in).is_zero_map())
        throw Error("homology_dimension: d_out ∘ d_in != 0 (broken complex)");
    auto rk_out = rank_of(d_out);
    int ker_out = d_out.cols - rk_out;
    int h = ker_out - rank_of(d_in);
    if (h < 0)
        throw Error("homology_dimension: negative result (image not inside kernel?)");
    return h;
}

// Inverse of a square map, or nullopt when singular.
template <class S>
std::optional<SparseMap<S>> inverse_of(const SparseMap<S>& m)
{
    if (m.rows != m.cols)
        return std::nullopt;
    ReducedSpan<S> span(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        if (!span.insert(m.col[j], unit_vec<S>(m.cols, j)))
            return std::nullopt;
    // every pivot satisfies pivot.v = m · pivot.tag; solve m·x = e_i per column
    SparseMap<S> inv(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        auto [r, t] = span.reduce(unit_vec<S>(m.rows, i), SparseVec<S>(m.cols));
        if (!r.is_zero())
            return std::nullopt;
        SparseVec<S> c(m.cols);
        for (const auto& [k, x] : t.ent)
            c.ent.push_back({k, -x});
        inv.col[i] = c;
    }
    return inv;
}

// A subquotient U/W of an ambient space, presented by a deterministic
// complement basis (the representatives).  project() expresses a vector of U
// in the representative basis modulo W; lift() goes back.
template <class S>
class Subquotient {
public:
    Subquotient() = default;

    // Quotient of the whole ambient space by span(w_gens).
    static Subquotient quotient(int ambient, const std::vector<SparseVec<S>>& w_gens)
    {
        Subquotient q;
        q.ambient_ = ambient;
        q.red_ = ReducedSpan<S>(ambient, ambient);
        for (const auto& w : w_gens)
            q.red_.insert(w, SparseVec<S>(ambient));
        for (int i = 0; i < ambient; ++i)
            q.try_rep(unit_vec<S>(ambient, i));
        return q;
    }

    // span(u_gens) / span(w_gens); requires W ⊆ U (checked).
    static Subquotient subquotient(int ambient, const std::vector<SparseVec<S>>& u_gens,
                                   const std::vector<SparseVec<S>>& w_gens)
    {
        {
            ReducedSpan<S> u(ambient, 0);
            for (const auto& g : u_gens)
                u.insert(g);
            for (const auto& w : w_gens)
                if (!u.contains(w))
                    throw Error("subquotient: W is not contained in U");
        }
        Subquotient q;
        q.ambient_ = ambient;
        q.red_ = ReducedSpan<S>(ambient, ambient);
        for (const auto& w : w_gens)
            q.red_.insert(w, SparseVec<S>(ambient));
        for (const auto& u : u_gens)
            q.try_rep(u);
        return q;
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return (int)reps_.size(); }
    const std::vector<SparseVec<S>>& reps() const { return reps_; }

    // Coordinates of v modulo W w.r.t. the representative basis; throws if v
    // is not in U + W (i.e. the class is not expressible).
    SparseVec<S> project(const SparseVec<S>& v) const
    {
        auto [r, t] = red_.reduce(v, SparseVec<S>(ambient_));
        if (!r.is_zero())
            throw Error("subquotient projection: vector not in the subspace");
        SparseVec<S> coords((int)reps_.size());
        for (const auto& [k, c] : t.ent)
            coords.ent.push_back({k, -c});
        return coords;
    }
    bool in_subspace(const SparseVec<S>& v) const { return red_.contains(v); }

    SparseVec<S> lift(const SparseVec<S>& coords) const
    {
        SparseVec<S> v(ambient_);
        for (const auto& [k, c] : coords.ent)
            v.axpy(c, reps_[k]);
        return v;
    }

    // Projection as a matrix (only valid when U is the whole ambient space).
    SparseMap<S> projection_map() const
    {
        SparseMap<S> m((int)reps_.size(), ambient_);
        for (int j = 0; j < ambient_; ++j)
            m.col[j] = project(unit_vec<S>(ambient_, j));
        return m;
    }
    SparseMap<S> inclusion_map() const
    {
        SparseMap<S> m(ambient_, (int)reps_.size());
        for (int k = 0; k < (int)reps_.size(); ++k)
            m.col[k] = reps_[k];
        return m;
    }

private:
    void try_rep(const SparseVec<S>& v)
    {
        // Insert the fully reduced residual as the representative; its tag e_k
        // keeps the invariant "pivot.v ≡ Σ_j pivot.tag_j · reps_j (mod W)"
        // through all later Jordan updates.
        SparseVec<S> canon = red_.residual(v);
        if (canon.is_zero())
            return;
        int k = (int)reps_.size();
        reps_.push_back(canon);
        red_.insert(std::move(canon), unit_vec<S>(ambient_, k));
    }

    int ambient_ = 0;
    std::vector<SparseVec<S>> reps_;
    ReducedSpan<S> red_;
};

// Homology ker(d_out)/im(d_in) with representatives.
template <class S>
Subquotient<S> homology_subquotient(const SparseMap<S>& d_in, const SparseMap<S>& d_out)
{
    if (d_in.rows != d_out.cols)
        throw DimensionError("homology_subquotient: d_in.target != d_out.source");
    if (!d_out.compose(d_in).is_zero_map())
        throw Error("homology_subquotient: d_out ∘ d_in != 0 (broken complex)");
    auto kk = rank_and_kernel(d_out);
    std::vector<SparseVec<S>> image(d_in.col.begin(), d_in.col.end());
    return Subquotient<S>::subquotient(d_out.cols, kk.kernel, image);
}

// Map induced on subquotients by op (must send U->U' and W->W'; the U
// condition is enforced by project, the W condition can be checked with
// check_descends).
template <class S>
SparseMap<S> induced_map(const SparseMap<S>& op, const Subquotient<S>& src,
                         const Subquotient<S>& tgt)
{
    SparseMap<S> m(tgt.dim(), src.dim());
    for (int k = 0; k < src.dim(); ++k)
        m.col[k] = tgt.project(op.apply(src.reps()[k]));
    return m;
}

// op(w) must be zero in the target subquotient for every generator w of W.
template <class S>
bool check_descends(const SparseMap<S>& op, const std::vector<SparseVec<S>>& w_gens,
                    const Subquotient<S>& tgt)
{
    for (const auto& w : w_gens) {
        auto img = op.apply(w);
        if (!tgt.in_subspace(img))
            return false;
        if (!tgt.project(img).is_zero())
            return false;
    }
    return true;
}

} // namespace hopfcyc
