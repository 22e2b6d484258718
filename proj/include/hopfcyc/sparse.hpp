#pragma once

#include "based.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace hopfcyc {

// Sparse vector: sorted (index, scalar) pairs, scalars nonzero.
template <class S>
struct SparseVec {
    int dim = 0;
    std::vector<std::pair<int, S>> ent;

    SparseVec() = default;
    explicit SparseVec(int d) : dim(d) {}

    bool is_zero() const { return ent.empty(); }
    int nnz() const { return (int)ent.size(); }

    S at(int i) const
    {
        auto it = std::lower_bound(ent.begin(), ent.end(), i,
                                   [](const auto& p, int k) { return p.first < k; });
        if (it != ent.end() && it->first == i)
            return it->second;
        return S(0);
    }

    void set(int i, const S& c)
    {
        auto it = std::lower_bound(ent.begin(), ent.end(), i,
                                   [](const auto& p, int k) { return p.first < k; });
        if (it != ent.end() && it->first == i) {
            if (hopfcyc::is_zero(c))
                ent.erase(it);
            else
                it->second = c;
        } else if (!hopfcyc::is_zero(c)) {
            ent.insert(it, {i, c});
        }
    }

    // this += c * other
    void axpy(const S& c, const SparseVec& other)
    {
        if (hopfcyc::is_zero(c) || other.ent.empty())
            return;
        std::vector<std::pair<int, S>> out;
        out.reserve(ent.size() + other.ent.size());
        auto a = ent.begin();
        auto b = other.ent.begin();
        while (a != ent.end() || b != other.ent.end()) {
            if (b == other.ent.end() || (a != ent.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == ent.end() || b->first < a->first) {
                S v = c * b->second;
                if (!hopfcyc::is_zero(v))
                    out.push_back({b->first, v});
                ++b;
            } else {
                S v = a->second + c * b->second;
                if (!hopfcyc::is_zero(v))
                    out.push_back({a->first, v});
                ++a;
                ++b;
            }
        }
        ent = std::move(out);
    }

    void scale(const S& c)
    {
        if (hopfcyc::is_zero(c)) {
            ent.clear();
            return;
        }
        for (auto& [i, v] : ent)
            v = v * c;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b)
    {
        return a.dim == b.dim && a.ent == b.ent;
    }
};

template <class S>
SparseVec<S> unit_vec(int dim, int i)
{
    SparseVec<S> v(dim);
    v.ent.push_back({i, S(1)});
    return v;
}

// Accumulator for building a sparse vector out of unordered contributions.
template <class S>
class VecBuilder {
public:
    explicit VecBuilder(int dim) : dim_(dim) {}
    void add(int i, const S& c)
    {
        auto [it, fresh] = acc_.try_emplace(i, c);
        if (!fresh)
            it->second = it->second + c;
    }
    SparseVec<S> take()
    {
        SparseVec<S> v(dim_);
        v.ent.reserve(acc_.size());
        for (auto& [i, c] : acc_)
            if (!hopfcyc::is_zero(c))
                v.ent.push_back({i, c});
        acc_.clear();
        return v;
    }

private:
    int dim_;
    std::map<int, S> acc_;
};

// Sparse linear map, stored column-major (column j = image of basis vector j).
template <class S>
struct SparseMap {
    int rows = 0, cols = 0;
    std::vector<SparseVec<S>> col;

    SparseMap() = default;
    SparseMap(int r, int c) : rows(r), cols(c), col(c, SparseVec<S>(r))
    {
        guard_dimension(r, "map target");
        guard_dimension(c, "map source");
    }

    static SparseMap identity(int n)
    {
        SparseMap m(n, n);
        for (int i = 0; i < n; ++i)
            m.col[i].ent.push_back({i, S(1)});
        return m;
    }
    static SparseMap zero(int r, int c) { return SparseMap(r, c); }

    void add_entry(int r, int c, const S& v)
    {
        if (!hopfcyc::is_zero(v))
            col[c].set(r, col[c].at(r) + v);
    }

    long long nnz() const
    {
        long long n = 0;
        for (const auto& cv : col)
            n += cv.nnz();
        return n;
    }

    SparseVec<S> apply(const SparseVec<S>& x) const
    {
        if (x.dim != cols)
            throw DimensionError("apply: vector dim " + std::to_string(x.dim)
                                 + " != map source " + std::to_string(cols));
        SparseVec<S> y(rows);
        for (const auto& [j, c] : x.ent)
            y.axpy(c, col[j]);
        return y;
    }

    // this ∘ g
    SparseMap compose(const SparseMap& g) const
    {
        if (cols != g.rows)
            throw DimensionError("compose: inner dims " + std::to_string(cols) + " vs "
                                 + std::to_string(g.rows));
        SparseMap out(rows, g.cols);
        for (int j = 0; j < g.cols; ++j)
            out.col[j] = apply(g.col[j]);
        return out;
    }

    SparseMap& operator+=(const SparseMap& o)
    {
        if (rows != o.rows || cols != o.cols)
            throw DimensionError("add: shape mismatch");
        for (int j = 0; j < cols; ++j)
            col[j].axpy(S(1), o.col[j]);
        return *this;
    }
    friend SparseMap operator+(SparseMap a, const SparseMap& b) { return a += b; }
    friend SparseMap operator-(SparseMap a, const SparseMap& b)
    {
        SparseMap nb = b;
        nb.scale(S(-1));
        return a += nb;
    }
    void scale(const S& c)
    {
        for (auto& cv : col)
            cv.scale(c);
    }

    friend bool operator==(const SparseMap& a, const SparseMap& b)
    {
        return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
    }

    bool is_zero_map() const
    {
        for (const auto& cv : col)
            if (!cv.is_zero())
                return false;
        return true;
    }
    bool is_identity() const { return rows == cols && *this == identity(rows); }

    // Kronecker product under the shared flat ordering (rightmost fastest):
    // column (j_a, j_b) -> j_a*b.cols + j_b, same for rows.
    SparseMap kron(const SparseMap& b) const
    {
        guard_dimension((long long)rows * b.rows, "tensor map target");
        guard_dimension((long long)cols * b.cols, "tensor map source");
        SparseMap out(rows * b.rows, cols * b.cols);
        for (int ja = 0; ja < cols; ++ja)
            for (int jb = 0; jb < b.cols; ++jb) {
                SparseVec<S>& c = out.col[(long long)ja * b.cols + jb];
                for (const auto& [ra, va] : col[ja].ent)
                    for (const auto& [rb, vb] : b.col[jb].ent)
                        c.ent.push_back({(int)((long long)ra * b.rows + rb), va * vb});
                std::sort(c.ent.begin(), c.ent.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
            }
        return out;
    }
};

// n-fold Kronecker product, left fold.
template <class S>
SparseMap<S> tensor_map(const std::vector<SparseMap<S>>& fs)
{
    if (fs.empty())
        throw InputError("tensor_map: empty factor list");
    SparseMap<S> out = fs[0];
    for (size_t k = 1; k < fs.size(); ++k)
        out = out.kron(fs[k]);
    return out;
}

template <class S>
SparseMap<S> compose(const SparseMap<S>& f, const SparseMap<S>& g)
{
    return f.compose(g);
}

// Permutation of tensor factors: factor k of the source becomes factor
// perm[k] of the target.
template <class S>
SparseMap<S> factor_permutation(const std::vector<int>& dims, const std::vector<int>& perm)
{
    TensorBasisIndexer src(dims);
    std::vector<int> tdims(dims.size());
    for (size_t k = 0; k < dims.size(); ++k)
        tdims[perm[k]] = dims[k];
    TensorBasisIndexer tgt(tdims);
    SparseMap<S> m((int)tgt.total(), (int)src.total());
    std::vector<int> tidx(dims.size());
    for (long long j = 0; j < src.total(); ++j) {
        auto idx = src.decode(j);
        for (size_t k = 0; k < dims.size(); ++k)
            tidx[perm[k]] = idx[k];
        m.col[j].ent.push_back({(int)tgt.encode(tidx), S(1)});
    }
    return m;
}

} // namespace hopfcyc
