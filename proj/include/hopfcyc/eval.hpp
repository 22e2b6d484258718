#pragma once

#include "hopf.hpp"

namespace hopfcyc {

// Sweedler-sum expansion context: everything the operator constructors need
// to turn a structure-constant formula into matrix columns.
template <class S>
struct ExpandCtx {
    OpTables<S> t;

    explicit ExpandCtx(const ModuleAlgebraData<S>& m) : t(OpTables<S>::from(m)) {}

    // Δⁿ(e_h) as a list of (component tuple of length n+1, coefficient)
    std::vector<std::pair<std::vector<int>, S>> sweedler(int h, int n) const
    {
        std::vector<std::pair<std::vector<int>, S>> out = {{{h}, S(1)}};
        for (int k = 0; k < n; ++k) {
            std::vector<std::pair<std::vector<int>, S>> next;
            for (const auto& [tup, c] : out)
                for (const auto& [uv, cc] : t.comul[tup.back()]) {
                    auto nt = tup;
                    nt.back() = uv.first;
                    nt.push_back(uv.second);
                    next.push_back({std::move(nt), c * cc});
                }
            out = std::move(next);
        }
        return out;
    }

    // ordered product of H basis elements (empty product = 1)
    SparseVec<S> prod_h(const std::vector<int>& xs) const
    {
        SparseVec<S> acc = t.unit_h;
        if (!xs.empty()) {
            acc = unit_vec<S>(t.dim_h, xs[0]);
            for (size_t k = 1; k < xs.size(); ++k) {
                VecBuilder<S> out(t.dim_h);
                for (const auto& [i, c] : acc.ent)
                    for (const auto& [r, cc] : t.mul_h[i][xs[k]].ent)
                        out.add(r, c * cc);
                acc = out.take();
            }
        }
        return acc;
    }

    SparseVec<S> antipode_vec(const SparseVec<S>& v, bool inverse) const
    {
        const auto& tab = inverse ? t.antipode_inv : t.antipode;
        if (tab.empty())
            throw InputError(inverse ? "antipode inverse required but absent"
                                     : "antipode required but absent");
        VecBuilder<S> out(t.dim_h);
        for (const auto& [i, c] : v.ent)
            for (const auto& [r, cc] : tab[i].ent)
                out.add(r, c * cc);
        return out.take();
    }

    SparseVec<S> act_vec(const SparseVec<S>& hv, int a) const
    {
        VecBuilder<S> out(t.dim_a);
        for (const auto& [h, c] : hv.ent)
            for (const auto& [r, cc] : t.act[h][a].ent)
                out.add(r, c * cc);
        return out.take();
    }

    SparseVec<S> mul_a_vec(const SparseVec<S>& x, int y) const
    {
        VecBuilder<S> out(t.dim_a);
        for (const auto& [i, c] : x.ent)
            for (const auto& [r, cc] : t.mul_a[i][y].ent)
                out.add(r, c * cc);
        return out.take();
    }
    SparseVec<S> mul_a_vec2(int x, const SparseVec<S>& y) const
    {
        VecBuilder<S> out(t.dim_a);
        for (const auto& [j, c] : y.ent)
            for (const auto& [r, cc] : t.mul_a[x][j].ent)
                out.add(r, c * cc);
        return out.take();
    }

    // h-vector acting elementwise on an a-vector
    SparseVec<S> act_vec2(const SparseVec<S>& hv, const SparseVec<S>& av) const
    {
        VecBuilder<S> out(t.dim_a);
        for (const auto& [h, c] : hv.ent)
            for (const auto& [a, ca] : av.ent)
                for (const auto& [r, cc] : t.act[h][a].ent)
                    out.add(r, c * ca * cc);
        return out.take();
    }

    SparseVec<S> mul_h_vec(const SparseVec<S>& x, const SparseVec<S>& y) const
    {
        VecBuilder<S> out(t.dim_h);
        for (const auto& [i, ci] : x.ent)
            for (const auto& [j, cj] : y.ent)
                for (const auto& [r, cc] : t.mul_h[i][j].ent)
                    out.add(r, ci * cj * cc);
        return out.take();
    }
};

// Enumerate a cartesian product of per-factor expansions; hands each combined
// choice (one pick per factor, coefficients multiplied) to the sink.
template <class S, class Item, class F>
void for_each_choice(const std::vector<std::vector<std::pair<Item, S>>>& options, F&& sink)
{
    std::vector<int> pick(options.size(), 0);
    while (true) {
        S coeff(1);
        std::vector<const Item*> items(options.size());
        bool dead = false;
        for (size_t k = 0; k < options.size(); ++k) {
            if (options[k].empty()) {
                dead = true;
                break;
            }
            items[k] = &options[k][pick[k]].first;
            coeff = coeff * options[k][pick[k]].second;
        }
        if (dead)
            return;
        sink(items, coeff);
        int k = (int)options.size() - 1;
        while (k >= 0 && ++pick[k] == (int)options[k].size())
            pick[k--] = 0;
        if (k < 0)
            return;
    }
}

} // namespace hopfcyc
