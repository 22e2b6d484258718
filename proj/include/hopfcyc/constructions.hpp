#pragma once

#include "cyclic.hpp"
#include "eval.hpp"

namespace hopfcyc {

/*
 * Layout conventions, used by every constructor below.
 *
 * Cylinder level (p,q) = H^{⊗(p+1)} ⊗ A^{⊗(q+1)}, flat order
 * [H_0..H_p, A_0..A_q] under the shared indexer (rightmost fastest).
 *
 *  - generic variant: A-slot j carries the tuple entry written a_{q-j}
 *    (elements are displayed right-to-left), so the cyclic operator rotates
 *    A-slots to the left and twists the wrapped entry by S(∏ first-leg
 *    coproduct components).
 *  - op_cop variant: A-slot j carries a_j (direct indexing) and the twist
 *    uses S⁻¹; this is the same module up to reversing the A-slots of the
 *    generic construction applied to (A^op, H^cop).
 *
 * The crossed product A⋊H lives on A⊗H with flat index a·dimH + g.
 */

template <class S>
class CylinderBuilder {
public:
    enum class Variant { generic, op_cop };

    CylinderBuilder(const ModuleAlgebraData<S>& m, Variant v) : ctx_(m), variant_(v)
    {
        if (v == Variant::generic && ctx_.t.antipode.empty())
            throw InputError("cylinder: antipode required");
        if (v == Variant::op_cop && ctx_.t.antipode_inv.empty())
            throw InputError("cylinder (op/cop variant): antipode inverse required");
    }

    const ExpandCtx<S>& ctx() const { return ctx_; }
    int dim_h() const { return ctx_.t.dim_h; }
    int dim_a() const { return ctx_.t.dim_a; }

    TensorBasisIndexer indexer(int p, int q) const
    {
        std::vector<int> dims(p + 1, dim_h());
        dims.insert(dims.end(), q + 1, dim_a());
        return TensorBasisIndexer(std::move(dims));
    }
    int level_dim(int p, int q) const { return (int)indexer(p, q).total(); }

    /* horizontal operators (move q) */

    SparseMap<S> htau(int p, int q) const
    {
        return build(p, q, p, q, [&](const std::vector<int>& idx, auto&& emit) {
            with_comul_legs(idx, p, [&](const std::vector<int>& keep, const SparseVec<S>& leg_prod,
                                        const S& c0) {
                // generic: S(∏ second legs) acts on A-slot 0, A rotates left
                // op_cop:  S⁻¹(∏ first legs) acts on A-slot q, A rotates right
                bool gen = variant_ == Variant::generic;
                SparseVec<S> s = ctx_.antipode_vec(leg_prod, !gen);
                SparseVec<S> acted = ctx_.act_vec2(s, unit_vec<S>(dim_a(), a_at(idx, p, gen ? 0 : q)));
                for (const auto& [av, ca] : acted.ent) {
                    std::vector<int> out = keep;
                    if (gen) {
                        for (int j = 1; j <= q; ++j)
                            out.push_back(a_at(idx, p, j));
                        out.push_back(av);
                    } else {
                        out.push_back(av);
                        for (int j = 0; j < q; ++j)
                            out.push_back(a_at(idx, p, j));
                    }
                    emit(out, c0 * ca);
                }
            });
        });
    }

    SparseMap<S> hface(int p, int q, int i) const
    {
        bool gen = variant_ == Variant::generic;
        if (i < q) {
            // adjacent product; generic merges slots (q-i-1, q-i), op_cop (i, i+1)
            int lo = gen ? q - i - 1 : i;
            return build(p, q, p, q - 1, [&](const std::vector<int>& idx, auto&& emit) {
                auto prod = ctx_.mul_a_vec(unit_vec<S>(dim_a(), a_at(idx, p, lo)),
                                           a_at(idx, p, lo + 1));
                for (const auto& [av, c] : prod.ent) {
                    std::vector<int> out(idx.begin(), idx.begin() + p + 1);
                    for (int j = 0; j <= q; ++j) {
                        if (j == lo)
                            out.push_back(av);
                        else if (j != lo + 1)
                            out.push_back(a_at(idx, p, j));
                    }
                    emit(out, c);
                }
            });
        }
        // the twisted last face = ∂_0 ∘ τ (generic) resp. merge-at-front ∘ τ (op_cop)
        return build(p, q, p, q - 1, [&](const std::vector<int>& idx, auto&& emit) {
            with_comul_legs(idx, p, [&](const std::vector<int>& keep, const SparseVec<S>& leg_prod,
                                        const S& c0) {
                bool g = variant_ == Variant::generic;
                SparseVec<S> s = ctx_.antipode_vec(leg_prod, !g);
                SparseVec<S> acted = ctx_.act_vec2(s, unit_vec<S>(dim_a(), a_at(idx, p, g ? 0 : q)));
                if (g) {
                    // (a_{q-1},...,a_1, a_0·(S(..)·a_q))
                    auto prod = ctx_.mul_a_vec2(a_at(idx, p, q), acted);
                    for (const auto& [av, ca] : prod.ent) {
                        std::vector<int> out = keep;
                        for (int j = 1; j <= q - 1; ++j)
                            out.push_back(a_at(idx, p, j));
                        out.push_back(av);
                        emit(out, c0 * ca);
                    }
                } else {
                    // ((S⁻¹(..)·a_q)·a_0, a_1,...,a_{q-1})
                    VecBuilder<S> prod(dim_a());
                    for (const auto& [x, cx] : acted.ent)
                        for (const auto& [r, cr] : ctx_.t.mul_a[x][a_at(idx, p, 0)].ent)
                            prod.add(r, cx * cr);
                    for (const auto& [av, ca] : prod.take().ent) {
                        std::vector<int> out = keep;
                        out.push_back(av);
                        for (int j = 1; j <= q - 1; ++j)
                            out.push_back(a_at(idx, p, j));
                        emit(out, c0 * ca);
                    }
                }
            });
        });
    }

    SparseMap<S> hdegen(int p, int q, int i) const
    {
        bool gen = variant_ == Variant::generic;
        int pos = gen ? q - i : i + 1; // A-slot receiving the inserted unit
        return build(p, q, p, q + 1, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [uv, cu] : ctx_.t.unit_a.ent) {
                std::vector<int> out(idx.begin(), idx.begin() + p + 1);
                for (int j = 0; j <= q + 1; ++j) {
                    if (j == pos)
                        out.push_back(uv);
                    else
                        out.push_back(a_at(idx, p, j < pos ? j : j - 1));
                }
                emit(out, cu);
            }
        });
    }

    /* vertical operators (move p) */

    SparseMap<S> vtau(int p, int q) const
    {
        return build(p, q, p, q, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [comps, c0] : ctx_.sweedler(idx[p], q + 1)) {
                bool gen = variant_ == Variant::generic;
                // generic: leading component to the front, the rest act in order
                // op_cop: trailing component to the front, the rest act in order
                int head = gen ? comps[0] : comps[q + 1];
                std::vector<int> out;
                out.push_back(head);
                for (int i = 0; i < p; ++i)
                    out.push_back(idx[i]);
                std::vector<std::vector<std::pair<int, S>>> opts(q + 1);
                for (int j = 0; j <= q; ++j) {
                    int comp = gen ? comps[1 + j] : comps[j];
                    const auto& av = ctx_.t.act[comp][a_at(idx, p, j)];
                    opts[j].assign(av.ent.begin(), av.ent.end());
                }
                for_each_choice<S, int>(opts, [&](const std::vector<const int*>& items, S cc) {
                    std::vector<int> full = out;
                    for (int j = 0; j <= q; ++j)
                        full.push_back(*items[j]);
                    emit(full, c0 * cc);
                });
            }
        });
    }

    SparseMap<S> vface(int p, int q, int j) const
    {
        if (j < p) {
            return build(p, q, p - 1, q, [&](const std::vector<int>& idx, auto&& emit) {
                auto prod = ctx_.mul_h_vec(unit_vec<S>(dim_h(), idx[j]),
                                           unit_vec<S>(dim_h(), idx[j + 1]));
                for (const auto& [hv, c] : prod.ent) {
                    std::vector<int> out;
                    for (int k = 0; k <= p; ++k) {
                        if (k == j)
                            out.push_back(hv);
                        else if (k != j + 1)
                            out.push_back(idx[k]);
                    }
                    for (int t = 0; t <= q; ++t)
                        out.push_back(a_at(idx, p, t));
                    emit(out, c);
                }
            });
        }
        // last vertical face = merge-at-front ∘ vtau
        return build(p, q, p - 1, q, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [comps, c0] : ctx_.sweedler(idx[p], q + 1)) {
                bool gen = variant_ == Variant::generic;
                int head = gen ? comps[0] : comps[q + 1];
                auto prod = ctx_.mul_h_vec(unit_vec<S>(dim_h(), head),
                                           unit_vec<S>(dim_h(), idx[0]));
                std::vector<std::vector<std::pair<int, S>>> opts(q + 1);
                for (int t = 0; t <= q; ++t) {
                    int comp = gen ? comps[1 + t] : comps[t];
                    const auto& av = ctx_.t.act[comp][a_at(idx, p, t)];
                    opts[t].assign(av.ent.begin(), av.ent.end());
                }
                for (const auto& [hv, ch] : prod.ent)
                    for_each_choice<S, int>(opts, [&](const std::vector<const int*>& items, S cc) {
                        std::vector<int> out;
                        out.push_back(hv);
                        for (int k = 1; k < p; ++k)
                            out.push_back(idx[k]);
                        for (int t = 0; t <= q; ++t)
                            out.push_back(*items[t]);
                        emit(out, c0 * ch * cc);
                    });
            }
        });
    }

    SparseMap<S> vdegen(int p, int q, int j) const
    {
        return build(p, q, p + 1, q, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [uv, cu] : ctx_.t.unit_h.ent) {
                std::vector<int> out;
                for (int k = 0; k <= p + 1; ++k) {
                    if (k == j + 1)
                        out.push_back(uv);
                    else
                        out.push_back(idx[k < j + 1 ? k : k - 1]);
                }
                for (int t = 0; t <= q; ++t)
                    out.push_back(a_at(idx, p, t));
                emit(out, cu);
            }
        });
    }

    CylindricalModule<S> build_module(int p_max, int q_max) const
    {
        CylindricalModule<S> c;
        c.allocate(p_max, q_max);
        for (int p = 0; p <= p_max; ++p)
            for (int q = 0; q <= q_max; ++q) {
                c.dim[p][q] = level_dim(p, q);
                c.htau[p][q] = htau(p, q);
                c.vtau[p][q] = vtau(p, q);
                if (q >= 1) {
                    c.hface[p][q].resize(q + 1);
                    for (int i = 0; i <= q; ++i)
                        c.hface[p][q][i] = hface(p, q, i);
                }
                if (q < q_max) {
                    c.hdegen[p][q].resize(q + 1);
                    for (int i = 0; i <= q; ++i)
                        c.hdegen[p][q][i] = hdegen(p, q, i);
                }
                if (p >= 1) {
                    c.vface[p][q].resize(p + 1);
                    for (int j = 0; j <= p; ++j)
                        c.vface[p][q][j] = vface(p, q, j);
                }
                if (p < p_max) {
                    c.vdegen[p][q].resize(p + 1);
                    for (int j = 0; j <= p; ++j)
                        c.vdegen[p][q][j] = vdegen(p, q, j);
                }
            }
        return c;
    }

private:
    int a_at(const std::vector<int>& idx, int p, int j) const { return idx[p + 1 + j]; }

    // expand Δ on every H-factor; hands (kept legs as the new H-tuple,
    // ordered product of the other legs, coefficient) to the sink.
    // generic: keep first legs, multiply second legs;
    // op_cop:  keep second legs, multiply first legs.
    template <class F>
    void with_comul_legs(const std::vector<int>& idx, int p, F&& sink) const
    {
        std::vector<std::vector<std::pair<std::pair<int, int>, S>>> opts(p + 1);
        for (int i = 0; i <= p; ++i)
            opts[i] = ctx_.t.comul[idx[i]];
        bool gen = variant_ == Variant::generic;
        for_each_choice<S, std::pair<int, int>>(
            opts, [&](const std::vector<const std::pair<int, int>*>& legs, S c) {
                std::vector<int> keep(p + 1);
                std::vector<int> other(p + 1);
                for (int i = 0; i <= p; ++i) {
                    keep[i] = gen ? legs[i]->first : legs[i]->second;
                    other[i] = gen ? legs[i]->second : legs[i]->first;
                }
                sink(keep, ctx_.prod_h(other), c);
            });
    }

    template <class F>
    SparseMap<S> build(int sp, int sq, int tp, int tq, F&& fn) const
    {
        auto src = indexer(sp, sq);
        auto tgt = indexer(tp, tq);
        SparseMap<S> m((int)tgt.total(), (int)src.total());
        for (long long flat = 0; flat < src.total(); ++flat) {
            auto idx = src.decode(flat);
            VecBuilder<S> out((int)tgt.total());
            fn(idx, [&](const std::vector<int>& tuple, const S& c) {
                out.add((int)tgt.encode(tuple), c);
            });
            m.col[flat] = out.take();
        }
        return m;
    }

    ExpandCtx<S> ctx_;
    Variant variant_;
};

/* ------------------------------------------- cyclic module of an algebra ---- */

template <class S>
ParacyclicModule<S> cyclic_module_of_algebra(const AlgebraData<S>& a, int n_max)
{
    const int na = a.dim();
    auto mul = OpTables<S>::mul_table(a);
    ParacyclicModule<S> m;
    m.dims.resize(n_max + 1);
    m.face.resize(n_max + 1);
    m.degen.resize(n_max + 1);
    m.tau.resize(n_max + 1);
    auto ix = [&](int n) {
        return TensorBasisIndexer(std::vector<int>(n + 1, na));
    };
    for (int n = 0; n <= n_max; ++n) {
        auto src = ix(n);
        m.dims[n] = (int)src.total();
        // τ: (a_n, a_0, ..., a_{n-1})
        m.tau[n] = SparseMap<S>((int)src.total(), (int)src.total());
        for (long long f = 0; f < src.total(); ++f) {
            auto idx = src.decode(f);
            std::vector<int> out;
            out.push_back(idx[n]);
            for (int k = 0; k < n; ++k)
                out.push_back(idx[k]);
            m.tau[n].col[f] = unit_vec<S>((int)src.total(), (int)src.encode(out));
        }
        if (n >= 1) {
            auto tgt = ix(n - 1);
            m.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                SparseMap<S> d((int)tgt.total(), (int)src.total());
                for (long long f = 0; f < src.total(); ++f) {
                    auto idx = src.decode(f);
                    VecBuilder<S> out((int)tgt.total());
                    const SparseVec<S>& prod =
                        i < n ? mul[idx[i]][idx[i + 1]] : mul[idx[n]][idx[0]];
                    for (const auto& [v, c] : prod.ent) {
                        std::vector<int> t;
                        if (i < n) {
                            for (int k = 0; k <= n; ++k) {
                                if (k == i)
                                    t.push_back(v);
                                else if (k != i + 1)
                                    t.push_back(idx[k]);
                            }
                        } else {
                            t.push_back(v);
                            for (int k = 1; k < n; ++k)
                                t.push_back(idx[k]);
                        }
                        out.add((int)tgt.encode(t), c);
                    }
                    d.col[f] = out.take();
                }
                m.face[n][i] = std::move(d);
            }
        }
        if (n < n_max) {
            auto tgt = ix(n + 1);
            m.degen[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                SparseMap<S> s((int)tgt.total(), (int)src.total());
                for (long long f = 0; f < src.total(); ++f) {
                    auto idx = src.decode(f);
                    VecBuilder<S> out((int)tgt.total());
                    for (const auto& [uv, cu] : a.unit.ent) {
                        std::vector<int> t;
                        for (int k = 0; k <= n + 1; ++k) {
                            if (k == i + 1)
                                t.push_back(uv);
                            else
                                t.push_back(idx[k < i + 1 ? k : k - 1]);
                        }
                        out.add((int)tgt.encode(t), cu);
                    }
                    s.col[f] = out.take();
                }
                m.degen[n][i] = std::move(s);
            }
        }
    }
    return m;
}

/* ------------------------------------------------------- natural cylinder ---- */

template <class S>
struct NaturalCylinder {
    CylindricalModule<S> module;
    bool op_cop = false;
};

template <class S>
NaturalCylinder<S> natural_cylinder(const ModuleAlgebraData<S>& m, int p_max, int q_max,
                                    bool op_cop = false)
{
    CylinderBuilder<S> b(m, op_cop ? CylinderBuilder<S>::Variant::op_cop
                                   : CylinderBuilder<S>::Variant::generic);
    return {b.build_module(p_max, q_max), op_cop};
}

// A-slot reversal (p,q) -> (p,q): conjugating the generic cylinder of
// (A^op, H^cop) by this permutation gives the op_cop printed forms.
template <class S>
SparseMap<S> reversal_map(const ModuleAlgebraData<S>& m, int p, int q)
{
    std::vector<int> dims(p + 1, m.dim_h());
    dims.insert(dims.end(), q + 1, m.dim_a());
    std::vector<int> perm(p + q + 2);
    for (int i = 0; i <= p; ++i)
        perm[i] = i;
    for (int j = 0; j <= q; ++j)
        perm[p + 1 + j] = p + 1 + (q - j);
    return factor_permutation<S>(dims, perm);
}

/* ------------------------------------------------------------ φ and ψ ---- */

// C_n of the crossed product lives on (A⊗H)^{⊗(n+1)}, flat layout
// [a_0, g_0, a_1, g_1, ...].  φ maps it to the diagonal cylinder level (n,n):
//   generic (target = generic layout, source R = A^op⋊H^cop built on A⊗H):
//     H-slot i = g_i^{(0)},  a_j twisted by S(∏_{k≥j} g_k^{(j+1)})
//   s_invertible (target = op_cop layout, source R = A⋊H):
//     H-slot i = g_i^{(i+1)}, a_j twisted by S⁻¹(g_j^{(0)} g_{j+1}^{(1)} ⋯ g_n^{(n-j)})
namespace detail {

template <class S>
TensorBasisIndexer chain_indexer(int nh, int na, int n)
{
    std::vector<int> dims;
    for (int i = 0; i <= n; ++i) {
        dims.push_back(na);
        dims.push_back(nh);
    }
    return TensorBasisIndexer(std::move(dims));
}

} // namespace detail

template <class S>
SparseMap<S> phi_map(const ModuleAlgebraData<S>& m, int n, bool s_invertible = false)
{
    ExpandCtx<S> ctx(m);
    const int nh = m.dim_h(), na = m.dim_a();
    auto src = detail::chain_indexer<S>(nh, na, n);
    std::vector<int> tdims(n + 1, nh);
    tdims.insert(tdims.end(), n + 1, na);
    TensorBasisIndexer tgt(tdims);
    SparseMap<S> out((int)tgt.total(), (int)src.total());

    for (long long flat = 0; flat < src.total(); ++flat) {
        auto idx = src.decode(flat);
        auto a_of = [&](int i) { return idx[2 * i]; };
        auto g_of = [&](int i) { return idx[2 * i + 1]; };
        VecBuilder<S> col((int)tgt.total());
        std::vector<std::vector<std::pair<std::vector<int>, S>>> sw(n + 1);
        for (int i = 0; i <= n; ++i)
            sw[i] = ctx.sweedler(g_of(i), i + 1);
        for_each_choice<S, std::vector<int>>(
            sw, [&](const std::vector<const std::vector<int>*>& comps, S c0) {
                std::vector<std::vector<std::pair<int, S>>> aopts(n + 1);
                for (int j = 0; j <= n; ++j) {
                    std::vector<int> factors;
                    for (int k = j; k <= n; ++k)
                        factors.push_back(s_invertible ? (*comps[k])[k - j] : (*comps[k])[j + 1]);
                    auto acted = ctx.act_vec2(ctx.antipode_vec(ctx.prod_h(factors), s_invertible),
                                              unit_vec<S>(na, a_of(j)));
                    aopts[j].assign(acted.ent.begin(), acted.ent.end());
                }
                for_each_choice<S, int>(aopts, [&](const std::vector<const int*>& avals, S ca) {
                    std::vector<int> tuple;
                    for (int i = 0; i <= n; ++i)
                        tuple.push_back(s_invertible ? (*comps[i])[i + 1] : (*comps[i])[0]);
                    // generic: slot s carries a_{n-s}; op_cop: slot j carries a_j
                    for (int s = 0; s <= n; ++s)
                        tuple.push_back(*avals[s_invertible ? s : n - s]);
                    col.add((int)tgt.encode(tuple), c0 * ca);
                });
            });
        out.col[flat] = col.take();
    }
    return out;
}

template <class S>
SparseMap<S> psi_map(const ModuleAlgebraData<S>& m, int n, bool s_invertible = false)
{
    ExpandCtx<S> ctx(m);
    const int nh = m.dim_h(), na = m.dim_a();
    std::vector<int> sdims(n + 1, nh);
    sdims.insert(sdims.end(), n + 1, na);
    TensorBasisIndexer src(sdims);
    auto tgt = detail::chain_indexer<S>(nh, na, n);
    SparseMap<S> out((int)tgt.total(), (int)src.total());

    for (long long flat = 0; flat < src.total(); ++flat) {
        auto idx = src.decode(flat);
        // generic layout: slot s carries a_{n-s}; op_cop: slot j carries a_j
        auto a_of = [&](int i) { return idx[n + 1 + (s_invertible ? i : n - i)]; };
        VecBuilder<S> col((int)tgt.total());
        std::vector<std::vector<std::pair<std::vector<int>, S>>> sw(n + 1);
        for (int i = 0; i <= n; ++i)
            sw[i] = ctx.sweedler(idx[i], i + 1);
        for_each_choice<S, std::vector<int>>(
            sw, [&](const std::vector<const std::vector<int>*>& comps, S c0) {
                std::vector<std::vector<std::pair<int, S>>> aopts(n + 1);
                for (int i = 0; i <= n; ++i) {
                    std::vector<int> factors;
                    for (int k = i; k <= n; ++k)
                        factors.push_back(s_invertible ? (*comps[k])[i] : (*comps[k])[k - i + 1]);
                    auto acted = ctx.act_vec2(ctx.prod_h(factors), unit_vec<S>(na, a_of(i)));
                    aopts[i].assign(acted.ent.begin(), acted.ent.end());
                }
                for_each_choice<S, int>(aopts, [&](const std::vector<const int*>& avals, S ca) {
                    std::vector<int> tuple;
                    for (int i = 0; i <= n; ++i) {
                        tuple.push_back(*avals[i]);
                        tuple.push_back(s_invertible ? (*comps[i])[i + 1] : (*comps[i])[0]);
                    }
                    col.add((int)tgt.encode(tuple), c0 * ca);
                });
            });
        out.col[flat] = col.take();
    }
    return out;
}

/* ------------------------------------------------------- coinvariants ---- */

// The H-action on the first cylinder column H ⊗ A^{⊗(n+1)}:
//   decreasing layout: h·(g | a_n..a_0) = (h⁽¹⁾ g S(h⁽⁰⁾) | h⁽²⁾·a_n, ..., h⁽ⁿ⁺²⁾·a_0)
//   increasing layout: h·(g | a_0..a_n) = (h⁽ⁿ⁺²⁾ g S(h⁽⁰⁾) | h⁽¹⁾·a_0, ..., h⁽ⁿ⁺¹⁾·a_n)
template <class S>
SparseMap<S> column_action(const ModuleAlgebraData<S>& m, int n, bool s_inv_form)
{
    ExpandCtx<S> ctx(m);
    const int nh = m.dim_h(), na = m.dim_a();
    std::vector<int> mdims = {nh};
    mdims.insert(mdims.end(), n + 1, na);
    TensorBasisIndexer mod(mdims);
    const int md = (int)mod.total();
    SparseMap<S> act(md, nh * md);
    for (int h = 0; h < nh; ++h)
        for (long long x = 0; x < md; ++x) {
            auto idx = mod.decode(x);
            VecBuilder<S> col(md);
            for (const auto& [c, c0] : ctx.sweedler(h, n + 2)) {
                int left = s_inv_form ? c[n + 2] : c[1];
                int sleg = c[0];
                auto gpart = ctx.mul_h_vec(
                    ctx.mul_h_vec(unit_vec<S>(nh, left), unit_vec<S>(nh, idx[0])),
                    ctx.antipode_vec(unit_vec<S>(nh, sleg), false));
                std::vector<std::vector<std::pair<int, S>>> aopts(n + 1);
                for (int j = 0; j <= n; ++j) {
                    int comp = s_inv_form ? c[1 + j] : c[2 + j];
                    const auto& av = ctx.t.act[comp][idx[1 + j]];
                    aopts[j].assign(av.ent.begin(), av.ent.end());
                }
                for (const auto& [gv, cg] : gpart.ent)
                    for_each_choice<S, int>(aopts,
                                            [&](const std::vector<const int*>& avals, S ca) {
                                                std::vector<int> tuple = {gv};
                                                for (int j = 0; j <= n; ++j)
                                                    tuple.push_back(*avals[j]);
                                                col.add((int)mod.encode(tuple), c0 * cg * ca);
                                            });
            }
            act.col[(long long)h * md + x] = col.take();
        }
    return act;
}

template <class S>
S column_action_counit(const ModuleAlgebraData<S>& m, int h)
{
    return m.hopf.counit.col[h].at(0);
}

template <class S>
struct CoinvariantModule {
    bool s_inv_form = false;
    std::vector<Subquotient<S>> levels;            // quotient per degree
    std::vector<std::vector<SparseVec<S>>> spans;  // action-span generators
    ParacyclicModule<S> raw;                       // first-column operators, pre-quotient
    ParacyclicModule<S> ops;                       // induced operators on the quotient
};

// Quotient of the first cylinder column by span{h·x − ε(h)x}; the column
// operators descend (checked) and the quotient is cyclic.
template <class S>
CoinvariantModule<S> coinvariant_module(const ModuleAlgebraData<S>& m, int n_max, bool s_inv_form)
{
    CoinvariantModule<S> cm;
    cm.s_inv_form = s_inv_form;
    CylinderBuilder<S> b(m, s_inv_form ? CylinderBuilder<S>::Variant::op_cop
                                       : CylinderBuilder<S>::Variant::generic);
    const int nh = m.dim_h();

    cm.levels.resize(n_max + 1);
    cm.spans.resize(n_max + 1);
    cm.raw.dims.resize(n_max + 1);
    cm.raw.face.resize(n_max + 1);
    cm.raw.degen.resize(n_max + 1);
    cm.raw.tau.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        int md = b.level_dim(0, n);
        cm.raw.dims[n] = md;
        auto act = column_action(m, n, s_inv_form);
        for (int h = 0; h < nh; ++h) {
            S eps = column_action_counit(m, h);
            for (int x = 0; x < md; ++x) {
                SparseVec<S> gen = act.col[(long long)h * md + x];
                gen.set(x, gen.at(x) - eps);
                if (!gen.is_zero())
                    cm.spans[n].push_back(std::move(gen));
            }
        }
        cm.levels[n] = Subquotient<S>::quotient(md, cm.spans[n]);
        cm.raw.tau[n] = b.htau(0, n);
        if (n >= 1) {
            cm.raw.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                cm.raw.face[n][i] = b.hface(0, n, i);
        }
        if (n < n_max) {
            cm.raw.degen[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                cm.raw.degen[n][i] = b.hdegen(0, n, i);
        }
    }
    cm.ops.dims.resize(n_max + 1);
    cm.ops.face.resize(n_max + 1);
    cm.ops.degen.resize(n_max + 1);
    cm.ops.tau.resize(n_max + 1);
    auto induce = [&](const SparseMap<S>& raw, int sn, int tn, const char* what) {
        if (!check_descends(raw, cm.spans[sn], cm.levels[tn]))
            throw Error(std::string("coinvariant ") + what + " is not well defined at n="
                        + std::to_string(sn));
        return induced_map(raw, cm.levels[sn], cm.levels[tn]);
    };
    for (int n = 0; n <= n_max; ++n) {
        cm.ops.dims[n] = cm.levels[n].dim();
        cm.ops.tau[n] = induce(cm.raw.tau[n], n, n, "τ");
        if (n >= 1) {
            cm.ops.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                cm.ops.face[n][i] = induce(cm.raw.face[n][i], n, n - 1, "∂");
        }
        if (n < n_max) {
            cm.ops.degen[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                cm.ops.degen[n][i] = induce(cm.raw.degen[n][i], n, n + 1, "σ");
        }
    }
    return cm;
}

/* -------------------------------------------- β/γ and the transported ops ---- */

// Levels T(P,Q) = H^{⊗P} ⊗ H ⊗ A^{⊗(Q+1)} with layout [k_1..k_P, g, A-slots]
// (A decreasing, as in the generic cylinder).  Vertical operators are the
// Hopf-module boundary data; horizontal ones act on the module part.
template <class S>
class TransportedBuilder {
public:
    explicit TransportedBuilder(const ModuleAlgebraData<S>& m) : m_(m), ctx_(m)
    {
        if (ctx_.t.antipode.empty())
            throw InputError("transported complex: antipode required");
    }

    TensorBasisIndexer indexer(int P, int Q) const
    {
        std::vector<int> dims(P, ctx_.t.dim_h);
        dims.push_back(ctx_.t.dim_h);
        dims.insert(dims.end(), Q + 1, ctx_.t.dim_a);
        return TensorBasisIndexer(std::move(dims));
    }
    int level_dim(int P, int Q) const { return (int)indexer(P, Q).total(); }

    // β(g_0..g_P | a's) = (g_1⁽¹⁾..g_P⁽¹⁾ | g_0 g_1⁽⁰⁾⋯g_P⁽⁰⁾ | a's)
    SparseMap<S> beta(int P, int Q) const
    {
        CylinderBuilder<S> cb(m_, CylinderBuilder<S>::Variant::generic);
        auto src = cb.indexer(P, Q);
        auto tgt = indexer(P, Q);
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            std::vector<std::vector<std::pair<std::pair<int, int>, S>>> opts(P);
            for (int i = 1; i <= P; ++i)
                opts[i - 1] = ctx_.t.comul[idx[i]];
            for_each_choice<S, std::pair<int, int>>(
                opts, [&](const std::vector<const std::pair<int, int>*>& legs, S c0) {
                    std::vector<int> firsts = {idx[0]};
                    for (int i = 0; i < P; ++i)
                        firsts.push_back(legs[i]->first);
                    auto g = ctx_.prod_h(firsts);
                    for (const auto& [gv, cg] : g.ent) {
                        std::vector<int> tuple;
                        for (int i = 0; i < P; ++i)
                            tuple.push_back(legs[i]->second);
                        tuple.push_back(gv);
                        for (int j = 0; j <= Q; ++j)
                            tuple.push_back(idx[P + 1 + j]);
                        emit(tuple, c0 * cg);
                    }
                });
        });
    }

    // γ(k_1..k_P | g | a's) = (g S(k_1⁽⁰⁾⋯k_P⁽⁰⁾), k_1⁽¹⁾..k_P⁽¹⁾ | a's)
    SparseMap<S> gamma(int P, int Q) const
    {
        CylinderBuilder<S> cb(m_, CylinderBuilder<S>::Variant::generic);
        auto src = indexer(P, Q);
        auto tgt = cb.indexer(P, Q);
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            std::vector<std::vector<std::pair<std::pair<int, int>, S>>> opts(P);
            for (int i = 0; i < P; ++i)
                opts[i] = ctx_.t.comul[idx[i]];
            for_each_choice<S, std::pair<int, int>>(
                opts, [&](const std::vector<const std::pair<int, int>*>& legs, S c0) {
                    std::vector<int> firsts;
                    for (int i = 0; i < P; ++i)
                        firsts.push_back(legs[i]->first);
                    auto head = ctx_.mul_h_vec(unit_vec<S>(ctx_.t.dim_h, idx[P]),
                                               ctx_.antipode_vec(ctx_.prod_h(firsts), false));
                    for (const auto& [hv, ch] : head.ent) {
                        std::vector<int> tuple = {hv};
                        for (int i = 0; i < P; ++i)
                            tuple.push_back(legs[i]->second);
                        for (int j = 0; j <= Q; ++j)
                            tuple.push_back(idx[P + 1 + j]);
                        emit(tuple, c0 * ch);
                    }
                });
        });
    }

    /* closed-form transported operators */

    SparseMap<S> dbar(int P, int Q, int i) const
    {
        auto src = indexer(P, Q);
        auto tgt = indexer(P - 1, Q);
        if (i == 0)
            return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
                S eps = ctx_.t.counit[idx[0]];
                if (!is_zero(eps)) {
                    std::vector<int> tuple(idx.begin() + 1, idx.end());
                    emit(tuple, eps);
                }
            });
        if (i < P)
            return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
                auto prod = ctx_.mul_h_vec(unit_vec<S>(ctx_.t.dim_h, idx[i - 1]),
                                           unit_vec<S>(ctx_.t.dim_h, idx[i]));
                for (const auto& [hv, c] : prod.ent) {
                    std::vector<int> tuple;
                    for (int k = 0; k < (int)idx.size(); ++k) {
                        if (k == i - 1)
                            tuple.push_back(hv);
                        else if (k != i)
                            tuple.push_back(idx[k]);
                    }
                    emit(tuple, c);
                }
            });
        // i == P: k_P acts on the module part by the coinvariant action
        auto act = column_action(m_, Q, false);
        const int md = (int)act.rows;
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            TensorBasisIndexer mod = indexer(0, Q);
            std::vector<int> mtuple(idx.begin() + P, idx.end());
            long long x = mod.encode(mtuple);
            const auto& img = act.col[(long long)idx[P - 1] * md + x];
            for (const auto& [mv, c] : img.ent) {
                auto mdec = mod.decode(mv);
                std::vector<int> tuple(idx.begin(), idx.begin() + (P - 1));
                tuple.insert(tuple.end(), mdec.begin(), mdec.end());
                emit(tuple, c);
            }
        });
    }

    SparseMap<S> sbar(int P, int Q, int i) const
    {
        auto src = indexer(P, Q);
        auto tgt = indexer(P + 1, Q);
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [uv, cu] : ctx_.t.unit_h.ent) {
                std::vector<int> tuple;
                for (int k = 0; k < P; ++k) {
                    if (k == i)
                        tuple.push_back(uv);
                    tuple.push_back(idx[k]);
                }
                if (i == P)
                    tuple.push_back(uv);
                for (int k = P; k < (int)idx.size(); ++k)
                    tuple.push_back(idx[k]);
                emit(tuple, cu);
            }
        });
    }

    SparseMap<S> tbar(int P, int Q) const
    {
        auto src = indexer(P, Q);
        if (P == 0) {
            // the module part's own cyclic rotation in the H-direction
            return build(src, src, [&](const std::vector<int>& idx, auto&& emit) {
                for (const auto& [c, c0] : ctx_.sweedler(idx[0], Q + 1)) {
                    std::vector<std::vector<std::pair<int, S>>> aopts(Q + 1);
                    for (int j = 0; j <= Q; ++j) {
                        const auto& av = ctx_.t.act[c[1 + j]][idx[1 + j]];
                        aopts[j].assign(av.ent.begin(), av.ent.end());
                    }
                    for_each_choice<S, int>(aopts,
                                            [&](const std::vector<const int*>& avals, S ca) {
                                                std::vector<int> tuple = {c[0]};
                                                for (int j = 0; j <= Q; ++j)
                                                    tuple.push_back(*avals[j]);
                                                emit(tuple, c0 * ca);
                                            });
                }
            });
        }
        return build(src, src, [&](const std::vector<int>& idx, auto&& emit) {
            std::vector<std::vector<std::pair<std::pair<int, int>, S>>> kopts(P - 1);
            for (int i = 1; i <= P - 1; ++i)
                kopts[i - 1] = ctx_.t.comul[idx[i - 1]];
            // NOTE: k_i sits at tuple position i-1
            for_each_choice<S, std::pair<int, int>>(
                    kopts, [&](const std::vector<const std::pair<int, int>*>& legs, S ck) {
                        for (const auto& [gg, cgg] : ctx_.t.comul[idx[P]]) {
                            for (const auto& [c, c0] : ctx_.sweedler(idx[P - 1], Q + 3)) {
                                // head slot: g⁽¹⁾ S(k_1⁽⁰⁾ ⋯ k_{P-1}⁽⁰⁾ k_P⁽⁰⁾)
                                std::vector<int> firsts;
                                for (int i = 0; i < P - 1; ++i)
                                    firsts.push_back(legs[i]->first);
                                firsts.push_back(c[0]);
                                auto head = ctx_.mul_h_vec(
                                    unit_vec<S>(ctx_.t.dim_h, gg.second),
                                    ctx_.antipode_vec(ctx_.prod_h(firsts), false));
                                // middle: k_P⁽²⁾ g⁽⁰⁾ S(k_P⁽¹⁾)
                                auto mid = ctx_.mul_h_vec(
                                    ctx_.mul_h_vec(unit_vec<S>(ctx_.t.dim_h, c[2]),
                                                   unit_vec<S>(ctx_.t.dim_h, gg.first)),
                                    ctx_.antipode_vec(unit_vec<S>(ctx_.t.dim_h, c[1]), false));
                                std::vector<std::vector<std::pair<int, S>>> aopts(Q + 1);
                                for (int j = 0; j <= Q; ++j) {
                                    const auto& av = ctx_.t.act[c[3 + j]][idx[P + 1 + j]];
                                    aopts[j].assign(av.ent.begin(), av.ent.end());
                                }
                                for (const auto& [hv, chd] : head.ent)
                                    for (const auto& [mv, cmd] : mid.ent)
                                        for_each_choice<S, int>(
                                            aopts,
                                            [&](const std::vector<const int*>& avals, S ca) {
                                                std::vector<int> tuple = {hv};
                                                for (int i = 0; i < P - 1; ++i)
                                                    tuple.push_back(legs[i]->second);
                                                tuple.push_back(mv);
                                                for (int j = 0; j <= Q; ++j)
                                                    tuple.push_back(*avals[j]);
                                                emit(tuple, ck * cgg * c0 * chd * cmd * ca);
                                            });
                            }
                        }
                    });
        });
    }

    SparseMap<S> dmod(int P, int Q, int i) const
    {
        auto src = indexer(P, Q);
        auto tgt = indexer(P, Q - 1);
        if (i < Q) {
            int lo = Q - i - 1;
            return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
                auto prod = ctx_.mul_a_vec(unit_vec<S>(ctx_.t.dim_a, idx[P + 1 + lo]),
                                           idx[P + 1 + lo + 1]);
                for (const auto& [av, c] : prod.ent) {
                    std::vector<int> tuple(idx.begin(), idx.begin() + P + 1);
                    for (int j = 0; j <= Q; ++j) {
                        if (j == lo)
                            tuple.push_back(av);
                        else if (j != lo + 1)
                            tuple.push_back(idx[P + 1 + j]);
                    }
                    emit(tuple, c);
                }
            });
        }
        return twisted_horizontal(P, Q, /*face=*/true);
    }

    SparseMap<S> smod(int P, int Q, int i) const
    {
        auto src = indexer(P, Q);
        auto tgt = indexer(P, Q + 1);
        int pos = Q - i;
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            for (const auto& [uv, cu] : ctx_.t.unit_a.ent) {
                std::vector<int> tuple(idx.begin(), idx.begin() + P + 1);
                for (int j = 0; j <= Q + 1; ++j) {
                    if (j == pos)
                        tuple.push_back(uv);
                    else
                        tuple.push_back(idx[P + 1 + (j < pos ? j : j - 1)]);
                }
                emit(tuple, cu);
            }
        });
    }

    SparseMap<S> tmod(int P, int Q) const { return twisted_horizontal(P, Q, /*face=*/false); }

    // the twisted operators 𝔱 and 𝔡_Q share the element
    //   w = g⁽¹⁾ S(k_1⁽⁰⁾⋯k_P⁽⁰⁾) k_1⁽²⁾⋯k_P⁽²⁾,  twist = S(w)·(A-slot 0)
    SparseMap<S> twisted_horizontal(int P, int Q, bool face) const
    {
        auto src = indexer(P, Q);
        auto tgt = indexer(P, Q - (face ? 1 : 0));
        return build(src, tgt, [&](const std::vector<int>& idx, auto&& emit) {
            std::vector<std::vector<std::pair<std::vector<int>, S>>> kopts(P);
            for (int i = 0; i < P; ++i)
                kopts[i] = ctx_.sweedler(idx[i], 2);
            for_each_choice<S, std::vector<int>>(
                kopts, [&](const std::vector<const std::vector<int>*>& ks, S ck) {
                    for (const auto& [gg, cg] : ctx_.t.comul[idx[P]]) {
                        std::vector<int> firsts, thirds;
                        for (int i = 0; i < P; ++i) {
                            firsts.push_back((*ks[i])[0]);
                            thirds.push_back((*ks[i])[2]);
                        }
                        auto w = ctx_.mul_h_vec(
                            ctx_.mul_h_vec(unit_vec<S>(ctx_.t.dim_h, gg.second),
                                           ctx_.antipode_vec(ctx_.prod_h(firsts), false)),
                            ctx_.prod_h(thirds));
                        auto acted = ctx_.act_vec2(ctx_.antipode_vec(w, false),
                                                   unit_vec<S>(ctx_.t.dim_a, idx[P + 1]));
                        if (face) {
                            auto prod = ctx_.mul_a_vec2(idx[P + 1 + Q], acted);
                            for (const auto& [av, ca] : prod.ent) {
                                std::vector<int> tuple;
                                for (int i = 0; i < P; ++i)
                                    tuple.push_back((*ks[i])[1]);
                                tuple.push_back(gg.first);
                                for (int j = 1; j <= Q - 1; ++j)
                                    tuple.push_back(idx[P + 1 + j]);
                                tuple.push_back(av);
                                emit(tuple, ck * cg * ca);
                            }
                        } else {
                            for (const auto& [av, ca] : acted.ent) {
                                std::vector<int> tuple;
                                for (int i = 0; i < P; ++i)
                                    tuple.push_back((*ks[i])[1]);
                                tuple.push_back(gg.first);
                                for (int j = 1; j <= Q; ++j)
                                    tuple.push_back(idx[P + 1 + j]);
                                tuple.push_back(av);
                                emit(tuple, ck * cg * ca);
                            }
                        }
                    }
                });
        });
    }

    CylindricalModule<S> build_module(int p_max, int q_max) const
    {
        CylindricalModule<S> c;
        c.allocate(p_max, q_max);
        for (int P = 0; P <= p_max; ++P)
            for (int Q = 0; Q <= q_max; ++Q) {
                c.dim[P][Q] = level_dim(P, Q);
                c.htau[P][Q] = tmod(P, Q);
                c.vtau[P][Q] = tbar(P, Q);
                if (Q >= 1) {
                    c.hface[P][Q].resize(Q + 1);
                    for (int i = 0; i <= Q; ++i)
                        c.hface[P][Q][i] = dmod(P, Q, i);
                }
                if (Q < q_max) {
                    c.hdegen[P][Q].resize(Q + 1);
                    for (int i = 0; i <= Q; ++i)
                        c.hdegen[P][Q][i] = smod(P, Q, i);
                }
                if (P >= 1) {
                    c.vface[P][Q].resize(P + 1);
                    for (int j = 0; j <= P; ++j)
                        c.vface[P][Q][j] = dbar(P, Q, j);
                }
                if (P < p_max) {
                    c.vdegen[P][Q].resize(P + 1);
                    for (int j = 0; j <= P; ++j)
                        c.vdegen[P][Q][j] = sbar(P, Q, j);
                }
            }
        return c;
    }

private:
    template <class F>
    SparseMap<S> build(const TensorBasisIndexer& src, const TensorBasisIndexer& tgt, F&& fn) const
    {
        SparseMap<S> m((int)tgt.total(), (int)src.total());
        for (long long flat = 0; flat < src.total(); ++flat) {
            auto idx = src.decode(flat);
            VecBuilder<S> out((int)tgt.total());
            fn(idx, [&](const std::vector<int>& tuple, const S& c) {
                out.add((int)tgt.encode(tuple), c);
            });
            m.col[flat] = out.take();
        }
        return m;
    }

    const ModuleAlgebraData<S>& m_;
    ExpandCtx<S> ctx_;
};

template <class S>
struct TransportedComplex {
    CylindricalModule<S> module;                 // closed-form operators
    std::vector<std::vector<SparseMap<S>>> beta; // cylinder (p,q) -> T(p,q)
    std::vector<std::vector<SparseMap<S>>> gamma;
};

template <class S>
TransportedComplex<S> beta_gamma(const ModuleAlgebraData<S>& m, int p_max, int q_max)
{
    TransportedBuilder<S> b(m);
    TransportedComplex<S> tc;
    tc.module = b.build_module(p_max, q_max);
    tc.beta.assign(p_max + 1, std::vector<SparseMap<S>>(q_max + 1));
    tc.gamma = tc.beta;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= q_max; ++q) {
            tc.beta[p][q] = b.beta(p, q);
            tc.gamma[p][q] = b.gamma(p, q);
        }
    return tc;
}

// β·op·γ for every operator family of the cylinder; must agree with the
// closed forms entrywise.
template <class S>
CylindricalModule<S> conjugate_transported(const CylindricalModule<S>& cyl,
                                           const TransportedComplex<S>& tc)
{
    CylindricalModule<S> c;
    c.allocate(cyl.p_max, cyl.q_max);
    auto conj = [&](const SparseMap<S>& op, int sp, int sq, int tp, int tq) {
        return tc.beta[tp][tq].compose(op).compose(tc.gamma[sp][sq]);
    };
    for (int p = 0; p <= cyl.p_max; ++p)
        for (int q = 0; q <= cyl.q_max; ++q) {
            c.dim[p][q] = tc.beta[p][q].rows;
            c.htau[p][q] = conj(cyl.htau[p][q], p, q, p, q);
            c.vtau[p][q] = conj(cyl.vtau[p][q], p, q, p, q);
            if (q >= 1) {
                c.hface[p][q].resize(q + 1);
                for (int i = 0; i <= q; ++i)
                    c.hface[p][q][i] = conj(cyl.hface[p][q][i], p, q, p, q - 1);
            }
            if (q < cyl.q_max) {
                c.hdegen[p][q].resize(q + 1);
                for (int i = 0; i <= q; ++i)
                    c.hdegen[p][q][i] = conj(cyl.hdegen[p][q][i], p, q, p, q + 1);
            }
            if (p >= 1) {
                c.vface[p][q].resize(p + 1);
                for (int j = 0; j <= p; ++j)
                    c.vface[p][q][j] = conj(cyl.vface[p][q][j], p, q, p - 1, q);
            }
            if (p < cyl.p_max) {
                c.vdegen[p][q].resize(p + 1);
                for (int j = 0; j <= p; ++j)
                    c.vdegen[p][q][j] = conj(cyl.vdegen[p][q][j], p, q, p + 1, q);
            }
        }
    return c;
}

/* ----------------------------------------------------------------- χ ---- */

// χ(a_0,...,a_n) = class of (1 | a_0,...,a_n) in the equivariant quotient.
template <class S>
std::vector<SparseMap<S>> chi_map(const ModuleAlgebraData<S>& m, const InvariantSubalgebra<S>& inv,
                                  const CoinvariantModule<S>& coinv, int n_max)
{
    if (!coinv.s_inv_form)
        throw InputError("χ targets the direct-indexed equivariant module");
    const int nh = m.dim_h(), na = m.dim_a(), d = inv.sub.dim();
    std::vector<SparseMap<S>> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        TensorBasisIndexer src(std::vector<int>(n + 1, d));
        std::vector<int> mdims = {nh};
        mdims.insert(mdims.end(), n + 1, na);
        TensorBasisIndexer mod(mdims);
        SparseMap<S> chi(coinv.levels[n].dim(), (int)src.total());
        for (long long flat = 0; flat < src.total(); ++flat) {
            auto idx = src.decode(flat);
            // include each invariant basis vector into A and tensor up
            VecBuilder<S> emb((int)mod.total());
            std::vector<std::vector<std::pair<int, S>>> opts(n + 2);
            opts[0].assign(m.hopf.alg.unit.ent.begin(), m.hopf.alg.unit.ent.end());
            for (int i = 0; i <= n; ++i)
                opts[1 + i].assign(inv.inclusion.col[idx[i]].ent.begin(),
                                   inv.inclusion.col[idx[i]].ent.end());
            for_each_choice<S, int>(opts, [&](const std::vector<const int*>& items, S c) {
                std::vector<int> tuple;
                for (auto* it : items)
                    tuple.push_back(*it);
                emb.add((int)mod.encode(tuple), c);
            });
            chi.col[flat] = coinv.levels[n].project(emb.take());
        }
        out[n] = std::move(chi);
    }
    return out;
}

} // namespace hopfcyc
