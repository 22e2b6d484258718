#pragma once

#include "elim.hpp"
#include "report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfcyc {

/* ------------------------------------------------------------ data ---- */

template <class S>
struct AlgebraData {
    BasedSpace space;
    SparseMap<S> mul;  // A⊗A -> A
    SparseVec<S> unit; // element of A

    int dim() const { return space.dim; }
    SparseMap<S> unit_map() const
    {
        SparseMap<S> m(space.dim, 1);
        m.col[0] = unit;
        return m;
    }
};

template <class S>
struct HopfAlgebraData {
    AlgebraData<S> alg;
    SparseMap<S> comul;  // H -> H⊗H
    SparseMap<S> counit; // H -> k  (1 x dim)
    // absent antipode marks a bialgebra-level object (e.g. cop of a Hopf
    // algebra whose antipode is not invertible)
    std::optional<SparseMap<S>> antipode;
    std::optional<SparseMap<S>> antipode_inverse;

    int dim() const { return alg.dim(); }
    bool is_hopf() const { return antipode.has_value(); }
    bool has_antipode_inverse() const { return antipode_inverse.has_value(); }
};

template <class S>
struct ModuleAlgebraData {
    HopfAlgebraData<S> hopf;
    AlgebraData<S> alg;
    SparseMap<S> action; // H⊗A -> A

    int dim_h() const { return hopf.dim(); }
    int dim_a() const { return alg.dim(); }
};

/* --------------------------------------------------------- helpers ---- */

template <class S>
std::string tensor_label(long long flat, const std::vector<const BasedSpace*>& factors)
{
    std::vector<int> dims;
    for (auto* f : factors)
        dims.push_back(f->dim);
    TensorBasisIndexer ix(dims);
    auto idx = ix.decode(flat);
    std::string out = "(";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += "⊗";
        out += factors[k]->label(idx[k]);
    }
    return out + ")";
}

template <class S>
void check_equal(CheckReport& rep, const std::string& name, const SparseMap<S>& lhs,
                 const SparseMap<S>& rhs, const std::vector<const BasedSpace*>& src_factors = {})
{
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
        rep.add(name, false, "shape mismatch");
        return;
    }
    for (int j = 0; j < lhs.cols; ++j) {
        if (lhs.col[j] == rhs.col[j])
            continue;
        std::string w = "column " + std::to_string(j);
        if (!src_factors.empty())
            w += " " + tensor_label<S>(j, src_factors);
        SparseVec<S> d = lhs.col[j];
        d.axpy(S(-1), rhs.col[j]);
        w += ", row " + std::to_string(d.ent.front().first) + ": lhs="
             + to_string(lhs.col[j].at(d.ent.front().first)) + " rhs="
             + to_string(rhs.col[j].at(d.ent.front().first));
        rep.add(name, false, w);
        return;
    }
    rep.add(name, true);
}

/* ----------------------------------------------------- axiom suite ---- */

template <class S>
CheckReport verify_algebra(const AlgebraData<S>& a)
{
    CheckReport rep;
    const int n = a.dim();
    if (a.mul.rows != n || a.mul.cols != n * n || a.unit.dim != n)
        throw InputError("algebra data with inconsistent shapes");
    auto id = SparseMap<S>::identity(n);
    // associativity on A⊗A⊗A
    auto lhs = a.mul.compose(a.mul.kron(id));
    auto rhs = a.mul.compose(id.kron(a.mul));
    check_equal(rep, "associativity", lhs, rhs, {&a.space, &a.space, &a.space});
    // unit laws
    check_equal(rep, "left unit law", a.mul.compose(a.unit_map().kron(id)), id, {&a.space});
    check_equal(rep, "right unit law", a.mul.compose(id.kron(a.unit_map())), id, {&a.space});
    return rep;
}

template <class S>
CheckReport verify_hopf(const HopfAlgebraData<S>& h)
{
    CheckReport rep = verify_algebra(h.alg);
    const int n = h.dim();
    const auto& H = h.alg.space;
    auto id = SparseMap<S>::identity(n);
    auto idk = SparseMap<S>::identity(1);
    auto swap2 = factor_permutation<S>({n, n}, {1, 0});

    check_equal(rep, "coassociativity", h.comul.kron(id).compose(h.comul),
                id.kron(h.comul).compose(h.comul), {&H});
    check_equal(rep, "left counit law", h.counit.kron(id).compose(h.comul), id, {&H});
    check_equal(rep, "right counit law", id.kron(h.counit).compose(h.comul), id, {&H});

    // Δ and ε are algebra maps
    auto mid_swap = factor_permutation<S>({n, n, n, n}, {0, 2, 1, 3});
    check_equal(rep, "comultiplication is an algebra map (products)",
                h.comul.compose(h.alg.mul),
                h.alg.mul.kron(h.alg.mul).compose(mid_swap).compose(h.comul.kron(h.comul)),
                {&H, &H});
    check_equal(rep, "comultiplication is an algebra map (unit)",
                h.comul.compose(h.alg.unit_map()),
                h.alg.unit_map().kron(h.alg.unit_map()));
    check_equal(rep, "counit is an algebra map (products)", h.counit.compose(h.alg.mul),
                h.counit.kron(h.counit), {&H, &H});
    check_equal(rep, "counit is an algebra map (unit)", h.counit.compose(h.alg.unit_map()), idk);

    if (h.antipode) {
        const auto& s = *h.antipode;
        auto eta_eps = h.alg.unit_map().compose(h.counit);
        check_equal(rep, "antipode law (left)", h.alg.mul.compose(s.kron(id)).compose(h.comul),
                    eta_eps, {&H});
        check_equal(rep, "antipode law (right)", h.alg.mul.compose(id.kron(s)).compose(h.comul),
                    eta_eps, {&H});
        if (h.antipode_inverse) {
            check_equal(rep, "S∘S⁻¹ = id", s.compose(*h.antipode_inverse), id, {&H});
            check_equal(rep, "S⁻¹∘S = id", h.antipode_inverse->compose(s), id, {&H});
        }
    } else {
        rep.add("antipode present (bialgebra-level object)", true);
    }
    (void)swap2;
    return rep;
}

template <class S>
CheckReport verify_module_algebra(const ModuleAlgebraData<S>& m)
{
    CheckReport rep;
    const int nh = m.dim_h(), na = m.dim_a();
    const auto& H = m.hopf.alg.space;
    const auto& A = m.alg.space;
    auto id_h = SparseMap<S>::identity(nh);
    auto id_a = SparseMap<S>::identity(na);

    // left module: (gh)·a = g·(h·a), 1·a = a
    check_equal(rep, "module law", m.action.compose(m.hopf.alg.mul.kron(id_a)),
                m.action.compose(id_h.kron(m.action)), {&H, &H, &A});
    check_equal(rep, "module unit law", m.action.compose(m.hopf.alg.unit_map().kron(id_a)), id_a,
                {&A});

    // h·(ab) = (h⁽⁰⁾·a)(h⁽¹⁾·b)
    auto perm = factor_permutation<S>({nh, nh, na, na}, {0, 2, 1, 3});
    check_equal(rep, "module-algebra law", m.action.compose(id_h.kron(m.alg.mul)),
                m.alg.mul.compose(m.action.kron(m.action))
                    .compose(perm)
                    .compose(m.hopf.comul.kron(id_a).kron(id_a)),
                {&H, &A, &A});
    // h·1 = ε(h)1
    check_equal(rep, "action on the unit", m.action.compose(id_h.kron(m.alg.unit_map())),
                m.alg.unit_map().compose(m.hopf.counit), {&H});
    return rep;
}

/* --------------------------------------------------- derived objects ---- */

// Δⁿ by left-nested composition, Δ⁰ = id.
template <class S>
SparseMap<S> iterated_coproduct(const HopfAlgebraData<S>& h, int n)
{
    if (n < 0)
        throw InputError("iterated_coproduct: negative order");
    const int d = h.dim();
    SparseMap<S> out = SparseMap<S>::identity(d);
    for (int k = 1; k <= n; ++k) {
        // Δ applied to the leftmost factor of H^{⊗k}
        SparseMap<S> step = h.comul;
        for (int j = 1; j < k; ++j)
            step = step.kron(SparseMap<S>::identity(d));
        out = step.compose(out);
    }
    return out;
}

template <class S>
AlgebraData<S> opposite_algebra(const AlgebraData<S>& a)
{
    const int n = a.dim();
    AlgebraData<S> op = a;
    op.mul = a.mul.compose(factor_permutation<S>({n, n}, {1, 0}));
    return op;
}

template <class S>
HopfAlgebraData<S> cop_hopf(const HopfAlgebraData<S>& h)
{
    const int n = h.dim();
    HopfAlgebraData<S> c = h;
    c.comul = factor_permutation<S>({n, n}, {1, 0}).compose(h.comul);
    if (h.antipode_inverse) {
        c.antipode = h.antipode_inverse;
        c.antipode_inverse = h.antipode;
    } else {
        // only a bialgebra: usable for crossed products, refused by the
        // constructions that require an antipode
        c.antipode.reset();
        c.antipode_inverse.reset();
    }
    return c;
}

// (A^op, H^cop) with the unchanged action.
template <class S>
ModuleAlgebraData<S> derive_op_cop(const ModuleAlgebraData<S>& m)
{
    ModuleAlgebraData<S> d;
    d.hopf = cop_hopf(m.hopf);
    d.alg = opposite_algebra(m.alg);
    d.action = m.action;
    return d;
}

/* ------------------------------------------------- structure tables ---- */

// Per-basis-element views of the structure constants, the workhorse of all
// operator constructions.
template <class S>
struct OpTables {
    int dim_h = 0, dim_a = 0;
    std::vector<std::vector<SparseVec<S>>> mul_h, mul_a;             // [x][y] -> product
    std::vector<std::vector<SparseVec<S>>> act;                      // [h][a] -> A
    std::vector<std::vector<std::pair<std::pair<int, int>, S>>> comul; // [h] -> ((u,v),c)
    std::vector<S> counit;
    std::vector<SparseVec<S>> antipode, antipode_inv; // empty when absent
    SparseVec<S> unit_h, unit_a;

    static OpTables from(const ModuleAlgebraData<S>& m)
    {
        OpTables t;
        t.dim_h = m.dim_h();
        t.dim_a = m.dim_a();
        t.mul_h = mul_table(m.hopf.alg);
        t.mul_a = mul_table(m.alg);
        t.unit_h = m.hopf.alg.unit;
        t.unit_a = m.alg.unit;
        t.act.assign(t.dim_h, std::vector<SparseVec<S>>(t.dim_a));
        for (int h = 0; h < t.dim_h; ++h)
            for (int a = 0; a < t.dim_a; ++a)
                t.act[h][a] = m.action.col[(long long)h * t.dim_a + a];
        t.comul.resize(t.dim_h);
        for (int h = 0; h < t.dim_h; ++h)
            for (const auto& [r, c] : m.hopf.comul.col[h].ent)
                t.comul[h].push_back({{r / t.dim_h, r % t.dim_h}, c});
        t.counit.resize(t.dim_h, S(0));
        for (int h = 0; h < t.dim_h; ++h)
            t.counit[h] = m.hopf.counit.col[h].at(0);
        if (m.hopf.antipode) {
            t.antipode.resize(t.dim_h);
            for (int h = 0; h < t.dim_h; ++h)
                t.antipode[h] = m.hopf.antipode->col[h];
        }
        if (m.hopf.antipode_inverse) {
            t.antipode_inv.resize(t.dim_h);
            for (int h = 0; h < t.dim_h; ++h)
                t.antipode_inv[h] = m.hopf.antipode_inverse->col[h];
        }
        return t;
    }

    static std::vector<std::vector<SparseVec<S>>> mul_table(const AlgebraData<S>& a)
    {
        const int n = a.dim();
        std::vector<std::vector<SparseVec<S>>> tab(n, std::vector<SparseVec<S>>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                tab[x][y] = a.mul.col[(long long)x * n + y];
        return tab;
    }
};

/* ----------------------------------------------------- crossed product ---- */

// (a⊗g)(b⊗h) = a(g⁽⁰⁾·b) ⊗ g⁽¹⁾h on A⊗H.
template <class S>
AlgebraData<S> crossed_product(const ModuleAlgebraData<S>& m)
{
    auto t = OpTables<S>::from(m);
    const int na = t.dim_a, nh = t.dim_h, n = na * nh;
    guard_dimension(n, "crossed product");

    AlgebraData<S> r;
    std::vector<std::string> labels;
    for (int a = 0; a < na; ++a)
        for (int g = 0; g < nh; ++g)
            labels.push_back(m.alg.space.label(a) + "⋊" + m.hopf.alg.space.label(g));
    r.space = BasedSpace(std::move(labels));
    r.mul = SparseMap<S>(n, n * n);
    for (int a = 0; a < na; ++a)
        for (int g = 0; g < nh; ++g)
            for (int b = 0; b < na; ++b)
                for (int h = 0; h < nh; ++h) {
                    VecBuilder<S> out(n);
                    for (const auto& [gg, c0] : t.comul[g]) // gg = (g0, g1)
                        for (const auto& [b2, c1] : t.act[gg.first][b].ent)
                            for (const auto& [a2, c2] : t.mul_a[a][b2].ent)
                                for (const auto& [h2, c3] : t.mul_h[gg.second][h].ent)
                                    out.add(a2 * nh + h2, c0 * c1 * c2 * c3);
                    long long src = ((long long)a * nh + g) * n + ((long long)b * nh + h);
                    r.mul.col[src] = out.take();
                }
    r.unit = SparseVec<S>(n);
    for (const auto& [a, ca] : m.alg.unit.ent)
        for (const auto& [g, cg] : m.hopf.alg.unit.ent)
            r.unit.set(a * nh + g, ca * cg);

    auto rep = verify_algebra(r);
    if (!rep.ok())
        throw Error("crossed product failed associativity re-verification: " + rep.first_failure());
    return r;
}

/* ------------------------------------------------ invariant subalgebra ---- */

template <class S>
struct InvariantSubalgebra {
    AlgebraData<S> sub;
    SparseMap<S> inclusion; // A^H -> A
};

// Joint kernel of action(h,·) − ε(h)·id over the basis of H; closure under
// multiplication is re-verified.
template <class S>
InvariantSubalgebra<S> invariant_subalgebra(const ModuleAlgebraData<S>& m)
{
    const int nh = m.dim_h(), na = m.dim_a();
    SparseMap<S> stacked(nh * na, na);
    for (int a = 0; a < na; ++a) {
        VecBuilder<S> out(nh * na);
        for (int h = 0; h < nh; ++h) {
            for (const auto& [r, c] : m.action.col[(long long)h * na + a].ent)
                out.add(h * na + r, c);
            out.add(h * na + a, -m.hopf.counit.col[h].at(0));
        }
        stacked.col[a] = out.take();
    }
    auto kk = rank_and_kernel(stacked);
    if (kk.kernel.empty())
        throw Error("invariant subalgebra is zero (unit should always be invariant)");

    InvariantSubalgebra<S> out;
    const int d = (int)kk.kernel.size();
    out.inclusion = SparseMap<S>(na, d);
    std::vector<std::string> labels;
    for (int k = 0; k < d; ++k) {
        out.inclusion.col[k] = kk.kernel[k];
        labels.push_back("v" + std::to_string(k));
    }
    out.sub.space = BasedSpace(std::move(labels));

    // coordinates w.r.t. the kernel basis
    ReducedSpan<S> span(na, d);
    for (int k = 0; k < d; ++k)
        span.insert(kk.kernel[k], unit_vec<S>(d, k));
    auto coords = [&](const SparseVec<S>& v) {
        auto [r, t] = span.reduce(v, SparseVec<S>(d));
        if (!r.is_zero())
            throw Error("invariant subalgebra is not closed under multiplication");
        SparseVec<S> c(d);
        for (const auto& [k, x] : t.ent)
            c.ent.push_back({k, -x});
        return c;
    };

    auto mul_a = OpTables<S>::mul_table(m.alg);
    out.sub.mul = SparseMap<S>(d, d * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            VecBuilder<S> prod(na);
            for (const auto& [i, ci] : kk.kernel[x].ent)
                for (const auto& [j, cj] : kk.kernel[y].ent)
                    for (const auto& [r, c] : mul_a[i][j].ent)
                        prod.add(r, ci * cj * c);
            out.sub.mul.col[(long long)x * d + y] = coords(prod.take());
        }
    out.sub.unit = coords(m.alg.unit);

    auto rep = verify_algebra(out.sub);
    if (!rep.ok())
        throw Error("invariant subalgebra failed re-verification: " + rep.first_failure());
    return out;
}

/* --------------------------------------------------- right integral ---- */

// Solves t·h = ε(h)t for all basis h, normalized to ε(t)=1; none when every
// right integral has vanishing counit (non-semisimple case).
template <class S>
std::optional<SparseVec<S>> find_right_integral(const HopfAlgebraData<S>& h)
{
    const int n = h.dim();
    auto mul = OpTables<S>::mul_table(h.alg);
    SparseMap<S> stacked(n * n, n);
    for (int t = 0; t < n; ++t) {
        VecBuilder<S> out(n * n);
        for (int x = 0; x < n; ++x) {
            for (const auto& [r, c] : mul[t][x].ent)
                out.add(x * n + r, c);
            out.add(x * n + t, -h.counit.col[x].at(0));
        }
        stacked.col[t] = out.take();
    }
    auto kk = rank_and_kernel(stacked);
    for (const auto& v : kk.kernel) {
        S eps(0);
        for (const auto& [i, c] : v.ent)
            eps = eps + h.counit.col[i].at(0) * c;
        if (!is_zero(eps)) {
            SparseVec<S> t = v;
            t.scale(S(1) / eps);
            return t;
        }
    }
    return std::nullopt;
}

} // namespace hopfcyc
