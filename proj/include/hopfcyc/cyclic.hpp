#pragma once

#include "elim.hpp"
#include "report.hpp"

#include <functional>
#include <vector>

namespace hopfcyc {

/* ------------------------------------------------------ module types ---- */

// Materialized (para)cyclic module: every operator is a concrete matrix per
// degree, so every identity below is a finite matrix equation.
template <class S>
struct ParacyclicModule {
    std::vector<int> dims;                        // dims[n], 0 <= n <= n_max
    std::vector<std::vector<SparseMap<S>>> face;  // face[n][i]: C_n -> C_{n-1}, n >= 1
    std::vector<std::vector<SparseMap<S>>> degen; // degen[n][i]: C_n -> C_{n+1}, n < n_max
    std::vector<SparseMap<S>> tau;                // tau[n]: C_n -> C_n

    int n_max() const { return (int)dims.size() - 1; }
};

// Bi-paracyclic grid.  The unbarred (horizontal) operators move q, the barred
// (vertical) ones move p; level (p,q) has p+1 vertical and q+1 horizontal
// slots.
template <class S>
struct CylindricalModule {
    int p_max = 0, q_max = 0;
    std::vector<std::vector<int>> dim;                            // dim[p][q]
    std::vector<std::vector<std::vector<SparseMap<S>>>> hface;    // [p][q][i]: ->(p,q-1)
    std::vector<std::vector<std::vector<SparseMap<S>>>> hdegen;   // [p][q][i]: ->(p,q+1)
    std::vector<std::vector<SparseMap<S>>> htau;                  // [p][q]
    std::vector<std::vector<std::vector<SparseMap<S>>>> vface;    // [p][q][j]: ->(p-1,q)
    std::vector<std::vector<std::vector<SparseMap<S>>>> vdegen;   // [p][q][j]: ->(p+1,q)
    std::vector<std::vector<SparseMap<S>>> vtau;                  // [p][q]

    void allocate(int pm, int qm)
    {
        p_max = pm;
        q_max = qm;
        auto grid3 = std::vector<std::vector<std::vector<SparseMap<S>>>>(
            pm + 1, std::vector<std::vector<SparseMap<S>>>(qm + 1));
        dim.assign(pm + 1, std::vector<int>(qm + 1, 0));
        hface = grid3;
        hdegen = grid3;
        vface = grid3;
        vdegen = grid3;
        htau.assign(pm + 1, std::vector<SparseMap<S>>(qm + 1));
        vtau.assign(pm + 1, std::vector<SparseMap<S>>(qm + 1));
    }

    // the q-direction paracyclic module at fixed p
    ParacyclicModule<S> row(int p) const
    {
        ParacyclicModule<S> m;
        m.dims.assign(dim[p].begin(), dim[p].end());
        m.face.resize(q_max + 1);
        m.degen.resize(q_max + 1);
        m.tau.resize(q_max + 1);
        for (int q = 0; q <= q_max; ++q) {
            if (q >= 1)
                m.face[q] = hface[p][q];
            if (q < q_max)
                m.degen[q] = hdegen[p][q];
            m.tau[q] = htau[p][q];
        }
        return m;
    }
    // the p-direction paracyclic module at fixed q
    ParacyclicModule<S> column(int q) const
    {
        ParacyclicModule<S> m;
        m.dims.resize(p_max + 1);
        m.face.resize(p_max + 1);
        m.degen.resize(p_max + 1);
        m.tau.resize(p_max + 1);
        for (int p = 0; p <= p_max; ++p) {
            m.dims[p] = dim[p][q];
            if (p >= 1)
                m.face[p] = vface[p][q];
            if (p < p_max)
                m.degen[p] = vdegen[p][q];
            m.tau[p] = vtau[p][q];
        }
        return m;
    }
};

/* -------------------------------------------------------- verifiers ---- */

namespace detail {

template <class S>
void check_id(CheckReport& rep, const std::string& name, const SparseMap<S>& lhs,
              const SparseMap<S>& rhs)
{
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
        rep.add(name, false, "shape mismatch");
        return;
    }
    for (int j = 0; j < lhs.cols; ++j)
        if (!(lhs.col[j] == rhs.col[j])) {
            SparseVec<S> d = lhs.col[j];
            d.axpy(S(-1), rhs.col[j]);
            rep.add(name, false,
                    "basis column " + std::to_string(j) + ", row "
                        + std::to_string(d.ent.front().first));
            return;
        }
    rep.add(name, true);
}

template <class S>
SparseMap<S> power(const SparseMap<S>& m, int k)
{
    SparseMap<S> out = SparseMap<S>::identity(m.rows);
    for (int i = 0; i < k; ++i)
        out = m.compose(out);
    return out;
}

} // namespace detail

// All simplicial and Λ∞ identities, degree by degree (only identities whose
// operators exist within the cap are checked).
template <class S>
CheckReport verify_paracyclic(const ParacyclicModule<S>& m, int n_cap = -1)
{
    using detail::check_id;
    CheckReport rep;
    int top = n_cap < 0 ? m.n_max() : std::min(n_cap, m.n_max());
    for (int n = 0; n <= top; ++n) {
        std::string at = "n=" + std::to_string(n) + ": ";
        // ∂_i ∂_j = ∂_{j-1} ∂_i  (i < j), maps C_n -> C_{n-2}
        if (n >= 2)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    check_id(rep,
                             at + "∂_" + std::to_string(i) + "∂_" + std::to_string(j)
                                 + " = ∂_" + std::to_string(j - 1) + "∂_" + std::to_string(i),
                             m.face[n - 1][i].compose(m.face[n][j]),
                             m.face[n - 1][j - 1].compose(m.face[n][i]));
        // σ_i σ_j = σ_{j+1} σ_i  (i <= j), maps C_n -> C_{n+2}
        if (n + 2 <= m.n_max())
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    check_id(rep,
                             at + "σ_" + std::to_string(i) + "σ_" + std::to_string(j)
                                 + " = σ_" + std::to_string(j + 1) + "σ_" + std::to_string(i),
                             m.degen[n + 1][i].compose(m.degen[n][j]),
                             m.degen[n + 1][j + 1].compose(m.degen[n][i]));
        // ∂_i σ_j, maps C_n -> C_n
        if (n + 1 <= m.n_max())
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    auto lhs = m.face[n + 1][i].compose(m.degen[n][j]);
                    std::string nm = at + "∂_" + std::to_string(i) + "σ_" + std::to_string(j);
                    if (i == j || i == j + 1)
                        check_id(rep, nm + " = id", lhs, SparseMap<S>::identity(m.dims[n]));
                    else if (i < j)
                        check_id(rep, nm + " = σ_" + std::to_string(j - 1) + "∂_" + std::to_string(i),
                                 lhs, m.degen[n - 1][j - 1].compose(m.face[n][i]));
                    else
                        check_id(rep, nm + " = σ_" + std::to_string(j) + "∂_" + std::to_string(i - 1),
                                 lhs, m.degen[n - 1][j].compose(m.face[n][i - 1]));
                }
        // Λ∞: ∂_i τ_n = τ_{n-1} ∂_{i-1} (1<=i<=n), ∂_0 τ_n = ∂_n
        if (n >= 1) {
            for (int i = 1; i <= n; ++i)
                check_id(rep, at + "∂_" + std::to_string(i) + "τ = τ∂_" + std::to_string(i - 1),
                         m.face[n][i].compose(m.tau[n]), m.tau[n - 1].compose(m.face[n][i - 1]));
            check_id(rep, at + "∂_0 τ = ∂_n", m.face[n][0].compose(m.tau[n]), m.face[n][n]);
        }
        // σ_i τ_n = τ_{n+1} σ_{i-1} (1<=i<=n), σ_0 τ_n = τ_{n+1}² σ_n
        if (n + 1 <= m.n_max()) {
            for (int i = 1; i <= n; ++i)
                check_id(rep, at + "σ_" + std::to_string(i) + "τ = τσ_" + std::to_string(i - 1),
                         m.degen[n][i].compose(m.tau[n]), m.tau[n + 1].compose(m.degen[n][i - 1]));
            check_id(rep, at + "σ_0 τ = τ²σ_n", m.degen[n][0].compose(m.tau[n]),
                     m.tau[n + 1].compose(m.tau[n + 1]).compose(m.degen[n][n]));
        }
    }
    return rep;
}

template <class S>
CheckReport verify_cyclic(const ParacyclicModule<S>& m, int n_cap = -1)
{
    CheckReport rep = verify_paracyclic(m, n_cap);
    int top = n_cap < 0 ? m.n_max() : std::min(n_cap, m.n_max());
    for (int n = 0; n <= top; ++n)
        detail::check_id(rep, "n=" + std::to_string(n) + ": τ^{n+1} = id",
                         detail::power(m.tau[n], n + 1), SparseMap<S>::identity(m.dims[n]));
    return rep;
}

// Rows and columns paracyclic, all horizontal/vertical operator pairs commute,
// and the cylindrical condition: both full rotations compose to the identity.
template <class S>
CheckReport verify_cylindrical(const CylindricalModule<S>& c, int p_cap = -1, int q_cap = -1)
{
    using detail::check_id;
    CheckReport rep;
    int pm = p_cap < 0 ? c.p_max : std::min(p_cap, c.p_max);
    int qm = q_cap < 0 ? c.q_max : std::min(q_cap, c.q_max);

    for (int p = 0; p <= pm; ++p)
        rep.merge(verify_paracyclic(c.row(p), qm), "row p=" + std::to_string(p) + ": ");
    for (int q = 0; q <= qm; ++q)
        rep.merge(verify_paracyclic(c.column(q), pm), "column q=" + std::to_string(q) + ": ");

    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            std::string at = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + "): ";
            // horizontal ops: faces (q>=1), degens (q<qm), tau; vertical likewise
            // ∂̄_j ∂_i = ∂_i ∂̄_j
            if (p >= 1 && q >= 1)
                for (int i = 0; i <= q; ++i)
                    for (int j = 0; j <= p; ++j)
                        check_id(rep, at + "∂̄∂ = ∂∂̄ (i=" + std::to_string(i) + ",j="
                                          + std::to_string(j) + ")",
                                 c.vface[p][q - 1][j].compose(c.hface[p][q][i]),
                                 c.hface[p - 1][q][i].compose(c.vface[p][q][j]));
            // σ̄_j ∂_i = ∂_i σ̄_j
            if (p < pm && q >= 1)
                for (int i = 0; i <= q; ++i)
                    for (int j = 0; j <= p; ++j)
                        check_id(rep, at + "σ̄∂ = ∂σ̄ (i=" + std::to_string(i) + ",j="
                                          + std::to_string(j) + ")",
                                 c.vdegen[p][q - 1][j].compose(c.hface[p][q][i]),
                                 c.hface[p + 1][q][i].compose(c.vdegen[p][q][j]));
            // τ̄ ∂_i = ∂_i τ̄
            if (q >= 1)
                for (int i = 0; i <= q; ++i)
                    check_id(rep, at + "τ̄∂ = ∂τ̄ (i=" + std::to_string(i) + ")",
                             c.vtau[p][q - 1].compose(c.hface[p][q][i]),
                             c.hface[p][q][i].compose(c.vtau[p][q]));
            // ∂̄_j σ_i = σ_i ∂̄_j
            if (p >= 1 && q < qm)
                for (int i = 0; i <= q; ++i)
                    for (int j = 0; j <= p; ++j)
                        check_id(rep, at + "∂̄σ = σ∂̄ (i=" + std::to_string(i) + ",j="
                                          + std::to_string(j) + ")",
                                 c.vface[p][q + 1][j].compose(c.hdegen[p][q][i]),
                                 c.hdegen[p - 1][q][i].compose(c.vface[p][q][j]));
            // σ̄_j σ_i = σ_i σ̄_j
            if (p < pm && q < qm)
                for (int i = 0; i <= q; ++i)
                    for (int j = 0; j <= p; ++j)
                        check_id(rep, at + "σ̄σ = σσ̄ (i=" + std::to_string(i) + ",j="
                                          + std::to_string(j) + ")",
                                 c.vdegen[p][q + 1][j].compose(c.hdegen[p][q][i]),
                                 c.hdegen[p + 1][q][i].compose(c.vdegen[p][q][j]));
            // τ̄ σ_i = σ_i τ̄
            if (q < qm)
                for (int i = 0; i <= q; ++i)
                    check_id(rep, at + "τ̄σ = στ̄ (i=" + std::to_string(i) + ")",
                             c.vtau[p][q + 1].compose(c.hdegen[p][q][i]),
                             c.hdegen[p][q][i].compose(c.vtau[p][q]));
            // ∂̄_j τ = τ ∂̄_j, σ̄_j τ = τ σ̄_j
            if (p >= 1)
                for (int j = 0; j <= p; ++j)
                    check_id(rep, at + "∂̄τ = τ∂̄ (j=" + std::to_string(j) + ")",
                             c.vface[p][q][j].compose(c.htau[p][q]),
                             c.htau[p - 1][q].compose(c.vface[p][q][j]));
            if (p < pm)
                for (int j = 0; j <= p; ++j)
                    check_id(rep, at + "σ̄τ = τσ̄ (j=" + std::to_string(j) + ")",
                             c.vdegen[p][q][j].compose(c.htau[p][q]),
                             c.htau[p + 1][q].compose(c.vdegen[p][q][j]));
            check_id(rep, at + "τ̄τ = ττ̄", c.vtau[p][q].compose(c.htau[p][q]),
                     c.htau[p][q].compose(c.vtau[p][q]));
            // cylindrical condition: full rotations are mutually inverse
            auto id = SparseMap<S>::identity(c.dim[p][q]);
            check_id(rep, at + "τ̄^{p+1} τ^{q+1} = id",
                     detail::power(c.vtau[p][q], p + 1)
                         .compose(detail::power(c.htau[p][q], q + 1)),
                     id);
            check_id(rep, at + "τ^{q+1} τ̄^{p+1} = id",
                     detail::power(c.htau[p][q], q + 1)
                         .compose(detail::power(c.vtau[p][q], p + 1)),
                     id);
        }
    return rep;
}

/* ---------------------------------------------------------- diagonal ---- */

// Δ(X)_n = X(n,n) with ∂̄_i∂_i, σ̄_iσ_i, τ̄τ; refuses input that does not
// satisfy the cylindrical condition.
template <class S>
ParacyclicModule<S> diagonal(const CylindricalModule<S>& c)
{
    int top = std::min(c.p_max, c.q_max);
    for (int n = 0; n <= top; ++n) {
        auto full = detail::power(c.vtau[n][n], n + 1).compose(detail::power(c.htau[n][n], n + 1));
        if (!full.is_identity())
            throw Error("diagonal: cylindrical condition fails at (p,q)=(" + std::to_string(n)
                        + "," + std::to_string(n) + ")");
    }
    ParacyclicModule<S> d;
    d.dims.resize(top + 1);
    d.face.resize(top + 1);
    d.degen.resize(top + 1);
    d.tau.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        d.dims[n] = c.dim[n][n];
        d.tau[n] = c.vtau[n][n].compose(c.htau[n][n]);
        if (n >= 1) {
            d.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                d.face[n][i] = c.vface[n][n - 1][i].compose(c.hface[n][n][i]);
        }
        if (n < top) {
            d.degen[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                d.degen[n][i] = c.vdegen[n][n + 1][i].compose(c.hdegen[n][n][i]);
        }
    }
    return d;
}

/* ----------------------------------------------------- b, B, N, T ---- */

template <class S>
SparseMap<S> b_operator(const ParacyclicModule<S>& m, int n)
{
    if (n == 0)
        return SparseMap<S>::zero(0, m.dims[0]);
    SparseMap<S> b = SparseMap<S>::zero(m.dims[n - 1], m.dims[n]);
    S sign(1);
    for (int i = 0; i <= n; ++i) {
        SparseMap<S> f = m.face[n][i];
        f.scale(sign);
        b += f;
        sign = -sign;
    }
    return b;
}

template <class S>
SparseMap<S> norm_operator(const ParacyclicModule<S>& m, int n)
{
    SparseMap<S> acc = SparseMap<S>::zero(m.dims[n], m.dims[n]);
    SparseMap<S> pw = SparseMap<S>::identity(m.dims[n]);
    for (int i = 0; i <= n; ++i) {
        SparseMap<S> term = pw;
        if ((i * n) % 2)
            term.scale(S(-1));
        acc += term;
        pw = m.tau[n].compose(pw);
    }
    return acc;
}

// extra degeneracy σ = τ_{n+1} ∘ σ_n; satisfies τσ_0 = στ (asserted in tests)
template <class S>
SparseMap<S> extra_degeneracy(const ParacyclicModule<S>& m, int n)
{
    return m.tau[n + 1].compose(m.degen[n][n]);
}

// B = (1 − (−1)^{n+1} τ) σ N : C_n -> C_{n+1}
template <class S>
SparseMap<S> B_operator(const ParacyclicModule<S>& m, int n)
{
    auto sigma_n = extra_degeneracy(m, n);
    auto head = SparseMap<S>::identity(m.dims[n + 1]);
    SparseMap<S> tau_term = m.tau[n + 1];
    if ((n + 1) % 2 == 0)
        tau_term.scale(S(-1));
    head = head - tau_term;
    return head.compose(sigma_n).compose(norm_operator(m, n));
}

/* -------------------------------------------------- chain complexes ---- */

template <class S>
struct ChainComplex {
    std::vector<int> dims;        // dims[n]
    std::vector<SparseMap<S>> d;  // d[n]: C_n -> C_{n-1} for n >= 1; d[0] unused

    int top() const { return (int)dims.size() - 1; }

    void validate() const
    {
        for (int n = 2; n <= top(); ++n)
            if (!d[n - 1].compose(d[n]).is_zero_map())
                throw Error("chain complex: d∘d != 0 at degree " + std::to_string(n));
    }

    SparseMap<S> boundary_out(int n) const
    {
        return n == 0 ? SparseMap<S>::zero(0, dims[0]) : d[n];
    }

    // homology dimensions for 0..up_to (needs levels up to up_to+1)
    std::vector<int> homology(int up_to) const
    {
        if (up_to + 1 > top())
            throw InputError("chain complex too short for requested homology range");
        std::vector<int> h;
        for (int n = 0; n <= up_to; ++n)
            h.push_back(homology_dimension(d[n + 1], boundary_out(n)));
        return h;
    }

    Subquotient<S> homology_basis(int n) const
    {
        return homology_subquotient(d[n + 1], boundary_out(n));
    }
};

/* ------------------------------------------------ normalized complex ---- */

// Quotient by the degeneracy images with induced b and B; the induced maps
// are checked to descend.  (τ itself does not preserve degenerate chains —
// only the combinations b and B do.)
template <class S>
struct NormalizedComplex {
    std::vector<Subquotient<S>> level;
    std::vector<SparseMap<S>> b; // b[n]: N_n -> N_{n-1}, n >= 1
    std::vector<SparseMap<S>> B; // B[n]: N_n -> N_{n+1}, n < top

    int top() const { return (int)level.size() - 1; }
    int dim(int n) const { return level[n].dim(); }

    ChainComplex<S> b_complex() const
    {
        ChainComplex<S> c;
        c.dims.resize(level.size());
        c.d.resize(level.size());
        for (int n = 0; n <= top(); ++n) {
            c.dims[n] = level[n].dim();
            if (n >= 1)
                c.d[n] = b[n];
        }
        return c;
    }

    // T = 1 − (bB + Bb) on N_n (valid for n < top)
    SparseMap<S> twist(int n) const
    {
        SparseMap<S> t = SparseMap<S>::identity(dim(n));
        t = t - b[n + 1].compose(B[n]);
        if (n >= 1)
            t = t - B[n - 1].compose(b[n]);
        return t;
    }
};

template <class S>
std::vector<SparseVec<S>> degeneracy_span(const ParacyclicModule<S>& m, int n)
{
    std::vector<SparseVec<S>> gens;
    if (n >= 1)
        for (int i = 0; i <= n - 1; ++i)
            for (const auto& c : m.degen[n - 1][i].col)
                gens.push_back(c);
    return gens;
}

template <class S>
NormalizedComplex<S> normalized_complex(const ParacyclicModule<S>& m)
{
    NormalizedComplex<S> nc;
    int top = m.n_max();
    nc.level.resize(top + 1);
    std::vector<std::vector<SparseVec<S>>> spans(top + 1);
    for (int n = 0; n <= top; ++n) {
        spans[n] = degeneracy_span(m, n);
        nc.level[n] = Subquotient<S>::quotient(m.dims[n], spans[n]);
    }
    nc.b.resize(top + 1);
    nc.B.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        if (n >= 1) {
            auto braw = b_operator(m, n);
            if (!check_descends(braw, spans[n], nc.level[n - 1]))
                throw Error("normalized complex: b does not descend at n=" + std::to_string(n));
            nc.b[n] = induced_map(braw, nc.level[n], nc.level[n - 1]);
        }
        if (n < top) {
            auto Braw = B_operator(m, n);
            if (!check_descends(Braw, spans[n], nc.level[n + 1]))
                throw Error("normalized complex: B does not descend at n=" + std::to_string(n));
            nc.B[n] = induced_map(Braw, nc.level[n], nc.level[n + 1]);
        }
    }
    return nc;
}

/* ------------------------------------------------------ total complex ---- */

// Tot of the binormalized cylinder.  Sign convention pinned by Tot(b)² = 0:
//   Tot(b)|(p,q) = b + (−1)^q b̄         (b̄ keeps the A-degree q fixed)
//   Tot(B)|(p,q) = B + (−1)^q T∘B̄       (T the horizontal twist at (p+1,q))
// giving the parachain twist Tot(T) = T·T̄ per bidegree.
template <class S>
struct TotParachain {
    int n_top = 0;

    // binormalized data per bidegree
    std::vector<std::vector<Subquotient<S>>> norm; // norm[p][q]
    std::vector<std::vector<SparseMap<S>>> hb, vb; // induced boundaries
    std::vector<std::vector<SparseMap<S>>> hB, vB; // induced Connes operators
    std::vector<std::vector<SparseMap<S>>> hT;     // horizontal twist

    // assembled Tot levels (normalized), summand p ascending
    std::vector<int> dims;
    std::vector<std::vector<int>> offsets; // offsets[n][p]
    std::vector<SparseMap<S>> b, B, T;

    // unnormalized assembly, for chain-map identities at the raw level
    std::vector<int> raw_dims;
    std::vector<std::vector<int>> raw_offsets;
    std::vector<SparseMap<S>> raw_b;
};

template <class S>
std::vector<SparseVec<S>> bidegree_degeneracy_span(const CylindricalModule<S>& c, int p, int q)
{
    std::vector<SparseVec<S>> gens;
    if (q >= 1)
        for (int i = 0; i <= q - 1; ++i)
            for (const auto& col : c.hdegen[p][q - 1][i].col)
                gens.push_back(col);
    if (p >= 1)
        for (int j = 0; j <= p - 1; ++j)
            for (const auto& col : c.vdegen[p - 1][q][j].col)
                gens.push_back(col);
    return gens;
}

template <class S>
SparseMap<S> row_b(const CylindricalModule<S>& c, int p, int q) // horizontal boundary
{
    SparseMap<S> b = SparseMap<S>::zero(c.dim[p][q - 1], c.dim[p][q]);
    S sign(1);
    for (int i = 0; i <= q; ++i) {
        SparseMap<S> f = c.hface[p][q][i];
        f.scale(sign);
        b += f;
        sign = -sign;
    }
    return b;
}
template <class S>
SparseMap<S> column_b(const CylindricalModule<S>& c, int p, int q) // vertical boundary
{
    SparseMap<S> b = SparseMap<S>::zero(c.dim[p - 1][q], c.dim[p][q]);
    S sign(1);
    for (int j = 0; j <= p; ++j) {
        SparseMap<S> f = c.vface[p][q][j];
        f.scale(sign);
        b += f;
        sign = -sign;
    }
    return b;
}

template <class S>
TotParachain<S> tot_parachain(const CylindricalModule<S>& c)
{
    TotParachain<S> t;
    t.n_top = std::min(c.p_max, c.q_max);
    const int pm = c.p_max, qm = c.q_max;

    t.norm.assign(pm + 1, std::vector<Subquotient<S>>(qm + 1));
    t.hb.assign(pm + 1, std::vector<SparseMap<S>>(qm + 1));
    t.vb = t.hb;
    t.hB = t.hb;
    t.vB = t.hb;
    t.hT = t.hb;

    std::vector<std::vector<std::vector<SparseVec<S>>>> spans(
        pm + 1, std::vector<std::vector<SparseVec<S>>>(qm + 1));
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            spans[p][q] = bidegree_degeneracy_span(c, p, q);
            t.norm[p][q] = Subquotient<S>::quotient(c.dim[p][q], spans[p][q]);
        }
    auto induce = [&](const SparseMap<S>& raw, int p, int q, int tp, int tq, const char* what) {
        if (!check_descends(raw, spans[p][q], t.norm[tp][tq]))
            throw Error(std::string("tot: ") + what + " does not descend");
        return induced_map(raw, t.norm[p][q], t.norm[tp][tq]);
    };
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            if (q >= 1)
                t.hb[p][q] = induce(row_b(c, p, q), p, q, p, q - 1, "horizontal b");
            if (p >= 1)
                t.vb[p][q] = induce(column_b(c, p, q), p, q, p - 1, q, "vertical b");
            if (q < qm) {
                auto row = c.row(p);
                t.hB[p][q] = induce(B_operator(row, q), p, q, p, q + 1, "horizontal B");
            }
            if (p < pm) {
                auto col = c.column(q);
                t.vB[p][q] = induce(B_operator(col, p), p, q, p + 1, q, "vertical B");
            }
        }
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q < qm; ++q) {
            SparseMap<S> tw = SparseMap<S>::identity(t.norm[p][q].dim());
            tw = tw - t.hb[p][q + 1].compose(t.hB[p][q]);
            if (q >= 1)
                tw = tw - t.hB[p][q - 1].compose(t.hb[p][q]);
            t.hT[p][q] = tw;
        }

    // assemble (both normalized and raw)
    auto assemble_dims = [&](auto dim_of, std::vector<int>& dims,
                             std::vector<std::vector<int>>& offs) {
        dims.assign(t.n_top + 1, 0);
        offs.assign(t.n_top + 1, {});
        for (int n = 0; n <= t.n_top; ++n) {
            offs[n].resize(n + 1, 0);
            for (int p = 0; p <= n; ++p) {
                offs[n][p] = dims[n];
                dims[n] += dim_of(p, n - p);
            }
        }
    };
    assemble_dims([&](int p, int q) { return t.norm[p][q].dim(); }, t.dims, t.offsets);
    assemble_dims([&](int p, int q) { return c.dim[p][q]; }, t.raw_dims, t.raw_offsets);

    auto place_block = [](SparseMap<S>& big, const SparseMap<S>& blk, int roff, int coff,
                          const S& sign) {
        for (int j = 0; j < blk.cols; ++j)
            for (const auto& [r, v] : blk.col[j].ent)
                big.add_entry(roff + r, coff + j, sign * v);
    };

    t.b.resize(t.n_top + 1);
    t.B.resize(t.n_top + 1);
    t.T.resize(t.n_top + 1);
    t.raw_b.resize(t.n_top + 1);
    for (int n = 1; n <= t.n_top; ++n) {
        SparseMap<S> bn(t.dims[n - 1], t.dims[n]);
        SparseMap<S> rbn(t.raw_dims[n - 1], t.raw_dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            S sgn = (q % 2) ? S(-1) : S(1);
            if (q >= 1) {
                place_block(bn, t.hb[p][q], t.offsets[n - 1][p], t.offsets[n][p], S(1));
                place_block(rbn, row_b(c, p, q), t.raw_offsets[n - 1][p], t.raw_offsets[n][p],
                            S(1));
            }
            if (p >= 1) {
                place_block(bn, t.vb[p][q], t.offsets[n - 1][p - 1], t.offsets[n][p], sgn);
                place_block(rbn, column_b(c, p, q), t.raw_offsets[n - 1][p - 1],
                            t.raw_offsets[n][p], sgn);
            }
        }
        t.b[n] = std::move(bn);
        t.raw_b[n] = std::move(rbn);
    }
    for (int n = 0; n < t.n_top; ++n) {
        SparseMap<S> Bn(t.dims[n + 1], t.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            S sgn = (q % 2) ? S(-1) : S(1);
            place_block(Bn, t.hB[p][q], t.offsets[n + 1][p], t.offsets[n][p], S(1));
            place_block(Bn, t.hT[p + 1][q].compose(t.vB[p][q]), t.offsets[n + 1][p + 1],
                        t.offsets[n][p], sgn);
        }
        t.B[n] = std::move(Bn);
    }
    for (int n = 0; n < t.n_top; ++n) {
        SparseMap<S> tw = SparseMap<S>::identity(t.dims[n]);
        tw = tw - t.b[n + 1].compose(t.B[n]);
        if (n >= 1)
            tw = tw - t.B[n - 1].compose(t.b[n]);
        t.T[n] = tw;
    }
    return t;
}

/* ------------------------------------------------------- shuffle map ---- */

// Classical (q,p)-shuffle map Tot_n -> Δ_n on the raw cylinder: on the (p,q)
// summand, sum over subsets M ⊂ {0..n−1} of size q of
//   sign(M) · (σ̄_{M, ascending}) ∘ (σ_{complement, ascending})
// with the Koszul shuffle sign.  The normalized version is induced (shuffles
// of degenerate chains are diagonally degenerate).
template <class S>
struct ShuffleF0 {
    std::vector<SparseMap<S>> raw;     // raw[n]: raw Tot_n -> X(n,n)
    std::vector<SparseMap<S>> induced; // between normalized models
};

template <class S>
ShuffleF0<S> shuffle_f0(const CylindricalModule<S>& c, const TotParachain<S>& tot,
                        const NormalizedComplex<S>& diag_norm)
{
    ShuffleF0<S> f;
    const int n_top = tot.n_top;
    f.raw.resize(n_top + 1);
    f.induced.resize(n_top + 1);
    for (int n = 0; n <= n_top; ++n) {
        SparseMap<S> fn(c.dim[n][n], tot.raw_dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            // subsets M of {0..n-1} with |M| = q: barred degeneracy indices
            std::vector<int> comb(q);
            for (int i = 0; i < q; ++i)
                comb[i] = i;
            while (true) {
                std::vector<int> nu;
                {
                    std::vector<bool> in(n, false);
                    for (int m : comb)
                        in[m] = true;
                    for (int i = 0; i < n; ++i)
                        if (!in[i])
                            nu.push_back(i);
                }
                long long eps = 0;
                for (int i = 0; i < q; ++i)
                    eps += comb[i] - i;
                SparseMap<S> term = SparseMap<S>::identity(c.dim[p][q]);
                {
                    int lvl = q;
                    for (int k = 0; k < (int)nu.size(); ++k) {
                        term = c.hdegen[p][lvl][nu[k]].compose(term);
                        ++lvl;
                    }
                    int vl = p;
                    for (int k = 0; k < q; ++k) {
                        term = c.vdegen[vl][n][comb[k]].compose(term);
                        ++vl;
                    }
                }
                if (eps % 2)
                    term.scale(S(-1));
                for (int j = 0; j < term.cols; ++j)
                    for (const auto& [r, v] : term.col[j].ent)
                        fn.add_entry(r, tot.raw_offsets[n][p] + j, v);
                // next combination
                if (q == 0)
                    break;
                int k = q - 1;
                while (k >= 0 && comb[k] == n - q + k)
                    --k;
                if (k < 0)
                    break;
                ++comb[k];
                for (int i = k + 1; i < q; ++i)
                    comb[i] = comb[i - 1] + 1;
            }
        }
        f.raw[n] = std::move(fn);
    }
    // induce on the normalized models: check the raw map sends every
    // degeneracy-span generator of every summand into the diagonal span
    for (int n = 0; n <= n_top; ++n) {
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            for (const auto& g : bidegree_degeneracy_span(c, p, q)) {
                SparseVec<S> emb(tot.raw_dims[n]);
                for (const auto& [i, v] : g.ent)
                    emb.ent.push_back({tot.raw_offsets[n][p] + i, v});
                auto img = f.raw[n].apply(emb);
                if (!diag_norm.level[n].project(img).is_zero())
                    throw Error("shuffle map does not descend to normalized models");
            }
        }
        // matrix of the induced map: lift from normalized Tot, apply, project
        SparseMap<S> m(diag_norm.level[n].dim(), tot.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            for (int k = 0; k < tot.norm[p][q].dim(); ++k) {
                SparseVec<S> rep = tot.norm[p][q].reps()[k];
                SparseVec<S> emb(tot.raw_dims[n]);
                for (const auto& [i, v] : rep.ent)
                    emb.ent.push_back({tot.raw_offsets[n][p] + i, v});
                m.col[tot.offsets[n][p] + k] = diag_norm.level[n].project(f.raw[n].apply(emb));
            }
        }
        f.induced[n] = std::move(m);
    }
    return f;
}

} // namespace hopfcyc
