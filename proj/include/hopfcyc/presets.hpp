#pragma once

#include "hopf.hpp"

#include <functional>
#include <optional>

namespace hopfcyc {

struct PresetInfo {
    std::string name;
    std::string description;
    int max_degree;   // default homology/comparison cap
    int max_p, max_q; // default cylinder caps
    std::string default_field; // "Q" or "Fp <p>"
};

inline const std::vector<PresetInfo>& preset_list()
{
    static const std::vector<PresetInfo> presets = {
        {"trivial-k", "H = k (trivial Hopf algebra) acting on k[Z/2]", 3, 3, 3, "Q"},
        {"group-z2", "H = k[Z/2] with the trivial action on k", 3, 3, 3, "Q"},
        {"group-z3", "H = k[Z/3] with the trivial action on k", 3, 3, 3, "Q"},
        {"group-s3", "H = k[S3] with the trivial action on k", 2, 2, 2, "Q"},
        {"group-sign-z2", "H = k[Z/2] acting on k[Z/2] by the sign automorphism", 3, 3, 3, "Q"},
        {"sweedler4-dual-numbers", "Sweedler's 4-dim Hopf algebra on k[y]/(y^2)", 2, 2, 2, "Q"},
        {"taft-3", "Taft algebra T_3(ω) on k[y]/(y^3); needs a cube root of unity", 1, 1, 1,
         "Fp 7"},
    };
    return presets;
}

inline const PresetInfo& preset_info(const std::string& name)
{
    for (const auto& p : preset_list())
        if (p.name == name)
            return p;
    throw SpecParseError("unknown preset '" + name + "'");
}

namespace detail {

// product of two element vectors under a multiplication map
template <class S>
SparseVec<S> mult_vec(const SparseMap<S>& mul, const SparseVec<S>& u, const SparseVec<S>& v)
{
    VecBuilder<S> out(mul.rows);
    for (const auto& [i, ci] : u.ent)
        for (const auto& [j, cj] : v.ent) {
            const auto& col = mul.col[(long long)i * v.dim + j];
            for (const auto& [r, c] : col.ent)
                out.add(r, ci * cj * c);
        }
    return out.take();
}

template <class S>
HopfAlgebraData<S> group_algebra_hopf(const std::vector<std::string>& labels,
                                      const std::function<int(int, int)>& cayley,
                                      const std::function<int(int)>& inverse)
{
    const int n = (int)labels.size();
    HopfAlgebraData<S> h;
    h.alg.space = BasedSpace(labels);
    h.alg.mul = SparseMap<S>(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h.alg.mul.col[(long long)i * n + j] = unit_vec<S>(n, cayley(i, j));
    h.alg.unit = unit_vec<S>(n, 0);
    h.comul = SparseMap<S>(n * n, n);
    h.counit = SparseMap<S>(1, n);
    SparseMap<S> s(n, n), si(n, n);
    for (int i = 0; i < n; ++i) {
        h.comul.col[i] = unit_vec<S>(n * n, i * n + i);
        h.counit.col[i] = unit_vec<S>(1, 0);
        s.col[i] = unit_vec<S>(n, inverse(i));
        si.col[i] = unit_vec<S>(n, inverse(i));
    }
    h.antipode = s;
    h.antipode_inverse = si;
    return h;
}

template <class S>
AlgebraData<S> base_field_algebra()
{
    AlgebraData<S> a;
    a.space = BasedSpace({"1"});
    a.mul = SparseMap<S>::identity(1);
    a.unit = unit_vec<S>(1, 0);
    return a;
}

template <class S>
AlgebraData<S> truncated_polynomial_algebra(int order) // k[y]/(y^order)
{
    AlgebraData<S> a;
    std::vector<std::string> labels;
    for (int k = 0; k < order; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? "y" : "y^" + std::to_string(k)));
    a.space = BasedSpace(labels);
    a.mul = SparseMap<S>(order, order * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (i + j < order)
                a.mul.col[(long long)i * order + j] = unit_vec<S>(order, i + j);
    a.unit = unit_vec<S>(order, 0);
    return a;
}

// trivial action h·a = ε(h)a
template <class S>
SparseMap<S> trivial_action(const HopfAlgebraData<S>& h, const AlgebraData<S>& a)
{
    const int nh = h.dim(), na = a.dim();
    SparseMap<S> act(na, nh * na);
    for (int i = 0; i < nh; ++i) {
        S eps = h.counit.col[i].at(0);
        for (int j = 0; j < na; ++j) {
            SparseVec<S> v(na);
            if (!is_zero(eps))
                v.ent.push_back({j, eps});
            act.col[(long long)i * na + j] = v;
        }
    }
    return act;
}

template <class S>
ModuleAlgebraData<S> sweedler4()
{
    // basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx
    HopfAlgebraData<S> h;
    h.alg.space = BasedSpace({"1", "g", "x", "gx"});
    const int n = 4;
    auto& mul = h.alg.mul;
    mul = SparseMap<S>(n, n * n);
    auto set = [&](int i, int j, int r, long long c) {
        if (c != 0)
            mul.col[(long long)i * n + j] = [&] {
                SparseVec<S> v(n);
                v.ent.push_back({r, S(c)});
                return v;
            }();
        else
            mul.col[(long long)i * n + j] = SparseVec<S>(n);
    };
    // rows/cols: 0:1  1:g  2:x  3:gx
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1); set(1, 3, 2, 1);
    set(2, 0, 2, 1); set(2, 1, 3, -1); set(2, 2, 0, 0); set(2, 3, 0, 0);
    set(3, 0, 3, 1); set(3, 1, 2, -1); set(3, 2, 0, 0); set(3, 3, 0, 0);
    h.alg.unit = unit_vec<S>(n, 0);

    h.comul = SparseMap<S>(n * n, n);
    h.comul.col[0] = unit_vec<S>(n * n, 0 * n + 0);                       // 1⊗1
    h.comul.col[1] = unit_vec<S>(n * n, 1 * n + 1);                       // g⊗g
    h.comul.col[2].dim = n * n;                                          // x⊗1 + g⊗x
    h.comul.col[2].ent = {{1 * n + 2, S(1)}, {2 * n + 0, S(1)}};
    h.comul.col[3].dim = n * n;                                          // gx⊗g + 1⊗gx
    h.comul.col[3].ent = {{0 * n + 3, S(1)}, {3 * n + 1, S(1)}};

    h.counit = SparseMap<S>(1, n);
    h.counit.col[0] = unit_vec<S>(1, 0);
    h.counit.col[1] = unit_vec<S>(1, 0);

    SparseMap<S> s(n, n);
    s.col[0] = unit_vec<S>(n, 0);
    s.col[1] = unit_vec<S>(n, 1);
    s.col[2].dim = n; s.col[2].ent = {{3, S(-1)}}; // S(x) = −gx
    s.col[3] = unit_vec<S>(n, 2);                  // S(gx) = x
    h.antipode = s;
    h.antipode_inverse = inverse_of(s);

    ModuleAlgebraData<S> m;
    m.hopf = h;
    m.alg = truncated_polynomial_algebra<S>(2);
    // g·y = −y, x·y = 1, gx·y = 1
    m.action = SparseMap<S>(2, n * 2);
    m.action.col[0 * 2 + 0] = unit_vec<S>(2, 0);
    m.action.col[0 * 2 + 1] = unit_vec<S>(2, 1);
    m.action.col[1 * 2 + 0] = unit_vec<S>(2, 0);
    m.action.col[1 * 2 + 1].dim = 2;
    m.action.col[1 * 2 + 1].ent = {{1, S(-1)}};
    m.action.col[2 * 2 + 0] = SparseVec<S>(2);
    m.action.col[2 * 2 + 1] = unit_vec<S>(2, 0);
    m.action.col[3 * 2 + 0] = SparseVec<S>(2);
    m.action.col[3 * 2 + 1] = unit_vec<S>(2, 0);
    return m;
}

template <class S>
S cube_root_of_unity()
{
    // smallest ω ≠ 1 with ω³ = 1; only prime fields with p ≡ 1 (mod 3) have one
    if constexpr (std::is_same_v<S, Fp>) {
        std::uint64_t p = Fp::modulus();
        for (std::uint64_t w = 2; w < p; ++w)
            if (Fp((long long)w) * Fp((long long)w) * Fp((long long)w) == Fp(1))
                return Fp((long long)w);
    }
    throw InputError("taft-3 needs a primitive cube root of unity; "
                     "use --field Fp:p with p ≡ 1 (mod 3), e.g. Fp:7");
}

template <class S>
ModuleAlgebraData<S> taft3()
{
    const S w = cube_root_of_unity<S>();
    const int n = 9; // basis g^i x^j, index 3j + i
    auto idx = [](int i, int j) { return 3 * j + i; };
    HopfAlgebraData<S> h;
    {
        std::vector<std::string> labels;
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                std::string l = (i == 0 && j == 0) ? "1" : "";
                if (i > 0)
                    l += (i == 1 ? "g" : "g^2");
                if (j > 0)
                    l += (j == 1 ? "x" : "x^2");
                labels.push_back(l);
            }
        h.alg.space = BasedSpace(labels);
    }
    // (g^i x^j)(g^k x^l) = ω^{jk} g^{i+k} x^{j+l}
    h.alg.mul = SparseMap<S>(n, n * n);
    S wpow[3] = {S(1), w, w * w};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    SparseVec<S> v(n);
                    if (j + l < 3)
                        v.ent.push_back({idx((i + k) % 3, j + l), wpow[(j * k) % 3]});
                    h.alg.mul.col[(long long)idx(i, j) * n + idx(k, l)] = v;
                }
    h.alg.unit = unit_vec<S>(n, 0);

    // Δ multiplicative from Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x
    SparseMap<S> mulHH = h.alg.mul.kron(h.alg.mul)
                             .compose(factor_permutation<S>({n, n, n, n}, {0, 2, 1, 3}));
    SparseVec<S> dg(n * n), dx(n * n);
    dg.ent.push_back({idx(1, 0) * n + idx(1, 0), S(1)});
    dx.ent = {{idx(0, 1) * n + idx(0, 0), S(1)}, {idx(1, 0) * n + idx(0, 1), S(1)}};
    std::sort(dx.ent.begin(), dx.ent.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    h.comul = SparseMap<S>(n * n, n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparseVec<S> v = unit_vec<S>(n * n, 0); // 1⊗1
            for (int t = 0; t < i; ++t)
                v = mult_vec(mulHH, v, dg);
            for (int t = 0; t < j; ++t)
                v = mult_vec(mulHH, v, dx);
            h.comul.col[idx(i, j)] = v;
        }
    h.counit = SparseMap<S>(1, n);
    for (int i = 0; i < 3; ++i)
        h.counit.col[idx(i, 0)] = unit_vec<S>(1, 0);

    // S(g) = g², S(x) = −g²x, extended anti-multiplicatively
    SparseVec<S> sg = unit_vec<S>(n, idx(2, 0));
    SparseVec<S> sx(n);
    sx.ent.push_back({idx(2, 1), S(-1)});
    SparseMap<S> s(n, n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparseVec<S> v = unit_vec<S>(n, 0);
            for (int t = 0; t < j; ++t)
                v = mult_vec(h.alg.mul, v, sx); // S(x)^j first: S(g^i x^j) = S(x)^j S(g)^i
            for (int t = 0; t < i; ++t)
                v = mult_vec(h.alg.mul, v, sg);
            s.col[idx(i, j)] = v;
        }
    h.antipode = s;
    h.antipode_inverse = inverse_of(s);
    if (!h.antipode_inverse)
        throw Error("taft-3 antipode unexpectedly singular");

    ModuleAlgebraData<S> m;
    m.hopf = h;
    m.alg = truncated_polynomial_algebra<S>(3);
    // g·y^k = ω^k y^k,  x·y^k = [k]_ω y^{k-1}; action of g^i x^j = G^i X^j
    SparseMap<S> G(3, 3), X(3, 3);
    for (int k = 0; k < 3; ++k)
        G.col[k].ent.push_back({k, wpow[k % 3]}), G.col[k].dim = 3;
    X = SparseMap<S>(3, 3);
    X.col[1] = unit_vec<S>(3, 0);
    X.col[2].dim = 3;
    X.col[2].ent = {{1, S(1) + w}};
    m.action = SparseMap<S>(3, n * 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparseMap<S> op = SparseMap<S>::identity(3);
            for (int t = 0; t < j; ++t)
                op = X.compose(op);
            for (int t = 0; t < i; ++t)
                op = G.compose(op);
            for (int a = 0; a < 3; ++a)
                m.action.col[(long long)idx(i, j) * 3 + a] = op.col[a];
        }
    return m;
}

} // namespace detail

template <class S>
ModuleAlgebraData<S> build_preset(const std::string& name)
{
    using namespace detail;
    ModuleAlgebraData<S> m;
    if (name == "trivial-k") {
        m.hopf = group_algebra_hopf<S>({"1"}, [](int, int) { return 0; }, [](int) { return 0; });
        m.alg = group_algebra_hopf<S>({"1", "s"}, [](int i, int j) { return i ^ j; },
                                      [](int i) { return i; })
                    .alg;
        m.action = trivial_action(m.hopf, m.alg);
    } else if (name == "group-z2" || name == "group-z3") {
        int n = name == "group-z2" ? 2 : 3;
        std::vector<std::string> labels = {"1"};
        for (int i = 1; i < n; ++i)
            labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        m.hopf = group_algebra_hopf<S>(labels, [n](int i, int j) { return (i + j) % n; },
                                       [n](int i) { return (n - i) % n; });
        m.alg = base_field_algebra<S>();
        m.action = trivial_action(m.hopf, m.alg);
    } else if (name == "group-s3") {
        // element r^i s^j with index i + 3j
        auto mul = [](int a, int b) {
            int i = a % 3, j = a / 3, k = b % 3, l = b / 3;
            int ii = j ? (i + 3 - k) % 3 : (i + k) % 3;
            return ii + 3 * ((j + l) % 2);
        };
        auto inv = [](int a) {
            int i = a % 3, j = a / 3;
            return j ? a : (3 - i) % 3;
        };
        m.hopf = group_algebra_hopf<S>({"1", "r", "r^2", "s", "rs", "r^2s"}, mul, inv);
        m.alg = base_field_algebra<S>();
        m.action = trivial_action(m.hopf, m.alg);
    } else if (name == "group-sign-z2") {
        m.hopf = group_algebra_hopf<S>({"1", "t"}, [](int i, int j) { return i ^ j; },
                                       [](int i) { return i; });
        m.alg = group_algebra_hopf<S>({"1", "s"}, [](int i, int j) { return i ^ j; },
                                      [](int i) { return i; })
                    .alg;
        m.action = SparseMap<S>(2, 4);
        m.action.col[0] = unit_vec<S>(2, 0); // 1·1 = 1
        m.action.col[1] = unit_vec<S>(2, 1); // 1·s = s
        m.action.col[2] = unit_vec<S>(2, 0); // t·1 = 1
        m.action.col[3].dim = 2;             // t·s = −s
        m.action.col[3].ent = {{1, S(-1)}};
    } else if (name == "sweedler4-dual-numbers") {
        m = sweedler4<S>();
    } else if (name == "taft-3") {
        m = taft3<S>();
    } else {
        throw SpecParseError("unknown preset '" + name + "'");
    }
    return m;
}

} // namespace hopfcyc
