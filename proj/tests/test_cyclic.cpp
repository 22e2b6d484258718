#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcyc/constructions.hpp>
#include <hopfcyc/presets.hpp>

using namespace hopfcyc;

TEST_CASE("C(A) of any preset algebra is cyclic: all identities and τ^{n+1}=id")
{
    for (const char* name : {"group-z2", "group-sign-z2"}) {
        auto m = build_preset<Rational>(name);
        auto c = cyclic_module_of_algebra(m.alg, 3);
        auto rep = verify_cyclic(c);
        INFO(name, ": ", rep.first_failure());
        CHECK(rep.ok());
    }
}

TEST_CASE("C(Q[Z/2]): τ₁ swaps factors, ∂₁(a⊗b) = ba")
{
    auto m = build_preset<Rational>("group-sign-z2"); // A = Q[Z/2]
    auto c = cyclic_module_of_algebra(m.alg, 2);
    // τ₁(a⊗b) = (b,a): column of basis (a,b) = a*2+b goes to b*2+a
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(c.tau[1].col[a * 2 + b] == unit_vec<Rational>(4, b * 2 + a));
    // ∂₁(a⊗b) = ba; for the group algebra ba = a^b-th basis vector
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(c.face[1][1].col[a * 2 + b] == unit_vec<Rational>(2, a ^ b));
}

TEST_CASE("A = k: all levels are k and HH₀ = k")
{
    auto m = build_preset<Rational>("group-z2"); // A = k
    auto c = cyclic_module_of_algebra(m.alg, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(c.dims[n] == 1);
    CHECK(homology_dimension(b_operator(c, 1), b_operator(c, 0)) == 1);
}

TEST_CASE("corrupted τ is caught with a ∂₀τ = ∂ witness")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto c = cyclic_module_of_algebra(m.alg, 2);
    auto& bad = c.tau[1].col[0].ent.front().second;
    bad = -bad;
    auto rep = verify_paracyclic(c);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& it : rep.items)
        if (!it.passed && it.name.find("∂_0 τ") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("b² = 0 and the extra degeneracy satisfies τσ₀ = στ")
{
    for (const char* name : {"group-z2", "group-sign-z2", "sweedler4-dual-numbers"}) {
        auto m = build_preset<Rational>(name);
        auto alg = crossed_product(m);
        auto c = cyclic_module_of_algebra(alg, 3);
        for (int n = 2; n <= 3; ++n)
            CHECK(b_operator(c, n - 1).compose(b_operator(c, n)).is_zero_map());
        // the defining constraint of the extra degeneracy: σ₀∘τ = τ∘σ
        for (int n = 0; n <= 2; ++n) {
            auto lhs = c.degen[n][0].compose(c.tau[n]);
            auto rhs = c.tau[n + 1].compose(extra_degeneracy(c, n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("normalized complex of C(Q[Z/2]): dims, B² = 0, T = id, HH agreement")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto c = cyclic_module_of_algebra(m.alg, 3);
    auto nc = normalized_complex(c);
    CHECK(nc.level[0].dim() == 2);     // N₀ = C₀
    CHECK(nc.level[1].dim() == 4 - 2); // rank of σ₀ image is 2
    // mixed-complex laws on the normalized model
    for (int n = 2; n <= 3; ++n)
        CHECK(nc.b[n - 1].compose(nc.b[n]).is_zero_map());
    for (int n = 0; n <= 1; ++n)
        CHECK(nc.B[n + 1].compose(nc.B[n]).is_zero_map());
    // cyclic module: T = 1 − (bB + Bb) = id
    for (int n = 0; n <= 2; ++n)
        CHECK(nc.twist(n) == SparseMap<Rational>::identity(nc.dim(n)));

    // HH from normalized and unnormalized complexes agree (n ≤ 2)
    auto raw = [&](int n) { return b_operator(c, n); };
    for (int n = 0; n <= 2; ++n) {
        int hh_raw = homology_dimension(raw(n + 1), raw(n));
        int hh_nrm = homology_dimension(nc.b[n + 1], n == 0
                                                          ? SparseMap<Rational>::zero(0, nc.dim(0))
                                                          : nc.b[n]);
        CHECK(hh_raw == hh_nrm);
    }
}

TEST_CASE("natural cylinder of the sign action verifies cylindrically (p,q ≤ 2)")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto cyl = natural_cylinder(m, 3, 3).module;
    auto rep = verify_cylindrical(cyl, 2, 2);
    INFO(rep.first_failure());
    CHECK(rep.ok());
    // paracyclic rows need not be cyclic: τ^{q+1} ≠ id at some bidegree
    auto r1 = cyl.row(1);
    bool all_cyclic = true;
    for (int q = 0; q <= 2; ++q) {
        auto pw = detail::power(r1.tau[q], q + 1);
        if (!pw.is_identity())
            all_cyclic = false;
    }
    CHECK(!all_cyclic);
}

TEST_CASE("H = k cylinder: τ̄ = id, diagonal matches C(A^op)")
{
    auto m = build_preset<Rational>("trivial-k"); // H = k, A = k[Z/2]
    auto cyl = natural_cylinder(m, 2, 2).module;
    auto rep = verify_cylindrical(cyl);
    INFO(rep.first_failure());
    CHECK(rep.ok());
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            CHECK(cyl.vtau[p][q].is_identity());
    auto d = diagonal(cyl);
    auto cop = cyclic_module_of_algebra(opposite_algebra(m.alg), 2);
    // H-factors are 1-dimensional, so after the A-slot reversal the diagonal
    // is C(A^op) on the nose
    for (int n = 0; n <= 2; ++n) {
        CHECK(d.dims[n] == cop.dims[n]);
        auto r = reversal_map<Rational>(m, n, n);
        CHECK(r.compose(d.tau[n]).compose(r) == cop.tau[n]);
        if (n >= 1) {
            auto r1 = reversal_map<Rational>(m, n - 1, n - 1);
            for (int i = 0; i <= n; ++i)
                CHECK(r1.compose(d.face[n][i]).compose(r) == cop.face[n][i]);
        }
    }
}

TEST_CASE("sweedler cylinder: Eq-2 full rotations at (1,1) although S² ≠ id")
{
    auto m = build_preset<Rational>("sweedler4-dual-numbers");
    auto cyl = natural_cylinder(m, 2, 2).module;
    auto rep = verify_cylindrical(cyl, 1, 1);
    INFO(rep.first_failure());
    CHECK(rep.ok());
    auto full = detail::power(cyl.vtau[1][1], 2).compose(detail::power(cyl.htau[1][1], 2));
    CHECK(full.is_identity());
}

TEST_CASE("diagonal cyclicity: (τ̄τ)^{n+1} = id for sign action (n ≤ 2)")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto cyl = natural_cylinder(m, 3, 3).module;
    auto d = diagonal(cyl);
    auto rep = verify_cyclic(d, 2);
    INFO(rep.first_failure());
    CHECK(rep.ok());
}

TEST_CASE("op_cop cylinder equals reversal-conjugated generic cylinder of (A^op, H^cop)")
{
    auto m = build_preset<Rational>("sweedler4-dual-numbers");
    auto oc = natural_cylinder(m, 1, 1, true).module;
    auto der = derive_op_cop(m);
    auto gen = natural_cylinder(der, 1, 1).module;
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            auto r = reversal_map<Rational>(m, p, q);
            auto rinv = reversal_map<Rational>(m, p, q); // an involution
            CHECK(oc.htau[p][q] == r.compose(gen.htau[p][q]).compose(rinv));
            CHECK(oc.vtau[p][q] == r.compose(gen.vtau[p][q]).compose(rinv));
            if (q >= 1) {
                auto rq1 = reversal_map<Rational>(m, p, q - 1);
                for (int i = 0; i <= q; ++i)
                    CHECK(oc.hface[p][q][i] == rq1.compose(gen.hface[p][q][i]).compose(rinv));
            }
            if (p >= 1) {
                auto rp1 = reversal_map<Rational>(m, p - 1, q);
                for (int j = 0; j <= p; ++j)
                    CHECK(oc.vface[p][q][j] == rp1.compose(gen.vface[p][q][j]).compose(rinv));
            }
        }
    auto rep = verify_cylindrical(oc);
    INFO(rep.first_failure());
    CHECK(rep.ok());
}

TEST_CASE("Tot: Tot(b)² = 0, twist invertible, identity twist for H = k")
{
    auto sign = build_preset<Rational>("group-sign-z2");
    auto cyl = natural_cylinder(sign, 3, 3).module;
    auto tot = tot_parachain(cyl);
    for (int n = 2; n <= tot.n_top; ++n) {
        CHECK(tot.b[n - 1].compose(tot.b[n]).is_zero_map());
        CHECK(tot.raw_b[n - 1].compose(tot.raw_b[n]).is_zero_map());
    }
    for (int n = 0; n < tot.n_top; ++n)
        CHECK(inverse_of(tot.T[n]).has_value());

    auto triv = build_preset<Rational>("trivial-k");
    auto tcyl = natural_cylinder(triv, 2, 2).module;
    auto ttot = tot_parachain(tcyl);
    for (int n = 0; n < ttot.n_top; ++n)
        CHECK(ttot.T[n] == SparseMap<Rational>::identity(ttot.dims[n]));
}

TEST_CASE("Tot twist invertible for the sweedler cylinder")
{
    auto m = build_preset<Rational>("sweedler4-dual-numbers");
    auto cyl = natural_cylinder(m, 2, 2).module;
    auto tot = tot_parachain(cyl);
    for (int n = 0; n < tot.n_top; ++n)
        CHECK(inverse_of(tot.T[n]).has_value());
}

TEST_CASE("shuffle map: degree 0 identity, raw chain map, induced HH equality")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto cyl = natural_cylinder(m, 3, 3).module;
    auto tot = tot_parachain(cyl);
    auto diag = diagonal(cyl);
    auto dn = normalized_complex(diag);
    auto f0 = shuffle_f0(cyl, tot, dn);

    CHECK(f0.raw[0].is_identity());

    // chain-map identity b∘f₀ = f₀∘Tot(b), raw and normalized
    for (int n = 1; n <= tot.n_top; ++n) {
        CHECK(b_operator(diag, n).compose(f0.raw[n]) == f0.raw[n - 1].compose(tot.raw_b[n]));
        CHECK(dn.b[n].compose(f0.induced[n]) == f0.induced[n - 1].compose(tot.b[n]));
    }

    // equal HH dims between Tot and diagonal at n ≤ 2, two rank computations
    auto tot_cc = [&] {
        ChainComplex<Rational> c;
        c.dims = tot.dims;
        c.d = tot.b;
        return c;
    }();
    auto diag_cc = dn.b_complex();
    auto ht = tot_cc.homology(2);
    auto hd = diag_cc.homology(2);
    CHECK(ht == hd);

    // f₀ induces an isomorphism on b-homology at n ≤ 2
    for (int n = 0; n <= 2; ++n) {
        auto src = tot_cc.homology_basis(n);
        auto tgt = diag_cc.homology_basis(n);
        auto ind = induced_map(f0.induced[n], src, tgt);
        REQUIRE(ind.rows == ind.cols);
        CHECK(inverse_of(ind).has_value());
    }
}
