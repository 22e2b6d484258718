#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcyc/presets.hpp>

using namespace hopfcyc;

TEST_CASE("every shipped preset passes its full axiom suite")
{
    for (const auto& info : preset_list()) {
        CAPTURE(info.name);
        if (info.default_field == "Q") {
            auto m = build_preset<Rational>(info.name);
            CHECK(verify_hopf(m.hopf).ok());
            CHECK(verify_module_algebra(m).ok());
        } else {
            Fp::set_modulus(7);
            auto m = build_preset<Fp>(info.name);
            CHECK(verify_hopf(m.hopf).ok());
            CHECK(verify_module_algebra(m).ok());
        }
    }
}

TEST_CASE("group presets also work over prime fields")
{
    Fp::set_modulus(5);
    auto m = build_preset<Fp>("group-sign-z2");
    CHECK(verify_hopf(m.hopf).ok());
    CHECK(verify_module_algebra(m).ok());
}

TEST_CASE("verify_algebra: corrupted multiplication is reported with a witness")
{
    auto m = build_preset<Rational>("group-z2");
    auto bad = m.hopf.alg;
    // t·t = 1 becomes t·t = -1: associativity survives but the Hopf suite
    // must catch it via "Δ is an algebra map"
    bad.mul.col[3] = SparseVec<Rational>(2);
    bad.mul.col[3].ent = {{0, Rational(-1)}};
    CHECK(verify_algebra(bad).ok()); // still an algebra...
    auto h = m.hopf;
    h.alg = bad;
    auto rep = verify_hopf(h); // ...but not a bialgebra with the same Δ
    CHECK(!rep.ok());
    CHECK(rep.first_failure().find("algebra map") != std::string::npos);

    // a corruption that breaks associativity itself: 1·t = t becomes 1·t = 1
    auto bad2 = m.hopf.alg;
    bad2.mul.col[1] = unit_vec<Rational>(2, 0);
    auto rep2 = verify_algebra(bad2);
    CHECK(!rep2.ok());
    for (const auto& it : rep2.items)
        if (!it.passed)
            CHECK(!it.witness.empty());
}

TEST_CASE("zero-dimensional spaces are rejected as degenerate")
{
    CHECK_THROWS_AS(BasedSpace(0), InputError);
    CHECK_THROWS_AS(BasedSpace(std::vector<std::string>{}), InputError);
}

TEST_CASE("verify_hopf: Q[Z/3] ok; Sweedler ok with S^2 != id; corrupted counit fails")
{
    auto z3 = build_preset<Rational>("group-z3");
    CHECK(verify_hopf(z3.hopf).ok());

    auto sw = build_preset<Rational>("sweedler4-dual-numbers");
    CHECK(verify_hopf(sw.hopf).ok());
    auto s = *sw.hopf.antipode;
    CHECK(s.compose(s) != SparseMap<Rational>::identity(4)); // S² ≠ id
    auto s4 = s.compose(s).compose(s).compose(s);
    CHECK(s4 == SparseMap<Rational>::identity(4)); // but S⁴ = id on H₄

    auto bad = z3.hopf;
    bad.counit.col[1] = SparseVec<Rational>(1); // ε(t) = 0 for group-like t
    auto rep = verify_hopf(bad);
    CHECK(!rep.ok());
    CHECK(rep.first_failure().find("counit") != std::string::npos);
}

TEST_CASE("verify_module_algebra: trivial action, sign action, Sweedler action")
{
    for (const char* name : {"group-z2", "group-z3", "group-s3", "trivial-k"}) {
        auto m = build_preset<Rational>(name);
        CHECK(verify_module_algebra(m).ok());
    }
    CHECK(verify_module_algebra(build_preset<Rational>("group-sign-z2")).ok());
    CHECK(verify_module_algebra(build_preset<Rational>("sweedler4-dual-numbers")).ok());
}

TEST_CASE("iterated coproduct: group-likes, Sweedler x, order zero")
{
    auto sw = build_preset<Rational>("sweedler4-dual-numbers");
    CHECK(iterated_coproduct(sw.hopf, 0) == SparseMap<Rational>::identity(4));

    auto d2 = iterated_coproduct(sw.hopf, 2); // H -> H⊗H⊗H
    // Δ²(g) = g⊗g⊗g, basis order 1,g,x,gx
    SparseVec<Rational> dg = d2.col[1];
    CHECK(dg.nnz() == 1);
    CHECK(dg.at(1 * 16 + 1 * 4 + 1) == Rational(1));
    // Δ²(x) = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
    SparseVec<Rational> dx = d2.col[2];
    CHECK(dx.nnz() == 3);
    CHECK(dx.at(2 * 16 + 0 * 4 + 0) == Rational(1));
    CHECK(dx.at(1 * 16 + 2 * 4 + 0) == Rational(1));
    CHECK(dx.at(1 * 16 + 1 * 4 + 2) == Rational(1));
}

TEST_CASE("coassociativity nesting-independence for every preset")
{
    for (const auto& info : preset_list()) {
        if (info.default_field != "Q")
            continue;
        auto h = build_preset<Rational>(info.name).hopf;
        auto id = SparseMap<Rational>::identity(h.dim());
        CHECK(h.comul.kron(id).compose(h.comul) == id.kron(h.comul).compose(h.comul));
    }
}

TEST_CASE("opposite and cop: fixed points and the Sweedler antipode inverse")
{
    auto sign = build_preset<Rational>("group-sign-z2");
    CHECK(opposite_algebra(sign.alg).mul == sign.alg.mul);     // commutative
    CHECK(cop_hopf(sign.hopf).comul == sign.hopf.comul);       // cocommutative

    auto sw = build_preset<Rational>("sweedler4-dual-numbers");
    auto c = cop_hopf(sw.hopf);
    auto s = *sw.hopf.antipode;
    auto s3 = s.compose(s).compose(s);
    CHECK(*c.antipode == s3);      // S⁻¹ = S³
    CHECK(*c.antipode != s);       // and S³ ≠ S on H₄
    CHECK(verify_hopf(c).ok());

    // cop without an antipode inverse degrades to a flagged bialgebra
    auto noinv = sw.hopf;
    noinv.antipode_inverse.reset();
    auto c2 = cop_hopf(noinv);
    CHECK(!c2.is_hopf());
    CHECK(verify_hopf(c2).ok()); // bialgebra axioms still hold
}

TEST_CASE("crossed product: trivial action is the tensor algebra")
{
    auto m = build_preset<Rational>("group-z2"); // A = k
    auto r = crossed_product(m);
    // (a⊗g)(b⊗h) = ab⊗gh entrywise
    const int na = m.dim_a(), nh = m.dim_h(), n = na * nh;
    auto perm = factor_permutation<Rational>({na, nh, na, nh}, {0, 2, 1, 3});
    auto tensor_mul = m.alg.mul.kron(m.hopf.alg.mul).compose(perm);
    CHECK(r.mul == tensor_mul);
    CHECK(n == r.dim());
}

TEST_CASE("crossed product of the sign action: (1⊗t)(s⊗1) = −s⊗t and center dim 1")
{
    auto m = build_preset<Rational>("group-sign-z2");
    auto r = crossed_product(m);
    const int n = 4;
    // indices: a*2+g with A basis {1,s}, H basis {1,t}
    int one_t = 0 * 2 + 1, s_one = 1 * 2 + 0, s_t = 1 * 2 + 1;
    auto prod = r.mul.col[(long long)one_t * n + s_one];
    CHECK(prod.nnz() == 1);
    CHECK(prod.at(s_t) == Rational(-1));

    // center = joint kernel of the commutator maps x -> xb − bx (exact-linalg oracle)
    SparseMap<Rational> stacked(n * n, n);
    for (int x = 0; x < n; ++x) {
        VecBuilder<Rational> out(n * n);
        for (int b = 0; b < n; ++b) {
            for (const auto& [row, c] : r.mul.col[(long long)x * n + b].ent)
                out.add(b * n + row, c);
            for (const auto& [row, c] : r.mul.col[(long long)b * n + x].ent)
                out.add(b * n + row, -c);
        }
        stacked.col[x] = out.take();
    }
    auto kk = rank_and_kernel(stacked);
    CHECK(kk.kernel.size() == 1);
}

TEST_CASE("invariant subalgebra: trivial, sign, Sweedler")
{
    auto triv = build_preset<Rational>("trivial-k");
    auto it = invariant_subalgebra(triv);
    CHECK(it.sub.dim() == triv.dim_a());

    auto sign = build_preset<Rational>("group-sign-z2");
    auto is = invariant_subalgebra(sign);
    CHECK(is.sub.dim() == 1);
    // and the invariant line is spanned by the unit
    CHECK(is.inclusion.col[0] == sign.alg.unit);

    auto sw = build_preset<Rational>("sweedler4-dual-numbers");
    auto iw = invariant_subalgebra(sw);
    CHECK(iw.sub.dim() == 1);
}

TEST_CASE("right integrals: Z/2, Z/n, and the Sweedler refusal")
{
    auto z2 = build_preset<Rational>("group-z2");
    auto t2 = find_right_integral(z2.hopf);
    REQUIRE(t2.has_value());
    CHECK(t2->at(0) == Rational(1) / 2);
    CHECK(t2->at(1) == Rational(1) / 2);

    auto z3 = build_preset<Rational>("group-z3");
    auto t3 = find_right_integral(z3.hopf);
    REQUIRE(t3.has_value());
    for (int i = 0; i < 3; ++i)
        CHECK(t3->at(i) == Rational(1) / 3);

    auto s3 = build_preset<Rational>("group-s3");
    auto t6 = find_right_integral(s3.hopf);
    REQUIRE(t6.has_value());
    for (int i = 0; i < 6; ++i)
        CHECK(t6->at(i) == Rational(1) / 6);

    auto sw = build_preset<Rational>("sweedler4-dual-numbers");
    CHECK(!find_right_integral(sw.hopf).has_value());
}

TEST_CASE("if an integral is found, right-multiplication by t equals ηε scaled")
{
    for (const char* name : {"group-z2", "group-z3", "group-s3"}) {
        auto h = build_preset<Rational>(name).hopf;
        auto t = find_right_integral(h);
        REQUIRE(t.has_value());
        const int n = h.dim();
        // column by column: t·e_h = ε(e_h)·t
        auto mul = OpTables<Rational>::mul_table(h.alg);
        for (int x = 0; x < n; ++x) {
            VecBuilder<Rational> out(n);
            for (const auto& [i, c] : t->ent)
                for (const auto& [r, cc] : mul[i][x].ent)
                    out.add(r, c * cc);
            SparseVec<Rational> want = *t;
            want.scale(h.counit.col[x].at(0));
            CHECK(out.take() == want);
        }
    }
}

TEST_CASE("taft-3 over F_7: axioms, S has order 6, no normalized integral check")
{
    Fp::set_modulus(7);
    auto m = build_preset<Fp>("taft-3");
    CHECK(verify_hopf(m.hopf).ok());
    CHECK(verify_module_algebra(m).ok());
    auto s = *m.hopf.antipode;
    auto s2 = s.compose(s);
    CHECK(s2 != SparseMap<Fp>::identity(9));
    auto pw = s2;
    for (int k = 1; k < 3; ++k)
        pw = pw.compose(s2);
    CHECK(pw == SparseMap<Fp>::identity(9)); // S has order 2·3
    CHECK(!find_right_integral(m.hopf).has_value());
}

TEST_CASE("taft-3 refuses fields without a cube root of unity")
{
    CHECK_THROWS_AS(build_preset<Rational>("taft-3"), InputError);
    Fp::set_modulus(5); // 5 ≢ 1 mod 3
    CHECK_THROWS_AS(build_preset<Fp>("taft-3"), InputError);
}
