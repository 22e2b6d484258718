#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcyc/elim.hpp>

#include <random>

using namespace hopfcyc;

namespace {

std::mt19937 rng(20240811);

template <class S>
S random_scalar()
{
    std::uniform_int_distribution<int> num(-6, 6);
    if constexpr (std::is_same_v<S, Rational>) {
        std::uniform_int_distribution<int> den(1, 5);
        return scalar_traits<Rational>::from_fraction(num(rng), den(rng));
    } else {
        return S(num(rng));
    }
}

template <class S>
SparseMap<S> random_sparse(int rows, int cols, double density = 0.4)
{
    std::uniform_real_distribution<double> coin(0, 1);
    SparseMap<S> m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (coin(rng) < density)
                m.add_entry(i, j, random_scalar<S>());
    return m;
}

// dense brute-force oracles, independent of the sparse implementation
template <class S>
std::vector<std::vector<S>> to_dense(const SparseMap<S>& m)
{
    std::vector<std::vector<S>> d(m.rows, std::vector<S>(m.cols, S(0)));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, c] : m.col[j].ent)
            d[i][j] = c;
    return d;
}

template <class S>
std::vector<std::vector<S>> dense_mult(const std::vector<std::vector<S>>& a,
                                       const std::vector<std::vector<S>>& b)
{
    std::vector<std::vector<S>> c(a.size(), std::vector<S>(b[0].size(), S(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

template <class S>
std::vector<std::vector<S>> dense_kron(const std::vector<std::vector<S>>& a,
                                       const std::vector<std::vector<S>>& b)
{
    size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    std::vector<std::vector<S>> c(ra * rb, std::vector<S>(ca * cb, S(0)));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ca; ++j)
            for (size_t k = 0; k < rb; ++k)
                for (size_t l = 0; l < cb; ++l)
                    c[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return c;
}

template <class S>
int dense_rank(std::vector<std::vector<S>> a)
{
    if (a.empty())
        return 0;
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; ++j) {
        size_t piv = r;
        while (piv < rows && is_zero(a[piv][j]))
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][j]))
                continue;
            S f = a[i][j] / a[r][j];
            for (size_t k = 0; k < cols; ++k)
                a[i][k] = a[i][k] - f * a[r][k];
        }
        ++rank;
        ++r;
    }
    return rank;
}

} // namespace

TEST_CASE("field axioms hold on randomized inputs (Q and F_p)")
{
    Fp::set_modulus(13);
    auto run = [&](auto zero) {
        using S = decltype(zero);
        for (int t = 0; t < 200; ++t) {
            S a = random_scalar<S>(), b = random_scalar<S>(), c = random_scalar<S>();
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + S(0) == a);
            CHECK(a * S(1) == a);
            CHECK(a + (-a) == S(0));
            if (!is_zero(a))
                CHECK(a * (S(1) / a) == S(1));
        }
    };
    run(Rational(0));
    run(Fp(0));
}

TEST_CASE("tensor basis indexer is a bijection, rightmost factor fastest")
{
    TensorBasisIndexer ix({3, 2, 4});
    CHECK(ix.total() == 24);
    std::vector<int> t{1, 0, 2};
    CHECK(ix.encode(t) == 1 * 8 + 0 * 4 + 2);
    for (long long f = 0; f < ix.total(); ++f)
        CHECK(ix.encode(ix.decode(f)) == f);
}

TEST_CASE("compose: identity, zero, and the F_2 example")
{
    auto f = random_sparse<Rational>(4, 5);
    CHECK(SparseMap<Rational>::identity(4).compose(f) == f);
    CHECK(f.compose(SparseMap<Rational>::zero(5, 3)).is_zero_map());

    Fp::set_modulus(2);
    SparseMap<Fp> u(2, 2);
    u.add_entry(0, 0, Fp(1));
    u.add_entry(0, 1, Fp(1));
    u.add_entry(1, 1, Fp(1));
    CHECK(u.compose(u) == SparseMap<Fp>::identity(2));
}

TEST_CASE("compose agrees with the dense multiplication oracle")
{
    for (int t = 0; t < 10; ++t) {
        auto f = random_sparse<Rational>(4, 6), g = random_sparse<Rational>(6, 5);
        auto got = to_dense(f.compose(g));
        auto want = dense_mult(to_dense(f), to_dense(g));
        CHECK(got == want);
    }
}

TEST_CASE("tensor_map: identities, zero absorber, dense Kronecker oracle")
{
    auto ia = SparseMap<Rational>::identity(3), ib = SparseMap<Rational>::identity(4);
    CHECK(tensor_map<Rational>({ia, ib}) == SparseMap<Rational>::identity(12));

    auto f = random_sparse<Rational>(3, 3);
    CHECK(tensor_map<Rational>({f, SparseMap<Rational>::zero(2, 2)}).is_zero_map());

    for (int t = 0; t < 5; ++t) {
        auto a = random_sparse<Rational>(2, 3), b = random_sparse<Rational>(3, 2);
        CHECK(to_dense(a.kron(b)) == dense_kron(to_dense(a), to_dense(b)));
    }
}

TEST_CASE("tensor_map is associative under the flat ordering")
{
    auto a = random_sparse<Rational>(2, 2), b = random_sparse<Rational>(3, 2),
         c = random_sparse<Rational>(2, 3);
    CHECK(a.kron(b).kron(c) == a.kron(b.kron(c)));
    CHECK(tensor_map<Rational>({a, b, c}) == a.kron(b).kron(c));
}

TEST_CASE("rank_and_kernel: trivial cases and the hand-eliminated 2x2")
{
    auto z = SparseMap<Rational>::zero(3, 3);
    auto kz = rank_and_kernel(z);
    CHECK(kz.rank == 0);
    CHECK(kz.kernel.size() == 3);

    auto ki = rank_and_kernel(SparseMap<Rational>::identity(3));
    CHECK(ki.rank == 3);
    CHECK(ki.kernel.empty());

    SparseMap<Rational> m(2, 2); // [[1,2],[2,4]]
    m.add_entry(0, 0, Rational(1));
    m.add_entry(0, 1, Rational(2));
    m.add_entry(1, 0, Rational(2));
    m.add_entry(1, 1, Rational(4));
    auto kk = rank_and_kernel(m);
    CHECK(kk.rank == 1);
    REQUIRE(kk.kernel.size() == 1);
    CHECK(kk.kernel[0].at(0) == Rational(-2));
    CHECK(kk.kernel[0].at(1) == Rational(1));
}

TEST_CASE("rank-nullity and kernel correctness on random maps, vs dense rank oracle")
{
    Fp::set_modulus(5);
    auto run = [&](auto zero) {
        using S = decltype(zero);
        for (int t = 0; t < 15; ++t) {
            auto m = random_sparse<S>(5, 7, 0.35);
            auto kk = rank_and_kernel(m);
            CHECK(kk.rank + (int)kk.kernel.size() == m.cols);
            CHECK(kk.rank == dense_rank(to_dense(m)));
            // kernel vectors are independent and mapped to zero
            ReducedSpan<S> span(m.cols, 0);
            for (const auto& v : kk.kernel) {
                CHECK(m.apply(v).is_zero());
                CHECK(span.insert(v).has_value());
            }
        }
    };
    run(Rational(0));
    run(Fp(0));
}

TEST_CASE("homology_dimension: zero pair, exact pair, broken complex detection")
{
    auto z3 = SparseMap<Rational>::zero(1, 3);
    auto z3b = SparseMap<Rational>::zero(3, 1);
    CHECK(homology_dimension(z3b, z3) == 3);

    // exact pair: d_in = id (rank 3), d_out = 0
    CHECK(homology_dimension(SparseMap<Rational>::identity(3), SparseMap<Rational>::zero(1, 3))
          == 0);

    // d_out ∘ d_in != 0 must be reported, not silently accepted
    CHECK_THROWS_AS(
        homology_dimension(SparseMap<Rational>::identity(3), SparseMap<Rational>::identity(3)),
        Error);
}

TEST_CASE("bar-type complex of Q[Z/2]: HH_1 = 0 by brute-force boundaries")
{
    // A = Q[Z/2], basis 1,g; boundaries built by hand right here
    auto mul = [](int a, int b) { return a ^ b; };
    // b1: A⊗A -> A, a⊗b -> ab − ba = 0 for commutative A
    SparseMap<Rational> b1(2, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            b1.add_entry(mul(a, b), a * 2 + b, Rational(1));
            b1.add_entry(mul(b, a), a * 2 + b, Rational(-1));
        }
    CHECK(b1.is_zero_map());
    // b2: A⊗A⊗A -> A⊗A: ab⊗c − a⊗bc + ca⊗b
    SparseMap<Rational> b2(4, 8);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                int src = (a * 2 + b) * 2 + c;
                b2.add_entry(mul(a, b) * 2 + c, src, Rational(1));
                b2.add_entry(a * 2 + mul(b, c), src, Rational(-1));
                b2.add_entry(mul(c, a) * 2 + b, src, Rational(1));
            }
    CHECK(homology_dimension(b2, b1) == 0);
}

TEST_CASE("subquotient: quotient coordinates, lift, induced map")
{
    // R^3 / span{e0+e1}
    SparseVec<Rational> w(3);
    w.ent = {{0, Rational(1)}, {1, Rational(1)}};
    auto q = Subquotient<Rational>::quotient(3, {w});
    CHECK(q.dim() == 2);
    // [e0] = -[e1]
    auto c0 = q.project(unit_vec<Rational>(3, 0));
    auto c1 = q.project(unit_vec<Rational>(3, 1));
    SparseVec<Rational> sum = c0;
    sum.axpy(Rational(1), c1);
    CHECK(sum.is_zero());
    // projection of a lift is the identity on coordinates
    for (int k = 0; k < q.dim(); ++k) {
        auto coords = unit_vec<Rational>(q.dim(), k);
        CHECK(q.project(q.lift(coords)) == coords);
    }
}

TEST_CASE("inverse_of: inverts invertible maps, rejects singular ones")
{
    for (int t = 0; t < 10; ++t) {
        auto m = random_sparse<Rational>(4, 4, 0.6);
        auto inv = inverse_of(m);
        if (inv)
            CHECK(m.compose(*inv) == SparseMap<Rational>::identity(4));
        else
            CHECK(rank_of(m) < 4);
    }
    SparseMap<Rational> sing(2, 2);
    sing.add_entry(0, 0, Rational(1));
    CHECK(!inverse_of(sing).has_value());
}

TEST_CASE("size guard fails fast")
{
    long long old = dimension_cap();
    dimension_cap() = 100;
    CHECK_THROWS_AS(SparseMap<Rational>(101, 2), SizeGuardError);
    CHECK_THROWS_AS(TensorBasisIndexer({50, 50}), SizeGuardError);
    dimension_cap() = old;
}
