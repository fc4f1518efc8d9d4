#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qadj/adjoint.hpp"

using namespace qadj;

namespace {

AdjointModule module(const char* name) {
    return AdjointModule(RootSystem::generate(CartanDatum::preset(name)));
}

// column of m at the basis element b, as a basis-index -> poly list
std::vector<LaurentPoly> column(const PolyMatrix& m, std::size_t b) {
    std::vector<LaurentPoly> v(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) v[r] = m.at(r, b);
    return v;
}

std::vector<LaurentPoly> unit(std::size_t dim, std::size_t b) {
    std::vector<LaurentPoly> v(dim);
    v[b] = LaurentPoly{1};
    return v;
}

} // namespace

TEST_CASE("dimensions") {
    CHECK(module("A2").dim() == 8);
    CHECK(module("G2").dim() == 14);
    CHECK(module("B3").dim() == 21);
    CHECK(module("E8").dim() == 248);
}

TEST_CASE("basis labels and layout") {
    AdjointModule m = module("A2");
    CHECK(m.basis_element(0).kind == BasisElement::RootVector);
    CHECK(m.basis_element(6).kind == BasisElement::ZeroVector);
    CHECK(m.label_of(m.t_basis_index(0)) == "t[1]");
    CHECK(m.label_of(m.root_basis_index(m.roots().index_of(Weight({1, 1})))) == "X[1,1]");
    CHECK(m.weight_of(m.t_basis_index(1)).is_zero());
    CHECK(m.weight_of(0) == m.roots().roots()[0]);
}

TEST_CASE("E action on A2 by hand") {
    AdjointModule m = module("A2");
    PolyMatrix e0 = m.E(0);
    auto bx = [&](int a, int b) { return m.roots().index_of(Weight({a, b})); };

    // E_1 X_{2'} = [1] X_{1'+2'}
    auto col = column(e0, bx(0, 1));
    CHECK(col[bx(1, 1)] == LaurentPoly{1});
    // E_1 X_{-1'} = t_1
    col = column(e0, bx(-1, 0));
    CHECK(col[m.t_basis_index(0)] == LaurentPoly{1});
    for (std::size_t r = 0; r < m.dim(); ++r)
        if (r != m.t_basis_index(0)) CHECK(col[r].is_zero());
    // p = 0 kills X_{1'} and the highest root
    CHECK(column(e0, bx(1, 0)) == std::vector<LaurentPoly>(m.dim()));
    CHECK(column(e0, bx(1, 1)) == std::vector<LaurentPoly>(m.dim()));
    // E_1 t_1 = [2] X_{1'}, E_1 t_2 = [1] X_{1'}
    CHECK(column(e0, m.t_basis_index(0))[bx(1, 0)] ==
          LaurentPoly::power_of_v(1) + LaurentPoly::power_of_v(-1));
    CHECK(column(e0, m.t_basis_index(1))[bx(1, 0)] == LaurentPoly{1});
}

TEST_CASE("F mirrors E on A2") {
    AdjointModule m = module("A2");
    PolyMatrix f1 = m.F(1);
    auto bx = [&](int a, int b) { return m.roots().index_of(Weight({a, b})); };
    CHECK(column(f1, bx(0, 1))[m.t_basis_index(1)] == LaurentPoly{1});
    CHECK(column(f1, m.t_basis_index(1))[bx(0, -1)] ==
          LaurentPoly::power_of_v(1) + LaurentPoly::power_of_v(-1));
    CHECK(column(f1, m.t_basis_index(0))[bx(0, -1)] == LaurentPoly{1});
    CHECK(column(f1, bx(1, 1))[bx(1, 0)] == LaurentPoly{1});
}

TEST_CASE("G2 string coefficients climb the quantum integers") {
    AdjointModule m = module("G2");
    PolyMatrix e0 = m.E(0);  // short node
    auto bx = [&](int a, int b) { return m.roots().index_of(Weight({a, b})); };
    CHECK(column(e0, bx(0, 1))[bx(1, 1)] == q_int(1, 1));
    CHECK(column(e0, bx(1, 1))[bx(2, 1)] == q_int(2, 1));
    CHECK(column(e0, bx(2, 1))[bx(3, 1)] == q_int(3, 1));
    CHECK(column(e0, bx(3, 1)) == std::vector<LaurentPoly>(m.dim()));
    // long-node t hit by a short E picks up |<j,i'>| = 1
    CHECK(column(e0, m.t_basis_index(1))[bx(1, 0)] == LaurentPoly{1});
    CHECK(column(e0, m.t_basis_index(0))[bx(1, 0)] == q_int(2, 1));
    // long generator on the short t: |<1,2'>| = 3, bracket taken in v_1 = v
    PolyMatrix e1 = m.E(1);
    CHECK(column(e1, m.t_basis_index(0))[bx(0, 1)] == q_int(3, 1));
}

TEST_CASE("K is diagonal with the pairing exponents") {
    AdjointModule m = module("G2");
    auto bx = [&](int a, int b) { return m.roots().index_of(Weight({a, b})); };
    PolyMatrix k1 = m.K({1, 0});
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            if (r != c) CHECK(k1.at(r, c).is_zero());
    CHECK(k1.at(bx(1, 0), bx(1, 0)) == LaurentPoly::power_of_v(2));
    CHECK(k1.at(bx(0, 1), bx(0, 1)) == LaurentPoly::power_of_v(-3));
    CHECK(k1.at(m.t_basis_index(0), m.t_basis_index(0)).is_one());
    CHECK(k1.at(m.t_basis_index(1), m.t_basis_index(1)).is_one());
    // K is multiplicative in y
    CHECK(m.K({1, 1}) == m.K({1, 0}) * m.K({0, 1}));
}

TEST_CASE("E and F shift weights by exactly one simple root") {
    for (const char* name : {"A2", "B2", "C3", "G2"}) {
        CAPTURE(name);
        AdjointModule m = module(name);
        std::size_t n = m.datum().rank();
        for (std::size_t i = 0; i < n; ++i) {
            PolyMatrix e = m.E(i), f = m.F(i);
            Weight ip = Weight::simple_root(n, i);
            for (std::size_t c = 0; c < m.dim(); ++c)
                for (std::size_t r = 0; r < m.dim(); ++r) {
                    if (!e.at(r, c).is_zero()) CHECK(m.weight_of(r) == m.weight_of(c) + ip);
                    if (!f.at(r, c).is_zero()) CHECK(m.weight_of(r) == m.weight_of(c) - ip);
                }
        }
    }
}

TEST_CASE("divided powers recover plain powers") {
    for (const char* name : {"A2", "B2", "G2"}) {
        CAPTURE(name);
        AdjointModule m = module(name);
        for (std::size_t i = 0; i < m.datum().rank(); ++i) {
            int d = m.datum().v_exponent(i);
            CHECK(m.E_divided(i, 0) == PolyMatrix::identity(m.dim()));
            CHECK(m.E_divided(i, 1) == m.E(i));
            for (unsigned k = 2; k <= 4; ++k) {
                CHECK(q_factorial(static_cast<int>(k), d) * m.E_divided(i, k) ==
                      m.E(i).pow(k));
                CHECK(q_factorial(static_cast<int>(k), d) * m.F_divided(i, k) ==
                      m.F(i).pow(k));
            }
        }
    }
}

TEST_CASE("divided power special cases") {
    AdjointModule m = module("A2");
    auto bx = [&](int a, int b) { return m.roots().index_of(Weight({a, b})); };
    PolyMatrix e2 = m.E_divided(0, 2);
    CHECK(column(e2, bx(-1, 0))[bx(1, 0)] == LaurentPoly{1});
    CHECK(m.E_divided(0, 3).is_zero());
    CHECK(column(e2, m.t_basis_index(0)) == std::vector<LaurentPoly>(m.dim()));
    CHECK(column(e2, m.t_basis_index(1)) == std::vector<LaurentPoly>(m.dim()));

    // binomial structure along a G2 string: E^{(2)} X_{2'} = [2 choose 2] X_{2 1'+2'}
    AdjointModule g = module("G2");
    auto gx = [&](int a, int b) { return g.roots().index_of(Weight({a, b})); };
    CHECK(column(g.E_divided(0, 2), gx(0, 1))[gx(2, 1)] == q_binomial(2, 2, 1));
    CHECK(column(g.E_divided(0, 3), gx(0, 1))[gx(3, 1)] == q_binomial(3, 3, 1));
    CHECK(column(g.E_divided(0, 2), gx(1, 1))[gx(3, 1)] == q_binomial(3, 2, 1));
}

TEST_CASE("divided power entries are nonnegative") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"}) {
        CAPTURE(name);
        AdjointModule m = module(name);
        for (std::size_t i = 0; i < m.datum().rank(); ++i)
            for (unsigned k = 0; k <= 4; ++k)
                for (const PolyMatrix& g : {m.E_divided(i, k), m.F_divided(i, k)})
                    for (std::size_t r = 0; r < m.dim(); ++r)
                        for (std::size_t c = 0; c < m.dim(); ++c) {
                            CAPTURE(i); CAPTURE(k); CAPTURE(r); CAPTURE(c);
                            CHECK(g.at(r, c).is_nonneg());
                        }
    }
}

TEST_CASE("generators are nilpotent") {
    for (const char* name : {"A2", "B2", "G2"}) {
        CAPTURE(name);
        AdjointModule m = module(name);
        unsigned bound = static_cast<unsigned>(m.datum().e()) + 2;
        for (std::size_t i = 0; i < m.datum().rank(); ++i) {
            CHECK(m.E(i).pow(bound).is_zero());
            CHECK(m.F(i).pow(bound).is_zero());
            CHECK_FALSE(m.E(i).pow(2).is_zero());  // X_{-i'} -> t_i -> X_{i'}
        }
    }
}

TEST_CASE("apply matches column extraction") {
    AdjointModule m = module("B2");
    PolyMatrix e0 = m.E(0);
    for (std::size_t b = 0; b < m.dim(); ++b)
        CHECK(e0.apply(unit(m.dim(), b)) == column(e0, b));
    CHECK_THROWS_AS(e0.apply(std::vector<LaurentPoly>(3)), std::invalid_argument);
}
