#include <doctest.h>

#include <algorithm>
#include <map>

#include "flagdiv/blockdet.hpp"
#include "flagdiv/divisor.hpp"
#include "flagdiv/weyl.hpp"
#include "oracles.hpp"

using namespace flagdiv;

TEST_CASE("plucker index construction") {
    CHECK(PluckerIndex({1, 3, 4}).str() == "{1,3,4}");
    CHECK(PluckerIndex::closed_open(1, 4) == PluckerIndex({1, 2, 3}));
    CHECK(PluckerIndex::open_closed(4, 7) == PluckerIndex({5, 6, 7}));
    CHECK(PluckerIndex::open_closed(0, 2) == PluckerIndex({1, 2}));
    CHECK(PluckerIndex({5}).size() == 1);
    CHECK_THROWS_AS(PluckerIndex({}), std::invalid_argument);
    CHECK_THROWS_AS(PluckerIndex({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PluckerIndex({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PluckerIndex({0, 1}), std::invalid_argument);
}

TEST_CASE("cell matrix shapes") {
    {
        const StructuredMatrix m = cell_matrix(FlagType(3, {1, 2}));
        CHECK(m.rows() == 2);
        CHECK(m.cols() == 3);
        CHECK(m.str() == "a{1,1} a{1,2} 1\na{2,1} 1 0\n");
        CHECK(m.variables().size() == 3);
    }
    {
        const StructuredMatrix m = cell_matrix(FlagType(4, {2}));
        CHECK(m.str() == "a{1,1} a{1,2} 1 0\na{2,1} a{2,2} 0 1\n");
        CHECK(m.variables().size() == 4);
    }
    {
        const FlagType flag(7, {3, 6});
        const StructuredMatrix m = cell_matrix(flag);
        CHECK(m.rows() == 6);
        CHECK(m.cols() == 7);
        // cell dimension = length of the longest minimal coset representative
        const auto [w0, wp] = longest_elements(flag);
        CHECK(m.variables().size() == static_cast<size_t>(length(w0 * wp.inverse())));
        CHECK(m.variables().size() == 15);
    }
}

TEST_CASE("augmented matrix is square and unimodular") {
    {
        const StructuredMatrix m = augmented_matrix(FlagType(3, {1, 2}));
        CHECK(m.rows() == 3);
        CHECK(m.str() == "a{1,1} a{1,2} 1\na{2,1} 1 0\n1 0 0\n");
    }
    for (const FlagType& flag : oracle::all_flags(5)) {
        const StructuredMatrix m = augmented_matrix(flag);
        REQUIRE(m.rows() == flag.n());
        REQUIRE(m.cols() == flag.n());
        const Polynomial d = determinant(m);
        CHECK(d.degree() == 0);
        CHECK(unit_equal(d, Polynomial::constant(1)));
    }
}

TEST_CASE("principal minors") {
    const FlagType flag(3, {1, 2});
    const StructuredMatrix m = augmented_matrix(flag);
    CHECK(principal_minor(flag, 1) == m.entry_poly(1, 1));
    CHECK(principal_minor(flag, 2) ==
          m.entry_poly(1, 1) - m.entry_poly(1, 2) * m.entry_poly(2, 1));
    CHECK_THROWS_AS(principal_minor(flag, 0), std::invalid_argument);
    CHECK_THROWS_AS(principal_minor(flag, 3), std::invalid_argument);
}

TEST_CASE("plucker minors") {
    {
        const FlagType flag(4, {2});
        const StructuredMatrix m = cell_matrix(flag);
        CHECK(plucker_minor(flag, PluckerIndex({1, 4})) == m.entry_poly(1, 1));
        CHECK(plucker_minor(flag, PluckerIndex({1, 2})) ==
              m.entry_poly(1, 1) * m.entry_poly(2, 2) -
                  m.entry_poly(1, 2) * m.entry_poly(2, 1));
        CHECK_THROWS_AS(plucker_minor(flag, PluckerIndex({1})), std::invalid_argument);
        CHECK_THROWS_AS(plucker_minor(flag, PluckerIndex({1, 5})), std::invalid_argument);
    }
    // the index (n - n_j, n] picks out identity columns, so that minor is a unit
    for (const FlagType& flag : oracle::all_flags(5))
        for (int step : flag.steps()) {
            const Polynomial d =
                plucker_minor(flag, PluckerIndex::open_closed(flag.n() - step, flag.n()));
            CHECK(unit_equal(d, Polynomial::constant(1)));
        }
}

TEST_CASE("wall-crossing equations case by case") {
    const VarId z = VarId::homogenizer();
    {
        const FlagType flag(4, {2});
        const DivisorComponent step = component_equation(flag, 2);
        CHECK(step.case_tag == 2);
        CHECK(step.equation.text() == "x_{12}");
        const DivisorComponent low = component_equation(flag, 1);
        CHECK(low.case_tag == 3);
        CHECK(low.equation.text() == "x_{14}");
        const DivisorComponent high = component_equation(flag, 3);
        CHECK(high.case_tag == 4);
        CHECK(high.equation.text() == "x_{23}");
        const DivisorComponent unit = case1_equation(flag, 2);
        CHECK(unit.case_tag == 1);
        CHECK(unit.equation.text() == "x_{34}");
        CHECK(unit.unit_on_cell);
        CHECK_THROWS_AS(case1_equation(flag, 3), std::invalid_argument);
        CHECK_THROWS_AS(component_equation(flag, 4), std::invalid_argument);
    }
    {
        const DivisorComponent mid = component_equation(FlagType(4, {1, 3}), 2);
        CHECK(mid.case_tag == 5);
        CHECK(mid.equation.text() == "x_{1}*x_{234} - x_{2}*x_{134}");
    }
    {
        // between steps 2 and 4 in Fl(2,4;6) at i = 3: binomial(l, k) terms,
        // all coefficients +-1, each a product of a size-2 and a size-4 index
        const FlagType flag(6, {2, 4});
        const DivisorComponent mid = component_equation(flag, 3);
        CHECK(mid.case_tag == 5);
        int terms = 0;
        for (const auto& [mono, coeff] : mid.equation.terms()) {
            ++terms;
            CHECK((coeff == 1 || coeff == -1));
            std::vector<int> sizes;
            for (const auto& [v, e] : mono.factors) {
                CHECK(e == 1);
                CHECK_FALSE(v == z);
                sizes.push_back(static_cast<int>(v.index_set.size()));
            }
            std::sort(sizes.begin(), sizes.end());
            CHECK(sizes == std::vector<int>{2, 4});
        }
        CHECK(terms == 3);  // l = min(3, 6-4+1) = 3, k = 3-2 = 1
    }
}

TEST_CASE("anticanonical divisor inventory") {
    {
        const auto comps = anticanonical_divisor(FlagType(3, {1, 2}));
        REQUIRE(comps.size() == 4);
        CHECK(comps[0].equation.text() == "x_{3}");
        CHECK(comps[1].equation.text() == "x_{23}");
        CHECK(comps[2].equation.text() == "x_{1}");
        CHECK(comps[3].equation.text() == "x_{12}");
    }
    {
        const auto comps = anticanonical_divisor(FlagType(4, {1, 3}));
        REQUIRE(comps.size() == 5);
        CHECK(comps[0].equation.text() == "x_{4}");
        CHECK(comps[1].equation.text() == "x_{234}");
        CHECK(comps[2].equation.text() == "x_{1}");
        CHECK(comps[3].equation.text() == "x_{123}");
        CHECK(comps[4].equation.text() == "x_{1}*x_{234} - x_{2}*x_{134}");
    }
    for (const FlagType& flag : oracle::all_flags(5)) {
        const auto comps = anticanonical_divisor(flag);
        CHECK(comps.size() == static_cast<size_t>(flag.n() - 1 + flag.r()));
        for (size_t k = 0; k + 1 < comps.size(); ++k) {
            const auto key = [](const DivisorComponent& c) {
                return std::pair<int, int>(c.case_tag, c.i);
            };
            CHECK(key(comps[k]) < key(comps[k + 1]));
        }
        for (size_t a = 0; a < comps.size(); ++a) {
            CHECK(comps[a].equation.sign_normalized() == comps[a].equation);
            for (size_t b = a + 1; b < comps.size(); ++b)
                CHECK_FALSE(comps[a].equation == comps[b].equation);
        }
    }
}

TEST_CASE("wall equations specialize to principal minors on the cell") {
    for (const FlagType& flag : oracle::all_flags(4))
        for (int i = 1; i < flag.n(); ++i) CHECK(verify_component(flag, i));
    CHECK(verify_component(FlagType(7, {3, 6}), 4));
}

TEST_CASE("homogenization") {
    const Polynomial x = Polynomial::variable(VarId::matrix(1, 1));
    const Polynomial y = Polynomial::variable(VarId::matrix(1, 2));
    const Polynomial z = Polynomial::variable(VarId::homogenizer());
    CHECK(homogenize(x + Polynomial::constant(1)) == x + z);
    CHECK(homogenize(x * x + y + Polynomial::constant(3)) ==
          x * x + y * z + Polynomial::constant(3) * z * z);
    CHECK(homogenize(x * y) == x * y);  // already homogeneous
    CHECK_THROWS_AS(homogenize(x + z), std::invalid_argument);

    std::mt19937_64 rng(99);
    const std::vector<VarId> vars{VarId::matrix(1, 1), VarId::matrix(2, 1), VarId::matrix(2, 2)};
    for (int rep = 0; rep < 20; ++rep) {
        const Polynomial f = oracle::random_polynomial(rng, vars, 5, 3, 4);
        if (f.is_zero()) continue;
        const Polynomial h = homogenize(f);
        CHECK(h.degree() == f.degree());
        CHECK(h == top(h));
        const std::map<VarId, Polynomial> to_one{{VarId::homogenizer(), Polynomial::constant(1)}};
        const std::map<VarId, Polynomial> to_zero{{VarId::homogenizer(), Polynomial::constant(0)}};
        CHECK(substitute(h, to_one) == f);
        CHECK(substitute(h, to_zero) == top(f));
    }
}

TEST_CASE("trimmed principal submatrices keep the minor and gain block form") {
    {
        const FlagType flag(3, {1, 2});
        const StructuredMatrix t = trimmed_principal_submatrix(flag, 2);
        CHECK(extract_block_spec(t) == BlockSpec({1, 1}, {1, 1}));
    }
    {
        const StructuredMatrix t = trimmed_principal_submatrix(FlagType(4, {2}), 2);
        CHECK(extract_block_spec(t) == BlockSpec({2}, {2}));
    }
    for (const FlagType& flag : oracle::all_flags(5))
        for (int a = 1; a < flag.n(); ++a) {
            const StructuredMatrix t = trimmed_principal_submatrix(flag, a);
            CHECK(unit_equal(determinant(t), principal_minor(flag, a)));
            const BlockSpec spec = extract_block_spec(t);
            CHECK(spec.N() == t.rows());
        }
}
