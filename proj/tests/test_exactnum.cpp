#include <gtest/gtest.h>

#include <random>

#include "oracle_values.hpp"
#include "perbar/exactnum.hpp"
#include "perbar/percurve/perd4.hpp"

using namespace perbar;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 25);
    return rat(num(rng), den(rng));
}

NFElem random_elem(const FieldPtr& K, std::mt19937& rng) {
    std::vector<Rational> cs;
    for (int i = 0; i < K->degree(); ++i) cs.push_back(random_rational(rng));
    return NFElem(K, cs);
}

std::vector<FieldPtr> fields() {
    return {NumberField::quadratic(5), NumberField::quadratic(-1), NumberField::cyclotomic_field(5),
            NumberField::cyclotomic_field(3), NumberField::cyclotomic_field(7)};
}

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(rat(6, -4), rat(-3, 2));
    EXPECT_EQ(rat(0, 7), Rational(0));
    EXPECT_THROW(rat(1, 0), std::domain_error);
}

TEST(NumberField, FieldAxioms) {
    std::mt19937 rng(11);
    for (const auto& K : fields()) {
        NFElem zero(K, {Rational(0)}), one(K, {Rational(1)});
        for (int trial = 0; trial < 40; ++trial) {
            NFElem a = random_elem(K, rng), b = random_elem(K, rng), c = random_elem(K, rng);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + zero, a);
            EXPECT_EQ(a * one, a);
            EXPECT_TRUE((a - a).zero());
            if (!a.zero()) {
                EXPECT_EQ(a * a.inverse(), one);
                EXPECT_EQ((b / a) * a, b);
            }
        }
    }
}

TEST(NumberField, EmbeddingIsMultiplicative) {
    std::mt19937 rng(3);
    for (const auto& K : fields())
        for (int trial = 0; trial < 20; ++trial) {
            NFElem a = random_elem(K, rng), b = random_elem(K, rng);
            EXPECT_NEAR(std::abs((a * b).to_cx() - a.to_cx() * b.to_cx()), 0.0, 1e-9);
            EXPECT_NEAR(std::abs((a + b).to_cx() - a.to_cx() - b.to_cx()), 0.0, 1e-9);
        }
}

TEST(NumberField, RejectsUnsupportedMinimalPolynomials) {
    EXPECT_THROW(NumberField::make(qpoly({-2, 0, 0, 1})), std::domain_error);
    EXPECT_THROW(NumberField::make(qpoly({-4, 0, 1})), std::domain_error);
    EXPECT_THROW(NumberField::make(qpoly({1, 0, 2})), std::domain_error);
}

TEST(NumberField, Generators) {
    auto Z5 = NumberField::cyclotomic_field(5);
    NFElem z = NFElem::generator(Z5);
    EXPECT_EQ(z.pow(5), NFElem(Z5, {Rational(1)}));
    EXPECT_FALSE(z.pow(2).is_rational());
    auto Qi = NumberField::cyclotomic_field(4);
    NFElem i = NFElem::generator(Qi);
    EXPECT_EQ(i * i, NFElem(Qi, {Rational(-1)}));
    EXPECT_EQ(i.str(), "i");
    auto Q5 = NumberField::quadratic(5);
    NFElem s = NFElem::generator(Q5);
    NFElem phi = (NFElem(Q5, {Rational(1)}) + s) / NFElem(Q5, {Rational(2)});
    EXPECT_EQ(phi * phi, phi + NFElem(Q5, {Rational(1)}));
    EXPECT_NEAR(phi.to_cx().real(), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(NumberField, JsonRoundTrip) {
    std::mt19937 rng(5);
    for (const auto& K : fields())
        for (int trial = 0; trial < 10; ++trial) {
            NFElem a = random_elem(K, rng);
            json j = to_json(a);
            EXPECT_EQ(nfelem_from_json(j), a);
            EXPECT_EQ(json::parse(j.dump()), j);
        }
}

TEST(UPoly, ParseRoundTrip) {
    for (const auto& f : {qpoly({1, 0, 1}), qpoly({-1, 1}), qpoly({1}), qpoly({0, 0, 3}), qpoly({-5, 0, 0, 2})})
        EXPECT_EQ(parse_qpoly(f.str()), f) << f.str();
    EXPECT_THROW(parse_qpoly("x^2 +"), std::invalid_argument);
    EXPECT_THROW(parse_qpoly("2 3"), std::invalid_argument);
}

TEST(UPoly, ResultantAgainstSylvester) {
    QPoly f = qpoly({1, 0, 1}), g = qpoly({-2, 1});
    EXPECT_EQ(resultant(f, g), Rational(5));
    EXPECT_EQ(discriminant(qpoly({-1, -2, 3})), Rational(16));
}

TEST(UPoly, ResultantMultiplicative) {
    std::mt19937 rng(9);
    auto rp = [&](int deg) {
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i) cs.push_back(random_rational(rng));
        if (cs.back() == 0) cs.back() = 1;
        return QPoly(cs);
    };
    for (int trial = 0; trial < 15; ++trial) {
        QPoly a = rp(2), b = rp(3), c = rp(2);
        EXPECT_EQ(resultant(a * b, c), resultant(a, c) * resultant(b, c));
        auto [q, r] = divmod(a * b + c, b);
        EXPECT_EQ(q * b + r, a * b + c);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(UPoly, DiscriminantOfG) {
    for (int d = 2; d <= 6; ++d) {
        Rational disc = discriminant(g_polynomial(d));
        EXPECT_EQ(disc, Rational(oracle::disc_g[d - 2])) << "d = " << d;
    }
}

TEST(Roots, AberthRecoversRoots) {
    std::vector<Cx> want{{1, 0}, {-2, 0.5}, {0.3, -1.7}, {4, 2}};
    std::vector<Cx> c{1};
    for (auto r : want) {
        std::vector<Cx> n(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= r * c[i];
        }
        c = n;
    }
    auto got = roots_complex(c);
    ASSERT_EQ(got.size(), want.size());
    for (auto r : want) {
        double best = 1e9;
        for (auto z : got) best = std::min(best, std::abs(z - r));
        EXPECT_LT(best, 1e-10);
    }
}

TEST(Roots, GHasDistinctRoots) {
    for (int d = 2; d <= 6; ++d) {
        auto rs = roots_complex(g_polynomial(d));
        ASSERT_EQ(static_cast<int>(rs.size()), d);
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = i + 1; j < rs.size(); ++j) EXPECT_GT(std::abs(rs[i] - rs[j]), 1e-6);
    }
}

TEST(Factor, LowDegreeSplit) {
    auto fz = factor_low_degree(qpoly({-5, 0, 1}) * qpoly({1, -2}) * qpoly({1, 0, 1}));
    EXPECT_EQ(fz.linear.size(), 1u);
    EXPECT_EQ(fz.quadratic.size(), 2u);
    EXPECT_LE(fz.unresolved.degree(), 0);
}

TEST(MPoly, ExactDivisionAndDerivative) {
    using P = MPoly<Rational>;
    P x = P::var(0), y = P::var(1);
    P p = (x + y) * (x - y);
    EXPECT_EQ(exact_div(p, x + y), x - y);
    EXPECT_EQ(p.derivative(0), P(2) * x);
    EXPECT_EQ(p.substitute(1, x), P(0));
}

TEST(MPoly, ResultantEliminates) {
    using P = MPoly<Rational>;
    P x = P::var(0), y = P::var(1);
    // x + y = 0 and x^2 + y^2 = 1 meet where 2y^2 = 1
    P r = resultant_in(x + y, x * x + y * y - P(1), 0);
    EXPECT_EQ(r.degree_in(1), 2);
    Rational c = r.eval({Rational(0), Rational(0)});
    EXPECT_EQ(r, (P(2) * y * y - P(1)).scaled(-c));
}

TEST(RFunc, Normalizes) {
    using P = MPoly<Rational>;
    P x = P::var(0);
    RFunc<Rational> q(x * x - P(1), x - P(1));
    EXPECT_EQ(q, RFunc<Rational>(x + P(1)));
}

TEST(TruncSeries, LeadingTermOfProduct) {
    auto S = TruncSeries<Rational>::from_poly({0, 2, 3}, 3);
    auto [o, c] = series_leading(S * S);
    EXPECT_EQ(o, 2);
    EXPECT_EQ(c, Rational(4));
}
