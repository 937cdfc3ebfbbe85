#include "wittconics/conics.hpp"

#include <doctest.h>

#include <random>

using namespace wittconics;

namespace {

std::vector<Int> squarefree_values(int bound) {
    std::vector<Int> out;
    for (int n = 1; n <= bound; ++n)
        if (is_squarefree(Int(n))) {
            out.emplace_back(n);
            out.emplace_back(-n);
        }
    return out;
}

bool on_conic(const Rat& a, const Rat& b, const RationalPoint& pt) {
    return a * pt.x * pt.x + b * pt.y * pt.y == 1;
}

} // namespace

TEST_CASE("splitting of the defining algebra") {
    CHECK(splits(Rat(1), Rat(1)));
    CHECK_FALSE(splits(Rat(-1), Rat(-1)));
    CHECK_FALSE(splits(Rat(2), Rat(3)));
}

TEST_CASE("bounded rational point search") {
    auto p1 = find_rational_point(Rat(1), Rat(1), 10);
    REQUIRE(p1.has_value());
    CHECK(p1->x == 1);
    CHECK(p1->y == 0);

    auto p2 = find_rational_point(Rat(5), Rat(-1), 10);
    REQUIRE(p2.has_value());
    CHECK(p2->x == 1);
    CHECK(p2->y == 2);

    // Non-split: no point exists at any bound; this returns fast.
    CHECK_FALSE(find_rational_point(Rat(2), Rat(3), 1000000).has_value());

    CHECK_THROWS_AS(find_rational_point(Rat(1), Rat(1), 0), std::domain_error);
    CHECK_THROWS_AS(find_rational_point(Rat(0), Rat(1), 10), std::domain_error);

    // Isotropic pair a = -b: the closed-form chart point.
    auto p3 = find_rational_point(Rat(30), Rat(-30), 100);
    REQUIRE(p3.has_value());
    CHECK(on_conic(Rat(30), Rat(-30), *p3));

    // Rational (non-integer) coefficients.
    auto p4 = find_rational_point(Rat(5, 4), Rat(-1), 40);
    REQUIRE(p4.has_value());
    CHECK(on_conic(Rat(5, 4), Rat(-1), *p4));

    CHECK(holzer_point_bound(Rat(5), Rat(-1)) == 400);
    CHECK(holzer_point_bound(Rat(30), Rat(7)) == 16 * 900);
}

TEST_CASE("point search agrees with the symbol route up to |a|,|b| <= 30") {
    for (const Int& a : squarefree_values(30))
        for (const Int& b : squarefree_values(30)) {
            bool s = splits(Rat(a), Rat(b));
            bool found = find_rational_point(Rat(a), Rat(b), holzer_point_bound(Rat(a), Rat(b))).has_value();
            REQUIRE_MESSAGE(s == found, "a=", a.str(), " b=", b.str());
        }
}

TEST_CASE("parametrization yields exact identities") {
    // (1,1) through (1,0): X = (1-z^2)/(1+z^2) and Y = -2z/(1+z^2) up to
    // the sign convention of the chart.
    ConicParametrization c = parametrize(Rat(1), Rat(1), RationalPoint{Rat(1), Rat(0)});
    CHECK(c.x_num == PolyQ{Rat(1), Rat(0), Rat(-1)});
    CHECK(c.y_num == PolyQ{Rat(0), Rat(-2)});
    CHECK(c.den == PolyQ{Rat(1), Rat(0), Rat(1)});

    ConicParametrization c2 = parametrize(Rat(5), Rat(-1), RationalPoint{Rat(1), Rat(2)});
    PolyQ lhs = poly_add(poly_scale(poly_mul(c2.x_num, c2.x_num), Rat(5)),
                         poly_scale(poly_mul(c2.y_num, c2.y_num), Rat(-1)));
    CHECK(poly_is_zero(poly_sub(lhs, poly_mul(c2.den, c2.den))));

    CHECK_THROWS_AS(parametrize(Rat(1), Rat(1), RationalPoint{Rat(2), Rat(0)}), std::domain_error);
}

TEST_CASE("parametrization identity across split pairs up to 30") {
    for (const Int& a : squarefree_values(30))
        for (const Int& b : squarefree_values(30)) {
            if (!splits(Rat(a), Rat(b))) continue;
            auto pt = find_rational_point(Rat(a), Rat(b), holzer_point_bound(Rat(a), Rat(b)));
            REQUIRE(pt.has_value());
            ConicParametrization c = parametrize(Rat(a), Rat(b), *pt);
            PolyQ lhs = poly_add(poly_scale(poly_mul(c.x_num, c.x_num), Rat(a)),
                                 poly_scale(poly_mul(c.y_num, c.y_num), Rat(b)));
            REQUIRE(poly_is_zero(poly_sub(lhs, poly_mul(c.den, c.den))));
        }
}

TEST_CASE("k-isomorphism of conic fields") {
    CHECK(conic_isomorphic(Rat(2), Rat(3), Rat(3), Rat(2)));
    CHECK(conic_isomorphic(Rat(2), Rat(3), Rat(2), Rat(-6)));  // (a,b) = (a,-ab)
    CHECK_FALSE(conic_isomorphic(Rat(1), Rat(1), Rat(-1), Rat(-1)));

    // Equivalence relation + square-scaling invariance on a sample.
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(-15, 15);
    auto nz = [&]() {
        int n = 0;
        while (n == 0) n = pick(rng);
        return n;
    };
    for (int t = 0; t < 40; ++t) {
        Rat a(nz()), b(nz()), c(nz()), d(nz()), e(nz()), f(nz());
        CHECK(conic_isomorphic(a, b, a, b));
        if (conic_isomorphic(a, b, c, d)) CHECK(conic_isomorphic(c, d, a, b));
        if (conic_isomorphic(a, b, c, d) && conic_isomorphic(c, d, e, f)) CHECK(conic_isomorphic(a, b, e, f));
        CHECK(conic_isomorphic(a, b, b, a));
        CHECK(conic_isomorphic(a, b, a * 4, b * 49));
    }
}

TEST_CASE("quaternions splitting over a conic field") {
    CHECK(quaternion_splits_over_conic(Rat(2), Rat(3), Rat(2), Rat(3)));
    CHECK_FALSE(quaternion_splits_over_conic(Rat(-1), Rat(-1), Rat(1), Rat(1)));
    CHECK(quaternion_splits_over_conic(Rat(-1), Rat(-1), Rat(-1), Rat(-1)));
    for (int t : {1, -1, 2, 7, -30}) CHECK(quaternion_splits_over_conic(Rat(1), Rat(t), Rat(5), Rat(7)));
    // Square-class invariance in all four arguments.
    CHECK(quaternion_splits_over_conic(Rat(-4), Rat(-9), Rat(9, 4), Rat(25)) ==
          quaternion_splits_over_conic(Rat(-1), Rat(-1), Rat(1), Rat(1)));
}

TEST_CASE("ordering extension counts") {
    CHECK(orderings_extending(Rat(1), Rat(-1)) == 1);
    CHECK(orderings_extending(Rat(-1), Rat(-1)) == 0);
    CHECK_THROWS_AS(orderings_extending(Rat(0), Rat(1)), std::domain_error);

    // Over Q(sqrt(2)): a = 1 + sqrt(2) is positive at one embedding only.
    QuadElem a{Rat(1), Rat(1)}, minus_one{Rat(-1), Rat(0)};
    CHECK(orderings_extending(Int(2), a, minus_one) == 1);
    QuadElem three{Rat(3), Rat(1)};  // 3 + sqrt(2) > 0 at both embeddings
    CHECK(orderings_extending(Int(2), three, minus_one) == 2);
    CHECK(orderings_extending(Int(-5), a, minus_one) == 0);  // imaginary: no orderings
    CHECK_THROWS_AS(orderings_extending(Int(2), QuadElem{Rat(0), Rat(0)}, a), std::domain_error);
    CHECK_THROWS_AS(orderings_extending(Int(12), a, a), std::domain_error);
}

TEST_CASE("witt_distinguish certificate rules") {
    Certificate c1 = witt_distinguish(Rat(1), Rat(1), Rat(-1), Rat(-1));
    CHECK(c1.kind() == "ordering_count");
    auto& oc = std::get<OrderingCountCert>(c1.data);
    CHECK(oc.count_first == 1);
    CHECK(oc.count_second == 0);
    CHECK(verify_certificate(c1, Rat(1), Rat(1), Rat(-1), Rat(-1)));

    Certificate c2 = witt_distinguish(Rat(1), Rat(1), Rat(2), Rat(3));
    CHECK(c2.kind() == "split_vs_nonsplit");
    CHECK(verify_certificate(c2, Rat(1), Rat(1), Rat(2), Rat(3)));

    Certificate c3 = witt_distinguish(Rat(-1), Rat(-1), Rat(-385), Rat(-1));
    CHECK(c3.kind() == "quaternion_obstruction");
    auto& qo = std::get<QuaternionObstructionCert>(c3.data);
    CHECK(qo.witness_identity == std::array<Int, 2>{-1, -1});
    CHECK(qo.ram_second.places ==
          std::vector<Place>{Place::finite(2), Place::finite(7), Place::finite(11), Place::at_infinity()});
    CHECK(verify_certificate(c3, Rat(-1), Rat(-1), Rat(-385), Rat(-1)));

    Certificate same = witt_distinguish(Rat(2), Rat(3), Rat(3), Rat(2));
    CHECK(same.indistinguishable());
    CHECK(verify_certificate(same, Rat(2), Rat(3), Rat(3), Rat(2)));  // vacuous
}

TEST_CASE("verify_certificate rejects tampering and mismatched inputs") {
    Certificate c = witt_distinguish(Rat(1), Rat(1), Rat(-1), Rat(-1));
    std::get<OrderingCountCert>(c.data).count_first = 0;  // swap the counts
    CHECK_FALSE(verify_certificate(c, Rat(1), Rat(1), Rat(-1), Rat(-1)));

    Certificate c2 = witt_distinguish(Rat(1), Rat(1), Rat(2), Rat(3));
    CHECK_THROWS_AS(verify_certificate(c2, Rat(1), Rat(1), Rat(2), Rat(5)), std::domain_error);
    // Square-class equal inputs are the same field descriptor.
    CHECK(verify_certificate(c2, Rat(4), Rat(9), Rat(8), Rat(27)));

    Certificate c3 = witt_distinguish(Rat(-1), Rat(-1), Rat(-385), Rat(-1));
    auto& qo = std::get<QuaternionObstructionCert>(c3.data);
    qo.ram_witness_identity.places.clear();  // tamper with the witness data
    CHECK_FALSE(verify_certificate(c3, Rat(-1), Rat(-1), Rat(-385), Rat(-1)));
}

TEST_CASE("weak approximation") {
    CHECK(weak_approx({}) == 1);
    CHECK(weak_approx({LocalCondition::sign_at_infinity(1), LocalCondition::class_at(2, Rat(-1))}) == 7);
    CHECK(weak_approx({LocalCondition::sign_at_infinity(-1), LocalCondition::class_at(2, Rat(-1)),
                       LocalCondition::class_at(7, Rat(7))}) == -385);
    CHECK(weak_approx({LocalCondition::class_at(2, Rat(1)), LocalCondition::sign_at_infinity(-1)}) == -7);
    CHECK_THROWS_AS(weak_approx({LocalCondition::sign_at_infinity(1), LocalCondition::sign_at_infinity(-1)}),
                    std::domain_error);
    CHECK_THROWS_AS(weak_approx({LocalCondition::class_at(3, Rat(1)), LocalCondition::class_at(3, Rat(3))}),
                    std::domain_error);

    // An even 2-adic target needs the mod-16 congruence; check the class.
    Int n = weak_approx({LocalCondition::class_at(2, Rat(10))});
    CHECK(padic_square_class(Rat(n), 2).rep == 10);

    // Returned values satisfy their conditions (independent residue check).
    Int m = weak_approx({LocalCondition::sign_at_infinity(-1), LocalCondition::class_at(2, Rat(-1)),
                         LocalCondition::class_at(7, Rat(7))});
    CHECK(m < 0);
    CHECK(math_mod(m, 8) == 7);              // class of -1 at 2
    CHECK(math_mod(m / 7, 7) != 0);
    CHECK(legendre_symbol(math_mod(m / 7, 7), 7) == 1);  // unit part a residue at 7
}

TEST_CASE("witness family over Q") {
    WitnessSet ws = witness_set();
    REQUIRE(ws.fields.size() >= 4);
    CHECK(ws.fields[0] == ConicField::over_q(Rat(-1), Rat(-1)));
    CHECK(ws.fields[1] == ConicField::over_q(Rat(1), Rat(-1)));
    CHECK(ws.fields[2] == ConicField::over_q(Rat(7), Rat(-1)));
    CHECK(ws.fields[3] == ConicField::over_q(Rat(-385), Rat(-1)));
    int pairs = 0;
    for (std::size_t i = 0; i < ws.fields.size(); ++i)
        for (std::size_t j = i + 1; j < ws.fields.size(); ++j) {
            REQUIRE(ws.certificates[i][j].has_value());
            const Certificate& cert = *ws.certificates[i][j];
            CHECK_FALSE(cert.indistinguishable());
            CHECK(verify_certificate(cert, ws.fields[i].a.rational(), ws.fields[i].b.rational(),
                                     ws.fields[j].a.rational(), ws.fields[j].b.rational()));
            ++pairs;
        }
    CHECK(pairs == 6);
    CHECK(ws.certificates[1][2]->kind() == "split_vs_nonsplit");
    CHECK(ws.certificates[0][3]->kind() == "quaternion_obstruction");
}

TEST_CASE("certificates never separate isomorphic fields") {
    for (const Int& a : squarefree_values(6))
        for (const Int& b : squarefree_values(6))
            for (const Int& c : squarefree_values(6))
                for (const Int& d : squarefree_values(6)) {
                    if (!conic_isomorphic(Rat(a), Rat(b), Rat(c), Rat(d))) continue;
                    Certificate cert = witt_distinguish(Rat(a), Rat(b), Rat(c), Rat(d));
                    REQUIRE_MESSAGE(cert.indistinguishable(), "a=", a.str(), " b=", b.str(), " c=", c.str(),
                                    " d=", d.str());
                }
}
