#include <doctest.h>

#include "jumploci/casegen.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/groebner.hpp"
#include "jumploci/ideal.hpp"
#include "jumploci/rng.hpp"

using namespace jumploci;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }
Polynomial c(const RingPtr& r, long n) { return Polynomial::constant(r, Scalar(n)); }

} // namespace

TEST_CASE("scalar arithmetic is exact with huge components") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        // 256-bit numerators and denominators assembled from random hex digits.
        auto big = [&]() {
            std::string digits = "1";
            for (int d = 0; d < 64; ++d) digits += "0123456789abcdef"[rng.below(16)];
            mpz_class num(digits, 16);
            std::string den_digits = "1";
            for (int d = 0; d < 64; ++d) den_digits += "0123456789abcdef"[rng.below(16)];
            mpz_class den(den_digits, 16);
            return Scalar(mpq_class(num, den));
        };
        Scalar a = big(), b = big();
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("scalar parsing accepts p and p/q and rejects junk") {
    CHECK(Scalar::parse("3/2") == Scalar(3, 2));
    CHECK(Scalar::parse("-7") == Scalar(-7));
    CHECK(Scalar::parse("4/6") == Scalar(2, 3));
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK_THROWS_AS(Scalar::parse("2x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/-2"), ParseError);
}

TEST_CASE("gaussian scalars divide exactly") {
    Scalar i(mpq_class(0), mpq_class(1));
    Scalar z = Scalar(3) + i * Scalar(2); // 3 + 2i
    Scalar w = Scalar(1) - i;             // 1 - i
    CHECK(z / w * w == z);
    CHECK(i * i == Scalar(-1));
}

TEST_CASE("degrevlex order basics") {
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0}), one({0, 0});
    CHECK(ord.compare(x2, xy) > 0);
    CHECK(ord.compare(xy, y2) > 0);
    CHECK(ord.compare(x2, x) > 0); // degree first
    CHECK(ord.compare(one, x) < 0);
}

TEST_CASE("elimination order ranks the dropped block first") {
    // Variables (x, y, t), eliminating t: any monomial containing t dominates.
    MonomialOrder ord = MonomialOrder::elimination(3, {2});
    Monomial t({0, 0, 1}), x5({5, 0, 0});
    CHECK(ord.compare(t, x5) > 0);
}

TEST_CASE("reduced groebner basis: frozen examples") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);

    SUBCASE("(x^2, x y) is already reduced") {
        Ideal i(r, {x * x, x * y});
        REQUIRE(i.groebner().size() == 2);
        CHECK(i.groebner()[0] == x * y);
        CHECK(i.groebner()[1] == x * x);
    }
    SUBCASE("the zero ideal has the empty basis") {
        Ideal i(r, {Polynomial::zero(r)});
        CHECK(i.groebner().empty());
        CHECK(i.is_zero());
    }
    SUBCASE("(x, x-1) is the unit ideal") {
        Ideal i(r, {x, x - c(r, 1)});
        REQUIRE(i.groebner().size() == 1);
        CHECK(i.groebner()[0] == c(r, 1));
        CHECK(i.is_unit());
    }
    SUBCASE("textbook pair needs one new element") {
        // (x^2 - y, x y - x): the S-pair chain brings in y^2 - y and x y - x
        // stays; run by hand with degrevlex.
        Ideal i(r, {x * x - y, x * y - x});
        bool has_y2 = false;
        for (const auto& g : i.groebner())
            if (g == y * y - y) has_y2 = true;
        CHECK(has_y2);
        CHECK(i.contains(x * y * y - x * y));
    }
}

TEST_CASE("normal form: frozen examples and properties") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);
    Ideal i(r, {x * x, x * y});

    CHECK(i.normal_form(x * x * y + y) == y);
    CHECK(i.normal_form(Polynomial::zero(r)).is_zero());

    Ideal j(r, {x - c(r, 1)});
    CHECK(j.normal_form(x) == c(r, 1));

    Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial f = casegen::random_polynomial(rng, r, 3);
        Polynomial g = casegen::random_polynomial(rng, r, 3);
        Scalar a = rng.small_rational(), b = rng.small_rational();
        // Idempotence and field-linearity.
        CHECK(i.normal_form(i.normal_form(f)) == i.normal_form(f));
        CHECK(i.normal_form(f * a + g * b) == i.normal_form(f) * a + i.normal_form(g) * b);
    }
}

TEST_CASE("ideal sum: frozen examples") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);
    CHECK(ideal_sum(Ideal(r, {x}), Ideal(r, {y})).equals(Ideal(r, {x, y})));
    Ideal i(r, {x * x - y});
    CHECK(ideal_sum(i, Ideal::zero(r)).equals(i));
    CHECK(ideal_sum(Ideal(r, {x * x}), Ideal(r, {x * x * x})).equals(Ideal(r, {x * x})));
}

TEST_CASE("ideal intersection: frozen examples and membership property") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);

    CHECK(ideal_intersect(Ideal(r, {x}), Ideal(r, {y})).equals(Ideal(r, {x * y})));
    Ideal i(r, {x * x + y});
    CHECK(ideal_intersect(i, Ideal::unit(r)).equals(i));
    Ideal m(r, {x, y});
    CHECK(ideal_intersect(m, m).equals(m));

    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        Ideal a(r, {casegen::random_polynomial(rng, r, 2), casegen::random_polynomial(rng, r, 2)});
        Ideal b(r, {casegen::random_polynomial(rng, r, 2)});
        Ideal both = ideal_intersect(a, b);
        for (const auto& g : both.generators()) {
            CHECK(a.contains(g));
            CHECK(b.contains(g));
        }
        // Products of members land in the intersection.
        if (!a.generators().empty() && !b.generators().empty())
            CHECK(both.contains(a.generators()[0] * b.generators()[0]));
    }
}

TEST_CASE("ideal containment: frozen examples") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);
    CHECK(Ideal(r, {x}).contains(Ideal(r, {x * x})));
    CHECK_FALSE(Ideal(r, {x * x}).contains(Ideal(r, {x})));
    Ideal square(r, {x * x, x * y, y * y});
    CHECK(square.contains((x + y) * (x + y)));
}

TEST_CASE("standard monomials and quotient dimension") {
    auto r = xy();
    Polynomial x = var(r, 0), y = var(r, 1);

    Ideal square(r, {x * x, x * y, y * y});
    auto sm = square.standard_monomials();
    REQUIRE(sm.has_value());
    REQUIRE(sm->size() == 3);
    CHECK((*sm)[0] == Monomial({0, 0}));
    CHECK((*sm)[1] == Monomial({1, 0}));
    CHECK((*sm)[2] == Monomial({0, 1}));
    CHECK(square.quotient_dim() == 3);

    CHECK(Ideal::unit(r).quotient_dim() == 0);
    CHECK_FALSE(Ideal(r, {x}).quotient_dim().has_value());
}

TEST_CASE("elimination: frozen examples") {
    auto r3 = make_ring({"x", "y", "t"});
    Polynomial x = var(r3, 0), y = var(r3, 1), t = var(r3, 2);

    SUBCASE("the intersection construction for (x) and (y)") {
        Ideal i(r3, {t * x, (c(r3, 1) - t) * y});
        Ideal out = eliminate(i, {2});
        auto r = xy();
        CHECK(out.equals(Ideal(r, {var(r, 0) * var(r, 1)})));
    }
    SUBCASE("a parametrized curve") {
        Ideal i(r3, {x - t, y - t * t});
        Ideal out = eliminate(i, {2});
        auto r = xy();
        Polynomial ox = var(r, 0), oy = var(r, 1);
        CHECK(out.equals(Ideal(r, {oy - ox * ox})));
        // Evaluation oracle: the generators vanish along (t, t^2).
        for (long tv = -3; tv <= 3; ++tv) {
            for (const auto& g : out.generators())
                CHECK(g.evaluate({Scalar(tv), Scalar(tv * tv)}).is_zero());
        }
    }
    SUBCASE("zero ideal stays zero") {
        CHECK(eliminate(Ideal::zero(r3), {2}).is_zero());
    }
}

TEST_CASE("reduced bases satisfy the defining postconditions") {
    // Independent oracle for the engine: a reduced basis must be monic and
    // mutually irreducible, every input generator must reduce to zero, and
    // every S-polynomial of basis pairs must reduce to zero.
    Rng rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        Ideal i = casegen::random_ideal(rng);
        const auto& gb = i.groebner();
        const MonomialOrder& ord = i.order();

        for (const auto& g : i.generators()) CHECK(i.normal_form(g).is_zero());

        for (std::size_t a = 0; a < gb.size(); ++a) {
            // Monic leading coefficient.
            const Monomial& lm = leading_monomial(gb[a], ord);
            for (const auto& t : gb[a].terms())
                if (t.mono == lm) CHECK(t.coeff.is_one());
            // No term divisible by another element's leading monomial.
            for (std::size_t b = 0; b < gb.size(); ++b) {
                if (a == b) continue;
                const Monomial& other = leading_monomial(gb[b], ord);
                for (const auto& t : gb[a].terms()) CHECK_FALSE(other.divides(t.mono));
            }
            // Sorted ascending by leading monomial.
            if (a + 1 < gb.size())
                CHECK(ord.less(lm, leading_monomial(gb[a + 1], ord)));
        }

        for (std::size_t a = 0; a < gb.size(); ++a) {
            for (std::size_t b = a + 1; b < gb.size(); ++b) {
                const Monomial& la = leading_monomial(gb[a], ord);
                const Monomial& lb = leading_monomial(gb[b], ord);
                Monomial l = Monomial::lcm(la, lb);
                Polynomial sa = gb[a] * Polynomial::from_monomial(i.ring(), l.divide(la));
                Polynomial sb = gb[b] * Polynomial::from_monomial(i.ring(), l.divide(lb));
                CHECK(i.normal_form(sa - sb).is_zero());
            }
        }
    }
}

TEST_CASE("reduced basis is canonical under generator shuffling") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Ideal i = casegen::random_ideal(rng);
        for (int variant = 0; variant < 5; ++variant) {
            Ideal j(i.ring(), casegen::shuffled_generators(rng, i));
            REQUIRE(j.groebner().size() == i.groebner().size());
            CHECK(j.equals(i));
        }
    }
}

TEST_CASE("quotient dimension finite iff pure powers lead") {
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        Ideal i = casegen::random_ideal(rng);
        MonomialOrder ord = i.order();
        bool pure_all = true;
        for (std::size_t v = 0; v < i.ring()->nvars() && pure_all; ++v) {
            bool pure = false;
            for (const auto& g : i.groebner()) {
                // x_v^d with d >= 0; the constant monomial makes every power lie
                // in the leading-term ideal.
                const Monomial& lm = leading_monomial(g, ord);
                bool is_pure = true;
                for (std::size_t w = 0; w < lm.e.size() && is_pure; ++w)
                    if (w != v && lm.e[w] > 0) is_pure = false;
                if (is_pure) pure = true;
            }
            pure_all = pure;
        }
        CHECK(i.quotient_dim().has_value() == pure_all);
    }
}

TEST_CASE("groebner machinery works over the gaussian extension") {
    auto r = make_ring({"x"});
    Scalar i(mpq_class(0), mpq_class(1));
    Polynomial x = var(r, 0);

    // (i*x + 1) is principal with monic form x - i.
    Ideal ideal(r, {x * i + c(r, 1)});
    REQUIRE(ideal.groebner().size() == 1);
    CHECK(ideal.groebner()[0] == x - Polynomial::constant(r, i));
    // x^2 + 1 = (x - i)(x + i) lies inside.
    CHECK(ideal.contains(x * x + c(r, 1)));
    CHECK(ideal.normal_form(x) == Polynomial::constant(r, i));
}

TEST_CASE("mixed rings are rejected") {
    auto r = xy();
    auto other = make_ring({"u", "v"});
    CHECK_THROWS_AS(Ideal(r, {Polynomial::variable(other, 0)}), ValidationError);
    CHECK_THROWS_AS(var(r, 0) + Polynomial::variable(other, 0), ValidationError);
}
