#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skk/charclass.hpp>
#include <skk/data.hpp>
#include <skk/itqft.hpp>

using namespace skk;

namespace {

const CatalogBundle& catalog() {
    static CatalogBundle cat = load_catalog();
    return cat;
}

}  // namespace

TEST_CASE("character group of Z x Z/4") {
    auto g = group_from_literal("Z x Z/4");
    auto c = hom_to_circle(g);
    CHECK(c.circle_rank == 1);
    CHECK(format_character_group(c) == "C* x Z/4");
}

TEST_CASE("classification of the spin row, dimensions 1-5") {
    const char* expect[] = {"Z/2 x Z/2", "C* x Z/2", "Z/2", "C*^2", "Z/2"};
    for (int n = 1; n <= 5; ++n) {
        auto c = classify(catalog(), "spin", n);
        CAPTURE(n);
        CHECK(c.full_text() == expect[n - 1]);
        CHECK(c.split_over_unitary == SplitStatus::split);
    }
}

TEST_CASE("blue cells: non-split over the unitary subgroup") {
    auto pm = classify(catalog(), "pin-", 2);
    CHECK(pm.full_text() == "C* x Z/4");
    CHECK(pm.split_over_unitary == SplitStatus::non_split);
    CHECK(pm.unitary_known);
    CHECK(pm.unitary_u1_rank == 0);
    CHECK(format_group(pm.unitary_torsion) == "Z/8");
    CHECK(pm.unitary_positive_real);
    CHECK(pm.unitary_text() == "Z/8 x R_>0");

    auto ai = classify(catalog(), "pinct-", 2);
    CHECK(ai.full_text() == "C*^2");
    CHECK(ai.split_over_unitary == SplitStatus::non_split);
    CHECK(ai.unitary_text() == "U(1) x Z/2 x R_>0");

    auto sp2 = classify(catalog(), "spin", 2);
    CHECK(sp2.full_text() == "C* x Z/2");
    CHECK(sp2.unitary_text() == "Z/2 x R_>0");
    CHECK(sp2.split_over_unitary == SplitStatus::split);
}

TEST_CASE("quotient by the unitary subgroup") {
    // even dimensions: evaluation on the bounding sphere is onto C^x
    auto even = classify(catalog(), "o", 2);
    CHECK(even.quotient_known);
    CHECK(even.quotient_text() == "C*");
    // odd dimensions: the character group of the sphere subgroup
    auto z2 = classify(catalog(), "spin", 3);
    CHECK(z2.quotient_text() == "Z/2");
    auto zero = classify(catalog(), "so", 3);
    CHECK(zero.quotient_text() == "0");
    auto open = classify(catalog(), "pin+", 17);
    CHECK_FALSE(open.quotient_known);
    CHECK(open.quotient_text() == "?");
}

TEST_CASE("exactness of the character sequence on computed cells") {
    for (const auto& s : catalog().structures) {
        for (int n = 1; n <= 5; ++n) {
            auto c = classify(catalog(), s.name, n);
            if (!c.full_known || !c.unitary_known || !c.quotient_known) continue;
            CAPTURE(s.name);
            CAPTURE(n);
            if (n % 2 == 0) {
                // one circle factor per free bordism generator plus the sphere
                CHECK(c.full.circle_rank == c.unitary_u1_rank + 1);
                Int full_t = c.full.torsion.torsion_order();
                Int uni_t = c.unitary_torsion.torsion_order();
                if (c.split_over_unitary == SplitStatus::split) CHECK(full_t == uni_t);
                else CHECK(uni_t == 2 * full_t);  // sphere meets torsion in index two
            } else {
                // discrete groups: orders multiply along the exact sequence
                CHECK(c.full.circle_rank == c.unitary_u1_rank);
                CHECK(c.full.torsion.torsion_order() ==
                      c.unitary_torsion.torsion_order() * c.quotient_torsion.torsion_order());
            }
        }
    }
}

TEST_CASE("unknown verdicts propagate to the classification") {
    auto v = classify(catalog(), "pin+", 9);
    CHECK_FALSE(v.full_known);
    CHECK(v.full_text() == "?");
    CHECK(v.split_over_unitary == SplitStatus::unknown);
    auto or15 = classify(catalog(), "or4", 15);
    CHECK_FALSE(or15.unitary_known);     // no bordism groups on file
    CHECK(or15.quotient_text() == "Z/2");  // but the sphere subgroup is known
    CHECK_THROWS_AS(classify(catalog(), "nosuch", 3), std::invalid_argument);
}

TEST_CASE("Kervaire partition function") {
    auto s1 = load_corpus_complex("s1");
    auto s3 = load_corpus_complex("s3");
    auto rp3 = load_corpus_complex("rp3");
    CHECK(kervaire_partition(s1) == -1);
    CHECK(kervaire_partition(s3) == -1);
    CHECK(kervaire_partition(rp3, 2) == 1);
    CHECK(kervaire_partition(disjoint_union(s1, s1)) == 1);
    // multiplicative under disjoint union
    for (const char* a : {"s3", "rp3", "l3_1"}) {
        for (const char* b : {"s3", "rp3"}) {
            auto ka = load_corpus_complex(a);
            auto kb = load_corpus_complex(b);
            CHECK(kervaire_partition(disjoint_union(ka, kb)) ==
                  kervaire_partition(ka) * kervaire_partition(kb));
        }
    }
    CHECK_THROWS_AS(kervaire_partition(load_corpus_complex("s2")), std::invalid_argument);
    CHECK_THROWS_AS(kervaire_partition(load_corpus_complex("d3")), std::invalid_argument);
}

TEST_CASE("Euler partition function") {
    auto rp2 = load_corpus_complex("rp2");
    auto s2 = load_corpus_complex("s2");
    auto t2 = load_corpus_complex("t2");
    CHECK(euler_partition(Rational(-1), rp2) == -1);
    CHECK(euler_partition(Rational(2), s2) == 4);
    CHECK(euler_partition(Rational(1, 2), s2) == Rational(1, 4));
    CHECK(euler_partition(Rational(5), t2) == 1);  // chi = 0
    CHECK(euler_partition_symbolic("i", s2) == "i^2");
    CHECK(euler_partition_symbolic("lambda", rp2) == "lambda^1");
    CHECK_THROWS_AS(euler_partition(Rational(0), s2), std::invalid_argument);

    // multiplicativity in the manifold and in lambda
    auto both = disjoint_union(rp2, s2);
    CHECK(euler_partition(Rational(3), both) ==
          euler_partition(Rational(3), rp2) * euler_partition(Rational(3), s2));
    CHECK(euler_partition(Rational(2), s2) * euler_partition(Rational(3), s2) ==
          euler_partition(Rational(6), s2));
}

TEST_CASE("lambda = -1 descends to unoriented bordism classes") {
    // (-1)^chi agrees on manifolds with equal top Stiefel-Whitney number and
    // separates ones with different top Stiefel-Whitney numbers
    auto val = [](const char* slug) {
        return euler_partition(Rational(-1), load_corpus_complex(slug));
    };
    CHECK(val("t2") == val("klein"));  // both bound rationally even chi
    CHECK(val("rp2") != val("s2"));
    for (const char* slug : {"s2", "rp2", "t2", "klein", "cp2", "rp4"}) {
        auto k = load_corpus_complex(slug);
        CHECK((val(slug) == -1) == top_sw_number(k));
    }
}

TEST_CASE("trace of the identity on the even-dimensional corpus") {
    for (const char* slug : {"s2", "rp2", "t2", "klein", "s4", "cp2"}) {
        CAPTURE(slug);
        CHECK(trace_check(load_corpus_complex(slug)));
    }
    CHECK_THROWS_AS(trace_check(load_corpus_complex("s3")), std::invalid_argument);
    CHECK_THROWS_AS(trace_check(load_corpus_complex("d2")), std::invalid_argument);
}
