#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skk/charclass.hpp>
#include <skk/data.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

using namespace skk;

namespace {

// closed corpus entries exercised by the characteristic-class property suites;
// each complex and its cohomology basis is built once and shared
struct Entry {
    SimplicialComplex k;
    std::unique_ptr<CohomologyBasisF2> H;
};

Entry& corpus(const std::string& slug) {
    static std::map<std::string, Entry> cache;
    auto it = cache.find(slug);
    if (it == cache.end()) {
        it = cache.emplace(slug, Entry{load_corpus_complex(slug), nullptr}).first;
        // build the basis only once the complex has its final address
        it->second.H = std::make_unique<CohomologyBasisF2>(it->second.k);
    }
    return it->second;
}

const std::vector<std::string> closed_corpus = {"s1", "s2",  "s3",    "s4",  "rp2", "rp3",
                                                "t2", "klein", "cp2", "l3_1", "rp4"};

// restriction of a cochain to a subcomplex sharing the vertex numbering
CocycleF2 restrict_cochain(const CocycleF2& c, const SimplicialComplex& sub) {
    F2Vector s(sub.face_count(c.degree));
    const auto& faces = sub.faces(c.degree);
    for (size_t i = 0; i < faces.size(); ++i) {
        int j = c.complex->face_index(c.degree, faces[i]);
        if (j >= 0 && c.support.get(j)) s.set(static_cast<int>(i), true);
    }
    CocycleF2 out{&sub, c.degree, std::move(s), false};
    return out;
}

}  // namespace

TEST_CASE("cohomology basis ranks agree with homology betti numbers") {
    for (const auto& slug : {"rp2", "t2", "klein", "cp2", "rp3", "moebius"}) {
        auto k = load_corpus_complex(slug);
        CohomologyBasisF2 H(k);
        auto bv = k.homology(2);
        for (int d = 0; d <= k.dim(); ++d)
            CHECK_MESSAGE(H.betti(d) == bv.betti[static_cast<size_t>(d)], slug, " degree ", d);
    }
}

TEST_CASE("cup products: unit, RP2 square, torus hyperbolic pairing") {
    auto& rp2 = corpus("rp2");
    REQUIRE(rp2.H->betti(1) == 1);
    auto a = rp2.H->basis(1)[0];
    CHECK(fundamental_eval(cup(a, a)) == 1);
    CHECK_FALSE(rp2.H->is_zero_class(cup(a, a)));

    // 1 cup x = x on the nose
    auto one = unit_cocycle(rp2.k);
    CHECK(cup(one, a).support == a.support);
    auto a2 = cup(a, a);
    CHECK(cup(one, a2).support == a2.support);

    auto& t2 = corpus("t2");
    REQUIRE(t2.H->betti(1) == 2);
    auto form = intersection_form_mid(t2.k, *t2.H);
    CHECK(form.dimension == 2);
    CHECK(form.rank == 2);
    CHECK(form.even);
    // an even nondegenerate rank-2 form over F2 is the hyperbolic plane
    CHECK(form.gram.get(0, 1));
    CHECK(form.gram.get(1, 0));
}

TEST_CASE("cup and cup-i products of cocycles are cocycles") {
    for (const auto& slug : {"rp2", "t2", "klein", "cp2", "rp3"}) {
        auto& e = corpus(slug);
        for (int d = 0; d <= e.k.dim(); ++d)
            for (const auto& x : e.H->basis(d)) {
                for (int i = 0; i <= d; ++i) {
                    auto s = steenrod_sq(i, x);
                    CHECK_MESSAGE(s.is_cocycle, slug, " Sq^", i, " on degree ", d);
                }
                for (const auto& y : e.H->basis(d))
                    CHECK(cup(x, y).is_cocycle);
            }
    }
}

TEST_CASE("Steenrod squares: Sq^0 = id, top square, vanishing above degree") {
    for (const auto& slug : {"rp2", "t2", "klein", "cp2", "rp3"}) {
        auto& e = corpus(slug);
        for (int d = 0; d <= e.k.dim(); ++d)
            for (const auto& x : e.H->basis(d)) {
                CHECK(e.H->same_class(steenrod_sq(0, x), x));
                CHECK(steenrod_sq(d, x).support == cup(x, x).support);
                CHECK(steenrod_sq(d + 1, x).zero());
            }
    }
}

TEST_CASE("Steenrod squares are additive on cohomology classes") {
    for (const auto& slug : {"t2", "klein", "rp3", "cp2"}) {
        auto& e = corpus(slug);
        for (int d = 1; d <= e.k.dim(); ++d) {
            const auto& basis = e.H->basis(d);
            for (size_t a = 0; a < basis.size(); ++a)
                for (size_t b = a + 1; b < basis.size(); ++b)
                    for (int i = 0; i <= d; ++i) {
                        auto lhs = e.H->class_coords(steenrod_sq(i, add(basis[a], basis[b])));
                        auto rhs = e.H->class_coords(steenrod_sq(i, basis[a]));
                        rhs ^= e.H->class_coords(steenrod_sq(i, basis[b]));
                        CHECK_MESSAGE(lhs == rhs, slug, " Sq^", i, " degree ", d);
                    }
        }
    }
}

TEST_CASE("Sq^1 detects the Klein bottle, vanishes on the torus") {
    auto& klein = corpus("klein");
    bool found = false;
    for (const auto& x : klein.H->basis(1))
        if (fundamental_eval(steenrod_sq(1, x))) found = true;
    CHECK(found);

    auto& t2 = corpus("t2");
    for (const auto& x : t2.H->basis(1)) CHECK(fundamental_eval(steenrod_sq(1, x)) == 0);
}

TEST_CASE("naturality: cup-i commutes with restriction to subcomplexes") {
    auto& klein = corpus("klein");
    // a full-dimensional proper subcomplex with the same vertex numbering
    auto facets = klein.k.facets();
    facets.resize(facets.size() - 3);
    SimplicialComplex sub(klein.k.vertex_count(), facets);
    for (const auto& x : klein.H->basis(1)) {
        auto rx = restrict_cochain(x, sub);
        for (int i : {0, 1}) {
            auto lhs = restrict_cochain(steenrod_sq(i, x), sub);
            auto rhs = steenrod_sq(i, rx);
            CHECK(lhs.support == rhs.support);
        }
        for (const auto& y : klein.H->basis(1)) {
            auto lhs = restrict_cochain(cup(x, y), sub);
            auto rhs = cup(rx, restrict_cochain(y, sub));
            CHECK(lhs.support == rhs.support);
        }
    }
}

TEST_CASE("Wu classes: spheres, RP2, Klein bottle, CP2") {
    for (const auto& slug : {"s2", "s3", "s4"}) {
        auto& e = corpus(slug);
        auto v = wu_classes(e.k, *e.H);
        for (size_t i = 1; i < v.size(); ++i) CHECK(e.H->is_zero_class(v[i]));
    }

    auto& rp2 = corpus("rp2");
    auto v = wu_classes(rp2.k, *rp2.H);
    CHECK(rp2.H->same_class(v[1], rp2.H->basis(1)[0]));  // v_1 = a

    auto& klein = corpus("klein");
    v = wu_classes(klein.k, *klein.H);
    CHECK_FALSE(klein.H->is_zero_class(v[1]));  // v_1 = w_1 != 0

    auto& cp2 = corpus("cp2");
    v = wu_classes(cp2.k, *cp2.H);
    CHECK(cp2.H->is_zero_class(v[1]));
    REQUIRE(cp2.H->betti(2) == 1);
    CHECK(cp2.H->same_class(v[2], cp2.H->basis(2)[0]));  // v_2 generates H^2
}

TEST_CASE("Stiefel-Whitney classes: Klein, RP2, torus") {
    auto& klein = corpus("klein");
    auto w = stiefel_whitney(klein.k);
    CHECK_FALSE(klein.H->is_zero_class(w[1]));
    CHECK(klein.H->is_zero_class(w[2]));  // w_1 != 0 but w_2 = 0

    auto& rp2 = corpus("rp2");
    w = stiefel_whitney(rp2.k);
    auto a = rp2.H->basis(1)[0];
    CHECK(rp2.H->same_class(w[1], a));
    CHECK(rp2.H->same_class(w[2], cup(a, a)));

    auto& t2 = corpus("t2");
    w = stiefel_whitney(t2.k);
    CHECK(t2.H->is_zero_class(w[1]));
    CHECK(t2.H->is_zero_class(w[2]));
}

TEST_CASE("w(RP^n) = (1+a)^(n+1): binomial-coefficient oracle") {
    for (int n : {2, 3, 4}) {
        auto& e = corpus("rp" + std::to_string(n));
        REQUIRE(e.H->betti(1) == 1);
        auto a = e.H->basis(1)[0];
        std::vector<CocycleF2> apow = {unit_cocycle(e.k), a};
        for (int j = 2; j <= n; ++j) apow.push_back(cup(apow.back(), a));
        for (int j = 1; j <= n; ++j) CHECK_FALSE(e.H->is_zero_class(apow[static_cast<size_t>(j)]));

        auto w = stiefel_whitney(e.k);
        for (int j = 1; j <= n; ++j) {
            bool odd = ((n + 1) & j) == j;  // C(n+1, j) mod 2 by Lucas
            if (odd)
                CHECK_MESSAGE(e.H->same_class(w[static_cast<size_t>(j)], apow[static_cast<size_t>(j)]),
                              "RP^", n, " w_", j);
            else
                CHECK_MESSAGE(e.H->is_zero_class(w[static_cast<size_t>(j)]), "RP^", n, " w_", j);
        }
    }
}

TEST_CASE("property: top SW number equals Euler characteristic mod 2") {
    for (const auto& slug : closed_corpus) {
        auto& e = corpus(slug);
        auto rep = characteristic_classes(e.k, *e.H);
        CHECK_MESSAGE(static_cast<long>(rep.top_sw) == (((e.k.euler_characteristic() % 2) + 2) % 2),
                      slug);
    }
}

TEST_CASE("property: Wu identity re-checked post hoc across the corpus") {
    for (const auto& slug : closed_corpus) {
        auto& e = corpus(slug);
        auto v = wu_classes(e.k, *e.H);
        int n = e.k.dim();
        for (int kdeg = 1; kdeg <= n / 2; ++kdeg)
            for (const auto& x : e.H->basis(n - kdeg))
                CHECK_MESSAGE(fundamental_eval(steenrod_sq(kdeg, x)) ==
                                  fundamental_eval(cup(x, v[static_cast<size_t>(kdeg)])),
                              slug, " k=", kdeg);
    }
}

TEST_CASE("property: even intersection form implies even middle rank") {
    for (const auto& slug : closed_corpus) {
        auto& e = corpus(slug);
        if (e.k.dim() % 2 != 0) continue;
        auto form = intersection_form_mid(e.k, *e.H);
        if (form.even) CHECK_MESSAGE(form.rank % 2 == 0, slug);
        // nondegeneracy from Poincare duality
        CHECK_MESSAGE(form.rank == form.dimension, slug);
    }
}

TEST_CASE("property: low SW vanishing forces Wu vanishing away from multiples of 2^k") {
    for (const auto& slug : closed_corpus) {
        auto& e = corpus(slug);
        auto rep = characteristic_classes(e.k, *e.H);
        int n = e.k.dim();
        int korient = 0;  // largest k with w_1 = ... = w_{2^k - 1} = 0
        while ((1 << (korient + 1)) - 1 <= n) {
            bool all_zero = true;
            for (int j = 1; j <= (1 << (korient + 1)) - 1 && j <= n; ++j)
                if (rep.sw_nonzero[static_cast<size_t>(j)]) all_zero = false;
            if (!all_zero) break;
            ++korient;
        }
        for (int l = 1; l <= n; ++l)
            if (l % (1 << korient) != 0)
                CHECK_MESSAGE(!rep.wu_nonzero[static_cast<size_t>(l)], slug, " v_", l);
    }
}

TEST_CASE("intersection forms: CP2 odd rank one, S2 empty, RP4 odd") {
    auto& cp2 = corpus("cp2");
    auto form = intersection_form_mid(cp2.k, *cp2.H);
    CHECK(form.dimension == 1);
    CHECK(form.rank == 1);
    CHECK_FALSE(form.even);

    auto& s2 = corpus("s2");
    form = intersection_form_mid(s2.k, *s2.H);
    CHECK(form.dimension == 0);
    CHECK(form.rank == 0);
    CHECK(form.even);

    auto& rp4 = corpus("rp4");
    form = intersection_form_mid(rp4.k, *rp4.H);
    CHECK(form.dimension == 1);
    CHECK(form.rank == 1);
    CHECK_FALSE(form.even);
}

TEST_CASE("error handling: mismatched complexes and non-manifold Wu input") {
    auto& rp2 = corpus("rp2");
    auto& t2 = corpus("t2");
    CHECK_THROWS(cup(rp2.H->basis(1)[0], t2.H->basis(1)[0]));
    CHECK_THROWS(intersection_form_mid(corpus("rp3").k, *corpus("rp3").H));

    // wedge of two tetrahedron boundaries at a vertex: closed pseudo-manifold
    // but not a manifold; Poincare duality fails (b_0 = 1, b_2 = 2)
    SimplicialComplex bad(7, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                              {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
    CohomologyBasisF2 H(bad);
    CHECK_THROWS(wu_classes(bad, H));
}
