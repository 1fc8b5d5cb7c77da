// Generates the triangulation corpus shipped under data/triangulations/.
// Every emitted complex is re-validated (pseudo-manifold structure, Euler
// characteristic, Betti numbers) before being written; the tool fails loudly
// rather than emit a file that does not carry the expected topology.

#include <skk/simplicial.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

using namespace skk;

namespace {

std::string out_dir = "data/triangulations";

void emit(const SimplicialComplex& k, const std::string& slug) {
    SimplicialComplex named = k;
    named.name = slug;
    std::filesystem::create_directories(out_dir);
    std::ofstream os(out_dir + "/" + slug + ".tri");
    save_triangulation(os, named);
    std::cout << "wrote " << slug << ": dim " << k.dim() << ", " << k.facets().size()
              << " facets, chi " << k.euler_characteristic() << "\n";
}

void require(bool cond, const std::string& what) {
    if (!cond) {
        std::cerr << "corpusgen: check failed: " << what << "\n";
        std::exit(1);
    }
}

void check_closed_manifold(const SimplicialComplex& k, const std::string& slug, bool orientable,
                           long chi, const std::vector<int>& betti_f2) {
    auto rep = k.validate();
    require(rep.pure && rep.pseudo_manifold && rep.closed && rep.connected, slug + " structure");
    require(rep.orientable == orientable, slug + " orientability");
    require(k.euler_characteristic() == chi, slug + " euler characteristic");
    require(k.homology(2).betti == betti_f2, slug + " F2 betti");
}

SimplicialComplex simplex_boundary(int n) {  // S^n
    std::vector<std::vector<int>> facets;
    for (int drop = 0; drop <= n + 1; ++drop) {
        std::vector<int> f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(n + 2, std::move(facets));
}

SimplicialComplex disc(int n) {  // D^n = one n-simplex
    std::vector<int> f(static_cast<size_t>(n) + 1);
    std::iota(f.begin(), f.end(), 0);
    return SimplicialComplex(n + 1, {f});
}

SimplicialComplex cycle(int n) {  // S^1 with n vertices
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex rp2() {
    return SimplicialComplex(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                 {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

SimplicialComplex torus7() {  // Csaszar torus: orbits of {0,1,3} and {0,2,3} mod 7
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex(7, std::move(facets));
}

SimplicialComplex moebius5() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 5; ++i) facets.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return SimplicialComplex(5, std::move(facets));
}

SimplicialComplex cylinder() {  // triangulated prism shell S^1 x I
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        facets.push_back({i, j, 3 + i});
        facets.push_back({j, 3 + i, 3 + j});
    }
    return SimplicialComplex(6, std::move(facets));
}

// Klein bottle from an m x n grid with an orientation-reversing vertical glue;
// smallest grid that stays simplicial wins
SimplicialComplex klein() {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {4, 3}, {5, 3}, {6, 3}}) {
        auto vid = [&](int x, int y) {
            x = ((x % m) + m) % m;
            if (y == n) {  // vertical wrap reverses the x direction
                x = (m - x) % m;
                y = 0;
            }
            return x * n + y;
        };
        std::vector<std::vector<int>> facets;
        bool bad = false;
        std::set<std::vector<int>> seen;
        for (int x = 0; x < m && !bad; ++x)
            for (int y = 0; y < n && !bad; ++y) {
                for (auto tri : {std::vector<int>{vid(x, y), vid(x + 1, y), vid(x + 1, y + 1)},
                                 std::vector<int>{vid(x, y), vid(x, y + 1), vid(x + 1, y + 1)}}) {
                    std::sort(tri.begin(), tri.end());
                    if (tri[0] == tri[1] || tri[1] == tri[2] || !seen.insert(tri).second) {
                        bad = true;
                        break;
                    }
                    facets.push_back(tri);
                }
            }
        if (bad) continue;
        try {
            SimplicialComplex k(m * n, facets);
            auto rep = k.validate();
            if (rep.pure && rep.pseudo_manifold && rep.closed && rep.connected && !rep.orientable &&
                k.euler_characteristic() == 0 && k.homology(2).betti == std::vector<int>{1, 2, 1})
                return k;
        } catch (const std::exception&) {
        }
    }
    std::cerr << "corpusgen: no Klein bottle grid worked\n";
    std::exit(1);
}

// L(p,1) as the free diagonal Z/p quotient of the once-subdivided join of two
// circles (the join is S^3; the diagonal rotation action is the standard lens
// action with q = 1).  Subdividing once makes the action regular, which is
// verified: orbits must inject into the quotient in every dimension.
SimplicialComplex lens_attempt(int p, int n1, int n2, bool& ok);

SimplicialComplex lens(int p) {
    // grow the circles until the once-subdivided action becomes regular
    for (int n2 : {2 * p, 3 * p}) {
        if (n2 < 3) continue;
        bool ok = false;
        SimplicialComplex q = lens_attempt(p, 3 * p, n2, ok);
        if (ok) return q;
        std::cout << "lens p=" << p << ": join with C_" << n2 << " not regular, growing\n";
    }
    std::cerr << "corpusgen: lens construction failed for p=" << p << "\n";
    std::exit(1);
}

SimplicialComplex lens_attempt(int p, int n1, int n2, bool& ok) {
    int s1 = n1 / p, s2 = n2 / p;

    SimplicialComplex sphere = join(cycle(n1), cycle(n2));
    // the generator of the Z/p action on the join's vertices
    std::vector<int> g(static_cast<size_t>(n1 + n2));
    for (int i = 0; i < n1; ++i) g[static_cast<size_t>(i)] = (i + s1) % n1;
    for (int i = 0; i < n2; ++i) g[static_cast<size_t>(n1 + i)] = n1 + (i + s2) % n2;

    SimplicialComplex sd = barycentric_subdivision(sphere);
    // induced action on sd vertices (faces of the join)
    int dim = sphere.dim();
    std::vector<int> offset(static_cast<size_t>(dim) + 1, 0);
    int total = 0;
    for (int d = 0; d <= dim; ++d) {
        offset[static_cast<size_t>(d)] = total;
        total += sphere.face_count(d);
    }
    std::vector<int> act(static_cast<size_t>(total));
    for (int d = 0; d <= dim; ++d)
        for (int i = 0; i < sphere.face_count(d); ++i) {
            std::vector<int> img;
            for (int v : sphere.faces(d)[static_cast<size_t>(i)]) img.push_back(g[static_cast<size_t>(v)]);
            std::sort(img.begin(), img.end());
            act[static_cast<size_t>(offset[static_cast<size_t>(d)] + i)] =
                offset[static_cast<size_t>(d)] + sphere.face_index(d, img);
        }

    // orbit labelling; verify freeness
    std::vector<int> orbit(static_cast<size_t>(total), -1);
    int norbits = 0;
    for (int v = 0; v < total; ++v) {
        if (orbit[static_cast<size_t>(v)] >= 0) continue;
        int w = v, steps = 0;
        do {
            orbit[static_cast<size_t>(w)] = norbits;
            w = act[static_cast<size_t>(w)];
            ++steps;
        } while (w != v);
        require(steps == p, "lens action freeness");
        ++norbits;
    }

    SimplicialComplex q;
    try {
        q = quotient(sd, orbit, norbits);
    } catch (const std::exception&) {
        ok = false;
        return q;
    }
    for (int d = 0; d <= sd.dim(); ++d)
        if (q.face_count(d) * p != sd.face_count(d)) {  // an orbit collided: not regular
            ok = false;
            return q;
        }
    ok = true;
    auto rep = q.validate();
    require(rep.pure && rep.pseudo_manifold && rep.closed && rep.connected && rep.orientable,
            "lens structure p=" + std::to_string(p));
    require(q.euler_characteristic() == 0, "lens chi");
    int pf = 2;  // smallest prime factor of p; F_pf sees the Z/p torsion
    while (p % pf != 0) ++pf;
    require(q.homology(pf).betti == std::vector<int>({1, 1, 1, 1}), "lens F_p betti");
    require(q.homology(0).betti == std::vector<int>({1, 0, 0, 1}), "lens Q betti");
    return q;
}

// RP^n as the antipodal quotient of the once-subdivided cross-polytope
// boundary (the cross-polytope itself is centrally symmetric but its quotient
// is not simplicial; one barycentric subdivision regularizes the involution)
SimplicialComplex rpn(int n) {
    // boundary of the (n+1)-cross-polytope: vertices 2i (=+e_i) and 2i+1 (=-e_i)
    std::vector<std::vector<int>> facets;
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i) f.push_back(2 * i + ((mask >> i) & 1));
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    SimplicialComplex sphere(2 * (n + 1), std::move(facets));
    std::vector<int> g(static_cast<size_t>(2 * (n + 1)));
    for (int i = 0; i <= n; ++i) {
        g[static_cast<size_t>(2 * i)] = 2 * i + 1;
        g[static_cast<size_t>(2 * i + 1)] = 2 * i;
    }

    SimplicialComplex sd = barycentric_subdivision(sphere);
    int dim = sphere.dim();
    std::vector<int> offset(static_cast<size_t>(dim) + 1, 0);
    int total = 0;
    for (int d = 0; d <= dim; ++d) {
        offset[static_cast<size_t>(d)] = total;
        total += sphere.face_count(d);
    }
    std::vector<int> act(static_cast<size_t>(total));
    for (int d = 0; d <= dim; ++d)
        for (int i = 0; i < sphere.face_count(d); ++i) {
            std::vector<int> img;
            for (int v : sphere.faces(d)[static_cast<size_t>(i)]) img.push_back(g[static_cast<size_t>(v)]);
            std::sort(img.begin(), img.end());
            act[static_cast<size_t>(offset[static_cast<size_t>(d)] + i)] =
                offset[static_cast<size_t>(d)] + sphere.face_index(d, img);
        }
    std::vector<int> orbit(static_cast<size_t>(total), -1);
    int norbits = 0;
    for (int v = 0; v < total; ++v) {
        if (orbit[static_cast<size_t>(v)] >= 0) continue;
        require(act[static_cast<size_t>(v)] != v, "rpn involution freeness");
        orbit[static_cast<size_t>(v)] = norbits;
        orbit[static_cast<size_t>(act[static_cast<size_t>(v)])] = norbits;
        ++norbits;
    }
    SimplicialComplex q = quotient(sd, orbit, norbits);
    for (int d = 0; d <= sd.dim(); ++d)
        require(q.face_count(d) * 2 == sd.face_count(d),
                "rpn quotient regularity (dim " + std::to_string(d) + ")");
    auto rep = q.validate();
    require(rep.pure && rep.pseudo_manifold && rep.closed && rep.connected, "rpn structure");
    require(rep.orientable == (n % 2 == 1), "rpn orientability");
    require(q.euler_characteristic() == (n % 2 == 0 ? 1 : 0), "rpn chi");
    require(q.homology(2).betti == std::vector<int>(static_cast<size_t>(n) + 1, 1), "rpn F2 betti");
    return q;
}

// 9-vertex CP^2 located as a union of orbits of 5-subsets of {0..8} under a
// Z/3 x Z/3 symmetry group, validated combinatorially and homologically
SimplicialComplex cp2() {
    auto alpha = [](int i) { return (i + 3) % 9; };
    auto beta = [](int i) { return 3 * (i / 3) + (i % 3 + 1) % 3; };
    auto sigma9 = [](int i) { return (i + 1) % 9; };

    for (int which = 0; which < 2; ++which) {
        // collect orbits of 5-subsets
        std::set<std::set<std::vector<int>>> orbit_set;
        std::vector<std::vector<int>> all;
        {
            for (int a = 0; a < 9; ++a)
                for (int b = a + 1; b < 9; ++b)
                    for (int c = b + 1; c < 9; ++c)
                        for (int d = c + 1; d < 9; ++d)
                            for (int e = d + 1; e < 9; ++e) all.push_back({a, b, c, d, e});
        }
        for (const auto& s : all) {
            std::set<std::vector<int>> orb;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    std::vector<int> t = s;
                    for (int& v : t) {
                        for (int k = 0; k < a; ++k) v = which == 0 ? alpha(v) : sigma9(v);
                        for (int k = 0; k < b; ++k) v = which == 0 ? beta(v) : sigma9(sigma9(sigma9(v)));
                    }
                    std::sort(t.begin(), t.end());
                    orb.insert(t);
                }
            orbit_set.insert(orb);
        }
        std::vector<std::vector<std::vector<int>>> orbits;
        for (const auto& o : orbit_set)
            if (o.size() == 9) orbits.emplace_back(o.begin(), o.end());

        const int no = static_cast<int>(orbits.size());
        for (int a = 0; a < no; ++a)
            for (int b = a + 1; b < no; ++b)
                for (int c = b + 1; c < no; ++c)
                    for (int d = c + 1; d < no; ++d) {
                        std::vector<std::vector<int>> facets;
                        for (int o : {a, b, c, d})
                            facets.insert(facets.end(), orbits[static_cast<size_t>(o)].begin(),
                                          orbits[static_cast<size_t>(o)].end());
                        try {
                            SimplicialComplex k(9, facets);
                            if (k.euler_characteristic() != 3) continue;
                            auto rep = k.validate();
                            if (!(rep.pure && rep.pseudo_manifold && rep.closed && rep.connected &&
                                  rep.orientable))
                                continue;
                            if (k.homology(2).betti != std::vector<int>{1, 0, 1, 0, 1}) continue;
                            if (k.homology(0).betti != std::vector<int>{1, 0, 1, 0, 1}) continue;
                            return k;
                        } catch (const std::exception&) {
                            continue;
                        }
                    }
    }
    std::cerr << "corpusgen: CP^2 orbit search failed\n";
    std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) out_dir = argv[1];

    for (int n = 1; n <= 6; ++n) {
        auto s = simplex_boundary(n);
        std::vector<int> betti(static_cast<size_t>(n) + 1, 0);
        betti.front() = 1;
        betti.back() += 1;
        check_closed_manifold(s, "s" + std::to_string(n), true, n % 2 == 0 ? 2 : 0, betti);
        emit(s, "s" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) emit(disc(n), "d" + std::to_string(n));

    auto r = rp2();
    check_closed_manifold(r, "rp2", false, 1, {1, 1, 1});
    emit(r, "rp2");

    auto t = torus7();
    check_closed_manifold(t, "t2", true, 0, {1, 2, 1});
    emit(t, "t2");

    auto k = klein();
    emit(k, "klein");

    auto mo = moebius5();
    {
        auto rep = mo.validate();
        require(rep.pure && rep.pseudo_manifold && !rep.closed && rep.connected && !rep.orientable,
                "moebius structure");
        ManifoldPair pair(mo);
        require(pair.boundary.homology(2).betti == std::vector<int>({1, 1}), "moebius boundary circle");
    }
    emit(mo, "moebius");

    auto cyl = cylinder();
    {
        auto rep = cyl.validate();
        require(rep.pure && rep.pseudo_manifold && !rep.closed && rep.connected && rep.orientable,
                "cylinder structure");
        ManifoldPair pair(cyl);
        require(pair.boundary.homology(2).betti == std::vector<int>({2, 2}), "cylinder boundary circles");
    }
    emit(cyl, "cylinder");

    auto rp3 = lens(2);
    require(rp3.homology(0).betti == std::vector<int>({1, 0, 0, 1}), "rp3 Q betti");
    emit(rp3, "rp3");
    emit(rp3, "l2_1");
    for (int p = 3; p <= 5; ++p) emit(lens(p), "l" + std::to_string(p) + "_1");

    auto c = cp2();
    emit(c, "cp2");

    emit(rpn(4), "rp4");

    std::cout << "corpus complete\n";
    return 0;
}
