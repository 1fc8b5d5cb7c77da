#pragma once

// Ordered simplicial complexes: face enumeration, validation, boundary
// matrices, absolute/relative homology over Q and F_p, Euler characteristic,
// Kervaire semi-characteristics, pairs, and products.  Also the combinatorial
// constructions (join, barycentric subdivision, quotient) used to generate
// the shipped corpus.

#include <skk/linalg.hpp>

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skk {

struct BettiVector {
    int field_char = 2;
    std::vector<int> betti;

    bool operator==(const BettiVector& o) const {
        return field_char == o.field_char && betti == o.betti;
    }
};

struct ValidationReport {
    bool pure = false;
    bool pseudo_manifold = false;
    bool closed = false;
    bool connected = false;
    bool orientable = false;
};

class SimplicialComplex {
public:
    std::string name;

    SimplicialComplex() = default;

    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facet_list)
        : nv_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("complex: negative vertex count");
        for (auto& f : facet_list) {
            std::sort(f.begin(), f.end());
            for (size_t i = 0; i < f.size(); ++i) {
                if (f[i] < 0 || f[i] >= nv_) throw std::invalid_argument("complex: vertex out of range");
                if (i > 0 && f[i] == f[i - 1])
                    throw std::invalid_argument("complex: repeated vertex inside a facet");
            }
            if (f.empty()) throw std::invalid_argument("complex: empty facet");
        }
        std::sort(facet_list.begin(), facet_list.end());
        for (size_t i = 1; i < facet_list.size(); ++i)
            if (facet_list[i] == facet_list[i - 1])
                throw std::invalid_argument("complex: duplicate facet");
        facets_ = std::move(facet_list);
        build_faces();
    }

    int vertex_count() const { return nv_; }
    int dim() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }
    bool empty() const { return facets_.empty(); }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    const std::vector<std::vector<int>>& faces(int d) const {
        static const std::vector<std::vector<int>> none;
        if (d < 0 || d > dim()) return none;
        return faces_[static_cast<size_t>(d)];
    }
    int face_count(int d) const { return static_cast<int>(faces(d).size()); }

    int face_index(int d, const std::vector<int>& f) const {
        const auto& fs = faces(d);
        auto it = std::lower_bound(fs.begin(), fs.end(), f);
        if (it == fs.end() || *it != f) return -1;
        return static_cast<int>(it - fs.begin());
    }

    bool has_face(const std::vector<int>& f) const {
        return face_index(static_cast<int>(f.size()) - 1, f) >= 0;
    }

    long euler_characteristic() const {
        long chi = 0;
        for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(face_count(d));
        return chi;
    }

    // sparse signed boundary matrix C_d -> C_{d-1}; entry sign is the parity
    // of the dropped position in the ascending vertex tuple
    struct SparseBoundary {
        int rows = 0, cols = 0;
        std::vector<std::array<int, 3>> entries;  // row, col, sign
    };

    SparseBoundary boundary_matrix(int d) const {
        SparseBoundary b;
        b.rows = d >= 1 ? face_count(d - 1) : 0;
        b.cols = face_count(d);
        if (d < 1) return b;
        const auto& fs = faces(d);
        for (size_t c = 0; c < fs.size(); ++c) {
            std::vector<int> sub(fs[c].size() - 1);
            for (size_t drop = 0; drop < fs[c].size(); ++drop) {
                size_t k = 0;
                for (size_t i = 0; i < fs[c].size(); ++i)
                    if (i != drop) sub[k++] = fs[c][i];
                int r = face_index(d - 1, sub);
                b.entries.push_back({r, static_cast<int>(c), drop % 2 == 0 ? 1 : -1});
            }
        }
        return b;
    }

    ValidationReport validate() const {
        ValidationReport rep;
        if (facets_.empty()) return rep;
        const size_t fsz = facets_[0].size();
        rep.pure = std::all_of(facets_.begin(), facets_.end(),
                               [&](const auto& f) { return f.size() == fsz; });
        if (!rep.pure) return rep;

        // ridge incidence
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridge;  // -> (facet, dropped pos)
        for (size_t c = 0; c < facets_.size(); ++c) {
            const auto& f = facets_[c];
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> r;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) r.push_back(f[i]);
                ridge[r].push_back({static_cast<int>(c), static_cast<int>(drop)});
            }
        }
        rep.pseudo_manifold = true;
        rep.closed = true;
        for (const auto& [r, inc] : ridge) {
            if (inc.size() > 2) rep.pseudo_manifold = false;
            if (inc.size() != 2) rep.closed = false;
        }

        // connectivity across ridges
        std::vector<int> comp(facets_.size(), -1);
        std::vector<std::vector<int>> adj(facets_.size());
        for (const auto& [r, inc] : ridge)
            if (inc.size() == 2) {
                adj[static_cast<size_t>(inc[0].first)].push_back(inc[1].first);
                adj[static_cast<size_t>(inc[1].first)].push_back(inc[0].first);
            }
        std::vector<int> stack = {0};
        comp[0] = 0;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int g : adj[static_cast<size_t>(f)])
                if (comp[static_cast<size_t>(g)] < 0) {
                    comp[static_cast<size_t>(g)] = 0;
                    stack.push_back(g);
                }
        }
        rep.connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });

        // orientability: propagate facet signs across interior ridges
        if (rep.pseudo_manifold) {
            std::vector<int> sign(facets_.size(), 0);
            rep.orientable = true;
            for (size_t seed = 0; seed < facets_.size() && rep.orientable; ++seed) {
                if (sign[seed] != 0) continue;
                sign[seed] = 1;
                std::vector<int> st = {static_cast<int>(seed)};
                while (!st.empty() && rep.orientable) {
                    int f = st.back();
                    st.pop_back();
                    const auto& ff = facets_[static_cast<size_t>(f)];
                    for (size_t drop = 0; drop < ff.size(); ++drop) {
                        std::vector<int> r;
                        for (size_t i = 0; i < ff.size(); ++i)
                            if (i != drop) r.push_back(ff[i]);
                        const auto& inc = ridge[r];
                        if (inc.size() != 2) continue;
                        auto other = inc[0].first == f && inc[0].second == static_cast<int>(drop) ? inc[1] : inc[0];
                        // compatible orientations induce the ridge with opposite signs
                        int want = (static_cast<int>(drop) + other.second) % 2 == 0 ? -sign[static_cast<size_t>(f)]
                                                                                    : sign[static_cast<size_t>(f)];
                        if (sign[static_cast<size_t>(other.first)] == 0) {
                            sign[static_cast<size_t>(other.first)] = want;
                            st.push_back(other.first);
                        } else if (sign[static_cast<size_t>(other.first)] != want) {
                            rep.orientable = false;
                        }
                    }
                }
            }
        }
        return rep;
    }

    BettiVector homology(int field_char) const {
        auto it = homology_cache_.find(field_char);
        if (it != homology_cache_.end()) return it->second;
        check_field(field_char);
        BettiVector bv;
        bv.field_char = field_char;
        int n = dim();
        std::vector<int> rk(static_cast<size_t>(n) + 2, 0);
        for (int d = 1; d <= n; ++d) rk[static_cast<size_t>(d)] = boundary_rank(d, field_char);
        for (int d = 0; d <= n; ++d)
            bv.betti.push_back(face_count(d) - rk[static_cast<size_t>(d)] - rk[static_cast<size_t>(d) + 1]);
        homology_cache_.emplace(field_char, bv);
        return bv;
    }

    static void check_field(int field_char) {
        if (field_char == 0) return;
        if (field_char < 2) throw std::invalid_argument("field characteristic must be 0 or prime");
        for (int q = 2; q * q <= field_char; ++q)
            if (field_char % q == 0) throw std::invalid_argument("field characteristic must be 0 or prime");
    }

    int boundary_rank(int d, int field_char) const {
        SparseBoundary b = boundary_matrix(d);
        return sparse_rank(b, field_char);
    }

    static int sparse_rank(const SparseBoundary& b, int field_char) {
        if (b.rows == 0 || b.cols == 0) return 0;
        if (field_char == 2) {
            F2Matrix m(b.rows, b.cols);
            for (const auto& [r, c, s] : b.entries) m.flip(r, c);
            return f2_rank(m);
        }
        if (field_char > 2) {
            FpMatrix m(field_char, b.rows, b.cols);
            for (const auto& [r, c, s] : b.entries) m.at(r, c) += s;
            return fp_rank(m);
        }
        // rational rank: exact elimination when small, agreeing large-prime
        // modular ranks otherwise (torsion primes of corpus complexes are tiny)
        if (static_cast<long>(b.rows) * b.cols <= 40000) {
            QMatrix m(b.rows, b.cols);
            for (const auto& [r, c, s] : b.entries) m.at(r, c) += s;
            return q_rank(m);
        }
        int best = 0;
        for (long p : {1000003L, 999983L, 16411L}) {
            FpMatrix m(p, b.rows, b.cols);
            for (const auto& [r, c, s] : b.entries) m.at(r, c) += s;
            best = std::max(best, fp_rank(m));
        }
        return best;
    }

private:
    int nv_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<std::vector<int>>> faces_;
    mutable std::map<int, BettiVector> homology_cache_;

    void build_faces() {
        int n = dim();
        std::vector<std::set<std::vector<int>>> acc(static_cast<size_t>(n) + 1);
        for (const auto& f : facets_) {
            const size_t m = f.size();
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::vector<int> sub;
                for (size_t i = 0; i < m; ++i)
                    if (mask & (1u << i)) sub.push_back(f[i]);
                acc[sub.size() - 1].insert(std::move(sub));
            }
        }
        faces_.clear();
        for (auto& s : acc) faces_.emplace_back(s.begin(), s.end());
    }
};

// ---------------------------------------------------------------------------
// Pairs (W, dW) with the boundary subcomplex always derived from the ridges
// lying in exactly one facet.
// ---------------------------------------------------------------------------

struct ManifoldPair {
    SimplicialComplex total;
    SimplicialComplex boundary;

    explicit ManifoldPair(SimplicialComplex w) : total(std::move(w)) {
        std::map<std::vector<int>, int> ridge_count;
        for (const auto& f : total.facets())
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> r;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) r.push_back(f[i]);
                ++ridge_count[r];
            }
        std::vector<std::vector<int>> bfacets;
        for (const auto& [r, c] : ridge_count)
            if (c == 1) bfacets.push_back(r);
        if (!bfacets.empty()) {
            boundary = SimplicialComplex(total.vertex_count(), std::move(bfacets));
            auto rep = boundary.validate();
            if (!rep.closed) throw std::invalid_argument("pair: derived boundary is not closed");
        }
        boundary.name = total.name.empty() ? "" : total.name + "-boundary";
    }

    // faces of `total` of dimension d that lie in the boundary subcomplex
    std::vector<char> boundary_mask(int d) const {
        const auto& fs = total.faces(d);
        std::vector<char> mask(fs.size(), 0);
        for (size_t i = 0; i < fs.size(); ++i)
            if (boundary.has_face(fs[i])) mask[i] = 1;
        return mask;
    }

    // relative boundary matrix on the non-boundary faces (quotient complex)
    SimplicialComplex::SparseBoundary relative_boundary_matrix(int d) const {
        auto mask_d = boundary_mask(d);
        auto mask_dm1 = boundary_mask(d - 1);
        std::vector<int> col_id(mask_d.size(), -1), row_id(mask_dm1.size(), -1);
        int nc = 0, nr = 0;
        for (size_t i = 0; i < mask_d.size(); ++i)
            if (!mask_d[i]) col_id[i] = nc++;
        for (size_t i = 0; i < mask_dm1.size(); ++i)
            if (!mask_dm1[i]) row_id[i] = nr++;
        SimplicialComplex::SparseBoundary rel;
        rel.rows = nr;
        rel.cols = nc;
        if (d < 1) {
            rel.rows = 0;
            return rel;
        }
        auto b = total.boundary_matrix(d);
        for (const auto& [r, c, s] : b.entries)
            if (col_id[static_cast<size_t>(c)] >= 0 && row_id[static_cast<size_t>(r)] >= 0)
                rel.entries.push_back({row_id[static_cast<size_t>(r)], col_id[static_cast<size_t>(c)], s});
        return rel;
    }

    int relative_face_count(int d) const {
        auto m = boundary_mask(d);
        return static_cast<int>(std::count(m.begin(), m.end(), 0));
    }
};

inline BettiVector relative_homology(const ManifoldPair& p, int field_char) {
    SimplicialComplex::check_field(field_char);
    BettiVector bv;
    bv.field_char = field_char;
    int n = p.total.dim();
    std::vector<int> rk(static_cast<size_t>(n) + 2, 0);
    for (int d = 1; d <= n; ++d)
        rk[static_cast<size_t>(d)] = SimplicialComplex::sparse_rank(p.relative_boundary_matrix(d), field_char);
    for (int d = 0; d <= n; ++d)
        bv.betti.push_back(p.relative_face_count(d) - rk[static_cast<size_t>(d)] - rk[static_cast<size_t>(d) + 1]);
    return bv;
}

// ---------------------------------------------------------------------------
// Invariants.
// ---------------------------------------------------------------------------

inline int kervaire_semichar(const SimplicialComplex& k, int field_char) {
    int n = k.dim();
    if (n % 2 == 0) throw std::invalid_argument("kervaire_semichar: dimension must be odd");
    if (field_char != 2) {
        auto rep = k.validate();
        if (!rep.orientable)
            throw std::invalid_argument("kervaire_semichar: F-orientability requires an orientable complex away from characteristic 2");
    }
    auto bv = k.homology(field_char);
    int acc = 0;
    for (int i = 0; i <= (n - 1) / 2; ++i) acc += bv.betti[static_cast<size_t>(i)];
    return acc % 2;
}

// rank of j_*: H_k(W;F) -> H_k(W,dW;F) in middle degree k = dim/2
inline int jstar_rank(const ManifoldPair& p, int field_char) {
    int n = p.total.dim();
    if (n % 2 != 0) throw std::invalid_argument("jstar_rank: total space must be even-dimensional");
    SimplicialComplex::check_field(field_char);
    int k = n / 2;

    auto bd_k = p.total.boundary_matrix(k);          // C_k -> C_{k-1}
    auto rel_kp1 = p.relative_boundary_matrix(k + 1);  // relative C_{k+1} -> C_k
    auto mask = p.boundary_mask(k);
    std::vector<int> proj(mask.size(), -1);
    int nrel = 0;
    for (size_t i = 0; i < mask.size(); ++i)
        if (!mask[i]) proj[i] = nrel++;

    // rank(j_*) = dim span(q(Z_k) u B_rel) - dim span(B_rel)
    if (field_char == 2) {
        F2Matrix bd(bd_k.rows, bd_k.cols);
        for (const auto& [r, c, s] : bd_k.entries) bd.flip(r, c);
        auto cycles = f2_kernel_basis(bd);
        F2Matrix brel(rel_kp1.cols, nrel);  // rows = generators of B_rel
        for (const auto& [r, c, s] : rel_kp1.entries) brel.flip(c, r);
        int rank_b = f2_rank(brel);
        F2Matrix all(static_cast<int>(cycles.size()) + brel.rows, nrel);
        for (size_t i = 0; i < cycles.size(); ++i)
            for (int j = 0; j < bd_k.cols; ++j)
                if (cycles[i].get(j) && proj[static_cast<size_t>(j)] >= 0)
                    all.set(static_cast<int>(i), proj[static_cast<size_t>(j)], true);
        for (int i = 0; i < brel.rows; ++i) all.r[cycles.size() + static_cast<size_t>(i)] = brel.r[static_cast<size_t>(i)];
        return f2_rank(all) - rank_b;
    }
    if (field_char > 2) {
        FpMatrix bd(field_char, bd_k.rows, bd_k.cols);
        for (const auto& [r, c, s] : bd_k.entries) bd.at(r, c) += s;
        auto cycles = fp_kernel_basis(bd);
        FpMatrix brel(field_char, rel_kp1.cols, nrel);
        for (const auto& [r, c, s] : rel_kp1.entries) brel.at(c, r) += s;
        int rank_b = fp_rank(brel);
        FpMatrix all(field_char, static_cast<int>(cycles.size()) + brel.rows, nrel);
        for (size_t i = 0; i < cycles.size(); ++i)
            for (int j = 0; j < bd_k.cols; ++j)
                if (proj[static_cast<size_t>(j)] >= 0)
                    all.at(static_cast<int>(i), proj[static_cast<size_t>(j)]) = cycles[i][static_cast<size_t>(j)];
        for (int i = 0; i < brel.rows; ++i)
            for (int j = 0; j < nrel; ++j) all.at(static_cast<int>(cycles.size()) + i, j) = brel.at(i, j);
        return fp_rank(all) - rank_b;
    }
    QMatrix bd(bd_k.rows, bd_k.cols);
    for (const auto& [r, c, s] : bd_k.entries) bd.at(r, c) += s;
    auto cycles = q_kernel_basis(bd);
    QMatrix brel(rel_kp1.cols, nrel);
    for (const auto& [r, c, s] : rel_kp1.entries) brel.at(c, r) += s;
    int rank_b = q_rank(brel);
    QMatrix all(static_cast<int>(cycles.size()) + brel.rows, nrel);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int j = 0; j < bd_k.cols; ++j)
            if (proj[static_cast<size_t>(j)] >= 0)
                all.at(static_cast<int>(i), proj[static_cast<size_t>(j)]) = cycles[i][static_cast<size_t>(j)];
    for (int i = 0; i < brel.rows; ++i)
        for (int j = 0; j < nrel; ++j) all.at(static_cast<int>(cycles.size()) + i, j) = brel.at(i, j);
    return q_rank(all) - rank_b;
}

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

// staircase triangulation of |k1| x |k2|; product vertex (u, v) gets index
// u * k2.vertex_count() + v, a linear extension of the componentwise order
inline SimplicialComplex product(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int n2 = k2.vertex_count();
    std::set<std::vector<int>> facets;
    for (const auto& f1 : k1.facets())
        for (const auto& f2 : k2.facets()) {
            const int p = static_cast<int>(f1.size()) - 1;
            const int q = static_cast<int>(f2.size()) - 1;
            // monotone lattice paths from (0,0) to (p,q)
            std::vector<int> moves(static_cast<size_t>(p), 0);
            moves.resize(static_cast<size_t>(p + q), 1);
            std::sort(moves.begin(), moves.end());
            do {
                std::vector<int> verts;
                int i = 0, j = 0;
                verts.push_back(f1[0] * n2 + f2[0]);
                for (int m : moves) {
                    if (m == 0) ++i;
                    else ++j;
                    verts.push_back(f1[static_cast<size_t>(i)] * n2 + f2[static_cast<size_t>(j)]);
                }
                std::sort(verts.begin(), verts.end());
                facets.insert(std::move(verts));
            } while (std::next_permutation(moves.begin(), moves.end()));
        }
    SimplicialComplex out(k1.vertex_count() * n2,
                          std::vector<std::vector<int>>(facets.begin(), facets.end()));
    return out;
}

inline SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<std::vector<int>> facets = k1.facets();
    for (auto f : k2.facets()) {
        for (int& v : f) v += k1.vertex_count();
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(k1.vertex_count() + k2.vertex_count(), std::move(facets));
}

inline SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<std::vector<int>> facets;
    for (const auto& f1 : k1.facets())
        for (auto f2 : k2.facets()) {
            std::vector<int> f = f1;
            for (int v : f2) f.push_back(v + k1.vertex_count());
            facets.push_back(std::move(f));
        }
    return SimplicialComplex(k1.vertex_count() + k2.vertex_count(), std::move(facets));
}

// barycentric subdivision: one vertex per face, facets = maximal flags
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    int n = k.dim();
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    int total = 0;
    for (int d = 0; d <= n; ++d) {
        offset[static_cast<size_t>(d)] = total;
        total += k.face_count(d);
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : k.facets()) {
        std::vector<int> perm = f;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> chain;
            std::vector<int> partial;
            for (int v : perm) {
                partial.push_back(v);
                std::vector<int> sorted = partial;
                std::sort(sorted.begin(), sorted.end());
                int d = static_cast<int>(sorted.size()) - 1;
                chain.push_back(offset[static_cast<size_t>(d)] + k.face_index(d, sorted));
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return SimplicialComplex(total, std::move(facets));
}

// quotient by a vertex identification; throws if a facet degenerates
inline SimplicialComplex quotient(const SimplicialComplex& k, const std::vector<int>& vertex_map,
                                  int new_vertex_count) {
    if (static_cast<int>(vertex_map.size()) != k.vertex_count())
        throw std::invalid_argument("quotient: vertex map arity mismatch");
    std::set<std::vector<int>> facets;
    for (const auto& f : k.facets()) {
        std::vector<int> g;
        for (int v : f) g.push_back(vertex_map[static_cast<size_t>(v)]);
        std::sort(g.begin(), g.end());
        for (size_t i = 1; i < g.size(); ++i)
            if (g[i] == g[i - 1]) throw std::invalid_argument("quotient: facet degenerates");
        facets.insert(std::move(g));
    }
    return SimplicialComplex(new_vertex_count,
                             std::vector<std::vector<int>>(facets.begin(), facets.end()));
}

// ---------------------------------------------------------------------------
// Versioned text format.
// ---------------------------------------------------------------------------

inline void save_triangulation(std::ostream& os, const SimplicialComplex& k) {
    os << "triangulation 1\n";
    if (!k.name.empty()) os << "name " << k.name << "\n";
    os << "dimension " << k.dim() << "\n";
    os << "vertex_count " << k.vertex_count() << "\n";
    os << "facets " << k.facets().size() << "\n";
    for (const auto& f : k.facets()) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
}

inline SimplicialComplex load_triangulation(std::istream& is) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            size_t h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            while (!line.empty() && isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };
    if (!next_line() || line.rfind("triangulation ", 0) != 0)
        throw std::invalid_argument("triangulation: missing format tag");
    if (line != "triangulation 1") throw std::invalid_argument("triangulation: unsupported version");

    std::string name;
    int dimension = -2, vertex_count = -1;
    long nfacets = -1;
    std::vector<std::vector<int>> facets;
    while (next_line()) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "name") {
            ls >> name;
        } else if (key == "dimension") {
            ls >> dimension;
        } else if (key == "vertex_count") {
            ls >> vertex_count;
        } else if (key == "facets") {
            ls >> nfacets;
            break;
        } else {
            throw std::invalid_argument("triangulation: unexpected key '" + key + "'");
        }
    }
    if (vertex_count < 0 || nfacets < 0) throw std::invalid_argument("triangulation: missing header fields");
    while (static_cast<long>(facets.size()) < nfacets && next_line()) {
        std::istringstream ls(line);
        std::vector<int> f;
        int v;
        while (ls >> v) f.push_back(v);
        facets.push_back(std::move(f));
    }
    if (static_cast<long>(facets.size()) != nfacets)
        throw std::invalid_argument("triangulation: facet count mismatch");
    SimplicialComplex k(vertex_count, std::move(facets));
    k.name = name;
    if (dimension != k.dim()) throw std::invalid_argument("triangulation: declared dimension mismatch");
    return k;
}

}  // namespace skk
