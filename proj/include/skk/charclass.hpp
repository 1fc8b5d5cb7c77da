#pragma once

// Mod-2 cohomology operations on ordered simplicial complexes: cup and cup-i
// products, Steenrod squares, Wu classes, Stiefel-Whitney classes and the
// middle-dimensional intersection form.
//
// Convention (the one place it is pinned down): a d-cochain is a bit vector
// over the complex's sorted list of d-faces, and every face is read in its
// ascending vertex order.  For u of degree p and v of degree q,
//
//   (u cup_i v)(sigma[0..n]),  n = p + q - i,
//
// is the sum over strictly increasing cut sequences 0 <= a_0 < ... < a_i <= n
// of u(even intervals) * v(odd intervals), where the cut points split [0..n]
// into i+2 closed intervals [0,a_0], [a_0,a_1], ..., [a_i,n] sharing their
// endpoints; u is evaluated on the union of intervals 0, 2, 4, ... and v on
// the union of intervals 1, 3, 5, ...; a term contributes only when the two
// unions have exactly p+1 and q+1 vertices.  cup_0 is then exactly the
// Alexander-Whitney front-face/back-face product, and Sq^i u = u cup_{p-i} u.
// The identity suite in the tests (Sq^0 = id, top square = cup square,
// cocycles map to cocycles, Wu/Stiefel-Whitney oracles) is the regression
// net for this convention.

#include <skk/linalg.hpp>
#include <skk/simplicial.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skk {

struct CocycleF2 {
    const SimplicialComplex* complex = nullptr;
    int degree = 0;
    F2Vector support;   // over complex->faces(degree)
    bool is_cocycle = false;

    bool zero() const { return support.zero(); }
};

// delta c as a support vector over (degree+1)-faces
inline F2Vector coboundary_support(const SimplicialComplex& k, int degree, const F2Vector& support) {
    F2Vector out(k.face_count(degree + 1));
    if (degree + 1 > k.dim()) return out;
    auto b = k.boundary_matrix(degree + 1);
    for (const auto& [r, c, s] : b.entries)
        if (support.get(r)) out.flip(c);
    return out;
}

inline CocycleF2 make_cochain(const SimplicialComplex& k, int degree, F2Vector support) {
    if (degree < 0) throw std::invalid_argument("cochain: negative degree");
    if (support.n != k.face_count(degree)) throw std::invalid_argument("cochain: support arity mismatch");
    CocycleF2 c{&k, degree, std::move(support), false};
    c.is_cocycle = degree >= k.dim() || coboundary_support(k, degree, c.support).zero();
    return c;
}

inline CocycleF2 zero_cochain(const SimplicialComplex& k, int degree) {
    return CocycleF2{&k, degree, F2Vector(k.face_count(degree)), true};
}

// the unit of the cup ring: the 0-cochain evaluating to 1 on every vertex
inline CocycleF2 unit_cocycle(const SimplicialComplex& k) {
    F2Vector s(k.face_count(0));
    for (int i = 0; i < s.n; ++i) s.set(i, true);
    return make_cochain(k, 0, std::move(s));
}

inline void check_same_complex(const CocycleF2& a, const CocycleF2& b) {
    if (a.complex != b.complex) throw std::invalid_argument("cochain operation: complex mismatch");
}

inline CocycleF2 add(const CocycleF2& a, const CocycleF2& b) {
    check_same_complex(a, b);
    if (a.degree != b.degree) throw std::invalid_argument("cochain sum: degree mismatch");
    CocycleF2 c = a;
    c.support ^= b.support;
    c.is_cocycle = a.is_cocycle && b.is_cocycle
                       ? true
                       : make_cochain(*a.complex, a.degree, c.support).is_cocycle;
    return c;
}

namespace detail {

// cut sequences for cup_i at a fixed simplex dimension n, pre-filtered by the
// degree constraint |even part| = p+1; each entry lists the cut points
inline std::vector<std::vector<int>> cup_cut_sequences(int n, int p, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cuts(static_cast<size_t>(i) + 1);
    // iterate over strictly increasing (a_0, ..., a_i) in [0, n]
    for (int j = 0; j <= i; ++j) cuts[static_cast<size_t>(j)] = j;
    if (i + 1 > n + 1) return out;
    while (true) {
        int even_size = 0;
        int prev = 0;
        for (int j = 0; j <= i + 1; ++j) {
            int hi = j <= i ? cuts[static_cast<size_t>(j)] : n;
            int len = hi - prev + 1;
            if (j % 2 == 0) even_size += len;
            prev = hi;
        }
        if (even_size == p + 1) out.push_back(cuts);
        // next strictly increasing sequence
        int j = i;
        while (j >= 0 && cuts[static_cast<size_t>(j)] == n - (i - j)) --j;
        if (j < 0) break;
        ++cuts[static_cast<size_t>(j)];
        for (int t = j + 1; t <= i; ++t) cuts[static_cast<size_t>(t)] = cuts[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

}  // namespace detail

// Steenrod cup-i product; cup_0 is the Alexander-Whitney cup product
inline CocycleF2 cup_i(const CocycleF2& u, const CocycleF2& v, int i) {
    check_same_complex(u, v);
    const SimplicialComplex& k = *u.complex;
    const int p = u.degree, q = v.degree;
    if (i < 0) return zero_cochain(k, std::max(p + q - i, 0));
    const int n = p + q - i;
    if (n < 0 || n > k.dim() || i > std::min(p, q)) return zero_cochain(k, std::max(n, 0));

    auto cuts = detail::cup_cut_sequences(n, p, i);
    F2Vector out(k.face_count(n));
    const auto& faces = k.faces(n);
    std::vector<int> upart, vpart;
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& verts = faces[f];
        bool acc = false;
        for (const auto& cut : cuts) {
            upart.clear();
            vpart.clear();
            int prev = 0;
            for (int j = 0; j <= i + 1; ++j) {
                int hi = j <= i ? cut[static_cast<size_t>(j)] : n;
                auto& part = j % 2 == 0 ? upart : vpart;
                for (int t = prev; t <= hi; ++t) part.push_back(verts[static_cast<size_t>(t)]);
                prev = hi;
            }
            // strict cuts keep both unions ascending without repeats; the
            // pre-filter on sizes already guarantees |upart| = p+1, |vpart| = q+1
            int ui = k.face_index(p, upart);
            if (ui < 0 || !u.support.get(ui)) continue;
            int vi = k.face_index(q, vpart);
            if (vi >= 0 && v.support.get(vi)) acc = !acc;
        }
        if (acc) out.flip(static_cast<int>(f));
    }
    return make_cochain(k, n, std::move(out));
}

inline CocycleF2 cup(const CocycleF2& a, const CocycleF2& b) { return cup_i(a, b, 0); }

// Sq^i a = a cup_{deg a - i} a; zero above the degree
inline CocycleF2 steenrod_sq(int i, const CocycleF2& a) {
    if (i < 0) throw std::invalid_argument("steenrod_sq: negative i");
    if (i > a.degree) return zero_cochain(*a.complex, a.degree + i);
    return cup_i(a, a, a.degree - i);
}

// evaluation against the F2 fundamental class of a closed complex: the sum of
// all top faces is the mod-2 fundamental cycle
inline bool fundamental_eval(const CocycleF2& c) {
    if (c.degree != c.complex->dim())
        throw std::invalid_argument("fundamental_eval: cochain is not top-degree");
    return c.support.parity();
}

// ---------------------------------------------------------------------------
// F2 cohomology bases with class-coordinate extraction.
// ---------------------------------------------------------------------------

class CohomologyBasisF2 {
public:
    explicit CohomologyBasisF2(const SimplicialComplex& k) : k_(&k) {
        const int n = k.dim();
        deg_.resize(static_cast<size_t>(n) + 1);
        for (int d = 0; d <= n; ++d) build_degree(d);
    }

    const SimplicialComplex& complex() const { return *k_; }

    int betti(int d) const {
        if (d < 0 || d >= static_cast<int>(deg_.size())) return 0;
        return static_cast<int>(deg_[static_cast<size_t>(d)].reps.size());
    }

    const std::vector<CocycleF2>& basis(int d) const {
        static const std::vector<CocycleF2> none;
        if (d < 0 || d >= static_cast<int>(deg_.size())) return none;
        return deg_[static_cast<size_t>(d)].reps;
    }

    // coordinates of [c] in the degree-d basis; requires c to be a cocycle
    F2Vector class_coords(const CocycleF2& c) const {
        if (c.complex != k_) throw std::invalid_argument("class_coords: complex mismatch");
        if (!c.is_cocycle) throw std::invalid_argument("class_coords: not a cocycle");
        const auto& dd = deg_[static_cast<size_t>(c.degree)];
        F2Vector rem = c.support;
        F2Vector coords(static_cast<int>(dd.reps.size()));
        for (size_t r = 0; r < dd.rows.size(); ++r) {
            if (!rem.get(dd.pivots[r])) continue;
            rem ^= dd.rows[r].first;
            coords ^= dd.rows[r].second;
        }
        if (!rem.zero()) throw std::logic_error("class_coords: cocycle outside the computed span");
        return coords;
    }

    bool is_zero_class(const CocycleF2& c) const { return class_coords(c).zero(); }

    bool same_class(const CocycleF2& a, const CocycleF2& b) const {
        return class_coords(a) == class_coords(b);
    }

private:
    struct DegreeData {
        std::vector<std::pair<F2Vector, F2Vector>> rows;  // (reduced cocycle-space vector, H-coords)
        std::vector<int> pivots;
        std::vector<CocycleF2> reps;
    };

    const SimplicialComplex* k_;
    std::vector<DegreeData> deg_;

    // insert v into the echelon; returns (residual nonzero, accumulated coords)
    std::pair<bool, F2Vector> reduce(DegreeData& dd, F2Vector& v, int nreps) const {
        F2Vector acc(nreps);
        for (size_t r = 0; r < dd.rows.size(); ++r) {
            if (!v.get(dd.pivots[r])) continue;
            v ^= dd.rows[r].first;
            F2Vector h = dd.rows[r].second;
            h.w.resize(acc.w.size());
            h.n = acc.n;
            acc ^= h;
        }
        return {!v.zero(), acc};
    }

    void build_degree(int d) {
        const SimplicialComplex& k = *k_;
        DegreeData& dd = deg_[static_cast<size_t>(d)];
        const int nd = k.face_count(d);

        auto insert_row = [&](F2Vector v, F2Vector coords) {
            int piv = -1;
            for (int i = 0; i < v.n; ++i)
                if (v.get(i)) {
                    piv = i;
                    break;
                }
            dd.rows.emplace_back(std::move(v), std::move(coords));
            dd.pivots.push_back(piv);
        };

        // coboundary image first, carrying zero class-coordinates
        if (d >= 1) {
            auto delta = k.boundary_matrix(d);  // transpose = delta on (d-1)-cochains
            std::vector<F2Vector> cols(static_cast<size_t>(delta.rows), F2Vector(nd));
            for (const auto& [r, c, s] : delta.entries) cols[static_cast<size_t>(r)].flip(c);
            for (auto& v : cols) {
                auto [nonzero, acc] = reduce(dd, v, 0);
                if (nonzero) insert_row(std::move(v), F2Vector(0));
            }
        }

        // extend by a cocycle basis; each new pivot is a cohomology generator
        std::vector<F2Vector> cocycles;
        if (d < k.dim()) {
            auto bd = k.boundary_matrix(d + 1);
            F2Matrix delta(bd.cols, bd.rows);  // delta_d as a matrix on d-cochains
            for (const auto& [r, c, s] : bd.entries) delta.flip(c, r);
            cocycles = f2_kernel_basis(delta);
        } else {
            cocycles.reserve(static_cast<size_t>(nd));
            for (int i = 0; i < nd; ++i) {
                F2Vector e(nd);
                e.set(i, true);
                cocycles.push_back(std::move(e));
            }
        }
        for (auto& z : cocycles) {
            F2Vector rep = z;
            auto [nonzero, acc] = reduce(dd, z, static_cast<int>(dd.reps.size()));
            if (!nonzero) continue;
            F2Vector coords(static_cast<int>(dd.reps.size()) + 1);
            for (int i = 0; i < acc.n; ++i) coords.set(i, acc.get(i));
            coords.set(static_cast<int>(dd.reps.size()), true);
            // widen previously stored coordinate vectors
            insert_row(std::move(z), std::move(coords));
            dd.reps.push_back(make_cochain(k, d, std::move(rep)));
        }
        // pad all coordinate vectors to the final betti number
        const int b = static_cast<int>(dd.reps.size());
        for (auto& [v, h] : dd.rows) {
            h.w.resize(static_cast<size_t>((b + 63) / 64));
            h.n = b;
        }
    }
};

// ---------------------------------------------------------------------------
// Wu and Stiefel-Whitney classes of closed complexes.
// ---------------------------------------------------------------------------

// v_0, ..., v_n with v_k for k > n/2 zero; each v_k solves
// <x cup v_k, [M]> = <Sq^k x, [M]> over the H^{n-k} basis
inline std::vector<CocycleF2> wu_classes(const SimplicialComplex& k, const CohomologyBasisF2& H) {
    const int n = k.dim();
    for (int d = 0; d <= n; ++d)
        if (H.betti(d) != H.betti(n - d))
            throw std::invalid_argument("wu_classes: Poincare duality fails (betti mismatch); not a closed manifold over F2");
    std::vector<CocycleF2> v;
    v.push_back(unit_cocycle(k));
    for (int deg = 1; deg <= n; ++deg) {
        if (deg > n / 2) {
            v.push_back(zero_cochain(k, deg));
            continue;
        }
        const auto& xs = H.basis(n - deg);
        const auto& ys = H.basis(deg);
        const int na = static_cast<int>(xs.size()), nb = static_cast<int>(ys.size());
        if (na != nb)
            throw std::invalid_argument("wu_classes: Poincare duality fails (betti mismatch); not a closed manifold over F2");
        F2Matrix pairing(na, nb);
        F2Vector rhs(na);
        for (int a = 0; a < na; ++a) {
            for (int b = 0; b < nb; ++b)
                pairing.set(a, b, fundamental_eval(cup(xs[static_cast<size_t>(a)], ys[static_cast<size_t>(b)])));
            rhs.set(a, fundamental_eval(steenrod_sq(deg, xs[static_cast<size_t>(a)])));
        }
        if (f2_rank(pairing) != na)
            throw std::invalid_argument("wu_classes: singular pairing matrix; not a closed manifold over F2");
        F2Vector coeff;
        f2_solve(pairing, rhs, &coeff);
        CocycleF2 vk = zero_cochain(k, deg);
        for (int b = 0; b < nb; ++b)
            if (coeff.get(b)) vk = add(vk, ys[static_cast<size_t>(b)]);
        v.push_back(std::move(vk));
    }
    return v;
}

inline std::vector<CocycleF2> wu_classes(const SimplicialComplex& k) {
    CohomologyBasisF2 H(k);
    return wu_classes(k, H);
}

// w = Sq(v) expanded degree by degree: w_j = sum_m Sq^{j-m} v_m
inline std::vector<CocycleF2> stiefel_whitney_from_wu(const SimplicialComplex& k,
                                                      const std::vector<CocycleF2>& v) {
    const int n = k.dim();
    std::vector<CocycleF2> w;
    for (int j = 0; j <= n; ++j) {
        CocycleF2 wj = zero_cochain(k, j);
        for (int m = 0; m <= j; ++m) {
            if (j - m > m) continue;  // Sq^{j-m} vanishes above the degree
            wj = add(wj, steenrod_sq(j - m, v[static_cast<size_t>(m)]));
        }
        w.push_back(std::move(wj));
    }
    return w;
}

inline std::vector<CocycleF2> stiefel_whitney(const SimplicialComplex& k) {
    return stiefel_whitney_from_wu(k, wu_classes(k));
}

inline bool top_sw_number(const SimplicialComplex& k) {
    auto w = stiefel_whitney(k);
    return fundamental_eval(w.back());
}

// everything the CLI reports about one closed complex, computed off a shared
// cohomology basis
struct CharClassReport {
    std::vector<CocycleF2> wu;
    std::vector<CocycleF2> sw;
    std::vector<char> wu_nonzero;  // per degree, as cohomology classes
    std::vector<char> sw_nonzero;
    bool top_sw = false;
};

inline CharClassReport characteristic_classes(const SimplicialComplex& k, const CohomologyBasisF2& H) {
    CharClassReport rep;
    rep.wu = wu_classes(k, H);
    rep.sw = stiefel_whitney_from_wu(k, rep.wu);
    for (const auto& c : rep.wu) rep.wu_nonzero.push_back(!H.is_zero_class(c));
    for (const auto& c : rep.sw) rep.sw_nonzero.push_back(!H.is_zero_class(c));
    rep.top_sw = fundamental_eval(rep.sw.back());
    return rep;
}

// ---------------------------------------------------------------------------
// Middle-dimensional intersection form.
// ---------------------------------------------------------------------------

struct BilinearFormF2 {
    int dimension = 0;  // betti of the middle degree
    F2Matrix gram;
    int rank = 0;
    bool even = true;
};

inline BilinearFormF2 intersection_form_mid(const SimplicialComplex& k, const CohomologyBasisF2& H) {
    const int n = k.dim();
    if (n % 2 != 0) throw std::invalid_argument("intersection_form_mid: dimension must be even");
    const auto& ys = H.basis(n / 2);
    BilinearFormF2 form;
    form.dimension = static_cast<int>(ys.size());
    form.gram = F2Matrix(form.dimension, form.dimension);
    for (int a = 0; a < form.dimension; ++a)
        for (int b = 0; b < form.dimension; ++b)
            form.gram.set(a, b, fundamental_eval(cup(ys[static_cast<size_t>(a)], ys[static_cast<size_t>(b)])));
    for (int a = 0; a < form.dimension; ++a)
        for (int b = a + 1; b < form.dimension; ++b)
            if (form.gram.get(a, b) != form.gram.get(b, a))
                throw std::logic_error("intersection_form_mid: pairing not symmetric on classes");
    form.rank = f2_rank(form.gram);
    form.even = true;
    for (int a = 0; a < form.dimension; ++a)
        if (form.gram.get(a, a)) form.even = false;
    return form;
}

inline BilinearFormF2 intersection_form_mid(const SimplicialComplex& k) {
    CohomologyBasisF2 H(k);
    return intersection_form_mid(k, H);
}

}  // namespace skk
