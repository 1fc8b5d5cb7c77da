#pragma once

// Exact arithmetic of finitely generated abelian groups: integer matrices,
// Smith normal form, canonical (invariant-factor) classification, homs,
// fiber products, and Hom(-, C^x).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skk {

using Int = mpz_class;

// ---------------------------------------------------------------------------
// IntMatrix: dense arbitrary-precision integer matrix, row-major.
// ---------------------------------------------------------------------------

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> e;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative shape");
    }

    Int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }

    IntMatrix columns(const std::vector<int>& idx) const {
        IntMatrix r(rows, static_cast<int>(idx.size()));
        for (int i = 0; i < rows; ++i)
            for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
        return r;
    }

    IntMatrix rows_of(const std::vector<int>& idx) const {
        IntMatrix r(static_cast<int>(idx.size()), cols);
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Smith normal form.  u*m*v = d with u, v unimodular and d diagonal with the
// divisibility chain d_1 | d_2 | ...  Pivoting by minimal absolute value to
// keep intermediate entries small.  Inverse transforms are tracked alongside
// (needed to express canonical generators in the original coordinates).
// ---------------------------------------------------------------------------

struct SnfResult {
    IntMatrix u, d, v;
    IntMatrix uinv, vinv;
    int rank = 0;
};

inline SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult s;
    s.d = m;
    s.u = IntMatrix::identity(m.rows);
    s.uinv = IntMatrix::identity(m.rows);
    s.v = IntMatrix::identity(m.cols);
    s.vinv = IntMatrix::identity(m.cols);
    IntMatrix& d = s.d;

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < s.u.cols; ++j) std::swap(s.u.at(a, j), s.u.at(b, j));
        for (int i = 0; i < s.uinv.rows; ++i) std::swap(s.uinv.at(i, a), s.uinv.at(i, b));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < s.v.rows; ++i) std::swap(s.v.at(i, a), s.v.at(i, b));
        for (int j = 0; j < s.vinv.cols; ++j) std::swap(s.vinv.at(a, j), s.vinv.at(b, j));
    };
    // row[a] += q*row[b]
    auto add_row = [&](int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < d.cols; ++j) d.at(a, j) += q * d.at(b, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(a, j) += q * s.u.at(b, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, b) -= q * s.uinv.at(i, a);
    };
    // col[a] += q*col[b]
    auto add_col = [&](int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < d.rows; ++i) d.at(i, a) += q * d.at(i, b);
        for (int i = 0; i < s.v.rows; ++i) s.v.at(i, a) += q * s.v.at(i, b);
        for (int j = 0; j < s.vinv.cols; ++j) s.vinv.at(b, j) -= q * s.vinv.at(a, j);
    };
    auto negate_row = [&](int a) {
        for (int j = 0; j < d.cols; ++j) d.at(a, j) = -d.at(a, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(a, j) = -s.u.at(a, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, a) = -s.uinv.at(i, a);
    };

    const int lim = std::min(m.rows, m.cols);
    int t = 0;
    for (; t < lim; ++t) {
        // locate a minimal-magnitude nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j)
                if (d.at(i, j) != 0 &&
                    (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);  // truncated: |remainder| < |pivot|
                add_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a strictly smaller entry appeared; make it the pivot
                int qi = t, qj = t;
                for (int i = t; i < d.rows; ++i)
                    for (int j = t; j < d.cols; ++j)
                        if (d.at(i, j) != 0 &&
                            mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(qi, qj).get_mpz_t()) < 0) {
                            qi = i;
                            qj = j;
                        }
                swap_rows(t, qi);
                swap_cols(t, qj);
                continue;
            }
            // enforce d_t | everything remaining
            int bi = -1, bj = -1;
            for (int i = t + 1; i < d.rows && bi < 0; ++i)
                for (int j = t + 1; j < d.cols; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            add_row(t, bi, 1);
        }
        if (d.at(t, t) < 0) negate_row(t);
    }
    s.rank = t;
    return s;
}

// ---------------------------------------------------------------------------
// FgAbelianGroup in canonical form: Z^free_rank x Z/d_1 x ... x Z/d_m with
// 2 <= d_1 | d_2 | ... | d_m.  Canonical generators: free ones first, then
// torsion generators in divisibility order.  Elements are coordinate vectors.
// ---------------------------------------------------------------------------

struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors;

    FgAbelianGroup() = default;
    FgAbelianGroup(int fr, std::vector<Int> inv) : free_rank(fr), invariant_factors(std::move(inv)) {
        if (fr < 0) throw std::invalid_argument("FgAbelianGroup: negative rank");
        for (size_t i = 0; i < invariant_factors.size(); ++i) {
            if (invariant_factors[i] < 2)
                throw std::invalid_argument("FgAbelianGroup: invariant factor < 2");
            if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
                throw std::invalid_argument("FgAbelianGroup: divisibility chain violated");
        }
    }

    int ngens() const { return free_rank + static_cast<int>(invariant_factors.size()); }
    bool trivial() const { return ngens() == 0; }
    bool torsion_free() const { return invariant_factors.empty(); }

    // order of canonical generator i (0 = infinite)
    Int gen_order(int i) const {
        return i < free_rank ? Int(0) : invariant_factors[static_cast<size_t>(i - free_rank)];
    }

    Int torsion_order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

    std::vector<Int> reduce(std::vector<Int> x) const {
        if (static_cast<int>(x.size()) != ngens())
            throw std::invalid_argument("FgAbelianGroup: coordinate arity mismatch");
        for (int i = free_rank; i < ngens(); ++i) {
            Int& c = x[static_cast<size_t>(i)];
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), gen_order(i).get_mpz_t());
        }
        return x;
    }

    bool is_zero(const std::vector<Int>& x) const {
        auto r = reduce(x);
        return std::all_of(r.begin(), r.end(), [](const Int& c) { return c == 0; });
    }

    // primary decomposition view: list of prime-power cyclic orders (0 for Z),
    // sorted; purely presentational
    std::vector<Int> primary_decomposition() const {
        std::vector<Int> out(static_cast<size_t>(free_rank), Int(0));
        for (Int d : invariant_factors) {
            for (Int p = 2; d > 1; ++p) {
                if (d % p != 0) continue;
                Int q = 1;
                while (d % p == 0) {
                    q *= p;
                    d /= p;
                }
                out.push_back(q);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Classification of a quotient Z^g / L with a change of basis to canonical
// coordinates and back.
struct Classified {
    FgAbelianGroup group;
    IntMatrix to_canonical;    // group.ngens() x g
    IntMatrix from_canonical;  // g x group.ngens()
};

// relation_cols: g x k, columns span the subgroup L of Z^g being quotiented out
inline Classified classify_quotient(int g, const IntMatrix& relation_cols) {
    if (relation_cols.rows != g && !(relation_cols.rows == 0 && relation_cols.cols == 0))
        throw std::invalid_argument("classify_quotient: relation arity mismatch");
    IntMatrix rel = relation_cols;
    if (rel.rows == 0 && rel.cols == 0) rel = IntMatrix(g, 0);
    SnfResult s = smith_normal_form(rel);

    std::vector<int> order;  // canonical generator -> U-coordinate index
    std::vector<Int> factors;
    for (int i = s.rank; i < g; ++i) order.push_back(i);  // free part
    int free_rank = g - s.rank;
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) >= 2) {
            order.push_back(i);
            factors.push_back(s.d.at(i, i));
        }

    Classified c;
    c.group = FgAbelianGroup(free_rank, factors);
    c.to_canonical = s.u.rows_of(order);
    c.from_canonical = s.uinv.columns(order);
    return c;
}

// Spec-facing wrapper: presentation rows are relations among `cols` generators.
inline FgAbelianGroup classify(const IntMatrix& presentation) {
    return classify_quotient(presentation.cols, presentation.transpose()).group;
}

// Columns of the canonical relation matrix of a group (d_i * e_i for torsion).
inline IntMatrix relation_columns(const FgAbelianGroup& g) {
    int n = g.ngens();
    int t = static_cast<int>(g.invariant_factors.size());
    IntMatrix r(n, t);
    for (int j = 0; j < t; ++j) r.at(g.free_rank + j, j) = g.invariant_factors[static_cast<size_t>(j)];
    return r;
}

// ---------------------------------------------------------------------------
// Homomorphisms: codomain.ngens() x domain.ngens() matrices on canonical
// generators; order-compatibility checked at construction, torsion rows
// normalized.
// ---------------------------------------------------------------------------

struct GroupHom {
    FgAbelianGroup domain;
    FgAbelianGroup codomain;
    IntMatrix matrix;

    GroupHom() = default;
    GroupHom(FgAbelianGroup dom, FgAbelianGroup cod, IntMatrix m)
        : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
        if (matrix.rows != codomain.ngens() || matrix.cols != domain.ngens())
            throw std::invalid_argument("GroupHom: matrix shape mismatch");
        for (int i = codomain.free_rank; i < codomain.ngens(); ++i) {
            Int o = codomain.gen_order(i);
            for (int j = 0; j < matrix.cols; ++j)
                mpz_fdiv_r(matrix.at(i, j).get_mpz_t(), matrix.at(i, j).get_mpz_t(), o.get_mpz_t());
        }
        for (int j = 0; j < domain.ngens(); ++j) {
            Int d = domain.gen_order(j);
            if (d == 0) continue;
            std::vector<Int> img(static_cast<size_t>(codomain.ngens()));
            for (int i = 0; i < codomain.ngens(); ++i) img[static_cast<size_t>(i)] = d * matrix.at(i, j);
            if (!codomain.is_zero(img))
                throw std::invalid_argument("GroupHom: image order incompatible with generator order");
        }
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != domain.ngens())
            throw std::invalid_argument("GroupHom: element arity mismatch");
        std::vector<Int> y(static_cast<size_t>(codomain.ngens()));
        for (int i = 0; i < matrix.rows; ++i)
            for (int j = 0; j < matrix.cols; ++j) y[static_cast<size_t>(i)] += matrix.at(i, j) * x[static_cast<size_t>(j)];
        return codomain.reduce(y);
    }

    GroupHom compose_after(const GroupHom& inner) const {  // this o inner
        if (!(inner.codomain == domain))
            throw std::invalid_argument("GroupHom: composition domain mismatch");
        return GroupHom(inner.domain, codomain, matrix * inner.matrix);
    }

    bool same_map(const GroupHom& o) const {
        if (!(domain == o.domain) || !(codomain == o.codomain)) return false;
        for (int j = 0; j < matrix.cols; ++j) {
            std::vector<Int> diff(static_cast<size_t>(codomain.ngens()));
            for (int i = 0; i < matrix.rows; ++i) diff[static_cast<size_t>(i)] = matrix.at(i, j) - o.matrix.at(i, j);
            if (!codomain.is_zero(diff)) return false;
        }
        return true;
    }
};

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    // canonicalize: the concatenated factor lists need not form a chain
    std::vector<Int> orders;
    for (int i = 0; i < a.ngens(); ++i) orders.push_back(a.gen_order(i));
    for (int i = 0; i < b.ngens(); ++i) orders.push_back(b.gen_order(i));
    int g = static_cast<int>(orders.size());
    std::vector<int> tor;
    for (int i = 0; i < g; ++i)
        if (orders[static_cast<size_t>(i)] != 0) tor.push_back(i);
    IntMatrix rel(g, static_cast<int>(tor.size()));
    for (size_t j = 0; j < tor.size(); ++j) rel.at(tor[j], static_cast<int>(j)) = orders[static_cast<size_t>(tor[j])];
    return classify_quotient(g, rel).group;
}

// ---------------------------------------------------------------------------
// Lattice utilities built on SNF.
// ---------------------------------------------------------------------------

// columns form a basis of { x : n x = 0 }
inline IntMatrix kernel_basis(const IntMatrix& n) {
    SnfResult s = smith_normal_form(n);
    std::vector<int> idx;
    for (int j = s.rank; j < n.cols; ++j) idx.push_back(j);
    return s.v.columns(idx);
}

// columns form a basis of the column lattice of a
inline IntMatrix image_basis(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    IntMatrix av = a * s.v;
    std::vector<int> idx;
    for (int j = 0; j < s.rank; ++j) idx.push_back(j);
    return av.columns(idx);
}

// integer solution X of A X = B; throws if none exists
inline IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve_exact: shape mismatch");
    SnfResult s = smith_normal_form(a);
    IntMatrix c = s.u * b;  // D (V^-1 X) = U B
    IntMatrix y(a.cols, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) {
            if (i < s.rank) {
                if (c.at(i, j) % s.d.at(i, i) != 0)
                    throw std::runtime_error("solve_exact: no integer solution");
                if (i < a.cols) y.at(i, j) = c.at(i, j) / s.d.at(i, i);
            } else if (c.at(i, j) != 0) {
                throw std::runtime_error("solve_exact: inconsistent system");
            }
        }
    }
    return s.v * y;
}

// ---------------------------------------------------------------------------
// Fiber product (pullback) along f: A -> C <- B : g, computed as the kernel
// of (f, -g) on A + B and classified, with the two projections.
// ---------------------------------------------------------------------------

struct FiberProduct {
    FgAbelianGroup group;
    GroupHom proj_f;  // group -> A
    GroupHom proj_g;  // group -> B
};

inline FiberProduct fiber_product(const GroupHom& f, const GroupHom& g) {
    if (!(f.codomain == g.codomain))
        throw std::invalid_argument("fiber_product: codomain mismatch");
    const FgAbelianGroup& a = f.domain;
    const FgAbelianGroup& b = g.domain;
    const FgAbelianGroup& c = f.codomain;
    const int na = a.ngens(), nb = b.ngens(), nc = c.ngens();

    // lattice L = { (x_a, x_b) : f x_a - g x_b lies in the relation lattice of C }
    IntMatrix relc = relation_columns(c);
    IntMatrix n(nc, na + nb + relc.cols);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < na; ++j) n.at(i, j) = f.matrix.at(i, j);
        for (int j = 0; j < nb; ++j) n.at(i, na + j) = -g.matrix.at(i, j);
        for (int j = 0; j < relc.cols; ++j) n.at(i, na + nb + j) = relc.at(i, j);
    }
    IntMatrix k = kernel_basis(n);
    IntMatrix proj(na + nb, k.cols);  // drop the auxiliary C-relation coordinates
    for (int i = 0; i < na + nb; ++i)
        for (int j = 0; j < k.cols; ++j) proj.at(i, j) = k.at(i, j);
    IntMatrix lbasis = image_basis(proj);

    // relations of A + B, expressed in the L basis
    IntMatrix relab(na + nb, 0);
    {
        IntMatrix ra = relation_columns(a), rb = relation_columns(b);
        relab = IntMatrix(na + nb, ra.cols + rb.cols);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < ra.cols; ++j) relab.at(i, j) = ra.at(i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < rb.cols; ++j) relab.at(na + i, ra.cols + j) = rb.at(i, j);
    }
    IntMatrix x = solve_exact(lbasis, relab);
    Classified cl = classify_quotient(lbasis.cols, x);

    // canonical generators of the pullback as elements of Z^{na+nb}
    IntMatrix gens = lbasis * cl.from_canonical;
    IntMatrix ma(na, cl.group.ngens()), mb(nb, cl.group.ngens());
    for (int j = 0; j < cl.group.ngens(); ++j) {
        for (int i = 0; i < na; ++i) ma.at(i, j) = gens.at(i, j);
        for (int i = 0; i < nb; ++i) mb.at(i, j) = gens.at(na + i, j);
    }
    FiberProduct fp;
    fp.group = cl.group;
    fp.proj_f = GroupHom(cl.group, a, std::move(ma));
    fp.proj_g = GroupHom(cl.group, b, std::move(mb));
    return fp;
}

// ---------------------------------------------------------------------------
// Characters: Hom(A, C^x) = (C^x)^rank x (torsion dual).
// ---------------------------------------------------------------------------

struct CharacterGroup {
    int circle_rank = 0;
    FgAbelianGroup torsion;  // free_rank always 0

    CharacterGroup() = default;
    CharacterGroup(int r, FgAbelianGroup t) : circle_rank(r), torsion(std::move(t)) {
        if (torsion.free_rank != 0)
            throw std::invalid_argument("CharacterGroup: torsion part must have rank 0");
    }
    bool operator==(const CharacterGroup& o) const {
        return circle_rank == o.circle_rank && torsion == o.torsion;
    }
};

inline CharacterGroup hom_to_circle(const FgAbelianGroup& a) {
    // Hom(Z, C^x) = C^x and Hom(Z/d, C^x) = Z/d (mu_d)
    return CharacterGroup(a.free_rank, FgAbelianGroup(0, a.invariant_factors));
}

// true iff chi_mod2 is nonzero on the torsion subgroup of a
inline bool torsion_elements_parity_cover(const FgAbelianGroup& a, const GroupHom& chi_mod2) {
    if (!(chi_mod2.domain == a)) throw std::invalid_argument("torsion_elements_parity_cover: domain mismatch");
    if (!(chi_mod2.codomain == FgAbelianGroup(0, {Int(2)})))
        throw std::invalid_argument("torsion_elements_parity_cover: codomain must be Z/2");
    for (int j = a.free_rank; j < a.ngens(); ++j)
        if (chi_mod2.matrix.at(0, j) % 2 != 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Group literals: `0`, `Z`, `Z^k`, `Z/d` joined by `x`; characters print `C*`
// factors.  Parsing is whitespace-insensitive.  Written factor lists need not
// be in invariant-factor order; canonicalization is explicit so that data
// referring to written generators can be transported to canonical ones.
// ---------------------------------------------------------------------------

struct ParsedGroup {
    std::vector<Int> written_orders;  // 0 for a Z factor, as written
};

inline ParsedGroup parse_group_literal(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    ParsedGroup pg;
    if (t.empty()) throw std::invalid_argument("group literal: empty");
    size_t pos = 0;
    while (pos < t.size()) {
        size_t next = t.find('x', pos);
        std::string tok = t.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? t.size() : next + 1;
        if (tok.empty()) throw std::invalid_argument("group literal: empty factor in '" + text + "'");
        if (tok == "0") continue;
        if (tok == "Z") {
            pg.written_orders.emplace_back(0);
        } else if (tok.rfind("Z^", 0) == 0) {
            long k = std::stol(tok.substr(2));
            if (k < 0) throw std::invalid_argument("group literal: negative exponent");
            for (long i = 0; i < k; ++i) pg.written_orders.emplace_back(0);
        } else if (tok.rfind("Z/", 0) == 0) {
            Int d(tok.substr(2));
            if (d < 2) throw std::invalid_argument("group literal: modulus < 2 in '" + text + "'");
            pg.written_orders.push_back(d);
        } else {
            throw std::invalid_argument("group literal: bad factor '" + tok + "'");
        }
    }
    return pg;
}

// canonicalize a written factor list; to_canonical/from_canonical translate
// between written-generator and canonical coordinates
inline Classified canonicalize(const ParsedGroup& pg) {
    int g = static_cast<int>(pg.written_orders.size());
    std::vector<int> tor;
    for (int i = 0; i < g; ++i)
        if (pg.written_orders[static_cast<size_t>(i)] != 0) tor.push_back(i);
    IntMatrix rel(g, static_cast<int>(tor.size()));
    for (size_t j = 0; j < tor.size(); ++j)
        rel.at(tor[j], static_cast<int>(j)) = pg.written_orders[static_cast<size_t>(tor[j])];
    return classify_quotient(g, rel);
}

inline FgAbelianGroup group_from_literal(const std::string& text) {
    return canonicalize(parse_group_literal(text)).group;
}

inline std::string format_group(const FgAbelianGroup& g) {
    if (g.trivial()) return "0";
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += " x ";
        out += s;
    };
    if (g.free_rank == 1) add("Z");
    else if (g.free_rank > 1) add("Z^" + std::to_string(g.free_rank));
    for (const Int& d : g.invariant_factors) add("Z/" + d.get_str());
    return out;
}

inline std::string format_character_group(const CharacterGroup& c) {
    if (c.circle_rank == 0) return format_group(c.torsion);
    std::string out = c.circle_rank == 1 ? "C*" : "C*^" + std::to_string(c.circle_rank);
    if (!c.torsion.trivial()) out += " x " + format_group(c.torsion);
    return out;
}

}  // namespace skk
