#pragma once

// Invertible field theories.  The group of invertible TQFTs in dimension n
// for a tangential structure is the character group Hom(G, C^x) of the
// cut-and-paste group G; the unitary theories form the subgroup Hom of the
// bordism quotient into U(1) (times one positive-real factor in even
// dimensions, the value assigned to the bounding sphere).  Partition
// functions of the two basic generators - the Kervaire theory (-1)^kerv and
// the Euler theory lambda^chi - are evaluated exactly on triangulations.

#include <skk/engine.hpp>

#include <string>

namespace skk {

using Rational = mpq_class;

struct ItqftClassification {
    std::string structure;
    int dim = 0;
    SkkVerdict verdict;  // the underlying cut-and-paste verdict with its trace

    bool full_known = false;
    CharacterGroup full;  // Hom(G, C^x)

    // unitary subgroup: Hom(Omega, U(1)) = U(1)^rank x (torsion dual), with
    // one positive-real factor in even dimensions
    bool unitary_known = false;
    int unitary_u1_rank = 0;
    FgAbelianGroup unitary_torsion;
    bool unitary_positive_real = false;

    // quotient of the full group by the unitary subgroup: C^x in even
    // dimensions, the character group of the sphere subgroup in odd ones
    bool quotient_known = false;
    bool quotient_is_circle = false;
    FgAbelianGroup quotient_torsion;

    SplitStatus split_over_unitary = SplitStatus::unknown;

    std::string full_text() const { return full_known ? format_character_group(full) : "?"; }

    std::string unitary_text() const {
        if (!unitary_known) return "?";
        std::string out;
        auto add = [&](const std::string& s) {
            if (!out.empty()) out += " x ";
            out += s;
        };
        if (unitary_u1_rank == 1) add("U(1)");
        else if (unitary_u1_rank > 1) add("U(1)^" + std::to_string(unitary_u1_rank));
        if (!unitary_torsion.trivial()) add(format_group(unitary_torsion));
        if (unitary_positive_real) add("R_>0");
        return out.empty() ? "1" : out;
    }

    std::string quotient_text() const {
        if (!quotient_known) return "?";
        return quotient_is_circle ? "C*" : format_group(quotient_torsion);
    }
};

inline ItqftClassification classify(const CatalogBundle& cat, const TangentialStructureRecord& s,
                                    int n) {
    ItqftClassification c;
    c.structure = s.name;
    c.dim = n;
    c.verdict = skk_group(cat, s, n);
    if (c.verdict.group_known) {
        c.full_known = true;
        c.full = hom_to_circle(c.verdict.group);
    }
    if (const BordismEntry* omega = s.bordism_at(n)) {
        c.unitary_known = true;
        c.unitary_u1_rank = omega->group.free_rank;
        c.unitary_torsion = FgAbelianGroup(0, omega->group.invariant_factors);
        c.unitary_positive_real = n % 2 == 0;
    }
    if (n % 2 == 0) {
        // evaluation on the bounding sphere is onto C^x
        c.quotient_known = c.verdict.sphere == SphereClass::Z;
        c.quotient_is_circle = true;
    } else {
        switch (c.verdict.sphere) {
            case SphereClass::Z2:
                c.quotient_known = true;
                c.quotient_torsion = FgAbelianGroup(0, {Int(2)});
                break;
            case SphereClass::zero: c.quotient_known = true; break;
            default: break;
        }
    }
    c.split_over_unitary = c.verdict.split;
    return c;
}

inline ItqftClassification classify(const CatalogBundle& cat, const std::string& name, int n) {
    const auto* s = cat.find(name);
    if (!s) throw std::invalid_argument("unknown structure: " + name);
    return classify(cat, *s, n);
}

// partition function of the Kervaire theory: (-1)^{kerv(M)} on closed
// odd-dimensional manifolds
inline int kervaire_partition(const SimplicialComplex& m, int field_char = 2) {
    auto rep = m.validate();
    if (!rep.closed) throw std::invalid_argument("kervaire_partition: complex must be closed");
    return kervaire_semichar(m, field_char) == 0 ? 1 : -1;
}

// partition function of the Euler theory at a nonzero rational lambda:
// lambda^{chi(M)}, exact
inline Rational euler_partition(const Rational& lambda, const SimplicialComplex& m) {
    if (lambda == 0) throw std::invalid_argument("euler_partition: lambda must be nonzero");
    long chi = m.euler_characteristic();
    Rational base = chi >= 0 ? lambda : Rational(1) / lambda;
    unsigned long e = static_cast<unsigned long>(chi >= 0 ? chi : -chi);
    Rational out = 1;
    Int num = base.get_num(), den = base.get_den();
    Int pnum, pden;
    mpz_pow_ui(pnum.get_mpz_t(), num.get_mpz_t(), e);
    mpz_pow_ui(pden.get_mpz_t(), den.get_mpz_t(), e);
    out = Rational(pnum) / Rational(pden);
    out.canonicalize();
    return out;
}

// symbolic form for non-rational lambda: the literal raised to the computed
// Euler characteristic
inline std::string euler_partition_symbolic(const std::string& lambda, const SimplicialComplex& m) {
    if (lambda.empty()) throw std::invalid_argument("euler_partition: empty literal");
    return lambda + "^" + std::to_string(m.euler_characteristic());
}

// consistency of the Kervaire theory with the trace of the identity:
// Z_kerv(Y x S^1) must equal (-1)^{chi(Y)} for closed even-dimensional Y
inline bool trace_check(const SimplicialComplex& y) {
    if (y.dim() % 2 != 0) throw std::invalid_argument("trace_check: even-dimensional input required");
    auto rep = y.validate();
    if (!rep.closed) throw std::invalid_argument("trace_check: complex must be closed");
    SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
    int z = kervaire_partition(product(y, circle), 2);
    int expected = y.euler_characteristic() % 2 == 0 ? 1 : -1;
    return z == expected;
}

}  // namespace skk
