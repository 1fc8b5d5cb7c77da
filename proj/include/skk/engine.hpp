#pragma once

// The decision core.  Assembles the cut-and-paste group of a tangential
// structure in a given dimension from catalog data: sphere-subgroup
// determination via Euler-characteristic parity, the fiber-product
// description in even dimensions, and the splitting rules (Wu-vanishing /
// k-orientability, inheritance along comparison maps, catalog overrides,
// torsion obstruction).  Every verdict carries the ordered trace of rules
// that produced it; unknown is a first-class value and no rule fires off an
// unknown premise.

#include <skk/abgroup.hpp>
#include <skk/catalog.hpp>
#include <skk/simplicial.hpp>

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skk {

enum class SphereClass { Z, Z2, zero, unknown };
enum class SplitStatus { split, non_split, unknown };

inline std::string to_string(SphereClass s) {
    switch (s) {
        case SphereClass::Z: return "Z";
        case SphereClass::Z2: return "Z/2";
        case SphereClass::zero: return "0";
        case SphereClass::unknown: return "?";
    }
    return "?";
}

struct SkkVerdict {
    std::string structure;
    int dim = 0;
    SphereClass sphere = SphereClass::unknown;
    bool group_known = false;
    FgAbelianGroup group;
    std::optional<GroupHom> to_bordism;  // projection onto the bordism group, when computed
    std::optional<GroupHom> chi_map;     // even dims: the Euler-characteristic map to Z
    SplitStatus split = SplitStatus::unknown;
    std::string split_invariant;              // e.g. kerv_F2, chi/2, trivial, bounding-parity
    std::vector<std::string> justification;

    std::string group_text() const { return group_known ? format_group(group) : "?"; }
    std::string split_text() const {
        switch (split) {
            case SplitStatus::split:
                return split_invariant.empty() ? "split" : "split:" + split_invariant;
            case SplitStatus::non_split: return "non-split";
            case SplitStatus::unknown: return "unknown";
        }
        return "unknown";
    }
};

// phi(b) = #{ 1 <= s <= b : s = 0,1,2,4 mod 8 }; governs the orientability
// order of connective covers
inline int phi_bound(int b) {
    if (b < 0) throw std::invalid_argument("phi_bound: negative bound");
    int count = 0;
    for (int s = 1; s <= b; ++s) {
        int r = s % 8;
        if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
    }
    return count;
}

enum class EulerParity { always_even, odd_possible };

// a k-orientable manifold has even Euler characteristic unless 2^{k+1}
// divides its dimension
inline EulerParity k_orientable_parity(int k, int dim) {
    if (k < 0) throw std::invalid_argument("k_orientable_parity: negative k");
    if (dim % 2 != 0) throw std::invalid_argument("k_orientable_parity: dimension must be even");
    if (k >= 62) return EulerParity::always_even;
    long long modulus = 1LL << (k + 1);
    return dim % modulus == 0 ? EulerParity::odd_possible : EulerParity::always_even;
}

namespace detail {

// effective k-orientability: explicit value, or phi(b) for a connective cover
inline std::optional<int> effective_k(const TangentialStructureRecord& s, std::vector<std::string>* just) {
    if (s.k_orientability) return s.k_orientability;
    if (s.connective_cover_b) {
        int k = phi_bound(*s.connective_cover_b);
        if (just)
            just->push_back("rule:phi-connective-cover — k-orientability " + std::to_string(k) +
                            " = phi(" + std::to_string(*s.connective_cover_b) + ") for the connective cover");
        return k;
    }
    return std::nullopt;
}

struct ParityVerdict {
    ParityKind kind = ParityKind::unknown;
    std::string note;
};

// Euler-characteristic parity in an even dimension: recorded rules first
// (exact-dimension entries beat congruence entries), then the k-orientability
// bound, then unknown
inline ParityVerdict euler_parity(const TangentialStructureRecord& s, int dim) {
    if (dim % 2 != 0) throw std::invalid_argument("euler_parity: even dimensions only");
    for (const auto& p : s.parity)
        if (p.exact && p.dim == dim)
            return {p.kind, "recorded parity (dim " + std::to_string(dim) + "): " + p.cite +
                                (p.witness.empty() ? "" : " [witness " + p.witness + "]")};
    for (const auto& p : s.parity)
        if (!p.exact && dim % p.dim == p.residue)
            return {p.kind, "recorded parity (dim = " + std::to_string(p.residue) + " mod " +
                                std::to_string(p.dim) + "): " + p.cite +
                                (p.witness.empty() ? "" : " [witness " + p.witness + "]")};
    if (auto k = effective_k(s, nullptr)) {
        if (k_orientable_parity(*k, dim) == EulerParity::always_even)
            return {ParityKind::always_even,
                    "rule:k-orientable-parity — " + std::to_string(*k) + "-orientable and 2^" +
                        std::to_string(*k + 1) + " does not divide " + std::to_string(dim)};
    }
    return {ParityKind::unknown, "no parity fact applies"};
}

}  // namespace detail

// the subgroup generated by the bounding n-sphere: Z in even dimensions; in
// odd dimensions 0 or Z/2 according to whether an odd-Euler-characteristic
// (n+1)-manifold with the structure exists
inline SphereClass sphere_subgroup(const TangentialStructureRecord& s, int n,
                                   std::vector<std::string>* just = nullptr) {
    auto note = [&](const std::string& m) {
        if (just) just->push_back(m);
    };
    if (n % 2 == 0) {
        if (s.stabilization == Stabilization::unstabilized) {
            note("rule:stabilization-hypothesis — even dimensions require at least one stabilization; not satisfied");
            return SphereClass::unknown;
        }
        note("rule:sphere-even — the bounding sphere has infinite order in even dimensions");
        return SphereClass::Z;
    }
    if (s.stabilization != Stabilization::twice && s.stabilization != Stabilization::stable) {
        note("rule:stabilization-hypothesis — odd dimensions require a twice-stabilized structure; not satisfied");
        return SphereClass::unknown;
    }
    auto parity = detail::euler_parity(s, n + 1);
    switch (parity.kind) {
        case ParityKind::odd_exists:
            note("rule:sphere-odd-parity — an odd-Euler-characteristic " + std::to_string(n + 1) +
                 "-manifold exists, so the bounding sphere is trivial; " + parity.note);
            return SphereClass::zero;
        case ParityKind::always_even:
            note("rule:sphere-odd-parity — all " + std::to_string(n + 1) +
                 "-manifolds have even Euler characteristic, so the bounding sphere generates Z/2; " +
                 parity.note);
            return SphereClass::Z2;
        case ParityKind::unknown:
            note("rule:sphere-odd-parity — parity open in dimension " + std::to_string(n + 1) +
                 "; sphere subgroup unknown");
            return SphereClass::unknown;
    }
    return SphereClass::unknown;
}

// the class of a structure-boundary in the cut-and-paste group is
// chi(nullbordism) times the bounding sphere
inline Int surgery_class(const Int& chi_of_nullbordism) { return chi_of_nullbordism; }

inline Int surgery_class(const Int& chi_of_nullbordism, SphereClass sphere) {
    switch (sphere) {
        case SphereClass::Z: return chi_of_nullbordism;
        case SphereClass::Z2: return ((chi_of_nullbordism % 2) + 2) % 2;
        case SphereClass::zero: return 0;
        case SphereClass::unknown:
            throw std::invalid_argument("surgery_class: sphere subgroup unknown");
    }
    return chi_of_nullbordism;
}

// desk-scale falsifier for candidate splittings: a semi-characteristic kappa
// splits the sequence only if kappa(boundary) = chi(filling) mod 2 for every
// filling
inline bool splitting_criterion_check(const SimplicialComplex& boundary, const ManifoldPair& filling,
                                      int field_char) {
    if (boundary.dim() % 2 != 1)
        throw std::invalid_argument("splitting_criterion_check: boundary must be odd-dimensional");
    if (filling.total.dim() != boundary.dim() + 1)
        throw std::invalid_argument("splitting_criterion_check: filling dimension mismatch");
    // the boundary argument must present the derived boundary of the filling;
    // accept any combinatorial presentation with matching homology
    if (boundary.facets() != filling.boundary.facets() &&
        boundary.homology(2).betti != filling.boundary.homology(2).betti)
        throw std::invalid_argument("splitting_criterion_check: boundary does not match the filling's boundary");
    int kappa = kervaire_semichar(boundary, field_char);
    long chi = filling.total.euler_characteristic();
    return kappa == ((chi % 2) + 2) % 2;
}

// ---------------------------------------------------------------------------
// The verdict engine.
// ---------------------------------------------------------------------------

namespace detail {

inline SkkVerdict skk_group_impl(const CatalogBundle& cat, const TangentialStructureRecord& s, int n,
                                 std::set<std::string>& visiting);

// try to inherit a semi-characteristic splitting along a comparison map whose
// sphere subgroups agree
inline bool inherited_split(const CatalogBundle& cat, const TangentialStructureRecord& s, int n,
                            std::set<std::string>& visiting, SkkVerdict& v) {
    for (const auto& c : s.comparisons) {
        if (!c.sphere_iso) continue;
        const auto* target = cat.find(c.target);
        if (!target || visiting.count(c.target)) continue;
        SkkVerdict tv = skk_group_impl(cat, *target, n, visiting);
        if (tv.sphere == SphereClass::Z2 && tv.split == SplitStatus::split &&
            tv.split_invariant.rfind("kerv", 0) == 0) {
            v.split = SplitStatus::split;
            v.split_invariant = tv.split_invariant;
            v.justification.push_back("rule:inherited-splitting — pulled back the " + tv.split_invariant +
                                      " splitting along the sphere-preserving map to " + target->name +
                                      "; " + c.cite);
            return true;
        }
    }
    return false;
}

inline SkkVerdict skk_group_impl(const CatalogBundle& cat, const TangentialStructureRecord& s, int n,
                                 std::set<std::string>& visiting) {
    visiting.insert(s.name);
    SkkVerdict v;
    v.structure = s.name;
    v.dim = n;
    v.sphere = sphere_subgroup(s, n, &v.justification);
    const BordismEntry* omega = s.bordism_at(n);

    if (n % 2 == 1) {
        if (v.sphere == SphereClass::unknown) {
            v.justification.push_back("rule:open-extension — without the sphere subgroup the extension is undetermined");
            visiting.erase(s.name);
            return v;
        }
        if (v.sphere == SphereClass::zero) {
            v.split = SplitStatus::split;
            v.split_invariant = "trivial";
            v.justification.push_back("rule:iso-trivial-sphere — trivial sphere subgroup, so the group is the bordism group");
            if (omega) {
                v.group_known = true;
                v.group = omega->group;
                v.to_bordism.emplace(v.group, omega->group,
                                     IntMatrix::identity(omega->group.ngens()));
            } else {
                v.justification.push_back("rule:unknown-bordism — bordism group not in the catalog for this dimension");
            }
            visiting.erase(s.name);
            return v;
        }
        // sphere = Z/2: splitting rules in priority order
        std::vector<std::string> kjust;
        auto k = effective_k(s, &kjust);
        bool decided = false;
        if (k && (n + 1) % (1LL << std::min(*k + 1, 62)) != 0) {
            for (auto& j : kjust) v.justification.push_back(j);
            v.split = SplitStatus::split;
            v.split_invariant = "kerv_F2";
            v.justification.push_back(
                "rule:kerv-splitting — Wu classes below degree 2^" + std::to_string(*k) +
                " vanish and 2^" + std::to_string(*k + 1) + " does not divide " + std::to_string(n + 1) +
                ", so the mod-2 Kervaire semi-characteristic splits the sequence");
            decided = true;
        }
        if (!decided) decided = inherited_split(cat, s, n, visiting, v);
        if (!decided) {
            for (const auto& o : s.overrides) {
                bool match = o.exact ? o.dim == n : n % o.dim == o.residue;
                if (!match) continue;
                v.split = SplitStatus::split;
                v.split_invariant = o.invariant;
                v.justification.push_back("rule:catalog-override — recorded splitting by " + o.invariant +
                                          "; " + o.cite);
                decided = true;
                break;
            }
        }
        if (!decided) {
            v.split = SplitStatus::unknown;
            v.justification.push_back(
                "rule:open-split — no splitting rule applies; whether twice-stabilized sequences always split is open");
        }
        if (v.split == SplitStatus::split) {
            if (omega) {
                v.group_known = true;
                FgAbelianGroup z2{0, {2}};
                v.group = direct_sum(z2, omega->group);
            } else {
                v.justification.push_back("rule:unknown-bordism — bordism group not in the catalog for this dimension");
            }
        } else if (omega) {
            v.justification.push_back("rule:open-extension — group is an undetermined extension of " +
                                      format_group(omega->group) + " by Z/2");
        }
        visiting.erase(s.name);
        return v;
    }

    // even dimension: sphere subgroup Z (or unknown on hypothesis failure)
    if (v.sphere == SphereClass::unknown) {
        visiting.erase(s.name);
        return v;
    }
    auto parity = euler_parity(s, n);
    if (omega && omega->chi_known) {
        GroupHom chi = s.chi_hom(*omega);
        FgAbelianGroup z{1, {}};
        FgAbelianGroup z2{0, {2}};
        IntMatrix mod2(1, 1);
        mod2.at(0, 0) = 1;
        GroupHom g(z, z2, mod2);
        auto fp = fiber_product(chi, g);
        v.group_known = true;
        v.group = fp.group;
        v.to_bordism = fp.proj_f;
        v.chi_map = fp.proj_g;
        v.justification.push_back(
            "rule:fiber-product — the group is the pullback of chi mod 2 against Z -> Z/2 over the recorded bordism group " +
            format_group(omega->group) + " (" + omega->cite + ")");
        if (torsion_elements_parity_cover(omega->group, chi)) {
            v.split = SplitStatus::non_split;
            v.justification.push_back(
                "rule:torsion-odd-chi — a torsion bordism class has odd Euler characteristic, which obstructs any splitting");
        } else {
            v.split = SplitStatus::split;
            v.split_invariant = "chi/2";
            if (parity.kind == ParityKind::always_even)
                v.justification.push_back("rule:chi-half-splitting — Euler characteristics are even (" +
                                          parity.note + "); chi/2 splits the sequence");
            else
                v.justification.push_back(
                    "rule:chi-half-splitting — chi is even on all torsion classes, so chi/2 extends to a splitting");
        }
    } else {
        if (parity.kind == ParityKind::always_even) {
            v.split = SplitStatus::split;
            v.split_invariant = "chi/2";
            v.justification.push_back("rule:chi-half-splitting — Euler characteristics are even (" + parity.note +
                                      "); chi/2 splits the sequence");
        } else if (parity.kind == ParityKind::odd_exists && s.torsion_only) {
            v.split = SplitStatus::non_split;
            v.justification.push_back(
                "rule:torsion-odd-chi — all bordism classes are torsion (" + s.torsion_only_cite +
                ") and an odd-Euler-characteristic manifold exists (" + parity.note +
                "), which obstructs any splitting");
        } else {
            v.justification.push_back("rule:open-split — parity fact insufficient to decide the splitting (" +
                                      parity.note + ")");
        }
        if (!omega)
            v.justification.push_back("rule:unknown-bordism — bordism group not in the catalog for this dimension");
        else
            v.justification.push_back("rule:unknown-chi — chi mod 2 on generators not recorded; group left symbolic");
    }
    if (v.split == SplitStatus::split && s.orientable == Tristate::yes && n % 4 == 0)
        v.justification.push_back(
            "rule:chi-sigma-splitting — orientable in dimension divisible by four: (chi - sigma)/2 gives an equivalent splitting");
    visiting.erase(s.name);
    return v;
}

}  // namespace detail

inline SkkVerdict skk_group(const CatalogBundle& cat, const TangentialStructureRecord& s, int n) {
    std::set<std::string> visiting;
    return detail::skk_group_impl(cat, s, n, visiting);
}

inline SkkVerdict skk_group(const CatalogBundle& cat, const std::string& name, int n) {
    const auto* s = cat.find(name);
    if (!s) throw std::invalid_argument("unknown structure: " + name);
    return skk_group(cat, *s, n);
}

}  // namespace skk
