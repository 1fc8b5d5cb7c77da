#pragma once

// Verification suites: the library's cross-cutting invariants run against the
// shipped corpus, catalog, and golden tables.  Used by the command-line
// runner and the acceptance tests.

#include <skk/charclass.hpp>
#include <skk/data.hpp>
#include <skk/tables.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace skk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline const std::vector<std::string>& closed_corpus() {
    static const std::vector<std::string> slugs = {"s1",  "s2",  "s3",    "s4",  "rp2", "rp3",
                                                   "t2",  "klein", "cp2", "l3_1", "rp4"};
    return slugs;
}

inline void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                  const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

}  // namespace detail

// closedness, Poincare duality over F2, and Euler characteristic consistency
inline std::vector<CheckResult> verify_homology(const std::string& dir = "") {
    std::vector<CheckResult> out;
    for (const auto& slug : detail::closed_corpus()) {
        SimplicialComplex k = load_corpus_complex(slug, dir);
        auto rep = k.validate();
        detail::check(out, "homology/" + slug + "/closed-connected", rep.closed && rep.connected);
        const int n = k.dim();
        auto f2 = k.homology(2);
        bool pd = true;
        for (int d = 0; d <= n; ++d)
            if (f2.betti[static_cast<size_t>(d)] != f2.betti[static_cast<size_t>(n - d)]) pd = false;
        detail::check(out, "homology/" + slug + "/poincare-duality-F2", pd);
        long chi = k.euler_characteristic();
        for (int ch : {0, 2, 3}) {
            auto bv = k.homology(ch);
            long alt = 0;
            for (int d = 0; d <= n; ++d)
                alt += (d % 2 == 0 ? 1 : -1) * bv.betti[static_cast<size_t>(d)];
            detail::check(out, "homology/" + slug + "/euler-char" + std::to_string(ch), alt == chi);
        }
        if (n % 2 == 1)
            detail::check(out, "homology/" + slug + "/odd-dim-chi-zero", chi == 0);
    }
    return out;
}

// Wu identity, top Stiefel-Whitney parity, and Wu-vanishing above the middle
inline std::vector<CheckResult> verify_charclass(const std::string& dir = "") {
    std::vector<CheckResult> out;
    for (const auto& slug : detail::closed_corpus()) {
        SimplicialComplex k = load_corpus_complex(slug, dir);
        const int n = k.dim();
        CohomologyBasisF2 H(k);
        auto rep = characteristic_classes(k, H);
        detail::check(out, "charclass/" + slug + "/top-sw-equals-chi-parity",
                      rep.top_sw == (k.euler_characteristic() % 2 != 0));
        bool wu_ok = true;
        for (int kk = 0; kk <= n; ++kk) {
            for (const auto& x : H.basis(n - kk)) {
                bool lhs = fundamental_eval(steenrod_sq(kk, x));
                bool rhs = fundamental_eval(cup(rep.wu[static_cast<size_t>(kk)], x));
                if (lhs != rhs) wu_ok = false;
            }
        }
        detail::check(out, "charclass/" + slug + "/wu-identity", wu_ok);
        bool upper_vanish = true;
        for (int kk = n / 2 + 1; kk <= n; ++kk)
            if (!H.is_zero_class(rep.wu[static_cast<size_t>(kk)])) upper_vanish = false;
        detail::check(out, "charclass/" + slug + "/wu-vanishing-above-middle", upper_vanish);
    }
    return out;
}

// golden tables and the flagship engine verdicts
inline std::vector<CheckResult> verify_skk(const std::string& dir = "") {
    std::vector<CheckResult> out;
    CatalogBundle cat = load_catalog(dir);
    for (const auto& s : cat.structures) {
        std::ostringstream emitted;
        save_structure(emitted, s);
        std::ifstream f(data_dir(dir) + "/catalog/" + s.name + ".cat");
        std::stringstream original;
        original << f.rdbuf();
        detail::check(out, "skk/catalog-roundtrip/" + s.name, emitted.str() == original.str());
    }
    for (const char* preset : {"skk-odd", "pin-parity", "physics"}) {
        std::string rendered = render_machine(make_table(cat, preset));
        std::ifstream f(data_dir(dir) + "/golden/" + std::string(preset) + ".golden");
        std::stringstream golden;
        golden << f.rdbuf();
        detail::check(out, "skk/golden/" + std::string(preset), f.good() && rendered == golden.str(),
                      f.good() ? "" : "golden file missing");
    }
    auto pm = skk_group(cat, "pin-", 2);
    detail::check(out, "skk/pin-minus-2",
                  pm.group_known && format_group(pm.group) == "Z x Z/4" &&
                      pm.split == SplitStatus::non_split);
    auto o2 = skk_group(cat, "o", 2);
    bool o2_ok = o2.group_known && format_group(o2.group) == "Z" && o2.to_bordism &&
                 o2.to_bordism->apply({Int(1)})[0] == 1;
    detail::check(out, "skk/o-2-mod-two-projection", o2_ok);
    return out;
}

// character sequence exactness and the Kervaire theory's trace identity
inline std::vector<CheckResult> verify_itqft(const std::string& dir = "") {
    std::vector<CheckResult> out;
    CatalogBundle cat = load_catalog(dir);
    const char* spin_expect[] = {"Z/2 x Z/2", "C* x Z/2", "Z/2", "C*^2", "Z/2"};
    bool spin_ok = true;
    for (int n = 1; n <= 5; ++n)
        if (classify(cat, "spin", n).full_text() != spin_expect[n - 1]) spin_ok = false;
    detail::check(out, "itqft/spin-row", spin_ok);
    bool exact_ok = true;
    for (const auto& s : cat.structures) {
        for (int n = 1; n <= 5; n += 2) {
            auto c = classify(cat, s.name, n);
            if (!c.full_known || !c.unitary_known || !c.quotient_known) continue;
            if (c.full.torsion.torsion_order() !=
                c.unitary_torsion.torsion_order() * c.quotient_torsion.torsion_order())
                exact_ok = false;
        }
    }
    detail::check(out, "itqft/character-sequence-exactness", exact_ok);
    for (const char* slug : {"s2", "rp2", "t2", "klein"}) {
        SimplicialComplex y = load_corpus_complex(slug, dir);
        detail::check(out, "itqft/trace/" + std::string(slug), trace_check(y));
    }
    return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, const std::string& dir = "") {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    if (suite == "homology" || suite == "all") append(verify_homology(dir));
    else if (suite == "charclass") append(verify_charclass(dir));
    else if (suite == "skk") append(verify_skk(dir));
    else if (suite == "itqft") append(verify_itqft(dir));
    else if (suite != "all") throw std::invalid_argument("unknown verification suite: " + suite);
    if (suite == "all") {
        append(verify_charclass(dir));
        append(verify_skk(dir));
        append(verify_itqft(dir));
    }
    return out;
}

}  // namespace skk
