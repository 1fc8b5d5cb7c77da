// Acceptance criteria runner: one pass/fail line per criterion, nonzero exit
// on any failure.  Each criterion enforces its own wall-clock budget.

#include <skk/charclass.hpp>
#include <skk/data.hpp>
#include <skk/itqft.hpp>
#include <skk/tables.hpp>
#include <skk/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

using namespace skk;

namespace {

int failures = 0;

void run(int index, const std::string& label, double budget_seconds,
         const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        pass = false;
        note += " [over budget]";
    }
    std::printf("criterion %d: %s (%.2fs/%.0fs) - %s%s\n", index, pass ? "pass" : "FAIL", elapsed,
                budget_seconds, label.c_str(), note.c_str());
    if (!pass) ++failures;
}

// --- criterion 9 helpers: brute-force oracle over small abelian groups -----

// all invariant-factor chains d1 | d2 | ... with product <= bound
void chains(Int product, const std::vector<Int>& prefix, Int bound,
            std::vector<std::vector<Int>>& out) {
    out.push_back(prefix);
    Int start = prefix.empty() ? Int(2) : prefix.back();
    for (Int d = start; product * d <= bound; ++d) {
        if (!prefix.empty() && d % prefix.back() != 0) continue;
        auto next = prefix;
        next.push_back(d);
        chains(product * d, next, bound, out);
    }
}

// enumerate all elements of a finite group as coordinate vectors
std::vector<std::vector<Int>> elements(const FgAbelianGroup& g) {
    std::vector<std::vector<Int>> out{std::vector<Int>(static_cast<size_t>(g.ngens()))};
    for (int i = 0; i < g.ngens(); ++i) {
        std::vector<std::vector<Int>> next;
        for (const auto& e : out)
            for (Int v = 0; v < g.gen_order(i); ++v) {
                auto x = e;
                x[static_cast<size_t>(i)] = v;
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

Int element_order(const FgAbelianGroup& g, const std::vector<Int>& x) {
    Int o = 1;
    for (int i = 0; i < g.ngens(); ++i) {
        Int d = g.gen_order(i);
        Int go = d / gcd(x[static_cast<size_t>(i)], d);
        o = o / gcd(o, go) * go;
    }
    return o;
}

// multiset of element orders; determines a finite abelian group up to iso
std::map<Int, long> order_statistics(const FgAbelianGroup& g) {
    std::map<Int, long> stats;
    for (const auto& x : elements(g)) ++stats[element_order(g, x)];
    return stats;
}

bool criterion9() {
    std::vector<std::vector<Int>> groups;
    chains(Int(1), {}, Int(64), groups);
    // targets g: B -> Z/2 for the brute-force fiber comparison
    FgAbelianGroup z2{0, {2}};
    struct Target {
        FgAbelianGroup b;
        IntMatrix m;
    };
    std::vector<Target> targets;
    {
        IntMatrix id(1, 1);
        id.at(0, 0) = 1;
        targets.push_back({z2, id});
        targets.push_back({FgAbelianGroup(0, {4}), id});
        IntMatrix sum(1, 2);
        sum.at(0, 0) = 1;
        sum.at(0, 1) = 1;
        targets.push_back({FgAbelianGroup(0, {2, 4}), sum});
    }
    for (const auto& inv : groups) {
        FgAbelianGroup a(0, inv);
        // hom_to_circle: the character group of a finite group is its own iso class
        auto c = hom_to_circle(a);
        if (c.circle_rank != 0 || c.torsion.invariant_factors != a.invariant_factors) return false;
        // every homomorphism to Z/2 as a 0/1 vector on canonical generators
        int k = a.ngens();
        for (int mask = 0; mask < (1 << k); ++mask) {
            IntMatrix fm(1, k);
            bool valid = true;
            for (int i = 0; i < k; ++i) {
                int bit = (mask >> i) & 1;
                if (bit && a.gen_order(i) % 2 != 0) valid = false;  // odd order kills the map
                fm.at(0, i) = bit;
            }
            if (!valid) continue;
            GroupHom f(a, z2, fm);
            // pullback along Z -> Z/2: free rank one over the kernel of f
            {
                FgAbelianGroup z{1, {}};
                IntMatrix mod2(1, 1);
                mod2.at(0, 0) = 1;
                auto fp = fiber_product(f, GroupHom(z, z2, mod2));
                long ker = 0;
                for (const auto& x : elements(a))
                    if (f.apply(x)[0] % 2 == 0) ++ker;
                if (fp.group.free_rank != 1 || fp.group.torsion_order() != ker) return false;
                if (!f.compose_after(fp.proj_f)
                         .same_map(GroupHom(z, z2, mod2).compose_after(fp.proj_g)))
                    return false;
            }
            // pullbacks along finite targets, checked by element enumeration
            for (const auto& t : targets) {
                GroupHom g(t.b, z2, t.m);
                auto fp = fiber_product(f, g);
                if (!f.compose_after(fp.proj_f).same_map(g.compose_after(fp.proj_g))) return false;
                std::map<Int, long> expected;
                for (const auto& xa : elements(a))
                    for (const auto& xb : elements(t.b)) {
                        if ((f.apply(xa)[0] - g.apply(xb)[0]) % 2 != 0) continue;
                        Int o = element_order(a, xa);
                        Int ob = element_order(t.b, xb);
                        Int l = o / gcd(o, ob) * ob;
                        ++expected[l];
                    }
                if (order_statistics(fp.group) != expected) return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const CatalogBundle cat = load_catalog();

    run(1, "SKK Pin^- dim 2 = Z x Z/4 via the fiber product, non-split", 1.0, [&] {
        auto v = skk_group(cat, "pin-", 2);
        return v.group_known && format_group(v.group) == "Z x Z/4" &&
               v.split == SplitStatus::non_split &&
               std::any_of(v.justification.begin(), v.justification.end(), [](const std::string& j) {
                   return j.find("rule:fiber-product") != std::string::npos;
               });
    });

    run(2, "SKK O dim 2 = Z, projection = mod 2 after the times-two inclusion", 1.0, [&] {
        auto v = skk_group(cat, "o", 2);
        if (!v.group_known || format_group(v.group) != "Z" || !v.to_bordism || !v.chi_map)
            return false;
        Int c = v.chi_map->apply({Int(1)})[0];
        return v.to_bordism->apply({Int(1)})[0] == 1 && (c == 1 || c == -1) &&
               v.to_bordism->apply({Int(2) * c})[0] == 0 && v.chi_map->apply({Int(2) * c})[0] == 2;
    });

    run(3, "tables regenerate byte-identically against the checked-in goldens", 5.0, [&] {
        auto results = verify_skk();
        return std::all_of(results.begin(), results.end(),
                           [](const CheckResult& r) { return r.pass; });
    });

    run(4, "semi-characteristics of RP^3 and L(3,1); Klein bottle v1 != 0, w2 = 0", 10.0, [] {
        auto rp3 = load_corpus_complex("rp3");
        auto lens = load_corpus_complex("l3_1");
        if (kervaire_semichar(rp3, 2) != 0 || kervaire_semichar(rp3, 0) != 1) return false;
        if (kervaire_semichar(lens, 0) != 1 || kervaire_semichar(lens, 3) != 0) return false;
        auto klein = load_corpus_complex("klein");
        CohomologyBasisF2 H(klein);
        auto cc = characteristic_classes(klein, H);
        return cc.wu_nonzero[1] && !cc.sw_nonzero[2];
    });

    run(5, "top Stiefel-Whitney parity and Wu identity across the closed corpus", 30.0, [] {
        const char* slugs[] = {"s1", "s2", "s3", "s4", "rp2", "rp3", "t2", "klein", "cp2", "l3_1"};
        for (const char* slug : slugs) {
            auto k = load_corpus_complex(slug);
            const int n = k.dim();
            CohomologyBasisF2 H(k);
            auto cc = characteristic_classes(k, H);
            if (cc.top_sw != (k.euler_characteristic() % 2 != 0)) return false;
            for (int j = 0; j <= n; ++j)
                for (const auto& x : H.basis(n - j))
                    if (fundamental_eval(steenrod_sq(j, x)) !=
                        fundamental_eval(cup(cc.wu[static_cast<size_t>(j)], x)))
                        return false;
        }
        return true;
    });

    run(6, "boundary semi-characteristic congruence on the corpus pairs", 10.0, [] {
        std::vector<SimplicialComplex> fillings = {
            load_corpus_complex("d2"), load_corpus_complex("moebius"),
            load_corpus_complex("cylinder"), load_corpus_complex("d4")};
        {  // complex projective plane with an open disc removed
            auto cp2 = load_corpus_complex("cp2");
            auto facets = cp2.facets();
            facets.pop_back();
            fillings.emplace_back(cp2.vertex_count(), std::move(facets));
        }
        for (const auto& w : fillings) {
            ManifoldPair pair(w);
            int lhs = kervaire_semichar(pair.boundary, 2);
            int rhs = static_cast<int>(
                ((jstar_rank(pair, 2) + w.euler_characteristic()) % 2 + 2) % 2);
            if (lhs != rhs) return false;
        }
        return true;
    });

    run(7, "splitting falsifier: disc filling passes, Moebius filling fails", 1.0, [] {
        auto s1 = load_corpus_complex("s1");
        ManifoldPair d2(load_corpus_complex("d2"));
        ManifoldPair moebius(load_corpus_complex("moebius"));
        return splitting_criterion_check(s1, d2, 2) && !splitting_criterion_check(s1, moebius, 2);
    });

    run(8, "invertible theories: BDI dim 2, the spin row, and the trace identity", 30.0, [&] {
        if (format_character_group(hom_to_circle(group_from_literal("Z x Z/4"))) != "C* x Z/4")
            return false;
        const char* expect[] = {"Z/2 x Z/2", "C* x Z/2", "Z/2", "C*^2", "Z/2"};
        for (int n = 1; n <= 5; ++n)
            if (classify(cat, "spin", n).full_text() != expect[n - 1]) return false;
        for (const char* slug : {"s2", "rp2", "t2", "klein"})
            if (!trace_check(load_corpus_complex(slug))) return false;
        return true;
    });

    run(9, "fiber products and characters against exhaustive small-group enumeration", 60.0,
        criterion9);

    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
