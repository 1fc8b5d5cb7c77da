// Command-line front end: cut-and-paste verdicts, table generation, manifold
// analysis, invertible-TQFT classification, catalog inspection, and the
// verification suites.
//
// Exit codes: 0 success, 2 input error, 3 computed-unknown, 4 verification
// failure.

#include <CLI11.hpp>

#include <skk/charclass.hpp>
#include <skk/data.hpp>
#include <skk/report.hpp>
#include <skk/tables.hpp>
#include <skk/verify.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitVerify = 4;

// a manifold argument is a corpus slug or a path to a triangulation file
skk::SimplicialComplex load_manifold(const std::string& arg, const std::string& dir) {
    if (arg.find('/') == std::string::npos && arg.find('.') == std::string::npos)
        return skk::load_corpus_complex(arg, dir);
    std::ifstream is(arg);
    if (!is) throw std::runtime_error("cannot open triangulation file: " + arg);
    return skk::load_triangulation(is);
}

int parse_field(const std::string& f) {
    if (f == "q" || f == "Q" || f == "0") return 0;
    if (f.size() >= 2 && (f[0] == 'f' || f[0] == 'F')) return std::stoi(f.substr(1));
    throw std::runtime_error("unknown field '" + f + "' (expected q or f<p>)");
}

std::vector<std::string> split_list(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const auto& a : args) {
        std::stringstream ss(a);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-and-paste groups, characteristic classes, and invertible field theories"};
    app.require_subcommand(1);

    std::string data_dir_flag;
    app.add_option("--data-dir", data_dir_flag, "data directory (default: built-in, or $SKK_DATA_DIR)");
    bool machine = false;
    app.add_flag("--machine", machine, "machine-readable output (golden-file format)");

    // compute-skk
    auto* sk = app.add_subcommand("compute-skk", "compute a cut-and-paste group verdict");
    std::string structure;
    int dim = 0;
    sk->add_option("--structure", structure, "tangential structure name")->required();
    sk->add_option("--dim", dim, "dimension")->required();

    // tables
    auto* tb = app.add_subcommand("tables", "regenerate a summary table");
    std::string preset;
    tb->add_option("--preset", preset, "skk-odd | pin-parity | physics")->required();

    // manifold analyze / pair
    auto* mf = app.add_subcommand("manifold", "triangulated-manifold invariants");
    auto* ma = mf->add_subcommand("analyze", "invariants of a closed triangulation");
    std::string manifold_arg;
    std::vector<std::string> fields, invs;
    ma->add_option("file", manifold_arg, "corpus slug or triangulation file")->required();
    ma->add_option("--field", fields, "coefficient field: q or f<p> (repeatable)");
    ma->add_option("--inv", invs, "invariants: euler,betti,kerv,wu,sw,form (repeatable/comma lists)");
    auto* mp = mf->add_subcommand("pair", "boundary pair report for a triangulation with boundary");
    std::string pair_arg;
    mp->add_option("file", pair_arg, "corpus slug or triangulation file")->required();

    // itqft classify
    auto* iq = app.add_subcommand("itqft", "invertible field theories");
    auto* ic = iq->add_subcommand("classify", "classify invertible theories for a structure");
    std::string iq_structure;
    int iq_dim = 0;
    ic->add_option("--structure", iq_structure, "tangential structure name")->required();
    ic->add_option("--dim", iq_dim, "dimension")->required();

    // verify
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    vf->add_option("--suite", suite, "all | homology | charclass | skk | itqft");

    // catalog list/show
    auto* cl = app.add_subcommand("catalog", "inspect the structure catalog");
    auto* cll = cl->add_subcommand("list", "list catalog entries");
    std::string show_name;
    auto* cls = cl->add_subcommand("show", "print one catalog record in canonical form");
    cls->add_option("name", show_name, "structure name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sk) {
            auto cat = skk::load_catalog(data_dir_flag);
            if (!cat.find(structure)) {
                std::cerr << "unknown structure: " << structure << "\n";
                return kExitInput;
            }
            auto v = skk::skk_group(cat, structure, dim);
            std::cout << (machine ? skk::render_verdict_machine(v) : skk::render_verdict_human(v));
            bool unknown = !v.group_known || v.split == skk::SplitStatus::unknown ||
                           v.sphere == skk::SphereClass::unknown;
            return unknown ? kExitUnknown : 0;
        }
        if (*tb) {
            auto cat = skk::load_catalog(data_dir_flag);
            auto t = skk::make_table(cat, preset);
            std::cout << (machine ? skk::render_machine(t) : skk::render_human(t));
            return 0;
        }
        if (*ma) {
            auto k = load_manifold(manifold_arg, data_dir_flag);
            auto rep = k.validate();
            std::vector<int> chars;
            for (const auto& f : split_list(fields)) chars.push_back(parse_field(f));
            if (chars.empty()) chars = {0, 2};
            auto wanted = split_list(invs);
            if (wanted.empty()) wanted = {"euler", "betti", "kerv", "wu", "sw", "form"};
            std::cout << "manifold " << (k.name.empty() ? manifold_arg : k.name) << " dim " << k.dim()
                      << (rep.closed ? " closed" : " with-boundary")
                      << (rep.orientable ? " orientable" : " nonorientable") << "\n";
            int status = 0;
            auto emit = [&](const std::string& inv, const std::string& text) {
                std::cout << inv << " " << text << "\n";
            };
            std::unique_ptr<skk::CohomologyBasisF2> H;
            auto basis = [&]() -> skk::CohomologyBasisF2& {
                if (!H) H = std::make_unique<skk::CohomologyBasisF2>(k);
                return *H;
            };
            for (const auto& inv : wanted) {
                try {
                    if (inv == "euler") {
                        emit(inv, std::to_string(k.euler_characteristic()));
                    } else if (inv == "betti") {
                        for (int ch : chars) {
                            auto bv = k.homology(ch);
                            std::string line = ch == 0 ? "Q" : "F" + std::to_string(ch);
                            for (int b : bv.betti) line += " " + std::to_string(b);
                            emit(inv, line);
                        }
                    } else if (inv == "kerv") {
                        for (int ch : chars)
                            emit(inv, (ch == 0 ? "Q " : "F" + std::to_string(ch) + " ") +
                                          std::to_string(skk::kervaire_semichar(k, ch)));
                    } else if (inv == "wu" || inv == "sw") {
                        auto cc = skk::characteristic_classes(k, basis());
                        const auto& flags = inv == "wu" ? cc.wu_nonzero : cc.sw_nonzero;
                        std::string line;
                        for (size_t d = 0; d < flags.size(); ++d)
                            line += (d ? " " : "") + std::string(1, flags[d] ? '1' : '0');
                        emit(inv, line + (inv == "sw" ? (cc.top_sw ? " top=1" : " top=0") : ""));
                    } else if (inv == "form") {
                        auto form = skk::intersection_form_mid(k, basis());
                        emit(inv, "dim " + std::to_string(form.dimension) + " rank " +
                                      std::to_string(form.rank) + (form.even ? " even" : " odd"));
                    } else {
                        emit(inv, "error unknown invariant");
                        status = kExitInput;
                    }
                } catch (const std::exception& e) {
                    emit(inv, std::string("inapplicable: ") + e.what());
                }
            }
            return status;
        }
        if (*mp) {
            auto k = load_manifold(pair_arg, data_dir_flag);
            skk::ManifoldPair pair(k);
            std::cout << "pair " << (k.name.empty() ? pair_arg : k.name) << " dim " << k.dim() << "\n";
            std::cout << "boundary-facets " << pair.boundary.facets().size() << "\n";
            auto rel = skk::relative_homology(pair, 2);
            std::string line;
            for (int b : rel.betti) line += (line.empty() ? "" : " ") + std::to_string(b);
            std::cout << "relative-betti-F2 " << line << "\n";
            if (k.dim() % 2 == 0) {
                int j = skk::jstar_rank(pair, 2);
                std::cout << "jstar-rank-F2 " << j << "\n";
                int kerv = skk::kervaire_semichar(pair.boundary, 2);
                long chi = k.euler_characteristic();
                bool congruent = kerv == ((j + chi) % 2 + 2) % 2;
                std::cout << "boundary-kerv-congruence " << (congruent ? "pass" : "fail") << "\n";
                if (!congruent) return kExitVerify;
            }
            return 0;
        }
        if (*ic) {
            auto cat = skk::load_catalog(data_dir_flag);
            if (!cat.find(iq_structure)) {
                std::cerr << "unknown structure: " << iq_structure << "\n";
                return kExitInput;
            }
            auto c = skk::classify(cat, iq_structure, iq_dim);
            std::cout << (machine ? skk::render_itqft_machine(c) : skk::render_itqft_human(c));
            return c.full_known ? 0 : kExitUnknown;
        }
        if (*vf) {
            auto results = skk::verify_suite(suite, data_dir_flag);
            int failed = 0;
            for (const auto& r : results) {
                std::cout << (r.pass ? "pass " : "FAIL ") << r.name
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
                if (!r.pass) ++failed;
            }
            std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
            return failed ? kExitVerify : 0;
        }
        if (*cll) {
            auto cat = skk::load_catalog(data_dir_flag);
            std::cout << "catalog version " << cat.version << "\n";
            for (const auto& s : cat.structures)
                std::cout << s.name << "\t" << s.display
                          << (s.tenfold.empty() ? "" : "\t(" + s.tenfold + ")") << "\n";
            return 0;
        }
        if (*cls) {
            auto cat = skk::load_catalog(data_dir_flag);
            const auto* s = cat.find(show_name);
            if (!s) {
                std::cerr << "unknown structure: " << show_name << "\n";
                return kExitInput;
            }
            skk::save_structure(std::cout, *s);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
