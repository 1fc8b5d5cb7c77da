#pragma once

// Tangential-structure catalog: per-structure data files holding bordism
// groups, Euler-characteristic parity rules, comparison maps and splitting
// overrides, each fact with a citation.  The decision engine consumes these
// records; it never hard-codes structure-specific facts.
//
// File format (versioned, line based).  Clauses on a line are separated by
// " ; "; the citation clause always comes last and runs to end of line.
//
//   catalog-structure 1
//   name pin-
//   display Pin^-
//   tenfold BDI
//   stabilization stable
//   orientable no
//   torsion_only yes ; cite ...
//   bordism 2 ; group Z/8 ; chi 1 ; gens RP^2 ; cite ...
//   parity dim 2 ; odd_exists RP^2 ; cite ...
//   parity mod 8 4 ; always_even ; cite ...
//   comparison so ; sphere_iso ; cite ...
//   override dim 1 ; split bounding-parity ; cite ...
//
// Emission is canonical; parse -> emit is the identity on shipped files.

#include <skk/abgroup.hpp>
#include <skk/data.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skk {

enum class Stabilization { unstabilized, once, twice, stable };
enum class Tristate { yes, no, unknown };
enum class ParityKind { always_even, odd_exists, unknown };

struct ParityRule {
    bool exact = false;  // exact dimension match vs congruence class
    int dim = 0;         // dimension (exact) or modulus (congruence)
    int residue = 0;
    ParityKind kind = ParityKind::unknown;
    std::string witness;  // odd-chi witness manifold, informational
    std::string cite;
};

struct BordismEntry {
    int dim = 0;
    FgAbelianGroup group;
    bool chi_known = false;
    std::vector<int> chi;  // chi mod 2 of each canonical generator
    std::vector<std::string> generators;
    std::string cite;
};

struct ComparisonMap {
    std::string target;
    bool sphere_iso = false;
    std::string cite;
};

struct OverrideRule {
    bool exact = false;
    int dim = 0;
    int residue = 0;
    std::string invariant;  // name of the splitting invariant
    std::string cite;
};

struct TangentialStructureRecord {
    std::string name;
    std::string display;
    std::string tenfold;  // tenfold-way class label, optional
    Stabilization stabilization = Stabilization::stable;
    Tristate orientable = Tristate::unknown;
    std::optional<int> k_orientability;
    std::string k_orientability_cite;
    std::optional<int> connective_cover_b;
    std::string connective_cover_cite;
    bool torsion_only = false;  // every recorded bordism group is finite
    std::string torsion_only_cite;
    std::vector<BordismEntry> bordism;
    std::vector<ParityRule> parity;
    std::vector<ComparisonMap> comparisons;
    std::vector<OverrideRule> overrides;

    const BordismEntry* bordism_at(int dim) const {
        for (const auto& b : bordism)
            if (b.dim == dim) return &b;
        return nullptr;
    }

    // chi mod 2 as a homomorphism to Z/2 on canonical generators
    GroupHom chi_hom(const BordismEntry& b) const {
        FgAbelianGroup z2{0, {2}};
        IntMatrix m(1, b.group.ngens());
        for (size_t i = 0; i < b.chi.size(); ++i) m.at(0, static_cast<int>(i)) = b.chi[i];
        return GroupHom(b.group, z2, m);
    }
};

struct CatalogBundle {
    std::string version;
    std::vector<TangentialStructureRecord> structures;

    const TangentialStructureRecord* find(const std::string& name) const {
        for (const auto& s : structures)
            if (s.name == name) return &s;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Emission (canonical form).
// ---------------------------------------------------------------------------

inline std::string to_string(Stabilization s) {
    switch (s) {
        case Stabilization::unstabilized: return "unstabilized";
        case Stabilization::once: return "once";
        case Stabilization::twice: return "twice";
        case Stabilization::stable: return "stable";
    }
    return "stable";
}

inline std::string to_string(Tristate t) {
    return t == Tristate::yes ? "yes" : t == Tristate::no ? "no" : "unknown";
}

inline std::string to_string(ParityKind k) {
    switch (k) {
        case ParityKind::always_even: return "always_even";
        case ParityKind::odd_exists: return "odd_exists";
        case ParityKind::unknown: return "unknown";
    }
    return "unknown";
}

inline void save_structure(std::ostream& os, const TangentialStructureRecord& s) {
    os << "catalog-structure 1\n";
    os << "name " << s.name << "\n";
    os << "display " << s.display << "\n";
    if (!s.tenfold.empty()) os << "tenfold " << s.tenfold << "\n";
    os << "stabilization " << to_string(s.stabilization) << "\n";
    os << "orientable " << to_string(s.orientable) << "\n";
    if (s.k_orientability)
        os << "k_orientability " << *s.k_orientability << " ; cite " << s.k_orientability_cite << "\n";
    if (s.connective_cover_b)
        os << "connective_cover_b " << *s.connective_cover_b << " ; cite " << s.connective_cover_cite << "\n";
    if (s.torsion_only) os << "torsion_only yes ; cite " << s.torsion_only_cite << "\n";
    for (const auto& b : s.bordism) {
        os << "bordism " << b.dim << " ; group " << format_group(b.group);
        if (b.chi_known) {
            os << " ; chi";
            for (int c : b.chi) os << " " << c;
        }
        if (!b.generators.empty()) {
            os << " ; gens";
            for (const auto& g : b.generators) os << " " << g;
        }
        os << " ; cite " << b.cite << "\n";
    }
    for (const auto& p : s.parity) {
        os << "parity ";
        if (p.exact) os << "dim " << p.dim;
        else os << "mod " << p.dim << " " << p.residue;
        os << " ; " << to_string(p.kind);
        if (p.kind == ParityKind::odd_exists && !p.witness.empty()) os << " " << p.witness;
        os << " ; cite " << p.cite << "\n";
    }
    for (const auto& c : s.comparisons) {
        os << "comparison " << c.target;
        if (c.sphere_iso) os << " ; sphere_iso";
        os << " ; cite " << c.cite << "\n";
    }
    for (const auto& o : s.overrides) {
        os << "override ";
        if (o.exact) os << "dim " << o.dim;
        else os << "mod " << o.dim << " " << o.residue;
        os << " ; split " << o.invariant << " ; cite " << o.cite << "\n";
    }
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_clauses(const std::string& line) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = line.find(" ; ", pos);
        if (next == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 3;
    }
}

inline std::string take_cite(std::vector<std::string>& clauses) {
    if (clauses.empty() || clauses.back().rfind("cite ", 0) != 0)
        throw std::invalid_argument("catalog: missing citation clause");
    std::string cite = clauses.back().substr(5);
    clauses.pop_back();
    if (cite.empty()) throw std::invalid_argument("catalog: empty citation");
    return cite;
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace detail

inline TangentialStructureRecord load_structure(std::istream& is) {
    TangentialStructureRecord s;
    std::string line;
    bool tagged = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!tagged) {
            if (line != "catalog-structure 1")
                throw std::invalid_argument("catalog: missing or unsupported format tag");
            tagged = true;
            continue;
        }
        auto clauses = detail::split_clauses(line);
        auto head = detail::words(clauses[0]);
        if (head.empty()) continue;
        const std::string& key = head[0];
        if (key == "name") {
            s.name = head.at(1);
        } else if (key == "display") {
            s.display = clauses[0].substr(8);
        } else if (key == "tenfold") {
            s.tenfold = head.at(1);
        } else if (key == "stabilization") {
            const std::string& v = head.at(1);
            if (v == "unstabilized") s.stabilization = Stabilization::unstabilized;
            else if (v == "once") s.stabilization = Stabilization::once;
            else if (v == "twice") s.stabilization = Stabilization::twice;
            else if (v == "stable") s.stabilization = Stabilization::stable;
            else throw std::invalid_argument("catalog: bad stabilization " + v);
        } else if (key == "orientable") {
            const std::string& v = head.at(1);
            s.orientable = v == "yes" ? Tristate::yes : v == "no" ? Tristate::no : Tristate::unknown;
        } else if (key == "k_orientability") {
            s.k_orientability = std::stoi(head.at(1));
            s.k_orientability_cite = detail::take_cite(clauses);
        } else if (key == "connective_cover_b") {
            s.connective_cover_b = std::stoi(head.at(1));
            s.connective_cover_cite = detail::take_cite(clauses);
        } else if (key == "torsion_only") {
            s.torsion_only = head.at(1) == "yes";
            s.torsion_only_cite = detail::take_cite(clauses);
        } else if (key == "bordism") {
            BordismEntry b;
            b.dim = std::stoi(head.at(1));
            b.cite = detail::take_cite(clauses);
            for (size_t i = 1; i < clauses.size(); ++i) {
                auto w = detail::words(clauses[i]);
                if (w.empty()) continue;
                if (w[0] == "group") {
                    b.group = group_from_literal(clauses[i].substr(6));
                } else if (w[0] == "chi") {
                    b.chi_known = true;
                    for (size_t j = 1; j < w.size(); ++j) b.chi.push_back(std::stoi(w[j]));
                } else if (w[0] == "gens") {
                    b.generators.assign(w.begin() + 1, w.end());
                } else {
                    throw std::invalid_argument("catalog: bad bordism clause " + w[0]);
                }
            }
            if (b.chi_known && static_cast<int>(b.chi.size()) != b.group.ngens())
                throw std::invalid_argument("catalog: chi vector arity mismatch in " + s.name);
            if (b.chi_known) s.chi_hom(b);  // validates order compatibility
            s.bordism.push_back(std::move(b));
        } else if (key == "parity") {
            ParityRule p;
            if (head.at(1) == "dim") {
                p.exact = true;
                p.dim = std::stoi(head.at(2));
            } else if (head.at(1) == "mod") {
                p.exact = false;
                p.dim = std::stoi(head.at(2));
                p.residue = std::stoi(head.at(3));
            } else {
                throw std::invalid_argument("catalog: bad parity selector");
            }
            if (p.exact && p.dim % 2 != 0)
                throw std::invalid_argument("catalog: parity rules apply to even dimensions only");
            if (!p.exact && p.residue % 2 != 0)
                throw std::invalid_argument("catalog: parity congruence class must be even");
            p.cite = detail::take_cite(clauses);
            auto body = detail::words(clauses.at(1));
            if (body.at(0) == "always_even") p.kind = ParityKind::always_even;
            else if (body.at(0) == "odd_exists") {
                p.kind = ParityKind::odd_exists;
                if (body.size() > 1) p.witness = body[1];
            } else if (body.at(0) == "unknown") p.kind = ParityKind::unknown;
            else throw std::invalid_argument("catalog: bad parity kind " + body[0]);
            s.parity.push_back(std::move(p));
        } else if (key == "comparison") {
            ComparisonMap c;
            c.target = head.at(1);
            c.cite = detail::take_cite(clauses);
            for (size_t i = 1; i < clauses.size(); ++i)
                if (clauses[i] == "sphere_iso") c.sphere_iso = true;
            s.comparisons.push_back(std::move(c));
        } else if (key == "override") {
            OverrideRule o;
            if (head.at(1) == "dim") {
                o.exact = true;
                o.dim = std::stoi(head.at(2));
            } else {
                o.exact = false;
                o.dim = std::stoi(head.at(2));
                o.residue = std::stoi(head.at(3));
            }
            o.cite = detail::take_cite(clauses);
            auto body = detail::words(clauses.at(1));
            if (body.at(0) != "split") throw std::invalid_argument("catalog: bad override kind");
            o.invariant = body.at(1);
            s.overrides.push_back(std::move(o));
        } else {
            throw std::invalid_argument("catalog: unexpected key '" + key + "'");
        }
    }
    if (!tagged || s.name.empty()) throw std::invalid_argument("catalog: incomplete structure record");
    if (s.display.empty()) s.display = s.name;
    return s;
}

inline CatalogBundle load_catalog(const std::string& dir = "") {
    std::string base = data_dir(dir) + "/catalog";
    std::ifstream idx(base + "/index");
    if (!idx) throw std::runtime_error("cannot open catalog index: " + base + "/index");
    CatalogBundle cat;
    std::string line;
    if (!std::getline(idx, line) || line != "catalog-index 1")
        throw std::invalid_argument("catalog index: missing format tag");
    while (std::getline(idx, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto w = detail::words(line);
        if (w[0] == "version") {
            cat.version = w.at(1);
        } else if (w[0] == "structure") {
            std::ifstream f(base + "/" + w.at(1) + ".cat");
            if (!f) throw std::runtime_error("cannot open catalog file: " + base + "/" + w.at(1) + ".cat");
            auto rec = load_structure(f);
            if (rec.name != w.at(1))
                throw std::invalid_argument("catalog: name mismatch in " + w.at(1) + ".cat");
            cat.structures.push_back(std::move(rec));
        } else {
            throw std::invalid_argument("catalog index: unexpected key " + w[0]);
        }
    }
    if (cat.version.empty()) throw std::invalid_argument("catalog index: missing version");
    return cat;
}

}  // namespace skk
