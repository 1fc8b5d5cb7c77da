#pragma once

// Reproducible summary tables assembled from the catalog and the decision
// engine.  Three presets:
//   skk-odd    - odd-dimensional cut-and-paste verdicts per structure
//   pin-parity - possible Euler characteristics in even dimensions
//   physics    - sphere subgroups and invertible-TQFT groups, dims 1-5
// Rendering is deterministic; the machine format is the golden-file format.

#include <skk/engine.hpp>
#include <skk/itqft.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace skk {

struct Table {
    std::string preset;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline Table table_skk_odd(const CatalogBundle& cat) {
    Table t;
    t.preset = "skk-odd";
    t.header = {"structure", "n", "sphere", "group", "split"};
    const char* order[] = {"o", "so", "spin", "string", "or4", "cover8", "framed", "pin+", "pin-"};
    for (const char* name : order) {
        if (!cat.find(name)) throw std::invalid_argument("skk-odd table: structure missing: " + std::string(name));
        for (int n = 1; n <= 33; n += 2) {
            auto v = skk_group(cat, name, n);
            t.rows.push_back({name, std::to_string(n), to_string(v.sphere), v.group_text(), v.split_text()});
        }
    }
    return t;
}

inline Table table_pin_parity(const CatalogBundle& cat) {
    Table t;
    t.preset = "pin-parity";
    t.header = {"dim", "o", "so", "spin", "pin-", "pin+"};
    for (int dim = 2; dim <= 18; dim += 2) {
        std::vector<std::string> row{std::to_string(dim)};
        for (const char* name : {"o", "so", "spin", "pin-", "pin+"}) {
            const auto* s = cat.find(name);
            if (!s) throw std::invalid_argument("pin-parity table: structure missing: " + std::string(name));
            auto p = detail::euler_parity(*s, dim);
            std::string cell;
            switch (p.kind) {
                case ParityKind::always_even: cell = "2Z"; break;
                case ParityKind::odd_exists: {
                    cell = "Z";
                    // recover the witness, if any, from the matching recorded rule
                    for (const auto& r : s->parity) {
                        bool match = r.exact ? r.dim == dim : dim % r.dim == r.residue;
                        if (match && !r.witness.empty()) {
                            cell += "(" + r.witness + ")";
                            break;
                        }
                    }
                    break;
                }
                case ParityKind::unknown: cell = "?"; break;
            }
            row.push_back(cell);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Table table_physics(const CatalogBundle& cat) {
    Table t;
    t.preset = "physics";
    t.header = {"structure", "S1", "S3", "S5", "itqft1", "itqft2", "itqft3", "itqft4", "itqft5"};
    const char* order[] = {"so", "o", "spinc", "pinc", "spin", "pin+",
                           "pin-", "pinct+", "pinct-", "spinh", "pinh+", "pinh-"};
    for (const char* name : order) {
        const auto* s = cat.find(name);
        if (!s) throw std::invalid_argument("physics table: structure missing: " + std::string(name));
        std::vector<std::string> row{name};
        for (int n : {1, 3, 5}) row.push_back(to_string(skk_group(cat, *s, n).sphere));
        for (int n = 1; n <= 5; ++n) {
            auto c = classify(cat, *s, n);
            std::string cell = c.full_text();
            if (n % 2 == 0 && c.split_over_unitary == SplitStatus::non_split) cell += " (non-split)";
            row.push_back(std::move(cell));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Table make_table(const CatalogBundle& cat, const std::string& preset) {
    if (preset == "skk-odd") return table_skk_odd(cat);
    if (preset == "pin-parity") return table_pin_parity(cat);
    if (preset == "physics") return table_physics(cat);
    throw std::invalid_argument("unknown table preset: " + preset);
}

// golden-file format: tagged header line, column list, one `row` line per row
// with ` | ` separated cells
inline std::string render_machine(const Table& t) {
    std::string out = "table " + t.preset + " 1\n";
    auto join = [](const std::vector<std::string>& cells) {
        std::string line;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) line += " | ";
            line += cells[i];
        }
        return line;
    };
    out += "columns " + join(t.header) + "\n";
    for (const auto& r : t.rows) out += "row " + join(r) + "\n";
    return out;
}

inline std::string render_human(const Table& t) {
    std::vector<size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (size_t i = 0; i < cells.size(); ++i) {
            out += cells[i];
            if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };
    std::string out = line(t.header);
    size_t total = 0;
    for (size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
    out += std::string(total, '-') + "\n";
    for (const auto& r : t.rows) out += line(r);
    return out;
}

}  // namespace skk
