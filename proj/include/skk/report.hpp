#pragma once

// Text renderings of verdicts and classifications.  The machine format is
// line-based and stable; the human format is for terminals.

#include <skk/engine.hpp>
#include <skk/itqft.hpp>

#include <string>

namespace skk {

inline std::string render_verdict_machine(const SkkVerdict& v) {
    std::string out = "verdict " + v.structure + " " + std::to_string(v.dim) + " 1\n";
    out += "sphere " + to_string(v.sphere) + "\n";
    out += "group " + v.group_text() + "\n";
    out += "split " + v.split_text() + "\n";
    for (const auto& j : v.justification) out += "rule " + j + "\n";
    return out;
}

inline std::string render_verdict_human(const SkkVerdict& v) {
    std::string out = "SKK(" + v.structure + ", n=" + std::to_string(v.dim) + ")\n";
    out += "  sphere subgroup: " + to_string(v.sphere) + "\n";
    out += "  group:           " + v.group_text() + "\n";
    out += "  splitting:       " + v.split_text() + "\n";
    out += "  derivation:\n";
    for (const auto& j : v.justification) out += "    - " + j + "\n";
    return out;
}

inline std::string render_itqft_machine(const ItqftClassification& c) {
    std::string out = "itqft " + c.structure + " " + std::to_string(c.dim) + " 1\n";
    out += "full " + c.full_text() + "\n";
    out += "unitary " + c.unitary_text() + "\n";
    out += "quotient " + c.quotient_text() + "\n";
    out += "split " + c.verdict.split_text() + "\n";
    return out;
}

inline std::string render_itqft_human(const ItqftClassification& c) {
    std::string out = "ITQFT(" + c.structure + ", n=" + std::to_string(c.dim) + ")\n";
    out += "  all invertible theories: " + c.full_text() + "\n";
    out += "  unitary subgroup:        " + c.unitary_text() + "\n";
    out += "  quotient by unitary:     " + c.quotient_text() + "\n";
    std::string tag;
    switch (c.split_over_unitary) {
        case SplitStatus::split: tag = "splits over the unitary subgroup"; break;
        case SplitStatus::non_split: tag = "does not split over the unitary subgroup"; break;
        case SplitStatus::unknown: tag = "splitting over the unitary subgroup unknown"; break;
    }
    out += "  " + tag + "\n";
    return out;
}

}  // namespace skk
