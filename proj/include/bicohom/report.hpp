#ifndef BICOHOM_REPORT_HPP
#define BICOHOM_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicohom/cohomology.hpp"
#include "bicohom/io.hpp"
#include "bicohom/theorems.hpp"

namespace bicohom {

/// One q-completeness query outcome (plain or Bott-Chern flavoured).
struct QCompleteRow {
    int q = 0;
    bool bott_chern = false;
    PredicateReport result;
};

/**
 * Everything a command wants to tell the caller, in one neutral structure.
 * The TEXT and JSON renderers below consume the same fields, so the two
 * formats always carry identical numeric content; neither embeds
 * timestamps, so identical inputs give byte-identical reports.
 */
struct Report {
    std::string command;       // echo of the invocation
    std::string input_digest;  // content hash of the parsed complex
    std::optional<ValidationReport> validation;
    std::optional<Table> table;
    std::optional<DdbarLemmaResult> ddbar;
    std::vector<TheoremVerdict> verdicts;
    std::vector<NaturalMapReport> maps;
    std::vector<QCompleteRow> qcomplete;
};

namespace detail {

inline nlohmann::ordered_json json_bidegree(const Bidegree& b) {
    return nlohmann::ordered_json::array({b.p, b.q});
}

inline nlohmann::ordered_json json_verdict(const TheoremVerdict& v) {
    nlohmann::ordered_json j;
    j["statement"] = to_string(v.statement);
    if (v.mode) j["mode"] = to_string(*v.mode);
    j["at"] = json_bidegree(v.at);
    auto hyps = nlohmann::ordered_json::array();
    for (const auto& h : v.hypotheses) {
        nlohmann::ordered_json e;
        e["theory"] = to_string(h.theory);
        e["at"] = json_bidegree(h.at);
        e["required"] = 0;
        e["actual"] = h.actual;
        hyps.push_back(e);
    }
    j["hypotheses"] = hyps;
    j["hypotheses_met"] = v.hypotheses_met;
    j["conclusion"] = v.conclusion;
    j["conclusion_holds"] = v.conclusion_holds;
    j["verdict"] = to_string(v.verdict);
    j["notes"] = v.notes;
    return j;
}

inline nlohmann::ordered_json json_group_ref(const GroupRef& g) {
    nlohmann::ordered_json j;
    j["theory"] = to_string(g.space);
    if (g.space == TheorySpace::DeRham) {
        j["degree"] = g.degree;
    } else {
        j["at"] = json_bidegree(g.at);
    }
    j["dim"] = g.dimension;
    return j;
}

inline nlohmann::ordered_json json_map(const NaturalMapReport& m) {
    nlohmann::ordered_json j;
    j["source"] = json_group_ref(m.source);
    j["target"] = json_group_ref(m.target);
    j["rank"] = m.rank;
    j["injective"] = m.injective;
    j["surjective"] = m.surjective;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [rc, v] : m.matrix.entries())
        entries.push_back(nlohmann::ordered_json::array(
            {rc.first, rc.second, format_rational(v)}));
    j["entries"] = entries;
    return j;
}

}  // namespace detail

inline std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (!r.input_digest.empty()) j["input"] = r.input_digest;
    if (r.validation) {
        nlohmann::ordered_json v;
        v["valid"] = r.validation->valid();
        auto list = nlohmann::ordered_json::array();
        for (const auto& viol : r.validation->violations) list.push_back(viol.describe());
        v["violations"] = list;
        j["validation"] = v;
    }
    if (r.table) {
        nlohmann::ordered_json t;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : r.table->rows) {
            nlohmann::ordered_json e;
            e["p"] = row.at.p;
            e["q"] = row.at.q;
            e["h_dbar"] = row.h_dbar;
            e["h_del"] = row.h_del;
            e["h_bc"] = row.h_bc;
            e["h_aeppli"] = row.h_a;
            rows.push_back(e);
        }
        t["rows"] = rows;
        auto degs = nlohmann::ordered_json::array();
        for (const auto& d : r.table->degrees) {
            nlohmann::ordered_json e;
            e["k"] = d.k;
            e["betti"] = d.betti;
            e["dbar_sum"] = d.dbar_line_sum;
            degs.push_back(e);
        }
        t["degrees"] = degs;
        j["table"] = t;
    }
    if (r.ddbar) {
        nlohmann::ordered_json d;
        d["holds"] = r.ddbar->holds;
        if (r.ddbar->witness) d["witness"] = detail::json_bidegree(*r.ddbar->witness);
        j["ddbar_lemma"] = d;
    }
    if (!r.verdicts.empty()) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& v : r.verdicts) list.push_back(detail::json_verdict(v));
        j["verdicts"] = list;
    }
    if (!r.maps.empty()) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& m : r.maps) list.push_back(detail::json_map(m));
        j["maps"] = list;
    }
    if (!r.qcomplete.empty()) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& row : r.qcomplete) {
            nlohmann::ordered_json e;
            e["q"] = row.q;
            e["bott_chern"] = row.bott_chern;
            e["holds"] = row.result.holds;
            auto w = nlohmann::ordered_json::array();
            for (const auto& b : row.result.witnesses) w.push_back(detail::json_bidegree(b));
            e["witnesses"] = w;
            list.push_back(e);
        }
        j["qcomplete"] = list;
    }
    return j.dump(2) + "\n";
}

inline std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    if (!r.input_digest.empty()) out << "input: " << r.input_digest << "\n";
    if (r.validation) {
        out << "validation: " << (r.validation->valid() ? "valid" : "invalid") << "\n";
        for (const auto& v : r.validation->violations) out << "  violation: " << v.describe() << "\n";
    }
    if (r.table) {
        out << "table: p q h_dbar h_del h_bc h_aeppli\n";
        for (const auto& row : r.table->rows) {
            out << "  " << row.at.p << " " << row.at.q << " " << row.h_dbar << " " << row.h_del
                << " " << row.h_bc << " " << row.h_a << "\n";
        }
        out << "degrees: k betti dbar_sum\n";
        for (const auto& d : r.table->degrees)
            out << "  " << d.k << " " << d.betti << " " << d.dbar_line_sum << "\n";
    }
    if (r.ddbar) {
        out << "ddbar_lemma: " << (r.ddbar->holds ? "holds" : "fails");
        if (r.ddbar->witness) out << " at " << to_string(*r.ddbar->witness);
        out << "\n";
    }
    for (const auto& v : r.verdicts) {
        out << "check " << to_string(v.statement);
        if (v.mode) out << " mode=" << to_string(*v.mode);
        out << " at " << to_string(v.at) << "\n";
        for (const auto& h : v.hypotheses)
            out << "  hypothesis " << h.describe() << (h.actual == 0 ? " [ok]" : " [fails]")
                << "\n";
        out << "  conclusion: " << v.conclusion << " -> "
            << (v.conclusion_holds ? "holds" : "fails") << "\n";
        for (const auto& n : v.notes) out << "  note: " << n << "\n";
        out << "  verdict: " << to_string(v.verdict) << "\n";
    }
    for (const auto& m : r.maps) {
        out << "map " << m.source.describe() << " -> " << m.target.describe() << ": dim "
            << m.source.dimension << " -> " << m.target.dimension << ", rank " << m.rank
            << ", injective " << (m.injective ? "yes" : "no") << ", surjective "
            << (m.surjective ? "yes" : "no") << "\n";
        for (const auto& [rc, v] : m.matrix.entries())
            out << "  entry " << rc.first << " " << rc.second << " " << format_rational(v)
                << "\n";
    }
    for (const auto& row : r.qcomplete) {
        out << "qcomplete q=" << row.q << (row.bott_chern ? " bc" : "") << ": "
            << (row.result.holds ? "true" : "false") << "\n";
        for (const auto& w : row.result.witnesses) out << "  witness " << to_string(w) << "\n";
    }
    return out.str();
}

inline std::string render(const Report& r, bool as_json) {
    return as_json ? render_json(r) : render_text(r);
}

}  // namespace bicohom

#endif  // BICOHOM_REPORT_HPP
