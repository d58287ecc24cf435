// Command-line front end: single-curve classification queries, table
// regeneration, and the golden-file audit.
//
// Exit codes for `classify`: 0 weak Fano, 1 not weak Fano, 2 insufficient
// data; anything above 2 is a usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qfano/audit.hpp"
#include "qfano/classifier.hpp"
#include "qfano/json_io.hpp"
#include "qfano/tables.hpp"

namespace {

using namespace qfano;

std::string render(const Document& doc, const std::string& format) {
    if (format == "csv") return render_csv(doc);
    if (format == "json") return render_json(doc);
    return render_text(doc);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

int run_classify(const CurveInstance& curve, const std::string& format) {
    const Classification result = classify(curve);
    if (format == "json") {
        json j = result;
        j["g"] = curve.g;
        j["d"] = curve.d;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        Document doc{"classify",
                     {"g", "d", "verdict", "reasons", "missing"},
                     {{std::to_string(curve.g), std::to_string(curve.d),
                       to_string(result.verdict), join(result.reasons, "; "),
                       join(result.missing, "; ")}}};
        std::cout << render_csv(doc);
    } else {
        std::cout << "(g,d) = (" << curve.g << "," << curve.d << ")\n";
        std::cout << "verdict: " << to_string(result.verdict) << "\n";
        for (const auto& r : result.reasons) std::cout << "  reason: " << r << "\n";
        for (const auto& m : result.missing) std::cout << "  missing: " << m << "\n";
        for (const auto& cert : result.certificates) {
            std::cout << "  excluded secant degree n = " << cert.n << " ("
                      << to_string(cert.reason) << ")";
            if (cert.reason == ObstructionReason::contradictory_divisor)
                std::cout << ", C.G in [" << cert.cg_lo << "," << cert.cg_hi << "]";
            std::cout << "\n";
            for (const auto& div : cert.divisors)
                std::cout << "    cg=" << div.cg << "  D=(" << div.coeffs[0] << ","
                          << div.coeffs[1] << "," << div.coeffs[2] << ")  H.D=" << div.h_dot
                          << " D.D=" << div.self_int << " C.D=" << div.c_dot
                          << " G.D=" << div.gamma_dot << "\n";
        }
    }
    switch (result.verdict) {
        case Verdict::weak_fano: return 0;
        case Verdict::not_weak_fano: return 1;
        case Verdict::insufficient_data: return 2;
    }
    return 3;
}

int run_audit(const std::string& golden_dir, const std::string& format) {
    const auto results = audit_all(golden_dir);
    if (format == "json") {
        json j = results;
        std::cout << j.dump(2) << "\n";
    } else {
        Document doc{"audit", {"table", "status", "diffs", "notes"}, {}};
        for (const auto& r : results)
            doc.rows.push_back({r.table_id, to_string(r.status), std::to_string(r.diffs.size()),
                                std::to_string(r.notes.size())});
        std::cout << render(doc, format);
        if (format == "text") {
            for (const auto& r : results) {
                for (const auto& diff : r.diffs)
                    std::cout << "  diff [" << r.table_id << " " << diff.row_key
                              << "] expected: " << diff.expected << " | computed: " << diff.computed
                              << "\n";
                for (const auto& note : r.notes)
                    std::cout << "  note [" << r.table_id << "] " << note << "\n";
            }
        }
    }
    return audit_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory classifier for weak Fano blowups of the quadric threefold"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* cls = app.add_subcommand("classify", "classify one (g,d) curve instance");
    Int g = 0, d = 1;
    cls->add_option("-g,--genus", g, "curve genus")->required();
    cls->add_option("-d,--degree", d, "curve degree")->required();
    bool on_hyperplane = false, on_quadric = false, on_cubic = false;
    auto* h = cls->add_flag("--hyperplane", on_hyperplane, "curve lies on a hyperplane");
    auto* q = cls->add_flag("--quadric-section", on_quadric, "curve lies on a smooth quadric section");
    auto* cu = cls->add_flag("--cubic-section", on_cubic, "curve lies on a smooth cubic section");
    h->excludes(q)->excludes(cu);
    q->excludes(cu);
    bool l_yes = false, l_no = false, c_yes = false, c_no = false;
    auto* ly = cls->add_flag("--has-4secant-line", l_yes, "a 4-secant line exists");
    auto* ln = cls->add_flag("--no-4secant-line", l_no, "no 4-secant line exists");
    ly->excludes(ln);
    auto* cy = cls->add_flag("--has-7secant-conic", c_yes, "a 7-secant conic exists");
    auto* cn = cls->add_flag("--no-7secant-conic", c_no, "no 7-secant conic exists");
    cy->excludes(cn);
    cls->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* tab = app.add_subcommand("table", "regenerate a published table by computation");
    std::string table_id;
    tab->add_option("id", table_id, "table id")->required()->check(CLI::IsMember(qfano::table_ids()));
    tab->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* aud = app.add_subcommand("audit", "regenerate all tables and compare against golden fixtures");
    std::string golden_dir = "data/golden";
    aud->add_option("--golden-dir", golden_dir, "directory with golden fixtures");
    aud->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            if (g < 0 || d < 1) {
                std::cerr << "classify: need genus >= 0 and degree >= 1\n";
                return 64;
            }
            CurveInstance curve;
            curve.g = g;
            curve.d = d;
            if (on_hyperplane) curve.containment = Containment::hyperplane;
            if (on_quadric) curve.containment = Containment::smooth_quadric_section;
            if (on_cubic) curve.containment = Containment::smooth_cubic_section;
            if (l_yes) curve.has_4secant_line = TriState::yes;
            if (l_no) curve.has_4secant_line = TriState::no;
            if (c_yes) curve.has_7secant_conic = TriState::yes;
            if (c_no) curve.has_7secant_conic = TriState::no;
            return run_classify(curve, format);
        }
        if (tab->parsed()) {
            std::cout << render(qfano::generate_table(table_id), format);
            return 0;
        }
        if (aud->parsed()) return run_audit(golden_dir, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}
