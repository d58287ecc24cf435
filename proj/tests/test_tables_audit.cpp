#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qfano/audit.hpp"
#include "qfano/json_io.hpp"
#include "qfano/tables.hpp"

using namespace qfano;

namespace {
const std::string kGoldenDir = QFANO_GOLDEN_DIR;
}

TEST_CASE("table generation is deterministic") {
    for (const auto& id : table_ids()) {
        const Document a = generate_table(id);
        const Document b = generate_table(id);
        CHECK(a == b);
        CHECK(render_csv(a) == render_csv(b));
        CHECK(render_text(a) == render_text(b));
        CHECK(render_json(a) == render_json(b));
    }
    CHECK_THROWS_AS(generate_table("nope"), std::invalid_argument);
}

TEST_CASE("table shapes") {
    CHECK(table_B().rows.size() == 18);
    CHECK(table_pgd_nmax().rows.size() == 36);
    CHECK(table_obstructions().rows.size() == 11);
    CHECK(table_plane_smooth().rows.size() == 10);
    CHECK(table_plane_cone().rows.size() == 6);
    CHECK(table_residual_f2().rows.size() == 6);
    CHECK(table_dp4().rows.size() == 16);
    CHECK(table_sarkisov().rows.size() == 38);
}

TEST_CASE("audit against the golden fixtures") {
    const auto results = audit_all(kGoldenDir);
    REQUIRE(results.size() == table_ids().size());
    CHECK(audit_passed(results));
    for (const auto& r : results) {
        INFO(r.table_id);
        CHECK(r.diffs.empty());
        if (r.table_id == "obstructions") {
            // the (2,8) gamma_dot transcription note
            CHECK(r.status == AuditStatus::flagged);
            REQUIRE(r.notes.size() == 1);
            CHECK(r.notes[0].find("2,8,2,7") != std::string::npos);
        } else {
            CHECK(r.status == AuditStatus::match);
            CHECK(r.notes.empty());
        }
    }
}

TEST_CASE("tampered golden data is reported with a row-level diff") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "qfano_tamper_test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    for (const auto& id : table_ids())
        fs::copy_file(fs::path(kGoldenDir) / (id + ".csv"), tmp / (id + ".csv"));

    // flip one value in the B table
    {
        std::ifstream in(tmp / "B.csv");
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        const auto pos = content.find("14,16");
        REQUIRE(pos != std::string::npos);
        content.replace(pos, 5, "14,15");
        std::ofstream out(tmp / "B.csv", std::ios::trunc);
        out << content;
    }

    const auto results = audit_all(tmp.string());
    CHECK_FALSE(audit_passed(results));
    bool found = false;
    for (const auto& r : results) {
        if (r.table_id != "B") continue;
        CHECK(r.status == AuditStatus::mismatch);
        REQUIRE(r.diffs.size() == 1);
        CHECK(r.diffs[0].row_key == "14,15");
        found = true;
    }
    CHECK(found);
    fs::remove_all(tmp);
}

TEST_CASE("golden loader") {
    CHECK_THROWS_AS(load_golden(kGoldenDir + std::string("/missing.csv"), "missing"),
                    std::runtime_error);
    const auto doc = load_golden(kGoldenDir + std::string("/B.csv"), "B");
    CHECK(doc.header == std::vector<std::string>{"d", "B"});
    CHECK(doc.rows.size() == 18);
}

TEST_CASE("json round trip for documents and audit results") {
    for (const auto& id : table_ids()) {
        const Document doc = generate_table(id);
        const json j = doc;
        CHECK(j.get<Document>() == doc);
    }
    const auto results = audit_all(kGoldenDir);
    for (const auto& r : results) {
        const json j = r;
        CHECK(j.get<AuditResult>() == r);
    }
    // obstruction certificates and classifications
    const auto refined = nmax_refined(0, 8);
    for (const auto& cert : refined.eliminations) {
        const json j = cert;
        CHECK(j.get<ObstructionCertificate>() == cert);
    }
    CurveInstance c{0, 8, Containment::smooth_cubic_section, TriState::no, TriState::no};
    const Classification cls = classify(c);
    const json j = cls;
    CHECK(j.get<Classification>() == cls);
}

TEST_CASE("csv rendering has no quoting to need") {
    for (const auto& id : table_ids()) {
        const Document doc = generate_table(id);
        for (const auto& row : doc.rows)
            for (const auto& cell : row) CHECK(cell.find(',') == std::string::npos);
    }
}
