#include "doctest.h"

#include "tccert/commands.hpp"
#include "tccert/replay.hpp"
#include "tccert/space_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace tccert;

namespace {

std::string data(const std::string& name) {
    return std::string(TCCERT_DATA_DIR) + "/" + name;
}

std::string temp_json(const std::string& content, const std::string& tag) {
    std::string path = "cli_test_" + tag + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("space schema parsing and diagnostics") {
    auto doc = load_space_document(data("genus2_presentation.json"));
    CHECK(doc.name == "genus2_presentation");
    CHECK(doc.space.dimension() == 2);
    CHECK(doc.field.is_rational());

    auto f5 = load_space_document(data("one_relator_a5b5.json"));
    CHECK(f5.field.characteristic() == 5);

    auto prod = load_space_document(data("product2_genus2.json"));
    CHECK(prod.space.is_product());
    CHECK(prod.space.dimension() == 4);

    // malformed facet list: error names the path
    std::string bad = temp_json(
        R"({"schema_version":1,"space":{"type":"simplicial","vertices":3,"facets":[[0,"x"]]}})",
        "badfacet");
    try {
        load_space_document(bad);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("$.space.facets[0][1]") != std::string::npos);
    }
    std::remove(bad.c_str());

    std::string nover = temp_json(R"({"space":{"type":"bundled","name":"torus"}})", "nover");
    CHECK_THROWS_AS(load_space_document(nover), SchemaError);
    std::remove(nover.c_str());

    std::string badtype = temp_json(
        R"({"schema_version":1,"space":{"type":"mystery"}})", "badtype");
    try {
        load_space_document(badtype);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("mystery") != std::string::npos);
    }
    std::remove(badtype.c_str());
}

TEST_CASE("cohomology command prints Betti profiles") {
    std::ostringstream out;
    CHECK(cmd_cohomology(data("torus.json"), std::nullopt, out) == 0);
    CHECK(out.str().find("betti: 1 2 1") != std::string::npos);

    std::ostringstream out2;
    CHECK(cmd_cohomology(data("genus2_presentation.json"), std::nullopt, out2) == 0);
    CHECK(out2.str().find("betti: 1 4 1") != std::string::npos);

    // characteristic override changes the profile of the one-relator space
    std::ostringstream o5, o0;
    CHECK(cmd_cohomology(data("one_relator_a5b5.json"), std::nullopt, o5) == 0);
    CHECK(o5.str().find("betti: 1 2 1") != std::string::npos);
    CHECK(cmd_cohomology(data("one_relator_a5b5.json"), 0, o0) == 0);
    CHECK(o0.str().find("betti: 1 1 0") != std::string::npos);

    std::ostringstream oe;
    CHECK(cmd_cohomology("no_such_file.json", std::nullopt, oe) == 1);
    CHECK(oe.str().find("error:") != std::string::npos);
}

TEST_CASE("ring command emits the structure constants") {
    std::ostringstream out;
    CHECK(cmd_ring(data("torus.json"), std::nullopt, out) == 0);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["ring"]["type"] == "explicit");
    CHECK(j["ring"]["dims"] == nlohmann::json::array({1, 2, 1}));
}

TEST_CASE("certify command: exit codes and certificate files") {
    std::ostringstream out;
    std::string cert_path = "cli_test_cert.json";
    CHECK(cmd_certify(data("genus2_presentation.json"), std::nullopt, cert_path, -1, out) == 0);
    CHECK(out.str().find("TC bounds: [4, 4] (exact)") != std::string::npos);
    {
        std::ifstream f(cert_path);
        REQUIRE(f.good());
        nlohmann::json cert;
        f >> cert;
        CHECK(replay_certificate(cert).ok);
        CHECK(cert["space"] == "genus2_presentation");
    }
    std::remove(cert_path.c_str());

    std::ostringstream out2;
    CHECK(cmd_certify(data("torus.json"), std::nullopt, "", -1, out2) == 2);
    CHECK(out2.str().find("TC bounds: [2, 4] (interval)") != std::string::npos);
    CHECK(out2.str().find("refusal:") != std::string::npos);

    // characteristic-2 override on data shaped for the special theorem
    std::ostringstream out3;
    CHECK(cmd_certify(data("product2_genus2.json"), 2, "", -1, out3) == 2);
    CHECK(out3.str().find("characteristic(F) = 2") != std::string::npos);

    std::ostringstream out4;
    CHECK(cmd_certify("missing.json", std::nullopt, "", -1, out4) == 1);
}

TEST_CASE("verify-core command") {
    std::ostringstream out;
    CHECK(cmd_verify_core(4, -1, out) == 0);
    CHECK(out.str().find("all checks passed") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);

    std::ostringstream capped;
    CHECK(cmd_verify_core(0, -1, capped) == 0);
    CHECK(capped.str().find("prism boundary identity k=0") != std::string::npos);
    CHECK(capped.str().find("k=1") == std::string::npos);

    for (int fault = 0; fault < 4; ++fault) {
        std::ostringstream broken;
        CHECK(cmd_verify_core(2, fault, broken) == 1);
        CHECK(broken.str().find("FAIL") != std::string::npos);
    }
}
