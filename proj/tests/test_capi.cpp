// Exercises the shared library through its C interface only.
#include "doctest.h"

#include <string>

#include "volterra/volterra.h"

namespace {

struct Owned {
    char* s = nullptr;
    ~Owned() { vt_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

const char* kAllHalf = R"({"dimension": 4, "p": [
  {"i": 1, "j": 2, "value": "1/2"}, {"i": 1, "j": 3, "value": "1/2"}, {"i": 1, "j": 4, "value": "1/2"},
  {"i": 2, "j": 3, "value": "1/2"}, {"i": 2, "j": 4, "value": "1/2"}, {"i": 3, "j": 4, "value": "1/2"}]})";

}  // namespace

TEST_CASE("handles and documents") {
    CHECK(std::string(vt_version()) == "0.1.0");

    vt_algebra* alg = nullptr;
    REQUIRE(vt_algebra_from_json(kAllHalf, &alg) == VT_OK);
    CHECK(vt_algebra_dimension(alg) == 4);

    Owned derive;
    CHECK(vt_derive(alg, &derive.s) == VT_OK);
    CHECK(derive.str().find("\"dim\": 12") != std::string::npos);

    Owned cls;
    CHECK(vt_classify(alg, &cls.s) == VT_OK);
    CHECK(cls.str().find("\"case\": \"J\"") != std::string::npos);

    Owned local;
    CHECK(vt_localcheck(alg, 0, &local.s) == VT_OK);
    CHECK(local.str().find("\"equals_der\": true") != std::string::npos);

    Owned report;
    CHECK(vt_verify(alg, 5, &report.s) == VT_OK);
    CHECK(report.str().find("\"sample_seed\": 5") != std::string::npos);

    Owned spec;
    CHECK(vt_algebra_to_json(alg, &spec.s) == VT_OK);
    vt_algebra* again = nullptr;
    REQUIRE(vt_algebra_from_json(spec.s, &again) == VT_OK);
    Owned spec2;
    CHECK(vt_algebra_to_json(again, &spec2.s) == VT_OK);
    CHECK(spec.str() == spec2.str());

    vt_algebra_free(again);
    vt_algebra_free(alg);
    vt_algebra_free(nullptr);
}

TEST_CASE("error codes") {
    vt_algebra* alg = nullptr;
    CHECK(vt_algebra_from_json("{\"dimension\": 2,", &alg) == VT_PARSE_ERROR);
    CHECK(std::string(vt_last_error()).find("line 1") != std::string::npos);
    CHECK(vt_algebra_from_file("/nonexistent.json", &alg) == VT_PARSE_ERROR);
    CHECK(vt_algebra_from_json(nullptr, &alg) == VT_INVALID_ARGUMENT);

    REQUIRE(vt_algebra_from_json(R"({"dimension": 2, "p": [{"i": 1, "j": 2, "value": "3/2"}]})", &alg) == VT_OK);
    Owned violations;
    CHECK(vt_validate(alg, &violations.s) == VT_AXIOM_VIOLATION);
    CHECK(violations.str().find("nonnegativity of p_{12,2}") != std::string::npos);
    Owned derive;
    CHECK(vt_derive(alg, &derive.s) == VT_AXIOM_VIOLATION);
    CHECK(derive.s == nullptr);
    vt_algebra_free(alg);

    CHECK(vt_derive(nullptr, &derive.s) == VT_INVALID_ARGUMENT);
    CHECK(vt_generate("K", "generic", 1, &alg) == VT_INVALID_ARGUMENT);
    CHECK(vt_generate("C", "coincident", 1, &alg) == VT_INVALID_ARGUMENT);
    CHECK(vt_generate("A", "diagonal", 1, &alg) == VT_INVALID_ARGUMENT);
}

TEST_CASE("generation and suite") {
    vt_algebra* alg = nullptr;
    REQUIRE(vt_generate("G", "coincident", 3, &alg) == VT_OK);
    Owned derive;
    CHECK(vt_derive(alg, &derive.s) == VT_OK);
    CHECK(derive.str().find("\"dim\": 2") != std::string::npos);
    vt_algebra_free(alg);

    Owned summary;
    CHECK(vt_run_suite(2, 1, "C,J", "", &summary.s) == VT_OK);
    CHECK(summary.str().find("\"passed\": true") != std::string::npos);
    Owned bad;
    CHECK(vt_run_suite(2, 1, "Q", nullptr, &bad.s) == VT_INVALID_ARGUMENT);
    CHECK(vt_run_suite(2, 1, nullptr, "x..y", &bad.s) == VT_INVALID_ARGUMENT);
    CHECK(vt_run_suite(0, 1, "C", "", &bad.s) == VT_INVALID_ARGUMENT);
}
