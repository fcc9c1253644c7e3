#include "doctest.h"
#include "helpers.hpp"
#include "report.hpp"
#include "smoothroots.h"

using namespace smoothroots;
using namespace smoothroots::testing;

namespace {

AnalysisRequest parse(const std::string& text) { return parse_request(text, {}); }

const std::string kIntro = R"({
  "kind": "polynomial", "degree": 2, "smoothness": 4, "order": 8,
  "coefficients": [0, {"taylor": [0, 0, "-1", "-1"]}]
})";

const std::string kKinkMatrix = R"({
  "kind": "matrix", "size": 2, "smoothness": 2, "order": 8,
  "entries": [
    [{"left": [0], "right": [0, 0, 0, "2"], "exact_zero": "left"}, {"taylor": [0, 1]}],
    [{"taylor": [0, 1]}, 0]
  ]
})";

} // namespace

TEST_CASE("parse_input accepts the documented encodings") {
    AnalysisRequest req = parse(R"({"kind":"polynomial","degree":2,"smoothness":4,"order":8,
        "coefficients":[{"taylor":[0]},{"taylor":[0,0,"1","1"]}]})");
    CHECK(req.degree == 2);
    CHECK(req.order == 8);
    CHECK(req.mode == Mode::exact);
    REQUIRE(req.points.size() == 1);
    CHECK(req.points[0].coefficients[1].right(2).equals(ex(1), 0.0));
    CHECK(req.points[0].coefficients[1].left(3).equals(ex(1), 0.0));

    // scalar shorthand 0 is the zero germ
    AnalysisRequest req2 = parse(kIntro);
    CHECK(req2.points[0].coefficients[0].is_identically_zero_flagged());
}

TEST_CASE("parse_input schema errors") {
    // left without right
    CHECK_THROWS_AS(parse(R"({"kind":"polynomial","degree":1,"order":4,
        "coefficients":[{"left":[0,1]}]})"),
                    Error);
    // non-square matrix entries
    CHECK_THROWS_AS(parse(R"({"kind":"matrix","size":2,"order":4,
        "entries":[[0,0],[0]]})"),
                    Error);
    // discontinuous germ
    CHECK_THROWS_AS(parse(R"({"kind":"polynomial","degree":1,"order":4,
        "coefficients":[{"left":[1],"right":[2]}]})"),
                    Error);
    // coefficient array longer than order + 1
    CHECK_THROWS_AS(parse(R"({"kind":"polynomial","degree":1,"order":2,
        "coefficients":[{"taylor":[0,1,2,3,4]}]})"),
                    Error);
    // declared smoothness above the jet class
    CHECK_THROWS_AS(parse(R"({"kind":"polynomial","degree":2,"smoothness":6,"order":8,
        "coefficients":[0,{"left":[0],"right":[0,0,1],"exact_zero":"left"}]})"),
                    Error);
}

TEST_CASE("report JSON round trip is lossless") {
    for (const std::string& fixture : {kIntro, kKinkMatrix}) {
        AnalysisRequest req = parse(fixture);
        Report report = run_analysis(req, Stage::verify);
        auto j1 = report_to_json(report);
        std::string text = j1.dump();
        auto parsed = nlohmann::ordered_json::parse(text);
        Report back = report_from_json(parsed);
        auto j2 = report_to_json(back);
        CHECK(j1 == j2);
        CHECK(j1.dump() == j2.dump());
    }
}

TEST_CASE("analysis pipeline emits the expected summary") {
    Report report = run_analysis(parse(kIntro), Stage::verify);
    CHECK(report.kind == "polynomial");
    REQUIRE(report.points.size() == 1);
    CHECK(report.points[0].cls.good);
    REQUIRE(report.combined.has_value());
    CHECK(report.combined->big_gamma == ExtInt(2));
    CHECK(report.combined->gamma == ExtInt(1));
    REQUIRE(report.certificate.has_value());
    CHECK(report.certificate->theorem_case == TheoremCase::good);
    CHECK(report.certificate->verified);
    CHECK(report.certificate->guaranteed_class == ExtInt(3)); // declared 4 - Gamma 2 + gamma 1
    REQUIRE(report.points[0].verify.has_value());
    CHECK(report.points[0].verify->pass);
}

TEST_CASE("multi-point requests combine indices") {
    // same curve data at two labeled analysis points
    std::string text = R"({
      "kind": "polynomial", "degree": 2, "smoothness": 6, "order": 8,
      "points": [
        {"t0": 0.0, "coefficients": [0, {"taylor": [0, 0, "-1", "-1"]}]},
        {"t0": 1.5, "coefficients": [0, {"taylor": [0, 0, 0, 0, "-1"]}]}
      ]
    })";
    Report report = run_analysis(parse(text), Stage::analyze);
    REQUIRE(report.points.size() == 2);
    REQUIRE(report.combined.has_value());
    // Gamma = max(2, 4) = 4; gamma = min(4-2+1, 4-4+2) = 2
    CHECK(report.combined->big_gamma == ExtInt(4));
    CHECK(report.combined->gamma == ExtInt(2));
}

TEST_CASE("renderers produce tree views") {
    Report report = run_analysis(parse(kIntro), Stage::analyze);
    std::string dot = render_dot(report);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rescale") != std::string::npos);
    std::string ascii = render_ascii(report);
    CHECK(ascii.find("(2, 1) rescale") != std::string::npos);
    CHECK(ascii.find("(1, 0) linear_leaf") != std::string::npos);
}

TEST_CASE("c api session lifecycle and statuses") {
    sr_session* session = nullptr;
    CHECK(sr_session_create("{not json", &session) == SR_ERROR_PARSE);
    CHECK(session == nullptr);

    REQUIRE(sr_session_create(kIntro.c_str(), &session) == SR_OK);
    CHECK(sr_session_report_json(session) == nullptr); // nothing ran yet
    CHECK(sr_session_set_option(session, "bogus", 1.0) == SR_ERROR_INVALID_ARGUMENT);
    CHECK(sr_session_set_option(session, "samples", 10) == SR_OK);
    CHECK(sr_session_run(session, "nope") == SR_ERROR_INVALID_ARGUMENT);
    REQUIRE(sr_session_run(session, "verify") == SR_OK);
    CHECK(sr_session_warning_count(session) == 0);
    std::string report = sr_session_report_json(session);
    CHECK(report.find("\"guaranteed_class\": 3") != std::string::npos);
    std::string dot = sr_session_render(session, "dot");
    CHECK(dot.find("digraph") != std::string::npos);
    sr_session_destroy(session);
}

TEST_CASE("c api surfaces hard errors as nonzero statuses") {
    // zero-to-truncation coefficient without a flag: undecidable valuation
    const char* undecidable = R"({"kind":"polynomial","degree":2,"order":6,
        "coefficients":[0,{"taylor":[0]}]})";
    sr_session* session = nullptr;
    REQUIRE(sr_session_create(undecidable, &session) == SR_OK);
    CHECK(sr_session_run(session, "analyze") == SR_ERROR_UNDECIDABLE);
    CHECK(std::string(sr_session_error_message(session)).find("exact-zero") != std::string::npos);
    sr_session_destroy(session);
}

TEST_CASE("point selection restricts the analysis") {
    std::string text = R"({
      "kind": "polynomial", "degree": 2, "smoothness": 6, "order": 8,
      "points": [
        {"t0": 0.0, "coefficients": [0, {"taylor": [0, 0, "-1", "-1"]}]},
        {"t0": 1.5, "coefficients": [0, {"taylor": [0, 0, 0, 0, "-1"]}]}
      ]
    })";
    sr_session* session = nullptr;
    REQUIRE(sr_session_create(text.c_str(), &session) == SR_OK);
    int index = 1;
    REQUIRE(sr_session_select_points(session, &index, 1) == SR_OK);
    REQUIRE(sr_session_run(session, "analyze") == SR_OK);
    auto doc = nlohmann::ordered_json::parse(std::string(sr_session_report_json(session)));
    CHECK(doc["points"].size() == 1);
    CHECK(doc["points"][0]["t0"].get<double>() == 1.5);
    CHECK(doc["combined"]["Gamma"].get<int>() == 4);
    sr_session_destroy(session);
}
