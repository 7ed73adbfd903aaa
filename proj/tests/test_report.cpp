#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oddom/fixtures.hpp>
#include <oddom/report.hpp>

using namespace oddom;
using report::json;

TEST_CASE("vertex arrays")
{
    CHECK(report::vertex_array(VertexSet::of(6, {4, 0, 2})) == json::array({0, 2, 4}));
    CHECK(report::vertex_array(VertexSet::none(3)) == json::array());

    CHECK(report::read_vertex_array(json::array({3, 1}), 5, "set") == VertexSet::of(5, {1, 3}));
    CHECK(report::read_vertex_array(json::array(), 5, "set") == VertexSet::none(5));
    CHECK_THROWS_AS(report::read_vertex_array(json::array({5}), 5, "set"), report::FormatError);
    CHECK_THROWS_AS(report::read_vertex_array(json::array({-1}), 5, "set"), report::FormatError);
    CHECK_THROWS_AS(report::read_vertex_array(json::array({1, 1}), 5, "set"), report::FormatError);
    CHECK_THROWS_AS(report::read_vertex_array(json::array({1.5}), 5, "set"), report::FormatError);
    CHECK_THROWS_AS(report::read_vertex_array(json::array({"1"}), 5, "set"), report::FormatError);
    CHECK_THROWS_AS(report::read_vertex_array(json{{"a", 1}}, 5, "set"), report::FormatError);
}

TEST_CASE("extremal results")
{
    const auto g = complete_multipartite(2, 3);
    const auto k = report::extremal_json(g, kappa(g));
    CHECK(k["value"] == 4);
    CHECK(k["bounds"] == json::array({4, 4}));
    CHECK(k["witness"].is_array());
    CHECK(k["set"].size() == 4);

    const auto kp = report::extremal_json(g, kappa_prime(g));
    CHECK(kp["value"] == 3);
    CHECK(kp["set"].size() == 3);
    CHECK(kp["witness"].size() % 2 == 1);

    const auto q = report::extremal_json(g, kappa_q(g));
    CHECK(q["value"] == 4);
    CHECK(q["kappa"] == 4);
    CHECK(q["kappa_prime"] == 3);
    CHECK(q.contains("kappa_witness"));
    CHECK(q.contains("kappa_prime_witness"));

    // Keys come out sorted.
    const auto line = report::dump_line(k);
    CHECK(line.find("\"bounds\"") < line.find("\"set\""));
    CHECK(line.find("\"set\"") < line.find("\"value\""));
    CHECK(line.find("\"value\"") < line.find("\"witness\""));
    CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("certificates round-trip")
{
    const auto c4 = fixtures::cycle(4);
    for (Mask m = 0; m < 16; ++m) {
        const VertexSet b(4, m);
        const auto cert = certify(c4, b);
        const auto doc = report::certificate_json(b, cert);
        CHECK(doc["kind"] == (cert.kind == CertificateKind::wod ? "WOD" : "NON_WOD"));
        const auto back = report::read_certificate(json::parse(doc.dump()), 4);
        CHECK(back.set == b);
        CHECK(back.certificate == cert);
    }
}

TEST_CASE("malformed certificates are rejected")
{
    const json good = {{"kind", "WOD"}, {"set", {0, 2}}, {"witness", {1}}};
    CHECK_NOTHROW(report::read_certificate(good, 4));
    CHECK_THROWS_AS(report::read_certificate(json::array(), 4), report::FormatError);
    for (const char * key : {"kind", "set", "witness"}) {
        json missing = good;
        missing.erase(key);
        CHECK_THROWS_AS(report::read_certificate(missing, 4), report::FormatError);
    }
    json bad_kind = good;
    bad_kind["kind"] = "MAYBE";
    CHECK_THROWS_AS(report::read_certificate(bad_kind, 4), report::FormatError);
    bad_kind["kind"] = 1;
    CHECK_THROWS_AS(report::read_certificate(bad_kind, 4), report::FormatError);
    json out_of_range = good;
    out_of_range["witness"] = {7};
    CHECK_THROWS_AS(report::read_certificate(out_of_range, 4), report::FormatError);
}

TEST_CASE("perfect codes")
{
    CHECK(report::perfect_code_json(std::nullopt).is_null());
    CHECK(report::perfect_code_json(PerfectCode{VertexSet::of(8, {3, 4})}) == json::array({3, 4}));
}

TEST_CASE("trial records")
{
    const auto reports = sample_and_measure(8, 3, 1);
    const auto with = report::trial_json(reports[0], true);
    const auto without = report::trial_json(reports[0], false);
    CHECK(with.contains("elapsed_ms"));
    CHECK_FALSE(without.contains("elapsed_ms"));
    CHECK(without["trial"] == 0);
    CHECK(without["seed"] == reports[0].seed);
    CHECK(without["graph6"] == reports[0].graph6);
    CHECK(without["kappa_q"] == reports[0].kappa_q);

    const auto s = report::summary_json(summarise(reports, 0.811));
    REQUIRE(s.contains("summary"));
    CHECK(s["summary"]["count"] == 3);
    for (const char * key : {"below_threshold", "threshold_ratio", "fraction_below", "min_ratio", "median_ratio",
                             "max_ratio"})
        CHECK(s["summary"].contains(key));
}
