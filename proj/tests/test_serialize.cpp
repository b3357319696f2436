#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "genusq/serialize.hpp"

using namespace genusq;

TEST_CASE("compute bundle passes its own verification on anchors") {
    for (auto [p, a] : {std::pair<u64, u64>{17, 13}, {5, 11}, {2, 7},
                        {2, 119}, {41, 138}, {13, 17}}) {
        ComputeResult r = compute_all(p, a);
        CHECK(r.all_ok());
    }
}

TEST_CASE("text report ends with the E(K) line") {
    std::string t1 = render_text(compute_all(17, 13));
    CHECK(t1.find("K = Q(sqrt(13*eps*sqrt(17)))") == 0);
    CHECK(t1.find("E(K) = K(sqrt(13))\n") == t1.size() - 19);
    CHECK(t1.find("rank = 1") != std::string::npos);

    std::string t2 = render_text(compute_all(5, 11));
    CHECK(t2.rfind("E(K) = K\n") == t2.size() - 9);

    std::string t3 = render_text(compute_all(2, 119));
    CHECK(t3.find("E(K) = K(sqrt(17), sqrt(5+4*sqrt(2)))") != std::string::npos);
}

TEST_CASE("json round-trips byte identically") {
    for (auto [p, a] : {std::pair<u64, u64>{17, 13}, {5, 11}, {2, 119},
                        {41, 138}, {17, 26}}) {
        std::string s = render_json(compute_all(p, a));
        auto parsed = nlohmann::ordered_json::parse(s);
        CHECK(parsed.dump(2) + "\n" == s);
    }
}

TEST_CASE("json encodes unbounded values as strings and structure as scalars") {
    auto j = nlohmann::ordered_json::parse(render_json(compute_all(17, 13)));
    CHECK(j["p"] == "17");
    CHECK(j["a"] == "13");
    CHECK(j["rank"] == 1);  // structural count stays a number
    CHECK(j["field"]["lambda"] == 1);
    CHECK(j["field"]["class_number"] == "1");
    CHECK(j["field"]["eps"]["u"] == "4");
    CHECK(j["field"]["eps"]["den"] == 1);
    CHECK(j["field"]["primes"][0]["q"] == "13");
    CHECK(j["field"]["primes"][0]["solution"]["x"] == "9");
    CHECK(j["discriminant"]["absolute"] == "830297");
    CHECK(j["discriminant"]["t"] == 3);
    CHECK(j["hilbert_generators"][0] == "sqrt(13)");
    CHECK(j["verification"]["all_ok"] == true);
    CHECK(j["verification"]["rank_check"]["e_exact"] == true);
    CHECK(j["field"]["i0"].is_null());
    CHECK(j["field"]["j0"] == 1);
}

TEST_CASE("radicand json shapes") {
    auto j = nlohmann::ordered_json::parse(render_json(compute_all(5, 66)));
    // genus radicands of (5, 66): rational 33 and the monomial 11*eps*sqrt(5)
    auto rads = j["genus"]["radicands"];
    REQUIRE(rads.size() == 2);
    CHECK(rads[0].is_string());  // rationals are bare decimal strings
    CHECK(rads[0] == "33");
    REQUIRE(rads[1].is_object());
    CHECK(rads[1]["c"] == "11");
    CHECK(rads[1]["eps"] == 1);
    CHECK(rads[1]["sqrtp"] == 1);

    auto j2 = nlohmann::ordered_json::parse(render_json(compute_all(2, 119)));
    auto h2 = j2["hilbert"]["radicands"];
    REQUIRE(h2.size() == 2);
    REQUIRE(h2[1].is_object());
    CHECK(h2[1]["u"] == "5");
    CHECK(h2[1]["v"] == "4");
    CHECK(h2[1]["den"] == 1);

    // Narrow factors carry signs: -7 serializes with the sign in the string.
    auto n2 = j2["narrow_product"]["radicands"];
    CHECK(n2[0].is_string());
    CHECK(n2[0] == "-7");
}

TEST_CASE("dyadic and unit radicands are annotated, not failed") {
    ComputeResult r = compute_all(41, 138);  // hilbert set {2, 69, 41+8*sqrt(41)}
    REQUIRE(r.unramified.size() == 3);
    CHECK_FALSE(r.unramified[0].applicable);  // sqrt(2)
    CHECK(r.unramified[0].ok());
    CHECK(r.unramified[0].note.find("dyadic") != std::string::npos);
    CHECK(r.unramified[1].applicable);
    CHECK(r.unramified[1].ok());
    CHECK(r.all_ok());

    ComputeResult r2 = compute_all(13, 17);  // hilbert set {17, eps}
    REQUIRE(r2.unramified.size() == 2);
    CHECK(r2.unramified[1].applicable);
    CHECK(r2.unramified[1].report.unit_criterion);
    CHECK(r2.unramified[1].note.find("unit") != std::string::npos);
}

TEST_CASE("display names") {
    CHECK(radicand_display(Radicand::rational(cpp_int(13), 17)) == "sqrt(13)");
    CHECK(radicand_display(Radicand::unit_monomial(1, 1, 0, 13)) == "sqrt(eps)");
    CHECK(radicand_display(Radicand::quad(QuadElem(5, 4, 1, 2))) ==
          "sqrt(5+4*sqrt(2))");
}
