#include <doctest.h>

#include "wienerlab/families.hpp"
#include "wienerlab/serialize.hpp"

using namespace wienerlab;

TEST_SUITE("serialize") {
    TEST_CASE("canonical polynomial form") {
        const Poly p{0, 15, 30};
        CHECK(poly_to_json(p).dump() == R"({"coeffs":[0,15,30]})");
        CHECK(poly_from_json(poly_to_json(p)) == p);
        CHECK(poly_from_json(poly_to_json(Poly{})).is_zero());
    }

    TEST_CASE("wide integers become strings") {
        const Int safe = Int{1} << 53;
        const Int wide = safe + 1;
        CHECK(int_to_json(safe).is_number_integer());
        CHECK(int_to_json(wide) == "9007199254740993");
        CHECK(int_to_json(-wide) == "-9007199254740993");
        const Poly big{wide, Int{1} << 100};
        CHECK(poly_from_json(poly_to_json(big)) == big);
        CHECK(int_from_json(nlohmann::json(18446744073709551615ULL)) == Int{18446744073709551615ULL});
        CHECK_THROWS_AS(int_from_json(nlohmann::json(1.5)), ParseError);
        CHECK_THROWS_AS(int_from_json(nlohmann::json("12a")), ParseError);
        CHECK_THROWS_AS(poly_from_json(nlohmann::json::object()), ParseError);
    }

    TEST_CASE("report fields") {
        const auto j = report_to_json(analyze_graph(construct(FamilySpec::petersen())));
        CHECK(j["schema"] == "wienerlab/1");
        CHECK(j["coeffs"].dump() == "[0,15,30]");
        CHECK(j["index"] == 75);
        CHECK(j["diameter"] == 2);
        CHECK(j["ordered"]["coeffs"].dump() == "[10,30,60]");
        for (auto name : kPropertyNames) CHECK(j["checks"][std::string(name)] == true);
    }

    TEST_CASE("verdicts") {
        const auto j = verdict_to_json(analyze_sequence(Poly{1, 3, 2}, 0));
        CHECK(j["unimodal"] == true);
        CHECK(j["peak"].dump() == "[1,1]");
        CHECK(j["neg_rational_roots"].dump() == R"(["-1","-1/2"])");
        CHECK(j["first_violation"].is_null());
    }
}
