#include <nlohmann/json.hpp>

#include "doctest.h"
#include "hilbq/qspecial.hpp"
#include "hilbq/serialize.hpp"
#include "hilbq/theta.hpp"

using namespace hilbq;

TEST_CASE("qseries json round trip") {
    QSeries s = eta_power(-24, 10);
    const json j = qseries_to_json(s);
    CHECK(qseries_from_json(j) == s);
    // integers rendered as decimal strings
    CHECK(j.at("coeffs")[0].is_string());
    CHECK(j.at("offset_numerator").get<std::string>() == "-1");
    CHECK(j.at("offset_denominator").get<std::string>() == "1");

    // bytes round trip as well
    CHECK(qseries_from_json(json::parse(j.dump())) == s);
}

TEST_CASE("quadform json round trip") {
    const QuadraticForm q(3, {{25, -15, -25}, {0, 3, 8}, {0, 0, 7}});
    const json j = quadform_to_json(q);
    CHECK(quadform_from_json(j) == q);
    CHECK(j.at("rank").get<std::string>() == "3");
}

TEST_CASE("decomposition terms round trip") {
    auto terms = decompose_theta(QuadraticForm::diagonal({1}), 3, 12);
    const json j = terms_to_json(terms);
    auto back = terms_from_json(j);
    REQUIRE(back.size() == terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        CHECK(back[i].coefficient == terms[i].coefficient);
        CHECK(back[i].form == terms[i].form);
    }
}

TEST_CASE("malformed input is rejected") {
    json j = qseries_to_json(QSeries::one(2));
    j["coeffs"].push_back("5");
    CHECK_THROWS(qseries_from_json(j));

    json f = quadform_to_json(QuadraticForm::diagonal({1, 1}));
    f["coeffs"].push_back({"2", "1", "7"});  // i > j
    CHECK_THROWS(quadform_from_json(f));
}
