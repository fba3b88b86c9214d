#include <doctest.h>

#include <sstream>

#include "airtype/catalog.hpp"

using namespace airtype;

TEST_CASE("builtin catalog holds the nine reference types sorted by length") {
    const Catalog& catalog = Catalog::builtin();
    REQUIRE(catalog.size() == 9);
    CHECK(catalog.entries().front().shortcut == "CM2");
    CHECK(catalog.entries().back().shortcut == "A-380");
    for (std::size_t i = 1; i < catalog.size(); ++i) {
        CHECK(catalog.entries()[i - 1].actual_length_m < catalog.entries()[i].actual_length_m);
    }
    CHECK(catalog.at("LM100J").actual_length_m == 35.0);
    CHECK(catalog.at("Bo787").actual_length_m == 57.0);
    CHECK(catalog.at("G-550").actual_length_m == 29.0);
    CHECK(catalog.at("G-650").actual_length_m == 30.0);
    CHECK(catalog.contains("A-320"));
    CHECK_FALSE(catalog.contains("B-52"));
    CHECK(catalog.find("nope") == nullptr);
    CHECK_THROWS_WITH_AS(catalog.at("nope"), doctest::Contains("unknown shortcut"),
                         ConfigurationError);
}

TEST_CASE("catalog construction validates entries") {
    CHECK_THROWS_AS(Catalog(std::vector<AircraftSpec>{}), ConfigurationError);
    CHECK_THROWS_AS(Catalog({{"Some Plane", "", 10.0}}), ConfigurationError);
    CHECK_THROWS_AS(Catalog({{"Some Plane", "SP", 0.0}}), ConfigurationError);
    CHECK_THROWS_AS(Catalog({{"Some Plane", "SP", -3.0}}), ConfigurationError);
    CHECK_THROWS_WITH_AS(Catalog({{"A", "X", 10.0}, {"B", "X", 20.0}}),
                         doctest::Contains("duplicate"), ConfigurationError);
}

TEST_CASE("catalog sorts ties by shortcut") {
    const Catalog catalog({{"Bravo", "BB", 10.0}, {"Alpha", "AA", 10.0}, {"Charlie", "CC", 5.0}});
    CHECK(catalog.entries()[0].shortcut == "CC");
    CHECK(catalog.entries()[1].shortcut == "AA");
    CHECK(catalog.entries()[2].shortcut == "BB");
}

TEST_CASE("catalog csv parsing") {
    std::istringstream in("name,shortcut,length_m\nSmall Jet,SJ,12.5\nBig Jet,BJ,70\n");
    const Catalog catalog = Catalog::from_csv(in);
    REQUIRE(catalog.size() == 2);
    CHECK(catalog.at("SJ").actual_length_m == 12.5);
    CHECK(catalog.at("BJ").full_name == "Big Jet");

    SUBCASE("round-trips through to_csv") {
        std::istringstream again(catalog.to_csv());
        const Catalog reparsed = Catalog::from_csv(again);
        CHECK(reparsed.entries() == catalog.entries());
    }
}

TEST_CASE("catalog csv rejects bad input") {
    const auto parse = [](const char* text) {
        std::istringstream in(text);
        return Catalog::from_csv(in);
    };
    CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty"), ConfigurationError);
    CHECK_THROWS_WITH_AS(parse("plane,code,len\nA,B,1\n"), doctest::Contains("header"),
                         ConfigurationError);
    CHECK_THROWS_WITH_AS(parse("name,shortcut,length_m\nonly two,fields\n"),
                         doctest::Contains("line 2"), ConfigurationError);
    CHECK_THROWS_WITH_AS(parse("name,shortcut,length_m\nA,B,tall\n"),
                         doctest::Contains("not a number"), ConfigurationError);
    CHECK_THROWS_AS(parse("name,shortcut,length_m\n"), ConfigurationError);  // no entries
    CHECK_THROWS_AS(Catalog::from_csv_file("/nonexistent/catalog.csv"), FileNotFoundError);
}

TEST_CASE("builtin catalog round-trips through csv text") {
    std::istringstream in(Catalog::builtin().to_csv());
    const Catalog reparsed = Catalog::from_csv(in);
    CHECK(reparsed.entries() == Catalog::builtin().entries());
}
