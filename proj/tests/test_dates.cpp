#include <catch2/catch_amalgamated.hpp>

#include "chronocost/dates.hpp"

using namespace chronocost;

TEST_CASE("ISO dates parse and format", "[dates]") {
    const Date d = parse_date("2013-10-01");
    CHECK(d == Date{2013, 10, 1});
    CHECK(to_string(d) == "2013-10-01");
    CHECK(parse_date("2016-02-29") == Date{2016, 2, 29});

    CHECK_THROWS_WITH(parse_date("2015-02-29"), Catch::Matchers::ContainsSubstring("2015-02-29"));
    CHECK_THROWS(parse_date("2013-13-01"));
    CHECK_THROWS(parse_date("2013-1-01"));
    CHECK_THROWS(parse_date("20131001"));
    CHECK_THROWS(parse_date(""));
}

TEST_CASE("serial round trip", "[dates]") {
    CHECK(to_serial(Date{1970, 1, 1}) == 0);
    for (std::int64_t s : {-100000, -1, 0, 1, 15000, 20000, 30000}) {
        CHECK(to_serial(from_serial(s)) == s);
    }
    CHECK(add_days(Date{2015, 12, 31}, 1) == Date{2016, 1, 1});
    CHECK(add_days(Date{2016, 2, 28}, 1) == Date{2016, 2, 29});
}

TEST_CASE("month arithmetic clamps the day", "[dates]") {
    CHECK(add_months(Date{2013, 10, 1}, 24) == Date{2015, 10, 1});
    CHECK(add_months(Date{2013, 1, 31}, 1) == Date{2013, 2, 28});
    CHECK(add_months(Date{2016, 1, 31}, 1) == Date{2016, 2, 29});
    CHECK(add_months(Date{2013, 3, 15}, -1) == Date{2013, 2, 15});
    CHECK(add_months(Date{2013, 1, 1}, -1) == Date{2012, 12, 1});
}

TEST_CASE("months_between counts whole months", "[dates]") {
    const Date start{2013, 10, 1};
    CHECK(months_between(start, Date{2013, 10, 1}) == 0);
    CHECK(months_between(start, Date{2013, 10, 31}) == 0);
    CHECK(months_between(start, Date{2013, 11, 1}) == 1);
    CHECK(months_between(start, Date{2015, 9, 30}) == 23);
    CHECK(months_between(start, Date{2015, 10, 1}) == 24);
    CHECK(months_between(start, Date{2013, 9, 30}) == -1);

    // Mid-month window starts.
    const Date mid{2013, 10, 15};
    CHECK(months_between(mid, Date{2013, 11, 14}) == 0);
    CHECK(months_between(mid, Date{2013, 11, 15}) == 1);

    // Clamped starts: 1-31 plus one month is 2-28, so 2-28 begins month 1.
    const Date eom{2013, 1, 31};
    CHECK(months_between(eom, Date{2013, 2, 27}) == 0);
    CHECK(months_between(eom, Date{2013, 2, 28}) == 1);
}
