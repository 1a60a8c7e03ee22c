#include <doctest.h>

#include "charfield/json_io.hpp"

using namespace charfield;
using namespace charfield::json_io;

TEST_CASE("class round trip") {
    for (i64 q : {3, 5, 7})
        for (Family fam : {Family::Sp, Family::SOodd, Family::SOeven})
            for (const auto& s : enumerate_classes(GroupSpec(fam, 2, q), 10)) {
                const json j = class_to_json(s);
                CHECK(class_from_json(j) == s);
                CHECK(class_from_json(json::parse(j.dump())) == s);
                CHECK(class_to_json(class_from_json(j)).dump() == j.dump());
            }
}

TEST_CASE("class parsing normalises orbits") {
    const json j = json::parse(R"({"family":"sp","n":1,"q":7,"orbits":[{"frac":"2/4","mult":2},{"frac":"0/1","mult":1}],"minus_type":1})");
    const SemisimpleClass s = class_from_json(j);
    CHECK(class_to_json(s).dump() ==
          R"({"family":"sp","minus_type":1,"n":1,"orbits":[{"frac":"0/1","mult":1},{"frac":"1/2","mult":2}],"plus_type":null,"q":7,"twist":1})");
}

TEST_CASE("malformed classes") {
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"family":"sp","n":1})")), std::invalid_argument);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"family":"xx","n":1,"q":7,"orbits":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"family":"sp","n":"one","q":7,"orbits":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"family":"sp","n":1,"q":7,"orbits":[{"frac":"1/3","mult":1}]})")),
                    std::invalid_argument);
}

TEST_CASE("field output") {
    const GroupSpec g(Family::Sp, 1, 7);
    const SemisimpleClass s(g, {{Frac(0, 1), 1}, {Frac(1, 2), 2}}, 1);
    const json f = field_to_json(char_field(g, s));
    CHECK(f["degree"] == 2);
    CHECK(f["adjoin_sqrt_omega_p"] == true);
    CHECK(f["real"] == false);
    CHECK(f["d"] == 2);
}
