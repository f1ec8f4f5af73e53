#include "doctest.h"
#include "ranklevel/io.hpp"

using namespace ranklevel;

TEST_CASE("diagram text round trip") {
    YoungDiagram d({2, 1, 0}, 3, 2);
    CHECK(d.to_text() == "2,1,0");
    CHECK(parse_diagram(d.to_text(), 3, 2) == d);
    CHECK(parse_diagram("", 2, 3) == YoungDiagram::empty(2, 3));
    CHECK_THROWS(parse_diagram("1,x", 2, 3));
    CHECK_THROWS(parse_diagram("4", 1, 3));
}

TEST_CASE("weight system json round trip") {
    WeightSystem w(2, 3);
    w.push_back(YoungDiagram({3, 1}, 2, 3));
    w.push_back(YoungDiagram({2, 2}, 2, 3));
    std::string j = weight_system_to_json(w);
    CHECK(parse_weight_system(j, 0, 0) == w);
    // bare array form takes the rectangle from the caller
    CHECK(parse_weight_system(R"(["3,1","2,2"])", 2, 3) == w);
    CHECK(parse_weight_system("[]", 2, 3) == WeightSystem(2, 3));
    CHECK_THROWS(parse_weight_system(R"({"r":2,"l":3,"n":1,"diagrams":[]})", 0, 0));
}

TEST_CASE("instance and plan round trips") {
    WeightSystem w(2, 2);
    w.push_back(YoungDiagram({2, 2}, 2, 2));
    DualityInstance inst{2, 2, 1, -3, 2, w};
    DualityInstance back = parse_instance(instance_to_json(inst));
    CHECK(back.weights == inst.weights);
    CHECK(back.d == inst.d);
    CHECK(back.dd == inst.dd);
    CHECK(back.g == inst.g);

    NormalizationPlan plan{2, 3, {2, 0, 1}, {0, -1, 2}, -4};
    CHECK(parse_plan(plan_to_json(plan)) == plan);
}

TEST_CASE("identical values serialize identically") {
    WeightSystem w(2, 1);
    w.push_back(YoungDiagram({1, 0}, 2, 1));
    CHECK(weight_system_to_json(w) == weight_system_to_json(w));
}
