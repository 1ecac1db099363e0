#include <doctest.h>

#include "chartmodal/chart_spec.hpp"
#include "chartmodal/error.hpp"
#include "support.hpp"

using namespace chartmodal;

namespace {

std::string violation_path(const std::string& doc) {
  try {
    parse_spec(doc);
  } catch (const SchemaViolation& e) {
    return e.path();
  }
  return "<none>";
}

const char* kBarHead = R"({"type":"bar","id":"b","axes":{"x":{"label":"X"},"y":{"label":"Y"}},)";

}  // namespace

TEST_CASE("single-group box document parses with null outliers as empty lists") {
  const ChartSpec spec = testsupport::load_fixture("highway_box.json");
  CHECK(spec.type() == PlotType::box);
  CHECK(spec.id == "myboxplot");
  CHECK(spec.title == "Highway Mileage by Car Class.");
  CHECK(spec.y_axis.label == "Car Class");
  CHECK(spec.x_axis.label == "Highway Milage");
  REQUIRE(spec.selector.has_value());
  const auto& groups = spec.data<BoxData>().groups;
  REQUIRE(groups.size() == 1);
  const BoxGroup expected{{}, 23, 24, 25, 26, 26, {}};
  CHECK(groups[0] == expected);
}

TEST_CASE("minimal single bar document") {
  const auto spec = parse_spec(R"({"type":"bar","id":"one","axes":{"x":{"label":"Cat","level":["A"]},"y":{"label":"N"}},"data":[5]})");
  CHECK(spec.data<BarData>().values == std::vector<double>{5});
  CHECK(spec.x_axis.levels == std::vector<std::string>{"A"});
  CHECK_FALSE(spec.title.has_value());
}

TEST_CASE("numeric levels become their shortest text") {
  const auto spec = testsupport::load_fixture("gdp_heat.json");
  CHECK(spec.x_axis.levels == std::vector<std::string>{"1977", "1982", "1987"});
}

TEST_CASE("garbage and empty documents are malformed") {
  CHECK_THROWS_AS(parse_spec(""), MalformedDocument);
  CHECK_THROWS_AS(parse_spec("{type: 'box'"), MalformedDocument);
  CHECK_THROWS_AS(parse_spec("[1,2"), MalformedDocument);
}

TEST_CASE("recognised but unsupported types are distinct from unknown ones") {
  for (const char* t : {"line", "hist", "stacked_bar", "dodged_bar", "point"}) {
    const std::string doc = std::string(R"({"type":")") + t + R"(","id":"a","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":[]})";
    CHECK_THROWS_AS(parse_spec(doc), UnknownPlotType);
  }
  CHECK(violation_path(R"({"type":"pie","id":"a","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":[]})") == "type");
}

TEST_CASE("schema violations name the offending field") {
  CHECK(violation_path(R"({"id":"a","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":[1]})") == "type");
  CHECK(violation_path(R"({"type":"bar","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":[1]})") == "id");
  CHECK(violation_path(R"({"type":"bar","id":"a","data":[1]})") == "axes");
  CHECK(violation_path(std::string(kBarHead) + R"("data":[1,"x"]})") == "data[1]");
  CHECK(violation_path(std::string(kBarHead) + R"("data":[]})") == "data");
  CHECK(violation_path(std::string(kBarHead) + R"("data":[1],"colour":"red"})") == "colour");
  CHECK(violation_path(R"({"type":"bar","id":"a","axes":{"x":{"label":"X","level":["a","b"]},"y":{"label":"Y"}},"data":[1]})") ==
        "axes.x.level");
}

TEST_CASE("box ordering and outlier placement are enforced per group") {
  const std::string head = R"({"type":"box","id":"b","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":[)";
  const std::string ok = R"({"min":1,"q1":2,"q2":3,"q3":4,"max":5})";
  CHECK(violation_path(head + R"({"min":23,"q1":26,"q2":25,"q3":24,"max":26}]})") == "data[0]");
  CHECK(violation_path(head + ok + R"(,{"lower_outlier":[3],"min":1,"q1":2,"q2":3,"q3":4,"max":5}]})") == "data[1]");
  CHECK(violation_path(head + R"({"upper_outlier":5,"min":1,"q1":2,"q2":3,"q3":4,"max":5}]})") == "data[0]");
  CHECK(violation_path(head + R"({"min":1,"q1":2,"q2":3,"q3":4}]})") == "data[0].max");
  const auto spec = parse_spec(head + R"({"lower_outlier":0.5,"min":1,"q1":2,"q2":3,"q3":4,"max":5,"upper_outlier":[6,7]}]})");
  CHECK(spec.data<BoxData>().groups[0].lower_outliers == std::vector<double>{0.5});
  CHECK(spec.data<BoxData>().groups[0].upper_outliers == std::vector<double>{6, 7});
}

TEST_CASE("heat rows must be rectangular and hold a value") {
  const std::string head = R"({"type":"heat","id":"h","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":)";
  CHECK(violation_path(head + "[[1,2],[3]]}") == "data[1]");
  CHECK(violation_path(head + "[[null]]}") == "data");
  const auto spec = parse_spec(head + "[[1,null],[null,4]]}");
  CHECK_FALSE(spec.data<HeatData>().cells[0][1].has_value());
}

TEST_CASE("scatter line must be strictly ascending in x and axes are continuous") {
  const std::string head = R"({"type":"scatter","id":"s","axes":{"x":{"label":"X"},"y":{"label":"Y"}},"data":)";
  CHECK_NOTHROW(parse_spec(head + R"({"points":[{"x":1,"y":2}],"smooth":[{"x":1,"y":1},{"x":2,"y":2}]}})"));
  CHECK(violation_path(head + R"({"points":[{"x":1,"y":2}],"smooth":[{"x":1,"y":1},{"x":1,"y":2}]}})").rfind("data.smooth", 0) == 0);
  CHECK(violation_path(R"({"type":"scatter","id":"s","axes":{"x":{"label":"X","level":["a"]},"y":{"label":"Y"}},"data":{"points":[{"x":1,"y":2}]}})") ==
        "axes.x.level");
}

TEST_CASE("scatter points group by x in ascending order") {
  using G = std::vector<XGroup>;
  const std::vector<Point> stacked = {{1, 2.1}, {1, 3.5}, {1, 4.0}};
  CHECK(group_scatter_points(stacked) == G{{1, {2.1, 3.5, 4.0}}});
  CHECK(group_scatter_points(std::vector<Point>{{2, 9}}) == G{{2, {9}}});
  CHECK(group_scatter_points(std::vector<Point>{{3, 1}, {1, 7}, {3, 2}}) == G{{1, {7}}, {3, {1, 2}}});
  CHECK(group_scatter_points({}).empty());
}

TEST_CASE("grouping preserves every point") {
  testsupport::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto spec = testsupport::random_spec(rng, PlotType::scatter);
    const auto& pts = spec.data<ScatterData>().points;
    const auto groups = group_scatter_points(pts);
    std::size_t total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      total += groups[g].ys.size();
      CHECK_FALSE(groups[g].ys.empty());
      if (g > 0) CHECK(groups[g - 1].x < groups[g].x);
    }
    CHECK(total == pts.size());
  }
}

TEST_CASE("serialize then parse is the identity") {
  testsupport::Rng rng(5);
  for (auto type : {PlotType::bar, PlotType::heat, PlotType::box, PlotType::scatter}) {
    for (int i = 0; i < 100; ++i) {
      const auto spec = testsupport::random_spec(rng, type);
      CHECK(parse_spec(serialize_spec(spec)) == spec);
    }
  }
  for (const char* f : {"highway_box.json", "diamonds_bar.json", "gdp_heat.json", "mileage_box.json", "mpg_scatter.json"}) {
    const auto spec = testsupport::load_fixture(f);
    CHECK(parse_spec(serialize_spec(spec, -1)) == spec);
  }
}
