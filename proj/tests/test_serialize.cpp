#include "bchroma/constructions.hpp"
#include "bchroma/error.hpp"
#include "bchroma/graph_spec.hpp"
#include "bchroma/operators.hpp"
#include "bchroma/serialize.hpp"

#include <doctest.h>

using namespace bchroma;

TEST_CASE("certificates round-trip through JSON")
{
    auto g = star_product_graph(4, 3);
    auto cert = color_star_product(4, 3);
    auto j = certificate_to_json(g, cert);
    CHECK(j["schema"] == schema_version);
    CHECK(j["k"] == 5);
    CHECK(j["colors"]["(0,0)"] == cert.coloring[0]);
    CHECK(certificate_from_json(g, j) == cert);

    auto missing = j;
    missing["b_vertices"].erase("1");
    CHECK_THROWS_AS(certificate_from_json(g, missing), ParseError);
    auto unknown = j;
    unknown["colors"]["(9,9)"] = 1;
    CHECK_THROWS_AS(certificate_from_json(g, unknown), ParseError);
    CHECK_THROWS_AS(certificate_from_json(g, nlohmann::json::array()), ParseError);
    auto out_of_range = j;
    out_of_range["colors"]["(0,0)"] = 9;
    CHECK_THROWS_AS(certificate_from_json(g, out_of_range), ParseError);
}

TEST_CASE("reports carry the schema and budget")
{
    auto g = cartesian_product(complete(3), complete(3));
    auto s = b_chromatic_number(g);
    auto j = search_report_to_json(g, s);
    CHECK(j["schema"] == schema_version);
    CHECK(j["phi"] == 3);
    CHECK(j["per_k"]["4"] == "exhausted");
    CHECK(j["budget"]["max_nodes"] == Budget{}.max_nodes);
    CHECK(j["witness"]["k"] == 3);

    auto c = count_b_colorings(g, 3);
    auto cj = count_report_to_json(c);
    CHECK(cj["count"] == 12);
    CHECK(cj["mode"] == "exact-palette");
    CHECK(cj["total_assignments"] == 19683);
}

TEST_CASE("grids round-trip and render")
{
    auto grid = rook_grid_coloring(4);
    CHECK(grid_from_json(grid_to_json(grid)) == grid);
    auto text = grid_to_text(grid);
    CHECK(text.find("(1)") != std::string::npos);
    GridColoring partial(2, 2);
    partial.set(1, 1, 1);
    CHECK(grid_to_text(partial).find('.') != std::string::npos);
    CHECK(grid_from_json(grid_to_json(partial)) == partial);
    CHECK_THROWS_AS(grid_from_json(nlohmann::json{{"rows", 1}}), ParseError);
}

TEST_CASE("DOT output marks b-vertices")
{
    auto g = star(2);
    auto plain = to_dot(g);
    CHECK(plain.rfind("graph", 0) == 0);
    CHECK(plain.find("--") != std::string::npos);
    auto cert = color_star_product(2, 2);
    auto dot = to_dot(star_product_graph(2, 2), &cert);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    CHECK(dot.find("fillcolor") != std::string::npos);
}

TEST_CASE("graph expressions parse, print and build")
{
    auto spec = parse_graph_spec(" pow( prod(star:3, complete:2) , 2 )");
    CHECK(spec.kind == GraphSpec::Kind::Power);
    CHECK(print_graph_spec(spec) == "pow(prod(star:3,complete:2),2)");
    CHECK(parse_graph_spec(print_graph_spec(spec)) == spec);
    auto g = build_graph(spec);
    CHECK(g.vertex_count() == 8);
    CHECK(build_graph(parse_graph_spec("total(line(path:4))")).vertex_count() == 3 + 2);
    CHECK(build_graph(parse_graph_spec("cycle:5")).edge_count() == 5);

    try {
        (void)parse_graph_spec("prod(star:3 star:2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
    }
    CHECK_THROWS_AS(parse_graph_spec("tree:3"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("star:"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("star:3)"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("file:"), ParseError);
    CHECK(parse_graph_spec("prod(file:a b.txt,star:1)").args[0].path == "a b.txt");
}
