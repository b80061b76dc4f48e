#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rainbow/generators.hpp"
#include "rainbow/path.hpp"

using rainbow::EdgeColoredGraph;
using rainbow::HeteroPath;
using rainbow::SequenceDefect;

TEST_CASE("every permutation of a rainbow clique is heterochromatic") {
    const auto k4 = rainbow::rainbow_complete(4);
    std::vector<int> seq(4);
    std::iota(seq.begin(), seq.end(), 0);
    do {
        CHECK(rainbow::is_heterochromatic(k4, seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("defect classification") {
    EdgeColoredGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}});

    CHECK(rainbow::classify_sequence(g, std::vector<int>{}) == SequenceDefect::empty);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{7}) ==
          SequenceDefect::vertex_out_of_range);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{0, 1, 0}) ==
          SequenceDefect::repeated_vertex);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{0, 2}) == SequenceDefect::not_adjacent);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{0, 1, 2}) ==
          SequenceDefect::repeated_color);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{1, 2, 3}) == SequenceDefect::none);
    CHECK(rainbow::classify_sequence(g, std::vector<int>{2}) == SequenceDefect::none);

    CHECK(!rainbow::is_heterochromatic(g, std::vector<int>{0, 1, 2}));
    CHECK(rainbow::is_heterochromatic(g, std::vector<int>{1, 2, 3}));
}

TEST_CASE("from_sequence builds the color set; rejects invalid input") {
    const auto k4 = rainbow::rainbow_complete(4);
    const auto path = HeteroPath::from_sequence(k4, {2, 0, 3});
    CHECK(path.length() == 2);
    CHECK(path.head() == 2);
    CHECK(path.tail() == 3);
    CHECK(path.colors().size() == 2);
    CHECK(path.colors().contains(k4.edge_color(2, 0)));
    CHECK(path.colors().contains(k4.edge_color(0, 3)));

    CHECK_THROWS_WITH_AS(HeteroPath::from_sequence(k4, {0, 0}),
                         doctest::Contains("repeated vertex"), std::invalid_argument);

    const auto lone = HeteroPath::single(k4, 1);
    CHECK(lone.length() == 0);
    CHECK(lone.colors().empty());
}

TEST_CASE("edge color labels restore original labels in order") {
    EdgeColoredGraph g(3, {{0, 1, 42}, {1, 2, 7}});
    const auto path = HeteroPath::from_sequence(g, {0, 1, 2});
    CHECK(rainbow::edge_color_labels(g, path) == std::vector<std::int64_t>{42, 7});
}
