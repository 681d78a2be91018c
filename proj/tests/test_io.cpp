#include <gtest/gtest.h>

#include "support.hpp"

using namespace wsat;
using namespace testing_support;

TEST(HypergraphJson, RoundTripPartitioned) {
  const auto h = complete_multipartite(2, {2, 3});
  const auto j = to_json(h);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["parts"], Json::parse("[[0,1],[2,3,4]]"));
  EXPECT_EQ(j["edges"][0], Json::parse("[0,2]"));
  EXPECT_EQ(j["edges"][1], Json::parse("[1,2]"));  // colex
  EXPECT_EQ(hypergraph_from_json(j), h);
}

TEST(HypergraphJson, RoundTripPlain) {
  const auto g = Hypergraph(2, low_bits(5), {mask_of({0, 4})});
  const auto j = to_json(g);
  EXPECT_TRUE(j["parts"].is_null());
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(hypergraph_from_json(j), g);
  const auto sparse = Hypergraph(2, mask_of({1, 3, 6}), {mask_of({1, 6})});
  EXPECT_EQ(hypergraph_from_json(to_json(sparse)), sparse);
}

TEST(HypergraphJson, SpecFormWithoutN) {
  const auto g = hypergraph_from_json(Json::parse(R"({"q":2,"parts":null,"edges":[[1,2],[0,1]]})"));
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Mask>{mask_of({0, 1}), mask_of({1, 2})}));
}

TEST(HypergraphJson, Errors) {
  for (const char* bad : {R"([1,2])", R"({"edges":[]})", R"({"q":2})", R"({"q":2,"edges":[[0,0]]})", R"({"q":2,"edges":[[0,1,2]]})",
                          R"({"q":2,"edges":[[0,"a"]]})", R"({"q":2,"parts":[[0],[0]],"edges":[]})", R"({"q":2,"edges":[[0,1],[1,0]]})"})
    EXPECT_THROW(hypergraph_from_json(Json::parse(bad)), InputError) << bad;
}

TEST(SequenceJson, RoundTrip) {
  std::vector<SaturationWitness> seq(2);
  seq[0].edge = mask_of({0, 3});
  seq[0].copy = mask_of({0, 1, 3, 4});
  seq[1].edge = mask_of({2, 5});
  seq[1].copy = mask_of({1, 2, 4, 5});
  const auto j = to_json(seq);
  EXPECT_EQ(j["sequence"][0]["edge"], Json::parse("[0,3]"));
  EXPECT_EQ(sequence_from_json(j), seq);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"seq":[]})")), InputError);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"sequence":[{"edge":[0,1]}]})")), InputError);
}

TEST(Files, MissingFileIsInputError) { EXPECT_THROW(read_json_file("/nonexistent/x.json"), InputError); }
