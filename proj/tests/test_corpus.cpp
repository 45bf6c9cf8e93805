#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "rootoid/corpus.hpp"
#include "rootoid/error.hpp"

using namespace rootoid;

TEST(Corpus, EveryEntryBuilds) {
  for (const auto& name : corpus_names()) {
    auto s = corpus_system(name);
    EXPECT_EQ(s.pr.check(), "") << name;
    EXPECT_TRUE(is_connected(*s.G)) << name;
  }
}

TEST(Corpus, UnknownName) {
  try {
    corpus_system("nonesuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
  }
}

TEST(Corpus, JsonInputs) {
  auto cox = system_from_json(nlohmann::json::parse(R"({"coxeter": {"m": [[1, 3], [3, 1]]}})"));
  EXPECT_EQ(cox.G->size(), 6);
  auto graph = system_from_json(nlohmann::json::parse(
      R"({"graph": {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}})"));
  EXPECT_EQ(graph.G->object_count(), 3);
  auto group = system_from_json(nlohmann::json::parse(
      R"({"group": {"generators": [{"name": "x", "perm": [1, 2, 3, 0]}, {"name": "y", "perm": [3, 0, 1, 2]}]}})"));
  EXPECT_EQ(group.G->size(), 4);
  EXPECT_TRUE(group.even);
  auto mesh = system_from_json(nlohmann::json::parse(R"({"mesh": {"ground": ["x", "y"], "L": [[], ["x"]]}})"));
  EXPECT_EQ(mesh.G->object_count(), 2);
  EXPECT_THROW(system_from_json(nlohmann::json::parse("[1]")), Error);
}

TEST(Corpus, ParseErrorsCarryPosition) {
  std::string path = testing::TempDir() + "bad_input.json";
  {
    std::ofstream out(path);
    out << "{\n  \"corpus\": \"A2\",\n  oops\n}\n";
  }
  try {
    load_system(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Corpus, GatesAreEnforced) {
  auto saved = gates();
  gates().morphisms = 10;
  EXPECT_THROW(corpus_system("A3"), Error);
  gates() = saved;
}
