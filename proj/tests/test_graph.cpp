#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opgraph/graph.hpp"
#include "support/test_support.hpp"

using namespace opgraph::graph;
using opgraph::extractor::Element;
using opgraph::extractor::ElementLabel;
using opgraph::extractor::SentenceExtraction;
using opgraph::extractor::SentenceRelation;

namespace {

SentenceExtraction sentence(std::size_t index, std::vector<Element> elements,
                            std::vector<std::string> phrases) {
  SentenceExtraction out;
  out.sentence_index = index;
  out.elements = std::move(elements);
  for (std::size_t i = 0; i + 1 < out.elements.size() && i < phrases.size(); ++i) {
    out.relations.push_back(SentenceRelation{out.elements[i].surface,
                                             out.elements[i + 1].surface, phrases[i], index});
  }
  return out;
}

}  // namespace

TEST_CASE("category colors are fixed") {
  CHECK(color_for(ElementLabel::Activity) == "red");
  CHECK(color_for(ElementLabel::Duration) == "blue");
  CHECK(color_for(ElementLabel::Resource) == "yellow");
  CHECK(color_for(ElementLabel::Other) == "grey");
}

TEST_CASE("empty extraction list builds an empty graph") {
  const OperationGraph g = build_graph({});
  CHECK(g.nodes.empty());
  CHECK(g.edges.empty());
}

TEST_CASE("nodes deduplicate by exact surface in first-occurrence order") {
  const std::vector<SentenceExtraction> xs = {
      sentence(0, {{"loading activity", ElementLabel::Activity},
                   {"2.8 min", ElementLabel::Duration}},
               {"takes"}),
      sentence(1, {{"One truck", ElementLabel::Resource},
                   {"loading activity", ElementLabel::Activity}},
               {"used in"}),
  };
  const OperationGraph g = build_graph(xs);
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.nodes[0].surface == "loading activity");
  CHECK(g.nodes[0].first_sentence_index == 0);
  CHECK(g.nodes[1].surface == "2.8 min");
  CHECK(g.nodes[2].surface == "One truck");
  CHECK(g.nodes[2].first_sentence_index == 1);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.nodes[g.edges[0].from].surface == "loading activity");
  CHECK(g.nodes[g.edges[0].to].surface == "2.8 min");
  CHECK(g.edges[0].phrase == "takes");
}

TEST_CASE("case-distinct surfaces stay distinct by default") {
  const std::vector<SentenceExtraction> xs = {
      sentence(0, {{"one truck", ElementLabel::Resource},
                   {"One truck", ElementLabel::Resource}},
               {"follows"}),
  };
  CHECK(build_graph(xs).nodes.size() == 2);

  BuildOptions fold;
  fold.normalize_case = true;
  const OperationGraph merged = build_graph(xs, fold);
  REQUIRE(merged.nodes.size() == 1);
  CHECK(merged.nodes[0].surface == "one truck");  // first occurrence wins
  REQUIRE(merged.edges.size() == 1);  // the relation folds into a self-loop
  CHECK(merged.edges[0].from == merged.edges[0].to);
}

TEST_CASE("repeated triples merge and accumulate sentence indices") {
  const std::vector<SentenceExtraction> xs = {
      sentence(0, {{"a", ElementLabel::Other}, {"b", ElementLabel::Other}}, {"takes"}),
      sentence(1, {{"a", ElementLabel::Other}, {"b", ElementLabel::Other}}, {"takes"}),
      sentence(2, {{"a", ElementLabel::Other}, {"b", ElementLabel::Other}}, {"loads"}),
  };
  const OperationGraph g = build_graph(xs);
  REQUIRE(g.nodes.size() == 2);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].phrase == "takes");
  CHECK(g.edges[0].sentence_indices == std::vector<std::size_t>{0, 1});
  CHECK(g.edges[1].phrase == "loads");
  CHECK(g.edges[1].sentence_indices == std::vector<std::size_t>{2});
}

TEST_CASE("label conflicts surface as warnings, first label wins") {
  const std::vector<SentenceExtraction> xs = {
      sentence(0, {{"pump", ElementLabel::Other}, {"crew", ElementLabel::Other}}, {"uses"}),
      sentence(1, {{"pump", ElementLabel::Resource}, {"crew", ElementLabel::Other}}, {"uses"}),
  };
  std::vector<Diagnostic> warnings;
  const OperationGraph g = build_graph(xs, {}, &warnings);
  REQUIRE(g.nodes.size() == 2);
  CHECK(g.nodes[0].label == ElementLabel::Other);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].severity == Severity::Warning);
  CHECK(warnings[0].code == "label-conflict");
  CHECK(warnings[0].subject == "node:pump");
}

TEST_CASE("dedup is idempotent over a doubled extraction list") {
  std::vector<SentenceExtraction> xs = {
      sentence(0, {{"loading activity", ElementLabel::Activity},
                   {"2.8 min", ElementLabel::Duration}},
               {"takes"}),
      sentence(1, {{"One truck", ElementLabel::Resource},
                   {"loading activity", ElementLabel::Activity}},
               {"used in"}),
  };
  std::vector<SentenceExtraction> doubled = xs;
  doubled.insert(doubled.end(), xs.begin(), xs.end());

  const OperationGraph once = build_graph(xs);
  const OperationGraph twice = build_graph(doubled);
  CHECK(testsupport::node_set(once) == testsupport::node_set(twice));
  CHECK(testsupport::edge_set(once) == testsupport::edge_set(twice));
  CHECK(once.nodes.size() == twice.nodes.size());
  CHECK(once.edges.size() == twice.edges.size());
}

TEST_CASE("find_node") {
  const OperationGraph g = build_graph(
      {sentence(0, {{"a", ElementLabel::Other}, {"b", ElementLabel::Other}}, {"x"})});
  CHECK(g.find_node("a") == std::size_t{0});
  CHECK(g.find_node("b") == std::size_t{1});
  CHECK_FALSE(g.find_node("c").has_value());
}

TEST_CASE("validate: empty graph has no findings") {
  CHECK(validate(OperationGraph{}).empty());
}

TEST_CASE("validate: a lone node is isolated") {
  OperationGraph g;
  g.nodes.push_back(GraphNode{"orphan", ElementLabel::Other, 0});
  const auto findings = validate(g);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].severity == Severity::Warning);
  CHECK(findings[0].code == "isolated-node");
  CHECK(findings[0].subject == "node:orphan");
}

TEST_CASE("validate: activity coverage hints") {
  // activity with both a duration and a resource: no findings
  const std::vector<SentenceExtraction> good = {
      sentence(0, {{"loading activity", ElementLabel::Activity},
                   {"2.8 min", ElementLabel::Duration}},
               {"takes"}),
      sentence(1, {{"One truck", ElementLabel::Resource},
                   {"loading activity", ElementLabel::Activity}},
               {"used in"}),
  };
  CHECK(validate(build_graph(good)).empty());

  // activity linked only to another activity: both hints fire
  const std::vector<SentenceExtraction> bare = {
      sentence(0, {{"hauling activity", ElementLabel::Activity},
                   {"dumping activity", ElementLabel::Activity}},
               {"precedes before"}),
  };
  const auto findings = validate(build_graph(bare));
  REQUIRE(findings.size() == 4);
  for (const auto& finding : findings) {
    CHECK(finding.severity == Severity::Info);
  }
  CHECK(findings[0].code == "activity-without-duration");
  CHECK(findings[1].code == "activity-without-resource");
}

TEST_CASE("validate never mutates the graph") {
  OperationGraph g = build_graph(
      {sentence(0, {{"a", ElementLabel::Other}, {"b", ElementLabel::Other}}, {"x"})});
  const auto nodes_before = testsupport::node_set(g);
  const auto edges_before = testsupport::edge_set(g);
  (void)validate(g);
  CHECK(testsupport::node_set(g) == nodes_before);
  CHECK(testsupport::edge_set(g) == edges_before);
}
