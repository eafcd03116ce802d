// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "tagclust/hit_set_view.hpp"
#include "tagclust/query_engine.hpp"

using namespace tagclust;
using namespace tagclust::testing;

namespace {

QueryOptions options(double threshold = 0.5, std::uint32_t floor = 1,
                     Linkage method = Linkage::single_link) {
    QueryOptions o;
    o.cluster.measure = Measure::cosine;
    o.cluster.method = method;
    o.cluster.threshold = threshold;
    o.cluster.support_floor = floor;
    return o;
}

std::set<std::string> urls(const QueryResult& r) {
    std::set<std::string> out;
    for (const auto& h : r.hits) out.insert(h.url);
    return out;
}

std::set<std::string> vertex_tags(const DisplayGraph& g) {
    std::set<std::string> out;
    for (const auto& v : g.vertices) out.insert(v.tag);
    return out;
}

}  // namespace

// =============================================================================
// Query construction and refinement
// =============================================================================

TEST(QueryTest, MakeQueryNormalizesAndDeduplicates) {
    Query q = make_query(" Recipe", {"Cooking", "cooking", "RECIPE"});
    EXPECT_EQ(q.base, "recipe");
    EXPECT_EQ(q.refinements, (std::vector<std::string>{"cooking"}));
    EXPECT_THROW(make_query("   "), std::invalid_argument);
}

TEST(QueryTest, RefineVertexAppendsOnce) {
    Query q = refine_vertex(make_query("recipe"), "cooking");
    EXPECT_EQ(q.base, "recipe");
    EXPECT_EQ(q.refinements, (std::vector<std::string>{"cooking"}));
    EXPECT_EQ(refine_vertex(q, "cooking"), q);
    EXPECT_EQ(refine_vertex(q, "recipe"), q);
}

TEST(QueryTest, RefineEdgeAppendsBothEndpoints) {
    Query q = refine_edge(make_query("recipe"), "cooking", "seafood");
    EXPECT_EQ(q.refinements, (std::vector<std::string>{"cooking", "seafood"}));
    Query partial = refine_edge(refine_vertex(make_query("recipe"), "seafood"), "cooking", "seafood");
    EXPECT_EQ(partial.refinements, (std::vector<std::string>{"seafood", "cooking"}));
    EXPECT_THROW(refine_edge(make_query("recipe"), "fish", "Fish"), std::invalid_argument);
}

TEST(QueryTest, RefineEdgeIsTwoVertexRefinements) {
    Query base = make_query("recipe", {"x"});
    EXPECT_EQ(refine_edge(base, "cooking", "x"), refine_vertex(refine_vertex(base, "cooking"), "x"));
    EXPECT_EQ(refine_edge(base, "a", "b"), refine_vertex(refine_vertex(base, "a"), "b"));
}

// =============================================================================
// execute on C5
// =============================================================================

TEST(ExecuteTest, C5BaseRecipe) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("recipe"), options());
    EXPECT_EQ(r.hit_count, 4u);
    EXPECT_EQ(urls(r), (std::set<std::string>{"b1", "b2", "b3", "b5"}));
}

TEST(ExecuteTest, C5RecipeAndSeafood) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("recipe", {"seafood"}), options());
    EXPECT_EQ(r.hit_count, 2u);
    EXPECT_EQ(urls(r), (std::set<std::string>{"b2", "b3"}));
}

TEST(ExecuteTest, C5EdgeRefinementLeavesOneHit) {
    FolksonomyIndex index = build_index(c5_corpus());
    Query q = refine_edge(make_query("recipe"), "cooking", "seafood");
    QueryResult r = execute(index, q, options());
    EXPECT_EQ(r.hit_count, 1u);
    EXPECT_EQ(urls(r), (std::set<std::string>{"b2"}));
}

TEST(ExecuteTest, UnknownTagGivesEmptyResult) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("nonexistent-tag"), options());
    EXPECT_EQ(r.hit_count, 0u);
    EXPECT_TRUE(r.hits.empty());
    EXPECT_TRUE(r.graph.empty());
    EXPECT_TRUE(r.graph.edges.empty());

    QueryResult partial = execute(index, make_query("recipe", {"nonexistent-tag"}), options());
    EXPECT_EQ(partial.hit_count, 0u);
}

TEST(ExecuteTest, C5SingleLinkClusterInsideHitSet) {
    // Within the hits of "recipe": a(recipe)=4, a(cooking)=2, a(seafood)=2, and
    // cosine(cooking, recipe) = cosine(recipe, seafood) = 2/sqrt(8); the tie
    // goes to the lexicographically first pair. Seafood is then tried against
    // seed "cooking" first: a=2, b=2, g=1 gives exactly 0.5.
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("recipe"), options(0.5, 2));
    ASSERT_TRUE(r.seeds.has_value());
    EXPECT_EQ(*r.seeds, (SeedPair{"cooking", "recipe"}));
    EXPECT_EQ(vertex_tags(r.graph), (std::set<std::string>{"cooking", "recipe", "seafood"}));
    EXPECT_EQ(r.graph.edges.size(), 2u);
    ASSERT_EQ(r.graph.edges[0].a, "cooking");
    EXPECT_EQ(r.graph.edges[0].b, "recipe");
    EXPECT_NEAR(r.graph.edges[0].phi, 2.0 / std::sqrt(8.0), 1e-12);
    EXPECT_EQ(r.graph.edges[1].b, "seafood");
    EXPECT_EQ(r.graph.edges[1].phi, 0.5);
}

TEST(ExecuteTest, NoSeedPairKeepsHitsAndQueryVertices) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("recipe", {"seafood"}), options(0.5, 50));
    EXPECT_EQ(r.hit_count, 2u);
    EXPECT_FALSE(r.seeds.has_value());
    EXPECT_EQ(vertex_tags(r.graph), (std::set<std::string>{"recipe", "seafood"}));
    EXPECT_TRUE(r.graph.edges.empty());
}

TEST(ExecuteTest, QueryTagsAlwaysRendered) {
    // "seafood" is in every hit but the seed pair lies elsewhere.
    Corpus corpus;
    for (int i = 0; i < 4; ++i)
        corpus.bookmarks.push_back(
            make_bookmark("u" + std::to_string(i), {{"seafood", 1}, {"x", 1}, {"y", 1}}));
    corpus.bookmarks.push_back(make_bookmark("u9", {{"seafood", 1}}));
    FolksonomyIndex index = build_index(std::move(corpus));
    QueryResult r = execute(index, make_query("seafood"), options(1.0, 1));
    ASSERT_TRUE(r.seeds.has_value());
    EXPECT_EQ(*r.seeds, (SeedPair{"x", "y"}));
    EXPECT_TRUE(vertex_tags(r.graph).count("seafood"));
}

TEST(ExecuteTest, CompleteLinkSeedBelowThresholdShowsQueryTagsOnly) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryResult r = execute(index, make_query("recipe"), options(0.9, 1, Linkage::complete_link));
    EXPECT_EQ(r.hit_count, 4u);
    EXPECT_EQ(vertex_tags(r.graph), (std::set<std::string>{"recipe"}));
}

TEST(ExecuteTest, PagingAfterRanking) {
    FolksonomyIndex index = build_index(c5_corpus());
    QueryOptions o = options();
    o.page_size = 3;
    QueryResult first = execute(index, make_query("recipe"), o);
    EXPECT_EQ(first.hit_count, 4u);
    ASSERT_EQ(first.hits.size(), 3u);
    EXPECT_EQ(first.hits[0].rank, 1u);
    o.page = 2;
    QueryResult second = execute(index, make_query("recipe"), o);
    ASSERT_EQ(second.hits.size(), 1u);
    EXPECT_EQ(second.hits[0].rank, 4u);
    o.page = 50;
    EXPECT_TRUE(execute(index, make_query("recipe"), o).hits.empty());
    o.page = 0;
    EXPECT_THROW(execute(index, make_query("recipe"), o), std::invalid_argument);
}

TEST(ExecuteTest, WdfItfUsesInitialHitSetStatistics) {
    // C5 "recipe" hits b1, b2, b3, b5: M = 8, m(recipe) = 4, ITF = 2.
    FolksonomyIndex index = build_index(c5_corpus());
    QueryOptions o = options();
    o.ranking = Ranking::wdf_itf;
    QueryResult base = execute(index, make_query("recipe"), o);
    ASSERT_EQ(base.hits.size(), 4u);
    std::map<std::string, double> score;
    for (const auto& h : base.hits) score[h.url] = h.score;
    EXPECT_NEAR(score["b1"], 2.0, 1e-12);
    EXPECT_NEAR(score["b5"], 2.0, 1e-12);
    EXPECT_NEAR(score["b2"], 2.0 * std::log(2.0) / std::log(3.0), 1e-12);

    // Refining by seafood keeps ITF(recipe) from the initial set; ITF(seafood)
    // = log2(8 / 2) + 1 = 3.
    QueryResult refined = execute(index, make_query("recipe", {"seafood"}), o);
    for (const auto& h : refined.hits) {
        if (h.url == "b3") EXPECT_NEAR(h.score, 2.0 + 3.0, 1e-12);
        if (h.url == "b2") EXPECT_NEAR(h.score, (2.0 + 3.0) * std::log(2.0) / std::log(3.0), 1e-12);
    }
}

TEST(ExecuteTest, RefineThenExecuteEqualsFreshQuery) {
    FolksonomyIndex index = build_index(c5_corpus());
    Query refined = refine_vertex(make_query("recipe"), "cooking");
    Query fresh = make_query("recipe", {"cooking"});
    EXPECT_EQ(to_json(execute(index, refined, options())), to_json(execute(index, fresh, options())));
}

// =============================================================================
// Properties on random corpora
// =============================================================================

TEST(QueryEnginePropertyTest, HitsMatchBruteForceAndShrinkUnderRefinement) {
    std::mt19937 rng(2718);
    for (int round = 0; round < 150; ++round) {
        Corpus corpus = random_corpus(rng);
        const std::vector<Bookmark> bookmarks = corpus.bookmarks;
        FolksonomyIndex index = build_index(std::move(corpus));
        std::uniform_int_distribution<std::size_t> pick(0, index.tag_count() - 1);

        Query q = make_query(index.tag_name(pick(rng)));
        std::vector<BookmarkId> previous = match_all(index, q);
        for (int step = 0; step < 3; ++step) {
            std::vector<std::size_t> expected = brute_filter(bookmarks, q.terms());
            std::vector<BookmarkId> got = match_all(index, q);
            ASSERT_EQ(got.size(), expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]);
            EXPECT_TRUE(std::includes(previous.begin(), previous.end(), got.begin(), got.end()));
            previous = got;

            if (step % 2 == 0)
                q = refine_vertex(q, index.tag_name(pick(rng)));
            else {
                auto a = pick(rng), b = pick(rng);
                if (a != b) q = refine_edge(q, index.tag_name(a), index.tag_name(b));
            }
        }
    }
}

TEST(QueryEnginePropertyTest, ViewCountsMatchFilteredSubCorpus) {
    std::mt19937 rng(161);
    for (int round = 0; round < 80; ++round) {
        Corpus corpus = random_corpus(rng);
        const std::vector<Bookmark> bookmarks = corpus.bookmarks;
        FolksonomyIndex index = build_index(std::move(corpus));
        std::uniform_int_distribution<std::size_t> pick(0, index.tag_count() - 1);
        Query q = make_query(index.tag_name(pick(rng)));

        HitSetView view(index, match_all(index, q));
        std::vector<const Bookmark*> hits;
        for (std::size_t i : brute_filter(bookmarks, q.terms())) hits.push_back(&bookmarks[i]);

        for (ViewTag x = 0; x < view.tag_count(); ++x) {
            for (ViewTag y = x + 1; y < view.tag_count(); ++y) {
                PairCounts c = brute_counts(hits, view.name(x), view.name(y));
                ASSERT_EQ(view.frequency(x), c.a);
                ASSERT_EQ(view.frequency(y), c.b);
                ASSERT_EQ(view.cooccurrence(x, y), c.g);
                EXPECT_NEAR(view.similarity(Measure::jaccard, x, y),
                            oracle_phi(Measure::jaccard, c.a, c.b, c.g), 1e-12);
            }
        }
    }
}

TEST(QueryEnginePropertyTest, RefinementOrderDoesNotMatter) {
    std::mt19937 rng(8080);
    for (int round = 0; round < 60; ++round) {
        FolksonomyIndex index = build_index(random_corpus(rng));
        if (index.tag_count() < 3) continue;
        std::uniform_int_distribution<std::size_t> pick(0, index.tag_count() - 1);
        std::string base = index.tag_name(pick(rng)), x = index.tag_name(pick(rng)),
                    y = index.tag_name(pick(rng));
        QueryResult r1 = execute(index, make_query(base, {x, y}), options(0.3));
        QueryResult r2 = execute(index, make_query(base, {y, x}), options(0.3));
        EXPECT_EQ(r1.hit_count, r2.hit_count);
        EXPECT_EQ(urls(r1), urls(r2));
        EXPECT_EQ(r1.graph, r2.graph);
    }
}
