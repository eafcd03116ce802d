// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/query_engine.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "tagclust/hit_set_view.hpp"

namespace tagclust {

std::vector<std::string> Query::terms() const {
    std::vector<std::string> out;
    out.reserve(refinements.size() + 1);
    out.push_back(base);
    out.insert(out.end(), refinements.begin(), refinements.end());
    return out;
}

namespace {

void append_term(Query& query, std::string_view raw) {
    std::string tag = normalize_tag(raw);
    if (tag.empty()) throw std::invalid_argument("refinement tag is empty");
    if (tag == query.base) return;
    if (std::find(query.refinements.begin(), query.refinements.end(), tag) != query.refinements.end())
        return;
    query.refinements.push_back(std::move(tag));
}

}  // namespace

Query make_query(std::string_view base, const std::vector<std::string>& refinements) {
    Query query;
    query.base = normalize_tag(base);
    if (query.base.empty()) throw std::invalid_argument("query base term is empty");
    for (const auto& tag : refinements) append_term(query, tag);
    return query;
}

Query refine_vertex(Query query, std::string_view tag) {
    append_term(query, tag);
    return query;
}

Query refine_edge(Query query, std::string_view tag_a, std::string_view tag_b) {
    if (normalize_tag(tag_a) == normalize_tag(tag_b))
        throw std::invalid_argument("edge endpoints must be distinct tags");
    append_term(query, tag_a);
    append_term(query, tag_b);
    return query;
}

void QueryOptions::validate() const {
    cluster.validate();
    if (page == 0) throw std::invalid_argument("page must be >= 1");
    if (page_size == 0) throw std::invalid_argument("page_size must be >= 1");
}

std::vector<BookmarkId> match_all(const FolksonomyIndex& index, const Query& query) {
    std::vector<std::span<const BookmarkId>> lists;
    for (const auto& term : query.terms()) {
        auto postings = index.postings(term);
        if (postings.empty()) return {};
        lists.push_back(postings);
    }
    std::sort(lists.begin(), lists.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });

    std::vector<BookmarkId> hits(lists.front().begin(), lists.front().end());
    std::vector<BookmarkId> next;
    for (std::size_t i = 1; i < lists.size() && !hits.empty(); ++i) {
        next.clear();
        std::set_intersection(hits.begin(), hits.end(), lists[i].begin(), lists[i].end(),
                              std::back_inserter(next));
        hits.swap(next);
    }
    return hits;
}

QueryResult execute(const FolksonomyIndex& index, const Query& query, const QueryOptions& options) {
    options.validate();
    QueryResult result;
    result.query = query;
    result.options = options;

    std::vector<BookmarkId> hits = match_all(index, query);
    result.hit_count = hits.size();
    if (hits.empty()) return result;

    const std::vector<std::string> terms = query.terms();
    HitSetView view(index, std::move(hits));

    TagGraph graph;
    try {
        result.seeds = select_seed_pair(view, options.cluster.measure, options.cluster.support_floor);
        graph = grow_cluster(view, *result.seeds, options.cluster);
    } catch (const NoSeedPair&) {
        result.seeds.reset();
    } catch (const SeedBelowThreshold&) {
        graph = {};
    }
    for (const auto& term : terms) {
        if (!graph.contains(term)) graph.vertices.push_back({term, view.frequency(*view.find(term))});
    }
    result.graph = to_display(graph);

    const std::vector<HitRef> refs = view.hit_refs();
    std::vector<RankedHit> ranked;
    if (options.ranking == Ranking::absolute) {
        ranked = rank_absolute(refs, terms);
    } else {
        // Statistics of the initial (base-only) hit set, not of the refined one.
        std::vector<HitRef> initial;
        for (BookmarkId id : index.postings(query.base)) initial.push_back({id, &index.bookmark(id)});
        ranked = rank_wdf_itf(refs, terms, compute_stats(initial));
    }

    if (options.page - 1 > ranked.size() / options.page_size) return result;
    const std::size_t first = (options.page - 1) * options.page_size;
    for (std::size_t i = first; i < ranked.size() && i < first + options.page_size; ++i) {
        const Bookmark& b = index.bookmark(ranked[i].id);
        result.hits.push_back({ranked[i].rank, ranked[i].id, b.url, b.title, ranked[i].score});
    }
    return result;
}

}  // namespace tagclust
