// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "tagclust/query_engine.hpp"

namespace tagclust {

using json = nlohmann::ordered_json;

std::string to_json(const QueryResult& result) {
    json out = json::object();
    out["query"] = {{"q", result.query.base}, {"and", result.query.refinements}};
    const auto& opt = result.options;
    out["params"] = {{"measure", to_string(opt.cluster.measure)},
                     {"method", to_string(opt.cluster.method)},
                     {"threshold", opt.cluster.threshold},
                     {"support_floor", opt.cluster.support_floor},
                     {"ranking", to_string(opt.ranking)},
                     {"page", opt.page},
                     {"page_size", opt.page_size}};
    out["hit_count"] = result.hit_count;

    json hits = json::array();
    for (const auto& hit : result.hits) {
        json h = {{"rank", hit.rank}, {"url", hit.url}, {"score", hit.score}};
        h["title"] = hit.title ? json(*hit.title) : json(nullptr);
        hits.push_back(std::move(h));
    }
    out["hits"] = std::move(hits);
    out["seed"] = result.seeds ? json::array({result.seeds->first, result.seeds->second})
                               : json(nullptr);
    out["graph"] = json::parse(to_json(result.graph));
    return out.dump();
}

std::string to_table(const QueryResult& result) {
    std::ostringstream out;
    out << "rank\tscore\turl\n";
    char score[64];
    for (const auto& hit : result.hits) {
        std::snprintf(score, sizeof score, "%.6f", hit.score);
        out << hit.rank << '\t' << score << '\t' << hit.url << '\n';
    }
    return out.str();
}

}  // namespace tagclust
