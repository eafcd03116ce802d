// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/clustering.hpp"

#include <algorithm>
#include <tuple>

namespace tagclust {

std::string_view to_string(Linkage l) {
    switch (l) {
        case Linkage::single_link: return "single";
        case Linkage::complete_link: return "complete";
        case Linkage::group_average: return "group_average";
    }
    return "unknown";
}

std::optional<Linkage> parse_linkage(std::string_view name) {
    if (name == "single" || name == "single_link") return Linkage::single_link;
    if (name == "complete" || name == "complete_link") return Linkage::complete_link;
    if (name == "group_average") return Linkage::group_average;
    return std::nullopt;
}

void ClusterParams::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("threshold must lie in [0, 1]");
    if (support_floor == 0) throw std::invalid_argument("support_floor must be positive");
}

bool TagGraph::contains(std::string_view tag) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [tag](const TagVertex& v) { return v.tag == tag; });
}

std::vector<std::string> TagGraph::vertex_names() const {
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (const auto& v : vertices) names.push_back(v.tag);
    std::sort(names.begin(), names.end());
    return names;
}

const TagEdge* TagGraph::find_edge(std::string_view x, std::string_view y) const {
    if (y < x) std::swap(x, y);
    for (const auto& e : edges)
        if (e.a == x && e.b == y) return &e;
    return nullptr;
}

namespace {

struct Seeds {
    ViewTag a;
    ViewTag b;
};

Seeds resolve(const HitSetView& view, const SeedPair& seeds) {
    auto a = view.find(seeds.first);
    auto b = view.find(seeds.second);
    if (!a || !b) throw std::invalid_argument("seed tags must occur in the hit set");
    if (*a == *b) throw std::invalid_argument("seed tags must be distinct");
    return {*a, *b};
}

bool admits(const HitSetView& view, Measure m, ViewTag x, ViewTag y, double threshold,
            double& phi) {
    if (view.cooccurrence(x, y) == 0) return false;
    phi = view.similarity(m, x, y);
    return phi >= threshold;
}

/// Cluster under construction, in view ids.
class Builder {
public:
    Builder(const HitSetView& view, Seeds seeds, Measure m) : view_(view), in_(view.tag_count()) {
        add_vertex(seeds.a);
        add_vertex(seeds.b);
        add_edge(seeds.a, seeds.b, view.similarity(m, seeds.a, seeds.b));
    }

    bool has(ViewTag t) const { return in_[t]; }
    const std::vector<ViewTag>& members() const { return members_; }

    void add_vertex(ViewTag t) {
        in_[t] = true;
        members_.push_back(t);
    }

    void add_edge(ViewTag x, ViewTag y, double phi) { edges_.push_back({x, y, phi}); }

    TagGraph graph() const {
        TagGraph g;
        for (ViewTag t : members_) g.vertices.push_back({view_.name(t), view_.frequency(t)});
        for (const auto& [x, y, phi] : edges_) {
            const auto& nx = view_.name(x);
            const auto& ny = view_.name(y);
            if (nx < ny)
                g.edges.push_back({nx, ny, phi});
            else
                g.edges.push_back({ny, nx, phi});
        }
        return g;
    }

private:
    const HitSetView& view_;
    std::vector<bool> in_;
    std::vector<ViewTag> members_;
    std::vector<std::tuple<ViewTag, ViewTag, double>> edges_;
};

struct Expansion {
    TagGraph graph;
    double total = 0.0;
    std::size_t count = 0;
};

Expansion expand_single_link(const HitSetView& view, Seeds seeds, Measure m, double threshold) {
    Builder cluster(view, seeds, m);
    Expansion out;
    auto admit = [&](ViewTag from, ViewTag tag, double phi) {
        cluster.add_vertex(tag);
        cluster.add_edge(from, tag, phi);
        out.total += phi;
        ++out.count;
    };

    // Seed pass: each candidate is tried against seed A, then seed B.
    for (ViewTag tag : view.candidate_order()) {
        if (cluster.has(tag)) continue;
        double phi = 0.0;
        if (admits(view, m, seeds.a, tag, threshold, phi))
            admit(seeds.a, tag, phi);
        else if (admits(view, m, seeds.b, tag, threshold, phi))
            admit(seeds.b, tag, phi);
    }

    // Tags rejected by both seeds stay rejected by them, so only members
    // admitted after the seeds need expanding.
    for (std::size_t i = 2; i < cluster.members().size(); ++i) {
        ViewTag from = cluster.members()[i];
        for (ViewTag tag : view.neighbors(from)) {
            double phi = 0.0;
            if (!cluster.has(tag) && admits(view, m, from, tag, threshold, phi)) admit(from, tag, phi);
        }
    }
    out.graph = cluster.graph();
    return out;
}

}  // namespace

SeedPair select_seed_pair(const HitSetView& view, Measure measure, std::uint32_t support_floor) {
    if (support_floor == 0) support_floor = 1;
    std::optional<std::tuple<double, std::uint32_t, ViewTag, ViewTag>> best;
    for (ViewTag x = 0; x < view.tag_count(); ++x) {
        for (ViewTag y : view.neighbors(x)) {
            if (y <= x) continue;
            std::uint32_t g = view.cooccurrence(x, y);
            if (g < support_floor) continue;
            double phi = view.similarity(measure, x, y);
            if (!best) {
                best.emplace(phi, g, x, y);
                continue;
            }
            const auto& [bphi, bg, bx, by] = *best;
            bool better = phi != bphi ? phi > bphi
                          : g != bg   ? g > bg
                                      : std::pair(x, y) < std::pair(bx, by);
            if (better) best.emplace(phi, g, x, y);
        }
    }
    if (!best)
        throw NoSeedPair("no tag pair co-occurs in at least " + std::to_string(support_floor) +
                         " hits");
    return {view.name(std::get<2>(*best)), view.name(std::get<3>(*best))};
}

TagGraph single_link(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params) {
    params.validate();
    return expand_single_link(view, resolve(view, seeds), params.measure, params.threshold).graph;
}

TagGraph complete_link(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params) {
    params.validate();
    const Seeds ids = resolve(view, seeds);
    const Measure m = params.measure;
    double seed_phi = 0.0;
    if (!admits(view, m, ids.a, ids.b, params.threshold, seed_phi))
        throw SeedBelowThreshold("seed pair (" + seeds.first + ", " + seeds.second +
                                 ") does not reach the threshold");

    Builder cluster(view, ids, m);
    // Membership only grows, so a rejected candidate can never qualify later
    // and one pass reaches the fixed point. Candidates must touch seed A.
    for (ViewTag tag : view.neighbors(ids.a)) {
        if (cluster.has(tag)) continue;
        bool complete = std::all_of(cluster.members().begin(), cluster.members().end(),
                                    [&](ViewTag member) {
                                        double phi = 0.0;
                                        return admits(view, m, member, tag, params.threshold, phi);
                                    });
        if (complete) cluster.add_vertex(tag);
    }

    TagGraph graph = cluster.graph();
    graph.edges.clear();
    const auto& members = cluster.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& x = view.name(members[i]);
            const auto& y = view.name(members[j]);
            double phi = view.similarity(m, members[i], members[j]);
            graph.edges.push_back(x < y ? TagEdge{x, y, phi} : TagEdge{y, x, phi});
        }
    }
    return graph;
}

std::optional<double> group_average_threshold(const HitSetView& view, const SeedPair& seeds,
                                              const ClusterParams& params) {
    params.validate();
    const Seeds ids = resolve(view, seeds);
    Expansion first = expand_single_link(view, ids, params.measure, params.threshold);
    if (first.count == 0) return std::nullopt;
    double threshold = first.total / static_cast<double>(first.count);
    double seed_phi = view.similarity(params.measure, ids.a, ids.b);
    if (seed_phi < threshold) threshold = seed_phi;
    return threshold;
}

TagGraph group_average(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params) {
    auto threshold = group_average_threshold(view, seeds, params);
    if (!threshold) return Builder(view, resolve(view, seeds), params.measure).graph();
    return expand_single_link(view, resolve(view, seeds), params.measure, *threshold).graph;
}

TagGraph grow_cluster(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params) {
    switch (params.method) {
        case Linkage::single_link: return single_link(view, seeds, params);
        case Linkage::complete_link: return complete_link(view, seeds, params);
        case Linkage::group_average: return group_average(view, seeds, params);
    }
    throw std::invalid_argument("unknown clustering method");
}

}  // namespace tagclust
