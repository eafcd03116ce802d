// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/viz_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace tagclust {

using json = nlohmann::ordered_json;

std::vector<int> min_max_bins(std::span<const double> values) {
    std::vector<int> bins(values.size(), kDegenerateBin);
    if (values.empty()) return bins;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo;
    const double max = *hi;
    if (max == min) return bins;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == max) {
            bins[i] = kBinCount;
            continue;
        }
        int bin = 1 + static_cast<int>(std::floor(9.0 * (values[i] - min) / (max - min)));
        bins[i] = std::clamp(bin, 1, kBinCount);
    }
    return bins;
}

std::vector<int> bin_vertices(const TagGraph& graph) {
    std::vector<double> freqs;
    freqs.reserve(graph.vertices.size());
    for (const auto& v : graph.vertices) freqs.push_back(v.freq);
    return min_max_bins(freqs);
}

std::vector<int> bin_edges(const TagGraph& graph) {
    std::vector<double> phis;
    phis.reserve(graph.edges.size());
    for (const auto& e : graph.edges) phis.push_back(e.phi);
    return min_max_bins(phis);
}

DisplayGraph to_display(const TagGraph& graph) {
    DisplayGraph dg;
    auto sizes = bin_vertices(graph);
    auto widths = bin_edges(graph);
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        dg.vertices.push_back({graph.vertices[i].tag, graph.vertices[i].freq, sizes[i]});
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        dg.edges.push_back({graph.edges[i].a, graph.edges[i].b, graph.edges[i].phi, widths[i]});
    std::sort(dg.vertices.begin(), dg.vertices.end(),
              [](const DisplayVertex& x, const DisplayVertex& y) { return x.tag < y.tag; });
    std::sort(dg.edges.begin(), dg.edges.end(), [](const DisplayEdge& x, const DisplayEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return dg;
}

namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_json(const DisplayGraph& dg) {
    json vertices = json::array();
    for (const auto& v : dg.vertices)
        vertices.push_back({{"tag", v.tag}, {"freq", v.freq}, {"size", v.size_bin}});
    json edges = json::array();
    for (const auto& e : dg.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"phi", round6(e.phi)}, {"width", e.width_bin}});
    json out = json::object();
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out.dump();
}

DisplayGraph display_graph_from_json(const std::string& text) {
    DisplayGraph dg;
    try {
        json in = json::parse(text);
        for (const auto& v : in.at("vertices"))
            dg.vertices.push_back(
                {v.at("tag").get<std::string>(), v.at("freq").get<std::uint32_t>(), v.at("size").get<int>()});
        for (const auto& e : in.at("edges"))
            dg.edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(),
                                e.at("phi").get<double>(), e.at("width").get<int>()});
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid display graph JSON: ") + e.what());
    }
    return dg;
}

std::string to_dot(const DisplayGraph& dg) {
    std::ostringstream out;
    out << "graph tagcluster {\n";
    for (const auto& v : dg.vertices)
        out << "  " << quote_dot(v.tag) << " [fontsize=" << 8 + 2 * v.size_bin << "];\n";
    char phi[32];
    for (const auto& e : dg.edges) {
        std::snprintf(phi, sizeof phi, "%.6f", e.phi);
        out << "  " << quote_dot(e.a) << " -- " << quote_dot(e.b) << " [penwidth=" << e.width_bin
            << ", label=\"" << phi << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tagclust
