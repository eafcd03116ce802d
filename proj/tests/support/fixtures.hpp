// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

// Shared corpora and brute-force oracles for the test suites. Nothing here
// goes through FolksonomyIndex or HitSetView: counts are recomputed by
// scanning bookmark tag maps directly.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tagclust/corpus.hpp"
#include "tagclust/similarity.hpp"

namespace tagclust::testing {

/// b1={recipe,cooking}, b2={recipe,cooking,seafood}, b3={recipe,seafood},
/// b4={cooking}, b5={recipe}; all counts 1.
inline const char* kC5Jsonl =
    R"({"url":"b1","title":"Weeknight dinners","tags":["recipe","cooking"]})"
    "\n"
    R"({"url":"b2","tags":["recipe","cooking","seafood"]})"
    "\n"
    R"({"url":"b3","tags":["recipe","seafood"]})"
    "\n"
    R"({"url":"b4","tags":["cooking"]})"
    "\n"
    R"({"url":"b5","tags":["recipe"]})"
    "\n";

inline Corpus c5_corpus() { return load_corpus(std::string_view(kC5Jsonl)); }

inline Bookmark make_bookmark(std::string url, std::map<std::string, int> tags) {
    Bookmark b;
    b.url = std::move(url);
    b.tag_counts = std::move(tags);
    return b;
}

struct RandomCorpusSpec {
    int max_bookmarks = 50;
    int max_tags = 20;
    int max_tags_per_bookmark = 6;
    int max_count = 3;
};

/// Random corpus with tags "t00".."t19" and urls "u0".."uN".
inline Corpus random_corpus(std::mt19937& rng, const RandomCorpusSpec& spec = {}) {
    std::uniform_int_distribution<int> n_bookmarks(1, spec.max_bookmarks);
    std::uniform_int_distribution<int> n_tags(2, spec.max_tags);
    const int bookmarks = n_bookmarks(rng);
    const int tags = n_tags(rng);
    std::uniform_int_distribution<int> per(1, std::min(spec.max_tags_per_bookmark, tags));
    std::uniform_int_distribution<int> pick(0, tags - 1);
    std::uniform_int_distribution<int> count(1, spec.max_count);

    Corpus corpus;
    for (int i = 0; i < bookmarks; ++i) {
        Bookmark b;
        b.url = "u" + std::to_string(i);
        const int k = per(rng);
        while (static_cast<int>(b.tag_counts.size()) < k) {
            char name[8];
            std::snprintf(name, sizeof name, "t%02d", pick(rng));
            b.tag_counts[name] = count(rng);
        }
        corpus.bookmarks.push_back(std::move(b));
    }
    return corpus;
}

inline bool has_tag(const Bookmark& b, const std::string& tag) { return b.tag_counts.count(tag) > 0; }

/// Indices of bookmarks carrying every tag.
inline std::vector<std::size_t> brute_filter(const std::vector<Bookmark>& bookmarks,
                                             const std::vector<std::string>& tags) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bookmarks.size(); ++i) {
        bool all = std::all_of(tags.begin(), tags.end(),
                               [&](const std::string& t) { return has_tag(bookmarks[i], t); });
        if (all) out.push_back(i);
    }
    return out;
}

struct PairCounts {
    std::uint64_t a = 0, b = 0, g = 0;
};

inline PairCounts brute_counts(const std::vector<const Bookmark*>& hits, const std::string& x,
                               const std::string& y) {
    PairCounts c;
    for (const Bookmark* b : hits) {
        bool hx = has_tag(*b, x), hy = has_tag(*b, y);
        c.a += hx;
        c.b += hy;
        c.g += hx && hy;
    }
    return c;
}

/// Direct textbook evaluation, written without sharing code with the kernel.
inline double oracle_phi(Measure m, double a, double b, double g) {
    switch (m) {
        case Measure::dice: return g / ((a + b) / 2.0);
        case Measure::cosine: return std::sqrt((g / a) * (g / b));
        case Measure::jaccard: {
            double union_size = a + b - g;
            return g / union_size;
        }
    }
    return -1.0;
}

/// The decimal a user typed, recovered from the shortest round-trip form of
/// the double (0.2 -> 1/5, not the binary value just above it).
inline boost::multiprecision::cpp_rational decimal_value(double x) {
    using boost::multiprecision::cpp_int;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    std::string text(buf, end);
    cpp_int digits = 0, scale = 1;
    bool fraction = false;
    for (char c : text) {
        if (c == '.') {
            fraction = true;
            continue;
        }
        digits = digits * 10 + (c - '0');
        if (fraction) scale *= 10;
    }
    return boost::multiprecision::cpp_rational(digits, scale);
}

/// Exact test of phi >= threshold in rational arithmetic.
inline bool oracle_admits(Measure m, std::uint64_t a, std::uint64_t b, std::uint64_t g,
                          double threshold) {
    using boost::multiprecision::cpp_rational;
    const cpp_rational t = decimal_value(threshold);
    const cpp_rational A(a), B(b), G(g);
    switch (m) {
        case Measure::dice: return 2 * G >= t * (A + B);
        case Measure::cosine: return G * G >= t * t * A * B;
        case Measure::jaccard: return G >= t * (A + B - G);
    }
    return false;
}

inline std::set<std::string> tags_in(const std::vector<const Bookmark*>& hits) {
    std::set<std::string> out;
    for (const Bookmark* b : hits)
        for (const auto& [t, c] : b->tag_counts) out.insert(t);
    return out;
}

/// Tags reachable from either seed in the graph of pairs with g >= 1 and
/// phi >= threshold.
inline std::set<std::string> brute_component(const std::vector<const Bookmark*>& hits, Measure m,
                                             double threshold, const std::string& seed_a,
                                             const std::string& seed_b) {
    std::set<std::string> tags = tags_in(hits);
    std::set<std::string> reached{seed_a, seed_b};
    std::vector<std::string> frontier{seed_a, seed_b};
    while (!frontier.empty()) {
        std::string u = frontier.back();
        frontier.pop_back();
        for (const auto& v : tags) {
            if (reached.count(v)) continue;
            PairCounts c = brute_counts(hits, u, v);
            if (c.g == 0) continue;
            if (oracle_admits(m, c.a, c.b, c.g, threshold)) {
                reached.insert(v);
                frontier.push_back(v);
            }
        }
    }
    return reached;
}

inline std::vector<const Bookmark*> pointers_to(const Corpus& corpus) {
    std::vector<const Bookmark*> out;
    for (const auto& b : corpus.bookmarks) out.push_back(&b);
    return out;
}

inline std::vector<BookmarkId> all_ids(const FolksonomyIndex& index) {
    std::vector<BookmarkId> ids(index.bookmarks().size());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace tagclust::testing
