// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file corpus.hpp
 * @brief Bookmark corpus ingestion (JSONL) and the immutable folksonomy index.
 *
 * A corpus line looks like
 *
 *     {"url": "https://...", "title": "optional", "tags": {"recipe": 3, "fish": 1}}
 *
 * or, for single-user exports, {"url": "...", "tags": ["recipe", "fish"]}.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tagclust {

using BookmarkId = std::uint32_t;
using TagId = std::uint32_t;

struct Bookmark {
    std::string url;
    std::optional<std::string> title;
    /// Tag -> number of users that assigned it to this resource.
    std::map<std::string, int> tag_counts;

    /// Total tag tokens on the resource (sum of all counts).
    int total_tags() const;
    /// 0 when the tag is absent.
    int count_of(std::string_view tag) const;
};

struct Corpus {
    std::vector<Bookmark> bookmarks;
    std::size_t duplicates_dropped = 0;
    /// Records whose tags all normalized to empty.
    std::size_t malformed_dropped = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// NFC, trimmed, lowercased. May return an empty string.
std::string normalize_tag(std::string_view raw);

Corpus load_corpus(std::istream& in);
Corpus load_corpus(std::string_view text);
/// Throws std::system_error when the file cannot be opened.
Corpus load_corpus_file(const std::filesystem::path& path);

/**
 * Posting lists and pairwise co-occurrence counts over one corpus.
 *
 * Tags are interned into dense ids in lexicographic order, so TagId order
 * equals string order. Posting lists are sorted ascending. Only pairs that
 * co-occur in at least one bookmark are materialized.
 */
class FolksonomyIndex {
public:
    FolksonomyIndex() = default;
    explicit FolksonomyIndex(Corpus corpus);

    const Corpus& corpus() const noexcept { return corpus_; }
    std::span<const Bookmark> bookmarks() const noexcept { return corpus_.bookmarks; }
    const Bookmark& bookmark(BookmarkId id) const { return corpus_.bookmarks.at(id); }

    std::span<const std::string> tag_universe() const noexcept { return tags_; }
    std::size_t tag_count() const noexcept { return tags_.size(); }
    std::optional<TagId> find_tag(std::string_view tag) const;
    const std::string& tag_name(TagId id) const { return tags_.at(id); }

    std::span<const BookmarkId> postings(TagId id) const { return postings_.at(id); }
    /// Empty span for unknown tags.
    std::span<const BookmarkId> postings(std::string_view tag) const;

    /// Distinct tag ids of one bookmark, ascending.
    std::span<const TagId> tags_of(BookmarkId id) const { return bookmark_tags_.at(id); }

    std::uint32_t cooccurrence(TagId a, TagId b) const;
    std::uint32_t cooccurrence(std::string_view a, std::string_view b) const;
    /// Number of materialized (co-occurring) unordered pairs.
    std::size_t cooccurrence_pairs() const noexcept { return cooc_.size(); }

private:
    static std::uint64_t pair_key(TagId a, TagId b);

    Corpus corpus_;
    std::vector<std::string> tags_;
    std::vector<std::vector<BookmarkId>> postings_;
    std::vector<std::vector<TagId>> bookmark_tags_;
    std::unordered_map<std::uint64_t, std::uint32_t> cooc_;
};

FolksonomyIndex build_index(Corpus corpus);

}  // namespace tagclust
