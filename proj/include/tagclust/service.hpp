// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file service.hpp
 * @brief JSON-over-HTTP facade for corpus loading, querying and the entry tag cloud.
 *
 *   POST /corpus        JSONL body, replaces the active index
 *   GET  /query         q, and (repeated), measure, method, threshold,
 *                       ranking, page, page_size, support_floor
 *   GET  /tags/top      n
 *   GET  /healthz
 *
 * Queries are stateless: the whole refinement list travels in repeated
 * `and=` parameters. Handlers are plain member functions so they can be
 * exercised without a socket; HttpServer binds them to cpp-httplib.
 */

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "tagclust/corpus.hpp"
#include "tagclust/query_engine.hpp"

namespace tagclust {

struct ServiceConfig {
    std::string host = "0.0.0.0";
    int port = 8080;
    std::size_t max_corpus_bytes = 64u << 20;
    QueryOptions defaults;
    std::string cors_origin = "*";

    /// Throws std::invalid_argument.
    void validate() const;

    /// Overrides from LISTEN_PORT, MAX_CORPUS_BYTES, DEFAULT_THRESHOLD,
    /// DEFAULT_MEASURE, DEFAULT_METHOD, DEFAULT_RANKING and SUPPORT_FLOOR.
    static ServiceConfig from_env(ServiceConfig base);
    static ServiceConfig from_env();
};

struct HttpResponse {
    int status = 200;
    std::string body;
};

/// Repeated keys allowed (and=...).
using QueryParams = std::multimap<std::string, std::string>;

class Service {
public:
    explicit Service(ServiceConfig config);

    const ServiceConfig& config() const noexcept { return config_; }

    HttpResponse post_corpus(std::string_view body);
    HttpResponse get_query(const QueryParams& params) const;
    HttpResponse get_top_tags(const QueryParams& params) const;
    HttpResponse get_health() const;

    /// Null until a corpus has been loaded.
    std::shared_ptr<const FolksonomyIndex> snapshot() const;
    void replace_index(FolksonomyIndex index);

private:
    ServiceConfig config_;
    mutable std::shared_mutex mutex_;
    std::shared_ptr<const FolksonomyIndex> index_;
};

/// Parses the /query parameters on top of `defaults`. Throws FieldError.
struct ParsedQuery {
    Query query;
    QueryOptions options;
};

class FieldError : public std::invalid_argument {
public:
    FieldError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

ParsedQuery parse_query_params(const QueryParams& params, const QueryOptions& defaults);

class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or -1 on failure.
    int bind(const std::string& host, int port);
    /// Blocks until stop(). Returns false if the server could not run.
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace tagclust
