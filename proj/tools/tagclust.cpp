// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

// tagclust: index, query, export and serve tag-clustered bookmark corpora.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tagclust/corpus.hpp"
#include "tagclust/query_engine.hpp"
#include "tagclust/service.hpp"

namespace {

using namespace tagclust;

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

struct QueryFlags {
    std::string corpus;
    std::string q;
    std::vector<std::string> and_terms;
    std::string measure;
    std::string method;
    double threshold = 0.5;
    std::uint32_t support_floor = 50;
    std::string ranking;
    std::size_t page = 1;
    std::size_t page_size = kDefaultPageSize;
    std::string format = "json";
};

void add_query_flags(CLI::App* cmd, QueryFlags& flags, const QueryOptions& defaults) {
    flags.measure = std::string(to_string(defaults.cluster.measure));
    flags.method = std::string(to_string(defaults.cluster.method));
    flags.threshold = defaults.cluster.threshold;
    flags.support_floor = defaults.cluster.support_floor;
    flags.ranking = std::string(to_string(defaults.ranking));
    flags.page_size = defaults.page_size;

    cmd->add_option("--corpus", flags.corpus, "JSONL corpus file")->required();
    cmd->add_option("--q", flags.q, "Base query tag")->required();
    cmd->add_option("--and", flags.and_terms, "Refinement tag (repeatable)");
    cmd->add_option("--measure", flags.measure, "Similarity measure")
        ->check(CLI::IsMember({"dice", "cosine", "jaccard"}))
        ->capture_default_str();
    cmd->add_option("--method", flags.method, "Clustering method")
        ->check(CLI::IsMember({"single", "complete", "group_average"}))
        ->capture_default_str();
    cmd->add_option("--threshold", flags.threshold, "Similarity threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--support-floor", flags.support_floor, "Minimum co-occurrence of the seed pair")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--ranking", flags.ranking, "Hit ranking")
        ->check(CLI::IsMember({"absolute", "wdf_itf"}))
        ->capture_default_str();
    cmd->add_option("--page", flags.page, "Result page (1-based)")->check(CLI::PositiveNumber);
    cmd->add_option("--page-size", flags.page_size, "Hits per page")->check(CLI::PositiveNumber);
}

QueryOptions to_options(const QueryFlags& flags) {
    QueryOptions options;
    options.cluster.measure = *parse_measure(flags.measure);
    options.cluster.method = *parse_linkage(flags.method);
    options.cluster.threshold = flags.threshold;
    options.cluster.support_floor = flags.support_floor;
    options.ranking = *parse_ranking(flags.ranking);
    options.page = flags.page;
    options.page_size = flags.page_size;
    return options;
}

/// Loads the corpus and runs the query; returns an exit code on failure.
int run_query(const QueryFlags& flags, QueryResult& result) {
    Query query;
    try {
        query = make_query(flags.q, flags.and_terms);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    Corpus corpus;
    try {
        corpus = load_corpus_file(flags.corpus);
    } catch (const std::system_error& e) {
        std::cerr << "error: cannot open " << flags.corpus << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << flags.corpus << ": " << e.what() << '\n';
        return kRuntimeError;
    }
    FolksonomyIndex index = build_index(std::move(corpus));
    result = execute(index, query, to_options(flags));
    return kOk;
}

int cmd_index(const std::string& path) {
    try {
        Corpus corpus = load_corpus_file(path);
        FolksonomyIndex index = build_index(std::move(corpus));
        std::cout << "bookmarks=" << index.bookmarks().size() << " tags=" << index.tag_count()
                  << " duplicates=" << index.corpus().duplicates_dropped << '\n';
        if (index.corpus().malformed_dropped > 0)
            std::cerr << "note: dropped " << index.corpus().malformed_dropped
                      << " record(s) without usable tags\n";
        return kOk;
    } catch (const std::system_error&) {
        std::cerr << "error: cannot open " << path << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return kRuntimeError;
    }
}

int cmd_query(const QueryFlags& flags) {
    QueryResult result;
    if (int rc = run_query(flags, result); rc != kOk) return rc;
    if (flags.format == "table")
        std::cout << to_table(result);
    else if (flags.format == "dot")
        std::cout << to_dot(result.graph);
    else
        std::cout << to_json(result) << '\n';
    return kOk;
}

int cmd_export(const QueryFlags& flags, const std::string& out_path) {
    QueryResult result;
    if (int rc = run_query(flags, result); rc != kOk) return rc;
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kUsageError;
    }
    out << (flags.format == "dot" ? to_dot(result.graph) : to_json(result.graph) + "\n");
    if (!out.flush()) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return kRuntimeError;
    }
    return kOk;
}

int cmd_serve(ServiceConfig config, const std::string& corpus_path) {
    Service service(std::move(config));
    if (!corpus_path.empty()) {
        try {
            service.replace_index(build_index(load_corpus_file(corpus_path)));
        } catch (const std::system_error&) {
            std::cerr << "error: cannot open " << corpus_path << '\n';
            return kUsageError;
        } catch (const ParseError& e) {
            std::cerr << "error: " << corpus_path << ": " << e.what() << '\n';
            return kRuntimeError;
        }
    }

    // Route SIGINT/SIGTERM to a waiter thread that stops the server.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    HttpServer server(service);
    int port = server.bind(service.config().host, service.config().port);
    if (port < 0) {
        std::cerr << "error: cannot listen on " << service.config().host << ':'
                  << service.config().port << '\n';
        return kRuntimeError;
    }
    std::thread([&server, signals] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    }).detach();

    std::cerr << "listening on " << service.config().host << ':' << port << std::endl;
    if (!server.listen_after_bind()) return kRuntimeError;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    ServiceConfig env_config;
    try {
        env_config = ServiceConfig::from_env();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }

    CLI::App app{"Tag-cluster retrieval over social bookmarking corpora"};
    app.require_subcommand(1);

    std::string index_path;
    auto* index_cmd = app.add_subcommand("index", "Load a corpus and print its summary");
    index_cmd->add_option("corpus", index_path, "JSONL corpus file")->required();

    QueryFlags query_flags;
    auto* query_cmd = app.add_subcommand("query", "Run a query and print the result");
    add_query_flags(query_cmd, query_flags, env_config.defaults);
    query_cmd->add_option("--format", query_flags.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "table"}))
        ->capture_default_str();

    QueryFlags export_flags;
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export-graph", "Write the cluster graph of a query to a file");
    add_query_flags(export_cmd, export_flags, env_config.defaults);
    export_cmd->add_option("--format", export_flags.format, "Graph format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    export_cmd->add_option("--out", export_out, "Output file")->required();

    ServiceConfig serve_config = env_config;
    std::string serve_corpus;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    serve_cmd->add_option("--host", serve_config.host, "Listen address")->capture_default_str();
    serve_cmd->add_option("--port", serve_config.port, "Listen port")
        ->check(CLI::Range(0, 65535))
        ->capture_default_str();
    serve_cmd->add_option("--max-corpus-bytes", serve_config.max_corpus_bytes, "POST /corpus size limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    serve_cmd->add_option("--support-floor", serve_config.defaults.cluster.support_floor,
                          "Default seed-pair co-occurrence floor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    serve_cmd->add_option("--cors-origin", serve_config.cors_origin, "Allowed CORS origin")
        ->capture_default_str();
    serve_cmd->add_option("--corpus", serve_corpus, "Corpus to load at startup");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    if (*index_cmd) return cmd_index(index_path);
    if (*query_cmd) return cmd_query(query_flags);
    if (*export_cmd) return cmd_export(export_flags, export_out);
    if (*serve_cmd) return cmd_serve(serve_config, serve_corpus);
    return kUsageError;
}
