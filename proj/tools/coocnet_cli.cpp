// coocnet: build, merge, inspect and serve concept co-occurrence indexes.

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "coocnet/cooc.hpp"
#include "coocnet/error.hpp"
#include "coocnet/query.hpp"
#include "coocnet/server.hpp"
#include "coocnet/store.hpp"

namespace {

using namespace coocnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Options {
    std::string dictionary, corpus, weights, out;
    int threads = 0;
    std::string base, delta;
    std::string index;
    std::vector<std::string> edge;
    std::string concept_id;
    std::string bind = "127.0.0.1:8080";
    std::string cors = "*";
    std::string feedback_log = "feedback.log";
    std::string q;
    std::string k;
    std::string semantic_type;
    std::string mode;
};

void print_stats(std::ostream& os, const BuildStats& s) {
    os << "documents processed: " << s.documents_processed << "\n"
       << "documents skipped:   " << s.documents_skipped << "\n"
       << "matched spans:       " << s.matched_spans << "\n"
       << "distinct edges:      " << s.distinct_edges << "\n";
}

int run_build(const Options& o) {
    auto dict = std::make_shared<const Dictionary>(load_dictionary(o.dictionary));
    for (const auto& amb : dict->summary().ambiguities) {
        std::cerr << "ambiguous surface '" << amb.surface << "' -> " << amb.chosen.value << " (also claimed by";
        for (const auto& r : amb.rejected) std::cerr << ' ' << r.value;
        std::cerr << ")\n";
    }
    const WeightConfig cfg = o.weights.empty() ? WeightConfig{} : load_weight_config(o.weights);
    std::ifstream corpus(o.corpus, std::ios::binary);
    if (!corpus) throw Error("cannot read corpus " + o.corpus);

    BuildResult built = build_index(corpus, *dict, cfg, o.threads);
    IndexBundle bundle = make_bundle(dict, cfg, std::move(built));
    save_index(bundle, o.out);
    std::cout << "index written to " << o.out << "\n";
    print_stats(std::cout, bundle.stats);
    std::cout << "surface ambiguities: " << dict->summary().ambiguities.size() << "\n";
    return kExitOk;
}

int run_merge(const Options& o) {
    const IndexBundle merged = merge_incremental(load_index(o.base), load_index(o.delta));
    save_index(merged, o.out);
    std::cout << "merged index written to " << o.out << "\n";
    print_stats(std::cout, merged.stats);
    return kExitOk;
}

int run_inspect(const Options& o) {
    const IndexBundle b = load_index(o.index);
    const Dictionary& dict = *b.dictionary;
    if (!o.edge.empty()) {
        const ConceptId a(o.edge[0]), c(o.edge[1]);
        dict.at(a);
        dict.at(c);
        std::cout << a.value << " (" << dict.at(a).preferred_term << ") - " << c.value << " ("
                  << dict.at(c).preferred_term << ")\n"
                  << "relatedness: " << relatedness(b.matrix, b.fmap, a, c) << "\n"
                  << "C(a,b): " << b.matrix.get(b.fmap.at(a), b.fmap.at(c)) << "\n"
                  << "C(b,a): " << b.matrix.get(b.fmap.at(c), b.fmap.at(a)) << "\n";
        const auto* postings = b.evidence.find(a, c);
        std::cout << "postings: " << (postings ? postings->size() : 0) << "\n";
        if (postings) {
            for (const auto& [doc, p] : *postings) {
                std::cout << "  " << doc << " " << p.pub_year << " " << to_string(p.source_kind);
                if (p.subject_concept) std::cout << " subject=" << p.subject_concept->value;
                std::cout << "\n";
            }
        }
        return kExitOk;
    }
    if (!o.concept_id.empty()) {
        const ConceptId id(o.concept_id);
        const Concept& c = dict.at(id);
        std::size_t row_entries = 0;
        const auto row = b.fmap.at(id);
        for (const auto& e : b.matrix.sorted_entries()) row_entries += e.row == row ? 1 : 0;
        std::size_t edges = 0;
        for (const auto& [key, postings] : b.evidence.edges()) edges += (key.first == id || key.second == id) ? 1 : 0;
        std::cout << id.value << " " << c.preferred_term << "\n"
                  << "index: " << row << "\n"
                  << "tree numbers:";
        for (const auto& t : c.tree_numbers) std::cout << ' ' << t;
        std::cout << "\nsemantic types:";
        for (const auto& t : c.semantic_types) std::cout << ' ' << t;
        std::cout << "\nmatrix row entries: " << row_entries << "\n"
                  << "evidence edges: " << edges << "\n";
        return kExitOk;
    }
    std::cout << "format version:      " << b.format_version << "\n"
              << "dictionary checksum: " << b.dictionary_checksum() << "\n"
              << "concepts:            " << dict.size() << "\n"
              << "matrix entries:      " << b.matrix.size() << "\n"
              << "evidence edges:      " << b.evidence.edge_count() << "\n"
              << "evidence postings:   " << b.evidence.posting_count() << "\n"
              << "documents:           " << b.documents.size() << "\n"
              << "weights:             " << weight_config_json(b.weights) << "\n";
    print_stats(std::cout, b.stats);
    return kExitOk;
}

int emit(const ApiResponse& r) {
    if (r.status >= 400) {
        std::cerr << r.body << "\n";
        return r.status == 404 ? kExitData : kExitUsage;
    }
    std::cout << r.body << "\n";
    return kExitOk;
}

std::optional<std::string> opt(const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); }

int run_suggest(const Options& o) {
    ApiService api(std::make_shared<const IndexBundle>(load_index(o.index)), nullptr);
    return emit(api.suggest(o.q, opt(o.k)));
}

int run_neighbors(const Options& o) {
    ApiService api(std::make_shared<const IndexBundle>(load_index(o.index)), nullptr);
    return emit(api.graph(o.concept_id, opt(o.semantic_type), opt(o.mode)));
}

int run_serve(const Options& o) {
    // Loaded before binding so a corrupt index never yields a half-alive server.
    auto bundle = std::make_shared<const IndexBundle>(load_index(o.index));
    auto [host, port] = parse_bind_address(o.bind);

    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    ApiService api(bundle, std::make_shared<FeedbackLog>(o.feedback_log));
    HttpServer server(api, o.cors);
    const int bound = server.bind(host, port);
    if (bound < 0) {
        std::cerr << "error: cannot bind " << o.bind << "\n";
        return kExitData;
    }
    std::cout << "serving " << o.index << " on " << host << ":" << bound << std::endl;

    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    server.listen();
    if (waiter.joinable()) {
        pthread_kill(waiter.native_handle(), SIGTERM);
        waiter.join();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concept co-occurrence network engine"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "Build an index from a dictionary and a corpus");
    build->add_option("--dictionary", o.dictionary, "Dictionary file (one JSON record per line)")->required();
    build->add_option("--corpus", o.corpus, "Corpus file (one JSON document per line)")->required();
    build->add_option("--weights", o.weights, "Weight config JSON (defaults applied when omitted)");
    build->add_option("--out", o.out, "Output index directory")->required();
    build->add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)");

    auto* merge = app.add_subcommand("merge", "Merge a batch index into a base index");
    merge->add_option("--base", o.base, "Base index directory")->required();
    merge->add_option("--delta", o.delta, "Batch index directory")->required();
    merge->add_option("--out", o.out, "Output index directory")->required();

    auto* inspect = app.add_subcommand("inspect", "Print index statistics, an edge, or a concept");
    inspect->add_option("--index", o.index, "Index directory")->required();
    auto* edge = inspect->add_option("--edge", o.edge, "Two concept ids")->expected(2);
    inspect->add_option("--concept", o.concept_id, "Concept id")->excludes(edge);

    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    serve->add_option("--index", o.index, "Index directory")->required();
    serve->add_option("--bind", o.bind, "host:port")->capture_default_str();
    serve->add_option("--cors-origin", o.cors, "Access-Control-Allow-Origin value")->capture_default_str();
    serve->add_option("--feedback-log", o.feedback_log, "Feedback log file")->capture_default_str();

    auto* suggest_cmd = app.add_subcommand("suggest", "Print /api/suggest output");
    suggest_cmd->add_option("--index", o.index, "Index directory")->required();
    suggest_cmd->add_option("--q", o.q, "Query text")->required();
    suggest_cmd->add_option("--k", o.k, "Maximum suggestions");

    auto* neighbors_cmd = app.add_subcommand("neighbors", "Print /api/graph output");
    neighbors_cmd->add_option("--index", o.index, "Index directory")->required();
    neighbors_cmd->add_option("--concept", o.concept_id, "Concept id")->required();
    neighbors_cmd->add_option("--semantic-type", o.semantic_type, "Semantic type filter ('any' disables)");
    neighbors_cmd->add_option("--mode", o.mode, "hierarchical or flat");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) return run_build(o);
        if (*merge) return run_merge(o);
        if (*inspect) return run_inspect(o);
        if (*serve) return run_serve(o);
        if (*suggest_cmd) return run_suggest(o);
        if (*neighbors_cmd) return run_neighbors(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
