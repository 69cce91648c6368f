// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <fstream>
#include <map>
#include <sstream>

#include "coocnet/cooc.hpp"
#include "coocnet/query.hpp"

using namespace coocnet;

namespace {

const Dictionary& demo_dictionary() {
    static const Dictionary dict = load_dictionary(std::string(COOCNET_FIXTURE_DIR) + "/dictionary.jsonl");
    return dict;
}

// The demo corpus repeated until it is large enough to time.
const std::string& demo_corpus(int copies) {
    static std::map<int, std::string> cache;
    auto& text = cache[copies];
    if (text.empty()) {
        std::ifstream in(std::string(COOCNET_FIXTURE_DIR) + "/corpus.jsonl");
        std::ostringstream buf;
        buf << in.rdbuf();
        for (int i = 0; i < copies; ++i) text += buf.str();
    }
    return text;
}

void BM_build_serial(benchmark::State& state) {
    const auto& text = demo_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(build_index_serial(in, demo_dictionary(), WeightConfig{}));
    }
}

void BM_build_parallel(benchmark::State& state) {
    const auto& text = demo_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(build_index(in, demo_dictionary(), WeightConfig{}));
    }
}

void BM_score_forms_serial(benchmark::State& state) {
    const SuggestionIndex index(demo_dictionary());
    for (auto _ : state) benchmark::DoNotOptimize(kernels::score_forms_serial(index.forms(), "alzheimr"));
}

void BM_score_forms_parallel(benchmark::State& state) {
    const SuggestionIndex index(demo_dictionary());
    for (auto _ : state) benchmark::DoNotOptimize(kernels::score_forms_parallel(index.forms(), "alzheimr"));
}

}  // namespace

BENCHMARK(BM_build_serial)->Arg(1)->Arg(20);
BENCHMARK(BM_build_parallel)->Arg(1)->Arg(20);
BENCHMARK(BM_score_forms_serial);
BENCHMARK(BM_score_forms_parallel);

BENCHMARK_MAIN();
