#include "ratrel/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "ratrel/error.hpp"

namespace ratrel {

void validate(const CorpusSpec& spec) {
    if (spec.max_vertices < 1 || spec.max_vertices > kMaxCorpusVertices)
        throw CapacityError("corpus vertex bound " + std::to_string(spec.max_vertices) +
                            " outside 1.." + std::to_string(kMaxCorpusVertices) +
                            " (code blocks grow as 4^k, larger trees need unreachable depth)");
    if (spec.blocks < 1 || spec.blocks > kMaxBlocks)
        throw CapacityError("block count " + std::to_string(spec.blocks) + " outside 1.." +
                            std::to_string(kMaxBlocks));
    if (spec.samples < 1)
        throw CapacityError("corpus needs at least one sample");
}

std::vector<RegularTree> generate_corpus(const CorpusSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, spec.max_vertices);
    std::uniform_int_distribution<int> bit(0, 1);

    std::vector<RegularTree> out;
    std::set<std::string> keys;
    const std::size_t budget = 200 * spec.samples;
    for (std::size_t attempt = 0; attempt < budget && out.size() < spec.samples; ++attempt) {
        const std::size_t n = size_dist(rng);
        std::uniform_int_distribution<std::size_t> child(0, n - 1);
        std::vector<TreeVertex> vertices;
        for (std::size_t v = 0; v < n; ++v) {
            const char label = bit(rng) ? '1' : '0';
            const std::size_t left = child(rng);
            const std::size_t right = child(rng);
            vertices.push_back({"v" + std::to_string(v), label, left, right});
        }
        RegularTree t = minimize(RegularTree(std::move(vertices), 0));
        if (keys.insert(canonical_key(t)).second)
            out.push_back(std::move(t));
    }
    return out;
}

std::vector<RegularTree> enumerate_trees(std::size_t max_vertices) {
    if (max_vertices < 1 || max_vertices > kMaxCorpusVertices)
        throw CapacityError("enumeration bound " + std::to_string(max_vertices) + " outside 1.." +
                            std::to_string(kMaxCorpusVertices));
    std::map<std::string, RegularTree> distinct;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::size_t child_maps = 1;
        for (std::size_t i = 0; i < 2 * n; ++i)
            child_maps *= n;
        for (std::size_t labels = 0; labels < (std::size_t{1} << n); ++labels)
            for (std::size_t children = 0; children < child_maps; ++children) {
                std::vector<TreeVertex> vertices;
                std::size_t digits = children;
                for (std::size_t v = 0; v < n; ++v) {
                    const std::size_t left = digits % n;
                    digits /= n;
                    const std::size_t right = digits % n;
                    digits /= n;
                    vertices.push_back({"v" + std::to_string(v), labels >> v & 1 ? '1' : '0', left, right});
                }
                RegularTree t = minimize(RegularTree(std::move(vertices), 0));
                distinct.try_emplace(canonical_key(t), std::move(t));
            }
    }
    std::vector<RegularTree> out;
    for (auto& [key, t] : distinct)
        out.push_back(std::move(t));
    return out;
}

CorpusReport verify_corpus(const CorpusSpec& spec) {
    std::vector<RegularTree> trees = generate_corpus(spec);
    std::vector<ReductionReport> reports(trees.size());

    // Rows are independent; each worker claims the next unchecked index.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        for (std::size_t i; (i = next++) < trees.size();) {
            try {
                reports[i] = reduce_verify(trees[i], spec.blocks);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, trees.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);

    CorpusReport report;
    report.pass = true;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        report.pass = report.pass && reports[i].agreement && reports[i].coherent;
        report.rows.push_back({std::move(trees[i]), reports[i]});
    }
    return report;
}

} // namespace ratrel
