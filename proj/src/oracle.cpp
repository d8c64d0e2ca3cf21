#include "palinpair/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "palinpair/families.hpp"
#include "palinpair/kernels/pair_scan.hpp"

namespace palinpair {

namespace {

uint64_t proven_a_bound(PairKind kind) { return kind == PairKind::sum ? 19 : 9; }

// Serialized progress reporting at ~1e6 candidate granularity.
class ProgressSink {
public:
    explicit ProgressSink(std::function<void(uint64_t)> fn) : fn_(std::move(fn)) {}

    void add(uint64_t candidates) {
        if (!fn_) return;
        uint64_t before = total_.fetch_add(candidates);
        uint64_t after = before + candidates;
        if (before / kStep != after / kStep) {
            std::lock_guard<std::mutex> lock(mutex_);
            fn_(after);
        }
    }

private:
    static constexpr uint64_t kStep = 1'000'000;
    std::function<void(uint64_t)> fn_;
    std::atomic<uint64_t> total_{0};
    std::mutex mutex_;
};

}  // namespace

std::vector<Natural> scan_b_range(uint64_t a, PairKind kind, const Natural& b_lo,
                                  const Natural& b_hi) {
    if (a == 0) throw std::domain_error("scan_b_range: a must be positive");
    std::vector<Natural> out;
    Natural lo = b_lo;
    if (lo.is_zero()) lo = Natural(1);
    if (kind == PairKind::diff) {
        Natural first_valid = Natural(a) + Natural(1);
        if (lo < first_valid) lo = first_valid;
    }
    if (lo > b_hi) return out;

    Natural fast_limit(kernels::u64_domain_limit(a));
    Natural kernel_hi = b_hi < fast_limit ? b_hi : fast_limit;
    if (lo <= kernel_hi) {
        std::vector<uint64_t> hits;
        kernels::scan_pairs(a, kind, lo.to_uint64(), kernel_hi.to_uint64() + 1, hits);
        for (uint64_t b : hits) out.emplace_back(b);
    }

    // Beyond the u64 fast domain: the plain bignum predicate, one b at a time.
    Natural b = kernel_hi < lo ? lo : kernel_hi + Natural(1);
    Natural na(a);
    for (; b <= b_hi; ++b) {
        if (pair_holds(na, b, kind)) out.push_back(b);
    }
    return out;
}

std::vector<SolutionPair> brute_search(const SearchConfig& config) {
    const PairKind kind = config.kind;
    Natural b_top = config.b_max.is_zero() ? Natural(1) : config.b_max;

    std::optional<uint64_t> a_cap;
    if (config.a_max) {
        a_cap = *config.a_max;
    } else if (config.trust_proven_bounds) {
        a_cap = proven_a_bound(kind);
    } else if (!b_top.fits_uint64()) {
        throw std::domain_error("brute_search: unbounded a only supported for b_max < 2^64");
    }

    // Disjoint, ordered chunks covering [1, b_top].
    const unsigned parts = std::max(1u, config.partitions);
    std::vector<std::pair<Natural, Natural>> chunks;
    Natural width = b_top / Natural(parts);
    Natural start(1);
    for (unsigned i = 0; i < parts; ++i) {
        Natural end = (i + 1 == parts) ? b_top : Natural(i + 1) * width;
        if (end > b_top) end = b_top;
        chunks.emplace_back(start, end);
        start = end + Natural(1);
    }

    ProgressSink progress(config.progress);
    std::vector<std::vector<SolutionPair>> per_chunk(chunks.size());

    auto run_chunk = [&](std::size_t idx) {
        const auto& [chunk_lo, chunk_hi] = chunks[idx];
        if (chunk_lo > chunk_hi) return;
        uint64_t a_hi = a_cap ? *a_cap : chunk_hi.to_uint64();
        for (uint64_t a = 1; a <= a_hi; ++a) {
            Natural na(a);
            if (kind == PairKind::sum ? na > chunk_hi : na >= chunk_hi) break;
            Natural lo = chunk_lo;
            Natural first = kind == PairKind::sum ? na : na + Natural(1);
            if (lo < first) lo = first;
            if (lo > chunk_hi) continue;
            if ((chunk_hi - lo).fits_uint64())
                progress.add((chunk_hi - lo).to_uint64() + 1);
            for (Natural& b : scan_b_range(a, kind, lo, chunk_hi)) {
                if (!pair_holds(na, b, kind))
                    throw std::logic_error("brute_search: kernel hit failed re-verification");
                per_chunk[idx].push_back({na, std::move(b), kind});
            }
        }
    };

    if (chunks.size() == 1) {
        run_chunk(0);
    } else {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        unsigned n_threads = static_cast<unsigned>(
            std::min<std::size_t>(chunks.size(), std::max(hw, 2u)));
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t idx = next.fetch_add(1); idx < chunks.size();
                         idx = next.fetch_add(1))
                        run_chunk(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<SolutionPair> out;
    for (auto& part : per_chunk)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

CheckReport cross_check(PairKind kind, const Natural& b_max, unsigned partitions) {
    SearchConfig config;
    config.kind = kind;
    config.b_max = b_max.is_zero() ? Natural(1) : b_max;
    config.partitions = partitions;
    std::vector<SolutionPair> found = brute_search(config);
    std::vector<SolutionPair> expected = enumerate_theorem_solutions(kind, config.b_max);

    CheckReport report;
    std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                        std::back_inserter(report.missing), pair_less);
    std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.extra), pair_less);
    return report;
}

}  // namespace palinpair
