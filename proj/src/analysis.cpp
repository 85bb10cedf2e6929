#include "mrle/analysis.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mrle {

std::vector<Run> scan_runs(ByteSpan input) {
    std::vector<Run> runs;
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t v = input[i];
        std::size_t j = i + 1;
        while (j < n && input[j] == v)
            ++j;
        runs.push_back(Run{v, j - i});
        i = j;
    }
    return runs;
}

std::int64_t saved_bytes(std::uint64_t length) {
    if (length == 0)
        throw Error("saved_bytes: run length must be >= 1");
    const std::uint64_t run_bytes = (length + 253) / 254;
    return static_cast<std::int64_t>(length) - 1 - static_cast<std::int64_t>(run_bytes);
}

CounterArray compute_counters_serial(ByteSpan input) {
    CounterArray counters{};
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t v = input[i];
        std::size_t j = i + 1;
        while (j < n && input[j] == v)
            ++j;
        counters[v] += saved_bytes(j - i);
        i = j;
    }
    return counters;
}

namespace detail {

CounterArray compute_counters_chunked(ByteSpan input, int num_chunks) {
    const std::size_t n = input.size();
    if (num_chunks < 2 || n < static_cast<std::size_t>(num_chunks))
        return compute_counters_serial(input);

    const std::size_t chunks = static_cast<std::size_t>(num_chunks);
    std::vector<CounterArray> partial(chunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / chunks;
        CounterArray& local = partial[static_cast<std::size_t>(c)];

        // Own every run that starts in [lo, hi): skip the tail of a run
        // carried over from the previous chunk, then measure each owned run
        // to its true end, past hi if needed.
        std::size_t i = lo;
        if (lo > 0)
            while (i < hi && input[i] == input[i - 1])
                ++i;
        while (i < hi) {
            const std::uint8_t v = input[i];
            std::size_t j = i + 1;
            while (j < n && input[j] == v)
                ++j;
            local[v] += saved_bytes(j - i);
            i = j;
        }
    }

    CounterArray counters{};
    for (const CounterArray& local : partial)
        for (std::size_t s = 0; s < counters.size(); ++s)
            counters[s] += local[s];
    return counters;
}

} // namespace detail

CounterArray compute_counters(ByteSpan input) {
#ifdef _OPENMP
    if (input.size() >= detail::kParallelMinBytes)
        return detail::compute_counters_chunked(input, omp_get_max_threads());
#endif
    return compute_counters_serial(input);
}

CompBitList CompBitList::unpack(ByteSpan packed) {
    if (packed.size() != kPackedSize)
        throw FormatError("CompBitList: packed form must be exactly 32 bytes");
    CompBitList list;
    std::copy(packed.begin(), packed.end(), list.bits_.begin());
    return list;
}

CompBitList build_comp_bit_list(const CounterArray& counters) {
    CompBitList list;
    for (std::size_t s = 0; s < counters.size(); ++s)
        if (counters[s] > 0)
            list.set(static_cast<std::uint8_t>(s));
    return list;
}

AnalysisReport analyze(ByteSpan input) {
    AnalysisReport report;
    report.counters = compute_counters(input);
    report.comp_bit_list = build_comp_bit_list(report.counters);
    report.input_length = input.size();

    std::int64_t saved = 0;
    for (std::int64_t c : report.counters)
        if (c > 0)
            saved += c;
    report.predicted_payload = report.input_length - static_cast<std::uint64_t>(saved);
    return report;
}

} // namespace mrle
