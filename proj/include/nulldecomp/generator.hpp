#ifndef NULLDECOMP_GENERATOR_HPP
#define NULLDECOMP_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

/// SplitMix64: xorshift-multiply generator with a Weyl sequence. Fixed
/// constants so instances reproduce bit-for-bit across ports:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
/// bounded(n) = next() % n. split() seeds a child stream with next().
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

enum class Family { tree, c4kfree, bipartite_any, general };

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

struct GenSpec {
    int n = 0;
    int extra_edges = 0;
    Family family = Family::tree;
    std::uint64_t seed = 0;
};

/// Uniformly random labeled tree on {1..n} via Prüfer-sequence decoding.
Graph random_tree(int n, std::uint64_t seed);

/// Random tree plus up to extra_edges bipartition-respecting edges, rejection
/// sampled against the C4k-free certifier up to max_tries; falls back to the
/// bare tree. Requires spec.family == c4kfree.
Graph random_c4kfree(const GenSpec& spec, int max_tries = 32);

/// Dispatch over all families (tree / c4kfree / bipartite_any / general).
Graph generate(const GenSpec& spec, int max_tries = 32);

}  // namespace nulldecomp

#endif
