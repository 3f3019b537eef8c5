#pragma once

#include "sepchain/bounds.hpp"
#include "sepchain/chain.hpp"
#include "sepchain/graph.hpp"
#include "sepchain/rng.hpp"

#include <cstdint>
#include <vector>

namespace sepchain {

// Simple path grown one hop at a time.
struct RelayPath {
    std::vector<int> nodes;
    int length() const { return static_cast<int>(nodes.size()) - 1; }
};

// How the search breaks ties. Neighbor ties are always uniform-random among
// score-maximal unused neighbors; the t pick is configurable. SmallestT is
// the default: the most negative tied t scores neighbors by the deepest
// spectrum row, the strongest reach signal on heterogeneous graphs.
struct TiePolicy {
    enum class TChoice { LargestT, SmallestT, Random };
    TChoice t_choice = TChoice::SmallestT;
    std::uint64_t seed = 0;
};

enum class TMode { Full, ZeroOnly };

// Everything a relaying node is allowed to see: its own spectrum column, its
// neighbor list, those neighbors' spectrum values and whether they were used
// already. Queries about any other node throw.
class LocalView {
  public:
    LocalView(const Graph& g, const CoreSpectrum& spectrum, const std::vector<char>& visited,
              int current)
        : graph_(g), spectrum_(spectrum), visited_(visited), current_(current) {}

    std::span<const int> neighbors() const { return graph_.neighbors(current_); }

    int rank(int u, int t) const {
        require_local(u);
        return spectrum_.rank(u, t);
    }

    bool visited(int u) const {
        require_neighbor(u);
        return visited_[u] != 0;
    }

    int t_min() const { return spectrum_.t_min(); }

  private:
    void require_local(int u) const;
    void require_neighbor(int u) const;

    const Graph& graph_;
    const CoreSpectrum& spectrum_;
    const std::vector<char>& visited_;
    int current_;
};

// Greedy relay from `source`: at each hop pick t among the extension-argmax
// set for (current node, nodes already used), then move to an unused neighbor
// with maximal rank at that t. ZeroOnly restricts t to 0.
RelayPath relay_start(const Graph& g, const CoreSpectrum& spectrum, int source, int girth_used,
                      const TiePolicy& policy, TMode mode = TMode::Full);

// Two-arm variant for paths containing `source`: grows one relay arm, then a
// second arm from the source with the first arm's nodes already marked used,
// and splices them.
RelayPath relay_containing(const Graph& g, const CoreSpectrum& spectrum, int source,
                           int girth_used, const TiePolicy& policy);

// Baselines: uniformly random unused neighbor, and random among unused
// neighbors of maximal degree.
RelayPath baseline_random(const Graph& g, int source, SplitMix64& rng);
RelayPath baseline_maxdeg(const Graph& g, int source, SplitMix64& rng);

} // namespace sepchain
