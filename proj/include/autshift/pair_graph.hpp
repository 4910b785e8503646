#ifndef AUTSHIFT_PAIR_GRAPH_HPP
#define AUTSHIFT_PAIR_GRAPH_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "autshift/substitution.hpp"

namespace autshift {

using LetterPair = std::pair<Letter, Letter>;

// The digit-labeled graph on letter pairs: (x, y) steps to
// (theta_d(x), theta_d(y)) for every digit d.
class PairGraph {
public:
    explicit PairGraph(const Substitution& theta);

    int digits() const { return r_; }
    int letters() const { return n_; }
    LetterPair step(LetterPair p, int d) const;

    // Pairs reachable from `from`, each with the smallest step count and a
    // witness digit string (most significant digit first along the walk).
    struct Reached {
        LetterPair pair;
        int steps = 0;
        std::vector<int> witness;
    };
    std::vector<Reached> reachable(LetterPair from) const;

    // Pairs reachable in exactly `steps` steps; frontier sets become
    // eventually periodic, so large step counts cost only cycle detection.
    std::set<LetterPair> reachable_exactly(const std::set<LetterPair>& from,
                                           long long steps) const;

    // Minimal cycle length through an off-diagonal node, if any.
    std::optional<int> minimal_cycle(LetterPair node) const;

private:
    int n_;
    int r_;
    std::vector<Letter> columns_;  // columns_[a * r + d]
};

// All off-diagonal pairs lying on a cycle, with their minimal cycle lengths.
std::vector<std::pair<LetterPair, int>> periodic_pairs(const Substitution& theta);

bool is_pair_aperiodic(const Substitution& theta);

// Smallest verified power P such that theta^P is pair-aperiodic, starting
// from the lcm of the minimal cycle lengths and escalating on verification
// failure. The power is returned materialized, so P is capped.
struct PairAperiodicPower {
    int power = 1;
    Substitution theta_power;
};
PairAperiodicPower pair_aperiodic_power(const Substitution& theta, int power_cap = 64);

// Exact decision for pair-aperiodic substitutions: (a, b) stay unequal in
// every image generation iff the |A|^2-step frontier still holds an
// off-diagonal pair.
bool is_asymptotic_disjoint(const Substitution& theta_pair_aperiodic, Letter a, Letter b);

// Column sets reachable from the full alphabet; the column number is the
// smallest cardinality reached.
struct MinimalSets {
    int column_number = 0;
    std::vector<std::vector<Letter>> sets;           // sorted members of size c
    std::vector<std::vector<Letter>> all_members;    // full closure, sorted
    std::vector<std::vector<int>> witness;           // digit string reaching sets[i]
    // induced substitution on the minimal sets: tilde(M)_d = theta_d(M)
    std::vector<std::vector<int>> induced;           // induced[i][d] = index into sets
};

MinimalSets minimal_sets(const Substitution& theta, int alphabet_cap = 16);

// A periodic pair witnessing asymptotic disjointness of (a, b): every pair
// reachable from it is reachable from (a, b) in any fixed number of steps
// >= 2|A|^2. Certificates are explicit digit strings to replay.
struct DisjointWitness {
    LetterPair periodic_pair;
    std::vector<int> path_from_ab;      // digit string (a,b) -> periodic pair
    std::vector<int> self_loop;         // single-digit loop at the periodic pair
    // pairs reachable from the periodic pair with their witness strings
    std::vector<PairGraph::Reached> spread;
};

DisjointWitness le_disjoint_witness(const Substitution& theta_pair_aperiodic,
                                    Letter a, Letter b);

} // namespace autshift

#endif
