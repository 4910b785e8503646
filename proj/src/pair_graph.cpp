#include "autshift/pair_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "autshift/language.hpp"

namespace autshift {

PairGraph::PairGraph(const Substitution& theta)
    : n_(theta.alphabet_size()), r_(theta.length()) {
    columns_.resize(static_cast<size_t>(n_) * r_);
    for (Letter a = 0; a < n_; ++a)
        for (int d = 0; d < r_; ++d) columns_[a * r_ + d] = theta.column(a, d);
}

LetterPair PairGraph::step(LetterPair p, int d) const {
    if (d < 0 || d >= r_) throw std::invalid_argument("digit out of range");
    return {columns_[p.first * r_ + d], columns_[p.second * r_ + d]};
}

std::vector<PairGraph::Reached> PairGraph::reachable(LetterPair from) const {
    std::vector<int> dist(static_cast<size_t>(n_) * n_, -1);
    std::vector<std::pair<int, int>> parent(static_cast<size_t>(n_) * n_, {-1, -1});
    auto id = [&](LetterPair p) { return p.first * n_ + p.second; };
    std::deque<LetterPair> queue = {from};
    dist[id(from)] = 0;
    while (!queue.empty()) {
        LetterPair p = queue.front();
        queue.pop_front();
        for (int d = 0; d < r_; ++d) {
            LetterPair q = step(p, d);
            if (dist[id(q)] < 0) {
                dist[id(q)] = dist[id(p)] + 1;
                parent[id(q)] = {id(p), d};
                queue.push_back(q);
            }
        }
    }
    std::vector<Reached> out;
    for (Letter x = 0; x < n_; ++x) {
        for (Letter y = 0; y < n_; ++y) {
            LetterPair p{x, y};
            if (dist[id(p)] < 0) continue;
            Reached rec;
            rec.pair = p;
            rec.steps = dist[id(p)];
            int cur = id(p);
            while (parent[cur].first >= 0) {
                rec.witness.push_back(parent[cur].second);
                cur = parent[cur].first;
            }
            std::reverse(rec.witness.begin(), rec.witness.end());
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::set<LetterPair> PairGraph::reachable_exactly(const std::set<LetterPair>& from,
                                                  long long steps) const {
    std::set<LetterPair> frontier = from;
    std::map<std::set<LetterPair>, long long> seen_at;
    std::vector<std::set<LetterPair>> history = {frontier};
    seen_at[frontier] = 0;
    for (long long k = 1; k <= steps; ++k) {
        std::set<LetterPair> next;
        for (LetterPair p : frontier)
            for (int d = 0; d < r_; ++d) next.insert(step(p, d));
        frontier = std::move(next);
        auto [it, fresh] = seen_at.emplace(frontier, k);
        if (!fresh) {
            // cycle: frontier at step k equals frontier at step it->second
            long long lambda = it->second;
            long long rho = k - lambda;
            long long idx = lambda + (steps - lambda) % rho;
            return history[static_cast<size_t>(idx)];
        }
        history.push_back(frontier);
    }
    return frontier;
}

std::optional<int> PairGraph::minimal_cycle(LetterPair node) const {
    // BFS from the successors of node back to node
    std::vector<int> dist(static_cast<size_t>(n_) * n_, -1);
    auto id = [&](LetterPair p) { return p.first * n_ + p.second; };
    std::deque<LetterPair> queue;
    for (int d = 0; d < r_; ++d) {
        LetterPair q = step(node, d);
        if (q == node) return 1;
        if (dist[id(q)] < 0) {
            dist[id(q)] = 1;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        LetterPair p = queue.front();
        queue.pop_front();
        for (int d = 0; d < r_; ++d) {
            LetterPair q = step(p, d);
            if (q == node) return dist[id(p)] + 1;
            if (dist[id(q)] < 0) {
                dist[id(q)] = dist[id(p)] + 1;
                queue.push_back(q);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::pair<LetterPair, int>> periodic_pairs(const Substitution& theta) {
    PairGraph graph(theta);
    std::vector<std::pair<LetterPair, int>> out;
    for (Letter a = 0; a < theta.alphabet_size(); ++a) {
        for (Letter b = 0; b < theta.alphabet_size(); ++b) {
            if (a == b) continue;
            if (auto p = graph.minimal_cycle({a, b}))
                out.push_back({{a, b}, *p});
        }
    }
    return out;
}

bool is_pair_aperiodic(const Substitution& theta) {
    auto pairs = periodic_pairs(theta);
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const auto& p) { return p.second == 1; });
}

namespace {

// Is there a closed walk of length exactly P through `node`? Boolean matrix
// power over the pair graph, so P can be large without materializing powers
// of the substitution.
bool has_closed_walk(const PairGraph& graph, LetterPair node, long long P) {
    std::set<LetterPair> frontier = graph.reachable_exactly({node}, P);
    return frontier.count(node) > 0;
}

} // namespace

PairAperiodicPower pair_aperiodic_power(const Substitution& theta, int power_cap) {
    auto pairs = periodic_pairs(theta);
    long long P = 1;
    for (const auto& [pair, len] : pairs) P = std::lcm(P, static_cast<long long>(len));
    PairGraph graph(theta);

    // the result is materialized, so cap the image length r^P
    const double max_len = 1 << 20;
    auto feasible = [&](long long power) {
        double len = 1;
        for (long long i = 0; i < power; ++i) {
            len *= theta.length();
            if (len > max_len) return false;
        }
        return power <= power_cap;
    };
    if (!feasible(P)) throw std::runtime_error("pair-aperiodic power exceeds cap");

    // verify every periodic pair has a closed walk of length exactly P;
    // walks of length P repeat to length mP, so escalation by multiplication
    // keeps earlier verifications intact
    for (int rounds = 0; rounds < 32; ++rounds) {
        const std::pair<LetterPair, int>* failing = nullptr;
        for (const auto& entry : pairs) {
            if (!has_closed_walk(graph, entry.first, P)) {
                failing = &entry;
                break;
            }
        }
        if (!failing) break;
        bool fixed = false;
        for (int m = 2; feasible(P * m); ++m) {
            if (has_closed_walk(graph, failing->first, P * m)) {
                P *= m;
                fixed = true;
                break;
            }
        }
        if (!fixed) throw std::runtime_error("pair-aperiodic power exceeds cap");
    }
    Substitution power = theta.power(static_cast<int>(P));
    if (!is_pair_aperiodic(power))
        throw std::runtime_error("pair-aperiodic power verification failed");
    return PairAperiodicPower{static_cast<int>(P), std::move(power)};
}

bool is_asymptotic_disjoint(const Substitution& theta, Letter a, Letter b) {
    if (!is_pair_aperiodic(theta))
        throw std::invalid_argument("asymptotic disjointness requires a pair-aperiodic substitution");
    if (a == b) return false;
    PairGraph graph(theta);
    long long K = static_cast<long long>(theta.alphabet_size()) * theta.alphabet_size();
    std::set<LetterPair> frontier = graph.reachable_exactly({{a, b}}, K);
    return std::any_of(frontier.begin(), frontier.end(),
                       [](LetterPair p) { return p.first != p.second; });
}

MinimalSets minimal_sets(const Substitution& theta, int alphabet_cap) {
    if (theta.alphabet_size() > alphabet_cap)
        throw std::invalid_argument("alphabet exceeds the subset-closure cap");
    if (!theta.is_primitive())
        throw std::invalid_argument("minimal sets require primitivity");
    const int r = theta.length();
    std::vector<Letter> full(theta.alphabet_size());
    std::iota(full.begin(), full.end(), 0);

    std::map<std::vector<Letter>, std::vector<int>> witness;
    std::deque<std::vector<Letter>> queue = {full};
    witness[full] = {};
    while (!queue.empty()) {
        std::vector<Letter> s = queue.front();
        queue.pop_front();
        for (int d = 0; d < r; ++d) {
            std::set<Letter> img;
            for (Letter a : s) img.insert(theta.column(a, d));
            std::vector<Letter> t(img.begin(), img.end());
            if (!witness.count(t)) {
                std::vector<int> w = witness[s];
                // digit strings are least significant digit first; stepping a
                // column set by digit d prepends d to the composition
                w.insert(w.begin(), d);
                witness[t] = w;
                queue.push_back(t);
            }
        }
    }
    size_t c = full.size();
    for (const auto& [s, w] : witness) c = std::min(c, s.size());

    MinimalSets out;
    out.column_number = static_cast<int>(c);
    for (const auto& [s, w] : witness) {
        out.all_members.push_back(s);
        if (s.size() == c) {
            out.sets.push_back(s);
            out.witness.push_back(w);
        }
    }
    // induced substitution on the minimal sets
    for (const auto& s : out.sets) {
        std::vector<int> row;
        for (int d = 0; d < r; ++d) {
            std::set<Letter> img;
            for (Letter a : s) img.insert(theta.column(a, d));
            std::vector<Letter> t(img.begin(), img.end());
            auto it = std::find(out.sets.begin(), out.sets.end(), t);
            if (it == out.sets.end())
                throw std::runtime_error("minimal set image is not minimal");
            row.push_back(static_cast<int>(it - out.sets.begin()));
        }
        out.induced.push_back(std::move(row));
    }
    return out;
}

DisjointWitness le_disjoint_witness(const Substitution& theta, Letter a, Letter b) {
    if (!is_asymptotic_disjoint(theta, a, b))
        throw std::invalid_argument("pair is not asymptotic disjoint");
    PairGraph graph(theta);
    const long long K = static_cast<long long>(theta.alphabet_size()) * theta.alphabet_size();

    // walk an off-diagonal path of length K from (a, b): at each step pick a
    // digit whose image still reaches an off-diagonal pair for the remaining
    // steps
    DisjointWitness out;
    LetterPair cur{a, b};
    std::vector<LetterPair> trail = {cur};
    std::vector<int> digits;
    for (long long k = 0; k < K; ++k) {
        bool advanced = false;
        for (int d = 0; d < graph.digits() && !advanced; ++d) {
            LetterPair q = graph.step(cur, d);
            if (q.first == q.second) continue;
            std::set<LetterPair> rest = graph.reachable_exactly({q}, K - k - 1);
            if (std::any_of(rest.begin(), rest.end(),
                            [](LetterPair p) { return p.first != p.second; })) {
                digits.push_back(d);
                cur = q;
                trail.push_back(cur);
                advanced = true;
            }
        }
        if (!advanced) throw std::runtime_error("off-diagonal path vanished unexpectedly");
        if (std::count(trail.begin(), trail.end() - 1, cur) > 0) break;
    }
    // the trail is longer than the number of off-diagonal pairs, so it repeats;
    // the first repeated pair lies on a cycle
    int repeat_at = -1;
    for (size_t i = 0; i < trail.size() && repeat_at < 0; ++i)
        for (size_t j = i + 1; j < trail.size(); ++j)
            if (trail[i] == trail[j]) {
                repeat_at = static_cast<int>(i);
                break;
            }
    if (repeat_at < 0) throw std::runtime_error("no repeated pair along the off-diagonal path");
    out.periodic_pair = trail[repeat_at];
    out.path_from_ab.assign(digits.begin(), digits.begin() + repeat_at);

    // pair-aperiodicity provides a one-digit loop
    bool loop_found = false;
    for (int d = 0; d < graph.digits(); ++d) {
        if (graph.step(cur, d) == cur) {
            out.self_loop = {d};
            loop_found = true;
            break;
        }
    }
    if (!loop_found) throw std::runtime_error("periodic pair lacks a self-loop");
    out.spread = graph.reachable(cur);
    return out;
}

} // namespace autshift
