#include "autshift/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "autshift/language.hpp"

namespace autshift {

namespace {

// Cycle elements of a self-map of the alphabet, with the lcm of their cycle
// lengths.
std::pair<std::vector<Letter>, int> cycle_elements(const std::vector<Letter>& map) {
    const int n = static_cast<int>(map.size());
    std::vector<Letter> cyclic;
    int lcm = 1;
    for (Letter a = 0; a < n; ++a) {
        // a is cyclic iff iterating the map returns to a
        Letter x = a;
        for (int i = 0; i < n; ++i) x = map[x];
        Letter y = x;
        int len = 0;
        do {
            y = map[y];
            ++len;
        } while (y != x);
        Letter z = x;
        bool on_cycle = false;
        for (int i = 0; i < len; ++i) {
            if (z == a) on_cycle = true;
            z = map[z];
        }
        if (on_cycle) {
            cyclic.push_back(a);
            lcm = static_cast<int>(std::lcm(lcm, len));
        }
    }
    return {cyclic, lcm};
}

std::vector<Letter> single_column(const Substitution& theta, int d) {
    std::vector<Letter> map(theta.alphabet_size());
    for (Letter a = 0; a < theta.alphabet_size(); ++a) map[a] = theta.column(a, d);
    return map;
}

} // namespace

PeriodicPointSeeds periodic_point_seeds(const Substitution& theta) {
    if (!theta.is_primitive())
        throw std::invalid_argument("periodic point seeds require primitivity");
    auto [right, p_right] = cycle_elements(single_column(theta, 0));
    auto [left, p_left] = cycle_elements(single_column(theta, theta.length() - 1));
    PeriodicPointSeeds seeds;
    seeds.period = static_cast<int>(std::lcm(p_right, p_left));
    seeds.right_seeds = right;
    seeds.left_seeds = left;
    for (Letter b : left) {
        for (Letter a : right) {
            if (in_language(theta, Word{b, a}))
                seeds.admissible_pairs.emplace_back(b, a);
        }
    }
    return seeds;
}

Word fixed_point_prefix(const Substitution& theta, Letter seed, int N) {
    PeriodicPointSeeds seeds = periodic_point_seeds(theta);
    if (std::find(seeds.right_seeds.begin(), seeds.right_seeds.end(), seed) ==
        seeds.right_seeds.end())
        throw std::invalid_argument("letter is not a right seed");
    Substitution power = theta.power(seeds.period);
    Word w = {seed};
    while (static_cast<int>(w.size()) < N) {
        w = power.apply(w);
        if (static_cast<int>(w.size()) > N) w.resize(N);
    }
    w.resize(N);
    return w;
}

Word left_fixed_point_suffix(const Substitution& theta, Letter seed, int N) {
    PeriodicPointSeeds seeds = periodic_point_seeds(theta);
    if (std::find(seeds.left_seeds.begin(), seeds.left_seeds.end(), seed) ==
        seeds.left_seeds.end())
        throw std::invalid_argument("letter is not a left seed");
    Substitution power = theta.power(seeds.period);
    Word w = {seed};
    while (static_cast<int>(w.size()) < N) {
        w = power.apply(w);
        if (static_cast<int>(w.size()) > N)
            w.erase(w.begin(), w.end() - N);
    }
    if (static_cast<int>(w.size()) > N) w.erase(w.begin(), w.end() - N);
    return w;
}

Window periodic_point_window(const Substitution& theta, Letter left_seed,
                             Letter right_seed, int left_len, int right_len) {
    Word left = left_fixed_point_suffix(theta, left_seed, left_len);
    Word right = fixed_point_prefix(theta, right_seed, right_len);
    Word word = left;
    word.insert(word.end(), right.begin(), right.end());
    return Window{std::move(word), left_len};
}

int height(const Substitution& theta) {
    if (!theta.is_primitive()) throw std::invalid_argument("height requires primitivity");
    if (!shift_is_infinite(theta)) throw std::invalid_argument("height requires an infinite shift");
    const int n = theta.alphabet_size();
    auto [right, p] = cycle_elements(single_column(theta, 0));
    Letter seed = right.front();

    auto gcd_up_to = [&](int N) {
        Word u = fixed_point_prefix(theta, seed, N);
        long long g = 0;
        for (int i = 1; i < N; ++i)
            if (u[i] == u[0]) g = std::gcd(g, static_cast<long long>(i));
        return g;
    };
    int N = theta.length() * n * n;
    long long g = gcd_up_to(N);
    for (int tries = 0; tries < 6; ++tries) {
        long long g2 = gcd_up_to(2 * N);
        if (g2 == g) break;
        g = g2;
        N *= 2;
        if (tries == 5) throw std::runtime_error("height gcd did not stabilize");
    }
    // largest divisor of g coprime to r
    long long h = g == 0 ? 1 : g;
    long long d;
    while ((d = std::gcd(h, static_cast<long long>(theta.length()))) > 1) h /= d;
    return static_cast<int>(h);
}

std::vector<int> height_phases(const Substitution& theta, int h) {
    if (h < 2) throw std::invalid_argument("height phases need h >= 2");
    const int n = theta.alphabet_size();
    auto [right, p] = cycle_elements(single_column(theta, 0));
    Word u = fixed_point_prefix(theta, right.front(), std::max(theta.length() * n * n, h + 1));
    std::vector<int> phase(n, -1);
    for (int i = 0; i < static_cast<int>(u.size()); ++i) {
        int ph = i % h;
        if (phase[u[i]] == -1) phase[u[i]] = ph;
        else if (phase[u[i]] != ph)
            throw std::runtime_error("letter occurs in two phase classes; height wrong");
    }
    for (Letter a = 0; a < n; ++a)
        if (phase[a] == -1) throw std::runtime_error("letter missing from fixed point prefix");
    return phase;
}

BlockSubstitution block_substitution(const Substitution& theta, int k) {
    if (k < 1) throw std::invalid_argument("block length must be positive");
    auto [right, p] = cycle_elements(single_column(theta, 0));
    Word seed_block = fixed_point_prefix(theta, right.front(), k);

    // Close the block set under taking k-blocks of images.
    std::set<Word> blocks;
    std::deque<Word> queue = {seed_block};
    blocks.insert(seed_block);
    while (!queue.empty()) {
        Word b = queue.front();
        queue.pop_front();
        Word img = theta.apply(b);
        for (int j = 0; j < theta.length(); ++j) {
            Word piece = subword(img, j * k, k);
            if (blocks.insert(piece).second) queue.push_back(piece);
        }
    }

    std::vector<Word> block_words(blocks.begin(), blocks.end());
    std::map<Word, Letter> index;
    std::vector<std::string> names;
    for (int i = 0; i < static_cast<int>(block_words.size()); ++i) {
        index[block_words[i]] = i;
        names.push_back(format_word(theta.alphabet(), block_words[i]));
    }
    std::vector<Word> images;
    for (const Word& b : block_words) {
        Word img = theta.apply(b);
        Word row;
        for (int j = 0; j < theta.length(); ++j)
            row.push_back(index.at(subword(img, j * k, k)));
        images.push_back(std::move(row));
    }
    return BlockSubstitution{Substitution(Alphabet(std::move(names)), std::move(images)),
                             std::move(block_words)};
}

BlockSubstitution pure_base(const Substitution& theta) {
    int h = height(theta);
    if (h == 1) throw std::invalid_argument("height one: substitution is its own pure base");
    return block_substitution(theta, h);
}

std::pair<Substitution, LetterCoding> injectivize(const Substitution& theta) {
    // classes[a] = representative letter of a's class in the current quotient
    const int n = theta.alphabet_size();
    std::vector<Letter> to_class(n);
    for (Letter a = 0; a < n; ++a) to_class[a] = a;
    Substitution current = theta;
    std::vector<Letter> current_to_orig_rep;  // representative in original letters
    for (Letter a = 0; a < n; ++a) current_to_orig_rep.push_back(a);

    while (!current.is_injective()) {
        std::map<Word, Letter> by_image;
        std::vector<Letter> merge(current.alphabet_size());
        for (Letter a = 0; a < current.alphabet_size(); ++a) {
            auto [it, fresh] = by_image.emplace(current.image(a), a);
            merge[a] = it->second;
        }
        // rebuild quotient: keep class representatives, renumber densely
        std::vector<Letter> renumber(current.alphabet_size(), -1);
        std::vector<std::string> names;
        std::vector<Letter> reps;
        for (Letter a = 0; a < current.alphabet_size(); ++a) {
            if (merge[a] == a) {
                renumber[a] = static_cast<Letter>(names.size());
                names.push_back(current.alphabet().name(a));
                reps.push_back(current_to_orig_rep[a]);
            }
        }
        std::vector<Word> images;
        for (Letter a = 0; a < current.alphabet_size(); ++a) {
            if (merge[a] != a) continue;
            Word img;
            for (Letter b : current.image(a)) img.push_back(renumber[merge[b]]);
            images.push_back(std::move(img));
        }
        for (Letter orig = 0; orig < n; ++orig)
            to_class[orig] = renumber[merge[to_class[orig]]];
        current = Substitution(Alphabet(std::move(names)), std::move(images));
        current_to_orig_rep = reps;
    }
    LetterCoding coding(theta.alphabet(), current.alphabet(), to_class);
    return {current, coding};
}

namespace {

// Two one-sided fixed points at seeds (a,b) differ only at the boundary
// entry iff every pair reached by a digit string of length = 0 mod p that is
// not entirely made of the boundary digit is diagonal. Tracked without
// materializing theta^p: state (pair, length mod p, nonboundary digit seen).
bool seeds_differ_only_at_boundary(const Substitution& theta, Letter a, Letter b,
                                   int p, int boundary_digit) {
    const int n = theta.alphabet_size();
    const int r = theta.length();
    auto id_of = [&](Letter x, Letter y, int len, int flag) {
        return ((x * n + y) * p + len) * 2 + flag;
    };
    std::vector<char> seen(static_cast<size_t>(n) * n * p * 2, 0);
    std::deque<std::tuple<Letter, Letter, int, int>> queue;
    seen[id_of(a, b, 0, 0)] = 1;
    queue.emplace_back(a, b, 0, 0);
    while (!queue.empty()) {
        auto [x, y, len, flag] = queue.front();
        queue.pop_front();
        for (int d = 0; d < r; ++d) {
            Letter nx = theta.column(x, d);
            Letter ny = theta.column(y, d);
            int nlen = (len + 1) % p;
            int nflag = flag | (d != boundary_digit ? 1 : 0);
            if (nlen == 0 && nflag && nx != ny) return false;
            int id = id_of(nx, ny, nlen, nflag);
            if (!seen[id]) {
                seen[id] = 1;
                queue.emplace_back(nx, ny, nlen, nflag);
            }
        }
    }
    return true;
}

} // namespace

StrongInjectivityReport strong_injectivity(const Substitution& theta) {
    if (!theta.is_injective())
        throw std::invalid_argument("strong injectivity is defined for injective substitutions");
    if (!theta.is_primitive())
        throw std::invalid_argument("strong injectivity requires primitivity");
    StrongInjectivityReport report;
    auto check_side = [&](int side) {
        int boundary_digit = side == 0 ? 0 : theta.length() - 1;
        auto [seeds, p] = cycle_elements(single_column(theta, boundary_digit));
        for (size_t i = 0; i < seeds.size() && report.strongly_injective; ++i) {
            for (size_t j = i + 1; j < seeds.size() && report.strongly_injective; ++j) {
                if (seeds_differ_only_at_boundary(theta, seeds[i], seeds[j], p, boundary_digit)) {
                    report.strongly_injective = false;
                    report.violation = {side, seeds[i], seeds[j]};
                }
            }
        }
    };
    check_side(0);
    if (report.strongly_injective) check_side(1);
    return report;
}

bool is_strongly_injective(const Substitution& theta) {
    return strong_injectivity(theta).strongly_injective;
}

Letter SlidingBlockRepresentation::encode(const Word& window) const {
    if (static_cast<int>(window.size()) != ell)
        throw std::invalid_argument("window width must equal the block length");
    auto it = std::lower_bound(block_words.begin(), block_words.end(), window);
    if (it == block_words.end() || *it != window)
        throw std::invalid_argument("window is not a language word");
    return static_cast<Letter>(it - block_words.begin());
}

SlidingBlockRepresentation sliding_block_representation(const Substitution& theta,
                                                        int ell, int k) {
    const int r = theta.length();
    if (ell < 1) throw std::invalid_argument("block length must be positive");
    if (k < 0 || k >= r) throw std::invalid_argument("shift must satisfy 0 <= k < r");
    if (k + r + ell - 1 > ell * r)
        throw std::invalid_argument("shift too large for this block length");

    std::vector<Word> block_words = language(theta, ell);
    std::map<Word, Letter> index;
    std::vector<std::string> names;
    for (int i = 0; i < static_cast<int>(block_words.size()); ++i) {
        index[block_words[i]] = i;
        names.push_back(format_word(theta.alphabet(), block_words[i]));
    }
    std::vector<Word> images;
    for (const Word& b : block_words) {
        Word img = theta.apply(b);
        Word row;
        for (int j = 0; j < r; ++j)
            row.push_back(index.at(subword(img, k + j, ell)));
        images.push_back(std::move(row));
    }
    SlidingBlockRepresentation rep{
        Substitution(Alphabet(std::move(names)), std::move(images)),
        std::move(block_words), ell, k};
    return rep;
}

namespace {

// Valid cut phases for a window: c is valid iff the window occurs in the
// image of a language word at an offset congruent to -c mod r.
std::vector<int> valid_cuts(const Substitution& theta, const Word& w) {
    const int r = theta.length();
    const int K = static_cast<int>(w.size()) / r + 2;
    std::set<int> cuts;
    for (const Word& v : language(theta, K)) {
        Word img = theta.apply(v);
        if (img.size() < w.size()) continue;
        for (int q = 0; q + static_cast<int>(w.size()) <= static_cast<int>(img.size()); ++q) {
            if (std::equal(w.begin(), w.end(), img.begin() + q))
                cuts.insert(((r - q % r) % r));
        }
    }
    return std::vector<int>(cuts.begin(), cuts.end());
}

} // namespace

int recognizability_radius(const Substitution& theta, int cap) {
    if (!theta.is_injective())
        throw std::invalid_argument("recognizability radius requires injectivity");
    for (int R = 1; R <= cap; ++R) {
        bool unique = true;
        for (const Word& w : language(theta, 2 * R)) {
            if (valid_cuts(theta, w).size() != 1) {
                unique = false;
                break;
            }
        }
        if (unique) return R;
    }
    throw std::runtime_error("no recognizability radius up to cap");
}

std::vector<int> odometer_digits(const Substitution& theta, const Window& window, int n) {
    if (!theta.is_injective() || !theta.is_primitive())
        throw std::invalid_argument("odometer digits require an injective primitive substitution");
    const int r = theta.length();
    std::map<Word, Letter> by_image;
    for (Letter a = 0; a < theta.alphabet_size(); ++a) by_image[theta.image(a)] = a;

    Window current = window;
    std::vector<int> digits;
    for (int level = 0; level < n; ++level) {
        std::vector<int> cuts = valid_cuts(theta, current.word);
        if (cuts.empty())
            throw std::invalid_argument("window is not a language word");
        if (cuts.size() > 1)
            throw AmbiguousDesubstitution("window too short: de-substitution cut is ambiguous");
        // image blocks start at window positions congruent to cut mod r; the
        // digit is the offset of coordinate 0 into its block
        int cut = cuts[0];
        int digit = ((current.origin - cut) % r + r) % r;
        int origin_block = current.origin - digit;
        if (origin_block < 0 || origin_block + r > static_cast<int>(current.word.size()))
            throw AmbiguousDesubstitution("window too short: origin block incomplete");
        Word parent;
        int parent_origin = -1;
        for (int s = cut; s + r <= static_cast<int>(current.word.size()); s += r) {
            auto it = by_image.find(subword(current.word, s, r));
            if (it == by_image.end())
                throw std::runtime_error("de-substitution block is not an image word");
            if (s == origin_block) parent_origin = static_cast<int>(parent.size());
            parent.push_back(it->second);
        }
        if (parent_origin < 0)
            throw AmbiguousDesubstitution("window too short: origin block incomplete");
        digits.push_back(digit);
        current = Window{std::move(parent), parent_origin};
    }
    return digits;
}

} // namespace autshift
