#include "autshift/language.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace autshift {

namespace {

void collect_subwords(const Word& w, int L, std::set<Word>& out) {
    for (int i = 0; i + L <= static_cast<int>(w.size()); ++i)
        out.insert(subword(w, i, L));
}

// Every length-2 subword of the shift occurs inside the image of a length-2
// subword, so the 2-word set is the least fixpoint of one substitution round
// seeded with the image subwords. Stability over two consecutive rounds is
// required before stopping.
std::set<Word> two_words(const Substitution& theta) {
    std::set<Word> current;
    for (Letter a = 0; a < theta.alphabet_size(); ++a)
        collect_subwords(theta.image(a), 2, current);
    int stable = 0;
    while (stable < 2) {
        std::set<Word> next = current;
        for (const Word& w : current)
            collect_subwords(theta.apply(w), 2, next);
        stable = (next == current) ? stable + 1 : 0;
        current = std::move(next);
    }
    return current;
}

struct LanguageKey {
    std::vector<Word> images;
    int L;
    bool operator<(const LanguageKey& other) const {
        return std::tie(images, L) < std::tie(other.images, other.L);
    }
};

std::mutex cache_mutex;
std::map<LanguageKey, std::shared_ptr<const std::vector<Word>>> cache;

std::shared_ptr<const std::vector<Word>> language_rec(const Substitution& theta, int L) {
    LanguageKey key;
    for (Letter a = 0; a < theta.alphabet_size(); ++a) key.images.push_back(theta.image(a));
    key.L = L;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::set<Word> words;
    if (L == 1) {
        for (Letter a = 0; a < theta.alphabet_size(); ++a) words.insert({a});
    } else if (L == 2) {
        words = two_words(theta);
    } else {
        // An L-window of the image of a point spans at most m source letters.
        const int r = theta.length();
        const int m = 1 + (L - 2) / r + 1;
        auto shorter = language_rec(theta, std::min(m, L - 1));
        for (const Word& w : *shorter)
            collect_subwords(theta.apply(w), L, words);
    }
    auto result = std::make_shared<const std::vector<Word>>(words.begin(), words.end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), result);
    return result;
}

} // namespace

std::vector<Word> language(const Substitution& theta, int L) {
    if (L < 1) throw std::invalid_argument("language length must be positive");
    if (!theta.is_primitive())
        throw std::invalid_argument("language requires a primitive substitution");
    return *language_rec(theta, L);
}

bool in_language(const Substitution& theta, const Word& w) {
    std::vector<Word> words = language(theta, static_cast<int>(w.size()));
    return std::binary_search(words.begin(), words.end(), w);
}

long long complexity(const Substitution& theta, int L) {
    return static_cast<long long>(language(theta, L).size());
}

bool shift_is_infinite(const Substitution& theta) {
    // Morse-Hedlund: a shift is finite iff its complexity is <= L at some L,
    // and a finite substitution shift has period well below r*|A|^2, so one
    // check at that length decides.
    const int L = theta.length() * theta.alphabet_size() * theta.alphabet_size();
    return complexity(theta, L) > L;
}

} // namespace autshift
