#include "autshift/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace autshift {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("alphabet letter with empty name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate letter name: " + names_[i]);
    }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != alphabet_.size())
        throw std::invalid_argument("substitution needs one image per letter");
    if (images_.empty())
        throw std::invalid_argument("empty alphabet");
    length_ = static_cast<int>(images_[0].size());
    if (length_ < 2)
        throw std::invalid_argument("substitution length must be at least 2");
    for (const Word& w : images_) {
        if (static_cast<int>(w.size()) != length_)
            throw std::invalid_argument("image words must all have the same length");
        for (Letter a : w)
            if (a < 0 || a >= alphabet_.size())
                throw std::invalid_argument("image letter outside alphabet");
    }
}

Word Substitution::apply(const Word& w) const {
    Word out;
    out.reserve(w.size() * static_cast<size_t>(length_));
    for (Letter a : w)
        out.insert(out.end(), images_[a].begin(), images_[a].end());
    return out;
}

Substitution Substitution::power(int n) const {
    if (n < 1) throw std::invalid_argument("power exponent must be positive");
    std::vector<Word> images = images_;
    for (int i = 1; i < n; ++i) {
        for (Word& w : images)
            w = apply(w);
    }
    return Substitution(alphabet_, std::move(images));
}

std::vector<Letter> Substitution::column_map(std::span<const int> digits_lsb) const {
    std::vector<Letter> map(alphabet_.size());
    for (Letter a = 0; a < alphabet_.size(); ++a) map[a] = a;
    // digits are applied most-significant first so that the composite equals
    // theta_{d0} o theta_{d1} o ... o theta_{d(n-1)}
    for (auto it = digits_lsb.rbegin(); it != digits_lsb.rend(); ++it) {
        int d = *it;
        if (d < 0 || d >= length_)
            throw std::invalid_argument("column digit out of range");
        for (Letter& a : map) a = images_[a][d];
    }
    return map;
}

Letter Substitution::column_at(Letter a, int n, long long j) const {
    std::vector<int> digits(n);
    for (int i = 0; i < n; ++i) {
        digits[i] = static_cast<int>(j % length_);
        j /= length_;
    }
    if (j != 0) throw std::invalid_argument("column index out of range");
    for (int i = n - 1; i >= 0; --i) a = images_[a][digits[i]];
    return a;
}

bool Substitution::is_injective() const {
    std::vector<Word> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<int> Substitution::primitivity_exponent() const {
    const int n = alphabet_.size();
    // occurs[a] = bitmask of letters occurring in the current power's image
    std::vector<unsigned long long> occurs(n, 0);
    if (n > 64) throw std::invalid_argument("alphabet too large for primitivity check");
    std::vector<unsigned long long> step(n, 0);
    for (Letter a = 0; a < n; ++a)
        for (Letter b : images_[a]) step[a] |= 1ULL << b;
    const unsigned long long full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    occurs = step;
    for (int k = 1; k <= n * n; ++k) {
        bool all = true;
        for (Letter a = 0; a < n; ++a) all = all && occurs[a] == full;
        if (all) return k;
        std::vector<unsigned long long> next(n, 0);
        for (Letter a = 0; a < n; ++a) {
            unsigned long long m = occurs[a];
            for (Letter b = 0; b < n; ++b)
                if (m >> b & 1) next[a] |= step[b];
        }
        occurs = std::move(next);
    }
    return std::nullopt;
}

bool Substitution::operator==(const Substitution& other) const {
    return alphabet_ == other.alphabet_ && images_ == other.images_;
}

LetterCoding::LetterCoding(Alphabet source, Alphabet target, std::vector<Letter> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (static_cast<int>(map_.size()) != source_.size())
        throw std::invalid_argument("coding must be total on the source alphabet");
    std::vector<bool> hit(target_.size(), false);
    for (Letter b : map_) {
        if (b < 0 || b >= target_.size())
            throw std::invalid_argument("coding image outside target alphabet");
        hit[b] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
        throw std::invalid_argument("coding must be surjective onto the target alphabet");
}

LetterCoding LetterCoding::identity(const Alphabet& alphabet) {
    std::vector<Letter> map(alphabet.size());
    for (int i = 0; i < alphabet.size(); ++i) map[i] = i;
    return LetterCoding(alphabet, alphabet, std::move(map));
}

Word LetterCoding::operator()(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(map_.at(a));
    return out;
}

bool LetterCoding::is_injective() const {
    std::vector<Letter> sorted = map_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

LetterCoding LetterCoding::after(const LetterCoding& first) const {
    if (!(first.target_ == source_))
        throw std::invalid_argument("coding composition: alphabets do not match");
    std::vector<Letter> map(first.source_.size());
    for (int a = 0; a < first.source_.size(); ++a) map[a] = map_[first.map_[a]];
    return LetterCoding(first.source_, target_, std::move(map));
}

bool LetterCoding::operator==(const LetterCoding& other) const {
    return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
}

Word subword(const Word& w, int from, int len) {
    return Word(w.begin() + from, w.begin() + from + len);
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    bool single = true;
    for (const std::string& n : alphabet.names()) single = single && n.size() == 1;
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += alphabet.name(w[i]);
    }
    return out;
}

} // namespace autshift
