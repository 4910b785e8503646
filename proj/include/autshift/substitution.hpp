#ifndef AUTSHIFT_SUBSTITUTION_HPP
#define AUTSHIFT_SUBSTITUTION_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autshift {

// Letters are indices into an Alphabet; alphabet order is significant
// (first-appearance order for parsed files, canonical order for outputs).
using Letter = int;
using Word = std::vector<Letter>;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Letter a) const { return names_.at(a); }
    std::optional<Letter> find(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Letter, std::less<>> index_;
};

// A constant-length substitution: every letter maps to a word of the same
// length r >= 2 over the same alphabet.
class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<Word> images);

    const Alphabet& alphabet() const { return alphabet_; }
    int alphabet_size() const { return alphabet_.size(); }
    int length() const { return length_; }

    const Word& image(Letter a) const { return images_[a]; }
    // The column map at digit d sends a to the (d+1)-st letter of the image.
    Letter column(Letter a, int d) const { return images_[a][d]; }

    Word apply(const Word& w) const;
    Substitution power(int n) const;

    // Composite column map along a digit string, least-significant digit
    // first: column_map({d0,...,dn-1}) maps a to the j-th letter of the n-th
    // image word, where j = sum di * r^i.
    std::vector<Letter> column_map(std::span<const int> digits_lsb) const;
    // Same map evaluated at a single position j of the n-th image word.
    Letter column_at(Letter a, int n, long long j) const;

    bool is_injective() const;
    // Smallest k <= |A|^2 such that every k-th image word contains every
    // letter; empty if there is none.
    std::optional<int> primitivity_exponent() const;
    bool is_primitive() const { return primitivity_exponent().has_value(); }

    bool operator==(const Substitution& other) const;

private:
    Alphabet alphabet_;
    int length_ = 0;
    std::vector<Word> images_;
};

// A total letter-to-letter map between alphabets, surjective onto its target.
class LetterCoding {
public:
    LetterCoding(Alphabet source, Alphabet target, std::vector<Letter> map);
    static LetterCoding identity(const Alphabet& alphabet);

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    Letter operator()(Letter a) const { return map_.at(a); }
    Word operator()(const Word& w) const;

    bool is_injective() const;
    // Composition: (this after first)(a) = this(first(a)).
    LetterCoding after(const LetterCoding& first) const;

    bool operator==(const LetterCoding& other) const;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Letter> map_;
};

// Word helpers shared across modules.
Word subword(const Word& w, int from, int len);
std::string format_word(const Alphabet& alphabet, const Word& w);

} // namespace autshift

#endif
