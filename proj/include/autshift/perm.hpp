#ifndef AUTSHIFT_PERM_HPP
#define AUTSHIFT_PERM_HPP

#include <string>
#include <vector>

namespace autshift {

// A permutation of {0..degree-1} in one-line notation.
class Perm {
public:
    explicit Perm(int degree);                  // identity
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    Perm inverse() const;
    // (a * b)(x) = a(b(x))
    Perm operator*(const Perm& other) const;
    bool is_identity() const;
    int order() const;

    bool operator==(const Perm& other) const { return images_ == other.images_; }
    bool operator<(const Perm& other) const { return images_ < other.images_; }

    // cycle notation on 1-based points, e.g. "(1 2)(3 4)"; "id" for identity
    std::string cycles() const;

private:
    std::vector<int> images_;
};

class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool contains(const Perm& p) const;
    bool operator==(const PermGroup& other) const;

    static PermGroup symmetric(int degree);
    static PermGroup alternating(int degree);

private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;  // sorted
};

// All permutations of the full symmetric group commuting with every
// generator. Brute force over degree! elements; the degree is capped.
PermGroup centralizer(const PermGroup& group, int degree_cap = 8);

} // namespace autshift

#endif
