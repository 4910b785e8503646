#include "autshift/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace autshift {

Perm::Perm(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || hit[x])
            throw std::invalid_argument("not a permutation");
        hit[x] = true;
    }
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
    return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> out(images_.size());
    for (int x = 0; x < degree(); ++x) out[x] = images_[other.images_[x]];
    return Perm(std::move(out));
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[x] != x) return false;
    return true;
}

int Perm::order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

std::string Perm::cycles() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (done[x] || images_[x] == x) continue;
        out += '(';
        int y = x;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(y + 1);
            done[y] = true;
            y = images_[y];
            first = false;
        } while (y != x);
        out += ')';
    }
    return out.empty() ? "id" : out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const Perm& g : generators_)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    std::set<Perm> closed;
    std::deque<Perm> queue;
    Perm id(degree);
    closed.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm p = queue.front();
        queue.pop_front();
        for (const Perm& g : generators_) {
            Perm q = p * g;
            if (closed.insert(q).second) queue.push_back(q);
        }
    }
    elements_.assign(closed.begin(), closed.end());
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
}

PermGroup PermGroup::symmetric(int degree) {
    std::vector<Perm> gens;
    if (degree >= 2) {
        std::vector<int> t(degree);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.push_back(Perm(t));
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
        gens.push_back(Perm(c));
    }
    return PermGroup(degree, gens);
}

PermGroup PermGroup::alternating(int degree) {
    std::vector<Perm> gens;
    for (int i = 0; i + 2 < degree + 0; ++i) {
        std::vector<int> c(degree);
        std::iota(c.begin(), c.end(), 0);
        c[i] = i + 1;
        c[i + 1] = i + 2;
        c[i + 2] = i;
        gens.push_back(Perm(c));
    }
    return PermGroup(degree, gens);
}

PermGroup centralizer(const PermGroup& group, int degree_cap) {
    const int n = group.degree();
    if (n > degree_cap) throw std::invalid_argument("centralizer degree exceeds cap");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Perm> commuting;
    do {
        Perm p{std::vector<int>(perm)};
        bool ok = true;
        for (const Perm& g : group.generators()) {
            if (!(p * g == g * p)) {
                ok = false;
                break;
            }
        }
        if (ok) commuting.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PermGroup(n, commuting);
}

} // namespace autshift
