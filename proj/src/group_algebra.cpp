#include <sstream>
#include <stdexcept>

#include "engel/group_algebra.hpp"

namespace engel {

void GroupAlgebraElement::add_term(const Permutation& p, const Rat& c) {
    if (c == 0) return;
    if (p.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("group algebra degree mismatch");
    for (auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("group algebra degree mismatch");
    for (auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("group algebra degree mismatch");
    GroupAlgebraElement r(a.degree_);
    for (auto& [p, cp] : a.terms_)
        for (auto& [q, cq] : b.terms_) r.add_term(p.then(q), cp * cq);
    return r;
}

std::string to_string(const GroupAlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : e.terms()) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << rat_to_string(mag) << "*";
        os << to_string(p);
    }
    return os.str();
}

}  // namespace engel
