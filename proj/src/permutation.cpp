#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "engel/permutation.hpp"

namespace engel {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("negative permutation degree");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<bool> hit(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v < 1 || v > static_cast<int>(images.size()) || hit[v - 1])
            throw std::invalid_argument("one-line notation is not a bijection");
        hit[v - 1] = true;
        p.img_[i] = v;
    }
    return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 1 || b < 1 || a > degree || b > degree)
        throw std::invalid_argument("transposition point out of range");
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

int Permutation::apply(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("point out of range");
    return img_[i - 1];
}

Permutation Permutation::then(const Permutation& second) const {
    if (degree() != second.degree())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i) r.img_[i - 1] = second.img_[img_[i - 1] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i) r.img_[img_[i - 1] - 1] = i;
    return r;
}

int Permutation::sign() const {
    std::vector<bool> seen(degree(), false);
    int parity = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j] - 1;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

std::string to_string(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    std::ostringstream os;
    bool any = false;
    for (int i = 1; i <= p.degree(); ++i) {
        if (seen[i - 1] || p.apply(i) == i) continue;
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            os << (first ? "" : " ") << j;
            first = false;
            j = p.apply(j);
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

Permutation parse_permutation(const std::string& s, int degree) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad permutation '" + s + "': " + why);
    };
    std::size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip();
    if (i == s.size()) fail("empty");

    if (s[i] == '[') {
        std::vector<int> images;
        ++i;
        while (true) {
            skip();
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(s.substr(i), &used);
            } catch (const std::logic_error&) {
                fail("expected integer");
            }
            i += used;
            images.push_back(v);
            skip();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= s.size() || s[i] != ']') fail("expected ']'");
        ++i;
        skip();
        if (i != s.size()) fail("trailing input");
        if (degree >= 0 && degree != static_cast<int>(images.size()))
            fail("one-line length disagrees with requested degree");
        return Permutation::from_one_line(images);
    }

    // cycle notation
    std::vector<std::vector<int>> cycles;
    int max_point = 0;
    while (i < s.size()) {
        skip();
        if (i == s.size()) break;
        if (s[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip();
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(s.substr(i), &used);
            } catch (const std::logic_error&) {
                fail("expected point");
            }
            if (v < 1) fail("points are 1-based");
            i += used;
            cycle.push_back(v);
            max_point = std::max(max_point, v);
        }
        cycles.push_back(std::move(cycle));
        skip();
    }
    int n = degree >= 0 ? degree : max_point;
    if (max_point > n) fail("point exceeds degree");
    Permutation p(n);
    for (auto& cycle : cycles) {
        if (cycle.size() < 2) continue;
        Permutation c(n);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j], to = cycle[(j + 1) % cycle.size()];
            if (img[from - 1] != from) fail("repeated point in cycles");
            img[from - 1] = to;
        }
        p = p.then(Permutation::from_one_line(img));
    }
    return p;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> one_line(n);
    std::iota(one_line.begin(), one_line.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation::from_one_line(one_line));
    while (std::next_permutation(one_line.begin(), one_line.end()));
    return out;
}

}  // namespace engel
