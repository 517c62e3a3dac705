#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "engel/generator.hpp"

namespace engel {

// Degree vector of a homogeneous element: generator -> positive degree.
// Zero entries are never stored, so equal multiweights compare equal.
class Multiweight {
public:
    Multiweight() = default;

    int degree(const GeneratorId& g) const {
        auto it = deg_.find(g);
        return it == deg_.end() ? 0 : it->second;
    }

    void add(const GeneratorId& g, int k) {
        if (k == 0) return;
        int d = deg_[g] += k;
        if (d < 0) throw std::invalid_argument("negative degree in multiweight");
        if (d == 0) deg_.erase(g);
    }

    int total() const {
        int t = 0;
        for (auto& [g, d] : deg_) t += d;
        return t;
    }

    bool empty() const { return deg_.empty(); }

    const std::map<GeneratorId, int>& degrees() const { return deg_; }

    friend Multiweight operator+(const Multiweight& a, const Multiweight& b) {
        Multiweight r = a;
        for (auto& [g, d] : b.deg_) r.add(g, d);
        return r;
    }

    // Componentwise a - b; throws if any component would go negative.
    friend Multiweight operator-(const Multiweight& a, const Multiweight& b) {
        Multiweight r = a;
        for (auto& [g, d] : b.deg_) r.add(g, -d);
        return r;
    }

    // b <= a componentwise?
    bool contains(const Multiweight& b) const {
        for (auto& [g, d] : b.deg_)
            if (degree(g) < d) return false;
        return true;
    }

    // Degree exactly one in every supported generator.
    bool is_multilinear() const {
        for (auto& [g, d] : deg_)
            if (d != 1) return false;
        return true;
    }

    friend auto operator<=>(const Multiweight& a, const Multiweight& b) = default;

    // Multilinear multiweight over the given generators.
    static Multiweight multilinear(const std::vector<GeneratorId>& gens) {
        Multiweight w;
        for (auto& g : gens) w.add(g, 1);
        return w;
    }

private:
    std::map<GeneratorId, int> deg_;
};

std::string to_string(const Multiweight& w);

}  // namespace engel
