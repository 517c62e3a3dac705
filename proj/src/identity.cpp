#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "engel/identity.hpp"

namespace engel {

namespace {

std::set<GeneratorId> occurring_generators(const LieElement& e) {
    std::set<GeneratorId> gens;
    for (auto& [m, c] : e.terms())
        for (auto& g : m.word) gens.insert(g);
    return gens;
}

}  // namespace

Identity::Identity(LieElement body, std::vector<GeneratorId> variables) {
    if (body.is_zero()) throw std::invalid_argument("the zero identity is rejected");
    std::set<GeneratorId> vars(variables.begin(), variables.end());
    for (auto& g : occurring_generators(body))
        if (!vars.count(g))
            throw std::invalid_argument("generator " + to_string(g) +
                                        " occurs in the body but is not a listed variable");
    body_ = std::move(body);
    vars_ = std::move(variables);
}

Identity Identity::unchecked(LieElement body, std::vector<GeneratorId> variables) {
    Identity id;
    id.body_ = std::move(body);
    id.vars_ = std::move(variables);
    return id;
}

int Identity::degree_in(const GeneratorId& var) const {
    int deg = -1;
    for (auto& [m, c] : body_.terms()) {
        int d = m.multiweight().degree(var);
        if (deg == -1) deg = d;
        if (d != deg)
            throw std::invalid_argument("body is not homogeneous in " + to_string(var));
    }
    return deg == -1 ? 0 : deg;
}

Identity engel_identity(int n) {
    if (n < 1) throw std::invalid_argument("engel_identity needs n >= 1");
    auto y = GeneratorId::single(1);
    auto x = GeneratorId::single(2);
    std::vector<LieElement> entries{LieElement::generator(y)};
    for (int i = 0; i < n; ++i) entries.push_back(LieElement::generator(x));
    return Identity(left_normed(std::span<const LieElement>(entries)), {y, x});
}

Identity polarize(const Identity& id, const GeneratorId& variable, int parts,
                  const std::vector<GeneratorId>& fresh) {
    auto& vars = id.variables();
    auto pos = std::find(vars.begin(), vars.end(), variable);
    if (pos == vars.end())
        throw std::invalid_argument(to_string(variable) + " is not a variable of the identity");
    if (parts < 1 || static_cast<int>(fresh.size()) != parts)
        throw std::invalid_argument("need exactly `parts` fresh generators");
    std::set<GeneratorId> fresh_set(fresh.begin(), fresh.end());
    if (fresh_set.size() != fresh.size())
        throw std::invalid_argument("fresh generators must be distinct");
    for (auto& g : vars)
        if (fresh_set.count(g))
            throw std::invalid_argument("fresh generator " + to_string(g) + " already in use");

    int d = id.degree_in(variable);
    if (d < parts) throw std::invalid_argument("cannot polarize below degree");

    LieElement sum;
    for (auto& g : fresh) sum += LieElement::generator(g);
    LieElement expanded = substitute(id.body(), {{variable, sum}});

    // Collect the terms in which every fresh generator occurs; for
    // parts == d this is exactly the multilinear component.
    LieElement collected;
    for (auto& [m, c] : expanded.terms()) {
        Multiweight mw = m.multiweight();
        bool all = true;
        for (auto& g : fresh)
            if (mw.degree(g) == 0) {
                all = false;
                break;
            }
        if (all) collected.add_term(m, c);
    }

    std::vector<GeneratorId> new_vars(vars.begin(), pos);
    new_vars.insert(new_vars.end(), fresh.begin(), fresh.end());
    new_vars.insert(new_vars.end(), pos + 1, vars.end());
    return Identity(std::move(collected), std::move(new_vars));
}

Identity expand_relation_one(int m, int k, const RelationOneSkeleton& skeleton) {
    if (m < 1) throw std::invalid_argument("expand_relation_one needs m >= 1");
    if (k < 2) throw std::invalid_argument("expand_relation_one needs k >= 2");
    if (!skeleton.gaps.empty() && static_cast<int>(skeleton.gaps.size()) != k)
        throw std::invalid_argument("skeleton must provide one gap per block (or none)");

    std::vector<GeneratorId> vars = grid_generators(k, m);
    std::set<GeneratorId> grid(vars.begin(), vars.end());
    for (auto& gap : skeleton.gaps)
        for (auto& g : gap) {
            if (grid.count(g))
                throw std::invalid_argument("skeleton entry " + to_string(g) +
                                            " collides with a moving generator");
            if (std::find(vars.begin(), vars.end(), g) == vars.end()) vars.push_back(g);
        }

    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    LieElement sum;
    std::vector<std::size_t> odometer(m, 0);  // sigma_i = perms[odometer[i-1]]
    while (true) {
        std::vector<LieElement> entries;
        for (int j = 1; j <= k; ++j) {
            std::vector<LieElement> block;
            for (int i = 1; i <= m; ++i)
                block.push_back(
                    LieElement::generator(GeneratorId::indexed(perms[odometer[i - 1]][j - 1], i)));
            entries.push_back(left_normed(std::span<const LieElement>(block)));
            if (!skeleton.gaps.empty())
                for (auto& g : skeleton.gaps[j - 1]) entries.push_back(LieElement::generator(g));
        }
        sum += left_normed(std::span<const LieElement>(entries));

        int i = 0;
        while (i < m && ++odometer[i] == perms.size()) odometer[i++] = 0;
        if (i == m) break;
    }
    return Identity::unchecked(std::move(sum), std::move(vars));
}

// ---------------------------------------------------------------------------
// LayerSpan

LayerSpan::LayerSpan(const Multiweight& w, std::size_t ambient_cap) : target_(w) {
    layer_ = lyndon_basis_of_multiweight(w);
    if (layer_.size() > ambient_cap)
        throw ResourceError("layer " + to_string(w) + " has ambient dimension " +
                            std::to_string(layer_.size()) + ", above the cap " +
                            std::to_string(ambient_cap));
    for (std::size_t i = 0; i < layer_.size(); ++i) index_.emplace(layer_[i], i);
}

std::vector<Rat> LayerSpan::coordinates(const LieElement& e) const {
    std::vector<Rat> v(layer_.size(), Rat(0));
    for (auto& [m, c] : e.terms()) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::invalid_argument("element has a term outside the layer: " + to_string(m));
        v[it->second] = c;
    }
    return v;
}

bool LayerSpan::add(const LieElement& e) {
    if (e.is_zero()) return false;
    std::vector<Rat> v = coordinates(e);
    std::map<std::size_t, Rat> comb{{members_.size(), Rat(1)}};
    members_.push_back(e);

    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = v[pivots_[r]];
        if (f == 0) continue;
        Rat factor = f;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (rows_[r][c] != 0) v[c] -= factor * rows_[r][c];
        for (auto& [j, cf] : combs_[r]) {
            auto [it, ins] = comb.try_emplace(j, -factor * cf);
            if (!ins) {
                it->second -= factor * cf;
                if (it->second == 0) comb.erase(it);
            }
        }
    }

    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;  // dependent

    Rat lead = v[pivot];
    for (auto& c : v) c /= lead;
    for (auto& [j, cf] : comb) cf /= lead;

    // back-substitute into existing rows to keep full reduced form
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat f = rows_[r][pivot];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) rows_[r][c] -= f * v[c];
        for (auto& [j, cf] : comb) {
            auto [it, ins] = combs_[r].try_emplace(j, -f * cf);
            if (!ins) {
                it->second -= f * cf;
                if (it->second == 0) combs_[r].erase(it);
            }
        }
    }

    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + at, std::move(v));
    combs_.insert(combs_.begin() + at, std::move(comb));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
}

bool LayerSpan::contains(const LieElement& e) const {
    if (e.is_zero()) return true;
    std::vector<Rat> v = coordinates(e);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat f = v[pivots_[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

std::optional<std::vector<std::pair<Rat, LieElement>>> LayerSpan::express(
    const LieElement& target) const {
    std::vector<Rat> v = coordinates(target);
    std::map<std::size_t, Rat> comb;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat f = v[pivots_[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
        for (auto& [j, cf] : combs_[r]) {
            auto [it, ins] = comb.try_emplace(j, f * cf);
            if (!ins) {
                it->second += f * cf;
                if (it->second == 0) comb.erase(it);
            }
        }
    }
    for (auto& c : v)
        if (c != 0) return std::nullopt;
    std::vector<std::pair<Rat, LieElement>> cert;
    for (auto& [j, cf] : comb) cert.emplace_back(cf, members_[j]);
    return cert;
}

// ---------------------------------------------------------------------------
// substitution instances

namespace {

// Fully multilinearized form of an identity plus the grouping of its fresh
// variables by original variable (fresh variables within one group are
// interchangeable by symmetry of the polarized body).
struct Multilinearized {
    Identity id;
    std::vector<std::vector<GeneratorId>> groups;
};

int max_single_index(const Identity& id, const Multiweight& w) {
    int mx = 0;
    auto see = [&](const GeneratorId& g) {
        if (!g.is_double()) mx = std::max(mx, g.row);
    };
    for (auto& g : id.variables()) see(g);
    for (auto& [m, c] : id.body().terms())
        for (auto& g : m.word) see(g);
    for (auto& [g, d] : w.degrees()) see(g);
    return mx;
}

Multilinearized multilinearize(const Identity& id, const Multiweight& w) {
    int next = max_single_index(id, w) + 1;
    Multilinearized out{Identity::unchecked(id.body(), id.variables()), {}};
    for (auto& var : id.variables()) {
        int d = out.id.degree_in(var);
        if (d == 0) continue;
        std::vector<GeneratorId> fresh;
        for (int i = 0; i < d; ++i) fresh.push_back(GeneratorId::single(next++));
        out.id = polarize(out.id, var, d, fresh);
        out.groups.push_back(std::move(fresh));
    }
    return out;
}

struct InstanceEnumerator {
    const Multilinearized& ml;
    std::vector<std::pair<Multiweight, BasisMonomial>> candidates;
    std::vector<LieElement> out;
    std::set<std::string> seen;

    std::map<GeneratorId, LieElement> assignment;
    std::vector<std::size_t> chosen;  // candidate index per fresh variable

    void pads_and_emit(const Multiweight& remaining) {
        LieElement base = substitute(ml.id.body(), assignment);
        if (base.is_zero()) return;
        Word letters;
        for (auto& [g, d] : remaining.degrees())
            for (int i = 0; i < d; ++i) letters.push_back(g);
        Word pad = letters;
        do {
            LieElement inst = base;
            for (auto& g : pad) inst = bracket(inst, LieElement::generator(g));
            if (inst.is_zero()) continue;
            std::string key = to_string(inst);
            if (seen.insert(std::move(key)).second) out.push_back(std::move(inst));
        } while (std::next_permutation(pad.begin(), pad.end()));
    }

    void assign(std::size_t group, std::size_t slot, std::size_t min_candidate,
                const Multiweight& remaining) {
        if (group == ml.groups.size()) {
            pads_and_emit(remaining);
            return;
        }
        if (slot == ml.groups[group].size()) {
            assign(group + 1, 0, 0, remaining);
            return;
        }
        const GeneratorId& var = ml.groups[group][slot];
        // nondecreasing candidate index within a group: the polarized body
        // is symmetric in the group, so other orders give the same element
        for (std::size_t ci = min_candidate; ci < candidates.size(); ++ci) {
            auto& [cw, cm] = candidates[ci];
            if (!remaining.contains(cw)) continue;
            assignment[var] = LieElement::monomial(cm);
            assign(group, slot + 1, ci, remaining - cw);
            assignment.erase(var);
        }
    }
};

std::vector<std::pair<Multiweight, BasisMonomial>> candidate_monomials(const Multiweight& w) {
    // every sub-multiweight of w, every Lyndon monomial of that content
    std::vector<std::pair<GeneratorId, int>> supp(w.degrees().begin(), w.degrees().end());
    std::vector<std::pair<Multiweight, BasisMonomial>> cands;
    std::vector<int> pick(supp.size(), 0);
    while (true) {
        Multiweight v;
        for (std::size_t i = 0; i < supp.size(); ++i) v.add(supp[i].first, pick[i]);
        if (v.total() >= 1)
            for (auto& m : lyndon_basis_of_multiweight(v)) cands.emplace_back(v, m);
        std::size_t i = 0;
        while (i < supp.size() && ++pick[i] > supp[i].second) pick[i++] = 0;
        if (i == supp.size()) break;
    }
    std::sort(cands.begin(), cands.end(),
              [](auto& a, auto& b) { return a.second < b.second; });
    return cands;
}

}  // namespace

std::vector<LieElement> substitution_instances(const Identity& id, const Multiweight& w,
                                               std::size_t ambient_cap) {
    LayerSpan probe(w, ambient_cap);  // enforces the ambient cap
    (void)probe;
    if (id.body().is_zero()) return {};
    Multilinearized ml = multilinearize(id, w);
    InstanceEnumerator en{ml, candidate_monomials(w), {}, {}, {}, {}};
    en.assign(0, 0, 0, w);
    return std::move(en.out);
}

ConsequenceSpace consequence_space(const std::vector<Identity>& ids, const Multiweight& w,
                                   std::size_t ambient_cap) {
    ConsequenceSpace cs{LayerSpan(w, ambient_cap)};
    for (auto& id : ids)
        for (auto& inst : substitution_instances(id, w, ambient_cap)) cs.span.add(inst);
    return cs;
}

ConsequenceCheck is_consequence(const LieElement& target, const std::vector<Identity>& ids,
                                std::size_t ambient_cap) {
    if (target.is_zero()) return {true, {}};
    if (!target.is_homogeneous())
        throw std::invalid_argument("is_consequence needs a homogeneous target");
    ConsequenceSpace cs = consequence_space(ids, target.multiweight(), ambient_cap);
    auto cert = cs.span.express(target);
    if (!cert) return {false, {}};

    // certificate soundness: re-evaluate exactly
    LieElement check;
    for (auto& [c, inst] : *cert) check += c * inst;
    if (!(check == target))
        throw std::logic_error("certificate failed to re-evaluate to the target");
    return {true, std::move(*cert)};
}

}  // namespace engel
