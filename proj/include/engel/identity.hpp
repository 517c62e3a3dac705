#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "engel/lie_element.hpp"

namespace engel {

// An identical relation: body = 0, understood as holding under every
// substitution for its variables.
class Identity {
public:
    Identity(LieElement body, std::vector<GeneratorId> variables);

    // Relation builders may legitimately produce the zero relation
    // (e.g. the k=2, m=1 instance of relation (1) dies by antisymmetry);
    // this constructor skips the nonzero check.
    static Identity unchecked(LieElement body, std::vector<GeneratorId> variables);

    const LieElement& body() const { return body_; }
    const std::vector<GeneratorId>& variables() const { return vars_; }

    // Degree of body in var; throws if body is not homogeneous in var.
    int degree_in(const GeneratorId& var) const;

private:
    Identity() = default;
    LieElement body_;
    std::vector<GeneratorId> vars_;
};

// The n-Engel relation [y,x,...,x] = 0 (n occurrences of x), with
// y := x1 and x := x2.
Identity engel_identity(int n);

// Substitutes fresh[0]+...+fresh[parts-1] for variable and keeps the
// component in which every fresh generator occurs; for parts equal to the
// degree this is the multilinear (fully polarized) component.
Identity polarize(const Identity& id, const GeneratorId& variable, int parts,
                  const std::vector<GeneratorId>& fresh);

// Fixed entries inserted between the k repeated commutator blocks of
// relation (1); gaps[j] follows block j+1. Empty means no gap entries.
struct RelationOneSkeleton {
    std::vector<std::vector<GeneratorId>> gaps;
};

// The multilinear relation (1): sum over (s_1,...,s_m) in Sym(k)^m of the
// left-normed product of the k blocks [x_(j s_1,1),...,x_(j s_m,m)],
// j = 1..k, with skeleton entries in the gaps. (k!)^m terms before
// normalization; the result may normalize to zero.
Identity expand_relation_one(int m, int k, const RelationOneSkeleton& skeleton = {});

// ---------------------------------------------------------------------------
// Exact linear algebra over one multiweight layer.

// Incrementally row-reduced span of elements of a fixed multiweight layer,
// with full bookkeeping: membership tests come with an expressing
// combination over the elements actually added.
class LayerSpan {
public:
    // Throws ResourceError if the layer dimension exceeds ambient_cap.
    LayerSpan(const Multiweight& w, std::size_t ambient_cap);

    std::size_t ambient_dim() const { return layer_.size(); }
    std::size_t rank() const { return rows_.size(); }
    const Multiweight& target() const { return target_; }
    const std::vector<BasisMonomial>& layer_basis() const { return layer_; }
    const std::vector<LieElement>& members() const { return members_; }

    // Adds e to the span; returns true when the rank grew. Zero elements
    // and elements already in the span are recorded but change nothing.
    bool add(const LieElement& e);

    bool contains(const LieElement& e) const;

    // Expressing combination: target = sum of coeff * member. Empty
    // optional when target is not in the span. Throws if target is not in
    // this layer.
    std::optional<std::vector<std::pair<Rat, LieElement>>> express(const LieElement& target) const;

private:
    std::vector<Rat> coordinates(const LieElement& e) const;

    Multiweight target_;
    std::vector<BasisMonomial> layer_;
    std::map<BasisMonomial, std::size_t> index_;
    std::vector<std::vector<Rat>> rows_;    // reduced row-echelon form
    std::vector<std::size_t> pivots_;       // pivot column of each row
    std::vector<std::map<std::size_t, Rat>> combs_;  // row = sum of comb * member
    std::vector<LieElement> members_;
};

inline constexpr std::size_t kDefaultAmbientCap = 50000;

// All substitution instances of id inside the multiweight-w layer:
// the fully multilinearized identity with basis monomials substituted for
// its variables, left-norm-padded by generators to fill out w. Their span
// is the full consequence subspace of the layer. ambient_cap bounds the
// layer dimension (ResourceError beyond it).
std::vector<LieElement> substitution_instances(const Identity& id, const Multiweight& w,
                                               std::size_t ambient_cap = kDefaultAmbientCap);

// Row-reduced span of all substitution instances of the given identities
// in one multiweight layer.
struct ConsequenceSpace {
    LayerSpan span;

    std::size_t ambient_dim() const { return span.ambient_dim(); }
    std::size_t rank() const { return span.rank(); }
    std::size_t quotient_dim() const { return span.ambient_dim() - span.rank(); }
};

ConsequenceSpace consequence_space(const std::vector<Identity>& ids, const Multiweight& w,
                                   std::size_t ambient_cap = kDefaultAmbientCap);

struct ConsequenceCheck {
    bool holds = false;
    // target = sum of coeff * instance; re-evaluates exactly to target.
    std::vector<std::pair<Rat, LieElement>> certificate;
};

// Decides whether target (homogeneous) lies in the consequence space of
// ids within its own multiweight layer.
ConsequenceCheck is_consequence(const LieElement& target, const std::vector<Identity>& ids,
                                std::size_t ambient_cap = kDefaultAmbientCap);

}  // namespace engel
