#include <algorithm>
#include <stdexcept>

#include "engel/grading.hpp"

namespace engel {

std::vector<GeneratorId> GradingAssignment::generators() const {
    std::vector<GeneratorId> out;
    for (auto& [g, p] : parities) out.push_back(g);
    return out;
}

bool GradingAssignment::all_even() const {
    for (auto& [g, p] : parities)
        if (p == Parity::odd) return false;
    return true;
}

std::vector<GradingAssignment> all_gradings(const std::vector<GeneratorId>& gens) {
    if (gens.size() >= 8 * sizeof(unsigned long))
        throw std::invalid_argument("too many generators to enumerate gradings");
    std::vector<GradingAssignment> out;
    for (unsigned long mask = 0; mask < (1ul << gens.size()); ++mask) {
        GradingAssignment g;
        for (std::size_t i = 0; i < gens.size(); ++i)
            g.parities[gens[i]] = (mask >> i) & 1 ? Parity::odd : Parity::even;
        out.push_back(std::move(g));
    }
    return out;
}

Parity parity(const Multiweight& w, const GradingAssignment& g) {
    int odd_degree = 0;
    for (auto& [gen, d] : w.degrees()) {
        auto it = g.parities.find(gen);
        if (it == g.parities.end())
            throw std::invalid_argument("generator " + to_string(gen) + " has no assigned parity");
        if (it->second == Parity::odd) odd_degree += d;
    }
    return odd_degree % 2 ? Parity::odd : Parity::even;
}

ParityClass parity_class(const BasisMonomial& c, const GradingAssignment& g) {
    return parity(c.multiweight(), g) == Parity::even ? ParityClass::C0 : ParityClass::C1;
}

Lemma1Bound lemma1_bound(int n, int m) {
    if (n < 2) throw std::invalid_argument("lemma1_bound needs n >= 2");
    if (m < 1) throw std::invalid_argument("lemma1_bound needs m >= 1");
    int exponent = (n - 1) * (m - 1) + 1 + m;
    Int power;
    mpz_pow_ui(power.get_mpz_t(), Int(n).get_mpz_t(), exponent);
    Rat bound = Rat(power - 1) / Rat(n - 1);
    Int K;
    mpz_fdiv_q(K.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    K += 1;
    return {bound, K};
}

Int higgins_bound(int n, int r) {
    if (n < 2) throw std::invalid_argument("higgins_bound needs n >= 2");
    if (r < 1) throw std::invalid_argument("higgins_bound needs r >= 1");
    Int power;
    mpz_pow_ui(power.get_mpz_t(), Int(n).get_mpz_t(), r);
    return (power - 1) / (n - 1);
}

BoundReport bound_report(int n, int m) {
    BoundReport r;
    r.n = n;
    r.m = m;
    r.derived_length_bound = (n - 1) * (m - 1) + 1 + m;
    auto [bound, K] = lemma1_bound(n, m);
    r.lemma1 = bound;
    r.K = K;
    r.higgins = higgins_bound(n, r.derived_length_bound.get_si());
    return r;
}

Int adjan_razborov_F(int n, int r, const Int& i, const ARPolicy& policy) {
    if (n < 1 || r < 1 || i < 0)
        throw std::invalid_argument("adjan_razborov_F needs n, r >= 1 and i >= 0");
    Int value = 1;
    Int digits_r = static_cast<unsigned long>(mpz_sizeinbase(Int(r).get_mpz_t(), 10));
    for (Int level = 1; level <= i; ++level) {
        if (r == 1) {
            value = n;
            continue;
        }
        Int exponent = 3 * value;
        // decimal digits of n * r^exponent, estimated from above
        if (exponent * digits_r + 1 > Int(static_cast<unsigned long>(policy.digit_cap)) ||
            !exponent.fits_ulong_p())
            throw ResourceError("adjan_razborov_F: digit cap exceeded at level " +
                                level.get_str() + " of " + i.get_str());
        Int power;
        mpz_pow_ui(power.get_mpz_t(), Int(r).get_mpz_t(), exponent.get_ui());
        value = n * power;
    }
    return value;
}

Int adjan_razborov_N(int n, int r, const ARPolicy& policy) {
    if (n < 2 || r < 4) throw std::invalid_argument("adjan_razborov_N needs n >= 2 and r >= 4");
    Int N = 6;
    for (int s = 5; s <= r; ++s) {
        int exponent;
        if ((n + 6) % 2 == 0)
            exponent = (n + 6) / 2;
        else if (policy.round_half_up)
            exponent = (n + 7) / 2;
        else
            throw std::invalid_argument(
                "adjan_razborov_N: 3^((n+6)/2) has a half-integer exponent for odd n; "
                "enable the round-half-up policy to proceed");
        Int power3;
        mpz_pow_ui(power3.get_mpz_t(), Int(3).get_mpz_t(), exponent);
        N = adjan_razborov_F(n, s, N * N * power3, policy);
    }
    return N;
}

namespace {

// All multiweights over gens with 1 <= total <= W, by increasing total.
std::vector<Multiweight> layers_up_to(const std::vector<GeneratorId>& gens, int W) {
    std::vector<Multiweight> out;
    Multiweight current;
    auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (g == gens.size()) {
            if (current.total() >= 1) out.push_back(current);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            if (d) current.add(gens[g], d);
            self(self, g + 1, remaining - d);
            if (d) current.add(gens[g], -d);
        }
    };
    rec(rec, 0, W);
    std::sort(out.begin(), out.end(), [](const Multiweight& a, const Multiweight& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

// Pads the given element out to the layer w by left-normed generator
// letters, in every distinct letter order, and feeds the results to sink.
template <typename Sink>
void padded_into_layer(const LieElement& e, const Multiweight& w, Sink&& sink) {
    Multiweight rem = w - e.multiweight();
    Word letters;
    for (auto& [g, d] : rem.degrees()) letters.insert(letters.end(), d, g);
    if (letters.empty()) {
        sink(e);
        return;
    }
    do {
        std::vector<LieElement> entries{e};
        for (auto& g : letters) entries.push_back(LieElement::generator(g));
        sink(left_normed(entries));
    } while (std::next_permutation(letters.begin(), letters.end()));
}

}  // namespace

DerivedSeriesReport derived_series_in_quotient(const std::vector<Identity>& ids,
                                               const std::vector<GeneratorId>& gens, int W,
                                               std::size_t ambient_cap) {
    if (gens.empty() || W < 1) throw std::invalid_argument("need generators and W >= 1");
    DerivedSeriesReport report;

    // spanning representatives of the current derived term, per layer,
    // modulo the consequence space
    std::map<Multiweight, std::vector<LieElement>> reps;
    for (auto& w : layers_up_to(gens, W)) {
        LayerSpan span = consequence_space(ids, w, ambient_cap).span;
        std::vector<LieElement> r;
        for (auto& mono : lyndon_basis_of_multiweight(w)) {
            LieElement e = LieElement::monomial(mono);
            if (span.add(e)) r.push_back(std::move(e));
        }
        if (!r.empty()) reps.emplace(w, std::move(r));
    }

    while (true) {
        std::map<Multiweight, std::size_t> dims;
        for (auto& [w, r] : reps) dims.emplace(w, r.size());
        report.layer_dims.push_back(std::move(dims));
        if (reps.empty()) break;

        std::map<Multiweight, std::vector<LieElement>> candidates;
        for (auto& [w1, r1] : reps)
            for (auto& [w2, r2] : reps) {
                if (w1.total() + w2.total() > W) continue;
                for (auto& a : r1)
                    for (auto& b : r2) {
                        LieElement c = bracket(a, b);
                        if (!c.is_zero()) candidates[w1 + w2].push_back(std::move(c));
                    }
            }

        std::map<Multiweight, std::vector<LieElement>> next;
        for (auto& [w, cand] : candidates) {
            LayerSpan span = consequence_space(ids, w, ambient_cap).span;
            std::vector<LieElement> r;
            for (auto& e : cand)
                if (span.add(e)) r.push_back(e);
            if (!r.empty()) next.emplace(w, std::move(r));
        }
        reps = std::move(next);
    }

    report.stabilized = true;  // truncation forces L^(i) = 0 once 2^i > W
    report.derived_length = static_cast<int>(report.layer_dims.size()) - 1;
    return report;
}

Lemma1Report verify_lemma1_collection(int n, int m, const GradingAssignment& g, int W,
                                      std::size_t ambient_cap) {
    if (n < 2 || m < 1) throw std::invalid_argument("need n >= 2 and m >= 1");
    if (g.parities.empty() || W < 1)
        throw std::invalid_argument("need assigned generators and W >= 1");

    Lemma1Report report;
    report.n = n;
    report.m = m;
    report.W = W;
    auto [bound, K] = lemma1_bound(n, m);
    report.full_bound = bound;
    report.full_K = K;
    report.collection_threshold = (n - 1) * (m - 1);

    std::vector<GeneratorId> gens = g.generators();
    report.reduced_K = static_cast<int>(gens.size());

    std::vector<BasisMonomial> c0, c1;
    for (auto& mono : lyndon_basis(gens, W))
        (parity_class(mono, g) == ParityClass::C0 ? c0 : c1).push_back(mono);
    report.vacuous = c1.empty();

    Identity engel = engel_identity(n);

    // generators of the ideal I: [c1,...,cm] over all m-tuples from C0
    std::vector<LieElement> ideal_gens;
    {
        std::vector<LieElement> tuple;
        auto rec = [&](auto&& self, int depth, int budget) -> void {
            if (depth == m) {
                LieElement u = left_normed(tuple);
                if (!u.is_zero()) ideal_gens.push_back(std::move(u));
                return;
            }
            for (auto& c : c0) {
                if (c.weight() > budget) continue;
                tuple.push_back(LieElement::monomial(c));
                self(self, depth + 1, budget - c.weight());
                tuple.pop_back();
            }
        };
        rec(rec, 0, W);
    }

    // membership spans (Engel consequences + the layer of I), built lazily
    std::map<Multiweight, LayerSpan> spans;
    auto span_for = [&](const Multiweight& w) -> LayerSpan& {
        auto it = spans.find(w);
        if (it != spans.end()) return it->second;
        LayerSpan span = consequence_space({engel}, w, ambient_cap).span;
        for (auto& u : ideal_gens)
            if (w.contains(u.multiweight()))
                padded_into_layer(u, w, [&](const LieElement& e) { span.add(e); });
        return spans.emplace(w, std::move(span)).first->second;
    };

    // every [a, b1,...,bk] with a in C1, bi in C0, k > (n-1)(m-1)
    report.collection_holds = true;
    std::vector<LieElement> entries;
    auto check_tuples = [&](auto&& self, int k_so_far, int budget) -> void {
        if (!report.collection_holds) return;
        if (k_so_far > report.collection_threshold) {
            LieElement e = left_normed(entries);
            if (!e.is_zero()) {
                ++report.collection_checked;
                if (!span_for(e.multiweight()).contains(e)) {
                    report.collection_holds = false;
                    report.first_failure = to_string(e);
                    return;
                }
            }
        }
        for (auto& b : c0) {
            if (b.weight() > budget) continue;
            entries.push_back(LieElement::monomial(b));
            self(self, k_so_far + 1, budget - b.weight());
            entries.pop_back();
        }
    };
    for (auto& a : c1) {
        entries.assign(1, LieElement::monomial(a));
        check_tuples(check_tuples, 0, W - a.weight());
        if (!report.collection_holds) break;
    }

    // the reduced-K stand-in for [x1,...,xK]
    if (report.reduced_K <= W) {
        report.product_checked = true;
        std::vector<LieElement> letters;
        for (auto& gen : gens) letters.push_back(LieElement::generator(gen));
        LieElement product = left_normed(letters);
        if (product.is_zero()) {
            report.product_in_ideal = true;
        } else if (auto cert = span_for(product.multiweight()).express(product)) {
            report.product_in_ideal = true;
            report.measured_T = cert->size();
        } else if (report.first_failure.empty()) {
            report.first_failure = to_string(product);
        }
    }

    report.passed =
        report.collection_holds && (!report.product_checked || report.product_in_ideal);
    return report;
}

}  // namespace engel
