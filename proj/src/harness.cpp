#include <algorithm>
#include <set>
#include <stdexcept>

#include "engel/harness.hpp"
#include "engel/permutation.hpp"

namespace engel {

namespace {

bool is_moving(const GeneratorId& g, int R, int K) {
    return g.col >= 1 && g.col <= K && g.row >= 1 && g.row <= R;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Runs body for every tuple in Sym(R)^K, passing the per-column
// permutations and the product of signs over the sign-weighted columns.
template <typename Body>
void for_each_sigma_tuple(int R, const std::vector<bool>& sign_weighted, Body&& body) {
    auto sym = symmetric_group(R);
    int K = static_cast<int>(sign_weighted.size());
    std::vector<std::size_t> odo(K, 0);
    std::vector<const Permutation*> sigma(K, &sym[0]);
    while (true) {
        int sign = 1;
        for (int j = 0; j < K; ++j)
            if (sign_weighted[j]) sign *= sigma[j]->sign();
        body(sigma, sign);

        int j = K - 1;
        for (; j >= 0; --j) {
            if (++odo[j] < sym.size()) {
                sigma[j] = &sym[odo[j]];
                break;
            }
            odo[j] = 0;
            sigma[j] = &sym[0];
        }
        if (j < 0) break;
    }
}

}  // namespace

void SymmetrizedSumSpec::validate() const {
    if (R < 1 || K < 1) throw std::invalid_argument("need R >= 1 and K >= 1");
    if (static_cast<int>(sign_weighted.size()) != K)
        throw std::invalid_argument("need one epsilon per column");
    if (!gaps.empty() && static_cast<int>(gaps.size()) != R + 1)
        throw std::invalid_argument("skeleton needs R+1 gaps (a leading one, then one per slot)");
    std::set<GeneratorId> seen;
    for (auto& gap : gaps)
        for (auto& g : gap) {
            if (is_moving(g, R, K))
                throw std::invalid_argument("skeleton entry " + to_string(g) +
                                            " collides with a moving-slot generator");
            if (!seen.insert(g).second)
                throw std::invalid_argument("skeleton entry " + to_string(g) + " repeats");
        }
}

Int symmetrized_term_count(const SymmetrizedSumSpec& spec) {
    spec.validate();
    Int count;
    mpz_pow_ui(count.get_mpz_t(), factorial(spec.R).get_mpz_t(), spec.K);
    return count;
}

LieElement build_symmetrized_sum(const SymmetrizedSumSpec& spec, std::size_t term_cap) {
    spec.validate();
    if (symmetrized_term_count(spec) > static_cast<unsigned long>(term_cap))
        throw ResourceError("symmetrized sum has more than " + std::to_string(term_cap) +
                            " raw terms");
    LieElement sum;
    for_each_sigma_tuple(spec.R, spec.sign_weighted,
                         [&](const std::vector<const Permutation*>& sigma, int sign) {
                             std::vector<LieElement> entries;
                             auto push_gap = [&](int g) {
                                 if (spec.gaps.empty()) return;
                                 for (auto& gen : spec.gaps[g])
                                     entries.push_back(LieElement::generator(gen));
                             };
                             push_gap(0);
                             for (int i = 1; i <= spec.R; ++i) {
                                 std::vector<LieElement> slot;
                                 for (int j = 1; j <= spec.K; ++j)
                                     slot.push_back(LieElement::generator(
                                         GeneratorId::indexed(sigma[j - 1]->apply(i), j)));
                                 entries.push_back(left_normed(slot));
                                 push_gap(i);
                             }
                             sum += Rat(sign) * left_normed(entries);
                         });
    return sum;
}

std::map<GeneratorId, LieElement> endomorphism_theta(int i, int K) {
    if (i < 1 || K < 1) throw std::invalid_argument("need i >= 1 and K >= 1");
    std::map<GeneratorId, LieElement> images;
    for (int j = 1; j <= K; ++j)
        images.emplace(GeneratorId::single(j),
                       LieElement::generator(GeneratorId::indexed(i, j)));
    return images;
}

LieElement apply_theta(const LieElement& e, int i, int K) {
    return substitute(e, endomorphism_theta(i, K));
}

TauSwapReport check_tau_swap(const SymmetrizedSumSpec& spec, const std::vector<int>& positions,
                             int c1_weight) {
    spec.validate();
    if (positions.size() < 2) throw std::invalid_argument("need at least two chosen slots");
    std::set<int> chosen(positions.begin(), positions.end());
    if (chosen.size() != positions.size())
        throw std::invalid_argument("chosen slots must be distinct");
    for (int p : positions)
        if (p < 1 || p > spec.R) throw std::invalid_argument("chosen slot out of range");
    if (c1_weight < 1 || c1_weight > spec.K)
        throw std::invalid_argument("c1 must use columns 1..K");
    int odd_columns = 0;
    for (int l = 0; l < c1_weight; ++l) odd_columns += spec.sign_weighted[l];
    if (odd_columns % 2)
        throw std::invalid_argument("c1 must lie in C0: its sign-weighted column count is odd");

    TauSwapReport report;
    report.passed = true;

    auto slot_entry = [&](int s, const std::vector<const Permutation*>& sigma) {
        int width = chosen.count(s) ? c1_weight : spec.K;
        std::vector<LieElement> letters;
        for (int j = 1; j <= width; ++j)
            letters.push_back(
                LieElement::generator(GeneratorId::indexed(sigma[j - 1]->apply(s), j)));
        return left_normed(letters);
    };

    for_each_sigma_tuple(
        spec.R, spec.sign_weighted, [&](const std::vector<const Permutation*>& sigma, int) {
            if (!report.passed) return;
            for (std::size_t a = 0; a < positions.size() && report.passed; ++a)
                for (std::size_t b = a + 1; b < positions.size() && report.passed; ++b) {
                    int i = positions[a], j = positions[b];
                    ++report.checked;

                    // tau: per-column transpositions of the two c1 rows
                    std::map<GeneratorId, LieElement> tau;
                    for (int l = 1; l <= c1_weight; ++l) {
                        GeneratorId gi = GeneratorId::indexed(sigma[l - 1]->apply(i), l);
                        GeneratorId gj = GeneratorId::indexed(sigma[l - 1]->apply(j), l);
                        tau.emplace(gi, LieElement::generator(gj));
                        tau.emplace(gj, LieElement::generator(gi));
                    }

                    auto fail = [&](const std::string& what) {
                        report.passed = false;
                        report.failure = what + " for slots " + std::to_string(i) + "," +
                                         std::to_string(j) + " at sigma = (" +
                                         [&] {
                                             std::string s;
                                             for (int l = 0; l < spec.K; ++l)
                                                 s += (l ? ", " : "") + to_string(*sigma[l]);
                                             return s;
                                         }() +
                                         ")";
                    };

                    LieElement ei = slot_entry(i, sigma), ej = slot_entry(j, sigma);
                    if (substitute(ei, tau) != ej || substitute(ej, tau) != ei) {
                        fail("tau does not swap the two c1 entries");
                        continue;
                    }
                    for (int s = 1; s <= spec.R && report.passed; ++s) {
                        if (s == i || s == j) continue;
                        LieElement e = slot_entry(s, sigma);
                        if (substitute(e, tau) != e) fail("tau moves the entry of slot " +
                                                          std::to_string(s));
                    }
                    if (!spec.gaps.empty())
                        for (auto& gap : spec.gaps)
                            for (auto& g : gap)
                                if (tau.count(g)) fail("tau moves the skeleton entry " +
                                                       to_string(g));
                }
        });
    return report;
}

bool HarnessReport::all_passed() const {
    for (auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

HarnessReport verify_eq1_implies_vanishing(int n, int k, int m, int reduced_K, int W,
                                           std::size_t ambient_cap) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (k <= 1) throw std::invalid_argument("relation (1) requires k > 1");
    if (m < 1) throw std::invalid_argument("need m >= 1");
    if (reduced_K < m)
        throw std::invalid_argument("need reduced_K >= m (one column per block of c)");
    if (k * reduced_K > W)
        throw ResourceError("sum weight " + std::to_string(k * reduced_K) +
                            " exceeds the weight cap " + std::to_string(W));

    HarnessReport report;
    report.n = n;
    report.k = k;
    report.m = m;
    report.reduced_K = reduced_K;
    report.R = k;
    report.W = W;
    mpz_pow_ui(report.relation_terms.get_mpz_t(), factorial(k).get_mpz_t(), m);
    auto [bound, K] = lemma1_bound(n, m);
    report.full_bound = bound;
    report.full_K = K;

    std::vector<Identity> ids{expand_relation_one(m, k), engel_identity(n)};

    // m consecutive column blocks; c_i is the block commutator
    std::vector<std::pair<int, int>> blocks;  // [first, last] columns, 1-based
    {
        int base = reduced_K / m, extra = reduced_K % m, first = 1;
        for (int b = 0; b < m; ++b) {
            int size = base + (b < extra);
            blocks.emplace_back(first, first + size - 1);
            first += size;
        }
    }

    for (unsigned long mask = 0; mask < (1ul << reduced_K); ++mask) {
        std::vector<bool> eps(reduced_K);
        std::string name = "epsilon=";
        for (int j = 0; j < reduced_K; ++j) {
            eps[j] = (mask >> j) & 1;
            name += eps[j] ? '-' : '+';
        }
        CheckOutcome outcome;
        outcome.name = name;

        bool in_c0 = true;
        for (auto& [first, last] : blocks) {
            int odd = 0;
            for (int j = first; j <= last; ++j) odd += eps[j - 1];
            if (odd % 2) in_c0 = false;
        }
        if (!in_c0) {
            outcome.status = CheckStatus::skipped;
            outcome.reason = "some c_i is odd under this grading, outside C0";
            report.checks.push_back(std::move(outcome));
            continue;
        }

        // c = [c_1,...,c_m] in the single variables x_1..x_K
        std::vector<LieElement> block_elems;
        for (auto& [first, last] : blocks) {
            std::vector<LieElement> letters;
            for (int j = first; j <= last; ++j)
                letters.push_back(LieElement::generator(GeneratorId::single(j)));
            block_elems.push_back(left_normed(letters));
        }
        LieElement c = left_normed(block_elems);

        LieElement sum;
        for_each_sigma_tuple(k, eps, [&](const std::vector<const Permutation*>& sigma, int sign) {
            std::vector<LieElement> entries;
            for (int s = 1; s <= k; ++s) {
                std::map<GeneratorId, LieElement> images;
                for (int j = 1; j <= reduced_K; ++j)
                    images.emplace(
                        GeneratorId::single(j),
                        LieElement::generator(GeneratorId::indexed(sigma[j - 1]->apply(s), j)));
                entries.push_back(substitute(c, images));
            }
            sum += Rat(sign) * left_normed(entries);
        });

        if (sum.is_zero()) {
            outcome.status = CheckStatus::pass;
            outcome.reason = "sum normalizes to zero";
        } else {
            ConsequenceCheck cc = is_consequence(sum, ids, ambient_cap);
            if (cc.holds) {
                outcome.status = CheckStatus::pass;
                outcome.certificate_terms = cc.certificate.size();
                report.measured_T = std::max(report.measured_T, cc.certificate.size());
            } else {
                outcome.status = CheckStatus::fail;
                outcome.reason = "sum is not a consequence of relation (1) with " +
                                 std::to_string(n) + "-Engel";
            }
        }
        report.checks.push_back(std::move(outcome));
    }
    return report;
}

}  // namespace engel
