#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckq/nc.hpp"

namespace ckq {

/// A relation set that cannot be put in solved form over the domain.
class EliminationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalization exceeded its step budget; carries the last words visited.
class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Overlap {
    Word triple;
    SeriesPoly difference;
};

/// Solved rewriting rules: each ascending pair ab -> rhs.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet alphabet, Domain domain) : alphabet_(std::move(alphabet)), domain_(std::move(domain)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const Domain& domain() const { return domain_; }
    const std::map<std::pair<int, int>, SeriesPoly>& rules() const { return rules_; }
    std::map<std::pair<int, int>, SeriesPoly>& mutable_rules();
    const SeriesPoly* rule(int a, int b) const;

    SeriesPoly normalize(const SeriesPoly& p, long step_cap = 200000) const;
    SeriesPoly normalize_word(const Word& w) const;
    SeriesPoly mul(const SeriesPoly& a, const SeriesPoly& b) const;

    /// Same rules with every right-hand side in normal form.
    RewriteSystem interreduced() const;

    /// Both reductions of every overlapping triple abc; empty when confluent.
    std::vector<Overlap> overlap_check() const;

    friend bool operator==(const RewriteSystem& a, const RewriteSystem& b);

private:
    struct Cache;
    struct Budget {
        long steps, cap;
        int depth;
    };
    /// Normal form of m*x for an irreducible word m, exact through v^prec.
    SeriesPoly times_letter(const Word& m, int x, int prec, Budget& budget) const;
    SeriesPoly times_poly(const SeriesPoly& p, int x, int prec, Budget& budget) const;

    Alphabet alphabet_;
    Domain domain_;
    std::map<std::pair<int, int>, SeriesPoly> rules_;
    mutable std::shared_ptr<Cache> cache_;
};

/// Gauss-Jordan elimination of the relations (each meaning p = 0) with the
/// ascending two-letter words as unknowns.  Every pivot must be invertible
/// in the domain and every leftover row must vanish.
RewriteSystem solve_relations(const std::vector<SeriesPoly>& relations, const Alphabet& alphabet, const Domain& domain);

/// Every rule of each system normalizes to zero in the other.  Both must
/// share the alphabet size and domain.
bool same_ideal(const RewriteSystem& a, const RewriteSystem& b);

/// Rule left-hand side minus right-hand side.
SeriesPoly rule_relation(const std::pair<int, int>& lhs, const SeriesPoly& rhs, const Domain& d);

}  // namespace ckq
