#include "ckq/rewrite.hpp"

#include <memory>
#include <tuple>

namespace ckq {

const SeriesPoly* RewriteSystem::rule(int a, int b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

SeriesPoly RewriteSystem::mul(const SeriesPoly& a, const SeriesPoly& b) const {
    return multiply(a, b, [this](const VSeries& x, const VSeries& y) { return domain_.mul(x, y); });
}

namespace {

// Drops every power of v above prec.
VSeries chop(const VSeries& x, int prec) { return x.truncated(prec).truncated(x.order()); }

}  // namespace

struct RewriteSystem::Cache {
    std::map<std::tuple<Word, int, int>, SeriesPoly> products;
};

std::map<std::pair<int, int>, SeriesPoly>& RewriteSystem::mutable_rules() {
    cache_.reset();
    return rules_;
}

bool operator==(const RewriteSystem& a, const RewriteSystem& b) {
    return a.alphabet_ == b.alphabet_ && a.domain_ == b.domain_ && a.rules_ == b.rules_;
}

SeriesPoly RewriteSystem::times_letter(const Word& m, int x, int prec, Budget& budget) const {
    if (prec < 0) return {};
    auto key = std::make_tuple(m, x, prec);
    if (auto it = cache_->products.find(key); it != cache_->products.end()) return it->second;

    const SeriesPoly* r = m.empty() || !alphabet_.ascending(m.back(), x) ? nullptr : rule(m.back(), x);
    SeriesPoly out;
    if (!r) {
        Word w = m;
        w.push_back(x);
        out.add(w, chop(domain_.one(), prec));
    } else {
        if (++budget.steps > budget.cap || ++budget.depth > 4096) {
            std::string t = alphabet_.str(m) + " * " + alphabet_.names[x];
            throw NormalizationError("normalization exceeded " + std::to_string(budget.cap) + " steps; last words: " + t);
        }
        Word head(m.begin(), m.end() - 1);
        for (const auto& [u, c] : r->terms()) {
            if (c.valuation() > prec) continue;
            SeriesPoly acc;
            acc.add(head, chop(c, prec));
            for (int letter : u) acc = times_poly(acc, letter, prec, budget);
            out += acc;
        }
        --budget.depth;
    }
    cache_->products.emplace(key, out);
    return out;
}

SeriesPoly RewriteSystem::times_poly(const SeriesPoly& p, int x, int prec, Budget& budget) const {
    SeriesPoly out;
    for (const auto& [w, c] : p.terms()) {
        int q = prec - c.valuation();
        if (q < 0) continue;
        SeriesPoly t = times_letter(w, x, q, budget);
        for (const auto& [u, d] : t.terms()) out.add(u, chop(domain_.mul(c, d), prec));
    }
    return out;
}

SeriesPoly RewriteSystem::normalize(const SeriesPoly& p, long step_cap) const {
    if (!cache_) cache_ = std::make_shared<Cache>();
    Budget budget{0, step_cap, 0};
    const int order = domain_.order;
    SeriesPoly result;
    for (const auto& [w, c0] : p.terms()) {
        SeriesPoly acc;
        acc.add(Word{}, domain_.reduce(c0));
        for (int letter : w) acc = times_poly(acc, letter, order, budget);
        result += acc;
    }
    return result;
}

SeriesPoly RewriteSystem::normalize_word(const Word& w) const {
    SeriesPoly p;
    p.add(w, domain_.one());
    return normalize(p);
}

RewriteSystem RewriteSystem::interreduced() const {
    RewriteSystem r(alphabet_, domain_);
    for (const auto& [lhs, rhs] : rules_) r.rules_.emplace(lhs, normalize(rhs));
    return r;
}

SeriesPoly rule_relation(const std::pair<int, int>& lhs, const SeriesPoly& rhs, const Domain& d) {
    SeriesPoly p;
    p.add(Word{lhs.first, lhs.second}, d.one());
    return p - rhs;
}

bool same_ideal(const RewriteSystem& a, const RewriteSystem& b) {
    if (a.alphabet().size() != b.alphabet().size() || !(a.domain() == b.domain())) return false;
    for (const auto& [lhs, rhs] : a.rules())
        if (!b.normalize(rule_relation(lhs, rhs, a.domain())).is_zero()) return false;
    for (const auto& [lhs, rhs] : b.rules())
        if (!a.normalize(rule_relation(lhs, rhs, b.domain())).is_zero()) return false;
    return true;
}

std::vector<Overlap> RewriteSystem::overlap_check() const {
    std::vector<Overlap> out;
    int L = static_cast<int>(alphabet_.size());
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            const SeriesPoly* ab = rule(a, b);
            if (!ab) continue;
            for (int c = 0; c < L; ++c) {
                const SeriesPoly* bc = rule(b, c);
                if (!bc) continue;
                SeriesPoly left, right;
                for (const auto& [w, x] : ab->terms()) left.add(concat(w, Word{c}), x);
                for (const auto& [w, x] : bc->terms()) right.add(concat(Word{a}, w), x);
                SeriesPoly diff = normalize(left - right);
                if (!diff.is_zero()) out.push_back({Word{a, b, c}, diff});
            }
        }
    return out;
}

namespace {

bool is_column(const Word& w, const Alphabet& al) { return w.size() == 2 && al.ascending(w[0], w[1]); }

SeriesPoly scaled(const SeriesPoly& p, const VSeries& c, const Domain& d) {
    SeriesPoly r;
    for (const auto& [w, x] : p.terms()) r.add(w, d.mul(x, c));
    return r;
}

// row -= row[col] * pivot_row, where pivot_row[col] = 1.
void eliminate(SeriesPoly& row, const Word& col, const SeriesPoly& pivot_row, const Domain& d) {
    VSeries c = row.coeff(col);
    if (c.is_zero()) return;
    row -= scaled(pivot_row, c, d);
    row.erase(col);
}

}  // namespace

RewriteSystem solve_relations(const std::vector<SeriesPoly>& relations, const Alphabet& alphabet, const Domain& domain) {
    std::vector<SeriesPoly> rows;
    for (const auto& r : relations) rows.push_back(reduce(r, domain));
    std::map<Word, SeriesPoly> pivots;
    std::vector<SeriesPoly> deferred = rows;

    bool progress = true;
    while (progress && !deferred.empty()) {
        progress = false;
        std::vector<SeriesPoly> next;
        for (auto row : deferred) {
            for (const auto& [col, prow] : pivots) eliminate(row, col, prow, domain);
            if (row.is_zero()) {
                progress = true;
                continue;
            }
            const Word* pivot = nullptr;
            for (const auto& [w, c] : row.terms())
                if (is_column(w, alphabet) && domain.invertible(c)) {
                    pivot = &w;
                    break;
                }
            if (!pivot) {
                next.push_back(row);
                continue;
            }
            Word col = *pivot;
            SeriesPoly prow = scaled(row, domain.invert(row.coeff(col)), domain);
            prow.erase(col);
            prow.add(col, domain.one());
            for (auto& [pc, other] : pivots) eliminate(other, col, prow, domain);
            pivots.emplace(col, prow);
            progress = true;
        }
        deferred = std::move(next);
    }
    if (!deferred.empty())
        throw EliminationFailure("relation cannot be solved for an ascending pair: " +
                                 render(deferred.front(), alphabet) + " = 0");

    RewriteSystem rs(alphabet, domain);
    for (auto& [col, prow] : pivots) {
        SeriesPoly rhs;
        for (const auto& [w, c] : prow.terms())
            if (w != col) rhs.add(w, -c);
        rs.mutable_rules().emplace(std::make_pair(col[0], col[1]), rhs);
    }
    return rs;
}

}  // namespace ckq
