#include "ckq/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"

namespace ckq {

Family parse_family(const std::string& s) {
    if (s == "vector") return Family::Vector;
    if (s == "sphere") return Family::Sphere;
    throw std::invalid_argument("unknown family '" + s + "' (expected vector or sphere)");
}

std::string family_name(Family f) { return f == Family::Vector ? "vector" : "sphere"; }

bool GeneratorMap::is_permutation() const {
    for (const auto& s : scale)
        if (!s.is_one()) return false;
    return true;
}

GeneratorMap GeneratorMap::inverse() const {
    GeneratorMap m;
    m.perm.assign(perm.size(), 0);
    m.scale.assign(perm.size(), JMonomial());
    for (std::size_t a = 0; a < perm.size(); ++a) {
        m.perm[perm[a]] = static_cast<int>(a);
        m.scale[perm[a]] = scale[a].inverse();
    }
    return m;
}

std::string GeneratorMap::str(const std::vector<std::string>& source, const std::vector<std::string>& target) const {
    std::string s;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        if (!s.empty()) s += ", ";
        s += source[a] + " -> ";
        if (!scale[a].is_one()) s += scale[a].str() + "*";
        s += target[perm[a]];
    }
    return s;
}

Fibering vector_fibering(const JAssignment& a) {
    Fibering f;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a.is_nilpotent(k)) continue;
        std::vector<int> block(k + 1);
        std::iota(block.begin(), block.end(), 0);
        f.push_back(block);
    }
    return f;
}

Fibering sphere_fibering(const JAssignment& a) {
    Fibering f;
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (!a.is_nilpotent(k)) continue;
        std::vector<int> block(k);
        std::iota(block.begin(), block.end(), 0);
        f.push_back(block);
    }
    return f;
}

SeriesPoly apply_map(const SeriesPoly& p, const GeneratorMap& m, const Domain& target) {
    SeriesPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word nw;
        VSeries nc = c;
        for (int x : w) {
            nw.push_back(m.perm[x]);
            if (!m.scale[x].is_one()) nc *= m.scale[x];
        }
        out.add(nw, target.reduce(nc));
    }
    return out;
}

namespace {

bool maps_into(const RewriteSystem& a, const RewriteSystem& b, const GeneratorMap& m) {
    for (const auto& [lhs, rhs] : a.rules())
        if (!b.normalize(apply_map(rule_relation(lhs, rhs, a.domain()), m, b.domain())).is_zero()) return false;
    return true;
}

std::vector<std::vector<bool>> commuting(const RewriteSystem& rs) {
    int L = static_cast<int>(rs.alphabet().size());
    std::vector<std::vector<bool>> z(L, std::vector<bool>(L, true));
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b) {
            SeriesPoly c;
            c.add(Word{a, b}, rs.domain().one());
            c.sub(Word{b, a}, rs.domain().one());
            z[a][b] = z[b][a] = rs.normalize(c).is_zero();
        }
    return z;
}

bool admissible(const std::vector<int>& perm, const Fibering& f) {
    for (const auto& block : f) {
        std::set<int> s(block.begin(), block.end());
        for (int x : block)
            if (!s.count(perm[x])) return false;
    }
    return true;
}

std::vector<JMonomial> scale_options(const Domain& d, int max_exponent) {
    std::vector<std::size_t> slots;
    for (std::size_t k = 0; k < d.params; ++k)
        if (!d.assignment || (*d.assignment)[k] == JValue::Generic) slots.push_back(k);
    std::vector<JMonomial> out{JMonomial(d.params)};
    for (std::size_t k : slots) {
        std::vector<JMonomial> next;
        for (const auto& m : out)
            for (int e = -max_exponent; e <= max_exponent; ++e) {
                JMonomial x = m;
                x[k] = e;
                next.push_back(x);
            }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const JMonomial& x, const JMonomial& y) {
        int sx = 0, sy = 0;
        for (int e : x.exponents()) sx += std::abs(e);
        for (int e : y.exponents()) sy += std::abs(e);
        return sx < sy;
    });
    return out;
}

}  // namespace

bool verify_isomorphism(const RewriteSystem& a, const RewriteSystem& b, const GeneratorMap& m) {
    return maps_into(a, b, m) && maps_into(b, a, m.inverse());
}

std::optional<GeneratorMap> find_isomorphism(const RewriteSystem& a, const RewriteSystem& b, const Fibering& fibering,
                                             const IsomorphismOptions& opt) {
    const int L = static_cast<int>(a.alphabet().size());
    if (L != static_cast<int>(b.alphabet().size()) || !(a.domain() == b.domain())) return std::nullopt;
    auto za = commuting(a), zb = commuting(b);

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(L);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!admissible(perm, fibering)) continue;
        bool ok = true;
        for (int x = 0; x < L && ok; ++x)
            for (int y = 0; y < L && ok; ++y) ok = za[x][y] == zb[perm[x]][perm[y]];
        if (ok) perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const JMonomial one(a.domain().params);
    for (const auto& p : perms) {
        GeneratorMap m{p, std::vector<JMonomial>(L, one)};
        if (verify_isomorphism(a, b, m)) return m;
    }
    if (!opt.rescale) return std::nullopt;
    auto options = scale_options(a.domain(), opt.max_exponent);
    if (options.size() < 2) return std::nullopt;
    for (const auto& p : perms) {
        std::vector<std::size_t> idx(L, 0);
        for (;;) {
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == options.size()) idx[k++] = 0;
            if (k == idx.size()) break;
            GeneratorMap m{p, {}};
            for (std::size_t g = 0; g < idx.size(); ++g) m.scale.push_back(options[idx[g]]);
            if (verify_isomorphism(a, b, m)) return m;
        }
    }
    return std::nullopt;
}

std::optional<GeneratorMap> permutation_isomorphic(const RewriteSystem& a, const RewriteSystem& b, const Fibering& fibering) {
    return find_isomorphism(a, b, fibering, IsomorphismOptions{false, 0});
}

std::string digest(const RewriteSystem& rs, const std::vector<std::string>& names) {
    std::vector<std::string> lines;
    RewriteSystem reduced = rs.interreduced();
    for (const auto& [lhs, rhs] : reduced.rules())
        lines.push_back(rs.alphabet().str(Word{lhs.first, lhs.second}) + " = " + render(rhs, rs.alphabet(), &names));
    std::sort(lines.begin(), lines.end());
    std::string s;
    for (const auto& l : lines) s += (s.empty() ? "" : "; ") + l;
    return s;
}

std::vector<std::pair<std::string, SigmaPermutation>> default_sigmas(int N, Family family) {
    std::vector<std::pair<std::string, SigmaPermutation>> out;
    if (family == Family::Sphere) {
        const auto& named = paper_data().named_sigma;
        for (const auto& e : sphere_catalog()) {
            if (e.N != N) continue;
            std::string name = e.sigma.str();
            if (auto it = named.find(N); it != named.end())
                for (const auto& [label, text] : it->second)
                    if (SigmaPermutation::parse(text) == e.sigma) name = label;
            out.emplace_back(name, e.sigma);
        }
        return out;
    }
    const auto& named = paper_data().named_sigma;
    if (auto it = named.find(N); it != named.end()) {
        for (const auto& [label, text] : it->second) out.emplace_back(label, SigmaPermutation::parse(text));
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
        return out;
    }
    for (const auto& s : SigmaPermutation::all(N)) out.emplace_back(s.str(), s);
    return out;
}

JAssignment family_assignment(int N, Family family, std::size_t k) {
    if (k < 1 || k > static_cast<std::size_t>(N - 1)) throw std::out_of_range("contraction slot out of range");
    return JAssignment::contraction(N - 1, k, family == Family::Vector ? JValue::Unit : JValue::Generic);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

std::vector<std::vector<int>> blocks(UnionFind& uf, std::size_t n) {
    std::map<int, std::vector<int>> m;
    for (std::size_t k = 0; k < n; ++k) m[uf.find(static_cast<int>(k))].push_back(static_cast<int>(k));
    std::vector<std::vector<int>> out;
    for (auto& [root, b] : m) out.push_back(b);
    return out;
}

}  // namespace

ClassificationReport classify(int N, Family family, const JAssignment& a, int order, const IsomorphismOptions& opt) {
    if (a.size() != static_cast<std::size_t>(N - 1)) throw std::invalid_argument("assignment length must be N-1");
    ClassificationReport r;
    r.N = N;
    r.family = family;
    r.assignment = a;
    r.order = order;
    Fibering fib = family == Family::Vector ? vector_fibering(a) : sphere_fibering(a);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a.is_nilpotent(k)) {
            r.base_dim = family == Family::Vector ? k + 1 : k;
            r.fiber_dim = N - 1 - k;
            break;
        }

    for (const auto& [name, sigma] : default_sigmas(N, family)) {
        ClassEntry e;
        e.name = name;
        e.sigma = sigma;
        e.assignment = a;
        e.names = a.names();
        try {
            if (family == Family::Vector) {
                Presentation p = generate_closed(sigma, theorem_multiplier(sigma));
                p.order = order;
                e.system = specialize_presentation(p, a).system;
                e.label = r.base_dim ? "base " + std::to_string(r.base_dim) + ", fiber " + std::to_string(r.fiber_dim)
                                     : "no fibering";
            } else {
                e.system = specialize_sphere(sphere_presentation(N, sigma), a, order).system;
                e.label = kinematics_label(a, N);
            }
        } catch (const std::exception& ex) {
            r.errors.push_back(name + ": " + ex.what());
            continue;
        }
        e.digest = digest(e.system, e.names);
        r.entries.push_back(std::move(e));
    }

    const std::size_t n = r.entries.size();
    UnionFind uf(n), strict(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (strict.find(x) != strict.find(y))
                if (permutation_isomorphic(r.entries[x].system, r.entries[y].system, fib)) strict.unite(x, y);
            if (uf.find(x) == uf.find(y)) continue;
            if (auto m = find_isomorphism(r.entries[x].system, r.entries[y].system, fib, opt)) {
                uf.unite(x, y);
                r.witnesses.push_back({static_cast<int>(x), static_cast<int>(y), *m});
            }
        }
    r.classes = blocks(uf, n);
    r.strict_classes = static_cast<int>(blocks(strict, n).size());
    return r;
}

}  // namespace ckq
