#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckq/relations.hpp"
#include "ckq/sphere.hpp"

namespace ckq {

enum class Family { Vector, Sphere };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Generator map x_a -> scale[a] * y_{perm[a]} (0-based letters).  Scales
/// are monomials in the symbolic slots; all ones for a pure renumbering.
struct GeneratorMap {
    std::vector<int> perm;
    std::vector<JMonomial> scale;

    bool is_permutation() const;
    GeneratorMap inverse() const;
    std::string str(const std::vector<std::string>& source, const std::vector<std::string>& target) const;
};

struct IsomorphismOptions {
    bool rescale = true;     // allow monomial rescalings in symbolic slots
    int max_exponent = 1;    // per slot, in [-max, max]
};

/// Generators grouped into nested bases: blocks[k] is the set of letters of
/// the k-th base.  Admissible maps send each base onto itself.
using Fibering = std::vector<std::vector<int>>;

Fibering vector_fibering(const JAssignment& a);
Fibering sphere_fibering(const JAssignment& a);

/// Applies the map to every term and reduces in the target domain.
SeriesPoly apply_map(const SeriesPoly& p, const GeneratorMap& m, const Domain& target);

/// True when the map and its inverse both send rules into the other ideal.
bool verify_isomorphism(const RewriteSystem& a, const RewriteSystem& b, const GeneratorMap& m);

std::optional<GeneratorMap> find_isomorphism(const RewriteSystem& a, const RewriteSystem& b, const Fibering& fibering,
                                             const IsomorphismOptions& opt = {});

/// Renumbering only.
std::optional<GeneratorMap> permutation_isomorphic(const RewriteSystem& a, const RewriteSystem& b,
                                                   const Fibering& fibering = {});

/// Interreduced rules rendered and sorted.
std::string digest(const RewriteSystem& rs, const std::vector<std::string>& names);

struct ClassEntry {
    std::string name;  // sigma label, e.g. "sigma0"
    SigmaPermutation sigma;
    JAssignment assignment;
    std::string digest;
    std::string label;
    RewriteSystem system;
    std::vector<std::string> names;
};

struct ClassWitness {
    int from = 0, to = 0;  // entry indices
    GeneratorMap map;
};

struct ClassificationReport {
    int N = 0;
    Family family = Family::Vector;
    JAssignment assignment;
    int order = 4;
    std::vector<ClassEntry> entries;
    std::vector<std::vector<int>> classes;  // entry indices
    std::vector<ClassWitness> witnesses;
    int strict_classes = 0;                 // classes under renumbering only
    std::vector<std::string> errors;        // entries that failed to contract
    std::size_t base_dim = 0;
    std::size_t fiber_dim = 0;
};

/// Default permutations: the named ones for N = 3, 4, otherwise all of S(N).
std::vector<std::pair<std::string, SigmaPermutation>> default_sigmas(int N, Family family);

ClassificationReport classify(int N, Family family, const JAssignment& a, int order = 4,
                              const IsomorphismOptions& opt = {});

/// j_k = iota_k; the remaining slots are 1 for vector spaces and symbolic
/// for spheres.
JAssignment family_assignment(int N, Family family, std::size_t k);

}  // namespace ckq
