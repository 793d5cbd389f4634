#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ckq/ck_core.hpp"
#include "ckq/rewrite.hpp"

namespace ckq {

/// Left generators could not be removed by finite substitution; the
/// r-only relations were obtained as a v-adic fixed point instead.
class NonEliminable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Catalogued quantum sphere in Beltrami generators r1..r{N-1} with left
/// generators rh1..rh{N-1}.
struct SphereEntry {
    std::string id;
    int N = 0;
    SigmaPermutation sigma;
    JMonomial J;
    std::vector<std::string> equations;
};

/// r1..r{N-1} ranked 1..N-1, then rh1..rh{N-1}.
Alphabet sphere_alphabet(int N);

const std::vector<SphereEntry>& sphere_catalog();
/// Throws std::out_of_range for an uncatalogued (N, sigma).
const SphereEntry& sphere_presentation(int N, const SigmaPermutation& sigma);

struct SpherePresentation {
    std::string id;
    int N = 0;
    SigmaPermutation sigma;
    JMonomial J;
    JAssignment assignment;
    int order = 8;
    Alphabet alphabet;               // r and rh
    std::vector<ExprPoly> closed;    // specialized closed forms over r and rh
    bool direct = true;              // left generators eliminated by finite substitution
    std::vector<SeriesPoly> hat_values;  // rh_k over r, when eliminated
    RewriteSystem system;            // over r only

    std::vector<std::string> names() const { return assignment.names(); }
};

/// Specializes the closed forms, removes the left generators and solves for
/// the r-only relations.  Throws UndefinedContraction, NonEliminable or
/// EliminationFailure.
SpherePresentation specialize_sphere(const SphereEntry& entry, const JAssignment& a, int order = 8);

/// The same pipeline for an arbitrary list of equations.
SpherePresentation sphere_from_equations(const std::string& id, int N, const SigmaPermutation& sigma,
                                         const JMonomial& J, const std::vector<std::string>& equations,
                                         const JAssignment& a, int order = 8);

/// Nonzero commutators [r_a, r_b], a < b, in normal form.
std::vector<std::pair<Word, SeriesPoly>> commutators(const SpherePresentation& s);

std::string kinematics_label(const JAssignment& a, int N);

std::string render_text(const SpherePresentation& s);
std::string render_latex(const SpherePresentation& s);

}  // namespace ckq
