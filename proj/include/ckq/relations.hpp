#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckq/ck_core.hpp"
#include "ckq/rewrite.hpp"

namespace ckq {

/// Quantum Cayley-Klein vector space: closed-form relations, star map and
/// invariant, plus their expansion and the solved rewriting system.
struct Presentation {
    int N = 0;
    SigmaPermutation sigma;
    JMonomial J;
    JAssignment assignment;  // all Generic when symbolic
    int order = 8;
    Alphabet alphabet;

    std::vector<Word> raw_lhs;           // the ascending word each relation starts from
    std::vector<ExprPoly> raw;           // each means p = 0
    std::vector<ExprPoly> star_closed;   // indexed by generator letter
    ExprPoly invariant_closed;

    RewriteSystem system;
    std::vector<SeriesPoly> star;
    SeriesPoly invariant;

    Domain domain() const { return system.domain(); }
    bool symbolic() const;
    std::vector<std::string> names() const { return assignment.names(); }
};

/// Generators x1..xN (letter g-1 is xi_g), ranked by position in sigma.
Alphabet vector_alphabet(const SigmaPermutation& sigma);

/// Closed forms straight from the explicit commutation relations, the
/// antiinvolution and the invariant form.
Presentation generate_relations(const SigmaPermutation& sigma, const JMonomial& J, int order = 8);

/// Raw closed-form data only (no expansion); used by the multiplier oracle.
Presentation generate_closed(const SigmaPermutation& sigma, const JMonomial& J);

/// Substitutes the assignment into the closed forms, then expands and solves.
/// Throws UndefinedContraction with the offending relation in its context.
Presentation specialize_presentation(const Presentation& symbolic, const JAssignment& a);

/// Presentation from explicit equations over x1..xN.  Star images are keyed
/// by generator name (missing ones are the identity); an empty invariant is
/// zero.  The result is specialized at `a`.
Presentation presentation_from_equations(const SigmaPermutation& sigma, const JMonomial& J,
                                         const std::vector<std::string>& relations,
                                         const std::map<std::string, std::string>& star, const std::string& invariant,
                                         const JAssignment& a, int order = 8);

/// Same ideal and the same normalized star map.
bool same_presentation(const Presentation& a, const Presentation& b);

/// Expands the current closed forms and solves the relations.
void build_system(Presentation& p);

SeriesPoly normalize(const SeriesPoly& p, const Presentation& pres);
SeriesPoly apply_star(const SeriesPoly& p, const Presentation& pres);
SeriesPoly generator(const Presentation& pres, int g);  // xi_g, 1-based

bool check_central(const Presentation& pres);
bool check_star_involutive(const Presentation& pres);
bool check_star_compatible(const Presentation& pres);
/// Every rule collapses to commutativity at v = 0.
bool check_commutative_limit(const Presentation& pres);

/// Relations as "lhs = rhs" lines: commutators for xi_k xi_k' pairs and
/// nonzero commutators in general.
std::vector<std::string> render_rules(const Presentation& pres);
/// Nonzero commutators [a,b] with a before b in normal order.
std::vector<std::pair<Word, SeriesPoly>> commutators(const Presentation& pres);

std::string render_text(const Presentation& pres);
std::string render_latex(const Presentation& pres);

}  // namespace ckq
