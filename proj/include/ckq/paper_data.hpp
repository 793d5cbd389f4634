#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckq/jpoly.hpp"

namespace ckq {

/// Relations, star map and invariant as plain equations.  Templates use
/// X<p> for xi_{sigma_p} and W<p> for (1,sigma_p).
struct EquationSet {
    std::string id;
    int n = 0;
    std::string sigma;  // empty for templates
    std::string j;      // assignment tokens, empty when symbolic
    std::vector<std::string> relations;
    std::map<std::string, std::string> star;
    std::string invariant;
    std::string invariant_id;
};

struct MultiplierRecord {
    std::string id;
    int n = 0;
    std::string sigma;
    std::string J;
};

struct IsomorphismClaim {
    std::string id;
    std::string family;  // "vector" or "sphere"
    int n = 0;
    std::string j;
    std::string a, b;
    bool isomorphic = false;
};

struct ClassCount {
    std::string id;
    std::string family;
    int n = 0;
    std::string j;
    int classes = 0;
};

/// Regression data transcribed from the source equations, keyed by their
/// equation ids.
struct PaperData {
    int version = 0;
    std::map<int, std::map<std::string, std::string>> named_sigma;
    std::vector<MultiplierRecord> multipliers;
    std::vector<EquationSet> templates;
    std::vector<EquationSet> vector_generic;
    std::vector<EquationSet> vector_contractions;
    std::vector<EquationSet> sphere_catalog;
    std::vector<EquationSet> sphere_contractions;
    std::vector<IsomorphismClaim> isomorphisms;
    std::vector<ClassCount> class_counts;
};

PaperData parse_paper_data(const std::string& json_text);
/// The data file compiled into the library.
const PaperData& paper_data();

/// Expands a template for one permutation: X<p> -> x<sigma_p>,
/// W<p> -> the monomial (1,sigma_p) written out.
std::string instantiate_template(const std::string& text, const std::string& sigma);

/// "j1^2*j2" over the given number of parameters.
JMonomial parse_monomial(const std::string& text, std::size_t params);

}  // namespace ckq
