#include "ckq/paper_data.hpp"

#include <cctype>

#include <json.hpp>

#include "ckq/ck_core.hpp"
#include "ckq/embedded_data.hpp"
#include "ckq/parser.hpp"

namespace ckq {

namespace {

using nlohmann::json;

EquationSet equation_set(const json& e) {
    EquationSet s;
    s.id = e.at("id").get<std::string>();
    s.n = e.at("n").get<int>();
    s.sigma = e.value("sigma", "");
    s.j = e.value("j", "");
    if (e.contains("relations")) s.relations = e["relations"].get<std::vector<std::string>>();
    if (e.contains("equations")) s.relations = e["equations"].get<std::vector<std::string>>();
    if (e.contains("star")) s.star = e["star"].get<std::map<std::string, std::string>>();
    s.invariant = e.value("invariant", "");
    s.invariant_id = e.value("invariant_id", "");
    return s;
}

std::vector<EquationSet> equation_sets(const json& doc, const char* key) {
    std::vector<EquationSet> out;
    for (const auto& e : doc.at(key)) out.push_back(equation_set(e));
    return out;
}

}  // namespace

PaperData parse_paper_data(const std::string& json_text) {
    json doc = json::parse(json_text);
    PaperData d;
    d.version = doc.at("version").get<int>();
    for (const auto& [n, table] : doc.at("named_sigma").items())
        d.named_sigma[std::stoi(n)] = table.get<std::map<std::string, std::string>>();
    for (const auto& e : doc.at("multipliers"))
        d.multipliers.push_back({e.at("id"), e.at("n"), e.at("sigma"), e.at("J")});
    d.templates = equation_sets(doc, "templates");
    d.vector_generic = equation_sets(doc, "vector_generic");
    d.vector_contractions = equation_sets(doc, "vector_contractions");
    d.sphere_catalog = equation_sets(doc, "sphere_catalog");
    d.sphere_contractions = equation_sets(doc, "sphere_contractions");
    for (const auto& e : doc.at("isomorphisms"))
        d.isomorphisms.push_back({e.at("id"), e.at("family"), e.at("n"), e.at("j"), e.at("a"), e.at("b"), e.at("isomorphic")});
    for (const auto& e : doc.at("class_counts"))
        d.class_counts.push_back({e.at("id"), e.at("family"), e.at("n"), e.at("j"), e.at("classes")});
    return d;
}

const PaperData& paper_data() {
    static const PaperData data = parse_paper_data(kPaperData);
    return data;
}

std::string instantiate_template(const std::string& text, const std::string& sigma_text) {
    SigmaPermutation sigma = SigmaPermutation::parse(sigma_text);
    std::string out;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if ((c == 'X' || c == 'W') && k + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[k + 1]))) {
            std::size_t e = k + 1;
            while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
            int p = std::stoi(text.substr(k + 1, e - k - 1));
            int g = sigma(p);
            if (c == 'X') {
                out += "x" + std::to_string(g);
            } else {
                out += "(" + ck_product(1, g, sigma.size()).str() + ")";
            }
            k = e - 1;
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace ckq

namespace ckq {

JMonomial parse_monomial(const std::string& text, std::size_t params) {
    ParseContext ctx;
    ctx.params = params;
    ExprPoly p = parse_expression(text, ctx);
    if (p.terms().size() != 1 || !p.terms().begin()->first.empty()) throw ParseError("not a monomial: " + text);
    const ScalarExpr& c = p.terms().begin()->second;
    if (!c.is_single_term()) throw ParseError("not a monomial: " + text);
    const auto& [key, coeff] = *c.terms().begin();
    if (key.vpow != 0 || !key.atoms.empty() || !(coeff == GaussianRational(1))) throw ParseError("not a monomial: " + text);
    return key.mono;
}

}  // namespace ckq
