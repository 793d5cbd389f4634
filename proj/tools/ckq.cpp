#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ckq/classifier.hpp"
#include "ckq/json_io.hpp"
#include "ckq/multiplier.hpp"
#include "ckq/parser.hpp"
#include "ckq/verify.hpp"

using namespace ckq;

namespace {

enum Exit { Ok = 0, VerificationFailed = 1, Usage = 2, Engine = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    int n = 0;
    std::string sigma;
    std::string j;
    int order = 8;
    std::string format = "text";
    std::string output_dir;
    std::string multiplier = "theorem";
    unsigned seed = 20240611;
    std::string family = "vector";
    std::string fix;
    std::string corrupt;
    bool strict = false;
};

SigmaPermutation parse_sigma(const Config& c) {
    SigmaPermutation s;
    try {
        s = SigmaPermutation::parse(c.sigma);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (c.n && s.size() != c.n) throw UsageError("--sigma has " + std::to_string(s.size()) + " entries, --n is " + std::to_string(c.n));
    return s;
}

JAssignment parse_assignment(const std::string& text, int N) {
    JAssignment a;
    try {
        a = JAssignment::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (a.size() != static_cast<std::size_t>(N - 1))
        throw UsageError("--j needs " + std::to_string(N - 1) + " tokens, got " + std::to_string(a.size()));
    return a;
}

// "j2=iota" -> slot 2.
std::size_t parse_fix(const std::string& fix, int N) {
    auto eq = fix.find('=');
    if (eq == std::string::npos || fix.size() < 2 || fix[0] != 'j' || fix.substr(eq + 1) != "iota")
        throw UsageError("--fix expects jK=iota, got '" + fix + "'");
    std::size_t k = 0;
    try {
        k = std::stoul(fix.substr(1, eq - 1));
    } catch (const std::exception&) {
        throw UsageError("--fix expects jK=iota, got '" + fix + "'");
    }
    if (k < 1 || k > static_cast<std::size_t>(N - 1)) throw UsageError("--fix slot out of range");
    return k;
}

std::string latex_fragment(const std::string& body) { return "\\[\n" + body + "\n\\]\n"; }

class Emitter {
public:
    explicit Emitter(const Config& c) : cfg_(c) {
        dir_ = c.output_dir;
        if (dir_.empty())
            if (const char* env = std::getenv("CKQ_OUTPUT_DIR")) dir_ = env;
    }

    void emit(const std::string& stem, const std::string& text) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        if (dir_.empty()) return;
        std::filesystem::create_directories(dir_);
        std::string ext = cfg_.format == "json" ? ".json" : cfg_.format == "latex" ? ".tex" : ".txt";
        std::ofstream out(std::filesystem::path(dir_) / (stem + ext));
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }

private:
    const Config& cfg_;
    std::string dir_;
};

std::string stem(const std::string& cmd, const Config& c, const SigmaPermutation* s) {
    std::string x = cmd + "-n" + std::to_string(s ? s->size() : c.n);
    if (s)
        for (int g : s->image()) x += "-" + std::to_string(g);
    if (!c.j.empty()) {
        std::string j = c.j;
        for (char& ch : j)
            if (ch == ',') ch = '_';
        x += "-" + j;
    }
    return x;
}

MultiplierKind kind(const Config& c) {
    try {
        return parse_multiplier_kind(c.multiplier);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

int cmd_derive(const Config& c) {
    SigmaPermutation s = parse_sigma(c);
    Presentation p = generate_relations(s, multiplier(kind(c), s), c.order);
    std::string out = c.format == "json" ? to_json(p).dump(2) : c.format == "latex" ? latex_fragment(render_latex(p)) : render_text(p);
    Emitter(c).emit(stem("derive", c, &s), out);
    return Ok;
}

int cmd_contract(const Config& c) {
    SigmaPermutation s = parse_sigma(c);
    JAssignment a = parse_assignment(c.j, s.size());
    Presentation closed = generate_closed(s, multiplier(kind(c), s));
    closed.order = c.order;
    Presentation p = specialize_presentation(closed, a);
    std::string label = kinematics_label(a, s.size());
    bool named = label.rfind("S^", 0) != 0;
    std::string out;
    if (c.format == "json") {
        Json j = to_json(p);
        if (named) j["label"] = label;
        out = j.dump(2);
    } else if (c.format == "latex") {
        out = latex_fragment(render_latex(p));
    } else {
        out = render_text(p);
        if (named) out += "label: " + label + "\n";
    }
    Emitter(c).emit(stem("contract", c, &s), out);
    return Ok;
}

int cmd_multiplier(const Config& c) {
    SigmaPermutation s = parse_sigma(c);
    JMonomial J = multiplier(kind(c), s);
    std::string out;
    if (c.format == "json")
        out = Json{{"sigma", s.str()}, {"kind", c.multiplier}, {"exponents", J.exponents()}, {"text", J.str()}}.dump(2);
    else if (c.format == "latex")
        out = latex_fragment("J = " + latex_from_plain(J.str()));
    else
        out = "J = " + J.str() + "\n";
    Emitter(c).emit(stem("multiplier", c, &s), out);
    return Ok;
}

int cmd_sphere(const Config& c) {
    SigmaPermutation s = parse_sigma(c);
    const SphereEntry* e = nullptr;
    try {
        e = &sphere_presentation(s.size(), s);
    } catch (const std::out_of_range& ex) {
        throw UsageError(ex.what());
    }
    JAssignment a = c.j.empty() ? JAssignment::all(s.size() - 1, JValue::Generic) : parse_assignment(c.j, s.size());
    SpherePresentation p = specialize_sphere(*e, a, c.order);
    std::string out = c.format == "json" ? to_json(p).dump(2) : c.format == "latex" ? latex_fragment(render_latex(p)) : render_text(p);
    Emitter(c).emit(stem("sphere", c, &s), out);
    return Ok;
}

std::string latex_table(const std::vector<ClassificationReport>& reports) {
    std::ostringstream os;
    os << "\\begin{tabular}{llll}\n\\hline\nassignment & classes & renumbering only & members \\\\\n\\hline\n";
    for (const auto& r : reports) {
        os << latex_from_plain(r.assignment.str()) << " & " << r.classes.size() << " & " << r.strict_classes << " & ";
        bool first_block = true;
        for (const auto& b : r.classes) {
            os << (first_block ? "" : "; ") << "\\{";
            first_block = false;
            for (std::size_t k = 0; k < b.size(); ++k) os << (k ? ", " : "") << r.entries[b[k]].sigma.str();
            os << "\\}";
        }
        os << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}";
    return os.str();
}

int cmd_classify(const Config& c) {
    if (c.n < 2) throw UsageError("--n is required");
    Family fam;
    try {
        fam = parse_family(c.family);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::vector<JAssignment> rows;
    if (!c.j.empty())
        rows.push_back(parse_assignment(c.j, c.n));
    else if (!c.fix.empty())
        rows.push_back(family_assignment(c.n, fam, parse_fix(c.fix, c.n)));
    else
        for (int k = 1; k < c.n; ++k) rows.push_back(family_assignment(c.n, fam, k));
    IsomorphismOptions opt;
    opt.rescale = !c.strict;
    std::vector<ClassificationReport> reports;
    for (const auto& a : rows) reports.push_back(classify(c.n, fam, a, std::min(c.order, 4), opt));
    std::string out;
    if (c.format == "json") {
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        out = j.dump(2);
    } else if (c.format == "latex") {
        out = latex_table(reports);
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << family_name(fam) << " N=" << c.n << " (" << r.assignment.str() << "): " << r.classes.size() << " classes ("
               << r.strict_classes << " under renumbering only)\n";
            for (const auto& b : r.classes) {
                os << "  {";
                for (int k : b) os << " " << r.entries[k].name << r.entries[k].sigma.str();
                os << " }\n";
            }
            for (const auto& w : r.witnesses)
                os << "  " << r.entries[w.from].name << " ~ " << r.entries[w.to].name << ": "
                   << w.map.str(r.entries[w.from].system.alphabet().names, r.entries[w.to].system.alphabet().names) << "\n";
            for (const auto& e : r.errors) os << "  not contracted: " << e << "\n";
        }
        out = os.str();
    }
    Emitter(c).emit("classify-" + c.family + "-n" + std::to_string(c.n), out);
    return Ok;
}

int cmd_verify(const Config& c) {
    VerifyOptions opt;
    opt.order = c.order;
    opt.corrupt = c.corrupt;
    opt.seed = c.seed;
    VerifyReport r = verify_paper(opt);
    std::string out = c.format == "json" ? to_json(r).dump(2) : "seed " + std::to_string(c.seed) + "\n" + render_text(r);
    Emitter(c).emit("verify-paper", out);
    return r.all_pass() ? Ok : VerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Cayley-Klein spaces: derivation, contraction, verification and classification"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub, bool needs_sigma) {
        sub->add_option("--n", cfg.n, "dimension N")->check(CLI::Range(2, 12));
        if (needs_sigma) sub->add_option("--sigma", cfg.sigma, "permutation, e.g. 1,3,2")->required();
        sub->add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(2, 40));
        sub->add_option("--format", cfg.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--output-dir", cfg.output_dir, "also write the output here (default $CKQ_OUTPUT_DIR)");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };

    auto* derive = app.add_subcommand("derive", "relations, star map and invariant of O_v^N(j;sigma)");
    common(derive, true);
    derive->add_option("--multiplier", cfg.multiplier, "theorem, j0 or oracle");
    auto* contract = app.add_subcommand("contract", "specialize a quantum vector space at a contraction");
    common(contract, true);
    contract->add_option("--j", cfg.j, "tokens 1, i, iota, j per slot")->required();
    contract->add_option("--multiplier", cfg.multiplier, "theorem, j0 or oracle");
    auto* mult = app.add_subcommand("multiplier", "multiplier J for a permutation");
    common(mult, true);
    mult->add_option("--multiplier", cfg.multiplier, "theorem, j0 or oracle");
    auto* sphere = app.add_subcommand("sphere", "catalogued quantum sphere, optionally contracted");
    common(sphere, true);
    sphere->add_option("--j,--contract", cfg.j, "tokens 1, i, iota, j per slot (default all symbolic)");
    auto* cls = app.add_subcommand("classify", "isomorphism classes over the catalogued permutations");
    common(cls, false);
    cls->add_option("--family", cfg.family, "vector or sphere");
    cls->add_option("--fix", cfg.fix, "contraction jK=iota");
    cls->add_option("--j", cfg.j, "explicit assignment instead of --fix");
    cls->add_flag("--strict", cfg.strict, "renumbering only");
    auto* verify = app.add_subcommand("verify-paper", "run every regression check");
    common(verify, false);
    verify->add_option("--corrupt", cfg.corrupt, "test hook: perturb the record with this id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*derive) return cmd_derive(cfg);
        if (*contract) return cmd_contract(cfg);
        if (*mult) return cmd_multiplier(cfg);
        if (*sphere) return cmd_sphere(cfg);
        if (*cls) return cmd_classify(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const UndefinedContraction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Engine;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Engine;
    }
    return Usage;
}
