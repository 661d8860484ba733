// circmat: decide circular-ones / I-circular properties of binary matrices
// and semi-transitivity of split graphs, generate the named matrix families,
// and machine-verify the library's structural lemmas.
//
// Exit codes: 0 property holds / verification passed, 1 property fails /
// verification failed, 2 input or usage error, 3 instance too large for a
// brute-force guard.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "circmat/io.hpp"

namespace {

using namespace circmat;
using nlohmann::json;

int guard_from_env(const char* name, int fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoi(v);
        } catch (...) {
            throw DomainError(std::string(name) + " must be an integer");
        }
    }
    return fallback;
}

template <typename T>
T parse_stream(const std::string& path, T (*parser)(std::istream&)) {
    if (path == "-") return parser(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    return parser(in);
}

BinaryMatrix load_matrix(const std::string& path) { return parse_stream<BinaryMatrix>(path, parse_matrix); }
Graph load_graph(const std::string& path) { return parse_stream<Graph>(path, parse_graph); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

int run_c1p(const std::string& path, bool asJson, bool brute, int guardCols) {
    const BinaryMatrix m = load_matrix(path);
    const auto order = brute ? brute_force_circular_ones(m, guardCols) : has_circular_ones(m);
    std::optional<C1Certificate> cert;
    if (!order) cert = find_forb_certificate(m);
    if (asJson) {
        json j{{"property", "circular-ones"}, {"verdict", order.has_value()}};
        if (order) j["order"] = order->cols;
        if (cert) j["certificate"] = certificate_json(cert->family, cert->witness);
        std::cout << j.dump() << "\n";
    } else if (order) {
        std::cout << "CIRCULAR " << join(order->cols) << "\n";
    } else {
        std::cout << "NOT-CIRCULAR\n" << certificate_json(cert->family, cert->witness).dump() << "\n";
    }
    return order ? 0 : 1;
}

int run_icirc(const std::string& path, bool asJson, bool brute, int guardCols) {
    const BinaryMatrix m = load_matrix(path);
    const auto order = brute ? brute_force_i_circular(m, guardCols) : has_i_circular(m);
    std::optional<ICircCertificate> cert;
    if (!order) cert = find_iforb_certificate(m);
    if (asJson) {
        json j{{"property", "i-circular"}, {"verdict", order.has_value()}};
        if (order) j["order"] = order->cols;
        if (cert) j["certificate"] = certificate_json(cert->family, cert->witness);
        std::cout << j.dump() << "\n";
    } else if (order) {
        std::cout << "I-CIRCULAR " << join(order->cols) << "\n";
    } else {
        std::cout << "NOT-I-CIRCULAR\n" << certificate_json(cert->family, cert->witness).dump() << "\n";
    }
    return order ? 0 : 1;
}

int run_split(const std::string& path, bool asJson) {
    const Graph g = load_graph(path);
    const auto sg = split_partition(g);
    if (!sg) throw DomainError("input graph is not a split graph");
    const SemiTransCertificate cert = is_semi_transitive_split(*sg);
    if (asJson) {
        json j{{"property", "semi-transitive"}, {"verdict", cert.verdict}, {"clique", sg->clique}, {"independent", sg->independent}};
        if (cert.order) j["order"] = cert.order->cols;
        if (cert.negative) j["certificate"] = {{"gforbMember", cert.negative->member}, {"vertexMap", cert.negative->vertexMap}};
        std::cout << j.dump() << "\n";
    } else if (cert.verdict) {
        std::cout << "SEMI-TRANSITIVE " << join(cert.order ? cert.order->cols : std::vector<int>{}) << "\n";
    } else {
        std::cout << "NOT-SEMI-TRANSITIVE\n"
                  << json{{"gforbMember", cert.negative->member}, {"vertexMap", cert.negative->vertexMap}}.dump() << "\n";
    }
    return cert.verdict ? 0 : 1;
}

int run_orient(const std::string& path, bool asJson, int guardEdges) {
    const Graph g = load_graph(path);
    const auto orientation = brute_force_semi_transitive(g, guardEdges);
    if (asJson) {
        json j{{"property", "semi-transitive-orientation"}, {"verdict", orientation.has_value()}};
        if (orientation) {
            json arcs = json::array();
            for (const auto& [u, v] : orientation->arcs) arcs.push_back({u, v});
            j["arcs"] = arcs;
        }
        std::cout << j.dump() << "\n";
    } else if (orientation) {
        std::cout << "SEMI-TRANSITIVE\n";
        for (const auto& [u, v] : orientation->arcs) std::cout << u << " " << v << "\n";
    } else {
        std::cout << "NOT-SEMI-TRANSITIVE\n";
    }
    return orientation ? 0 : 1;
}

UVariant variant_from(const std::string& s) {
    if (s == "literal") return UVariant::Literal;
    if (s == "figure") return UVariant::Figure;
    throw DomainError("--variant must be 'literal' or 'figure'");
}

int run_gen(const std::vector<std::string>& args, const std::string& variant) {
    if (args.empty()) throw DomainError("gen: missing family name");
    const std::string& fam = args[0];
    auto intArg = [&](std::size_t i) {
        if (i >= args.size()) throw DomainError("gen " + fam + ": missing parameter");
        return std::stoi(args[i]);
    };
    auto strArg = [&](std::size_t i) -> const std::string& {
        if (i >= args.size()) throw DomainError("gen " + fam + ": missing parameter");
        return args[i];
    };
    BinaryMatrix m(1, 1);
    if (fam == "MI") m = gen_mi(intArg(1));
    else if (fam == "MIstar") m = gen_mistar(intArg(1));
    else if (fam == "MII") m = gen_mii(intArg(1));
    else if (fam == "MIII") m = gen_miii(intArg(1));
    else if (fam == "MIV") m = gen_miv();
    else if (fam == "MV") m = gen_mv();
    else if (fam == "MVstar") m = gen_mvstar();
    else if (fam == "MVI") m = gen_mvi();
    else if (fam == "Q") m = gen_q(intArg(1), intArg(2), intArg(3));
    else if (fam == "R") m = gen_r(parse_digits(strArg(1)));
    else if (fam == "U") m = gen_u(intArg(1), intArg(2), variant_from(variant));
    else if (fam == "W") m = gen_w(parse_digits(strArg(1)), variant_from(variant));
    else if (fam == "H") m = gen_h(intArg(1), parse_bits(strArg(2)));
    else if (fam == "G") m = gen_g(parse_bits(strArg(1)));
    else if (fam == "forb" || fam == "iforb") {
        const auto members = fam == "forb" ? forb_circular(intArg(1), intArg(2)) : forb_icircular(intArg(1), intArg(2));
        for (const auto& mem : members) std::cout << "# " << mem.id.name() << "\n" << mem.matrix.to_string();
        return 0;
    } else {
        throw DomainError("gen: unknown family '" + fam + "'");
    }
    std::cout << m.to_string();
    return 0;
}

int run_word(const std::string& wordText, const std::string& path) {
    const Graph g = load_graph(path);
    Word w;
    for (char c : wordText) {
        if (c >= 'a' && c <= 'z') w.push_back(c - 'a' + 1);
        else if (c >= '1' && c <= '9') w.push_back(c - '0');
        else throw DomainError("word letters must be a..z or 1..9");
    }
    const bool ok = word_represents(w, g);
    std::cout << (ok ? "REPRESENTS" : "DOES-NOT-REPRESENT") << "\n";
    return ok ? 0 : 1;
}

int run_bracelets(int k) {
    for (const Bits& a : enumerate_bracelets(k)) std::cout << to_string(a) << "\n";
    return 0;
}

int run_verify(const std::string& id, int kmax, long long samples, unsigned seed, int rows, int cols, int maxv) {
    std::vector<LemmaReport> reports;
    if (id == "m2") reports.push_back(verify_lemma_m2(kmax > 0 ? kmax : 7));
    else if (id == "L1") reports.push_back(verify_lemma_L1(rows > 0 ? rows : 8, cols > 0 ? cols : 9));
    else if (id == "fc") reports.push_back(verify_lemma_fc(kmax > 0 ? kmax : 7));
    else if (id == "MVast") reports.push_back(verify_lemma_MVast());
    else if (id == "rb") reports.push_back(verify_lemma_rb(kmax > 0 ? kmax : 5));
    else if (id == "W") reports.push_back(verify_lemma_W());
    else if (id == "X") reports.push_back(verify_lemma_X());
    else if (id == "G") reports.push_back(verify_lemma_G());
    else if (id == "icp") reports.push_back(verify_theorem_icp(rows > 0 ? rows : 4, cols > 0 ? cols : 4, samples, seed));
    else if (id == "sgicp") reports.push_back(verify_theorem_sgicp(rows > 0 ? rows : 3, cols > 0 ? cols : 4));
    else if (id == "gforb") reports.push_back(verify_gforb_minimality(maxv > 0 ? maxv : 11));
    else if (id == "all") reports = verify_all();
    else throw DomainError("verify: unknown lemma id '" + id + "'");
    bool allPass = true;
    for (const LemmaReport& r : reports) {
        std::cout << report_json(r).dump() << "\n";
        allPass = allPass && r.passed();
    }
    return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular-ones / I-circular matrix decisions and split-graph semi-transitivity"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "machine-readable JSON output");

    std::string path = "-";
    bool brute = false;
    auto* c1p = app.add_subcommand("c1p", "decide the circular-ones property of a matrix");
    c1p->add_option("file", path, "matrix file or - for stdin");
    c1p->add_flag("--brute", brute, "use the exhaustive column-order oracle");
    auto* icirc = app.add_subcommand("icirc", "decide the I-circular property of a matrix");
    icirc->add_option("file", path, "matrix file or - for stdin");
    icirc->add_flag("--brute", brute, "use the exhaustive column-order oracle");
    auto* split = app.add_subcommand("split", "decide semi-transitivity of a split graph");
    split->add_option("file", path, "graph file or - for stdin");
    auto* orient = app.add_subcommand("orient", "search for a semi-transitive orientation by brute force");
    orient->add_option("file", path, "graph file or - for stdin");
    for (auto* sub : {c1p, icirc, split, orient}) sub->add_flag("--json", asJson, "machine-readable JSON output");

    std::vector<std::string> genArgs;
    std::string variant = "literal";
    auto* gen = app.add_subcommand("gen", "print a named family matrix");
    gen->add_option("family", genArgs, "family name and parameters");
    gen->add_option("--variant", variant, "U/W column convention: literal|figure");

    std::string wordText;
    auto* word = app.add_subcommand("word", "check whether a word represents a graph");
    word->add_option("word", wordText, "word over a..z or 1..9")->required();
    word->add_option("file", path, "graph file or - for stdin");

    int braceletLen = 0;
    auto* bracelets = app.add_subcommand("bracelets", "enumerate binary bracelets A_k");
    bracelets->add_option("k", braceletLen, "sequence length")->required();

    std::string lemmaId;
    int kmax = 0, rows = 0, cols = 0, maxv = 0;
    long long samples = 10000;
    unsigned seed = 12345;
    auto* verify = app.add_subcommand("verify", "machine-verify a lemma or theorem sweep");
    verify->add_option("lemma", lemmaId, "m2|L1|fc|MVast|rb|W|X|G|icp|sgicp|gforb|all")->required();
    verify->add_option("--kmax", kmax, "sequence-length bound");
    verify->add_option("--samples", samples, "random sample count");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--rows", rows, "row bound");
    verify->add_option("--cols", cols, "column bound");
    verify->add_option("--maxv", maxv, "vertex bound");

    try {
        app.parse(argc, argv);
        const int guardEdges = guard_from_env("CIRCMAT_BRUTE_EDGES", kDefaultBruteForceEdges);
        const int guardCols = guard_from_env("CIRCMAT_BRUTE_COLS", kDefaultBruteForceCols);
        if (c1p->parsed()) return run_c1p(path, asJson, brute, guardCols);
        if (icirc->parsed()) return run_icirc(path, asJson, brute, guardCols);
        if (split->parsed()) return run_split(path, asJson);
        if (orient->parsed()) return run_orient(path, asJson, guardEdges);
        if (gen->parsed()) return run_gen(genArgs, variant);
        if (word->parsed()) return run_word(wordText, path);
        if (bracelets->parsed()) return run_bracelets(braceletLen);
        if (verify->parsed()) return run_verify(lemmaId, kmax, samples, seed, rows, cols, maxv);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
