#include "qcl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcl/ibox.hpp"
#include "qcl/pbw.hpp"
#include "qcl/serialize.hpp"
#include "qcl/verify.hpp"

namespace qcl::cli {

namespace {

using json_io::json;

struct DatumFlags {
    std::string type;
    std::string cartan_file;
    std::string word;
};

struct Flags {
    DatumFlags datum;
    std::string seq;
    bool expand = false;
    long var = 0;
    std::string element_file;
    std::string vec;
    std::string kind = "L";
    std::string x;
    std::string y;
    std::string box1;
    std::string box2;
    std::size_t depth = 4;
    unsigned threads = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail_input("io-error", "cannot open " + path);
    }
    return json::parse(in);
}

IntVector parse_vector(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        return json::parse(text).get<IntVector>();
    }
    IntVector out;
    for (const auto& item : split(text, ',')) {
        std::size_t used = 0;
        const long long value = std::stoll(item, &used);
        if (used != item.size()) {
            fail_input("malformed-vector", "cannot parse '" + item + "' as an integer");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<std::size_t> parse_positions(const std::string& text, std::size_t bound, const char* what) {
    std::vector<std::size_t> out;
    for (Int x : parse_vector(text)) {
        if (x < 1 || static_cast<std::size_t>(x) > bound) {
            fail_input("out-of-range", std::string(what) + " entry " + std::to_string(x) + " outside 1.." +
                                           std::to_string(bound));
        }
        out.push_back(static_cast<std::size_t>(x - 1));
    }
    return out;
}

std::shared_ptr<const CartanDatum> load_datum(const DatumFlags& f) {
    if (!f.cartan_file.empty()) {
        return std::make_shared<const CartanDatum>(json_io::datum_from_json(read_json_file(f.cartan_file)));
    }
    if (f.type.empty()) {
        fail_input("missing-datum", "pass --type or --cartan");
    }
    return std::make_shared<const CartanDatum>(CartanDatum::preset(f.type));
}

WeylWord load_word(const DatumFlags& f) {
    auto datum = load_datum(f);
    if (f.word.empty()) {
        fail_input("missing-word", "pass --word");
    }
    std::vector<std::size_t> letters;
    for (const auto& label : split(f.word, ',')) {
        letters.push_back(datum->index_of(label));
    }
    return WeylWord(datum, letters);
}

// FNV-1a, stable across platforms, used only for cache file names.
std::string stable_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string cache_key(const DatumFlags& f, const WeylWord& word, const std::vector<std::size_t>& seq) {
    std::string key = f.type.empty() ? "cartan-" + stable_hash(json_io::to_json(word.datum()).dump()) : f.type;
    key += "_w";
    for (std::size_t i = 0; i < word.size(); ++i) {
        key += (i ? "-" : "") + std::to_string(word.letter(i) + 1);
    }
    key += "_s";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        key += (i ? "-" : "") + std::to_string(seq[i] + 1);
    }
    return key;
}

// The seed reached from the GLS seed by --seq, optionally through the
// on-disk cache named by QCL_SEED_CACHE.
QuantumSeed mutated_seed(const Flags& flags, const GlsSeed& gls) {
    const auto seq = flags.seq.empty() ? std::vector<std::size_t>{} : parse_positions(flags.seq, gls.size(), "--seq");
    const char* cache_dir = std::getenv("QCL_SEED_CACHE");
    std::filesystem::path path;
    if (cache_dir != nullptr && *cache_dir != '\0') {
        path = std::filesystem::path(cache_dir) / (cache_key(flags.datum, gls.word, seq) + ".json");
        std::ifstream in(path);
        if (in) {
            return json_io::seed_from_json(json::parse(in));
        }
    }
    QuantumSeed seed = mutate_seed(gls.seed, seq);
    if (!path.empty()) {
        std::filesystem::create_directories(path.parent_path());
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            out << json_io::to_json(seed).dump();
        }
        std::filesystem::rename(tmp, path);
    }
    return seed;
}

std::size_t parse_var(const Flags& flags, std::size_t bound) {
    if (flags.var < 1 || static_cast<std::size_t>(flags.var) > bound) {
        fail_input("out-of-range", "--var must lie in 1.." + std::to_string(bound));
    }
    return static_cast<std::size_t>(flags.var - 1);
}

json degree_entry(const CompatiblePair& pair, const TorusElement& p, bool upper) {
    try {
        return upper ? json(degree(pair, p)) : json(codegree(pair, p));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::refusal) {
            throw;
        }
        return nullptr;
    }
}

IBox parse_box(const std::string& text, const WeylWord& word) {
    const auto ends = parse_positions(text, word.size(), "box");
    if (ends.size() != 2) {
        fail_input("invalid-box", "boxes are given as a,b");
    }
    IBox box{ends[0], ends[1]};
    validate_box(word, box);
    return box;
}

int cmd_glseed(const Flags& f, std::ostream& out) {
    out << json_io::gls_report(build_gls(load_word(f.datum))).dump(2) << '\n';
    return 0;
}

int cmd_mutate(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    const QuantumSeed seed = mutated_seed(f, gls);
    json j = json_io::to_json(seed);
    if (!f.expand) {
        j.erase("vars");
        j.erase("L0");
    } else {
        json degrees = json::array();
        json codegrees = json::array();
        for (const auto& v : seed.vars) {
            degrees.push_back(degree_entry(gls.pair(), v, true));
            codegrees.push_back(degree_entry(gls.pair(), v, false));
        }
        j["degrees"] = degrees;
        j["codegrees"] = codegrees;
    }
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_expand(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    const QuantumSeed seed = mutated_seed(f, gls);
    json j{{"history", json_io::one_based(seed.history)}};
    if (f.var != 0) {
        const std::size_t k = parse_var(f, seed.rank());
        j["var"] = k + 1;
        j["expansion"] = json_io::to_json(seed.vars[k]);
    } else {
        json vars = json::array();
        for (const auto& v : seed.vars) {
            vars.push_back(json_io::to_json(v));
        }
        j["vars"] = vars;
    }
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_positivity(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    const QuantumSeed seed = mutated_seed(f, gls);
    json per_var = json::array();
    bool all = true;
    for (const auto& v : seed.vars) {
        const bool ok = is_positive(v);
        per_var.push_back(ok);
        all = all && ok;
    }
    out << json{{"history", json_io::one_based(seed.history)}, {"positive", all}, {"vars", per_var}}.dump(2) << '\n';
    return 0;
}

int cmd_degree(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    std::optional<TorusElement> element;
    json j;
    if (!f.element_file.empty()) {
        element = json_io::torus_from_json(read_json_file(f.element_file), gls.seed.initial_L());
    } else {
        const QuantumSeed seed = mutated_seed(f, gls);
        const std::size_t k = parse_var(f, seed.rank());
        element = seed.vars[k];
        j["history"] = json_io::one_based(seed.history);
        j["var"] = k + 1;
    }
    j["degree"] = degree(gls.pair(), *element);
    j["codegree"] = codegree(gls.pair(), *element);
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_pbw2g(const Flags& f, std::ostream& out) {
    const WeylWord word = load_word(f.datum);
    const GVector g = pbw_to_g(word, PbwVector{parse_vector(f.vec)});
    out << json{{"g", g.entries}}.dump(2) << '\n';
    return 0;
}

int cmd_g2pbw(const Flags& f, std::ostream& out) {
    const WeylWord word = load_word(f.datum);
    const PbwFromG a = g_to_pbw(word, GVector{parse_vector(f.vec)});
    out << json{{"pbw", a.pbw.entries}, {"in_cw", a.in_cw}}.dump(2) << '\n';
    return 0;
}

int cmd_pairing(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    const IntVector x = parse_vector(f.x);
    const IntVector y = parse_vector(f.y);
    Int value = 0;
    if (f.kind == "L") {
        value = l_pairing(gls, PbwVector{x}, PbwVector{y});
    } else if (f.kind == "GR") {
        value = gr_pairing(gls, GVector{x}, GVector{y});
    } else if (f.kind == "GL") {
        value = gl_pairing(gls, GVector{x}, GVector{y});
    } else {
        fail_input("unknown-kind", "--kind must be L, GR or GL");
    }
    out << json{{"kind", f.kind}, {"value", value}}.dump(2) << '\n';
    return 0;
}

int cmd_ibox(const Flags& f, std::ostream& out) {
    const GlsSeed gls = build_gls(load_word(f.datum));
    const IBox b1 = parse_box(f.box1, gls.word);
    const IBox b2 = parse_box(f.box2, gls.word);
    const bool commute = boxes_commute(gls.word, b1, b2);
    const Int value = lambda_boxes(gls, b1, b2);
    out << json{{"value", value}, {"commute", commute}}.dump(2) << '\n';
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    const WeylWord word = load_word(f.datum);
    VerifyOptions options;
    options.depth = f.depth;
    options.threads = f.threads;
    const VerifyReport report = verify_word(word, options);
    json checks = json::object();
    for (const auto& c : report.checks) {
        json entry{{"pass", c.passed}, {"cases", c.cases}};
        if (!c.passed) {
            entry["detail"] = c.detail;
        }
        checks[c.name] = entry;
    }
    std::vector<std::size_t> letters = word.letters();
    out << json{{"word", json_io::one_based(letters)},
                {"depth", f.depth},
                {"seeds", report.seeds_visited},
                {"checks", checks},
                {"pass", report.passed()}}
               .dump(2)
        << '\n';
    return report.passed() ? 0 : 2;
}

void add_datum_flags(CLI::App* cmd, Flags& f, bool need_word = true) {
    auto* type = cmd->add_option("--type", f.datum.type, "Built-in Cartan type (A1, A2, A3, B2, B3, C3, G2)");
    auto* cartan = cmd->add_option("--cartan", f.datum.cartan_file, "JSON file with a Cartan datum");
    type->excludes(cartan);
    auto* word = cmd->add_option("--word", f.datum.word, "Comma-separated reduced word, e.g. 1,2,1");
    if (need_word) {
        word->required();
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for quantum seeds of reduced words"};
    app.require_subcommand(1);
    Flags f;

    auto* glseed = app.add_subcommand("glseed", "GLS seed report for a reduced word");
    add_datum_flags(glseed, f);

    auto* mutate = app.add_subcommand("mutate", "Mutate the GLS seed along a sequence");
    add_datum_flags(mutate, f);
    mutate->add_option("--seq", f.seq, "Comma-separated mutation directions (1-based)");
    mutate->add_flag("--expand", f.expand, "Include variable expansions and (co)degrees");

    auto* expand = app.add_subcommand("expand", "Expansions of cluster variables in the initial torus");
    add_datum_flags(expand, f);
    expand->add_option("--seq", f.seq, "Comma-separated mutation directions (1-based)");
    expand->add_option("--var", f.var, "Single variable to print (1-based)");

    auto* positivity = app.add_subcommand("positivity", "Check coefficient positivity of all variables");
    add_datum_flags(positivity, f);
    positivity->add_option("--seq", f.seq, "Comma-separated mutation directions (1-based)");

    auto* deg = app.add_subcommand("degree", "Degree and codegree of a variable or a torus element");
    add_datum_flags(deg, f);
    deg->add_option("--seq", f.seq, "Comma-separated mutation directions (1-based)");
    auto* var_opt = deg->add_option("--var", f.var, "Variable index (1-based)");
    auto* elem_opt = deg->add_option("--element", f.element_file, "JSON file holding a torus element");
    var_opt->excludes(elem_opt);

    auto* pbw2g = app.add_subcommand("pbw2g", "PBW vector to g-vector");
    add_datum_flags(pbw2g, f);
    pbw2g->add_option("--vec", f.vec, "PBW vector, JSON array or comma list")->required();

    auto* g2pbw = app.add_subcommand("g2pbw", "g-vector to PBW vector");
    add_datum_flags(g2pbw, f);
    g2pbw->add_option("--vec", f.vec, "g-vector, JSON array or comma list")->required();

    auto* pairing = app.add_subcommand("pairing", "Skew-symmetric pairings L, GR, GL");
    add_datum_flags(pairing, f);
    pairing->add_option("--kind", f.kind, "L (PBW vectors), GR or GL (g-vectors)")
        ->check(CLI::IsMember({"L", "GR", "GL"}));
    pairing->add_option("--x", f.x, "First vector")->required();
    pairing->add_option("--y", f.y, "Second vector")->required();

    auto* ibox = app.add_subcommand("ibox-lambda", "Lambda between two i-box modules");
    add_datum_flags(ibox, f);
    ibox->add_option("--box1", f.box1, "First box a,b (1-based)")->required();
    ibox->add_option("--box2", f.box2, "Second box c,d (1-based)")->required();

    auto* verify = app.add_subcommand("verify", "Run the invariant suite for a reduced word");
    add_datum_flags(verify, f);
    verify->add_option("--depth", f.depth, "Longest mutation sequence explored")->capture_default_str();
    verify->add_option("--threads", f.threads, "Worker count; 1 runs sequentially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    auto report = [&](const std::string& code, const std::string& message, int exit_code) {
        out << json{{"error", code}, {"message", message}}.dump(2) << '\n';
        err << "qcl: " << message << '\n';
        return exit_code;
    };

    try {
        if (glseed->parsed()) return cmd_glseed(f, out);
        if (mutate->parsed()) return cmd_mutate(f, out);
        if (expand->parsed()) return cmd_expand(f, out);
        if (positivity->parsed()) return cmd_positivity(f, out);
        if (deg->parsed()) return cmd_degree(f, out);
        if (pbw2g->parsed()) return cmd_pbw2g(f, out);
        if (g2pbw->parsed()) return cmd_g2pbw(f, out);
        if (pairing->parsed()) return cmd_pairing(f, out);
        if (ibox->parsed()) return cmd_ibox(f, out);
        if (verify->parsed()) return cmd_verify(f, out);
    } catch (const Error& e) {
        return report(e.code(), e.what(), e.kind() == ErrorKind::refusal ? 2 : 1);
    } catch (const json::exception& e) {
        return report("malformed-json", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return report("malformed-input", e.what(), 1);
    } catch (const std::out_of_range& e) {
        return report("malformed-input", e.what(), 1);
    }
    return 1;
}

} // namespace qcl::cli
