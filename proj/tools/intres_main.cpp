// Command-line front end: poset generators, interval enumeration, covers,
// resolutions, global dimensions, the zero-dimension classifier, string
// enumeration, and the randomized property suites.
//
// Exit codes: 0 ok, 1 malformed input, 2 validation failure, 3 internal
// invariant breach.  Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <fstream>
#include <set>

#include "CLI11.hpp"

#include "intres/approx.hpp"
#include "intres/homology.hpp"
#include "intres/json_io.hpp"
#include "intres/strings.hpp"
#include "intres/suites.hpp"

using namespace intres;

namespace {

struct GlobalOpts {
    Scalar field = 2;
    std::string format = "json";
    std::uint64_t seed = 1;
};

Json read_input_json(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        try {
            return Json::parse(buf.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(std::string("parse error on stdin: ") + e.what());
        }
    }
    return load_json_file(path);
}

std::string dir_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

PersModule read_module(const std::string& path, const GlobalOpts& g) {
    return module_from_json(read_input_json(path), path == "-" ? "." : dir_of(path), g.field);
}

void print_table(const Json& doc, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (value.is_object() ||
                (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object()))) {
                os << pad << key << ":\n";
                print_table(value, os, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& value : doc) {
            if (value.is_object()) {
                os << pad << "-\n";
                print_table(value, os, indent + 1);
            } else {
                os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else {
        os << pad << doc.dump() << "\n";
    }
}

void emit(const Json& doc, const GlobalOpts& g) {
    if (g.format == "json")
        std::cout << dump_json(doc);
    else
        print_table(doc, std::cout);
}

std::vector<int> parse_elements(const Poset& p, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(p.index_of(item));
    }
    if (out.empty()) throw SchemaError("empty element list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Json suite_to_json(const SuiteResult& r) {
    Json doc;
    doc["suite"] = r.name;
    doc["cases"] = r.cases;
    doc["failures"] = r.failures;
    if (!r.notes.empty()) doc["notes"] = r.notes;
    if (!r.fail_msgs.empty()) doc["failure_messages"] = r.fail_msgs;
    return doc;
}

Json decomposition_or_null(const PersModule& m) {
    // a module is interval-decomposable iff its resolution has length 0
    Resolution res = interval_resolution(m);
    if (res.length() == 0 && !m.is_zero()) return multiset_to_json(m.host(), res.terms[0]);
    if (m.is_zero()) return Json::object();
    return Json();
}

int run(int argc, char** argv) {
    CLI::App app{"exact interval-resolution computations for modules over finite posets"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("INTRES_FIELD")) g.field = static_cast<Scalar>(std::atoi(env));
    app.add_option("--field", g.field, "field characteristic (prime, default 2)")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a poset from a named family");
    std::string family, orient, out_path;
    int n = 3, m = 1, l = 1, rows = 2, cols = 2;
    gen->add_option("--family", family, "A | D4 | C | grid | ladder | igusaP | igusaP'")
        ->required();
    gen->add_option("--orient", orient, "orientation word ({r,l} for A/ladder, {i,o} for D4)");
    gen->add_option("--n", n, "A_n size");
    gen->add_option("--m", m, "C(m,l) / ladder size");
    gen->add_option("--l", l, "C(m,l) size");
    gen->add_option("--rows", rows, "grid rows");
    gen->add_option("--cols", cols, "grid columns");
    gen->add_option("-o,--output", out_path, "write to file instead of stdout");
    gen->callback([&] {
        Poset p;
        if (family == "A") {
            if (orient.empty()) orient = equioriented_word(n);
            if (orient == "equi") orient = equioriented_word(n);
            if (orient == "zigzag") orient = zigzag_word(n);
            p = make_a_n(n, orient);
        } else if (family == "D4") {
            p = make_d4(orient.empty() ? "ioo" : orient);
        } else if (family == "C") {
            p = make_cml(m, l);
        } else if (family == "grid") {
            p = make_grid(rows, cols);
        } else if (family == "ladder") {
            if (orient.empty()) orient = equioriented_word(m);
            p = make_ladder(m, orient);
        } else if (family == "igusaP") {
            p = make_igusa_p();
        } else if (family == "igusaP'") {
            p = make_igusa_p_prime();
        } else {
            throw SchemaError("unknown family '" + family + "'");
        }
        Json doc = poset_to_json(p);
        if (out_path.empty()) {
            emit(doc, g);
        } else {
            std::ofstream out(out_path);
            if (!out) throw SchemaError("cannot write '" + out_path + "'");
            out << dump_json(doc);
        }
    });

    // intervals
    auto* intervals_cmd = app.add_subcommand("intervals", "enumerate the intervals of a poset");
    std::string intervals_in;
    intervals_cmd->add_option("input", intervals_in, "poset JSON file or -")->required();
    intervals_cmd->callback([&] {
        Poset p = poset_from_json(read_input_json(intervals_in));
        std::vector<Interval> all = enumerate_intervals(p);
        Json doc;
        doc["count"] = all.size();
        Json list = Json::array();
        for (const Interval& I : all) {
            Json members = Json::array();
            for (int a : I.members) members.push_back(p.label(a));
            list.push_back(members);
        }
        doc["intervals"] = list;
        emit(doc, g);
    });

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "interval cover of a module");
    std::string cover_in;
    cover_cmd->add_option("input", cover_in, "module JSON file or -")->required();
    cover_cmd->callback([&] {
        PersModule mod = read_module(cover_in, g);
        Cover cover = interval_cover(mod);
        Json doc = cover_to_json(cover);
        Json cert;
        cert["pointwise_surjective"] = cover.map.pointwise_surjective();
        bool inj = true;
        for (std::size_t k = 0; k < cover.source.copies.size(); ++k)
            inj = inj && cover.map.compose_after(cover.source.copy_inclusion(static_cast<int>(k)))
                             .pointwise_injective();
        cert["summands_injective"] = inj;
        cert["support_equal"] = cover.source.module.support() == mod.support();
        cert["right_approximation"] =
            is_right_approximation(cover.source, cover.generators, mod);
        cert["right_minimal"] = is_right_minimal(cover.source, cover.generators, mod);
        doc["certificates"] = cert;
        emit(doc, g);
    });

    // resolve
    auto* resolve_cmd = app.add_subcommand("resolve", "minimal interval resolution of a module");
    std::string resolve_in;
    bool reduce_support = true;
    resolve_cmd->add_option("input", resolve_in, "module JSON file or -")->required();
    resolve_cmd->add_flag("--reduce-support,!--no-reduce-support", reduce_support,
                          "shrink each step to the convex hull of the support (default on)");
    resolve_cmd->callback([&] {
        PersModule mod = read_module(resolve_in, g);
        Resolution res = interval_resolution(mod, {reduce_support, 64});
        emit(resolution_to_json(res), g);
    });

    // resdim
    auto* resdim_cmd = app.add_subcommand("resdim", "interval resolution dimension of a module");
    std::string resdim_in;
    resdim_cmd->add_option("input", resdim_in, "module JSON file or -")->required();
    resdim_cmd->callback([&] {
        PersModule mod = read_module(resdim_in, g);
        Json doc;
        doc["interval_resdim"] = interval_resdim(mod);
        emit(doc, g);
    });

    // gldim
    auto* gldim_cmd = app.add_subcommand("gldim", "global dimension of a poset algebra");
    std::string gldim_in;
    bool want_interval = false, want_projective = false;
    gldim_cmd->add_option("input", gldim_in, "poset JSON file or -")->required();
    gldim_cmd->add_flag("--interval", want_interval, "interval resolution global dimension");
    gldim_cmd->add_flag("--projective", want_projective, "classical global dimension");
    gldim_cmd->callback([&] {
        Poset p = poset_from_json(read_input_json(gldim_in));
        if (!want_interval && !want_projective) want_interval = true;
        Json doc;
        doc["field"] = g.field;
        if (want_interval) doc["interval_gldim"] = interval_gldim(p, g.field);
        if (want_projective) doc["projective_gldim"] = projective_gldim(p, g.field);
        emit(doc, g);
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "zero-gldim shape classifier");
    std::string classify_in;
    classify_cmd->add_option("input", classify_in, "poset JSON file or -")->required();
    classify_cmd->callback([&] {
        Poset p = poset_from_json(read_input_json(classify_in));
        ShapeVerdict v = classify_zero_gldim(p);
        Json doc;
        doc["accepted"] = v.accepted;
        doc["shape"] = v.shape_string();
        if (!v.witness.empty()) doc["witness"] = v.witness;
        Json comps = Json::array();
        for (const auto& c : v.components) comps.push_back(c.to_string());
        doc["components"] = comps;
        emit(doc, g);
    });

    // strings
    auto* strings_cmd = app.add_subcommand("strings", "string representatives over C(m,l)");
    int sm = 1, sl = 1;
    strings_cmd->add_option("--m", sm, "m >= 1")->required();
    strings_cmd->add_option("--l", sl, "l >= 1")->required();
    strings_cmd->callback([&] {
        if (sm < 1 || sl < 1) throw SchemaError("strings needs --m and --l at least 1");
        CmlQuiver q = cml_quiver(sm, sl);
        std::vector<StringWord> words = enumerate_strings(q);
        std::vector<Interval> intervals = enumerate_intervals(q.poset);
        Json doc;
        doc["m"] = sm;
        doc["l"] = sl;
        doc["string_count"] = words.size();
        doc["interval_count"] = intervals.size();
        doc["indecomposable_count"] = count_indecomposables(sm, sl);
        std::set<std::vector<int>> supports;
        Interval full{std::vector<int>()};
        for (int x = 0; x < q.poset.size(); ++x) full.members.push_back(x);
        bool bijective = true;
        Json list = Json::array();
        for (const StringWord& w : words) {
            Interval I = string_to_interval(q, w);
            if (I == full || !supports.insert(I.members).second) bijective = false;
            Json item;
            item["word"] = render_string(w);
            Json members = Json::array();
            for (int a : I.members) members.push_back(q.poset.label(a));
            item["interval"] = members;
            list.push_back(item);
        }
        bijective = bijective &&
                    static_cast<long long>(words.size()) + 1 == count_indecomposables(sm, sl) &&
                    words.size() + 1 == intervals.size();
        doc["bijection_onto_proper_intervals"] = bijective;
        doc["strings"] = list;
        emit(doc, g);
    });

    // restrict
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a module to a full subposet");
    std::string restrict_in, restrict_elems;
    restrict_cmd->add_option("input", restrict_in, "module JSON file or -")->required();
    restrict_cmd->add_option("--elements", restrict_elems, "comma-separated element labels")
        ->required();
    restrict_cmd->callback([&] {
        PersModule mod = read_module(restrict_in, g);
        SubposetEmbedding emb = full_subposet(mod.host(), parse_elements(mod.host(), restrict_elems));
        emit(module_to_json(restrict_module(mod, emb)), g);
    });

    // conv
    auto* conv_cmd = app.add_subcommand("conv", "convex hull of an element set");
    std::string conv_in, conv_elems;
    conv_cmd->add_option("input", conv_in, "poset JSON file or -")->required();
    conv_cmd->add_option("--elements", conv_elems, "comma-separated element labels")->required();
    conv_cmd->callback([&] {
        Poset p = poset_from_json(read_input_json(conv_in));
        std::vector<int> s = parse_elements(p, conv_elems);
        std::vector<int> hull = convex_hull(p, s);
        Json doc;
        Json in = Json::array(), out = Json::array();
        for (int a : s) in.push_back(p.label(a));
        for (int a : hull) out.push_back(p.label(a));
        doc["input"] = in;
        doc["hull"] = out;
        doc["is_interval"] = is_interval(p, hull);
        emit(doc, g);
    });

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of an interval module");
    std::string tau_in, tau_interval, iso_file, iso_interval;
    tau_cmd->add_option("input", tau_in, "poset JSON file or -")->required();
    tau_cmd->add_option("--interval", tau_interval, "comma-separated element labels")->required();
    tau_cmd->add_option("--isomorphic-to", iso_file, "module JSON to compare against");
    tau_cmd->add_option("--isomorphic-to-interval", iso_interval,
                        "interval module to compare against");
    tau_cmd->callback([&] {
        Poset p = poset_from_json(read_input_json(tau_in));
        std::vector<int> members = parse_elements(p, tau_interval);
        if (!is_interval(p, members)) throw ValidationError("--interval is not an interval");
        PersModule t = ar_translate(interval_module(p, Interval{members}, g.field));
        Json doc;
        doc["interval"] = interval_key(p, Interval{members});
        doc["tau"] = module_to_json(t);
        Json dec = decomposition_or_null(t);
        doc["interval_decomposable"] = !dec.is_null();
        if (!dec.is_null()) doc["decomposition"] = dec;
        auto iso_string = [](IsoCheck c) {
            return c == IsoCheck::isomorphic ? "yes" : c == IsoCheck::not_isomorphic ? "no"
                                                                                     : "inconclusive";
        };
        if (!iso_file.empty()) {
            PersModule other = read_module(iso_file, g);
            doc["isomorphic_to_file"] = iso_string(is_isomorphic(t, other, g.seed));
        }
        if (!iso_interval.empty()) {
            std::vector<int> im = parse_elements(p, iso_interval);
            if (!is_interval(p, im))
                throw ValidationError("--isomorphic-to-interval is not an interval");
            doc["isomorphic_to_interval"] =
                iso_string(is_isomorphic(t, interval_module(p, Interval{im}, g.field), g.seed));
        }
        emit(doc, g);
    });

    // check
    auto* check_cmd = app.add_subcommand("check", "run the randomized property suites");
    std::string suite = "all";
    int cases = -1;
    check_cmd->add_option("--suite", suite,
                          "cover-contract | oracle | convex-invariance | support-reduction | "
                          "monotonicity | classification | char-independence | all")
        ->capture_default_str();
    check_cmd->add_option("--cases", cases, "case count (suite-specific default)");
    check_cmd->callback([&] {
        std::vector<SuiteResult> results;
        if (suite == "all") {
            results = run_all_suites(g.seed);
        } else if (suite == "cover-contract") {
            results.push_back(suite_cover_contract(g.seed, cases > 0 ? cases : 100));
        } else if (suite == "oracle") {
            results.push_back(suite_oracle(g.seed, cases > 0 ? cases : 100));
        } else if (suite == "convex-invariance") {
            results.push_back(suite_convex_invariance(g.seed, cases > 0 ? cases : 50));
        } else if (suite == "support-reduction") {
            results.push_back(suite_support_reduction(g.seed, cases > 0 ? cases : 40));
        } else if (suite == "monotonicity") {
            results.push_back(suite_monotonicity(g.seed, cases > 0 ? cases : 50));
        } else if (suite == "classification") {
            results.push_back(suite_classification(g.seed, cases > 0 ? cases : 100));
        } else if (suite == "char-independence") {
            results.push_back(suite_char_independence(g.seed, cases > 0 ? cases : 40));
        } else {
            throw SchemaError("unknown suite '" + suite + "'");
        }
        Json doc;
        doc["seed"] = g.seed;
        Json list = Json::array();
        long long failures = 0;
        for (const auto& r : results) {
            list.push_back(suite_to_json(r));
            failures += r.failures;
        }
        doc["suites"] = list;
        doc["failures_total"] = failures;
        emit(doc, g);
        if (failures > 0) throw InternalError(std::to_string(failures) + " property failures");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (!is_prime(g.field)) throw ValidationError("--field must be prime");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
