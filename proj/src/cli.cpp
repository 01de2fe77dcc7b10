#include "entgeo/cli.hpp"

#include "entgeo/rank_locus.hpp"
#include "entgeo/serialize.hpp"
#include "entgeo/spin_chain.hpp"
#include "entgeo/splitting.hpp"
#include "entgeo/weyl.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace entgeo::cli {

namespace {

using nlohmann::json;

bool verbose() {
    const char* v = std::getenv("ENTGEO_VERBOSE");
    return v && *v && std::string(v) != "0";
}

void note(const std::string& msg) {
    if (verbose()) std::cerr << "[entgeo] " << msg << "\n";
}

long parse_integer(const std::string& item, const char* flag) {
    try {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "bad integer '" + item + "'");
    }
}

std::vector<std::size_t> parse_type_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long v = parse_integer(item, "--type");
        if (v < 1) throw CLI::ValidationError("--type", "factors must be >= 1");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw CLI::ValidationError("--type", "empty list");
    return out;
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, "--degrees"));
    return out;
}

json size_list(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t x : v) out.push_back(x);
    return out;
}

json long_list(const std::vector<long>& v) {
    json out = json::array();
    for (long x : v) out.push_back(x);
    return out;
}

struct FiltrationArgs {
    unsigned d_a = 0, d_b = 0;
    int t_max = -1;
};

json run_filtration(const FiltrationArgs& a) {
    json rows = json::array();
    for (unsigned r = 1; r <= std::min(a.d_a, a.d_b); ++r) {
        RankLocusProfile profile = rank_locus_profile(a.d_a, a.d_b, r);
        json row{{"r", r},
                 {"dim", profile.dim},
                 {"codim", profile.codim},
                 {"degree", profile.degree.get_str()},
                 {"hilbert_polynomial", rational_vector_to_json(hilbert_polynomial(a.d_a, a.d_b, r))}};
        if (a.t_max >= 0) {
            json series = json::array();
            for (const mpz_class& h :
                 hilbert_series_coefficients(a.d_a, a.d_b, r, static_cast<unsigned>(a.t_max)))
                series.push_back(h.get_str());
            row["series"] = std::move(series);
        }
        rows.push_back(std::move(row));
    }
    return json{{"schema", "1"},
                {"command", "filtration"},
                {"d_a", a.d_a},
                {"d_b", a.d_b},
                {"rows", std::move(rows)}};
}

struct SplittingArgs {
    std::string degrees, type;
};

json run_splitting(const SplittingArgs& a) {
    std::vector<long> degrees = parse_long_list(a.degrees);
    std::vector<std::size_t> factors = parse_type_list(a.type);
    SubsystemType type(factors);
    json out{{"schema", "1"},
             {"command", "splitting"},
             {"degrees", long_list(degrees)},
             {"type", size_list(factors)}};
    if (factors.size() == 2) {
        auto d = split_decompose(degrees, factors[0], factors[1]);
        out["reducible"] = d.has_value();
        if (d) {
            out["b"] = long_list(d->b);
            out["c"] = long_list(d->c);
            out["t"] = d->t;
        }
    } else {
        auto d = split_decompose_multi(degrees, type);
        out["reducible"] = d.has_value();
        if (d) {
            json parts = json::array();
            for (const auto& part : d->factors) parts.push_back(long_list(part));
            out["factors"] = std::move(parts);
            out["t"] = d->t;
        }
    }
    return out;
}

struct MonodromyArgs {
    unsigned m = 0;
    std::string type = "";
    std::string loop;
    std::string u_branch = "1", v_branch = "1";
    bool tensor = false;
    unsigned p = 0;
    std::string a_branch = "1", b_branch = "1";
    std::string cut = "1";
};

json stabilizer_to_json(const StabilizerDecision& d) {
    json out{{"member", d.member}};
    if (d.member) {
        json perm = json::array();
        for (std::size_t slot : d.permutation) perm.push_back(slot + 1);
        out["permutation"] = std::move(perm);
        json factors = json::array();
        for (const ExactMatrix& f : d.factors) factors.push_back(matrix_to_json(f));
        out["factors"] = std::move(factors);
    }
    return out;
}

json witness_to_json(const std::optional<WitnessResult>& w, const SubsystemType& type,
                     const Bipartition& cut) {
    if (!w) return nullptr;
    json side_a = json::array(), side_b = json::array();
    for (std::size_t k : cut.side_a()) side_a.push_back(k + 1);
    for (std::size_t k : cut.side_b()) side_b.push_back(k + 1);
    json out{{"state", state_to_json(w->state)},
             {"image", state_to_json(w->image)},
             {"image_schmidt_rank", w->image_rank},
             {"cut", json::array({std::move(side_a), std::move(side_b)})}};
    if (!w->superposed_factor_pair.empty()) {
        out["superposed_factor"] = w->superposed_factor_pair[0] + 1;
        out["superposed_levels"] =
            json::array({w->superposed_factor_pair[1], w->superposed_factor_pair[2]});
    }
    (void)type;
    return out;
}

json run_monodromy(const MonodromyArgs& a) {
    if (a.loop != "u" && a.loop != "v")
        throw CLI::ValidationError("--loop", "must be u or v");
    const LoopKind loop = a.loop == "u" ? LoopKind::U : LoopKind::V;

    SubsystemType type({1});
    ProjectiveGate gate = ProjectiveGate(ExactMatrix::identity(1));
    CycNum uv_commutator;
    std::string label;
    json out{{"schema", "1"}, {"command", "monodromy"}, {"loop", a.loop}};

    if (a.tensor) {
        if (a.p < 2) throw CLI::ValidationError("--p", "tensor model needs --p >= 2");
        TensorSymbolRep rep =
            build_tensor_symbol_rep(a.p, parse_scalar(a.u_branch), parse_scalar(a.a_branch),
                                    parse_scalar(a.v_branch), parse_scalar(a.b_branch));
        type = SubsystemType({a.p, a.p});
        gate = monodromy_of_loop(rep, loop);
        uv_commutator =
            commutator_scalar(monodromy_of_loop(rep, LoopKind::U), monodromy_of_loop(rep, LoopKind::V));
        label = loop == LoopKind::U ? "Z x I" : "I x Z";
        out["p"] = a.p;
    } else {
        if (a.m < 2) throw CLI::ValidationError("--m", "need --m >= 2");
        std::vector<std::size_t> factors =
            a.type.empty() ? std::vector<std::size_t>{a.m} : parse_type_list(a.type);
        type = SubsystemType(factors);
        if (type.total() != a.m)
            throw std::invalid_argument("type must multiply out to the level m");
        SymbolRep rep = build_symbol_rep(a.m, parse_scalar(a.u_branch), parse_scalar(a.v_branch));
        gate = monodromy_of_loop(rep, loop);
        uv_commutator =
            commutator_scalar(monodromy_of_loop(rep, LoopKind::U), monodromy_of_loop(rep, LoopKind::V));
        label = loop == LoopKind::U ? "Z" : "X^-1";
        out["m"] = a.m;
    }

    out["type"] = size_list(type.factors());
    out["gate"] = label;
    out["matrix"] = matrix_to_json(gate.matrix());
    out["uv_commutator_scalar"] = scalar_to_json(uv_commutator);

    StabilizerDecision dec = stabilizer_member(gate, type);
    out["stabilizer"] = stabilizer_to_json(dec);
    out["stabilizer_member"] = dec.member;

    if (type.count() >= 2) {
        std::vector<std::size_t> side_a;
        for (long v : parse_long_list(a.cut)) {
            if (v < 1 || static_cast<std::size_t>(v) > type.count())
                throw std::invalid_argument("cut index out of range");
            side_a.push_back(static_cast<std::size_t>(v - 1));
        }
        Bipartition cut(side_a, type.count());
        auto witness = entangling_witness(gate, type, cut);
        out["entangling"] = witness.has_value();
        out["witness"] = witness_to_json(witness, type, cut);
    }

    if (!a.tensor && a.m == 4 && type.factors() == std::vector<std::size_t>{2, 2}) {
        CnotEquivalence eq = cnot_equivalence_check();
        out["level4_dictionary"] = json{{"holds", eq.holds},
                                        {"shift_scalar", scalar_to_json(eq.shift_scalar)},
                                        {"clock_scalar", scalar_to_json(eq.clock_scalar)}};
    }
    return out;
}

struct ObstructionArgs {
    unsigned period = 0;
    unsigned generic_symbol = 0;
    unsigned tensor_symbol = 0;
    std::string type;
    long curve_degree = 0;
    bool curve_set = false;
    unsigned moduli_rank = 0;
    long moduli_degree = 0;
    bool moduli_set = false;
};

json torsion_check_json(const BrauerClassModel& cls, const SubsystemType& type) {
    unsigned long l = 1;
    for (std::size_t d : type.factors()) l = std::lcm(l, static_cast<unsigned long>(d));
    bool ok = torsion_admissible(cls, type);
    return json{{"kind", "torsion"},
                {"label", cls.label},
                {"period", cls.period},
                {"type", size_list(type.factors())},
                {"lcm", l},
                {"admissible", ok},
                {"verdict", ok ? "not-obstructed-by-torsion" : "obstructed"}};
}

json run_obstruction(const ObstructionArgs& a) {
    json checks = json::array();
    std::optional<SubsystemType> type;
    if (!a.type.empty()) type = SubsystemType(parse_type_list(a.type));

    int sources = (a.period > 0) + (a.generic_symbol > 0) + (a.tensor_symbol > 0);
    if (sources > 1)
        throw CLI::ValidationError("obstruction",
                                   "give at most one of --period, --generic-symbol, --tensor-symbol");
    if (sources == 1) {
        if (!type) throw CLI::ValidationError("obstruction", "torsion check needs --type");
        BrauerClassModel cls = a.period > 0       ? declared_class(a.period, "declared class")
                               : a.generic_symbol ? generic_symbol_class(a.generic_symbol)
                                                  : tensor_prime_symbol_class(a.tensor_symbol);
        checks.push_back(torsion_check_json(cls, *type));
    }

    if (a.curve_set) {
        if (!type || type->count() != 2)
            throw CLI::ValidationError("obstruction", "--curve-degree needs a two-factor --type");
        bool ok = curve_degree_obstruction(a.curve_degree, type->factors()[0], type->factors()[1]);
        checks.push_back(json{{"kind", "curve-degree"},
                              {"degree", a.curve_degree},
                              {"type", size_list(type->factors())},
                              {"gcd", std::gcd(type->factors()[0], type->factors()[1])},
                              {"compatible", ok},
                              {"verdict", ok ? "compatible" : "obstructed"}});
    }

    if (a.moduli_set) {
        unsigned order = moduli_brauer_order(a.moduli_rank, a.moduli_degree);
        json check{{"kind", "moduli-order"},
                   {"rank", a.moduli_rank},
                   {"degree", a.moduli_degree},
                   {"order", order}};
        if (type)
            check["torsion"] = torsion_check_json(
                declared_class(order, "moduli obstruction class"), *type);
        checks.push_back(std::move(check));
    }

    if (checks.empty())
        throw CLI::ValidationError("obstruction", "nothing to check; pass a class, degree, or rank");
    return json{{"schema", "1"}, {"command", "obstruction"}, {"checks", std::move(checks)}};
}

struct SpinChainArgs {
    std::string hopping = "1", penalty = "2", branch = "1";
};

json run_spinchain(const SpinChainArgs& a) {
    SpinChainParams params{Rational::parse(a.hopping), Rational::parse(a.penalty),
                           parse_scalar(a.branch)};
    GluingReport report = gluing_report(params);
    json spectrum = json::array();
    for (const Rational& x : report.spectrum) spectrum.push_back(x.str());
    return json{{"schema", "1"},
                {"command", "spinchain"},
                {"hopping", params.hopping.str()},
                {"penalty", params.penalty.str()},
                {"branch", scalar_to_json(params.twist_branch)},
                {"spectrum", std::move(spectrum)},
                {"local_ground_state", state_to_json(report.local_state)},
                {"glued_ground_state", state_to_json(report.glued_state)},
                {"local_schmidt_rank", report.local_rank},
                {"glued_schmidt_rank", report.glued_rank},
                {"commutator_scalar", scalar_to_json(report.commutator)},
                {"shift_is_local", report.shift_is_local}};
}

json run_catalog() {
    json entries = json::array();
    for (const CatalogEntry& e : example_catalog())
        entries.push_back(json{{"name", e.name},
                               {"detail", e.detail},
                               {"degrees", long_list(e.degrees)},
                               {"type", size_list(e.type)},
                               {"reducible", e.reducible},
                               {"expected_reducible", e.expected_reducible},
                               {"pass", e.pass}});
    return json{{"schema", "1"}, {"command", "catalog"}, {"entries", std::move(entries)}};
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"entanglement geometry toolkit"};
    app.require_subcommand(1);

    FiltrationArgs fa;
    auto* filtration = app.add_subcommand("filtration", "rank filtration invariants");
    filtration->add_option("--da", fa.d_a, "row dimension")->required();
    filtration->add_option("--db", fa.d_b, "column dimension")->required();
    filtration->add_option("--tmax", fa.t_max, "also emit series values up to t");

    SplittingArgs sa;
    auto* splitting = app.add_subcommand("splitting", "sumset decomposition of a splitting type");
    splitting->add_option("--degrees", sa.degrees, "comma-separated degree list")->required();
    splitting->add_option("--type", sa.type, "comma-separated factor dimensions")->required();

    MonodromyArgs ma;
    auto* monodromy = app.add_subcommand("monodromy", "loop monodromy of a symbol model");
    monodromy->add_option("--m", ma.m, "symbol level");
    monodromy->add_option("--type", ma.type, "factor dimensions, product must equal m");
    monodromy->add_option("--loop", ma.loop, "u or v")->required();
    monodromy->add_option("--u-branch", ma.u_branch, "root-of-unity branch for u");
    monodromy->add_option("--v-branch", ma.v_branch, "root-of-unity branch for v");
    monodromy->add_flag("--tensor", ma.tensor, "use the tensor-of-two-symbols model");
    monodromy->add_option("--p", ma.p, "prime level of the tensor model");
    monodromy->add_option("--a-branch", ma.a_branch, "constant branch on the u leg");
    monodromy->add_option("--b-branch", ma.b_branch, "constant branch on the v leg");
    monodromy->add_option("--cut", ma.cut, "1-based side-A factors for the witness cut");

    ObstructionArgs oa;
    auto* obstruction = app.add_subcommand("obstruction", "torsion and degree obstructions");
    obstruction->add_option("--period", oa.period, "declared period of the class");
    obstruction->add_option("--generic-symbol", oa.generic_symbol, "generic symbol of this level");
    obstruction->add_option("--tensor-symbol", oa.tensor_symbol,
                            "tensor of two symbols of this prime level");
    obstruction->add_option("--type", oa.type, "comma-separated factor dimensions");
    obstruction->add_option("--curve-degree", oa.curve_degree, "curve class degree");
    obstruction->add_option("--moduli-rank", oa.moduli_rank, "schmidt rank of the moduli component");
    obstruction->add_option("--moduli-degree", oa.moduli_degree, "degree on the moduli component");

    SpinChainArgs sca;
    auto* spinchain = app.add_subcommand("spinchain", "glued one-magnon toy chain report");
    spinchain->add_option("--J", sca.hopping, "hopping amplitude");
    spinchain->add_option("--Delta", sca.penalty, "diagonal penalty");
    spinchain->add_option("--branch", sca.branch, "fourth-root branch of the twist");

    app.add_subcommand("catalog", "worked reducible/irreducible scenarios");

    RunResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        oa.curve_set = obstruction->count("--curve-degree") > 0;
        oa.moduli_set =
            obstruction->count("--moduli-rank") > 0 || obstruction->count("--moduli-degree") > 0;
        if (oa.moduli_set && obstruction->count("--moduli-rank") == 0)
            throw CLI::ValidationError("obstruction", "--moduli-degree needs --moduli-rank");

        if (filtration->parsed()) result.output = run_filtration(fa);
        else if (splitting->parsed()) result.output = run_splitting(sa);
        else if (monodromy->parsed()) result.output = run_monodromy(ma);
        else if (obstruction->parsed()) result.output = run_obstruction(oa);
        else if (spinchain->parsed()) result.output = run_spinchain(sca);
        else result.output = run_catalog();
        note("command completed");
    } catch (const CLI::CallForHelp&) {
        result.exit_code = 0;
        result.help_text = app.help();
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.help_text = std::string(e.what()) + "\n\n" + app.help();
    } catch (const std::invalid_argument& e) {
        result.exit_code = 1;
        result.output = json{{"schema", "1"}, {"error", e.what()}};
    } catch (const std::logic_error& e) {
        result.exit_code = 1;
        result.output = json{{"schema", "1"}, {"error", e.what()}};
    }
    return result;
}

std::string render(const nlohmann::json& output, const std::string& format) {
    if (format == "json") return output.dump(2) + "\n";
    if (format != "table") throw std::invalid_argument("format must be json or table");
    std::ostringstream out;
    for (auto it = output.begin(); it != output.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            out << it.key() << ":\n";
            for (const auto& row : it.value()) {
                out << "  -";
                for (auto rit = row.begin(); rit != row.end(); ++rit)
                    out << " " << rit.key() << "=" << rit.value().dump();
                out << "\n";
            }
        } else {
            out << it.key() << ": " << it.value().dump() << "\n";
        }
    }
    return out.str();
}

int run_corpus(const std::string& path, std::ostream& log) {
    std::ifstream in(path);
    if (!in) {
        log << "cannot open corpus file: " << path << "\n";
        return 1;
    }
    json corpus = json::parse(in);
    int failures = 0;
    for (const auto& entry : corpus.at("cases")) {
        std::string name = entry.at("name").get<std::string>();
        std::vector<std::string> args;
        for (const auto& a : entry.at("args")) args.push_back(a.get<std::string>());
        RunResult result = run_command(args);
        const json& expect = entry.at("expect");
        if (result.exit_code == 0 && result.output == expect) {
            log << "[PASS] " << name << "\n";
        } else {
            ++failures;
            log << "[FAIL] " << name << "\n";
            log << "  expected: " << expect.dump() << "\n";
            log << "  actual (exit " << result.exit_code << "): " << result.output.dump() << "\n";
        }
    }
    return failures;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    std::string format = "json";
    std::string corpus_path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format" && i + 1 < args.size()) {
            format = args[++i];
        } else if (args[i] == "--corpus" && i + 1 < args.size()) {
            corpus_path = args[++i];
        } else {
            rest.push_back(args[i]);
        }
    }
    if (format != "json" && format != "table") {
        std::cerr << "--format must be json or table\n";
        return 2;
    }

    if (!corpus_path.empty()) {
        int failures = run_corpus(corpus_path, std::cout);
        return failures == 0 ? 0 : 1;
    }
    if (rest.empty()) {
        std::cerr << run_command({"--help"}).help_text;
        return 2;
    }

    RunResult result = run_command(rest);
    if (!result.help_text.empty()) {
        (result.exit_code == 0 ? std::cout : std::cerr) << result.help_text << "\n";
        return result.exit_code;
    }
    if (result.exit_code == 0) {
        std::cout << render(result.output, format);
    } else {
        std::cerr << result.output.dump(2) << "\n";
    }
    return result.exit_code;
}

}  // namespace entgeo::cli
