// uqso: exact computations with the nonstandard q-deformed algebra
// U'_q(so_n).
//
// Subcommands construct representations, normal-order words, and run the
// verification suites; all output is canonical JSON (or a short text form
// with --output text). Exit codes: 0 pass, 1 verification failure, 2 usage
// error, 3 internal budget/guard.

#include <uqso/json_io.hpp>
#include <uqso/uqso.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace uqso;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RepSpec {
    std::string family;
    std::string l = "0";
    int size = 1;
    std::string r = "0", s = "0";
    std::string eps = "+1,+1,+1";
};

std::vector<int> parse_eps(const std::string& text, size_t need) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError("empty sign in eps list");
        if (cur == "+1" || cur == "1" || cur == "+")
            out.push_back(1);
        else if (cur == "-1" || cur == "-")
            out.push_back(-1);
        else
            throw ParseError("eps entries must be +1 or -1, got '" + cur + "'");
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    if (out.size() < need)
        throw ParseError("expected " + std::to_string(need) + " eps entries");
    return out;
}

Representation build_rep(const RepSpec& spec, const DeformationParameter& d) {
    if (spec.family == "so3-classical") return classical_so3(HalfInt::parse(spec.l), d);
    if (spec.family == "so3-nonclassical") {
        auto e = parse_eps(spec.eps, 2);
        return nonclassical_so3(spec.size, e[0], e[1], d);
    }
    if (spec.family == "so4-classical")
        return classical_so4(HalfInt::parse(spec.r), HalfInt::parse(spec.s), d);
    if (spec.family == "so4-nonclassical") {
        auto e = parse_eps(spec.eps, 3);
        return nonclassical_so4(HalfInt::parse(spec.r), HalfInt::parse(spec.s), e[0], e[1], e[2],
                                d);
    }
    throw ParseError("unknown representation family '" + spec.family + "'");
}

void emit(const json& j, const std::string& mode) {
    if (mode == "text")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the q-deformed algebra U'_q(so_n)"};
    app.require_subcommand(1);

    std::string p_text = "2";
    std::string output = "json";
    long long seed = 1;
    app.add_option("--p", p_text, "deformation parameter p = q^{1/2}, as a rational a/b")
        ->capture_default_str();
    app.add_option("--output", output, "output mode: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--json", [&output](std::int64_t) { output = "json"; },
                 "force JSON output (default)");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    RepSpec spec;
    auto add_rep_options = [&spec](CLI::App* cmd) {
        cmd->add_option("--rep", spec.family,
                        "family: so3-classical | so3-nonclassical | so4-classical | "
                        "so4-nonclassical")
            ->required();
        cmd->add_option("--l", spec.l, "highest weight l (so3-classical)");
        cmd->add_option("--size", spec.size, "dimension (so3-nonclassical)");
        cmd->add_option("--r", spec.r, "first highest-weight entry (so4)");
        cmd->add_option("--s", spec.s, "second highest-weight entry (so4)");
        cmd->add_option("--eps", spec.eps, "sign parameters, e.g. +1,-1,+1");
    };

    std::string expr;
    int word_n = 3;
    CLI::App* cmd_normalize =
        app.add_subcommand("normalize", "normal-order a word expression into the PBW basis");
    cmd_normalize->add_option("expr", expr, "expression, e.g. 'I32 * I21'")->required();
    cmd_normalize->add_option("--n", word_n, "algebra rank n")->capture_default_str();

    CLI::App* cmd_rep = app.add_subcommand("rep", "construct a representation and print it");
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check every defining relation exactly");
    CLI::App* cmd_diagram = app.add_subcommand("diagram", "weight diagram");
    CLI::App* cmd_ladder =
        app.add_subcommand("ladder", "shift containment and ladder commutation report");
    CLI::App* cmd_branch = app.add_subcommand("branch", "decompose so4 under the so3 chain");
    CLI::App* cmd_classify = app.add_subcommand("classify", "classification label (m) or (m, g)");
    for (CLI::App* cmd : {cmd_rep, cmd_verify, cmd_diagram, cmd_ladder, cmd_branch, cmd_classify})
        add_rep_options(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (const char* env = std::getenv("UQSO_STEP_BUDGET")) {
        try {
            set_step_budget(std::stoll(env));
        } catch (const std::exception&) {
            std::cerr << "invalid UQSO_STEP_BUDGET\n";
            return kExitUsage;
        }
    }

    try {
        DeformationParameter d = DeformationParameter::parse(p_text);

        if (cmd_normalize->parsed()) {
            AlgebraElement x = parse_word_expression(expr, word_n, d);
            emit(json{{"n", word_n}, {"p", d.p().get_str()}, {"normal_form", to_json(x)}}, output);
            return kExitPass;
        }

        Representation rep = build_rep(spec, d);

        if (cmd_rep->parsed()) {
            emit(to_json(rep), output);
            return kExitPass;
        }
        if (cmd_verify->parsed()) {
            RelationReport report = verify_defining_relations(rep);
            emit(to_json(report), output);
            return report.all_pass ? kExitPass : kExitCheckFailed;
        }
        if (cmd_diagram->parsed()) {
            emit(to_json(weight_decomposition(rep)), output);
            return kExitPass;
        }
        if (cmd_ladder->parsed()) {
            WeightDiagram dg = weight_decomposition(rep);
            LadderReport report = verify_ladder_commutation(rep, dg);
            bool shifts_ok = true;
            json shifts = json::array();
            const int k = diagonal_family_size(rep.n());
            for (const auto& [w, e] : dg.entries)
                for (int i = 1; i <= k; ++i)
                    for (auto kind : {LadderKind::Raising, LadderKind::Lowering}) {
                        ShiftReport sr = ladder_shift_check(rep, dg, w, i, kind);
                        shifts_ok = shifts_ok && sr.contained;
                        json js = to_json(sr);
                        js["i"] = i;
                        js["kind"] = kind == LadderKind::Raising ? "raising" : "lowering";
                        shifts.push_back(js);
                    }
            json out{{"shift_checks", shifts},
                     {"commutation", to_json(report)},
                     {"highest_weight", to_json(unique_highest_weight(rep, dg))}};
            emit(out, output);
            return (report.all_pass && shifts_ok) ? kExitPass : kExitCheckFailed;
        }
        if (cmd_branch->parsed()) {
            BranchingResult br = branch_so4_to_so3(rep);
            emit(to_json(br), output);
            return kExitPass;
        }
        if (cmd_classify->parsed()) {
            ClassLabel lab = classify_representation(rep);
            emit(to_json(lab), output);
            return kExitPass;
        }
        return kExitUsage;
    } catch (const NonTerminating& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSubset& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
