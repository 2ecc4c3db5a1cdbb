#include "crossact/cli.hpp"

#include "crossact/braided.hpp"
#include "crossact/cocycles.hpp"
#include "crossact/crossed_action.hpp"
#include "crossact/equivariant.hpp"
#include "crossact/errors.hpp"
#include "crossact/hopf.hpp"
#include "crossact/matched_pair.hpp"
#include "crossact/ybe.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace crossact {

namespace {

struct Job {
    std::string command;
    std::string input;
    std::string out;
    unsigned long seed = 0;
    long budget = 1000000;
    bool json = false;
};

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Write to a sibling temporary and rename, so a reader never sees a partial file.
void write_artifact(const std::string& path, const nlohmann::json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream o(tmp);
        if (!o) throw ParseError("cannot write " + path);
        o << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

// The bundle sections a command needs, parsed on demand.
class Bundle {
public:
    explicit Bundle(nlohmann::json j) : j_(std::move(j)) {
        if (!j_.is_object()) throw ParseError("bundle must be a JSON object");
    }

    bool has(const char* key) const { return j_.contains(key); }
    const nlohmann::json& at(const char* key) const { return j_.at(key); }

    MatchedPair pair() const {
        if (j_.contains("matched_pair")) return pair_from_json(j_.at("matched_pair"));
        if (j_.contains("gcrossed") || j_.contains("factorization") || j_.contains("G")) return pair_from_json(j_);
        throw ParseError("bundle has no matched_pair section");
    }
    CocyclePair cocycles(const MatchedPair& mp) const {
        return j_.contains("cocycles") ? cocycles_from_json(mp, j_.at("cocycles")) : trivial_cocycles(mp);
    }
    int conductor() const { return j_.contains("search") ? j_.at("search").value("N", 2) : 2; }
    std::vector<int> exponents() const {
        if (j_.contains("search") && j_.at("search").contains("exponents"))
            return j_.at("search").at("exponents").get<std::vector<int>>();
        std::vector<int> e(conductor());
        std::iota(e.begin(), e.end(), 0);
        return e;
    }

private:
    nlohmann::json j_;
};

int emit(const Job& job, const Report& rep, std::ostream& out) {
    if (job.json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.all_pass() ? kPass : kVerifyFailed;
}

void emit_artifact(const Job& job, const nlohmann::json& j, std::ostream& out) {
    if (job.out.empty())
        out << j.dump(2) << "\n";
    else
        write_artifact(job.out, j);
}

Report validate_report(const Bundle& b) {
    Report rep;
    MatchedPair mp;
    try {
        mp = b.pair();
        rep.add("matched pair", true);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        rep.add("matched pair", false, e.what());
        return rep;
    }
    CocyclePair cp;
    try {
        cp = b.cocycles(mp);
        rep.add("cocycle pair", true);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        rep.add("cocycle pair", false, e.what());
        return rep;
    }
    rep.append(cocycle_conditions(cp), "cocycles: ");
    rep.append(verify_crossed_action(CrossedAction(cp)), "crossed action: ");
    return rep;
}

Report ybe_report(const MatchedPair& mp) {
    Report rep;
    CheckBuilder bij("braiding pairs: b bijective"), q("braiding pairs: QYBE");
    auto pairs = enumerate_braiding_pairs(mp);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        bij.expect(b_map(pairs[k]).is_bijective(), "pair " + std::to_string(k));
        q.expect(verify_qybe(r_map(pairs[k])).all_pass(), "pair " + std::to_string(k));
    }
    bij.into(rep);
    q.into(rep);
    return rep;
}

Report braiding_report(const CrossedAction& ca, const Bundle& b, unsigned long seed, bool with_rmatrix) {
    Report rep;
    BraidingData bd = braiding_data_from_json(ca, b.at("braiding"));
    rep.append(scalar_braiding_check(ca, bd.bp, bd.c), "braiding: ");
    if (!rep.all_pass()) return rep;
    rep.append(verify_braiding(ca, bd, default_object_sample(ca, seed)), "braiding: ");
    if (with_rmatrix) {
        HopfAlgebra H = with_antipode(build_bicrossed(ca.mp(), ca.cp()));
        rep.append(verify_quasitriangular(H, rmatrix_from_braiding(H, braid_on_regular(ca, H, bd))), "R-matrix: ");
    }
    return rep;
}

// Regular modules above this dimension are skipped by the K checks of `report`.
constexpr int kRegularLimit = 36;

Report full_report(const Bundle& b, unsigned long seed) {
    Report rep = validate_report(b);
    if (!rep.all_pass()) return rep;
    MatchedPair mp = b.pair();
    CrossedAction ca(b.cocycles(mp));
    HopfAlgebra H = build_bicrossed(mp, ca.cp());
    rep.append(verify_hopf(H), "hopf: ");
    rep.append(hopf_monad_check(ca), "monad: ");
    if (H.dim <= kRegularLimit) {
        HModule R = module_regular(H), T = module_trivial(H);
        EquivariantObject KR = K_functor(ca, H, R), KT = K_functor(ca, H, T);
        auto same = [](const EquivariantObject& x, const EquivariantObject& y) { return x.X == y.X && x.r == y.r; };
        rep.add("K strictly monoidal", same(K_functor(ca, H, module_tensor(H, R, R)), equivariant_tensor(ca, KR, KR)) &&
                                           same(K_functor(ca, H, module_tensor(H, R, T)), equivariant_tensor(ca, KR, KT)));
        rep.add("K round trip", K_inverse(ca, H, KR).action == R.action && same(K_functor(ca, H, K_inverse(ca, H, KR)), KR));
    }
    rep.append(ybe_report(mp));
    if (b.has("braiding")) rep.append(braiding_report(ca, b, seed, H.dim <= kRegularLimit));
    return rep;
}

int dispatch(const Job& job, std::ostream& out) {
    const std::string& c = job.command;
    if (c == "verify-hopf") {
        HopfAlgebra H = hopf_from_json(read_json(job.input));
        return emit(job, verify_hopf(H), out);
    }
    Bundle b(read_json(job.input));
    if (c == "validate") return emit(job, validate_report(b), out);
    if (c == "factorize") {
        if (!b.has("factorization")) throw ParseError("bundle has no factorization section");
        nlohmann::json f = nlohmann::json{{"factorization", b.at("factorization")}};
        MatchedPair mp = pair_from_json(f);
        PairAnalysis a = analyze(mp);
        nlohmann::json j = pair_to_json(mp);
        j["analysis"] = {{"lact_trivial", a.lact_trivial},
                         {"ract_trivial", a.ract_trivial},
                         {"lact_by_automorphisms", a.lact_by_automorphisms},
                         {"ract_by_automorphisms", a.ract_by_automorphisms}};
        emit_artifact(job, j, out);
        return kPass;
    }
    MatchedPair mp = b.pair();
    if (c == "enumerate-ybe") {
        nlohmann::json arr = nlohmann::json::array();
        bool ok = true;
        for (const auto& bp : enumerate_braiding_pairs(mp, job.budget)) {
            nlohmann::json j = braiding_pair_to_json(bp);
            bool pass = b_map(bp).is_bijective() && verify_qybe(r_map(bp)).all_pass();
            j["qybe"] = pass ? "pass" : "fail";
            ok &= pass;
            arr.push_back(j);
        }
        emit_artifact(job, arr, out);
        return ok ? kPass : kVerifyFailed;
    }
    if (c == "enumerate-cocycles") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& cp : enumerate_cocycle_pairs(mp, b.conductor(), b.exponents(), job.budget))
            arr.push_back(cocycles_to_json(cp));
        emit_artifact(job, arr, out);
        return kPass;
    }
    CrossedAction ca(b.cocycles(mp));
    if (c == "build-hopf") {
        HopfAlgebra H = build_bicrossed(mp, ca.cp());
        try {
            H = with_antipode(std::move(H));
        } catch (const Error&) {
            emit_artifact(job, hopf_to_json(H), out);
            return kVerifyFailed;
        }
        emit_artifact(job, hopf_to_json(H), out);
        return kPass;
    }
    if (c == "monad-check") return emit(job, hopf_monad_check(ca), out);
    if (c == "check-braiding") {
        if (!b.has("braiding")) throw ParseError("bundle has no braiding section");
        return emit(job, braiding_report(ca, b, job.seed, true), out);
    }
    if (c == "report") {
        Report rep = full_report(b, job.seed);
        if (!job.out.empty()) write_artifact(job.out, rep.to_json());
        return emit(job, rep, out);
    }
    throw ParseError("unknown command " + c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matched pairs, bicrossed Hopf algebras, crossed actions and braidings"};
    app.require_subcommand(1);
    app.fallthrough();
    Job job;
    app.add_option("--input", job.input, "input bundle (or Hopf export for verify-hopf)");
    app.add_option("--out", job.out, "output path for artifacts");
    app.add_option("--seed", job.seed, "seed for sampled objects")->default_val(0);
    app.add_option("--budget", job.budget, "search node budget")->default_val(1000000)->check(CLI::PositiveNumber);
    app.add_flag("--json", job.json, "machine-readable report");
    const std::vector<std::pair<const char*, const char*>> commands{
        {"validate", "matched pair, cocycle and crossed-action checks"},
        {"build-hopf", "emit the structure constants of the bicrossed product"},
        {"verify-hopf", "re-check an exported structure-constant file"},
        {"factorize", "matched pair from an exact factorization"},
        {"enumerate-ybe", "braiding pairs and their QYBE solutions"},
        {"enumerate-cocycles", "root-of-unity cocycle pairs"},
        {"check-braiding", "scalar braiding equations and the full braiding verification"},
        {"monad-check", "fusion operator bijectivity and T(1) triviality"},
        {"report", "every applicable check for one bundle"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kMalformed;
    }
    job.command = app.get_subcommands().front()->get_name();
    if (job.input.empty()) {
        err << "--input is required\n";
        return kMalformed;
    }
    try {
        return dispatch(job, out);
    } catch (const SearchBudgetExceeded& e) {
        err << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kMalformed;
    } catch (const nlohmann::json::exception& e) {
        err << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const SizeBound& e) {
        err << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << "\n";
        return kMalformed;
    }
}

}  // namespace crossact
