/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/condorder.hh>
#include <revex/error.hh>
#include <revex/extremal.hh>
#include <revex/formula.hh>
#include <revex/gallery.hh>
#include <revex/io.hh>
#include <revex/morphism.hh>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace revex;

namespace
{
    const std::string version = "0.1.0";

    enum ExitCode
    {
        exit_true = 0,
        exit_false = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    auto sha256(const std::string & text) -> std::string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (! EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr))
            throw Error("SHA-256 computation failed");
        static const char hex[] = "0123456789abcdef";
        std::string result;
        for (unsigned int i = 0 ; i < length ; ++i) {
            result.push_back(hex[digest[i] >> 4]);
            result.push_back(hex[digest[i] & 15]);
        }
        return result;
    }

    /// Everything a subcommand needs to produce its report.
    struct Run
    {
        std::string command;
        Json arguments = Json::object();
        Json inputs = Json::object();
        Json seed = nullptr;
        Json results = Json::object();
        std::string out;

        Run(std::string c, std::string o) :
            command(std::move(c)),
            out(std::move(o))
        {
        }

        auto structure(const std::string & label, const std::string & path, const Signature * fallback = nullptr) -> Structure
        {
            auto s = structure_from_json(read_json_file(path), fallback);
            inputs[label] = sha256(canonical_text(structure_to_json(s)));
            return s;
        }

        auto spec(const std::string & label, const std::string & path) -> ClassSpec
        {
            auto c = read_spec_file(path);
            inputs[label] = sha256(canonical_text(spec_to_json(c)));
            return c;
        }

        auto emit() const -> void
        {
            Json report;
            report["tool"] = "revex";
            report["version"] = version;
            report["command"] = command;
            report["arguments"] = arguments;
            report["inputs"] = inputs;
            report["seed"] = seed;
            report["results"] = results;
            auto text = canonical_text(report);
            if (out.empty())
                std::cout << text;
            else
                write_text_file(out, text);
        }
    };

    auto parse_mode(const std::string & mode) -> SearchMode
    {
        if (mode == "local")
            return SearchMode::local;
        if (mode == "exact")
            return SearchMode::exact;
        throw CLI::ValidationError("--mode", "expected local or exact");
    }

    auto report_json(const ExtremeReport & r) -> Json
    {
        Json j;
        j["verdict"] = to_string(r.verdict);
        j["guarantee"] = r.guarantee;
        j["witness"] = r.witness ? structure_to_json(*r.witness) : Json(nullptr);
        return j;
    }

    /// Local mode asks only for local extremality, so a locally extreme verdict answers it.
    auto satisfied(const ExtremeReport & r, SearchMode mode) -> std::optional<bool>
    {
        switch (r.verdict) {
            case Verdict::certified: return true;
            case Verdict::refuted: return false;
            case Verdict::locally_extreme: return mode == SearchMode::local;
            case Verdict::inconclusive: return std::nullopt;
        }
        return std::nullopt;
    }

    struct Options
    {
        std::string in, class_file, out, mode = "exact", dir, result_file, dot;
        std::string gallery_check, formula_action, formula_text;
        int n = 0, m = 0, k = 0, l = 0, cap = gallery::default_henson_cap, samples = 256;
        std::vector<int> sizes, subset_sizes, valuation;
        bool max = false, min = false, up_to_iso = false, verify = false;
        unsigned workers = 1;
        std::optional<std::uint64_t> seed, budget;
        std::vector<int> signature{ 2 };
    };

    auto budget_of(const Options & o) -> std::uint64_t
    {
        return o.budget.value_or(configured_budget());
    }

    auto cmd_check(const Options & o) -> int
    {
        Run run("check", o.out);
        auto spec = run.spec("class", o.class_file);
        auto s = run.structure("structure", o.in, &spec.signature);
        auto mode = parse_mode(o.mode);
        run.arguments = { { "max", o.max }, { "min", o.min }, { "mode", o.mode } };

        CompiledSpec compiled(spec, s.domain());
        bool is_member = compiled.member(s);
        bool all_true = is_member;
        bool inconclusive = false;
        run.results["member"] = is_member;
        run.results["violations"] = compiled.violations(s);

        for (auto [flag, direction] : { std::pair{ o.max, Extreme::maximal }, std::pair{ o.min, Extreme::minimal } }) {
            if (! flag)
                continue;
            auto key = to_string(direction);
            if (! is_member) {
                run.results[key] = nullptr;
                continue;
            }
            auto r = is_extreme(s, spec, direction, mode, budget_of(o));
            run.results[key] = report_json(r);
            auto ok = satisfied(r, mode);
            if (! ok)
                inconclusive = true;
            else
                all_true = all_true && *ok;
        }

        if (s.domain() <= default_orbit_cap) {
            run.results["reversible"] = is_reversible(s);
            run.results["strongly_reversible"] = is_strongly_reversible(s);
            run.results["weakly_reversible"] = is_weakly_reversible(s);
        }
        else {
            run.results["reversible"] = nullptr;
            run.results["strongly_reversible"] = is_strongly_reversible(s);
            run.results["weakly_reversible"] = nullptr;
        }

        run.emit();
        if (! all_true)
            return exit_false;
        return inconclusive ? exit_budget : exit_true;
    }

    auto cmd_saturate(const Options & o) -> int
    {
        Run run("saturate", o.out);
        auto spec = run.spec("class", o.class_file);
        auto s = run.structure("structure", o.in, &spec.signature);
        if (o.dir != "up" && o.dir != "down")
            throw CLI::ValidationError("--dir", "expected up or down");
        auto direction = o.dir == "up" ? Extreme::maximal : Extreme::minimal;
        run.arguments = { { "dir", o.dir } };
        if (o.seed)
            run.seed = *o.seed;

        if (! member(s, spec)) {
            run.results["member"] = false;
            run.emit();
            return exit_false;
        }
        auto result = saturate(s, spec, direction, o.seed);
        run.results["member"] = true;
        run.results["structure"] = structure_to_json(result);
        run.emit();
        if (! o.result_file.empty())
            write_text_file(o.result_file, canonical_text(structure_to_json(result)));
        return exit_true;
    }

    auto cmd_census(const Options & o) -> int
    {
        Run run("census", o.out);
        auto spec = run.spec("class", o.class_file);
        if (o.max && o.min)
            throw CLI::ValidationError("--max/--min", "choose at most one");

        CensusOptions options;
        options.what = o.max ? CensusWhat::maximal : o.min ? CensusWhat::minimal : CensusWhat::all;
        options.up_to_iso = o.up_to_iso;
        options.workers = o.workers;
        options.budget = budget_of(o);
        run.arguments = { { "n", o.n }, { "max", o.max }, { "min", o.min }, { "up_to_iso", o.up_to_iso } };

        auto found = census(o.n, spec, options);
        Json list = Json::array();
        for (auto & s : found)
            list.push_back(structure_to_json(s));
        run.results["count"] = found.size();
        run.results["structures"] = list;
        run.emit();
        return exit_true;
    }

    auto cmd_condorder(const Options & o) -> int
    {
        Run run("condorder", o.out);
        CondOrderOptions options;
        options.workers = o.workers;
        options.seed = o.seed.value_or(0);
        options.samples = o.samples;
        run.arguments = { { "n", o.n }, { "signature", o.signature }, { "samples", o.samples }, { "verify", o.verify } };
        run.seed = options.seed;

        auto census = cond_census(o.n, Signature(o.signature), options);
        run.results["census"] = Json::parse(cond_census_to_json_text(census));
        bool ok = true;
        if (o.verify) {
            bool convex = verify_convexity(census);
            bool antichain = verify_antichain(census);
            run.results["convexity"] = convex;
            run.results["antichain"] = antichain;
            ok = convex && antichain;
        }
        run.emit();
        if (! o.dot.empty())
            write_text_file(o.dot, cond_census_to_dot(census));
        return ok ? exit_true : exit_false;
    }

    auto cmd_gallery(const Options & o) -> int
    {
        Run run("gallery", o.out);
        auto binary = Signature::binary();
        auto g = run.structure("structure", o.in, &binary);
        auto & name = o.gallery_check;
        run.arguments = { { "check", name }, { "n", o.n }, { "m", o.m } };
        std::optional<bool> verdict;

        if (name == "maximal-knfree")
            verdict = gallery::is_maximal_knfree(g, o.n);
        else if (name == "kn1")
            verdict = gallery::every_vertex_in_kn1(g, o.n);
        else if (name == "blowup") {
            run.arguments["sizes"] = o.sizes;
            auto b = gallery::blowup(g, o.sizes);
            run.results["structure"] = structure_to_json(b);
            if (o.n >= 3) {
                auto keeps = gallery::blowup_preserves_maximality(g, o.sizes, o.n);
                run.results["maximal_knfree"] = keeps ? Json(*keeps) : Json(nullptr);
                if (keeps)
                    verdict = *keeps;
            }
        }
        else if (name == "duality") {
            auto d = gallery::knfree_duality(g, o.n);
            run.results["maximal_knfree"] = d.maximal_knfree;
            run.results["complement_minimal_enfree"] = d.complement_minimal_enfree;
            verdict = d.agree();
        }
        else if (name == "min-omit-empty")
            verdict = gallery::min_omit_empty_check(g, o.m);
        else if (name == "max-omit-full")
            verdict = gallery::max_omit_full_check(g, o.m);
        else if (name == "decompose") {
            auto d = gallery::decompose_min_binary(g, o.m);
            run.results["loops"] = d.loops;
            run.results["rest"] = d.rest;
            run.results["orientation"] = structure_to_json(d.orientation);
            run.results["sparse_graph"] = structure_to_json(d.sparse_graph);
            verdict = true;
        }
        else if (name == "henson") {
            run.arguments["cap"] = o.cap;
            Json list = Json::array();
            auto defects = gallery::henson_defects(g, o.n, o.cap);
            for (auto & d : defects)
                list.push_back(Json{ { "H", d.h }, { "K", d.k } });
            run.results["defects"] = list;
            verdict = defects.empty();
        }
        else if (name == "deg2") {
            auto c = gallery::classify_max_deg2(g);
            if (c.decomposition) {
                static const char * tails[] = { "none", "K1", "K2" };
                run.results["cycles"] = c.decomposition->cycles;
                run.results["tail"] = tails[int(c.decomposition->tail)];
            }
            verdict = c.maximal;
        }
        else if (name == "spanning-tree") {
            run.results["structure"] = structure_to_json(gallery::spanning_tree(g));
            verdict = true;
        }
        else if (name == "minimal-connected")
            verdict = gallery::is_minimal_connected(g);
        else if (name == "local-bounds") {
            run.arguments["subset_sizes"] = o.subset_sizes;
            run.arguments["k"] = o.k;
            run.arguments["l"] = o.l;
            verdict = gallery::local_bounds_member(g, o.subset_sizes, o.k, o.l);
        }
        else
            throw CLI::ValidationError("gallery", "unknown check '" + name + "'");

        run.results["verdict"] = verdict ? Json(*verdict) : Json(nullptr);
        run.emit();
        return verdict.value_or(true) ? exit_true : exit_false;
    }

    auto classification_json(const SyntacticClass & c) -> Json
    {
        return Json{ { "P", c.positive }, { "N", c.negative }, { "F", c.f }, { "G", c.g },
            { "neg_F", c.neg_f }, { "neg_G", c.neg_g } };
    }

    auto cmd_formula(const Options & o) -> int
    {
        Run run("formula", o.out);
        auto f = parse_formula(o.formula_text);
        run.arguments = { { "action", o.formula_action }, { "formula", to_string(f) } };
        auto & action = o.formula_action;

        if (action == "parse")
            run.results["formula"] = to_string(f);
        else if (action == "classify")
            run.results["class"] = classification_json(classify(f));
        else if (action == "neg")
            run.results["formula"] = to_string(transform_neg(f));
        else if (action == "dual")
            run.results["formula"] = to_string(transform_c(f));
        else if (action == "eval") {
            if (o.in.empty())
                throw CLI::ValidationError("--in", "eval needs a structure");
            auto binary = Signature::binary();
            auto s = run.structure("structure", o.in, &binary);
            run.arguments["valuation"] = o.valuation;
            bool value = evaluate(f, s, o.valuation);
            run.results["value"] = value;
            run.emit();
            return value ? exit_true : exit_false;
        }
        else
            throw CLI::ValidationError("formula", "unknown action '" + action + "'");

        run.emit();
        return exit_true;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "Reversibility and extremal structures on finite domains" };
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    Options o;

    auto add_common = [&] (CLI::App * sub) {
        sub->add_option("--out", o.out, "Write the report here instead of standard output");
        sub->add_option("--budget", o.budget, "Search budget (defaults to EXTREMAL_BUDGET or 2^24)");
    };

    auto check = app.add_subcommand("check", "Membership, extremality and reversibility of a structure");
    check->add_option("--in", o.in, "Structure file")->required();
    check->add_option("--class", o.class_file, "Class specification file")->required();
    check->add_flag("--max", o.max, "Decide maximality");
    check->add_flag("--min", o.min, "Decide minimality");
    check->add_option("--mode", o.mode, "local or exact");
    add_common(check);

    auto sat = app.add_subcommand("saturate", "Extend or shrink a member to an extreme member");
    sat->add_option("--in", o.in, "Structure file")->required();
    sat->add_option("--class", o.class_file, "Class specification file")->required();
    sat->add_option("--dir", o.dir, "up or down")->required();
    sat->add_option("--seed", o.seed, "Shuffle the move order");
    sat->add_option("--result", o.result_file, "Also write the bare resulting structure here");
    sat->add_option("--workers", o.workers, "Accepted for uniformity; saturation runs on one thread");
    add_common(sat);

    auto cen = app.add_subcommand("census", "All (maximal, minimal) members on n points");
    cen->add_option("--n", o.n, "Domain size")->required();
    cen->add_option("--class", o.class_file, "Class specification file")->required();
    cen->add_flag("--max", o.max, "Only maximal members");
    cen->add_flag("--min", o.min, "Only minimal members");
    cen->add_flag("--up-to-iso", o.up_to_iso, "One representative per isomorphism class");
    cen->add_option("--workers", o.workers, "Worker threads");
    add_common(cen);

    auto gal = app.add_subcommand("gallery", "Dedicated checkers for specific extremal classes");
    gal->add_option("check", o.gallery_check, "maximal-knfree, kn1, blowup, duality, min-omit-empty, max-omit-full, "
            "decompose, henson, deg2, spanning-tree, minimal-connected or local-bounds")->required();
    gal->add_option("--in", o.in, "Structure file")->required();
    gal->add_option("--n", o.n, "Clique size");
    gal->add_option("--m", o.m, "Omitted set size");
    gal->add_option("--sizes", o.sizes, "Cloud sizes for blowup")->delimiter(',');
    gal->add_option("--cap", o.cap, "Largest H for Henson defects");
    gal->add_option("--subset-sizes", o.subset_sizes, "Subset sizes for local bounds")->delimiter(',');
    gal->add_option("--k", o.k, "Lower tuple bound");
    gal->add_option("--l", o.l, "Upper tuple bound");
    add_common(gal);

    auto cond = app.add_subcommand("condorder", "Condensation order census on a small domain");
    cond->add_option("--n", o.n, "Domain size")->required();
    cond->add_option("--signature", o.signature, "Arities")->delimiter(',');
    cond->add_option("--workers", o.workers, "Worker threads");
    cond->add_option("--seed", o.seed, "Seed for sampled censuses");
    cond->add_option("--samples", o.samples, "Samples for sampled censuses");
    cond->add_flag("--verify", o.verify, "Check convexity and antichain identities");
    cond->add_option("--dot", o.dot, "Write the Hasse diagram here");
    add_common(cond);

    auto form = app.add_subcommand("formula", "Parse, classify, evaluate or transform a formula");
    form->add_option("action", o.formula_action, "parse, classify, eval, neg or dual")->required();
    form->add_option("text", o.formula_text, "The formula")->required();
    form->add_option("--in", o.in, "Structure file for eval");
    form->add_option("--valuation", o.valuation, "Values of v0, v1, ...")->delimiter(',');
    add_common(form);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_true : exit_usage;
    }

    auto start = std::chrono::steady_clock::now();
    int code = exit_usage;
    try {
        if (check->parsed())
            code = cmd_check(o);
        else if (sat->parsed())
            code = cmd_saturate(o);
        else if (cen->parsed())
            code = cmd_census(o);
        else if (gal->parsed())
            code = cmd_gallery(o);
        else if (cond->parsed())
            code = cmd_condorder(o);
        else if (form->parsed())
            code = cmd_formula(o);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "revex: budget exceeded: " << e.what() << std::endl;
        return exit_budget;
    }
    catch (const CLI::Error & e) {
        std::cerr << "revex: " << e.what() << std::endl;
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "revex: " << e.what() << std::endl;
        return exit_usage;
    }

    if (std::getenv("REVEX_TIMING")) {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "revex: " << elapsed << " s" << std::endl;
    }
    return code;
}
