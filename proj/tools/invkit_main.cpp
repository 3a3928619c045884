#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "invkit/verify.hpp"

using namespace invkit;

namespace {

int g_exit = 0;

void write_json(const std::string& path, const Json& j) {
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

FieldDescriptor field_flag(const std::string& text) {
    try {
        return FieldDescriptor::parse(text);
    } catch (const DomainError& e) {
        // keep the characteristic-2 refusal specific
        throw;
    }
}

TupleFile load_tuples(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read " + path);
    Json j = Json::parse(in);
    return tuple_file_from_json(j);
}

void print_minimality(const MinimalityReport& rep) {
    std::cout << "case " << rep.case_name << " over " << rep.field_name << ":\n";
    for (const auto& e : rep.entries) {
        const char* status = e.status == WitnessStatus::Pass ? "pass"
                             : e.status == WitnessStatus::Fail ? "FAIL"
                                                               : "degenerate-in-characteristic";
        std::cout << "  d=" << e.d << "  " << e.f.str() << ": " << status << "  ("
                  << e.separator_u.str() << " vs " << e.separator_v.str() << ")";
        if (!e.note.empty())
            std::cout << "  [" << e.note << "]";
        std::cout << "\n";
    }
    std::cout << (rep.all_pass ? "all witnesses verified" : "FAILURES present") << "\n";
}

void print_lemma(const LemmaReport& rep) {
    std::cout << "part (" << rep.part << ") over " << rep.field_name << ": "
              << rep.instances.size() << " classes covering " << rep.scheduled_instances
              << " scheduled instances\n";
    for (const auto& i : rep.instances) {
        std::cout << "  " << (i.pass ? "pass" : "FAIL") << "  " << i.label << "  ["
                  << (i.decomposable ? "decomposable" : "indecomposable");
        if (i.covers > 1)
            std::cout << ", covers " << i.covers;
        std::cout << "]";
        if (!i.note.empty())
            std::cout << "  (" << i.note << ")";
        std::cout << "\n";
    }
}

void print_decomposition(const DecompositionReport& rep, bool certificate) {
    std::cout << rep.target_label << " over " << rep.field_name << ": "
              << (rep.decomposable ? "decomposable" : "indecomposable") << " (degree "
              << rep.degree << ", multidegree " << rep.mdeg.str() << ")\n";
    if (rep.decomposable && certificate) {
        for (const auto& term : rep.certificate) {
            std::cout << "  + (" << term.coeff.str() << ")";
            for (const auto& f : term.factors)
                std::cout << " * " << f.str();
            std::cout << "\n";
        }
    } else if (!rep.decomposable) {
        std::cout << "  span rank " << rep.residual.span_rank << " over "
                  << rep.residual.candidate_count << " candidate products, "
                  << rep.residual.rows_considered << " rows\n";
    }
}

void print_nilpotent(const NilpotentArgReport& rep) {
    std::cout << rep.target << " over " << rep.field_name << ":\n";
    for (const auto& s : rep.steps)
        std::cout << "  " << s.tuple_desc << "  " << s.action << " -> " << s.result << "\n";
    if (rep.residual)
        std::cout << "  residual: " << rep.residual->str() << "\n";
    if (rep.final_equation_normalized)
        std::cout << "  final equation: " << *rep.final_equation_normalized << "\n";
    if (rep.gamma_value)
        std::cout << "  gamma = " << rep.gamma_value->str() << "\n";
    if (!rep.derived_shape.empty()) {
        std::cout << "  derived ansatz shape:";
        for (const auto& s : rep.derived_shape)
            std::cout << " " << s;
        std::cout << (rep.shape_extras.empty() ? " (no extras)" : " (EXTRAS PRESENT)") << "\n";
    }
    std::cout << "  " << (rep.pass ? "pass" : "FAIL") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrix-invariant toolkit"};
    app.require_subcommand(1);

    std::string field_name = "Q";
    std::string json_path;
    std::string expr_text;
    std::string input_path;
    std::string case_name;
    std::string kind_name_flag = "symmetric";
    std::string part = "a";
    std::string target_name = "f1";
    std::string out_dir = ".";
    int n_flag = 3, d_flag = 3, tuple_index = 0;
    int max_word_len = 2, max_degree = 8;
    long budget = 10000;
    std::uint64_t seed = 20240801;
    long lo = -2, hi = 2;
    bool with_certificate = false;

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_name, "coefficient field: Q, F<p>, QiS2, F<p>iS2:<i>,<s>");
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_option("--json", json_path, "write the structured report to this path");
    };

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an invariant on a concrete tuple");
    eval_cmd->add_option("--expr", expr_text, "expression, e.g. \"tr(1 2 3)\"")->required();
    eval_cmd->add_option("--input", input_path, "tuple file (JSON)")->required();
    eval_cmd->add_option("--tuple", tuple_index, "tuple index inside the file");
    add_field(eval_cmd);
    eval_cmd->callback([&] {
        TupleFile f = load_tuples(input_path);
        if (tuple_index < 0 || tuple_index >= static_cast<int>(f.tuples.size()))
            throw DomainError("tuple index out of range");
        Scalar v = evaluate(InvariantExpr::parse(expr_text),
                            f.tuples[static_cast<std::size_t>(tuple_index)].mats);
        std::cout << v.str() << "\n";
    });

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "expand an invariant over generic matrices");
    expand_cmd->add_option("--expr", expr_text)->required();
    expand_cmd->add_option("--kind", kind_name_flag, "general | symmetric | skew");
    expand_cmd->add_option("--n", n_flag);
    expand_cmd->add_option("--d", d_flag);
    add_field(expand_cmd);
    add_json(expand_cmd);
    expand_cmd->callback([&] {
        Polynomial p = expand(InvariantExpr::parse(expr_text), kind_from_name(kind_name_flag),
                              n_flag, d_flag, field_flag(field_name));
        std::cout << p.str() << "\n";
        if (!json_path.empty()) {
            Json j;
            j["expr"] = expr_text;
            j["field"] = field_name;
            j["terms"] = polynomial_to_json(p);
            write_json(json_path, j);
        }
    });

    // separate
    auto* sep_cmd = app.add_subcommand("separate", "test whether a standard set separates two tuples");
    sep_cmd->add_option("--case", case_name, "standard set name")->required();
    sep_cmd->add_option("--input", input_path, "tuple file with two tuples")->required();
    add_json(sep_cmd);
    sep_cmd->callback([&] {
        TupleFile f = load_tuples(input_path);
        if (f.tuples.size() != 2)
            throw DomainError("separate expects exactly two tuples in the input file");
        InvariantSet set = standard_set(case_name, f.d, f.field.characteristic());
        SeparationReport rep = separates(set, f.tuples[0], f.tuples[1]);
        for (const auto& row : rep.rows)
            std::cout << "  " << row.expr.str() << ": " << row.value_u.str() << " vs "
                      << row.value_v.str() << (row.equal ? "" : "   <-- differs") << "\n";
        std::cout << (rep.separated ? "separated by " + rep.first_separator->str()
                                    : "not separated")
                  << "\n";
        Json j = report_to_json(rep);
        j["case"] = case_name;
        write_json(json_path, j);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "machine verification suites");
    verify_cmd->require_subcommand(1);

    auto* theorem_cmd = verify_cmd->add_subcommand("theorem", "witness suite for one case");
    theorem_cmd->add_option("--case", case_name)->required();
    add_field(theorem_cmd);
    add_json(theorem_cmd);
    theorem_cmd->callback([&] {
        MinimalityReport rep = verify_minimality(case_name, field_flag(field_name));
        print_minimality(rep);
        write_json(json_path, report_to_json(rep));
        if (!rep.all_pass)
            g_exit = 1;
    });

    auto* lemma_cmd = verify_cmd->add_subcommand("lemma", "decomposability formulas a-f");
    lemma_cmd->add_option("--part", part, "a..f, or 'all'");
    lemma_cmd->add_option("--max-word-len", max_word_len);
    lemma_cmd->add_option("--max-degree", max_degree);
    add_field(lemma_cmd);
    add_json(lemma_cmd);
    lemma_cmd->callback([&] {
        FieldDescriptor field = field_flag(field_name);
        LemmaSchedule sched{max_word_len, max_degree};
        std::vector<char> parts;
        if (part == "all")
            parts = {'a', 'b', 'c', 'd', 'e', 'f'};
        else if (part.size() == 1 && part[0] >= 'a' && part[0] <= 'f')
            parts = {part[0]};
        else
            throw DomainError("--part must be one of a..f or all");
        DecompService service(CaseDesc{MatrixKind::Symmetric, 3, 3, field}, max_degree);
        Json all = Json::array();
        bool ok = true;
        for (char p : parts) {
            LemmaReport rep = verify_lemma_dec(p, field, sched, &service);
            print_lemma(rep);
            ok = ok && rep.all_pass;
            all.push_back(report_to_json(rep));
        }
        write_json(json_path, parts.size() == 1 ? all[0] : all);
        if (!ok)
            g_exit = 1;
    });

    auto* indec_cmd =
        verify_cmd->add_subcommand("indecomposable", "span-based and nilpotent-substitution checks");
    add_field(indec_cmd);
    add_json(indec_cmd);
    indec_cmd->callback([&] {
        FieldDescriptor field = field_flag(field_name);
        Json j;
        bool ok = true;
        IndecompReport span_rep = verify_indecomposability(field);
        for (const auto& e : span_rep.entries)
            std::cout << "  " << e.target << ": "
                      << (e.decomposable ? "decomposable" : "indecomposable")
                      << (e.pass ? "  (as expected)" : "  UNEXPECTED") << "\n";
        ok = ok && span_rep.all_pass;
        j["span"] = report_to_json(span_rep);
        std::optional<FieldDescriptor> nil_field;
        if (field.has_i_sqrt2())
            nil_field = field;
        else if (field.kind() == FieldKind::Rationals)
            nil_field = FieldDescriptor::q_adjoin_i_sqrt2();
        if (nil_field) {
            Json nil = Json::array();
            for (NilpotentTarget t : {NilpotentTarget::F1, NilpotentTarget::F2,
                                      NilpotentTarget::F3, NilpotentTarget::F4}) {
                NilpotentArgReport rep = verify_indecomposability_argument(t, *nil_field);
                print_nilpotent(rep);
                ok = ok && rep.pass;
                nil.push_back(report_to_json(rep));
            }
            j["nilpotent"] = std::move(nil);
        } else {
            j["nilpotent"] = "skipped: field lacks i and sqrt2";
            std::cout << "nilpotent arguments skipped: field " << field.name()
                      << " lacks i and sqrt2\n";
        }
        write_json(json_path, j);
        if (!ok)
            g_exit = 1;
    });

    auto* red_cmd = verify_cmd->add_subcommand("reduction", "auxiliary-generator reduction");
    add_field(red_cmd);
    add_json(red_cmd);
    red_cmd->callback([&] {
        ReductionReport rep = verify_generating_set_reduction(field_flag(field_name));
        for (const auto& e : rep.entries)
            std::cout << "  " << (e.pass ? "pass" : "FAIL") << "  " << e.name << ": "
                      << e.detail << "\n";
        std::cout << "  h1 == h2: " << (rep.h1_equals_h2 ? "yes" : "NO") << "\n";
        write_json(json_path, report_to_json(rep));
        if (!rep.all_pass)
            g_exit = 1;
    });

    auto* all_cmd = verify_cmd->add_subcommand("all", "the full suite (CI entry point)");
    add_field(all_cmd);
    add_json(all_cmd);
    all_cmd->callback([&] {
        VerifyAllResult res = verify_all(field_flag(field_name));
        std::cout << res.report.dump(2) << "\n";
        write_json(json_path, res.report);
        if (!res.all_pass)
            g_exit = 1;
    });

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "decide decomposability of one invariant");
    dec_cmd->add_option("--expr", expr_text)->required();
    dec_cmd->add_option("--kind", kind_name_flag, "general | symmetric | skew");
    dec_cmd->add_option("--n", n_flag);
    dec_cmd->add_option("--d", d_flag);
    dec_cmd->add_option("--max-degree", max_degree, "pool degree bound");
    dec_cmd->add_flag("--certificate", with_certificate, "print the certificate");
    add_field(dec_cmd);
    add_json(dec_cmd);
    dec_cmd->callback([&] {
        DecompService service(
            CaseDesc{kind_from_name(kind_name_flag), n_flag, d_flag, field_flag(field_name)},
            max_degree);
        DecompositionReport rep = service.is_decomposable(InvariantExpr::parse(expr_text));
        print_decomposition(rep, with_certificate);
        write_json(json_path, report_to_json(rep, with_certificate));
    });

    // search-witness
    auto* search_cmd = app.add_subcommand("search-witness", "random search for a witness pair");
    search_cmd->add_option("--case", case_name)->required();
    search_cmd->add_option("--d", d_flag);
    search_cmd->add_option("--f", expr_text, "the separator to isolate")->required();
    search_cmd->add_option("--budget", budget);
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--lo", lo);
    search_cmd->add_option("--hi", hi);
    add_json(search_cmd);
    search_cmd->callback([&] {
        InvariantSet set = standard_set(case_name, d_flag);
        auto found = search_witness(set, InvariantExpr::parse(expr_text),
                                    SamplerDesc{lo, hi}, budget, seed);
        if (!found) {
            std::cout << "no witness found within " << budget << " attempts\n";
            return;
        }
        std::cout << "witness found for " << expr_text << ":\n";
        for (std::size_t q = 0; q < found->u.mats.size(); ++q)
            std::cout << "A" << (q + 1) << " =\n" << found->u.mats[q].str() << "\n";
        for (std::size_t q = 0; q < found->v.mats.size(); ++q)
            std::cout << "B" << (q + 1) << " =\n" << found->v.mats[q].str() << "\n";
        write_json(json_path, witness_to_json(*found));
    });

    // list-sets
    auto* list_cmd = app.add_subcommand("list-sets", "print the standard invariant sets");
    list_cmd->add_option("--d", d_flag);
    add_json(list_cmd);
    list_cmd->callback([&] {
        Json all = Json::array();
        for (const auto& cs : standard_case_names()) {
            int d = d_flag;
            if (cs == "gl3-d2" || cs == "o4-skew-d2" || cs == "o3-sym-d2")
                d = 2;
            if (cs == "o3-sym-d3" || cs == "o3-sym-d3-pool-G1" || cs == "o3-sym-d3-pool-G2")
                d = 3;
            try {
                InvariantSet s = standard_set(cs, d);
                std::cout << cs << " (n=" << s.n << ", d=" << s.d << ", "
                          << invkit::kind_name(s.kind) << ", " << s.exprs.size()
                          << " elements):\n  ";
                for (std::size_t q = 0; q < s.exprs.size(); ++q)
                    std::cout << (q ? ", " : "") << s.exprs[q].str();
                std::cout << "\n";
                all.push_back(set_to_json(s));
            } catch (const DomainError&) {
                // d incompatible with this case under the current --d
            }
        }
        write_json(json_path, all);
    });

    // export-witnesses
    auto* export_cmd =
        app.add_subcommand("export-witnesses", "write the built-in witness fixtures as JSON");
    export_cmd->add_option("--out", out_dir, "output directory");
    add_field(export_cmd);
    export_cmd->callback([&] {
        FieldDescriptor field = field_flag(field_name);
        struct CaseSpec {
            const char* name;
            std::vector<int> ds;
        };
        for (const CaseSpec& cs :
             {CaseSpec{"gl3-d2", {2}}, CaseSpec{"o3-skew", {2, 3}}, CaseSpec{"o4-skew-d2", {2}},
              CaseSpec{"o3-sym-d2", {2}}}) {
            Json j;
            j["case"] = cs.name;
            j["field"] = field.name();
            Json arr = Json::array();
            for (int d : cs.ds) {
                InvariantSet set = standard_set(cs.name, d, field.characteristic());
                for (const auto& f : set.exprs)
                    arr.push_back(witness_to_json(builtin_witness(cs.name, d, f, field)));
            }
            j["witnesses"] = std::move(arr);
            std::string path = out_dir + "/" + cs.name + ".json";
            write_json(path, j);
            std::cout << "wrote " << path << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
