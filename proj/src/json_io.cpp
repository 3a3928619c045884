#include "invkit/json_io.hpp"

namespace invkit {

namespace {

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

} // namespace

Json scalar_to_json(const Scalar& s) {
    switch (s.field().kind()) {
    case FieldKind::Rationals:
        return rational_to_string(std::get<mpq_class>(s.value()));
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        return std::get<std::int64_t>(s.value());
    case FieldKind::QAdjoinISqrt2: {
        const Ext4& e = *std::get<std::shared_ptr<const Ext4>>(s.value());
        Json arr = Json::array();
        for (const auto& c : e)
            arr.push_back(rational_to_string(c));
        return arr;
    }
    }
    throw DomainError("bad field kind");
}

Scalar scalar_from_json(const FieldDescriptor& field, const Json& j) {
    switch (field.kind()) {
    case FieldKind::Rationals:
        if (j.is_number_integer())
            return Scalar::of(field, j.get<std::int64_t>());
        if (j.is_string())
            return Scalar::of(field, rational_from_string(j.get<std::string>()));
        throw ParseError("expected rational string, got " + j.dump());
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithRoots:
        if (j.is_number_integer())
            return Scalar::of(field, j.get<std::int64_t>());
        if (j.is_string())
            return Scalar::of(field, rational_from_string(j.get<std::string>()));
        throw ParseError("expected residue integer, got " + j.dump());
    case FieldKind::QAdjoinISqrt2: {
        if (j.is_number_integer())
            return Scalar::of(field, j.get<std::int64_t>());
        if (j.is_string())
            return Scalar::of(field, rational_from_string(j.get<std::string>()));
        if (!j.is_array() || j.size() != 4)
            throw ParseError("expected 4-element coordinate array, got " + j.dump());
        std::array<mpq_class, 4> c;
        for (std::size_t q = 0; q < 4; ++q) {
            const Json& x = j[q];
            c[q] = x.is_number_integer() ? mpq_class(x.get<long>())
                                         : rational_from_string(x.get<std::string>());
        }
        return {field, sv::ext(field, c[0], c[1], c[2], c[3])};
    }
    }
    throw DomainError("bad field kind");
}

Json matrix_to_json(const ConcreteMatrix& m) {
    Json j;
    j["n"] = m.n();
    j["kind"] = kind_name(m.kind());
    Json entries = Json::array();
    for (int i = 1; i <= m.n(); ++i)
        for (int c = 1; c <= m.n(); ++c)
            entries.push_back(scalar_to_json(m.at(i, c)));
    j["entries"] = std::move(entries);
    return j;
}

ConcreteMatrix matrix_from_json(const FieldDescriptor& field, const Json& j) {
    int n = j.at("n").get<int>();
    MatrixKind kind = kind_from_name(j.at("kind").get<std::string>());
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
        throw ParseError("matrix entry count does not match n^2");
    std::vector<ScalarValue> vals;
    vals.reserve(entries.size());
    for (const auto& e : entries)
        vals.push_back(scalar_from_json(field, e).value());
    return ConcreteMatrix::from_values(field, kind, n, std::move(vals));
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        Json mono = Json::array();
        for (auto [v, e] : MonoTable::instance().get(m).factors)
            mono.push_back(Json::array({var_i(v), var_j(v), var_k(v), e}));
        term["monomial"] = std::move(mono);
        term["coeff"] = scalar_to_json({p.field(), c});
        terms.push_back(std::move(term));
    }
    return terms;
}

Polynomial polynomial_from_json(const FieldDescriptor& field, const Json& j) {
    if (!j.is_array())
        throw ParseError("polynomial must be an array of terms");
    std::vector<Polynomial::Term> terms;
    for (const auto& term : j) {
        std::vector<std::pair<VarId, std::uint32_t>> factors;
        for (const auto& var : term.at("monomial")) {
            if (!var.is_array() || var.size() != 4)
                throw ParseError("monomial factors are [i, j, k, exp] arrays");
            factors.emplace_back(
                make_var(var[0].get<int>(), var[1].get<int>(), var[2].get<int>()),
                var[3].get<std::uint32_t>());
        }
        terms.emplace_back(MonoTable::instance().intern(std::move(factors)),
                           scalar_from_json(field, term.at("coeff")).value());
    }
    return Polynomial::from_terms(field, std::move(terms));
}

Json set_to_json(const InvariantSet& s) {
    Json j;
    j["case"] = s.case_name;
    j["n"] = s.n;
    j["d"] = s.d;
    j["kind"] = kind_name(s.kind);
    Json exprs = Json::array();
    for (const auto& e : s.exprs)
        exprs.push_back(e.str());
    j["exprs"] = std::move(exprs);
    return j;
}

TupleFile tuple_file_from_json(const Json& j) {
    TupleFile f;
    f.field = FieldDescriptor::parse(j.at("field").get<std::string>());
    f.n = j.at("n").get<int>();
    f.d = j.at("d").get<int>();
    f.kind = kind_from_name(j.at("kind").get<std::string>());
    for (const auto& tup : j.at("tuples")) {
        std::vector<ConcreteMatrix> mats;
        for (const auto& m : tup) {
            ConcreteMatrix cm = matrix_from_json(f.field, m);
            if (cm.n() != f.n || cm.kind() != f.kind)
                throw ParseError("tuple member does not match the file header");
            mats.push_back(std::move(cm));
        }
        if (static_cast<int>(mats.size()) != f.d)
            throw ParseError("tuple length does not match d");
        f.tuples.push_back(MatrixTuple::of(std::move(mats)));
    }
    return f;
}

Json tuple_file_to_json(const TupleFile& f) {
    Json j;
    j["n"] = f.n;
    j["d"] = f.d;
    j["kind"] = kind_name(f.kind);
    j["field"] = f.field.name();
    Json tuples = Json::array();
    for (const auto& t : f.tuples) {
        Json tup = Json::array();
        for (const auto& m : t.mats)
            tup.push_back(matrix_to_json(m));
        tuples.push_back(std::move(tup));
    }
    j["tuples"] = std::move(tuples);
    return j;
}

Json witness_to_json(const WitnessPair& wp) {
    Json j;
    j["case"] = wp.case_name;
    j["d"] = wp.d;
    j["separator"] = wp.separator.str();
    Json u = Json::array(), v = Json::array();
    for (const auto& m : wp.u.mats)
        u.push_back(matrix_to_json(m));
    for (const auto& m : wp.v.mats)
        v.push_back(matrix_to_json(m));
    j["u"] = std::move(u);
    j["v"] = std::move(v);
    return j;
}

Json report_to_json(const SeparationReport& rep) {
    Json j;
    j["separated"] = rep.separated;
    j["first_separator"] = rep.first_separator ? Json(rep.first_separator->str()) : Json();
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["expr"] = r.expr.str();
        row["u"] = scalar_to_json(r.value_u);
        row["v"] = scalar_to_json(r.value_v);
        row["equal"] = r.equal;
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j;
}

namespace {
const char* status_name(WitnessStatus s) {
    switch (s) {
    case WitnessStatus::Pass: return "pass";
    case WitnessStatus::DegenerateInChar: return "degenerate-in-characteristic";
    case WitnessStatus::Fail: return "fail";
    }
    return "?";
}
} // namespace

Json report_to_json(const MinimalityReport& rep) {
    Json j;
    j["case"] = rep.case_name;
    j["field"] = rep.field_name;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json entry;
        entry["f"] = e.f.str();
        entry["d"] = e.d;
        entry["pass"] = e.status != WitnessStatus::Fail;
        entry["status"] = status_name(e.status);
        entry["separator_u"] = scalar_to_json(e.separator_u);
        entry["separator_v"] = scalar_to_json(e.separator_v);
        Json vu = Json::array(), vv = Json::array();
        for (const auto& row : e.agreement) {
            Json r;
            r["expr"] = row.expr.str();
            r["u"] = scalar_to_json(row.value_u);
            r["v"] = scalar_to_json(row.value_v);
            vu.push_back(r);
        }
        entry["values_u"] = vu;
        if (!e.note.empty())
            entry["note"] = e.note;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["all_pass"] = rep.all_pass;
    j["all_strict"] = rep.all_strict;
    return j;
}

Json report_to_json(const DecompositionReport& rep, bool include_certificate) {
    Json j;
    j["target"] = rep.target_label;
    j["field"] = rep.field_name;
    j["degree"] = rep.degree;
    j["multidegree"] = rep.mdeg.t;
    j["decomposable"] = rep.decomposable;
    if (rep.decomposable) {
        j["certificate_verified"] = rep.certificate_verified;
        if (include_certificate) {
            Json cert = Json::array();
            for (const auto& term : rep.certificate) {
                Json t;
                t["coeff"] = scalar_to_json(term.coeff);
                Json factors = Json::array();
                for (const auto& f : term.factors)
                    factors.push_back(f.str());
                t["product"] = std::move(factors);
                cert.push_back(std::move(t));
            }
            j["certificate"] = std::move(cert);
        } else {
            j["certificate_terms"] = rep.certificate.size();
        }
    } else {
        Json res;
        res["candidate_count"] = rep.residual.candidate_count;
        res["span_rank"] = rep.residual.span_rank;
        res["rows_considered"] = rep.residual.rows_considered;
        res["component_dimension"] = rep.residual.component_dimension.get_str();
        j["residual"] = std::move(res);
    }
    return j;
}

Json report_to_json(const LemmaReport& rep) {
    Json j;
    j["part"] = std::string(1, rep.part);
    j["field"] = rep.field_name;
    j["scheduled_instances"] = rep.scheduled_instances;
    Json inst = Json::array();
    for (const auto& i : rep.instances) {
        Json e;
        e["label"] = i.label;
        e["multidegree"] = i.mdeg.t;
        e["degree"] = i.degree;
        e["expected_decomposable"] = i.expect_decomposable;
        e["decomposable"] = i.decomposable;
        e["covers"] = i.covers;
        e["pass"] = i.pass;
        if (!i.note.empty())
            e["note"] = i.note;
        inst.push_back(std::move(e));
    }
    j["instances"] = std::move(inst);
    j["all_pass"] = rep.all_pass;
    return j;
}

Json report_to_json(const ReductionReport& rep) {
    Json j;
    j["field"] = rep.field_name;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json entry;
        entry["target"] = e.name;
        entry["how"] = e.how == ReductionEntry::How::EqualsSetMember ? "equals-set-member"
                                                                     : "decomposable";
        entry["detail"] = e.detail;
        entry["pass"] = e.pass;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["h1_equals_h2"] = rep.h1_equals_h2;
    j["all_pass"] = rep.all_pass;
    return j;
}

Json report_to_json(const NilpotentArgReport& rep) {
    Json j;
    j["target"] = rep.target;
    j["field"] = rep.field_name;
    Json steps = Json::array();
    for (const auto& s : rep.steps) {
        Json step;
        step["tuple"] = s.tuple_desc;
        step["equation"] = s.equation;
        step["action"] = s.action;
        step["result"] = s.result;
        step["degenerate"] = s.degenerate;
        step["pass"] = s.pass;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    if (rep.residual)
        j["residual"] = scalar_to_json(*rep.residual);
    j["refuted"] = rep.refuted;
    if (rep.final_equation)
        j["final_equation"] = *rep.final_equation;
    if (rep.final_equation_normalized)
        j["final_equation_normalized"] = *rep.final_equation_normalized;
    if (rep.gamma_value)
        j["gamma"] = scalar_to_json(*rep.gamma_value);
    if (rep.unsolvable_in_char3)
        j["unsolvable_in_char3"] = *rep.unsolvable_in_char3;
    j["consistent"] = rep.consistent;
    if (!rep.derived_shape.empty()) {
        j["derived_shape"] = rep.derived_shape;
        j["shape_extras"] = rep.shape_extras;
    }
    j["pass"] = rep.pass;
    return j;
}

Json report_to_json(const IndecompReport& rep) {
    Json j;
    j["field"] = rep.field_name;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json entry;
        entry["target"] = e.target;
        entry["expected_decomposable"] = e.expect_decomposable;
        entry["decomposable"] = e.decomposable;
        entry["pass"] = e.pass;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["all_pass"] = rep.all_pass;
    return j;
}

} // namespace invkit
