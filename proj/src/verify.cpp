#include "invkit/verify.hpp"

namespace invkit {

VerifyAllResult verify_all(const FieldDescriptor& field) {
    VerifyAllResult result;
    bool ok = true;
    Json& j = result.report;
    j["field"] = field.name();

    Json witnesses = Json::array();
    for (const char* cs : {"gl3-d2", "o3-skew", "o4-skew-d2", "o3-sym-d2"}) {
        MinimalityReport rep = verify_minimality(cs, field);
        ok = ok && rep.all_pass;
        witnesses.push_back(report_to_json(rep));
    }
    j["witnesses"] = std::move(witnesses);

    DecompService service(CaseDesc{MatrixKind::Symmetric, 3, 3, field}, 8);
    Json lemma = Json::array();
    for (char part : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        LemmaReport rep = verify_lemma_dec(part, field, {}, &service);
        ok = ok && rep.all_pass;
        lemma.push_back(report_to_json(rep));
    }
    j["lemma"] = std::move(lemma);

    IndecompReport ind = verify_indecomposability(field, &service);
    ok = ok && ind.all_pass;
    j["indecomposable"] = report_to_json(ind);

    ReductionReport red = verify_generating_set_reduction(field, &service);
    ok = ok && red.all_pass;
    j["reduction"] = report_to_json(red);

    std::optional<FieldDescriptor> nil_field;
    if (field.has_i_sqrt2())
        nil_field = field;
    else if (field.kind() == FieldKind::Rationals)
        nil_field = FieldDescriptor::q_adjoin_i_sqrt2();
    if (nil_field) {
        Json nil = Json::array();
        for (NilpotentTarget t : {NilpotentTarget::F1, NilpotentTarget::F2, NilpotentTarget::F3,
                                  NilpotentTarget::F4}) {
            NilpotentArgReport rep = verify_indecomposability_argument(t, *nil_field);
            ok = ok && rep.pass;
            nil.push_back(report_to_json(rep));
        }
        j["nilpotent"] = std::move(nil);
    } else {
        j["nilpotent"] = "skipped: field " + field.name() + " lacks i and sqrt2";
    }

    j["all_pass"] = ok;
    result.all_pass = ok;
    return result;
}

} // namespace invkit
