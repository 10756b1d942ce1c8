#include "bckcode/report.hpp"

namespace bckcode {

namespace {

Report header(const char* kind) {
    Report r;
    r["version"] = kReportVersion;
    r["kind"] = kind;
    return r;
}

Report identity_json(const IdentityCheck& c) {
    Report r;
    r["holds"] = c.holds;
    if (c.witness) r["witness"] = {c.witness->first, c.witness->second};
    return r;
}

Report words(const std::vector<Codeword>& ws) {
    Report r = Report::array();
    for (const auto& w : ws) r.push_back(w.str());
    return r;
}

}  // namespace

Report to_report(const CayleyAlgebra& alg) {
    Report r;
    r["order"] = alg.order();
    if (!alg.names().empty()) r["names"] = alg.names();
    Report rows = Report::array();
    for (Element x = 0; x < alg.order(); ++x) {
        const auto row = alg.row(x);
        rows.push_back(std::vector<Element>(row.begin(), row.end()));
    }
    r["table"] = std::move(rows);
    return r;
}

Report to_report(const BlockCode& code) { return words(code.words()); }

Report to_report(const CodeMatrix& m) {
    Report rows = Report::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).str());
    return rows;
}

Report verify_report(const CayleyAlgebra& alg, const AxiomReport& axioms,
                     const std::optional<IdentityCheck>& commutative,
                     const std::optional<IdentityCheck>& implicative) {
    Report r = header("verify");
    r["order"] = alg.order();
    Report ax = Report::array();
    for (std::size_t i = 0; i < axioms.axioms.size(); ++i) {
        const auto& a = axioms.axioms[i];
        Report e;
        e["axiom"] = i + 1;
        e["holds"] = a.holds;
        if (!a.holds) {
            e["witness"] = a.witness;
            e["evaluation"] = a.evaluation;
        }
        ax.push_back(std::move(e));
    }
    r["axioms"] = std::move(ax);
    r["is_bci"] = axioms.is_bci;
    r["is_bck"] = axioms.is_bck;
    if (commutative) r["commutative"] = identity_json(*commutative);
    if (implicative) r["implicative"] = identity_json(*implicative);
    if (axioms.is_bck) {
        const auto order = induced_order(alg);
        Report rel = Report::array();
        for (Element x = 0; x < alg.order(); ++x)
            for (Element y = 0; y < alg.order(); ++y)
                if (order.less(x, y)) rel.push_back({x, y});
        r["strictly_below"] = std::move(rel);
    }
    return r;
}

Report code_report(const BlockCode& code) {
    Report r = header("code");
    r["length"] = code.length();
    r["codewords"] = to_report(code);
    return r;
}

Report roundtrip_report(const ConstructionResult& built, const RoundTripReport& rt) {
    Report r = header("construct");
    r["algebra"] = to_report(built.algebra);
    r["input_code"] = to_report(rt.input_code);
    r["regenerated_code"] = to_report(rt.regenerated_code);
    r["exact"] = rt.exact;
    r["self_describing"] = rt.self_describing;
    Report mm = Report::array();
    for (const auto& m : rt.mismatches) {
        Report e;
        e["element"] = m.element;
        e["expected"] = m.expected.str();
        e["produced"] = m.produced.str();
        mm.push_back(std::move(e));
    }
    r["mismatches"] = std::move(mm);
    return r;
}

Report lift_report(const LiftResult& lift) {
    Report r = header("lift");
    r["input_code"] = to_report(lift.source_code);
    r["embedded"] = to_report(lift.embedded);
    r["augmented"] = to_report(lift.augmented);
    r["algebra_order"] = lift.algebra.order();
    r["column_map"] = lift.column_map;
    r["domain"] = lift.domain;
    r["lifted_code"] = to_report(lift.lifted_code);
    r["contains_input"] = lift.lifted_code.contains_all(lift.source_code);
    return r;
}

Report census_report(const CensusReport& c) {
    Report r = header("census");
    r["order"] = c.order;
    r["total_tables"] = c.total_tables;
    r["iso_classes"] = c.iso_classes;
    r["similarity_classes"] = c.similarity_classes;
    r["invariant_similarity_classes"] = c.invariant_similarity_classes;
    r["isomorphic_tables_with_distinct_codes"] = c.isomorphic_tables_with_distinct_codes;
    r["lower_bound"] = c.lower_bound;
    r["bound_check"] = c.bound_check;
    Report inv = Report::array();
    for (const auto& cls : c.class_inventory) {
        Report e;
        e["tables"] = cls.tables;
        e["representative"] = to_report(cls.representative)["table"];
        e["canonical_code"] = to_report(cls.canonical_code);
        inv.push_back(std::move(e));
    }
    r["class_inventory"] = std::move(inv);
    return r;
}

Report cn_report(unsigned n, const std::vector<BlockCode>& codes, bool list_codes) {
    Report r = header("codes");
    r["n"] = n;
    r["count"] = codes.size();
    r["expected_count"] = cn_count(n);
    if (list_codes) {
        Report list = Report::array();
        for (const auto& c : codes) list.push_back(to_report(c));
        r["codes"] = std::move(list);
    }
    return r;
}

Report family_report(unsigned n, const FamilyAlgebra& family) {
    Report r = header("family");
    r["n"] = n;
    Report members = Report::array();
    for (const auto& m : family.members) members.push_back(to_report(m));
    r["members"] = std::move(members);
    r["algebra"] = to_report(family.algebra);
    r["code"] = to_report(family.code);
    return r;
}

}  // namespace bckcode
