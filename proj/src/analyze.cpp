#include "analyze.hpp"

#include "frame.hpp"
#include "skewalgebra.hpp"

namespace skewmat {

AnalyzeOutcome analyze_skewset(const SkewSet& c, const AnalyzeOptions& opt) {
    AnalyzeOutcome out;
    Json& j = out.report;
    j["n"] = c.n();
    j["field"] = c.field()->to_json();

    SimplicityReport simp = is_simple(c);
    j["simple"] = simp.simple;
    j["scc_count"] = simp.scc_count;
    if (!simp.simple) j["witness"] = pos_set_to_json(simp.witness);

    IdealEnumeration ideals = enumerate_ideals(c, opt.cap_ideals);
    out.truncated = ideals.truncated;
    j["ideal_count"] = ideals.ideals.size();
    j["ideals_truncated"] = ideals.truncated;

    auto violation = associativity_violation(c);
    j["associative"] = !violation.has_value();
    if (violation) {
        j["associativity_violation"] =
            Json::array({violation->i, violation->j, violation->k, violation->l});
    }

    j["nuclei"] = nuclei(c).to_json();
    j["center_dim"] = center(c).size();
    return out;
}

}  // namespace skewmat
