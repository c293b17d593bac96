#include "todd/serialize.hpp"

namespace todd {

nlohmann::json to_json(const Certificate& c) {
    return nlohmann::json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}};
}

nlohmann::json to_json(const ExactnessResult& r) {
    nlohmann::json j;
    j["exact"] = r.exact;
    j["witness"] = r.exact ? nlohmann::json(r.witness.to_string()) : nlohmann::json(nullptr);
    if (!r.exact) {
        nlohmann::json y = nlohmann::json::array();
        for (const auto& q : r.obstruction) y.push_back(exactalg::rational_to_string(q));
        j["obstruction"] = std::move(y);
        j["obstruction_basis"] = r.obstruction_basis;
        j["obstruction_degree"] = r.obstruction_degree;
    }
    return j;
}

nlohmann::json cohomology_table_json(const liepair::LiePairModel& m, liepair::ModuleTag tag,
                                     int lambda_k, int qlo, int qhi) {
    const char* name = tag == liepair::ModuleTag::B
                           ? "B"
                           : (tag == liepair::ModuleTag::HomBBtoB ? "HomBBtoB" : "LambdaBDual");
    return nlohmann::json{{"module", name},
                          {"lambda_k", lambda_k},
                          {"q_lo", qlo},
                          {"q_hi", qhi},
                          {"dims", ce_cohomology_dims(m, tag, lambda_k, qlo, qhi)}};
}

}  // namespace todd
