#pragma once

#include "json.hpp"
#include "todd/exactness.hpp"
#include "todd/todd.hpp"

namespace todd {

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ExactnessResult& r);
nlohmann::json cohomology_table_json(const liepair::LiePairModel& m, liepair::ModuleTag tag,
                                     int lambda_k, int qlo, int qhi);

}  // namespace todd
