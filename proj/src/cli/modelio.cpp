#include "cli/modelio.hpp"

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "cli/polyparse.hpp"

namespace cli {

using liepair::LiePairModel;
using nlohmann::ordered_json;

namespace {

int int_field(const ordered_json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
    if (!j.at(key).is_number_integer())
        throw ParseError("field '" + key + "' must be an integer");
    return j.at(key).get<int>();
}

exactalg::PolyScalar parse_entry(const std::string& text, int nvars, const std::string& where) {
    try {
        return parse_poly(text, nvars);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

LiePairModel model_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("a model file must hold a JSON object");
    const int n = int_field(j, "n");
    const int r = int_field(j, "r");
    const int rprime = int_field(j, "rprime");
    if (n < 0) throw ParseError("field 'n' must be nonnegative");
    if (r < 0 || rprime < 0)
        throw ParseError("fields 'r' and 'rprime' must be nonnegative");
    if (r + rprime < 1) throw ParseError("the frame is empty: r + rprime must be positive");
    const int rank = r + rprime;

    LiePairModel m = LiePairModel::zero_model(n, r, rprime);
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("field 'name' must be a string");
        m.name = j.at("name").get<std::string>();
    }

    if (!j.contains("rho") || !j.at("rho").is_array())
        throw ParseError("field 'rho' must be an array of rows");
    const auto& rho = j.at("rho");
    if (static_cast<int>(rho.size()) != rank)
        throw ParseError("field 'rho' must have r + rprime = " + std::to_string(rank) +
                         " rows (got " + std::to_string(rho.size()) + ")");
    for (int i = 0; i < rank; ++i) {
        const auto& row = rho.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("rho row " + std::to_string(i + 1) + " must have n = " +
                             std::to_string(n) + " entries");
        for (int t = 0; t < n; ++t) {
            const auto& cell = row.at(static_cast<size_t>(t));
            if (!cell.is_string())
                throw ParseError("rho[" + std::to_string(i + 1) + "][" + std::to_string(t + 1) +
                                 "] must be a polynomial string");
            const std::string where =
                "rho[" + std::to_string(i + 1) + "][" + std::to_string(t + 1) + "]";
            m.set_rho(i + 1, t + 1, parse_entry(cell.get<std::string>(), n, where));
        }
    }

    if (!j.contains("c") || !j.at("c").is_array())
        throw ParseError("field 'c' must be an array of [i, j, k, poly] entries");
    std::set<std::vector<int>> seen;
    for (const auto& entry : j.at("c")) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("each c entry must be [i, j, k, poly]");
        for (int t = 0; t < 3; ++t)
            if (!entry.at(static_cast<size_t>(t)).is_number_integer())
                throw ParseError("each c entry must be [i, j, k, poly] with integer indices");
        const int i = entry.at(0).get<int>();
        const int jj = entry.at(1).get<int>();
        const int k = entry.at(2).get<int>();
        const std::string where =
            "c[" + std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) + "]";
        for (int idx : {i, jj, k})
            if (idx < 1 || idx > rank)
                throw ParseError(where + ": index " + std::to_string(idx) +
                                 " out of range 1.." + std::to_string(rank));
        if (!seen.insert({i, jj, k}).second) throw ParseError(where + ": duplicate entry");
        if (!entry.at(3).is_string())
            throw ParseError(where + ": the coefficient must be a polynomial string");
        m.set_c(i, jj, k, parse_entry(entry.at(3).get<std::string>(), n, where));
    }
    return m;
}

ordered_json model_to_json(const LiePairModel& m) {
    ordered_json j;
    j["n"] = m.n;
    j["r"] = m.r;
    j["rprime"] = m.rprime;
    ordered_json rho = ordered_json::array();
    for (int i = 1; i <= m.rank_L(); ++i) {
        ordered_json row = ordered_json::array();
        for (int t = 1; t <= m.n; ++t) row.push_back(poly_to_string(m.rho_comp(i, t)));
        rho.push_back(row);
    }
    j["rho"] = rho;
    ordered_json c = ordered_json::array();
    for (int i = 1; i <= m.rank_L(); ++i)
        for (int jj = 1; jj <= m.rank_L(); ++jj)
            for (int k = 1; k <= m.rank_L(); ++k)
                if (!m.cijk(i, jj, k).is_zero())
                    c.push_back(ordered_json::array({i, jj, k, poly_to_string(m.cijk(i, jj, k))}));
    j["c"] = c;
    j["name"] = m.name;
    return j;
}

namespace {

LiePairModel load_parsed(const std::string& path) {
    std::ifstream f(path);
    if (!f.good()) throw ParseError("cannot open model file '" + path + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return model_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

LiePairModel load_model(const std::string& path) {
    LiePairModel m = load_parsed(path);
    const liepair::ValidationReport report = liepair::validate(m);
    if (!report.ok())
        throw liepair::ModelError(path + ": the structure data fail validation\n" +
                                  report.to_string());
    return m;
}

LiePairModel load_model_raw(const std::string& path) { return load_parsed(path); }

}  // namespace cli
