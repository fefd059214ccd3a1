#include "eroot/json_io.hpp"

#include <fstream>
#include <sstream>

namespace eroot {

ordered_json system_to_json(const ApproximationSystem& system)
{
    ordered_json doc;
    doc["n"] = system.n;
    doc["k"] = system.k;
    doc["ell"] = system.ell;
    doc["L"] = system.L;
    doc["norm_factor"] = {{"num", to_string(system.norm_factor.get_num())},
                          {"den", to_string(system.norm_factor.get_den())}};

    ordered_json systems = ordered_json::array();
    for (size_t u = 0; u < system.a_star.size(); ++u) {
        ordered_json entry;
        entry["u"] = u;
        ordered_json polys = ordered_json::array();
        for (const auto& p : system.a_star[u]) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
            polys.push_back(std::move(coeffs));
        }
        entry["polys"] = std::move(polys);
        systems.push_back(std::move(entry));
    }
    doc["systems"] = std::move(systems);

    ordered_json values = ordered_json::array();
    for (const auto& row : system.values_at_one()) {
        ordered_json jr = ordered_json::array();
        for (const auto& v : row) jr.push_back(to_string(v));
        values.push_back(std::move(jr));
    }
    doc["values_at_one"] = std::move(values);
    doc["determinant"] = to_string(system_determinant(system));
    return doc;
}

ordered_json certificate_to_json(const CertificateRecord& record)
{
    ordered_json doc;
    doc["n"] = record.n;
    doc["k"] = record.k;
    doc["H"] = record.H;
    doc["min_value"] = {{"midpoint_decimal", record.min_value.mid_string(30)},
                        {"radius_decimal", record.min_value.rad_string()},
                        {"precision_bits", record.precision_bits}};
    doc["argmin"] = record.argmin;
    if (std::isnan(record.empirical_omega))
        doc["empirical_omega"] = nullptr;
    else
        doc["empirical_omega"] = record.empirical_omega;
    if (std::isnan(record.theorem_omega))
        doc["theorem_omega"] = nullptr;
    else
        doc["theorem_omega"] = record.theorem_omega;
    doc["hypothesis_satisfied"] = record.hypothesis_satisfied;
    doc["verdict"] = record.verdict;
    doc["lambda0_bounded"] = record.lambda0_bounded;
    doc["tuples_scanned"] = record.tuples_scanned;
    doc["wall_time_ms"] = record.wall_time_ms;
    return doc;
}

ordered_json comparison_row_to_json(const ComparisonRow& row)
{
    ordered_json doc;
    doc["n"] = row.n;
    doc["k"] = row.k;
    doc["log_logH"] = row.log_logH;
    doc["exp_paper"] = row.exp_this_paper;
    doc["exp_mahler"] = row.exp_mahler;
    doc["exp_mahler_heuristic"] = row.exp_mahler_heuristic;
    doc["exp_ehlm"] = row.exp_ehlm;
    doc["hypothesis_satisfied"] = row.hypothesis_satisfied;
    doc["winner"] = row.winner;
    return doc;
}

ordered_json check_to_json(const CheckResult& check)
{
    ordered_json doc;
    doc["name"] = check.name;
    doc["pass"] = check.pass;
    if (!check.detail.empty()) doc["detail"] = check.detail;
    return doc;
}

std::string comparison_rows_to_csv(const std::vector<ComparisonRow>& rows)
{
    std::ostringstream os;
    os << "n,k,log_logH,exp_paper,exp_mahler,exp_ehlm,winner\n";
    os.precision(12);
    for (const auto& r : rows) {
        os << r.n << ',' << r.k << ',' << r.log_logH << ',' << r.exp_this_paper << ','
           << r.exp_mahler << ',' << r.exp_ehlm << ',' << r.winner << '\n';
    }
    return os.str();
}

void append_ndjson(const std::string& path, const ordered_json& doc)
{
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open archive file: " + path);
    out << doc.dump() << '\n';
}

}  // namespace eroot
