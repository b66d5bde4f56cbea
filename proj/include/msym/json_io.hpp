#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "msym/matrix2.hpp"
#include "msym/rational.hpp"
#include "msym/transfer.hpp"

namespace msym {

using json = nlohmann::json;

inline json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline cplx cplx_from_json(const json& j) {
    return cplx(j.at("re").get<double>(), j.at("im").get<double>());
}

inline json to_json(const Rational& r) { return json(r.str()); }

inline json to_json(const Cusp& c) {
    if (c.is_infinity()) return json("inf");
    std::string s = c.p.str();
    if (c.q != 1) s += "/" + c.q.str();
    return json(s);
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline json to_json(const Mat2& m) {
    auto e = [](const Int& v) { return v.convert_to<long long>(); };
    return json::array({json::array({e(m.a), e(m.b)}), json::array({e(m.c), e(m.d)})});
}

inline json to_json(const EigenDatum& d) {
    json coeffs = json::array();
    for (const cplx& c : d.coeffs) coeffs.push_back(json::array({c.real(), c.imag()}));
    return json{{"R", d.R},
                {"parity", d.parity},
                {"N", d.N},
                {"residual", d.residual},
                {"coefficients", coeffs}};
}

inline EigenDatum eigen_datum_from_json(const json& j) {
    EigenDatum d;
    d.R = j.at("R").get<double>();
    d.parity = j.at("parity").get<int>();
    d.N = j.at("N").get<int>();
    d.residual = j.at("residual").get<double>();
    for (const auto& c : j.at("coefficients"))
        d.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    return d;
}

// ---------------------------------------------------------------------------
// Eigen-data cache
// ---------------------------------------------------------------------------

inline std::string eigen_cache_name(int parity, double R, int N) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "eigen_%s_%.6f_%d.json", parity > 0 ? "+1" : "-1", R, N);
    return buf;
}

// Atomic write: temp file in the same directory, then rename.
inline void save_eigen_datum(const std::filesystem::path& dir, const EigenDatum& d) {
    std::filesystem::create_directories(dir);
    auto final_path = dir / eigen_cache_name(d.parity, d.R, d.N);
    auto tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path);
        out << to_json(d).dump(2) << "\n";
        if (!out) throw std::runtime_error("save_eigen_datum: write failed");
    }
    std::filesystem::rename(tmp_path, final_path);
}

// Returns nothing on a missing or corrupt file so callers recompute.
inline std::optional<EigenDatum> load_eigen_datum(const std::filesystem::path& dir,
                                                  int parity, double R, int N) {
    auto path = dir / eigen_cache_name(parity, R, N);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        EigenDatum d = eigen_datum_from_json(j);
        if (d.parity != parity || d.N != N) return std::nullopt;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace msym
