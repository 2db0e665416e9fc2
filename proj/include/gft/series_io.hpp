#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"

namespace gft {

// Series documents: {"n": int, "coeffs": [[re, im], ...]}.
// With "n" present the list starts at a_1 of a normalized f; without it the list is the raw
// Taylor expansion c_0, c_1, ... of an arbitrary analytic g.

struct SeriesDocument {
    std::vector<Complex> coeffs;
    bool normalized = false;
    int n = 1;
};

inline SeriesDocument parse_series_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("series document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("series document: expected an object with a \"coeffs\" array");
    SeriesDocument out;
    for (const auto& c : doc["coeffs"]) {
        if (c.is_number()) {
            out.coeffs.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
            out.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else {
            throw ParseError("series document: each coefficient must be [re, im]");
        }
    }
    if (out.coeffs.empty()) throw ParseError("series document: empty coefficient list");
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw ParseError("series document: \"n\" must be an integer");
        out.normalized = true;
        out.n = doc["n"].get<int>();
    }
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A normalized series document; ParseError if "n" is missing or normalization fails.
inline PowerSeries load_power_series(const std::string& path) {
    const auto doc = parse_series_document(read_text_file(path));
    if (!doc.normalized) throw ParseError(path + ": missing \"n\" for a normalized series");
    try {
        return PowerSeries(doc.coeffs, doc.n);
    } catch (const DomainError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Any series document as a polynomial: raw lists map to c_0 + c_1 z + ..., normalized
/// lists to a_1 z + a_2 z^2 + ....
inline Polynomial load_polynomial(const std::string& path) {
    auto doc = parse_series_document(read_text_file(path));
    if (doc.normalized) doc.coeffs.insert(doc.coeffs.begin(), Complex{});
    return Polynomial(std::move(doc.coeffs));
}

inline nlohmann::json to_json(const PowerSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return {{"n", f.order_n()}, {"coeffs", coeffs}};
}

}  // namespace gft
