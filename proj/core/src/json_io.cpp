#include "fmzv/json_io.hpp"

#include <json.hpp>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "fmzv/1";

json poly_to_json(const Poly2& p) {
    json arr = json::array();
    for (const auto& [key, q] : p.coeffs) {
        json mono;
        mono["dplus"] = key.first;
        mono["dminus"] = key.second;
        mono["num"] = numerator(q).str();
        mono["den"] = denominator(q).str();
        arr.push_back(std::move(mono));
    }
    return arr;
}

Poly2 poly_from_json(const json& arr) {
    if (!arr.is_array()) throw ParseError("coefficient must be an array of monomials", 0);
    Poly2 p;
    for (const json& mono : arr) {
        if (!mono.is_object() || !mono.contains("dplus") || !mono.contains("dminus") ||
            !mono.contains("num") || !mono.contains("den"))
            throw ParseError("monomial must carry dplus, dminus, num, den", 0);
        if (!mono["dplus"].is_number_unsigned() || !mono["dminus"].is_number_unsigned())
            throw ParseError("monomial degrees must be non-negative integers", 0);
        if (!mono["num"].is_string() || !mono["den"].is_string())
            throw ParseError("rational parts must be decimal strings", 0);
        BigInt num, den;
        try {
            num = BigInt(mono["num"].get<std::string>());
            den = BigInt(mono["den"].get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("rational part is not a decimal integer", 0);
        }
        if (den == 0) throw ParseError("monomial denominator is zero", 0);
        p.add_term(mono["dplus"].get<unsigned>(), mono["dminus"].get<unsigned>(), Rational(num, den));
    }
    return p;
}

void check_schema(const json& doc) {
    if (!doc.is_object()) throw ParseError("document root must be an object", 0);
    if (!doc.contains("schema") || !doc["schema"].is_string() || doc["schema"] != kSchema)
        throw ParseError(std::string("unsupported schema, expected \"") + kSchema + "\"", 0);
}

} // namespace

std::string combination_to_json(const Combination& c) {
    json doc;
    doc["schema"] = kSchema;
    json terms = json::array();
    for (const auto& [idx, poly] : c.terms) {
        json term;
        term["index"] = format_index(idx);
        term["coeff"] = poly_to_json(poly);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Combination combination_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    check_schema(doc);
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw ParseError("document must carry a \"terms\" array", 0);
    Combination out;
    for (const json& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("index") || !term.contains("coeff"))
            throw ParseError("term must carry \"index\" and \"coeff\"", 0);
        if (!term["index"].is_string()) throw ParseError("term index must be a string", 0);
        const Index idx = parse_index(term["index"].get<std::string>());
        const Poly2 poly = poly_from_json(term["coeff"]);
        if (!poly.is_zero()) out.add_term(idx, poly);
    }
    return out;
}

std::string sweep_report_to_json(const SweepReport& report) {
    json doc;
    doc["schema"] = kSchema;
    doc["index"] = format_index(report.index);
    doc["exponent"] = report.exponent;
    doc["all_passed"] = report.all_passed;
    doc["primes_checked"] = report.primes_checked;
    json skipped = json::array();
    for (const SkipRecord& s : report.primes_skipped) {
        json rec;
        rec["prime"] = s.prime;
        rec["reason"] = s.reason;
        skipped.push_back(std::move(rec));
    }
    doc["primes_skipped"] = std::move(skipped);
    if (report.first_failure) {
        json fail;
        fail["prime"] = report.first_failure->prime;
        fail["lhs"] = report.first_failure->lhs;
        fail["rhs"] = report.first_failure->rhs;
        doc["first_failure"] = std::move(fail);
    } else {
        doc["first_failure"] = nullptr;
    }
    return doc.dump();
}

std::string p_table_to_json(const PTable& table, unsigned depth, unsigned max_k) {
    json doc;
    doc["schema"] = kSchema;
    doc["depth"] = depth;
    doc["max_k"] = max_k;
    json entries = json::array();
    for (const auto& [k, poly] : table) {
        std::string key;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(k[i]);
        }
        json entry;
        entry["k"] = std::move(key);
        entry["P"] = poly_to_json(poly);
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

} // namespace fmzv
