#ifndef LITTLEWOOD_JSON_IO_HPP
#define LITTLEWOOD_JSON_IO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "littlewood/asymptotics.hpp"
#include "littlewood/enumsearch.hpp"
#include "littlewood/rootcount.hpp"
#include "littlewood/spectral.hpp"
#include "littlewood/structure.hpp"

namespace littlewood {

using nlohmann::json;

/// Exact integers that may exceed 2^53 are serialized as decimal strings.
inline json bigint_to_json(const BigInt& v) {
    if (v <= BigInt(9007199254740992LL) && v >= BigInt(-9007199254740992LL))
        return json(v.convert_to<long long>());
    return json(v.str());
}

inline json rational_to_json(const BigRat& v) {
    json j;
    j["num"] = bigint_to_json(numerator(v));
    j["den"] = bigint_to_json(denominator(v));
    j["approx"] = v.convert_to<double>();
    return j;
}

inline json to_json(const LittlewoodPoly& p) {
    json j;
    j["kind"] = "littlewood";
    j["coeffs"] = p.coeffs;
    return j;
}

inline json to_json(const CosinePoly& f) {
    json j;
    j["kind"] = "cosine";
    j["coeffs"] = f.A;
    j["parity"] = f.parity == Parity::odd_only ? "odd" : "all";
    return j;
}

inline json to_json(const QPoly& q) {
    json j;
    j["kind"] = "q";
    j["coeffs"] = q.coeffs;
    j["parity"] = q.odd_support ? "odd" : "all";
    return j;
}

inline json census_record(int degree, const std::string& signs, const ZCount& z) {
    json j;
    j["degree"] = degree;
    j["signs"] = signs;
    j["distinct"] = z.distinct;
    j["mult"] = z.with_multiplicity;
    j["z1"] = z.at_plus_one;
    j["zm1"] = z.at_minus_one;
    j["odd"] = z.odd_multiplicity_count;
    return j;
}

inline json to_json(const SearchResult& r) {
    json j;
    j["degree"] = r.degree;
    j["convention"] = convention_name(r.convention);
    j["min"] = r.minimum;
    j["enumerated"] = r.enumerated;
    j["witnesses"] = r.witnesses;
    json hist = json::object();
    for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
    j["histogram"] = hist;
    j["wall_time_s"] = r.wall_time_s;
    return j;
}

// ---------------------------------------------------------------------------
// trig polynomial / generalized trig sum specs
// ---------------------------------------------------------------------------

inline Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
    if (j.is_object()) return Complex(j.value("re", 0.0), j.value("im", 0.0));
    throw error("cannot parse complex number from JSON");
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

/// Coefficient file: {"coeffs": [...]} listing c_0..c_N (reals or [re, im]
/// pairs); with "full": true the array is c_{-N}..c_N.
inline TrigPoly trig_poly_from_json(const json& j) {
    if (!j.contains("coeffs")) throw error("coefficient file needs a 'coeffs' array");
    std::vector<Complex> c;
    for (const auto& v : j["coeffs"]) c.push_back(complex_from_json(v));
    if (j.value("full", false)) return TrigPoly(std::move(c));
    return TrigPoly::from_half(c);
}

inline Frequency frequency_from_json(const json& j) {
    if (j.is_number()) throw untagged_frequency("frequency needs an explicit rational/irrational tag");
    const std::string type = j.value("type", "");
    if (type == "rational") return Frequency::of_rational(j.at("p").get<long long>(), j.at("q").get<long long>());
    if (type == "irrational") return Frequency::of_irrational(j.at("value").get<double>());
    throw untagged_frequency("frequency tag must be 'rational' or 'irrational'");
}

inline json frequency_to_json(const Frequency& f) {
    json j;
    if (f.rational) {
        j["type"] = "rational";
        j["p"] = f.p;
        j["q"] = f.q;
    } else {
        j["type"] = "irrational";
        j["value"] = f.value;
    }
    return j;
}

inline GeneralizedTrigSum trig_sum_from_json(const json& j) {
    GeneralizedTrigSum H;
    const std::string form = j.value("form", "symmetric");
    if (form == "symmetric") H.form = TrigForm::symmetric_form;
    else if (form == "im") H.form = TrigForm::im_form;
    else throw error("form must be 'symmetric' or 'im'");
    H.a0 = j.value("a0", 0.0);
    for (const auto& t : j.value("terms", json::array())) {
        TrigTerm term;
        term.amplitude = Complex(t.value("re", 0.0), t.value("im", 0.0));
        term.freq = frequency_from_json(t.at("freq"));
        H.terms.push_back(term);
    }
    for (const auto& p : j.value("complement_pairs", json::array()))
        H.complement_pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    return H;
}

inline FamilySpec family_from_json(const json& j) {
    FamilySpec F;
    for (const auto& b : j.at("blocks")) {
        FamilyBlock blk;
        blk.rho = frequency_from_json(b.at("rho"));
        blk.r_offset = b.value("r_offset", 0LL);
        for (const auto& t : b.value("terms", json::array())) {
            ExpTermSpec term;
            term.coeff = Complex(t.value("re", 0.0), t.value("im", 0.0));
            term.freq_scale = t.value("scale", 0.0);
            term.freq_power = t.value("power", 0.0);
            term.freq_offset = t.value("offset", 0LL);
            blk.terms.push_back(term);
        }
        F.blocks.push_back(std::move(blk));
    }
    return F;
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

/// Write-temp-then-rename; the results directory has a single writer.
inline void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw storage_error("cannot open " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// RFC-4180 field quoting.
inline std::string csv_field(const std::string& s) {
    bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

// ---------------------------------------------------------------------------
// Z_L table persistence
// ---------------------------------------------------------------------------

inline json zl_rows_to_json(const std::vector<DualSearchResult>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        for (Convention c : {Convention::with_multiplicity, Convention::distinct}) {
            const SearchResult r = select_result(row, c);
            arr.push_back(to_json(r));
        }
    }
    return arr;
}

inline std::string zl_rows_to_csv(const std::vector<DualSearchResult>& rows) {
    std::ostringstream out;
    out << "N,convention,min,enumerated,witness,histogram_json\r\n";
    for (const auto& row : rows) {
        for (Convention c : {Convention::with_multiplicity, Convention::distinct}) {
            const SearchResult r = select_result(row, c);
            json hist = json::object();
            for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
            out << r.degree << ',' << convention_name(c) << ',' << r.minimum << ',' << r.enumerated << ','
                << csv_field(r.witnesses.empty() ? "" : r.witnesses.front()) << ',' << csv_field(hist.dump())
                << "\r\n";
        }
    }
    return out.str();
}

/// Persist the table as CSV + JSON. If a stored table exists, the shared rows
/// are verified first; a mismatch raises storage_error.
inline bool persist_zl_table(const std::vector<DualSearchResult>& rows, const std::filesystem::path& dir) {
    const std::filesystem::path jpath = dir / "zl_table.json";
    bool verified = false;
    json fresh = zl_rows_to_json(rows);
    if (std::filesystem::exists(jpath)) {
        std::ifstream in(jpath);
        json stored;
        in >> stored;
        const std::size_t shared = std::min(stored.size(), fresh.size());
        for (std::size_t i = 0; i < shared; ++i) {
            const json& a = stored[i];
            const json& b = fresh[i];
            for (const char* key : {"degree", "convention", "min", "enumerated", "histogram"}) {
                if (a.at(key) != b.at(key))
                    throw storage_error("stored table disagrees with recomputation at row " + std::to_string(i));
            }
        }
        verified = shared > 0;
    }
    atomic_write(jpath, fresh.dump(2) + "\n");
    atomic_write(dir / "zl_table.csv", zl_rows_to_csv(rows));
    return verified;
}

} // namespace littlewood

#endif
