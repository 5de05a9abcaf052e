#include "threecolour/jsonio.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>

#include "threecolour/errors.hpp"

namespace threecolour {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

Int int_from_str(const std::string& s) {
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw Error("not a decimal integer: \"" + s + "\"");
    return v;
}

Json rat_pair(const Rat& v) {
    return Json::array({int_str(v.get_num()), int_str(v.get_den())});
}

Rat rat_from_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw Error("coefficient must be a [\"num\",\"den\"] string pair");
    Int num = int_from_str(j[0].get<std::string>());
    Int den = int_from_str(j[1].get<std::string>());
    if (den == 0) throw Error("zero denominator in coefficient");
    Rat v(num);
    v /= Rat(den);
    return v;
}

} // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json board_to_json(const ThreeColourBoard& b) {
    Json grid = Json::array();
    for (long i = 0; i < b.side(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < b.side(); ++j) row.push_back(static_cast<int>(b.at(i, j)));
        grid.push_back(std::move(row));
    }
    Json out;
    out["n"] = b.n;
    out["grid"] = std::move(grid);
    return out;
}

ThreeColourBoard board_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("grid"))
        throw Error("board document needs \"n\" and \"grid\"");
    ThreeColourBoard b;
    b.n = j["n"].get<long>();
    if (b.n < 0) throw Error("board size must be non-negative");
    const Json& grid = j["grid"];
    if (!grid.is_array() || static_cast<long>(grid.size()) != b.side())
        throw Error("grid must have n+1 rows");
    b.cells.assign(static_cast<size_t>(b.side() * b.side()), 0);
    for (long i = 0; i < b.side(); ++i) {
        const Json& row = grid[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != b.side())
            throw Error("grid rows must have n+1 entries");
        for (long k = 0; k < b.side(); ++k) {
            int c = row[static_cast<size_t>(k)].get<int>();
            if (c < 0 || c > 2) throw Error("colours are 0, 1 or 2");
            b.at(i, k) = static_cast<Colour>(c);
        }
    }
    std::string why;
    if (!board_is_valid(b, &why)) throw Error("invalid board: " + why);
    return b;
}

Json count_table_to_json(const CountTable& t) {
    Json out = Json::array();
    for (const auto& [k, v] : t.counts) {
        Json row;
        row["k"] = Json::array({k[0], k[1], k[2]});
        row["count"] = int_str(v);
        out.push_back(std::move(row));
    }
    return out;
}

CountTable count_table_from_json(const Json& j, long n) {
    if (!j.is_array()) throw Error("count table document must be a list");
    CountTable t;
    t.n = n;
    for (const Json& row : j) {
        if (!row.is_object() || !row.contains("k") || !row.contains("count"))
            throw Error("count rows need \"k\" and \"count\"");
        const Json& k = row["k"];
        if (!k.is_array() || k.size() != 3) throw Error("\"k\" must have three entries");
        std::array<long, 3> e{k[0].get<long>(), k[1].get<long>(), k[2].get<long>()};
        Int v = int_from_str(row["count"].get<std::string>());
        if (!t.counts.emplace(e, v).second) throw Error("duplicate exponent triple");
    }
    return t;
}

std::string count_table_csv(const CountTable& t) {
    std::string out = "k0,k1,k2,count\n";
    for (const auto& [k, v] : t.counts) {
        out += std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
               std::to_string(k[2]) + "," + int_str(v) + "\n";
    }
    return out;
}

Json tripoly_to_json(const TriPoly& z) {
    Json out = Json::array();
    for (const auto& [k, v] : z.m) {
        Json row;
        row["k"] = Json::array({k[0], k[1], k[2]});
        row["count"] = int_str(v);
        out.push_back(std::move(row));
    }
    return out;
}

Json ratpoly_to_json(const RatPoly& f) {
    Json coeffs = Json::array();
    for (long k = 0; k <= f.degree(); ++k) coeffs.push_back(rat_pair(f.coeff(k)));
    Json out;
    out["var"] = "zeta";
    out["coeffs"] = std::move(coeffs);
    return out;
}

RatPoly ratpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error("polynomial document needs a \"coeffs\" list");
    std::vector<Rat> c;
    for (const Json& p : j["coeffs"]) c.push_back(rat_from_pair(p));
    return RatPoly(std::move(c));
}

Json bipoly_to_json(const BiPoly& f) {
    Json rows = Json::array();
    long dy = f.degy();
    for (long i = 0; i <= f.degx(); ++i) {
        Json row = Json::array();
        for (long j = 0; j <= dy; ++j) row.push_back(rat_pair(f.coeff(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["vars"] = Json::array({"x", "zeta"});
    out["coeffs"] = std::move(rows);
    return out;
}

BiPoly bipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error("polynomial document needs a \"coeffs\" grid");
    BiPoly f;
    long i = 0;
    for (const Json& row : j["coeffs"]) {
        if (!row.is_array()) throw Error("coefficient grid rows must be lists");
        long k = 0;
        for (const Json& p : row) f.set(i, k++, rat_from_pair(p));
        ++i;
    }
    f.normalize();
    return f;
}

std::string coeff_checksum(const RatPoly& f) {
    std::string bytes;
    for (long k = 0; k <= f.degree(); ++k) {
        if (k > 0) bytes += ';';
        const Rat& c = f.coeff(k);
        bytes += int_str(c.get_num()) + "/" + int_str(c.get_den());
    }
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return std::string(buf);
}

Json family_manifest(const std::string& kind, long n,
                     const std::string& construction, const RatPoly& f) {
    Json out;
    out["kind"] = kind;
    out["n"] = n;
    out["construction"] = construction;
    out["degree"] = f.degree();
    out["leading"] = rat_pair(f.degree() < 0 ? Rat(0) : f.lead());
    out["checksum"] = coeff_checksum(f);
    return out;
}

Json check_report_to_json(const CheckReport& r) {
    Json out;
    out["check"] = r.check;
    out["n"] = r.n;
    out["pass"] = r.pass;
    out["detail"] = r.detail;
    return out;
}

Json residual_report(const std::string& check, const Json& params,
                     double residual, double tol) {
    Json out;
    out["check"] = check;
    out["params"] = params;
    out["residual"] = residual;
    out["tol"] = tol;
    out["pass"] = residual <= tol;
    return out;
}

} // namespace threecolour
