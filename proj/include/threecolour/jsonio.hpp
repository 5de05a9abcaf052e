#ifndef THREECOLOUR_JSONIO_HPP
#define THREECOLOUR_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "threecolour/bipoly.hpp"
#include "threecolour/board.hpp"
#include "threecolour/ratpoly.hpp"
#include "threecolour/reconstruct.hpp"
#include "threecolour/tripoly.hpp"

namespace threecolour {

using Json = nlohmann::ordered_json;

// All emitters are deterministic: keys in fixed order, integers as decimal
// strings (no precision loss), arrays sorted the same way for any thread
// count. dump_json renders with two-space indent and a trailing newline.
std::string dump_json(const Json& j);

// {"n": 4, "grid": [[0,1,2,...], ...]} with grid[i][j] the colour at row i,
// column j. Parsing validates shape, colour range and board legality.
Json board_to_json(const ThreeColourBoard& b);
ThreeColourBoard board_from_json(const Json& j);

// [{"k": [k0,k1,k2], "count": "<decimal>"}, ...] sorted lexicographically
// by k. Counts are decimal strings so arbitrarily large entries survive.
Json count_table_to_json(const CountTable& t);
CountTable count_table_from_json(const Json& j, long n);

// Header k0,k1,k2,count then one row per entry, same order as the JSON.
std::string count_table_csv(const CountTable& t);

// The same term list rendered from a polynomial with terms t0^k0 t1^k1 t2^k2;
// used for census polynomials produced without an enumeration pass.
Json tripoly_to_json(const TriPoly& z);

// {"var": "zeta", "coeffs": [["num","den"], ...]}, constant term first.
// Denominators are positive and the pairs are in lowest terms.
Json ratpoly_to_json(const RatPoly& f);
RatPoly ratpoly_from_json(const Json& j);

// {"vars": ["x","zeta"], "coeffs": [row, ...]} with coeffs[i][j] the
// ["num","den"] pair multiplying x^i zeta^j.
Json bipoly_to_json(const BiPoly& f);
BiPoly bipoly_from_json(const Json& j);

// FNV-1a over the canonical "num/den" coefficient strings joined with ';',
// rendered as 16 hex digits. Stable across platforms: pure 64-bit arithmetic
// on the byte sequence.
std::string coeff_checksum(const RatPoly& f);

// {"kind","n","construction","degree","leading":["num","den"],"checksum"}.
Json family_manifest(const std::string& kind, long n,
                     const std::string& construction, const RatPoly& f);

// {"check","n","pass","detail"}.
Json check_report_to_json(const CheckReport& r);

// {"check","params","residual","tol","pass"} with pass = residual <= tol.
Json residual_report(const std::string& check, const Json& params,
                     double residual, double tol);

} // namespace threecolour

#endif
