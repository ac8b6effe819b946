#pragma once

// JSON encodings. Big integers are decimal strings everywhere so that no
// reader ever rounds them; ring elements round-trip exactly.

#include <json.hpp>

#include "stickel/cyclotomic.hpp"
#include "stickel/gauss_sums.hpp"
#include "stickel/group_ring.hpp"
#include "stickel/principality.hpp"
#include "stickel/regularity.hpp"

namespace stickel {

using json = nlohmann::ordered_json;

json to_json(const mpz_class& n);
mpz_class mpz_from_json(const json& j);

// CycInt: ["c0", ..., "c_{p-2}"]
json to_json(const CycInt& a);
CycInt cyc_from_json(u64 p, const json& j);

// BiCycInt: p-1 rows of q-1 decimal strings (row i = coefficient of zeta_p^i).
json to_json(const BiCycInt& a);
BiCycInt bicyc_from_json(u64 p, u64 q, const json& j);

json to_json(const GroupRingElt& g);  // decimal strings, like ring elements
json to_json(const Valuation& v);
json to_json(const Check& c);
json to_json(const GaussSumRecord& r);
json to_json(const RegularityVerdict& r);
json to_json(const BHalfCheck& r);
json to_json(const PrincipalityReport& r);
json to_json(const HalfDegreeCorollary& r);
json to_json(const ProbeWitness& w);
json to_json(const ProbeReport& r);

}  // namespace stickel
