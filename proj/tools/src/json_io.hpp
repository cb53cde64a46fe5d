#pragma once

#include <json.hpp>

#include "swob/charseries.hpp"
#include "swob/locus.hpp"
#include "swob/obstruction.hpp"
#include "swob/restriction.hpp"

namespace swob {

using nlohmann::json;

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

void to_json(json& j, const SchurCombo& c);
void from_json(const json& j, SchurCombo& c);

// list of exponent maps {"1": 2, "3": 1}
void to_json(json& j, const Mod2Poly& p);
void from_json(const json& j, Mod2Poly& p);

void to_json(json& j, const GradedSchurSeries& s);
void from_json(const json& j, GradedSchurSeries& s);

void to_json(json& j, const TauSeries& s);
void from_json(const json& j, TauSeries& s);

// {"ring": [...generators], "terms": [{"monomial": "x^4", "exponents": [4], "degree": 4}]}
void to_json(json& j, const RingElement& e);
void from_json(const json& j, RingElement& e);

void to_json(json& j, const CaseLabel& c);
void from_json(const json& j, CaseLabel& c);

void to_json(json& j, const BoundReport& r);
void from_json(const json& j, BoundReport& r);

void to_json(json& j, const LocusReport& r);
void from_json(const json& j, LocusReport& r);

void to_json(json& j, const F2Matrix& m);
void from_json(const json& j, F2Matrix& m);

void to_json(json& j, const AluffiTransform& t);
void from_json(const json& j, AluffiTransform& t);

void to_json(json& j, const RestrictionDemo& d);
void from_json(const json& j, RestrictionDemo& d);

}  // namespace swob
