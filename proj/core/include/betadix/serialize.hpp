#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "betadix/counting.hpp"
#include "betadix/digits_extra.hpp"
#include "betadix/expansion.hpp"
#include "betadix/padic.hpp"
#include "betadix/residue.hpp"
#include "betadix/ring.hpp"

namespace betadix {

using Json = nlohmann::ordered_json;

/// Serialized hit lists stop after this many entries; counts stay exact.
inline constexpr std::size_t kMaxSerializedHits = 1'000'000;

/// Integers become JSON numbers when they fit 64 bits, decimal strings otherwise.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const NumberRing& ring);                 // {"f": [...]}
NumberRing ring_from_json(const Json& j, NumberRing::Options options = {});

Json to_json(const AlgebraicInt& a);                  // {"coeffs": [...]}
AlgebraicInt element_from_json(const NumberRing& ring, const Json& j);

Json to_json(const DigitSet& d);                      // {"canonical": m} or [[...], ...]
DigitSet digit_set_from_json(const AlgebraicInt& beta, const Json& j);

Json to_json(const BetaExpansion& e);                 // {"preperiod": [...], "period": [...]}
BetaExpansion expansion_from_json(const Json& j, const DigitSet& d);

Json to_json(const PrimeIdealModel& P);               // {"q", "root", "K", "e", ...}
PrimeIdealModel model_from_json(const Json& j);

Json to_json(const PadicInt& x);                      // {"q", "K", "value": "<decimal>"}
PadicInt padic_from_json(const Json& j);

Json to_json(const Sigma& s);
Json to_json(const CnsVerdict& v);
Json to_json(const BoundConstants& c);
Json to_json(const BoundReport& r);
Json to_json(const NarkiewiczReport& r);
Json to_json(const GapReport& r);
Json to_json(const PersistenceRecord& r);
Json to_json(const CentralBinomialRecord& r);

Json to_json(const CountState& s);
CountState count_state_from_json(const Json& j);

/// Header "N,M_b,ratio,power_checkpoint,prefix_count" then one row per checkpoint.
std::string to_csv(const BoundReport& r);
/// One integer per line.
std::string hits_text(const BoundReport& r);
/// Header "n,base,l,orbit"; the orbit is semicolon-joined.
std::string persistence_csv_header();
std::string to_csv_row(const PersistenceRecord& r);

std::string mode_name(CountMode m);
std::string mode_name(HypothesisMode m);

}  // namespace betadix
