#pragma once

#include <confmech/diffop.hpp>
#include <confmech/ladders.hpp>
#include <confmech/numeric.hpp>
#include <confmech/scheme.hpp>
#include <confmech/verify.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace confmech {

using Json = nlohmann::ordered_json;

// Energies and operator polynomials are held internally in the convention of
// the Hamiltonian the input scheme generates; reports convert them to one of
// the two representative operators of the dual pair, L_(+) or L_(-).
enum class Convention { plus, minus };

std::string convention_tag(Convention c);

// canonical "num" / "num/den" token; exact payloads never carry floats
Json rat_json(const Rat& r);
// ascending coefficient tokens, constant term first
Json poly_json(const Poly& p);

// Common report wrapper. scheme_text may be empty (serialized as null) for
// payloads that do not concern a single scheme.
Json make_envelope(const std::string& payload_kind, const std::string& scheme_text,
                   Convention c, Json payload);

// Two-row diagram of a dual pair: upper row walks the levels 0..n_m of the
// positive member, lower row the reflected levels -n_m..-0, filled circle =
// seed. Fill patterns of the rows are complementary by construction.
std::vector<std::string> mirror_diagram(const Scheme& positive, const Scheme& negative);

// The transformed operator with its constant moved to the requested convention.
SchrodingerOp convention_potential(const Scheme& input, Convention c);

Json duality_payload(const Scheme& input);
Json potential_payload(const Scheme& input, Convention c);
Json spectrum_payload(const Scheme& input, Convention c, bool numeric, const GridSpec& grid);
Json ladders_payload(const Scheme& input, Convention c, const std::optional<Rat>& cutoff);
Json singular_payload(const Scheme& input, const Regularity& reg);
Json suite_payload(const SuiteReport& report);

// "x,V" sample table of the potential on [a, b], one row per node
std::string potential_csv(const SchrodingerOp& op, double a, double b, int samples);

}  // namespace confmech
