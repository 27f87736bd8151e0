#pragma once

#include "pi/model.hpp"
#include "pi/pi2.hpp"

namespace pi {

// Mappings between the one-type language and the loop-space model. Points
// are trivial on both sides (one type, one base point), so the mappings
// start at level 1.

/// Id and Not go to the two loops; `!` inverts and `;` concatenates.
Loop interp1(const Comb1& p);
/// Reads a loop back as the canonical program of its class.
Comb1 quote1(const Loop& l);

/// The cell between the interpretations of u's endpoints. Throws
/// Error{EndpointMismatch} for ill-formed u and Error{SoundnessViolation} if
/// a well-formed u would relate different loops.
TwoCell interp2(const Comb2& u);
/// `(id2 quote1(source))`.
Comb2 quote2(const TwoCell& c);

/// p <=> quote1(interp1 p), built from canonical(p) after checking that the
/// syntactic and model classifications agree (Error{AgreementViolation}).
Comb2 sound1(const Comb1& p);

/// From a syntactic 2-cell between quoted loops back to model equality.
/// Throws Error{NotQuotedEndpoints} unless both endpoints are `id` or `not`.
TwoCell complete1_sem(const Comb2& u);

/// p <=> q assembled through the model: sound1(p), the quoted cell between
/// interp1 p and interp1 q, then sound1(q) reversed. Throws Error{NoCell}
/// when the interpretations differ.
Comb2 completeness1(const Comb1& p, const Comb1& q);

struct Level3Confirmation {
  Endpoints boundary;
  TwoCell cell;
};

/// Both 3-cells sit over the same 1-level boundary and every 2-combinator
/// involved interprets to the same (unique) model cell. Throws
/// Error{EndpointMismatch} when a and b are not parallel.
Level3Confirmation triviality_level3(const Comb3& a, const Comb3& b);

/// A 3-level datum of the model is an identification of two parallel cells;
/// its quote is always `trunc` between their quotes.
Comb3 quote3(const TwoCell& a, const TwoCell& b);

}  // namespace pi
