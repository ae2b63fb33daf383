#pragma once

// Structured report documents. Keys keep insertion order, rationals are exact strings
// and polynomials use the parser's grammar, so a document reads back without loss.

#include "hypersect/conditions.hpp"
#include "hypersect/projection.hpp"
#include "hypersect/synthesizer.hpp"

#include <json.hpp>

namespace hypersect {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const MultiPoly& p);
Json to_json(const UniPoly& p);
Json to_json(const Hypersurface& H);
Json to_json(const FinitenessCertificate& c);
Json to_json(const DiscriminantCurve& c);
Json to_json(const CountSample& s);
Json to_json(const Condition1Result& r);
Json to_json(const Condition2Result& r);
Json to_json(const Condition3Result& r);
Json to_json(const PencilSearch& s);
Json to_json(const ConditionReport& r);
Json to_json(const Substitution& s);
Json to_json(const DegreeSchedule& d);
Json to_json(const Witness& w);
Json to_json(const WitnessCheck& c);
Json to_json(const SynthesisResult& r);
Json to_json(const SliceDiagnostic& d);

/// Two-space indentation and a trailing newline.
std::string render(const Json& document);

}  // namespace hypersect
