#pragma once
// Exception taxonomy for the weightcat library.
//
// Every failure mode that a caller can meaningfully react to gets its own
// type; all inherit from Error so the CLI can map them onto exit codes
// (usage errors vs. I/O errors vs. genuine model incoherence).

#include <stdexcept>
#include <string>

namespace weightcat {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A category description violates its own invariants (bad ranks, fusion
// tables that do not multiply superdimensions correctly, non-involutive
// symmetry data, duals inconsistent with superdimensions, ...).
class IncoherentSpec : public Error {
public:
  explicit IncoherentSpec(const std::string& what) : Error("incoherent model: " + what) {}
};

// A tensor-product computation needs a fusion row that the model does not
// declare.  The library never guesses decompositions.
class FusionIncomplete : public Error {
public:
  explicit FusionIncomplete(const std::string& what) : Error("fusion table incomplete: " + what) {}
};

// Tensoring a morphism with a nonzero nilpotent part requires transport data
// for the bimodule that the model neither declares nor forces (the canonical
// cases: tensoring against the unit, or a transport target space of
// dimension zero).
class MissingTransport : public Error {
public:
  explicit MissingTransport(const std::string& what) : Error("no bimodule transport: " + what) {}
};

// An operation needs dual data (evaluation / coevaluation coefficients) for
// a simple object that has none declared.
class MissingDuals : public Error {
public:
  explicit MissingDuals(const std::string& what) : Error("missing dual data: " + what) {}
};

// lift_idempotent was handed a morphism that is not idempotent modulo the
// nilpotent ideal, so there is nothing to lift.
class NotIdempotentModN : public Error {
public:
  explicit NotIdempotentModN(const std::string& what)
      : Error("not idempotent modulo the nilpotent ideal: " + what) {}
};

// The obstruction analysis requires an endomorphism class inside the
// numerical ideal; anything else has nothing to obstruct.
class FNotNumerical : public Error {
public:
  explicit FNotNumerical(const std::string& what)
      : Error("endomorphism is not numerical: " + what) {}
};

// The scenario runner was asked for a name it does not know.
class UnknownScenario : public Error {
public:
  explicit UnknownScenario(const std::string& what) : Error("unknown scenario: " + what) {}
};

// A scenario declares structural requirements (specific kinds of simples or
// bimodule entries) that the supplied model does not meet.
class UnsupportedModel : public Error {
public:
  explicit UnsupportedModel(const std::string& what)
      : Error("model does not support this scenario: " + what) {}
};

// Malformed input: model files, complex files, object expressions, rational
// literals.
// Filesystem-level failures (missing or unwritable files), as opposed to
// content-level parse failures.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Internal shape violations (matrix dimension mismatches and the like).
// These indicate caller bugs, not user input problems.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error("shape mismatch: " + what) {}
};

}  // namespace weightcat
