#pragma once

#include <stdexcept>
#include <string>

namespace qfuse {

// Domain failure inside an evidence operation (degenerate body, complete
// conflict, undistributable hesitancy, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document. Carries the location when one is known.
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed input that breaks a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A pipeline stage failed on a specific evidence.
class StageError : public Error {
public:
    StageError(std::string stage, std::string evidence_id, const std::string& what)
        : Error(stage + " stage failed on evidence '" + evidence_id + "': " + what),
          stage_(std::move(stage)),
          evidence_id_(std::move(evidence_id)) {}

    const std::string& stage() const { return stage_; }
    const std::string& evidence_id() const { return evidence_id_; }

private:
    std::string stage_;
    std::string evidence_id_;
};

}  // namespace qfuse
