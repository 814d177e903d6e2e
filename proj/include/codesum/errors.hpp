#pragma once

#include <stdexcept>
#include <string>

namespace codesum {

// Buckets map to CLI exit codes: Validation -> 1, Environment -> 2.
enum class ErrorKind { Validation, Environment };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define CODESUM_DEFINE_ERROR(Name, Kind)                                     \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& message)                            \
            : Error(ErrorKind::Kind, std::string(#Name) + ": " + message) {} \
    }

// ingest
CODESUM_DEFINE_ERROR(MalformedLine, Validation);
CODESUM_DEFINE_ERROR(BadUrl, Validation);
CODESUM_DEFINE_ERROR(BadConfig, Validation);

// provenance
CODESUM_DEFINE_ERROR(GitUnavailable, Environment);
CODESUM_DEFINE_ERROR(RepoMissing, Environment);
CODESUM_DEFINE_ERROR(CommitMissing, Validation);
CODESUM_DEFINE_ERROR(RangeOutOfFile, Validation);
CODESUM_DEFINE_ERROR(EmptyInput, Validation);

// corpus
CODESUM_DEFINE_ERROR(MissingTimestamp, Validation);
CODESUM_DEFINE_ERROR(TooFewSamples, Validation);
CODESUM_DEFINE_ERROR(DegenerateSplit, Validation);
CODESUM_DEFINE_ERROR(KTooLarge, Validation);

// identlex
CODESUM_DEFINE_ERROR(UnknownLanguage, Validation);
CODESUM_DEFINE_ERROR(BothEmpty, Validation);

// noisegen
CODESUM_DEFINE_ERROR(TooShort, Validation);

// metrics
CODESUM_DEFINE_ERROR(EmptyReference, Validation);
CODESUM_DEFINE_ERROR(EmptyCorpus, Validation);
CODESUM_DEFINE_ERROR(LengthMismatch, Validation);
CODESUM_DEFINE_ERROR(TooFewPairs, Validation);

// analytics
CODESUM_DEFINE_ERROR(NonPositiveInput, Validation);

#undef CODESUM_DEFINE_ERROR

}  // namespace codesum
