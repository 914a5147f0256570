#pragma once

#include <stdexcept>
#include <string>

namespace spinorforge {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input spinor is zero (or below tolerance); the requested operation is undefined.
struct ZeroSpinor : Error {
    explicit ZeroSpinor(const std::string& what) : Error(what) {}
};

/// Covariant zero-pattern matches no classification row at the given tolerance.
struct InconsistentCovariants : Error {
    explicit InconsistentCovariants(const std::string& what) : Error(what) {}
};

/// A quantity that must be real carries an imaginary residue above threshold.
struct ImaginaryResidue : Error {
    explicit ImaginaryResidue(const std::string& what) : Error(what) {}
};

/// Spinor fails the mapping-condition residuals at the given tolerance.
struct NotMappable : Error {
    explicit NotMappable(const std::string& what) : Error(what) {}
};

/// Charge conjugation does not act as +1 or -1 on the assembled spinor.
struct ConjugacyUndetermined : Error {
    explicit ConjugacyUndetermined(const std::string& what) : Error(what) {}
};

/// Immirzi ratio sigma/chi requested with |chi| below tolerance.
struct ImmirziUndefined : Error {
    explicit ImmirziUndefined(const std::string& what) : Error(what) {}
};

/// The dual construction needs the swapped-pair partner at the same momentum.
struct MissingPartner : Error {
    explicit MissingPartner(const std::string& what) : Error(what) {}
};

} // namespace spinorforge
