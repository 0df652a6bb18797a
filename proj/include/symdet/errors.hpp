#ifndef SYMDET_ERRORS_HPP
#define SYMDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symdet {

/** Invalid input outside an operation's domain (bad n, t, d, k, ...). */
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/** Matrix/vector shape mismatch. */
class DimensionError : public DomainError {
public:
    explicit DimensionError(const std::string& what) : DomainError(what) {}
};

/** Linearly dependent set passed where a basis is required. */
class InvalidBasisError : public DomainError {
public:
    explicit InvalidBasisError(const std::string& what) : DomainError(what) {}
};

/** Requested exhaustive search exceeds the configured budget. */
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/** A vector expected to be integral in a face lattice basis was not. */
class LatticeError : public std::logic_error {
public:
    explicit LatticeError(const std::string& what) : std::logic_error(what) {}
};

/** An identity that must hold between independent computation paths failed. */
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace symdet

#endif
