#pragma once
// Error taxonomy. The CLI maps these onto distinct exit codes
// (parse = 2, range = 3, data = 4), so throw the narrowest type that fits.

#include <stdexcept>
#include <string>

namespace catcomp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed structure text: wrong token length, non-binary characters,
// duplicate tokens, empty or full category.
class ParseError : public Error {
public:
    using Error::Error;
};

// Argument outside its domain: dims, p, n, alpha, epsilon, probabilities,
// or misuse such as mismatched vector lengths.
class RangeError : public Error {
public:
    using Error::Error;
};

// Problems with user-supplied data files: missing file, bad header,
// unparseable rows, out-of-range rates, duplicate structures.
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace catcomp
