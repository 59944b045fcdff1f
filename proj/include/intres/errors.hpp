#pragma once

#include <stdexcept>
#include <string>

namespace intres {

// Malformed input: unreadable files, schema violations, bad flags.  CLI exit 1.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantically invalid data: relation cycles, non-commutative modules,
// non-full subposet embeddings.  CLI exit 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical invariant the engine guarantees was found broken
// (e.g. a computed cover fails its minimality certificate).  CLI exit 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace intres
