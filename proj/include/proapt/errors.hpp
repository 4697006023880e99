#pragma once

#include <stdexcept>
#include <string>

namespace proapt {

// Dimension mismatches between tensors/vectors. Message names both shapes.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values / violated preconditions.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column-role schema problems (missing column, bad role name).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config file problems (unknown keys, unparsable values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint format problems; message names the failure offset.
struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem / stream failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A label not present in the vocabulary.
struct EncodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace proapt
