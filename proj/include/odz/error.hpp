#pragma once

#include <stdexcept>
#include <string>

namespace odz {

// Base for every error the library raises on bad input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Matrix is not orthogonal over the expected ring.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class RelationError : public Error {
 public:
  using Error::Error;
};

// The top edge of a square would raise the level of its source.
class RetrogradeError : public Error {
 public:
  using Error::Error;
};

// Input falls outside the precondition of a residue lemma.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace odz
