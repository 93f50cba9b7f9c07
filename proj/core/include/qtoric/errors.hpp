#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

/* Base class for every domain error thrown by the library. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* A candidate point lies on more than dim supporting hyperplanes. */
struct NotSimple : Error {
  explicit NotSimple(const std::string& msg) : Error(msg) {}
};

/* The recession cone of the half-space system is nontrivial. */
struct Unbounded : Error {
  explicit Unbounded(const std::string& msg) : Error(msg) {}
};

/* A half-space touches no vertex, so deleting it changes nothing. */
struct Redundant : Error {
  int facet;
  Redundant(int facet_, const std::string& msg) : Error(msg), facet(facet_) {}
};

/* The intersection of the half-spaces is empty. */
struct Empty : Error {
  explicit Empty(const std::string& msg) : Error(msg) {}
};

struct NotAVertex : Error {
  explicit NotAVertex(const std::string& msg) : Error(msg) {}
};

/* The first dim shifted hyperplanes fail to meet in a single point. */
struct DegenerateCorner : Error {
  explicit DegenerateCorner(const std::string& msg) : Error(msg) {}
};

struct NotNormalForm : Error {
  explicit NotNormalForm(const std::string& msg) : Error(msg) {}
};

struct NotInPolytope : Error {
  explicit NotInPolytope(const std::string& msg) : Error(msg) {}
};

struct NotOnVariety : Error {
  explicit NotOnVariety(const std::string& msg) : Error(msg) {}
};

struct NotUnimodular : Error {
  explicit NotUnimodular(const std::string& msg) : Error(msg) {}
};

/* Both initial vertices of a connected sum carry the same sign. */
struct SignClash : Error {
  explicit SignClash(const std::string& msg) : Error(msg) {}
};

struct DimensionTooLow : Error {
  explicit DimensionTooLow(const std::string& msg) : Error(msg) {}
};

struct WrongDimension : Error {
  explicit WrongDimension(const std::string& msg) : Error(msg) {}
};

struct NoGeometry : Error {
  explicit NoGeometry(const std::string& msg) : Error(msg) {}
};

/* The top graded piece of the quotient ring is not one-dimensional. */
struct TopDegreeNotRankOne : Error {
  explicit TopDegreeNotRankOne(const std::string& msg) : Error(msg) {}
};

struct BadParameters : Error {
  explicit BadParameters(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/* Input exceeds the documented size limits for exact computation. */
struct ScaleLimit : Error {
  explicit ScaleLimit(const std::string& msg) : Error(msg) {}
};

}  // namespace qtoric
