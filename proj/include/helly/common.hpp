// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_COMMON_HPP
#define HELLY_COMMON_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace helly {

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A configurable size cap was exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A hypothesis such as "the graph is Helly" turned out to be false mid-computation.
class PreconditionError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A statement that must hold by theory was falsified.
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

namespace limits {

/// Reads an unsigned cap from the environment, falling back to `fallback`.
std::size_t from_env(const char *name, std::size_t fallback);

std::size_t max_cliques();  // HELLY_MAX_CLIQUES, default 1e6
std::size_t max_forms();    // HELLY_MAX_FORMS, default 2e5
std::size_t max_vertices(); // HELLY_MAX_VERTICES, default 8192
std::size_t max_group();    // HELLY_MAX_GROUP, default 1e4

} // namespace limits

/// Returns a sorted copy without duplicates.
VertexSet normalized(VertexSet s);

Bits to_bits(const VertexSet &s, std::size_t n);
VertexSet from_bits(const Bits &b);

bool is_subset(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
VertexSet set_union(const VertexSet &a, const VertexSet &b);

std::string to_string(const VertexSet &s);

} // namespace helly

#endif
