// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace helly {

namespace limits {

std::size_t from_env(const char *name, std::size_t fallback)
{
    const char *raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    char *end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw ValidationError(std::string("environment variable ") + name + " is not an unsigned integer");
    return static_cast<std::size_t>(v);
}

std::size_t max_cliques()
{
    return from_env("HELLY_MAX_CLIQUES", 1000000);
}
std::size_t max_forms()
{
    return from_env("HELLY_MAX_FORMS", 200000);
}
std::size_t max_vertices()
{
    return from_env("HELLY_MAX_VERTICES", 8192);
}
std::size_t max_group()
{
    return from_env("HELLY_MAX_GROUP", 10000);
}

} // namespace limits

VertexSet normalized(VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Bits to_bits(const VertexSet &s, std::size_t n)
{
    Bits b(n);
    for (int v : s)
        b.set(static_cast<std::size_t>(v));
    return b;
}

VertexSet from_bits(const Bits &b)
{
    VertexSet out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

bool is_subset(const VertexSet &a, const VertexSet &b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet &a, const VertexSet &b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const VertexSet &s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

} // namespace helly
