#pragma once

#include <string>

#include "dgr/digraph.hpp"

namespace dgr {

inline constexpr int kCanonicalCeiling = 8;

// Byte string: the order, then the lexicographically smallest off-diagonal
// adjacency bitstring over all n! relabelings, packed big-endian into 8
// bytes. Equal iff the digraphs are isomorphic. Order <= 8.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Digraph& d);
std::string to_hex(const CanonicalForm& form);
bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace dgr
