#include "dgr/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "dgr/errors.hpp"

namespace dgr {

CanonicalForm canonical_form(const Digraph& d) {
  const int n = d.order();
  if (n > kCanonicalCeiling) {
    throw InvalidInput("canonical form is limited to order " + std::to_string(kCanonicalCeiling));
  }
  // perm[i] is the original vertex placed at position i. The first cell is
  // the most significant bit, so integer order is bitstring order.
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t row = d.out_mask(perm[i]);
      for (int j = 0; j < n; ++j) {
        if (i != j) code = (code << 1) | ((row >> perm[j]) & 1U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalForm form(9, '\0');
  form[0] = static_cast<char>(n);
  for (int b = 0; b < 8; ++b) form[1 + b] = static_cast<char>((best >> (8 * (7 - b))) & 0xFF);
  return form;
}

std::string to_hex(const CanonicalForm& form) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * form.size());
  for (unsigned char c : form) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dgr
