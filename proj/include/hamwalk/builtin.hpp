#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamwalk/group.hpp"

namespace hamwalk::builtin {

Group cyclic(unsigned n);
/// Dihedral group of order `order` (= 2n), elements r^k f^e with f r f = r^-1.
Group dihedral(unsigned order);
/// Generalized quaternion group of order `order` (a power of 2, >= 8).
/// Order 8 uses the labels 1, i, j, k, -1, -i, -j, -k.
Group quaternion(unsigned order);
/// Modular group <a, b | a^(n/2), b^2, b a b = a^(n/4 + 1)> of order n >= 16.
Group modular(unsigned order);
/// Upper unitriangular 3x3 matrices over Z_p.
Group heisenberg(unsigned p);
Group elementary(unsigned p, unsigned k);
/// Symmetric group on n points from the transposition (0 1) and the n-cycle.
Group symmetric(unsigned n, std::size_t cap = 5040);
Group direct_product(const std::vector<Group>& factors);

/// Z_6 |x Z_p with u^-1 t u = t^zeta, zeta the least primitive sixth root of
/// unity mod p. Throws BadPrime unless p is a prime congruent to 1 mod 6.
struct SemidirectFixture {
  Group group;
  Elem a;  // u^3, order 2
  Elem b;  // u^2 t, order 3
};
SemidirectFixture semidirect_fixture(unsigned p, std::size_t cap = 1u << 14);

/// Resolves names such as "cyclic:12", "q8", "dihedral:8", "heisenberg:3",
/// "product:q8,z3", "semidirect:13". A leading "builtin:" is accepted.
Group by_name(std::string_view name, std::size_t cap = 1u << 14);

}  // namespace hamwalk::builtin
