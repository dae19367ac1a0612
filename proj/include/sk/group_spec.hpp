#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sk/presentation.hpp"

namespace sk {

struct GroupSpec {
  enum class Kind { Trivial, Free, Cyclic, FiniteAbelian, Abelian, Surface, FreeProduct };

  Kind kind = Kind::Trivial;
  std::size_t rank = 0;          // Free, Abelian
  std::vector<mpz_class> chain;  // Cyclic {m}, FiniteAbelian, Abelian
  std::size_t genus = 0;         // Surface
  std::vector<GroupSpec> factors;

  static GroupSpec trivial();
  static GroupSpec free(std::size_t n);
  static GroupSpec cyclic(const mpz_class& m);
  static GroupSpec finite_abelian(std::vector<mpz_class> chain);
  static GroupSpec abelian(std::size_t r, std::vector<mpz_class> chain);
  static GroupSpec surface(std::size_t genus);
  static GroupSpec free_product(std::vector<GroupSpec> factors);

  // Throws UnsupportedSpec on a broken chain, genus 0 or an empty product.
  void validate() const;
  bool operator==(const GroupSpec&) const = default;
};

// trivial | free:n | cyclic:m | finite_abelian:n1,n2,... |
// abelian:r[:(n1,n2,...)] | surface:l | freeprod:(spec;spec;...)
GroupSpec parse_group_spec(const std::string& text);
std::string format_group_spec(const GroupSpec& g);

// Abelianization of the group (free rank and torsion chain).
AbelianInvariants abelian_invariants(const GroupSpec& g);

// Free factors collapse; true for trivial, free and products of those.
bool is_free(const GroupSpec& g);

// True when Z/2 occurs as a free factor (or is the whole group).
bool has_z2_free_factor(const GroupSpec& g);

// The finite part of an abelian spec, as a chain; empty otherwise.
std::vector<mpz_class> finite_chain(const GroupSpec& g);

}  // namespace sk
