#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamwalk/error.hpp"

namespace hamwalk {

using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Tables are validated on construction
/// through from_table(); groups derived inside the library (quotients,
/// subgroup copies) go through the same storage but skip the cubic
/// associativity scan since they inherit it from their parent.
class Group {
 public:
  Group() = default;

  /// Validates `table` and reindexes so that the identity becomes element 0.
  /// Throws Error{NotAGroup} naming a witness on failure.
  static Group from_table(const std::vector<std::vector<Elem>>& table,
                          std::vector<std::string> labels,
                          std::string name = {});

  /// Builds from a row-major table that is already known to be a group with
  /// identity 0.
  static Group trusted(std::size_t order, std::vector<Elem> table,
                       std::vector<std::string> labels, std::string name);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g^-1 h g
  Elem conj(Elem h, Elem g) const noexcept { return mul(mul(inverse_[g], h), g); }
  Elem pow(Elem a, std::uint64_t k) const;

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  bool is_abelian() const;
  std::vector<std::vector<Elem>> table() const;

  /// Latin-square, identity, inverse and associativity checks. Associativity
  /// is exhaustive up to order 512 and sampled (fixed seed) above.
  /// Returns an empty string when valid, otherwise a description of a witness.
  std::string validate() const;

 private:
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
  std::string name_;

  void fill_inverses();
};

/// A subgroup stored as its sorted member list plus a membership mask over
/// the parent group.
class Subgroup {
 public:
  Subgroup() = default;

  /// `members` must be closed; it is sorted and deduplicated here.
  static Subgroup from_members(std::size_t parent_order, std::vector<Elem> members);
  static Subgroup trivial(std::size_t parent_order);
  static Subgroup whole(std::size_t parent_order);

  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Elem g) const noexcept { return g < mask_.size() && mask_[g]; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == mask_.size(); }
  bool subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

/// Ordered, labeled generating sequence. Labels are unique; elements may
/// repeat (skewed generating sets on quotients routinely collide).
class GenSet {
 public:
  struct Entry {
    std::string label;
    Elem element;
  };

  GenSet() = default;
  explicit GenSet(std::vector<Entry> entries);

  /// Entries named by group labels, in the given order.
  static GenSet from_labels(const Group& g, std::span<const std::string> labels);
  static GenSet from_elements(const Group& g, std::span<const Elem> elements);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::vector<Elem> elements() const;
  std::vector<std::string> labels() const;
  std::optional<std::size_t> find(std::string_view label) const;

  /// Entries at `positions`, in that order.
  GenSet subset(std::span<const std::size_t> positions) const;

 private:
  std::vector<Entry> entries_;
};

/// K/N for N normal in K, where K is a subgroup of some ambient group.
struct QuotientGroup {
  Subgroup base;             // K, inside the ambient group
  Subgroup kernel;           // N, inside the ambient group
  Group group;               // on coset indices; coset 0 is N itself
  std::vector<Elem> project; // ambient element -> coset index (kNone outside K)
  std::vector<Elem> section; // coset index -> minimal ambient representative

  static constexpr Elem kNone = static_cast<Elem>(-1);
};

struct CosetTable {
  std::vector<Elem> coset_of;                // element -> coset index
  std::vector<Elem> representative;          // coset -> minimal member
  std::size_t count() const noexcept { return representative.size(); }
};

struct SylowFactor {
  unsigned prime;
  std::vector<Elem> elements;          // all elements of p-power order
  std::optional<Subgroup> subgroup;    // set when `elements` is closed
};

struct SylowDecomposition {
  std::vector<SylowFactor> factors;    // ascending prime
  bool nilpotent = false;
};

// Arithmetic helpers.
std::vector<unsigned> prime_factors(std::uint64_t n);
/// Returns p when n = p^k with k >= 1, nullopt otherwise.
std::optional<unsigned> prime_power_base(std::uint64_t n);
bool is_prime(std::uint64_t n);

// Construction.
Group group_from_table(const std::vector<std::vector<Elem>>& table,
                       std::vector<std::string> labels, std::string name = {});

/// Breadth-first closure from the identity; element indices follow
/// discovery order. Throws OrderCapExceeded once more than `cap` elements
/// have been found.
Group group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                              std::size_t cap, std::string name = {});

std::string cycle_notation(std::span<const std::uint32_t> perm);

// Kernel operations.
std::uint64_t element_order(const Group& g, Elem x);
Subgroup generated_subgroup(const Group& g, std::span<const Elem> xs);
Subgroup arc_forcing_subgroup(const Group& g, const GenSet& s);
CosetTable right_cosets(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup normal_closure(const Group& g, const Subgroup& h);
Subgroup commutator_subgroup(const Group& g);
/// Whether `n` is normalized by every element of `k`.
bool is_normal_in(const Group& g, const Subgroup& n, const Subgroup& k);
bool generates(const Group& g, std::span<const Elem> xs);
SylowDecomposition sylow_decomposition(const Group& g);
Elem prime_component(const Group& g, Elem x, unsigned p);

/// Quotient of `k` by `n`. Throws NotNormal with a conjugating witness.
QuotientGroup quotient_group(const Group& g, const Subgroup& k, const Subgroup& n);
QuotientGroup quotient_group(const Group& g, const Subgroup& n);
/// `k` relabeled as a group in its own right (quotient by the trivial group).
QuotientGroup subgroup_as_group(const Group& g, const Subgroup& k);

/// Deterministic minimalization: scans entries by ascending element index
/// (ties by position) and drops each entry whose removal keeps generation.
/// The surviving entries keep their original relative order.
GenSet reduce_generating_set(const Group& g, const GenSet& s);

}  // namespace hamwalk
