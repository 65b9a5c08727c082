#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fractal/gf2.hpp"
#include "fractal/linear_code.hpp"

namespace fractal {

/// Nonempty subset of {1..s}, s <= 32, stored as a bit mask (member i is bit i-1).
class MultiIndex {
 public:
  static constexpr std::size_t max_member = 32;

  /// Throws FamilyError when empty or when a member is outside 1..32.
  static MultiIndex of(std::initializer_list<std::size_t> members);
  static MultiIndex of(const std::vector<std::size_t>& members);
  static MultiIndex from_mask(std::uint32_t mask);
  static MultiIndex singleton(std::size_t member) { return of({member}); }
  /// {1..s}
  static MultiIndex full(std::size_t s);
  /// Accepts "{1,2}", "1,2" and the compact digit form "12".
  static MultiIndex parse(std::string_view text);

  std::uint32_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(std::size_t member) const noexcept;
  bool subset_of(const MultiIndex& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  std::size_t largest() const noexcept;
  std::vector<std::size_t> members() const;

  MultiIndex operator|(const MultiIndex& other) const { return from_mask(mask_ | other.mask_); }

  /// Compact "12" when every member is a single digit, otherwise "1,2,10".
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_;
};

using IndexSet = std::set<MultiIndex>;

std::string to_string(const IndexSet& indexes);

struct BasisElement {
  BitVector vector;
  MultiIndex tag;
};

/// Vectors drawn from the union of a family such that the ones lying in each
/// intersection C_alpha span it; each carries tag alpha_v = {i : v in C_i}.
struct FamilyBasis {
  std::vector<BasisElement> elements;
  bool independent = false;

  /// Psi(e): the deduplicated set of tags.
  IndexSet tags() const;
};

struct AcyclicityCheck {
  bool independent_basis = false;
  /// dim(C_1 + ... + C_s) == sum over alpha of (-1)^{|alpha|+1} dim C_alpha
  bool inclusion_exclusion_holds = false;
  long long inclusion_exclusion_value = 0;
  std::size_t sum_dimension = 0;

  bool agree() const noexcept { return independent_basis == inclusion_exclusion_holds; }
};

/// Ordered family C_1..C_s of nonzero codes of one length. Lattice codes are
/// filled on demand and shared between copies; fills are idempotent and
/// guarded, so a family may be queried from several threads.
class CodeFamily {
 public:
  /// Throws FamilyError for an empty sequence, a zero member code, or
  /// s > 32; DimensionMismatch for unequal lengths.
  explicit CodeFamily(std::vector<LinearCode> codes);

  std::size_t size() const noexcept { return codes_.size(); }
  std::size_t length() const noexcept { return codes_.front().length(); }

  /// 1-based, matching the member numbering of multi-indexes.
  const LinearCode& code(std::size_t i) const;
  const std::vector<LinearCode>& codes() const noexcept { return codes_; }

  /// C^alpha; a singleton returns the member itself.
  const LinearCode& sum_code(const MultiIndex& alpha) const;
  /// C_alpha; a singleton returns the member itself.
  const LinearCode& intersection_code(const MultiIndex& alpha) const;

  /// Every nonempty subset of {1..s}, ordered by mask.
  std::vector<MultiIndex> all_indexes() const;

  const FamilyBasis& basis() const;

  CodeFamily reversed() const;
  /// Stable reorder by increasing dimension. Never applied implicitly.
  CodeFamily sorted_by_dimension() const;

 private:
  struct Lattice;

  void check_index(const MultiIndex& alpha) const;

  std::vector<LinearCode> codes_;
  std::shared_ptr<Lattice> lattice_;
};

CodeFamily new_family(std::vector<LinearCode> codes);

const LinearCode& sum_code(const CodeFamily& f, const MultiIndex& alpha);
const LinearCode& intersection_code(const CodeFamily& f, const MultiIndex& alpha);

/// Deepest-first greedy basis: multi-indexes by decreasing cardinality (ties
/// lexicographic); each C_alpha is completed from its canonical generator,
/// then redundant elements are pruned.
FamilyBasis family_basis(const CodeFamily& f);

/// The independence test together with the inclusion-exclusion cross-check.
AcyclicityCheck acyclicity(const CodeFamily& f);
bool is_acyclic(const CodeFamily& f);

/// C_i contained in C_{i+1} for the declared order (equality allowed).
bool is_embedded(const CodeFamily& f);
/// Embedded with at least one equality C_i = C_{i+1}.
bool is_degenerate_chain(const CodeFamily& f);

/// {i : v in C_i}. Throws NotInUnion when v lies in no member.
MultiIndex alpha_of(const CodeFamily& f, const BitVector& v);

/// Unions of one chosen member from each index of psi0.
IndexSet transversals(const IndexSet& psi0);

/// Inclusion-minimal members.
IndexSet minimal_elements(const IndexSet& indexes);

}  // namespace fractal
