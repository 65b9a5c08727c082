#include "fractal/subspace_family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <utility>

#include "fractal/errors.hpp"

namespace fractal {

// ---- MultiIndex -------------------------------------------------------------

MultiIndex MultiIndex::of(std::initializer_list<std::size_t> members) {
  return of(std::vector<std::size_t>(members));
}

MultiIndex MultiIndex::of(const std::vector<std::size_t>& members) {
  std::uint32_t mask = 0;
  for (std::size_t m : members) {
    if (m < 1 || m > max_member) {
      throw FamilyError("multi-index member " + std::to_string(m) + " outside 1.." + std::to_string(max_member));
    }
    mask |= std::uint32_t{1} << (m - 1);
  }
  return from_mask(mask);
}

MultiIndex MultiIndex::from_mask(std::uint32_t mask) {
  if (mask == 0) throw FamilyError("multi-index must be nonempty");
  return MultiIndex(mask);
}

MultiIndex MultiIndex::full(std::size_t s) {
  if (s < 1 || s > max_member) throw FamilyError("family size " + std::to_string(s) + " outside 1..32");
  return from_mask(s == 32 ? UINT32_MAX : (std::uint32_t{1} << s) - 1);
}

MultiIndex MultiIndex::parse(std::string_view text) {
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  std::vector<std::size_t> members;
  const bool separated = text.find(',') != std::string_view::npos;
  std::size_t current = 0;
  bool have_digit = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      if (separated) {
        current = current * 10 + static_cast<std::size_t>(ch - '0');
        have_digit = true;
      } else {
        members.push_back(static_cast<std::size_t>(ch - '0'));
      }
    } else if (ch == ',' && separated) {
      if (!have_digit) throw ParseError("empty member in multi-index");
      members.push_back(current);
      current = 0;
      have_digit = false;
    } else if (ch != ' ') {
      throw ParseError(std::string("illegal character '") + ch + "' in multi-index");
    }
  }
  if (separated) {
    if (!have_digit) throw ParseError("empty member in multi-index");
    members.push_back(current);
  }
  return of(members);
}

std::size_t MultiIndex::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

bool MultiIndex::contains(std::size_t member) const noexcept {
  return member >= 1 && member <= max_member && ((mask_ >> (member - 1)) & 1u);
}

std::size_t MultiIndex::largest() const noexcept {
  return static_cast<std::size_t>(std::bit_width(mask_));
}

std::vector<std::size_t> MultiIndex::members() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  return out;
}

std::string MultiIndex::to_string() const {
  const auto ms = members();
  const bool compact = std::all_of(ms.begin(), ms.end(), [](std::size_t m) { return m < 10; });
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!compact && i != 0) s += ',';
    s += std::to_string(ms[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string to_string(const IndexSet& indexes) {
  std::string s = "{";
  bool first = true;
  for (const auto& alpha : indexes) {
    if (!first) s += ',';
    s += alpha.to_string();
    first = false;
  }
  return s + "}";
}

IndexSet FamilyBasis::tags() const {
  IndexSet out;
  for (const auto& e : elements) out.insert(e.tag);
  return out;
}

// ---- CodeFamily -------------------------------------------------------------

struct CodeFamily::Lattice {
  std::mutex mutex;
  std::map<std::uint32_t, LinearCode> sums;
  std::map<std::uint32_t, LinearCode> intersections;
  std::once_flag basis_once;
  std::optional<FamilyBasis> basis;
};

CodeFamily::CodeFamily(std::vector<LinearCode> codes)
    : codes_(std::move(codes)), lattice_(std::make_shared<Lattice>()) {
  if (codes_.empty()) throw FamilyError("a code family needs at least one code");
  if (codes_.size() > MultiIndex::max_member) {
    throw FamilyError("family size " + std::to_string(codes_.size()) + " exceeds 32");
  }
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (codes_[i].length() != codes_.front().length()) {
      throw DimensionMismatch("family member " + std::to_string(i + 1) + " has length " +
                              std::to_string(codes_[i].length()) + ", expected " +
                              std::to_string(codes_.front().length()));
    }
    if (codes_[i].is_zero()) throw FamilyError("family member " + std::to_string(i + 1) + " is the zero code");
  }
}

const LinearCode& CodeFamily::code(std::size_t i) const {
  if (i < 1 || i > codes_.size()) {
    throw IndexOutOfRange("family member " + std::to_string(i) + " outside 1.." + std::to_string(codes_.size()));
  }
  return codes_[i - 1];
}

void CodeFamily::check_index(const MultiIndex& alpha) const {
  if (alpha.largest() > codes_.size()) {
    throw IndexOutOfRange("multi-index " + alpha.to_string() + " exceeds family size " +
                          std::to_string(codes_.size()));
  }
}

const LinearCode& CodeFamily::sum_code(const MultiIndex& alpha) const {
  check_index(alpha);
  if (alpha.size() == 1) return codes_[alpha.largest() - 1];
  {
    std::lock_guard lock(lattice_->mutex);
    if (auto it = lattice_->sums.find(alpha.mask()); it != lattice_->sums.end()) return it->second;
  }
  const std::size_t top = alpha.largest();
  const auto rest = MultiIndex::from_mask(alpha.mask() & ~(std::uint32_t{1} << (top - 1)));
  LinearCode value = code_sum(sum_code(rest), codes_[top - 1]);
  std::lock_guard lock(lattice_->mutex);
  return lattice_->sums.try_emplace(alpha.mask(), std::move(value)).first->second;
}

const LinearCode& CodeFamily::intersection_code(const MultiIndex& alpha) const {
  check_index(alpha);
  if (alpha.size() == 1) return codes_[alpha.largest() - 1];
  {
    std::lock_guard lock(lattice_->mutex);
    if (auto it = lattice_->intersections.find(alpha.mask()); it != lattice_->intersections.end()) {
      return it->second;
    }
  }
  const std::size_t top = alpha.largest();
  const auto rest = MultiIndex::from_mask(alpha.mask() & ~(std::uint32_t{1} << (top - 1)));
  LinearCode value = code_intersection(intersection_code(rest), codes_[top - 1]);
  std::lock_guard lock(lattice_->mutex);
  return lattice_->intersections.try_emplace(alpha.mask(), std::move(value)).first->second;
}

std::vector<MultiIndex> CodeFamily::all_indexes() const {
  std::vector<MultiIndex> out;
  const std::uint64_t limit = std::uint64_t{1} << codes_.size();
  out.reserve(static_cast<std::size_t>(limit - 1));
  for (std::uint64_t m = 1; m < limit; ++m) out.push_back(MultiIndex::from_mask(static_cast<std::uint32_t>(m)));
  return out;
}

const FamilyBasis& CodeFamily::basis() const {
  std::call_once(lattice_->basis_once, [this] { lattice_->basis = family_basis(*this); });
  return *lattice_->basis;
}

CodeFamily CodeFamily::reversed() const {
  return CodeFamily(std::vector<LinearCode>(codes_.rbegin(), codes_.rend()));
}

CodeFamily CodeFamily::sorted_by_dimension() const {
  auto codes = codes_;
  std::stable_sort(codes.begin(), codes.end(),
                   [](const LinearCode& a, const LinearCode& b) { return a.dimension() < b.dimension(); });
  return CodeFamily(std::move(codes));
}

// ---- operations -------------------------------------------------------------

CodeFamily new_family(std::vector<LinearCode> codes) { return CodeFamily(std::move(codes)); }

const LinearCode& sum_code(const CodeFamily& f, const MultiIndex& alpha) { return f.sum_code(alpha); }

const LinearCode& intersection_code(const CodeFamily& f, const MultiIndex& alpha) {
  return f.intersection_code(alpha);
}

namespace {

// Every nonzero C_alpha is spanned by the selected vectors lying in it.
bool spans_every_intersection(const CodeFamily& f, const std::vector<BasisElement>& elements) {
  for (const auto& alpha : f.all_indexes()) {
    const LinearCode& meet = f.intersection_code(alpha);
    if (meet.is_zero()) continue;
    BitMatrix inside(f.length());
    for (const auto& e : elements) {
      if (alpha.subset_of(e.tag)) inside.append_row(e.vector);
    }
    if (rank(inside) != meet.dimension()) return false;
  }
  return true;
}

}  // namespace

FamilyBasis family_basis(const CodeFamily& f) {
  auto order = f.all_indexes();
  std::sort(order.begin(), order.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });

  FamilyBasis basis;
  for (const auto& alpha : order) {
    const LinearCode& meet = f.intersection_code(alpha);
    if (meet.is_zero()) continue;

    // A vector lies in C_alpha exactly when alpha is inside its tag.
    BitMatrix selected(f.length());
    for (const auto& e : basis.elements) {
      if (alpha.subset_of(e.tag)) selected.append_row(e.vector);
    }
    BitMatrix span = rref(selected).basis;
    for (const auto& row : meet.generator().rows()) {
      if (member(row, span)) continue;
      basis.elements.push_back({row, alpha_of(f, row)});
      span.append_row(row);
      span = rref(span).basis;
    }
  }

  for (std::size_t i = basis.elements.size(); i-- > 0;) {
    auto trial = basis.elements;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (spans_every_intersection(f, trial)) basis.elements = std::move(trial);
  }

  BitMatrix all(f.length());
  for (const auto& e : basis.elements) all.append_row(e.vector);
  basis.independent = rank(all) == basis.elements.size();
  return basis;
}

AcyclicityCheck acyclicity(const CodeFamily& f) {
  AcyclicityCheck check;
  check.independent_basis = f.basis().independent;
  long long total = 0;
  for (const auto& alpha : f.all_indexes()) {
    const auto k = static_cast<long long>(f.intersection_code(alpha).dimension());
    total += (alpha.size() % 2 == 1) ? k : -k;
  }
  check.inclusion_exclusion_value = total;
  check.sum_dimension = f.sum_code(MultiIndex::full(f.size())).dimension();
  check.inclusion_exclusion_holds = total == static_cast<long long>(check.sum_dimension);
  return check;
}

bool is_acyclic(const CodeFamily& f) { return f.basis().independent; }

bool is_embedded(const CodeFamily& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!f.code(i + 1).contains(f.code(i))) return false;
  }
  return true;
}

bool is_degenerate_chain(const CodeFamily& f) {
  if (!is_embedded(f)) return false;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f.code(i).dimension() == f.code(i + 1).dimension()) return true;
  }
  return false;
}

MultiIndex alpha_of(const CodeFamily& f, const BitVector& v) {
  if (v.size() != f.length()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " vs family length " +
                            std::to_string(f.length()));
  }
  if (v.is_zero()) throw NotInUnion("the zero vector has no tag");
  std::uint32_t mask = 0;
  for (std::size_t i = 1; i <= f.size(); ++i) {
    if (f.code(i).contains(v)) mask |= std::uint32_t{1} << (i - 1);
  }
  if (mask == 0) throw NotInUnion("vector " + v.to_string() + " lies in no member code");
  return MultiIndex::from_mask(mask);
}

IndexSet transversals(const IndexSet& psi0) {
  if (psi0.empty()) throw FamilyError("transversals of an empty index set");
  std::set<std::uint32_t> partial{0};
  for (const auto& alpha : psi0) {
    std::set<std::uint32_t> next;
    for (std::uint32_t u : partial) {
      for (std::uint32_t m = alpha.mask(); m != 0; m &= m - 1) next.insert(u | (m & (~m + 1)));
    }
    partial = std::move(next);
  }
  IndexSet out;
  for (std::uint32_t mask : partial) out.insert(MultiIndex::from_mask(mask));
  return out;
}

IndexSet minimal_elements(const IndexSet& indexes) {
  IndexSet out;
  for (const auto& beta : indexes) {
    const bool dominated = std::any_of(indexes.begin(), indexes.end(), [&](const MultiIndex& gamma) {
      return gamma != beta && gamma.subset_of(beta);
    });
    if (!dominated) out.insert(beta);
  }
  return out;
}

}  // namespace fractal
