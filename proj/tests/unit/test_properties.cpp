#include <doctest.h>

#include "properties.hpp"

namespace {

void require_clean(const property::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.trials >= 200);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("property: modular law for subspace dimensions") { require_clean(property::run(300, 101, property::modular_dimension)); }
TEST_CASE("property: intersection of tensor products") { require_clean(property::run(300, 102, property::tensor_intersection)); }
TEST_CASE("property: inclusion-exclusion on acyclic families") { require_clean(property::run(300, 103, property::inclusion_exclusion)); }
TEST_CASE("property: product families stay acyclic") { require_clean(property::run(300, 104, property::product_family_acyclic)); }
TEST_CASE("property: bounds sandwich the exact distance") { require_clean(property::run(300, 105, property::sandwich)); }
TEST_CASE("property: embedded times acyclic has equal bounds") { require_clean(property::run(300, 106, property::embedded_equality)); }
TEST_CASE("property: upper-bound witness") { require_clean(property::run(300, 107, property::witness)); }
