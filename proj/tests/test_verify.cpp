#include <catch2/catch_amalgamated.hpp>

#include <semimorph/verify.hpp>

#include "test_support.hpp"

using namespace semimorph;
using namespace tsup;

namespace {

// Same corruption as in the morph suite: residual too large by one.
struct CorruptMaxPlus {
  using value_type = ExtInt;
  static constexpr std::string_view name = "maxplus-corrupt";
  static constexpr bool add_idempotent = true;
  static constexpr value_type add(value_type a, value_type b) {
    return MaxPlusSemiring::add(a, b);
  }
  static constexpr value_type mul(value_type a, value_type b) {
    return MaxPlusSemiring::mul(a, b);
  }
  static constexpr value_type zero() { return MaxPlusSemiring::zero(); }
  static constexpr value_type one() { return MaxPlusSemiring::one(); }
  static constexpr value_type residual(value_type a, value_type b) {
    value_type r = MaxPlusSemiring::residual(a, b);
    return r.is_finite() ? sat_add(r, ExtInt::finite(1)) : r;
  }
  static std::string format(value_type v) { return MaxPlusSemiring::format(v); }
};

std::vector<std::string> law_names(const std::vector<LawReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(r.law);
  return out;
}

}  // namespace

TEST_CASE("law suites pass on the built-in semirings") {
  for (auto kind : {SemiringKind::boolean, SemiringKind::maxplus,
                    SemiringKind::minmax, SemiringKind::counting}) {
    auto reports = run_laws(kind, 120, 42);
    for (const auto& r : reports) {
      INFO(semiring_name(kind) << " / " << r.law);
      CHECK(r.passed);
      CHECK(r.counterexample.empty());
      CHECK(r.trials == 120);
    }
  }
}

TEST_CASE("suite selection follows semiring capabilities") {
  REQUIRE(law_names(run_laws(SemiringKind::boolean, 5, 1)) ==
          std::vector<std::string>{"adjunction", "associativity", "unit",
                                   "sup_preservation", "duality"});
  REQUIRE(law_names(run_laws(SemiringKind::maxplus, 5, 1)) ==
          std::vector<std::string>{"adjunction", "associativity", "unit",
                                   "sup_preservation"});
  REQUIRE(law_names(run_laws(SemiringKind::counting, 5, 1)) ==
          std::vector<std::string>{"associativity", "unit"});
}

TEST_CASE("reports are deterministic in the seed") {
  auto a = run_laws(SemiringKind::maxplus, 80, 7);
  auto b = run_laws(SemiringKind::maxplus, 80, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].law == b[i].law);
    REQUIRE(a[i].passed == b[i].passed);
    REQUIRE(a[i].counterexample == b[i].counterexample);
  }
}

TEST_CASE("the adjunction suite catches a corrupted residual") {
  auto report = adjunction_law<CorruptMaxPlus>(1000, 42);
  REQUIRE_FALSE(report.passed);
  REQUIRE_FALSE(report.counterexample.empty());
  // the counterexample names the law and carries the failing images
  REQUIRE(report.counterexample.find("adjunction") != std::string::npos);
  REQUIRE(report.counterexample.find("images") != std::string::npos);
}
