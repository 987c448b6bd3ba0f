#include <doctest.h>

#include <json.hpp>
#include <numeric>

#include "meandiv/errors.hpp"
#include "meandiv/oracle.hpp"
#include "meandiv/serialize.hpp"
#include "meandiv/step_function.hpp"
#include "meandiv/witness.hpp"

using namespace meandiv;

namespace {

std::int64_t direct_partial_sum(const Params& params, std::int64_t k,
                                std::int64_t p, std::int64_t t) {
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= t; ++n) {
    sum += f_value_i64(params, (k * n) % p, p) - f_value_i64(params, n % p, p);
  }
  return sum;
}

}  // namespace

TEST_CASE("residue-class sum basics") {
  auto p22 = Params::of({2, 2});
  const std::int64_t kL = 2 * p22.L;  // 8
  CHECK(discrete_sum(p22, 2, 1) == 0);
  CHECK(discrete_sum(p22, 2, 1 + kL) == 0);
  CHECK(discrete_sum(p22, 2, 3) == -1);
  CHECK_THROWS_AS(discrete_sum(p22, 2, 2), NotCoprime);
  CHECK_THROWS_AS(discrete_sum(p22, 2, 6), NotCoprime);
  CHECK(integer_part_sum(p22, 2, 3) == 1);
}

TEST_CASE("residue-class sum periodicity and antisymmetry") {
  struct Case {
    Params params;
    std::int64_t k;
  } cases[] = {{Params::of({2, 2}), 2},
               {Params::of({2, 4, 6}), 3},
               {Params::of({3, 3}), 2},
               {Params::of({2, 3}), 2},
               {Params::of({4, 6}), 2}};
  for (const auto& c : cases) {
    const std::int64_t kL = c.k * c.params.L;
    for (std::int64_t r = 1; r < kL; ++r) {
      if (std::gcd(r, kL) != 1) continue;
      std::int64_t v = discrete_sum(c.params, c.k, r);
      CHECK(discrete_sum(c.params, c.k, r + kL) == v);
      CHECK(discrete_sum(c.params, c.k, r + 7 * kL) == v);
      CHECK(discrete_sum(c.params, c.k, kL - r) == -v);
      CHECK(integer_part_sum(c.params, c.k, r) == -v);
    }
  }
}

TEST_CASE("a negative residue class exists when the gcd exceeds 1") {
  for (const auto& [ms, k] :
       std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
           {{2, 2}, 2}, {{2, 4, 6}, 2}, {{3, 3}, 2}, {{2, 4}, 3}}) {
    Params p = Params::of(ms);
    const std::int64_t kL = k * p.L;
    bool found = false;
    for (std::int64_t r = 1; r < kL && !found; ++r) {
      if (std::gcd(r, kL) != 1) continue;
      found = discrete_sum(p, k, r) < 0;
    }
    CHECK(found);
  }
}

TEST_CASE("floor functional for the msum = lcm case") {
  auto p123 = Params::of({1, 2, 3});
  REQUIRE(p123.msum == p123.lprime);
  CHECK(modular_floor_sum(p123, 2, 1) == 0);

  // the paired-prime comparison drives the gcd > 1 argument: for (2,4,6),
  // q = 2 divides msum/g = 6 and q^2 divides k*msum = 24, so the pair
  // brackets k*msum/q = 12
  auto p246 = Params::of({2, 4, 6});
  REQUIRE(p246.msum == p246.lprime);
  CHECK(modular_floor_sum(p246, 2, 1) == 0);
  std::int64_t diff = modular_floor_sum(p246, 2, 13) -
                      modular_floor_sum(p246, 2, 11);
  CHECK(diff < 0);
  // closed form: -sum over {i : q | msum/m_i} of
  // (m_i/g) * ((k-1)((lcm(k,q)+1)(q-1)+1) - lcm(k,q) + q) / (q lcm(k,q))
  // = -(1 + 3) here
  CHECK(diff == -4);

  // a second gcd > 1 tuple with msum = lcm: (4,6,6,8), q = 2, pair (23,25)
  auto p4668 = Params::of({4, 6, 6, 8});
  REQUIRE(p4668.msum == p4668.lprime);
  CHECK(modular_floor_sum(p4668, 2, 25) - modular_floor_sum(p4668, 2, 23) <
        0);

  CHECK_THROWS_AS(modular_floor_sum(Params::of({2, 3}), 2, 1),
                  PreconditionViolated);
  CHECK_THROWS_AS(modular_floor_sum(p123, 2, 6), NotCoprime);
}

TEST_CASE("witness for (2,2) with doubled indices") {
  auto report = find_witness(Params::of({2, 2}), 2);
  CHECK(report.kL == 8);
  CHECK(report.residue == 3);
  CHECK(report.prime == 19);
  CHECK(report.t == 9);
  CHECK(report.valuation == -1);
  CHECK(report.discrete_value == -1);
  CHECK(report.prime % report.kL == report.residue);

  // the oracle agrees through the actual reduced fraction as well
  CHECK(ratio_at(report.params, report.k, report.t).den % report.prime == 0);
}

TEST_CASE("witness thresholds and the riemann-sum link") {
  for (const auto& [ms, k] :
       std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
           {{2, 2}, 2}, {{2, 4, 6}, 3}, {{3, 3}, 2}, {{4, 6}, 2}}) {
    Params params = Params::of(ms);
    auto report = find_witness(params, k);
    CHECK(std::gcd(report.residue, report.kL) == 1);
    CHECK(report.prime % report.kL == report.residue);
    CHECK(report.t == report.prime / params.g);
    CHECK(report.valuation < 0);
    CHECK(report.valuation == report.discrete_value);
    CHECK(report.prime > k * k * params.msum);
    CHECK(Rat(report.prime) * min_breakpoint_gap(params, k) > 1);

    // partial sums of f at mesh 1/p reproduce the residue-class sum
    CHECK(direct_partial_sum(params, k, report.prime, report.t) ==
          report.discrete_value);
  }
}

TEST_CASE("witness preconditions") {
  CHECK_THROWS_AS(find_witness(Params::of({2, 3}), 2),
                  AlmostMeanDivisibleRegime);
  CHECK_THROWS_AS(find_witness(Params::of({2, 2}), 1), PreconditionViolated);
  CHECK_THROWS_AS(find_witness(Params::of({4}), 2), DegenerateParameters);
}

TEST_CASE("prime cap reports the residue") {
  try {
    find_witness(Params::of({2, 2}), 2, 17);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.residue == 3);
  }
}

TEST_CASE("witness report serialization") {
  auto report = find_witness(Params::of({2, 2}), 2);
  auto parsed = nlohmann::json::parse(witness_report_json(report).dump());
  CHECK(parsed["params"] == nlohmann::json({2, 2}));
  CHECK(parsed["k"] == 2);
  CHECK(parsed["kL"] == 8);
  CHECK(parsed["residue"] == 3);
  CHECK(parsed["prime"] == 19);
  CHECK(parsed["t"] == 9);
  CHECK(parsed["valuation"] == -1);
  CHECK(parsed["discrete_value"] == -1);
}
