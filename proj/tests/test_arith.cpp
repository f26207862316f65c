#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "slk/arith.hpp"
#include "slk/table_cache.hpp"

using namespace slk;
using namespace slk::arith;

TEST_CASE("sigma") {
  CHECK(sigma(1, 0) == 1);
  CHECK(sigma(1, 7) == 1);
  CHECK(sigma(6, 1) == 12);
  CHECK(sigma(4, 3) == 73);
  CHECK_THROWS_AS(sigma(0, 1), std::invalid_argument);
}

TEST_CASE("lambda_ell") {
  CHECK(lambda_ell(1, 1) == frac(1, 2));
  CHECK(lambda_ell(1, 5) == frac(1, 2));
  CHECK(lambda_ell(6, 3) == 9);
  CHECK(lambda_ell(9, 3) == frac(29, 2));
  CHECK_THROWS_AS(lambda_ell(0, 3), std::invalid_argument);
  // lambda_ell(p) = 1 for primes: both divisors have min 1
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                 79, 83, 89, 97})
    for (unsigned ell : {1u, 3u, 5u}) CHECK(lambda_ell(p, ell) == 1);
}

TEST_CASE("kronecker12") {
  CHECK(kronecker12(1) == 1);
  CHECK(kronecker12(5) == -1);
  CHECK(kronecker12(6) == 0);
  CHECK(kronecker12(11) == 1);
  CHECK(kronecker12(-1) == 1);
  // periodicity and agreement with the generic Kronecker symbol
  for (long n = -60; n <= 60; ++n) {
    CHECK(kronecker12(n) == kronecker12(n + 12));
    CHECK(kronecker12(n) == oracle::kronecker_symbol(12, n));
  }
  // complete multiplicativity away from 12
  for (long a = 1; a < 40; ++a)
    for (long b = 1; b < 40; ++b)
      if (std::gcd(a * b, 12L) == 1) CHECK(kronecker12(a * b) == kronecker12(a) * kronecker12(b));
}

TEST_CASE("hurwitz small values") {
  CHECK(hurwitz(0) == frac(-1, 12));
  CHECK(hurwitz(1) == 0);
  CHECK(hurwitz(2) == 0);
  CHECK(hurwitz(3) == frac(1, 3));
  CHECK(hurwitz(4) == frac(1, 2));
  CHECK(hurwitz(23) == 3);
  CHECK_THROWS_AS(hurwitz(-1), std::invalid_argument);
}

TEST_CASE("hurwitz against enumeration oracle") {
  for (long n = 0; n <= 400; ++n) {
    Rational h = hurwitz(n);
    CHECK(h == oracle::hurwitz_enumeration(n));
    CHECK(is_integer(12 * h));
  }
}

TEST_CASE("partition function") {
  CHECK(partition_p(0) == 1);
  CHECK(partition_p(5) == 7);
  CHECK(partition_p(20) == 627);
  CHECK(partition_p(100) == Integer("190569292"));
  CHECK(partition_p(500) == Integer("2300165032574323995027"));
  for (long n = 0; n <= 120; ++n) CHECK(partition_p(n) == oracle::partition_dp(n));
  CHECK_THROWS_AS(partition_p(-1), std::invalid_argument);
}

TEST_CASE("spt") {
  CHECK(spt(1) == 1);
  CHECK(spt(4) == 10);
  CHECK(spt(5) == 14);
  for (long n = 1; n <= 30; ++n) CHECK(spt(n) == oracle::spt_enumeration(n));
  CHECK_THROWS_AS(spt(0), std::invalid_argument);
}

TEST_CASE("table cache round trip is bit-identical") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("slk-test-cache-" + std::to_string(::getpid()));
  setenv("SLK_CACHE_DIR", dir.c_str(), 1);

  HurwitzTable cold = HurwitzTable::build(50);
  HurwitzTable warm = HurwitzTable::build(50);
  REQUIRE(cold.max_n() == warm.max_n());
  for (long n = 0; n <= 50; ++n) CHECK(cold.value(n) == warm.value(n));

  std::string rendered = TableCache::render("hurwitz", 50, cold.values());
  std::ifstream in(dir / "hurwitz-50.tbl", std::ios::binary);
  REQUIRE(in.good());
  std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(on_disk == rendered);
  CHECK(on_disk.substr(0, 34) == "selberg-lift-kit-table v1 hurwitz ");

  // a corrupt cache is ignored, not trusted
  {
    std::ofstream bad(dir / "hurwitz-50.tbl", std::ios::binary | std::ios::trunc);
    bad << "selberg-lift-kit-table v1 hurwitz 50\n0,9999,1\n";
  }
  CHECK(!TableCache::load("hurwitz", 50).has_value());

  std::filesystem::remove_all(dir);
  unsetenv("SLK_CACHE_DIR");
}
