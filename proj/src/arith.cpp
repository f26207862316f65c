#include "slk/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "slk/table_cache.hpp"

namespace slk::arith {

Integer sigma(long n, unsigned k) {
  if (n <= 0) throw std::invalid_argument("sigma requires n >= 1");
  Integer total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += int_pow(Integer(d), k);
    long e = n / d;
    if (e != d) total += int_pow(Integer(e), k);
  }
  return total;
}

Rational lambda_ell(long n, unsigned ell) {
  if (n <= 0) throw std::invalid_argument("lambda_ell requires n >= 1");
  if (ell == 0) throw std::invalid_argument("lambda_ell requires ell >= 1");
  Integer total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e = n / d;
    total += int_pow(Integer(d), ell);  // min(d, e) = d
    if (e != d) total += int_pow(Integer(d), ell);  // min(e, d) = d again
  }
  return frac(total, 2);
}

int kronecker12(long n) {
  long r = n % 12;
  if (r < 0) r += 12;
  switch (r) {
    case 1:
    case 11:
      return 1;
    case 5:
    case 7:
      return -1;
    default:
      return 0;
  }
}

Rational hurwitz(long n) {
  if (n < 0) throw std::invalid_argument("hurwitz requires n >= 0");
  if (n == 0) return Rational(-1, 12);
  long r = n % 4;
  if (r == 1 || r == 2) return Rational(0);
  // Reduced forms (a,b,c), b^2 - 4ac = -n, with -a < b <= a <= c and b >= 0
  // when a = c.  Solving 4ac = n + b^2 bounds a by 3a^2 <= n.
  Rational total(0);
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long m = n + b * b;
      if (m % (4 * a) != 0) continue;
      long c = m / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (a == b && b == c)
        total += Rational(1, 3);
      else if (b == 0 && a == c)
        total += Rational(1, 2);
      else
        total += 1;
    }
  }
  return total;
}

HurwitzTable HurwitzTable::build_uncached(long max_n) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(max_n) + 1);
  for (long n = 0; n <= max_n; ++n) values.push_back(hurwitz(n));
  return HurwitzTable(max_n, std::move(values));
}

HurwitzTable HurwitzTable::build(long max_n) {
  if (auto cached = TableCache::load("hurwitz", max_n)) return HurwitzTable(max_n, std::move(*cached));
  HurwitzTable table = build_uncached(max_n);
  TableCache::store("hurwitz", max_n, table.values_);
  return table;
}

const Rational& HurwitzTable::value(long n) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("Hurwitz table index out of range");
  return values_[static_cast<std::size_t>(n)];
}

namespace {

std::vector<Integer>& partition_cache() {
  static std::vector<Integer> cache{Integer(1)};  // p(0) = 1
  return cache;
}
std::mutex partition_mutex;

}  // namespace

Integer partition_p(long n) {
  if (n < 0) throw std::invalid_argument("partition_p requires n >= 0");
  std::lock_guard<std::mutex> lock(partition_mutex);
  auto& cache = partition_cache();
  while (static_cast<long>(cache.size()) <= n) {
    long m = static_cast<long>(cache.size());
    Integer value = 0;
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Integer term = 0;
      if (g1 <= m) term += cache[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += cache[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1)
        value += term;
      else
        value -= term;
    }
    cache.push_back(value);
  }
  return cache[static_cast<std::size_t>(n)];
}

Integer spt(long n) {
  if (n <= 0) throw std::invalid_argument("spt requires n >= 1");
  std::size_t size = static_cast<std::size_t>(n) + 1;

  // Partition generating series prod_{m>=1} 1/(1-q^m) up to q^n.
  std::vector<Integer> running(size, Integer(0));
  running[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long s = part; s <= n; ++s)
      running[static_cast<std::size_t>(s)] += running[static_cast<std::size_t>(s - part)];

  std::vector<Integer> result(size, Integer(0));
  for (long k = 1; k <= n; ++k) {
    // running becomes prod_{m>k} 1/(1-q^m) after multiplying by (1-q^k)
    for (long i = n; i >= k; --i)
      running[static_cast<std::size_t>(i)] -= running[static_cast<std::size_t>(i - k)];
    // add q^k/(1-q^k)^2 * running = sum_{j>=1} j q^{jk} * running
    for (long j = 1; j * k <= n; ++j)
      for (long i = j * k; i <= n; ++i)
        result[static_cast<std::size_t>(i)] += Integer(j) * running[static_cast<std::size_t>(i - j * k)];
  }
  return result[static_cast<std::size_t>(n)];
}

namespace oracle {

Rational hurwitz_enumeration(long n) {
  if (n < 0) throw std::invalid_argument("hurwitz requires n >= 0");
  if (n == 0) return Rational(-1, 12);
  Rational total(0);
  for (long a = 1; 3 * a * a <= n; ++a) {
    long c_max = (n + a * a) / (4 * a);
    for (long b = -a + 1; b <= a; ++b) {
      for (long c = a; c <= c_max; ++c) {
        if (b * b - 4 * a * c != -n) continue;
        if (a == c && b < 0) continue;
        if (a == b && b == c)
          total += Rational(1, 3);
        else if (b == 0 && a == c)
          total += Rational(1, 2);
        else
          total += 1;
      }
    }
  }
  return total;
}

Integer partition_dp(long n) {
  if (n < 0) throw std::invalid_argument("partition_dp requires n >= 0");
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, Integer(0));
  ways[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long s = part; s <= n; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

namespace {

void walk_partitions(long remaining, long max_part, long last_part, long run, Integer& total) {
  if (remaining == 0) {
    total += run;  // run = multiplicity of the smallest (= last chosen) part
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p)
    walk_partitions(remaining - p, p, p, p == last_part ? run + 1 : 1, total);
}

}  // namespace

Integer spt_enumeration(long n) {
  if (n <= 0) throw std::invalid_argument("spt requires n >= 1");
  Integer total = 0;
  walk_partitions(n, n, 0, 0, total);
  return total;
}

int kronecker_symbol(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int t = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) t = -t;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    long am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) t = -t;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace oracle

}  // namespace slk::arith
