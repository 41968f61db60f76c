#include "reflectq/kmat/oracle.hpp"

#include <cstdint>
#include <mutex>

#include "reflectq/kmat/kmatrix.hpp"

namespace reflectq::kmat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const mpz_class& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

// i-th prime above 2^61; sums of two residues stay below 2^64.
u64 nth_prime(int i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  while (static_cast<int>(primes.size()) <= i) {
    mpz_class start = primes.empty() ? mpz_class(1) << 61 : mpz_class(static_cast<unsigned long>(primes.back()));
    mpz_class next;
    mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
    primes.push_back(next.get_ui());
  }
  return primes[static_cast<std::size_t>(i)];
}

struct IntRow {
  std::vector<std::pair<int, mpz_class>> entries;
};

struct ModSolve {
  int rank = 0;
  std::vector<int> pivot_sources;  // input rows that carried a pivot
  std::vector<u64> kernel;         // normalized kernel vector when the nullity is 1
};

ModSolve solve_mod(const std::vector<IntRow>& rows, const std::vector<int>& use, int unknowns, int norm_index,
                   u64 p) {
  std::vector<std::vector<u64>> piv_rows;
  std::vector<int> piv_col;
  ModSolve out;
  std::vector<u64> row(static_cast<std::size_t>(unknowns));
  for (int src : use) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [c, v] : rows[static_cast<std::size_t>(src)].entries) {
      auto& slot = row[static_cast<std::size_t>(c)];
      slot = (slot + reduce(v, p)) % p;
    }
    for (std::size_t k = 0; k < piv_rows.size(); ++k) {
      u64 c = row[static_cast<std::size_t>(piv_col[k])];
      if (!c) continue;
      u64 f = p - c;
      const auto& pr = piv_rows[k];
      for (int j = 0; j < unknowns; ++j) {
        if (pr[static_cast<std::size_t>(j)]) row[static_cast<std::size_t>(j)] = (row[static_cast<std::size_t>(j)] + mulmod(f, pr[static_cast<std::size_t>(j)], p)) % p;
      }
    }
    int lead = -1;
    for (int j = 0; j < unknowns; ++j) {
      if (row[static_cast<std::size_t>(j)]) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    u64 inv = invmod(row[static_cast<std::size_t>(lead)], p);
    for (auto& v : row) v = mulmod(v, inv, p);
    piv_rows.push_back(row);
    piv_col.push_back(lead);
    out.pivot_sources.push_back(src);
  }
  out.rank = static_cast<int>(piv_rows.size());
  if (unknowns - out.rank != 1) return out;
  std::vector<char> is_pivot(static_cast<std::size_t>(unknowns), 0);
  for (int c : piv_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  int free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
  std::vector<u64> x(static_cast<std::size_t>(unknowns), 0);
  x[static_cast<std::size_t>(free_col)] = 1;
  // Row k is zero on the pivot columns of rows before it, so solve backwards.
  for (std::size_t k = piv_rows.size(); k-- > 0;) {
    u64 s = 0;
    const auto& pr = piv_rows[k];
    for (int j = 0; j < unknowns; ++j) {
      if (j != piv_col[k] && pr[static_cast<std::size_t>(j)] && x[static_cast<std::size_t>(j)]) {
        s = (s + mulmod(pr[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)], p)) % p;
      }
    }
    x[static_cast<std::size_t>(piv_col[k])] = (p - s) % p;
  }
  u64 norm = x[static_cast<std::size_t>(norm_index)];
  if (!norm) return out;
  u64 inv = invmod(norm, p);
  for (auto& v : x) v = mulmod(v, inv, p);
  out.kernel = std::move(x);
  return out;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class qt = r0 / r1;
    mpz_class r2 = r0 - qt * r1;
    mpz_class t2 = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  mpq_class v(r1, t1);
  v.canonicalize();
  return v;
}

}  // namespace

OracleResult intertwiner_oracle(int n, int l, const mpq_class& q0, const mpq_class& z0) {
  if (q0 == 0 || q0 == 1 || q0 == -1 || z0 == 0) throw Error("oracle point must avoid q = 0, +-1 and z = 0");
  const auto basis = weights::enumerate_B(n, l);
  const int nb = static_cast<int>(basis.size());
  std::map<Composition, int> pos;
  for (int i = 0; i < nb; ++i) pos[basis[static_cast<std::size_t>(i)]] = i;
  auto index = [&](const Composition& a, const Composition& g) { return pos.at(a) * nb + pos.at(g); };
  const int unknowns = nb * nb;

  alg::Point at{};
  at[static_cast<std::size_t>(alg::index_of(alg::Var::q))] = q0;
  at[static_cast<std::size_t>(alg::index_of(alg::Var::z))] = z0;

  std::vector<IntRow> rows;
  std::vector<std::vector<std::pair<int, mpq_class>>> exact_rows;
  for (int i = 0; i < n; ++i) {
    for (const auto& a : basis) {
      for (const auto& g : basis) {
        std::vector<std::pair<int, mpq_class>> er;
        for (const auto& t : intertwining_relation(i, a, g)) {
          mpq_class v = t.coeff.evaluate(at);
          if (v != 0) er.emplace_back(index(t.a, t.g), v);
        }
        if (er.empty()) continue;
        mpz_class den = 1;
        for (const auto& [c, v] : er) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        IntRow ir;
        for (const auto& [c, v] : er) ir.entries.emplace_back(c, mpz_class(v * den));
        rows.push_back(std::move(ir));
        exact_rows.push_back(std::move(er));
      }
    }
  }

  const Composition top = weights::scaled_unit(n, 1, l);
  const int norm_index = index(top, top);
  std::vector<int> use(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) use[r] = static_cast<int>(r);

  // The rank over Q is at least the rank mod p, so a one-dimensional kernel
  // mod p plus an exact nonzero solution pins the nullity over Q to 1.
  ModSolve first;
  int prime = 0;
  for (; prime < 3; ++prime) {
    first = solve_mod(rows, use, unknowns, norm_index, nth_prime(prime));
    if (!first.kernel.empty()) break;
  }
  if (first.kernel.empty()) {
    throw Error("intertwining relations at this point do not have a one-dimensional solution space");
  }
  const int rank = first.rank;
  use = first.pivot_sources;

  std::vector<mpz_class> residues(static_cast<std::size_t>(unknowns));
  for (int j = 0; j < unknowns; ++j) residues[static_cast<std::size_t>(j)] = mpz_class(static_cast<unsigned long>(first.kernel[static_cast<std::size_t>(j)]));
  mpz_class modulus(static_cast<unsigned long>(nth_prime(prime)));

  for (int round = 0; round < 400; ++round) {
    std::vector<mpq_class> x(static_cast<std::size_t>(unknowns));
    bool ok = true;
    for (int j = 0; j < unknowns && ok; ++j) {
      auto v = rational_reconstruct(residues[static_cast<std::size_t>(j)], modulus);
      if (!v) ok = false;
      else x[static_cast<std::size_t>(j)] = *v;
    }
    if (ok) {
      for (const auto& er : exact_rows) {
        mpq_class s = 0;
        for (const auto& [c, v] : er) s += v * x[static_cast<std::size_t>(c)];
        if (s != 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      OracleResult res;
      res.unknowns = unknowns;
      res.rank = rank;
      for (const auto& a : basis) {
        for (const auto& g : basis) res.entries[{a, g}] = x[static_cast<std::size_t>(index(a, g))];
      }
      return res;
    }
    ++prime;
    u64 p = nth_prime(prime);
    ModSolve s = solve_mod(rows, use, unknowns, norm_index, p);
    if (s.rank != rank || s.kernel.empty()) continue;  // unlucky prime
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_class mm = modulus % pz;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    for (int j = 0; j < unknowns; ++j) {
      auto& r = residues[static_cast<std::size_t>(j)];
      mpz_class d = (mpz_class(static_cast<unsigned long>(s.kernel[static_cast<std::size_t>(j)])) - r) % pz;
      if (d < 0) d += pz;
      d = d * minv % pz;
      r += modulus * d;
    }
    modulus *= pz;
  }
  throw Error("rational reconstruction of the oracle solution did not converge");
}

}  // namespace reflectq::kmat
