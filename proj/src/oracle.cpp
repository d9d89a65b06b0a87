#include "kronsq/oracle.hpp"

#include "kronsq/memo.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

namespace kronsq::oracle {

namespace {

std::atomic<int> degree_cap{15};
ConcurrentMemo<std::tuple<Partition, Partition, Partition>, Integer> mn_memo;
ConcurrentMemo<int, std::shared_ptr<const CharacterTable>> table_memo;
ConcurrentMemo<std::pair<Composition, Partition>, Integer> perm_memo;

// Beta set of la padded to length len.
std::vector<int> beta_set(const Partition& la, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = la[i] + (len - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  int len = static_cast<int>(b.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = b[i] - (len - 1 - i);
  return Partition(parts);
}

Integer mn_rec(const Partition& outer, const Partition& inner, const Partition& rho) {
  if (rho.empty()) return outer == inner ? 1 : 0;
  return mn_memo.get_or_compute({outer, inner, rho}, [&] {
    int h = rho[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    int len = outer.length();
    std::vector<int> beta = beta_set(outer, len);
    std::set<int> present(beta.begin(), beta.end());
    Integer total = 0;
    for (int i = 0; i < len; ++i) {
      int target = beta[i] - h;
      if (target < 0 || present.count(target)) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      std::vector<int> nb = beta;
      nb[i] = target;
      Partition smaller = from_beta(nb);
      if (!contains(smaller, inner)) continue;
      Integer v = mn_rec(smaller, inner, rest);
      total += (between % 2 ? -v : v);
    }
    return total;
  });
}

}  // namespace

int max_degree() { return degree_cap.load(); }
void set_max_degree(int n) { degree_cap.store(n); }

Integer mn_value(const SkewShape& s, const Partition& rho) {
  if (s.size() != rho.size()) throw std::invalid_argument("mn_value: size mismatch");
  if (!contains(s.outer, s.inner)) throw std::invalid_argument("mn_value: inner not contained in outer");
  return mn_rec(s.outer, s.inner, rho);
}

Integer mn_value(const Partition& la, const Partition& rho) { return mn_value(SkewShape{la, {}}, rho); }

Integer class_size(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    z *= pw * factorial(m);
  }
  return factorial(rho.size()) / z;
}

int CharacterTable::index_of(const Partition& la) const {
  auto it = std::find(irreps.begin(), irreps.end(), la);
  if (it == irreps.end()) throw std::invalid_argument("partition not in character table");
  return static_cast<int>(it - irreps.begin());
}

const CharacterTable& character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: negative degree");
  if (n > max_degree())
    throw std::invalid_argument("character table for n=" + std::to_string(n) + " exceeds the oracle cap " +
                                std::to_string(max_degree()));
  auto table = table_memo.get_or_compute(n, [n] {
    auto t = std::make_shared<CharacterTable>();
    t->n = n;
    t->irreps = partitions_of(n);
    t->classes = partitions_of(n);
    for (const auto& rho : t->classes) t->class_sizes.push_back(class_size(rho));
    for (const auto& la : t->irreps) {
      std::vector<Integer> row;
      for (const auto& rho : t->classes) row.push_back(mn_value(la, rho));
      t->values.push_back(std::move(row));
    }
    return std::shared_ptr<const CharacterTable>(std::move(t));
  });
  return *table;
}

Integer g_oracle(const Partition& la, const Partition& mu, const Partition& nu) {
  if (la.size() != mu.size() || la.size() != nu.size()) throw std::invalid_argument("g_oracle: size mismatch");
  const auto& t = character_table(la.size());
  const auto& a = t.values[t.index_of(la)];
  const auto& b = t.values[t.index_of(mu)];
  const auto& c = t.values[t.index_of(nu)];
  Integer sum = 0;
  for (std::size_t k = 0; k < t.classes.size(); ++k) sum += t.class_sizes[k] * a[k] * b[k] * c[k];
  Integer nf = factorial(t.n), q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), nf.get_mpz_t());
  if (r != 0) throw std::logic_error("g_oracle: class sum not divisible by n!");
  return q;
}

Integer perm_character_value(const Composition& pi, const Partition& rho) {
  if (composition_size(pi) != rho.size()) throw std::invalid_argument("perm_character_value: size mismatch");
  // fixed ordered set partitions of type pi = ways to drop each cycle into a block
  return perm_memo.get_or_compute({pi, rho}, [&] {
    Integer count = 0;
    std::vector<int> room(pi.begin(), pi.end());
    std::function<void(int)> rec = [&](int k) {
      if (k == rho.length()) {
        ++count;
        return;
      }
      for (auto& r : room) {
        if (r >= rho[k]) {
          r -= rho[k];
          rec(k + 1);
          r += rho[k];
        }
      }
    };
    rec(0);
    return count;
  });
}

CharacterVector perm_character(const Composition& pi) {
  int n = composition_size(pi);
  const auto& t = character_table(n);
  CharacterVector out(n);
  Integer nf = factorial(n);
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    Integer sum = 0;
    for (std::size_t k = 0; k < t.classes.size(); ++k)
      sum += t.class_sizes[k] * t.values[i][k] * perm_character_value(pi, t.classes[k]);
    out.add(t.irreps[i], sum / nf);
  }
  return out;
}

Integer skew_pair_inner_product(const SkewShape& s, const SkewShape& u, const Composition& pi) {
  int n = composition_size(pi);
  if (s.size() != n || u.size() != n) throw std::invalid_argument("skew_pair_inner_product: size mismatch");
  Integer sum = 0;
  for (const auto& rho : partitions_of(n))
    sum += class_size(rho) * mn_value(s, rho) * mn_value(u, rho) * perm_character_value(pi, rho);
  return sum / factorial(n);
}

Integer kostka(const Partition& la, const Partition& mu) { return perm_character(mu.parts())[la]; }

std::map<Partition, Integer> jacobi_trudi(const Partition& nu) {
  // K is unitriangular in reverse-lex order: K[la][mu] != 0 only if la dominates mu.
  int n = nu.size();
  const auto& parts = partitions_of(n);
  int N = static_cast<int>(parts.size());
  std::vector<std::vector<Integer>> K(N, std::vector<Integer>(N));
  for (int j = 0; j < N; ++j) {
    CharacterVector phi = perm_character(parts[j].parts());
    for (int i = 0; i < N; ++i) K[i][j] = phi[parts[i]];
  }
  // chi^nu = sum_la X[la] phi^la with sum_la K[mu][la] X[la] = delta_{mu,nu}
  std::vector<Integer> x(N);
  for (int mu = N - 1; mu >= 0; --mu) {
    Integer rhs = parts[mu] == nu ? 1 : 0;
    for (int la = mu + 1; la < N; ++la) rhs -= K[mu][la] * x[la];
    x[mu] = rhs / K[mu][mu];
  }
  std::map<Partition, Integer> out;
  for (int i = 0; i < N; ++i)
    if (x[i] != 0) out[parts[i]] = x[i];
  return out;
}

}  // namespace kronsq::oracle
