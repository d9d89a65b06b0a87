#include "kronsq/tableaux.hpp"

#include "kronsq/memo.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

namespace kronsq {

namespace {

ConcurrentMemo<std::pair<Partition, Composition>, Integer> kostka_memo;
ConcurrentMemo<Partition, std::shared_ptr<const std::vector<SBSTableau>>> sbst_memo;
ConcurrentMemo<std::tuple<Partition, Partition, Partition>, Integer> lr_memo;
ConcurrentMemo<std::tuple<Partition, Partition, std::vector<Partition>>, Integer> multi_memo;
ConcurrentMemo<std::tuple<std::string, std::string, Composition>, Integer> pair_memo;

void require_same_size(int a, int b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

}  // namespace

Integer kostka(const Partition& la, const Composition& mu) {
  require_same_size(la.size(), composition_size(mu), "kostka");
  if (mu.empty()) return 1;
  return kostka_memo.get_or_compute({la, mu}, [&] {
    Composition rest(mu.begin(), mu.end() - 1);
    Integer total = 0;
    // remove a horizontal strip of size mu.back()
    for (const auto& kappa : partitions_between(tail(la), la, la.size() - mu.back())) total += kostka(kappa, rest);
    return total;
  });
}

namespace {

std::vector<SBSTableau> build_sbst(const Partition& nu) {
  if (nu.empty()) {
    SBSTableau t;
    return {t};
  }
  std::vector<SBSTableau> out;
  int l = nu.length();
  for (int i = 0; i < l; ++i) {
    // the last strip runs from the bottom of column 1 up to row i
    std::vector<int> rest;
    for (int j = 0; j < i; ++j) rest.push_back(nu[j]);
    for (int j = i + 1; j < l; ++j) rest.push_back(nu[j] - 1);
    Partition remainder(rest);
    SkewShape strip{nu, remainder};
    int height = l - 1 - i;
    for (const auto& base : enumerate_sbst(remainder)) {
      SBSTableau t;
      t.shape = nu;
      t.strips = base.strips;
      t.strips.push_back(strip);
      t.sign = base.sign * (height % 2 ? -1 : 1);
      out.push_back(std::move(t));
    }
  }
  for (auto& t : out) {
    Composition sizes;
    int first = -1;
    for (const auto& s : t.strips) {
      if (s.outer[0] == nu[0] && s.inner[0] < nu[0]) first = s.size();
      else sizes.push_back(s.size());
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    t.tau_bar = sizes;
    t.tau = {first};
    t.tau.insert(t.tau.end(), sizes.begin(), sizes.end());
    t.gamma = sorted_partition(t.tau);
    t.e = composition_size(t.tau_bar);
  }
  return out;
}

}  // namespace

const std::vector<SBSTableau>& enumerate_sbst(const Partition& nu) {
  auto list = sbst_memo.get_or_compute(nu, [&] {
    return std::shared_ptr<const std::vector<SBSTableau>>(std::make_shared<std::vector<SBSTableau>>(build_sbst(nu)));
  });
  return *list;
}

std::map<Partition, Integer> phi_expansion_gamma(const Partition& nu) {
  std::map<Partition, Integer> out;
  for (const auto& t : enumerate_sbst(nu)) out[t.gamma] += t.sign;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Partition, Integer> phi_expansion_tau(const Partition& nu) {
  std::map<Partition, Integer> out;
  for (const auto& t : enumerate_sbst(nu)) out[sorted_partition(t.tau)] += t.sign;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer inverse_kostka(const Partition& la, const Partition& mu) {
  require_same_size(la.size(), mu.size(), "inverse_kostka");
  auto expansion = phi_expansion_gamma(mu);
  auto it = expansion.find(la);
  return it == expansion.end() ? Integer(0) : it->second;
}

Composition shifted_tau(const SBSTableau& t, const Partition& nubar, int n) {
  int d = nubar.size();
  if (n < d + nubar.first()) throw std::invalid_argument("shifted_tau: n is below d + nu_2");
  if (t.shape != nu_tilde(nubar)) throw std::invalid_argument("shifted_tau: tableau shape is not nu_tilde");
  Composition tau = t.tau;
  int extra = n - d - nubar.first();
  if (tau.empty()) {
    if (extra > 0) tau.push_back(extra);
  } else {
    tau[0] += extra;
  }
  return tau;
}

Integer lr_coefficient(const SkewShape& s, const Partition& mu) {
  require_same_size(s.size(), mu.size(), "lr_coefficient");
  return lr_memo.get_or_compute({s.outer, s.inner, mu}, [&] {
    int rows = s.outer.length();
    int width = s.outer.first();
    std::vector<std::vector<int>> val(rows, std::vector<int>(width + 2, 0));
    std::vector<int> count(mu.length() + 1, 0);
    std::vector<Cell> order;  // reading order: rows top to bottom, right to left
    for (int i = 0; i < rows; ++i)
      for (int c = s.outer[i]; c > s.inner[i]; --c) order.emplace_back(i, c);
    Integer total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == order.size()) {
        ++total;
        return;
      }
      auto [i, c] = order[k];
      int hi = mu.length();
      if (c < s.outer[i]) hi = std::min(hi, val[i][c + 1]);
      int lo = 1;
      if (i > 0 && c > s.inner[i - 1]) lo = val[i - 1][c] + 1;
      for (int v = lo; v <= hi; ++v) {
        if (count[v] + 1 > mu[v - 1]) continue;
        if (v > 1 && count[v] + 1 > count[v - 1]) continue;
        ++count[v];
        val[i][c] = v;
        rec(k + 1);
        --count[v];
      }
      val[i][c] = 0;
    };
    rec(0);
    return total;
  });
}

Integer lr_coefficient(const DiagramClass& d, const Partition& mu) { return lr_coefficient(representative(d), mu); }

namespace {

Integer multi_rec(const Partition& outer, const Partition& gamma, const std::vector<Partition>& contents, std::size_t idx) {
  if (idx == contents.size()) return gamma == outer ? 1 : 0;
  std::vector<Partition> rest(contents.begin() + idx, contents.end());
  return multi_memo.get_or_compute({outer, gamma, rest}, [&] {
    Integer total = 0;
    const Partition& rho = contents[idx];
    for (const auto& next : partitions_between(gamma, outer, gamma.size() + rho.size())) {
      Integer c = lr_coefficient(SkewShape{next, gamma}, rho);
      if (c != 0) total += c * multi_rec(outer, next, contents, idx + 1);
    }
    return total;
  });
}

void content_sequences(const Composition& pi, std::size_t idx, std::vector<Partition>& cur,
                       const std::function<void(const std::vector<Partition>&)>& visit) {
  if (idx == pi.size()) {
    visit(cur);
    return;
  }
  for (const auto& rho : partitions_of(pi[idx])) {
    cur.push_back(rho);
    content_sequences(pi, idx + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

Integer lr_multi_count(const SkewShape& s, const std::vector<Partition>& contents) {
  int total = 0;
  for (const auto& p : contents) total += p.size();
  require_same_size(s.size(), total, "lr_multi_count");
  return multi_rec(s.outer, s.inner, contents, 0);
}

CharacterVector skew_character(const DiagramClass& d) {
  CharacterVector chi(d.size());
  SkewShape rep = representative(d);
  for (const auto& mu : partitions_of(d.size())) chi.add(mu, lr_coefficient(rep, mu));
  return chi;
}

Integer f_count(const Partition& la) {
  Integer denom = 1;
  Partition conj = conjugate(la);
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la[i]; ++j) denom *= (la[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(la.size()) / denom;
}

Integer f_count(const DiagramClass& d) {
  Integer total = 0;
  CharacterVector chi = skew_character(d);
  for (const auto& [mu, c] : chi.terms()) total += c * f_count(mu);
  return total;
}

Integer lr_skew_pair(const SkewShape& s, const SkewShape& t, const Composition& pi) {
  require_same_size(s.size(), composition_size(pi), "lr_skew_pair");
  require_same_size(t.size(), composition_size(pi), "lr_skew_pair");
  Integer total = 0;
  std::vector<Partition> cur;
  content_sequences(pi, 0, cur, [&](const std::vector<Partition>& seq) {
    Integer a = lr_multi_count(s, seq);
    if (a != 0) total += a * lr_multi_count(t, seq);
  });
  return total;
}

Integer lr_pair(const DiagramClass& d, const DiagramClass& e, const Composition& pi) {
  require_same_size(d.size(), composition_size(pi), "lr_pair");
  require_same_size(e.size(), composition_size(pi), "lr_pair");
  return pair_memo.get_or_compute({d.key(), e.key(), pi},
                                  [&] { return lr_skew_pair(representative(d), representative(e), pi); });
}

Integer lr_lambda_mu(const Partition& la, const Partition& mu, const Composition& pi) {
  require_same_size(la.size(), mu.size(), "lr_lambda_mu");
  require_same_size(la.size(), composition_size(pi), "lr_lambda_mu");
  if (pi.empty()) return 1;
  Partition common = intersection(la, mu);
  if (common.size() < pi[0]) return 0;
  Composition rest(pi.begin() + 1, pi.end());
  Integer total = 0;
  for (const auto& alpha : partitions_between(Partition{}, common, pi[0]))
    total += lr_skew_pair(SkewShape{la, alpha}, SkewShape{mu, alpha}, rest);
  return total;
}

}  // namespace kronsq
