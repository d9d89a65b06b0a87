#include "kronsq/partition.hpp"

#include "kronsq/memo.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace kronsq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Composition parse_composition(std::string_view text) {
  Composition out;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return out;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
      throw std::invalid_argument("expected comma-separated positive integers, got '" + std::string(text) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

Partition Partition::parse(std::string_view text) { return Partition(parse_composition(text)); }

std::string composition_str(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string Partition::str() const { return composition_str(parts_); }

int composition_size(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

Partition conjugate(const Partition& la) {
  std::vector<int> out(la.first(), 0);
  for (int p : la.parts())
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool dominates(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw std::invalid_argument("dominance needs partitions of equal size");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(la.length(), mu.length()); ++i) {
    a += la[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

int depth(const Partition& la) { return la.size() - la.first(); }

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition intersection(const Partition& la, const Partition& mu) {
  std::vector<int> out;
  for (int i = 0; i < std::min(la.length(), mu.length()); ++i) out.push_back(std::min(la[i], mu[i]));
  return Partition(std::move(out));
}

Partition extend_nubar(const Partition& nubar, int n) {
  int d = nubar.size();
  if (n < d + nubar.first())
    throw std::invalid_argument("n=" + std::to_string(n) + " is below d+nu_2=" + std::to_string(d + nubar.first()));
  std::vector<int> parts{n - d};
  parts.insert(parts.end(), nubar.parts().begin(), nubar.parts().end());
  return Partition(std::move(parts));
}

Partition nu_tilde(const Partition& nubar) { return extend_nubar(nubar, nubar.size() + nubar.first()); }

Partition tail(const Partition& nu) {
  if (nu.empty()) return {};
  return Partition(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

ConcurrentMemo<int, std::shared_ptr<const std::vector<Partition>>> partition_lists;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  auto list = partition_lists.get_or_compute(n, [n] {
    auto out = std::make_shared<std::vector<Partition>>();
    std::vector<int> cur;
    partitions_rec(n, n, cur, *out);
    return std::shared_ptr<const std::vector<Partition>>(std::move(out));
  });
  return *list;
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int rows = outer.length();
  // suffix capacity: max cells still placeable below row i
  std::vector<int> cap(rows + 1, 0), low(rows + 1, 0);
  for (int i = rows - 1; i >= 0; --i) {
    cap[i] = cap[i + 1] + outer[i];
    low[i] = low[i + 1] + inner[i];
  }
  std::function<void(int, int, int)> rec = [&](int i, int prev, int left) {
    if (i == rows) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    int hi = std::min({outer[i], prev, left});
    for (int v = hi; v >= inner[i]; --v) {
      int rest = left - v;
      if (rest < low[i + 1]) continue;
      if (rest > std::min(cap[i + 1], v * (rows - i - 1))) break;
      cur.push_back(v);
      rec(i + 1, v, rest);
      cur.pop_back();
    }
  };
  if (contains(outer, inner) && size >= inner.size() && size <= outer.size())
    rec(0, outer.first(), size);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of needs n >= 1");
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int j = 0; j < n - 1; ++j) {
      if (mask & (1u << j)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  return out;
}

Integer multinomial(const Composition& pi) {
  Integer r = factorial(composition_size(pi));
  for (int p : pi) r /= factorial(p);
  return r;
}

Partition sorted_partition(const Composition& c) {
  std::vector<int> v(c);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

Partition shift_rows(const Partition& mu, int i, int k) {
  if (i < 1 || i > mu.length()) throw std::invalid_argument("shift_rows: row index out of range");
  if (k < 0) throw std::invalid_argument("shift_rows: negative shift");
  std::vector<int> v = mu.parts();
  for (int j = 0; j < i; ++j) v[j] += k;
  return Partition(std::move(v));
}

}  // namespace kronsq
