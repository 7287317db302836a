#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

enum class Ordering { Less, Greater };

// The two permutations sigma, tau: labelled bases of the full x-bunch and
// full y-bunch, left to right in the split template.
struct FullBunchOrders {
  std::vector<BaseLabel> x_order;
  std::vector<BaseLabel> y_order;
};

namespace detail {

// Exponent stream following a base: for x_i it is (l_i, k_{i+1}, l_{i+1}, ...),
// for y_i it is (k_{i+1}, l_{i+1}, k_{i+2}, ...). Entries alternate in kind
// and the comparison reads them entrywise: y-exponents ascending, x-exponents
// descending, first difference decides.
class ExponentStream {
 public:
  ExponentStream(const ModularLink& link, BaseLabel base) : link_(&link), idx_(base.index) {
    if (base.kind == Letter::X) {
      next_kind_ = Letter::Y;  // l_i first
    } else {
      idx_ = link.successor_index(idx_);
      next_kind_ = Letter::X;  // k_{i+1} first
    }
  }

  std::pair<Letter, long long> next() {
    if (next_kind_ == Letter::Y) {
      long long v = link_->l(idx_);
      idx_ = link_->successor_index(idx_);
      next_kind_ = Letter::X;
      return {Letter::Y, v};
    }
    long long v = link_->k(idx_);
    next_kind_ = Letter::Y;
    return {Letter::X, v};
  }

 private:
  const ModularLink* link_;
  int idx_;
  Letter next_kind_;
};

}  // namespace detail

// Decides which of two same-kind bases sits further left in its full bunch.
// Capped at 2*(n_a + n_b) stream entries; on valid links (distinct cyclic
// classes, primitive words) the cap is never reached.
inline Ordering compare_bases(const ModularLink& link, const BaseLabel& a, const BaseLabel& b) {
  detail::ExponentStream sa(link, a), sb(link, b);
  const int cap = 2 * (link.component_period(link.component_of(a.index)) +
                       link.component_period(link.component_of(b.index)));
  for (int step = 0; step < cap; ++step) {
    auto [kind_a, va] = sa.next();
    auto [kind_b, vb] = sb.next();
    (void)kind_b;
    if (va == vb) continue;
    if (kind_a == Letter::Y) return va < vb ? Ordering::Less : Ordering::Greater;
    return va > vb ? Ordering::Less : Ordering::Greater;
  }
  throw Error(ErrorCode::IndistinguishableBases,
              to_string(a) + " vs " + to_string(b));
}

inline FullBunchOrders full_bunch_orders(const ModularLink& link) {
  FullBunchOrders out;
  for (int i = 1; i <= link.nbar(); ++i) {
    out.x_order.push_back(BaseLabel{Letter::X, i});
    out.y_order.push_back(BaseLabel{Letter::Y, i});
  }
  auto by_bunch = [&link](const BaseLabel& a, const BaseLabel& b) {
    return compare_bases(link, a, b) == Ordering::Less;
  };
  std::sort(out.x_order.begin(), out.x_order.end(), by_bunch);
  std::sort(out.y_order.begin(), out.y_order.end(), by_bunch);
  return out;
}

// One point of the slot grid: nbar points per branch-line interval, ranked
// left to right following the full-bunch order of that side.
struct Slot {
  int interval;  // nonzero, in [-k_mu, +l_lambda]; < 0 for X, > 0 for Y
  int rank;      // 1..nbar within the interval
  BaseLabel label;
  bool used = false;

  bool operator==(const Slot&) const = default;
};

struct Turn {
  Slot from;
  Slot to;
};

struct BunchEntry {
  BaseLabel label;
  long long remaining;  // exponent left at this interval
};

struct TemplateEmbedding {
  FullBunchOrders orders;
  long long k_mu = 0;   // maximal x-exponent
  long long l_lambda = 0;  // maximal y-exponent
  std::vector<Slot> slots;               // all intervals, left to right
  std::vector<Slot> used_slots;          // subset of slots occupied by turns
  std::vector<std::pair<BaseLabel, std::vector<Turn>>> arcs;  // per base, word order
  std::map<long long, std::vector<BunchEntry>> bunches;  // signed interval -> tuple
  std::string link_text;  // canonical text of the source link
};

// The bunch algorithm: slot grid from the full-bunch orders, then the
// turn-by-turn path of every arc. The x_i-arc occupies intervals
// -k_i, ..., -1 and crosses to +l_i; the y_i-arc descends +l_i, ..., +1 and
// crosses to -k_{i+1}.
inline TemplateEmbedding embed(const ModularLink& link) {
  TemplateEmbedding emb;
  emb.orders = full_bunch_orders(link);
  emb.k_mu = link.max_x_exponent();
  emb.l_lambda = link.max_y_exponent();
  emb.link_text = link.canonical_text();
  const int nbar = link.nbar();

  auto slot_of = [&](long long interval, const BaseLabel& lab) -> Slot {
    const auto& order = interval < 0 ? emb.orders.x_order : emb.orders.y_order;
    for (int r = 1; r <= nbar; ++r)
      if (order[r - 1] == lab) {
        long long rem = interval < 0 ? link.k(lab.index) + interval + 1
                                     : link.l(lab.index) - interval + 1;
        return Slot{static_cast<int>(interval), r, lab, rem >= 1};
      }
    throw Error(ErrorCode::UnknownLabel, to_string(lab));
  };

  for (long long u = -emb.k_mu; u <= emb.l_lambda; ++u) {
    if (u == 0) continue;
    std::vector<BunchEntry> bunch;
    for (int r = 1; r <= nbar; ++r) {
      const auto& order = u < 0 ? emb.orders.x_order : emb.orders.y_order;
      Slot s = slot_of(u, order[r - 1]);
      emb.slots.push_back(s);
      if (s.used) {
        emb.used_slots.push_back(s);
        long long rem = u < 0 ? link.k(s.label.index) + u + 1 : link.l(s.label.index) - u + 1;
        bunch.push_back(BunchEntry{s.label, rem});
      }
    }
    if (!bunch.empty()) emb.bunches[u] = std::move(bunch);
  }

  for (int i = 1; i <= nbar; ++i) {
    BaseLabel xi{Letter::X, i};
    std::vector<Turn> xturns;
    for (long long u = -link.k(i); u <= -1; ++u) {
      Slot from = slot_of(u, xi);
      Slot to = u == -1 ? slot_of(link.l(i), BaseLabel{Letter::Y, i}) : slot_of(u + 1, xi);
      xturns.push_back(Turn{from, to});
    }
    emb.arcs.emplace_back(xi, std::move(xturns));

    BaseLabel yi{Letter::Y, i};
    std::vector<Turn> yturns;
    for (long long v = link.l(i); v >= 1; --v) {
      Slot from = slot_of(v, yi);
      int nxt = link.successor_index(i);
      Slot to = v == 1 ? slot_of(-link.k(nxt), BaseLabel{Letter::X, nxt}) : slot_of(v - 1, yi);
      yturns.push_back(Turn{from, to});
    }
    emb.arcs.emplace_back(yi, std::move(yturns));
  }
  return emb;
}

// Size of the -u-th bunch is |{i : k_i >= u}|; of the +v-th, |{j : l_j >= v}|.
inline std::map<long long, long long> bunch_sizes(const ModularLink& link) {
  std::map<long long, long long> out;
  for (long long u = 1; u <= link.max_x_exponent(); ++u) {
    long long count = 0;
    for (int i = 1; i <= link.nbar(); ++i)
      if (link.k(i) >= u) ++count;
    out[-u] = count;
  }
  for (long long v = 1; v <= link.max_y_exponent(); ++v) {
    long long count = 0;
    for (int i = 1; i <= link.nbar(); ++i)
      if (link.l(i) >= v) ++count;
    out[v] = count;
  }
  return out;
}

}  // namespace lorenz
