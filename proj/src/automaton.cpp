#include "lorenz/automaton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace lorenz {

namespace {

// Match tracker for one bound: pointer i means the last i symbols read
// equal the bound's first i symbols.  The text buffer holds the
// preperiod plus two periods so released constraints can recompute their
// longest surviving border; beyond the buffer the pointer cycles.
struct Side {
  Word text;
  std::vector<size_t> fail;  // classic prefix function of text
  size_t pre, per;

  explicit Side(const EpSeq& b) : pre(b.pre_len()), per(b.per_len()) {
    text = b.head(pre + 2 * per);
    fail.assign(text.size() + 1, 0);
    for (size_t i = 1; i < text.size(); ++i) {
      size_t j = fail[i];
      while (j > 0 && text[i] != text[j]) j = fail[j];
      fail[i + 1] = (text[i] == text[j]) ? j + 1 : 0;
    }
  }

  size_t limit() const { return text.size(); }
  int forced(size_t i) const { return text[i]; }

  size_t advance(size_t i) const {
    return (i + 1 == limit()) ? limit() - per : i + 1;
  }

  // longest suffix of text[0..i) + x that is a prefix of the bound
  size_t release(size_t i, uint8_t x) const {
    size_t j = i;
    while (j > 0 && text[j] != x) j = fail[j];
    return (text[j] == x) ? advance_from_match(j) : 0;
  }

 private:
  size_t advance_from_match(size_t j) const { return advance(j); }
};

}  // namespace

BoundAutomaton BoundAutomaton::build(const SurvivorShift& shift) {
  if (shift.degenerate)
    fail(Errc::precondition, "cannot build automaton of a degenerate shift");
  if (!is_min_self_admissible(shift.s) || !is_max_self_admissible(shift.t))
    fail(Errc::precondition, "bounds must be self-admissible");

  Side lo(shift.s), hi(shift.t);

  std::map<std::pair<size_t, size_t>, int> ids;
  std::vector<std::pair<size_t, size_t>> work;
  std::vector<State> raw;
  auto intern = [&](size_t i, size_t j) {
    auto [it, fresh] = ids.try_emplace({i, j}, static_cast<int>(raw.size()));
    if (fresh) {
      raw.emplace_back();
      work.push_back({i, j});
    }
    return it->second;
  };

  intern(0, 0);
  for (size_t w = 0; w < work.size(); ++w) {
    auto [i, j] = work[w];
    for (uint8_t x = 0; x <= 1; ++x) {
      int a = lo.forced(i);
      int b = hi.forced(j);
      if (x < a || x > b) continue;  // violates a tied constraint
      size_t ni = (x == a) ? lo.advance(i) : lo.release(i, x);
      size_t nj = (x == b) ? hi.advance(j) : hi.release(j, x);
      raw[w].next[x] = intern(ni, nj);
    }
  }

  // Trim states with no outgoing transition until a fixpoint, so every
  // remaining path extends to an infinite one.
  std::vector<char> dead(raw.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t v = 0; v < raw.size(); ++v) {
      if (dead[v]) continue;
      bool out = false;
      for (int x = 0; x < 2; ++x) {
        int n = raw[v].next[x];
        if (n >= 0 && !dead[static_cast<size_t>(n)]) out = true;
      }
      if (!out) { dead[v] = 1; changed = true; }
    }
  }

  BoundAutomaton aut;
  aut.raw_states_ = raw.size();
  if (dead[0]) return aut;  // empty language

  // Moore minimization on the trimmed partial DFA.
  std::vector<int> cls(raw.size(), -1);
  for (size_t v = 0; v < raw.size(); ++v)
    if (!dead[v]) cls[v] = 0;
  for (;;) {
    std::map<std::array<int, 3>, int> sig_ids;
    std::vector<int> next_cls(raw.size(), -1);
    for (size_t v = 0; v < raw.size(); ++v) {
      if (dead[v]) continue;
      std::array<int, 3> sig{cls[v], -1, -1};
      for (int x = 0; x < 2; ++x) {
        int n = raw[v].next[x];
        sig[static_cast<size_t>(x) + 1] =
            (n >= 0 && !dead[static_cast<size_t>(n)]) ? cls[static_cast<size_t>(n)] : -1;
      }
      auto [it, fresh] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[v] = it->second;
    }
    bool stable = true;
    for (size_t v = 0; v < raw.size(); ++v)
      if (!dead[v] && next_cls[v] != cls[v]) { stable = false; break; }
    cls = std::move(next_cls);
    if (stable) break;
  }

  int n_cls = 0;
  for (size_t v = 0; v < raw.size(); ++v)
    if (!dead[v]) n_cls = std::max(n_cls, cls[v] + 1);
  aut.states_.assign(static_cast<size_t>(n_cls), State{});
  for (size_t v = 0; v < raw.size(); ++v) {
    if (dead[v]) continue;
    for (int x = 0; x < 2; ++x) {
      int n = raw[v].next[x];
      if (n >= 0 && !dead[static_cast<size_t>(n)])
        aut.states_[static_cast<size_t>(cls[v])].next[x] = cls[static_cast<size_t>(n)];
    }
  }
  aut.start_ = cls[0];
  return aut;
}

bool BoundAutomaton::accepts(const EpSeq& w) const {
  if (states_.empty()) return false;
  int st = start_;
  // A deterministic walk revisits a (state, phase) pair within
  // tails + states steps; past that the path is periodic and stays live.
  size_t horizon = (w.tails() + 1) * (states_.size() + 1);
  for (size_t i = 0; i < horizon; ++i) {
    st = states_[static_cast<size_t>(st)].next[w.at(i)];
    if (st < 0) return false;
  }
  return true;
}

std::string BoundAutomaton::to_dot() const {
  std::ostringstream os;
  os << "digraph bound_automaton {\n  rankdir=LR;\n";
  os << "  start [shape=point];\n";
  if (start_ >= 0) os << "  start -> " << start_ << ";\n";
  for (size_t v = 0; v < states_.size(); ++v) {
    os << "  " << v << " [shape=circle];\n";
    for (int x = 0; x < 2; ++x)
      if (states_[v].next[x] >= 0)
        os << "  " << v << " -> " << states_[v].next[x] << " [label=\"" << x
           << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

uint64_t count_words(const BoundAutomaton& aut, size_t n) {
  if (n > 62) fail(Errc::precondition, "count_words supports n <= 62");
  if (aut.empty_language()) return 0;
  const auto& st = aut.states();
  std::vector<uint64_t> cnt(st.size(), 0);
  cnt[static_cast<size_t>(aut.start())] = 1;
  for (size_t step = 0; step < n; ++step) {
    std::vector<uint64_t> next(st.size(), 0);
    for (size_t v = 0; v < st.size(); ++v) {
      if (!cnt[v]) continue;
      for (int x = 0; x < 2; ++x)
        if (st[v].next[x] >= 0) next[static_cast<size_t>(st[v].next[x])] += cnt[v];
    }
    cnt = std::move(next);
  }
  uint64_t total = 0;
  for (uint64_t c : cnt) total += c;
  return total;
}

namespace {

// Tarjan strongly connected components.
struct Scc {
  const std::vector<BoundAutomaton::State>& g;
  std::vector<int> idx, low, comp;
  std::vector<char> on;
  std::vector<int> stk;
  int counter = 0, ncomp = 0;

  explicit Scc(const std::vector<BoundAutomaton::State>& gr)
      : g(gr), idx(gr.size(), -1), low(gr.size(), 0), comp(gr.size(), -1),
        on(gr.size(), 0) {
    for (size_t v = 0; v < g.size(); ++v)
      if (idx[v] < 0) dfs(static_cast<int>(v));
  }

  void dfs(int v0) {
    // iterative to keep stack depth bounded
    std::vector<std::pair<int, int>> call{{v0, 0}};
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        idx[v] = low[v] = counter++;
        stk.push_back(v);
        on[static_cast<size_t>(v)] = 1;
      }
      bool descended = false;
      while (ei < 2) {
        int w = g[static_cast<size_t>(v)].next[ei];
        ++ei;
        if (w < 0) continue;
        if (idx[static_cast<size_t>(w)] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on[static_cast<size_t>(w)])
          low[v] = std::min(low[v], idx[static_cast<size_t>(w)]);
      }
      if (descended) continue;
      if (low[v] == idx[v]) {
        for (;;) {
          int w = stk.back();
          stk.pop_back();
          on[static_cast<size_t>(w)] = 0;
          comp[static_cast<size_t>(w)] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int child = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[child]);
      }
    }
  }
};

// Perron root of one strongly connected block via power iteration on
// A + I (primitive for an irreducible block), with Collatz-Wielandt
// bounds driving the stop condition.
double scc_spectral_radius(const std::vector<BoundAutomaton::State>& g,
                           const std::vector<int>& members) {
  size_t n = members.size();
  if (n == 1) {
    int v = members[0];
    bool self = g[static_cast<size_t>(v)].next[0] == v || g[static_cast<size_t>(v)].next[1] == v;
    int loops = (g[static_cast<size_t>(v)].next[0] == v) + (g[static_cast<size_t>(v)].next[1] == v);
    return self ? static_cast<double>(loops) : 0.0;
  }
  std::vector<int> pos(g.size(), -1);
  for (size_t i = 0; i < n; ++i) pos[static_cast<size_t>(members[i])] = static_cast<int>(i);
  // detect a bare cycle: every member has exactly one in-component edge
  bool cycle = true;
  for (int v : members) {
    int deg = 0;
    for (int x = 0; x < 2; ++x) {
      int w = g[static_cast<size_t>(v)].next[x];
      if (w >= 0 && pos[static_cast<size_t>(w)] >= 0) ++deg;
    }
    if (deg != 1) { cycle = false; break; }
  }
  if (cycle) return 1.0;

  std::vector<double> v(n, 1.0), av(n);
  double rho = 1.0;
  for (int iter = 0; iter < 20000; ++iter) {
    for (size_t i = 0; i < n; ++i) {
      double acc = v[i];  // the +I shift
      for (int x = 0; x < 2; ++x) {
        int w = g[static_cast<size_t>(members[i])].next[x];
        if (w >= 0 && pos[static_cast<size_t>(w)] >= 0)
          acc += v[static_cast<size_t>(pos[static_cast<size_t>(w)])];
      }
      av[i] = acc;
    }
    double lo = 1e300, hi = 0.0, norm = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double r = av[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm = std::max(norm, av[i]);
    }
    for (size_t i = 0; i < n; ++i) v[i] = av[i] / norm;
    rho = 0.5 * (lo + hi);
    if (hi - lo < 1e-12 * rho) break;
  }
  return rho - 1.0;
}

}  // namespace

std::vector<size_t> recurrent_components(const BoundAutomaton& aut) {
  std::vector<size_t> out;
  if (aut.empty_language()) return out;
  Scc scc(aut.states());
  std::vector<std::vector<int>> groups(static_cast<size_t>(scc.ncomp));
  for (size_t v = 0; v < aut.states().size(); ++v)
    groups[static_cast<size_t>(scc.comp[v])].push_back(static_cast<int>(v));
  for (auto& g : groups) {
    if (g.size() > 1) { out.push_back(g.size()); continue; }
    int v = g[0];
    if (aut.states()[static_cast<size_t>(v)].next[0] == v ||
        aut.states()[static_cast<size_t>(v)].next[1] == v)
      out.push_back(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double entropy_estimate(const BoundAutomaton& aut) {
  if (aut.empty_language()) return 0.0;
  Scc scc(aut.states());
  std::vector<std::vector<int>> groups(static_cast<size_t>(scc.ncomp));
  for (size_t v = 0; v < aut.states().size(); ++v)
    groups[static_cast<size_t>(scc.comp[v])].push_back(static_cast<int>(v));
  double rho = 0.0;
  for (auto& g : groups)
    rho = std::max(rho, scc_spectral_radius(aut.states(), g));
  if (rho <= 1.0) return 0.0;
  return std::min(std::log(rho), std::log(2.0));
}

EpSeq extremal(const BoundAutomaton& aut, Extremal which) {
  if (aut.empty_language()) fail(Errc::empty_language, "no accepted sequence");
  const auto& st = aut.states();
  std::vector<int> seen_at(st.size(), -1);
  Word symbols;
  int v = aut.start();
  for (;;) {
    if (seen_at[static_cast<size_t>(v)] >= 0) {
      size_t k = static_cast<size_t>(seen_at[static_cast<size_t>(v)]);
      Word pre(symbols.begin(), symbols.begin() + static_cast<long>(k));
      Word per(symbols.begin() + static_cast<long>(k), symbols.end());
      return EpSeq::canon(std::move(pre), std::move(per));
    }
    seen_at[static_cast<size_t>(v)] = static_cast<int>(symbols.size());
    int first = which == Extremal::min ? 0 : 1;
    int nx = st[static_cast<size_t>(v)].next[first];
    if (nx < 0) {
      first ^= 1;
      nx = st[static_cast<size_t>(v)].next[first];
    }
    symbols.push_back(static_cast<uint8_t>(first));
    v = nx;
  }
}

}  // namespace lorenz
