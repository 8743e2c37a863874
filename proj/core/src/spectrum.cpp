#include "casimir/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "casimir/cache.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Brute: return "BRUTE";
    case Strategy::Ideal: return "IDEAL";
    case Strategy::Character: return "CHARACTER";
    case Strategy::Duality: return "DUALITY";
  }
  return "?";
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const RootSystem& rs, int target, std::uint64_t budget)
      : rs_(rs), target_(target), budget_(budget), sigma_(rs.rank()) {
    const Weight& rho = rs.rho();
    for (const auto& label : basis_labels(rs)) {
      Cand c{label, label_weight(rs, label), {}, 0};
      c.dual = rs.scaled_dual(c.w);
      c.rho_dot = rs.scaled_inner(rho, c.w);
      cands_.push_back(std::move(c));
    }
    std::stable_sort(cands_.begin(), cands_.end(), [](const Cand& a, const Cand& b) {
      return a.rho_dot != b.rho_dot ? a.rho_dot > b.rho_dot : a.label < b.label;
    });
    const std::size_t n = cands_.size();
    rowtop_.assign(n, std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(rs.scaled_inner(cands_[k].w, cands_[j].w));
      std::sort(row.rbegin(), row.rend());
      for (std::size_t t = 0; t < n; ++t) rowtop_[k][t + 1] = rowtop_[k][t] + row[t];
    }
    scratch_.reserve(n);
  }

  BruteForceResult run() {
    dfs(0, 0);
    BruteForceResult out;
    out.m = Rational(best_, rs_.form_scale());
    out.nodes = nodes_;
    for (auto& s : argmax_) std::sort(s.begin(), s.end());
    std::sort(argmax_.begin(), argmax_.end());
    out.argmax = std::move(argmax_);
    return out;
  }

 private:
  struct Cand {
    BasisLabel label;
    Weight w;
    std::vector<std::int64_t> dual;
    std::int64_t rho_dot;
  };

  std::int64_t dot(const Weight& v, const std::vector<std::int64_t>& dual) const {
    std::int64_t s = 0;
    for (int j = 0; j < rs_.rank(); ++j) s += v[j] * dual[static_cast<std::size_t>(j)];
    return s;
  }

  void dfs(int idx, int count) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("brute-force search for degree " + std::to_string(target_) + " of " + rs_.type().name() +
                           " exceeded " + std::to_string(budget_) + " nodes");
    }
    const std::int64_t here = rs_.scaled_casimir(sigma_);
    if (count == target_) {
      if (here > best_) {
        best_ = here;
        argmax_.clear();
      }
      if (here == best_) {
        LabelSubset s;
        for (int k : stack_) s.push_back(cands_[static_cast<std::size_t>(k)].label);
        argmax_.push_back(std::move(s));
      }
      return;
    }
    const int n = static_cast<int>(cands_.size());
    const int t = target_ - count;
    if (n - idx < t) return;

    const Weight shifted = sigma_ + rs_.rho();
    scratch_.clear();
    for (int k = idx; k < n; ++k) {
      const auto& c = cands_[static_cast<std::size_t>(k)];
      scratch_.push_back(2 * dot(shifted, c.dual) + rowtop_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)]);
    }
    std::nth_element(scratch_.begin(), scratch_.begin() + (t - 1), scratch_.end(), std::greater<>());
    std::int64_t bound = here;
    for (int k = 0; k < t; ++k) bound += scratch_[static_cast<std::size_t>(k)];
    if (bound < best_) return;

    const Weight& w = cands_[static_cast<std::size_t>(idx)].w;
    sigma_ += w;
    stack_.push_back(idx);
    dfs(idx + 1, count + 1);
    stack_.pop_back();
    sigma_ -= w;
    dfs(idx + 1, count);
  }

  const RootSystem& rs_;
  int target_;
  std::uint64_t budget_;
  std::vector<Cand> cands_;
  std::vector<std::vector<std::int64_t>> rowtop_;
  std::vector<std::int64_t> scratch_;
  Weight sigma_;
  std::vector<int> stack_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::min();
  std::vector<LabelSubset> argmax_;
  std::uint64_t nodes_ = 0;
};

using ComponentMap = std::map<Weight, Multiplicity>;

struct Claim {
  Strategy strategy;
  Rational m;
  ComponentMap components;
};

ComponentMap sums_of(const RootSystem& rs, const std::vector<LabelSubset>& subsets) {
  ComponentMap out;
  for (const auto& s : subsets) {
    Weight sum(rs.rank());
    for (const auto& lab : s) sum += label_weight(rs, lab);
    ++out[sum];
  }
  return out;
}

std::string describe(const Claim& c) {
  std::ostringstream os;
  os << strategy_name(c.strategy) << ": m=" << c.m << " {";
  bool first = true;
  for (const auto& [w, k] : c.components) {
    os << (first ? "" : ", ") << w.str() << "x" << k;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

BruteForceResult mi_bruteforce(const RootSystem& rs, int i, std::uint64_t node_budget) {
  if (i < 0 || i > rs.dimension()) throw std::out_of_range("degree outside [0, n]");
  return BranchAndBound(rs, i, node_budget).run();
}

IdealResult mi_via_ideals(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.num_positive_roots()) throw std::out_of_range("ideal strategy needs 0 <= i <= r");
  IdealResult out;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& ideal : enumerate_ideals(rs, i)) {
    const std::int64_t v = rs.scaled_casimir(ideal_weight_sum(rs, ideal));
    if (v > best) {
      best = v;
      out.ideals.clear();
    }
    if (v == best) out.ideals.push_back(ideal);
  }
  out.m = Rational(best, rs.form_scale());
  return out;
}

BNormalResult mi_via_b_normal(const RootSystem& rs, int i) {
  const int r = rs.num_positive_roots();
  const int l = rs.rank();
  if (i < 0 || i > r + l) throw std::out_of_range("b-normal strategy needs 0 <= i <= r + l");
  std::vector<LabelSubset> candidates;
  if (i <= r) {
    for (const auto& ideal : enumerate_ideals(rs, i)) {
      LabelSubset s;
      for (int j : ideal.members.indices()) s.push_back(BasisLabel::x(j));
      candidates.push_back(std::move(s));
    }
  } else {
    // A Cartan label forces every positive-root label; a negative-root label
    // forces every Cartan label. Size r + s with 1 <= s <= l leaves only
    // all positive-root labels plus s Cartan labels.
    const int s = i - r;
    std::vector<int> pick(static_cast<std::size_t>(l), 0);
    std::fill(pick.end() - s, pick.end(), 1);
    do {
      LabelSubset sub;
      for (int j = 0; j < r; ++j) sub.push_back(BasisLabel::x(j));
      for (int j = 0; j < l; ++j)
        if (pick[static_cast<std::size_t>(j)]) sub.push_back(BasisLabel::h(j));
      candidates.push_back(std::move(sub));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }

  BNormalResult out;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (auto& s : candidates) {
    if (!is_b_normal(rs, s)) throw std::logic_error("b-normal candidate failed the stability check");
    Weight sum(rs.rank());
    for (const auto& lab : s) sum += label_weight(rs, lab);
    const std::int64_t v = rs.scaled_casimir(sum);
    if (v > best) {
      best = v;
      out.subsets.clear();
    }
    if (v == best) out.subsets.push_back(std::move(s));
  }
  std::sort(out.subsets.begin(), out.subsets.end());
  out.m = Rational(best, rs.form_scale());
  return out;
}

CharacterResult mi_via_characters(const RootSystem& rs, int i, std::uint64_t budget, IrreducibleCache* cache) {
  const Character chi = exterior_power_character(rs, i, budget);
  CharacterResult out;
  out.full = decompose_character(rs, chi, cache);
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [lambda, m] : out.full.components) best = std::max(best, rs.scaled_casimir(lambda));
  for (const auto& [lambda, m] : out.full.components)
    if (rs.scaled_casimir(lambda) == best) out.top.components.emplace(lambda, m);
  out.m = Rational(best, rs.form_scale());
  return out;
}

SpectrumComputation compute_spectrum(const RootSystem& rs, const SpectrumOptions& options) {
  const int n = rs.dimension();
  const int r = rs.num_positive_roots();
  const int l = rs.rank();

  SpectrumComputation out;
  out.evidence.resize(static_cast<std::size_t>(n + 1));
  parallel_for(n + 1, options.jobs, [&](int i) {
    auto& ev = out.evidence[static_cast<std::size_t>(i)];
    if (i <= r) {
      ev.ideal = mi_via_ideals(rs, i);
    } else if (i <= r + l) {
      ev.b_normal = mi_via_b_normal(rs, i);
    }
    try {
      ev.brute = mi_bruteforce(rs, i, options.budget);
    } catch (const BudgetExceeded&) {
    }
    if (binomial(n, i) <= options.budget) ev.character = mi_via_characters(rs, i, options.budget, options.cache);
  });

  for (int i = 0; i <= n; ++i) {
    const auto& ev = out.evidence[static_cast<std::size_t>(i)];
    std::vector<Claim> claims;
    if (ev.ideal) {
      Claim c{Strategy::Ideal, ev.ideal->m, {}};
      for (const auto& ideal : ev.ideal->ideals) ++c.components[ideal_weight_sum(rs, ideal)];
      claims.push_back(std::move(c));
    }
    if (ev.b_normal) claims.push_back({Strategy::Ideal, ev.b_normal->m, sums_of(rs, ev.b_normal->subsets)});
    if (i > r + l) {
      const auto& dual = out.rows[static_cast<std::size_t>(n - i)];
      Claim c{Strategy::Duality, dual.m, {}};
      for (const auto& comp : dual.components) c.components.emplace(comp.weight, comp.mult);
      claims.push_back(std::move(c));
    }
    if (ev.brute) claims.push_back({Strategy::Brute, ev.brute->m, sums_of(rs, ev.brute->argmax)});
    if (ev.character) claims.push_back({Strategy::Character, ev.character->m, ev.character->top.components});

    if (claims.empty()) throw std::logic_error("no strategy produced degree " + std::to_string(i));
    for (const auto& c : claims) {
      if (c.m != claims.front().m || c.components != claims.front().components) {
        std::string msg = rs.type().name() + " degree " + std::to_string(i) + ": strategies disagree";
        for (const auto& d : claims) msg += "; " + describe(d);
        throw StrategyDisagreement(msg);
      }
    }

    SpectrumRow row;
    row.i = i;
    row.m = claims.front().m;
    row.dim = 0;
    for (const auto& [w, k] : claims.front().components) {
      Component comp{w, k, rs.weyl_dim(w)};
      row.dim += comp.dim * k;
      row.components.push_back(std::move(comp));
    }
    for (const auto& c : claims) row.strategies.push_back(c.strategy);
    std::sort(row.strategies.begin(), row.strategies.end());
    row.strategies.erase(std::unique(row.strategies.begin(), row.strategies.end()), row.strategies.end());
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<SpectrumRow> spectrum_table(const RootSystem& rs, const SpectrumOptions& options) {
  return compute_spectrum(rs, options).rows;
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

Check make_check(std::string id, std::string name, std::string clause) {
  return Check{std::move(id), std::move(name), std::move(clause), CheckStatus::Pass, {}};
}

void fail(Check& c, const std::string& why) {
  if (c.status != CheckStatus::Fail) {
    c.status = CheckStatus::Fail;
    c.detail = why;
  } else {
    c.detail += "; " + why;
  }
}

}  // namespace

VerificationReport verify_theorems(const RootSystem& rs, const SpectrumOptions& options) {
  VerificationReport rep;
  rep.type = rs.type();
  rep.n = rs.dimension();
  rep.r = rs.num_positive_roots();
  rep.l = rs.rank();
  const int n = rep.n, r = rep.r, l = rep.l;
  const Rational third(n, 3);
  const Weight two_rho = 2 * rs.rho();

  Check agreement = make_check("l", "strategy agreement", "every strategy that runs yields the same m_i and M_i");
  SpectrumComputation comp;
  try {
    comp = compute_spectrum(rs, options);
  } catch (const StrategyDisagreement& e) {
    fail(agreement, e.what());
    rep.checks.push_back(agreement);
    return rep;
  }
  const auto& rows = comp.rows;
  rep.rows = rows;
  auto m = [&](int i) { return rows[static_cast<std::size_t>(i)].m; };
  {
    int multi = 0;
    for (const auto& row : rows) multi += row.strategies.size() >= 2;
    agreement.detail = std::to_string(multi) + " of " + std::to_string(n + 1) + " degrees confirmed by two or more strategies";
  }

  // The exterior algebra character, when affordable, backs several checks.
  std::optional<Character> total;
  bool all_degrees_affordable = true;
  for (int i = 0; i <= n; ++i) all_degrees_affordable &= binomial(n, i) <= options.budget;
  if (all_degrees_affordable) {
    total.emplace(rs);
    for (auto& chi : exterior_power_characters(rs, n, options.budget)) *total += chi;
  }

  Check bound = make_check("a", "upper bound", "m_i <= n/3 for i = 0..n");
  for (int i = 0; i <= n; ++i)
    if (m(i) > third) fail(bound, "m_" + std::to_string(i) + " = " + m(i).str() + " > " + third.str());
  if (total) {
    for (const auto& [sigma, k] : total->entries()) {
      const Rational c = rs.casimir(sigma);
      if (c > third || (c == third && sigma != two_rho)) fail(bound, "subset sum " + sigma.str() + " has Cas " + c.str());
    }
    if (bound.status == CheckStatus::Pass) {
      bound.detail = "every subset sum has Cas <= n/3 with equality only at 2rho (" + std::to_string(total->size()) +
                     " sums)";
    }
  }
  rep.checks.push_back(bound);

  Check plateau = make_check("b", "plateau window", "m_i = n/3 iff r <= i <= r + l");
  for (int i = 0; i <= n; ++i) {
    const bool on = m(i) == third;
    const bool expected = i >= r && i <= r + l;
    if (on != expected) fail(plateau, "m_" + std::to_string(i) + " = " + m(i).str());
  }
  plateau.detail = plateau.status == CheckStatus::Pass ? "window [" + std::to_string(r) + ", " + std::to_string(r + l) +
                                                             "] at " + third.str()
                                                       : plateau.detail;
  rep.checks.push_back(plateau);

  Check mono = make_check("c", "strict monotonicity", "m_k < m_{k+1} for 0 <= k < r");
  for (int k = 0; k < r; ++k)
    if (!(m(k) < m(k + 1))) fail(mono, "m_" + std::to_string(k) + " >= m_" + std::to_string(k + 1));
  rep.checks.push_back(mono);

  Check duality = make_check("d", "duality", "m_i = m_{n-i} and M_i = M_{n-i}");
  {
    int independent = 0;
    for (int i = 0; i <= n; ++i) {
      const auto& a = rows[static_cast<std::size_t>(i)];
      const auto& b = rows[static_cast<std::size_t>(n - i)];
      if (a.m != b.m) fail(duality, "m_" + std::to_string(i) + " != m_" + std::to_string(n - i));
      if (a.components.size() != b.components.size()) {
        fail(duality, "M_" + std::to_string(i) + " and M_" + std::to_string(n - i) + " differ");
      } else {
        for (std::size_t k = 0; k < a.components.size(); ++k)
          if (a.components[k].weight != b.components[k].weight || a.components[k].mult != b.components[k].mult)
            fail(duality, "M_" + std::to_string(i) + " and M_" + std::to_string(n - i) + " differ");
      }
      if (i > r + l && std::any_of(a.strategies.begin(), a.strategies.end(), [](Strategy s) { return s != Strategy::Duality; }))
        ++independent;
    }
    if (duality.status == CheckStatus::Pass)
      duality.detail = std::to_string(independent) + " of " + std::to_string(n - r - l) +
                       " degrees above r + l confirmed independently";
  }
  rep.checks.push_back(duality);

  Check mfree = make_check("e", "multiplicity-free M_k", "M_k is multiplicity-free for 1 <= k <= r");
  for (int k = 1; k <= r; ++k)
    for (const auto& c : rows[static_cast<std::size_t>(k)].components)
      if (c.mult != 1) fail(mfree, "M_" + std::to_string(k) + " contains V" + c.weight.str() + " " + std::to_string(c.mult) + " times");
  rep.checks.push_back(mfree);

  Check global = make_check("f", "global multiplicity-freeness", "M_0 + ... + M_r is multiplicity-free");
  {
    std::map<Weight, int> seen;
    for (int k = 0; k <= r; ++k)
      for (const auto& c : rows[static_cast<std::size_t>(k)].components) {
        auto [it, fresh] = seen.emplace(c.weight, k);
        if (!fresh || c.mult != 1)
          fail(global, "V" + c.weight.str() + " occurs in M_" + std::to_string(it->second) + " and M_" + std::to_string(k));
      }
    if (global.status == CheckStatus::Pass) global.detail = std::to_string(seen.size()) + " distinct highest weights";
  }
  rep.checks.push_back(global);

  Check inj = make_check("g", "weight-sum injectivity", "<a_1> = <a_2> iff a_1 = a_2 over ad-nilpotent ideals");
  {
    const auto ideals = enumerate_ideals(rs);
    std::unordered_set<Weight, WeightHash> sums;
    for (const auto& ideal : ideals) sums.insert(ideal_weight_sum(rs, ideal));
    if (sums.size() != ideals.size()) fail(inj, std::to_string(ideals.size() - sums.size()) + " collisions");
    else inj.detail = std::to_string(ideals.size()) + " ideals, all sums distinct";
  }
  rep.checks.push_back(inj);

  Check kostant = make_check("h", "Kostant consistency", "m_i <= i for all i and m_i = i for 0 <= i <= p");
  {
    int p = 0;
    for (int i = 0; i <= n; ++i)
      if (m(i) == Rational(i)) p = i;
    rep.observed_p = p;
    for (int i = 0; i <= p; ++i)
      if (m(i) != Rational(i)) fail(kostant, "m_" + std::to_string(i) + " = " + m(i).str() + " != " + std::to_string(i));
    for (int i = 0; i <= n; ++i)
      if (m(i) > Rational(i)) fail(kostant, "m_" + std::to_string(i) + " = " + m(i).str() + " > " + std::to_string(i));
    if (kostant.status == CheckStatus::Pass) kostant.detail = "observed p = " + std::to_string(p);
  }
  rep.checks.push_back(kostant);

  Check identity = make_check("i", "exterior algebra identity", "char(Lambda g) = 2^l char(V_rho) * char(V_rho)");
  if (!total) {
    identity.status = CheckStatus::Skipped;
    identity.detail = "2^n terms exceed the budget";
  } else {
    const auto vrho = options.cache ? options.cache->get(rs.rho())
                                    : std::make_shared<const Character>(irreducible_character(rs, rs.rho()));
    const Character rhs = tensor_character(*vrho, *vrho).scaled(Multiplicity{1} << l);
    if (!(rhs == *total)) fail(identity, "characters differ");
    const Multiplicity copies = total->mult(two_rho);
    if (copies != (Multiplicity{1} << l))
      fail(identity, "V_{2rho} occurs " + std::to_string(copies) + " times, expected 2^l");
    if (identity.status == CheckStatus::Pass)
      identity.detail = "mass " + std::to_string(total->mass()) + ", " + std::to_string(copies) + " copies of V_{2rho}";
  }
  rep.checks.push_back(identity);

  Check plateau_mult = make_check("j", "plateau multiplicities", "M_{r+s} = C(l,s) V_{2rho} for s = 0..l");
  {
    Multiplicity copies = 0;
    for (int s = 0; s <= l; ++s) {
      const auto& row = rows[static_cast<std::size_t>(r + s)];
      const auto expect = static_cast<Multiplicity>(binomial(l, s));
      if (row.components.size() != 1 || row.components[0].weight != two_rho || row.components[0].mult != expect) {
        fail(plateau_mult, "M_" + std::to_string(r + s) + " is not " + std::to_string(expect) + " V_{2rho}");
      } else {
        copies += row.components[0].mult;
      }
    }
    if (copies != (Multiplicity{1} << l)) fail(plateau_mult, "plateau holds " + std::to_string(copies) + " copies, expected 2^l");
    if (plateau_mult.status == CheckStatus::Pass) plateau_mult.detail = std::to_string(copies) + " copies of V_{2rho} in total";
  }
  rep.checks.push_back(plateau_mult);

  Check argmax = make_check("k", "argmax structure",
                            "for 1 <= k <= r maximizing subsets are ad-nilpotent ideals; C_{r+s} has C(l,s) elements");
  {
    const RootPoset poset(rs);
    int examined = 0;
    for (int i = 1; i <= r + l; ++i) {
      const auto& ev = comp.evidence[static_cast<std::size_t>(i)];
      if (!ev.brute) continue;
      ++examined;
      if (i <= r) {
        for (const auto& subset : ev.brute->argmax) {
          RootSet set;
          bool positive = true;
          for (const auto& lab : subset) {
            if (lab.kind != BasisLabel::Kind::X) positive = false;
            else set.set(lab.index);
          }
          if (!positive || !poset.is_upper_set(set)) fail(argmax, "degree " + std::to_string(i) + " maximizer is not an ideal");
        }
      } else if (ev.brute->argmax.size() != binomial(l, i - r)) {
        fail(argmax, "degree " + std::to_string(i) + " has " + std::to_string(ev.brute->argmax.size()) + " maximizers");
      }
    }
    if (examined == 0) {
      argmax.status = CheckStatus::Skipped;
      argmax.detail = "brute force exceeded the budget at every degree in [1, r + l]";
    } else if (argmax.status == CheckStatus::Pass) {
      argmax.detail = std::to_string(examined) + " of " + std::to_string(r + l) + " degrees searched exhaustively";
    }
  }
  rep.checks.push_back(argmax);
  rep.checks.push_back(agreement);
  return rep;
}

}  // namespace casimir
