#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "casimir/character.hpp"
#include "casimir/spectrum.hpp"
#include "cli.hpp"

using namespace casimir;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::map<std::string, VerificationReport> g_reports;

Outcome strange_formula() {
  Outcome o;
  int count = 0;
  for (const auto& t : simple_types_up_to_rank(8)) {
    const RootSystem rs(t);
    const Rational got = rs.inner(rs.rho(), rs.rho());
    if (got != Rational(rs.dimension(), 24)) o.fail(t.name() + ": (rho,rho) = " + got.str());
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " types";
  return o;
}

Outcome box_character() {
  Outcome o;
  int count = 0;
  for (const auto& t : simple_types_up_to_rank(3)) {
    const RootSystem rs(t);
    for (int k = 1; k <= 3; ++k) {
      const auto box = krho_box_character(rs, k);
      std::int64_t mass = 1;
      for (int j = 0; j < rs.num_positive_roots(); ++j) mass *= k + 1;
      if (box.mass() != mass) o.fail(t.name() + " k=" + std::to_string(k) + ": mass " + std::to_string(box.mass()));
      if (!(box == irreducible_character(rs, k * rs.rho())))
        o.fail(t.name() + " k=" + std::to_string(k) + ": differs from Freudenthal");
      ++count;
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " (type, k) pairs";
  return o;
}

bool has(const SpectrumRow& row, Strategy s) {
  return std::find(row.strategies.begin(), row.strategies.end(), s) != row.strategies.end();
}

Outcome property_sweep() {
  Outcome o;
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    const RootSystem rs(CartanType::parse(name));
    SpectrumOptions opts;
    opts.jobs = jobs();
    auto rep = verify_theorems(rs, opts);
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail) o.fail(std::string(name) + " check " + c.id + ": " + c.detail);
    const bool small = rs.rank() <= 3 && std::string(name) != "D4";
    for (const auto& row : rep.rows) {
      const int strategies = static_cast<int>(row.strategies.size());
      if (small && strategies < 3) o.fail(std::string(name) + " row " + std::to_string(row.i) + ": fewer than three strategies");
      if (!small && row.i <= rs.num_positive_roots() && !has(row, Strategy::Ideal))
        o.fail(std::string(name) + " row " + std::to_string(row.i) + ": no IDEAL strategy");
    }
    g_reports.emplace(name, std::move(rep));
  }
  if (o.ok) {
    int brute = 0, rows = 0;
    for (const auto& [name, rep] : g_reports)
      for (const auto& row : rep.rows) {
        ++rows;
        brute += has(row, Strategy::Brute);
      }
    o.detail = std::to_string(g_reports.size()) + " types, brute force confirmed " + std::to_string(brute) + "/" +
               std::to_string(rows) + " rows";
  }
  return o;
}

Outcome golden_table() {
  Outcome o;
  const RootSystem a2(CartanType{Series::A, 2});
  const auto rows = spectrum_table(a2);
  const std::vector<Rational> a2m = {0, 1, 2, Rational(8, 3), Rational(8, 3), Rational(8, 3), 2, 1, 0};
  for (std::size_t i = 0; i < a2m.size(); ++i)
    if (rows[i].m != a2m[i]) o.fail("A2 m_" + std::to_string(i) + " = " + rows[i].m.str());
  if (rows[2].components.size() != 2 || rows[2].components[0].weight != Weight{0, 3} ||
      rows[2].components[1].weight != Weight{3, 0} || rows[2].components[0].mult != 1 || rows[2].components[1].mult != 1)
    o.fail("A2 M_2 is not V(3w1) + V(3w2)");
  if (rows[4].components.size() != 1 || rows[4].components[0].weight != Weight{2, 2} || rows[4].components[0].mult != 2)
    o.fail("A2 M_4 is not 2 V(2rho)");
  const RootSystem b2(CartanType{Series::B, 2});
  const auto brows = spectrum_table(b2);
  const std::vector<Rational> b2m = {0, 1, 2, 3, Rational(10, 3), Rational(10, 3), Rational(10, 3), 3, 2, 1, 0};
  for (std::size_t i = 0; i < b2m.size(); ++i)
    if (brows[i].m != b2m[i]) o.fail("B2 m_" + std::to_string(i) + " = " + brows[i].m.str());
  return o;
}

Outcome remark_identity() {
  Outcome o;
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    const RootSystem rs(CartanType::parse(name));
    Character total(rs);
    for (const auto& chi : exterior_power_characters(rs, rs.dimension())) total += chi;
    const auto vrho = irreducible_character(rs, rs.rho());
    const auto rhs = tensor_character(vrho, vrho).scaled(Multiplicity{1} << rs.rank());
    if (!(total == rhs)) o.fail(std::string(name) + ": sum of exterior powers differs from 2^l V_rho x V_rho");
    Multiplicity copies = 0;
    std::uint64_t binomials = 0;
    for (int s = 0; s <= rs.rank(); ++s) {
      const auto res = mi_via_characters(rs, rs.num_positive_roots() + s);
      if (auto it = res.full.components.find(2 * rs.rho()); it != res.full.components.end()) copies += it->second;
      binomials += binomial(rs.rank(), s);
    }
    if (copies != (Multiplicity{1} << rs.rank()) || binomials != (std::uint64_t{1} << rs.rank()))
      o.fail(std::string(name) + ": " + std::to_string(copies) + " copies of V_2rho on the plateau");
    // No copies of V_2rho off the plateau.
    const auto wedge = decompose_character(rs, total);
    if (wedge.components.at(2 * rs.rho()) != copies) o.fail(std::string(name) + ": V_2rho outside the plateau");
  }
  return o;
}

Outcome lower_weights() {
  Outcome o;
  std::mt19937 gen(2026);
  std::uniform_int_distribution<int> coord(0, 4);
  std::size_t weights = 0;
  for (const auto& t : simple_types_up_to_rank(3)) {
    const RootSystem rs(t);
    for (int trial = 0; trial < 50; ++trial) {
      Weight lambda(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) lambda[j] = coord(gen);
      const Rational top = rs.casimir(lambda);
      const auto chi = irreducible_character(rs, lambda);
      for (const auto& [mu, m] : chi.entries()) {
        ++weights;
        if (mu != lambda && !(rs.casimir(mu) < top)) o.fail(t.name() + " " + lambda.str() + ": " + mu.str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(weights) + " weights";
  return o;
}

Outcome kostant() {
  Outcome o;
  if (g_reports.empty()) {
    o.fail("property sweep did not produce reports");
    return o;
  }
  std::ostringstream seen;
  for (const auto& [name, rep] : g_reports) {
    for (int i = 0; i <= rep.observed_p; ++i)
      if (rep.rows[static_cast<std::size_t>(i)].m != i) o.fail(name + ": m_" + std::to_string(i) + " != " + std::to_string(i));
    seen << name << "=" << rep.observed_p << " ";
  }
  if (g_reports.at("A2").observed_p != 2) o.fail("A2 observed p != 2");
  if (g_reports.at("B2").observed_p != 3) o.fail("B2 observed p != 3");
  if (o.ok) o.detail = "p: " + seen.str();
  return o;
}

Outcome determinism() {
  Outcome o;
  std::ostringstream a, b, ea, eb;
  const int ca = cli::run({"verify", "--type", "A2,B2,G2", "--format", "json", "--jobs", "1"}, a, ea);
  const int cb = cli::run({"verify", "--type", "A2,B2,G2", "--format", "json", "--jobs", "8"}, b, eb);
  if (ca != 0 || cb != 0) o.fail("verify exited with " + std::to_string(ca) + "/" + std::to_string(cb));
  if (a.str() != b.str()) o.fail("outputs differ");
  if (o.ok) o.detail = std::to_string(a.str().size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "strange formula", 5, strange_formula},
      {2, "box character of V_{k rho}", 60, box_character},
      {3, "spectrum property sweep", 600, property_sweep},
      {4, "golden A2/B2 tables", 0, golden_table},
      {5, "exterior algebra identity", 120, remark_identity},
      {6, "lower weights have smaller Casimir", 0, lower_weights},
      {7, "Kostant consistency", 0, kostant},
      {8, "determinism across --jobs", 0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    all &= o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << secs << " s";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
