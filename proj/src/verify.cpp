#include "znp/verify.hpp"

#include "znp/errors.hpp"
#include "znp/invariants.hpp"
#include "znp/quotient_diameter.hpp"
#include "znp/stable_norm.hpp"

namespace znp {

namespace {

Check exact_le(std::string name, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), lhs <= rhs ? Verdict::holds : Verdict::fails, lhs == rhs};
}

Check refined_le(std::string name, const IntervalFn& lhs, const IntervalFn& rhs, unsigned bits, unsigned max_bits) {
  const Comparison c = compare_le(lhs, rhs, bits, max_bits);
  return {std::move(name), c.verdict, c.equal};
}

IntervalFn constant(const Rational& x) {
  return [x](unsigned) { return RationalInterval(x); };
}

void margulis_pair(std::vector<Check>& out, const std::string& suffix, unsigned long n, const Rational& stsys,
                   const Rational& D, const Rational& w, unsigned bits, unsigned max_bits) {
  const Rational lower = 2 / Rational(factorial(n)) / (pow(D, static_cast<long>(n) - 1) * w);
  out.push_back(exact_le("margulis_lower" + suffix, lower, stsys));
  out.push_back(refined_le(
      "margulis_upper" + suffix, constant(stsys),
      [n, w](unsigned b) { return RationalInterval(Rational(2)) / nth_root(w, n, b); }, bits, max_bits));
}

}  // namespace

Verdict worst(const std::vector<Check>& checks) {
  Verdict v = Verdict::holds;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fails) return Verdict::fails;
    if (c.verdict == Verdict::undecided) v = Verdict::undecided;
  }
  return v;
}

std::vector<Check> verify_margulis(const MargulisInputs& in, unsigned bits, unsigned max_bits) {
  if (in.n < 1 || in.D <= 0 || in.omega <= 0 || in.stsys <= 0)
    throw PreconditionError("verify_margulis: n, D, omega and stsys must be positive");
  std::vector<Check> out;
  margulis_pair(out, "", in.n, in.stsys, in.D, in.omega, bits, max_bits);
  if (in.Omega) {
    if (*in.Omega < in.omega) throw PreconditionError("verify_margulis: Omega must bound omega from above");
    // With Omega >= omega only the lower bound survives as a consequence.
    const Rational lower = 2 / Rational(factorial(in.n)) / (pow(in.D, static_cast<long>(in.n) - 1) * *in.Omega);
    out.push_back(exact_le("margulis_lower_Omega", lower, in.stsys));
  }
  return out;
}

AnnuliCheck verify_annuli(const std::vector<std::int64_t>& counts, const AnnuliInputs& in, const Rational& delta) {
  if (delta <= Rational(4 * in.n) * in.D + Rational(11, 10) * in.c_hat)
    throw PreconditionError("verify_annuli: Delta must exceed 4nD + (11/10) c_hat = " +
                            to_string(Rational(4 * in.n) * in.D + Rational(11, 10) * in.c_hat));
  AnnuliCheck out;
  std::tie(out.A, out.B) = annuli_constants(in.n, in.omega, delta);
  out.counts = counts;
  out.symbolic_ok = in.c_hat <= c_simplified({in.n, in.D, in.omega, std::nullopt});
  for (std::size_t k = 1; k < counts.size(); ++k) {
    const Rational base = pow(Rational(static_cast<long>(k)) * delta, static_cast<long>(in.n) - 1);
    const Rational v(static_cast<long>(counts[k]));
    const bool ok = out.A * base <= v && v <= out.B * base;
    out.shells.push_back({"annulus_" + std::to_string(k), ok ? Verdict::holds : Verdict::fails, false});
  }
  return out;
}

AnnuliCheck verify_annuli(const QuotientGraph& g, const AnnuliInputs& in, const Rational& delta, std::int64_t kmax,
                          std::size_t node_budget) {
  if (delta <= Rational(4 * in.n) * in.D + Rational(11, 10) * in.c_hat)
    return verify_annuli(std::vector<std::int64_t>{}, in, delta);  // throws
  return verify_annuli(annuli_counts(g, delta, kmax, node_budget), in, delta);
}

ComponentsCheck verify_components(const MassEntry& m, const ComponentsInputs& in, unsigned bits, unsigned max_bits) {
  ComponentsCheck out{m, {}};
  const Rational N(static_cast<long>(m.parts));
  const Rational Omega = in.Omega.value_or(in.omega);
  out.checks.push_back(exact_le("components_trivial", N, m.mass / in.sys));
  const unsigned long n = in.n;
  const Rational w = in.omega, l = m.mass;
  out.checks.push_back(refined_le(
      "components_refined", constant(N), [n, w, l](unsigned b) { return refined_bound(n, w, l, b); }, bits,
      max_bits));
  const Integer threshold = N_threshold({n, in.D, Omega, std::nullopt});
  if (N <= Rational(threshold)) {
    out.checks.push_back({"components_sublinear", Verdict::holds, N == Rational(threshold)});
  } else {
    out.checks.push_back(refined_le(
        "components_sublinear", constant(N), [n, Omega, l](unsigned b) { return sublinear_bound(n, Omega, l, b); },
        bits, max_bits));
  }
  return out;
}

ComponentsCheck verify_components(const QuotientGraph& g, const LatticeVector& gamma, const ComponentsInputs& in,
                                  std::size_t node_budget) {
  return verify_components(mass(g, gamma, node_budget), in);
}

Verdict InvariantReport::overall() const { return worst(checks); }

InvariantReport invariant_report(const std::string& name, const QuotientGraph& g, std::optional<Rational> radius,
                                 unsigned bits, std::size_t node_budget) {
  InvariantReport r;
  r.name = name;
  r.n = g.rank();
  const StableBall ball = stable_unit_ball(g);
  r.sys = systole(g, node_budget).value;
  r.stsys = stable_systole(ball, standard_basis(g.rank())).value;
  r.codiam = quotient_diameter(g);
  r.omega = ball_volume(ball);
  r.c_bound = c_simplified({r.n, r.codiam, r.omega, std::nullopt});
  r.margulis = margulis_bounds({r.n, r.codiam, r.omega, std::nullopt}, bits);
  r.checks.push_back(exact_le("stsys<=sys", r.stsys, r.sys));
  r.checks.push_back(exact_le("sys<=2codiam", r.sys, 2 * r.codiam));
  margulis_pair(r.checks, "", r.n, r.stsys, r.codiam, r.omega, bits, kMaxPrecisionBits);
  if (radius) {
    r.radius = radius;
    r.omega_empirical = asymptotic_volume_empirical(g, *radius, node_budget);
    const QbdDeviation dev = qbd_deviation(g, ball, *radius, node_budget);
    r.c_hat = dev.value;
    r.c_hat_argmax = dev.argmax;
    r.checks.push_back(exact_le("c_hat<=c_bound", dev.value, r.c_bound));
  }
  return r;
}

InvariantReport invariant_report(const NormedLatticeSpace& space, unsigned bits) {
  InvariantReport r;
  r.name = space.name;
  r.n = space.rank();
  r.stsys = stable_systole(space.ball, space.basis).value;
  r.sys = r.stsys;  // a normed space is its own stable norm
  r.codiam = space.codiameter;
  r.omega = ball_volume(space.ball) / covolume(space.basis);
  r.c_bound = c_simplified({r.n, r.codiam, r.omega, std::nullopt});
  r.margulis = margulis_bounds({r.n, r.codiam, r.omega, std::nullopt}, bits);
  r.checks.push_back(exact_le("sys<=2codiam", r.sys, 2 * r.codiam));
  margulis_pair(r.checks, "", r.n, r.stsys, r.codiam, r.omega, bits, kMaxPrecisionBits);
  return r;
}

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name}, {"verdict", to_string(c.verdict)}, {"equal", c.equal}};
}

nlohmann::json to_json(const InvariantReport& r) {
  auto iv = [](const RationalInterval& x) { return nlohmann::json{{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}}; };
  nlohmann::json doc = {{"name", r.name},
                        {"n", r.n},
                        {"sys", to_string(r.sys)},
                        {"stsys", to_string(r.stsys)},
                        {"codiam", to_string(r.codiam)},
                        {"omega", to_string(r.omega)},
                        {"c_bound", to_string(r.c_bound)},
                        {"margulis_lower", iv(r.margulis.lower)},
                        {"margulis_upper", iv(r.margulis.upper)}};
  if (r.radius) doc["radius"] = to_string(*r.radius);
  if (r.omega_empirical) doc["omega_empirical"] = to_string(*r.omega_empirical);
  if (r.c_hat) doc["c_hat"] = to_string(*r.c_hat);
  if (r.c_hat_argmax) doc["c_hat_argmax"] = r.c_hat_argmax->to_string();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  doc["checks"] = std::move(checks);
  doc["overall"] = to_string(r.overall());
  return doc;
}

}  // namespace znp
