#include "multiarr_cli/commands.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "multiarr/arr3.hpp"
#include "multiarr/lattice.hpp"
#include "multiarr/shift.hpp"
#include "multiarr_cli/corpus.hpp"
#include "multiarr_cli/desk_suite.hpp"

namespace multiarr::cli {

using nlohmann::json;

namespace {

std::string pair_string(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> line_strings(const Arrangement2& a) {
  std::vector<std::string> out;
  for (const auto& f : a.forms()) out.push_back(f.to_string());
  return out;
}

json derivation_json(const Derivation2& d) {
  return json{{"degree", d.degree()}, {"d1", d.f().to_string()}, {"d2", d.g().to_string()}};
}

json verification_json(const VerificationReport& v) {
  return json{{"status", to_string(v.status)},
              {"checked", v.checked},
              {"characteristic_zero", v.characteristic_zero},
              {"hypotheses_hold", v.hypotheses_hold},
              {"counterexamples", v.counterexamples},
              {"parity_failures", v.parity_failures},
              {"notes", v.notes}};
}

template <class Fn>
Report timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Report r = fn();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

Report cmd_exp(const ArrangementDocument& doc) {
  return timed([&] {
    const auto [a, m] = to_multiarrangement(doc);
    Report r;
    r.command = "exp";
    r.digest = document_digest(doc);
    const auto e = exponents(a, m);
    const bool balanced = is_balanced(m);
    const int h = static_cast<int>(a.size());

    r.text.push_back("exp=" + pair_string(e.d1, e.d2) + " Δ=" + std::to_string(e.delta()) +
                     " balanced=" + (balanced ? "true" : "false"));
    r.text.push_back("field: " + a.field().name());
    r.text.push_back("lines: " + join(line_strings(a), ", "));
    r.text.push_back("multiplicity: " + m.to_string());
    const auto cls = classify_with_delta(m, e.delta());
    r.text.push_back("lattice class: " + cls.to_string());

    std::vector<std::string> warnings;
    if (!a.field().is_rational()) {
      warnings.push_back("characteristic " + std::to_string(a.field().characteristic()) +
                         ": exponent bounds proven in characteristic zero need not hold");
      if (balanced && h > 2 && e.delta() > h - 2) {
        warnings.push_back("Δ=" + std::to_string(e.delta()) + " exceeds h-2=" + std::to_string(h - 2) +
                           " (expected violation in positive characteristic)");
      }
    } else if (balanced && h > 2) {
      r.check(e.delta() <= h - 2, "balanced bound Δ <= h-2");
    }

    json basis_json = json::array();
    std::string saito = "1";
    if (m.total() == 0) {
      const auto one = Scalar::one(a.field());
      const auto zero = Scalar::zero(a.field());
      basis_json.push_back(derivation_json(Derivation2::constant(one, zero)));
      basis_json.push_back(derivation_json(Derivation2::constant(zero, one)));
      r.text.push_back("theta1 (degree 0): d1");
      r.text.push_back("theta2 (degree 0): d2");
    } else {
      const auto b = basis(a, m);
      basis_json.push_back(derivation_json(b.theta1));
      basis_json.push_back(derivation_json(b.theta2));
      saito = b.saito_scalar.to_string();
      r.text.push_back("theta1 (degree " + std::to_string(b.theta1.degree()) + "): " + b.theta1.to_string());
      r.text.push_back("theta2 (degree " + std::to_string(b.theta2.degree()) + "): " + b.theta2.to_string());
      r.text.push_back("saito: det(theta1, theta2) = " + saito + " * prod alpha_H^m(H)");
      r.check(b.exps == e && in_derivation_module(a, m, b.theta1) && in_derivation_module(a, m, b.theta2),
              "basis lies in D(A,m) with degrees " + pair_string(e.d1, e.d2));
    }
    if (!balanced) {
      const auto nb = nonbalanced_exponents(a, m);
      r.check(nb.exps == e, "closed form for dominant line " + a[nb.dominant].to_string() + " gives " +
                                pair_string(nb.exps.d1, nb.exps.d2));
    }
    for (const auto& w : warnings) r.text.push_back("warning: " + w);

    r.results = json{{"field", a.field().name()},
                     {"lines", line_strings(a)},
                     {"multiplicity", m.values()},
                     {"exponents", {e.d1, e.d2}},
                     {"delta", e.delta()},
                     {"balanced", balanced},
                     {"class", cls.to_string()},
                     {"basis", basis_json},
                     {"saito_scalar", saito},
                     {"warnings", warnings}};
    return r;
  });
}

Report cmd_lattice(const ArrangementDocument& doc, const LatticeOptions& opts) {
  return timed([&] {
    const auto [a, m_doc] = to_multiarrangement(doc);
    if (opts.caps.size() != a.size()) {
      throw PreconditionError("--caps needs " + std::to_string(a.size()) + " entries, got " +
                              std::to_string(opts.caps.size()));
    }
    std::vector<std::string> names{"one", "limit", "str"};
    if (opts.verify) {
      if (*opts.verify != "one" && *opts.verify != "limit" && *opts.verify != "str") {
        throw PreconditionError("--verify must be one, limit or str");
      }
      names = {*opts.verify};
    }
    const LatticeRegion region(a, opts.caps, opts.total_cap);
    if (region.box_size() > opts.budget) {
      throw PreconditionError("region has " + std::to_string(region.box_size()) + " points, over the budget of " +
                              std::to_string(opts.budget) + "; lower --caps or raise --budget");
    }
    Report r;
    r.command = "lattice";
    r.digest = document_digest(doc);
    const DeltaTable table(region, opts.jobs);

    std::map<int, std::size_t> histogram;
    for (std::size_t i = 0; i < table.points().size(); ++i) ++histogram[table.exponents_at(i).delta()];
    std::vector<std::string> caps_text;
    for (int c : opts.caps) caps_text.push_back(std::to_string(c));
    r.text.push_back("region: caps=(" + join(caps_text, ",") + ")" +
                     (opts.total_cap ? " total<=" + std::to_string(*opts.total_cap) : "") +
                     " points=" + std::to_string(table.points().size()));
    json hist = json::array();
    for (const auto& [d, n] : histogram) {
      r.text.push_back("  Δ=" + std::to_string(d) + ": " + std::to_string(n));
      hist.push_back({d, n});
    }

    json verifications = json::object();
    json peaks = json::array();
    for (const auto& name : names) {
      VerificationReport v;
      std::string extra;
      if (name == "one") {
        v = verify_lemma_one(table);
      } else if (name == "limit") {
        const auto lim = verify_theorem_limit(table);
        v = lim.report;
        extra = " balanced=" + std::to_string(lim.balanced_points) + " maximizers=" +
                std::to_string(lim.maximizers.size());
      } else {
        const auto str = verify_theorem_str(table);
        v = str.report;
        extra = " verified=" + std::to_string(str.verified) + " clipped=" + std::to_string(str.clipped);
        for (const auto& comp : str.components) {
          const char* state = comp.state == ComponentSummary::State::Verified  ? "verified"
                              : comp.state == ComponentSummary::State::Clipped ? "unverifiable (clipped)"
                                                                               : "FAILED";
          r.text.push_back("peak " + comp.peak.to_string() + " Δ=" + std::to_string(comp.peak_delta) +
                           " size=" + std::to_string(comp.size) + " " + state +
                           (comp.detail.empty() ? "" : ": " + comp.detail));
          peaks.push_back(json{{"peak", comp.peak.values()},
                               {"delta", comp.peak_delta},
                               {"size", comp.size},
                               {"state", state},
                               {"detail", comp.detail}});
        }
      }
      for (const auto& n : v.notes) r.text.push_back(name + " note: " + n);
      for (const auto& ce : v.counterexamples) r.text.push_back(name + " counterexample: " + ce);
      for (const auto& pf : v.parity_failures) r.text.push_back(name + " parity failure: " + pf);
      const std::string tag = v.status == VerdictStatus::ExpectedViolation ? " [" + to_string(v.status) + "]" : "";
      r.check(v.passed(), name + tag + " checked=" + std::to_string(v.checked) + extra);
      verifications[name] = verification_json(v);
    }
    r.results = json{{"caps", opts.caps},
                     {"points", table.points().size()},
                     {"delta_histogram", hist},
                     {"verifications", verifications},
                     {"peaks", peaks}};
    if (opts.total_cap) r.results["total_cap"] = *opts.total_cap;
    return r;
  });
}

Report cmd_shift(const ArrangementDocument& doc, const std::vector<int>& m0_values, unsigned jobs) {
  return timed([&] {
    const auto [a, m_doc] = to_multiarrangement(doc);
    const Multiplicity m0 = m0_values.empty() ? m_doc : Multiplicity(m0_values);
    if (m0.size() != a.size()) {
      throw PreconditionError("--m0 needs " + std::to_string(a.size()) + " entries, got " + std::to_string(m0.size()));
    }
    const auto hy = check_shift_hypotheses(a, m0);
    if (!hy.hold()) {
      throw PreconditionError("shift hypotheses fail for m0=" + m0.to_string() + ": " + join(hy.failures, "; "));
    }
    Report r;
    r.command = "shift";
    r.digest = document_digest(doc);
    const auto cert = shift_isomorphism_check(a, m0, jobs);
    r.text.push_back("m0=" + m0.to_string() + " Δ=" + std::to_string(hy.delta) + " h=" + std::to_string(hy.h) +
                     (hy.variant == 1 ? " (h=3, m0-1 balanced)" : " (h>=4)"));
    r.text.push_back("theta0: " + cert.theta0.to_string());
    json rows = json::array();
    std::size_t passed = 0;
    for (const auto& row : cert.rows) {
      passed += row.pass;
      const std::string scalar = row.saito_scalar ? row.saito_scalar->to_string() : "none";
      r.text.push_back("m=" + row.shift.to_string() + " target=" + row.target.to_string() + " " +
                       (row.pass ? "PASS" : "FAIL") + " saito=" + scalar +
                       (row.detail.empty() ? "" : " " + row.detail));
      rows.push_back(json{{"m", row.shift.values()},
                          {"target", row.target.values()},
                          {"pass", row.pass},
                          {"images_in_module", row.images_in_module},
                          {"degree_identity", row.degree_identity},
                          {"saito_scalar", scalar}});
    }
    if (cert.theorem_violation) r.text.push_back("THEOREM VIOLATION reproducer:\n" + cert.reproducer);
    r.check(cert.pass, "shift isomorphism on " + std::to_string(passed) + "/" + std::to_string(cert.rows.size()) +
                           (cert.exhaustive ? " shifts (exhaustive)" : " sampled shifts"));
    r.results = json{{"m0", m0.values()},
                     {"theta0", derivation_json(cert.theta0)},
                     {"variant", hy.variant},
                     {"exhaustive", cert.exhaustive},
                     {"rows", rows},
                     {"pass", cert.pass}};
    return r;
  });
}

Report cmd_free(const ArrangementDocument& doc, std::optional<std::size_t> h0) {
  return timed([&] {
    std::optional<AffineArrangement2> affine;
    std::optional<Arrangement3> central;
    std::size_t chosen = 0;
    if (doc.dim == 3 && doc.central) {
      central = to_arrangement3(doc);
      chosen = h0.value_or(0);
    } else if (doc.dim == 2 && !doc.central) {
      affine = to_affine(doc);
      auto coned = cone(*affine);
      chosen = h0.value_or(coned.infinite_index);
      central = std::move(coned.arrangement);
    } else {
      throw PreconditionError("free needs a dim-3 central or a dim-2 affine document");
    }
    if (chosen >= central->size()) {
      throw PreconditionError("--H0 " + std::to_string(chosen) + " is out of range (|A|=" +
                              std::to_string(central->size()) + ")");
    }
    Report r;
    r.command = "free";
    r.digest = document_digest(doc);
    const auto v = is_free(*central, chosen);

    std::string head;
    if (v.free) {
      head = "FREE exp=(" + std::to_string(v.exponents[0]) + "," + std::to_string(v.exponents[1]) + "," +
             std::to_string(v.exponents[2]) + ") coker=0";
      if (v.combinatorial) head += " combinatorial=true(" + v.combinatorial_reason + ")";
    } else {
      head = "NOT FREE coker=" + std::to_string(v.coker_dim);
    }
    r.text.push_back(head);
    r.text.push_back("H0: " + (*central)[chosen].to_string() + " (index " + std::to_string(chosen) + ")");
    r.text.push_back("chi: " + v.chi.to_string());
    json ziegler = nullptr;
    if (v.ziegler) {
      r.text.push_back("Ziegler restriction: " + join(line_strings(v.ziegler->arrangement), ", ") +
                       " m=" + v.ziegler->multiplicity.to_string() + " exp=" +
                       pair_string(v.restriction_exps.d1, v.restriction_exps.d2));
      ziegler = json{{"lines", line_strings(v.ziegler->arrangement)},
                     {"multiplicity", v.ziegler->multiplicity.values()},
                     {"exponents", {v.restriction_exps.d1, v.restriction_exps.d2}}};
    }
    r.text.push_back(std::string("combinatorial: ") + (v.combinatorial ? v.combinatorial_reason : "no"));

    json theorems = json::object();
    if (affine) {
      const auto fc = thm_fc_check(*affine);
      r.text.push_back("free-by-chi check: " +
                       (fc.applies ? "applies, case gap h-" + std::to_string(fc.gap_case) + ", d=" + std::to_string(fc.d)
                                   : "not applicable (" + fc.reason + ")"));
      if (fc.applies) r.check(!fc.violation, "free-by-chi conclusion (coker=" + std::to_string(fc.coker_dim) + ")");
      theorems["fc"] = json{{"applies", fc.applies}, {"free", fc.free}, {"reason", fc.reason},
                            {"gap_case", fc.gap_case}, {"d", fc.d}};
      const auto rest = thm_rest_check(*affine);
      if (rest.applicable) {
        r.check(rest.holds, "root bounds case " + std::to_string(rest.bound_case) + ": d=" + std::to_string(rest.d) +
                                " roots (" + std::to_string(rest.root_a) + "," + std::to_string(rest.root_b) + ")");
      } else {
        r.text.push_back("root bounds: not applicable (" + rest.reason + ")");
      }
      theorems["rest"] = json{{"applicable", rest.applicable}, {"reason", rest.reason}, {"case", rest.bound_case},
                              {"d", rest.d}, {"roots", {rest.root_a, rest.root_b}}, {"holds", rest.holds}};
      if (affine->field().is_rational()) {
        const auto ch = chamber_count(*affine);
        r.text.push_back("chambers: " + std::to_string(ch.zaslavsky) +
                         (ch.euler ? " (Euler-formula count " + std::to_string(*ch.euler) + ")"
                                   : " (Euler-formula count skipped above 10 lines)"));
        if (ch.euler) r.check(ch.agree(), "chamber count agrees with the Euler-formula count");
        const auto rest2 = thm_rest2_check(*affine);
        if (rest2.applicable) {
          r.check(rest2.holds, "chamber bound " + std::to_string(rest2.chambers) + " >= " +
                                   std::to_string(rest2.bound) + (rest2.equality ? " (equality, cone free)" : ""));
        } else {
          r.text.push_back("chamber bound: not applicable (" + rest2.reason + ")");
        }
        theorems["chambers"] = ch.zaslavsky;
        theorems["rest2"] = json{{"applicable", rest2.applicable}, {"reason", rest2.reason},
                                 {"bound", rest2.bound},       {"equality", rest2.equality},
                                 {"holds", rest2.holds}};
      }
    } else {
      const auto pb3 = pb3_membership(*central);
      r.text.push_back(std::string("PB3: ") + (pb3.member ? "member" : "not a member"));
      for (const auto& line : pb3.certificate) r.text.push_back("  " + line);
      if (pb3.member) r.check(v.free, "PB3 member is free");
      theorems["pb3"] = json{{"member", pb3.member}, {"certificate", pb3.certificate}};
    }

    std::vector<std::int64_t> chi = v.chi.coeffs();
    r.results = json{{"free", v.free},
                     {"exponents", v.free ? json(v.exponents) : json(nullptr)},
                     {"coker_dim", v.coker_dim},
                     {"h0", chosen},
                     {"ziegler", ziegler},
                     {"combinatorial", v.combinatorial},
                     {"combinatorial_reason", v.combinatorial_reason},
                     {"chi", v.chi.to_string()},
                     {"chi_coefficients", chi},
                     {"theorems", theorems}};
    return r;
  });
}

Report cmd_verify_all(const std::string& suite, const std::optional<std::string>& corpus_dir, unsigned jobs) {
  if (suite != "desk") throw PreconditionError("unknown suite \"" + suite + "\" (available: desk)");
  const auto corpus = corpus_dir ? load_corpus(*corpus_dir) : builtin_corpus();
  return timed([&] {
    Report r;
    r.command = "verify-all";
    const auto results = run_desk_suite(corpus, jobs);
    json rows = json::array();
    for (const auto& c : results) {
      r.text.push_back(summary_line(c));
      for (const auto& d : c.details) r.text.push_back("      " + d);
      rows.push_back(json{{"id", c.id}, {"title", c.title}, {"status", to_string(c.status)}, {"details", c.details}});
      if (!c.passed()) r.exit_code = kExitViolation;
    }
    r.results = json{{"suite", suite}, {"corpus_documents", corpus.size()}, {"criteria", rows}};
    return r;
  });
}

}  // namespace multiarr::cli
