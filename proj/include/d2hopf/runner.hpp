#pragma once

#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "antipode.hpp"
#include "io.hpp"
#include "pimethod.hpp"

namespace d2hopf {

enum class CheckGroup { d2, bialgebroid, hopf, skew, lu, pi, cohomology };

inline const std::vector<std::pair<CheckGroup, const char*>>& check_groups() {
  static const std::vector<std::pair<CheckGroup, const char*>> g = {
      {CheckGroup::d2, "d2"},
      {CheckGroup::bialgebroid, "bialgebroid"},
      {CheckGroup::hopf, "hopf"},
      {CheckGroup::skew, "skew"},
      {CheckGroup::lu, "lu"},
      {CheckGroup::pi, "pi"},
      {CheckGroup::cohomology, "cohomology"}};
  return g;
}

inline std::string group_name(CheckGroup g) {
  for (const auto& [k, n] : check_groups())
    if (k == g) return n;
  return "?";
}

/// A parsed `--checks` flag: either the literal `all` (resolved later to the
/// groups applicable to the input) or an explicit, deduplicated selection in
/// canonical order.
struct CheckSelection {
  bool all = false;
  std::vector<CheckGroup> groups;
};

inline CheckSelection parse_check_selection(const std::string& csv) {
  CheckSelection sel;
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  toks.push_back(cur);
  std::vector<bool> seen(check_groups().size(), false);
  for (const auto& t : toks) {
    if (t.empty()) continue;
    if (t == "all") {
      sel.all = true;
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < check_groups().size(); ++i)
      if (t == check_groups()[i].second) {
        seen[i] = true;
        found = true;
      }
    if (!found)
      throw ParseError("checks: unknown group '" + t +
                       "' (known: d2, bialgebroid, hopf, skew, lu, pi, "
                       "cohomology, all)");
  }
  if (sel.all) return sel;
  for (std::size_t i = 0; i < check_groups().size(); ++i)
    if (seen[i]) sel.groups.push_back(check_groups()[i].first);
  if (sel.groups.empty()) throw ParseError("checks: empty selection");
  return sel;
}

struct GroupReport {
  std::string group;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool pass() const { return all_pass(checks); }
};

struct VerifyReport {
  std::string input;
  std::string field;
  std::vector<std::pair<std::string, std::size_t>> dims;
  double context_seconds = 0.0;
  std::vector<GroupReport> groups;

  bool all_pass() const {
    for (const auto& g : groups)
      if (!g.pass()) return false;
    return true;
  }
};

/// The report as JSON. Check ids are prefixed with their group; the witness
/// key is present only when a check carries a witness or note. Timings live
/// in their own object so the rest of the document is run-independent.
inline Json report_to_json(const VerifyReport& r) {
  Json j;
  j["input"] = r.input;
  j["field"] = r.field;
  Json checks = Json::array();
  for (const auto& g : r.groups)
    for (const auto& c : g.checks) {
      Json e;
      e["id"] = g.group + ":" + c.id;
      e["statement"] = c.statement;
      e["pass"] = c.pass;
      if (!c.witness.empty()) e["witness"] = c.witness;
      checks.push_back(std::move(e));
    }
  j["checks"] = std::move(checks);
  Json dims;
  for (const auto& [k, v] : r.dims) dims[k] = v;
  j["dims"] = std::move(dims);
  Json t;
  t["context"] = r.context_seconds;
  for (const auto& g : r.groups) t[g.group] = g.seconds;
  j["timings"] = std::move(t);
  return j;
}

/// The run-independent part of the report, used for frozen reference
/// reports.
inline Json report_to_golden_json(const VerifyReport& r) {
  Json j = report_to_json(r);
  j.erase("timings");
  return j;
}

inline std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "field: " << r.field << "\n";
  os << "dims:";
  for (const auto& [k, v] : r.dims) os << " " << k << "=" << v;
  os << "\n";
  std::size_t total = 0, passed = 0;
  for (const auto& g : r.groups)
    for (const auto& c : g.checks) {
      ++total;
      if (c.pass) ++passed;
    }
  os << "checks: " << passed << "/" << total << " passed\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& g : r.groups) {
    os << "[" << g.group << "] " << (g.pass() ? "pass" : "FAIL") << " ("
       << g.checks.size() << " checks, " << g.seconds << "s)\n";
    for (const auto& c : g.checks) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.id << ": "
         << c.statement;
      if (c.domain) os << " [domain " << c.domain << "]";
      os << "\n";
      if (!c.witness.empty())
        os << "       " << (c.pass ? "note" : "witness") << ": " << c.witness
           << "\n";
    }
  }
  os << "verdict: "
     << (r.all_pass() ? "all selected checks pass" : "failures present")
     << "\n";
  return os.str();
}

namespace detail {

inline std::vector<CheckResult> tag_checks(std::vector<CheckResult> v,
                                           const std::string& suffix) {
  for (auto& c : v) c.id += suffix;
  return v;
}

template <class F>
std::vector<CheckResult> d2_group(const ContextBuild<F>& cb) {
  std::vector<CheckResult> out;
  auto side_row = [&](const char* id, const char* side, std::size_t defect,
                      std::size_t len) {
    std::string stmt = std::string("the identity of the tensor square lies "
                                   "in the span of ") +
                       side + " composite endomorphisms";
    if (defect == 0 && cb.ok())
      out.push_back(check_pass(id, stmt, 1,
                               "quasibasis length " + std::to_string(len)));
    else
      out.push_back(check_fail(id, stmt, 1,
                               "rank defect " + std::to_string(defect)));
  };
  side_row("left-depth-two", "left", cb.left_defect,
           cb.ok() ? cb.ctx->lqb.size() : 0);
  side_row("right-depth-two", "right", cb.right_defect,
           cb.ok() ? cb.ctx->rqb.size() : 0);
  if (!cb.ok()) return out;

  const D2Context<F>& ctx = *cb.ctx;
  const std::size_t n = ctx.dimA();
  auto central_row = [&](const QuasiBasis<F>& qb, const char* id) {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < qb.t.size(); ++i)
      if (!ctx.Tsq.sub.coords(qb.t[i])) {
        ok = false;
        wit = "element " + std::to_string(i + 1) + " is not B-central";
        break;
      }
    std::string stmt = "every quasibasis element is B-central in the tensor "
                       "square";
    out.push_back(ok ? check_pass(id, stmt, qb.size())
                     : check_fail(id, stmt, qb.size(), wit));
  };
  central_row(ctx.lqb, "left-quasibasis-elements-central");
  central_row(ctx.rqb, "right-quasibasis-elements-central");

  bool lv = verify_quasibasis(ctx.pows, ctx.lqb);
  out.push_back(lv ? check_pass("left-quasibasis-identity",
                                "x (x) y = sum_i t_i . (beta_i(x) y) on "
                                "every basis pair",
                                n * n)
                   : check_fail("left-quasibasis-identity",
                                "x (x) y = sum_i t_i . (beta_i(x) y) on "
                                "every basis pair",
                                n * n, "a basis pair violates the identity"));
  bool rv = verify_quasibasis(ctx.pows, ctx.rqb);
  out.push_back(rv ? check_pass("right-quasibasis-identity",
                                "x (x) y = sum_j (x gamma_j(y)) . u_j on "
                                "every basis pair",
                                n * n)
                   : check_fail("right-quasibasis-identity",
                                "x (x) y = sum_j (x gamma_j(y)) . u_j on "
                                "every basis pair",
                                n * n, "a basis pair violates the identity"));
  return out;
}

template <class F>
std::vector<CheckResult> bialgebroid_group(const D2Context<F>& ctx) {
  std::vector<CheckResult> out;
  auto S = build_s_structure(ctx);
  append_checks(out, prefix_checks("s-axiom-",
                                   left_bialgebroid_axioms(S.view)));
  append_checks(out, s_structure_checks(ctx, S));
  auto T = build_t_structure(ctx);
  append_checks(out, prefix_checks("t-axiom-",
                                   left_bialgebroid_axioms(T.view)));
  append_checks(out, t_structure_checks(ctx, T));
  append_checks(out, pairing_checks(ctx, build_pairings(ctx)));
  auto sms = build_smash_s(ctx, S);
  append_checks(out, smash_s_checks(ctx, sms));
  auto smt = build_smash_t(ctx, T);
  append_checks(out, smash_t_checks(ctx, T, smt));
  return out;
}

template <class F>
std::optional<CheckResult> irreducibility_gate(const D2Context<F>& ctx) {
  if (centralizer_in_base(ctx)) return std::nullopt;
  return check_fail("centralizer-in-base",
                    "the centralizer lies in the base algebra, so the "
                    "antipode machinery applies",
                    ctx.dimR(),
                    "NotIrreducible: the centralizer is not contained in "
                    "the base algebra");
}

template <class F>
std::vector<CheckResult> hopf_group(const D2Context<F>& ctx) {
  std::vector<CheckResult> out;
  if (auto gate = irreducibility_gate(ctx)) {
    out.push_back(*gate);
    return out;
  }
  append_checks(out, irreducibility_checks(ctx));
  auto S = build_s_structure(ctx);
  auto P = build_pairings(ctx);
  auto ad = build_antipode(ctx, P);
  const std::string stmt = "the pairing equations determine an antipode";
  if (!ad.exists) {
    out.push_back(check_fail("antipode-solved", stmt, ctx.dimS(), ad.reason));
    return out;
  }
  out.push_back(check_pass("antipode-solved", stmt, ctx.dimS()));
  append_checks(out, antipode_checks(ctx, S, P, ad));
  append_checks(out, mirror_antipode_checks(ctx, P));
  return out;
}

template <class F>
std::vector<CheckResult> skew_group(const D2Context<F>& ctx) {
  std::vector<CheckResult> out;
  if (auto gate = irreducibility_gate(ctx)) {
    out.push_back(*gate);
    return out;
  }
  auto S = build_s_structure(ctx);
  auto P = build_pairings(ctx);
  auto ad = build_antipode(ctx, P);
  if (!ad.exists) {
    out.push_back(check_fail("antipode-solved",
                             "the pairing equations determine an antipode",
                             ctx.dimS(), ad.reason));
    return out;
  }
  append_checks(out, skew_hopf_checks(ctx, S, ad));
  return out;
}

template <class F>
std::vector<CheckResult> lu_group(const D2Context<F>& ctx) {
  std::vector<CheckResult> out;
  if (auto gate = irreducibility_gate(ctx)) {
    out.push_back(*gate);
    return out;
  }
  auto S = build_s_structure(ctx);
  auto P = build_pairings(ctx);
  auto ad = build_antipode(ctx, P);
  auto lu = build_separability(ctx);
  append_checks(out, lu_checks(ctx, S, ad, lu));
  return out;
}

/// The cochain machinery for both shipped coefficient modules (and the
/// optional user module), built on first use and shared between the pi and
/// cohomology groups. call_once keeps the lazy builds safe under parallel
/// group execution.
template <class F>
class PiShared {
 public:
  PiShared(const D2Context<F>* ctx, const std::optional<Bimodule<F>>& user)
      : ctx_(ctx), user_(&user) {}

  const PiMethod<F>& coeff_a() {
    std::call_once(fa_, [&] { a_.emplace(build_pi_method(*ctx_)); });
    return *a_;
  }
  const PiMethod<F>& coeff_square() {
    std::call_once(fx_, [&] {
      APowers<F> pw = APowers<F>::make(ctx_->E);
      x_.emplace(build_pi_method(*ctx_, pw.bimodule(2), "AxA"));
    });
    return *x_;
  }
  const PiMethod<F>* coeff_user() {
    if (!user_->has_value()) return nullptr;
    std::call_once(fu_, [&] {
      u_.emplace(build_pi_method(*ctx_, **user_, "user"));
    });
    return &*u_;
  }

 private:
  const D2Context<F>* ctx_;
  const std::optional<Bimodule<F>>* user_;
  std::once_flag fa_, fx_, fu_;
  std::optional<PiMethod<F>> a_, x_, u_;
};

template <class F>
std::vector<CheckResult> pi_group(const D2Context<F>& ctx,
                                  PiShared<F>& shared) {
  std::vector<CheckResult> out;
  append_checks(out,
                tag_checks(pi_transform_checks(ctx, shared.coeff_a()), "@A"));
  append_checks(out, tag_checks(pi_transform_checks(ctx, shared.coeff_square()),
                                "@AxA"));
  if (const PiMethod<F>* pm = shared.coeff_user())
    append_checks(out, tag_checks(pi_transform_checks(ctx, *pm), "@user"));
  return out;
}

template <class F>
std::vector<CheckResult> cohomology_group(const D2Context<F>& ctx,
                                          PiShared<F>& shared) {
  std::vector<CheckResult> out;
  append_checks(out,
                tag_checks(cohomology_checks(ctx, shared.coeff_a()), "@A"));
  append_checks(out, tag_checks(cohomology_checks(ctx, shared.coeff_square()),
                                "@AxA"));
  if (const PiMethod<F>* pm = shared.coeff_user())
    append_checks(out, tag_checks(cohomology_checks(ctx, *pm), "@user"));
  return out;
}

}  // namespace detail

/// Runs the selected check groups against an extension and assembles the
/// report. `all` resolves to the groups applicable to the input: the
/// quasibasis detection always, the structure suites when the extension is
/// depth two, and the antipode suites when in addition the centralizer lies
/// in the base. Explicitly requested groups always produce rows; when their
/// hypothesis fails, the row that records the failed hypothesis fails.
/// Groups are independent and may run in parallel (bounded by jobs); the
/// report order is fixed regardless.
template <class F>
VerifyReport run_verify(const std::string& input_name, const Extension<F>& E,
                        const std::optional<Bimodule<F>>& user_coef,
                        const CheckSelection& sel, unsigned jobs = 1) {
  using clock = std::chrono::steady_clock;
  auto secs = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  VerifyReport r;
  r.input = input_name;
  r.field = E.field().name();

  auto t0 = clock::now();
  auto cb = build_context(E);
  r.context_seconds = secs(t0, clock::now());

  r.dims.push_back({"A", E.dimA()});
  r.dims.push_back({"B", E.dimB()});
  const D2Context<F>* ctx = cb.ok() ? cb.ctx.get() : nullptr;
  if (ctx) {
    r.dims.push_back({"R", ctx->dimR()});
    r.dims.push_back({"S", ctx->dimS()});
    r.dims.push_back({"T", ctx->dimT()});
    r.dims.push_back({"tensor-square", ctx->pows.dim(2)});
    r.dims.push_back({"left-quasibasis", ctx->lqb.size()});
    r.dims.push_back({"right-quasibasis", ctx->rqb.size()});
  }

  std::vector<CheckGroup> groups;
  if (sel.all) {
    groups.push_back(CheckGroup::d2);
    if (ctx) {
      groups.push_back(CheckGroup::bialgebroid);
      if (centralizer_in_base(*ctx)) {
        groups.push_back(CheckGroup::hopf);
        groups.push_back(CheckGroup::skew);
        groups.push_back(CheckGroup::lu);
      }
      groups.push_back(CheckGroup::pi);
      groups.push_back(CheckGroup::cohomology);
    }
  } else {
    groups = sel.groups;
  }

  detail::PiShared<F> shared(ctx, user_coef);

  std::vector<GroupReport> reports(groups.size());
  auto run_one = [&](std::size_t i) {
    GroupReport& gr = reports[i];
    gr.group = group_name(groups[i]);
    auto s0 = clock::now();
    try {
      if (groups[i] == CheckGroup::d2) {
        gr.checks = detail::d2_group(cb);
      } else if (!ctx) {
        gr.checks.push_back(check_fail(
            "depth-two-context",
            "the extension is depth two, so this suite applies", 1,
            "not depth two: left rank defect " +
                std::to_string(cb.left_defect) + ", right rank defect " +
                std::to_string(cb.right_defect)));
      } else {
        switch (groups[i]) {
          case CheckGroup::bialgebroid:
            gr.checks = detail::bialgebroid_group(*ctx);
            break;
          case CheckGroup::hopf:
            gr.checks = detail::hopf_group(*ctx);
            break;
          case CheckGroup::skew:
            gr.checks = detail::skew_group(*ctx);
            break;
          case CheckGroup::lu:
            gr.checks = detail::lu_group(*ctx);
            break;
          case CheckGroup::pi:
            gr.checks = detail::pi_group(*ctx, shared);
            break;
          case CheckGroup::cohomology:
            gr.checks = detail::cohomology_group(*ctx, shared);
            break;
          case CheckGroup::d2:
            break;
        }
      }
    } catch (const std::exception& e) {
      gr.checks.push_back(check_fail(gr.group + "-error",
                                     "the suite runs to completion", 0,
                                     e.what()));
    }
    gr.seconds = secs(s0, clock::now());
  };

  std::size_t nthreads = jobs == 0 ? 1 : jobs;
  if (nthreads > groups.size()) nthreads = groups.size();
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < groups.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < groups.size(); i = next++)
          run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  r.groups = std::move(reports);
  return r;
}

/// Cohomology dimensions for one coefficient module: kernels and images of
/// the first differentials of both complexes.
struct CohomologyDims {
  std::size_t rel_h0 = 0;
  std::size_t rel_h1 = 0;
  std::size_t coring_h0 = 0;
};

template <class F>
CohomologyDims cohomology_dims(const PiMethod<F>& pm) {
  const F& f = pm.field();
  CohomologyDims out;

  const std::size_t p0 = pm.pbdim();
  Matrix<F> d0(f, pm.rel[0].dim(), p0);
  for (std::size_t k = 0; k < p0; ++k) {
    Matrix<F> c(f, pm.pdim(), 1);
    for (std::size_t i = 0; i < pm.pdim(); ++i)
      c.at(i, 0) = pm.coef.include_pb.at(i, k);
    auto co = pm.rel[0].coords(pm.relative_differential(0, c));
    if (!co)
      throw StructureError("cohomology dims: a degree-zero differential "
                           "image left the cochain space");
    for (std::size_t i = 0; i < pm.rel[0].dim(); ++i) d0.at(i, k) = (*co)[i];
  }
  Matrix<F> d1(f, pm.rel[1].dim(), pm.rel[0].dim());
  for (std::size_t k = 0; k < pm.rel[0].dim(); ++k) {
    auto co = pm.rel[1].coords(pm.relative_differential(1, pm.rel[0].map_at(k)));
    if (!co)
      throw StructureError("cohomology dims: a degree-one differential "
                           "image left the cochain space");
    for (std::size_t i = 0; i < pm.rel[1].dim(); ++i) d1.at(i, k) = (*co)[i];
  }
  std::size_t r0 = rank(d0), r1 = rank(d1);
  out.rel_h0 = p0 - r0;
  out.rel_h1 = (pm.rel[0].dim() - r1) - r0;

  Matrix<F> c0(f, pm.cor[1].dim(), pm.cor[0].dim());
  for (std::size_t k = 0; k < pm.cor[0].dim(); ++k) {
    auto co = pm.cor[1].coords(pm.coring_differential(0, pm.cor[0].map_at(k)));
    if (!co)
      throw StructureError("cohomology dims: a coring differential image "
                           "left the cochain space");
    for (std::size_t i = 0; i < pm.cor[1].dim(); ++i) c0.at(i, k) = (*co)[i];
  }
  out.coring_h0 = pm.cor[0].dim() - rank(c0);
  return out;
}

/// --- structure dumps -------------------------------------------------

inline const std::vector<std::string>& show_targets() {
  static const std::vector<std::string> t = {
      "dims", "quasibases", "delta", "tau", "pairings", "cohomology"};
  return t;
}

inline std::vector<std::string> parse_show_selection(const std::string& csv) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  toks.push_back(cur);
  bool all = false;
  std::vector<bool> seen(show_targets().size(), false);
  for (const auto& t : toks) {
    if (t.empty()) continue;
    if (t == "all") {
      all = true;
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < show_targets().size(); ++i)
      if (t == show_targets()[i]) {
        seen[i] = true;
        found = true;
      }
    if (!found)
      throw ParseError("show: unknown target '" + t +
                       "' (known: dims, quasibases, delta, tau, pairings, "
                       "cohomology, all)");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < show_targets().size(); ++i)
    if (all || seen[i]) out.push_back(show_targets()[i]);
  if (out.empty()) throw ParseError("show: empty target selection");
  return out;
}

namespace detail {

template <class F>
std::vector<std::string> basis_labels(const Algebra<F>& A) {
  if (A.labels.size() == A.n) return A.labels;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < A.n; ++i)
    out.push_back("a" + std::to_string(i));
  return out;
}

/// Renders an ambient tensor-square vector as a sum of labeled pure
/// tensors.
template <class F>
std::string tensor_expr(const F& f, const Vec<F>& amb,
                        const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = amb[a * n + b];
      if (f.is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      if (!f.eq(c, f.one())) os << f.to_string(c) << "*";
      os << labels[a] << "(x)" << labels[b];
    }
  if (first) os << "0";
  return os.str();
}

inline std::string indent_block(const std::string& s, const char* pad) {
  std::ostringstream os;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) os << pad << line << "\n";
  return os.str();
}

}  // namespace detail

struct ShowResult {
  bool ok = true;
  std::string text;
};

/// Dumps the requested structures in their canonical bases. Every matrix is
/// introduced by a header naming the basis its rows and columns refer to.
template <class F>
ShowResult show_dump(const std::string& input_name, const Extension<F>& E,
                     const std::vector<std::string>& what) {
  const F& f = E.field();
  std::ostringstream os;
  os << "input: " << input_name << "\n";
  os << "field: " << f.name() << "\n";
  auto labels = detail::basis_labels(E.A);
  os << "basis of A:";
  for (const auto& l : labels) os << " " << l;
  os << "\n";

  auto cb = build_context(E);
  if (!cb.ok()) {
    os << "not depth two: left rank defect " << cb.left_defect
       << ", right rank defect " << cb.right_defect << "\n";
    return {false, os.str()};
  }
  const D2Context<F>& ctx = *cb.ctx;
  auto want = [&](const char* t) {
    for (const auto& w : what)
      if (w == t) return true;
    return false;
  };

  if (want("dims")) {
    os << "\n[dims]\n";
    os << "A=" << ctx.dimA() << " B=" << E.dimB() << " R=" << ctx.dimR()
       << " S=" << ctx.dimS() << " T=" << ctx.dimT()
       << " tensor-square=" << ctx.pows.dim(2)
       << " left-quasibasis=" << ctx.lqb.size()
       << " right-quasibasis=" << ctx.rqb.size() << "\n";
  }

  if (want("quasibases")) {
    os << "\n[quasibases]\n";
    auto dump_side = [&](const QuasiBasis<F>& qb, const char* side,
                         const char* elem, const char* op) {
      os << side << " quasibasis: elements written in the pure-tensor basis "
         << "of A (x) A, operators as matrices on the ordered basis of A\n";
      for (std::size_t i = 0; i < qb.size(); ++i) {
        Vec<F> amb = ctx.pows.quotient(2).lift(qb.t[i]);
        os << "  " << elem << "_" << (i + 1) << " = "
           << detail::tensor_expr(f, amb, labels) << "\n";
        os << "  " << op << "_" << (i + 1) << " =\n"
           << detail::indent_block(mat_to_string(qb.ops[i]), "    ");
      }
    };
    dump_side(ctx.lqb, "left", "t", "beta");
    dump_side(ctx.rqb, "right", "u", "gamma");
  }

  if (want("delta")) {
    os << "\n[delta]\n";
    auto S = build_s_structure(ctx);
    os << "coproduct on S: column k gives Delta(alpha_k) in the canonical "
       << "quotient basis of S (x)_R S\n"
       << detail::indent_block(mat_to_string(S.view.delta), "  ");
    {
      Vec<F> did = mat_apply(S.view.delta, ctx.s_one);
      const std::size_t h = S.view.H.n;
      Vec<F> amb = vec_zero(f, h * h);
      for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
          amb[a * h + b] = f.mul(ctx.s_one[a], ctx.s_one[b]);
      Vec<F> idid = S.view.chain.level(1).q.project(amb);
      os << "  Delta(id) = " << vec_to_string(f, did);
      if (vec_eq(f, did, idid)) os << "  = id (x) id";
      os << "\n";
    }
    auto T = build_t_structure(ctx);
    os << "coproduct on T: column k gives Delta(t_k) in the canonical "
       << "quotient basis of T (x)_R T\n"
       << detail::indent_block(mat_to_string(T.view.delta), "  ");
    {
      Vec<F> du = mat_apply(T.view.delta, T.view.H.unit);
      const std::size_t h = T.view.H.n;
      Vec<F> amb = vec_zero(f, h * h);
      for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
          amb[a * h + b] = f.mul(T.view.H.unit[a], T.view.H.unit[b]);
      Vec<F> uu = T.view.chain.level(1).q.project(amb);
      os << "  Delta(1) = " << vec_to_string(f, du);
      if (vec_eq(f, du, uu)) os << "  = 1 (x) 1";
      os << "\n";
    }
  }

  if (want("tau")) {
    os << "\n[tau]\n";
    if (!centralizer_in_base(ctx)) {
      os << "the antipode is not defined: the centralizer is not contained "
         << "in the base algebra\n";
    } else {
      auto P = build_pairings(ctx);
      auto ad = build_antipode(ctx, P);
      if (!ad.exists) {
        os << "the antipode is not defined: " << ad.reason << "\n";
      } else {
        os << "antipode matrix on the canonical endomorphism basis of S\n"
           << detail::indent_block(mat_to_string(ad.tau), "  ");
        if (mat_is_zero(mat_sub(ad.tau, Matrix<F>::identity(f, ctx.dimS()))))
          os << "  (the identity matrix)\n";
      }
    }
  }

  if (want("pairings")) {
    os << "\n[pairings]\n";
    auto P = build_pairings(ctx);
    os << "evaluation pairing <alpha_k, ->: one centralizer-valued table "
       << "per endomorphism basis element; rows over the canonical "
       << "centralizer basis, columns over the canonical basis of T\n";
    for (std::size_t k = 0; k < P.angle.size(); ++k)
      os << "  alpha_" << (k + 1) << ":\n"
         << detail::indent_block(mat_to_string(P.angle[k]), "    ");
    os << "bracket pairing [-, alpha_k]: same bases\n";
    for (std::size_t k = 0; k < P.bracket.size(); ++k)
      os << "  alpha_" << (k + 1) << ":\n"
         << detail::indent_block(mat_to_string(P.bracket[k]), "    ");
  }

  if (want("cohomology")) {
    os << "\n[cohomology]\n";
    {
      auto pm = build_pi_method(ctx);
      auto d = cohomology_dims(pm);
      os << "coefficients A: relative H0 = " << d.rel_h0
         << ", relative H1 = " << d.rel_h1 << ", coring H0 = " << d.coring_h0
         << "\n";
    }
    {
      APowers<F> pw = APowers<F>::make(ctx.E);
      auto pm = build_pi_method(ctx, pw.bimodule(2), "AxA");
      auto d = cohomology_dims(pm);
      os << "coefficients AxA: relative H0 = " << d.rel_h0
         << ", relative H1 = " << d.rel_h1 << ", coring H0 = " << d.coring_h0
         << "\n";
    }
  }

  return {true, os.str()};
}

}  // namespace d2hopf
