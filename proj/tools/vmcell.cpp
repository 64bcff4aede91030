// vmcell: command-line driver for the power-sum cell geometry and
// copositivity library.  Subcommands cover boundary structure, facet
// enumeration, areas, membership and fiber queries, copositivity decisions,
// power-mean search, trace polynomials, the polynomial encoder, and a
// self-check suite of reference identities.
//
// Exit codes: 0 = success (including positive decisions), 1 = negative
// decision (outside point, failed copositivity, counterexample found, failed
// self-check), 2 = usage or input error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vmc/cell.hpp"
#include "vmc/cell2d.hpp"
#include "vmc/copositivity.hpp"
#include "vmc/gale.hpp"
#include "vmc/halfdegree.hpp"
#include "vmc/neldermead.hpp"
#include "vmc/rational.hpp"
#include "vmc/symcore.hpp"
#include "vmc/symparse.hpp"
#include "vmc/trace.hpp"

using json = nlohmann::ordered_json;
using namespace vmc;

namespace {

// ---------------------------------------------------------------------------
// Small utilities

std::string fstr(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<Rational> parse_rationals(const std::string& s, char sep = ',') {
  std::vector<Rational> out;
  for (const auto& piece : split(s, sep)) out.push_back(Rational::parse(trim(piece)));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep,
                 const std::function<std::string(const T&)>& f) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

std::string join_rationals(const std::vector<Rational>& xs, const std::string& sep = " ") {
  return join<Rational>(xs, sep, [](const Rational& r) { return r.str(); });
}

std::string join_ulongs(const std::vector<unsigned long>& xs, const std::string& sep = " ") {
  return join<unsigned long>(xs, sep,
                             [](const unsigned long& v) { return std::to_string(v); });
}

// Vertex list for output: "inf 2 5" style (space separated to stay CSV-safe).
std::string vertex_cell(const GaleSubset& s) {
  std::string out;
  if (s.has_inf()) out = "inf";
  for (unsigned long e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

json vertex_json(const GaleSubset& s) {
  json arr = json::array();
  if (s.has_inf()) arr.push_back("inf");
  for (unsigned long e : s.elements()) arr.push_back(e);
  return arr;
}

enum class Fmt { Text, Json, Csv };

void add_format_option(CLI::App* cmd, Fmt& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Fmt>{
              {"text", Fmt::Text}, {"json", Fmt::Json}, {"csv", Fmt::Csv}},
          CLI::ignore_case));
}

// Runs fn(i) for i in [0, count) across `threads` workers; fn(i) must touch
// only its own slot of any shared output so results merge in index order.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  size_t workers = std::min<size_t>(threads, count);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// facets

int run_facets(unsigned long n, unsigned d, Fmt fmt) {
  auto facets = enumerate_facets(n, d);
  if (fmt == Fmt::Json) {
    json out;
    out["n"] = n;
    out["d"] = d;
    out["count"] = facets.size();
    json arr = json::array();
    for (const auto& f : facets) arr.push_back(vertex_json(f));
    out["facets"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Fmt::Csv) {
    std::cout << "facet_id,elements\n";
    for (size_t i = 0; i < facets.size(); ++i)
      std::cout << i << ',' << vertex_cell(facets[i]) << "\n";
  } else {
    for (const auto& f : facets) std::cout << f.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// boundary

int run_boundary_arcs(const Domain2& dom, unsigned long kmax, Fmt fmt) {
  auto arcs = boundary_arcs(dom, kmax);
  auto endpoint = [](const Arc& a, const Rational& t) { return arc_eval(a, t); };
  if (fmt == Fmt::Json) {
    json out;
    out["domain"] = dom.is_limit() ? json{{"kind", "limit"}}
                                   : json{{"kind", "finite"}, {"n", dom.n}};
    json arr = json::array();
    for (const auto& a : arcs) {
      CellPoint lo = endpoint(a, a.t_lo()), hi = endpoint(a, a.t_hi());
      arr.push_back(json{{"arc", a.label()},
                         {"weight", a.weight()},
                         {"t_lo", a.t_lo().str()},
                         {"t_hi", a.t_hi().str()},
                         {"from", {lo.coords()[0].str(), lo.coords()[1].str()}},
                         {"to", {hi.coords()[0].str(), hi.coords()[1].str()}}});
    }
    out["arcs"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Fmt::Csv) {
    std::cout << "arc,weight,t_lo,t_hi,x_lo,y_lo,x_hi,y_hi\n";
    for (const auto& a : arcs) {
      CellPoint lo = endpoint(a, a.t_lo()), hi = endpoint(a, a.t_hi());
      std::cout << a.label() << ',' << a.weight() << ',' << a.t_lo().str() << ','
                << a.t_hi().str() << ',' << lo.coords()[0].str() << ','
                << lo.coords()[1].str() << ',' << hi.coords()[0].str() << ','
                << hi.coords()[1].str() << "\n";
    }
  } else {
    for (const auto& a : arcs) {
      CellPoint lo = endpoint(a, a.t_lo()), hi = endpoint(a, a.t_hi());
      std::cout << a.label() << ": weight " << a.weight() << ", t in ["
                << a.t_lo().str() << ", " << a.t_hi().str() << "], from ("
                << lo.coords()[0].str() << ", " << lo.coords()[1].str() << ") to ("
                << hi.coords()[0].str() << ", " << hi.coords()[1].str() << ")\n";
    }
  }
  return 0;
}

int run_boundary_patches(unsigned long n, unsigned d, PatchSource source,
                         unsigned long kmax, unsigned long samples, Fmt fmt,
                         unsigned threads) {
  auto patches = enumerate_patches(n, d, source, kmax);
  const char* source_name = source == PatchSource::Simplex      ? "simplex"
                            : source == PatchSource::SubSimplex ? "subsimplex"
                                                                : "limit";
  std::vector<std::vector<PatchSample>> all_samples(patches.size());
  if (samples > 0) {
    parallel_for(patches.size(), threads,
                 [&](size_t i) { all_samples[i] = patch_sample(patches[i], samples); });
  }
  if (fmt == Fmt::Json) {
    json out;
    out["source"] = source_name;
    out["d"] = d;
    if (source != PatchSource::Limit) out["n"] = n;
    if (source == PatchSource::Limit) out["k_max"] = kmax;
    out["count"] = patches.size();
    json arr = json::array();
    for (size_t i = 0; i < patches.size(); ++i) {
      const auto& p = patches[i];
      json jp{{"patch_id", i},
              {"vertices", vertex_json(p.vertices)},
              {"m0", p.mult.m0()},
              {"multiplicities", p.mult.m()},
              {"cone", p.cone_to_origin()}};
      if (samples > 0) {
        json js = json::array();
        for (const auto& s : all_samples[i]) {
          json coords = json::array();
          for (const auto& c : s.point.coords()) coords.push_back(c.str());
          json params = json::array();
          for (const auto& c : s.params) params.push_back(c.str());
          js.push_back(json{{"params", params}, {"point", coords}});
        }
        jp["samples"] = js;
      }
      arr.push_back(jp);
    }
    out["patches"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Fmt::Csv) {
    if (samples > 0) {
      std::cout << "patch_id,params";
      for (unsigned a = 2; a <= d; ++a) std::cout << ",p" << a;
      std::cout << "\n";
      for (size_t i = 0; i < patches.size(); ++i)
        for (const auto& s : all_samples[i]) {
          std::cout << i << ',' << join_rationals(s.params);
          for (const auto& c : s.point.coords()) std::cout << ',' << c.str();
          std::cout << "\n";
        }
    } else {
      std::cout << "patch_id,source,vertices,m0,multiplicities,cone\n";
      for (size_t i = 0; i < patches.size(); ++i) {
        const auto& p = patches[i];
        std::cout << i << ',' << source_name << ',' << vertex_cell(p.vertices) << ','
                  << p.mult.m0() << ',' << join_ulongs(p.mult.m()) << ','
                  << (p.cone_to_origin() ? 1 : 0) << "\n";
      }
    }
  } else {
    for (size_t i = 0; i < patches.size(); ++i) {
      const auto& p = patches[i];
      std::cout << "patch " << i << ": vertices " << p.vertices.str() << ", pattern "
                << p.mult.str() << (p.cone_to_origin() ? ", coned to origin" : "")
                << "\n";
      if (samples > 0)
        for (const auto& s : all_samples[i]) {
          std::cout << "  sample params [" << join_rationals(s.params) << "] -> (";
          for (size_t c = 0; c < s.point.coords().size(); ++c)
            std::cout << (c ? ", " : "") << s.point.coords()[c].str();
          std::cout << ")\n";
        }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// area

int run_area(const Domain2& dom, const std::string& mode, unsigned long kmax, Fmt fmt) {
  bool want_closed = mode == "closed" || mode == "both";
  bool want_green = mode == "green" || mode == "both";
  std::optional<AreaResult> closed, green;
  if (want_closed) closed = area(dom, AreaMode::ClosedForm, kmax);
  if (want_green) green = area(dom, AreaMode::GreenNumeric, kmax);
  if (fmt == Fmt::Json) {
    json out;
    out["domain"] = dom.is_limit() ? json{{"kind", "limit"}}
                                   : json{{"kind", "finite"}, {"n", dom.n}};
    out["mode"] = mode;
    if (closed) {
      if (closed->exact) out["exact"] = closed->exact->str();
      out["closed_value"] = closed->value;
    }
    if (green) out["green_value"] = green->value;
    if (closed && green) out["difference"] = std::abs(closed->value - green->value);
    std::cout << out.dump(2) << "\n";
  } else {
    if (closed) {
      if (closed->exact) std::cout << "exact: " << closed->exact->str() << "\n";
      std::cout << "closed_value: " << fstr(closed->value) << "\n";
    }
    if (green) std::cout << "green_value: " << fstr(green->value) << "\n";
    if (closed && green)
      std::cout << "difference: " << fstr(std::abs(closed->value - green->value)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// member / fiber

int run_member(const std::string& point, const Domain2& dom, double tol, Fmt fmt) {
  auto coords = parse_rationals(point);
  if (coords.size() != 2)
    throw std::invalid_argument("member: --point expects two comma-separated values");
  CellPoint q(coords);
  Membership verdict = membership(q, dom, tol);
  if (fmt == Fmt::Json) {
    json out;
    out["x"] = coords[0].str();
    out["y"] = coords[1].str();
    out["domain"] = dom.is_limit() ? json{{"kind", "limit"}}
                                   : json{{"kind", "finite"}, {"n", dom.n}};
    out["verdict"] = to_string(verdict);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "point: (" << coords[0].str() << ", " << coords[1].str() << ")\n";
    std::cout << "verdict: " << to_string(verdict) << "\n";
  }
  return verdict == Membership::Outside ? 1 : 0;
}

json bound_json(const BoundValue& b) {
  json out;
  if (b.exact) out["exact"] = b.exact->str();
  out["value"] = b.value();
  return out;
}

int run_fiber(const std::string& a_str, const Domain2& dom, Fmt fmt) {
  Rational a = Rational::parse(a_str);
  FiberInterval fi = fiber_interval(a, dom);
  if (fmt == Fmt::Json) {
    json out;
    out["a"] = a.str();
    out["domain"] = dom.is_limit() ? json{{"kind", "limit"}}
                                   : json{{"kind", "finite"}, {"n", dom.n}};
    out["lower"] = bound_json(fi.lower);
    out["upper"] = bound_json(fi.upper);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "a: " << a.str() << "\n";
    std::cout << "lower: "
              << (fi.lower.exact ? fi.lower.exact->str() : "~" + fstr(fi.lower.approx))
              << "\n";
    std::cout << "upper: "
              << (fi.upper.exact ? fi.upper.exact->str() : "~" + fstr(fi.upper.approx))
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// copositive / sextic

void print_copositivity(const char* family, const std::string& description,
                        const std::string& mode, const CopositivityReport& rep, Fmt fmt) {
  if (fmt == Fmt::Json) {
    json out;
    out["family"] = family;
    out["f"] = description;
    out["mode"] = mode;
    out["copositive"] = rep.copositive;
    if (!rep.copositive) {
      out["witness_k"] = rep.witness_k;
      out["witness_value"] = rep.witness_value.str();
    }
    out["scanned_up_to"] = rep.scanned_up_to;
    if (rep.limit_value) out["limit_value"] = rep.limit_value->str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family: " << family << "\n";
    std::cout << "f: " << description << "\n";
    std::cout << "mode: " << mode << "\n";
    std::cout << "copositive: " << (rep.copositive ? "true" : "false") << "\n";
    if (!rep.copositive) {
      std::cout << "witness_k: " << rep.witness_k << "\n";
      std::cout << "witness_value: " << rep.witness_value.str() << "\n";
    }
    std::cout << "scanned_up_to: " << rep.scanned_up_to << "\n";
    if (rep.limit_value) std::cout << "limit_value: " << rep.limit_value->str() << "\n";
  }
}

int run_copositive(const std::string& coeffs, unsigned degree, unsigned long n,
                   bool all_n, Fmt fmt) {
  std::vector<Rational> cs = parse_rationals(coeffs);
  if (degree > 0) {
    if (cs.size() > degree + 1)
      throw std::invalid_argument("copositive: more coefficients than degree+1");
    cs.resize(degree + 1, Rational(0));
  }
  HookPolynomial f = HookPolynomial::from_coefficients(cs);
  CopositivityReport rep = all_n ? hook_copositive_all_n(f) : hook_copositive(f, n);
  print_copositivity("hook", f.str(), all_n ? "all-n" : "n=" + std::to_string(n), rep,
                     fmt);
  return rep.copositive ? 0 : 1;
}

int run_sextic(const std::string& coeffs, unsigned long n, bool all_n, Fmt fmt) {
  std::vector<Rational> cs = parse_rationals(coeffs);
  if (cs.size() != 3)
    throw std::invalid_argument("sextic: --coeffs expects exactly a,b,c");
  SexticCoeffs s{cs[0], cs[1], cs[2]};
  CopositivityReport rep = all_n ? clr_sextic_all_n(s) : clr_sextic(s, n);
  print_copositivity("even-sextic", s.to_symmetric().str(),
                     all_n ? "all-n" : "n=" + std::to_string(n), rep, fmt);
  return rep.copositive ? 0 : 1;
}

// ---------------------------------------------------------------------------
// halfdeg

int run_halfdeg_fixed(const SymmetricPolynomial& f, unsigned long n, double box,
                      unsigned seed, Fmt fmt) {
  FixedNReduction red = reduce_fixed_n(f, n);
  struct Row {
    std::string alpha;
    double min = 0.0;
    std::string argmin;
  };
  std::vector<Row> rows;
  for (size_t j = 0; j < red.multiplicity_lists.size(); ++j) {
    const auto& alpha = red.multiplicity_lists[j];
    size_t dims = alpha.size();
    auto objective = [&](const std::vector<double>& x) { return red.eval(j, x); };
    auto project = [&](std::vector<double>& x) {
      for (auto& v : x) v = std::clamp(v, -box, box);
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    std::vector<std::vector<double>> starts;
    unsigned patterns = dims <= 6 ? (1u << dims) : 64u;
    for (unsigned mask = 0; mask < patterns; ++mask) {
      std::vector<double> t(dims);
      for (size_t b = 0; b < dims; ++b) t[b] = (mask >> b) & 1u ? -1.0 : 1.0;
      starts.push_back(std::move(t));
    }
    std::mt19937 rng(seed + static_cast<unsigned>(j));
    std::uniform_real_distribution<double> dist(-box, box);
    while (starts.size() < patterns + 8) {
      std::vector<double> t(dims);
      for (size_t b = 0; b < dims; ++b) t[b] = dist(rng);
      starts.push_back(std::move(t));
    }
    for (const auto& s : starts) {
      auto res = nelder_mead(objective, project, s);
      if (res.value < best) {
        best = res.value;
        best_x = res.x;
      }
    }
    Row row;
    row.alpha = join_ulongs(alpha);
    row.min = best;
    row.argmin = join<double>(best_x, " ", [](const double& v) { return fstr(v); });
    rows.push_back(std::move(row));
  }
  if (fmt == Fmt::Json) {
    json out;
    out["n"] = n;
    out["blocks"] = red.phi.blocks();
    out["problems"] = json::array();
    for (const auto& r : rows)
      out["problems"].push_back(
          json{{"multiplicities", r.alpha}, {"numeric_min", r.min}, {"argmin", r.argmin}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n: " << n << "\n";
    std::cout << "blocks: " << red.phi.blocks() << "\n";
    std::cout << "problems: " << rows.size() << "\n";
    for (size_t j = 0; j < rows.size(); ++j)
      std::cout << "problem " << j << ": alpha [" << rows[j].alpha
                << "], numeric_min = " << fstr(rows[j].min) << " at [" << rows[j].argmin
                << "]\n";
  }
  return 0;
}

int run_halfdeg(const std::string& poly, unsigned long fixed_n, unsigned starts,
                double box, unsigned seed, double tol, Fmt fmt) {
  SymmetricPolynomial f = parse_symmetric_poly(poly, Basis::PowerSum);
  if (fixed_n > 0) return run_halfdeg_fixed(f, fixed_n, box, seed, fmt);
  PowerMeanOptions opt;
  opt.starts = starts;
  opt.box_radius = box;
  opt.seed = seed;
  opt.tolerance = tol;
  PowerMeanVerdict v = check_power_mean_all_n(f, opt);
  if (fmt == Fmt::Json) {
    json out;
    out["polynomial"] = f.str();
    out["blocks"] = PhiFunction(f).blocks();
    out["verdict"] = to_string(v.kind);
    out["numeric_min"] = v.numeric_min;
    if (v.witness) {
      const auto& w = *v.witness;
      json jw;
      jw["value"] = w.value.str();
      jw["n"] = w.realized_n;
      jw["weights"] = json::array();
      for (const auto& s : w.s) jw["weights"].push_back(s.str());
      jw["block_values"] = json::array();
      for (const auto& t : w.t) jw["block_values"].push_back(t.str());
      json spectrum = json::array();
      for (const auto& [val, mult] : w.spectrum)
        spectrum.push_back(json{{"value", val.str()}, {"multiplicity", mult}});
      jw["spectrum"] = spectrum;
      out["witness"] = jw;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "polynomial: " << f.str() << "\n";
    std::cout << "verdict: " << to_string(v.kind) << "\n";
    std::cout << "numeric_min: " << fstr(v.numeric_min) << "\n";
    if (v.witness) {
      const auto& w = *v.witness;
      std::cout << "witness_value: " << w.value.str() << "\n";
      std::cout << "witness_n: " << w.realized_n << "\n";
      std::cout << "witness_weights: " << join_rationals(w.s) << "\n";
      std::cout << "witness_block_values: " << join_rationals(w.t) << "\n";
      std::cout << "witness_spectrum:";
      for (const auto& [val, mult] : w.spectrum)
        std::cout << " " << val.str() << "x" << mult;
      std::cout << "\n";
    }
  }
  return v.kind == PowerMeanVerdictKind::Counterexample ? 1 : 0;
}

// ---------------------------------------------------------------------------
// trace

SpectraMap parse_spectra_arg(const std::string& s) {
  SpectraMap m;
  for (const auto& group : split(s, ';')) {
    auto eq = group.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spectra: expected NAME=v1,v2,...");
    std::string name = trim(group.substr(0, eq));
    m[name] = parse_rationals(group.substr(eq + 1));
  }
  return m;
}

int run_trace(const std::string& expr_str, bool do_convert, bool do_search,
              const std::string& eval_spectra, unsigned long budget, unsigned seed,
              Fmt fmt) {
  TraceExpr e = parse_trace(expr_str);
  if (!eval_spectra.empty()) {
    SpectraMap m = parse_spectra_arg(eval_spectra);
    Rational v = eval_on_spectra(e, m);
    if (fmt == Fmt::Json) {
      json out;
      out["expression"] = to_string(e);
      out["value"] = v.str();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "expression: " << to_string(e) << "\n";
      std::cout << "value: " << v.str() << "\n";
    }
    return 0;
  }
  if (do_convert) {
    ProductSymmetricConversion conv = to_product_symmetric(e);
    if (fmt == Fmt::Json) {
      json out;
      out["expression"] = to_string(e);
      out["groups"] = conv.group_names;
      out["polynomial"] = conv.poly.str(conv.group_names);
      out["multihomogeneous"] = conv.multihomogeneous;
      if (conv.multihomogeneous) out["degrees"] = conv.degrees;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "expression: " << to_string(e) << "\n";
      std::cout << "groups: "
                << join<std::string>(conv.group_names, " ",
                                     [](const std::string& s) { return s; })
                << "\n";
      std::cout << "polynomial: " << conv.poly.str(conv.group_names) << "\n";
      std::cout << "multihomogeneous: " << (conv.multihomogeneous ? "true" : "false")
                << "\n";
      if (conv.multihomogeneous) {
        std::cout << "degrees:";
        for (unsigned dd : conv.degrees) std::cout << " " << dd;
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (do_search) {
    TraceSearchOptions opt;
    opt.budget = budget;
    opt.seed = seed;
    TraceSearchResult res = counterexample_search(e, opt);
    if (fmt == Fmt::Json) {
      json out;
      out["expression"] = to_string(e);
      out["tried"] = res.tried;
      out["witness_found"] = res.witness.has_value();
      if (res.witness) {
        json jw;
        jw["value"] = res.witness->value.str();
        json spectra = json::object();
        for (const auto& [var, spectrum] : res.witness->spectra) {
          json arr = json::array();
          for (const auto& v : spectrum) arr.push_back(v.str());
          spectra[var] = arr;
        }
        jw["spectra"] = spectra;
        out["witness"] = jw;
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "expression: " << to_string(e) << "\n";
      std::cout << "tried: " << res.tried << "\n";
      std::cout << "witness_found: " << (res.witness ? "true" : "false") << "\n";
      if (res.witness) {
        std::cout << "witness_value: " << res.witness->value.str() << "\n";
        for (const auto& [var, spectrum] : res.witness->spectra)
          std::cout << var << ": " << join_rationals(spectrum) << "\n";
      }
    }
    return res.witness ? 1 : 0;
  }
  // Default: canonical round-trip print.
  if (fmt == Fmt::Json) {
    json out;
    out["expression"] = to_string(e);
    out["variables"] = trace_variables(e);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(e) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// encode

int run_encode(const std::string& poly, const std::string& vars_csv,
               const std::string& eval_at, const std::string& ground, Fmt fmt) {
  std::vector<std::string> names;
  for (auto& s : split(vars_csv, ',')) names.push_back(trim(s));
  MultiPoly p = parse_multipoly(poly, names);
  TauEncoding enc = tau_encode(p);

  json out;
  out["vars"] = names;
  out["p"] = p.str(names);
  out["p_degree"] = p.total_degree();
  out["M"] = enc.M.get_str();
  out["q_degree"] = enc.q_degree;
  out["q_terms"] = enc.q.terms().size();
  out["tau_terms"] = enc.tau_elementary.terms().size();
  out["tau_power_terms"] = enc.tau_power_sum.terms().size();
  out["homogeneous_degree_per_group"] = 3 * enc.q_degree;

  if (!eval_at.empty()) {
    std::vector<Rational> xs = parse_rationals(eval_at);
    out["q_value"] = enc.q.eval(xs).str();
  }
  if (!ground.empty()) {
    // Uniform grounding: group i carries n_i equal eigenvalues 1, so the j-th
    // power sum is n_i; the encoder then matches q on the image curve.
    std::vector<Rational> sizes = parse_rationals(ground);
    if (sizes.size() != enc.k)
      throw std::invalid_argument("encode: --ground needs one size per variable");
    std::vector<std::vector<Rational>> symbol_values;
    std::vector<Rational> q_args(2 * enc.k, Rational(0));
    Rational scale(1);
    for (unsigned i = 0; i < enc.k; ++i) {
      if (!sizes[i].is_integer() || sizes[i].sign() <= 0)
        throw std::invalid_argument("encode: --ground sizes must be positive integers");
      std::vector<Rational> ps(3 * enc.q_degree, sizes[i]);
      symbol_values.push_back(std::move(ps));
      Rational nn = sizes[i];
      q_args[i] = (nn - Rational(1)) / nn;
      q_args[enc.k + i] = (nn - Rational(1)) * (nn - Rational(2)) / (nn * nn);
      scale *= nn.pow(3 * enc.q_degree);
    }
    Rational tau_val = enc.tau_power_sum.eval(symbol_values);
    Rational q_val = enc.q.eval(q_args) * scale;
    out["ground_tau_value"] = tau_val.str();
    out["ground_q_scaled"] = q_val.str();
    out["ground_match"] = tau_val == q_val;
  }

  if (fmt == Fmt::Json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto it = out.begin(); it != out.end(); ++it) {
      std::cout << it.key() << ": ";
      if (it->is_string())
        std::cout << it->get<std::string>();
      else
        std::cout << it->dump();
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: recompute reference identities and report each one.

struct Check {
  std::string name;
  std::function<bool(bool)> run;  // argument: inject a fault into this check
};

std::vector<Check> build_checks() {
  std::vector<Check> checks;

  checks.push_back({"planar facet count equals n for n = 3..12", [](bool fault) {
                      for (unsigned long n = 3; n <= 12; ++n) {
                        size_t got = enumerate_facets(n, 2).size() + (fault ? 1 : 0);
                        if (got != n) return false;
                      }
                      return true;
                    }});

  checks.push_back({"facet count for (n, d) = (6, 3) is 8", [](bool fault) {
                      return enumerate_facets(6, 3).size() + (fault ? 1 : 0) == 8;
                    }});

  checks.push_back(
      {"lower-arc endpoints are (1/(k+1), 1/(k+1)^2) and (1/k, 1/k^2) for k <= 50",
       [](bool fault) {
         for (unsigned long k = 1; k <= 50; ++k) {
           Arc a = Arc::lower(k);
           CellPoint lo = arc_eval(a, a.t_lo());
           CellPoint hi = arc_eval(a, a.t_hi());
           long kl = static_cast<long>(k);
           Rational bump = fault ? Rational(1, 1000000) : Rational(0);
           if (lo.coords()[0] + bump != Rational(1, kl + 1)) return false;
           if (lo.coords()[1] != Rational(1, (kl + 1) * (kl + 1))) return false;
           if (hi.coords()[0] != Rational(1, kl)) return false;
           if (hi.coords()[1] != Rational(1, kl * kl)) return false;
         }
         return true;
       }});

  checks.push_back({"lower-arc endpoint slopes are 3/(k+1) and 3/(2k) for k <= 50",
                    [](bool fault) {
                      for (unsigned long k = 1; k <= 50; ++k) {
                        Arc a = Arc::lower(k);
                        long kl = static_cast<long>(k);
                        Rational bump = fault ? Rational(1, 1000000) : Rational(0);
                        if (arc_slope(a, a.t_lo()) + bump != Rational(3, kl + 1))
                          return false;
                        if (arc_slope(a, a.t_hi()) != Rational(3, 2 * kl)) return false;
                      }
                      return true;
                    }});

  checks.push_back(
      {"interior junctions are corners with slopes 3/(2k) vs 3/k (n = 12)",
       [](bool fault) {
         auto sps = singular_points(12);
         for (const auto& sp : sps) {
           long kl = static_cast<long>(sp.k);
           if (sp.k == 1) {
             if (sp.kind != SingularKind::Cusp || sp.slope_small_x != Rational(3, 2))
               return false;
           } else if (sp.k == 12) {
             if (sp.kind != SingularKind::Cusp || sp.slope_small_x != Rational(3, 12))
               return false;
           } else {
             Rational bump = fault ? Rational(1, 1000000) : Rational(0);
             if (sp.kind != SingularKind::Corner) return false;
             if (sp.slope_small_x + bump != Rational(3, 2 * kl)) return false;
             if (sp.slope_large_x != Rational(3, kl)) return false;
           }
         }
         return true;
       }});

  checks.push_back({"closed-form areas: 1/80 at n = 3 and 43/2160 at n = 4",
                    [](bool fault) {
                      auto a3 = area(Domain2::finite(3), AreaMode::ClosedForm);
                      auto a4 = area(Domain2::finite(4), AreaMode::ClosedForm);
                      Rational bump = fault ? Rational(1, 1000000) : Rational(0);
                      return *a3.exact + bump == Rational(1, 80) &&
                             *a4.exact == Rational(43, 2160);
                    }});

  checks.push_back({"closed form matches the boundary integral for n = 3..12",
                    [](bool fault) {
                      for (unsigned long n = 3; n <= 12; ++n) {
                        auto c = area(Domain2::finite(n), AreaMode::ClosedForm);
                        auto g = area(Domain2::finite(n), AreaMode::GreenNumeric);
                        double diff = std::abs(c.value - g.value) + (fault ? 1e-6 : 0.0);
                        if (diff > 1e-8) return false;
                      }
                      return true;
                    }});

  checks.push_back({"limit area matches the zeta-value constant to 1e-6", [](bool fault) {
                      auto g = area(Domain2::limit(), AreaMode::GreenNumeric, 10000);
                      const double zeta2 = 1.6449340668482264;
                      const double zeta3 = 1.2020569031595943;
                      double expect = (zeta2 - zeta3) / 10.0;
                      double diff = std::abs(g.value - expect) + (fault ? 1e-3 : 0.0);
                      return diff < 1e-6;
                    }});

  checks.push_back(
      {"uniform-support vertices have power sums k^(1-a) for k <= 20, d <= 6",
       [](bool fault) {
         for (unsigned long k = 1; k <= 20; ++k)
           for (unsigned d = 3; d <= 6; ++d) {
             CellPoint v = moment_vertex(k, d, Basis::PowerSum);
             for (unsigned a = 2; a <= d; ++a) {
               Rational expect = Rational(1) / Rational(Integer(k), Integer(1)).pow(a - 1);
               if (fault) expect += Rational(1, 1000000);
               if (v.coords()[a - 2] != expect) return false;
             }
           }
         return true;
       }});

  checks.push_back(
      {"vertex-weight map collision: two formal supports, one domain point",
       [](bool fault) {
         GaleSubset s1(4, {2, 4}), s2(5, {3, 5});
         std::vector<Rational> w1{Rational(1, 13), Rational(12, 13)};
         std::vector<Rational> w2{Rational(27, 52), Rational(25, 52)};
         CellPoint v1 = kappa_facet(s1, w1);
         CellPoint v2 = kappa_facet(s2, w2);
         CellPoint d1 = kappa_domain_point(s1, w1);
         CellPoint d2 = kappa_domain_point(s2, w2);
         Rational bump = fault ? Rational(1, 1000000) : Rational(0);
         if (v1.coords()[0] + bump != Rational(85, 338)) return false;
         if (v1.coords()[1] != Rational(43, 676)) return false;
         if (v2.coords()[0] != Rational(319, 1352)) return false;
         if (v2.coords()[1] != Rational(4241, 70304)) return false;
         if (!(d1 == d2)) return false;
         if (v1 == v2) return false;  // the map genuinely disagrees there
         return true;
       }});

  checks.push_back(
      {"degree-4 family: scaled-uniform test values are (k-1)(k-2)/k^3 for k <= 1000",
       [](bool fault) {
         auto rep = power_sum_testset_counterexample(1000);
         for (unsigned long k = 1; k <= 1000; ++k) {
           long kl = static_cast<long>(k);
           Integer num((kl - 1) * (kl - 2));
           Integer den = Integer(kl) * kl * kl;
           Rational expect(num, den);
           if (fault) expect += Rational(1, 1000000);
           if (rep.test_values[k - 1] != expect) return false;
         }
         return true;
       }});

  checks.push_back({"degree-4 family: diagonal witness value is -24 both ways",
                    [](bool fault) {
                      auto rep = power_sum_testset_counterexample(3);
                      Rational bump = fault ? Rational(1) : Rational(0);
                      return rep.witness_value + bump == Rational(-24) &&
                             rep.direct_value == Rational(-24);
                    }});

  checks.push_back(
      {"envelope: L(4/5) = 12/25, and L >= g on the 10^-4 grid with the exact "
       "equality set",
       [](bool fault) {
         if (envelope_L(Rational(4, 5)) != Rational(12, 25)) return false;
         const long N = 10000;
         for (long i = 0; i <= N; ++i) {
           Rational x(i, N);
           Rational L = envelope_L(x), g = tau_curve_g(x);
           if (fault) g += Rational(1, 1000000000);
           if (L < g) return false;
           bool node = (i == N) || (N % (N - i) == 0);
           if (node != (L == g)) return false;
         }
         return true;
       }});

  checks.push_back({"encoder: M = 100 and q(1/2, 0) = 1/128 for the single-variable "
                    "identity polynomial",
                    [](bool fault) {
                      MultiPoly p = parse_multipoly("Y1", {"Y1"});
                      auto enc = tau_encode(p);
                      if (enc.M != 100) return false;
                      Rational v = enc.q.eval({Rational(1, 2), Rational(0)});
                      if (fault) v += Rational(1, 1000000);
                      return v == Rational(1, 128);
                    }});

  checks.push_back(
      {"encoder grounding: uniform spectra land on the curve for n <= 10",
       [](bool fault) {
         MultiPoly p = parse_multipoly("Y1^2 - 2*Y1 + 1", {"Y1"});
         auto enc = tau_encode(p);
         for (unsigned long n = 1; n <= 10; ++n) {
           std::vector<Rational> ps(3 * enc.q_degree, Rational(Integer(n), Integer(1)));
           Rational tau_val = enc.tau_power_sum.eval({ps});
           Rational nn(Integer(n), Integer(1));
           Rational Y = (nn - Rational(1)) / nn;
           Rational Z = (nn - Rational(1)) * (nn - Rational(2)) / (nn * nn);
           Rational qv = enc.q.eval({Y, Z}) * nn.pow(3 * enc.q_degree);
           if (fault) qv += Rational(1);
           if (tau_val != qv) return false;
         }
         return true;
       }});

  checks.push_back({"hook decisions: (1,0,-2) passes everywhere; (1,0,-4) first fails "
                    "at k = 3",
                    [](bool fault) {
                      auto ok = HookPolynomial::from_coefficients(
                          {Rational(1), Rational(0), Rational(-2)});
                      auto bad = HookPolynomial::from_coefficients(
                          {Rational(1), Rational(0), Rational(-4)});
                      if (!hook_copositive_all_n(ok).copositive) return false;
                      if (!hook_copositive(bad, 2).copositive) return false;
                      auto rep = hook_copositive(bad, 5);
                      unsigned long wk = rep.witness_k + (fault ? 1 : 0);
                      return !rep.copositive && wk == 3 &&
                             rep.witness_value == Rational(-1, 3);
                    }});

  checks.push_back({"even-sextic decisions: (1,-2,1) passes; (0,-1,1) fails at k = 2 "
                    "with value -1/4",
                    [](bool fault) {
                      SexticCoeffs ok{Rational(1), Rational(-2), Rational(1)};
                      SexticCoeffs bad{Rational(0), Rational(-1), Rational(1)};
                      if (!clr_sextic_all_n(ok).copositive) return false;
                      auto rep = clr_sextic_all_n(bad);
                      Rational wv = rep.witness_value + (fault ? Rational(1) : Rational(0));
                      return !rep.copositive && rep.witness_k == 2 &&
                             wv == Rational(-1, 4);
                    }});

  checks.push_back({"fiber over 1/2 at n = 3 is exactly [1/4, 11/36]", [](bool fault) {
                      auto fi = fiber_interval(Rational(1, 2), Domain2::finite(3));
                      if (!fi.lower.exact || !fi.upper.exact) return false;
                      Rational lo = *fi.lower.exact + (fault ? Rational(1) : Rational(0));
                      return lo == Rational(1, 4) && *fi.upper.exact == Rational(11, 36);
                    }});

  checks.push_back(
      {"membership verdicts: boundary, interior, and exterior sample points (n = 3)",
       [](bool fault) {
         Domain2 dom = Domain2::finite(3);
         auto m1 = membership(CellPoint({Rational(9, 25), Rational(17, 125)}), dom);
         auto m2 = membership(CellPoint({Rational(1, 2), Rational(7, 25)}), dom);
         auto m3 = membership(CellPoint({Rational(1, 2), Rational(1, 3)}), dom);
         if (fault) m3 = m2;
         return m1 == Membership::Boundary && m2 == Membership::Inside &&
                m3 == Membership::Outside;
       }});

  checks.push_back(
      {"coordinate scaling flow never leaves the limit cell", [](bool fault) {
         std::vector<CellPoint> pts{CellPoint({Rational(1, 2), Rational(7, 25)}),
                                    CellPoint({Rational(9, 25), Rational(17, 125)}),
                                    CellPoint({Rational(3, 4), Rational(5, 8)})};
         for (const auto& q : pts)
           for (long j = 0; j <= 8; ++j) {
             Rational t(j, 8);
             CellPoint scaled = scale_flow(q, t);
             if (fault) scaled = CellPoint({Rational(1, 2), Rational(2, 5)});
             if (membership(scaled, Domain2::limit()) == Membership::Outside)
               return false;
           }
         return true;
       }});

  checks.push_back({"weighted block form of p1*p3 - p2^2 reaches exactly -1 at "
                    "((1/2,1/2), (1,-1))",
                    [](bool fault) {
                      auto p1 = SymmetricPolynomial::symbol(Basis::PowerSum, 1);
                      auto p2 = SymmetricPolynomial::symbol(Basis::PowerSum, 2);
                      auto p3 = SymmetricPolynomial::symbol(Basis::PowerSum, 3);
                      PhiFunction phi(p1 * p3 - p2 * p2);
                      Rational v = phi.eval({Rational(1, 2), Rational(1, 2)},
                                            {Rational(1), Rational(-1)});
                      if (fault) v += Rational(1);
                      return v == Rational(-1);
                    }});

  return checks;
}

int run_verify(int inject_fault, unsigned threads, Fmt fmt) {
  auto checks = build_checks();
  std::vector<char> results(checks.size(), 0);
  parallel_for(checks.size(), threads, [&](size_t i) {
    bool fault = inject_fault >= 0 && static_cast<size_t>(inject_fault) == i + 1;
    bool ok = false;
    try {
      ok = checks[i].run(fault);
    } catch (const std::exception&) {
      ok = false;
    }
    results[i] = ok ? 1 : 0;
  });
  size_t failed = 0;
  json arr = json::array();
  for (size_t i = 0; i < checks.size(); ++i) {
    bool ok = results[i] != 0;
    if (!ok) ++failed;
    if (fmt == Fmt::Json) {
      arr.push_back(json{{"id", i + 1}, {"name", checks[i].name}, {"pass", ok}});
    } else {
      std::printf("[%s] check %02zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                  checks[i].name.c_str());
    }
  }
  if (fmt == Fmt::Json) {
    json out;
    out["checks"] = arr;
    out["total"] = checks.size();
    out["failed"] = failed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-sum cell geometry and copositivity toolkit"};
  app.require_subcommand(1);

  // facets
  auto* cmd_facets = app.add_subcommand("facets", "enumerate facet supports");
  unsigned long fa_n = 6;
  unsigned fa_d = 3;
  Fmt fa_fmt = Fmt::Text;
  cmd_facets->add_option("--n", fa_n, "ground set size")->required();
  cmd_facets->add_option("--d", fa_d, "facet parameter (subset size)")->required();
  add_format_option(cmd_facets, fa_fmt);

  // boundary
  auto* cmd_boundary = app.add_subcommand("boundary", "boundary arcs or patches");
  unsigned long bd_n = 0, bd_kmax = 8, bd_samples = 0;
  unsigned bd_d = 2, bd_threads = 1;
  bool bd_limit = false;
  std::string bd_source = "simplex";
  Fmt bd_fmt = Fmt::Text;
  cmd_boundary->add_option("--n", bd_n, "number of coordinates");
  cmd_boundary->add_flag("--limit", bd_limit, "all-n limit domain");
  cmd_boundary->add_option("--d", bd_d, "last power-sum degree (2 for planar arcs)");
  cmd_boundary->add_option("--source", bd_source, "patch family for d >= 3")
      ->check(CLI::IsMember({"simplex", "subsimplex", "limit"}));
  cmd_boundary->add_option("--kmax", bd_kmax, "ground truncation for limit listings");
  cmd_boundary->add_option("--samples", bd_samples, "barycentric sample resolution");
  cmd_boundary->add_option("--threads", bd_threads, "worker threads");
  add_format_option(cmd_boundary, bd_fmt);

  // area
  auto* cmd_area = app.add_subcommand("area", "area of the planar cell");
  unsigned long ar_n = 0, ar_kmax = 10000;
  bool ar_limit = false;
  std::string ar_mode = "closed";
  Fmt ar_fmt = Fmt::Text;
  cmd_area->add_option("--n", ar_n, "number of coordinates");
  cmd_area->add_flag("--limit", ar_limit, "all-n limit domain");
  cmd_area->add_option("--mode", ar_mode, "closed, green, or both")
      ->check(CLI::IsMember({"closed", "green", "both"}));
  cmd_area->add_option("--kmax", ar_kmax, "arc truncation for the limit integral");
  add_format_option(cmd_area, ar_fmt);

  // member
  auto* cmd_member = app.add_subcommand("member", "membership of a planar point");
  std::string me_point;
  unsigned long me_n = 0;
  bool me_limit = false;
  double me_tol = 1e-9;
  Fmt me_fmt = Fmt::Text;
  cmd_member->add_option("--point", me_point, "x,y (exact rationals)")->required();
  cmd_member->add_option("--n", me_n, "number of coordinates");
  cmd_member->add_flag("--limit", me_limit, "all-n limit domain");
  cmd_member->add_option("--tol", me_tol, "boundary band for inexact comparisons");
  add_format_option(cmd_member, me_fmt);

  // fiber
  auto* cmd_fiber = app.add_subcommand("fiber", "vertical fiber over an abscissa");
  std::string fi_a;
  unsigned long fi_n = 0;
  bool fi_limit = false;
  Fmt fi_fmt = Fmt::Text;
  cmd_fiber->add_option("--a", fi_a, "abscissa (exact rational)")->required();
  cmd_fiber->add_option("--n", fi_n, "number of coordinates");
  cmd_fiber->add_flag("--limit", fi_limit, "all-n limit domain");
  add_format_option(cmd_fiber, fi_fmt);

  // copositive
  auto* cmd_cop = app.add_subcommand("copositive", "hook-polynomial copositivity");
  std::string co_coeffs;
  unsigned co_degree = 0;
  unsigned long co_n = 0;
  bool co_all = false;
  Fmt co_fmt = Fmt::Text;
  cmd_cop->add_option("--coeffs", co_coeffs, "c0,c1,c2,... (c1 must be 0)")->required();
  cmd_cop->add_option("--degree", co_degree, "polynomial degree (pads missing c_j with 0)");
  cmd_cop->add_option("--n", co_n, "number of variables");
  cmd_cop->add_flag("--all-n", co_all, "decide uniformly over every n");
  add_format_option(cmd_cop, co_fmt);

  // sextic
  auto* cmd_sex = app.add_subcommand("sextic", "even symmetric sextic nonnegativity");
  std::string se_coeffs;
  unsigned long se_n = 0;
  bool se_all = false;
  Fmt se_fmt = Fmt::Text;
  cmd_sex->add_option("--coeffs", se_coeffs, "a,b,c")->required();
  cmd_sex->add_option("--n", se_n, "number of variables");
  cmd_sex->add_flag("--all-n", se_all, "decide uniformly over every n");
  add_format_option(cmd_sex, se_fmt);

  // halfdeg
  auto* cmd_half = app.add_subcommand("halfdeg",
                                      "power-mean inequalities via block reduction");
  std::string hd_poly;
  unsigned long hd_fixed_n = 0;
  unsigned hd_starts = 64, hd_seed = 2024;
  double hd_box = 10.0, hd_tol = 1e-9;
  Fmt hd_fmt = Fmt::Text;
  cmd_half->add_option("--poly", hd_poly, "polynomial in p1, p2, ... (normalized power sums)")
      ->required();
  cmd_half->add_option("--fixed-n", hd_fixed_n, "list and minimize the reduced problems");
  cmd_half->add_option("--starts", hd_starts, "search restarts");
  cmd_half->add_option("--box", hd_box, "block-value search box radius");
  cmd_half->add_option("--seed", hd_seed, "search seed");
  cmd_half->add_option("--tol", hd_tol, "negativity threshold");
  add_format_option(cmd_half, hd_fmt);

  // trace
  auto* cmd_trace = app.add_subcommand("trace", "trace polynomial toolkit");
  std::string tr_expr, tr_eval;
  bool tr_convert = false, tr_search = false;
  unsigned long tr_budget = 512;
  unsigned tr_seed = 2024;
  Fmt tr_fmt = Fmt::Text;
  cmd_trace->add_option("--expr", tr_expr, "expression in tr(X^k) or ntr(X^k)")->required();
  cmd_trace->add_flag("--convert", tr_convert, "convert to per-group symmetric form");
  cmd_trace->add_flag("--search", tr_search, "search for a negative spectrum tuple");
  cmd_trace->add_option("--eval", tr_eval, "evaluate: A=1,2;B=1/2");
  cmd_trace->add_option("--budget", tr_budget, "search budget");
  cmd_trace->add_option("--seed", tr_seed, "search seed");
  add_format_option(cmd_trace, tr_fmt);

  // encode
  auto* cmd_enc = app.add_subcommand("encode",
                                     "trace encoding of an integer polynomial");
  std::string en_poly, en_vars, en_eval, en_ground;
  Fmt en_fmt = Fmt::Text;
  cmd_enc->add_option("--poly", en_poly, "integer polynomial in the given variables")
      ->required();
  cmd_enc->add_option("--vars", en_vars, "comma-separated variable names (Y1,Y2,...)")
      ->required();
  cmd_enc->add_option("--eval", en_eval, "evaluate q at Y values then Z values");
  cmd_enc->add_option("--ground", en_ground, "uniform spectrum sizes, one per variable");
  add_format_option(cmd_enc, en_fmt);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "recompute reference identities");
  int ve_fault = -1;
  unsigned ve_threads = 1;
  Fmt ve_fmt = Fmt::Text;
  cmd_verify->add_option("--inject-fault", ve_fault,
                         "perturb the numbered check (diagnostics)");
  cmd_verify->add_option("--threads", ve_threads, "worker threads");
  add_format_option(cmd_verify, ve_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto domain_of = [](unsigned long n, bool limit, const char* who) {
    if (limit) {
      if (n != 0) throw std::invalid_argument(std::string(who) + ": --n excludes --limit");
      return Domain2::limit();
    }
    if (n == 0) throw std::invalid_argument(std::string(who) + ": need --n or --limit");
    return Domain2::finite(n);
  };

  try {
    if (*cmd_facets) return run_facets(fa_n, fa_d, fa_fmt);
    if (*cmd_boundary) {
      if (bd_d < 2) throw std::invalid_argument("boundary: need d >= 2");
      if (bd_d == 2)
        return run_boundary_arcs(domain_of(bd_n, bd_limit, "boundary"), bd_kmax, bd_fmt);
      PatchSource src = bd_source == "simplex"      ? PatchSource::Simplex
                        : bd_source == "subsimplex" ? PatchSource::SubSimplex
                                                    : PatchSource::Limit;
      if (bd_limit) src = PatchSource::Limit;
      if (src != PatchSource::Limit && bd_n == 0)
        throw std::invalid_argument("boundary: need --n for finite patch families");
      return run_boundary_patches(bd_n, bd_d, src, bd_kmax, bd_samples, bd_fmt,
                                  bd_threads);
    }
    if (*cmd_area)
      return run_area(domain_of(ar_n, ar_limit, "area"), ar_mode, ar_kmax, ar_fmt);
    if (*cmd_member)
      return run_member(me_point, domain_of(me_n, me_limit, "member"), me_tol, me_fmt);
    if (*cmd_fiber)
      return run_fiber(fi_a, domain_of(fi_n, fi_limit, "fiber"), fi_fmt);
    if (*cmd_cop) {
      if (co_all && co_n != 0)
        throw std::invalid_argument("copositive: --n excludes --all-n");
      if (!co_all && co_n == 0)
        throw std::invalid_argument("copositive: need --n or --all-n");
      return run_copositive(co_coeffs, co_degree, co_n, co_all, co_fmt);
    }
    if (*cmd_sex) {
      if (se_all && se_n != 0)
        throw std::invalid_argument("sextic: --n excludes --all-n");
      if (!se_all && se_n == 0)
        throw std::invalid_argument("sextic: need --n or --all-n");
      return run_sextic(se_coeffs, se_n, se_all, se_fmt);
    }
    if (*cmd_half)
      return run_halfdeg(hd_poly, hd_fixed_n, hd_starts, hd_box, hd_seed, hd_tol, hd_fmt);
    if (*cmd_trace)
      return run_trace(tr_expr, tr_convert, tr_search, tr_eval, tr_budget, tr_seed,
                       tr_fmt);
    if (*cmd_enc) return run_encode(en_poly, en_vars, en_eval, en_ground, en_fmt);
    if (*cmd_verify) return run_verify(ve_fault, ve_threads, ve_fmt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
