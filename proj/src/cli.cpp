/*
 * Copyright 2026 The chord-euler Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "chord_euler/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "chord_euler/catalan.hpp"
#include "chord_euler/classes.hpp"
#include "chord_euler/generators.hpp"
#include "chord_euler/io.hpp"
#include "chord_euler/nc_euler.hpp"
#include "chord_euler/partition.hpp"

namespace chord_euler {

using ojson = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kExitCap;
    case ErrorKind::Generator: return kExitGenerator;
    case ErrorKind::Internal: return kExitFailure;
    default: return kExitInput;
  }
}

unsigned campaign_threads() {
  if (const char* env = std::getenv("CHORD_EULER_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size()) throw Error(ErrorKind::InvalidArgument, std::string("bad ") + what + " range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(text);
  } else {
    r.lo = num(text.substr(0, dots));
    r.hi = num(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(ErrorKind::InvalidArgument, std::string("empty ") + what + " range '" + text + "'");
  return r;
}

void require_cap(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::TooLarge, what);
}

ojson big(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ojson big_list(const std::vector<BigInt>& v) {
  ojson a = ojson::array();
  for (const auto& z : v) a.push_back(big(z));
  return a;
}

std::string text_list(const ojson& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ", ";
    s += a[k].is_string() ? a[k].get<std::string>() : a[k].dump();
  }
  return s + "]";
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w + 2)) << k << v << "\n";
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string file;
  bool fvector = false;
  bool chi = false;
  bool classes = false;
  bool theorems = false;
  std::optional<int> vertex;
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  Polygon P = parse_polygon(read_file(o.file));
  const int n = P.size();
  if (o.vertex && (*o.vertex < 0 || *o.vertex >= n)) throw Error(ErrorKind::InvalidArgument, "--vertex out of range");
  auto u = ChordUniverse::build(P);
  ChordSet Md = diagonals(u), Me = epigonals(u);
  ojson rep;
  rep["n"] = n;
  rep["convex"] = is_convex(P);
  rep["reflex"] = reflex_vertices(P);
  rep["diagonals"] = Md.size();
  rep["epigonals"] = Me.size();
  rep["boundary_crossing"] = boundary_crossing(u).size();
  if (o.fvector || o.chi) {
    FVector fd = f_vector(Md), fe = f_vector(Me);
    if (o.fvector) rep["fvector"] = {{"diagonals", big_list(fd.counts)}, {"epigonals", big_list(fe.counts)}};
    if (o.chi) rep["chi"] = {{"diagonals", big(fd.euler())}, {"epigonals", big(fe.euler())}};
  }
  std::vector<int> verts;
  if (o.vertex) {
    verts.push_back(*o.vertex);
  } else {
    for (int i = 0; i < n; ++i) verts.push_back(i);
  }
  if (o.classes) {
    ojson cl = ojson::array();
    for (int i : verts) {
      ClassReport r = classify(P, i);
      ojson e;
      e["vertex"] = i;
      e["classes"] = ojson::array();
      for (PolygonClass c : r.memberships) e["classes"].push_back(to_string(c));
      if (r.split) e["class6_empty_outer"] = r.split->empty_outer;
      cl.push_back(e);
    }
    rep["classes"] = cl;
  }
  if (o.theorems) {
    Theorem1Report t1 = verify_theorem1(P);
    rep["theorem1"] = {{"d_sum", big(t1.d_sum)}, {"e_sum", big(t1.e_sum)}, {"pass", t1.pass}};
    if (n >= 5) {
      ojson t3 = ojson::array();
      for (int i : verts) {
        Theorem3Report r = verify_theorem3(P, i);
        ojson e;
        e["vertex"] = i;
        for (int k = 0; k < 4; ++k)
          e[theorem3_clause(k)] = {{"chi", big(r.chi[static_cast<std::size_t>(k)])},
                                   {"class_side", r.class_side[static_cast<std::size_t>(k)]}};
        e["pass"] = r.pass;
        t3.push_back(e);
      }
      rep["theorem3"] = t3;
    }
  }
  if (o.json) {
    out << rep.dump(2) << "\n";
    return kExitPass;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"n", std::to_string(n)},
      {"convex", is_convex(P) ? "yes" : "no"},
      {"reflex", text_list(rep["reflex"])},
      {"|M_d|", std::to_string(Md.size())},
      {"|M_e|", std::to_string(Me.size())},
      {"boundary-crossing", rep["boundary_crossing"].dump()}};
  if (o.fvector) {
    rows.emplace_back("f(M_d)", text_list(rep["fvector"]["diagonals"]));
    rows.emplace_back("f(M_e)", text_list(rep["fvector"]["epigonals"]));
  }
  if (o.chi) {
    rows.emplace_back("chi(M_d)", rep["chi"]["diagonals"].dump());
    rows.emplace_back("chi(M_e)", rep["chi"]["epigonals"].dump());
  }
  if (o.classes) {
    for (const ojson& e : rep["classes"]) {
      std::string v = e["classes"].empty() ? "none" : "";
      for (std::size_t k = 0; k < e["classes"].size(); ++k) v += (k ? ", " : "") + e["classes"][k].get<std::string>();
      rows.emplace_back("classes@" + e["vertex"].dump(), v);
    }
  }
  if (o.theorems) {
    rows.emplace_back("theorem1", std::string(rep["theorem1"]["pass"].get<bool>() ? "pass" : "FAIL") + " (d-sum " +
                                      rep["theorem1"]["d_sum"].dump() + ", e-sum " + rep["theorem1"]["e_sum"].dump() + ")");
    if (rep.contains("theorem3")) {
      for (const ojson& e : rep["theorem3"]) {
        std::string v = e["pass"].get<bool>() ? "pass" : "FAIL";
        for (int k = 0; k < 4; ++k) v += std::string("  ") + theorem3_clause(k) + " chi=" + e[theorem3_clause(k)]["chi"].dump();
        rows.emplace_back("theorem3@" + e["vertex"].dump(), v);
      }
    }
  }
  print_rows(out, rows);
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct CaseResult {
  std::string id;
  bool pass = true;
  std::string detail;
};

using Case = std::function<CaseResult()>;

std::vector<CaseResult> run_cases(const std::vector<Case>& cases) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < cases.size();) {
      try {
        results[k] = cases[k]();
      } catch (const Error& e) {
        results[k].pass = false;
        results[k].detail = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned t = std::min<unsigned>(campaign_threads(), static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

struct VerifyOptions {
  std::string target;
  std::string n;
  std::string a;
  std::string l;
  long random = -1;
  std::uint64_t seed = 1;
  bool json = false;
};

std::string poly_id(int n, std::uint64_t seed) { return "random n=" + std::to_string(n) + " seed=" + std::to_string(seed); }

// Random polygon for campaign item k: n cycles through the range.
std::pair<int, std::uint64_t> campaign_item(const Range& r, std::uint64_t seed, long k) {
  const int n = static_cast<int>(r.lo + k % (r.hi - r.lo + 1));
  return {n, seed + static_cast<std::uint64_t>(k)};
}

Polygon campaign_polygon(int n, std::uint64_t seed) {
  return random_simple_polygon(n, seed, seed % 3 == 0 ? RandomShape::Star : RandomShape::TwoOpt);
}

std::vector<Case> theorem1_cases(const Range& r, long random, std::uint64_t seed) {
  require_cap(r.lo >= 3 && r.hi <= 12, "theorem1: n must lie in 3..12");
  std::vector<Case> cs;
  for (long n = r.lo; n <= r.hi; ++n) {
    cs.push_back([n] {
      Theorem1Report t = verify_theorem1(convex_ngon(static_cast<int>(n)));
      return CaseResult{"convex n=" + std::to_string(n), t.pass,
                        "d-sum " + to_string(t.d_sum) + " expected " + to_string(t.d_expected)};
    });
  }
  const Range rr{std::max(4L, r.lo), r.hi};
  if (rr.lo > rr.hi) return cs;
  for (long k = 0; k < random; ++k) {
    auto [n, s] = campaign_item(rr, seed, k);
    cs.push_back([n, s] {
      Theorem1Report t = verify_theorem1(campaign_polygon(n, s));
      return CaseResult{poly_id(n, s), t.pass,
                        "d-sum " + to_string(t.d_sum) + ", e-sum " + to_string(t.e_sum) + (t.convex ? " (convex)" : "")};
    });
  }
  return cs;
}

CaseResult theorem2_polygon(int n, std::uint64_t s) {
  Polygon P = campaign_polygon(n, s);
  auto u = ChordUniverse::build(P);
  CaseResult res{poly_id(n, s), true, ""};
  long count = 0;
  for_each_noncrossing(diagonals(u), [&](const ChordSet& J) {
    ++count;
    if (!res.pass) return;
    BigInt direct = chi_removed_direct(J, Side::D);
    BigInt t2 = chi_removed_theorem2(J), l1 = chi_removed_lemma1(J);
    bool ok = t2 == direct && l1 == direct;
    if (!J.empty()) ok = ok && chi_removed_lemma_d2(J) == direct;
    if (!ok) {
      res.pass = false;
      res.detail = "J=" + J.to_string() + " direct " + to_string(direct) + " theorem2 " + to_string(t2) + " lemma1 " +
                   to_string(l1);
    }
  });
  if (res.pass) res.detail = std::to_string(count) + " sets";
  return res;
}

std::vector<Case> theorem2_cases(const Range& r, long random, std::uint64_t seed) {
  require_cap(r.lo >= 4 && r.hi <= 9, "theorem2: n must lie in 4..9");
  std::vector<Case> cs;
  for (long k = 0; k < random; ++k) {
    auto [n, s] = campaign_item(r, seed, k);
    cs.push_back([n = n, s = s] { return theorem2_polygon(n, s); });
  }
  return cs;
}

CaseResult theorem3_polygon(const Polygon& P, const std::string& id) {
  CaseResult res{id, true, ""};
  for (int i = 0; i < P.size(); ++i) {
    Theorem3Report t = verify_theorem3(P, i);
    if (t.pass) continue;
    res.pass = false;
    for (int k = 0; k < 4; ++k) {
      if (t.holds[static_cast<std::size_t>(k)]) continue;
      res.detail += std::string(res.detail.empty() ? "" : "; ") + "vertex " + std::to_string(i) + " (" +
                    theorem3_clause(k) + ") chi=" + to_string(t.chi[static_cast<std::size_t>(k)]) +
                    " class_side=" + (t.class_side[static_cast<std::size_t>(k)] ? "true" : "false");
    }
  }
  return res;
}

std::vector<Case> theorem3_cases(const Range& r, long random, std::uint64_t seed) {
  require_cap(r.lo >= 5 && r.hi <= 10, "theorem3: n must lie in 5..10");
  std::vector<Case> cs;
  for (int K = 1; K <= 6; ++K) {
    for (const ClassParams& p : class_exemplar_sizes(K)) {
      cs.push_back([K, p] {
        Polygon P = class_exemplar(K, 0, p);
        std::string id = "class" + std::to_string(K) + " size=" + std::to_string(p.size) + " variant=" + std::to_string(p.variant);
        CaseResult c = theorem3_polygon(P, id);
        if (c.pass && !verify_theorem3(P, 0).class_side[0] && K != 3 && K != 4 && K != 5) {
          c.pass = false;
          c.detail = "exemplar not on the (A) side";
        }
        return c;
      });
    }
  }
  for (long k = 0; k < random; ++k) {
    auto [n, s] = campaign_item(r, seed, k);
    cs.push_back([n = n, s = s] { return theorem3_polygon(campaign_polygon(n, s), poly_id(n, s)); });
  }
  return cs;
}

CaseResult lemmae_polygon(int n, std::uint64_t s) {
  Polygon P = campaign_polygon(n, s);
  auto u = ChordUniverse::build(P);
  CaseResult res{poly_id(n, s), true, ""};
  auto fail = [&](const std::string& what) {
    if (res.pass) res.detail = what;
    res.pass = false;
  };
  for (Side side : {Side::D, Side::E}) {
    auto H = find_heart(u, side);
    ChordSet M = side == Side::D ? diagonals(u) : epigonals(u);
    if (H && (!is_heart(M, *H) || euler_recursive(M) != 0)) fail(std::string("heart on side ") + to_string(side));
  }
  Chord d = find_diagonal(P);
  if (classify_chord(P, d) != ChordKind::Diagonal) fail("find_diagonal returned " + to_string(d));
  ChordSet T = extend_to_triangulation(ChordSet(u));
  if (T.size() != n - 3 || !T.pairwise_noncrossing()) fail("triangulation size");
  ChordSet hull(u);
  for (const Pocket& pk : pockets(u)) hull.insert(pk.hull_edge);
  for (const ChordSet& J : {ChordSet(u), hull})
    if (chi_epigonal_pockets(J) != chi_removed_direct(J, Side::E)) fail("pocket product for J=" + J.to_string());
  // Prefixes of the triangulation as J.
  std::vector<Chord> tc = T.chords();
  ChordSet J(u);
  for (const Chord& c : tc) {
    J.insert(c);
    BigInt direct = chi_removed_direct(J, Side::D);
    if (chi_removed_lemma_d2(J) != direct) fail("lemma d2 for J=" + J.to_string());
    if (!is_convex_partition(J)) {
      if (direct != 0) fail("non-convex partition with nonzero chi, J=" + J.to_string());
      continue;
    }
    ConvexLattice L = convex_lattice(J);
    std::uint32_t common = L.full_mask();
    for (std::uint32_t m : L.members_c) common &= m;
    if (chi_removed_factorized(J, L.subset(common)) != direct) fail("factorized for J=" + J.to_string());
    if (!is_convex(P)) {
      if (chi_inclusion_exclusion(J, IEMode::Minimal) != direct || chi_inclusion_exclusion(J, IEMode::Maximal) != direct)
        fail("inclusion-exclusion for J=" + J.to_string());
    }
  }
  return res;
}

std::vector<Case> lemmae_cases(const Range& r, long random, std::uint64_t seed) {
  require_cap(r.lo >= 4 && r.hi <= 10, "lemmae: n must lie in 4..10");
  std::vector<Case> cs;
  for (long k = 0; k < random; ++k) {
    auto [n, s] = campaign_item(r, seed, k);
    cs.push_back([n = n, s = s] { return lemmae_polygon(n, s); });
  }
  return cs;
}

std::vector<Case> catalan_cases(const Range& nr, const Range& ar) {
  require_cap(nr.lo >= 1 && nr.hi <= 30, "catalan: n must lie in 1..30");
  require_cap(ar.lo >= 1 && ar.hi <= 10, "catalan: a must lie in 1..10");
  std::vector<Case> cs;
  for (long a = ar.lo; a <= ar.hi; ++a)
    for (long n = nr.lo; n <= nr.hi; ++n) {
      cs.push_back([n, a] {
        CaseResult c{"n=" + std::to_string(n) + " a=" + std::to_string(a), true, ""};
        for (long k = 1; k <= n; ++k) {
          if (!d_recurrence_check(n, k, a)) c.detail += " recurrence k=" + std::to_string(k);
          if (!identity14_check(n, k, a)) c.detail += " identity14 i=" + std::to_string(k);
        }
        if (!alternating_sum_check(n, a)) c.detail += " alternating-sum";
        if (a * (n + 1) + 2 <= 12) {
          FVector f = brute_a_diagonal_fvector(convex_ngon(static_cast<int>(a * (n + 1) + 2)), static_cast<int>(a));
          for (long k = 0; k <= n + 1; ++k) {
            BigInt g = static_cast<std::size_t>(k) < f.counts.size() ? f.counts[static_cast<std::size_t>(k)] : BigInt(0);
            if (g != d_closed(n, k, a)) c.detail += " geometric k=" + std::to_string(k);
          }
        }
        c.pass = c.detail.empty();
        return c;
      });
    }
  return cs;
}

inline constexpr long kZigzagCap = 12;
inline constexpr long kZigzagDirectCap = 6;

std::vector<Case> zigzag_cases(const Range& r) {
  require_cap(r.lo >= -kZigzagCap && r.hi <= kZigzagCap, "zigzag: |l| must be at most 12");
  std::vector<Case> cs;
  for (long l = r.lo; l <= r.hi; ++l) {
    if (std::labs(l) < 2) continue;
    cs.push_back([l] {
      ZigzagInstance z = zigzag_chi_target(l);
      ZigzagReport rep = verify_zigzag_structure(z);
      CaseResult c{"l=" + std::to_string(l), rep.pass, ""};
      c.detail = "n=" + std::to_string(z.polygon.size()) + " corrected " + to_string(rep.chi_corrected) + " literal " +
                 to_string(rep.chi_literal);
      if (std::labs(l) <= kZigzagDirectCap) {
        BigInt direct = chi_removed_direct(z.J, Side::D);
        c.detail += " direct " + to_string(direct);
        c.pass = c.pass && direct == l;
      }
      return c;
    });
  }
  return cs;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  std::vector<Case> cases;
  auto rng_or = [](const std::string& s, const char* def, const char* what) { return parse_range(s.empty() ? def : s, what); };
  auto random_or = [&](long def) {
    long v = o.random < 0 ? def : o.random;
    require_cap(v <= 1000000, "--random is capped at 10^6");
    return v;
  };
  if (o.target == "theorem1") {
    cases = theorem1_cases(rng_or(o.n, "3..9", "n"), random_or(200), o.seed);
  } else if (o.target == "theorem2") {
    cases = theorem2_cases(rng_or(o.n, "4..7", "n"), random_or(20), o.seed);
  } else if (o.target == "theorem3") {
    cases = theorem3_cases(rng_or(o.n, "5..9", "n"), random_or(500), o.seed);
  } else if (o.target == "lemmae") {
    cases = lemmae_cases(rng_or(o.n, "4..8", "n"), random_or(100), o.seed);
  } else if (o.target == "catalan") {
    cases = catalan_cases(rng_or(o.n, "1..8", "n"), rng_or(o.a, "1..5", "a"));
  } else if (o.target == "zigzag") {
    cases = zigzag_cases(rng_or(o.l, "-5..5", "l"));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown verify target '" + o.target + "'");
  }
  std::vector<CaseResult> results = run_cases(cases);
  long failures = 0;
  for (const auto& r : results) failures += r.pass ? 0 : 1;
  if (o.json) {
    ojson doc;
    doc["target"] = o.target;
    doc["cases"] = results.size();
    doc["failures"] = ojson::array();
    for (const auto& r : results)
      if (!r.pass) doc["failures"].push_back({{"case", r.id}, {"detail", r.detail}});
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      if (!r.pass) out << "FAIL " << r.id << ": " << r.detail << "\n";
    out << o.target << ": " << results.size() << " cases, " << failures << " failures\n";
  }
  return failures ? kExitFailure : kExitPass;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string kind;
  std::optional<int> n;
  std::optional<int> size;
  std::optional<int> inner;
  int vertex = 0;
  int variant = 0;
  std::optional<long> l;
  std::uint64_t seed = 1;
  bool star = false;
  long span = 1000;
  std::string budget = "1/200";
  std::string out_path;
  std::string sidecar;
};

std::string default_sidecar(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return path.substr(0, path.size() - ext.size()) + ".chords.json";
  return path + ".chords.json";
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
    return *v;
  };
  Polygon P;
  std::optional<ChordFile> side;
  if (o.kind == "convex") {
    P = convex_ngon(need(o.n, "--n"));
  } else if (o.kind == "random") {
    P = random_simple_polygon(need(o.n, "--n"), o.seed, o.star ? RandomShape::Star : RandomShape::TwoOpt, o.span);
  } else if (o.kind.size() == 6 && o.kind.rfind("class", 0) == 0 && o.kind[5] >= '1' && o.kind[5] <= '6') {
    const int K = o.kind[5] - '0';
    ClassParams p = class_exemplar_sizes(K)[0];
    p.variant = o.variant;
    if (o.size) p.size = *o.size;
    if (o.n && (K == 1 || K == 5)) p.size = *o.n;
    if (o.inner && K == 2) p.size = *o.inner - 2;
    P = class_exemplar(K, o.vertex, p);
  } else if (o.kind == "zigzag") {
    if (!o.l) throw Error(ErrorKind::InvalidArgument, "missing --l");
    ZigzagInstance z = zigzag_chi_target(*o.l, parse_rat(o.budget));
    P = z.polygon;
    ChordFile f;
    f.chords = z.J.chords();
    for (std::size_t k = 0; k < z.labels.size(); ++k) f.labels.emplace_back("e" + std::to_string(k + 1), z.labels[k]);
    side = f;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown generator '" + o.kind + "'");
  }
  const std::string poly = polygon_to_json(P);
  if (!o.out_path.empty()) write_file(o.out_path, poly);
  if (side) {
    const std::string chords = chord_file_to_json(*side);
    std::string sp = !o.sidecar.empty() ? o.sidecar : (!o.out_path.empty() ? default_sidecar(o.out_path) : "");
    if (!sp.empty()) write_file(sp, chords);
    if (o.out_path.empty()) {
      // One document that reads both as a polygon file and as a chord file.
      ojson doc = ojson::parse(poly);
      ojson c = ojson::parse(chords);
      for (auto it = c.begin(); it != c.end(); ++it) doc[it.key()] = it.value();
      out << doc.dump(2) << "\n";
    }
  } else if (o.out_path.empty()) {
    out << poly;
  }
  return kExitPass;
}

// ---------------------------------------------------------------- render

int cmd_render(const std::string& file, const std::string& chords, const std::string& out_path, std::ostream& out) {
  Polygon P = parse_polygon(read_file(file));
  ChordFile f;
  if (!chords.empty()) f = parse_chord_file(read_file(chords), P.size());
  const std::string svg = render_svg(P, f);
  if (out_path.empty()) {
    out << svg;
  } else {
    write_file(out_path, svg);
  }
  return kExitPass;
}

// "--l -5..5": CLI11 would read "-5..5" as a flag.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> outv;
  for (const std::string& a : args) {
    const bool negative = a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]));
    if (negative && !outv.empty() && outv.back().rfind("--", 0) == 0 && outv.back().find('=') == std::string::npos) {
      outv.back() += "=" + a;
    } else {
      outv.push_back(a);
    }
  }
  return outv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics of non-crossing chord families in simple polygons", "chord_euler"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Chord counts, f-vectors, chi, classes of a polygon file");
  analyze->add_option("file", ao.file, "Polygon JSON file")->required();
  analyze->add_flag("--fvector", ao.fvector, "f-vectors of M_d and M_e");
  analyze->add_flag("--chi", ao.chi, "Euler characteristics of M_d and M_e");
  analyze->add_flag("--classes", ao.classes, "Class memberships per vertex");
  analyze->add_flag("--theorems", ao.theorems, "Theorem 1 and Theorem 3 verdicts");
  analyze->add_option("--vertex", ao.vertex, "Restrict per-vertex output to this index");
  analyze->add_flag("--json", ao.json, "Machine-readable output");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a property campaign");
  verify->add_option("target", vo.target, "theorem1 | theorem2 | theorem3 | lemmae | catalan | zigzag")->required();
  verify->add_option("--n", vo.n, "Range lo..hi");
  verify->add_option("--a", vo.a, "Range lo..hi (catalan)");
  verify->add_option("--l", vo.l, "Range lo..hi (zigzag)");
  verify->add_option("--random", vo.random, "Number of random polygons");
  verify->add_option("--seed", vo.seed, "Base seed");
  verify->add_flag("--json", vo.json, "Machine-readable output");

  GenerateOptions go;
  auto* generate = app.add_subcommand("generate", "Write a generated polygon file");
  generate->add_option("kind", go.kind, "convex | random | class1..class6 | zigzag")->required();
  generate->add_option("--n", go.n, "Vertex count (convex, random, class1, class5)");
  generate->add_option("--size", go.size, "Class size parameter");
  generate->add_option("--inner", go.inner, "Class 2: vertices of the deleted convex region");
  generate->add_option("--i", go.vertex, "Apex vertex index");
  generate->add_option("--variant", go.variant, "Class variant");
  generate->add_option("--l", go.l, "Zigzag target");
  generate->add_option("--seed", go.seed, "Random seed");
  generate->add_flag("--star", go.star, "Star-shaped random polygon");
  generate->add_option("--span", go.span, "Random coordinates lie in [0, span)");
  generate->add_option("--budget", go.budget, "Zigzag perturbation budget");
  generate->add_option("--out", go.out_path, "Polygon output file");
  generate->add_option("--sidecar", go.sidecar, "Zigzag chord file");

  std::string rfile, rchords, rout;
  auto* render = app.add_subcommand("render", "SVG figure of a polygon and chords");
  render->add_option("file", rfile, "Polygon JSON file")->required();
  render->add_option("--chords", rchords, "Chord JSON file");
  render->add_option("--out", rout, "SVG output file");

  long cn = 0, ck = 0, ca = 0;
  auto* catalan = app.add_subcommand("catalan", "Print d_k(n,a)");
  catalan->add_option("--n", cn)->required();
  catalan->add_option("--k", ck)->required();
  catalan->add_option("--a", ca)->required();

  std::vector<std::string> rev = join_negative_values(args);
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(ao, out);
    if (*verify) return cmd_verify(vo, out);
    if (*generate) return cmd_generate(go, out);
    if (*render) return cmd_render(rfile, rchords, rout, out);
    if (*catalan) {
      out << to_string(d_closed(cn, ck, ca)) << "\n";
      return kExitPass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitInput;
}

}  // namespace chord_euler
