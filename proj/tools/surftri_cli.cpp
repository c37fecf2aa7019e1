// surftri command line: generation, census checks and cycle reports over TRI files.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surftri/surftri.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kMissing = 3 };

struct Failure {
  int status;
};

void check(int status) {
  if (status < 0) throw Failure{status};
}

struct TriDel {
  void operator()(surftri_tri* t) const { surftri_tri_free(t); }
};
struct SetDel {
  void operator()(surftri_set* s) const { surftri_set_free(s); }
};
using Tri = std::unique_ptr<surftri_tri, TriDel>;
using Set = std::unique_ptr<surftri_set, SetDel>;

std::string take(char* s) {
  std::string r(s);
  surftri_string_free(s);
  return r;
}

std::string record(const surftri_tri* t) {
  char* s = nullptr;
  check(surftri_tri_record(t, &s));
  return take(s);
}

std::string surface_name(surftri_surface s) {
  char* p = nullptr;
  check(surftri_surface_name(s, &p));
  return take(p);
}

surftri_surface parse_surface(const std::string& name) {
  surftri_surface s{};
  check(surftri_surface_parse(name.c_str(), &s));
  return s;
}

Set read_set(const std::string& path) {
  surftri_set* s = nullptr;
  check(surftri_set_read(path.c_str(), &s));
  return Set(s);
}

std::vector<Tri> members(const surftri_set* s) {
  std::vector<Tri> out;
  for (size_t i = 0; i < surftri_set_size(s); ++i) {
    surftri_tri* t = nullptr;
    check(surftri_set_get(s, i, &t));
    out.emplace_back(t);
  }
  return out;
}

// Writes records to a file, or to stdout when path is empty.
void emit(const surftri_set* s, const std::string& path, const std::string& comment) {
  if (!path.empty()) {
    check(surftri_set_write(s, path.c_str(), comment.c_str()));
    return;
  }
  if (!comment.empty()) std::cout << "# " << comment << "\n";
  for (auto& t : members(s)) std::cout << record(t.get()) << "\n";
}

struct Format {
  std::string mode = "table";
  bool table() const { return mode != "kv"; }
  bool kv() const { return mode != "table"; }
};

void print_histogram(const std::map<int, int>& h, const Format& f, const std::string& what) {
  int total = 0;
  for (auto& [n, c] : h) total += c;
  if (f.table()) {
    std::printf("%-8s %8s\n", "Vertices", what.c_str());
    for (auto& [n, c] : h) std::printf("%-8d %8d\n", n, c);
    std::printf("%-8s %8d\n", "Total", total);
  }
  if (f.kv()) {
    for (auto& [n, c] : h) std::printf("vertices=%d count=%d\n", n, c);
    std::printf("total=%d\n", total);
  }
}

std::map<int, int> histogram(const surftri_set* s) {
  std::map<int, int> h;
  for (auto& t : members(s)) ++h[surftri_tri_vertex_count(t.get())];
  return h;
}

std::optional<std::map<int, int>> parse_expect(const std::string& text) {
  std::map<int, int> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
      size_t p1 = 0, p2 = 0;
      int n = std::stoi(item.substr(0, colon), &p1);
      int c = std::stoi(item.substr(colon + 1), &p2);
      if (p1 != colon || p2 != item.size() - colon - 1 || c < 0) return std::nullopt;
      m[n] += c;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return m;
}

std::string cycle_text(const std::vector<int>& c) {
  std::string s;
  for (int v : c) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

int cmd_generate(const std::string& surface, int max_vertices, const std::string& out, std::string checkpoint,
                 const std::string& seed_dir, int jobs, bool allow_long, bool quiet, const Format& f) {
  if (checkpoint.empty())
    if (const char* env = std::getenv("SURFTRI_CHECKPOINT_DIR")) checkpoint = env;
  auto s = parse_surface(surface);
  surftri_generate_options opt{};
  opt.surface = s;
  opt.max_vertices = max_vertices;
  opt.checkpoint_dir = checkpoint.empty() ? nullptr : checkpoint.c_str();
  opt.seed_dir = seed_dir.empty() ? nullptr : seed_dir.c_str();
  opt.jobs = jobs;
  opt.allow_long = allow_long;
  if (!quiet) opt.progress = [](const char* m, void*) { std::fprintf(stderr, "%s\n", m); };
  surftri_set* raw = nullptr;
  check(surftri_generate(&opt, &raw));
  Set set(raw);
  emit(set.get(), out, "irreducible triangulations of " + surface_name(s));
  if (!out.empty()) print_histogram(histogram(set.get()), f, surface_name(s));
  return kOk;
}

int cmd_verify_counts(const std::string& in, const std::string& expect, const Format& f) {
  auto want = parse_expect(expect);
  if (!want) {
    std::fprintf(stderr, "bad --expect, use vertices:count pairs like 7:1,8:4\n");
    return kUsage;
  }
  auto set = read_set(in);
  auto got = histogram(set.get());
  std::set<int> keys;
  for (auto& [n, c] : got) keys.insert(n);
  for (auto& [n, c] : *want) keys.insert(n);
  int bad = 0;
  for (int n : keys) {
    int g = got.count(n) ? got[n] : 0, w = want->count(n) ? want->at(n) : 0;
    if (g != w) {
      ++bad;
      std::printf("mismatch vertices=%d expected=%d got=%d\n", n, w, g);
    }
  }
  print_histogram(got, f, "count");
  if (f.kv()) std::printf("mismatches=%d\n", bad);
  return bad ? kMismatch : kOk;
}

int cmd_edge_width(const std::string& in, int max_length, const Format& f) {
  auto set = read_set(in);
  std::map<int, std::map<int, int>> table;  // n -> width -> count, width 0 = NONE, -1 = not found within bound
  std::set<int> widths;
  for (auto& t : members(set.get())) {
    const int n = surftri_tri_vertex_count(t.get());
    std::vector<int> c(n);
    size_t len = 0;
    int st = surftri_edge_width(t.get(), max_length, c.data(), &len);
    check(st);
    int w = st == SURFTRI_OK ? static_cast<int>(len) : st == SURFTRI_NONE ? 0 : -1;
    ++table[n][w];
    widths.insert(w);
  }
  auto label = [](int w) { return w == 0 ? std::string("NONE") : w < 0 ? std::string(">bound") : std::to_string(w); };
  if (f.table()) {
    std::printf("%-8s", "Vertices");
    for (int w : widths) std::printf(" %7s", label(w).c_str());
    std::printf("\n");
    for (auto& [n, row] : table) {
      std::printf("%-8d", n);
      for (int w : widths) {
        auto it = row.find(w);
        if (it == row.end())
          std::printf(" %7s", "");
        else
          std::printf(" %7d", it->second);
      }
      std::printf("\n");
    }
  }
  if (f.kv())
    for (auto& [n, row] : table)
      for (auto& [w, c] : row) std::printf("vertices=%d width=%s count=%d\n", n, label(w).c_str(), c);
  return kOk;
}

int cmd_classify(const std::string& in, int length, const Format& f) {
  auto set = read_set(in);
  std::map<std::string, long long> kinds;
  for (auto& t : members(set.get())) {
    struct Ctx {
      surftri_tri* t;
      std::map<std::string, long long>* kinds;
      int status = SURFTRI_OK;
    } ctx{t.get(), &kinds};
    check(surftri_for_each_cycle(
        t.get(), length,
        [](const int* c, size_t len, void* u) {
          auto* x = static_cast<Ctx*>(u);
          surftri_cycle_info info{};
          x->status = surftri_classify_cycle(x->t, c, len, &info);
          if (x->status < 0) return 0;
          std::string k;
          if (info.separating)
            k = info.contractible ? "contractible" : "nsc";
          else
            k = std::string(info.one_sided ? "one-sided" : "two-sided") +
                (info.nonorientable_leaving ? " nonorientable-leaving" : " orientable-leaving");
          ++(*x->kinds)[k];
          return 1;
        },
        &ctx));
    check(ctx.status);
  }
  if (f.table()) {
    std::printf("%-40s %10s\n", ("Cycles of length " + std::to_string(length)).c_str(), "count");
    for (auto& [k, c] : kinds) std::printf("%-40s %10lld\n", k.c_str(), c);
  }
  if (f.kv())
    for (auto& [k, c] : kinds) {
      std::string key = k;
      for (auto& ch : key)
        if (ch == ' ') ch = '_';
      std::printf("length=%d kind=%s count=%lld\n", length, key.c_str(), c);
    }
  return kOk;
}

int cmd_nsc(const std::string& in, int h, const std::string& require, int max_length, const Format& f) {
  int rh = -1, rr = -1;
  if (!require.empty()) {
    if (require.size() != 2 || (require[0] != 'O' && require[0] != 'N') || (require[1] != 'O' && require[1] != 'N')) {
      std::fprintf(stderr, "--require takes two letters O or N (genus-h side, other side)\n");
      return kUsage;
    }
    rh = require[0] == 'O';
    rr = require[1] == 'O';
  }
  auto set = read_set(in);
  int found = 0, total = 0;
  std::vector<std::string> lines;
  for (auto& t : members(set.get())) {
    ++total;
    std::vector<int> c(surftri_tri_vertex_count(t.get()));
    size_t len = 0;
    int st = surftri_find_nsc(t.get(), h, rh, rr, max_length, c.data(), &len);
    check(st);
    if (st == SURFTRI_OK) {
      ++found;
      c.resize(len);
      lines.push_back("record=" + std::to_string(total) + " cycle=" + cycle_text(c));
    } else {
      lines.push_back("record=" + std::to_string(total) + " cycle=" + surftri_status_name(st));
    }
  }
  if (f.table()) std::printf("NSC with h=%d: %d/%d found\n", h, found, total);
  if (f.kv()) {
    for (auto& l : lines) std::printf("%s\n", l.c_str());
    std::printf("h=%d found=%d total=%d\n", h, found, total);
  }
  return kOk;
}

int cmd_pseudo_minimal(const std::string& in, const Format& f) {
  auto set = read_set(in);
  auto ms = members(set.get());
  int pm = 0;
  std::vector<int> flags;
  for (auto& t : ms) {
    int x = 0;
    check(surftri_is_pseudo_minimal(t.get(), &x));
    flags.push_back(x);
    pm += x;
  }
  // Flips keep the vertex count, so classes are found per count.
  std::vector<size_t> cls(ms.size());
  size_t ncls = 0;
  std::map<int, std::vector<size_t>> by_n;
  for (size_t i = 0; i < ms.size(); ++i) by_n[surftri_tri_vertex_count(ms[i].get())].push_back(i);
  for (auto& [n, idx] : by_n) {
    Set sub(surftri_set_new());
    for (size_t i : idx) check(surftri_set_add(sub.get(), ms[i].get()));
    std::vector<size_t> local(idx.size());
    size_t k = 0;
    check(surftri_flip_classes(sub.get(), local.data(), &k));
    for (size_t j = 0; j < idx.size(); ++j) cls[idx[j]] = ncls + local[j];
    ncls += k;
  }
  std::map<size_t, int> sizes;
  for (size_t c : cls) ++sizes[c];
  if (f.table()) {
    std::printf("pseudo-minimal: %d/%zu\n", pm, ms.size());
    std::printf("flip classes: %zu, sizes", ncls);
    for (auto& [c, n] : sizes) std::printf(" %d", n);
    std::printf("\n");
  }
  if (f.kv()) {
    for (size_t i = 0; i < ms.size(); ++i)
      std::printf("record=%zu pseudo_minimal=%d class=%zu\n", i + 1, flags[i], cls[i]);
    std::printf("pseudo_minimal=%d total=%zu classes=%zu\n", pm, ms.size(), ncls);
  }
  return kOk;
}

int cmd_construct(const std::string& family, int genus, const std::string& out) {
  surftri_tri* raw = nullptr;
  std::string comment;
  std::vector<int> removed;
  if (family == "Ng-max" || family == "Sg-max") {
    surftri_surface s{family[0] == 'S' ? 1 : 0, genus};
    check(surftri_build_large_irreducible(s, &raw));
    comment = "large irreducible triangulation of " + surface_name(s);
  } else if (family == "N3-counterexample") {
    check(surftri_n3_counterexample(&raw));
    comment = "N3 triangulation without the (N1, N2) separating cycle";
  } else if (family == "base-Bg") {
    removed.resize(3 * static_cast<size_t>(std::max(genus, 0)));
    check(surftri_build_base(genus, &raw, removed.data()));
    comment = "base B" + std::to_string(genus) + "; removed faces:";
    for (size_t i = 0; i < removed.size(); i += 3)
      comment += " " + std::to_string(removed[i]) + "," + std::to_string(removed[i + 1]) + "," +
                 std::to_string(removed[i + 2]);
  } else {
    std::fprintf(stderr, "unknown family %s (Ng-max, Sg-max, N3-counterexample, base-Bg)\n", family.c_str());
    return kUsage;
  }
  Tri t(raw);
  Set set(surftri_set_new());
  check(surftri_set_add(set.get(), t.get()));
  emit(set.get(), out, comment);
  return kOk;
}

int cmd_canon(const std::string& in, const std::string& out) {
  auto set = read_set(in);
  std::map<std::string, Tri> sorted;  // canonical records are equal iff equivalent
  for (auto& t : members(set.get())) {
    surftri_tri* c = nullptr;
    check(surftri_canonical_form(t.get(), &c));
    Tri ct(c);
    auto key = record(ct.get());
    sorted.emplace(std::move(key), std::move(ct));
  }
  Set res(surftri_set_new());
  for (auto& [k, t] : sorted) check(surftri_set_add(res.get(), t.get()));
  emit(res.get(), out, "");
  return kOk;
}

int cmd_oracle(const std::string& surface, int vertices, const std::string& out) {
  auto s = parse_surface(surface);
  surftri_set* raw = nullptr;
  check(surftri_oracle(s, vertices, &raw));
  Set set(raw);
  emit(set.get(), out, surface_name(s) + " triangulations with " + std::to_string(vertices) + " vertices");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of closed surfaces: generation, census and cycle topology"};
  app.require_subcommand(1);
  app.fallthrough();
  Format fmt;
  app.add_option("--format", fmt.mode, "Report format")
      ->check(CLI::IsMember({"table", "kv", "both"}))
      ->capture_default_str();

  std::string surface, out, in, checkpoint, seed_dir, expect, require, family;
  int max_vertices = 0, jobs = 1, max_length = 0, h = 1, length = 3, genus = 0, vertices = 0;
  bool allow_long = false, quiet = false;

  auto* gen = app.add_subcommand("generate", "Generate the irreducible triangulations of a surface");
  gen->add_option("--surface", surface, "S<g> or N<g>")->required();
  gen->add_option("--max-vertices", max_vertices, "Vertex bound (default: the known maximum)");
  gen->add_option("--out", out, "Output TRI file (default: stdout)");
  gen->add_option("--checkpoint", checkpoint, "Checkpoint directory (default: $SURFTRI_CHECKPOINT_DIR)");
  gen->add_option("--seed-dir", seed_dir, "Directory with <surface>.tri seed files");
  gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  gen->add_flag("--allow-long", allow_long, "Permit jobs beyond desk scale");
  gen->add_flag("--quiet", quiet, "No progress messages");

  auto* vc = app.add_subcommand("verify-counts", "Compare the vertex histogram of a TRI file");
  vc->add_option("--in", in)->required();
  vc->add_option("--expect", expect, "vertices:count pairs, e.g. 7:1,8:4")->required();

  auto* ew = app.add_subcommand("edge-width", "Shortest NSC length per record, tabulated by vertex count");
  ew->add_option("--in", in)->required();
  ew->add_option("--max-length", max_length, "Cycle length bound (default: exhaustive)");

  auto* cl = app.add_subcommand("classify", "Classify all cycles of one length");
  cl->add_option("--in", in)->required();
  cl->add_option("--length", length)->check(CLI::Range(3, 64))->capture_default_str();

  auto* nsc = app.add_subcommand("nsc", "Find an NSC splitting Euler genus into h and g-h");
  nsc->add_option("--in", in)->required();
  nsc->set_help_flag("--help", "Print this help message and exit");
  nsc->add_option("--h", h, "Euler genus of one side")->capture_default_str();
  nsc->add_option("--require", require, "Orientability of the two sides, e.g. NO");
  nsc->add_option("--max-length", max_length);

  auto* pm = app.add_subcommand("pseudo-minimal", "Pseudo-minimality and flip classes");
  pm->add_option("--in", in)->required();

  auto* con = app.add_subcommand("construct", "Explicit constructions");
  con->add_option("--family", family, "Ng-max, Sg-max, N3-counterexample or base-Bg")->required();
  con->add_option("--genus", genus);
  con->add_option("--out", out);

  auto* can = app.add_subcommand("canon", "Canonical records, sorted, one per class");
  can->add_option("--in", in)->required();
  can->add_option("--out", out);

  auto* ora = app.add_subcommand("oracle", "All triangulations with a given vertex count, by backtracking");
  ora->add_option("--surface", surface)->required();
  ora->add_option("--vertices", vertices)->required()->check(CLI::Range(3, 20));
  ora->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(surface, max_vertices, out, checkpoint, seed_dir, jobs, allow_long, quiet, fmt);
    if (*vc) return cmd_verify_counts(in, expect, fmt);
    if (*ew) return cmd_edge_width(in, max_length, fmt);
    if (*cl) return cmd_classify(in, length, fmt);
    if (*nsc) return cmd_nsc(in, h, require, max_length, fmt);
    if (*pm) return cmd_pseudo_minimal(in, fmt);
    if (*con) return cmd_construct(family, genus, out);
    if (*can) return cmd_canon(in, out);
    if (*ora) return cmd_oracle(surface, vertices, out);
  } catch (const Failure& e) {
    std::fprintf(stderr, "error: %s: %s\n", surftri_status_name(e.status), surftri_last_error());
    return e.status == SURFTRI_E_INCOMPLETE_SEEDS ? kMissing : kUsage;
  }
  return kUsage;
}
