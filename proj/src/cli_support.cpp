#include "hyperoct/cli_support.hpp"

#include "hyperoct/verify.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hyperoct::cli {

namespace {

constexpr int kDefaultTableMaxN = 6;
constexpr int kDefaultMrMaxN = 4;

int table_bound(const Options& opt) { return opt.max_n > 0 ? opt.max_n : kDefaultTableMaxN; }
int mr_bound(const Options& opt) { return opt.max_n > 0 ? opt.max_n : kDefaultMrMaxN; }

int emit(const Options& opt, const std::string& text, std::ostream& out, std::ostream& err) {
  if (opt.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file " << opt.out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int bad_n(const Options& opt, int bound, std::ostream& err) {
  err << "error: n must be between 1 and " << bound << " (got " << opt.n << ")\n";
  return 2;
}

}  // namespace

std::filesystem::path resolve_cache_dir(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("HYPEROCT_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "hyperoct";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hyperoct";
  return std::filesystem::path(".hyperoct-cache");
}

std::string fnv1a_hex(const std::string& data) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

std::filesystem::path cache_file(const Options& opt, int n, const std::string& kind) {
  return resolve_cache_dir(opt) /
         ("v" + std::to_string(kSchemaVersion) + "-n" + std::to_string(n) + "-" + kind + ".json");
}

}  // namespace

std::optional<nlohmann::json> cache_load(const Options& opt, int n, const std::string& kind) {
  if (opt.no_cache) return std::nullopt;
  std::ifstream f(cache_file(opt, n, kind));
  if (!f) return std::nullopt;
  nlohmann::json doc;
  try {
    f >> doc;
    if (doc.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (doc.at("n").get<int>() != n || doc.at("kind").get<std::string>() != kind) return std::nullopt;
    nlohmann::json payload = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != fnv1a_hex(payload.dump())) return std::nullopt;
    return payload;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const Options& opt, int n, const std::string& kind, const nlohmann::json& payload) {
  if (opt.no_cache) return;
  const nlohmann::json doc = {{"schema_version", kSchemaVersion},
                              {"n", n},
                              {"kind", kind},
                              {"checksum", fnv1a_hex(payload.dump())},
                              {"payload", payload}};
  const std::filesystem::path path = cache_file(opt, n, kind);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const std::filesystem::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) return;  // cache is best-effort
    f << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

nlohmann::json marks_payload(const Options& opt) {
  if (auto cached = cache_load(opt, opt.n, "marks")) return *cached;
  Workspace ws(opt.n, std::max(opt.n, GroupTable::kDefaultMaxRank));
  const MarkTable t = build_mark_table(ws);
  nlohmann::json payload = mark_table_to_json(t, opt.n);
  cache_store(opt, opt.n, "marks", payload);
  return payload;
}

nlohmann::json mr_payload(const Options& opt) {
  if (auto cached = cache_load(opt, opt.n, "mr")) return *cached;
  Workspace ws(opt.n, std::max(opt.n, GroupTable::kDefaultMaxRank));
  MRAlgebra mr(ws);
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& comp : mr.comps()) basis.push_back(comp.parts());
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& a : mr.comps())
    for (const auto& b : mr.comps()) {
      const MRElement prod = mr.multiply(a, b);
      for (const auto& [comp, coeff] : prod.coords)
        entries.push_back({{"a", a.parts()},
                           {"b", b.parts()},
                           {"c", comp.parts()},
                           {"coeff", rational_str(coeff)}});
    }
  nlohmann::json payload = {{"n", opt.n}, {"basis", basis}, {"entries", entries}};
  cache_store(opt, opt.n, "mr", payload);
  return payload;
}

int cmd_marks(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > table_bound(opt)) return bad_n(opt, table_bound(opt), err);
  const std::string format = opt.format.empty() ? "json" : opt.format;
  if (format != "json" && format != "csv") {
    err << "error: marks supports formats json and csv\n";
    return 2;
  }
  try {
    const nlohmann::json payload = marks_payload(opt);
    if (format == "json") return emit(opt, dump(payload), out, err);
    return emit(opt, mark_table_to_csv(mark_table_from_json(payload)), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_idempotents(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > table_bound(opt)) return bad_n(opt, table_bound(opt), err);
  const std::string format = opt.format.empty() ? "json" : opt.format;
  if (format != "json" && format != "csv") {
    err << "error: idempotents supports formats json and csv\n";
    return 2;
  }
  try {
    const MarkTable t = mark_table_from_json(marks_payload(opt));
    if (format == "json") {
      nlohmann::json order = nlohmann::json::array();
      for (const auto& dp : t.order.classes) order.push_back(dp_to_json(dp));
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t.u) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Rational& v : row) jrow.push_back(rational_str(v));
        rows.push_back(std::move(jrow));
      }
      return emit(opt, dump({{"n", opt.n}, {"order", order}, {"e", rows}}), out, err);
    }
    std::string csv = "class";
    for (const auto& dp : t.order.classes) csv += ",\"" + dp.str() + "\"";
    csv += "\n";
    for (int l = 0; l < t.size(); ++l) {
      csv += "\"" + t.order.classes[l].str() + "\"";
      for (const Rational& v : t.u[l]) csv += "," + rational_str(v);
      csv += "\n";
    }
    return emit(opt, csv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

std::vector<long long> sizes_from_table(const MarkTable& t, int n) {
  std::vector<long long> sizes;
  for (int l = 0; l < t.size(); ++l) {
    const Rational v = Rational(group_order(n)) * u_row_sum(t, l);
    if (!is_integral(v)) throw std::logic_error("non-integral class size");
    sizes.push_back(static_cast<long long>(numerator(v)));
  }
  return sizes;
}

}  // namespace

int cmd_classes(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > table_bound(opt)) return bad_n(opt, table_bound(opt), err);
  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (format != "json" && format != "csv" && format != "text") {
    err << "error: classes supports formats text, json and csv\n";
    return 2;
  }
  try {
    const MarkTable t = mark_table_from_json(marks_payload(opt));
    const std::vector<long long> sizes = sizes_from_table(t, opt.n);
    if (format == "json") {
      nlohmann::json classes = nlohmann::json::array();
      for (int l = 0; l < t.size(); ++l)
        classes.push_back({{"class", dp_to_json(t.order.classes[l])}, {"size", sizes[l]}});
      return emit(opt, dump({{"n", opt.n}, {"classes", classes}}), out, err);
    }
    std::string text;
    if (format == "csv") text = "class,size\n";
    for (int l = 0; l < t.size(); ++l)
      if (format == "csv")
        text += "\"" + t.order.classes[l].str() + "\"," + std::to_string(sizes[l]) + "\n";
      else
        text += t.order.classes[l].str() + " " + std::to_string(sizes[l]) + "\n";
    return emit(opt, text, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_typesn(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > table_bound(opt)) return bad_n(opt, table_bound(opt), err);
  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (format != "json" && format != "text") {
    err << "error: typesn supports formats text and json\n";
    return 2;
  }
  try {
    const MarkTable t = mark_table_from_json(marks_payload(opt));
    const std::vector<long long> sizes = sizes_from_table(t, opt.n);
    long long total = 0;
    std::vector<int> contributing;
    for (int l = 0; l < t.size(); ++l)
      if (t.order.classes[l].minus().empty()) {
        total += sizes[l];
        contributing.push_back(l);
      }
    if (format == "json") {
      nlohmann::json classes = nlohmann::json::array();
      for (int l : contributing)
        classes.push_back({{"class", dp_to_json(t.order.classes[l])}, {"size", sizes[l]}});
      return emit(opt, dump({{"n", opt.n}, {"count", total}, {"classes", classes}}), out, err);
    }
    std::string text = std::to_string(total) + "\n";
    for (int l : contributing)
      text += "  " + t.order.classes[l].str() + " " + std::to_string(sizes[l]) + "\n";
    return emit(opt, text, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

SignedPerm parse_word(int n, const std::string& word) {
  SignedPerm w = SignedPerm::identity(n);
  std::stringstream ss(word);
  std::string tok;
  while (ss >> tok) w = w * generator(n, tok);
  return w;
}

SignedPerm parse_window(int n, const std::string& text) {
  std::vector<int> win;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) win.push_back(std::stoi(tok));
  if (static_cast<int>(win.size()) != n) throw std::invalid_argument("window length differs from n");
  return SignedPerm(std::move(win));
}

}  // namespace

int cmd_element(const Options& opt, const ElementQuery& q, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) {
    err << "error: n must be positive\n";
    return 2;
  }
  if (q.word.empty() == q.window.empty()) {
    err << "error: give exactly one of --word or --window\n";
    return 2;
  }
  SignedPerm w;
  std::optional<SignedComposition> comp;
  std::optional<int> l_in;
  try {
    w = q.word.empty() ? parse_window(opt.n, q.window) : parse_word(opt.n, q.word);
    if (!q.comp.empty()) {
      comp = SignedComposition::parse(q.comp);
      if (comp->weight() != opt.n) throw std::invalid_argument("composition weight differs from n");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    Workspace ws(opt.n, std::max(opt.n, GroupTable::kDefaultMaxRank));
    if (comp) {
      if (!ws.subgroup(*comp).contains(w)) {
        err << "error: element is not a member of W_" << comp->str() << "\n";
        return 2;
      }
      l_in = ws.length_in(*comp, w);
    }
    const DoublePartition type = signed_cycle_type(w);
    const std::string format = opt.format.empty() ? "text" : opt.format;
    if (format == "json") {
      nlohmann::json doc = {{"n", opt.n},
                            {"window", w.window()},
                            {"length", length(w)},
                            {"sign", sign_of(w)},
                            {"cycle_type", dp_to_json(type)},
                            {"fix_dim", fixed_space_dim(w)},
                            {"type_sn", is_type_sn(w)}};
      if (l_in) doc["l_A"] = *l_in;
      return emit(opt, dump(doc), out, err);
    }
    std::string text;
    text += "window: " + w.str() + "\n";
    text += "length: " + std::to_string(length(w)) + "\n";
    text += "sign: " + std::string(sign_of(w) > 0 ? "+1" : "-1") + "\n";
    text += "cycle type: " + type.str() + "\n";
    text += "fix dimension: " + std::to_string(fixed_space_dim(w)) + "\n";
    text += "type Sn: " + std::string(is_type_sn(w) ? "yes" : "no") + "\n";
    if (l_in) text += "l_A: " + std::to_string(*l_in) + "\n";
    return emit(opt, text, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const Options& opt, const std::string& suite, bool long_tests, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> suites;
  if (!suite.empty()) {
    try {
      if (opt.n < 1 || opt.n > verify_suite_max_n(suite, long_tests)) {
        err << "error: n out of bounds for suite " << suite << "\n";
        return 2;
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    suites.push_back(suite);
  } else {
    for (const std::string& name : verify_suite_names())
      if (opt.n >= 1 && opt.n <= verify_suite_max_n(name, long_tests)) suites.push_back(name);
    if (suites.empty()) {
      err << "error: n=" << opt.n << " exceeds the bound of every suite\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const std::string& name : suites) {
    try {
      for (const CheckResult& r : run_verify_suite(name, opt.n, long_tests)) {
        out << (r.pass ? "PASS" : "FAIL") << " [" << name << "] " << r.name;
        if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        all_pass = all_pass && r.pass;
      }
    } catch (const std::exception& e) {
      out << "FAIL [" << name << "] suite aborted -- " << e.what() << "\n";
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_export_mr(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > mr_bound(opt)) return bad_n(opt, mr_bound(opt), err);
  try {
    return emit(opt, dump(mr_payload(opt)), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hyperoct::cli
