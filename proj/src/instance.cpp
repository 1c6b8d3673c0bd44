#include "halg/instance.hpp"

#include "halg/cotrialgebra.hpp"
#include "halg/rep.hpp"
#include "halg/scalar.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace halg {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

[[noreturn]] void fail_at(const std::string& id, const std::string& where, const std::string& msg) {
    throw ValidationError(id, where, where + ": " + msg);
}

struct KeyValue {
    std::string value;
    std::string where;  // "file:line"
    bool used = false;
};

struct Section {
    std::string kind;   // "group" | "xmod" | "pipeline"
    std::string name;
    std::string where;
    std::map<std::string, KeyValue> entries;
    std::vector<std::string> order;  // key order, for diagnostics
};

int parse_int(const std::string& text, const std::string& where) {
    try {
        size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        fail_at("cli.value", where, "expected an integer, got '" + text + "'");
    }
}

std::vector<int> parse_ints(const std::string& text, const std::string& where) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_int(tok, where));
    return out;
}

class SectionReader {
  public:
    SectionReader(Section& s) : s_(s) {}

    bool has(const std::string& key) const { return s_.entries.count(key) > 0; }

    const KeyValue& require(const std::string& key) {
        auto it = s_.entries.find(key);
        if (it == s_.entries.end())
            fail_at("cli.key", s_.where, "missing key '" + key + "'");
        it->second.used = true;
        return it->second;
    }

    const KeyValue* optional(const std::string& key) {
        auto it = s_.entries.find(key);
        if (it == s_.entries.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    void finish() const {
        for (const auto& key : s_.order) {
            const KeyValue& kv = s_.entries.at(key);
            if (!kv.used) fail_at("cli.key", kv.where, "unknown key '" + key + "'");
        }
    }

  private:
    Section& s_;
};

GroupPtr build_group(Section& sec) {
    SectionReader r(sec);
    const KeyValue& kindkv = r.require("kind");
    const std::string& kind = kindkv.value;
    GroupPtr g;
    if (kind == "trivial") {
        g = trivial_group();
    } else if (kind == "cyclic" || kind == "symmetric" || kind == "alternating" ||
               kind == "dihedral") {
        const KeyValue& nkv = r.require("n");
        int n = parse_int(nkv.value, nkv.where);
        if (n < 1) fail_at("cli.value", nkv.where, "n must be positive");
        if (kind == "cyclic") g = cyclic_group(n);
        if (kind == "symmetric") g = symmetric_group(n);
        if (kind == "alternating") g = alternating_group(n);
        if (kind == "dihedral") g = dihedral_group(n);
    } else if (kind == "klein4") {
        g = klein_four_group();
    } else if (kind == "quaternion") {
        g = quaternion_group();
    } else if (kind == "table") {
        const KeyValue& okv = r.require("order");
        int n = parse_int(okv.value, okv.where);
        const KeyValue& tkv = r.require("table");
        std::vector<int> table = parse_ints(tkv.value, tkv.where);
        if (int(table.size()) != n * n)
            fail_at("cli.value", tkv.where,
                    "table needs " + std::to_string(n * n) + " entries, got " +
                        std::to_string(table.size()));
        for (int v : table)
            if (v < 0 || v >= n) fail_at("cli.value", tkv.where, "table entry out of range");
        g = group_from_table(sec.name, std::move(table));
    } else if (kind == "permutations") {
        const KeyValue& dkv = r.require("degree");
        int deg = parse_int(dkv.value, dkv.where);
        const KeyValue& gkv = r.require("gens");
        std::vector<std::vector<int>> gens;
        for (const std::string& part : split(gkv.value, ';')) {
            std::vector<int> img = parse_ints(part, gkv.where);
            if (int(img.size()) != deg)
                fail_at("cli.value", gkv.where,
                        "each generator needs " + std::to_string(deg) + " images");
            gens.push_back(std::move(img));
        }
        g = group_from_permutations(sec.name, deg, gens);
    } else {
        fail_at("cli.value", kindkv.where, "unknown group kind '" + kind + "'");
    }
    r.finish();
    return g;
}

GroupPtr resolve_group(const InstanceSpec& spec, const KeyValue& kv) {
    auto it = spec.groups.find(kv.value);
    if (it == spec.groups.end())
        fail_at("cli.reference", kv.where, "unknown group '" + kv.value + "'");
    return it->second;
}

CrossedModule build_xmod(const InstanceSpec& spec, Section& sec) {
    SectionReader r(sec);
    const KeyValue& kindkv = r.require("kind");
    const std::string& kind = kindkv.value;
    CrossedModule xm;
    if (kind == "trivial") {
        xm = xmod_trivial();
    } else if (kind == "aut") {
        xm = xmod_from_aut(resolve_group(spec, r.require("fiber")));
    } else if (kind == "module") {
        GroupPtr base = resolve_group(spec, r.require("base"));
        GroupPtr fiber = resolve_group(spec, r.require("fiber"));
        const KeyValue& akv = r.require("action");
        std::vector<int> action = parse_ints(akv.value, akv.where);
        size_t want = size_t(base->order) * size_t(fiber->order);
        if (action.size() != want)
            fail_at("cli.value", akv.where,
                    "action needs " + std::to_string(want) + " entries, got " +
                        std::to_string(action.size()));
        for (int v : action)
            if (v < 0 || v >= fiber->order)
                fail_at("cli.value", akv.where, "action entry out of range");
        xm = xmod_from_module(base, fiber, action);
    } else if (kind == "explicit") {
        GroupPtr base = resolve_group(spec, r.require("base"));
        GroupPtr fiber = resolve_group(spec, r.require("fiber"));
        const KeyValue& akv = r.require("action");
        std::vector<int> action = parse_ints(akv.value, akv.where);
        size_t want = size_t(base->order) * size_t(fiber->order);
        if (action.size() != want)
            fail_at("cli.value", akv.where,
                    "action needs " + std::to_string(want) + " entries, got " +
                        std::to_string(action.size()));
        for (int v : action)
            if (v < 0 || v >= fiber->order)
                fail_at("cli.value", akv.where, "action entry out of range");
        const KeyValue& bkv = r.require("boundary");
        std::vector<int> bnd = parse_ints(bkv.value, bkv.where);
        if (int(bnd.size()) != fiber->order)
            fail_at("cli.value", bkv.where,
                    "boundary needs " + std::to_string(fiber->order) + " entries, got " +
                        std::to_string(bnd.size()));
        for (int v : bnd)
            if (v < 0 || v >= base->order)
                fail_at("cli.value", bkv.where, "boundary entry out of range");
        // construct without the eager hom check so a bad boundary surfaces as
        // a failed validation record rather than a parse error
        xm = CrossedModule{base, fiber, std::move(action),
                           GroupHom{fiber, base, std::move(bnd)}};
    } else {
        fail_at("cli.value", kindkv.where, "unknown crossed-module kind '" + kind + "'");
    }
    r.finish();
    return xm;
}

struct ParsedField {
    bool rational = true;
    std::uint64_t p = 0;
};

ParsedField parse_field_string(const std::string& text, const std::string& where) {
    if (text == "rational") return {true, 0};
    if (text.rfind("fp:", 0) == 0) {
        std::string num = text.substr(3);
        int p = parse_int(num, where);
        if (p < 2) fail_at("cli.field", where, "modulus must be at least 2");
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) fail_at("cli.field", where, std::to_string(p) + " is not prime");
        return {false, std::uint64_t(p)};
    }
    fail_at("cli.field", where, "field must be 'rational' or 'fp:<prime>', got '" + text + "'");
}

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - from).count();
}

template <class K>
void run_algebra_stage(const std::string& stage, const TwoGroup& tg, Report& r, const K& one) {
    if (stage == "trialgebra") {
        Trialgebra<K> tri = trialgebra_from_2group<K>(tg, one);
        r.checks.merge(trialgebra_check(tri));
    } else if (stage == "cotrialgebra") {
        Trialgebra<K> tri = trialgebra_from_2group<K>(tg, one);
        Cotrialgebra<K> co = cotrialgebra_from_2group<K>(tg, one);
        r.checks.merge(validate_cotrialgebra(co));
        r.checks.merge(duality_check(tri, co));
    } else if (stage == "limits") {
        r.checks.merge(verify_pullback_preservation<K>(tg.s, tg.t, one).checks);
        r.checks.merge(verify_pushout_preservation<K>(tg.s, tg.t, one).checks);
        r.checks.merge(verify_equalizer_preservation<K>(tg.s, tg.t, one).checks);
        r.checks.merge(verify_coequalizer_preservation<K>(tg.s, tg.t, one).checks);
    } else if (stage == "peter-weyl") {
        HopfPtr<K> h = function_algebra<K>(tg.G1, one);
        CosimpleDecomposition<K> dec = cosimple_decomposition(tg.G1, h);
        CheckResult blocks("repcat.blocks", "simple dimensions of the cosimple blocks");
        for (const auto& b : dec.blocks)
            blocks.witnesses.push_back("d=" + std::to_string(b.simple_dim));
        r.checks.add(std::move(blocks));
        r.checks.merge(semisimplicity_check(dec));
    } else if (stage == "coend") {
        HopfPtr<K> h = function_algebra<K>(tg.G1, one);
        CoendResult<K> ce = coend_from_comodules(h, {regular_comodule(h)});
        CheckResult rec("repcat.coend-regular",
                        "matrix coefficients of the regular comodule span the whole coalgebra");
        if (!ce.recovers) rec.fail("span dim " + std::to_string(ce.span.dim()));
        r.checks.add(std::move(rec));
    }
}

}  // namespace

const std::vector<std::string>& known_stages() {
    static const std::vector<std::string> stages = {"validate",      "trialgebra", "cotrialgebra",
                                                    "limits",        "peter-weyl", "coend"};
    return stages;
}

InstanceSpec parse_spec(const std::string& text, const std::string& source) {
    // join continuation lines, strip comments, keep line numbers
    std::vector<std::pair<std::string, int>> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        std::string pending;
        int pending_no = 0;
        while (std::getline(in, raw)) {
            ++no;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string t = trim(raw);
            if (!pending.empty()) {
                pending += " " + t;
                if (!pending.empty() && pending.back() == '\\') {
                    pending.pop_back();
                    continue;
                }
                lines.emplace_back(trim(pending), pending_no);
                pending.clear();
                continue;
            }
            if (t.empty()) continue;
            if (t.back() == '\\') {
                t.pop_back();
                pending = t;
                pending_no = no;
                continue;
            }
            lines.emplace_back(t, no);
        }
        if (!pending.empty()) lines.emplace_back(trim(pending), pending_no);
    }

    std::vector<Section> sections;
    Section* cur = nullptr;
    for (const auto& [line, no] : lines) {
        std::string where = source + ":" + std::to_string(no);
        if (line.front() == '[') {
            if (line.back() != ']') fail_at("cli.parse", where, "unterminated section header");
            std::vector<std::string> parts;
            {
                std::istringstream in(line.substr(1, line.size() - 2));
                std::string tok;
                while (in >> tok) parts.push_back(tok);
            }
            if (parts.empty()) fail_at("cli.parse", where, "empty section header");
            Section s;
            s.kind = parts[0];
            s.where = where;
            if (s.kind == "pipeline") {
                if (parts.size() != 1)
                    fail_at("cli.parse", where, "[pipeline] takes no name");
            } else if (s.kind == "group" || s.kind == "xmod") {
                if (parts.size() != 2)
                    fail_at("cli.parse", where, "[" + s.kind + "] needs exactly one name");
                s.name = parts[1];
            } else {
                fail_at("cli.section", where, "unknown section '" + s.kind + "'");
            }
            sections.push_back(std::move(s));
            cur = &sections.back();
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail_at("cli.parse", where, "expected 'key = value'");
        if (!cur) fail_at("cli.parse", where, "key outside of any section");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_at("cli.parse", where, "empty key");
        if (cur->entries.count(key)) fail_at("cli.parse", where, "duplicate key '" + key + "'");
        cur->entries.emplace(key, KeyValue{value, where, false});
        cur->order.push_back(key);
    }

    InstanceSpec spec;
    spec.source = source;
    bool saw_pipeline = false;
    for (Section& sec : sections) {
        if (sec.kind == "group") {
            if (spec.groups.count(sec.name))
                fail_at("cli.reference", sec.where, "duplicate group '" + sec.name + "'");
            spec.groups.emplace(sec.name, build_group(sec));
        } else if (sec.kind == "xmod") {
            if (spec.xmods.count(sec.name))
                fail_at("cli.reference", sec.where, "duplicate crossed module '" + sec.name + "'");
            spec.xmods.emplace(sec.name, build_xmod(spec, sec));
        } else {
            if (saw_pipeline) fail_at("cli.parse", sec.where, "duplicate [pipeline] section");
            saw_pipeline = true;
            SectionReader r(sec);
            const KeyValue& inst = r.require("instance");
            if (!spec.xmods.count(inst.value))
                fail_at("cli.reference", inst.where,
                        "unknown crossed module '" + inst.value + "'");
            spec.main_xmod = inst.value;
            if (const KeyValue* f = r.optional("field")) {
                parse_field_string(f->value, f->where);
                spec.field = f->value;
            }
            if (const KeyValue* c = r.optional("checks")) {
                if (c->value != "all") {
                    for (const std::string& s : split(c->value, ',')) {
                        if (std::find(known_stages().begin(), known_stages().end(), s) ==
                            known_stages().end())
                            fail_at("cli.stage", c->where, "unknown stage '" + s + "'");
                        spec.stages.insert(s);
                    }
                }
            }
            r.finish();
        }
    }
    if (!saw_pipeline)
        fail_at("cli.section", source, "missing [pipeline] section");
    return spec;
}

InstanceSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cli.parse", path, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

int classify_error(const ValidationError& e) {
    if (e.check == "cli.max-order" || e.check == "hopf.characteristic" ||
        e.check == "repcat.splitting-prime")
        return 3;
    if (e.check.rfind("cli.", 0) == 0) return 2;
    return 1;
}

Report run_pipeline(const InstanceSpec& spec, const RunOptions& opt) {
    Report r;
    r.instance = spec.main_xmod;
    std::string field = opt.field_override.empty() ? spec.field : opt.field_override;
    ParsedField pf = parse_field_string(field, "--field");
    r.field = field;

    auto it = spec.xmods.find(spec.main_xmod);
    if (it == spec.xmods.end())
        throw ValidationError("cli.reference", spec.main_xmod,
                              "pipeline instance does not resolve");
    const CrossedModule& xm = it->second;
    r.g0_order = xm.G->order;
    r.g1_order = xm.G->order * xm.H->order;
    if (r.g1_order > opt.max_order)
        throw ValidationError("cli.max-order", std::to_string(r.g1_order),
                              "cell group order " + std::to_string(r.g1_order) +
                                  " exceeds --max-order " + std::to_string(opt.max_order));
    if (!pf.rational && std::uint64_t(r.g1_order) % pf.p == 0)
        throw ValidationError("hopf.characteristic", std::to_string(pf.p),
                              "field characteristic " + std::to_string(pf.p) +
                                  " divides the cell group order " +
                                  std::to_string(r.g1_order));

    std::vector<std::string> wanted;
    if (!opt.stages.empty()) {
        wanted = opt.stages;
        for (const std::string& s : wanted)
            if (std::find(known_stages().begin(), known_stages().end(), s) ==
                known_stages().end())
                throw ValidationError("cli.stage", s, "unknown stage '" + s + "'");
    } else {
        for (const std::string& s : known_stages())
            if (s == "validate" || spec.stages.empty() || spec.stages.count(s))
                wanted.push_back(s);
    }
    auto selected = [&](const std::string& s) {
        return std::find(wanted.begin(), wanted.end(), s) != wanted.end();
    };

    // structural validation always runs first
    auto t0 = Clock::now();
    r.pipeline.push_back("validate");
    r.checks.merge(validate_xmod(xm));
    bool sound = r.checks.all_pass();
    TwoGroup tg;
    bool have_tg = false;
    if (sound) {
        try {
            tg = to_2group(xm);
            have_tg = true;
        } catch (const ValidationError& e) {
            if (classify_error(e) == 3) throw;
            CheckResult broken(e.check, e.what());
            broken.fail(e.witness);
            r.checks.add(std::move(broken));
        }
        if (have_tg) {
            r.checks.merge(validate_2group(tg));
            r.checks.merge(vertical_inverse_checks(tg));
        }
        sound = r.checks.all_pass();
    }
    r.stage_ms.emplace_back("validate", elapsed_ms(t0));

    for (const std::string& stage : known_stages()) {
        if (stage == "validate" || !selected(stage)) continue;
        if (!sound || !have_tg) break;
        auto ts = Clock::now();
        r.pipeline.push_back(stage);
        try {
            if (pf.rational)
                run_algebra_stage<Rat>(stage, tg, r, Rat(1));
            else
                run_algebra_stage<Fp>(stage, tg, r, Fp(1, std::uint32_t(pf.p)));
        } catch (const ValidationError& e) {
            if (classify_error(e) == 3) throw;
            CheckResult broken(e.check, e.what());
            broken.fail(e.witness);
            r.checks.add(std::move(broken));
        }
        r.stage_ms.emplace_back(stage, elapsed_ms(ts));
    }
    return r;
}

std::string emit_report(const Report& r, const std::string& format, bool include_timings) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["instance"] = r.instance;
        j["field"] = r.field;
        j["pipeline"] = r.pipeline;
        j["structure"] = {{"g0_order", r.g0_order}, {"g1_order", r.g1_order}};
        nlohmann::ordered_json records = nlohmann::ordered_json::array();
        for (const CheckResult& c : r.checks.checks) {
            nlohmann::ordered_json rec;
            rec["id"] = c.id;
            rec["law"] = c.law;
            rec["pass"] = c.pass;
            rec["witnesses"] = c.witnesses;
            records.push_back(std::move(rec));
        }
        j["records"] = std::move(records);
        j["summary"] = {{"total", r.total()}, {"failed", r.failed()}};
        if (include_timings) {
            nlohmann::ordered_json t;
            for (const auto& [stage, ms] : r.stage_ms) t[stage + "_ms"] = ms;
            j["timings"] = std::move(t);
        }
        return j.dump(2) + "\n";
    }
    if (format != "text")
        throw ValidationError("cli.value", format, "report format must be 'json' or 'text'");
    std::ostringstream out;
    out << "instance " << r.instance << "  field " << r.field << "\n";
    out << "g0 order " << r.g0_order << ", g1 order " << r.g1_order << "\n";
    for (const CheckResult& c : r.checks.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.law << "\n";
        for (const std::string& w : c.witnesses) out << "    witness: " << w << "\n";
    }
    out << "summary: " << r.total() << " checks, " << r.failed() << " failed\n";
    if (include_timings)
        for (const auto& [stage, ms] : r.stage_ms) out << "timing " << stage << ": " << ms << " ms\n";
    return out.str();
}

int exit_code_for(const Report& r) { return r.failed() == 0 ? 0 : 1; }

}  // namespace halg
