// Caches, configuration, and batch orchestration.
//
// Cache files are plain text: '#' metadata lines, one RFC-4180-style header
// row, then comma-separated rows with LF endings. Ordinates and derivative
// values are printed with 18 significant digits ("%.17e"), which
// round-trips doubles exactly, so write -> read -> write is byte-identical.
// Long zero scans append to a .partial file and checkpoint every 10^4 rows;
// a rerun resumes from the last checkpoint or, if the final file is already
// complete under the same policy digest, does nothing.

#include "zetaderiv/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr long long kCheckpointEvery = 10000;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: bad boolean for " + key + ": " + v);
}

double parse_double(const std::string& v, const std::string& key) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') {
        throw ConfigError("config: bad number for " + key + ": " + v);
    }
    return d;
}

struct MetaReader {
    std::map<std::string, std::string> meta;

    // consume '# key = value' lines; returns the first non-meta line
    static MetaReader read(std::istream& in, std::string* first_line) {
        MetaReader m;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] != '#') {
                *first_line = line;
                break;
            }
            std::string body = trim(line.substr(1));
            std::size_t eq = body.find('=');
            if (eq != std::string::npos) {
                m.meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
            } else if (!body.empty()) {
                m.meta[body] = "";
            }
        }
        return m;
    }

    const std::string& require(const std::string& key,
                               const std::string& file) const {
        auto it = meta.find(key);
        if (it == meta.end()) {
            throw ConfigError("cache " + file + ": missing header key " + key);
        }
        return it->second;
    }
};

}  // namespace

std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string RunConfig::zero_policy_digest() const {
    std::ostringstream os;
    os << "pd=" << precision.phase_digits
       << ";tae=" << fmt(precision.target_abs_error)
       << ";mco=" << precision.max_correction_order
       << ";zrt=" << fmt(scan.zero_rel_tol)
       << ";msd=" << scan.max_subdivision_depth;
    return fnv1a_hex(os.str());
}

std::string RunConfig::deriv_policy_digest() const {
    std::ostringstream os;
    os << zero_policy_digest()
       << ";mode=" << (step.mode == StepPolicy::Mode::absolute ? "abs" : "rel")
       << ";h_abs=" << fmt(step.h_abs) << ";h_rel=" << fmt(step.h_rel)
       << ";rich=" << (step.richardson ? 1 : 0);
    return fnv1a_hex(os.str());
}

void validate_cs(const CSPolynomial& poly, long prime_bound) {
    if (poly.two_lambda != 2 && poly.two_lambda != 4) {
        throw ConfigError("cs: only two_lambda = 2 or 4 supported, got " +
                          std::to_string(poly.two_lambda));
    }
    if (poly.source.empty()) {
        throw ConfigError("cs: section [cs." + std::to_string(poly.two_lambda) +
                          "] needs a `source` provenance string");
    }
    int lambda = poly.two_lambda / 2;
    int want_degree = lambda * (lambda + 2) + 1;
    if (poly.degree() != want_degree) {
        throw ConfigError(
            "cs: [cs." + std::to_string(poly.two_lambda) + "] expects degree " +
            std::to_string(want_degree) + " (got " +
            std::to_string(poly.degree()) + "); pad unknown low-order "
            "coefficients with zeros");
    }
    HKOModel m = make_hko_model(poly.two_lambda, prime_bound);
    double want_lead = m.coefficient() / kTwoPi;
    if (std::fabs(poly.coeffs.front() - want_lead) >
        1e-6 * std::max(1.0, std::fabs(want_lead))) {
        throw ConfigError(
            "cs: leading coefficient " + fmt(poly.coeffs.front()) +
            " does not match the moment constant / 2pi = " + fmt(want_lead));
    }
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[' && s.back() == ']') {
            section = s.substr(1, s.size() - 2);
            if (section != "cs.2" && section != "cs.4") {
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unknown section [" + section + "]");
            }
            int tl = section == "cs.2" ? 2 : 4;
            cfg.cs[tl].two_lambda = tl;
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        }
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (!section.empty()) {
            int tl = section == "cs.2" ? 2 : 4;
            if (key == "source") {
                cfg.cs[tl].source = val;
            } else if (key == "coeffs") {
                std::istringstream cs(val);
                std::string tok;
                cfg.cs[tl].coeffs.clear();
                while (std::getline(cs, tok, ',')) {
                    cfg.cs[tl].coeffs.push_back(
                        parse_double(trim(tok), "coeffs"));
                }
            } else {
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unknown key in [" + section + "]: " + key);
            }
            continue;
        }
        if (key == "phase_digits") {
            cfg.precision.phase_digits = static_cast<int>(
                parse_double(val, key));
        } else if (key == "target_abs_error") {
            cfg.precision.target_abs_error = parse_double(val, key);
        } else if (key == "max_correction_order") {
            cfg.precision.max_correction_order =
                static_cast<int>(parse_double(val, key));
        } else if (key == "zero_rel_tol") {
            cfg.scan.zero_rel_tol = parse_double(val, key);
        } else if (key == "max_subdivision_depth") {
            cfg.scan.max_subdivision_depth =
                static_cast<int>(parse_double(val, key));
        } else if (key == "step_mode") {
            if (val == "absolute")
                cfg.step.mode = StepPolicy::Mode::absolute;
            else if (val == "relative")
                cfg.step.mode = StepPolicy::Mode::relative_to_spacing;
            else
                throw ConfigError("config: step_mode must be absolute|relative");
        } else if (key == "h_abs") {
            cfg.step.h_abs = parse_double(val, key);
        } else if (key == "h_rel") {
            cfg.step.h_rel = parse_double(val, key);
        } else if (key == "richardson") {
            cfg.step.richardson = parse_bool(val, key);
        } else if (key == "fujii_c0") {
            cfg.fujii.c0 = parse_double(val, key);
        } else if (key == "fujii_c1") {
            cfg.fujii.c1 = parse_double(val, key);
        } else if (key == "prime_bound") {
            cfg.prime_bound = static_cast<long>(parse_double(val, key));
        } else if (key == "hist_bin") {
            cfg.hist_bin = parse_double(val, key);
        } else if (key == "xmax") {
            cfg.xmax = parse_double(val, key);
        } else if (key == "grid") {
            cfg.grid = static_cast<int>(parse_double(val, key));
        } else if (key == "parallel") {
            cfg.parallel = parse_bool(val, key);
        } else if (key == "out_dir") {
            cfg.out_dir = val;
        } else {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": unknown key " + key);
        }
    }
    if (cfg.precision.phase_digits < 6) {
        throw ConfigError("config: phase_digits must be >= 6");
    }
    if (!(cfg.precision.target_abs_error > 0.0)) {
        throw ConfigError("config: target_abs_error must be positive");
    }
    if (!(cfg.step.h_abs > 0.0) ||
        !(cfg.step.h_rel > 0.0 && cfg.step.h_rel < 0.1)) {
        throw ConfigError("config: need h_abs > 0 and 0 < h_rel < 0.1");
    }
    cfg.fujii.validate();
    cfg.scan.precision = cfg.precision;
    cfg.scan.parallel = cfg.parallel;
    for (auto& [tl, poly] : cfg.cs) {
        if (!poly.coeffs.empty()) validate_cs(poly, cfg.prime_bound);
    }
    return cfg;
}

RunConfig RunConfig::load(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("config: cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

// ---------------------------------------------------------------------------
// zero cache

void ZeroCache::write(const fs::path& file) const {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + file.string());
    out << "# zetaderiv-zero-cache v" << header.version << "\n";
    out << "# t_lo = " << fmt(header.t_lo) << "\n";
    out << "# t_hi = " << fmt(header.t_hi) << "\n";
    out << "# first_index = " << header.first_index << "\n";
    out << "# count = " << header.count << "\n";
    out << "# policy = " << header.policy_digest << "\n";
    out << "index,gamma,theta_mod,residual\n";
    for (const auto& z : rows) {
        out << z.index << ',' << fmt(z.gamma) << ',' << fmt(z.theta_at_gamma)
            << ',' << fmt(z.refine_residual) << "\n";
    }
}

namespace {
ZeroRecord parse_zero_row(const std::string& line, const std::string& file) {
    ZeroRecord z;
    char* p = nullptr;
    z.index = std::strtoll(line.c_str(), &p, 10);
    if (!p || *p != ',')
        throw ConfigError("zero cache " + file + ": bad row: " + line);
    z.gamma = std::strtod(p + 1, &p);
    if (!p || *p != ',')
        throw ConfigError("zero cache " + file + ": bad row: " + line);
    z.theta_at_gamma = std::strtod(p + 1, &p);
    if (!p || *p != ',')
        throw ConfigError("zero cache " + file + ": bad row: " + line);
    z.refine_residual = std::strtod(p + 1, &p);
    return z;
}
}  // namespace

ZeroCache ZeroCache::read(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot open zero cache " + file.string());
    std::string header_row;
    MetaReader meta = MetaReader::read(in, &header_row);
    ZeroCache c;
    c.header.t_lo = parse_double(meta.require("t_lo", file.string()), "t_lo");
    c.header.t_hi = parse_double(meta.require("t_hi", file.string()), "t_hi");
    c.header.first_index =
        std::stoll(meta.require("first_index", file.string()));
    c.header.count = std::stoll(meta.require("count", file.string()));
    c.header.policy_digest = meta.require("policy", file.string());
    if (header_row != "index,gamma,theta_mod,residual") {
        throw ConfigError("zero cache " + file.string() +
                          ": unexpected column header");
    }
    std::string line;
    double prev = -1.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ZeroRecord z = parse_zero_row(line, file.string());
        if (!(z.gamma > prev)) {
            throw ConfigError("zero cache " + file.string() +
                              ": ordinates not strictly increasing at index " +
                              std::to_string(z.index));
        }
        prev = z.gamma;
        c.rows.push_back(z);
    }
    if (static_cast<long long>(c.rows.size()) != c.header.count) {
        throw ConfigError("zero cache " + file.string() + ": header count " +
                          std::to_string(c.header.count) + " != rows " +
                          std::to_string(c.rows.size()));
    }
    return c;
}

std::string ZeroCache::content_digest() const {
    std::ostringstream os;
    for (const auto& z : rows) os << z.index << ',' << fmt(z.gamma) << '\n';
    return fnv1a_hex(os.str());
}

// ---------------------------------------------------------------------------
// cmd_zeros with checkpointed resume

namespace {

struct Checkpoint {
    std::string digest;
    long long rows = 0;
    long long last_index = 0;

    static std::optional<Checkpoint> read(const fs::path& file) {
        std::ifstream in(file);
        if (!in) return std::nullopt;
        Checkpoint c;
        if (!(in >> c.digest >> c.rows >> c.last_index)) return std::nullopt;
        return c;
    }
    void write(const fs::path& file) const {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << digest << ' ' << rows << ' ' << last_index << '\n';
        out.flush();
    }
};

// Truncate `file` to its first `rows` lines; returns records kept.
std::vector<ZeroRecord> load_partial(const fs::path& file, long long rows,
                                     const std::string& fname) {
    std::vector<ZeroRecord> kept;
    std::ifstream in(file, std::ios::binary);
    std::string line;
    while (static_cast<long long>(kept.size()) < rows &&
           std::getline(in, line)) {
        if (line.empty()) continue;
        kept.push_back(parse_zero_row(line, fname));
    }
    return kept;
}

}  // namespace

double height_of_zero_index(long long n) {
    // invert the smooth count (t/2pi)(log(t/2pi) - 1) + 7/8 = n; fixed point
    // in x = t/2pi (plain doubles are plenty: the answer is only a scan seed
    // or a prediction height, both insensitive to O(spacing) slack)
    double target = std::max(1.0, static_cast<double>(n) - 0.875);
    double x = std::max(4.0, target);
    for (int i = 0; i < 80; ++i) {
        x = target / std::max(std::log(x) - 1.0, 0.05);
    }
    return std::max(15.0, kTwoPi * x);
}

fs::path cmd_zeros(const ZerosRequest& req, const RunConfig& cfg) {
    fs::create_directories(cfg.out_dir);
    fs::path final_path = fs::path(cfg.out_dir) / "zeros.csv";
    fs::path partial_path = final_path;
    partial_path += ".partial";
    fs::path ckpt_path = final_path;
    ckpt_path += ".ckpt";

    double t_lo = kMinHeight, t_hi = 0.0;
    long long limit_n = -1;
    if (req.range) {
        t_lo = req.range->first;
        t_hi = req.range->second;
    } else if (req.first_n) {
        limit_n = *req.first_n;
        double t_est = height_of_zero_index(limit_n);
        double spacing = kTwoPi / std::log(std::max(10.0, t_est) / kTwoPi);
        // S(t) slack: the smooth inversion can sit a few spacings early
        t_hi = t_est + 6.0 * spacing + 2.0;
    } else {
        throw RangeError("cmd_zeros: need a range or a first-N request");
    }

    std::string digest = cfg.zero_policy_digest();

    if (fs::exists(final_path)) {
        try {
            ZeroCache existing = ZeroCache::read(final_path);
            bool same_request =
                req.range
                    ? (existing.header.t_lo == t_lo &&
                       existing.header.t_hi == t_hi)
                    : existing.header.count == limit_n;
            if (existing.header.policy_digest == digest && same_request) {
                return final_path;  // idempotent rerun
            }
            std::cerr << "zeros: existing cache has different policy/request, "
                         "recomputing\n";
        } catch (const std::exception& e) {
            std::cerr << "zeros: existing cache unreadable (" << e.what()
                      << "), recomputing\n";
        }
    }

    std::vector<ZeroRecord> done;
    long long resume_index = 0;
    if (fs::exists(ckpt_path) && fs::exists(partial_path)) {
        auto ck = Checkpoint::read(ckpt_path);
        if (ck && ck->digest == digest) {
            done = load_partial(partial_path, ck->rows, partial_path.string());
            if (static_cast<long long>(done.size()) == ck->rows) {
                resume_index = ck->last_index;
                std::cerr << "zeros: resuming after checkpoint at index "
                          << resume_index << "\n";
            } else {
                std::cerr << "zeros: checkpoint/partial mismatch, clean "
                             "restart\n";
                done.clear();
                resume_index = 0;
            }
        } else {
            std::cerr << "zeros: stale or corrupt checkpoint, clean restart\n";
        }
    }

    std::ofstream partial(partial_path, std::ios::binary | std::ios::trunc);
    long long rows = 0;
    for (const auto& z : done) {
        partial << z.index << ',' << fmt(z.gamma) << ',' << fmt(z.theta_at_gamma)
                << ',' << fmt(z.refine_residual) << "\n";
        ++rows;
    }
    partial.flush();

    std::vector<ZeroRecord> all = std::move(done);
    long long since_ckpt = 0;
    ScanOptions opt = cfg.scan;
    scan_zeros_chunked(
        t_lo, t_hi, opt,
        [&](const std::vector<ZeroRecord>& blk) {
            for (const auto& z : blk) {
                if (limit_n > 0 &&
                    static_cast<long long>(all.size()) >= limit_n)
                    return;
                all.push_back(z);
                partial << z.index << ',' << fmt(z.gamma) << ','
                        << fmt(z.theta_at_gamma) << ','
                        << fmt(z.refine_residual) << "\n";
                ++rows;
                if (++since_ckpt >= kCheckpointEvery) {
                    partial.flush();
                    Checkpoint{digest, rows, z.index}.write(ckpt_path);
                    since_ckpt = 0;
                }
            }
        },
        resume_index);
    partial.close();

    if (limit_n > 0 && static_cast<long long>(all.size()) > limit_n) {
        all.resize(static_cast<std::size_t>(limit_n));
    }
    if (limit_n > 0 && static_cast<long long>(all.size()) < limit_n) {
        throw MissingZeroError("cmd_zeros: scan ended short of first-N target",
                               t_lo, t_hi, static_cast<long long>(all.size()),
                               limit_n);
    }

    ZeroCache cache;
    cache.header.t_lo = req.range ? t_lo : kMinHeight;
    cache.header.t_hi = req.range ? t_hi : all.back().gamma;
    cache.header.first_index = all.empty() ? 0 : all.front().index;
    cache.header.count = static_cast<long long>(all.size());
    cache.header.policy_digest = digest;
    cache.rows = std::move(all);
    cache.write(final_path);
    fs::remove(partial_path);
    fs::remove(ckpt_path);
    return final_path;
}

// ---------------------------------------------------------------------------
// derivative cache

void DerivCache::write(const fs::path& file) const {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + file.string());
    out << "# zetaderiv-deriv-cache v" << header.version << "\n";
    out << "# zero_file = " << header.zero_file << "\n";
    out << "# zero_digest = " << header.zero_digest << "\n";
    out << "# h_policy = " << header.h_digest << "\n";
    out << "# count = " << header.count << "\n";
    out << "index,gamma,zprime,theta_mod,err_est\n";
    for (std::size_t i = 0; i < block.size(); ++i) {
        out << block.index[i] << ',' << fmt(block.gamma[i]) << ','
            << fmt(block.zprime[i]) << ',' << fmt(block.theta_mod[i]) << ','
            << fmt(block.err_est[i]) << "\n";
    }
}

DerivCache DerivCache::read(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot open deriv cache " + file.string());
    std::string header_row;
    MetaReader meta = MetaReader::read(in, &header_row);
    DerivCache c;
    c.header.zero_file = meta.require("zero_file", file.string());
    c.header.zero_digest = meta.require("zero_digest", file.string());
    c.header.h_digest = meta.require("h_policy", file.string());
    c.header.count = std::stoll(meta.require("count", file.string()));
    if (header_row != "index,gamma,zprime,theta_mod,err_est") {
        throw ConfigError("deriv cache " + file.string() +
                          ": unexpected column header");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        char* p = nullptr;
        long long idx = std::strtoll(line.c_str(), &p, 10);
        if (!p || *p != ',')
            throw ConfigError("deriv cache: bad row: " + line);
        double gamma = std::strtod(p + 1, &p);
        if (!p || *p != ',')
            throw ConfigError("deriv cache: bad row: " + line);
        double zp = std::strtod(p + 1, &p);
        if (!p || *p != ',')
            throw ConfigError("deriv cache: bad row: " + line);
        double th = std::strtod(p + 1, &p);
        if (!p || *p != ',')
            throw ConfigError("deriv cache: bad row: " + line);
        double err = std::strtod(p + 1, &p);
        c.block.index.push_back(idx);
        c.block.gamma.push_back(gamma);
        c.block.zprime.push_back(zp);
        c.block.theta_mod.push_back(th);
        c.block.err_est.push_back(err);
    }
    if (static_cast<long long>(c.block.size()) != c.header.count) {
        throw ConfigError("deriv cache " + file.string() +
                          ": header count mismatch");
    }
    return c;
}

fs::path cmd_derivatives(const fs::path& zero_file, const RunConfig& cfg) {
    ZeroCache zcache = ZeroCache::read(zero_file);
    std::string zdigest = zcache.content_digest();
    std::string hdigest = cfg.deriv_policy_digest();

    fs::create_directories(cfg.out_dir);
    fs::path out_path = fs::path(cfg.out_dir) / "derivs.csv";
    fs::path audit_path = fs::path(cfg.out_dir) / "derivs.audit";

    if (fs::exists(out_path)) {
        try {
            std::ifstream in(out_path, std::ios::binary);
            std::string header_row;
            MetaReader meta = MetaReader::read(in, &header_row);
            if (meta.require("zero_digest", out_path.string()) == zdigest &&
                meta.require("h_policy", out_path.string()) == hdigest) {
                return out_path;  // up to date
            }
            std::cerr << "derivatives: policy or input changed, recomputing\n";
        } catch (const std::exception&) {
            std::cerr << "derivatives: existing cache unreadable, "
                         "recomputing\n";
        }
    }

    DerivCache out;
    out.header.zero_file = zero_file.filename().string();
    out.header.zero_digest = zdigest;
    out.header.h_digest = hdigest;
    out.header.count = zcache.header.count;

    std::ofstream audit(audit_path, std::ios::binary | std::ios::trunc);
    audit << "# flagged rows: |zprime| <= 10 err_est\n";
    audit << "index,gamma,zprime,err_est\n";

    // chunked batches keep peak memory flat on long runs
    constexpr std::size_t kBatch = 65536;
    std::size_t n = zcache.rows.size();
    out.block.index.reserve(n);
    out.block.gamma.reserve(n);
    out.block.zprime.reserve(n);
    out.block.theta_mod.reserve(n);
    out.block.err_est.reserve(n);
    for (std::size_t lo = 0; lo < n; lo += kBatch) {
        std::size_t hi = std::min(n, lo + kBatch);
        std::span<const ZeroRecord> span(zcache.rows.data() + lo, hi - lo);
        std::vector<DerivativeRecord> recs =
            derivatives_batch(span, cfg.step, cfg.precision, cfg.parallel);
        for (const auto& r : recs) {
            out.block.index.push_back(r.zero.index);
            out.block.gamma.push_back(r.zero.gamma);
            out.block.zprime.push_back(r.zprime);
            out.block.theta_mod.push_back(r.zero.theta_at_gamma);
            out.block.err_est.push_back(r.err_est);
            if (r.small_flagged) {
                audit << r.zero.index << ',' << fmt(r.zero.gamma) << ','
                      << fmt(r.zprime) << ',' << fmt(r.err_est) << "\n";
            }
        }
    }
    out.write(out_path);
    return out_path;
}

// ---------------------------------------------------------------------------
// reports

namespace {

std::ofstream open_report(const fs::path& dir, const std::string& name,
                          std::vector<fs::path>* written) {
    fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write report " + p.string());
    written->push_back(p);
    return out;
}

}  // namespace

std::vector<fs::path> cmd_report(const fs::path& deriv_file,
                                 const std::vector<std::string>& which,
                                 const std::vector<int>& two_lambdas,
                                 const RunConfig& cfg) {
    DerivCache cache = DerivCache::read(deriv_file);
    const DerivBlock& b = cache.block;
    ExecPolicy ex{cfg.parallel};
    fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    std::vector<fs::path> written;

    double T_mid = b.t_mid();
    long long N_rep = b.index.empty() ? 3 : b.index.back();

    for (const std::string& w : which) {
        if (w == "summary") {
            SummaryStats s = summary_stats(b, ex);
            auto out = open_report(dir, "summary.csv", &written);
            out << "count,t_lo,t_hi,min,max,mean,sd\n";
            out << s.count << ',' << fmt(b.t_lo()) << ',' << fmt(b.t_hi())
                << ',' << fmt(s.min) << ',' << fmt(s.max) << ',' << fmt(s.mean)
                << ',' << fmt(s.sd) << "\n";
        } else if (w == "moments") {
            auto out = open_report(dir, "moments.csv", &written);
            out << "two_lambda,count,raw\n";
            for (int tl : two_lambdas) {
                MomentResult m = moment(b, tl, ex);
                out << tl << ',' << m.count << ',' << fmt(m.raw) << "\n";
            }
        } else if (w == "ratios") {
            auto out = open_report(dir, "ratios.csv", &written);
            out << "# T = " << fmt(T_mid) << " (block midpoint)\n";
            bool have_cs2 = cfg.cs.count(2) && !cfg.cs.at(2).coeffs.empty();
            bool have_cs4 = cfg.cs.count(4) && !cfg.cs.at(4).coeffs.empty();
            if (!have_cs2 && !have_cs4) {
                out << "# cs = absent (leading-order ratios only)\n";
            }
            out << "two_lambda,raw,hko_prediction,hko_ratio,cs_ratio\n";
            for (int tl : two_lambdas) {
                MomentResult m = moment(b, tl, ex);
                std::string hko_pred = "", hko_r = "", cs_r = "";
                try {
                    double pred = hko_leading(tl, T_mid);
                    hko_pred = fmt(pred);
                    hko_r = fmt(m.raw / pred);
                } catch (const PoleError&) {
                    hko_pred = "pole";
                } catch (const UnsupportedExponentError&) {
                    // leave blank: no leading-order prediction here
                }
                if (tl == -2) {
                    hko_pred = fmt(gonek_negative(T_mid));
                    hko_r = fmt(m.raw / gonek_negative(T_mid));
                }
                if ((tl == 2 && have_cs2) || (tl == 4 && have_cs4)) {
                    cs_r = fmt(cs_ratio(b, cfg.cs.at(tl), ex));
                }
                out << tl << ',' << fmt(m.raw) << ',' << hko_pred << ','
                    << hko_r << ',' << cs_r << "\n";
            }
        } else if (w == "hist") {
            DensityReport rep = normalized_density(b, cfg.hist_bin, ex);
            auto out = open_report(dir, "hist.csv", &written);
            out << "# mean = " << fmt(rep.mean) << ", sd = " << fmt(rep.sd)
                << ", bin = " << fmt(rep.bin_width) << "\n";
            out << "center,density,diff_vs_gaussian\n";
            for (std::size_t i = 0; i < rep.bins.size(); ++i) {
                out << fmt(rep.bins[i].first) << ',' << fmt(rep.bins[i].second)
                    << ',' << fmt(rep.diffs[i].second) << "\n";
            }
        } else if (w == "tails") {
            std::vector<std::pair<char, double>> cuts = {{'>', 860.0},
                                                         {'<', 1.0}};
            auto entries = tail_report(b, cuts, b.t_hi(), N_rep, ex);
            auto out = open_report(dir, "tails.csv", &written);
            out << "side,cutoff,empirical_pct,predicted_pct\n";
            for (const auto& e : entries) {
                out << e.side << ',' << fmt(e.cutoff) << ','
                    << fmt(e.empirical_pct) << ',' << fmt(e.predicted_pct)
                    << "\n";
            }
        } else if (w == "gauss") {
            auto ms = gaussian_moments(b, 10, ex);
            auto out = open_report(dir, "gauss.csv", &written);
            out << "k,empirical,gaussian\n";
            int k = 3;
            for (auto& [emp, gauss] : ms) {
                out << k++ << ',' << fmt(emp) << ',' << fmt(gauss) << "\n";
            }
        } else if (w == "shifted") {
            auto out = open_report(dir, "shifted.csv", &written);
            int tl = two_lambdas.empty() ? 4 : two_lambdas.front();
            out << "# two_lambda = " << tl << "\n";
            out << "m,S,S_over_S0\n";
            double s0 = shifted_moment(b, tl, 0, ex);
            long m_max = std::min<long>(400, static_cast<long>(b.size()) - 1);
            for (long m = 0; m <= m_max; ++m) {
                double s = shifted_moment(b, tl, m, ex);
                out << m << ',' << fmt(s) << ',' << fmt(s / s0) << "\n";
            }
        } else if (w == "spectrum") {
            SpectrumSeries sp =
                spectrum(b, cfg.xmax, cfg.grid, SpectrumSeries::Variant::index,
                         b.t_hi(), ex);
            auto out = open_report(dir, "spectrum.csv", &written);
            out << "x,re,im,abs\n";
            for (std::size_t i = 0; i < sp.x_grid.size(); ++i) {
                out << fmt(sp.x_grid[i]) << ',' << fmt(sp.values[i].real())
                    << ',' << fmt(sp.values[i].imag()) << ','
                    << fmt(std::abs(sp.values[i])) << "\n";
            }
        } else if (w == "fujii") {
            std::complex<double> f = fujii_empirical(b, ex);
            double pred = fujii_prediction(b.t_hi(), cfg.fujii) -
                          fujii_prediction(std::max(b.t_lo(), 7.0), cfg.fujii);
            auto out = open_report(dir, "fujii.csv", &written);
            out << "re,im,prediction,ratio\n";
            out << fmt(f.real()) << ',' << fmt(f.imag()) << ',' << fmt(pred)
                << ',' << fmt(f.real() / pred) << "\n";
        } else if (w == "top") {
            auto out = open_report(dir, "top.csv", &written);
            out << "two_lambda,rank,cumulative_pct\n";
            for (int tl : two_lambdas) {
                if (tl <= 0) continue;
                auto cum = top_contributors(b, tl, 5, ex);
                for (std::size_t r = 0; r < cum.size(); ++r) {
                    out << tl << ',' << (r + 1) << ',' << fmt(cum[r]) << "\n";
                }
            }
        } else if (w == "gaps") {
            auto gaps = min_gap_report(b, 10, ex);
            auto out = open_report(dir, "gaps.csv", &written);
            out << "n,gamma,gap,abs_zp_n,abs_zp_next,gap_over_mean\n";
            for (const auto& g : gaps) {
                out << g.n << ',' << fmt(g.gamma_n) << ',' << fmt(g.gap) << ','
                    << fmt(g.abs_zp_n) << ',' << fmt(g.abs_zp_next) << ','
                    << fmt(g.gap_over_mean) << "\n";
            }
        } else {
            throw ConfigError("cmd_report: unknown report " + w);
        }
    }
    return written;
}

// ---------------------------------------------------------------------------
// verify

std::string cmd_verify(const fs::path& zero_file,
                       const std::optional<fs::path>& deriv_file,
                       const RunConfig& cfg, bool* ok) {
    std::ostringstream out;
    *ok = true;
    auto fail = [&](const std::string& msg) {
        out << "FAIL " << msg << "\n";
        *ok = false;
    };
    auto pass = [&](const std::string& msg) { out << "ok   " << msg << "\n"; };

    ZeroCache z = ZeroCache::read(zero_file);  // count/order enforced by read
    pass("zero cache: " + std::to_string(z.rows.size()) +
         " rows, strictly increasing, count matches header");
    if (z.header.policy_digest == cfg.zero_policy_digest()) {
        pass("zero cache: policy digest matches current config");
    } else {
        fail("zero cache: policy digest differs from current config");
    }

    // smooth-count audit over the cached range
    if (!z.rows.empty()) {
        double smooth = expected_count(z.header.t_hi, cfg.precision) -
                        expected_count(std::max(z.header.t_lo, 7.0),
                                       cfg.precision);
        if (std::fabs(smooth - static_cast<double>(z.rows.size())) <= 2.5) {
            pass("zero cache: smooth count agrees within S(t) fluctuation");
        } else {
            fail("zero cache: smooth count " + std::to_string(smooth) +
                 " vs rows " + std::to_string(z.rows.size()));
        }
    }

    // spot-check residuals and bracketing on a deterministic sample
    std::size_t step = std::max<std::size_t>(1, z.rows.size() / 64);
    bool resid_ok = true;
    for (std::size_t i = 0; i < z.rows.size(); i += step) {
        ZEvaluation ev = rs_z(z.rows[i].gamma, cfg.precision);
        if (std::fabs(ev.z) > std::max(1e-6, 100.0 * ev.est_error)) {
            resid_ok = false;
            fail("zero cache: |Z| = " + std::to_string(std::fabs(ev.z)) +
                 " too large at cached zero index " +
                 std::to_string(z.rows[i].index));
        }
    }
    if (resid_ok) pass("zero cache: sampled |Z(gamma)| residuals small");

    if (deriv_file) {
        DerivCache d = DerivCache::read(*deriv_file);
        pass("deriv cache: " + std::to_string(d.block.size()) +
             " rows, count matches header");
        if (d.header.zero_digest == z.content_digest()) {
            pass("deriv cache: zero-cache digest link matches");
        } else {
            fail("deriv cache: linked digest differs from zero cache content");
        }
        if (d.header.count != z.header.count) {
            fail("deriv cache: row count differs from zero cache");
        }
        bool deriv_ok = true;
        std::size_t dstep = std::max<std::size_t>(1, d.block.size() / 32);
        for (std::size_t i = 0; i < d.block.size(); i += dstep) {
            double ana = z_prime_analytic(d.block.gamma[i], cfg.precision);
            if (std::fabs(std::fabs(ana) - std::fabs(d.block.zprime[i])) >
                2e-4) {
                deriv_ok = false;
                fail("deriv cache: central vs analytic |Z'| differ by > 2e-4 "
                     "at index " +
                     std::to_string(d.block.index[i]));
            }
        }
        if (deriv_ok) {
            pass("deriv cache: sampled |Z'| agree with the analytic route");
        }
    }
    return out.str();
}

}  // namespace zetaderiv
