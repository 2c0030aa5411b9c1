// config.hpp — the experiment configuration: a flat sectioned key-value
// text format (one nesting level, diff-friendly), loaded into a typed
// struct with validation.  CLI flags override keys one-to-one under
// "section.key" names.

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavereg/manifold.hpp"

namespace wavereg {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raw "section.key" -> value map
class KeyValueConfig {
  public:
    static KeyValueConfig parse(const std::string& text) {
        KeyValueConfig cfg;
        std::istringstream in(text);
        std::string line, section;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw ConfigError("config line " + std::to_string(lineno) +
                                      ": unterminated section header");
                section = trim(line.substr(1, line.size() - 2));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
            cfg.set(section.empty() ? key : section + "." + key, value);
        }
        return cfg;
    }

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }

    double get_double(const std::string& key, double fallback) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        try {
            std::size_t used = 0;
            const double v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing text");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not a number: " + it->second);
        }
    }

    long get_int(const std::string& key, long fallback) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        try {
            std::size_t used = 0;
            const long v = std::stol(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing text");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not an integer: " + it->second);
        }
    }

    std::vector<std::string> get_list(const std::string& key,
                                      const std::vector<std::string>& fallback) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        std::vector<std::string> out;
        std::istringstream in(it->second);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (!item.empty()) out.push_back(item);
        }
        return out;
    }

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    static std::string trim(std::string s) {
        const auto issp = [](unsigned char c) { return std::isspace(c); };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    }

    std::map<std::string, std::string> kv_;
};

struct ExperimentConfig {
    // manifold
    std::string manifold_kind = "circle";
    std::vector<double> lengths{kTwoPi};
    // filter / cutoffs
    double filter_a = 1.0;
    double filter_b = 2.0;
    double cutoff_c = 0.5;
    double cutoff_c2 = 1.0;  // second cutoff for the independence check
    // epsilon grid
    double eps_start = 1.0 / 16.0;
    double eps_ratio = 0.5;
    long eps_count = 9;
    // zoo and check selection
    std::vector<std::string> zoo_members{"dirac", "sawtooth_jump", "smooth_bump"};
    std::vector<std::string> checks{"moderate_growth", "approximate_identity",
                                    "support_preservation", "smooth_negligibility",
                                    "wavefront_preservation"};
    // weyl
    double weyl_lambda_max = 1e6;
    double weyl_tolerance = 0.01;
    // output & run
    std::string output_dir = "out";
    long seed = 42;
    long threads = 2;

    static ExperimentConfig from_kv(const KeyValueConfig& kv) {
        ExperimentConfig c;
        c.manifold_kind = kv.get("manifold.kind", c.manifold_kind);
        if (kv.has("manifold.lengths")) {
            c.lengths.clear();
            for (const auto& tok : kv.get_list("manifold.lengths", {})) {
                try {
                    c.lengths.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw ConfigError("config key 'manifold.lengths': not numbers");
                }
            }
        }
        c.filter_a = kv.get_double("filter.a", c.filter_a);
        c.filter_b = kv.get_double("filter.b", c.filter_b);
        c.cutoff_c = kv.get_double("cutoff.c", c.cutoff_c);
        c.cutoff_c2 = kv.get_double("cutoff.c2", c.cutoff_c2);
        c.eps_start = kv.get_double("scan.eps_start", c.eps_start);
        c.eps_ratio = kv.get_double("scan.eps_ratio", c.eps_ratio);
        c.eps_count = kv.get_int("scan.eps_count", c.eps_count);
        c.zoo_members = kv.get_list("zoo.members", c.zoo_members);
        c.checks = kv.get_list("checks.select", c.checks);
        c.weyl_lambda_max = kv.get_double("weyl.lambda_max", c.weyl_lambda_max);
        c.weyl_tolerance = kv.get_double("weyl.tolerance", c.weyl_tolerance);
        c.output_dir = kv.get("output.dir", c.output_dir);
        c.seed = kv.get_int("run.seed", c.seed);
        c.threads = kv.get_int("run.threads", c.threads);
        c.validate();
        return c;
    }

    void validate() const {
        if (manifold_kind != "circle" && manifold_kind != "torus")
            throw ConfigError("manifold.kind must be circle or torus");
        if (lengths.empty() || lengths.size() > 3)
            throw ConfigError("manifold.lengths must have 1..3 entries");
        for (double L : lengths)
            if (!(L > 0.0)) throw ConfigError("manifold.lengths must be positive");
        if (!(filter_a > 0.0) || !(filter_b > filter_a))
            throw ConfigError("filter needs 0 < a < b");
        if (!(cutoff_c > 0.0) || !(cutoff_c2 > 0.0)) throw ConfigError("cutoffs must be positive");
        if (!(eps_start > 0.0) || eps_start > 1.0)
            throw ConfigError("scan.eps_start must lie in (0, 1]");
        if (!(eps_ratio > 0.0) || eps_ratio >= 1.0)
            throw ConfigError("scan.eps_ratio must lie in (0, 1)");
        if (eps_count < 1 || eps_count > 64) throw ConfigError("scan.eps_count must be 1..64");
        if (!(weyl_lambda_max > 0.0)) throw ConfigError("weyl.lambda_max must be positive");
        if (threads < 1 || threads > 256) throw ConfigError("run.threads must be 1..256");
    }

    std::vector<double> eps_grid() const {
        std::vector<double> g(static_cast<std::size_t>(eps_count), 0.0);
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] = eps_start * std::pow(eps_ratio, double(i));
        return g;
    }

    ManifoldModel manifold(double eps_min_hint = 0.0) const {
        (void)eps_min_hint;
        if (manifold_kind == "circle") return ManifoldModel::circle(8, 64);
        std::vector<int> kmax(lengths.size(), 8);
        return ManifoldModel::torus(lengths, kmax);
    }
};

}  // namespace wavereg
