#ifndef QEXTREMAL_CACHE_HPP
#define QEXTREMAL_CACHE_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "qextremal/version.hpp"

namespace qext {

// Append-only Q-index cache: one record per line, keyed by canonical-form
// hex. A stored value is reused only when it was computed at a tolerance no
// looser than the one requested.
class QIndexCache {
public:
    QIndexCache() = default;

    explicit QIndexCache(const std::string& dir) : enabled_(true) {
        path_ = dir + "/qindex-cache.txt";
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string key, version;
            double q1 = 0.0, tol = 0.0;
            if (!(fields >> key >> q1 >> tol >> version)) continue;
            auto it = entries_.find(key);
            if (it == entries_.end() || tol < it->second.tol) entries_[key] = {q1, tol};
        }
    }

    bool enabled() const { return enabled_; }
    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<double> lookup(const std::string& key, double tol) const {
        auto it = entries_.find(key);
        if (it == entries_.end() || it->second.tol > tol) return std::nullopt;
        return it->second.q1;
    }

    void store(const std::string& key, double q1, double tol) {
        if (!enabled_) return;
        auto it = entries_.find(key);
        if (it != entries_.end() && it->second.tol <= tol) return;
        entries_[key] = {q1, tol};
        if (FILE* f = std::fopen(path_.c_str(), "a")) {
            std::fprintf(f, "%s %.17g %.17g %s\n", key.c_str(), q1, tol, kToolVersion);
            std::fclose(f);
        }
    }

private:
    struct Entry {
        double q1 = 0.0;
        double tol = 0.0;
    };
    std::unordered_map<std::string, Entry> entries_;
    std::string path_;
    bool enabled_ = false;
};

}  // namespace qext

#endif
