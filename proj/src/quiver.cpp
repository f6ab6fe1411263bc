#include "hallq/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hallq {

void DimVector::validate() const {
    for (int x : c_)
        if (x < 0) throw std::invalid_argument("negative dimension vector entry");
}

int DimVector::total() const {
    int t = 0;
    for (int x : c_) t += x;
    return t;
}

DimVector DimVector::operator+(const DimVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("dimension vector size mismatch");
    std::vector<int> r(size());
    for (size_t i = 0; i < size(); ++i) r[i] = c_[i] + o.c_[i];
    return DimVector(r);
}

DimVector DimVector::operator-(const DimVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("dimension vector size mismatch");
    std::vector<int> r(size());
    for (size_t i = 0; i < size(); ++i) {
        r[i] = c_[i] - o.c_[i];
        if (r[i] < 0) throw std::domain_error("dimension vector subtraction underflow");
    }
    return DimVector(r);
}

bool DimVector::leq(const DimVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("dimension vector size mismatch");
    for (size_t i = 0; i < size(); ++i)
        if (c_[i] > o.c_[i]) return false;
    return true;
}

std::string DimVector::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

DimVector DimVector::parse(const std::string& s) {
    std::vector<int> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad dimension entry: " + tok);
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty dimension vector");
    return DimVector(c);
}

Quiver::Quiver(std::vector<std::string> vertex_names,
               std::vector<std::pair<std::string, std::string>> arrows)
    : names_(std::move(vertex_names)) {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw std::invalid_argument("duplicate vertex id");
    if (names_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
    arrows_.reserve(arrows.size());
    for (auto& [s, t] : arrows) arrows_.push_back({vertex_index(s), vertex_index(t)});
}

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    throw std::invalid_argument("unknown vertex id: " + name);
}

bool Quiver::has_loop_at(int v) const {
    for (const auto& a : arrows_)
        if (a.src == v && a.tgt == v) return true;
    return false;
}

uint64_t Quiver::content_hash() const {
    // FNV-1a over the canonical JSON text
    uint64_t h = 1469598103934665603ull;
    for (char c : to_json()) {
        h ^= uint64_t(uint8_t(c));
        h *= 1099511628211ull;
    }
    return h;
}

std::string Quiver::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = names_;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : arrows_)
        j["arrows"].push_back({{"src", names_[a.src]}, {"tgt", names_[a.tgt]}});
    return j.dump();
}

QuiverPtr Quiver::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.emplace_back(a.at("src").get<std::string>(), a.at("tgt").get<std::string>());
    return std::make_shared<Quiver>(std::move(names), std::move(arrows));
}

long long euler_form(const Quiver& q, const DimVector& v, const DimVector& w) {
    if (v.size() != q.num_vertices() || w.size() != q.num_vertices())
        throw std::invalid_argument("dimension vector does not cover the quiver");
    long long r = 0;
    for (size_t i = 0; i < v.size(); ++i) r += (long long)v[i] * w[i];
    for (const auto& a : q.arrows()) r -= (long long)v[a.src] * w[a.tgt];
    return r;
}

long long symmetric_euler_form(const Quiver& q, const DimVector& v, const DimVector& w) {
    return euler_form(q, v, w) + euler_form(q, w, v);
}

std::vector<Quadruple> enumerate_quadruples(const DimVector& alpha, const DimVector& beta,
                                            const DimVector& alphap, const DimVector& betap) {
    if (alpha + beta != alphap + betap)
        throw std::invalid_argument("quadruple frame mismatch: alpha+beta != alpha'+beta'");
    size_t n = alpha.size();
    std::vector<int> hi(n);
    for (size_t i = 0; i < n; ++i) hi[i] = std::min(alpha[i], alphap[i]);

    std::vector<Quadruple> out;
    std::vector<int> a1(n, 0);
    while (true) {
        // a1 determines the rest; keep it only if b1, b2 stay nonnegative
        bool ok = true;
        std::vector<int> a2(n), b1(n), b2(n);
        for (size_t i = 0; i < n; ++i) {
            a2[i] = alpha[i] - a1[i];
            b1[i] = alphap[i] - a1[i];
            b2[i] = beta[i] - b1[i];
            if (b1[i] < 0 || b2[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back({DimVector(a1), DimVector(a2), DimVector(b1), DimVector(b2)});
        // lexicographic odometer, last coordinate fastest
        size_t i = n;
        while (i > 0) {
            --i;
            if (a1[i] < hi[i]) {
                ++a1[i];
                break;
            }
            a1[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

QuiverPtr preset_quiver(const std::string& name) {
    if (name == "a2") return std::make_shared<Quiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<std::pair<std::string, std::string>>{{"1", "2"}});
    if (name == "a3") return std::make_shared<Quiver>(
        std::vector<std::string>{"1", "2", "3"},
        std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "3"}});
    if (name == "kronecker") return std::make_shared<Quiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"1", "2"}});
    if (name == "jordan") return std::make_shared<Quiver>(
        std::vector<std::string>{"1"},
        std::vector<std::pair<std::string, std::string>>{{"1", "1"}});
    if (name == "d4") return std::make_shared<Quiver>(
        std::vector<std::string>{"1", "2", "3", "4"},
        std::vector<std::pair<std::string, std::string>>{{"1", "4"}, {"2", "4"}, {"3", "4"}});
    throw std::invalid_argument("unknown preset quiver: " + name);
}

}  // namespace hallq
