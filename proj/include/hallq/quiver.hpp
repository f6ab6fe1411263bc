#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hallq {

/// Dimension vector: one nonnegative count per vertex, in the quiver's
/// vertex-list order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> counts) : c_(std::move(counts)) { validate(); }
    static DimVector zeros(size_t n) { return DimVector(std::vector<int>(n, 0)); }
    static DimVector unit(size_t n, size_t i) {
        std::vector<int> c(n, 0);
        c.at(i) = 1;
        return DimVector(c);
    }

    size_t size() const { return c_.size(); }
    int operator[](size_t i) const { return c_[i]; }
    const std::vector<int>& counts() const { return c_; }

    int total() const;
    bool is_zero() const { return total() == 0; }

    DimVector operator+(const DimVector& o) const;
    /// Componentwise subtraction; throws if any component would go negative.
    DimVector operator-(const DimVector& o) const;
    bool leq(const DimVector& o) const;  // componentwise

    bool operator==(const DimVector& o) const { return c_ == o.c_; }
    bool operator!=(const DimVector& o) const { return !(*this == o); }
    bool operator<(const DimVector& o) const { return c_ < o.c_; }  // lexicographic

    std::string str() const;  // "1,0,2"
    static DimVector parse(const std::string& s);

private:
    std::vector<int> c_;
    void validate() const;
};

/// Finite quiver: ordered vertex list (string ids) and arrow list.
/// Arrows are stored as dense (source, target) index pairs; multi-arrows
/// and loops are permitted.
class Quiver {
public:
    struct Arrow {
        int src;
        int tgt;
    };

    Quiver(std::vector<std::string> vertex_names, std::vector<std::pair<std::string, std::string>> arrows);

    size_t num_vertices() const { return names_.size(); }
    size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& name) const;  // throws on unknown name
    bool has_loop_at(int v) const;

    /// Stable content hash: equal quivers (same names, same arrow list,
    /// same order) hash equally across runs and platforms.
    uint64_t content_hash() const;

    std::string to_json() const;
    static std::shared_ptr<const Quiver> from_json(const std::string& text);

private:
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// <v,w> = sum_i v_i w_i - sum_h v_{s(h)} w_{t(h)}.
long long euler_form(const Quiver& q, const DimVector& v, const DimVector& w);

/// (v,w) = <v,w> + <w,v>.
long long symmetric_euler_form(const Quiver& q, const DimVector& v, const DimVector& w);

/// One solution of the four sum constraints indexing the decomposition of
/// a restriction of an induction: a1+a2 = alpha, b1+b2 = beta,
/// a1+b1 = alpha', a2+b2 = beta'.
struct Quadruple {
    DimVector a1, a2, b1, b2;
};

/// All quadruples for the given frame, in lexicographic order of a1.
/// Throws if alpha+beta != alphap+betap.
std::vector<Quadruple> enumerate_quadruples(const DimVector& alpha, const DimVector& beta,
                                            const DimVector& alphap, const DimVector& betap);

/// Built-in quivers: a2, a3 (linear orientations), kronecker (two arrows
/// 1->2), jordan (one loop), d4 (three subspace arrows into vertex 4).
QuiverPtr preset_quiver(const std::string& name);

}  // namespace hallq
