#include "dihomol/dga.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace dihomol {

namespace {

SparseVector multiply(const InvolutiveDGA& a, const SparseVector& u, const SparseVector& v) {
    SparseVector out;
    for (const auto& x : u.entries()) {
        for (const auto& y : v.entries()) out.axpy(x.value * y.value, a.product(x.index, y.index));
    }
    return out;
}

SparseVector apply_map(const LinearMap& m, const SparseVector& v) {
    SparseVector out;
    for (const auto& e : v.entries()) out.axpy(e.value, m.at(e.index));
    return out;
}

std::string format_vector(const InvolutiveDGA& a, const SparseVector& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& e : v.entries()) {
        if (!s.empty()) s += " + ";
        if (!e.value.is_one()) s += e.value.to_string() + "*";
        s += a.name(e.index);
    }
    return s;
}

void check_field(const Field& f, const SparseVector& v, std::size_t dim, const char* what) {
    for (const auto& e : v.entries()) {
        if (!(e.value.field() == f)) throw FieldMismatch(std::string(what) + " coefficient over " + e.value.field().name());
        if (e.index >= dim) throw std::out_of_range(std::string(what) + " refers to basis index " + std::to_string(e.index));
    }
}

}  // namespace

InvolutiveDGA::InvolutiveDGA(const Field& field, std::vector<Generator> basis, std::size_t unit,
                             std::vector<SparseVector> products, LinearMap differential, LinearMap involution,
                             std::optional<int> max_bar_length)
    : field_(field), basis_(std::move(basis)), unit_(unit), products_(std::move(products)),
      differential_(std::move(differential)), involution_(std::move(involution)), max_bar_length_(max_bar_length) {
    const std::size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("algebra needs a non-empty basis");
    if (unit_ >= n) throw std::out_of_range("unit index outside basis");
    if (products_.size() != n * n) throw std::invalid_argument("product table must have dim^2 entries");
    if (differential_.size() != n) throw std::invalid_argument("differential must have dim entries");
    if (involution_.size() != n) throw std::invalid_argument("involution must have dim entries");
    if (max_bar_length_ && *max_bar_length_ < 0) throw std::invalid_argument("max_bar_length must be >= 0");
    for (const auto& p : products_) check_field(field_, p, n, "product");
    for (const auto& d : differential_) check_field(field_, d, n, "differential");
    for (const auto& i : involution_) check_field(field_, i, n, "involution");
}

bool InvolutiveDGA::has_zero_differential() const {
    return std::all_of(differential_.begin(), differential_.end(), [](const auto& v) { return v.empty(); });
}

bool InvolutiveDGA::involution_is_identity() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (!(involution_[i] == SparseVector::unit(field_, i))) return false;
    }
    return true;
}

std::optional<std::size_t> InvolutiveDGA::find(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) return i;
    }
    return std::nullopt;
}

bool ValidationReport::failed(std::string_view axiom) const {
    return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.axiom == axiom; });
}

std::string ValidationReport::to_string() const {
    if (ok()) return "all axioms pass (" + std::to_string(checks) + " checks)";
    std::ostringstream os;
    os << failures.size() << " axiom failure(s) in " << checks << " checks";
    for (const auto& f : failures) os << "\n  " << f.axiom << ": " << f.witness;
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("algebra fails validation: " + report.to_string()), report_(std::move(report)) {}

ValidationReport validate(const InvolutiveDGA& a) {
    ValidationReport r;
    const Field& f = a.field();
    const std::size_t n = a.dimension();
    auto e = [&](std::size_t i) { return SparseVector::unit(f, i); };
    auto fail = [&](std::string axiom, std::string witness) { r.failures.push_back({std::move(axiom), std::move(witness)}); };
    auto expect_equal = [&](const char* axiom, const SparseVector& lhs, const SparseVector& rhs, const std::string& where) {
        ++r.checks;
        if (!(lhs == rhs)) fail(axiom, where + ": " + format_vector(a, lhs) + " != " + format_vector(a, rhs));
    };

    std::set<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        ++r.checks;
        if (!names.insert(a.name(i)).second) fail("basis", "duplicate name '" + a.name(i) + "'");
    }

    const std::size_t u = a.unit();
    ++r.checks;
    if (a.cohomological_degree(u) != 0) fail("unit", "unit '" + a.name(u) + "' has nonzero degree");
    for (std::size_t i = 0; i < n; ++i) {
        expect_equal("unit", a.product(u, i), e(i), "1*" + a.name(i));
        expect_equal("unit", a.product(i, u), e(i), a.name(i) + "*1");
    }

    for (std::size_t i = 0; i < n; ++i) {
        ++r.checks;
        const int d = a.cohomological_degree(i);
        if (d < 0) {
            fail("connected", a.name(i) + " has negative cohomological degree " + std::to_string(d));
        } else if (d == 0 && i != u) {
            fail("connected", a.name(i) + " is a second degree-0 basis element");
        } else if (d == 1 && !a.max_bar_length()) {
            fail("simply-connected", a.name(i) +
                                         " has cohomological degree 1; bar complexes are then infinite in each degree "
                                         "(set max_bar_length to truncate)");
        }
    }

    auto check_degree = [&](const char* what, const SparseVector& v, int expected, const std::string& where) {
        ++r.checks;
        for (const auto& x : v.entries()) {
            if (a.cohomological_degree(x.index) != expected) {
                fail("grading", std::string(what) + " " + where + " has component " + a.name(x.index) +
                                    " of degree " + std::to_string(a.cohomological_degree(x.index)) + ", expected " +
                                    std::to_string(expected));
                return;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            check_degree("product", a.product(i, j), a.cohomological_degree(i) + a.cohomological_degree(j),
                         a.name(i) + "*" + a.name(j));
        }
        check_degree("differential", a.differential(i), a.cohomological_degree(i) + 1, "d(" + a.name(i) + ")");
        check_degree("involution", a.involution(i), a.cohomological_degree(i), "bar(" + a.name(i) + ")");
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                expect_equal("associativity", multiply(a, a.product(i, j), e(k)), multiply(a, e(i), a.product(j, k)),
                             "(" + a.name(i) + a.name(j) + ")" + a.name(k));
            }
        }
    }

    const LinearMap& d = a.differential_map();
    const LinearMap& bar = a.involution_map();
    for (std::size_t i = 0; i < n; ++i) {
        expect_equal("d^2=0", apply_map(d, d[i]), SparseVector{}, "d(d(" + a.name(i) + "))");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            SparseVector rhs = multiply(a, d[i], e(j));
            rhs.axpy(sign_scalar(f, a.cohomological_degree(i)), multiply(a, e(i), d[j]));
            expect_equal("leibniz", apply_map(d, a.product(i, j)), rhs, "d(" + a.name(i) + "*" + a.name(j) + ")");
        }
    }

    expect_equal("involution-unit", bar[u], e(u), "bar(1)");
    for (std::size_t i = 0; i < n; ++i) {
        expect_equal("involution-square", apply_map(bar, bar[i]), e(i), "bar(bar(" + a.name(i) + "))");
        expect_equal("involution-commutes-with-d", apply_map(d, bar[i]), apply_map(bar, d[i]),
                     "d(bar(" + a.name(i) + "))");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            SparseVector rhs = multiply(a, bar[j], bar[i]);
            rhs.scale(sign_scalar(f, static_cast<long>(a.cohomological_degree(i)) * a.cohomological_degree(j)));
            expect_equal("anti-multiplicative", apply_map(bar, a.product(i, j)), rhs,
                         "bar(" + a.name(i) + "*" + a.name(j) + ")");
        }
    }
    return r;
}

bool is_graded_commutative(const InvolutiveDGA& a) {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            SparseVector swapped = a.product(j, i);
            swapped.scale(sign_scalar(a.field(), static_cast<long>(a.cohomological_degree(i)) * a.cohomological_degree(j)));
            if (!(a.product(i, j) == swapped)) return false;
        }
    }
    return true;
}

InvolutiveDGA make_validated(InvolutiveDGA a) {
    ValidationReport r = validate(a);
    if (!r.ok()) throw ValidationError(std::move(r));
    return a;
}

ReducedBasis reduced_basis(const InvolutiveDGA& a) {
    ReducedBasis rb;
    std::vector<std::ptrdiff_t> slot(a.dimension(), -1);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (i == a.unit()) continue;
        slot[i] = static_cast<std::ptrdiff_t>(rb.indices.size());
        rb.indices.push_back(i);
        rb.names.push_back(a.name(i));
    }
    auto project = [&](const SparseVector& v) {
        std::vector<Entry> out;
        for (const auto& x : v.entries()) {
            if (slot[x.index] >= 0) out.push_back({static_cast<std::size_t>(slot[x.index]), x.value});
        }
        return SparseVector(std::move(out));
    };
    for (std::size_t i : rb.indices) {
        rb.differential.push_back(project(a.differential(i)));
        rb.involution.push_back(project(a.involution(i)));
    }
    for (std::size_t i : rb.indices) {
        for (std::size_t j : rb.indices) rb.products.push_back(project(a.product(i, j)));
    }
    return rb;
}

namespace presets {

namespace {

InvolutiveDGA monogenic(const Field& f, int degree, int truncation, std::string generator) {
    std::vector<Generator> basis;
    for (int k = 0; k < truncation; ++k) {
        std::string name = k == 0 ? "1" : (k == 1 ? generator : generator + "^" + std::to_string(k));
        basis.push_back({name, k * degree});
    }
    const std::size_t n = basis.size();
    std::vector<SparseVector> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j < n) products[i * n + j] = SparseVector::unit(f, i + j);
        }
    }
    LinearMap involution;
    for (std::size_t i = 0; i < n; ++i) involution.push_back(SparseVector::unit(f, i));
    return make_validated(InvolutiveDGA(f, std::move(basis), 0, std::move(products), LinearMap(n), std::move(involution)));
}

}  // namespace

InvolutiveDGA point(const Field& f) { return monogenic(f, 0, 1, "x"); }

InvolutiveDGA sphere_even(const Field& f, int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("sphere_even needs an even degree >= 2; for odd degree n use truncated_poly(n,2)");
    }
    return monogenic(f, n, 2, "a");
}

InvolutiveDGA truncated_poly(const Field& f, int degree, int truncation) {
    if (degree < 1) throw std::invalid_argument("truncated_poly needs a generator of degree >= 1");
    if (truncation < 1) throw std::invalid_argument("truncated_poly needs truncation >= 1");
    if (degree % 2 != 0 && truncation > 2) {
        throw std::invalid_argument("an odd generator squares to zero in a graded-commutative algebra; use truncation 2");
    }
    return monogenic(f, degree, truncation, "x");
}

InvolutiveDGA noncommutative_odd(const Field& f) {
    enum : std::size_t { one, x, y, xy, yx, n };
    std::vector<Generator> basis{{"1", 0}, {"x", 3}, {"y", 2}, {"xy", 5}, {"yx", 5}};
    std::vector<SparseVector> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        products[one * n + i] = SparseVector::unit(f, i);
        products[i * n + one] = SparseVector::unit(f, i);
    }
    products[x * n + y] = SparseVector::unit(f, xy);
    products[y * n + x] = SparseVector::unit(f, yx);
    auto neg = [&](std::size_t i) { return SparseVector(std::vector<Entry>{{i, Scalar(f, -1)}}); };
    LinearMap involution{SparseVector::unit(f, one), neg(x), SparseVector::unit(f, y), neg(yx), neg(xy)};
    return make_validated(InvolutiveDGA(f, std::move(basis), one, std::move(products), LinearMap(n), std::move(involution)));
}

InvolutiveDGA from_token(std::string_view token, const Field& f) {
    const std::string t(token);
    std::smatch m;
    if (t == "point") return point(f);
    if (t == "noncommutative_odd") return noncommutative_odd(f);
    static const std::regex sphere(R"(sphere(?:_even)?\(?(\d+)\)?)");
    static const std::regex trunc(R"(truncated_poly\((\d+),\s*(\d+)\))");
    if (std::regex_match(t, m, sphere)) return sphere_even(f, std::stoi(m[1]));
    if (std::regex_match(t, m, trunc)) return truncated_poly(f, std::stoi(m[1]), std::stoi(m[2]));
    throw std::invalid_argument("unknown preset '" + t +
                                "' (expected point, sphere<n>, sphere_even(n), truncated_poly(d,t), noncommutative_odd)");
}

}  // namespace presets

}  // namespace dihomol
