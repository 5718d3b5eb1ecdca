#include "binomint/fermat.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace binomint {

FermatTriple::FermatTriple(BigNatural x, BigNatural y, BigNatural z, unsigned long n)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), n_(n) {
    if (n_ < 2) throw Error(ErrorKind::DomainError, "Fermat exponent must be at least 2");
    const BigNatural one(1UL);
    if (x_ < one || y_ < one || z_ < one) throw Error(ErrorKind::DomainError, "triple components must be >= 1");
    if (y_ < x_) std::swap(x_, y_);
}

bool flt_check(const FermatTriple& t) { return t.X().pow(t.n()) + t.Y().pow(t.n()) == t.Z().pow(t.n()); }

NormalizedPoint normalize(const FermatTriple& t) {
    NormalizedPoint p;
    p.x = Rational(t.X().value(), t.Z().value());
    p.y = Rational(t.Y().value(), t.Z().value());
    p.on_curve = flt_check(t);
    p.tie = t.tie();
    return p;
}

Rational curve_residual(const Rational& x, const Rational& y, unsigned long n) {
    const auto e = static_cast<long>(n);
    return x.pow(e) + y.pow(e) - Rational(1);
}

namespace {

void scan_range(unsigned long n, unsigned long z_lo, unsigned long z_hi, const std::vector<BigNatural>& powers,
                std::vector<FermatTriple>& out) {
    for (unsigned long z = z_lo; z <= z_hi; ++z) {
        const BigNatural& zn = powers[z];
        for (unsigned long y = 1; y < z; ++y) {
            const BigNatural& yn = powers[y];
            for (unsigned long x = 1; x <= y; ++x) {
                const BigNatural lhs = powers[x] + yn;
                if (lhs > zn) break;
                if (lhs == zn) out.emplace_back(BigNatural(x), BigNatural(y), BigNatural(z), n);
            }
        }
    }
}

}  // namespace

std::vector<FermatTriple> search_triples(unsigned long n, unsigned long z_max, unsigned workers) {
    if (n < 2) throw Error(ErrorKind::DomainError, "search needs n >= 2");
    if (z_max < 2) throw Error(ErrorKind::DomainError, "search needs z_max >= 2");
    std::vector<BigNatural> powers(z_max + 1);
    for (unsigned long k = 0; k <= z_max; ++k) powers[k] = BigNatural(k).pow(n);

    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(z_max - 1)));
    std::vector<std::vector<FermatTriple>> parts(workers);
    if (workers == 1) {
        scan_range(n, 2, z_max, powers, parts[0]);
    } else {
        // Contiguous Z blocks keep each part sorted; concatenation preserves order.
        std::vector<std::thread> pool;
        const unsigned long total = z_max - 1;
        unsigned long start = 2;
        for (unsigned w = 0; w < workers; ++w) {
            const unsigned long len = total / workers + (w < total % workers ? 1 : 0);
            const unsigned long end = start + len - 1;
            pool.emplace_back([&, w, start, end] { scan_range(n, start, end, powers, parts[w]); });
            start = end + 1;
        }
        for (auto& th : pool) th.join();
    }
    std::vector<FermatTriple> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

std::vector<ReportRow> exceptionality_report(unsigned long n_lo, unsigned long n_hi) {
    if (n_lo < 2 || n_lo > n_hi) throw Error(ErrorKind::DomainError, "report range must satisfy 2 <= n_lo <= n_hi");
    std::vector<ReportRow> rows;
    rows.reserve(n_hi - n_lo + 1);
    for (unsigned long n = n_lo; n <= n_hi; ++n) {
        ChebyshevClass cls = flt_exponent_class(n);
        const bool elem = cls.elementary;
        rows.push_back({n, std::move(cls), elem});
    }
    return rows;
}

namespace {

std::string witness_text(const std::optional<BigInt>& w) { return w ? w->str() : "-"; }

nlohmann::json witness_json(const std::optional<BigInt>& w) {
    return w ? nlohmann::json(w->str()) : nlohmann::json(nullptr);
}

}  // namespace

std::string report_to_tsv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "n\tcase1\tcase2\tcase3\telementary\n";
    for (const auto& r : rows) {
        os << r.n << '\t' << witness_text(r.cls.case1) << '\t' << witness_text(r.cls.case2) << '\t'
           << witness_text(r.cls.case3) << '\t' << (r.elementary ? "true" : "false") << '\n';
    }
    return os.str();
}

nlohmann::json class_to_json(const ChebyshevClass& cls) {
    return {{"case1", witness_json(cls.case1)},
            {"case2", witness_json(cls.case2)},
            {"case3", witness_json(cls.case3)},
            {"elementary", cls.elementary}};
}

nlohmann::json report_to_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"class", class_to_json(r.cls)}, {"elementary", r.elementary}});
    return arr;
}

nlohmann::json triple_to_json(const FermatTriple& t) {
    return {{"X", t.X().str()}, {"Y", t.Y().str()}, {"Z", t.Z().str()}, {"n", t.n()}};
}

}  // namespace binomint
