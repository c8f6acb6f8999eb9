#include "polarwd/weight_distribution.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace polarwd {

mpz_class WeightDistribution::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

WeightDistribution& WeightDistribution::operator+=(const WeightDistribution& o) {
    if (o.block_length != block_length) throw std::invalid_argument("length mismatch");
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
}

std::vector<mpz_class> wd_convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return c;
}

WeightDistribution wd_convolve(const WeightDistribution& a, const WeightDistribution& b) {
    WeightDistribution r(a.block_length + b.block_length);
    r.counts = wd_convolve(a.counts, b.counts);
    r.counts.resize(size_t(r.block_length) + 1);
    return r;
}

void write_spectrum_csv(std::ostream& out, const WeightDistribution& wd) {
    out << "weight,count\n";
    for (size_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w] != 0) out << w << ',' << wd.counts[w].get_str() << '\n';
}

void write_spectrum_json(std::ostream& out, const WeightDistribution& wd, int n, int k, int lambda) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["lambda"] = lambda;
    auto& spec = j["spectrum"] = nlohmann::ordered_json::array();
    for (size_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w] != 0) spec.push_back({{"w", w}, {"count", wd.counts[w].get_str()}});
    out << j.dump(2) << '\n';
}

}  // namespace polarwd
