#include "stackpat/precursive.hpp"

#include <set>

#include <json.hpp>

namespace stackpat {

PolyRecurrence PolyRecurrence::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PolyRecurrence rec;
    for (const auto& poly : j.at("coeffs")) {
        std::vector<BigInt> p;
        for (const auto& c : poly) {
            if (c.is_number_integer())
                p.emplace_back(c.get<long long>());
            else
                p.emplace_back(BigInt(c.get<std::string>()));
        }
        rec.coeffs.push_back(std::move(p));
    }
    for (const auto& s : j.at("seeds")) {
        if (s.is_number_integer())
            rec.seeds.emplace_back(s.get<long long>());
        else
            rec.seeds.emplace_back(BigInt(s.get<std::string>()));
    }
    if (rec.coeffs.empty()) throw std::invalid_argument("recurrence needs q_0");
    bool q0_zero = true;
    for (const auto& c : rec.coeffs[0])
        if (c != 0) q0_zero = false;
    if (q0_zero) throw std::invalid_argument("q_0 must not be the zero polynomial");
    if (static_cast<int>(rec.seeds.size()) != rec.order())
        throw std::invalid_argument("need exactly k seed terms for an order-k recurrence");
    return rec;
}

std::string PolyRecurrence::to_json() const {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& poly : coeffs) {
        nlohmann::json p = nlohmann::json::array();
        for (const auto& c : poly) p.push_back(c.str());
        j["coeffs"].push_back(p);
    }
    j["seeds"] = nlohmann::json::array();
    for (const auto& s : seeds) j["seeds"].push_back(s.str());
    return j.dump();
}

BigInt eval_poly(const std::vector<BigInt>& coeffs, long long x) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<BigInt> eval(const PolyRecurrence& rec, long long upto) {
    int k = rec.order();
    if (upto < k) throw std::invalid_argument("eval: upto must cover the seed terms");
    std::vector<BigInt> a(rec.seeds);
    a.reserve(upto);
    for (long long n = k + 1; n <= upto; ++n) {
        BigInt rhs = 0;
        for (int i = 1; i <= k; ++i) rhs -= eval_poly(rec.coeffs[i], n) * a[n - i - 1];
        BigInt lead = eval_poly(rec.coeffs[0], n);
        if (lead == 0) throw SingularStep(n);
        BigInt q = rhs / lead;
        if (q * lead != rhs) throw NonIntegralStep(n);
        a.push_back(std::move(q));
    }
    return a;
}

std::string mod2_word(const PolyRecurrence& rec, long long upto) {
    std::vector<BigInt> a = eval(rec, upto);
    std::string w;
    w.reserve(a.size());
    for (const auto& v : a) w.push_back(v % 2 == 0 ? '0' : '1');
    return w;
}

std::optional<std::string> missing_subword(const std::string& word, int maxlen) {
    for (int len = 1; len <= maxlen; ++len) {
        std::set<std::string> present;
        if (static_cast<int>(word.size()) >= len)
            for (size_t i = 0; i + len <= word.size(); ++i) present.insert(word.substr(i, len));
        // Lexicographic scan of all binary words of this length.
        std::string cand(len, '0');
        while (true) {
            if (!present.count(cand)) return cand;
            int pos = len - 1;
            while (pos >= 0 && cand[pos] == '1') cand[pos--] = '0';
            if (pos < 0) break;
            cand[pos] = '1';
        }
    }
    return std::nullopt;
}

}  // namespace stackpat
