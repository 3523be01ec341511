#include "enrq/polyset.hpp"

#include <json.hpp>

namespace enrq {

namespace {

MultiPoly<Rat> random_form(Rng& rng, const BlockDeg& d, int height) {
    MultiPoly<Rat> f(FRAME_STXY);
    for (const Exp& e : monomials_of(d)) {
        long c = rng.range(-height, height);
        if (c != 0) f.add_term(e, Rat(c));
    }
    return f;
}

} // namespace

PolySet random_polyset(uint64_t seed, int height) {
    PolySet ps;
    const char* tags[4] = {"p", "q", "r", "s"};
    const BlockDeg degs[4] = {PolySet::deg_p(), PolySet::deg_q(), PolySet::deg_r(), PolySet::deg_s()};
    for (int t = 0; t < 4; ++t) {
        for (int i = 0; i < 3; ++i) {
            Rng sub = Rng(seed).fork(std::string(tags[t]) + std::to_string(i));
            MultiPoly<Rat> f = random_form(sub, degs[t], height);
            // a vanishing form would be wildly degenerate; bump the first monomial
            if (f.is_zero()) f.add_term(monomials_of(degs[t]).front(), Rat(1));
            switch (t) {
                case 0: ps.p[static_cast<size_t>(i)] = f; break;
                case 1: ps.q[static_cast<size_t>(i)] = f; break;
                case 2: ps.r[static_cast<size_t>(i)] = f; break;
                case 3: ps.s[static_cast<size_t>(i)] = f; break;
            }
        }
    }
    ps.validate();
    return ps;
}

PolySetFq reduce_polyset(const PolySet& ps, const FqCtx* ctx) {
    PolySetFq r;
    for (int i = 0; i < 3; ++i) {
        size_t ii = static_cast<size_t>(i);
        r.p[ii] = reduce_mod(ps.p[ii], ctx);
        r.q[ii] = reduce_mod(ps.q[ii], ctx);
        r.r[ii] = reduce_mod(ps.r[ii], ctx);
        r.s[ii] = reduce_mod(ps.s[ii], ctx);
    }
    return r;
}

namespace {

nlohmann::ordered_json poly_to_json(const MultiPoly<Rat>& f) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = std::vector<int>(e.begin(), e.end());
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return terms;
}

MultiPoly<Rat> poly_from_json(const nlohmann::json& j) {
    MultiPoly<Rat> f(FRAME_STXY);
    for (const auto& t : j) {
        Exp e{};
        const auto& ev = t.at("exp");
        if (ev.size() != static_cast<size_t>(NVARS))
            throw std::domain_error("polyset json: exponent vector must have 10 entries");
        for (int i = 0; i < NVARS; ++i) e[static_cast<size_t>(i)] = ev[static_cast<size_t>(i)].get<uint8_t>();
        f.add_term(e, Rat(t.at("coeff").get<std::string>()));
    }
    return f;
}

} // namespace

std::string polyset_to_json_text(const PolySet& ps) {
    nlohmann::ordered_json j;
    const char* tags[4] = {"p", "q", "r", "s"};
    for (int t = 0; t < 4; ++t) {
        for (int i = 0; i < 3; ++i) {
            const auto& arr = (t == 0 ? ps.p : t == 1 ? ps.q : t == 2 ? ps.r : ps.s);
            j[std::string(tags[t]) + std::to_string(i)] = poly_to_json(arr[static_cast<size_t>(i)]);
        }
    }
    return j.dump(2);
}

PolySet polyset_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PolySet ps;
    const char* tags[4] = {"p", "q", "r", "s"};
    for (int t = 0; t < 4; ++t) {
        for (int i = 0; i < 3; ++i) {
            auto& arr = (t == 0 ? ps.p : t == 1 ? ps.q : t == 2 ? ps.r : ps.s);
            arr[static_cast<size_t>(i)] =
                poly_from_json(j.at(std::string(tags[t]) + std::to_string(i)));
        }
    }
    ps.validate();
    return ps;
}

} // namespace enrq
