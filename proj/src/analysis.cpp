#include "crorder/analysis.hpp"

#include "crorder/errors.hpp"
#include "crorder/extension.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace crorder {

using nlohmann::ordered_json;

bool AnalysisReport::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool AnalysisReport::check(const std::string& name) const {
    for (const auto& [n, ok] : checks)
        if (n == name) return ok;
    throw std::out_of_range("no check named " + name);
}

namespace {

bool chains_are_subalgebras(const RootSystem& rs, const std::vector<RootSet>& chain) {
    for (const auto& s : chain) {
        for (auto a : s.ids())
            for (auto b : s.ids()) {
                auto sum = rs.add_roots(a, b);
                if (sum && !s.contains(*sum)) return false;
            }
    }
    return true;
}

AnalysisReport analyze_lee(const InstanceSpec& spec) {
    AnalysisReport r;
    r.spec = spec;
    const int k = *spec.lee_k;
    const LeeExtension ext = build_lee_extension(k);
    const auto levi = generic_levi_chain(ext.algebra);
    const auto contact = generic_contact_chain(ext.algebra);
    const auto dims = extension_cr_dim_codim(ext);
    r.cr_dim = dims.cr_dim;
    r.cr_codim = dims.cr_codim;
    r.fundamental = generic_fundamental(ext.algebra);
    r.levi_order = levi.order;
    r.contact_order = contact.order;
    r.weakly_nondegenerate = levi.order.is_finite() && levi.order.value() >= 1;
    r.levi_chain_dims = levi.dims();
    r.contact_chain_dims = contact.dims();

    r.checks.emplace_back("module_axioms", ext.module.satisfies_axioms());
    if (k <= 12) r.checks.emplace_back("jacobi", ext.algebra.jacobi());
    r.checks.emplace_back("q_subalgebra", ext.algebra.is_subalgebra(ext.algebra.q()));
    if (k % 2 == 0 && k > 0) {
        const int q = k / 2;
        r.checks.emplace_back("cr_dims_formula", dims.cr_dim == q + 1 && dims.cr_codim == 1);
    }
    r.checks.emplace_back("levi_bounds_contact", !levi.order.is_finite() || contact.order <= levi.order);
    return r;
}

AnalysisReport analyze_pcr(const InstanceSpec& spec) {
    AnalysisReport r;
    r.spec = spec;
    const ParabolicCRAlgebra p = build_instance(spec);
    const RootSystem& rs = p.system();
    r.system = p.sigma().system_ptr();

    std::tie(r.cr_dim, r.cr_codim) = cr_dim_codim(p);
    r.fundamental = fundamental_by_closure(p);
    r.fundamental_criterion = fundamental_by_criterion(p);
    r.adapted_basis = adapted_basis(p);
    r.weakly_nondegenerate = weakly_nondegenerate_criterion(p);

    const ChainReport levi = levi_chain(p);
    const ContactChains contact = contact_chains_unchecked(p);
    r.levi_order = levi.order;
    r.contact_order = contact.bracket.order;
    r.brace_contact_order = contact.brace.order;
    r.levi_chain = levi.chain;
    r.contact_chain = contact.bracket.chain;

    const auto mt = minimal_type_criteria(p);
    r.minimal_type = mt.inclusion;

    bool bound_ok = true;
    Order max_order(0);
    bool any_infinite = false;
    for (auto beta : p.Q_minus_Qbar().ids()) {
        const PerRootOrder pr = per_root_levi_order(p, beta);
        r.per_root.push_back({beta, pr.order, pr.witness});
        if (pr.order.is_finite()) {
            if (pr.order.value() > 1 - p.xi(beta)) bound_ok = false;
            max_order = std::max(max_order, pr.order);
        } else {
            any_infinite = true;
        }
    }

    bool chain_matches = true;
    for (std::size_t k = 0; k < levi.chain.size(); ++k) {
        RootSet expected = p.Q_and_Qbar();
        for (const auto& e : r.per_root) {
            if (!e.order.is_finite() || e.order.value() > static_cast<int>(k)) expected.insert(e.root);
        }
        chain_matches = chain_matches && expected == levi.chain[k];
    }
    const Order aggregated = any_infinite ? Order::infinite() : max_order;
    chain_matches = chain_matches && aggregated == levi.order;

    const RootSet closure_check = p.Q() | p.sigma().conjugate(levi.limit);

    r.checks.emplace_back("q_parabolic", is_parabolic_set(rs, p.Q()));
    r.checks.emplace_back("qbar_parabolic", is_parabolic_set(rs, p.Qbar()));
    r.checks.emplace_back("levi_chain_subalgebras", chains_are_subalgebras(rs, levi.chain));
    r.checks.emplace_back("chain_matches_per_root", chain_matches);
    r.checks.emplace_back("per_root_bound", bound_ok);
    r.checks.emplace_back("criterion_matches_chain", r.weakly_nondegenerate == levi.order.is_finite());
    r.checks.emplace_back("fundamental_criteria_agree",
                          !*r.adapted_basis || *r.fundamental_criterion == r.fundamental);
    r.checks.emplace_back("contact_chains_agree", contact.bracket.order == contact.brace.order);
    r.checks.emplace_back("minimal_type_criteria_agree", mt.agree());
    r.checks.emplace_back("q_infinity_closure", additive_closure(rs, closure_check) == closure_check);
    r.checks.emplace_back("levi_bounds_contact",
                          !levi.order.is_finite() || (contact.bracket.order <= levi.order));
    return r;
}

ordered_json order_json(const Order& o) {
    if (o.is_finite()) return o.value();
    return "infinite";
}

ordered_json root_json(const RootSystem& rs, RootId id) {
    const Root& root = rs.root(id);
    return {{"component", root.component}, {"coeffs", root.simple_coeffs}};
}

ordered_json set_json(const RootSystem& rs, const RootSet& s) {
    ordered_json out = ordered_json::array();
    for (auto id : s.ids()) out.push_back(root_json(rs, id));
    return out;
}

std::string order_text(const Order& o) { return o.to_string(); }

std::string set_text(const RootSystem& rs, const RootSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto id : s.ids()) {
        if (!first) out += ", ";
        out += rs.format(id);
        first = false;
    }
    return out + "}";
}

}  // namespace

AnalysisReport analyze_unchecked(const InstanceSpec& spec) {
    return spec.lee_k ? analyze_lee(spec) : analyze_pcr(spec);
}

AnalysisReport analyze(const InstanceSpec& spec) {
    AnalysisReport r = analyze_unchecked(spec);
    for (const auto& [name, ok] : r.checks) {
        if (!ok) throw InternalInconsistency("cross-check failed: " + name);
    }
    return r;
}

ordered_json to_json(const AnalysisReport& r) {
    ordered_json out;
    out["instance"] = to_json(r.spec);
    out["cr_dim"] = r.cr_dim;
    out["cr_codim"] = r.cr_codim;
    out["fundamental"] = r.fundamental;
    if (r.fundamental_criterion) out["fundamental_criterion"] = *r.fundamental_criterion;
    if (r.adapted_basis) out["adapted_basis"] = *r.adapted_basis;
    out["weakly_nondegenerate"] = r.weakly_nondegenerate;
    out["levi_order"] = order_json(r.levi_order);
    out["contact_order"] = order_json(r.contact_order);
    if (r.brace_contact_order) out["brace_contact_order"] = order_json(*r.brace_contact_order);
    out["minimal_type"] = r.minimal_type ? ordered_json(*r.minimal_type) : ordered_json(nullptr);
    if (r.system) {
        const RootSystem& rs = *r.system;
        out["levi_chain"] = ordered_json::array();
        for (const auto& s : r.levi_chain) out["levi_chain"].push_back(set_json(rs, s));
        out["contact_chain"] = ordered_json::array();
        for (const auto& s : r.contact_chain) out["contact_chain"].push_back(set_json(rs, s));
        out["per_root"] = ordered_json::array();
        for (const auto& e : r.per_root) {
            ordered_json entry;
            entry["root"] = root_json(rs, e.root);
            entry["label"] = rs.format(e.root);
            entry["order"] = order_json(e.order);
            if (e.witness) {
                entry["witness"] = ordered_json::array();
                for (auto a : *e.witness) entry["witness"].push_back(root_json(rs, a));
            } else {
                entry["witness"] = nullptr;
            }
            out["per_root"].push_back(std::move(entry));
        }
    } else {
        out["levi_chain_dims"] = r.levi_chain_dims;
        out["contact_chain_dims"] = r.contact_chain_dims;
    }
    ordered_json checks = ordered_json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    out["checks"] = std::move(checks);
    return out;
}

std::string report_json(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (r.spec.fixture) os << "fixture               " << *r.spec.fixture << '\n';
    if (r.spec.lee_k) {
        os << "algebra               sl2 + V_" << *r.spec.lee_k << '\n';
    } else {
        os << "system                ";
        for (std::size_t c = 0; c < r.spec.components.size(); ++c) {
            if (c) os << " + ";
            os << to_char(r.spec.components[c].type) << r.spec.components[c].rank;
        }
        os << "\ncrossed               ";
        for (std::size_t c = 0; c < r.spec.crossed.size(); ++c) {
            if (c) os << " + ";
            os << '{';
            for (std::size_t i = 0; i < r.spec.crossed[c].size(); ++i) os << (i ? "," : "") << r.spec.crossed[c][i];
            os << '}';
        }
        os << '\n';
    }
    os << "CR dimension          " << r.cr_dim << '\n';
    os << "CR codimension        " << r.cr_codim << '\n';
    os << "fundamental           " << yes(r.fundamental) << '\n';
    os << "weakly nondegenerate  " << yes(r.weakly_nondegenerate) << '\n';
    os << "Levi order            " << order_text(r.levi_order) << '\n';
    os << "contact order         " << order_text(r.contact_order) << '\n';
    if (r.minimal_type) os << "minimal type          " << yes(*r.minimal_type) << '\n';
    if (r.system) {
        const RootSystem& rs = *r.system;
        os << "\nLevi chain\n";
        for (std::size_t k = 0; k < r.levi_chain.size(); ++k) {
            os << "  Q^(" << k << ")  " << set_text(rs, r.levi_chain[k]) << '\n';
        }
        os << "\nper-root orders\n";
        for (const auto& e : r.per_root) {
            os << "  " << rs.format(e.root) << "  order " << order_text(e.order);
            if (e.witness) {
                os << "  via";
                for (auto a : *e.witness) os << ' ' << rs.format(a);
            }
            os << '\n';
        }
    } else {
        os << "Levi chain dims       ";
        for (auto d : r.levi_chain_dims) os << d << ' ';
        os << "\ncontact chain dims    ";
        for (auto d : r.contact_chain_dims) os << d << ' ';
        os << '\n';
    }
    os << "\nchecks\n";
    for (const auto& [name, ok] : r.checks) os << "  " << (ok ? "ok    " : "FAILED") << ' ' << name << '\n';
    return os.str();
}

unsigned worker_count() {
    if (const char* env = std::getenv("CRORDER_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return static_cast<unsigned>(std::min(n, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TheoremTally> tally_theorems(const std::vector<EnumerationItem>& items) {
    std::vector<TheoremTally> t = {
        {"fundamental_and_wnd_implies_order_le_3"},
        {"minimal_type_implies_order_le_2"},
        {"finite_levi_bounds_contact"},
        {"chain_matches_per_root"},
        {"criterion_matches_chain"},
        {"fundamental_criterion_all_bases"},
        {"fundamental_criterion_adapted_bases"},
        {"contact_chains_agree"},
        {"per_root_bound"},
        {"minimal_type_criteria_agree"},
    };
    auto count = [&](std::size_t i, bool applies, bool holds) {
        if (!applies) return;
        ++t[i].checked;
        if (!holds) ++t[i].violations;
    };
    for (const auto& item : items) {
        const auto& r = item.report;
        const bool finite = r.levi_order.is_finite();
        count(0, r.fundamental && r.weakly_nondegenerate, finite && r.levi_order <= Order(3));
        count(1, r.minimal_type.value_or(false), !finite || r.levi_order <= Order(2));
        count(2, finite, r.contact_order <= r.levi_order);
        count(3, true, r.check("chain_matches_per_root"));
        count(4, true, r.check("criterion_matches_chain"));
        count(5, true, r.fundamental_criterion == r.fundamental);
        count(6, r.adapted_basis.value_or(false), r.fundamental_criterion == r.fundamental);
        count(7, true, r.check("contact_chains_agree"));
        count(8, true, r.check("per_root_bound"));
        count(9, true, r.check("minimal_type_criteria_agree"));
    }
    return t;
}

const TheoremTally& EnumerationResult::tally(const std::string& name) const {
    for (const auto& t : tallies)
        if (t.name == name) return t;
    throw std::out_of_range("no tally named " + name);
}

EnumerationResult enumerate_instances(CartanType type, int rank, std::optional<std::size_t> bound) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(type, rank));
    auto sigmas = enumerate_signed_involutions(rs);
    if (bound && *bound < sigmas.size()) sigmas.erase(sigmas.begin() + static_cast<std::ptrdiff_t>(*bound), sigmas.end());

    EnumerationResult result{type, rank, sigmas.size(), {}, {}};
    const unsigned masks = 1u << rank;
    const std::size_t total = sigmas.size() * masks;

    std::vector<InstanceSpec> specs(total);
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        SigmaSpec sigma;
        sigma.entries = signed_entries(*rs, sigmas[s].matrix());
        for (unsigned m = 0; m < masks; ++m) {
            InstanceSpec& spec = specs[s * masks + m];
            spec.components = {{type, rank}};
            spec.crossed = {{}};
            for (int i = 0; i < rank; ++i)
                if (m >> i & 1) spec.crossed[0].push_back(i + 1);
            spec.sigma = sigma;
        }
    }

    std::vector<std::optional<AnalysisReport>> reports(total);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) reports[i] = analyze_unchecked(specs[i]);
    };
    const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(total, 1));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    result.items.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        result.items.push_back({i / masks, static_cast<unsigned>(i % masks), std::move(*reports[i])});
    }
    result.tallies = tally_theorems(result.items);
    return result;
}

ordered_json to_json(const EnumerationResult& result) {
    ordered_json out;
    out["type"] = std::string(1, to_char(result.type));
    out["rank"] = result.rank;
    out["sigma_count"] = result.sigma_count;
    out["instances"] = ordered_json::array();
    for (const auto& item : result.items) {
        const auto& r = item.report;
        ordered_json row;
        row["sigma_index"] = item.sigma_index;
        row["crossed"] = r.spec.crossed[0];
        row["sigma"] = to_json(r.spec)["sigma"];
        row["cr_dim"] = r.cr_dim;
        row["cr_codim"] = r.cr_codim;
        row["fundamental"] = r.fundamental;
        row["weakly_nondegenerate"] = r.weakly_nondegenerate;
        row["levi_order"] = order_json(r.levi_order);
        row["contact_order"] = order_json(r.contact_order);
        row["minimal_type"] = r.minimal_type.value_or(false);
        row["checks_pass"] = r.checks_pass();
        out["instances"].push_back(std::move(row));
    }
    out["summary"] = ordered_json::array();
    for (const auto& t : result.tallies) {
        out["summary"].push_back({{"property", t.name}, {"checked", t.checked}, {"violations", t.violations}});
    }
    return out;
}

std::string enumeration_text(const EnumerationResult& result) {
    std::ostringstream os;
    os << to_char(result.type) << result.rank << ": " << result.sigma_count << " involutions, " << result.items.size()
       << " instances\n";
    for (const auto& item : result.items) {
        const auto& r = item.report;
        os << "  sigma#" << item.sigma_index << " Phi={";
        for (std::size_t i = 0; i < r.spec.crossed[0].size(); ++i) os << (i ? "," : "") << r.spec.crossed[0][i];
        os << "}  levi " << order_text(r.levi_order) << "  contact " << order_text(r.contact_order)
           << (r.fundamental ? "  fundamental" : "") << (r.minimal_type.value_or(false) ? "  minimal" : "")
           << (r.checks_pass() ? "" : "  [cross-check failed]") << '\n';
    }
    os << "summary\n";
    for (const auto& t : result.tallies) {
        os << "  " << t.name << ": " << t.checked << " checked, " << t.violations << " violations\n";
    }
    return os.str();
}

}  // namespace crorder
