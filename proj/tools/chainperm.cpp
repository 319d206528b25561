// chainperm: counting, enumeration, checking, powers, and cross-route
// verification for permutations avoiding chains of patterns.
//
// Exit codes: 0 success/verified, 1 semantic failure (pattern contained /
// verification mismatch), 2 usage or parse error. JSON output is a single
// document on stdout; diagnostics go to stderr.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainperm/chainperm.hpp"

namespace {

using nlohmann::ordered_json;
using namespace chainperm;

CountMethod parse_method(const std::string& name) {
    if (name == "brute") return CountMethod::Brute;
    if (name == "structural") return CountMethod::Structural;
    return CountMethod::Closed;
}

std::string render(const Permutation& p, bool compact) {
    return compact ? to_compact_text(p) : to_text(p);
}

// Structural enumeration covers the two recognized chains only.
std::vector<Permutation> structural_list(int n, const Chain& c) {
    if (c == chain231()) return gen_chain231(n);
    if (c == chain213()) return gen_chain213(n);
    throw UnsupportedChain("structural enumeration supports only " + to_text(chain231()) +
                           " and " + to_text(chain213()) + "; got " + to_text(c));
}

int run_count(int n, const std::string& chain_text, const std::string& method, int threads) {
    const Chain c = parse_chain(chain_text);
    const BigUint count = sequence(c, n, n, parse_method(method), threads).entries.front().count;
    ordered_json j;
    j["n"] = n;
    j["chain"] = to_text(c);
    j["method"] = method;
    j["count"] = count.to_string();
    std::cout << j.dump() << "\n";
    return 0;
}

int run_enumerate(int n, const std::string& chain_text, const std::string& method,
                  const std::string& format, bool compact, int threads) {
    const Chain c = parse_chain(chain_text);
    std::vector<Permutation> list = method == "structural"
                                        ? structural_list(n, c)
                                        : enumerate_avoiders(n, c, threads);
    if (compact && n > 9) throw DomainError("--compact requires n <= 9");
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& p : list) arr.push_back(render(p, compact));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& p : list) std::cout << render(p, compact) << "\n";
    }
    return 0;
}

int run_check(const std::string& perm_text, const std::string& chain_text, bool verbose) {
    const Permutation p = parse_permutation(perm_text);
    const Chain c = parse_chain(chain_text);
    const AvoidanceReport report = check_chain(p, c);
    std::cout << (report.verdict ? "AVOIDS" : "CONTAINS") << "\n";
    if (verbose) {
        int shown_power = 0;
        for (const auto& entry : report.entries) {
            if (entry.power_index != shown_power) {
                shown_power = entry.power_index;
                std::cout << "pi^" << shown_power << " = " << to_text(entry.power) << "\n";
            }
            std::cout << "  " << to_text(entry.pattern) << ": ";
            if (entry.witness) {
                std::cout << "occurrence at positions ";
                const auto& pos = entry.witness->positions;
                for (std::size_t i = 0; i < pos.size(); ++i)
                    std::cout << (i ? "," : "") << pos[i];
                std::cout << "\n";
            } else {
                std::cout << "avoided\n";
            }
        }
    }
    return report.verdict ? 0 : 1;
}

int run_power(const std::string& perm_text, int k, bool compact) {
    const Permutation p = parse_permutation(perm_text);
    std::cout << render(power(p, k), compact) << "\n";
    return 0;
}

int run_sequence(const std::string& chain_text, int n_min, int n_max,
                 const std::string& method, const std::string& format, int threads) {
    const Chain c = parse_chain(chain_text);
    const CountSequence cs = sequence(c, n_min, n_max, parse_method(method), threads);
    if (format == "json") {
        ordered_json j;
        j["chain"] = to_text(c);
        j["method"] = method;
        j["entries"] = ordered_json::array();
        for (const auto& e : cs.entries)
            j["entries"].push_back({{"n", e.n}, {"count", e.count.to_string()}});
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (const auto& e : cs.entries) std::cout << e.n << "," << e.count << "\n";
    } else {  // bfile: two space-separated columns, no header
        for (const auto& e : cs.entries) std::cout << e.n << " " << e.count << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteState {
    bool all_ok = true;
    bool counterexample_shown = false;

    void fail(const std::string& counterexample) {
        if (!counterexample_shown) {
            std::cout << "first counterexample: " << counterexample << "\n";
            counterexample_shown = true;
        }
        all_ok = false;
    }
};

// All S_n in lexicographic order; verify suites are brute-force by intent.
std::vector<Permutation> all_perms(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string first_list_difference(const std::vector<Permutation>& a,
                                  const std::vector<Permutation>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i])
            return "position " + std::to_string(i + 1) + ": " + to_text(a[i]) + " vs " +
                   to_text(b[i]);
    if (a.size() < b.size()) return "extra permutation " + to_text(b[a.size()]);
    return "extra permutation " + to_text(a[b.size()]);
}

bool verify_counts_suite(const std::string& name, const Chain& c, int n_min, int n_max,
                         int threads) {
    SuiteState state;
    std::cout << "suite " << name << "\n";
    std::cout << "n brute structural closed match\n";
    for (int n = n_min; n <= n_max; ++n) {
        const std::vector<Permutation> brute = enumerate_avoiders(n, c, threads);
        const std::vector<Permutation> structural = structural_list(n, c);
        const BigUint closed = (c == chain231()) ? f_closed(n) : g_closed(n);
        const bool lists_equal = brute == structural;
        const bool ok = lists_equal && BigUint(brute.size()) == closed;
        std::cout << n << " " << brute.size() << " " << structural.size() << " " << closed
                  << " " << (ok ? "yes" : "no") << "\n";
        if (!ok) {
            state.fail(lists_equal ? "count " + closed.to_string() + " vs brute " +
                                         std::to_string(brute.size())
                                   : first_list_difference(brute, structural));
        }
    }
    std::cout << (state.all_ok ? "PASS" : "FAIL") << "\n";
    return state.all_ok;
}

bool verify_trichotomy(int n_max, int threads) {
    SuiteState state;
    std::cout << "suite trichotomy\n";
    std::cout << "n p1 p2 p3 expected match\n";
    for (int n = 3; n <= n_max; ++n) {
        std::uint64_t tags[3] = {0, 0, 0};
        std::optional<Permutation> unclassified;
        for (const auto& p : enumerate_avoiders(n, chain231(), threads)) {
            try {
                tags[static_cast<int>(classify_trichotomy(p))]++;
            } catch (const NotInTrichotomy&) {
                if (!unclassified) unclassified = p;
            }
        }
        const BigUint expected_p1 = p1_count(n);
        const BigUint expected_p2 = f_closed(n - 1);
        const BigUint expected_p3 = f_closed(n - 2);
        const bool ok = !unclassified && BigUint(tags[0]) == expected_p1 &&
                        BigUint(tags[1]) == expected_p2 && BigUint(tags[2]) == expected_p3;
        std::cout << n << " " << tags[0] << " " << tags[1] << " " << tags[2] << " ("
                  << expected_p1 << "," << expected_p2 << "," << expected_p3 << ") "
                  << (ok ? "yes" : "no") << "\n";
        if (!ok)
            state.fail(unclassified ? to_text(*unclassified)
                                    : "class sizes differ at n = " + std::to_string(n));
    }
    std::cout << (state.all_ok ? "PASS" : "FAIL") << "\n";
    return state.all_ok;
}

bool verify_bona_smith(int n_max, int threads) {
    (void)threads;
    SuiteState state;
    std::cout << "suite bona-smith\n";
    std::cout << "n family brute inverses match\n";
    const Pattern p312 = parse_pattern("312");
    for (int n = 2; n <= n_max; ++n) {
        const std::vector<Permutation> family = gen_bona_smith_family(n);
        std::vector<Permutation> brute;
        for (const auto& p : all_perms(n))
            if (p(n) == 1 && strongly_avoids(p, p312)) brute.push_back(p);
        bool inverses_ok = true;
        if (n >= 3) {
            std::vector<Permutation> inv;
            inv.reserve(family.size());
            for (const auto& p : family) inv.push_back(inverse(p));
            std::sort(inv.begin(), inv.end());
            inverses_ok = inv == gen_p1(n);
        }
        const bool ok = family == brute && inverses_ok;
        std::cout << n << " " << family.size() << " " << brute.size() << " "
                  << (inverses_ok ? "onto-p1" : "broken") << " " << (ok ? "yes" : "no")
                  << "\n";
        if (!ok)
            state.fail(family == brute ? "inverse map misses gen_p1(" + std::to_string(n) + ")"
                                       : first_list_difference(family, brute));
    }
    std::cout << (state.all_ok ? "PASS" : "FAIL") << "\n";
    return state.all_ok;
}

// Unimodal words, one per subset of {1,...,n-1}: the subset ascends before
// n, the rest descends after it.
std::vector<Permutation> all_unimodal(int n) {
    std::vector<Permutation> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n - 1; ++v)
            if (mask & (1u << (v - 1))) w.push_back(v);
        w.push_back(n);
        for (int v = n - 1; v >= 1; --v)
            if (!(mask & (1u << (v - 1)))) w.push_back(v);
        out.push_back(Permutation::from_one_line(std::move(w)));
    }
    return out;
}

bool verify_peak(int n_max, int threads) {
    (void)threads;
    SuiteState state;
    std::cout << "suite peak\n";
    std::cout << "n unimodal match\n";
    for (int n = 3; n <= n_max; ++n) {
        const std::vector<Permutation> unimodal = all_unimodal(n);
        std::optional<Permutation> violator;
        for (const auto& p : unimodal)
            if (!check_peak_lemma(p) && !violator) violator = p;
        const bool ok = !violator && unimodal.size() == (1u << (n - 1));
        std::cout << n << " " << unimodal.size() << " " << (ok ? "yes" : "no") << "\n";
        if (!ok) state.fail(violator ? to_text(*violator) : "unimodal census is off");
    }
    std::cout << (state.all_ok ? "PASS" : "FAIL") << "\n";
    return state.all_ok;
}

int run_verify(const std::string& suite, int n_max, int threads) {
    const auto min_n = [](const std::string& s) {
        if (s == "conj231") return 1;
        if (s == "conj213" || s == "bona-smith") return 2;
        return 3;  // trichotomy, peak, all
    };
    if (n_max < min_n(suite)) {
        std::cerr << "verify: --max-n must be at least " << min_n(suite) << " for suite "
                  << suite << "\n";
        return 2;
    }
    bool ok = true;
    if (suite == "conj231" || suite == "all")
        ok &= verify_counts_suite("conj231", chain231(), 1, n_max, threads);
    if (suite == "conj213" || suite == "all")
        ok &= verify_counts_suite("conj213", chain213(), 2, n_max, threads);
    if (suite == "trichotomy" || suite == "all") ok &= verify_trichotomy(n_max, threads);
    if (suite == "bona-smith" || suite == "all") ok &= verify_bona_smith(n_max, threads);
    if (suite == "peak" || suite == "all") ok &= verify_peak(n_max, threads);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutations avoiding chains of patterns: enumeration, counting, verification"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "count the avoiders of a chain in S_n");
    int count_n = 0;
    std::string count_chain, count_method = "brute";
    int count_threads = 1;
    count_cmd->add_option("--n", count_n, "permutation length")->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--chain", count_chain, "chain, e.g. \"231,1432:231\"")->required();
    count_cmd->add_option("--method", count_method, "counting route")
        ->check(CLI::IsMember({"brute", "structural", "closed"}));
    count_cmd->add_option("--threads", count_threads, "worker count (brute only)")
        ->check(CLI::PositiveNumber);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list the avoiders in lexicographic order");
    int enum_n = 0;
    std::string enum_chain, enum_method = "brute", enum_format = "lines";
    bool enum_compact = false;
    int enum_threads = 1;
    enum_cmd->add_option("--n", enum_n, "permutation length")->required()
        ->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--chain", enum_chain, "chain")->required();
    enum_cmd->add_option("--method", enum_method, "enumeration route")
        ->check(CLI::IsMember({"brute", "structural"}));
    enum_cmd->add_option("--format", enum_format, "output format")
        ->check(CLI::IsMember({"lines", "json"}));
    enum_cmd->add_flag("--compact", enum_compact, "digit form instead of commas (n <= 9)");
    enum_cmd->add_option("--threads", enum_threads, "worker count")
        ->check(CLI::PositiveNumber);

    // check
    auto* check_cmd = app.add_subcommand("check", "test one permutation against a chain");
    std::string check_perm, check_chain_text;
    bool check_verbose = false;
    check_cmd->add_option("--perm", check_perm, "permutation, e.g. \"1,3,2,5,4,6,7\" or \"1325467\"")
        ->required();
    check_cmd->add_option("--chain", check_chain_text, "chain")->required();
    check_cmd->add_flag("--verbose", check_verbose, "show per-level powers and witnesses");

    // power
    auto* power_cmd = app.add_subcommand("power", "compute pi^k");
    std::string power_perm;
    int power_k = 0;
    bool power_compact = false;
    power_cmd->add_option("--perm", power_perm, "permutation")->required();
    power_cmd->add_option("--k", power_k, "exponent")->required()->check(CLI::NonNegativeNumber);
    power_cmd->add_flag("--compact", power_compact, "digit form instead of commas (n <= 9)");

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "counts over a range of n");
    std::string seq_chain, seq_method = "brute", seq_format = "csv";
    int seq_min = 0, seq_max = 0, seq_threads = 1;
    seq_cmd->add_option("--chain", seq_chain, "chain")->required();
    seq_cmd->add_option("--min-n", seq_min, "first n")->required()->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--max-n", seq_max, "last n")->required()->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--method", seq_method, "counting route")
        ->check(CLI::IsMember({"brute", "structural", "closed"}));
    seq_cmd->add_option("--format", seq_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "bfile"}));
    seq_cmd->add_option("--threads", seq_threads, "worker count (brute only)")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "cross-check the counting routes");
    std::string verify_suite;
    int verify_max = 0, verify_threads = 1;
    verify_cmd->add_option("--suite", verify_suite, "what to verify")->required()
        ->check(CLI::IsMember({"conj231", "conj213", "trichotomy", "bona-smith", "peak", "all"}));
    verify_cmd->add_option("--max-n", verify_max, "largest n")->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threads", verify_threads, "worker count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed())
            return run_count(count_n, count_chain, count_method, count_threads);
        if (enum_cmd->parsed())
            return run_enumerate(enum_n, enum_chain, enum_method, enum_format, enum_compact,
                                 enum_threads);
        if (check_cmd->parsed()) return run_check(check_perm, check_chain_text, check_verbose);
        if (power_cmd->parsed()) return run_power(power_perm, power_k, power_compact);
        if (seq_cmd->parsed())
            return run_sequence(seq_chain, seq_min, seq_max, seq_method, seq_format,
                                seq_threads);
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_max, verify_threads);
    } catch (const chainperm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
