// Command-line front end: analyze words, test membership, enumerate and
// count shortest/minimal absent subsequences, answer factor range and
// extension queries, and cross-check everything against the brute-force
// oracle. Exit codes: 0 success, 1 negative answer or failed verification,
// 2 usage or decode errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <absq/absq.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json; // keep the documented key order
using namespace absq;

struct input_options {
    std::string text;      // positional word ("-" or empty means stdin)
    std::string file;      // read the word from a file instead
    bool ints = false;     // whitespace-separated integers instead of characters
    std::string alphabet;  // optional declared alphabet (same mode as the word)
    bool as_json = false;
};

void add_input_flags(CLI::App* cmd, input_options& in) {
    cmd->add_option("word", in.text, "input word (omit or '-' to read stdin)");
    cmd->add_option("--file", in.file, "read the input word from this file");
    cmd->add_flag("--ints", in.ints, "decode symbols as whitespace-separated integers");
    cmd->add_option("--alphabet", in.alphabet,
                    "declare the full alphabet (may exceed the letters that occur)");
    cmd->add_flag("--json", in.as_json, "emit JSON instead of plain text");
}

std::string slurp(const input_options& in) {
    if (!in.file.empty()) {
        std::ifstream f(in.file, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open file: " + in.file);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    if (in.text.empty() || in.text == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return in.text;
}

std::vector<std::string> split_symbols(const std::string& raw, bool ints) {
    std::vector<std::string> symbols;
    if (ints) {
        std::istringstream ss(raw);
        std::string tok;
        while (ss >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("not a non-negative integer: " + tok);
            symbols.push_back(tok);
        }
    } else {
        std::string line = raw;
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        for (char c : line) symbols.emplace_back(1, c);
    }
    return symbols;
}

word load_word(const input_options& in) {
    auto symbols = split_symbols(slurp(in), in.ints);
    if (in.alphabet.empty()) return word::from_symbols(symbols);
    return word::from_symbols(symbols, split_symbols(in.alphabet, in.ints));
}

std::vector<letter_t> decode_query(const word& w, const std::string& raw, bool ints) {
    return w.encode(split_symbols(raw, ints));
}

json base_record(const word& w, const arch_factorization& f) {
    json rec;
    rec["word_length"] = w.size();
    rec["sigma"] = w.sigma();
    rec["iota"] = f.iota();
    rec["arches"] = f.ends;
    std::vector<letter_t> rest(w.letters().begin() + (f.rest_start - 1), w.letters().end());
    rec["rest"] = w.render(rest);
    return rec;
}

void emit(const json& rec, bool as_json) {
    if (as_json) {
        std::cout << rec.dump() << '\n';
        return;
    }
    for (const auto& [key, val] : rec.items()) {
        if (val.is_object()) {
            for (const auto& [k2, v2] : val.items())
                std::cout << k2 << ": " << (v2.is_string() ? v2.get<std::string>() : v2.dump())
                          << '\n';
        } else if (val.is_string()) {
            std::cout << key << ": " << val.get<std::string>() << '\n';
        } else {
            std::cout << key << ": " << val.dump() << '\n';
        }
    }
}

int cmd_analyze(const input_options& in) {
    const word w = load_word(in);
    const auto f = factorize(w);
    const auto min_arch = build_min_arch(w);
    const auto tree = build_arch_tree(w, min_arch);
    const auto pa = build_pos_arch(w, f);
    const sas_index sidx(w, f, tree, pa);

    json rec = base_record(w, f);
    json result;
    result["modus"] = w.render(f.modus);
    result["one_sas"] = w.render(get_one_sas(f));
    result["lex_min_sas"] = w.render(sidx.lex_min());
    result["lex_min_mas"] = w.render(lex_min_mas(w));
    rec["result"] = result;
    emit(rec, in.as_json);
    return 0;
}

int cmd_check(const input_options& in, const std::string& query, const std::string& mode) {
    const word w = load_word(in);
    const auto f = factorize(w);
    const auto u = decode_query(w, query, in.ints);
    bool holds = false;
    if (mode == "subseq") {
        holds = is_subsequence(w, u).contained;
    } else if (mode == "sas") {
        const auto tree = build_arch_tree(w, build_min_arch(w));
        const sas_index sidx(w, f, tree, build_pos_arch(w, f));
        holds = sidx.is_sas(u);
    } else if (mode == "mas") {
        holds = is_mas(w, f, u);
    } else {
        throw std::invalid_argument("mode must be sas, mas or subseq");
    }
    json rec = base_record(w, f);
    rec["result"] = json{{"mode", mode}, {"query", query}, {"holds", holds}};
    emit(rec, in.as_json);
    return holds ? 0 : 1;
}

int cmd_enum(const input_options& in, const std::string& kind, std::int64_t limit,
             bool count_only, pos_t cap) {
    const word w = load_word(in);
    const auto f = factorize(w);

    big_uint total;
    std::optional<sas_index> sidx;
    std::optional<mas_dag> dag;
    if (kind == "sas") {
        const auto tree = build_arch_tree(w, build_min_arch(w));
        sidx.emplace(w, f, tree, build_pos_arch(w, f));
        total = sidx->count();
    } else if (kind == "mas") {
        dag.emplace(w, cap);
        total = dag->count();
    } else {
        throw std::invalid_argument("kind must be sas or mas");
    }

    std::optional<std::uint64_t> bound;
    if (limit >= 0) bound = static_cast<std::uint64_t>(limit);
    if (!count_only && !bound && f.iota() >= 20)
        std::cerr << "warning: enumerating " << total.str()
                  << " words; consider --limit\n";

    if (in.as_json) {
        json rec = base_record(w, f);
        rec["count"] = total.str();
        json items = json::array();
        if (!count_only) {
            auto sink = [&](std::span<const letter_t> v) { items.push_back(w.render(v)); };
            if (sidx)
                sidx->enumerate(sink, bound);
            else
                dag->enumerate(sink, bound);
        }
        rec["items"] = items;
        emit(rec, true);
        return 0;
    }

    if (count_only) {
        std::cout << total.str() << '\n';
        return 0;
    }
    auto sink = [&](std::span<const letter_t> v) { std::cout << w.render(v) << std::endl; };
    if (sidx)
        sidx->enumerate(sink, bound);
    else
        dag->enumerate(sink, bound);
    return 0;
}

int cmd_range(const input_options& in, pos_t i, pos_t j) {
    const word w = load_word(in);
    const auto f = factorize(w);
    const auto tree = build_arch_tree(w, build_min_arch(w));
    const auto answer = tree.sas_range(i, j);
    const auto decoded = tree.decode_sas_range(answer);
    json rec = base_record(w, f);
    rec["result"] = json{{"i", i},
                         {"j", j},
                         {"word", w.render(decoded)},
                         {"universality", tree.factor_universality(i, j)},
                         {"start_node", answer.start_node},
                         {"end_node", answer.end_node}};
    emit(rec, in.as_json);
    return 0;
}

int cmd_extend(const input_options& in, const std::string& query) {
    const word w = load_word(in);
    const auto f = factorize(w);
    const auto occ = build_occ_arrays(w);
    const mas_extend_index ext(w, f, occ);
    const auto u = decode_query(w, query, in.ints);
    const auto v = ext.extend(u);

    json rec = base_record(w, f);
    json result;
    result["query"] = query;
    result["extendable"] = v.has_value();
    if (v) {
        std::vector<letter_t> full(u.begin(), u.end());
        full.insert(full.end(), v->begin(), v->end());
        result["extension"] = w.render(*v);
        result["full"] = w.render(full);
    } else {
        result["extension"] = nullptr;
        result["full"] = nullptr;
    }
    rec["result"] = result;
    emit(rec, in.as_json);
    return v ? 0 : 1;
}

int cmd_verify(const input_options& in, const std::string& checks_csv, std::uint64_t budget,
               pos_t cap) {
    const word w = load_word(in);
    const auto f = factorize(w);

    std::vector<std::string> checks;
    {
        std::istringstream ss(checks_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) checks.push_back(tok);
    }

    auto enumerate_all = [](const auto& obj) {
        std::vector<std::vector<letter_t>> out;
        obj.enumerate([&](std::span<const letter_t> v) { out.emplace_back(v.begin(), v.end()); });
        return out;
    };

    std::optional<std::vector<std::vector<letter_t>>> sas_set, mas_set, oracle_sas, oracle_mas;
    auto need_sas = [&]() {
        if (!sas_set) {
            const auto tree = build_arch_tree(w, build_min_arch(w));
            const sas_index sidx(w, f, tree, build_pos_arch(w, f));
            sas_set = enumerate_all(sidx);
        }
    };
    auto need_mas = [&]() {
        if (!mas_set) mas_set = enumerate_all(mas_dag(w, cap));
    };

    json results = json::array();
    bool all_ok = true;
    for (const auto& check : checks) {
        bool ok = false;
        if (check == "sas") {
            need_sas();
            if (!oracle_sas) oracle_sas = oracle_sas_set(w, budget);
            ok = *sas_set == *oracle_sas;
        } else if (check == "mas") {
            need_mas();
            if (!oracle_mas) oracle_mas = oracle_mas_set(w, -1, budget);
            ok = *mas_set == *oracle_mas;
        } else if (check == "counts") {
            need_sas();
            need_mas();
            const auto tree = build_arch_tree(w, build_min_arch(w));
            const sas_index sidx(w, f, tree, build_pos_arch(w, f));
            ok = sidx.count() == big_uint(sas_set->size()) &&
                 mas_dag(w, cap).count() == big_uint(mas_set->size());
        } else if (check == "mas_eq_sas") {
            need_sas();
            need_mas();
            ok = *sas_set == *mas_set;
        } else {
            throw std::invalid_argument("unknown check: " + check);
        }
        all_ok = all_ok && ok;
        results.push_back(json{{"name", check}, {"ok", ok}});
    }

    json rec = base_record(w, f);
    rec["result"] = json{{"checks", results}};
    emit(rec, in.as_json);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"index structures and queries for absent subsequences"};
    app.require_subcommand(1);

    input_options in_analyze, in_check, in_enum, in_range, in_extend, in_verify;
    std::string check_query, check_mode = "subseq";
    std::string enum_kind = "sas";
    std::int64_t enum_limit = -1;
    bool enum_count_only = false;
    pos_t dag_cap = mas_dag::default_cap;
    pos_t range_i = 1, range_j = 1;
    std::string extend_query;
    std::string verify_checks = "sas,mas,counts";
    std::uint64_t verify_budget = 2'000'000;

    auto* analyze = app.add_subcommand("analyze", "factorization, universality and extremal answers");
    add_input_flags(analyze, in_analyze);

    auto* check = app.add_subcommand("check", "test a query word for membership");
    add_input_flags(check, in_check);
    check->add_option("-u,--query", check_query, "query word")->required();
    check->add_option("-m,--mode", check_mode, "sas, mas or subseq")->required();

    auto* en = app.add_subcommand("enum", "enumerate or count absent subsequences");
    add_input_flags(en, in_enum);
    en->add_option("-k,--kind", enum_kind, "sas or mas")->required();
    en->add_option("--limit", enum_limit, "emit at most this many words");
    en->add_flag("--count-only", enum_count_only, "print only the exact count");
    en->add_option("--cap", dag_cap, "override the MAS DAG word-length cap");

    auto* range = app.add_subcommand("range", "shortest absent subsequence of the factor w[i:j]");
    add_input_flags(range, in_range);
    range->add_option("-i", range_i, "factor start (1-based)")->required();
    range->add_option("-j", range_j, "factor end (inclusive)")->required();

    auto* extend = app.add_subcommand("extend", "minimal extension of u to a minimal absent subsequence");
    add_input_flags(extend, in_extend);
    extend->add_option("-u,--query", extend_query, "query word (may be empty)");

    auto* verify = app.add_subcommand("verify", "compare the index answers against the brute-force oracle");
    add_input_flags(verify, in_verify);
    verify->add_option("--checks", verify_checks, "comma-separated: sas, mas, counts, mas_eq_sas");
    verify->add_option("--budget", verify_budget, "oracle candidate budget");
    verify->add_option("--cap", dag_cap, "override the MAS DAG word-length cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(in_analyze);
        if (check->parsed()) return cmd_check(in_check, check_query, check_mode);
        if (en->parsed()) return cmd_enum(in_enum, enum_kind, enum_limit, enum_count_only, dag_cap);
        if (range->parsed()) return cmd_range(in_range, range_i, range_j);
        if (extend->parsed()) return cmd_extend(in_extend, extend_query);
        if (verify->parsed()) return cmd_verify(in_verify, verify_checks, verify_budget, dag_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
