// Command-line front end. run() is kept separate from main() so the tests can
// drive it with captured streams.

#ifndef MSSKIT_TOOLS_CLI_HPP
#define MSSKIT_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msskit/msskit.hpp"
#include "selftest.hpp"

namespace msskit::tools {

using JsonValue = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

namespace detail {

inline std::string render(const Sequence& s, bool expand) { return expand ? s.str() : s.compact(); }

inline std::string block_form_string(const Sequence& s) {
    if (s.size() < 2 || !s.starts_with_r() || !check_lemma1(s)) return "";
    const BlockForm bf = block_decompose(s);
    std::string out;
    for (const auto& run : bf.runs) {
        if (!out.empty()) out += ',';
        out += std::to_string(run.count) + ':' + to_string(run.tail);
    }
    return out;
}

inline std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\r\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline JsonValue big(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

inline JsonValue tree_json(const FactorTree& t, bool expand) {
    JsonValue j;
    j["node"] = render(t.node, expand);
    j["children"] = JsonValue::array();
    for (const auto& c : t.children) j["children"].push_back(tree_json(c, expand));
    return j;
}

inline void print_tree(std::ostream& out, const FactorTree& t, bool expand, std::size_t depth) {
    out << std::string(depth * 2, ' ') << render(t.node, expand) << (t.is_leaf() ? " (primary)" : "") << '\n';
    for (const auto& c : t.children) print_tree(out, c, expand, depth + 1);
}

inline std::string fixed(long double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << static_cast<double>(v);
    return os.str();
}

}  // namespace detail

/// Executes one command line (args excludes the program name). Returns the
/// exit status: 0 success, 1 domain error or failed verification, 2 usage.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kneading-sequence combinatorics for unimodal maps", "msskit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all verbs");
    app.fallthrough();

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    const std::map<std::string, Format> text_json{{"text", Format::Text}, {"json", Format::Json}};
    bool expand = true;
    app.add_flag("--expand,!--no-expand", expand, "Print sequences letter by letter (false: run-length form)");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List the MSS-sequences of one period");
    std::size_t period = 0;
    std::string method = "structured";
    Format enum_format = Format::Text;
    cmd_enum->add_option("--period,-p", period, "Period p >= 2")->required()->check(CLI::Range(2, 30));
    cmd_enum->add_option("--method", method, "structured or bruteforce")
        ->check(CLI::IsMember({"structured", "bruteforce"}));
    cmd_enum->add_option("--format", enum_format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    // check
    auto* cmd_check = app.add_subcommand("check", "Structured MSS test with the failing shift");
    std::string seq_text;
    Format single_format = Format::Json;
    cmd_check->add_option("sequence", seq_text, "Sequence, e.g. RL^2RC")->required();
    cmd_check->add_option("--format", single_format, "json or text")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // compose
    auto* cmd_compose = app.add_subcommand("compose", "O_h * O_s");
    std::string oh_text, os_text;
    cmd_compose->add_option("oh", oh_text, "Left factor")->required();
    cmd_compose->add_option("os", os_text, "Right factor")->required();
    cmd_compose->add_option("--format", single_format, "json or text")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // factor
    auto* cmd_factor = app.add_subcommand("factor", "Factor an MSS-sequence under the *-law");
    bool tree = false;
    cmd_factor->add_option("sequence", seq_text, "MSS-sequence")->required();
    cmd_factor->add_flag("--tree", tree, "Factor recursively down to primary leaves");
    cmd_factor->add_option("--format", single_format, "json or text")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // count
    auto* cmd_count = app.add_subcommand("count", "Closed-form counts, optionally checked by enumeration");
    std::string kind = "repeated";
    std::size_t count_period = 0, m = 0, qcap = 0;
    bool verify = false;
    Format count_format = Format::Json;
    auto* opt_period = cmd_count->add_option("--period,-p", count_period, "Period p")->check(CLI::Range(2, 24));
    cmd_count->add_option("--kind", kind, "single, repeated or sblocks")
        ->check(CLI::IsMember({"single", "repeated", "sblocks"}));
    auto* opt_m = cmd_count->add_option("--m", m, "Block length (sblocks)")->check(CLI::Range(0, 200));
    auto* opt_q = cmd_count->add_option("--qcap", qcap, "Max consecutive Ls (sblocks)")->check(CLI::Range(0, 200));
    cmd_count->add_flag("--verify", verify, "Attach the enumerated value");
    cmd_count->add_option("--format", count_format, "json or text")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // locate
    auto* cmd_locate = app.add_subcommand("locate", "Superstable logistic parameter of an MSS-sequence");
    double tol = static_cast<double>(kTolerance);
    cmd_locate->add_option("sequence", seq_text, "MSS-sequence")->required();
    cmd_locate->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    cmd_locate->add_option("--format", single_format, "json or text")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // verify-order
    auto* cmd_order = app.add_subcommand("verify-order", "Check that r* follows the parity-lex order");
    std::size_t pmax = 8;
    Format order_format = Format::Text;
    cmd_order->add_option("--pmax", pmax, "Largest period (2..12)")->check(CLI::Range(2, 12));
    cmd_order->add_option("--format", order_format, "text or json")
        ->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    // selftest
    auto* cmd_self = app.add_subcommand("selftest", "Run the built-in cross-checks");
    std::size_t self_pmax = 14;
    std::vector<std::string> suites;
    cmd_self->add_option("--pmax", self_pmax, "Largest period (2..20)")->check(CLI::Range(2, 20));
    cmd_self->add_option("--suite", suites, "Restrict to these suites")->check(CLI::IsMember(suite_names()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    const std::size_t threads = msskit::detail::default_threads();
    try {
        if (*cmd_enum) {
            const auto e = method == "structured" ? enumerate_mss_structured(period, threads)
                                                  : enumerate_mss_bruteforce(period);
            if (enum_format == Format::Text) {
                for (const auto& s : e.sequences) out << detail::render(s, expand) << '\n';
            } else if (enum_format == Format::Csv) {
                out << "index,sequence,q,block_form,is_primary\r\n";
                for (std::size_t i = 0; i < e.sequences.size(); ++i) {
                    const auto& s = e.sequences[i];
                    out << i << ',' << detail::csv_field(detail::render(s, expand)) << ',' << leading_l_run(s)
                        << ',' << detail::csv_field(detail::block_form_string(s)) << ','
                        << (is_primary(s) ? "true" : "false") << "\r\n";
                }
            } else {
                JsonValue j;
                j["period"] = period;
                j["method"] = method;
                j["count"] = e.sequences.size();
                j["sequences"] = JsonValue::array();
                for (std::size_t i = 0; i < e.sequences.size(); ++i) {
                    const auto& s = e.sequences[i];
                    j["sequences"].push_back({{"index", i},
                                              {"sequence", detail::render(s, expand)},
                                              {"q", leading_l_run(s)},
                                              {"block_form", detail::block_form_string(s)},
                                              {"is_primary", is_primary(s)}});
                }
                out << j.dump() << '\n';
            }
            return 0;
        }

        if (*cmd_check) {
            const Sequence s = Sequence::parse(seq_text);
            JsonValue j;
            j["sequence"] = detail::render(s, expand);
            if (s.size() < 2 || !s.starts_with_r()) {
                j["is_mss"] = false;
                j["failing_shift"] = nullptr;
                j["failing_rule"] = nullptr;
                j["reason"] = "an MSS-sequence has period >= 2 and starts with R";
            } else {
                const auto v = is_mss_structured(s);
                j["is_mss"] = v.is_mss;
                j["failing_shift"] = v.failing_shift ? JsonValue(*v.failing_shift) : JsonValue(nullptr);
                j["failing_rule"] = v.failing_rule ? JsonValue(to_string(*v.failing_rule)) : JsonValue(nullptr);
                j["q"] = leading_l_run(s);
                j["block_form"] = detail::block_form_string(s);
            }
            if (single_format == Format::Json) {
                out << j.dump() << '\n';
            } else {
                out << j["sequence"].get<std::string>() << ": " << (j["is_mss"].get<bool>() ? "MSS" : "not MSS");
                if (!j["failing_shift"].is_null())
                    out << " (shift " << j["failing_shift"].get<std::size_t>() << ", "
                        << j["failing_rule"].get<std::string>() << ")";
                out << '\n';
            }
            return 0;
        }

        if (*cmd_compose) {
            const Sequence a = Sequence::parse(oh_text), b = Sequence::parse(os_text);
            const Sequence c = compose(a, b);
            if (single_format == Format::Json) {
                JsonValue j;
                j["sequence"] = detail::render(c, expand);
                j["factors"] = {detail::render(a, expand), detail::render(b, expand)};
                j["period"] = c.size();
                j["is_mss"] = is_mss(c);
                out << j.dump() << '\n';
            } else {
                out << detail::render(c, expand) << '\n';
            }
            return 0;
        }

        if (*cmd_factor) {
            const Sequence s = Sequence::parse(seq_text);
            if (tree) {
                const FactorTree t = factor_tree(s);
                if (single_format == Format::Json) {
                    JsonValue j;
                    j["sequence"] = detail::render(s, expand);
                    j["primary"] = t.is_leaf();
                    j["tree"] = detail::tree_json(t, expand);
                    out << j.dump() << '\n';
                } else {
                    detail::print_tree(out, t, expand, 0);
                }
                return 0;
            }
            const auto f = factor_once(s);
            if (single_format == Format::Json) {
                JsonValue j;
                j["sequence"] = detail::render(s, expand);
                j["primary"] = !f.has_value();
                j["factors"] = f ? JsonValue{detail::render(f->oh, expand), detail::render(f->os, expand)} : JsonValue(nullptr);
                out << j.dump() << '\n';
            } else if (f) {
                out << detail::render(f->oh, expand) << " * " << detail::render(f->os, expand) << '\n';
            } else {
                out << detail::render(s, expand) << " is primary\n";
            }
            return 0;
        }

        if (*cmd_count) {
            CountReport rep;
            JsonValue j;
            j["kind"] = kind;
            if (kind == "sblocks") {
                if (!*opt_m || !*opt_q) {
                    err << "error: usage: --kind sblocks needs --m and --qcap\n";
                    return 2;
                }
                rep = sblock_report(m, qcap, verify);
                j["m"] = m;
                j["qcap"] = qcap;
            } else {
                if (!*opt_period) {
                    err << "error: usage: --kind " << kind << " needs --period\n";
                    return 2;
                }
                if (kind == "repeated" && count_period < 4) {
                    err << "error: usage: --kind repeated needs --period >= 4\n";
                    return 2;
                }
                rep = kind == "single" ? single_block_report(count_period, verify)
                                       : repeated_report(count_period, verify);
                j["period"] = count_period;
            }
            j["formula"] = detail::big(rep.formula_value);
            if (rep.enumerated_value) {
                j["enumerated"] = detail::big(*rep.enumerated_value);
                j["match"] = rep.ok();
            }
            if (count_format == Format::Json) {
                out << j.dump() << '\n';
            } else {
                out << rep.formula_value.str();
                if (rep.enumerated_value)
                    out << " (enumerated " << rep.enumerated_value->str() << (rep.ok() ? ", match" : ", MISMATCH")
                        << ')';
                out << '\n';
            }
            return 0;
        }

        if (*cmd_locate) {
            const Sequence s = Sequence::parse(seq_text);
            const LocatedSequence l = locate(s, static_cast<Real>(tol));
            if (single_format == Format::Json) {
                JsonValue j;
                j["sequence"] = detail::render(s, expand);
                j["r_star"] = static_cast<double>(l.r_star);
                j["residual"] = static_cast<double>(l.residual);
                j["iterations"] = l.iterations;
                j["dead_band_hits"] = l.dead_band_hits;
                out << j.dump() << '\n';
            } else {
                out << detail::render(s, expand) << " r* = " << detail::fixed(l.r_star, 17) << " residual "
                    << detail::fixed(l.residual, 3) << '\n';
            }
            return 0;
        }

        if (*cmd_order) {
            const OrderReport rep = verify_order(pmax);
            if (order_format == Format::Json) {
                JsonValue j;
                j["pmax"] = pmax;
                j["ok"] = rep.ok;
                j["count"] = rep.located.size();
                j["min_gap"] = static_cast<double>(rep.min_gap);
                j["max_residual"] = static_cast<double>(rep.max_residual);
                j["located"] = JsonValue::array();
                for (const auto& l : rep.located)
                    j["located"].push_back({{"sequence", detail::render(l.sequence, expand)},
                                            {"r_star", static_cast<double>(l.r_star)},
                                            {"residual", static_cast<double>(l.residual)}});
                out << j.dump() << '\n';
            } else {
                for (const auto& l : rep.located)
                    out << std::left << std::setw(16) << detail::render(l.sequence, expand) << ' '
                        << detail::fixed(l.r_star, 17) << '\n';
                out << (rep.ok ? "PASS" : "FAIL") << " order of " << rep.located.size()
                    << " parameters, min gap " << detail::fixed(rep.min_gap, 3) << ", max residual "
                    << detail::fixed(rep.max_residual, 3);
                if (!rep.ok) out << ": " << rep.violation;
                out << '\n';
            }
            return rep.ok ? 0 : 1;
        }

        if (*cmd_self) {
            bool ok = true;
            for (const auto& r : run_selftest(self_pmax, suites, threads)) {
                out << (r.ok ? "PASS " : "FAIL ") << std::left << std::setw(13) << r.name << ' ' << std::right
                    << std::setw(7) << r.checks << "  " << r.detail << '\n';
                ok = ok && r.ok;
            }
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid_argument: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace msskit::tools

#endif  // MSSKIT_TOOLS_CLI_HPP
