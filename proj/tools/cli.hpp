#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgb/sgb.hpp"

namespace sgb::cli {

using json = nlohmann::ordered_json;

/// Exit status: 0 success, 1 mathematical negative, 2 input error.
enum Status : int { ok = 0, negative = 1, input_error = 2 };

struct Options {
    std::string command;
    std::string input;
    std::string ring = "Z";
    bool ring_given = false;
    std::string order = "lex";
    bool order_given = false;
    std::string vars;
    std::string format = "text";
    bool no_coprime_skip = false;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset to line/column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what + ": malformed JSON", line, col);
    }
}

inline VarNames split_vars(const std::string& list) {
    VarNames out;
    std::stringstream ss(list);
    std::string v;
    while (std::getline(ss, v, ',')) {
        v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
        if (v.empty()) throw std::invalid_argument("empty variable name in --vars");
        if (std::find(out.begin(), out.end(), v) != out.end())
            throw std::invalid_argument("variable '" + v + "' declared twice");
        out.push_back(v);
    }
    return out;
}

inline IntMatrix json_int_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument(what + ": expected a nonempty array of rows");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument(what + ": expected an array of rows");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw std::invalid_argument(what + ": entries must be integers");
            r.push_back(x.get<long long>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

/// {"type": "lex"} or {"type": "matrix", "matrix": [[..]], "perm": [1-based]}; a
/// bare array of rows is read as a matrix order.
struct OrderChoice {
    MonomialOrder monomial;
    std::vector<std::size_t> perm;
};

inline OrderChoice order_from_json(const json& j) {
    OrderChoice choice;
    if (j.is_array()) {
        choice.monomial = MonomialOrder::matrix(json_int_matrix(j, "order"));
        return choice;
    }
    if (!j.is_object()) throw std::invalid_argument("order: expected an object");
    const std::string type = j.value("type", j.contains("matrix") ? "matrix" : "lex");
    if (type == "lex") {
        choice.monomial = MonomialOrder::lex();
    } else if (type == "matrix") {
        if (!j.contains("matrix")) throw std::invalid_argument("order: matrix order without \"matrix\"");
        choice.monomial = MonomialOrder::matrix(json_int_matrix(j["matrix"], "order.matrix"));
    } else {
        throw std::invalid_argument("order: unknown type '" + type + "'");
    }
    if (j.contains("perm")) {
        for (const auto& p : j["perm"]) {
            if (!p.is_number_integer() || p.get<long long>() < 1)
                throw std::invalid_argument("order.perm: entries must be positive integers");
            choice.perm.push_back(p.get<std::size_t>() - 1);
        }
    }
    return choice;
}

inline json order_to_json(const OrderChoice& choice) {
    json j;
    if (choice.monomial.is_lex()) {
        j["type"] = "lex";
    } else {
        j["type"] = "matrix";
        j["matrix"] = choice.monomial.weights();
    }
    if (!choice.perm.empty()) {
        json p = json::array();
        for (auto v : choice.perm) p.push_back(v + 1);
        j["perm"] = p;
    }
    return j;
}

/// --order lex | matrix:<file>
inline OrderChoice order_from_flag(const std::string& flag, std::istream& in) {
    if (flag == "lex") return {};
    if (flag.rfind("matrix:", 0) == 0) {
        const std::string path = flag.substr(7);
        return order_from_json(parse_json(read_input(path, in), path));
    }
    throw std::invalid_argument("--order must be 'lex' or 'matrix:<file>'");
}

template <EuclideanDomain R>
class Command {
public:
    Command(const Options& opt, Io io) : opt_(opt), io_(io) {
        if (opt_.no_coprime_skip) options_.use_coprime_skip = false;
        const char* trace = std::getenv("GB_TRACE");
        if (trace != nullptr && std::string(trace) == "1") {
            options_.trace = [this](const TraceEvent<R>& e) { log(e); };
        }
    }

    int run() {
        const std::string& c = opt_.command;
        if (c == "gb" || c == "member" || c == "divide" || c == "spoly") return run_text();
        if (c == "gnf" || c == "solve" || c == "kernel") return run_matrix();
        throw std::logic_error("unhandled command " + c);
    }

private:
    // ---- text inputs: one polynomial vector per line -------------------------

    struct TextInput {
        std::vector<PolyVector<R>> items;
    };

    TextInput read_lines() {
        const std::string text = read_input(opt_.input, io_.in);
        std::vector<std::pair<std::size_t, std::string>> lines;
        std::istringstream ss(text);
        std::string line;
        std::size_t number = 0;
        while (std::getline(ss, line)) {
            ++number;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            lines.emplace_back(number, line);
        }
        if (lines.empty()) throw std::invalid_argument("input contains no polynomials");
        if (!opt_.vars.empty()) {
            vars_ = split_vars(opt_.vars);
        } else {
            std::string all;
            for (const auto& l : lines) all += l.second + '\n';
            vars_ = infer_variables(all);
            if (vars_.empty()) vars_ = {"x"};
        }
        set_order(order_from_flag(opt_.order, io_.in));
        TextInput out;
        std::size_t rank = 0;
        for (const auto& [n, l] : lines) {
            PolyVector<R> f = Parser<R>(l, vars_, n, 1).vector(rank);
            rank = f.rank();
            out.items.push_back(std::move(f));
        }
        ord_.check_shape(vars_.size(), rank);
        return out;
    }

    int run_text() {
        TextInput input = read_lines();
        auto& items = input.items;
        json result;
        std::ostringstream text;
        int status = ok;
        const std::string& c = opt_.command;
        if (c == "gb") {
            std::vector<PolyVector<R>> gens;
            for (auto& f : items) {
                if (!f.is_zero()) gens.push_back(f);
            }
            std::vector<PolyVector<R>> basis;
            if (!gens.empty()) basis = reduced_strong_groebner(gens, ord_, options_);
            result = json::array();
            for (const auto& g : basis) {
                text << fmt(g) << '\n';
                result.push_back(fmt(g));
            }
        } else if (c == "member") {
            if (items.size() < 2) throw std::invalid_argument("member: expected the candidate and at least one generator");
            std::vector<PolyVector<R>> gens;
            for (std::size_t i = 1; i < items.size(); ++i) {
                if (!items[i].is_zero()) gens.push_back(items[i]);
            }
            bool is_member = items[0].is_zero();
            if (!is_member && !gens.empty()) {
                is_member = member(items[0], reduced_strong_groebner(gens, ord_, options_), ord_);
            }
            text << (is_member ? "true" : "false") << '\n';
            result = {{"member", is_member}};
            if (!is_member) status = negative;
        } else if (c == "divide") {
            if (items.size() < 2) throw std::invalid_argument("divide: expected the dividend and at least one divisor");
            std::vector<PolyVector<R>> divisors(items.begin() + 1, items.end());
            std::vector<Polynomial<R>> quotients(divisors.size(), Polynomial<R>(vars_.size(), 1));
            PolyVector<R> remainder(vars_.size(), items[0].rank());
            if (!items[0].is_zero()) {
                Expression<R> e = euclidean_divide(items[0], divisors, ord_);
                for (const auto& s : e.steps) {
                    quotients[s.index] += Polynomial<R>::term(vars_.size(), 1, s.coeff, MonomialVector{s.mono, 0});
                }
                remainder = e.remainder;
            }
            const AdmissibleOrder scalar_order = AdmissibleOrder::uniform(ord_.component_order(0));
            result = {{"quotients", json::array()}};
            for (std::size_t i = 0; i < quotients.size(); ++i) {
                const std::string q = format_vector(quotients[i], vars_, scalar_order);
                text << "q" << i + 1 << " = " << q << '\n';
                result["quotients"].push_back(q);
            }
            text << "r = " << fmt(remainder) << '\n';
            result["remainder"] = fmt(remainder);
        } else if (c == "spoly") {
            if (items.size() != 2) throw std::invalid_argument("spoly: expected exactly two polynomial vectors");
            PolyVector<R> s = spoly(items[0], items[1], ord_);
            text << fmt(s) << '\n';
            result = {{"spoly", fmt(s)}};
        }
        if (opt_.format == "json") {
            json doc;
            doc["ring"] = ring_json();
            doc["order"] = order_to_json(order_spec_);
            json inputs = json::array();
            for (const auto& f : items) inputs.push_back(fmt(f));
            doc["input"] = inputs;
            doc["result"] = result;
            io_.out << doc.dump(2) << '\n';
        } else {
            io_.out << text.str();
        }
        return status;
    }

    // ---- matrix inputs (JSON) ------------------------------------------------

    std::vector<MonomialOrder> column_orders_;  // empty: uniform order from order_spec_

    int run_matrix() {
        const std::string text = read_input(opt_.input, io_.in);
        json doc = parse_json(text, opt_.input);
        if (!doc.is_object() || !doc.contains("matrix")) throw std::invalid_argument("input: expected an object with \"matrix\"");
        const json& m = doc["matrix"];
        if (!m.is_array() || m.empty() || !m.front().is_array() || m.front().empty())
            throw std::invalid_argument("matrix: expected a nonempty array of nonempty rows");
        if (!opt_.vars.empty()) {
            vars_ = split_vars(opt_.vars);
        } else if (doc.contains("ring") && doc["ring"].contains("vars")) {
            for (const auto& v : doc["ring"]["vars"]) vars_.push_back(v.get<std::string>());
        } else {
            std::string all;
            for (const auto& row : m) {
                for (const auto& e : row) all += entry_text(e) + '\n';
            }
            if (doc.contains("rhs")) {
                for (const auto& e : doc["rhs"]) all += entry_text(e) + '\n';
            }
            vars_ = infer_variables(all);
        }
        if (vars_.empty()) vars_ = {"x"};

        std::vector<std::vector<Polynomial<R>>> entries;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i].is_array() || m[i].size() != m.front().size())
                throw ShapeError("matrix row " + std::to_string(i + 1) + " has " +
                                 std::to_string(m[i].is_array() ? m[i].size() : 0) + " entries, row 1 has " +
                                 std::to_string(m.front().size()));
            std::vector<Polynomial<R>> row;
            for (std::size_t j = 0; j < m[i].size(); ++j) row.push_back(entry(m[i][j], "matrix[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
            entries.push_back(std::move(row));
        }
        PolyMatrix<R> a = PolyMatrix<R>::from_entries(vars_.size(), entries);

        if (opt_.order_given) {
            set_order(order_from_flag(opt_.order, io_.in));
        } else if (doc.contains("order") && doc["order"].is_array() && !doc["order"].empty() &&
                   doc["order"].front().is_object()) {
            for (const auto& o : doc["order"]) {
                OrderChoice choice = order_from_json(o);
                if (!choice.perm.empty()) throw std::invalid_argument("order: per-column orders take no \"perm\"");
                column_orders_.push_back(choice.monomial);
            }
        } else if (doc.contains("order")) {
            set_order(order_from_json(doc["order"]));
        } else {
            set_order({});
        }

        json result;
        std::ostringstream out;
        int status = ok;
        const std::string& c = opt_.command;
        if (c == "gnf") {
            AdmissibleOrder ord = column_orders_.empty() ? ord_ : AdmissibleOrder::position_over_term(column_orders_);
            GnfResult<R> g = gnf(a, ord, options_);
            result = {{"matrix", rows_json(g.H, ord)}};
            for (const auto& row : g.H.rows()) out << format_vector(row, vars_, ord, true) << '\n';
        } else if (c == "solve") {
            if (!doc.contains("rhs") || !doc["rhs"].is_array())
                throw std::invalid_argument("solve: input needs \"rhs\", an array of " + std::to_string(a.nrows()) +
                                            " polynomials");
            if (doc["rhs"].size() != a.nrows())
                throw ShapeError("rhs has " + std::to_string(doc["rhs"].size()) + " entries, matrix has " +
                                 std::to_string(a.nrows()) + " rows");
            std::vector<Polynomial<R>> rhs;
            for (std::size_t i = 0; i < doc["rhs"].size(); ++i)
                rhs.push_back(entry(doc["rhs"][i], "rhs[" + std::to_string(i + 1) + "]"));
            std::vector<MonomialOrder> cols = solve_orders(a.ncols());
            SolveResult<R> res = solve(a, PolyMatrix<R>::assemble(vars_.size(), rhs), cols, options_);
            const AdmissibleOrder shown = AdmissibleOrder::position_over_term(
                std::vector<MonomialOrder>(cols.end() - static_cast<std::ptrdiff_t>(a.ncols()), cols.end()));
            if (const auto* s = std::get_if<Solution<R>>(&res)) {
                out << "solution: " << format_vector(s->particular, vars_, shown, true) << '\n';
                out << "kernel:\n";
                for (const auto& row : s->kernel.rows()) out << format_vector(row, vars_, shown, true) << '\n';
                result = {{"solvable", true},
                          {"particular", format_vector(s->particular, vars_, shown, true)},
                          {"kernel", rows_json(s->kernel, shown)}};
            } else {
                const auto& ns = std::get<NoSolution<R>>(res);
                const AdmissibleOrder zero_order = AdmissibleOrder::uniform(cols[cols.size() - a.ncols() - 1]);
                out << "no solution\ncolon ideal:\n";
                json colon = json::array();
                for (const auto& p : ns.colon_basis) {
                    out << format_vector(p, vars_, zero_order) << '\n';
                    colon.push_back(format_vector(p, vars_, zero_order));
                }
                result = {{"solvable", false}, {"colon_basis", colon}};
                status = negative;
            }
        } else if (c == "kernel") {
            std::vector<MonomialOrder> cols = column_orders_;
            if (cols.empty()) cols.assign(a.ncols(), uniform_monomial());
            PolyMatrix<R> d = kernel(a, cols, options_);
            const AdmissibleOrder shown = AdmissibleOrder::position_over_term(
                std::vector<MonomialOrder>(cols.end() - static_cast<std::ptrdiff_t>(a.ncols()), cols.end()));
            for (const auto& row : d.rows()) out << format_vector(row, vars_, shown, true) << '\n';
            result = {{"matrix", rows_json(d, shown)}};
        }
        if (opt_.format == "json") {
            json echo = doc;
            echo["ring"] = ring_json();
            echo["result"] = result;
            io_.out << echo.dump(2) << '\n';
        } else {
            io_.out << out.str();
        }
        return status;
    }

    /// solve and kernel build position-over-term orders column by column, so a
    /// component permutation has no meaning there.
    MonomialOrder uniform_monomial() const {
        if (!order_spec_.perm.empty()) {
            bool identity = true;
            for (std::size_t i = 0; i < order_spec_.perm.size(); ++i) identity = identity && order_spec_.perm[i] == i;
            if (!identity) throw std::invalid_argument(opt_.command + ": order permutations are not supported");
        }
        return order_spec_.monomial;
    }

    std::vector<MonomialOrder> solve_orders(std::size_t s) const {
        if (!column_orders_.empty()) {
            if (column_orders_.size() == s) {
                std::vector<MonomialOrder> out{MonomialOrder::lex(), MonomialOrder::lex()};
                out.insert(out.end(), column_orders_.begin(), column_orders_.end());
                return out;
            }
            if (column_orders_.size() == s + 2) return column_orders_;
            throw ShapeError("solve expects " + std::to_string(s) + " or " + std::to_string(s + 2) +
                             " column orders, got " + std::to_string(column_orders_.size()));
        }
        return std::vector<MonomialOrder>(s + 2, uniform_monomial());
    }

    static std::string entry_text(const json& e) {
        if (e.is_string()) return e.get<std::string>();
        if (e.is_number_integer()) return e.dump();
        throw std::invalid_argument("matrix entries must be strings or integers");
    }

    Polynomial<R> entry(const json& e, const std::string& where) {
        std::string t = entry_text(e);
        try {
            return parse_polynomial<R>(t, vars_);
        } catch (const ParseError& p) {
            throw ParseError(where + ": " + std::string(p.what()), p.line(), p.column());
        }
    }

    json rows_json(const PolyMatrix<R>& m, const AdmissibleOrder& ord) const {
        json rows = json::array();
        for (const auto& row : m.rows()) {
            json r = json::array();
            for (std::size_t j = 0; j < row.rank(); ++j) r.push_back(format_component(row, j, vars_, ord));
            rows.push_back(r);
        }
        return rows;
    }

    // ---- shared ----------------------------------------------------------------

    void set_order(OrderChoice choice) {
        order_spec_ = std::move(choice);
        ord_ = AdmissibleOrder::uniform(order_spec_.monomial, order_spec_.perm);
    }

    json ring_json() const { return {{"coeff", opt_.ring}, {"vars", vars_}}; }

    std::string fmt(const PolyVector<R>& f) const { return format_vector(f, vars_, ord_); }

    void log(const TraceEvent<R>& e) const {
        static const char* kinds[] = {"normalize", "soft-reduce", "augment", "coprime-skip"};
        static const char* branches[] = {"zero", "lead-divisible", "delta-step", "adjoin"};
        const AdmissibleOrder& ord = ord_;
        io_.err << "[trace] " << kinds[static_cast<int>(e.kind)];
        if (e.kind == TraceKind::augment)
            io_.err << " " << branches[static_cast<int>(e.branch)] << (e.certified ? " certified" : " pending");
        io_.err << ":";
        for (const auto& f : e.inputs) io_.err << " " << format_vector(f, vars_, ord, true);
        if (e.output) io_.err << " -> " << format_vector(*e.output, vars_, ord, true);
        io_.err << '\n';
    }

    const Options& opt_;
    Io io_;
    GroebnerOptions<R> options_;
    VarNames vars_;
    OrderChoice order_spec_;
    AdmissibleOrder ord_;
};

inline json scalar_json(const Integer& z) {
    if (z.value().fits_slong_p()) return z.value().get_si();
    return to_string(z);
}

inline json scalar_json(const Rational& q) {
    if (q.denominator() == 1) return scalar_json(Integer(q.numerator()));
    return to_string(q);
}

template <EuclideanDomain R>
std::vector<std::vector<R>> scalar_matrix(const json& j) {
    const json& m = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!m.is_array()) throw std::invalid_argument("expected a matrix as an array of rows");
    std::vector<std::vector<R>> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_array()) throw std::invalid_argument("expected a matrix as an array of rows");
        if (m[i].size() != m.front().size())
            throw ShapeError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(m[i].size()) +
                             " entries, row 1 has " + std::to_string(m.front().size()));
        std::vector<R> row;
        for (const auto& e : m[i]) {
            std::string t;
            if (e.is_number_integer()) {
                t = e.dump();
            } else if (e.is_string()) {
                t = e.get<std::string>();
            } else {
                throw std::invalid_argument("matrix entries must be integers or strings");
            }
            row.push_back(R::parse(t));
        }
        out.push_back(std::move(row));
    }
    return out;
}

template <EuclideanDomain R>
int run_scalar(const Options& opt, Io io) {
    // a literal "[[...]]" is accepted in place of a path
    const std::string text = !opt.input.empty() && opt.input.front() == '[' ? opt.input : read_input(opt.input, io.in);
    json doc = parse_json(text, opt.input);
    std::vector<std::vector<R>> m = scalar_matrix<R>(doc);
    std::vector<std::vector<R>> h = detail::constant_gnf(m);
    if (opt.format == "json") {
        json out = doc.is_object() ? doc : json{{"matrix", doc}};
        json rows = json::array();
        for (const auto& row : h) {
            json r = json::array();
            for (const auto& c : row) r.push_back(scalar_json(c));
            rows.push_back(r);
        }
        out["result"] = {{"matrix", rows}};
        io.out << out.dump(2) << '\n';
    } else {
        io.out << format_scalar_matrix(h) << '\n';
    }
    return ok;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Strong Groebner bases over Euclidean domains", "sgb"};
    app.require_subcommand(1, 1);
    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"gb", "reduced strong Groebner basis of the vectors in FILE (one per line)"},
        {"gnf", "Groebner normal form of a JSON matrix"},
        {"solve", "solve A z = b from a JSON matrix with \"rhs\""},
        {"kernel", "kernel basis of a JSON matrix"},
        {"member", "is line 1 of FILE in the module generated by the other lines"},
        {"divide", "Euclidean division of line 1 of FILE by the other lines"},
        {"spoly", "S-polynomial vector of the two lines of FILE"},
        {"hnf", "Hermite normal form of an integer matrix"},
        {"rref", "reduced row echelon form of a rational matrix"},
    };
    // global flags are accepted before or after the subcommand
    auto add_flags = [&opt](CLI::App* a) {
        a->add_option("--ring", opt.ring, "coefficient ring (Z or Q)")->check(CLI::IsMember({"Z", "Q"}));
        a->add_option("--order", opt.order, "lex or matrix:<file>");
        a->add_option("--vars", opt.vars, "comma separated variable names, largest first");
        a->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
        a->add_flag("--no-coprime-skip", opt.no_coprime_skip, "disable the coprime leading monomial criterion");
    };
    add_flags(&app);
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("input", opt.input, "input file, '-' for stdin")->required();
        add_flags(sub);
        sub->callback([&opt, name = std::string(s.name)] { opt.command = name; });
    }

    opt.ring.clear();
    opt.order.clear();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    opt.ring_given = !opt.ring.empty();
    if (!opt.ring_given) opt.ring = "Z";
    opt.order_given = !opt.order.empty();
    if (!opt.order_given) opt.order = "lex";

    Io io{in, out, err};
    try {
        if (opt.command == "hnf") {
            if (opt.ring_given && opt.ring != "Z") throw std::invalid_argument("hnf works over Z");
            return run_scalar<Integer>(opt, io);
        }
        if (opt.command == "rref") {
            if (opt.ring_given && opt.ring != "Q") throw std::invalid_argument("rref works over Q");
            return run_scalar<Rational>(opt, io);
        }
        if (!opt.ring_given && (opt.command == "gnf" || opt.command == "solve" || opt.command == "kernel")) {
            // the JSON ring declaration decides unless --ring is given
            const std::string text = read_input(opt.input, in);
            json doc = parse_json(text, opt.input);
            if (doc.is_object() && doc.contains("ring") && doc["ring"].contains("coeff"))
                opt.ring = doc["ring"]["coeff"].get<std::string>();
            if (opt.ring != "Z" && opt.ring != "Q") throw std::invalid_argument("ring.coeff must be \"Z\" or \"Q\"");
            std::istringstream again(text);
            Io replay{again, out, err};
            Options o = opt;
            o.input = "-";
            return opt.ring == "Q" ? Command<Rational>(o, replay).run() : Command<Integer>(o, replay).run();
        }
        return opt.ring == "Q" ? Command<Rational>(opt, io).run() : Command<Integer>(opt, io).run();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return input_error;
}

}  // namespace sgb::cli
