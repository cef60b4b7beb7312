#include "mocklie/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "mocklie/document.hpp"
#include "report.hpp"

namespace mocklie {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string field_flag;
    std::vector<std::string> files;
    std::string output;
    std::string catalog_action = "list";
    std::string catalog_name;
};

std::optional<Field> parse_field_flag(const std::string& flag)
{
    if (flag.empty()) return std::nullopt;
    if (flag == "rational") return Field::rationals();
    if (flag.rfind("gf:", 0) != 0 || flag.size() == 3) {
        throw UsageError("--field expects 'gf:<p>' or 'rational', got '" + flag + "'");
    }
    const std::string p = flag.substr(3);
    if (p.find_first_not_of("0123456789") != std::string::npos || p.size() > 19) {
        throw UsageError("--field: malformed modulus '" + p + "'");
    }
    try {
        return Field::prime(std::stoull(p));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--field: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string stem(const std::string& path)
{
    const auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base.resize(dot);
    return base.empty() ? std::string("L") : base;
}

Algebra load(const std::string& path, const std::optional<Field>& field)
{
    const std::string text = read_file(path);
    try {
        return parse_algebra(text, field, stem(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                         ": " + e.message());
    }
}

std::string bool_word(bool b)
{
    return b ? "yes" : "no";
}

std::string element(std::size_t index)
{
    return "e" + std::to_string(index + 1);
}

void print_header(std::ostream& out, const Algebra& a)
{
    out << "algebra: " << a.name << "\n";
    out << "field: " << a.field().to_string() << "\n";
    out << "dim: " << a.dim() << "\n";
}

void print_space(std::ostream& out, const DerivationSpace& space)
{
    out << "der dim: " << space.dim() << "\n";
    out << "basis:\n";
    for (std::size_t p = 0; p < space.dim(); ++p) {
        out << "  D" << p + 1 << " = " << to_string(space.basis[p]) << "\n";
    }
    const ParametricFamily family = render_parametric(space);
    out << "parametric:\n" << render_grid(family);
}

int cmd_check(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    const Algebra a = load(opt.files.at(0), field);
    const AxiomReport r = check_axioms(a);
    if (opt.json) {
        Json j = report_header(a);
        j["axioms"] = axioms_json(r);
        out << dump(j);
    } else {
        print_header(out, a);
        out << "commutative: " << bool_word(r.commutative);
        if (const auto& w = r.commutative_witness) {
            out << " (" << element((*w)[0]) << " * " << element((*w)[1]) << " differs from "
                << element((*w)[1]) << " * " << element((*w)[0]) << " in component "
                << element((*w)[2]) << "; witness " << (*w)[0] + 1 << " " << (*w)[1] + 1 << " "
                << (*w)[2] + 1 << ")";
        }
        out << "\n";
        out << "jacobi: " << bool_word(r.jacobi);
        if (const auto& w = r.jacobi_witness) {
            const Vector jac = jacobiator(a, (*w)[0], (*w)[1], (*w)[2]);
            out << " (J(" << element((*w)[0]) << ", " << element((*w)[1]) << ", "
                << element((*w)[2]) << ") has coefficient " << jac[(*w)[3]] << " on "
                << element((*w)[3]) << "; witness " << (*w)[0] + 1 << " " << (*w)[1] + 1 << " "
                << (*w)[2] + 1 << " " << (*w)[3] + 1 << ")";
        }
        out << "\n";
        out << "mock-lie: " << bool_word(r.mock_lie) << "\n";
    }
    return r.mock_lie ? kExitOk : kExitAxiomViolation;
}

int cmd_derive(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    const Algebra a = load(opt.files.at(0), field);
    const DerivationSpace space = derivation_basis(a);
    if (opt.json) {
        Json j = report_header(a);
        j["der"] = der_json(space);
        out << dump(j);
    } else {
        print_header(out, a);
        print_space(out, space);
    }
    return kExitOk;
}

int cmd_bracket_table(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    const Algebra a = load(opt.files.at(0), field);
    const DerivationSpace space = derivation_basis(a);
    const StructureTensor t = der_structure_constants(space);
    if (opt.json) {
        Json j = report_header(a);
        j["der"] = der_json(space);
        j["brackets"] = tensor_json(t);
        out << dump(j);
        return kExitOk;
    }
    print_header(out, a);
    print_space(out, space);
    out << "brackets:\n";
    for (std::size_t p = 0; p < t.dim(); ++p) {
        for (std::size_t q = p + 1; q < t.dim(); ++q) {
            LinearForm form;
            for (std::size_t r = 0; r < t.dim(); ++r) {
                const Scalar c = t.coeff(p, q, r);
                if (!c.is_zero()) form.terms.emplace("D" + std::to_string(r + 1), c);
            }
            if (form.is_zero()) continue;
            std::vector<std::string> order;
            for (std::size_t r = 0; r < t.dim(); ++r) order.push_back("D" + std::to_string(r + 1));
            out << "  [D" << p + 1 << ", D" << q + 1 << "] = " << to_string(form, order) << "\n";
        }
    }
    return kExitOk;
}

int cmd_sum(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    const Algebra a = load(opt.files.at(0), field);
    const Algebra b = load(opt.files.at(1), field);
    if (!(a.field() == b.field())) {
        throw UsageError("cannot sum algebras over " + a.field().to_string() + " and " +
                         b.field().to_string());
    }
    const Algebra sum = direct_sum(a, b);
    const std::string text = serialize_algebra(sum);
    if (!opt.output.empty()) {
        std::ofstream file(opt.output, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + opt.output + "'");
        file << text;
    }
    if (opt.json) {
        Json j = report_header(sum);
        j["document"] = text;
        out << dump(j);
    } else if (opt.output.empty()) {
        out << text;
    }
    return kExitOk;
}

int cmd_catalog(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    auto over_field = [&](const Algebra& a) {
        return field ? Algebra{a.name, a.tensor.to_field(*field)} : a;
    };
    if (opt.catalog_action == "list") {
        if (opt.json) {
            Json j;
            j["format"] = kReportFormat;
            j["entries"] = Json::array();
            for (const auto& a : catalog()) {
                Json e;
                e["algebra"] = a.name;
                e["dim"] = a.dim();
                e["products"] = tensor_json(a.tensor);
                j["entries"].push_back(std::move(e));
            }
            out << dump(j);
        } else {
            for (const auto& a : catalog()) out << a.name << "  dim " << a.dim() << "\n";
        }
        return kExitOk;
    }
    if (opt.catalog_action != "show") {
        throw UsageError("catalog expects 'list' or 'show <name>'");
    }
    if (opt.catalog_name.empty()) throw UsageError("catalog show needs an entry name");
    std::optional<Algebra> entry;
    try {
        entry = over_field(catalog_entry(opt.catalog_name));
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    const std::string text = serialize_algebra(*entry);
    if (opt.json) {
        Json j = report_header(*entry);
        j["products"] = tensor_json(entry->tensor);
        j["document"] = text;
        out << dump(j);
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_verify_catalog(const Options& opt, const std::optional<Field>& field, std::ostream& out,
                       const FamilyLookup& families)
{
    const Field f = field.value_or(Field::rationals());
    if (f.characteristic() == 2 || f.characteristic() == 3) {
        throw UsageError("verify-catalog needs a field of characteristic other than 2 and 3");
    }
    std::vector<VerificationReport> reports;
    for (const auto& name : nonabelian_catalog_names()) {
        const Algebra& entry = catalog_entry(name);
        reports.push_back(verify_family({entry.name, entry.tensor.to_field(f)}, families(name)));
    }
    bool all_equal = true;
    for (const auto& r : reports) all_equal = all_equal && r.spaces_equal;

    if (opt.json) {
        Json j;
        j["format"] = kReportFormat;
        j["field"] = f.to_string();
        j["entries"] = Json::array();
        for (const auto& r : reports) {
            Json e;
            e["algebra"] = r.catalog_name;
            e["dim"] = catalog_entry(r.catalog_name).dim();
            e["verification"] = verification_json(r);
            j["entries"].push_back(std::move(e));
        }
        j["all_equal"] = all_equal;
        out << dump(j);
    } else {
        std::size_t width = 0;
        for (const auto& r : reports) width = std::max(width, r.catalog_name.size());
        for (const auto& r : reports) {
            out << (r.spaces_equal ? "EQUAL     " : "MISMATCH  ") << r.catalog_name
                << std::string(width - r.catalog_name.size() + 2, ' ') << "dim " << r.computed_dim
                << (r.computed_dim == r.published_dim ? " = " : " != ") << r.published_dim << "\n";
            if (r.discrepancy) {
                out << "          witness "
                    << (r.witness_is_derivation ? "(derivation missing from family): "
                                                : "(family member that is not a derivation): ")
                    << to_string(*r.discrepancy) << "\n";
            }
        }
    }
    return all_equal ? kExitOk : kExitMismatch;
}

int cmd_fingerprint(const Options& opt, const std::optional<Field>& field, std::ostream& out)
{
    const Algebra a = load(opt.files.at(0), field);
    const Invariants inv = invariants(a);
    if (opt.json) {
        Json j = report_header(a);
        j["invariants"] = invariants_json(inv);
        out << dump(j);
    } else {
        out << "algebra: " << a.name << "\n";
        out << "field: " << a.field().to_string() << "\n";
        out << "dim: " << inv.dim << "\n";
        out << "dim_square: " << inv.dim_square << "\n";
        out << "dim_annihilator: " << inv.dim_annihilator << "\n";
        out << "dim_der: " << inv.dim_der << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const FamilyLookup& families)
{
    Options opt;
    CLI::App app{"Derivation algebras of Mock-Lie algebras given by structure constants", "mocklie"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Structured JSON output");
    app.add_option("--field", opt.field_flag, "Reinterpret coefficients in gf:<p> (or 'rational')");

    auto* check = app.add_subcommand("check", "Check commutativity and the Jacobi identity");
    check->add_option("file", opt.files, "Algebra document")->required()->expected(1);
    auto* derive = app.add_subcommand("derive", "Basis and parametric form of Der(L)");
    derive->add_option("file", opt.files, "Algebra document")->required()->expected(1);
    auto* brackets = app.add_subcommand("bracket-table", "Lie structure constants of Der(L)");
    brackets->add_option("file", opt.files, "Algebra document")->required()->expected(1);
    auto* sum = app.add_subcommand("sum", "Direct sum of two algebras");
    sum->add_option("files", opt.files, "Two algebra documents")->required()->expected(2);
    sum->add_option("-o,--output", opt.output, "Write the sum document to this file");
    auto* cat = app.add_subcommand("catalog", "Built-in algebras of dimension <= 4");
    cat->add_option("action", opt.catalog_action, "list | show")->check(CLI::IsMember({"list", "show"}));
    cat->add_option("name", opt.catalog_name, "Entry name for 'show'");
    auto* verify = app.add_subcommand("verify-catalog", "Compare Der(L) with the published families");
    auto* fingerprint = app.add_subcommand("fingerprint", "Isomorphism invariants");
    fingerprint->add_option("file", opt.files, "Algebra document")->required()->expected(1);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        const auto field = parse_field_flag(opt.field_flag);
        if (check->parsed()) return cmd_check(opt, field, out);
        if (derive->parsed()) return cmd_derive(opt, field, out);
        if (brackets->parsed()) return cmd_bracket_table(opt, field, out);
        if (sum->parsed()) return cmd_sum(opt, field, out);
        if (cat->parsed()) return cmd_catalog(opt, field, out);
        if (verify->parsed()) return cmd_verify_catalog(opt, field, out, families);
        if (fingerprint->parsed()) return cmd_fingerprint(opt, field, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << app.help();
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return run_cli(args, out, err, published_family);
}

}  // namespace mocklie
