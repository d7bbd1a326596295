#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "edr/lab/diadem.hpp"
#include "edr/lab/properties.hpp"
#include "edr/reduce/reduction.hpp"
#include "edr/reduce/verify.hpp"

namespace edr::cli {

namespace {

constexpr const char* kHeader = "# edr-kit v1\n";

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

struct Options {
    std::size_t max_card_pair = 50;
    std::size_t max_card_triple = 16;
    std::optional<std::size_t> max_card;
    std::uint64_t search_radius = 1'000'000;
    std::string output;

    std::string ring;
    std::string matrix_path, cert_path, property;
    std::vector<std::string> elements;
};

// Thrown for unreadable files; reported as a usage error.
struct FileError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cmd_snf(const Options& o, std::ostream& out) {
    Ring R = parse_ring(o.ring);
    Matrix A = parse_matrix(R, slurp(o.matrix_path));
    out << format_certificate(smith_normal_form(A));
    return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    Ring R = parse_ring(o.ring);
    if (!R.is_finite()) throw InfiniteRing("infinite ring: " + R.spec());
    CardinalityBounds bounds{o.max_card.value_or(o.max_card_pair), o.max_card.value_or(o.max_card_triple)};

    std::vector<Property> props;
    if (o.property == "all") {
        props = all_properties();
    } else if (auto p = parse_property(o.property)) {
        props = {*p};
    } else {
        throw ParseError("unknown property '" + o.property + "'", 0);
    }

    int code = kOk;
    for (Property p : props) {
        if (*R.cardinality() > static_cast<unsigned long>(bounds.for_property(p))) {
            err << "skipped " << property_name(p) << ": cardinality " << R.cardinality()->get_str()
                << " exceeds bound " << bounds.for_property(p) << "\n";
            code = kNegative;
            continue;
        }
        PropertyReport report = p == Property::AssociateDiadems
                                    ? verify_associate_diadems(FiniteRing(R, bounds.for_property(p)))
                                    : check_property(R, p, bounds);
        out << serialize(report) << "\n";
        if (!report.holds) code = kNegative;
    }
    return code;
}

int cmd_diadem(const Options& o, std::ostream& out) {
    Ring R = parse_ring(o.ring);
    Element a = R.parse_element(o.elements.at(0));
    Element b = R.parse_element(o.elements.at(1));
    DiademOptions opts;
    opts.search_radius = o.search_radius;
    opts.max_cardinality = o.max_card.value_or(1024);
    auto w = find_diadem(a, b, opts);
    out << "lambda=" << w.lambda << " diadem=" << w.diadem << " evidence=" << evidence_name(w.evidence)
        << " exhaustive=" << (w.exhaustive ? "true" : "false") << "\n";
    return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
    Ring R = parse_ring(o.ring);
    Element a = R.parse_element(o.elements.at(0));
    Element b = R.parse_element(o.elements.at(1));
    Element c = R.parse_element(o.elements.at(2));
    auto w = stable_range_2_witness(a, b, c);
    // self-check, printed so the line can be read on its own
    auto g = bezout_gcd(a + c * w.p, b + c * w.q).g;
    out << "p=" << w.p << " q=" << w.q << " gcd=" << g << "\n";
    return is_unit(g) ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Ring R = parse_ring(o.ring);
    Matrix A = parse_matrix(R, slurp(o.matrix_path));
    auto cert = parse_certificate(R, slurp(o.cert_path));
    auto v = verify_certificate(A, cert);
    if (v.ok) {
        out << "valid\n";
        return kOk;
    }
    out << "invalid clause=" << v.failed_clause << " detail=" << v.detail << "\n";
    return kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact diagonal reduction and finite ring property toolkit", "edr-kit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-card", o.max_card, "Cardinality bound for exhaustive checks");
    app.add_option("--search-radius", o.search_radius, "Number of lambda candidates to try");
    app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");

    auto* snf = app.add_subcommand("snf", "Diagonal reduction certificate P, D, Q of a matrix");
    snf->add_option("ring", o.ring)->required();
    snf->add_option("matrix", o.matrix_path)->required();

    auto* check = app.add_subcommand("check", "Exhaustive property check on a finite ring");
    check->add_option("ring", o.ring)->required();
    check->add_option("property", o.property, "Property name or 'all'")->required();

    auto* diadem = app.add_subcommand("diadem", "Find a diadem a + b*lambda of a comaximal pair");
    diadem->add_option("ring", o.ring)->required();
    diadem->add_option("elements", o.elements)->expected(2)->required();

    auto* witness = app.add_subcommand("witness", "Stable range 2 witness (p, q) for a comaximal triple");
    witness->add_option("ring", o.ring)->required();
    witness->add_option("elements", o.elements)->expected(3)->required();

    auto* verify = app.add_subcommand("verify", "Check a certificate against its matrix");
    verify->add_option("ring", o.ring)->required();
    verify->add_option("matrix", o.matrix_path)->required();
    verify->add_option("certificate", o.cert_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::ostringstream body;
    int code;
    try {
        if (*snf) code = cmd_snf(o, body);
        else if (*check) code = cmd_check(o, body, err);
        else if (*diadem) code = cmd_diadem(o, body);
        else if (*witness) code = cmd_witness(o, body);
        else code = cmd_verify(o, body);
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << " at offset " << e.position() << "\n";
        return kUsage;
    } catch (const InfiniteRing& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeMismatch& e) {
        err << "error: shape mismatch: " << e.what() << "\n";
        return kUsage;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        // unsupported ring, failed precondition, exhausted search
        err << "error: " << e.what() << "\n";
        return kNegative;
    }

    std::string text = kHeader + body.str();
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f || !(f << text)) {
            err << "error: cannot write " << o.output << "\n";
            return kUsage;
        }
    }
    return code;
}

}  // namespace edr::cli
