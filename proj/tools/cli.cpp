#include "cli.hpp"

#include "bckcode/algebra.hpp"
#include "bckcode/census.hpp"
#include "bckcode/code.hpp"
#include "bckcode/codec.hpp"
#include "bckcode/construct.hpp"
#include "bckcode/error.hpp"
#include "bckcode/io.hpp"
#include "bckcode/pipeline.hpp"
#include "bckcode/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

namespace bckcode::cli {

namespace {

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

template <class Parse>
auto read_file(const std::string& path, Context& ctx, Parse&& parse) {
    if (path == "-") return parse(ctx.in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return parse(file);
}

CayleyAlgebra load_algebra(const std::string& path, Context& ctx) {
    return read_file(path, ctx, [](std::istream& s) { return parse_algebra(s); });
}

BlockCode load_code(const std::string& path, Context& ctx) {
    return read_file(path, ctx, [](std::istream& s) { return parse_code(s); });
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void print_identity(std::ostream& out, const char* name, const IdentityCheck& c) {
    out << name << ": " << yes_no(c.holds);
    if (c.witness) out << " (x=" << c.witness->first << ", y=" << c.witness->second << ")";
    out << '\n';
}

void print_axioms(std::ostream& out, const AxiomReport& rep) {
    for (std::size_t i = 0; i < rep.axioms.size(); ++i) {
        const auto& a = rep.axioms[i];
        out << "axiom " << i + 1 << ": ";
        if (a.holds) {
            out << "holds\n";
            continue;
        }
        static constexpr const char* vars[] = {"x", "y", "z"};
        out << "fails at";
        for (std::size_t k = 0; k < a.witness.size(); ++k)
            out << (k ? ", " : " ") << vars[k] << '=' << a.witness[k];
        out << " (evaluates to " << a.evaluation << ")\n";
    }
    out << "bci: " << yes_no(rep.is_bci) << '\n' << "bck: " << yes_no(rep.is_bck) << '\n';
}

void print_matrix_comment(std::ostream& out, const char* title, const CodeMatrix& m) {
    out << "# " << title << " (" << m.rows() << 'x' << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out << "#   " << m.row(i).str() << '\n';
}

int cmd_verify(const std::string& path, Context& ctx) {
    const auto alg = load_algebra(path, ctx);
    const auto rep = check_axioms(alg);
    std::optional<IdentityCheck> comm, impl;
    if (rep.is_bck) {
        comm = is_commutative(alg);
        impl = is_implicative(alg);
    }
    if (ctx.json) {
        ctx.out << verify_report(alg, rep, comm, impl).dump(2) << '\n';
    } else {
        ctx.out << "order: " << alg.order() << '\n';
        print_axioms(ctx.out, rep);
        if (rep.is_bck) {
            print_identity(ctx.out, "commutative", *comm);
            print_identity(ctx.out, "implicative", *impl);
        }
    }
    return rep.is_bck ? kSuccess : kPropertyFailure;
}

int cmd_encode(const std::string& path, const std::string& function_path, Context& ctx) {
    const auto alg = load_algebra(path, ctx);
    const auto rep = check_axioms(alg);
    if (!rep.is_bck) {
        if (ctx.json)
            ctx.out << verify_report(alg, rep, std::nullopt, std::nullopt).dump(2) << '\n';
        else
            print_axioms(ctx.out, rep);
        ctx.err << "error: algebra is not a BCK-algebra\n";
        return kPropertyFailure;
    }
    const auto f = function_path.empty()
                       ? BckFunction::identity(alg)
                       : read_file(function_path, ctx,
                                   [&](std::istream& s) { return parse_function(s, alg); });
    const auto code = generate_code(f);
    if (ctx.json)
        ctx.out << code_report(code).dump(2) << '\n';
    else
        write_code(ctx.out, code);
    return kSuccess;
}

int cmd_construct(const std::string& path, bool lax, Context& ctx) {
    const auto code = load_code(path, ctx);
    if (auto m = is_cn_member(code); !m.member) {
        ctx.err << "error: code does not satisfy the construction hypotheses: " << m.reason << '\n';
        return kInputError;
    }
    const auto built = construct_from_code(code);
    const auto rt = verify_roundtrip(code);
    if (ctx.json) {
        ctx.out << roundtrip_report(built, rt).dump(2) << '\n';
    } else {
        write_algebra(ctx.out, built.algebra);
        ctx.out << "# exact: " << (rt.exact ? "true" : "false") << '\n';
        ctx.out << "# self_describing: " << (rt.self_describing ? "true" : "false") << '\n';
        for (const auto& mm : rt.mismatches)
            ctx.out << "# mismatch: element " << mm.element << " expected " << mm.expected.str()
                    << " produced " << mm.produced.str() << '\n';
    }
    if (rt.exact) return kSuccess;
    if (lax) {
        ctx.err << "warning: regenerated code differs from the input\n";
        return kSuccess;
    }
    ctx.err << "error: regenerated code differs from the input\n";
    return kPropertyFailure;
}

int cmd_lift(const std::string& path, Context& ctx) {
    const auto code = load_code(path, ctx);
    const auto lift = lift_code(code);
    if (ctx.json) {
        ctx.out << lift_report(lift).dump(2) << '\n';
        return kSuccess;
    }
    print_matrix_comment(ctx.out, "embedded", lift.embedded);
    print_matrix_comment(ctx.out, "augmented", lift.augmented);
    ctx.out << "# algebra order: " << lift.algebra.order() << '\n';
    ctx.out << "# column map:";
    for (auto c : lift.column_map) ctx.out << ' ' << c;
    ctx.out << '\n';
    ctx.out << "# contains input: " << (lift.lifted_code.contains_all(lift.source_code) ? "true" : "false")
            << '\n';
    write_code(ctx.out, lift.lifted_code);
    return kSuccess;
}

struct EnumerateArgs {
    unsigned order = 0;
    bool codes = false;
    bool algebras = false;
    bool family = false;
    bool list = false;
    unsigned max_order = 0;  // 0 = module default
    unsigned workers = 1;
};

int cmd_enumerate(const EnumerateArgs& a, Context& ctx) {
    if (a.codes) {
        const auto codes = enumerate_cn(a.order, a.max_order ? a.max_order : kDefaultCnBound);
        if (ctx.json) {
            ctx.out << cn_report(a.order, codes, a.list).dump(2) << '\n';
        } else {
            ctx.out << "count: " << codes.size() << '\n';
            if (a.list)
                for (std::size_t i = 0; i < codes.size(); ++i) {
                    ctx.out << "# code " << i + 1 << '\n';
                    write_code(ctx.out, codes[i]);
                }
        }
        return kSuccess;
    }
    if (a.algebras) {
        EnumerateOptions opts;
        opts.workers = a.workers;
        opts.allow_order_six = a.max_order >= 6;
        if (a.order == 6 && opts.allow_order_six)
            ctx.err << "warning: order 6 census may take a long time\n";
        const auto rep = census(a.order, opts);
        if (ctx.json) {
            ctx.out << census_report(rep).dump(2) << '\n';
        } else {
            ctx.out << "order: " << rep.order << '\n'
                    << "total_tables: " << rep.total_tables << '\n'
                    << "iso_classes: " << rep.iso_classes << '\n'
                    << "similarity_classes: " << rep.similarity_classes << '\n'
                    << "invariant_similarity_classes: " << rep.invariant_similarity_classes << '\n'
                    << "isomorphic_tables_with_distinct_codes: "
                    << yes_no(rep.isomorphic_tables_with_distinct_codes) << '\n'
                    << "lower_bound: " << rep.lower_bound << '\n'
                    << "bound_check: " << yes_no(rep.bound_check) << '\n';
        }
        return kSuccess;
    }
    const auto fam = family_algebra(a.order, a.max_order ? a.max_order : kDefaultFamilyBound);
    if (ctx.json) {
        ctx.out << family_report(a.order, fam).dump(2) << '\n';
    } else {
        write_algebra(ctx.out, fam.algebra);
        ctx.out << "# code:\n";
        for (const auto& w : fam.code) ctx.out << "#   " << w.str() << '\n';
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Convert between finite BCK-algebras and binary block codes", "bckcode"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit a structured JSON report");

    std::string file, function_file;
    bool lax = false;
    EnumerateArgs en;

    auto* verify = app.add_subcommand("verify", "Check the BCI/BCK axioms of an algebra file");
    verify->add_option("file", file, "Algebra file ('-' for stdin)")->required();

    auto* encode = app.add_subcommand("encode", "Generate the code of an algebra and a function");
    encode->add_option("file", file, "Algebra file ('-' for stdin)")->required();
    encode->add_option("--function", function_file, "Function file (default: identity)");

    auto* construct = app.add_subcommand("construct", "Build the star algebra of a code");
    construct->add_option("file", file, "Code file ('-' for stdin)")->required();
    construct->add_flag("--lax", lax, "Treat an inexact round trip as a warning");

    auto* lift = app.add_subcommand("lift", "Embed an arbitrary code and regenerate a superset");
    lift->add_option("file", file, "Code file ('-' for stdin)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate codes, algebras or the family algebra");
    enumerate->add_option("--order", en.order, "n")->required()->check(CLI::PositiveNumber);
    auto* codes = enumerate->add_flag("--codes", en.codes, "Count (and list) the square codes of length n");
    auto* algebras = enumerate->add_flag("--algebras", en.algebras, "Census of BCK-algebras of order n");
    auto* family = enumerate->add_flag("--family", en.family, "Family algebra on the square codes of length n");
    codes->excludes(algebras)->excludes(family);
    algebras->excludes(family);
    enumerate->add_flag("--list", en.list, "With --codes: print every code");
    enumerate->add_option("--max-order", en.max_order, "Override the size bound");
    enumerate->add_option("--workers", en.workers, "Worker threads for the census")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }
    if (enumerate->parsed() && !(en.codes || en.algebras || en.family)) {
        err << "error: enumerate needs one of --codes, --algebras, --family\n";
        return kInputError;
    }

    Context ctx{in, out, err, json};
    try {
        if (verify->parsed()) return cmd_verify(file, ctx);
        if (encode->parsed()) return cmd_encode(file, function_file, ctx);
        if (construct->parsed()) return cmd_construct(file, lax, ctx);
        if (lift->parsed()) return cmd_lift(file, ctx);
        return cmd_enumerate(en, ctx);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPropertyFailure;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace bckcode::cli
