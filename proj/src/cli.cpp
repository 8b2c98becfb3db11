#include "diffconv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "diffconv/channel.hpp"
#include "diffconv/pgz.hpp"

namespace diffconv {

namespace {

ParseMode parse_mode() {
    const char* v = std::getenv("DIFFCONV_STRICT");
    return v != nullptr && std::string_view(v) == "1" ? ParseMode::strict : ParseMode::lenient;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'", 0);
    out << content;
    if (!out) throw ParseError("write to '" + path + "' failed", 0);
}

void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
    if (out_path.empty()) out << content;
    else write_file(out_path, content);
}

std::vector<int> parse_positions(const std::string& text) {
    std::vector<int> positions;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ','))
        try {
            positions.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw ParseError("invalid position '" + piece + "'", 0);
        }
    return positions;
}

std::vector<RatFun> parse_value_list(const std::string& text, Prime p, ParseMode mode) {
    std::vector<RatFun> values;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ';')) values.push_back(parse_ratfun(piece, p, mode));
    return values;
}

std::string join_values(const std::vector<RatFun>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += format_ratfun(values[i]);
    }
    return out;
}

std::string join_positions(const std::vector<int>& positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(positions[i]);
    }
    return out;
}

CodeSpec load_spec(const std::string& path, ParseMode mode) {
    return parse_code_spec(read_file(path), mode);
}

std::vector<RatFun> load_word(const std::string& path, const CodeSpec& spec, ParseMode mode) {
    std::vector<RatFun> w = parse_word(read_file(path), spec.prime(), mode);
    if (w.size() != spec.prime().value())
        throw ParseError("word in '" + path + "' must have p = " +
                             std::to_string(spec.prime().value()) + " lines",
                         0);
    return w;
}

Message load_message(const std::string& path, const CodeSpec& spec, ParseMode mode) {
    Message m{parse_word(read_file(path), spec.prime(), mode)};
    if (static_cast<int>(m.coeffs.size()) != spec.dimension())
        throw ParseError("message in '" + path + "' must have " +
                             std::to_string(spec.dimension()) + " lines",
                         0);
    return m;
}

std::string decode_report(const DecodeResult& res, const Codeword& corrected,
                          const Message& recovered) {
    std::string text = "status=";
    text += res.status == DecodeStatus::zero_error ? "zero_error" : "corrected";
    text += "\npositions=" + join_positions(res.error.positions);
    text += "\nvalues=" + join_values(res.error.values);
    text += "\ncodeword=" + join_values(corrected.coords);
    text += "\nmessage=" + join_values(recovered.coeffs);
    text += '\n';
    return text;
}

struct CliOptions {
    std::string spec_path;
    std::string in_path;
    std::string out_path;
    std::string positions;
    std::string values;
    std::uint32_t p = 0;
    std::string delta_z;
    std::string alpha;
    int d = 0;
    int r = 0;
    int trials = 100;
    int errors = 0;
    int degree_bound = 2;
    std::uint64_t seed = 0;
    std::string demo_which;
    bool demo_perturb = false;
};

int dispatch(const std::string& command, const CliOptions& opt, std::ostream& out,
             std::ostream& err) {
    const ParseMode mode = parse_mode();

    if (command == "new-code") {
        const Prime p(opt.p);
        const CodeSpec spec = CodeSpec::build(opt.p, parse_ratfun(opt.delta_z, p, mode),
                                              parse_ratfun(opt.alpha, p, mode), opt.d, opt.r);
        emit(opt.out_path, format_code_spec(spec), out);
        err << "g = " << format_ore_pretty(spec.generator()) << '\n';
        return exit_code::ok;
    }
    if (command == "encode") {
        const CodeSpec spec = load_spec(opt.spec_path, mode);
        const Codeword c = encode(load_message(opt.in_path, spec, mode), spec);
        emit(opt.out_path, format_word(c.coords), out);
        return exit_code::ok;
    }
    if (command == "corrupt") {
        const CodeSpec spec = load_spec(opt.spec_path, mode);
        const std::vector<RatFun> word = load_word(opt.in_path, spec, mode);
        const std::vector<int> positions = parse_positions(opt.positions);
        const std::vector<RatFun> values = parse_value_list(opt.values, spec.prime(), mode);
        const auto y = inject_errors(Codeword{word}, positions, values);
        emit(opt.out_path, format_word(y), out);
        return exit_code::ok;
    }
    if (command == "decode") {
        const CodeSpec spec = load_spec(opt.spec_path, mode);
        const std::vector<RatFun> y = load_word(opt.in_path, spec, mode);
        const DecodeResult res = decode(y, spec);
        if (res.status == DecodeStatus::beyond_capacity) {
            err << "beyond capacity: more than tau errors detected\n";
            return exit_code::beyond_capacity;
        }
        const auto [corrected, recovered] = correct(y, spec);
        emit(opt.out_path, decode_report(res, corrected, recovered), out);
        return exit_code::ok;
    }
    if (command == "roundtrip") {
        const CodeSpec spec = load_spec(opt.spec_path, mode);
        const Message m = load_message(opt.in_path, spec, mode);
        const Codeword c = encode(m, spec);
        std::vector<RatFun> y = c.coords;
        if (!opt.positions.empty())
            y = inject_errors(c, parse_positions(opt.positions),
                              parse_value_list(opt.values, spec.prime(), mode));
        const auto [corrected, recovered] = correct(y, spec);
        if (!(corrected == c) || !(recovered == m)) {
            err << "roundtrip mismatch\n";
            return exit_code::mismatch;
        }
        out << "roundtrip ok: " << join_positions(parse_positions(opt.positions)) << '\n';
        return exit_code::ok;
    }
    if (command == "trials") {
        const CodeSpec spec = load_spec(opt.spec_path, mode);
        const TrialConfig cfg{opt.trials, opt.errors, opt.degree_bound, opt.seed};
        out << format_trial_report(run_trials(spec, cfg));
        return exit_code::ok;
    }
    if (command == "demo") return run_demo(opt.demo_which, opt.demo_perturb, out, err);
    err << "unknown command\n";
    return exit_code::mismatch;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reed-Solomon differential convolutional codes over F_p(z)"};
    app.require_subcommand(1);
    CliOptions opt;

    auto* nc = app.add_subcommand("new-code", "build a code and write its description file");
    nc->add_option("--out", opt.out_path, "output spec file (stdout when omitted)");
    nc->add_option("--p", opt.p, "prime field size, 3 <= p <= 31")->required();
    nc->add_option("--delta-z", opt.delta_z, "delta(z) as a rational function")->required();
    nc->add_option("--alpha", opt.alpha, "cyclic vector")->required();
    nc->add_option("--d", opt.d, "designed Hamming distance")->required();
    nc->add_option("--r", opt.r, "orbit offset (decoding needs r = 0)");

    auto* enc = app.add_subcommand("encode", "encode a message file");
    enc->add_option("--spec", opt.spec_path)->required();
    enc->add_option("--in", opt.in_path, "message file, one coefficient per line")->required();
    enc->add_option("--out", opt.out_path, "codeword file (stdout when omitted)");

    auto* cor = app.add_subcommand("corrupt", "add errors to a stored word");
    cor->add_option("--spec", opt.spec_path)->required();
    cor->add_option("--in", opt.in_path)->required();
    cor->add_option("--positions", opt.positions, "comma-separated positions")->required();
    cor->add_option("--values", opt.values, "semicolon-separated values")->required();
    cor->add_option("--out", opt.out_path);

    auto* dec = app.add_subcommand("decode", "decode a received word");
    dec->add_option("--spec", opt.spec_path)->required();
    dec->add_option("--in", opt.in_path)->required();
    dec->add_option("--out", opt.out_path);

    auto* rt = app.add_subcommand("roundtrip", "encode, corrupt, decode and compare");
    rt->add_option("--spec", opt.spec_path)->required();
    rt->add_option("--in", opt.in_path, "message file")->required();
    rt->add_option("--positions", opt.positions);
    rt->add_option("--values", opt.values);

    auto* tr = app.add_subcommand("trials", "randomized decoding batches");
    tr->add_option("--spec", opt.spec_path)->required();
    tr->add_option("--trials", opt.trials);
    tr->add_option("--errors", opt.errors, "errors planted per trial");
    tr->add_option("--degree-bound", opt.degree_bound);
    tr->add_option("--seed", opt.seed);

    auto* dm = app.add_subcommand("demo", "replay a worked example against golden values");
    dm->add_option("which", opt.demo_which, "p11 or p5")->required();
    dm->add_flag("--perturb", opt.demo_perturb, "negative control: corrupt one golden value");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::ostringstream devnull;
        const int code = app.exit(e, devnull, err);
        return code == 0 ? exit_code::ok : code;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const NotCyclicVector& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::not_cyclic;
    } catch (const NotACodeword& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::not_codeword;
    } catch (const BeyondCapacity& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::beyond_capacity;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::out_of_range;
    } catch (const FieldError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::out_of_range;
    } catch (const TrialMismatch& e) {
        err << e.what();
        return exit_code::mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::mismatch;
    }
}

}  // namespace diffconv
