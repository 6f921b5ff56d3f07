//! Command-line surface for the Egyptian-fraction and fractal toolkit.
//!
//! Exit codes: 0 success (or the queried property holds), 1 violation or a
//! false membership/linearity verdict, 2 usage or parse errors, 3 resource
//! guards. Results go to stdout in stable line formats; diagnostics go to
//! stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use efrac_core::egyptian::{
    add_general, check_linear_z2, check_linear_z3, from_digits2, from_digits3, greedy_expand,
    sub_general, LinearityReport,
};
use efrac_core::fractal::{sierpinski_member, snowflake_member, ApproximantSpec, Fractal, Point};
use efrac_core::numeral::{
    dual_representations, format_numeral, frac_value2, frac_value3, parse_numeral,
    value_to_digits2, value_to_digits3, Base, NumeralString,
};
use efrac_core::render::{ImageFormat, RenderJob};
use efrac_core::verify::{
    verify_lemma_oracles, verify_prop_sum2, verify_prop_sum3, verify_theorem_main,
    verify_theorem_snowflake,
};
use efrac_core::{DigitVec2, DigitVec3, EgyptianFraction, Error, Rational, VerificationReport};

#[derive(Parser)]
#[command(
    name = "efrac",
    version,
    about = "Egyptian-fraction algebra, digit-vector linearity checks, and exact fractal oracles",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy expansion of p/q in (0,1) into distinct unit fractions.
    Expand {
        /// Rational in the form p/q.
        value: String,
    },
    /// Sum of two standard Egyptian fractions (e.g. "1/2+1/3").
    Sum { left: String, right: String },
    /// Difference of two Egyptian fractions; the result may carry signs.
    Sub { left: String, right: String },
    /// Linearity report for a pair of digit vectors.
    Check {
        /// Digit alphabet: 2 for {0,1}, 3 for {1,0,T}.
        #[arg(long, default_value_t = 2)]
        base: u32,
        /// First digit vector, index 1 leftmost (e.g. "101" or "10T").
        x: String,
        /// Second digit vector.
        y: String,
    },
    /// Convert between rationals, digit vectors, numerals, and Egyptian
    /// fractions.
    Encode {
        /// Digit alphabet for rational or digit-string inputs.
        #[arg(long, default_value_t = 2)]
        base: u32,
        /// A rational "3/8", a digit string "101"/"10T", or a numeral
        /// "[0.101]_2".
        input: String,
    },
    /// Fractal membership, rendering, and linearity clouds.
    Fractal {
        #[command(subcommand)]
        command: FractalCommand,
    },
    /// Exhaustive verification of the propositions and oracle equivalences.
    Verify {
        /// Property to check.
        #[arg(long, value_enum)]
        prop: Prop,
        /// Digit length N of the enumeration (defaults per property).
        #[arg(long)]
        depth: Option<u32>,
        /// Extra geometric depth margin for the theorem checks.
        #[arg(long, default_value_t = 2)]
        extra_depth: u32,
        /// Worker threads; 0 means all available cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the machine-readable summary line to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FractalCommand {
    /// Decide membership of a point in a depth-n approximant.
    Member {
        #[arg(long, value_enum)]
        set: Set,
        #[arg(long, default_value_t = 8)]
        depth: u32,
        /// Print the accepting child index per recursion level.
        #[arg(long)]
        trace: bool,
        /// Point as "p/q,p/q".
        point: String,
    },
    /// Render a depth-n approximant as SVG or PGM.
    Render {
        #[arg(long, value_enum)]
        set: Set,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, default_value_t = 512)]
        width: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render the linearity point cloud for one base and digit length.
    Cloud {
        #[arg(long, default_value_t = 2)]
        base: u32,
        #[arg(long)]
        len: u32,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, default_value_t = 512)]
        width: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Set {
    Sierpinski,
    Snowflake,
}

impl From<Set> for Fractal {
    fn from(s: Set) -> Fractal {
        match s {
            Set::Sierpinski => Fractal::Sierpinski,
            Set::Snowflake => Fractal::Snowflake,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Pgm,
}

impl From<Format> for ImageFormat {
    fn from(f: Format) -> ImageFormat {
        match f {
            Format::Svg => ImageFormat::Svg,
            Format::Pgm => ImageFormat::Pgm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Prop {
    Sum2,
    Sum3,
    Thm1,
    Thm2,
    Lemmas,
}

const EXIT_OK: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Resource(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn fail(err: Error) -> u8 {
    eprintln!("efrac: {err}");
    exit_for(&err)
}

fn parse_base(base: u32) -> Result<Base, Error> {
    match base {
        2 => Ok(Base::Two),
        3 => Ok(Base::Balanced3),
        other => Err(Error::Domain(format!("base must be 2 or 3, got {other}"))),
    }
}

fn main() -> ExitCode {
    // clap exits with code 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Expand { value } => cmd_expand(&value),
        Command::Sum { left, right } => cmd_sum(&left, &right),
        Command::Sub { left, right } => cmd_sub(&left, &right),
        Command::Check { base, x, y } => cmd_check(base, &x, &y),
        Command::Encode { base, input } => cmd_encode(base, &input),
        Command::Fractal { command } => match command {
            FractalCommand::Member {
                set,
                depth,
                trace,
                point,
            } => cmd_member(set, depth, trace, &point),
            FractalCommand::Render {
                set,
                depth,
                format,
                width,
                out,
            } => cmd_render(set, depth, format, width, &out),
            FractalCommand::Cloud {
                base,
                len,
                format,
                width,
                out,
            } => cmd_cloud(base, len, format, width, &out),
        },
        Command::Verify {
            prop,
            depth,
            extra_depth,
            jobs,
            out,
        } => cmd_verify(prop, depth, extra_depth, jobs, out.as_deref()),
    }
}

fn cmd_expand(value: &str) -> u8 {
    let parsed: Rational = match value.parse() {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    match greedy_expand(&parsed) {
        Ok(fraction) => {
            println!("{fraction}");
            EXIT_OK
        }
        Err(e) => fail(e),
    }
}

fn cmd_sum(left: &str, right: &str) -> u8 {
    let go = || -> Result<EgyptianFraction, Error> {
        add_general(&left.parse()?, &right.parse()?)
    };
    match go() {
        Ok(result) => {
            println!("{result}");
            EXIT_OK
        }
        Err(e) => fail(e),
    }
}

fn cmd_sub(left: &str, right: &str) -> u8 {
    let go = || -> Result<EgyptianFraction, Error> {
        sub_general(&left.parse()?, &right.parse()?)
    };
    match go() {
        Ok(result) => {
            println!("{result}");
            EXIT_OK
        }
        Err(e) => fail(e),
    }
}

fn print_linearity(report: &LinearityReport) {
    println!("lhs = {}", report.lhs);
    println!("rhs = {}", report.rhs);
    println!("z = {}", report.z);
    if let Some(sigma_z) = &report.sigma_z {
        println!("sigma_z = {sigma_z}");
    }
    println!("linear = {}", if report.linear { "yes" } else { "no" });
}

fn cmd_check(base: u32, x: &str, y: &str) -> u8 {
    let report = match parse_base(base) {
        Ok(Base::Two) => {
            let parsed = x
                .parse::<DigitVec2>()
                .and_then(|x| Ok((x, y.parse::<DigitVec2>()?)));
            match parsed {
                Ok((x, y)) => check_linear_z2(&x, &y),
                Err(e) => return fail(e),
            }
        }
        Ok(Base::Balanced3) => {
            let parsed = x
                .parse::<DigitVec3>()
                .and_then(|x| Ok((x, y.parse::<DigitVec3>()?)));
            match parsed {
                Ok((x, y)) => check_linear_z3(&x, &y),
                Err(e) => return fail(e),
            }
        }
        Err(e) => return fail(e),
    };
    print_linearity(&report);
    if report.linear {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

/// What kind of value an `encode` argument denotes.
enum EncodeInput {
    Numeral(NumeralString),
    Digits2(DigitVec2),
    Digits3(DigitVec3),
    Value(Rational),
}

fn classify_encode_input(base: Base, input: &str) -> Result<EncodeInput, Error> {
    if input.starts_with('[') {
        return Ok(EncodeInput::Numeral(parse_numeral(input)?));
    }
    if input.contains('/') || input.starts_with('-') {
        return Ok(EncodeInput::Value(input.parse()?));
    }
    if input.chars().all(|c| matches!(c, '0' | '1' | 'T')) {
        return Ok(match base {
            Base::Two => EncodeInput::Digits2(input.parse()?),
            Base::Balanced3 => EncodeInput::Digits3(input.parse()?),
        });
    }
    Ok(EncodeInput::Value(input.parse()?))
}

fn cmd_encode(base: u32, input: &str) -> u8 {
    let base = match parse_base(base) {
        Ok(b) => b,
        Err(e) => return fail(e),
    };
    let classified = match classify_encode_input(base, input) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let (base, value) = match &classified {
        EncodeInput::Numeral(n) => (n.base, n.value()),
        EncodeInput::Digits2(v) => (Base::Two, frac_value2(v)),
        EncodeInput::Digits3(v) => (Base::Balanced3, frac_value3(v)),
        EncodeInput::Value(v) => (base, v.clone()),
    };
    println!("value = {value}");
    // integers get their balanced-ternary reading; fractional values get
    // digit vectors, numerals, and the Egyptian reading of h
    if value.is_integer() && base == Base::Balanced3 && !value.is_zero() {
        let digits = efrac_core::numeral::int_to_balanced_ternary(value.numer());
        let numeral = NumeralString {
            base,
            int_digits: digits.iter().rev().copied().collect(),
            frac_digits: Vec::new(),
        };
        println!("numeral = {}", format_numeral(&numeral));
        return EXIT_OK;
    }
    let finite: Result<(String, EgyptianFraction), Error> = match base {
        Base::Two => value_to_digits2(&value, 64).map(|v| (v.to_string(), from_digits2(&v))),
        Base::Balanced3 => {
            value_to_digits3(&value, 64).map(|v| (v.to_string(), from_digits3(&v)))
        }
    };
    match finite {
        Ok((digits, egyptian)) => {
            println!("digits = {digits}");
            let numeral = NumeralString {
                base,
                int_digits: vec![0],
                frac_digits: digits
                    .chars()
                    .map(|c| match c {
                        'T' => -1,
                        '1' => 1,
                        _ => 0,
                    })
                    .collect(),
            };
            println!("numeral = {}", format_numeral(&numeral));
            println!("egyptian = {egyptian}");
            println!("sigma = {}", egyptian.sigma());
            EXIT_OK
        }
        Err(Error::NotFinitelyRepresentable(_)) => {
            println!("digits = none");
            let duals = dual_representations(&value, base);
            if duals.is_empty() {
                println!("dual = none");
            }
            for d in &duals {
                println!("dual = {d}");
            }
            EXIT_OK
        }
        Err(e) => fail(e),
    }
}

fn cmd_member(set: Set, depth: u32, trace: bool, point: &str) -> u8 {
    let p: Point = match point.parse() {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let membership = match Fractal::from(set) {
        Fractal::Sierpinski => sierpinski_member(&p, depth),
        Fractal::Snowflake => match snowflake_member(&p, depth) {
            Ok(m) => m,
            Err(e) => return fail(e),
        },
    };
    if membership.member {
        println!("member");
        if trace {
            let steps: Vec<String> = membership
                .trace
                .unwrap_or_default()
                .iter()
                .map(|i| i.to_string())
                .collect();
            println!("trace: {}", steps.join(","));
        }
        EXIT_OK
    } else {
        println!("not member");
        EXIT_FALSE
    }
}

fn write_output(path: &std::path::Path, bytes: &[u8]) -> u8 {
    match std::fs::write(path, bytes) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("efrac: cannot write {}: {e}", path.display());
            EXIT_USAGE
        }
    }
}

fn cmd_render(set: Set, depth: u32, format: Format, width: u32, out: &std::path::Path) -> u8 {
    let job = RenderJob::approximant(
        ApproximantSpec::new(set.into(), depth),
        format.into(),
        width,
    );
    if let Err(e) = job.validate() {
        return fail(e);
    }
    match job.render() {
        Ok(bytes) => {
            let code = write_output(out, &bytes);
            if code == EXIT_OK {
                println!("wrote {}", out.display());
            }
            code
        }
        Err(e) => fail(e),
    }
}

fn cmd_cloud(base: u32, len: u32, format: Format, width: u32, out: &std::path::Path) -> u8 {
    let base = match parse_base(base) {
        Ok(b) => b,
        Err(e) => return fail(e),
    };
    let job = RenderJob::cloud(base, len, format.into(), width);
    if let Err(e) = job.validate() {
        return fail(e);
    }
    match job.render() {
        Ok(bytes) => {
            let code = write_output(out, &bytes);
            if code == EXIT_OK {
                println!("wrote {}", out.display());
            }
            code
        }
        Err(e) => fail(e),
    }
}

fn cmd_verify(
    prop: Prop,
    depth: Option<u32>,
    extra_depth: u32,
    jobs: usize,
    out: Option<&std::path::Path>,
) -> u8 {
    let result: Result<VerificationReport, Error> = match prop {
        Prop::Sum2 => verify_prop_sum2(depth.unwrap_or(10), jobs),
        Prop::Sum3 => verify_prop_sum3(depth.unwrap_or(6), jobs),
        Prop::Thm1 => verify_theorem_main(depth.unwrap_or(8), extra_depth, jobs),
        Prop::Thm2 => verify_theorem_snowflake(depth.unwrap_or(5), extra_depth, jobs),
        Prop::Lemmas => verify_lemma_oracles(depth.unwrap_or(8), jobs),
    };
    match result {
        Ok(report) => {
            println!("{report}");
            println!("{}", report.summary_line());
            if let Some(path) = out {
                let code = write_output(path, report.summary_line().as_bytes());
                if code != EXIT_OK {
                    return code;
                }
            }
            if report.pass() {
                EXIT_OK
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => fail(e),
    }
}
