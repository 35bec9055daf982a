use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use splitalg::freealg::{
    basis, parse_key, product, AlgebraError, As, Dend, Element, Family, Mag, Op, Tridend, TwoAs, Zinbiel,
};
use splitalg::hopf::{antipode, coproduct, format_tensor, primitive_basis, Bialgebra};
use splitalg::presentations::{
    builtin, check_coherence, check_compatibility, compatible_space, emit, parse_presentation, star_is_associative,
    Presentation,
};
use splitalg::series::{
    alternating_integer_check, known_series, parse_series, PowerSeries, DEFAULT_ORDER, KNOWN_SERIES,
};
use splitalg::Rational;

type Q = Rational;

#[derive(Parser)]
#[command(
    name = "splitalg",
    version,
    about = "Free split-associative algebras, their Hopf structure, and presentation checks"
)]
struct Cli {
    /// Render ⊗ as "(x)"
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis counts of the free algebra, one line per degree
    Dims {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        generators: usize,
    },
    /// Product of two basis elements, e.g. `op --family dend star "(|,|)" "(|,|)"`
    Op {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(value_parser = parse_op)]
        op: Op,
        lhs: String,
        rhs: String,
    },
    /// Coproduct of a basis element
    Coproduct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        key: String,
    },
    /// Antipode of a basis element
    Antipode {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        key: String,
    },
    /// Basis of the primitive elements of one degree
    Primitives {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        generators: usize,
    },
    /// Compatibility, coherence and star associativity of a presentation
    Check {
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        presentation: Option<PathBuf>,
        /// One of: dend dipt noname admissible predend tridend 2as quadri
        #[arg(long)]
        builtin: Option<String>,
        /// Print the presentation in file format instead of checking it
        #[arg(long)]
        emit: bool,
    },
    /// Compositional inverse or alternating-sign test of a series
    Series {
        /// Coefficient list `[a0, a1, ...]`, an expression in x, or a known name
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value_t = SeriesAction::Invert)]
        action: SeriesAction,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run the acceptance suite
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesAction {
    Invert,
    CheckAlternating,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

fn parse_op(s: &str) -> Result<Op, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

/// Why a command did not succeed.
enum Failure {
    /// a check ran and failed (exit 1)
    Verdict,
    /// bad input (exit 2)
    Usage(String),
    /// an undefined product such as `1 ≺ 1` (exit 3)
    Undefined(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::UndefinedUnitProduct(_) => Failure::Undefined(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

macro_rules! dispatch {
    ($family:expr, $f:ident ( $($arg:expr),* )) => {
        match $family {
            Family::Dend => $f::<Dend>($($arg),*),
            Family::Tridend => $f::<Tridend>($($arg),*),
            Family::TwoAs => $f::<TwoAs>($($arg),*),
            Family::Zinbiel => $f::<Zinbiel>($($arg),*),
            Family::As => $f::<As>($($arg),*),
            Family::Mag => $f::<Mag>($($arg),*),
        }
    };
}

fn key<A: Bialgebra>(text: &str) -> Result<Element<A, Q>, Failure> {
    parse_key::<A>(text)
        .map(Element::<A, Q>::basis)
        .map_err(|e| Failure::Usage(format!("cannot parse '{}': {}", text, e)))
}

fn dims<A: Bialgebra>(degree: usize, generators: usize) -> Run {
    for n in 1..=degree {
        println!("{} {}", n, basis::<A>(n, generators)?.len());
    }
    Ok(())
}

fn op<A: Bialgebra>(op: Op, lhs: &str, rhs: &str) -> Run {
    println!("{}", product::<A, Q>(op, &key::<A>(lhs)?, &key::<A>(rhs)?)?);
    Ok(())
}

fn cmd_coproduct<A: Bialgebra>(text: &str, ascii: bool) -> Run {
    println!("{}", format_tensor::<A, Q>(&coproduct::<A, Q>(&key::<A>(text)?), ascii));
    Ok(())
}

fn cmd_antipode<A: Bialgebra>(text: &str) -> Run {
    println!("{}", antipode::<A, Q>(&key::<A>(text)?));
    Ok(())
}

fn primitives<A: Bialgebra>(degree: usize, generators: usize) -> Run {
    let basis = primitive_basis::<A, Q>(degree, generators)?;
    println!("dimension {}", basis.len());
    for p in basis {
        println!("{}", p);
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn check(p: &Presentation<Q>) -> Run {
    let mut ok = true;
    let compat = check_compatibility(p);
    println!("compatibility: {}", verdict(compat.passed()));
    for w in &compat.witnesses {
        println!("  relation {} at {}: {}", w.relation + 1, w.pattern, w.description);
    }
    ok &= compat.passed();
    match check_coherence(p) {
        Ok(rep) => {
            println!("coherence: {}", verdict(rep.passed()));
            for w in &rep.witnesses {
                let rel = p.render_relation(&p.relations()[w.relation]);
                println!("  relation {} ({}) at {}: {}", w.relation + 1, rel, w.pattern, w.description);
            }
            ok &= rep.passed();
            let assoc = star_is_associative(p).unwrap_or(false);
            println!("star associativity: {}", verdict(assoc));
            ok &= assoc;
        }
        Err(_) => {
            println!("coherence: skipped (no star)");
            println!("star associativity: skipped (no star)");
        }
    }
    println!("compatible space dimension: {}", compatible_space(p.k(), p.alpha(), p.beta()).len());
    if ok {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn cmd_check(path: Option<PathBuf>, name: Option<String>, emit_only: bool) -> Run {
    let p = match (path, name) {
        (Some(path), _) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
            parse_presentation::<Q>(&text).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?
        }
        (None, Some(name)) => builtin::<Q>(&name).map_err(|e| Failure::Usage(e.to_string()))?,
        (None, None) => return Err(Failure::Usage("give --presentation or --builtin".into())),
    };
    if emit_only {
        print!("{}", emit(&p));
        return Ok(());
    }
    check(&p)
}

fn coefficient_list(s: &PowerSeries<Q>) -> String {
    let cs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", cs.join(", "))
}

fn cmd_series(input: &str, action: SeriesAction, order: usize) -> Run {
    let known = known_series(input.trim());
    let text = known.map_or(input, |k| k.dual);
    let f: PowerSeries<Q> = parse_series(text, order).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("series: {}", f);
    match action {
        SeriesAction::CheckAlternating => {
            let ok = alternating_integer_check(&f);
            println!("alternating integer: {}", ok);
            if ok {
                Ok(())
            } else {
                Err(Failure::Verdict)
            }
        }
        SeriesAction::Invert => {
            let g = f.comp_inverse().map_err(|e| Failure::Usage(e.to_string()))?;
            println!("inverse: {}", g);
            println!("coefficients: {}", coefficient_list(&g));
            let dims: Vec<String> = g.dimensions().iter().map(|d| d.to_string()).collect();
            let tag = KNOWN_SERIES
                .iter()
                .find(|k| parse_series::<Q>(k.dual, order).is_ok_and(|s| s == f))
                .map(|k| if k.conjectural { format!(" ({}, conjectural)", k.name) } else { format!(" ({})", k.name) })
                .unwrap_or_default();
            if alternating_integer_check(&g) {
                println!("dimensions{}: {}", tag, dims.join(" "));
                println!("alternating integer: true");
            } else {
                println!("absolute values: {}", dims.join(" "));
                println!("alternating integer: false");
            }
            Ok(())
        }
    }
}

fn selftest() -> Run {
    let outcomes = splitalg::selftest::run_all();
    for o in &outcomes {
        println!("{}", o);
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ascii = cli.ascii;
    let r = match cli.command {
        Command::Dims { family, degree, generators } => dispatch!(family, dims(degree, generators)),
        Command::Op { family, op: o, lhs, rhs } => dispatch!(family, op(o, &lhs, &rhs)),
        Command::Coproduct { family, key } => dispatch!(family, cmd_coproduct(&key, ascii)),
        Command::Antipode { family, key } => dispatch!(family, cmd_antipode(&key)),
        Command::Primitives { family, degree, generators } => dispatch!(family, primitives(degree, generators)),
        Command::Check { presentation, builtin, emit } => cmd_check(presentation, builtin, emit),
        Command::Series { input, action, order } => cmd_series(&input, action, order),
        Command::Selftest => selftest(),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Undefined(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}
