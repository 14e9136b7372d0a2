use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quadlie::analysis::{analyze, chain_dot, format, AlgebraFile};
use quadlie::constructions as c;
use quadlie::derivations::{derivations, inner_derivations, skew_derivations};
use quadlie::forms::{
    duality_report, find_quadratic_structure, invariant_forms, omega_dual, validate_quadratic,
    Metrizability,
};
use quadlie::linalg::parse_scalar;
use quadlie::sampling;
use quadlie::{BilinearForm, LieAlgebra, QuadraticAlgebra};

#[derive(Parser)]
#[command(name = "quadlie", version, about = "Exact analysis of quadratic Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named family and write it in the algebra file format.
    #[command(allow_negative_numbers = true)]
    Build {
        /// abelian, heisenberg, free-nilpotent, n23q, n32q, oscillator, gen-oscillator,
        /// tstar0, tensor-trunc, sl2, a-sl2, n23s, n32s, split-h3
        family: String,
        /// Family parameters. Negative fractions go after `--`.
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate antisymmetry, Jacobi and (when present) the form.
    Check { file: PathBuf },
    /// Structural report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Invariant forms and metrizability.
    Forms {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Derivation dimensions.
    Der {
        file: PathBuf,
        #[arg(long)]
        skew: bool,
    },
    /// DOT diagram of the named characteristic ideals.
    Dot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomized check of the duality I -> I^perp on ideals.
    Dualcheck {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<quadlie::Error> for Failure {
    fn from(e: quadlie::Error) -> Self {
        match e {
            quadlie::Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| usage(format!("missing parameter <{name}>")))?;
    raw.parse()
        .map_err(|_| usage(format!("invalid parameter <{name}>: '{raw}'")))
}

fn base_algebra(name: &str) -> Result<LieAlgebra, Failure> {
    let path = Path::new(name);
    if path.exists() {
        return Ok(read(path)?.algebra);
    }
    match name {
        "sl2" => Ok(c::sl2()),
        "n23" => Ok(c::free_nilpotent(2, 3)?),
        "n32" => Ok(c::free_nilpotent(3, 2)?),
        _ => match name.strip_prefix('h').and_then(|n| n.parse().ok()) {
            Some(n) => Ok(c::heisenberg(n)?),
            None => Err(usage(format!(
                "tstar0 base must be a file, sl2, n23, n32 or hN; got '{name}'"
            ))),
        },
    }
}

fn build(family: &str, params: &[String]) -> Result<(LieAlgebra, Option<BilinearForm>), Failure> {
    let plain = |l: LieAlgebra| (l, None);
    let quad = |q: QuadraticAlgebra| {
        let (l, f) = q.into_parts();
        (l, Some(f))
    };
    Ok(match family {
        "abelian" => quad(c::abelian_quadratic(param(params, 0, "n")?)),
        "heisenberg" => plain(c::heisenberg(param(params, 0, "n")?)?),
        "free-nilpotent" => plain(c::free_nilpotent(param(params, 0, "d")?, param(params, 1, "t")?)?),
        "n23q" => quad(c::n23_quadratic()),
        "n32q" => quad(c::n32_quadratic()),
        "oscillator" => quad(c::oscillator_d4()),
        "gen-oscillator" => {
            if params.is_empty() {
                return Err(usage("gen-oscillator needs at least one λ"));
            }
            let lambdas = params
                .iter()
                .map(|p| parse_scalar(p).map_err(|e| usage(format!("invalid λ '{p}': {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            quad(c::generalized_oscillator(&lambdas)?)
        }
        "tstar0" => {
            let base = params.first().ok_or_else(|| usage("missing parameter <base>"))?;
            quad(c::tstar_extension(&base_algebra(base)?, None)?)
        }
        "tensor-trunc" => quad(c::tensor_truncated(&c::sl2_killing(), param(params, 0, "n")?)?),
        "sl2" => quad(c::sl2_killing()),
        "a-sl2" => quad(c::a_sl2(param(params, 0, "m")?)?),
        "n23s" => quad(c::n23s()),
        "n32s" => quad(c::n32s()),
        "split-h3" => plain(c::split_h3_extension()),
        other => return Err(usage(format!("unknown family '{other}'"))),
    })
}

/// The file's form when quadratic, otherwise a solver witness.
fn quadratic_of(file: AlgebraFile, seed: u64) -> Result<QuadraticAlgebra, Failure> {
    if let Some(f) = &file.form {
        if validate_quadratic(&file.algebra, f).is_empty() {
            return Ok(QuadraticAlgebra::new(file.algebra, file.form.unwrap())?);
        }
    }
    match find_quadratic_structure(&file.algebra, seed) {
        Metrizability::Quadratic { algebra, .. } => Ok(algebra),
        Metrizability::NotQuadratic(cert) => Err(Failure::Runtime(format!(
            "no nondegenerate invariant form (certificate: {cert})"
        ))),
        Metrizability::Undecided { .. } => Err(Failure::Runtime("metrizability undecided".into())),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Cmd::Build {
            family,
            params,
            output,
        } => {
            let (l, f) = build(&family, &params)?;
            write_or_print(output.as_deref(), &format::serialize(&l, f.as_ref()))?;
            Ok(0)
        }
        Cmd::Check { file } => {
            let f = read(&file)?;
            let mut ok = true;
            for d in f.algebra.validate() {
                println!("{d}");
                ok = false;
            }
            if let Some(form) = &f.form {
                for d in validate_quadratic(&f.algebra, form) {
                    println!("{d}");
                    ok = false;
                }
            }
            println!("{}", if ok { "ok" } else { "invalid" });
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Analyze { file, json, seed } => {
            let f = read(&file)?;
            if !f.algebra.is_valid() {
                println!("not a Lie algebra; run `check` for details");
                return Ok(1);
            }
            let report = analyze(&f.algebra, f.form.as_ref(), seed);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{report}");
            }
            Ok(0)
        }
        Cmd::Forms { file, seed } => {
            let f = read(&file)?;
            println!("invariant symmetric forms: dim {}", invariant_forms(&f.algebra).len());
            match find_quadratic_structure(&f.algebra, seed) {
                Metrizability::Quadratic { algebra, .. } => {
                    println!("quadratic: nondegenerate invariant form found");
                    let text = format::serialize(algebra.algebra(), Some(algebra.form()));
                    for line in text.lines().filter(|l| l.starts_with("form ")) {
                        println!("{line}");
                    }
                    Ok(0)
                }
                Metrizability::NotQuadratic(cert) => {
                    println!("no nondegenerate invariant form (certificate: {cert})");
                    Ok(1)
                }
                Metrizability::Undecided { .. } => {
                    println!("undecided: sampling found no nondegenerate form and no proof");
                    Ok(1)
                }
            }
        }
        Cmd::Der { file, skew } => {
            let f = read(&file)?;
            if skew {
                let form = f
                    .form
                    .as_ref()
                    .ok_or_else(|| usage("--skew needs a form in the file"))?;
                let s = skew_derivations(&f.algebra, form)?;
                println!("skew derivations: dim {}", s.dim());
            } else {
                println!("derivations: dim {}", derivations(&f.algebra).dim());
            }
            println!("inner derivations: dim {}", inner_derivations(&f.algebra).dim());
            Ok(0)
        }
        Cmd::Dot { file, output } => {
            let f = read(&file)?;
            let form = f
                .form
                .as_ref()
                .filter(|g| validate_quadratic(&f.algebra, g).is_empty());
            write_or_print(output.as_deref(), &chain_dot(&f.algebra, form))?;
            Ok(0)
        }
        Cmd::Dualcheck { file, seed, trials } => {
            let q = quadratic_of(read(&file)?, seed)?;
            let l = q.algebra();
            let mut rng = sampling::rng(seed);
            let ideals: Vec<_> = (0..trials).map(|_| sampling::random_ideal(l, &mut rng)).collect();
            let mut failures = 0;
            for (k, i) in ideals.iter().enumerate() {
                let p = omega_dual(&q, i)?;
                if !l.is_ideal(&p)? || q.perp(&p) != *i {
                    failures += 1;
                    println!("trial {k}: duality fails");
                }
                let j = ideals[(k + 1) % ideals.len()].sum(i)?;
                if !p.contains(&q.perp(&j))? {
                    failures += 1;
                    println!("trial {k}: order reversal fails");
                }
            }
            let report = duality_report(&q, &[])?;
            for line in &report.failures {
                println!("{line}");
            }
            let ok = failures == 0 && report.all_hold();
            println!(
                "dualcheck: {trials} trials, {failures} failures, central series duality {}",
                if report.all_hold() { "holds" } else { "fails" }
            );
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
