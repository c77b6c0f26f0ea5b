use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use whitehead_core::filling::{
    exchange_filling, filling_shape, find_fillings_with, is_filling_with_seed, FillingShape,
    SearchOptions, DEFAULT_SEED,
};
use whitehead_core::generators::{
    cross_polytope_boundary, rp2_six, rp2_skeleton, simplex_boundary, simplex_skeleton,
};
use whitehead_core::whitehead::graded::format_terms;
use whitehead_core::whitehead::{
    derive_identity, graded_lie_check, render, specialize_spheres, sphere_identity, Format,
    Orderings, SphereGrading, WhiteheadIdentity,
};
use whitehead_core::{parse_complex, Error, Simplex, SimplicialComplex};

#[derive(Parser)]
#[command(name = "whitehead", version, about = "Fillings of simplicial complexes and Whitehead product identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Facet-list file.
    file: Option<PathBuf>,

    /// Built-in complex: simplex-skeleton:M,K | cross-polytope-skeleton:N |
    /// rp2-skeleton | rp2 | sphere-skeleton:simplex:M
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List minimal non-faces, one per line.
    Nonfaces {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate fillings, or check one candidate.
    Fillings {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Candidate non-faces as compact labels, e.g. "124 126 134".
        #[arg(long, value_name = "NONFACES")]
        check: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Derive a Whitehead product identity.
    Identity {
        #[command(flatten)]
        input: Input,
        /// Facet of the sphere to express through the others, e.g. "2 3 4".
        #[arg(long, value_name = "VERTICES", conflicts_with_all = ["filling_a", "filling_b", "target"])]
        omit: Option<String>,
        #[arg(long, value_name = "NONFACES", requires = "target")]
        filling_a: Option<String>,
        #[arg(long, value_name = "NONFACES", requires = "filling_a")]
        filling_b: Option<String>,
        #[arg(long, value_name = "VERTICES", requires = "filling_a")]
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Graded Jacobi identity for spheres of dimensions P1, P2, P3.
    Jacobi { p1: u32, p2: u32, p3: u32 },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Latex,
    Json,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(e: impl Display) -> Self {
        Failure { code: 1, message: e.to_string() }
    }

    fn usage(e: impl Display) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidSimplex(_)
            | Error::UncoveredVertices(_)
            | Error::ParameterRange(_)
            | Error::DegreeZero(_)
            | Error::Json(_) => Failure::usage(e),
            _ => Failure::domain(e),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// The complex and, when it is the codimension-one skeleton of a known
/// sphere, that sphere.
struct Loaded {
    complex: SimplicialComplex,
    sphere: Option<SimplicialComplex>,
}

fn generate(desc: &str) -> CliResult<Loaded> {
    let bad = || Failure::usage(format!("unknown generator {desc:?}"));
    let nums = |s: &str| -> CliResult<Vec<u32>> {
        s.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| bad())).collect()
    };
    let (name, rest) = desc.split_once(':').unwrap_or((desc, ""));
    let loaded = match (name, rest) {
        ("simplex-skeleton", args) => {
            let [m, k] = nums(args)?[..] else { return Err(bad()) };
            let complex = simplex_skeleton(m, k)?;
            let sphere = (m >= 3 && k + 3 == m).then(|| simplex_boundary(m)).transpose()?;
            Loaded { complex, sphere }
        }
        ("cross-polytope-skeleton", args) => {
            let [n] = nums(args)?[..] else { return Err(bad()) };
            let s = cross_polytope_boundary(n)?;
            Loaded { complex: s.skeleton(n as usize), sphere: Some(s) }
        }
        ("sphere-skeleton", args) => {
            let Some(("simplex", m)) = args.split_once(':') else { return Err(bad()) };
            let [m] = nums(m)?[..] else { return Err(bad()) };
            let s = simplex_boundary(m)?;
            if s.dim() == 0 {
                return Err(Failure::usage("sphere-skeleton needs m >= 3"));
            }
            Loaded { complex: s.skeleton(s.dim() - 1), sphere: Some(s) }
        }
        ("rp2-skeleton", "") => Loaded { complex: rp2_skeleton(), sphere: None },
        ("rp2", "") => Loaded { complex: rp2_six(), sphere: None },
        _ => return Err(bad()),
    };
    Ok(loaded)
}

fn load(input: &Input) -> CliResult<Loaded> {
    match (&input.file, &input.generator) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let complex = parse_complex(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(Loaded { complex, sphere: None })
        }
        (None, Some(desc)) => generate(desc),
        _ => Err(Failure::usage("give exactly one of FILE or --gen")),
    }
}

/// "4 5 6" or "4,5,6".
fn parse_vertices(s: &str) -> CliResult<Simplex> {
    let labels = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Failure::usage(format!("bad vertex {t:?}"))))
        .collect::<CliResult<Vec<u32>>>()?;
    Ok(Simplex::new(labels)?)
}

/// Whitespace-separated compact labels: "124 126" or "1,10 2,10".
fn parse_nonfaces(s: &str) -> CliResult<Vec<Simplex>> {
    s.split_whitespace().map(|t| Simplex::parse_compact(t).map_err(Failure::from)).collect()
}

fn labels(simplices: &[Simplex]) -> String {
    simplices.iter().map(Simplex::compact_label).collect::<Vec<_>>().join(" ")
}

fn cmd_nonfaces(input: &Input, json: bool) -> CliResult<String> {
    let k = load(input)?.complex;
    let nf: Vec<Vec<u32>> = k.minimal_non_faces().iter().map(|m| m.members().vertices().to_vec()).collect();
    if json {
        return Ok(serde_json::to_string(&nf).expect("plain data serializes"));
    }
    Ok(nf
        .iter()
        .map(|v| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn cmd_fillings(input: &Input, limit: usize, check: Option<&str>, seed: u64) -> CliResult<String> {
    let k = load(input)?.complex;
    if let Some(list) = check {
        let ms = parse_nonfaces(list)?;
        return match is_filling_with_seed(&k, &ms, seed) {
            Ok(f) => Ok(format!(
                "filling ({}, {} non-faces, {})",
                f.certificate().kind(),
                f.len(),
                if f.is_pure() { "pure" } else { "not pure" }
            )),
            Err(reason) => Err(Failure::domain(format!("not a filling: {reason}"))),
        };
    }
    if let FillingShape::Obstructed(h) = filling_shape(&k) {
        return Err(Failure::domain(format!("obstructed: reduced homology has torsion {:?}", h.torsion)));
    }
    let found = find_fillings_with(&k, &SearchOptions { limit, seed, max_candidates: None });
    if found.is_empty() {
        return Err(Failure::domain("no fillings found"));
    }
    Ok(found
        .iter()
        .map(|f| {
            let ms: Vec<Simplex> = f.non_faces().iter().map(|m| m.members().clone()).collect();
            format!("{}\t{}", labels(&ms), f.certificate().kind())
        })
        .collect::<Vec<_>>()
        .join("\n"))
}

fn provenance(id: &WhiteheadIdentity) -> String {
    let p = &id.provenance;
    let mut lines = vec![format!("filling A: {}", labels(&p.filling_a))];
    if let Some(b) = &p.filling_b {
        lines.push(format!("filling B: {}", labels(b)));
    }
    let coeffs: Vec<String> = p.solution.particular.iter().map(ToString::to_string).collect();
    lines.push(format!("solution: ({})", coeffs.join(", ")));
    lines.push(format!(
        "kernel: {}",
        if id.unique { "trivial".to_string() } else { format!("rank {}", p.solution.kernel.len()) }
    ));
    lines.push(format!("lhs: {}", id.lhs));
    lines.join("\n")
}

struct IdentityArgs<'a> {
    omit: Option<&'a str>,
    filling_a: Option<&'a str>,
    filling_b: Option<&'a str>,
    target: Option<&'a str>,
    format: OutputFormat,
    seed: u64,
}

fn cmd_identity(input: &Input, args: IdentityArgs<'_>) -> CliResult<String> {
    let loaded = load(input)?;
    let id = match (args.omit, args.filling_a, args.target) {
        (Some(omit), _, _) => {
            let omit = parse_vertices(omit)?;
            // a file given with --omit is read as the sphere itself
            let sphere = match (&input.file, loaded.sphere) {
                (Some(_), _) => loaded.complex,
                (None, Some(s)) => s,
                (None, None) => return Err(Failure::usage("generator has no associated sphere; use --filling-a")),
            };
            sphere_identity(&sphere, &omit)?
        }
        (None, Some(a), Some(target)) => {
            let k = &loaded.complex;
            let target = parse_vertices(target)?;
            let a = is_filling_with_seed(k, &parse_nonfaces(a)?, args.seed)
                .map_err(|e| Failure::domain(format!("filling A: {e}")))?;
            let b = match args.filling_b {
                Some(b) => is_filling_with_seed(k, &parse_nonfaces(b)?, args.seed)
                    .map_err(|e| Failure::domain(format!("filling B: {e}")))?,
                None => exchange_filling(k, &a, &target, args.seed)?,
            };
            let i = b
                .position(&target)
                .ok_or_else(|| Failure::domain(format!("target {target} is not in filling B")))?;
            derive_identity(k, &a, &b, i, &Orderings::new())?
        }
        _ => return Err(Failure::usage("give --omit, or --filling-a with --target")),
    };
    Ok(match args.format {
        OutputFormat::Text => format!("{}\n{}", render(&id, Format::Text), provenance(&id)),
        OutputFormat::Latex => render(&id, Format::Latex),
        OutputFormat::Json => render(&id, Format::Json),
    })
}

fn cmd_jacobi(ps: [u32; 3]) -> CliResult<String> {
    let grading = SphereGrading::from_list(&ps)?;
    let circle = simplex_boundary(3)?;
    let id = sphere_identity(&circle, &Simplex::new([1, 2])?)?;
    let terms = specialize_spheres(&id, &grading)?;
    let ok = graded_lie_check(&terms, &grading)?;
    let signs: Vec<&str> = terms.iter().map(|t| if t.coeff < 0 { "-" } else { "+" }).collect();
    let out = format!(
        "degrees: p1={} p2={} p3={}\n{}\nsigns: {}\noracle: {}",
        ps[0],
        ps[1],
        ps[2],
        format_terms(&terms),
        signs.join(" "),
        if ok { "ok" } else { "FAILED" }
    );
    if ok {
        Ok(out)
    } else {
        Err(Failure::domain(out))
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Nonfaces { input, json } => cmd_nonfaces(&input, json),
        Command::Fillings { input, limit, check, seed } => cmd_fillings(&input, limit, check.as_deref(), seed),
        Command::Identity { input, omit, filling_a, filling_b, target, format, seed } => cmd_identity(
            &input,
            IdentityArgs {
                omit: omit.as_deref(),
                filling_a: filling_a.as_deref(),
                filling_b: filling_b.as_deref(),
                target: target.as_deref(),
                format,
                seed,
            },
        ),
        Command::Jacobi { p1, p2, p3 } => cmd_jacobi([p1, p2, p3]),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
