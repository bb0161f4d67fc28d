//! Command-line front end for the `jdlat` library.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jdlat::coords::{
    self, enumerate_perm_vectors, roundtrip_lattice, roundtrip_perm, same_lattice_classes,
    ChainedLattice, PermVector, DEFAULT_MAX_CASES,
};
use jdlat::io::{to_json, Document, IoError, LatticeFile};
use jdlat::structures::{
    amat, antimatroid_from_perms, check_antimatroid, check_convex_geometry, dualize, geom, halojd,
    halomd, Antimatroid, ConvexGeometry, SetSystem,
};
use jdlat::{dot, jd, Lattice};

#[derive(Parser)]
#[command(
    name = "jdlat",
    version,
    about = "Join-distributive lattices and permutation coordinates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the chained lattice of a permutation vector.
    Build { permfile: String },
    /// Read the permutation vector off a lattice with chains.
    Decode { latticefile: String },
    /// Certify that decoding inverts building, exhaustively or for one file.
    Roundtrip {
        #[arg(long, requires = "k", conflicts_with = "file")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_CASES)]
        max_cases: u128,
        #[arg(required_unless_present = "n")]
        file: Option<String>,
    },
    /// List all permutation vectors of degree n with k chains.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CASES)]
        max_cases: u128,
        /// Group vectors whose lattices are isomorphic.
        #[arg(long)]
        classes: bool,
    },
    /// Test join-distributivity; exits with 4 on a negative answer.
    Check { latticefile: String },
    /// Translate between lattices, permutation vectors, antimatroids and
    /// convex geometries.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        infile: String,
    },
    /// Hasse diagram in Graphviz DOT.
    ExportDot { latticefile: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Antimatroid,
    Convexgeom,
    Lattice,
}

enum Failure {
    Certification(String),
    Parse(String),
    Precondition(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Certification(_) => 1,
            Failure::Parse(_) | Failure::Io(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Certification(m)
            | Failure::Parse(m)
            | Failure::Precondition(m)
            | Failure::Io(m) => m,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Coord(e) => Failure::Precondition(e.to_string()),
            e => Failure::Parse(e.to_string()),
        }
    }
}

fn precondition(e: impl std::fmt::Display) -> Failure {
    Failure::Precondition(e.to_string())
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_document(path: &str) -> Result<Document, Failure> {
    Ok(Document::parse(&read_input(path)?)?)
}

fn read_lattice_file(path: &str) -> Result<LatticeFile, Failure> {
    match read_document(path)? {
        Document::Lattice(f) => Ok(f),
        _ => Err(Failure::Parse(format!("{path} is not a lattice file"))),
    }
}

fn read_lattice(path: &str) -> Result<Lattice, Failure> {
    read_lattice_file(path)?
        .lattice()
        .map_err(|e| Failure::Parse(e.to_string()))
}

fn read_perms(path: &str) -> Result<PermVector, Failure> {
    match read_document(path)? {
        Document::Perms(v) => Ok(v),
        _ => Err(Failure::Parse(format!(
            "{path} is not a permutation vector"
        ))),
    }
}

fn build(permfile: &str) -> Result<Output, Failure> {
    let v = read_perms(permfile)?;
    let cl = coords::eta(&v).chained;
    cl.check_lat().map_err(precondition)?;
    Ok(Output::ok(to_json(&LatticeFile::from_chained(&cl))))
}

fn decode(latticefile: &str) -> Result<Output, Failure> {
    let cl = read_lattice_file(latticefile)?.chained()?;
    cl.check_cdf().map_err(precondition)?;
    let v = coords::xi(&cl).map_err(precondition)?;
    Ok(Output::ok(to_json(&v)))
}

fn report(passed: usize, total: usize) -> Result<Output, Failure> {
    let verdict = if passed == total { "PASS" } else { "FAIL" };
    let line = format!("{passed}/{total} {verdict}\n");
    if passed == total {
        Ok(Output::ok(line))
    } else {
        Err(Failure::Certification(line.trim_end().to_string()))
    }
}

fn certify(v: &PermVector) -> bool {
    roundtrip_perm(v) && roundtrip_lattice(&coords::eta(v).chained) == Ok(true)
}

fn roundtrip(
    n: Option<usize>,
    k: Option<usize>,
    max_cases: u128,
    file: Option<&str>,
) -> Result<Output, Failure> {
    if let (Some(n), Some(k)) = (n, k) {
        let (mut passed, mut total) = (0, 0);
        for v in enumerate_perm_vectors(n, k, max_cases).map_err(precondition)? {
            total += 1;
            passed += usize::from(certify(&v));
        }
        return report(passed, total);
    }
    let path = file.expect("clap requires a file without --n");
    let ok = match read_document(path)? {
        Document::Perms(v) => certify(&v),
        Document::Lattice(f) => {
            let cl = ChainedLattice::cdf(
                f.lattice().map_err(|e| Failure::Parse(e.to_string()))?,
                f.chains.unwrap_or_default(),
            )
            .map_err(precondition)?;
            roundtrip_lattice(&cl).map_err(precondition)?
        }
        Document::SetSystem(_) => {
            return Err(Failure::Parse(format!(
                "{path}: expected permutations or a lattice"
            )))
        }
    };
    report(usize::from(ok), 1)
}

fn enumerate(n: usize, k: usize, max_cases: u128, classes: bool) -> Result<Output, Failure> {
    let text = if classes {
        to_json(&same_lattice_classes(n, k, max_cases).map_err(precondition)?)
    } else {
        to_json(
            &enumerate_perm_vectors(n, k, max_cases)
                .map_err(precondition)?
                .collect::<Vec<_>>(),
        )
    };
    Ok(Output::ok(text))
}

fn check(latticefile: &str) -> Result<Output, Failure> {
    let l = read_lattice(latticefile)?;
    let r = jd::is_join_distributive(&l).map_err(|e| Failure::Certification(e.to_string()))?;
    let code = if r.join_distributive { 0 } else { 4 };
    Ok(Output {
        text: to_json(&r),
        code,
    })
}

fn convert(to: Target, infile: &str) -> Result<Output, Failure> {
    let text = match read_document(infile)? {
        Document::Lattice(f) => {
            let l = f.lattice().map_err(|e| Failure::Parse(e.to_string()))?;
            match to {
                Target::Antimatroid => to_json(amat(&l).map_err(precondition)?.system()),
                Target::Convexgeom => to_json(geom(&l).map_err(precondition)?.system()),
                Target::Lattice => to_json(&LatticeFile::from_lattice(&l)),
            }
        }
        Document::Perms(v) => match to {
            Target::Antimatroid => to_json(antimatroid_from_perms(&v).system()),
            Target::Convexgeom => to_json(antimatroid_from_perms(&v).dual().system()),
            Target::Lattice => to_json(&LatticeFile::from_chained(&coords::eta(&v).chained)),
        },
        Document::SetSystem(s) => convert_set_system(to, s)?,
    };
    Ok(Output::ok(text))
}

/// A system satisfying both axiom sets is read as the source kind, so that
/// `--to convexgeom` dualizes an antimatroid and `--to antimatroid`
/// dualizes a convex geometry.
fn convert_set_system(to: Target, s: SetSystem) -> Result<String, Failure> {
    let antimatroid = check_antimatroid(&s);
    let geometry = check_convex_geometry(&s);
    if let (Err(a), Err(g)) = (&antimatroid, &geometry) {
        return Err(Failure::Precondition(format!(
            "neither an antimatroid ({a}) nor a convex geometry ({g})"
        )));
    }
    let text = match to {
        Target::Antimatroid if geometry.is_ok() => to_json(&dualize(&s)),
        Target::Convexgeom if antimatroid.is_ok() => to_json(&dualize(&s)),
        Target::Antimatroid | Target::Convexgeom => to_json(&s),
        Target::Lattice => {
            let l = match Antimatroid::new(s.clone()) {
                Ok(a) => halojd(&a),
                Err(_) => halomd(&ConvexGeometry::new(s).map_err(precondition)?),
            };
            to_json(&LatticeFile::from_lattice(&l))
        }
    };
    Ok(text)
}

fn export_dot(latticefile: &str) -> Result<Output, Failure> {
    let f = read_lattice_file(latticefile)?;
    let text = if f.chains.is_some() {
        dot::chained_dot(&f.chained()?)
    } else {
        dot::lattice_dot(&f.lattice().map_err(|e| Failure::Parse(e.to_string()))?)
    };
    Ok(Output::ok(text))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Build { permfile } => build(permfile),
        Command::Decode { latticefile } => decode(latticefile),
        Command::Roundtrip {
            n,
            k,
            max_cases,
            file,
        } => roundtrip(*n, *k, *max_cases, file.as_deref()),
        Command::Enumerate {
            n,
            k,
            max_cases,
            classes,
        } => enumerate(*n, *k, *max_cases, *classes),
        Command::Check { latticefile } => check(latticefile),
        Command::Convert { to, infile } => convert(*to, infile),
        Command::ExportDot { latticefile } => export_dot(latticefile),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            None => io::stdout()
                .write_all(out.text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))?,
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("jdlat: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
