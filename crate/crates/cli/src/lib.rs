//! Command-line front end for knotforge.

pub mod plot;
mod output;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use knotforge::cfk::{self, CfkComplex};
use knotforge::grid::{self, GridDiagram, DEFAULT_MAX_GRID};
use knotforge::invariants;
use knotforge::kh::{self, DEFAULT_MAX_CROSSINGS};
use knotforge::knots::{self, BandTemplate};
use knotforge::pd::PlanarDiagram;
use knotforge::verify::{self, DEFAULT_SEED};
use knotforge::{fixtures, Error, Result};

pub use output::Format;
pub use plot::{emit_plot, render_svg, DotPlot};

#[derive(Parser, Debug)]
#[command(name = "knotforge", version, about = "Knot Floer and Khovanov invariants over GF(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also write a dot plot of the resulting group.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_GRID)]
    pub max_grid: usize,
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// CFK model complexes (JSON file, or the name of a bundled fixture).
    #[command(subcommand)]
    Cfk(CfkCmd),
    /// Grid homology.
    #[command(subcommand)]
    Grid(GridCmd),
    /// Reduced Khovanov homology over GF(2).
    #[command(subcommand)]
    Kh(KhCmd),
    /// Diagram catalog and families.
    #[command(subcommand)]
    Knots(KnotsCmd),
    /// Run a check suite: all, acceptance, a check name or its number.
    Verify { suite: String },
}

#[derive(Subcommand, Debug)]
pub enum CfkCmd {
    Validate { file: String },
    Reduce { file: String },
    /// HFK-hat ranks.
    Hfk { file: String },
    Tau { file: String },
    /// HFK-minus as an F[U]-module.
    Minus { file: String },
    Dval {
        file: String,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
    },
    Hbar {
        file: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    Obstruct { file: String },
    Lspace { file: String },
    Tensor { a: String, b: String },
    Mirror { file: String },
    Transpose { file: String },
}

/// A knot given by catalog name, PD JSON file, `family:TEMPLATE:I` or
/// `kanenobu:P:Q`.
#[derive(Args, Debug, Clone)]
pub struct KnotArg {
    #[arg(value_name = "KNOT", required_unless_present = "knot")]
    pub spec: Option<String>,
    #[arg(long = "knot", value_name = "KNOT", conflicts_with = "spec")]
    pub knot: Option<String>,
}

impl KnotArg {
    fn spec(&self) -> &str {
        self.knot.as_deref().or(self.spec.as_deref()).unwrap_or_default()
    }
}

#[derive(Args, Debug, Clone)]
pub struct GridArg {
    /// Catalog knot whose grid to use.
    #[arg(long, value_name = "NAME", required_unless_present = "grid", conflicts_with = "grid")]
    pub knot: Option<String>,
    /// Grid diagram JSON file.
    #[arg(long, value_name = "PATH")]
    pub grid: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GridCmd {
    Hfk(GridArg),
    Alexander(GridArg),
}

#[derive(Subcommand, Debug)]
pub enum KhCmd {
    Compute(KnotArg),
    Stilde(KnotArg),
    /// Pages of Turner's spectral sequence.
    Ss(KnotArg),
    Jones(KnotArg),
    /// Cone of the second basepoint map on a two-pointed diagram.
    Cone {
        #[command(flatten)]
        knot: KnotArg,
        /// Override the diagram's basepoints, e.g. `1,4`.
        #[arg(long, value_delimiter = ',')]
        basepoints: Option<Vec<u32>>,
    },
    /// Check the skein exact sequence, either at a crossing of one knot or
    /// on three PD files.
    Skein {
        #[arg(long, value_name = "KNOT", conflicts_with_all = ["plus", "minus", "zero"])]
        knot: Option<String>,
        #[arg(long, requires = "knot")]
        crossing: Option<usize>,
        #[arg(long, value_name = "PATH", requires_all = ["minus", "zero"])]
        plus: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        minus: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        zero: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum KnotsCmd {
    /// List catalog names, or print one entry.
    Catalog { name: Option<String> },
    /// K_i: i full twists in the band of a template (`6_1`, `6_1m` or a JSON file).
    Family {
        #[arg(long, default_value = "6_1")]
        template: String,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
    },
    Kanenobu {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
    },
    Sum { a: String, b: String },
    Mirror(KnotArg),
    Alexander(KnotArg),
}

/// Parses `argv` (including the program name), runs it and returns the exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome { text, ok }) => {
            print!("{text}");
            if ok {
                0
            } else {
                eprintln!("knotforge: some checks failed");
                1
            }
        }
        Err(e) => {
            println!("{}", serde_json::json!({ "code": e.code(), "message": e.to_string() }));
            eprintln!("knotforge: {e}");
            1
        }
    }
}

/// Rendered output and whether the command succeeded.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn done<T: Serialize>(g: &Global, v: &T) -> Result<Outcome> {
    Ok(Outcome { text: output::render(g.format, v)?, ok: true })
}

fn with_plot<T: Serialize + DotPlot>(g: &Global, v: &T) -> Result<Outcome> {
    if let Some(p) = &g.svg {
        emit_plot(v, p)?;
    }
    done(g, v)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_cfk(spec: &str) -> Result<CfkComplex> {
    let p = Path::new(spec);
    if p.is_file() {
        return CfkComplex::from_json(&read(p)?);
    }
    fixtures::cfk_fixture(spec).map_err(|_| Error::Io(format!("{spec}: no such file or bundled fixture")))
}

/// A JSON file if it exists, otherwise a bundled fixture of that name.
pub fn load_cfk(spec: &str) -> Result<CfkComplex> {
    let c = read_cfk(spec)?;
    let report = cfk::validate(&c);
    if !report.is_valid() {
        let msg = serde_json::to_string(&report.violations).unwrap_or_default();
        return Err(Error::InvalidComplex(msg));
    }
    Ok(c)
}

fn parse_i64(s: &str, what: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn template(name: &str) -> Result<BandTemplate> {
    let p = Path::new(name);
    if p.is_file() {
        return serde_json::from_str(&read(p)?).map_err(|e| Error::Parse(e.to_string()));
    }
    let base = knots::six_one_template();
    match name {
        "6_1" => Ok(base),
        "6_1m" => Ok(base.mirror()),
        _ => Err(Error::UnknownKnot(format!("no band template {name}"))),
    }
}

/// Resolves a knot spec: PD file, `family:T:I`, `kanenobu:P:Q` or catalog name.
pub fn load_knot(spec: &str) -> Result<PlanarDiagram> {
    let p = Path::new(spec);
    if p.is_file() {
        return PlanarDiagram::from_json(&read(p)?);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["family", t, i] => Ok(knots::band_family(&template(t)?, parse_i64(i, "twist count")?)),
        ["kanenobu", a, b] => Ok(knots::kanenobu(parse_i64(a, "p")?, parse_i64(b, "q")?)),
        _ => Ok(knots::catalog(spec)?.pd),
    }
}

fn load_grid(a: &GridArg) -> Result<GridDiagram> {
    if let Some(p) = &a.grid {
        let g: GridDiagram = serde_json::from_str(&read(p)?).map_err(|e| Error::Parse(e.to_string()))?;
        let report = grid::validate_grid(&g);
        if !report.is_valid() {
            return Err(Error::InvalidGrid(serde_json::to_string(&report.violations).unwrap_or_default()));
        }
        return Ok(g);
    }
    let name = a.knot.as_deref().unwrap_or_default();
    knots::catalog(name)?.grid.ok_or_else(|| Error::Catalog(format!("{name} has no grid diagram")))
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Cfk(c) => cfk_cmd(g, c),
        Command::Grid(c) => grid_cmd(g, c),
        Command::Kh(c) => kh_cmd(g, c),
        Command::Knots(c) => knots_cmd(g, c),
        Command::Verify { suite } => {
            let results = verify::run_suite(suite, g.seed)?;
            let mut out = done(g, &results)?;
            out.ok = results.iter().all(|r| r.passed);
            Ok(out)
        }
    }
}

fn cfk_cmd(g: &Global, c: &CfkCmd) -> Result<Outcome> {
    match c {
        CfkCmd::Validate { file } => {
            let r = cfk::validate(&read_cfk(file)?);
            done(g, &serde_json::json!({ "valid": r.is_valid(), "violations": r.violations }))
        }
        CfkCmd::Reduce { file } => done(g, &cfk::reduce(&load_cfk(file)?)?.canonical()),
        CfkCmd::Hfk { file } => with_plot(g, &cfk::hat(&load_cfk(file)?)?.group()),
        CfkCmd::Tau { file } => done(g, &invariants::tau(&load_cfk(file)?)?),
        CfkCmd::Minus { file } => done(g, &invariants::hfk_minus(&load_cfk(file)?)?),
        CfkCmd::Dval { file, s } => done(g, &invariants::dval(&load_cfk(file)?, *s)?),
        CfkCmd::Hbar { file, m } => done(g, &invariants::hbar(&load_cfk(file)?, *m)?),
        CfkCmd::Obstruct { file } => done(g, &invariants::obstruction_check(&load_cfk(file)?)?),
        CfkCmd::Lspace { file } => done(g, &invariants::lspace_check(&cfk::hat(&load_cfk(file)?)?.group())?),
        CfkCmd::Tensor { a, b } => done(g, &cfk::tensor(&load_cfk(a)?, &load_cfk(b)?)?.canonical()),
        CfkCmd::Mirror { file } => done(g, &cfk::mirror_dual(&load_cfk(file)?)?.canonical()),
        CfkCmd::Transpose { file } => done(g, &cfk::transpose(&load_cfk(file)?)?.canonical()),
    }
}

fn grid_cmd(g: &Global, c: &GridCmd) -> Result<Outcome> {
    match c {
        GridCmd::Hfk(a) => with_plot(g, &grid::grid_hfk_bounded(&load_grid(a)?, g.max_grid)?),
        GridCmd::Alexander(a) => {
            let grid = load_grid(a)?;
            let h = grid::grid_hfk_bounded(&grid, g.max_grid)?;
            done(g, &cfk::euler_characteristic(&h))
        }
    }
}

fn kh_cmd(g: &Global, c: &KhCmd) -> Result<Outcome> {
    let n = g.max_crossings;
    match c {
        KhCmd::Compute(k) => with_plot(g, &kh::kh_reduced_bounded(&load_knot(k.spec())?, n)?),
        KhCmd::Stilde(k) => done(g, &kh::turner_ss_bounded(&load_knot(k.spec())?, n)?.survivor.1),
        KhCmd::Ss(k) => {
            let ss = kh::turner_ss_bounded(&load_knot(k.spec())?, n)?;
            if let Some(p) = &g.svg {
                emit_plot(&ss.pages[0], p)?;
            }
            done(g, &ss)
        }
        KhCmd::Jones(k) => done(g, &kh::jones(&kh::kh_reduced_bounded(&load_knot(k.spec())?, n)?)),
        KhCmd::Cone { knot, basepoints } => {
            let mut d = load_knot(knot.spec())?;
            if let Some(b) = basepoints {
                d.basepoints = b.clone();
                d.validate()?;
            }
            let cone = kh::basepoint_cone_bounded(&d, n)?;
            if let (Some(p), Some(int)) = (&g.svg, cone.integral()) {
                emit_plot(&int, p)?;
            }
            done(g, &cone)
        }
        KhCmd::Skein { knot, crossing, plus, minus, zero } => {
            let (p, m, z) = match (knot, plus, minus, zero) {
                (Some(k), ..) => kh::skein_triple_at(&load_knot(k)?, crossing.unwrap_or(0))?,
                (None, Some(p), Some(m), Some(z)) => (load_knot_file(p)?, load_knot_file(m)?, load_knot_file(z)?),
                _ => return Err(Error::Parse("give --knot, or all of --plus, --minus and --zero".into())),
            };
            done(g, &kh::skein_triple_check_bounded(&p, &m, &z, n)?)
        }
    }
}

fn load_knot_file(p: &Path) -> Result<PlanarDiagram> {
    PlanarDiagram::from_json(&read(p)?)
}

fn knots_cmd(g: &Global, c: &KnotsCmd) -> Result<Outcome> {
    match c {
        KnotsCmd::Catalog { name: None } => done(g, &knots::catalog_names()?),
        KnotsCmd::Catalog { name: Some(n) } => done(g, &knots::catalog(n)?),
        KnotsCmd::Family { template: t, i } => done(g, &knots::band_family(&template(t)?, *i)),
        KnotsCmd::Kanenobu { p, q } => done(g, &knots::kanenobu(*p, *q)),
        KnotsCmd::Sum { a, b } => done(g, &knots::connected_sum(&load_knot(a)?, &load_knot(b)?)?),
        KnotsCmd::Mirror(k) => done(g, &knots::mirror(&load_knot(k.spec())?)),
        KnotsCmd::Alexander(k) => done(g, &knots::alexander_from_pd(&load_knot(k.spec())?)?),
    }
}
