//! Command-line front end for multinet-core.

pub mod render;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use multinet_core::arrangement::{
    build_lattice, IncidenceLattice, MultiArrangement, ProjLine, ProjPoint,
};
use multinet_core::cartan::decompose;
use multinet_core::corpus;
use multinet_core::criteria::{euler_sides, local_test, transversality_chain, TransverseError};
use multinet_core::exactfield::parse_scalar;
use multinet_core::format::{parse_arrangement, write_arrangement};
use multinet_core::multinet::{
    discover, verify, DiscoverError, Multinet, WeakMultinet, DEFAULT_CAP,
};
use multinet_core::osalgebra::{isotropic_check, resonance_from_multinet, span_dim};
use multinet_core::pencil::ceva_verdict;
use thiserror::Error;

use crate::render::Window;
use crate::report::AnalysisReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Invalid(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "multinet",
    version,
    about = "Multinets, resonance and pencils of line arrangements"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Arrangement file.
    pub file: PathBuf,
    /// Work over Q(ζ_n) for this n; must be a multiple of the file's order.
    #[arg(long)]
    pub order: Option<u32>,
    /// Restrict to the lines with these labels (comma separated).
    #[arg(long, value_name = "LABELS")]
    pub restrict: Option<String>,
    /// Largest number of candidate base loci to examine.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
}

#[derive(Debug, Args)]
pub struct Pick {
    /// Only the multinet with this id (see `discover`).
    #[arg(long, value_name = "ID")]
    pub multinet: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice, multinets, resonance, pencils and criteria in one report.
    Analyze(Input),
    /// List the global multinets.
    Discover(Input),
    /// Check the multinet axioms for a given partition.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Classes as label lists, e.g. "a0,a1;b0,b1;c0,c1".
        #[arg(long)]
        classes: String,
    },
    /// Resonance components coming from multinets.
    Resonance {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pick: Pick,
    },
    /// Realize multinets as pencils of curves.
    Pencil {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pick: Pick,
    },
    /// Euler characteristic inequality for each multinet.
    Rh {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pick: Pick,
    },
    /// Local test at the base points of each multinet.
    Localtest {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pick: Pick,
    },
    /// Transversality of added lines to a complete multinet.
    Transverse {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pick: Pick,
        /// Coefficients "a,b,c" of an added line; repeat for several.
        #[arg(
            long = "line",
            required = true,
            value_name = "A,B,C",
            allow_hyphen_values = true
        )]
        lines: Vec<String>,
    },
    /// Cartan matrix and block types for a set of multiple points.
    Cartan {
        #[command(flatten)]
        input: Input,
        /// Coordinates "x,y,z" of a multiple point; repeat for several.
        /// Without points every discovered base locus is used.
        #[arg(long = "point", value_name = "X,Y,Z", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Built-in example arrangements.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Draw the real lines as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Colour the classes of this multinet.
        #[arg(long, value_name = "ID")]
        multinet: Option<usize>,
        /// Plot window "x0,x1,y0,y1".
        #[arg(long, default_value = "-3,3,-3,3", allow_hyphen_values = true)]
        window: Window,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    /// Write an entry in the arrangement file format.
    Emit {
        /// Entry name, e.g. ceva:3, hessian, b3, monomial:4, jd:2, os:2, concurrent:5, pappus.
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
}

struct Loaded {
    arr: MultiArrangement,
    lat: IncidenceLattice,
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(&input.file)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", input.file.display())))?;
    let mut arr = parse_arrangement(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", input.file.display())))?;
    if let Some(n) = input.order {
        arr = promote(&arr, n)?;
    }
    if let Some(r) = &input.restrict {
        let keep = split_labels(r)
            .iter()
            .map(|l| {
                arr.index_of(l)
                    .ok_or_else(|| CliError::Invalid(format!("unknown line label '{l}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        arr = arr
            .restrict(&keep)
            .map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    let lat = build_lattice(&arr);
    Ok(Loaded { arr, lat })
}

fn promote(arr: &MultiArrangement, n: u32) -> Result<MultiArrangement, CliError> {
    let Ok(lines) = arr.lines() else {
        return Ok(arr.clone());
    };
    if n == 0 || n % arr.order() != 0 {
        return Err(CliError::Invalid(format!(
            "--order {n} is not a multiple of the file's order {}",
            arr.order()
        )));
    }
    let lines = lines.iter().map(|l| l.promote(n)).collect();
    MultiArrangement::from_lines(n, lines, arr.multiplicities().to_vec())
        .map_err(|e| CliError::Invalid(e.to_string()))
}

fn split_labels(s: &str) -> Vec<String> {
    s.split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_triple(
    s: &str,
    order: u32,
) -> Result<[multinet_core::exactfield::CycloElem; 3], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Parse(format!(
            "'{s}': expected three comma-separated scalars"
        )));
    }
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(
            parse_scalar(p.trim(), order).map_err(|e| CliError::Parse(format!("'{s}': {e}")))?,
        );
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

fn find_all(l: &Loaded, cap: u128) -> Result<Vec<Multinet>, CliError> {
    discover(&l.lat, cap).map_err(|e| match e {
        DiscoverError::SearchSpaceTooLarge { .. } => CliError::Cap(e.to_string()),
    })
}

fn picked(all: Vec<Multinet>, pick: Option<usize>) -> Result<Vec<(usize, Multinet)>, CliError> {
    let n = all.len();
    let v: Vec<(usize, Multinet)> = all.into_iter().enumerate().collect();
    match pick {
        None => Ok(v),
        Some(id) if id < n => Ok(v.into_iter().filter(|(i, _)| *i == id).collect()),
        Some(id) => Err(CliError::Invalid(format!(
            "no multinet with id {id}; {n} found"
        ))),
    }
}

fn base_report(command: &str, l: &Loaded) -> AnalysisReport {
    AnalysisReport {
        command: command.to_string(),
        arrangement: report::arrangement_summary(&l.arr),
        lattice: report::lattice_stats(&l.lat),
        multinets: None,
        verification: None,
        cartan: None,
        warnings: Vec::new(),
    }
}

#[derive(Clone, Copy, Default)]
struct Sections {
    resonance: bool,
    pencil: bool,
    rh: bool,
    local: bool,
}

fn entries(l: &Loaded, mns: &[(usize, Multinet)], s: Sections) -> Vec<report::MultinetEntry> {
    mns.iter()
        .map(|(id, mn)| {
            let mut e = report::multinet_entry(*id, mn, &l.lat, &l.arr);
            if s.resonance {
                let basis = resonance_from_multinet(mn, &l.lat);
                e.resonance = Some(report::resonance_entry(
                    &basis,
                    span_dim(&basis),
                    isotropic_check(&basis, &l.lat),
                ));
            }
            if s.pencil {
                e.pencil = Some(report::pencil_entry(&ceva_verdict(mn, &l.lat, &l.arr)));
            }
            if s.rh {
                e.rh = Some(report::rh_entry(&euler_sides(mn, &l.lat)));
            }
            if s.local {
                e.local_test = Some(report::local_entry(&local_test(mn, &l.lat), &l.lat, &l.arr));
            }
            e
        })
        .collect()
}

fn emit(r: &AnalysisReport, format: Format) -> Output {
    Output {
        stdout: match format {
            Format::Human => report::to_human(r),
            Format::Machine => report::to_machine(r),
        },
        stderr: Vec::new(),
    }
}

fn sectioned(
    command: &str,
    input: &Input,
    pick: Option<usize>,
    s: Sections,
    format: Format,
) -> Result<Output, CliError> {
    let l = load(input)?;
    let mns = picked(find_all(&l, input.cap)?, pick)?;
    let mut r = base_report(command, &l);
    r.multinets = Some(entries(&l, &mns, s));
    Ok(emit(&r, format))
}

fn write_or_print(out: &mut Output, path: Option<&Path>, text: String) -> Result<(), CliError> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))
        }
        None => {
            out.stdout = text;
            Ok(())
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Analyze(input) => {
            let s = Sections {
                resonance: true,
                pencil: true,
                rh: true,
                local: true,
            };
            sectioned("analyze", &input, None, s, format)
        }
        Command::Discover(input) => {
            sectioned("discover", &input, None, Sections::default(), format)
        }
        Command::Resonance { input, pick } => sectioned(
            "resonance",
            &input,
            pick.multinet,
            Sections {
                resonance: true,
                ..Sections::default()
            },
            format,
        ),
        Command::Pencil { input, pick } => sectioned(
            "pencil",
            &input,
            pick.multinet,
            Sections {
                pencil: true,
                ..Sections::default()
            },
            format,
        ),
        Command::Rh { input, pick } => sectioned(
            "rh",
            &input,
            pick.multinet,
            Sections {
                rh: true,
                ..Sections::default()
            },
            format,
        ),
        Command::Localtest { input, pick } => sectioned(
            "localtest",
            &input,
            pick.multinet,
            Sections {
                local: true,
                ..Sections::default()
            },
            format,
        ),
        Command::Verify { input, classes } => {
            let l = load(&input)?;
            let spec: Vec<Vec<String>> = classes.split(';').map(split_labels).collect();
            if spec.iter().any(Vec::is_empty) {
                return Err(CliError::Parse(format!("'{classes}': empty class")));
            }
            let wm = WeakMultinet::from_labels(&l.arr, &l.lat, &spec).map_err(CliError::Invalid)?;
            let rep = verify(&wm, &l.lat);
            let mn = Multinet::new(&l.lat, wm).ok();
            let mut r = base_report("verify", &l);
            r.verification = Some(report::verify_entry(&rep, mn.is_some()));
            if let Some(mn) = mn {
                let s = Sections {
                    rh: true,
                    ..Sections::default()
                };
                r.multinets = Some(entries(&l, &[(0, mn)], s));
            }
            Ok(emit(&r, format))
        }
        Command::Transverse { input, pick, lines } => {
            let l = load(&input)?;
            let extras = lines
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let c = parse_triple(s, l.arr.order())?;
                    ProjLine::new(format!("added{i}"), c)
                        .map_err(|e| CliError::Invalid(format!("'{s}': {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mns = picked(find_all(&l, input.cap)?, pick.multinet)?;
            let mut es = entries(&l, &mns, Sections::default());
            for (e, (_, mn)) in es.iter_mut().zip(&mns) {
                let res = match transversality_chain(mn, &l.lat, &l.arr, &extras) {
                    Ok(v) => v.into_iter().map(Ok).collect(),
                    Err(TransverseError::NotComplete { deficit }) => {
                        let msg = TransverseError::NotComplete { deficit }.to_string();
                        vec![Err(msg); extras.len()]
                    }
                    Err(other) => return Err(CliError::Invalid(other.to_string())),
                };
                e.transverse = Some(
                    extras
                        .iter()
                        .zip(res)
                        .map(|(x, r)| {
                            report::transverse_entry(
                                x.coeffs().iter().map(|c| c.to_string()).collect(),
                                r,
                            )
                        })
                        .collect(),
                );
            }
            let mut r = base_report("transverse", &l);
            r.multinets = Some(es);
            Ok(emit(&r, format))
        }
        Command::Cartan { input, points } => {
            let l = load(&input)?;
            let bases: Vec<Vec<usize>> = if points.is_empty() {
                find_all(&l, input.cap)?
                    .iter()
                    .map(|m| m.base().to_vec())
                    .collect()
            } else {
                let mut x = Vec::new();
                for s in &points {
                    let p = ProjPoint::new(parse_triple(s, l.arr.order())?)
                        .map_err(|e| CliError::Invalid(format!("'{s}': {e}")))?;
                    x.push(l.lat.find(&p).ok_or_else(|| {
                        CliError::Invalid(format!("{p} is not an intersection point"))
                    })?);
                }
                vec![x]
            };
            let mut cs = Vec::new();
            for x in &bases {
                let dec = decompose(&l.lat, x).map_err(|e| CliError::Invalid(e.to_string()))?;
                cs.push(report::cartan_entry(&dec, &l.lat, &l.arr));
            }
            let mut r = base_report("cartan", &l);
            r.cartan = Some(cs);
            Ok(emit(&r, format))
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                let mut out = Output::default();
                for e in corpus::standard() {
                    out.stdout.push_str(&format!(
                        "{:<14} {:>3} lines  order {:<3} {}\n",
                        e.name,
                        e.arrangement.len(),
                        e.arrangement.order(),
                        e.note
                    ));
                }
                Ok(out)
            }
            CorpusAction::Emit { name, output } => {
                let e = corpus::by_name(&name)
                    .ok_or_else(|| CliError::Invalid(format!("unknown corpus entry '{name}'")))?;
                let text = write_arrangement(&e.arrangement, Some(&e.name));
                let mut out = Output::default();
                write_or_print(&mut out, output.as_deref(), text)?;
                Ok(out)
            }
        },
        Command::Render {
            input,
            multinet,
            window,
            output,
        } => {
            let l = load(&input)?;
            let classes = match multinet {
                None => None,
                Some(id) => {
                    let mut v = picked(find_all(&l, input.cap)?, Some(id))?;
                    Some(v.remove(0).1.classes().to_vec())
                }
            };
            let rendered = render::render(&l.arr, &l.lat, &window, classes.as_deref())
                .map_err(CliError::Invalid)?;
            let mut out = Output {
                stderr: rendered
                    .warnings
                    .iter()
                    .map(|w| format!("warning: {w}"))
                    .collect(),
                ..Output::default()
            };
            write_or_print(&mut out, output.as_deref(), rendered.svg)?;
            Ok(out)
        }
    }
}
