//! Report data and its two renderings: a JSON document for machines and a
//! plain table view for people.

use std::fmt::Write as _;

use multinet_core::arrangement::{IncidenceLattice, MultiArrangement, Realization};
use multinet_core::cartan::{CartanDecomp, VinbergType};
use multinet_core::criteria::{LocalTestReport, RHReport, TransverseReport};
use multinet_core::multinet::{exponents, Multinet, MultinetReport};
use multinet_core::osalgebra::A1Vector;
use multinet_core::pencil::{PencilError, PencilReport};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub command: String,
    pub arrangement: ArrangementSummary,
    pub lattice: LatticeStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multinets: Option<Vec<MultinetEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifyEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<CartanEntry>>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ArrangementSummary {
    pub order: u32,
    #[serde(rename = "abstract")]
    pub is_abstract: bool,
    pub lines: Vec<LineEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LineEntry {
    pub label: String,
    pub multiplicity: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LatticeStats {
    pub points: usize,
    pub double_points: usize,
    pub multiple_points: usize,
    /// `(multiplicity, count)` pairs in increasing multiplicity.
    pub profile: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BaseEntry {
    pub point: String,
    pub lines: Vec<String>,
    pub weight: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MultinetEntry {
    pub id: usize,
    pub k: usize,
    pub d: u64,
    pub net: bool,
    pub classes: Vec<Vec<String>>,
    /// Multiplicity of every line, in arrangement order.
    pub multiplicities: Vec<u32>,
    pub base: Vec<BaseEntry>,
    pub exponents: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resonance: Option<ResonanceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pencil: Option<PencilEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rh: Option<RhEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_test: Option<LocalEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transverse: Option<Vec<TransverseEntry>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ResonanceEntry {
    /// Rational coordinates of `u_i - u_1`, one vector per row.
    pub basis: Vec<Vec<String>>,
    pub dimension: usize,
    pub isotropic: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PencilEntry {
    pub realized: bool,
    /// Normalized class products; `w` stands for the root of unity.
    pub fibers: Vec<String>,
    /// `[a, b]` with fiber `i` equal to `a F_1 + b F_2`.
    pub relations: Vec<Option<[String; 2]>>,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RhEntry {
    pub lhs: i64,
    pub rhs: i64,
    pub deficit: i64,
    pub complete: bool,
    pub fiber_euler: i64,
    pub class_euler: Vec<i64>,
    pub rhs_by_classes: i64,
    pub rhs_rewritten: i64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LocalEntry {
    pub passed: bool,
    pub points: Vec<LocalPointEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LocalPointEntry {
    pub point: String,
    pub weight: u64,
    pub lhs: i64,
    pub rhs: i64,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TransverseEntry {
    pub line: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<i64>,
    pub transverse: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyEntry {
    pub axioms: Vec<AxiomEntry>,
    pub k: usize,
    pub class_degrees: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub lemma: bool,
    pub weak_multinet: bool,
    pub multinet: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AxiomEntry {
    pub axiom: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CartanEntry {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    pub q: Vec<Vec<i64>>,
    pub blocks: Vec<BlockEntry>,
    pub all_affine: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BlockEntry {
    pub lines: Vec<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<String>>,
}

pub fn arrangement_summary(arr: &MultiArrangement) -> ArrangementSummary {
    let lines = (0..arr.len())
        .map(|i| LineEntry {
            label: arr.label(i).to_string(),
            multiplicity: arr.multiplicities()[i],
            coefficients: match arr.realization() {
                Realization::Coordinates { lines, .. } => {
                    Some(lines[i].coeffs().iter().map(|c| c.to_string()).collect())
                }
                Realization::Abstract { .. } => None,
            },
        })
        .collect();
    ArrangementSummary {
        order: arr.order(),
        is_abstract: arr.is_abstract(),
        lines,
    }
}

pub fn lattice_stats(lat: &IncidenceLattice) -> LatticeStats {
    let mut profile: Vec<(usize, usize)> = Vec::new();
    let mut ms: Vec<usize> = lat.points().iter().map(|p| p.multiplicity()).collect();
    ms.sort_unstable();
    for m in ms {
        match profile.last_mut() {
            Some((mm, c)) if *mm == m => *c += 1,
            _ => profile.push((m, 1)),
        }
    }
    LatticeStats {
        points: lat.points().len(),
        double_points: lat
            .points()
            .iter()
            .filter(|p| p.multiplicity() == 2)
            .count(),
        multiple_points: lat.multiple_points().len(),
        profile,
    }
}

fn labels(arr: &MultiArrangement, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&l| arr.label(l).to_string()).collect()
}

pub fn multinet_entry(
    id: usize,
    mn: &Multinet,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
) -> MultinetEntry {
    MultinetEntry {
        id,
        k: mn.k(),
        d: mn.d(),
        net: mn.is_net(),
        classes: mn.classes().iter().map(|c| labels(arr, c)).collect(),
        multiplicities: mn.mult().to_vec(),
        base: mn
            .base()
            .iter()
            .zip(mn.weights())
            .map(|(&p, &w)| BaseEntry {
                point: lat.describe(p, arr),
                lines: labels(arr, &lat.point(p).lines),
                weight: w,
            })
            .collect(),
        exponents: exponents(mn).exponents,
        resonance: None,
        pencil: None,
        rh: None,
        local_test: None,
        transverse: None,
    }
}

pub fn resonance_entry(basis: &[A1Vector], dimension: usize, isotropic: bool) -> ResonanceEntry {
    ResonanceEntry {
        basis: basis
            .iter()
            .map(|v| v.0.iter().map(|x| x.to_string()).collect())
            .collect(),
        dimension,
        isotropic,
    }
}

fn pencil_from_report(r: &PencilReport, realized: bool, verdict: String) -> PencilEntry {
    PencilEntry {
        realized,
        fibers: r.fibers.iter().map(|f| f.to_string()).collect(),
        relations: r
            .scalars
            .iter()
            .map(|s| {
                s.as_ref()
                    .map(|(a, b)| [a.to_literal("w"), b.to_literal("w")])
            })
            .collect(),
        verdict,
    }
}

pub fn pencil_entry(res: &Result<PencilReport, PencilError>) -> PencilEntry {
    match res {
        Ok(r) => pencil_from_report(r, true, r.verdict.clone()),
        Err(PencilError::NotCollinear { report, .. }) => {
            pencil_from_report(report, false, res.as_ref().unwrap_err().to_string())
        }
        Err(e) => PencilEntry {
            realized: false,
            fibers: Vec::new(),
            relations: Vec::new(),
            verdict: e.to_string(),
        },
    }
}

pub fn rh_entry(r: &RHReport) -> RhEntry {
    RhEntry {
        lhs: r.lhs,
        rhs: r.rhs,
        deficit: r.deficit,
        complete: r.complete,
        fiber_euler: r.fiber_euler,
        class_euler: r.class_euler.clone(),
        rhs_by_classes: r.rhs_by_classes,
        rhs_rewritten: r.rhs_rewritten,
    }
}

pub fn local_entry(
    r: &LocalTestReport,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
) -> LocalEntry {
    LocalEntry {
        passed: r.passed(),
        points: r
            .points
            .iter()
            .map(|p| LocalPointEntry {
                point: lat.describe(p.point, arr),
                weight: p.weight,
                lhs: p.lhs,
                rhs: p.rhs,
                passed: p.passed,
            })
            .collect(),
    }
}

pub fn transverse_entry(
    line: Vec<String>,
    res: Result<TransverseReport, String>,
) -> TransverseEntry {
    match res {
        Ok(t) => TransverseEntry {
            line,
            points: Some(t.points.iter().map(|p| p.to_string()).collect()),
            lhs: Some(t.lhs),
            rhs: Some(t.rhs),
            transverse: t.transverse,
            error: None,
        },
        Err(e) => TransverseEntry {
            line,
            points: None,
            lhs: None,
            rhs: None,
            transverse: false,
            error: Some(e),
        },
    }
}

pub fn verify_entry(r: &MultinetReport, is_multinet: bool) -> VerifyEntry {
    VerifyEntry {
        axioms: r
            .axioms
            .iter()
            .map(|a| AxiomEntry {
                axiom: a.axiom.to_string(),
                passed: a.passed,
                witness: a.witness.clone(),
            })
            .collect(),
        k: r.k,
        class_degrees: r.class_degrees.clone(),
        d: r.d,
        lemma: r.lemma_ok(),
        weak_multinet: r.weak_ok(),
        multinet: is_multinet,
    }
}

pub fn cartan_entry(
    dec: &CartanDecomp,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
) -> CartanEntry {
    CartanEntry {
        points: dec.j.points.iter().map(|&p| lat.describe(p, arr)).collect(),
        lines: labels(arr, &dec.j.lines),
        q: dec.q.clone(),
        blocks: dec
            .blocks
            .iter()
            .map(|b| BlockEntry {
                lines: labels(arr, &b.lines),
                kind: b.kind.name().to_string(),
                kernel: match &b.kind {
                    VinbergType::Affine(u) => Some(u.iter().map(|x| x.to_string()).collect()),
                    _ => None,
                },
            })
            .collect(),
        all_affine: dec.all_affine(),
    }
}

/// The machine format: pretty-printed JSON with keys in declaration order.
pub fn to_machine(r: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_machine(s: &str) -> Result<AnalysisReport, serde_json::Error> {
    serde_json::from_str(s)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let ncol = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncol)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 < r.len() {
                let _ = write!(line, "{:<w$}  ", cell, w = widths[c]);
            } else {
                line.push_str(cell);
            }
        }
        out.push_str("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn row<const N: usize>(cells: [&str; N]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

pub fn to_human(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let a = &r.arrangement;
    let kind = if a.is_abstract {
        "abstract".to_string()
    } else {
        format!("order {}", a.order)
    };
    let _ = writeln!(out, "arrangement: {} lines, {}", a.lines.len(), kind);
    let mut rows = vec![row(["label", "m", "coefficients"])];
    for l in &a.lines {
        rows.push(vec![
            l.label.clone(),
            l.multiplicity.to_string(),
            l.coefficients
                .as_ref()
                .map(|c| c.join(", "))
                .unwrap_or_default(),
        ]);
    }
    out.push_str(&table(&rows));
    let l = &r.lattice;
    let prof: Vec<String> = l.profile.iter().map(|(m, c)| format!("{c}x{m}")).collect();
    let _ = writeln!(
        out,
        "lattice: {} points, {} double, {} multiple ({})",
        l.points,
        l.double_points,
        l.multiple_points,
        prof.join(", ")
    );
    if let Some(v) = &r.verification {
        out.push_str("\nverification:\n");
        let mut rows = vec![row(["axiom", "ok", "witness"])];
        for ax in &v.axioms {
            rows.push(vec![
                ax.axiom.clone(),
                yes(ax.passed).into(),
                ax.witness.clone().unwrap_or_default(),
            ]);
        }
        out.push_str(&table(&rows));
        let degs: Vec<String> = v.class_degrees.iter().map(u64::to_string).collect();
        let _ = writeln!(
            out,
            "  k = {}, class degrees {}, lemma {}, weak multinet {}, multinet {}",
            v.k,
            degs.join(" "),
            yes(v.lemma),
            yes(v.weak_multinet),
            yes(v.multinet)
        );
    }
    if let Some(ms) = &r.multinets {
        if ms.is_empty() {
            out.push_str("\nno global multinets\n");
        }
        for m in ms {
            human_multinet(&mut out, m);
        }
    }
    if let Some(cs) = &r.cartan {
        for c in cs {
            let _ = writeln!(out, "\ncartan: X = {}", c.points.join(" "));
            let _ = writeln!(out, "  lines {}", c.lines.join(" "));
            let mut rows = Vec::new();
            for (i, q) in c.q.iter().enumerate() {
                let mut rr = vec![c.lines[i].clone()];
                rr.extend(q.iter().map(i64::to_string));
                rows.push(rr);
            }
            out.push_str(&table(&rows));
            for b in &c.blocks {
                let ker = b
                    .kernel
                    .as_ref()
                    .map(|k| format!(" kernel ({})", k.join(", ")))
                    .unwrap_or_default();
                let _ = writeln!(out, "  block {{{}}}: {}{}", b.lines.join(","), b.kind, ker);
            }
            let _ = writeln!(out, "  all blocks affine: {}", yes(c.all_affine));
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

fn human_multinet(out: &mut String, m: &MultinetEntry) {
    let kind = if m.net { "net" } else { "multinet" };
    let _ = writeln!(out, "\nmultinet {}: ({}, {})-{}", m.id, m.k, m.d, kind);
    for (i, c) in m.classes.iter().enumerate() {
        let _ = writeln!(out, "  class {}: {}", i + 1, c.join(" "));
    }
    let ex: Vec<String> = m.exponents.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "  exponents: {}", ex.join(" "));
    let mut rows = vec![row(["base point", "n", "lines"])];
    for b in &m.base {
        rows.push(vec![
            b.point.clone(),
            b.weight.to_string(),
            b.lines.join(" "),
        ]);
    }
    out.push_str(&table(&rows));
    if let Some(res) = &m.resonance {
        let _ = writeln!(
            out,
            "  resonance: dimension {}, isotropic {}",
            res.dimension,
            yes(res.isotropic)
        );
        for v in &res.basis {
            let _ = writeln!(out, "    ({})", v.join(", "));
        }
    }
    if let Some(p) = &m.pencil {
        let _ = writeln!(out, "  pencil: {}", p.verdict);
        for (i, f) in p.fibers.iter().enumerate() {
            let rel = match p.relations.get(i) {
                Some(Some([a, b])) => format!("  = ({a}) F1 + ({b}) F2"),
                Some(None) => "  not in the span".to_string(),
                None => String::new(),
            };
            let _ = writeln!(out, "    F{} = {}{}", i + 1, f, rel);
        }
    }
    if let Some(rh) = &m.rh {
        let ce: Vec<String> = rh.class_euler.iter().map(i64::to_string).collect();
        let _ = writeln!(
            out,
            "  rh: {} >= {}, deficit {}, complete {}; fiber euler {}, class euler {}",
            rh.lhs,
            rh.rhs,
            rh.deficit,
            yes(rh.complete),
            rh.fiber_euler,
            ce.join(" ")
        );
    }
    if let Some(lt) = &m.local_test {
        let _ = writeln!(
            out,
            "  local test: {}",
            if lt.passed { "pass" } else { "fail" }
        );
        let mut rows = vec![row(["point", "n", "2n-2", "sum(m-1)", "ok"])];
        for p in &lt.points {
            rows.push(vec![
                p.point.clone(),
                p.weight.to_string(),
                p.lhs.to_string(),
                p.rhs.to_string(),
                yes(p.passed).into(),
            ]);
        }
        out.push_str(&table(&rows));
    }
    if let Some(ts) = &m.transverse {
        for t in ts {
            match &t.error {
                Some(e) => {
                    let _ = writeln!(out, "  line ({}): {}", t.line.join(", "), e);
                }
                None => {
                    let _ = writeln!(
                        out,
                        "  line ({}): {} = {}, transverse {}",
                        t.line.join(", "),
                        t.lhs.unwrap_or_default(),
                        t.rhs.unwrap_or_default(),
                        yes(t.transverse)
                    );
                    for p in t.points.iter().flatten() {
                        let _ = writeln!(out, "    {p}");
                    }
                }
            }
        }
    }
}
