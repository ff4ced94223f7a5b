//! Deterministic generators for the named arrangements used throughout the
//! test-suite and documentation.

use crate::arrangement::{MultiArrangement, ProjLine};
use crate::exactfield::CycloElem;

/// A multinet an entry is known to support, with classes given by labels.
/// Line multiplicities are those of the entry's arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedMultinet {
    pub classes: Vec<Vec<String>>,
    pub k: usize,
    pub d: u64,
}

/// Both sides of the Riemann-Hurwitz type inequality `3 + |X| >= rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedEuler {
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub params: String,
    pub arrangement: MultiArrangement,
    pub expected: Option<ExpectedMultinet>,
    pub euler: Option<ExpectedEuler>,
    pub note: &'static str,
}

fn lin(label: String, a: CycloElem, b: CycloElem, c: CycloElem) -> ProjLine {
    ProjLine::new(label, [a, b, c]).expect("generator lines are nonzero")
}

fn root(order: u32, k: i64) -> CycloElem {
    CycloElem::root_of_unity(order, k)
}

fn zero() -> CycloElem {
    CycloElem::zero()
}

fn one() -> CycloElem {
    CycloElem::one()
}

fn labels(prefix: &str, d: u32) -> Vec<String> {
    (0..d).map(|j| format!("{prefix}{j}")).collect()
}

/// Linear factors `x - ζ^j y`, `y - ζ^j z`, `z - ζ^j x` of the three
/// special fibers `x^d - y^d`, `y^d - z^d`, `z^d - x^d` of the Fermat pencil.
fn ceva_lines(d: u32) -> Vec<ProjLine> {
    let mut lines = Vec::with_capacity(3 * d as usize);
    for j in 0..d as i64 {
        lines.push(lin(format!("a{j}"), one(), -root(d, j), zero()));
    }
    for j in 0..d as i64 {
        lines.push(lin(format!("b{j}"), zero(), one(), -root(d, j)));
    }
    for j in 0..d as i64 {
        lines.push(lin(format!("c{j}"), -root(d, j), zero(), one()));
    }
    lines
}

/// Ceva arrangement of `3d` lines over Q(ζ_d).
pub fn ceva(d: u32) -> MultiArrangement {
    assert!(d >= 1, "ceva(d) needs d >= 1");
    MultiArrangement::simple(d, ceva_lines(d)).expect("ceva lines are distinct")
}

pub fn ceva_entry(d: u32) -> CorpusEntry {
    let dd = d as i64;
    CorpusEntry {
        name: format!("ceva:{d}"),
        params: format!("d = {d}"),
        arrangement: ceva(d),
        expected: Some(ExpectedMultinet {
            classes: vec![labels("a", d), labels("b", d), labels("c", d)],
            k: 3,
            d: d as u64,
        }),
        euler: Some(ExpectedEuler {
            lhs: 3 + dd * dd,
            rhs: 3 + dd * dd,
        }),
        note: "Fermat pencil ax^d + by^d + cz^d with a+b+c = 0; special fibers x^d-y^d, y^d-z^d, z^d-x^d",
    }
}

/// Hessian arrangement: `xyz` together with the factors
/// `x + ζ^j y + ζ^{s-j} z` of `x³+y³+z³ - 3ζ^s xyz`, `s = 0, 1, 2`.
pub fn hessian() -> MultiArrangement {
    let mut lines = vec![
        lin("x".into(), one(), zero(), zero()),
        lin("y".into(), zero(), one(), zero()),
        lin("z".into(), zero(), zero(), one()),
    ];
    for s in 0..3i64 {
        for j in 0..3i64 {
            lines.push(lin(format!("h{s}{j}"), one(), root(3, j), root(3, s - j)));
        }
    }
    MultiArrangement::simple(3, lines).expect("hessian lines are distinct")
}

/// Classes of the Hessian (4,3)-net, fiber by fiber.
pub fn hessian_classes() -> Vec<Vec<String>> {
    let mut classes = vec![vec!["x".to_string(), "y".to_string(), "z".to_string()]];
    for s in 0..3 {
        classes.push((0..3).map(|j| format!("h{s}{j}")).collect());
    }
    classes
}

pub fn hessian_entry() -> CorpusEntry {
    CorpusEntry {
        name: "hessian".into(),
        params: String::new(),
        arrangement: hessian(),
        expected: Some(ExpectedMultinet {
            classes: hessian_classes(),
            k: 4,
            d: 3,
        }),
        euler: Some(ExpectedEuler { lhs: 12, rhs: 12 }),
        note: "Hesse pencil a(x^3+y^3+z^3) + 3bxyz, four completely reducible fibers",
    }
}

/// Reflection arrangement of the full monomial group G(r,1,3): the Ceva
/// lines plus the coordinate lines, which carry multiplicity `r`.
pub fn monomial(r: u32) -> MultiArrangement {
    assert!(r >= 1, "monomial(r) needs r >= 1");
    let mut lines = vec![
        lin("x".into(), one(), zero(), zero()),
        lin("y".into(), zero(), one(), zero()),
        lin("z".into(), zero(), zero(), one()),
    ];
    lines.extend(ceva_lines(r));
    let mut mult = vec![r, r, r];
    mult.extend(std::iter::repeat(1).take(3 * r as usize));
    MultiArrangement::from_lines(r, lines, mult).expect("monomial lines are distinct")
}

pub fn monomial_entry(r: u32) -> CorpusEntry {
    let rr = r as i64;
    let mut cx = vec!["x".to_string()];
    cx.extend(labels("b", r));
    let mut cy = vec!["y".to_string()];
    cy.extend(labels("c", r));
    let mut cz = vec!["z".to_string()];
    cz.extend(labels("a", r));
    CorpusEntry {
        name: if r == 2 {
            "b3".into()
        } else {
            format!("monomial:{r}")
        },
        params: format!("r = {r}"),
        arrangement: monomial(r),
        expected: Some(ExpectedMultinet {
            classes: vec![cx, cy, cz],
            k: 3,
            d: 2 * r as u64,
        }),
        euler: Some(ExpectedEuler {
            lhs: rr * rr + 6,
            rhs: rr * rr + 6,
        }),
        note: "fibers x^r(y^r-z^r), y^r(z^r-x^r), z^r(x^r-y^r); coordinate lines of multiplicity r",
    }
}

/// The B₃ reflection arrangement with its (3,4)-multinet multiplicities.
pub fn b3() -> MultiArrangement {
    monomial(2)
}

/// Ceva(d) together with the line `z = 0`.
pub fn jd(d: u32) -> MultiArrangement {
    assert!(d >= 2, "jd(d) needs d >= 2");
    let mut lines = ceva_lines(d);
    lines.push(lin("z".into(), zero(), zero(), one()));
    MultiArrangement::simple(d, lines).expect("jd lines are distinct")
}

pub fn jd_entry(d: u32) -> CorpusEntry {
    CorpusEntry {
        name: format!("jd:{d}"),
        params: format!("d = {d}"),
        arrangement: jd(d),
        expected: None,
        euler: None,
        note: "(x^d-y^d)(y^d-z^d)(z^d-x^d)z; the line z = 0 is transverse to the Fermat pencil",
    }
}

/// Multi-arrangement `[(x^r-z^r)(y^r-2^r z^r)] [(y^r-z^r)(x^r-2^r z^r)] [(x^r-y^r) z^r]`.
pub fn os_family(r: u32) -> MultiArrangement {
    assert!(r >= 2, "os_family(r) needs r >= 2");
    let two = CycloElem::from_int(2);
    let mut lines = Vec::new();
    for j in 0..r as i64 {
        lines.push(lin(format!("p{j}"), one(), zero(), -root(r, j)));
    }
    for j in 0..r as i64 {
        lines.push(lin(format!("q{j}"), zero(), one(), -(&two * &root(r, j))));
    }
    for j in 0..r as i64 {
        lines.push(lin(format!("s{j}"), zero(), one(), -root(r, j)));
    }
    for j in 0..r as i64 {
        lines.push(lin(format!("t{j}"), one(), zero(), -(&two * &root(r, j))));
    }
    for j in 0..r as i64 {
        lines.push(lin(format!("u{j}"), one(), -root(r, j), zero()));
    }
    lines.push(lin("z".into(), zero(), zero(), one()));
    let mut mult = vec![1; lines.len()];
    *mult.last_mut().expect("nonempty") = r;
    MultiArrangement::from_lines(r, lines, mult).expect("os_family lines are distinct")
}

pub fn os_family_entry(r: u32) -> CorpusEntry {
    let mut c1 = labels("p", r);
    c1.extend(labels("q", r));
    let mut c2 = labels("s", r);
    c2.extend(labels("t", r));
    let mut c3 = labels("u", r);
    c3.push("z".into());
    CorpusEntry {
        name: format!("os:{r}"),
        params: format!("r = {r}"),
        arrangement: os_family(r),
        expected: Some(ExpectedMultinet {
            classes: vec![c1, c2, c3],
            k: 3,
            d: 2 * r as u64,
        }),
        euler: (r == 2).then_some(ExpectedEuler { lhs: 13, rhs: 11 }),
        note: "(3,2r)-multinet with z of multiplicity r; fails the local test at [1:0:0]",
    }
}

/// `k` lines through `[0:0:1]`: `x - j y = 0` for `j = 0..k`.
pub fn concurrent(k: u32) -> MultiArrangement {
    assert!(k >= 3, "concurrent(k) needs k >= 3");
    let lines = (0..k as i64)
        .map(|j| lin(format!("l{j}"), one(), CycloElem::from_int(-j), zero()))
        .collect();
    MultiArrangement::simple(1, lines).expect("concurrent lines are distinct")
}

pub fn concurrent_entry(k: u32) -> CorpusEntry {
    CorpusEntry {
        name: format!("concurrent:{k}"),
        params: format!("k = {k}"),
        arrangement: concurrent(k),
        expected: Some(ExpectedMultinet {
            classes: (0..k).map(|j| vec![format!("l{j}")]).collect(),
            k: k as usize,
            d: 1,
        }),
        euler: Some(ExpectedEuler { lhs: 4, rhs: 4 }),
        note: "pencil of k lines, partitioned into singletons",
    }
}

/// Golden coordinates of a specialized Pappus arrangement.
///
/// Built from the points `A = (0,0), (1,0), (3,0)` on `y = 0` and
/// `B = (0,1), (2,1), (6,1)` on `y = 1`. Because `B` is an affine image of
/// `A`, the Pappus line `y = 1/3` is parallel to the two carriers, so the
/// three lines of one class meet in the point `[1:0:0]` at infinity.
pub const PAPPUS_LINES: [(&str, [i64; 3]); 9] = [
    ("g", [0, 1, 0]),
    ("h", [0, 1, -1]),
    ("p", [0, 3, -1]),
    ("a1b2", [1, -2, 0]),
    ("a2b3", [1, -5, -1]),
    ("a3b1", [1, 3, -3]),
    ("a2b1", [1, 1, -1]),
    ("a3b2", [1, 1, -3]),
    ("a1b3", [1, -6, 0]),
];

pub fn pappus_special() -> MultiArrangement {
    let lines = PAPPUS_LINES
        .iter()
        .map(|(l, [a, b, c])| ProjLine::from_ints(*l, *a, *b, *c).expect("nonzero"))
        .collect();
    MultiArrangement::simple(1, lines).expect("pappus lines are distinct")
}

pub fn pappus_entry() -> CorpusEntry {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    CorpusEntry {
        name: "pappus".into(),
        params: String::new(),
        arrangement: pappus_special(),
        expected: Some(ExpectedMultinet {
            classes: vec![
                names(&["g", "h", "p"]),
                names(&["a1b2", "a2b3", "a3b1"]),
                names(&["a2b1", "a3b2", "a1b3"]),
            ],
            k: 3,
            d: 3,
        }),
        euler: Some(ExpectedEuler { lhs: 12, rhs: 10 }),
        note: "Pappus configuration with one class made concurrent; a hidden singular fiber of Euler number 2",
    }
}

/// The standard corpus, in a fixed order.
pub fn standard() -> Vec<CorpusEntry> {
    let mut v = Vec::new();
    for d in 1..=4 {
        v.push(ceva_entry(d));
    }
    v.push(hessian_entry());
    v.push(monomial_entry(1));
    v.push(monomial_entry(2));
    v.push(monomial_entry(3));
    for d in 2..=4 {
        v.push(jd_entry(d));
    }
    v.push(os_family_entry(2));
    v.push(concurrent_entry(5));
    v.push(pappus_entry());
    v
}

/// Looks up an entry by name, e.g. `ceva:3`, `hessian`, `b3`, `monomial:4`,
/// `jd:2`, `os:3`, `concurrent:6`, `pappus`.
pub fn by_name(name: &str) -> Option<CorpusEntry> {
    let (base, param) = match name.split_once(':') {
        Some((b, p)) => (b, Some(p.parse::<u32>().ok()?)),
        None => (name, None),
    };
    match (base, param) {
        ("ceva", Some(d)) if d >= 1 => Some(ceva_entry(d)),
        ("hessian", None) => Some(hessian_entry()),
        ("b3", None) => Some(monomial_entry(2)),
        ("monomial", Some(r)) if r >= 1 => Some(monomial_entry(r)),
        ("jd", Some(d)) if d >= 2 => Some(jd_entry(d)),
        ("os", Some(r)) if r >= 2 => Some(os_family_entry(r)),
        ("concurrent", Some(k)) if k >= 3 => Some(concurrent_entry(k)),
        ("pappus", None) => Some(pappus_entry()),
        _ => None,
    }
}
