//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use multinet_core::arrangement::{
    build_lattice, IncidenceLattice, MultiArrangement, ProjLine, ProjPoint,
};
use multinet_core::corpus;
use multinet_core::criteria::{euler_sides, local_test, transversality};
use multinet_core::exactfield::{CycloElem, Rational};
use multinet_core::linalg::{rank, rational_kernel};
use multinet_core::multinet::{
    discover, exponents, refine_weak, verify, Multinet, WeakMultinet, DEFAULT_CAP,
};
use multinet_core::osalgebra::{isotropic_check, resonance_from_multinet, span_dim};
use multinet_core::pencil::{base_weights, ceva_verdict, collinear, expand_class};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn labels_of(arr: &MultiArrangement, mn: &Multinet) -> Vec<Vec<String>> {
    mn.classes()
        .iter()
        .map(|c| c.iter().map(|&l| arr.label(l).to_string()).collect())
        .collect()
}

fn sorted_weights(mn: &Multinet) -> Vec<u64> {
    let mut w = mn.weights().to_vec();
    w.sort_unstable();
    w
}

fn c1_ceva3() -> Outcome {
    let lat = build_lattice(&corpus::ceva(3));
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    for mn in &found {
        ensure(
            (mn.k(), mn.d(), mn.base().len()) == (3, 3, 9),
            "a discovered multinet is not a (3,3)-net on 9 points",
        )?;
        let r = euler_sides(mn, &lat);
        ensure(
            r.lhs == 12 && r.rhs == 12 && r.complete,
            format!("RH sides {} / {}", r.lhs, r.rhs),
        )?;
    }
    ensure(
        found.len() == 1,
        format!(
            "discover found {} global multinets, expected exactly one",
            found.len()
        ),
    )?;
    Ok("one (3,3)-net, |X| = 9, RH 12 = 12".into())
}

fn c2_b3() -> Outcome {
    let arr = corpus::b3();
    let lat = build_lattice(&arr);
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let mn = found
        .iter()
        .find(|m| (m.k(), m.d()) == (3, 4))
        .ok_or("no (3,4)-multinet found")?;
    for l in ["x", "y", "z"] {
        let i = arr.index_of(l).expect("coordinate line");
        ensure(mn.mult()[i] == 2, format!("m({l}) = {}", mn.mult()[i]))?;
    }
    let mut w: Vec<u64> = base_weights(mn, &lat)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(_, w)| w)
        .collect();
    w.sort_unstable();
    ensure(w == [1, 1, 1, 1, 2, 2, 2], format!("base weights {w:?}"))?;
    let r = euler_sides(mn, &lat);
    ensure(
        (r.lhs, r.rhs) == (10, 10),
        format!("RH sides {} / {}", r.lhs, r.rhs),
    )?;
    Ok("(3,4)-multinet, m = 2 on x, y, z, weights 1,1,1,1,2,2,2, RH 10 = 10".into())
}

fn hessian_weak(arr: &MultiArrangement, lat: &IncidenceLattice) -> WeakMultinet {
    let idx = |l: &str| arr.index_of(l).expect("hessian label");
    let c0c1: Vec<usize> = ["x", "y", "z", "h00", "h01", "h02"]
        .iter()
        .map(|l| idx(l))
        .collect();
    let c2: Vec<usize> = ["h10", "h11", "h12"].iter().map(|l| idx(l)).collect();
    let c3: Vec<usize> = ["h20", "h21", "h22"].iter().map(|l| idx(l)).collect();
    let mut mult = vec![1u32; arr.len()];
    for &l in c2.iter().chain(&c3) {
        mult[l] = 2;
    }
    WeakMultinet::from_partition(lat, vec![c0c1, c2, c3], mult)
}

fn c3_hessian() -> Outcome {
    let arr = corpus::hessian();
    let lat = build_lattice(&arr);
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let net = found
        .iter()
        .find(|m| (m.k(), m.d()) == (4, 3) && m.is_net())
        .ok_or("no (4,3)-net found")?;
    let r = euler_sides(net, &lat);
    ensure(
        (r.lhs, r.rhs) == (12, 12),
        format!("RH sides {} / {}", r.lhs, r.rhs),
    )?;

    let weak = hessian_weak(&arr, &lat);
    let rep = verify(&weak, &lat);
    ensure(rep.weak_ok(), "the (3,6) partition is not a weak multinet")?;
    ensure(
        rep.d == Some(6) && weak.base.len() == 9,
        "weak multinet is not (3,6) on 9 points",
    )?;
    let fibers = weak
        .classes
        .iter()
        .map(|c| expand_class(&arr, c, &weak.mult))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let col = collinear(&fibers).map_err(|e| e.to_string())?;
    ensure(!col.collinear, "C0C1, C2^2, C3^2 are collinear")?;
    let refined = refine_weak(&weak, &lat).map_err(|e| e.to_string())?;
    ensure(refined == *net, "refinement differs from the (4,3)-net")?;
    Ok("(4,3)-net, RH 12 = 12; weak (3,6) fibers not collinear; refines to the (4,3)-net".into())
}

fn c4_monomial3() -> Outcome {
    let lat = build_lattice(&corpus::monomial(3));
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let mn = found
        .iter()
        .find(|m| m.k() == 3 && m.d() == 6)
        .ok_or("no (3,6)-multinet found")?;
    let r = euler_sides(mn, &lat);
    ensure(
        (r.lhs, r.rhs) == (15, 15),
        format!("RH sides {} / {}", r.lhs, r.rhs),
    )?;
    Ok("RH 15 = 15 = 3^2 + 6".into())
}

fn c5_pappus() -> Outcome {
    let lat = build_lattice(&corpus::pappus_special());
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let mn = found
        .iter()
        .find(|m| (m.k(), m.d()) == (3, 3))
        .ok_or("no (3,3)-net found")?;
    let r = euler_sides(mn, &lat);
    ensure(r.deficit == 2, format!("deficit {}", r.deficit))?;
    Ok(format!("(3,3)-net, RH {} > {}, deficit 2", r.lhs, r.rhs))
}

fn c6_os_family() -> Outcome {
    let arr = corpus::os_family(2);
    let lat = build_lattice(&arr);
    let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let z = arr.index_of("z").expect("z");
    let mn = found
        .iter()
        .find(|m| (m.k(), m.d()) == (3, 4) && m.mult()[z] == 2)
        .ok_or("no (3,4)-multinet with m(z) = 2")?;
    let r = euler_sides(mn, &lat);
    ensure(r.deficit > 0, format!("deficit {}", r.deficit))?;
    let fails: Vec<String> = local_test(mn, &lat)
        .failures()
        .into_iter()
        .map(|p| lat.describe(p, &arr))
        .collect();
    ensure(
        fails == ["[1 : 0 : 0]"],
        format!(
            "local test fails at {}, expected exactly [1 : 0 : 0]",
            fails.join(" and ")
        ),
    )?;
    Ok(format!(
        "(3,4)-multinet, local test fails only at [1 : 0 : 0], deficit {}",
        r.deficit
    ))
}

fn c7_transversality() -> Outcome {
    let z = ProjLine::from_ints("z", 0, 0, 1).expect("line");
    for d in 2..=4u32 {
        let arr = corpus::ceva(d);
        let lat = build_lattice(&arr);
        let fermat: Vec<Vec<String>> = ["a", "b", "c"]
            .iter()
            .map(|p| (0..d).map(|j| format!("{p}{j}")).collect())
            .collect();
        let found = discover(&lat, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let mn = found
            .iter()
            .find(|m| labels_of(&arr, m) == fermat)
            .ok_or("Fermat net not found")?;
        let t = transversality(mn, &lat, &arr, &z).map_err(|e| e.to_string())?;
        ensure(
            t.transverse,
            format!("z against ceva({d}) is not transverse"),
        )?;
    }
    let arr = corpus::b3();
    let lat = build_lattice(&arr);
    let mn = discover(&lat, DEFAULT_CAP)
        .map_err(|e| e.to_string())?
        .remove(0);
    let diag = ProjLine::from_ints("w", 1, 1, 1).expect("line");
    let t = transversality(&mn, &lat, &arr, &diag).map_err(|e| e.to_string())?;
    ensure(t.transverse && t.points.len() == 6, "x+y+z against B3")?;
    let generic = ProjLine::from_ints("g", 1, 3, 7).expect("line");
    let t = transversality(&mn, &lat, &arr, &generic).map_err(|e| e.to_string())?;
    ensure(
        !t.transverse && t.points.len() == 9,
        "generic line against B3",
    )?;
    Ok("z transverse for d = 2, 3, 4; x+y+z transverse to B3; x+3y+7z is not".into())
}

fn cross_oracle(
    arr: &MultiArrangement,
    lat: &IncidenceLattice,
    mn: &Multinet,
) -> Result<(), String> {
    let v = resonance_from_multinet(mn, lat);
    ensure(
        isotropic_check(&v, lat),
        "wedge of resonance vectors is nonzero",
    )?;
    ensure(
        span_dim(&v) == mn.k() - 1,
        "resonance vectors are dependent",
    )?;
    let rep = verify(mn.as_weak(), lat);
    ensure(rep.lemma_ok(), "numerical identities fail")?;
    if !arr.is_abstract() {
        let p = ceva_verdict(mn, lat, arr).map_err(|e| e.to_string())?;
        ensure(p.collinear && p.base_vanishing, "pencil check failed")?;
        for (f, s) in p.fibers.iter().zip(&p.scalars) {
            let (a, b) = s.as_ref().ok_or("missing scalars")?;
            let comb = p.fibers[0].scale(a).add(&p.fibers[1].scale(b));
            ensure(comb == *f, "scalar relation does not reproduce a fiber")?;
        }
    }
    ensure(euler_sides(mn, lat).deficit >= 0, "negative RH deficit")?;
    ensure(exponents(mn).pairwise_coprime, "exponents share a factor")?;
    ensure(
        !(mn.d() > 1 && mn.mult().iter().all(|&m| m == 1) && mn.k() >= 6),
        "net with k >= 6 and d > 1",
    )?;
    Ok(())
}

fn c8_cross_oracle() -> Outcome {
    let mut count = 0;
    for e in corpus::standard() {
        let lat = build_lattice(&e.arrangement);
        for mn in discover(&lat, DEFAULT_CAP).map_err(|x| x.to_string())? {
            cross_oracle(&e.arrangement, &lat, &mn).map_err(|x| format!("{}: {x}", e.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} discovered multinets pass (a)-(f)"))
}

fn c9_refinement() -> Outcome {
    let arr = corpus::concurrent(5);
    let lat = build_lattice(&arr);
    let mut mult = vec![1; 5];
    mult[4] = 2;
    let weak = WeakMultinet::from_partition(&lat, vec![vec![0, 1], vec![2, 3], vec![4]], mult);
    let rep = verify(&weak, &lat);
    ensure(
        rep.weak_ok() && rep.d == Some(2),
        "(3,2) structure is not a weak multinet",
    )?;
    let mn = refine_weak(&weak, &lat).map_err(|e| e.to_string())?;
    ensure(
        (mn.k(), mn.d()) == (5, 1),
        format!("refined to ({}, {})", mn.k(), mn.d()),
    )?;
    ensure(
        mn.classes().iter().all(|c| c.len() == 1),
        "classes are not singletons",
    )?;
    ensure(
        mn.mult().iter().all(|&m| m == 1),
        "multiplicities are not all 1",
    )?;
    ensure(sorted_weights(&mn) == [1], "weight is not 1")?;
    Ok("weak (3,2) structure refines to the (5,1)-net".into())
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=5).into(),
    )
}

fn rand_elem(rng: &mut ChaCha8Rng, n: u32) -> CycloElem {
    let len = rng.gen_range(1..=n as usize + 1);
    CycloElem::from_poly(n, (0..len).map(|_| rand_rational(rng)).collect())
}

fn c10_exact_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut instances = 0;

    for _ in 0..400 {
        let n = rng.gen_range(1..=6u32);
        let (a, b, c) = (
            rand_elem(&mut rng, n),
            rand_elem(&mut rng, n),
            rand_elem(&mut rng, n),
        );
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "associativity")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
        if !a.is_zero() {
            ensure(
                (&a * &a.inv().map_err(|e| e.to_string())?).is_one(),
                "inverse",
            )?;
        }
        instances += 1;
    }

    for _ in 0..400 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=6);
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
                    .collect()
            })
            .collect();
        if rows > 1 && rng.gen_bool(0.5) {
            // force a dependent row
            let s = rand_rational(&mut rng);
            m[rows - 1] = m[0].iter().map(|x| x * &s).collect();
        }
        let ker = rational_kernel(&m, cols);
        ensure(ker.len() == cols - rank(&m, cols), "kernel dimension")?;
        for v in &ker {
            for row in &m {
                let dot: Rational = row
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * Rational::from_integer(b.clone()))
                    .fold(Rational::zero(), |acc, x| acc + x);
                ensure(dot.is_zero(), "M v != 0")?;
            }
            let first = v
                .iter()
                .find(|x| !x.is_zero())
                .ok_or("zero kernel vector")?;
            ensure(first > &BigInt::zero(), "kernel vector sign")?;
        }
        instances += 1;
    }

    let mut lattices = 0;
    while lattices < 300 {
        let n = rng.gen_range(3..=8usize);
        let mut lines: Vec<ProjLine> = Vec::new();
        while lines.len() < n {
            let (a, b, c) = (
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
            );
            let Ok(l) = ProjLine::from_ints(format!("l{}", lines.len()), a, b, c) else {
                continue;
            };
            if lines.iter().any(|o| o.same_line(&l)) {
                continue;
            }
            lines.push(l);
        }
        let arr = MultiArrangement::simple(1, lines).map_err(|e| e.to_string())?;
        let lat = build_lattice(&arr);
        let pairs: usize = lat
            .points()
            .iter()
            .map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2)
            .sum();
        ensure(pairs == n * (n - 1) / 2, "pair count")?;
        let ls = arr.lines().map_err(|e| e.to_string())?;
        for p in lat.points() {
            let q: &ProjPoint = p.coords.as_ref().ok_or("missing coordinates")?;
            for (i, l) in ls.iter().enumerate() {
                ensure(l.contains(q) == p.lines.contains(&i), "incidence")?;
            }
        }
        lattices += 1;
        instances += 1;
    }
    Ok(format!("{instances} random instances checked exactly"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Ceva(3) global multinet and RH equality", c1_ceva3),
        ("B3 (3,4)-multinet, weights, RH equality", c2_b3),
        (
            "Hessian net, weak (3,6) structure and refinement",
            c3_hessian,
        ),
        ("monomial(3) RH equality", c4_monomial3),
        ("Pappus specialization deficit", c5_pappus),
        ("os_family(2) multinet and local test", c6_os_family),
        ("transversality", c7_transversality),
        ("cross-oracle properties", c8_cross_oracle),
        ("refinement of concurrent(5)", c9_refinement),
        ("exact arithmetic properties", c10_exact_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
