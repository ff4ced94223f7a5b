use multinet_core::arrangement::{build_lattice, meet, MultiArrangement, ProjLine, ProjPoint};
use multinet_core::cartan::{
    cartan_matrix, decompose, incidence_matrix, vinberg_classify, VinbergType,
};
use multinet_core::corpus;
use multinet_core::exactfield::{CycloElem, Rational};
use multinet_core::format::{parse_arrangement, write_arrangement};
use multinet_core::linalg::{kernel, rank, to_rational};
use multinet_core::multinet::{discover, DEFAULT_CAP};
use multinet_core::osalgebra::{class_vectors, A1Vector, A2Basis};
use multinet_core::pencil::CurveVec;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn elem(order: u32) -> impl Strategy<Value = CycloElem> {
    prop::collection::vec(-4i64..=4, 1..order as usize + 2).prop_map(move |v| {
        CycloElem::from_poly(
            order,
            v.into_iter()
                .map(|x| Rational::from_integer(x.into()))
                .collect(),
        )
    })
}

fn order_and_elems(count: usize) -> impl Strategy<Value = (u32, Vec<CycloElem>)> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 12])
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(elem(n), count)))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn field_axioms((_n, v) in order_and_elems(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(&(a - b) + b, a.clone());
        if !a.is_zero() {
            prop_assert!((a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn embedding_is_a_ring_map((_n, v) in order_and_elems(2)) {
        let (a, b) = (&v[0], &v[1]);
        let (ea, eb) = (a.embed_complex(53), b.embed_complex(53));
        prop_assert!(close((a * b).embed_complex(53), ea * eb));
        prop_assert!(close((a + b).embed_complex(53), ea + eb));
        prop_assert!(close(a.conj().embed_complex(53), ea.conj()));
    }

    #[test]
    fn promotion_round_trip((n, v) in order_and_elems(1), m in 1u32..4) {
        let up = v[0].promote(n * m);
        prop_assert_eq!(up.try_demote(n).unwrap(), v[0].clone());
        prop_assert_eq!(up.pow(2).try_demote(n).unwrap(), v[0].pow(2));
    }

    #[test]
    fn meet_is_symmetric_and_incident(a in prop::array::uniform3(-6i64..=6), b in prop::array::uniform3(-6i64..=6)) {
        let (Ok(l1), Ok(l2)) = (ProjLine::from_ints("a", a[0], a[1], a[2]), ProjLine::from_ints("b", b[0], b[1], b[2])) else {
            return Ok(());
        };
        prop_assume!(!l1.same_line(&l2));
        let p = meet(&l1, &l2).unwrap();
        prop_assert_eq!(&p, &meet(&l2, &l1).unwrap());
        prop_assert!(l1.contains(&p) && l2.contains(&p));
    }

    #[test]
    fn lattice_counts_every_pair_once(raw in prop::collection::vec(prop::array::uniform3(-3i64..=3), 3..9)) {
        let mut lines: Vec<ProjLine> = Vec::new();
        for (i, c) in raw.iter().enumerate() {
            if let Ok(l) = ProjLine::from_ints(format!("l{i}"), c[0], c[1], c[2]) {
                if !lines.iter().any(|m| m.same_line(&l)) {
                    lines.push(l);
                }
            }
        }
        prop_assume!(lines.len() >= 2);
        let n = lines.len();
        let arr = MultiArrangement::simple(1, lines).unwrap();
        let lat = build_lattice(&arr);
        let pairs: usize = lat.points().iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
        prop_assert_eq!(pairs, n * (n - 1) / 2);
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let p = lat.point_of(a, b);
                    prop_assert_eq!(p, lat.point_of(b, a));
                    prop_assert!(lat.is_on(p, a) && lat.is_on(p, b));
                }
            }
        }
    }

    #[test]
    fn wedge_is_bilinear_and_alternating(
        a in prop::collection::vec(-5i64..=5, 6),
        b in prop::collection::vec(-5i64..=5, 6),
        c in prop::collection::vec(-5i64..=5, 6),
        s in -4i64..=4,
    ) {
        let lat = build_lattice(&corpus::ceva(2));
        let basis = A2Basis::new(&lat);
        let (a, b, c) = (A1Vector::from_ints(&a), A1Vector::from_ints(&b), A1Vector::from_ints(&c));
        let s = Rational::from_integer(s.into());
        let ab = basis.wedge(&lat, &a, &b);
        prop_assert!(basis.wedge(&lat, &a, &a).is_zero());
        prop_assert!((&ab + &basis.wedge(&lat, &b, &a)).is_zero());
        prop_assert_eq!(
            basis.wedge(&lat, &(&a.scale(&s) + &c), &b),
            &ab.scale(&s) + &basis.wedge(&lat, &c, &b)
        );
    }

    #[test]
    fn curve_product_evaluates_pointwise(
        f in prop::collection::vec(-3i64..=3, 6),
        g in prop::collection::vec(-3i64..=3, 3),
        p in prop::array::uniform3(-4i64..=4),
    ) {
        prop_assume!(p != [0, 0, 0]);
        let f = CurveVec::from_coeffs(2, f.into_iter().map(CycloElem::from_int).collect());
        let g = CurveVec::from_coeffs(1, g.into_iter().map(CycloElem::from_int).collect());
        let pt = ProjPoint::from_ints(p[0], p[1], p[2]).unwrap();
        prop_assert_eq!(f.mul(&g).eval(&pt), &f.eval(&pt) * &g.eval(&pt));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn classification_is_permutation_stable(perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        // the cycle of length six is affine with kernel (1, ..., 1)
        let mut q = vec![vec![0i64; 6]; 6];
        for i in 0..6 {
            q[i][i] = 2;
            q[i][(i + 1) % 6] = -1;
            q[(i + 1) % 6][i] = -1;
        }
        let pq: Vec<Vec<i64>> = perm.iter().map(|&i| perm.iter().map(|&j| q[i][j]).collect()).collect();
        prop_assert_eq!(vinberg_classify(&pq).unwrap(), VinbergType::Affine(vec![BigInt::from(1); 6]));
        // dropping any vertex of the cycle leaves a path of length five
        let path: Vec<Vec<i64>> = pq[..5].iter().map(|r| r[..5].to_vec()).collect();
        prop_assert_eq!(vinberg_classify(&path).unwrap(), VinbergType::Finite);
    }
}

/// Stacks a row of ones under `m`.
fn with_ones(m: &[Vec<i64>], n: usize) -> Vec<Vec<Rational>> {
    let mut r = to_rational(m);
    r.push(vec![Rational::from_integer(1.into()); n]);
    r
}

fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>], n: usize) -> bool {
    let both: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    rank(a, n) == rank(b, n) && rank(&both, n) == rank(a, n)
}

#[test]
fn cartan_kernel_matches_incidence_kernel_on_sum_zero_vectors() {
    for e in corpus::standard() {
        let lat = build_lattice(&e.arrangement);
        let mp = lat.multiple_points();
        // every prefix of the multiple points, which covers many shapes
        for len in 1..=mp.len().min(12) {
            let j = incidence_matrix(&lat, &mp[..len]).unwrap();
            let q = cartan_matrix(&j);
            let n = j.cols();
            let kq = kernel(&with_ones(&q, n), n);
            let kj = kernel(&with_ones(&j.as_i64(), n), n);
            assert!(same_span(&kq, &kj, n), "{} prefix {len}", e.name);
        }
    }
}

#[test]
fn class_differences_lie_in_incidence_kernel() {
    for e in corpus::standard() {
        let lat = build_lattice(&e.arrangement);
        for mn in discover(&lat, DEFAULT_CAP).unwrap() {
            let dec = decompose(&lat, mn.base()).unwrap();
            assert!(dec.all_affine(), "{}", e.name);
            let u = class_vectors(&mn);
            let jm = to_rational(&dec.j.as_i64());
            for i in 1..u.len() {
                let diff = &u[i] - &u[0];
                let restricted: Vec<Rational> =
                    dec.j.lines.iter().map(|&l| diff.0[l].clone()).collect();
                for row in &jm {
                    let s: Rational = row.iter().zip(&restricted).map(|(a, b)| a * b).sum();
                    assert!(s.is_zero(), "{}", e.name);
                }
            }
        }
    }
}

#[test]
fn random_pairs_on_triangle_are_not_isotropic() {
    use rand::{Rng, SeedableRng};
    let arr = MultiArrangement::simple(
        1,
        vec![
            ProjLine::from_ints("x", 1, 0, 0).unwrap(),
            ProjLine::from_ints("y", 0, 1, 0).unwrap(),
            ProjLine::from_ints("z", 0, 0, 1).unwrap(),
        ],
    )
    .unwrap();
    let lat = build_lattice(&arr);
    let basis = A2Basis::new(&lat);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let a: Vec<i64> = (0..3).map(|_| rng.gen_range(-9..=9)).collect();
        let b: Vec<i64> = (0..3).map(|_| rng.gen_range(-9..=9)).collect();
        let (va, vb) = (A1Vector::from_ints(&a), A1Vector::from_ints(&b));
        let parallel = (0..3).all(|i| (0..3).all(|j| a[i] * b[j] == a[j] * b[i]));
        assert_eq!(
            basis.wedge(&lat, &va, &vb).is_zero(),
            parallel,
            "{a:?} {b:?}"
        );
    }
}

#[test]
fn corpus_files_round_trip() {
    for e in corpus::standard() {
        let text = write_arrangement(&e.arrangement, Some(&e.name));
        let back = parse_arrangement(&text).unwrap();
        assert_eq!(back, e.arrangement, "{}", e.name);
    }
}
