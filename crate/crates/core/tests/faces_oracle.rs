mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use dearr::faces::{chambers, enumerate_faces, f_vector_of, f_vector_oracle, feasible};
use dearr::generate::{random_arrangement, HyperplaneParams};
use dearr::{Arrangement, Hyperplane, Rational, RationalArrangement, Sign, SignVector, SmallRational};
use proptest::prelude::*;

fn dfs_faces(a: &RationalArrangement) -> BTreeMap<SignVector, usize> {
    enumerate_faces(a).unwrap().into_iter().map(|f| (f.sign_vector, f.dim)).collect()
}

fn all_sign_vectors(m: usize) -> impl Iterator<Item = SignVector> {
    (0..3usize.pow(m as u32)).map(move |mut code| {
        SignVector(
            (0..m)
                .map(|_| {
                    let s = Sign::ALL[code % 3];
                    code /= 3;
                    s
                })
                .collect(),
        )
    })
}

#[test]
fn frozen_planar_face_counts() {
    // Values computed with `planar_face_oracle`, which never touches the
    // library's feasibility code.
    let cases = [
        (RationalArrangement::new(2, vec![]).unwrap(), vec![0, 0, 1]),
        (axes(), vec![1, 4, 4]),
        (concurrent3(), vec![1, 6, 6]),
        (generic3(), vec![3, 9, 7]),
        (arrangement(2, &[(&[1, 0], 0), (&[1, 0], 1)]), vec![0, 2, 3]),
    ];
    for (a, expected) in cases {
        let oracle = planar_face_oracle(&a);
        let mut hist = vec![0i64; 3];
        for &d in oracle.values() {
            hist[d] += 1;
        }
        assert_eq!(hist, expected);
        assert_eq!(dfs_faces(&a), oracle);
        assert_eq!(f_vector_oracle(&a).unwrap(), expected);
    }
}

#[test]
fn chamber_counts() {
    assert_eq!(chambers(&RationalArrangement::new(3, vec![]).unwrap()).unwrap().len(), 1);
    assert_eq!(chambers(&concurrent3()).unwrap().len(), 6);
    assert_eq!(chambers(&generic3()).unwrap().len(), 7);
}

#[test]
fn exhaustive_matches_pruned_search() {
    for seed in 0..40 {
        let dim = 1 + (seed as usize % 3);
        let count = 1 + (seed as usize % 6);
        let a: RationalArrangement =
            random_arrangement(HyperplaneParams { dim, count, bound: 3, seed }).unwrap();
        let exhaustive: BTreeSet<SignVector> =
            all_sign_vectors(a.len()).filter(|s| feasible(&a, s).unwrap()).collect();
        let pruned: BTreeSet<SignVector> = dfs_faces(&a).into_keys().collect();
        assert_eq!(exhaustive, pruned, "seed {seed}");
    }
}

#[test]
fn dfs_output_is_sorted_and_unique() {
    let a = generic_lines(5);
    let faces = enumerate_faces(&a).unwrap();
    assert!(faces.windows(2).all(|w| w[0].sign_vector < w[1].sign_vector));
}

#[test]
fn faces_partition_by_flat() {
    for seed in 0..20 {
        let a: RationalArrangement =
            random_arrangement(HyperplaneParams { dim: 3, count: 5, bound: 2, seed }).unwrap();
        let g = a.geometric_lattice();
        let faces = enumerate_faces(&a).unwrap();
        for x in g.lattice.ids() {
            let on_x = faces.iter().filter(|f| f.flat == x).count() as i64;
            let upper = g.lattice.upper_set(x).unwrap();
            assert_eq!(on_x, upper.chamber_count(), "seed {seed} flat {x}");
            assert_eq!(on_x, a.restrict(g.flat(x)).unwrap().chamber_count());
        }
    }
}

#[test]
fn narrow_scalar_gives_same_faces() {
    let rows: &[(&[i64], i64)] = &[(&[1, 2, 0], 1), (&[0, 1, -1], 0), (&[3, 0, 1], 2), (&[1, 1, 1], 0)];
    let wide = Arrangement::<Rational>::from_integers(3, rows).unwrap();
    let narrow = Arrangement::<SmallRational>::from_integers(3, rows).unwrap();
    let a: Vec<_> = enumerate_faces(&wide).unwrap();
    let b: Vec<_> = enumerate_faces(&narrow).unwrap();
    assert_eq!(a, b);
    assert_eq!(wide.build_lattice(), narrow.build_lattice());
}

#[test]
fn scaling_leaves_everything_unchanged() {
    let base = generic_lines(4);
    for factor in [q(3), Rational::new((-2).into(), 5.into())] {
        let scaled: Vec<_> = base
            .hyperplanes()
            .iter()
            .map(|h| {
                Hyperplane::new(
                    h.normal().iter().map(|v| v * &factor).collect(),
                    h.offset() * &factor,
                )
                .unwrap()
            })
            .collect();
        let scaled = RationalArrangement::new(2, scaled).unwrap();
        assert_eq!(scaled, base);
        assert_eq!(scaled.build_lattice().mobius_polynomial(), base.build_lattice().mobius_polynomial());
        assert_eq!(f_vector_oracle(&scaled).unwrap(), f_vector_oracle(&base).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dfs_agrees_with_point_sampling(a in planar_arrangement(6)) {
        prop_assert_eq!(dfs_faces(&a), planar_face_oracle(&a));
    }

    #[test]
    fn feasibility_is_permutation_invariant(a in planar_arrangement(5), rot in 0usize..5) {
        let m = a.len();
        prop_assume!(m > 0);
        let perm: Vec<usize> = (0..m).map(|i| (i + rot) % m).collect();
        let permuted = RationalArrangement::new(
            2,
            perm.iter().map(|&i| a.hyperplanes()[i].clone()).collect(),
        ).unwrap();
        for s in all_sign_vectors(m) {
            let t = SignVector(perm.iter().map(|&i| s.0[i]).collect());
            prop_assert_eq!(feasible(&a, &s).unwrap(), feasible(&permuted, &t).unwrap());
        }
    }

    #[test]
    fn euler_relation_holds(seed in 0u64..500, dim in 1usize..=3, count in 0usize..=5) {
        let a: RationalArrangement =
            random_arrangement(HyperplaneParams { dim, count, bound: 4, seed }).unwrap();
        let f = f_vector_of(&enumerate_faces(&a).unwrap(), dim);
        let chi: i64 = f.iter().enumerate().map(|(i, c)| if i % 2 == 0 { *c } else { -c }).sum();
        prop_assert_eq!(chi, if dim % 2 == 0 { 1 } else { -1 });
    }
}
